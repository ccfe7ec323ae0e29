"""Exact Bernoulli numbers and polynomials, periodic extensions, and the
sawtooth closed form.

Coefficients come from the generating function u e^{tu}/(e^u - 1):
B_n = B_n(0), and B_n(t) = sum_k C(n,k) B_k t^{n-k}.  Everything up to
the table cap n = 128 is held as exact reduced fractions; floating point
enters only when a polynomial is evaluated.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CapExceeded, DomainError

__all__ = [
    "MAX_N",
    "BernoulliTable",
    "bernoulli_numbers",
    "bernoulli_table",
    "bernoulli_poly",
    "periodic_bernoulli",
    "sawtooth_sum",
    "fourier_b2_partial",
]

MAX_N = 128


@dataclass(frozen=True)
class BernoulliTable:
    """Exact Bernoulli numbers and polynomial coefficient rows.

    polys[n][k] is the coefficient of t^(n-k), i.e. C(n,k) * B_k, so each
    row is ready for Horner evaluation in descending powers.
    """

    numbers: tuple
    polys: tuple

    def __post_init__(self):
        for n, row in enumerate(self.polys):
            if row[-1] != self.numbers[n]:
                raise ValueError("table rows must satisfy B_n(0) = B_n")


_NUMBERS: list = [Fraction(1)]
_POLYS: list = [(Fraction(1),)]
_TABLE_LOCK = threading.Lock()  # table growth must not interleave


def _extend(max_n: int) -> None:
    if len(_NUMBERS) > max_n:
        return
    with _TABLE_LOCK:
        while len(_NUMBERS) <= max_n:
            m = len(_NUMBERS)
            # sum_{k=0}^{m} C(m+1,k) B_k = 0  for m >= 1
            acc = Fraction(0)
            for k in range(m):
                acc += math.comb(m + 1, k) * _NUMBERS[k]
            _NUMBERS.append(-acc / (m + 1))
            _POLYS.append(tuple(math.comb(m, k) * _NUMBERS[k] for k in range(m + 1)))


def bernoulli_numbers(max_n: int):
    """Exact B_0 .. B_max_n as reduced fractions (B_1 = -1/2)."""
    if max_n < 0:
        raise DomainError("max_n must be non-negative")
    if max_n > MAX_N:
        raise CapExceeded(f"Bernoulli table capped at n = {MAX_N}")
    _extend(max_n)
    return tuple(_NUMBERS[: max_n + 1])


def bernoulli_table(max_n: int) -> BernoulliTable:
    """Numbers and polynomial coefficient rows through degree max_n."""
    numbers = bernoulli_numbers(max_n)
    return BernoulliTable(numbers=numbers, polys=tuple(_POLYS[: max_n + 1]))


def _check_n(n: int) -> None:
    if n < 0:
        raise DomainError("polynomial degree must be non-negative")
    if n > MAX_N:
        raise CapExceeded(f"Bernoulli table capped at n = {MAX_N}")


def bernoulli_poly(n: int, t) -> complex:
    """B_n(t) by Horner on the exact coefficient row.

    Real arguments are lifted to exact binary fractions, evaluated in
    rational arithmetic, and rounded once at the end; complex arguments
    fall back to ordinary floating Horner.
    """
    _check_n(n)
    _extend(n)
    row = _POLYS[n]
    t = complex(t)
    if t.imag == 0.0:
        tq = Fraction(t.real)
        acc = Fraction(0)
        for c in row:
            acc = acc * tq + c
        return complex(float(acc))
    acc_c = 0j
    for c in row:
        acc_c = acc_c * t + complex(float(c))
    return acc_c


def _float_poly_row(n: int) -> Sequence[float]:
    _extend(n)
    return tuple(float(c) for c in _POLYS[n])


def periodic_bernoulli(n: int, t: float) -> float:
    """B_n({t}) with {t} = t - floor(t), the 1-periodic extension."""
    _check_n(n)
    if not math.isfinite(t):
        raise DomainError("t must be finite")
    frac = t - math.floor(t)
    return bernoulli_poly(n, frac).real


def sawtooth_sum(theta: float) -> float:
    """Closed form of sum_{n>=1} sin(2 pi n theta)/n on [0,1).

    Equals pi*(1/2 - theta) on (0,1) and 0 at theta = 0; the series
    itself is only conditionally convergent, so summation experiments
    belong in tests, not here.
    """
    if not (0.0 <= theta < 1.0):
        raise DomainError("theta must lie in [0, 1)")
    if theta == 0.0:
        return 0.0
    return math.pi * (0.5 - theta)


def fourier_b2_partial(t: float, n_terms: int) -> float:
    """Partial cosine expansion of the periodic quadratic:

        (1/pi^2) sum_{n=1}^{N} cos(2 pi n t) / n^2  ->  B_2({t}).

    The frequency sum starts at n = 1; N = 0 is the empty sum.
    Summed smallest-terms-first with compensation.
    """
    if n_terms < 0:
        raise DomainError("n_terms must be non-negative")
    total = 0.0
    comp = 0.0
    for n in range(n_terms, 0, -1):
        term = math.cos(2.0 * math.pi * n * t) / (n * n)
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
    return total / (math.pi * math.pi)
