"""Exception taxonomy shared by all modules.

Every failure mode surfaces as a typed exception; no operation returns
NaN or infinity to signal trouble.
"""


class HurwitzLabError(Exception):
    """Base class for all library errors."""


class DomainError(HurwitzLabError):
    """Argument outside the operation's domain of validity."""


class PoleError(DomainError):
    """Evaluation requested at (or within guard distance of) a pole."""


class StripError(DomainError):
    """Analytic-continuation formula used outside its validity strip."""


class CapExceeded(DomainError):
    """Requested order/index exceeds a hard table cap."""


class ConvergenceError(HurwitzLabError):
    """An iterative scheme failed to converge within its iteration cap."""


class NoConvergence(ConvergenceError):
    """Series truncation cap reached before the stopping rule fired.

    Carries the partial sum and the last computed term so callers can
    judge how bad the truncation is.
    """

    def __init__(self, message, partial_sum=None, last_term=None):
        super().__init__(message)
        self.partial_sum = partial_sum
        self.last_term = last_term


class ToleranceNotMet(HurwitzLabError):
    """Quadrature exhausted its refinement budget above tolerance.

    Carries the best estimate and the achieved error bound.
    """

    def __init__(self, message, estimate=None, achieved=None):
        super().__init__(message)
        self.estimate = estimate
        self.achieved = achieved


class DivergenceSuspected(HurwitzLabError):
    """Semi-infinite integrand does not appear to decay."""


class UnknownCheckId(HurwitzLabError):
    """Verification suite asked to run a check id it does not know."""
