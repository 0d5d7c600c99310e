"""Exception types shared by the model modules and the integrators."""


class ModelDomainError(ValueError):
    """A model-specific precondition was violated (bad parameter region,
    evaluation outside the validity domain of a closed form, ...)."""


class BranchError(ModelDomainError):
    """Closed-form trajectory evaluated outside its principal branch."""


class TurningPointError(ModelDomainError):
    """Initial data placed exactly on (or beyond) the turning amplitude,
    where the phase constant is undefined."""


class ProfileDomainError(ModelDomainError):
    """Radial profile argument left [-1, 1]; the parameter set is outside
    the validity region of the closed-form solution."""


class DegenerateProfileError(ModelDomainError):
    """Profile ODE right-hand side degenerates (angle at 0 or pi)."""


class RealityViolationError(ModelDomainError):
    """Field combinations that must be real carry a non-negligible
    imaginary residue; the decomposition is corrupted."""


class ExponentOverflowError(ModelDomainError):
    """An exponent would overflow double precision; the caller should
    reduce the evaluation domain or rescale parameters."""


class SingularRadiusError(ModelDomainError):
    """Radial operation requested at (or below) the 1/r singularity."""


class IntegrationBlowupError(RuntimeError):
    """Fixed-step integration produced a non-finite state."""

    def __init__(self, message: str, last_t: float):
        super().__init__(message)
        self.last_t = last_t


class StepUnderflowError(RuntimeError):
    """Adaptive integration drove the step below the resolvable size,
    typically due to stiffness or a singular right-hand side."""

    def __init__(self, message: str, t: float):
        super().__init__(message)
        self.t = t
