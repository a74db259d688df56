"""Exception types shared across the engine."""


class OutOfBaseError(ValueError):
    """Abscissa lies outside the triangle base."""


class DegenerateDirectionError(ValueError):
    """Ray angle outside (0, pi), so the ray does not enter the triangle."""


class NonFiniteSampleError(ValueError):
    """An integrand returned inf or nan."""
