"""Exception taxonomy shared by all modules."""


class GravdecoError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GravdecoError, ValueError):
    """An argument lies outside the physical/mathematical domain of an operation."""


class SingularityError(GravdecoError, ValueError):
    """Evaluation requested exactly at a pole (e.g. permittivity = -2)."""


class ResolutionError(GravdecoError, KeyError):
    """A named material, gas, or preset could not be resolved."""

    def __init__(self, kind: str, name: str):
        super().__init__(name)
        self.kind = kind
        self.name = name

    def __str__(self) -> str:
        return f"unknown {self.kind}: {self.name!r}"


class ConvergenceError(GravdecoError, RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance.

    Carries the best available estimate and its error bound.
    """

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
