"""Crystal heat-capacity models: classical (Einstein high-T), Debye low-T limit,
full Debye integral, and an automatic regime selector."""

from __future__ import annotations

import enum
import math

from .errors import DomainError
from .quadrature import QuadratureSpec, integrate
from .quantities import CONST

# Debye -> Einstein crossover of the gravitational decoherence times sits at
# T/T_D = (sqrt(5)/(2 pi^2))^(2/3) ~ 0.234; 0.2 is the conventional rounding.
AUTO_THRESHOLD = 0.2

DEBYE_LOW_T_PREFACTOR = 4.0 * math.pi**4 / 5.0


class HeatCapacityModel(enum.Enum):
    EINSTEIN_CLASSICAL = "einstein"
    DEBYE_LOW_T = "debye"
    DEBYE_FULL = "debye-full"
    AUTO = "auto"


_CV_SPEC = QuadratureSpec(rel_tol=1e-10)


def _debye_integrand(x: float) -> float:
    # x^4 e^x / (e^x - 1)^2 written overflow-safe as x^4 e^-x / (1 - e^-x)^2
    if x == 0.0:
        return 0.0
    e = math.exp(-x)
    return x**4 * e / (1.0 - e) ** 2


def resolve_model(model: HeatCapacityModel, T: float, T_D: float) -> HeatCapacityModel:
    """Collapse AUTO onto the concrete regime for the given temperatures."""
    if model is not HeatCapacityModel.AUTO:
        return model
    if T / T_D < AUTO_THRESHOLD:
        return HeatCapacityModel.DEBYE_LOW_T
    return HeatCapacityModel.EINSTEIN_CLASSICAL


def heat_capacity(model: HeatCapacityModel, N: float, T: float, T_D: float) -> float:
    """Heat capacity C_V in J/K for N oscillator degrees of freedom."""
    if N <= 0:
        raise DomainError("N must be > 0")
    if T <= 0:
        raise DomainError("heat_capacity requires T > 0")
    if T_D <= 0:
        raise DomainError("T_D must be > 0")
    model = resolve_model(model, T, T_D)
    if model is HeatCapacityModel.EINSTEIN_CLASSICAL:
        return N * CONST.k_B
    if model is HeatCapacityModel.DEBYE_LOW_T:
        return DEBYE_LOW_T_PREFACTOR * N * CONST.k_B * (T / T_D) ** 3
    # Full Debye integral.  Beyond x ~ 80 the integrand is < 1e-28 of its peak,
    # so the upper limit is capped there to keep the quadrature cheap.
    x_d = T_D / T
    upper = min(x_d, 80.0)
    return 3.0 * N * CONST.k_B * (T / T_D) ** 3 * integrate(_debye_integrand, 0.0, upper, _CV_SPEC)
