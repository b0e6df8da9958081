"""Gravitational time-dilation decoherence times on Earth, for the classical
(Einstein) and low-temperature Debye heat-capacity models."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .heat_capacity import HeatCapacityModel, heat_capacity, resolve_model
from .quantities import CONST

INF = math.inf


@dataclass(frozen=True)
class GravitationalResult:
    tau_g: float
    model_used: HeatCapacityModel
    cv_used: float


def tau_g_general(C_V: float, T: float, dx: float) -> float:
    """tau_G = sqrt(2) hbar c^2 / (sqrt(k_B C_V) g T dx).

    Zero separation or zero temperature means no decoherence: returns inf.
    """
    if C_V <= 0:
        raise DomainError("C_V must be > 0")
    if T < 0 or dx < 0:
        raise DomainError("T and dx must be >= 0")
    if T == 0.0 or dx == 0.0:
        return INF
    return (
        math.sqrt(2.0) * CONST.hbar * CONST.c**2
        / (math.sqrt(CONST.k_B * C_V) * CONST.g_earth * T * dx)
    )


def tau_g_einstein(N: float, T: float, dx: float) -> float:
    """Classical heat capacity C_V = N k_B."""
    if N <= 0:
        raise DomainError("N must be > 0")
    if T < 0 or dx < 0:
        raise DomainError("T and dx must be >= 0")
    if T == 0.0 or dx == 0.0:
        return INF
    return (
        math.sqrt(2.0) * CONST.hbar * CONST.c**2
        / (math.sqrt(N) * CONST.g_earth * CONST.k_B * T * dx)
    )


def tau_g_debye(N: float, T_D: float, T: float, dx: float) -> float:
    """Low-temperature Debye heat capacity, C_V = (4 pi^4 / 5) N k_B (T/T_D)^3."""
    if N <= 0 or T_D <= 0:
        raise DomainError("N and T_D must be > 0")
    if T < 0 or dx < 0:
        raise DomainError("T and dx must be >= 0")
    if T == 0.0 or dx == 0.0:
        return INF
    return (
        (1.0 / math.pi**2) * math.sqrt(5.0 / (2.0 * N))
        * CONST.hbar * CONST.c**2 * T_D**1.5
        / (CONST.g_earth * CONST.k_B * T**2.5 * dx)
    )


def model_crossover() -> float:
    """T/T_D at which the Debye and Einstein decoherence times coincide."""
    return (math.sqrt(5.0) / (2.0 * math.pi**2)) ** (2.0 / 3.0)


def debye_einstein_ratio(T_over_TD: float) -> float:
    """tau_G^Debye / tau_G^Einstein; independent of N and dx."""
    if T_over_TD <= 0:
        raise DomainError("T/T_D must be > 0")
    return math.sqrt(5.0) / (2.0 * math.pi**2) * T_over_TD ** -1.5


def gravitational_time(
    model: HeatCapacityModel, N: float, T_D: float, T: float, dx: float
) -> GravitationalResult:
    """tau_G under the selected heat-capacity model, with the C_V actually used."""
    if T == 0.0 or dx == 0.0:
        return GravitationalResult(INF, model, 0.0)
    resolved = resolve_model(model, T, T_D)
    cv = heat_capacity(resolved, N, T, T_D)
    return GravitationalResult(tau_g_general(cv, T, dx), resolved, cv)
