"""Localization parameters and event rates for the four environmental channels:
thermal-photon scattering, emission (two models), absorption, and residual-gas
collisions."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .matter import GasMixture
from .oracle import lambda_em2_numeric
from .quantities import CONST, ComplexPermittivity, clausius_mossotti, erfcx, zeta

# The Model-2 closed form is trusted only if it reproduces its defining
# integral this well; otherwise the integral value is returned.
MODEL2_ARBITRATION_RTOL = 1e-6


class EmissionModel(enum.Enum):
    MODEL_1 = 1  # homogeneous sphere, no internal structure
    MODEL_2 = 2  # finite heat capacity shapes the emitted photon statistics


@dataclass(frozen=True)
class ChannelRates:
    label: str
    lam: float    # localization parameter, 1/(m^2 s)
    gamma: float  # event rate, 1/s

    def __post_init__(self):
        if self.lam < 0 or self.gamma < 0:
            raise DomainError(f"channel {self.label!r}: rates must be >= 0")
        if self.gamma == 0.0 and self.lam != 0.0:
            raise DomainError(f"channel {self.label!r}: gamma = 0 requires lambda = 0")


@dataclass(frozen=True)
class EmissionDiagnostics:
    """Model-2 arbitration record: tabulated closed form vs defining integral."""

    closed_form: float
    integral: float | None
    relative_deviation: float | None
    discrepancy: bool


def _thermal_wavenumber(T: float) -> float:
    return CONST.k_B * T / (CONST.hbar * CONST.c)


def lambda_scatt(r: float, T_env: float, eps: ComplexPermittivity | complex) -> float:
    """Rayleigh scattering of thermal photons off the sphere."""
    if r <= 0:
        raise DomainError("r must be > 0")
    if T_env < 0:
        raise DomainError("T_env must be >= 0")
    if T_env == 0.0:
        return 0.0
    re_cm = clausius_mossotti(eps).real
    prefactor = math.factorial(8) * 8.0 * zeta(9.0) * CONST.c * r**6 / (9.0 * math.pi)
    return prefactor * _thermal_wavenumber(T_env) ** 9 * re_cm**2


def model2_bracket(lambda_cv: float) -> float:
    """The tabulated Model-2 bracket, evaluated through erfcx so it stays finite
    for heat capacities up to the classical values (lambda ~ 1e12)."""
    lam = lambda_cv
    return (
        2.0 * (lam + 1.0) * (lam + 8.0)
        + math.sqrt(lam) * (lam * lam + 10.0 * lam + 15.0) * erfcx(math.sqrt(lam / 2.0))
    )


def lambda_em_detailed(
    model: EmissionModel,
    r: float,
    T_int: float,
    eps: ComplexPermittivity | complex,
    C_V: float | None = None,
) -> tuple[float, EmissionDiagnostics | None]:
    """Emission localization parameter plus Model-2 arbitration diagnostics.

    Model 2 evaluates both the tabulated closed form and the defining integral;
    if they disagree beyond MODEL2_ARBITRATION_RTOL the integral value is
    returned and the discrepancy flag is set.
    """
    if r <= 0:
        raise DomainError("r must be > 0")
    if T_int < 0:
        raise DomainError("T_int must be >= 0")
    if T_int == 0.0:
        return 0.0, None
    im_cm = clausius_mossotti(eps).imag
    if im_cm == 0.0:
        return 0.0, None
    k6 = _thermal_wavenumber(T_int) ** 6
    if model is EmissionModel.MODEL_1:
        return 16.0 * math.pi**5 * CONST.c * r**3 / 189.0 * k6 * im_cm, None
    if C_V is None or C_V <= 0:
        raise DomainError("Model 2 requires C_V > 0")
    lam_cv = C_V / CONST.k_B
    closed = 4.0 * CONST.c * r**3 / math.pi * k6 * im_cm * lam_cv**3 * model2_bracket(lam_cv)
    integral = lambda_em2_numeric(r, T_int, eps, lam_cv)
    rel_dev = abs(closed - integral) / abs(integral)
    if rel_dev > MODEL2_ARBITRATION_RTOL:
        return integral, EmissionDiagnostics(closed, integral, rel_dev, True)
    return closed, EmissionDiagnostics(closed, integral, rel_dev, False)


def lambda_em(
    model: EmissionModel,
    r: float,
    T_int: float,
    eps: ComplexPermittivity | complex,
    C_V: float | None = None,
) -> float:
    """Spontaneous-emission localization parameter at the internal temperature."""
    return lambda_em_detailed(model, r, T_int, eps, C_V)[0]


def lambda_abs(
    model: EmissionModel,
    r: float,
    T_env: float,
    eps: ComplexPermittivity | complex,
    C_V: float | None = None,
) -> float:
    """Absorption of bath photons: same functional form as emission, evaluated
    at the photon-bath temperature passed in."""
    return lambda_em_detailed(model, r, T_env, eps, C_V)[0]


def gamma_thermal(r: float, T: float) -> float:
    """Event rate shared by all three photon processes."""
    if r <= 0:
        raise DomainError("r must be > 0")
    if T < 0:
        raise DomainError("T must be >= 0")
    if T == 0.0:
        return 0.0
    return 2.0 / math.pi * zeta(3.0) * CONST.c * r**2 * _thermal_wavenumber(T) ** 3


def _per_species(gas: GasMixture, P: float):
    for species, fraction in gas.components:
        yield species, fraction * P


def lambda_coll(r: float, gas: GasMixture, P: float, T: float) -> float:
    """Residual-gas collisional localization parameter, partial-pressure additive.

    Prefactors come from the Bose-Einstein momentum moments, not the
    Maxwell-Boltzmann ones.
    """
    if r <= 0:
        raise DomainError("r must be > 0")
    if P < 0:
        raise DomainError("P must be >= 0")
    if P == 0.0:
        return 0.0
    if T <= 0:
        raise DomainError("lambda_coll requires T > 0")
    prefactor = 8.0 * math.sqrt(2.0 * math.pi) * zeta(3.0) / (3.0 * zeta(1.5))
    total = 0.0
    for species, partial in _per_species(gas, P):
        total += (
            prefactor * partial * r**2 / CONST.hbar**2
            * math.sqrt(species.molecular_mass * CONST.k_B * T)
        )
    return total


def gamma_coll(r: float, gas: GasMixture, P: float, T: float) -> float:
    """Residual-gas collision rate, partial-pressure additive."""
    if r <= 0:
        raise DomainError("r must be > 0")
    if P < 0:
        raise DomainError("P must be >= 0")
    if P == 0.0:
        return 0.0
    if T <= 0:
        raise DomainError("gamma_coll requires T > 0")
    prefactor = 16.0 * math.sqrt(3.0) * zeta(1.5)
    total = 0.0
    for species, partial in _per_species(gas, P):
        total += (
            prefactor * partial * r**2
            / math.sqrt(species.molecular_mass * CONST.k_B * T)
        )
    return total
