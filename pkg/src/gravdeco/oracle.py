"""Quadrature evaluations of the defining integrals behind the closed-form rates.

These are the independent oracles: every closed-form localization parameter is
checked against the integral it was derived from, and the emission Model-2
closed form is arbitrated against its integral at run time.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import DomainError
from .quadrature import ORACLE_SPEC, QuadratureSpec, integrate
from .quantities import CONST, ComplexPermittivity, clausius_mossotti, erfcx, zeta


@dataclass(frozen=True)
class PhotonStatistics:
    """Occupation model for photons emitted by a crystal with finite heat capacity."""

    temperature: float  # K
    lambda_cv: float    # C_V / k_B

    def __post_init__(self):
        if self.temperature <= 0 or self.lambda_cv <= 0:
            raise DomainError("PhotonStatistics requires temperature > 0 and lambda_cv > 0")


def photon_number(k: float, stats: PhotonStatistics) -> float:
    """N(k) = 2 exp[-x - x^2/(2 lambda)] with x = hbar c k / (k_B T).

    The Gaussian term encodes the finite internal heat capacity; a Planck
    distribution is recovered only in spirit as lambda -> inf.
    """
    if k < 0:
        raise DomainError("k must be >= 0")
    x = CONST.hbar * CONST.c * k / (CONST.k_B * stats.temperature)
    return 2.0 * math.exp(-x - x * x / (2.0 * stats.lambda_cv))


@functools.lru_cache(maxsize=4096)
def emission_integral_dimensionless(lambda_cv: float, rel_tol: float = 1e-10) -> float:
    """I(lambda) = 2 * int_0^inf x^5 exp(-x - x^2/(2 lambda)) dx.

    This is the photon-side integral of the emission rate with the mode density
    k^2/pi^2 and the dipole cross section 4 pi Im[(eps-1)/(eps+2)] k r^3 factored
    out.  I -> 16 lambda^3 as lambda -> 0 and I -> 2*Gamma(6) = 240 as
    lambda -> inf.
    """
    if lambda_cv <= 0:
        raise DomainError("lambda_cv must be > 0")
    lam = lambda_cv

    def integrand(x: float) -> float:
        return 2.0 * x**5 * math.exp(-x - x * x / (2.0 * lam))

    return integrate(integrand, 0.0, math.inf, QuadratureSpec(rel_tol=rel_tol))


def emission_bracket_exact(lambda_cv: float) -> float:
    """Analytic evaluation of I(lambda)/lambda^3.

    Exact antiderivative of the defining integral:
        2 (lambda+1)(lambda+8)
        - sqrt(2 pi) sqrt(lambda) (lambda^2 + 10 lambda + 15) erfcx(sqrt(lambda/2)).
    The two terms cancel catastrophically in floats for large lambda; use the
    quadrature value there instead.
    """
    lam = lambda_cv
    return (
        2.0 * (lam + 1.0) * (lam + 8.0)
        - math.sqrt(2.0 * math.pi) * math.sqrt(lam)
        * (lam * lam + 10.0 * lam + 15.0) * erfcx(math.sqrt(lam / 2.0))
    )


def lambda_em2_numeric(
    r: float,
    T: float,
    eps: ComplexPermittivity | complex,
    lambda_cv: float,
    spec: QuadratureSpec = ORACLE_SPEC,
) -> float:
    """Emission localization parameter from the defining integral (Model 2)."""
    if r <= 0 or T <= 0:
        raise DomainError("lambda_em2_numeric requires r > 0 and T > 0")
    im_cm = clausius_mossotti(eps).imag
    if im_cm == 0.0:
        return 0.0
    thermal_k = CONST.k_B * T / (CONST.hbar * CONST.c)
    integral = emission_integral_dimensionless(lambda_cv, spec.rel_tol)
    return 4.0 * CONST.c * r**3 / math.pi * im_cm * thermal_k**6 * integral


# ---------------------------------------------------------------------------
# Bose-Einstein gas momentum distribution and its moments

def _be_shape(u: float) -> float:
    """u^2 / (exp(u^2/2) - 1), with a series branch at the removable u=0 singularity."""
    x = 0.5 * u * u
    if x < 1e-8:
        return 2.0 / (1.0 + 0.5 * x + x * x / 6.0)
    if x > 700.0:  # expm1 would overflow; the -1 is negligible here anyway
        return u * u * math.exp(-x)
    return u * u / math.expm1(x)


def bose_einstein_momentum_pdf(p: float, m_gas: float, T: float) -> float:
    """Normalized momentum distribution of a low-temperature bosonic gas."""
    if p < 0:
        raise DomainError("p must be >= 0")
    if m_gas <= 0 or T <= 0:
        raise DomainError("m_gas and T must be > 0")
    scale = math.sqrt(m_gas * CONST.k_B * T)
    norm = math.sqrt(2.0 / math.pi) / (zeta(1.5) * scale)
    return norm * _be_shape(p / scale)


def momentum_moment(
    order: int, m_gas: float, T: float, spec: QuadratureSpec = ORACLE_SPEC
) -> float:
    """<p^order> over the Bose-Einstein momentum pdf, by quadrature."""
    if order not in (1, 3):
        raise DomainError(f"momentum_moment supports orders 1 and 3, got {order}")
    if m_gas <= 0 or T <= 0:
        raise DomainError("m_gas and T must be > 0")
    scale = math.sqrt(m_gas * CONST.k_B * T)
    norm = math.sqrt(2.0 / math.pi) / zeta(1.5)

    def integrand(u: float) -> float:
        return norm * u**order * _be_shape(u)

    return scale**order * integrate(integrand, 0.0, math.inf, spec)


def momentum_moment_closed_form(order: int, m_gas: float, T: float) -> float:
    """Closed forms of the first and third moments, in the zeta constants."""
    scale = math.sqrt(m_gas * CONST.k_B * T)
    if order == 1:
        return math.pi * math.sqrt(2.0 * math.pi) / (3.0 * zeta(1.5)) * scale
    if order == 3:
        return 8.0 * math.sqrt(2.0 / math.pi) * zeta(3.0) / zeta(1.5) * scale**3
    raise DomainError(f"momentum_moment_closed_form supports orders 1 and 3, got {order}")


def lambda_coll_numeric(
    r: float,
    m_gas: float,
    n_gas: float,
    T: float,
    spec: QuadratureSpec = ORACLE_SPEC,
) -> float:
    """Collisional localization parameter in the geometric cross-section limit:
    pi r^2 n_gas / (3 hbar^2 m_gas) * <p^3>."""
    if r <= 0 or m_gas <= 0 or T <= 0:
        raise DomainError("lambda_coll_numeric requires positive r, m_gas, T")
    if n_gas < 0:
        raise DomainError("n_gas must be >= 0")
    if n_gas == 0.0:
        return 0.0
    return (
        math.pi * r**2 * n_gas / (3.0 * CONST.hbar**2 * m_gas)
        * momentum_moment(3, m_gas, T, spec)
    )
