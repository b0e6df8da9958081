"""Physical constants, unit conversions, permittivity arithmetic and special functions.

Everything here is pure and process-immutable; all downstream modules build on it.
"""

from __future__ import annotations

from dataclasses import dataclass

import scipy.special as _sps

from .errors import DomainError, SingularityError


@dataclass(frozen=True)
class PhysConstants:
    """CODATA SI constants. g_earth is standard gravity."""

    hbar: float = 1.054571817e-34  # J s
    c: float = 2.99792458e8        # m/s
    k_B: float = 1.380649e-23      # J/K
    g_earth: float = 9.80665       # m/s^2
    N_A: float = 6.02214076e23     # 1/mol


CONST = PhysConstants()

# Riemann zeta at the three exponents the rate formulas use.  Pinned constants;
# validated against an independent series oracle in the test suite.
_ZETA = {
    1.5: 2.6123753486854883,
    3.0: 1.2020569031595943,
    9.0: 1.0020083928260822,
}


def zeta(s: float) -> float:
    """Riemann zeta at s in {3/2, 3, 9}."""
    if s <= 1:
        raise DomainError(f"zeta requires s > 1, got {s}")
    try:
        return _ZETA[float(s)]
    except KeyError:
        raise DomainError(f"zeta is pinned only for s in {sorted(_ZETA)}, got {s}") from None


@dataclass(frozen=True)
class ComplexPermittivity:
    """Complex dielectric constant of a passive medium."""

    re: float
    im: float = 0.0

    def __post_init__(self):
        if self.im < 0:
            raise DomainError("passive medium requires Im(eps) >= 0")

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


def clausius_mossotti(eps: ComplexPermittivity | complex) -> complex:
    """Polarizability response factor (eps - 1)/(eps + 2) of a small dielectric sphere."""
    z = eps.as_complex() if isinstance(eps, ComplexPermittivity) else complex(eps)
    if z + 2 == 0:
        raise SingularityError("clausius_mossotti pole at eps = -2")
    return (z - 1) / (z + 2)


def erfcx(x: float) -> float:
    """Scaled complementary error function exp(x^2) * erfc(x), overflow-safe for any x >= 0."""
    if x < 0:
        raise DomainError(f"erfcx requires x >= 0, got {x}")
    return float(_sps.erfcx(x))


_PRESSURE_FACTORS = {"Pa": 1.0, "mbar": 100.0}


def pressure_to_si(value: float, unit: str = "Pa") -> float:
    """Convert a pressure to pascal. 1 mbar = 100 Pa exactly."""
    if value < 0:
        raise DomainError(f"pressure must be >= 0, got {value}")
    try:
        return value * _PRESSURE_FACTORS[unit]
    except KeyError:
        raise DomainError(f"unknown pressure unit {unit!r}; use Pa or mbar") from None
