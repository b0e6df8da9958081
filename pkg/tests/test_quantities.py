"""Constants, zeta values, Clausius-Mossotti factor, erfcx, pressure units."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from gravdeco.errors import DomainError, SingularityError
from gravdeco.quantities import (
    CONST,
    ComplexPermittivity,
    clausius_mossotti,
    erfcx,
    pressure_to_si,
    zeta,
)


def zeta_oracle(s: float, terms: int = 50) -> float:
    """Euler-Maclaurin evaluation of zeta(s), independent of the pinned table.

    sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2 + s N^{-s-1}/12
    - s(s+1)(s+2) N^{-s-3}/720, good to ~1e-14 for N = 50, s > 1.
    """
    n = terms
    partial = sum(k ** -s for k in range(1, n))
    tail = n ** (1 - s) / (s - 1) + 0.5 * n ** -s + s * n ** (-s - 1) / 12.0
    tail -= s * (s + 1) * (s + 2) * n ** (-s - 3) / 720.0
    return partial + tail


class TestConstants:
    def test_si_values(self):
        assert CONST.hbar == 1.054571817e-34
        assert CONST.c == 2.99792458e8
        assert CONST.k_B == 1.380649e-23
        assert CONST.g_earth == 9.80665
        assert CONST.N_A == 6.02214076e23

    def test_frozen(self):
        with pytest.raises(Exception):
            CONST.c = 1.0


class TestZeta:
    @pytest.mark.parametrize("s", [1.5, 3.0, 9.0])
    def test_pinned_values_match_series_oracle(self, s):
        assert zeta(s) == pytest.approx(zeta_oracle(s), rel=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            zeta(1.0)
        with pytest.raises(DomainError):
            zeta(0.5)

    def test_unpinned_exponent_rejected(self):
        with pytest.raises(DomainError):
            zeta(2.0)


class TestClausiusMossotti:
    def test_real_dielectric(self):
        cm = clausius_mossotti(ComplexPermittivity(10.0, 0.0))
        assert cm == pytest.approx((10 - 1) / (10 + 2))
        assert cm.imag == 0.0

    def test_complex_input_accepted(self):
        assert clausius_mossotti(4.4 + 1e-3j) == clausius_mossotti(
            ComplexPermittivity(4.4, 1e-3)
        )

    def test_pole(self):
        with pytest.raises(SingularityError):
            clausius_mossotti(complex(-2.0, 0.0))

    def test_vacuum_gives_zero(self):
        assert clausius_mossotti(ComplexPermittivity(1.0, 0.0)) == 0.0

    def test_passive_medium_enforced(self):
        with pytest.raises(DomainError):
            ComplexPermittivity(2.0, -1e-6)

    @given(st.floats(min_value=1.0, max_value=100.0),
           st.floats(min_value=0.0, max_value=10.0))
    @settings(derandomize=True, max_examples=50)
    def test_im_nonnegative_for_passive_media(self, re, im):
        assert clausius_mossotti(ComplexPermittivity(re, im)).imag >= 0.0


class TestErfcx:
    @pytest.mark.parametrize("x", [0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0])
    def test_identity_with_erfc(self, x):
        # direct product is representable without overflow up to x ~ 26
        assert erfcx(x) == pytest.approx(math.exp(x * x) * math.erfc(x), rel=1e-12)

    def test_large_argument_asymptotics(self):
        # erfcx(x) ~ (1/(x sqrt(pi))) (1 - 1/(2x^2) + 3/(4x^4)) for x -> inf
        x = 1e6
        series = (1.0 - 0.5 / x**2 + 0.75 / x**4) / (x * math.sqrt(math.pi))
        assert erfcx(x) == pytest.approx(series, rel=1e-12)

    def test_at_zero(self):
        assert erfcx(0.0) == 1.0

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            erfcx(-1.0)

    @given(st.floats(min_value=0.0, max_value=1e8))
    @settings(derandomize=True, max_examples=100)
    def test_monotone_decreasing_and_bounded(self, x):
        v = erfcx(x)
        assert 0.0 < v <= 1.0
        assert erfcx(x + 1.0) < v


class TestPressure:
    def test_mbar_exact(self):
        assert pressure_to_si(1.0, "mbar") == 100.0
        assert pressure_to_si(5e-17, "mbar") == 5e-15

    def test_pa_identity(self):
        assert pressure_to_si(3.7, "Pa") == 3.7

    def test_bad_unit(self):
        with pytest.raises(DomainError):
            pressure_to_si(1.0, "torr")

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            pressure_to_si(-1.0)
