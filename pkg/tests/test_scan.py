"""Grid sweeps, region counting, contour refinement, benchmark table."""

import math

import numpy as np
import pytest

from gravdeco.errors import DomainError
from gravdeco.matter import AIR, Environment, SystemSpec, builtin_catalog
from gravdeco.scan import (
    GridSpec,
    MAX_DEMONSTRATED_SEPARATION_M,
    MIN_RESOLVABLE_SEPARATION_M,
    refine_contour,
    sweep,
    table_one,
)

SAPPHIRE = builtin_catalog().material("sapphire")


def make_sweep(radius=1e-6, nt=40, nd=40, pressure=1e-15, workers=1):
    grid = GridSpec(1e-3, 1e2, nt, 1e-18, 1.0, nd)
    system = SystemSpec(radius, SAPPHIRE, 1.0, 1.0)
    env = Environment(1.0, pressure, AIR, 1.0)
    return sweep(system, env, grid, workers=workers)


class TestGridSpec:
    def test_log_spacing(self):
        g = GridSpec(1.0, 100.0, 3, 1e-9, 1e-7, 3)
        assert list(g.t_values()) == pytest.approx([1.0, 10.0, 100.0])
        assert list(g.dx_values()) == pytest.approx([1e-9, 1e-8, 1e-7])

    def test_validation(self):
        with pytest.raises(DomainError):
            GridSpec(0.0, 1.0, 2, 1e-9, 1e-7, 2)
        with pytest.raises(DomainError):
            GridSpec(1.0, 100.0, 1, 1e-9, 1e-7, 2)
        with pytest.raises(DomainError):
            GridSpec(100.0, 1.0, 2, 1e-9, 1e-7, 2)


class TestSweep:
    def test_cell_ordering_and_count(self):
        res = make_sweep(nt=4, nd=5)
        assert len(res.cells) == 20
        # (T index outer, dx index inner)
        assert res.cells[0].T == res.cells[4].T
        assert res.cells[0].dx < res.cells[1].dx
        assert res.cell(2, 3) is res.cells[2 * 5 + 3]

    def test_dominant_flag_definition(self):
        res = make_sweep(nt=10, nd=10)
        for c in res.cells:
            if c.valid:
                assert c.dominant == (c.tau_g < c.tau_tc)

    def test_markers(self):
        res = make_sweep(nt=2, nd=2)
        assert res.markers["max_demonstrated_separation_m"] == MAX_DEMONSTRATED_SEPARATION_M == 0.54
        assert res.markers["min_resolvable_separation_m"] == MIN_RESOLVABLE_SEPARATION_M == 1e-10

    def test_parallel_equals_serial(self):
        serial = make_sweep(nt=12, nd=12, workers=1)
        parallel = make_sweep(nt=12, nd=12, workers=4)
        assert serial.cells == parallel.cells
        assert serial.region_count == parallel.region_count

    def test_region_count_transposition_invariant(self):
        res = make_sweep(nt=20, nd=30)
        mask = res.dominance_mask()
        from scipy import ndimage

        from gravdeco.scan import FOUR_CONNECTED

        _, direct = ndimage.label(mask, structure=FOUR_CONNECTED)
        _, transposed = ndimage.label(mask.T, structure=FOUR_CONNECTED)
        assert direct == transposed == res.region_count

    def test_pinned_temperatures_recorded(self):
        grid = GridSpec(1e-3, 1e2, 3, 1e-18, 1.0, 3)
        system = SystemSpec(1e-6, SAPPHIRE, 1.0, 1.0)
        env = Environment(300.0, 1e-15, AIR, 77.0)
        res = sweep(system, env, grid, track_photon_temperature=False,
                    track_gas_temperature=False)
        assert res.metadata["pinned_photon_temperature_K"] == 300.0
        assert res.metadata["pinned_gas_temperature_K"] == 77.0
        tracked = sweep(system, env, grid)
        assert tracked.metadata["pinned_photon_temperature_K"] is None


class TestLogRatioSlopes:
    """d log(tau_G/tau_TC) / d log dx is +1 deep in the long-wavelength regime
    and -1 deep in the short-wavelength regime."""

    def slope(self, dx0, pressure, factor=1.011):
        import dataclasses

        from gravdeco.combine import evaluate

        system = SystemSpec(1e-8, SAPPHIRE, 10.0, dx0)
        env = Environment(10.0, pressure, AIR, 10.0)
        r0 = evaluate(system, env)
        r1 = evaluate(dataclasses.replace(system, separation=dx0 * factor), env)
        return (
            (math.log(r1.tau_g / r1.tau_tc) - math.log(r0.tau_g / r0.tau_tc))
            / math.log(factor)
        )

    def test_long_wavelength_slope(self):
        assert self.slope(1e-17, 1e-15) == pytest.approx(1.0, abs=0.01)

    def test_short_wavelength_slope(self):
        # at 1 Pa the saturated collision rate dominates every quadratic photon
        # term, so tau_TC is separation-independent
        assert self.slope(1e-1, 1.0) == pytest.approx(-1.0, abs=0.01)


class TestContour:
    def test_no_sign_change_no_contour(self):
        # a tiny grid far inside the non-dominant region
        grid = GridSpec(50.0, 100.0, 3, 0.1, 1.0, 3)
        system = SystemSpec(1e-6, SAPPHIRE, 1.0, 1.0)
        env = Environment(1.0, 1e-15, AIR, 1.0)
        res = refine_contour(sweep(system, env, grid), tol=1e-3)
        assert res.contours == []

    def test_contour_points_satisfy_tolerance(self):
        res = make_sweep(nt=25, nd=25)
        refined = refine_contour(res, tol=1e-3)
        assert refined.contours
        for poly in refined.contours:
            for (T, dx) in poly:
                rec = res.evaluator(T, dx)
                assert abs(math.log(rec.tau_g / rec.tau_tc)) < 1e-3

    def test_single_crossing_on_monotone_slice(self):
        # hot fixed-T slices cross the lower dominance boundary exactly once
        grid = GridSpec(50.0, 100.0, 2, 1e-18, 1.0, 60)
        system = SystemSpec(1e-6, SAPPHIRE, 1.0, 1.0)
        env = Environment(1.0, 1e-15, AIR, 1.0)
        res = sweep(system, env, grid)
        refined = refine_contour(res, tol=1e-3)
        signs = [c.dominant for c in res.cells[:60]]
        changes = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
        assert changes == 1
        assert len(refined.contours) >= 1


class TestRegionStructure:
    def test_micron_sphere_single_small_dx_region(self):
        res = make_sweep(radius=1e-6, nt=60, nd=60)
        assert res.region_count >= 1
        mask = res.dominance_mask()
        dx_values = res.grid.dx_values()
        occupied = dx_values[np.where(mask.any(axis=0))[0]]
        assert occupied.max() < 1e-10  # confined to small separations

    def test_ten_nm_sphere_two_disjoint_regions(self):
        res = make_sweep(radius=1e-8, nt=60, nd=60)
        assert res.region_count == 2


class TestTableOne:
    def test_rows_and_matches(self):
        report = table_one()
        rows = {r.preset.name: r for r in report.rows}
        assert set(rows) == {
            "atoms", "fullerene", "micro-particles", "diamonds", "macro-particles"
        }
        atoms = rows["atoms"]
        assert atoms.matches["tau_g_debye"] and atoms.matches["tau_tc"]
        assert round(atoms.computed_decades["tau_g_debye"]) == 29

        diamonds = rows["diamonds"]
        assert diamonds.matches["tau_g_debye"] and diamonds.matches["tau_tc"]

        fullerene = rows["fullerene"]
        assert fullerene.matches["tau_g_einstein"]
        assert fullerene.alt_tau_g is not None

    def test_unmatched_rows_are_flagged(self):
        report = table_one()
        for row in report.rows:
            for key, ok in row.matches.items():
                if not ok:
                    assert any(flag.startswith(key) for flag in row.flags)
