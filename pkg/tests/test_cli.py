"""Command-line surface: grammar, exit codes, output formats, determinism."""

import json
import os

import pytest

from gravdeco.cli import (
    EXIT_DOMAIN,
    EXIT_IO,
    EXIT_OK,
    EXIT_RESOLUTION,
    _parse_grid,
    _parse_pressure,
    _parse_range,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    def test_pressure_suffixes(self):
        assert _parse_pressure("1e-15") == 1e-15
        assert _parse_pressure("1e-15Pa") == 1e-15
        assert _parse_pressure("5e-17mbar") == 5e-15
        assert _parse_pressure("1 mbar") == 100.0

    def test_range(self):
        assert _parse_range("1e-3:1e2") == (1e-3, 1e2)

    def test_grid(self):
        assert _parse_grid("200x200") == (200, 200)
        assert _parse_grid("50X80") == (50, 80)


class TestCompute:
    def test_sapphire_debye_anchor(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--material", "sapphire", "--radius", "1e-6",
            "--temp", "1", "--dx", "1e-3", "--cv-model", "debye",
        )
        assert code == EXIT_OK
        assert "6.97e+05" in out

    def test_sapphire_einstein_anchor(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--material", "sapphire", "--radius", "1e-6",
            "--temp", "1", "--dx", "1e-3", "--cv-model", "einstein",
        )
        assert code == EXIT_OK
        assert "182 s" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--material", "sapphire", "--radius", "1e-6",
            "--temp", "1", "--dx", "1e-3", "--json",
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["schema_version"] == 1
        assert set(doc) >= {"tau_g_s", "tau_tc_s", "channels", "dominant"}
        assert {c["label"] for c in doc["channels"]} == {
            "scattering", "emission", "absorption", "collisions"
        }
        for c in doc["channels"]:
            assert set(c) >= {"lambda_per_m2_s", "gamma_per_s", "tau_s", "regime"}

    def test_preset_fullerene(self, capsys):
        code, out, _ = run(capsys, "compute", "--preset", "fullerene", "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        # computed value; the reference-decade comparison lives in table1
        assert 1e2 < doc["tau_tc_s"] < 1e3

    def test_unknown_material_exit_2(self, capsys):
        code, _, err = run(
            capsys, "compute", "--material", "kryptonite", "--radius", "1e-6",
            "--temp", "1", "--dx", "1e-3",
        )
        assert code == EXIT_RESOLUTION
        assert "kryptonite" in err

    def test_domain_error_exit_3(self, capsys):
        code, _, err = run(
            capsys, "compute", "--material", "sapphire", "--radius", "-1",
            "--temp", "1", "--dx", "1e-3",
        )
        assert code == EXIT_DOMAIN
        assert err.startswith("error:")


class TestScan:
    def test_csv_and_sidecar(self, capsys, tmp_path):
        out = str(tmp_path / "scan.csv")
        code, stdout, _ = run(
            capsys, "scan", "--material", "sapphire", "--radius", "1e-8",
            "--grid", "30x30", "--out", out,
        )
        assert code == EXIT_OK
        lines = open(out).read().splitlines()
        assert lines[0] == "T_K,dx_m,tau_g_s,tau_tc_s,ratio,dominant"
        assert len(lines) == 1 + 30 * 30
        sidecar = json.load(open(str(tmp_path / "scan.json")))
        assert sidecar["schema_version"] == 1
        assert sidecar["region_count"] == 2
        assert sidecar["markers"]["max_demonstrated_separation_m"] == 0.54
        assert sidecar["metadata"]["photon_temperature_tracks_grid"] is True

    def test_degenerate_grid_rows(self, capsys, tmp_path):
        out = str(tmp_path / "tiny.csv")
        code, _, _ = run(
            capsys, "scan", "--material", "sapphire", "--radius", "1e-6",
            "--grid", "2x2", "--out", out,
        )
        assert code == EXIT_OK
        # header plus 4 data rows
        assert len(open(out).read().splitlines()) == 5

    def test_byte_identical_reruns(self, capsys, tmp_path):
        a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
        args = ["scan", "--material", "sapphire", "--radius", "1e-8",
                "--grid", "25x25"]
        assert main(args + ["--out", a]) == EXIT_OK
        assert main(args + ["--out", b]) == EXIT_OK
        capsys.readouterr()
        assert open(a, "rb").read() == open(b, "rb").read()
        assert (
            open(str(tmp_path / "a.json"), "rb").read()
            == open(str(tmp_path / "b.json"), "rb").read()
        )

    def test_parallel_byte_identical(self, capsys, tmp_path):
        a, b = str(tmp_path / "s.csv"), str(tmp_path / "p.csv")
        args = ["scan", "--material", "sapphire", "--radius", "1e-8",
                "--grid", "25x25"]
        assert main(args + ["--out", a, "--workers", "1"]) == EXIT_OK
        assert main(args + ["--out", b, "--workers", "4"]) == EXIT_OK
        capsys.readouterr()
        assert open(a, "rb").read() == open(b, "rb").read()

    def test_unwritable_path_exit_4(self, capsys, tmp_path):
        target = str(tmp_path / "no" / "such" / "dir" / "x.csv")
        code, _, err = run(
            capsys, "scan", "--material", "sapphire", "--radius", "1e-6",
            "--grid", "2x2", "--out", target,
        )
        assert code == EXIT_IO
        assert err.startswith("error:")


class TestTable1AndMaterials:
    def test_table1_atoms_decade(self, capsys):
        code, out, _ = run(capsys, "table1", "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        atoms = next(r for r in doc["rows"] if r["name"] == "atoms")
        assert round(atoms["computed_decades"]["tau_g_debye"]) == 29
        assert atoms["matches"]["tau_g_debye"] is True

    def test_table1_flags_present(self, capsys):
        code, out, _ = run(capsys, "table1")
        assert code == EXIT_OK
        assert "FLAGGED" in out

    def test_materials_list(self, capsys):
        code, out, _ = run(capsys, "materials")
        assert code == EXIT_OK
        for name in ("sapphire", "diamond", "silica", "niobium"):
            assert name in out

    def test_materials_show(self, capsys):
        code, out, _ = run(capsys, "materials", "show", "sapphire")
        assert code == EXIT_OK
        assert "1.05e+03 K" in out  # T_D = 1047 K at 3 significant digits

    def test_materials_unknown_exit_2(self, capsys):
        code, _, _ = run(capsys, "materials", "show", "adamantium")
        assert code == EXIT_RESOLUTION


class TestOracleVerify:
    def test_report_written(self, capsys, tmp_path):
        out = str(tmp_path / "report.json")
        code, stdout, _ = run(capsys, "oracle", "verify", "--out", out)
        assert code == EXIT_OK  # model-2 discrepancies do not fail the command
        doc = json.load(open(out))
        assert doc["all_pass"] is True
        assert doc["model2_discrepancy_count"] == 6
        assert all(e["rel_dev"] < 1e-8 for e in doc["momentum_moments"])


class TestCatalogOverride:
    def test_external_catalog(self, capsys, tmp_path):
        path = tmp_path / "extra.toml"
        path.write_text(
            "[material.teflon]\n"
            "mass_density = 2.2e3\n"
            "debye_temperature = 120.0\n"
            "eps_re = 2.1\n"
            "eps_im = 1e-4\n"
            "molar_mass = 0.1\n"
        )
        code, out, _ = run(
            capsys, "--catalog", str(path), "compute", "--material", "teflon",
            "--radius", "1e-7", "--temp", "1", "--dx", "1e-6",
        )
        assert code == EXIT_OK
        assert "tau_G" in out
