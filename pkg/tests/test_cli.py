"""CLI contract: published values, exit codes, determinism, file formats."""

import json

import pytest

from manning_rosen.cli import main
from manning_rosen.reference import audit_reference_table

TABLE_2P = ["spectrum", "--inv-b", "0.025", "--A-over-b", "2", "--alpha", "0.75",
            "--dim", "2", "--states", "2p"]


class TestSpectrumCommand:
    def test_published_2p_energy(self, capsys):
        assert main(TABLE_2P) == 0
        out = capsys.readouterr().out
        assert "-0.241087728" in out
        assert "bound" in out

    def test_published_d4_energy(self, capsys):
        rc = main(["spectrum", "--inv-b", "0.1", "--A-over-b", "2", "--alpha", "1.5",
                   "--dim", "4", "--states", "3p"])
        assert rc == 0
        assert "-0.004801908" in capsys.readouterr().out

    def test_quantum_number_ranges(self, capsys):
        rc = main(["spectrum", "--b", "40", "--A", "80", "--alpha", "0.75",
                   "--dim", "2", "--n", "0:1", "--l", "1:2"])
        assert rc == 0
        out = capsys.readouterr().out
        for label in ("2p", "3p", "3d", "4d"):
            assert label in out

    def test_malformed_label_exits_2(self, capsys):
        rc = main(["spectrum", "--inv-b", "0.025", "--A-over-b", "2", "--alpha",
                   "0.75", "--dim", "2", "--states", "1x"])
        assert rc == 2

    def test_missing_screening_exits_2(self):
        assert main(["spectrum", "--A", "80", "--alpha", "0.75", "--dim", "2",
                     "--states", "2p"]) == 2

    def test_unknown_flag_exits_2(self):
        assert main(["spectrum", "--nonsense", "1"]) == 2

    def test_unbound_states_listed(self, capsys):
        rc = main(["spectrum", "--b", "1", "--A", "1", "--alpha", "0", "--dim", "3",
                   "--states", "5s"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "unbound" in out
        assert "no bound states" in out

    def test_json_output_round_trips(self, capsys):
        assert main(TABLE_2P + ["--format", "json"]) == 0
        text = capsys.readouterr().out
        payload = json.loads(text)
        assert json.dumps(payload, sort_keys=True, indent=2) + "\n" == text
        assert payload[0]["label"] == "2p"
        assert payload[0]["energy"] == pytest.approx(-0.241087728, abs=5e-9)

    def test_csv_output_structure(self, capsys):
        assert main(TABLE_2P + ["--format", "csv"]) == 0
        text = capsys.readouterr().out
        lines = text.splitlines()
        assert lines[0] == "label,n,l,D,energy,epsilon,eta,status"
        assert "\r" not in text

    def test_deterministic_output(self, capsys):
        main(TABLE_2P + ["--format", "json"])
        first = capsys.readouterr().out
        main(TABLE_2P + ["--format", "json"])
        second = capsys.readouterr().out
        assert first == second

    def test_config_file_supplies_defaults(self, tmp_path, capsys):
        config = tmp_path / "run.cfg"
        config.write_text("inv-b=0.025\nA-over-b=2\nalpha=0.75\ndim=2\n")
        rc = main(["spectrum", "--config", str(config), "--states", "2p"])
        assert rc == 0
        assert "-0.241087728" in capsys.readouterr().out

    def test_flags_override_config(self, tmp_path, capsys):
        config = tmp_path / "run.cfg"
        config.write_text("inv-b=0.025\nA-over-b=2\nalpha=0.0\ndim=2\n")
        rc = main(["spectrum", "--config", str(config), "--alpha", "0.75",
                   "--states", "2p"])
        assert rc == 0
        assert "-0.241087728" in capsys.readouterr().out


class TestTableCommand:
    def test_audit_flags_known_misprints(self):
        audit = audit_reference_table()
        suspects = {(item.cell.label, item.cell.D, item.cell.alpha_label)
                    for item in audit if item.suspect}
        assert ("6d", 2, "0.75") in suspects
        # the 5p D=4 row contradicts the table's own degeneracy structure
        assert {("5p", 4, "0.75"), ("5p", 4, "0,1"), ("5p", 4, "1.5")} <= suspects
        assert len(suspects) == 4
        for item in audit:
            if not item.suspect:
                assert item.deviation <= 5e-9

    def test_text_report(self, capsys):
        assert main(["table"]) == 0
        out = capsys.readouterr().out
        assert "suspected erratum cells: 4" in out
        assert "SUSPECT" in out
        # the recomputed value for the flagged 6d cell
        assert "-0.006591028" in out

    def test_json_round_trips(self, capsys):
        assert main(["table", "--format", "json"]) == 0
        text = capsys.readouterr().out
        payload = json.loads(text)
        assert json.dumps(payload, sort_keys=True, indent=2) + "\n" == text
        cell = payload["2p,0.025,0.75,2"]
        assert cell["reference"] == pytest.approx(-0.241087728)
        assert not cell["suspect"]
        assert payload["6d,0.025,0.75,2"]["suspect"]


class TestWavefunctionCommand:
    def test_ground_state_file(self, tmp_path, capsys):
        out_file = tmp_path / "wf.csv"
        rc = main(["wavefunction", "--inv-b", "0.025", "--A-over-b", "2",
                   "--alpha", "0.75", "--dim", "2", "--states", "2p",
                   "--samples", "1000", "--out", str(out_file)])
        assert rc == 0
        text = out_file.read_text()
        lines = text.splitlines()
        assert lines[0] == "r,z,g,g_squared"
        assert len([ln for ln in lines if not ln.startswith("#")]) == 1001
        footer = {ln.split("=")[0]: ln.split("=")[1] for ln in lines if ln.startswith("#")}
        assert abs(float(footer["# norm"]) - 1.0) <= 1e-8
        assert footer["# node_count"] == "0"

    def test_excited_state_node_count(self, tmp_path):
        out_file = tmp_path / "wf.csv"
        rc = main(["wavefunction", "--inv-b", "0.025", "--A-over-b", "2",
                   "--alpha", "0.75", "--dim", "2", "--states", "4d",
                   "--samples", "200", "--out", str(out_file)])
        assert rc == 0
        footer = [ln for ln in out_file.read_text().splitlines() if ln.startswith("#")]
        assert "# node_count=1" in footer

    def test_zero_samples_exits_2(self):
        rc = main(["wavefunction", "--inv-b", "0.025", "--A-over-b", "2",
                   "--alpha", "0.75", "--dim", "2", "--states", "2p",
                   "--samples", "0"])
        assert rc == 2

    def test_unbound_exits_3(self, capsys):
        rc = main(["wavefunction", "--b", "1", "--A", "1", "--alpha", "0",
                   "--dim", "3", "--states", "5s", "--samples", "10"])
        assert rc == 3
        assert "epsilon" in capsys.readouterr().err

    def test_json_payload(self, capsys):
        rc = main(["wavefunction", "--inv-b", "0.1", "--A-over-b", "2",
                   "--alpha", "0.75", "--dim", "2", "--states", "2p",
                   "--samples", "50", "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["node_count"] == 0
        assert abs(payload["norm"] - 1.0) <= 1e-8
        assert len(payload["samples"]) == 50


class TestOracleCommand:
    def test_approx_mode_matches_closed_form(self, capsys):
        rc = main(["oracle", "--b", "40", "--A", "80", "--alpha", "0", "--dim", "3",
                   "--states", "1s", "--mode", "approx"])
        assert rc == 0
        out = capsys.readouterr().out
        rel = float(out.splitlines()[1].split()[-1])
        assert rel < 1e-6

    def test_both_modes_coincide_for_s_wave(self, capsys):
        rc = main(["oracle", "--b", "1", "--A", "2", "--alpha", "0", "--dim", "3",
                   "--states", "1s", "--mode", "both", "--format", "json"])
        assert rc == 0
        record = json.loads(capsys.readouterr().out)[0]
        assert record["exact"] == record["approx"]

    def test_unbound_state_row(self, capsys):
        rc = main(["oracle", "--b", "1", "--A", "1", "--alpha", "0", "--dim", "3",
                   "--states", "5s", "--mode", "approx"])
        assert rc == 0
        assert "unbound" in capsys.readouterr().out

    def test_incomplete_grid_override_exits_2(self):
        rc = main(["oracle", "--b", "40", "--A", "80", "--alpha", "0", "--dim", "3",
                   "--states", "1s", "--mode", "approx", "--r-max", "100"])
        assert rc == 2


class TestDegeneracyCommand:
    BASE = ["degeneracy", "--inv-b", "0.025", "--A-over-b", "2", "--alpha", "0.75"]

    def test_partner_chain(self, capsys):
        rc = main(self.BASE + ["--dim", "2", "--n", "0", "--l", "4",
                               "--dmin", "2", "--dmax", "8"])
        assert rc == 0
        out = capsys.readouterr().out
        body = [ln for ln in out.splitlines() if ln and not ln.startswith(("label", "shared"))]
        assert len(body) == 4
        assert "shared energy:" in out

    def test_singleton(self, capsys):
        rc = main(["degeneracy", "--inv-b", "0.025", "--A-over-b", "2", "--alpha", "0",
                   "--dim", "2", "--n", "0", "--l", "0", "--dmin", "2", "--dmax", "2"])
        assert rc == 0
        body = [ln for ln in capsys.readouterr().out.splitlines()
                if ln and not ln.startswith(("label", "shared"))]
        assert len(body) == 1

    def test_invalid_range_exits_2(self):
        rc = main(self.BASE + ["--dim", "2", "--n", "0", "--l", "4",
                               "--dmin", "1", "--dmax", "8"])
        assert rc == 2


class TestCriticalCouplingCommand:
    def test_hulthen_ground_state(self, capsys):
        rc = main(["critical-coupling", "--n", "0", "--l", "0", "--dim", "3",
                   "--alpha", "0"])
        assert rc == 0
        assert "A_c = 1.000000000" in capsys.readouterr().out

    def test_json(self, capsys):
        rc = main(["critical-coupling", "--n", "2", "--l", "0", "--dim", "3",
                   "--alpha", "0", "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["A_c"] == pytest.approx(9.0)
