"""The tra-spectra command: parsing, configuration, exit codes and output files."""

import json

import pytest

from tra_spectra.cli import RunConfig, VerificationSuite, build_parser, main
from tra_spectra.exceptions import ConfigError


# ------------------------------------------------------------------------------
# Configuration
# ------------------------------------------------------------------------------

class TestRunConfig:

    def test_defaults_are_valid(self):
        RunConfig().validate()

    def test_problems_are_collected(self):
        config = RunConfig(units="furlongs", workers=0, format="xml")
        with pytest.raises(ConfigError) as info:
            config.validate()
        assert len(info.value.problems) == 3

    def test_nu_implies_explicit_policy(self):
        from tra_spectra.models import NuPolicy

        assert RunConfig(nu=-40.0).nu_selection is NuPolicy.EXPLICIT

    def test_regime_checked_before_running(self):
        with pytest.raises(ConfigError):
            RunConfig(N_list=[10], nu=-5.0).validate()

    def test_family_b_policy_follows_basis_sizes(self):
        from tra_spectra.models import BRootPolicy

        assert RunConfig(family="B", v0=120.0, vs=20.0, N_list=[4]).b_root is BRootPolicy.NEGATIVE_ROOT
        assert RunConfig(family="B", v0=120.0, vs=20.0).b_root is BRootPolicy.FREE_NU
        assert RunConfig(family="B", v0=120.0, vs=20.0, b_root_policy="negative-root").b_root is BRootPolicy.NEGATIVE_ROOT

    def test_unknown_json_key(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"v0": 1.0, "colour": "red"}), encoding="utf-8")
        with pytest.raises(ConfigError):
            RunConfig.from_json(str(path))

    def test_parser_lists_commands(self):
        parser = build_parser()
        args = parser.parse_args(["verify", "--quick", "--only", "regime,identities"])
        assert args.command == "verify"
        assert args.only == ["regime", "identities"]


# ------------------------------------------------------------------------------
# Commands
# ------------------------------------------------------------------------------

class TestMain:

    def test_spectrum_csv(self, capsys):
        assert main(["spectrum", "--N", "10,20"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n,N=10,N=20,exact"
        assert len(lines) == 6

    def test_empty_spectrum_is_success(self, capsys):
        assert main(["spectrum", "--v0", "0", "--vplus", "0", "--N", "10"]) == 0
        assert capsys.readouterr().out.splitlines() == ["n,N=10,exact"]

    def test_family_b_flag(self, capsys):
        assert main(["spectrum", "--v0", "120", "--vminus", "20", "--N", "4"]) == 0
        assert capsys.readouterr().out.startswith("n,N=4,exact")

    def test_family_b_default_sizes(self, capsys):
        assert main(["spectrum", "--v0", "120", "--vminus", "20"]) == 0
        assert capsys.readouterr().out.startswith("n,N=10,N=30,N=50,N=100,exact")

    def test_output_dir(self, tmp_path):
        assert main(["spectrum", "--N", "10", "--output-dir", str(tmp_path)]) == 0
        assert (tmp_path / "spectrum.csv").exists()
        diffs = json.loads((tmp_path / "spectrum_diffs.json").read_text(encoding="utf-8"))
        assert diffs["columns"] == ["n", "N", "numeric", "exact", "abs_diff", "nu"]

    def test_phase_shift_json(self, capsys):
        assert main(["phase-shift", "--eps-points", "5", "--format", "json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert len(document["rows"]) == 5

    def test_wavefunction(self, capsys):
        assert main(["wavefunction", "--N", "10", "--levels", "0,1", "--points", "50"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "r,psi_0,psi_1"
        assert len(lines) == 51

    def test_scan_plateau(self, capsys):
        assert main(["scan-plateau", "--N", "10", "--nu-points", "5"]) == 0
        assert capsys.readouterr().out.startswith("nu,level_0")

    def test_config_file(self, tmp_path, capsys):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"v0": 0.0, "vs": 0.0, "N_list": [5]}), encoding="utf-8")
        assert main(["spectrum", "--config", str(path)]) == 0
        assert capsys.readouterr().out.splitlines() == ["n,N=5,exact"]


# ------------------------------------------------------------------------------
# Exit codes
# ------------------------------------------------------------------------------

class TestExitCodes:

    def test_unknown_flag(self):
        assert main(["spectrum", "--bogus"]) == 2

    def test_missing_command(self):
        assert main([]) == 2

    def test_version(self, capsys):
        assert main(["--version"]) == 0
        assert "tra-spectra" in capsys.readouterr().out

    def test_regime_violation(self, capsys):
        assert main(["spectrum", "--N", "10", "--nu", "-5"]) == 2
        assert "mu + nu" in capsys.readouterr().err

    def test_vplus_and_vminus_exclusive(self):
        assert main(["spectrum", "--vplus", "1", "--vminus", "1"]) == 2

    def test_negative_root_too_large_suggests_free_nu(self, capsys):
        argv = ["spectrum", "--v0", "120", "--vminus", "20", "--N", "10", "--b-root-policy", "negative-root"]
        assert main(argv) == 2
        assert "free-nu" in capsys.readouterr().err

    def test_verify_wavefunction(self, capsys):
        assert main(["verify", "--only", "wavefunction"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["metadata"]["passed"] is True

    def test_verify_quick_subset(self, capsys):
        assert main(["verify", "--quick", "--only", "identities"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["metadata"]["passed"] is True
        assert [row["check"] for row in document["rows"]] == ["identities"]

    def test_verify_unknown_check(self):
        assert main(["verify", "--only", "nonsense"]) == 2

    def test_verify_names(self):
        assert "numerov" in VerificationSuite.available_checks()
