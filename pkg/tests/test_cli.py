"""Tests for the bohrnet command line: exit codes, summaries and error labels."""

import json

import pytest

from app.descent.checker import DescentReport
from app.main import (
    EXIT_INCONSISTENT,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    build_parser,
    main,
    overrides_from,
)
from tests.conftest import qubit_chain_json


class TestParser:
    def test_overrides(self):
        args = build_parser().parse_args(
            ["check", "net.json", "--cover-cap", "5", "--no-trivial-context"]
        )
        overrides = overrides_from(args)
        assert overrides["cover_cap"] == 5
        assert overrides["include_trivial_context"] is False
        assert overrides["threads"] is None

    def test_trivial_context_untouched_by_default(self):
        args = build_parser().parse_args(["ks", "data.json"])
        assert overrides_from(args)["include_trivial_context"] is None

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "bohrnet" in capsys.readouterr().out


class TestCheckCommand:
    @pytest.mark.parametrize(
        "name", ["spin_chain_n2", "global_qubit", "custom_additivity_violation"]
    )
    def test_exit_ok(self, nets_dir, name, capsys):
        assert main(["--log-level", "ERROR", "check", str(nets_dir / f"{name}.json")]) == EXIT_OK
        assert "theorem" in capsys.readouterr().out

    def test_summary_lines(self, nets_dir, capsys):
        main(["--log-level", "ERROR", "check", str(nets_dir / "constant_commutative.json")])
        out = capsys.readouterr().out
        assert "strong locality" in out
        assert "first non-local cover 0;1" in out
        assert "consistent" in out

    def test_json_out_file(self, nets_dir, tmp_path):
        target = tmp_path / "report.json"
        code = main(
            [
                "--log-level", "ERROR",
                "check", str(nets_dir / "spin_chain_n2.json"),
                "--threads", "2",
                "--json-out", str(target),
            ]
        )
        assert code == EXIT_OK
        report = json.loads(target.read_text(encoding="utf-8"))
        assert report["command"] == "check"
        assert report["run"]["threads"] == 2
        assert report["results"]["theorem"]["biconditional"] == "consistent"

    def test_malformed_input(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["check", str(path)]) == EXIT_INPUT_ERROR
        assert "parse error:" in capsys.readouterr().err

    def test_schema_error_with_hint(self, write_json, capsys):
        document = qubit_chain_json(2)
        document["windw"] = document.pop("window")
        assert main(["check", str(write_json("typo.json", document))]) == EXIT_INPUT_ERROR
        err = capsys.readouterr().err
        assert "schema error:" in err
        assert "did you mean 'window'?" in err

    def test_cover_cap_exceeded(self, nets_dir, capsys):
        code = main(["check", str(nets_dir / "spin_chain_n2.json"), "--cover-cap", "1"])
        assert code == EXIT_INPUT_ERROR
        err = capsys.readouterr().err
        assert "cap exceeded:" in err
        assert "(cap 1)" in err

    def test_inconsistent_verdict_exits_one(self, nets_dir, monkeypatch, capsys):
        # strong locality holds on this chain; forcing every cover non-local breaks the match
        monkeypatch.setattr(DescentReport, "local", property(lambda self: False))
        code = main(["--log-level", "ERROR", "check", str(nets_dir / "spin_chain_n2.json")])
        assert code == EXIT_INCONSISTENT
        captured = capsys.readouterr()
        assert "theorem" in captured.out
        assert captured.out.rstrip().endswith("inconsistent")
        assert "inconsistent: strong locality pass but descent not local" in captured.err

    def test_family_alias_hint(self, write_json, capsys):
        path = write_json("alias.json", qubit_chain_json(2, family="chain"))
        assert main(["check", str(path)]) == EXIT_INPUT_ERROR
        err = capsys.readouterr().err
        assert "schema error:" in err
        assert "unknown family 'chain', did you mean 'spin_chain'?" in err

    def test_ambient_dimension_cap(self, write_json, capsys):
        path = write_json("wide.json", qubit_chain_json(7))
        assert main(["check", str(path)]) == EXIT_INPUT_ERROR
        err = capsys.readouterr().err
        assert "cap exceeded:" in err
        assert "ambient dimension 128" in err
        assert "(cap 64)" in err

    def test_non_positive_threads(self, nets_dir, capsys):
        code = main(["check", str(nets_dir / "spin_chain_n2.json"), "--threads", "0"])
        assert code == EXIT_INPUT_ERROR
        assert "usage error:" in capsys.readouterr().err


class TestKSCommand:
    def test_json_to_stdout(self, ks_dir, capsys):
        dataset = str(ks_dir / "cabello18.json")
        code = main(["--log-level", "ERROR", "ks", dataset, "--json-out", "-"])
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["command"] == "ks"
        assert report["results"]["sections"] == 0
        assert len(report["results_digest"]) == 64

    def test_summary(self, ks_dir, capsys):
        assert main(["--log-level", "ERROR", "ks", str(ks_dir / "single_basis_d4.json")]) == EXIT_OK
        out = capsys.readouterr().out
        assert "global sections: 4" in out
        assert "non-contextual" in out


class TestExplainCommand:
    def test_trace(self, nets_dir, capsys):
        spec = str(nets_dir / "spin_chain_n2.json")
        code = main(["--log-level", "ERROR", "explain", spec, "0;1"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "Left adjoint L:" in out
        assert "Verdict: local" in out

    def test_bad_cover(self, nets_dir, capsys):
        code = main(["explain", str(nets_dir / "spin_chain_n2.json"), "0"])
        assert code == EXIT_INPUT_ERROR
        assert "usage error:" in capsys.readouterr().err
