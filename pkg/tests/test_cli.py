"""End-to-end CLI behavior: subcommands, exit codes, reproducibility."""

import json

import pytest

from slopespectra.cli import EXIT_ERROR, EXIT_OK, EXIT_REFUTED, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def instance_file(tmp_path, capsys):
    path = tmp_path / "pts.txt"
    code = main(["generate", "--polygon", "8", "--delete", "0"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    path.write_text(out)
    return str(path)


class TestGenerate:
    def test_polygon_delete(self, capsys):
        code, out, _ = run(capsys, "generate", "--polygon", "8", "--delete", "0")
        assert code == EXIT_OK
        assert len(out.strip().splitlines()) == 7

    def test_affine_pipeline(self, capsys):
        code, out, _ = run(capsys, "generate", "--polygon", "8", "--delete", "0",
                           "--affine", "3,0,0,0.5,1,2")
        assert code == EXIT_OK
        assert len(out.strip().splitlines()) == 7

    def test_random_reproducible(self, capsys):
        _, out1, _ = run(capsys, "generate", "--random", "8", "--seed", "42")
        _, out2, _ = run(capsys, "generate", "--random", "8", "--seed", "42")
        assert out1 == out2
        assert all("/" in tok or tok.lstrip("-").isdigit()
                   for line in out1.strip().splitlines() for tok in line.split())

    def test_invalid_spec(self, capsys):
        code, _, err = run(capsys, "generate", "--polygon", "8", "--random", "5")
        assert code == EXIT_ERROR
        assert "InvalidSpec" in err


class TestVerify:
    def test_certificate_exit_zero(self, instance_file, capsys):
        code, out, _ = run(capsys, "verify", instance_file, "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["payload"]["verdict"]["kind"] == "certificate"

    def test_refutation_exit_code(self, tmp_path, capsys):
        path = tmp_path / "octagon.txt"
        main(["generate", "--polygon", "8"])
        path.write_text(capsys.readouterr().out)
        code, out, _ = run(capsys, "verify", str(path), "--json")
        assert code == EXIT_REFUTED
        doc = json.loads(out)
        assert doc["payload"]["verdict"]["stage"] == "SlopeCount"

    def test_six_points_size_refutation(self, tmp_path, capsys):
        path = tmp_path / "six.txt"
        path.write_text("".join(f"{t} {t * t}\n" for t in range(6)))
        code, out, _ = run(capsys, "verify", str(path), "--json")
        assert code == EXIT_REFUTED
        assert json.loads(out)["payload"]["verdict"]["stage"] == "Size"

    def test_report_reproducible(self, instance_file, capsys):
        _, out1, _ = run(capsys, "verify", instance_file, "--json")
        _, out2, _ = run(capsys, "verify", instance_file, "--json")
        d1, d2 = json.loads(out1), json.loads(out2)
        t1 = d1.pop("timing_ms")
        t2 = d2.pop("timing_ms")
        assert d1 == d2
        assert isinstance(t1, float) and isinstance(t2, float)

    def test_multi_file_jobs(self, instance_file, tmp_path, capsys):
        other = tmp_path / "other.txt"
        main(["generate", "--polygon", "9", "--delete", "2"])
        other.write_text(capsys.readouterr().out)
        code, out, _ = run(capsys, "verify", instance_file, str(other), "--jobs", "2")
        assert code == EXIT_OK
        assert out.count("command: verify") == 2


class TestAnalyze:
    def test_square_report(self, tmp_path, capsys):
        path = tmp_path / "square.txt"
        path.write_text("0 0\n1 0\n1 1\n0 1\n")
        code, out, _ = run(capsys, "analyze", str(path), "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["backend"] == "rational"
        assert doc["payload"]["spectrum"]["count"] == 4
        assert all(len(v) == 1 for v in doc["payload"]["forbidden"].values())

    def test_parse_error_exit(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("0.5 x\n")
        code, _, err = run(capsys, "analyze", str(path))
        assert code == EXIT_ERROR
        assert "ParseError" in err

    def test_backend_flag_coerces(self, tmp_path, capsys):
        path = tmp_path / "ints.txt"
        path.write_text("0 0\n1 0\n1 1\n0 1\n")
        code, out, _ = run(capsys, "analyze", str(path), "--backend", "float", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["backend"] == "float"

    def test_rational_flag_refuses_decimals(self, tmp_path, capsys):
        path = tmp_path / "dec.txt"
        path.write_text("0.5 0\n1 0\n1 1\n")
        code, _, err = run(capsys, "analyze", str(path), "--backend", "rational")
        assert code == EXIT_ERROR
        assert "BackendMismatch" in err


class TestCase:
    def test_seven_of_nine(self, tmp_path, capsys):
        path = tmp_path / "nine.txt"
        main(["generate", "--polygon", "9", "--delete", "0,1"])
        path.write_text(capsys.readouterr().out)
        code, out, _ = run(capsys, "case", str(path), "--json")
        assert code == EXIT_OK
        assert json.loads(out)["payload"]["proof_case"]["case"] == "Case2_2"

    def test_decagon_case_1_1(self, tmp_path, capsys):
        path = tmp_path / "ten.txt"
        main(["generate", "--polygon", "10"])
        path.write_text(capsys.readouterr().out)
        code, out, _ = run(capsys, "case", str(path), "--json")
        assert code == EXIT_OK
        assert json.loads(out)["payload"]["proof_case"]["case"] == "Case1_1"

    def test_triangle_refused(self, tmp_path, capsys):
        path = tmp_path / "tri.txt"
        path.write_text("0 0\n1 0\n0 1\n")
        code, out, _ = run(capsys, "case", str(path), "--json")
        assert code == EXIT_REFUTED
        assert "TooFewPoints" in json.loads(out)["payload"]["refusal"]


class TestRender:
    def test_svg_to_file(self, instance_file, tmp_path, capsys):
        out_path = tmp_path / "fig.svg"
        code, _, _ = run(capsys, "render", instance_file, "--out", str(out_path),
                         "--highlight", "conic")
        assert code == EXIT_OK
        svg = out_path.read_text()
        assert svg.startswith("<svg ") and 'id="conic"' in svg

    def test_empty_file_parse_error(self, tmp_path, capsys):
        path = tmp_path / "empty.txt"
        path.write_text("")
        code, _, err = run(capsys, "render", str(path))
        assert code == EXIT_ERROR
        assert "ParseError" in err

    def test_stdout_deterministic(self, instance_file, capsys):
        _, a, _ = run(capsys, "render", instance_file, "--highlight", "parallel all")
        _, b, _ = run(capsys, "render", instance_file, "--highlight", "parallel all")
        assert a == b


class TestEnvEps:
    def test_env_override(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("SLOPESPECTRA_EPS", "1e-6")
        path = tmp_path / "sq.txt"
        path.write_text("0.0 0.0\n1.0 0.0\n1.0 1.0\n0.0 1.0\n")
        code, out, _ = run(capsys, "analyze", str(path), "--json")
        assert code == EXIT_OK
        assert json.loads(out)["eps"] == 1e-6
