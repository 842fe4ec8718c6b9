"""JSON file format and the command-line front end."""

import json

import numpy as np
import pytest

from dualgi import DualMatrix, DualVector, dcepgi
from dualgi.cli import (EXIT_HYPOTHESIS, EXIT_NOT_EXIST, EXIT_OK, EXIT_USAGE,
                        main)
from dualgi.errors import DimensionError
from dualgi.io import (dual_vector_to_dict, read_dual_matrix,
                       read_dual_vector, write_dual_matrix)
from helpers import (existing_dual, existing_dual_b3, random_dual,
                     random_dual_vector, random_frame)

RNG = np.random.default_rng(20240823)


def write_vector(path, vh, name=""):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dual_vector_to_dict(vh, name), fh)


@pytest.fixture
def existing_file(tmp_path):
    f = random_frame(RNG)
    ah = existing_dual(RNG, f)
    path = tmp_path / "existing.json"
    write_dual_matrix(path, ah, name="existing")
    return str(path), ah


@pytest.fixture
def nonexisting_file(tmp_path):
    f = random_frame(RNG)
    ah = random_dual(RNG, f)
    path = tmp_path / "nonexisting.json"
    write_dual_matrix(path, ah, name="nonexisting")
    return str(path), ah


class TestIO:
    def test_matrix_roundtrip(self, tmp_path):
        f = random_frame(RNG)
        ah = random_dual(RNG, f)
        path = tmp_path / "m.json"
        write_dual_matrix(path, ah, name="m")
        name, back = read_dual_matrix(path)
        assert name == "m"
        assert (back - ah).norm() == 0.0

    def test_vector_roundtrip(self, tmp_path):
        vh = random_dual_vector(RNG, 5)
        path = tmp_path / "v.json"
        write_vector(path, vh, name="v")
        name, back = read_dual_vector(path)
        assert name == "v"
        assert (back - vh).norm() == 0.0

    def test_missing_part_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"rows": 2, "cols": 2,
                                    "standard": [[1, 0], [0, 1]]}))
        with pytest.raises(ValueError):
            read_dual_matrix(path)

    def test_shape_mismatch_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"rows": 2, "cols": 2,
                                    "standard": [[1, 0], [0, 1]],
                                    "infinitesimal": [[1, 0, 0], [0, 1, 0]]}))
        with pytest.raises(DimensionError):
            read_dual_matrix(path)


class TestCLIExitCodes:
    def test_inverse_exists(self, existing_file, capsys):
        path, ah = existing_file
        assert main(["inverse", "--kind", "cep", path]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["exists"] is True
        got = DualMatrix(np.array(report["result"]["standard"]),
                         np.array(report["result"]["infinitesimal"]))
        assert (got - dcepgi(ah)).norm() < 1e-9
        assert report["certificate"]["exists"] is True

    def test_inverse_not_exists(self, nonexisting_file, capsys):
        path, _ = nonexisting_file
        assert main(["inverse", "--kind", "cep", path]) == EXIT_NOT_EXIST
        report = json.loads(capsys.readouterr().out)
        assert report["exists"] is False
        assert report["certificate"]["exists"] is False

    def test_usage_error_on_missing_file(self, tmp_path, capsys):
        missing = str(tmp_path / "nope.json")
        assert main(["inverse", "--kind", "cep", missing]) == EXIT_USAGE

    def test_usage_error_on_bad_args(self):
        assert main(["inverse", "--kind", "bogus", "x.json"]) == EXIT_USAGE
        assert main(["no-such-command"]) == EXIT_USAGE

    def test_hypothesis_exit(self, tmp_path, capsys):
        for _ in range(10):
            ah = existing_dual_b3(RNG, random_frame(RNG))
            if ah is None:
                continue
            mat = tmp_path / "m.json"
            rhs = tmp_path / "b.json"
            write_dual_matrix(mat, ah)
            write_vector(rhs, random_dual_vector(RNG, ah.shape[0]))
            code = main(["solve", str(mat), str(rhs),
                         "--mode", "unique-in-range"])
            if code == EXIT_HYPOTHESIS:
                return
        pytest.skip("no hypothesis violation drawn")


class TestCLICommands:
    def test_decompose(self, existing_file, capsys):
        path, ah = existing_file
        assert main(["decompose", path]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["reconstruction_residual"] < 1e-9
        assert report["dcepgi_certificate"]["exists"] is True
        assert "core_part" in report

    def test_solve_general(self, existing_file, tmp_path, capsys):
        path, ah = existing_file
        rhs = tmp_path / "b.json"
        write_vector(rhs, random_dual_vector(RNG, ah.shape[0]))
        assert main(["solve", path, str(rhs), "--spot-checks", "3"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["residual"] < 1e-9
        assert all(r < 1e-8 for r in report["spot_check_residuals"])

    def test_output_file(self, existing_file, tmp_path, capsys):
        path, _ = existing_file
        out = tmp_path / "report.json"
        assert main(["inverse", "--kind", "dmpgi", path,
                     "--output", str(out)]) == EXIT_OK
        capsys.readouterr()
        assert json.loads(out.read_text())["exists"] is True

    def test_tol_env_override(self, nonexisting_file, capsys, monkeypatch):
        path, _ = nonexisting_file
        # an absurdly loose tolerance turns nonexistence into existence
        monkeypatch.setenv("DUALGI_TOL", "1e6")
        assert main(["inverse", "--kind", "cep", path]) == EXIT_OK
        capsys.readouterr()
        monkeypatch.setenv("DUALGI_TOL", "not-a-number")
        with pytest.raises(SystemExit):
            main(["inverse", "--kind", "cep", path])

    def test_tol_flag_beats_env(self, nonexisting_file, capsys, monkeypatch):
        path, _ = nonexisting_file
        monkeypatch.setenv("DUALGI_TOL", "1e6")
        assert main(["inverse", "--kind", "cep", path,
                     "--tol", "1e-10"]) == EXIT_NOT_EXIST
        capsys.readouterr()

    def test_all_inverse_kinds_run(self, existing_file, capsys):
        path, ah = existing_file
        for kind in ("mpdgi", "dmpgi", "ddgi", "cep", "cep-compact"):
            code = main(["inverse", "--kind", kind, path])
            capsys.readouterr()
            assert code in (EXIT_OK, EXIT_NOT_EXIST)
