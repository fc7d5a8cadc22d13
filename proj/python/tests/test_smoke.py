import json
import os
import tempfile

import pytest

import klr


def a1():
    return klr.Context([[2]], ["i"])


def test_datum_properties():
    ctx = klr.Context([[2, -1], [-2, 2]])
    assert ctx.rank == 2
    assert ctx.labels == ["1", "2"]
    assert ctx.symmetrizers == [2, 1]


def test_invalid_matrix_raises():
    with pytest.raises(ValueError):
        klr.Context([[2, -1], [0, 2]])


def test_cyclotomic_dimensions():
    A = a1().cyclotomic({"i": 2}, {"i": 1})
    assert A.dim == 2
    assert A.graded_dim() == {0: 1, 2: 1}
    assert A.truncation_dim(["i"], ["i"]) == {0: 1, 2: 1}
    assert A.basis() == ["e(i)", "x1 e(i)"]
    # (n!)^2 binom(m, n) at level m = 2, n = 2
    assert a1().cyclotomic({"i": 2}, {"i": 2}).dim == 4
    assert a1().cyclotomic({"i": 1}, {"i": 2}).dim == 0


def test_gram_matches_quantum_integer():
    # (f v, f v) = [2] at level 2
    assert a1().gram({"i": 2}, {"i": 1}) == [[{-1: 1, 1: 1}]]


def test_checks_pass():
    suite = klr.run_checks(a1(), {"i": 1}, nmax=2)
    assert suite["summary"]["status"] == "pass"
    # rank one has no pair i != j for the mixed check
    assert {r["check"] for r in suite["reports"]} == set(klr.check_names()) - {"mixed"}
    assert all("elapsed_ms" not in r for r in suite["reports"])


def test_config_and_cli():
    text = '{"cartan": {"labels": ["1"], "matrix": [[2]]}, "lambda": {"1": 2}, "beta": {"1": 1}}'
    canonical = klr.normalize_config(text)
    assert canonical["q_coeffs"] == "standard"
    assert klr.normalize_config(json.dumps(canonical)) == canonical
    with pytest.raises(klr.ConfigError):
        klr.normalize_config('{"cartan": {"matrix": [[2]]}, "lambda": {"1": -1}, "nmax": 1}')

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "job.json")
        with open(path, "w") as f:
            f.write(text)
        code, out, err = klr.run_cli(["--config", path, "cyclotomic"])
        assert code == 0, err
        assert "(1)\t*\t*\t2\t1 + q^2" in out.splitlines()
        code, _, err = klr.run_cli(["--config", os.path.join(tmp, "missing.json"), "cyclotomic"])
        assert code == 2
