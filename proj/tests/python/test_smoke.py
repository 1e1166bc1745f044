"""Smoke tests for the python bindings."""

import math

import pytest

eulersum = pytest.importorskip("eulersum")


def test_constants():
    assert math.isclose(eulersum.zeta(2), math.pi**2 / 6, rel_tol=1e-13)
    assert math.isclose(eulersum.alt_zeta(1), math.log(2), rel_tol=1e-13)
    assert math.isclose(eulersum.polylog(4, 1, 2), 0.5174790616738994, rel_tol=1e-11)
    assert math.isclose(eulersum.euler_gamma(), 0.5772156649015329, rel_tol=1e-11)


def test_exact_combinatorics():
    assert eulersum.harmonic(4) == "25/12"
    assert eulersum.alt_harmonic(4, 2) == "115/144"
    assert eulersum.bell_Y(2, 2) == "7/2"
    assert eulersum.stirling_first(5, 3) == "35"


def test_eval_sum():
    value, err = eulersum.eval_sum("S[2;0;p=6]")
    assert math.isclose(value, 1.0218970966147803, rel_tol=1e-10)
    assert err < 1e-9
    with pytest.raises(Exception):
        eulersum.eval_sum("S[1;0;p=1]")


def test_registry_and_verify():
    ids = {rec["id"] for rec in eulersum.list_identities()}
    assert len(ids) >= 45
    assert "eq-2.12" in ids

    result = eulersum.verify("eq-2.12", {"k": 5})
    assert result["pass"]
    assert result["residual"] < 1e-6

    golden = eulersum.verify_all(filter="golden-3.*")
    assert golden and all(r["status"] == "pass" for r in golden)
