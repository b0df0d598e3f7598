from fractions import Fraction

import numpy as np
import pytest

etale = pytest.importorskip("etale")


def test_algebra_info():
    a1 = etale.algebra_info("A1")
    assert (a1["dual_coxeter"], a1["dim"]) == (2, 3)
    assert Fraction(*a1["weyl_vector_norm"]) == Fraction(1, 2)
    with pytest.raises(ValueError):
        etale.algebra_info("Z9")


def test_conformal_weights():
    assert etale.conformal_weight("A1", 10, (6,)) == 1
    assert etale.conformal_weight("A2", 21, (0, 6)) == Fraction(3, 4)
    assert etale.central_charge("A1", 10) == Fraction(5, 2)


def test_s_matrix_is_unitary():
    simples, s = etale.s_matrix("A2", 5)
    assert len(simples) == 21
    assert simples[0] == (0, 0)
    assert np.allclose(s @ s.conj().T, np.eye(len(simples)), atol=1e-12)
    assert np.allclose(s, s.T, atol=1e-12)


def test_fusion_and_galois():
    assert etale.fusion("A1", 4, [1], [1]) == [([0], 1), ([2], 1)]
    assert etale.galois_act("A3", 6, 7, [0, 0, 2]) == ([3, 0, 1], 1)


def test_levels_and_candidates():
    assert etale.step1_levels("A1") == [1, 4, 7, 10, 13, 28]
    assert etale.step2_levels("A2") == [5, 9, 21, 57]
    assert set(etale.candidates("A1", 28)) == {(0,), (10,), (18,), (28,)}
    assert etale.thresholds("A4")["total"] == 69


def test_classify_and_survivors():
    cert = etale.classify("A2", 57)
    assert cert["verdict"] == "no-exotic"
    found = etale.classify("A2", 9)
    assert found["verdict"] == "identified"
    surv = etale.survivors("A1", 10)
    assert sum(len(g["entries"]) for g in surv["groups"]) == 6


def test_sweep_and_verify(catalog):
    report = etale.sweep("A1", 1, 30, solve=False)
    assert report["identified"] == [10, 28]
    check = etale.verify_catalog(catalog)
    assert check["ok"] and len(check["entries"]) == 11
