"""Quantum subgroup classification for affine Lie algebra fusion categories."""

import json
from fractions import Fraction

from . import _etale

__all__ = [
    "algebra_info",
    "candidates",
    "central_charge",
    "classify",
    "conformal_weight",
    "fusion",
    "galois_act",
    "level_weights",
    "s_matrix",
    "step1_levels",
    "step2_levels",
    "survivors",
    "sweep",
    "thresholds",
    "verify_catalog",
]

algebra_info = _etale.algebra_info
level_weights = _etale.level_weights
fusion = _etale.fusion
galois_act = _etale.galois_act
step1_levels = _etale.step1_levels
step2_levels = _etale.step2_levels


def _weights(ws):
    return [tuple(w) for w in ws]


def conformal_weight(algebra, level, weight):
    return Fraction(*_etale.conformal_weight(algebra, level, list(weight)))


def central_charge(algebra, level):
    return Fraction(*_etale.central_charge(algebra, level))


def candidates(algebra, level, with_h1=False):
    return _weights(_etale.candidates(algebra, level, with_h1))


def s_matrix(algebra, level):
    """Simples (unshifted, lexicographic) and the S-matrix as a complex array."""
    simples, s = _etale.s_matrix(algebra, level)
    return _weights(simples), s


def thresholds(algebra):
    return json.loads(_etale.thresholds_json(algebra))


def classify(algebra, level, jgroup="auto", probe_budget=5000, cache_dir=""):
    return json.loads(_etale.classify_json(algebra, level, str(jgroup), probe_budget, cache_dir))


def survivors(algebra, level):
    return json.loads(_etale.survivors_json(algebra, level))


def sweep(algebra, start, stop, solve=True, jobs=1, cache_dir=""):
    return json.loads(_etale.sweep_json(algebra, start, stop, solve, jobs, cache_dir))


def verify_catalog(path):
    return json.loads(_etale.verify_catalog_json(str(path)))
