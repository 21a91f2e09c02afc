"""Verdicts, the criterion/brute-force equivalence, cross-validation."""

import pytest

from qcover import (
    Cycle,
    NotQuasiTreeError,
    brute_force_verdict,
    cross_validate,
    decompose_cover,
    find_special_odd_cycle,
    indecomposable_covers,
    is_k_cover,
    is_standard_graded,
    new_complex,
    witness_cover_from_cycle,
)
from qcover.families import delta_n, double_fan


def test_delta_negative_verdict_with_both_witnesses():
    v = is_standard_graded(delta_n(3))
    assert not v.standard_graded
    assert v.method == "criterion"
    assert v.bound_used is None
    assert v.cycle_witness == Cycle((1, 2, 3), (2, 4, 3))
    assert v.cover_witness.a == (1, 1, 1, 0, 0, 0)
    assert v.cover_witness.k == 2
    assert decompose_cover(delta_n(3), v.cover_witness.a, 2) is None


def test_fan_positive_verdict_is_exact():
    v = is_standard_graded(double_fan())
    assert v.standard_graded
    assert v.method == "criterion"
    assert v.bound_used is None
    assert v.cycle_witness is None and v.cover_witness is None


def test_single_facet_is_standard_graded():
    v = is_standard_graded(new_complex([{1, 2, 3}]))
    assert v.standard_graded


def test_criterion_rejects_non_quasi_trees():
    tri = new_complex([{1, 2}, {2, 3}, {1, 3}])
    with pytest.raises(NotQuasiTreeError):
        is_standard_graded(tri)
    disc = new_complex([{1, 2}, {3, 4}])
    with pytest.raises(NotQuasiTreeError):
        is_standard_graded(disc)


def test_brute_force_on_delta():
    v = brute_force_verdict(delta_n(3), 3)
    assert not v.standard_graded
    assert v.method == "brute_force"
    assert v.cover_witness.k == 2
    assert is_k_cover(delta_n(3), v.cover_witness.a, 2)


def test_brute_force_positive_records_bound():
    v = brute_force_verdict(double_fan(), 3)
    assert v.standard_graded
    assert v.bound_used == 3
    assert brute_force_verdict(new_complex([{1, 2}]), 2).standard_graded


def test_brute_force_handles_non_quasi_trees():
    tri = new_complex([{1, 2}, {2, 3}, {1, 3}])
    v = brute_force_verdict(tri, 2)
    assert not v.standard_graded
    assert v.cover_witness.a == (1, 1, 1)
    with pytest.raises(ValueError):
        brute_force_verdict(tri, 1)


def test_brute_force_accepts_disconnected_complexes():
    v = brute_force_verdict(new_complex([{1, 2}, {3, 4}]), 3)
    assert v.standard_graded
    assert v.bound_used == 3


def test_cross_validation_agrees_on_named_complexes():
    r = cross_validate(delta_n(3), 2)
    assert r.agree
    assert not r.criterion.standard_graded
    assert not r.brute_force.standard_graded
    r = cross_validate(double_fan(), 3)
    assert r.agree
    assert r.criterion.standard_graded
    r = cross_validate(delta_n(4), 2)
    assert r.agree
    assert not r.brute_force.standard_graded


def test_cross_validation_rejects_non_quasi_tree():
    with pytest.raises(NotQuasiTreeError):
        cross_validate(new_complex([{1, 2}, {2, 3}, {1, 3}]), 2)


def test_smd_sweep_is_consistent():
    r = cross_validate(delta_n(3), 2, sweep_smds=True)
    assert r.smd_sweep is not None
    assert len(r.smd_sweep) == 2 ** 4 - 1
    assert all(entry["consistent"] for entry in r.smd_sweep)
    full = [e for e in r.smd_sweep if len(e["facet_ids"]) == 4][0]
    assert full["has_special_odd_cycle"] and full["has_degree2_generator"]


def test_verdict_serialization_round_trip():
    v = is_standard_graded(delta_n(3))
    d = v.to_dict()
    assert d["standard_graded"] is False
    assert d["cycle_witness"]["vertices"] == [1, 2, 3]
    assert d["cover_witness"]["a"] == [1, 1, 1, 0, 0, 0]
    assert d["bound_used"] is None


def test_degree_two_equivalence_on_corpus(quasi_tree_corpus):
    """Criterion route and degree-2 enumeration must agree on every tree."""
    mismatches = []
    for cx in quasi_tree_corpus:
        has_cycle = find_special_odd_cycle(cx) is not None
        has_deg2 = bool(indecomposable_covers(cx, 2))
        if has_cycle != has_deg2:
            mismatches.append(cx)
    assert mismatches == []


def test_witness_coherence_on_corpus(quasi_tree_corpus):
    for cx in quasi_tree_corpus:
        v = is_standard_graded(cx)
        if v.standard_graded:
            assert v.cycle_witness is None and v.cover_witness is None
        else:
            assert v.cycle_witness is not None and v.cover_witness is not None
            assert v.cover_witness.k == 2
            assert is_k_cover(cx, v.cover_witness.a, 2)
            assert decompose_cover(cx, v.cover_witness.a, 2) is None
