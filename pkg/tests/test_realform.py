"""Real form layer: involutions, root classification, compact subsystem."""
from __future__ import annotations

from fractions import Fraction

import pytest

from hermsig.errors import InvalidInvolution, InvalidType, UnknownForm, UnsupportedRank
from hermsig.realform import (
    IMAGINARY_COMPACT,
    IMAGINARY_NONCOMPACT,
    COMPLEX,
    RealForm,
    VoganDiagram,
    preset_names,
    resolve_form,
)
from hermsig.rootsys import CartanType

Q = Fraction

# classical (dim k, dim s) for every built-in form
EXPECTED_DIMS = {
    "su(1,1)": (1, 2), "sl(2,R)": (1, 2),
    "su(2,1)": (4, 4), "sl(3,R)": (3, 5),
    "su(3,1)": (9, 6), "su(2,2)": (7, 8), "sl(4,R)": (6, 9), "su*(4)": (10, 5),
    "so(2,3)": (4, 6), "so(4,1)": (6, 4),
    "so(2,5)": (11, 10), "so(4,3)": (9, 12), "so(6,1)": (15, 6),
    "sp(1,2)": (13, 8), "sp(2,1)": (13, 8), "sp(3,R)": (9, 12),
    "g2(2)": (6, 8),
    "sl(2,C)": (3, 3),
    "so(7,1)": (21, 7),
}


def test_all_presets_have_expected_eigenspace_dims():
    assert set(preset_names()) == set(EXPECTED_DIMS)
    for name, (k, s) in EXPECTED_DIMS.items():
        rf = resolve_form(name)
        assert (rf.dim_k, rf.dim_s) == (k, s), name
        assert rf.dim_k + rf.dim_s == rf.dim_g


def test_dimension_ledger_identities():
    for name in preset_names():
        rf = resolve_form(name)
        assert rf.dim_t + rf.dim_a == rf.root_system.rank
        assert rf.dim_s - rf.dim_a == 2 * rf.r
        assert (rf.dim_s - rf.dim_a) % 2 == 0
        assert rf.spin_dim == 2 ** (rf.dim_s // 2)
        assert rf.spin_multiplicity == 2 ** (rf.dim_a // 2)
        assert rf.dim_t + 2 * len(rf.k_positive_roots) == rf.dim_k


def test_equal_rank_flags():
    equal = {n for n in preset_names() if resolve_form(n).equal_rank}
    assert equal == {
        "su(1,1)", "sl(2,R)", "su(2,1)", "su(3,1)", "su(2,2)",
        "so(2,3)", "so(4,1)", "so(2,5)", "so(4,3)", "so(6,1)",
        "sp(1,2)", "sp(2,1)", "sp(3,R)", "g2(2)",
    }


def test_compact_form_has_no_noncompact_roots():
    rf = resolve_form("compact(B3)")
    assert rf.root_counts[IMAGINARY_NONCOMPACT] == 0
    assert rf.root_counts[COMPLEX] == 0
    assert rf.dim_s == 0 and rf.r == 0
    assert rf.dim_k == rf.dim_g == 21


def test_root_classification_counts():
    rf = resolve_form("su(2,1)")
    assert rf.root_counts == {IMAGINARY_COMPACT: 2, IMAGINARY_NONCOMPACT: 4, COMPLEX: 0}
    rf = resolve_form("sl(3,R)")
    assert rf.root_counts == {IMAGINARY_COMPACT: 0, IMAGINARY_NONCOMPACT: 2, COMPLEX: 4}
    rf = resolve_form("su*(4)")
    assert rf.root_counts[IMAGINARY_COMPACT] == 4


def test_theta_action_and_restriction():
    rf = resolve_form("sl(3,R)")
    assert rf.theta((Q(1), Q(0))) == (Q(0), Q(1))
    assert rf.restricted((Q(1), Q(0))) == (Q(1, 2), Q(1, 2))
    rf = resolve_form("su(3,1)")
    v = (Q(3), Q(-1), Q(2))
    assert rf.theta(v) == v and rf.restricted(v) == v


def test_compact_subsystem_shapes():
    # su(3,1): k contains an A2 made of the first two simple roots
    rf = resolve_form("su(3,1)")
    assert len(rf.k_positive_roots) == 3
    assert set(rf.k_simple_roots) == {(Q(1), Q(0), Q(0)), (Q(0), Q(1), Q(0))}
    # sp(3,R): k = u(3), an A2 subsystem of 3 positive roots
    rf = resolve_form("sp(3,R)")
    assert len(rf.k_positive_roots) == 3
    # su*(4): k = sp(2), a rank-2 system with 4 positive roots
    rf = resolve_form("su*(4)")
    assert len(rf.k_positive_roots) == 4
    assert len(rf.k_simple_roots) == 2


def test_rho_compact_pairs_to_one():
    for name in ("su(3,1)", "sp(3,R)", "so(4,3)", "su*(4)", "so(7,1)", "g2(2)"):
        rf = resolve_form(name)
        for delta in rf.k_simple_roots:
            assert rf.root_system.coroot_pairing(rf.rho_compact, delta) == 1


def test_commuting_weyl_elements():
    rf = resolve_form("su(2,1)")  # equal rank: everything commutes
    elems = rf.root_system.weyl_elements()
    assert all(rf.commutes_with_theta(w) for w in elems)
    rf = resolve_form("sl(3,R)")  # flip: only id and the longest element
    commuting = [w for w in rf.root_system.weyl_elements() if rf.commutes_with_theta(w)]
    assert sorted(w.length for w in commuting) == [0, 3]


def test_vogan_diagram_validation():
    a3 = CartanType.parse("A3")
    with pytest.raises(InvalidInvolution):
        VoganDiagram(a3, (0, 0, 1), ())  # not a permutation
    with pytest.raises(InvalidInvolution):
        VoganDiagram(a3, (1, 2, 0), ())  # order three
    with pytest.raises(InvalidInvolution):
        VoganDiagram(a3, (1, 0, 2), ())  # breaks the Cartan matrix
    with pytest.raises(InvalidInvolution):
        VoganDiagram(a3, (2, 1, 0), (0,))  # painted node moved
    with pytest.raises(InvalidInvolution):
        VoganDiagram(a3, (0, 1, 2), (3,))  # painted node out of range
    with pytest.raises(InvalidInvolution):
        VoganDiagram(a3, (0, 1, 2), (2, 1))  # painting not sorted
    VoganDiagram(a3, (2, 1, 0), (1,))  # valid: the sl(4,R) diagram


def test_unknown_and_unsupported_forms():
    with pytest.raises(UnknownForm):
        resolve_form("so(5,5)")
    with pytest.raises(UnknownForm):
        resolve_form("")
    with pytest.raises(InvalidType):
        resolve_form("compact(E9)")
    with pytest.raises(UnsupportedRank):
        resolve_form("compact(A9)")


def test_compact_resolver_accepts_products():
    rf = resolve_form("compact(A1+A1)")
    assert rf.dim_g == 6 and rf.dim_s == 0


def test_describe_round_trip():
    d = resolve_form("sl(4,R)").describe()
    assert d["cartan_type"] == "A3"
    assert d["involution"] == [3, 2, 1]
    assert d["painting"] == [2]
    assert d["dims"] == {"g": 15, "k": 6, "s": 9, "t": 2, "a": 1}
    assert d["equal_rank"] is False
    assert d["r"] == 4


def test_presets_deterministic_order():
    assert preset_names() == sorted(preset_names())
