"""Brute-force oracles: weight-trace and explicit matrix construction."""
from __future__ import annotations

from fractions import Fraction

import pytest

from hermsig.errors import (
    NotEqualRank,
    RepTooLarge,
    ThetaMovesHighestWeight,
)
from hermsig.linalg import is_positive_definite
from hermsig.oracle import (
    build_intertwiner,
    build_representation,
    intertwiner_signature,
    matrix_signature,
    weight_trace,
)
from hermsig.realform import resolve_form
from hermsig.rootsys import build_root_system, weight_multiplicities
from helpers import (
    sl_n_real_basis,
    su_p_q_basis,
    trace_form_signature_complex,
    trace_form_signature_real,
)

Q = Fraction


# -- weight-trace oracle -------------------------------------------------


def test_weight_trace_reference_values():
    assert weight_trace(resolve_form("su(3,1)"),
                        resolve_form("su(3,1)").root_system.highest_root()) == 3
    assert weight_trace(resolve_form("su(2,1)"),
                        resolve_form("su(2,1)").root_system.highest_root()) == 0
    assert weight_trace(resolve_form("su(1,1)"), (Q(1),)) == 1


def test_weight_trace_compact_gives_dimension():
    rf = resolve_form("compact(B2)")
    rs = rf.root_system
    for coeffs in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)]:
        lam = rs.weight_from_fundamental(coeffs)
        assert weight_trace(rf, lam) == rs.weyl_dimension(lam)


def test_weight_trace_requires_equal_rank():
    rf = resolve_form("sl(3,R)")
    with pytest.raises(NotEqualRank):
        weight_trace(rf, rf.root_system.highest_root())


# -- explicit representation ---------------------------------------------


def test_rank_one_adjoint_is_the_classical_triple():
    rs = build_root_system("A1")
    rep = build_representation(rs, (Q(1),))
    assert rep.dimension == 3
    assert rep.weights == [(Q(1),), (Q(0),), (Q(-1),)]
    assert [rep.h_value(0, c) for c in range(3)] == [2, 0, -2]
    # f chain v0 -> v1 -> v2 -> 0 with e recovering scaled vectors
    assert rep.f_cols[0][0] and rep.f_cols[0][1] and rep.f_cols[0][2] == {}
    assert rep.apply_e(0, rep.apply_f(0, {0: Q(1)})) == {0: Q(2)}


def test_dimensions_and_multiplicities_match():
    for name, coeffs in [("A2", (1, 1)), ("A3", (1, 0, 1)), ("B2", (0, 2)),
                         ("C3", (1, 0, 0)), ("G2", (1, 0))]:
        rs = build_root_system(name)
        lam = rs.weight_from_fundamental(coeffs)
        rep = build_representation(rs, lam)
        assert rep.dimension == rs.weyl_dimension(lam)
        mults = weight_multiplicities(rs, lam)
        for wt, m in mults.items():
            assert len(rep.weight_block(wt)) == m


def test_gram_blocks_positive_definite():
    rs = build_root_system("A2")
    rep = build_representation(rs, rs.highest_root())
    zero = (Q(0), Q(0))
    block_indices = rep.weight_block(zero)
    assert len(block_indices) == 2
    block = [[rep.gram_entry(a, b) for b in block_indices] for a in block_indices]
    assert is_positive_definite(block)
    cross = rep.gram_entry(0, block_indices[0])
    assert cross == 0  # different weights never pair


def test_rep_cap_is_enforced():
    rs = build_root_system("A3")
    with pytest.raises(RepTooLarge):
        build_representation(rs, rs.highest_root(), dim_cap=10)


def test_serre_and_bracket_identities_by_direct_composition():
    rs = build_root_system("G2")
    rep = build_representation(rs, rs.weight_from_fundamental((1, 0)))
    n = rep.dimension
    for i in range(2):
        for j in range(2):
            for c in range(n):
                lhs = rep.apply_e(i, rep.f_cols[j][c])
                rhs = rep.apply_f(j, rep.e_cols[i][c])
                if i == j:
                    hv = rep.h_value(i, c)
                    if hv:
                        rhs[c] = rhs.get(c, Q(0)) + hv
                        if not rhs[c]:
                            del rhs[c]
                assert lhs == rhs
    # (ad e_1)^{1 - a_21} e_2 = 0 with a_21 = -3: four nested commutators
    def commute(a, b):
        out = []
        for c in range(n):
            col = {}
            for r, v in b[c].items():
                for r2, v2 in a[r].items():
                    col[r2] = col.get(r2, Q(0)) + v * v2
            for r, v in a[c].items():
                for r2, v2 in b[r].items():
                    col[r2] = col.get(r2, Q(0)) - v * v2
            out.append({k: v for k, v in col.items() if v})
        return out

    ad = [dict(col) for col in rep.e_cols[1]]
    for _ in range(1 - rs.cartan[1][0]):
        ad = commute(rep.e_cols[0], ad)
    assert all(col == {} for col in ad)


# -- intertwiner ---------------------------------------------------------


def test_compact_intertwiner_is_identity():
    rf = resolve_form("compact(A2)")
    rep = build_representation(rf.root_system, rf.root_system.highest_root())
    cols = build_intertwiner(rep, rf)
    assert all(cols[c] == {c: Q(1)} for c in range(rep.dimension))
    assert intertwiner_signature(cols) == rep.dimension


def test_intertwiner_squares_to_identity_dense():
    rf = resolve_form("su(2,1)")
    rep = build_representation(rf.root_system, rf.root_system.highest_root())
    cols = build_intertwiner(rep, rf)
    square = [[Q(0)] * rep.dimension for _ in range(rep.dimension)]
    for c in range(rep.dimension):
        for k, v in cols[c].items():
            for r, v2 in cols[k].items():
                square[r][c] += v * v2
    for r in range(rep.dimension):
        for c in range(rep.dimension):
            assert square[r][c] == (1 if r == c else 0)


def test_matrix_oracle_reference_values():
    table = [("su(3,1)", 3), ("su(2,1)", 0), ("sl(3,R)", 2), ("sl(2,R)", 1),
             ("g2(2)", 2), ("su*(4)", 5), ("sl(4,R)", 3)]
    for name, expected in table:
        rf = resolve_form(name)
        assert matrix_signature(rf, rf.root_system.highest_root()) == expected, name


def test_intertwiner_requires_fixed_highest_weight():
    rf = resolve_form("sl(3,R)")
    rep = build_representation(rf.root_system,
                               rf.root_system.weight_from_fundamental((1, 0)))
    with pytest.raises(ThetaMovesHighestWeight):
        build_intertwiner(rep, rf)


def test_flip_intertwiner_on_product_type():
    rf = resolve_form("sl(2,C)")
    rs = rf.root_system
    assert matrix_signature(rf, rs.weight_from_fundamental((1, 1))) == 2
    assert matrix_signature(rf, rs.weight_from_fundamental((2, 2))) == 3
    with pytest.raises(ThetaMovesHighestWeight):
        matrix_signature(rf, rs.weight_from_fundamental((1, 0)))


# -- third path: trace form on explicit matrix algebras ------------------


def test_trace_form_path_special_linear():
    assert trace_form_signature_real(sl_n_real_basis(2)) == 1
    assert trace_form_signature_real(sl_n_real_basis(3)) == 2
    assert trace_form_signature_real(sl_n_real_basis(4)) == 3


def test_trace_form_path_special_unitary():
    assert trace_form_signature_complex(su_p_q_basis(1, 1)) == 1
    assert trace_form_signature_complex(su_p_q_basis(2, 1)) == 0
    assert trace_form_signature_complex(su_p_q_basis(2, 2)) == 1
    assert trace_form_signature_complex(su_p_q_basis(3, 1)) == 3


def test_adjoint_cross_check_three_paths():
    for name, real_basis in [("sl(2,R)", sl_n_real_basis(2)),
                             ("sl(3,R)", sl_n_real_basis(3)),
                             ("sl(4,R)", sl_n_real_basis(4))]:
        rf = resolve_form(name)
        lam = rf.root_system.highest_root()
        from hermsig.signature import signature
        formula = signature(rf, lam).signature
        oracle = matrix_signature(rf, lam)
        trace_path = trace_form_signature_real(real_basis)
        assert formula == oracle == trace_path, name
    for name, p, q in [("su(1,1)", 1, 1), ("su(2,1)", 2, 1),
                       ("su(2,2)", 2, 2), ("su(3,1)", 3, 1)]:
        rf = resolve_form(name)
        lam = rf.root_system.highest_root()
        from hermsig.signature import signature
        formula = signature(rf, lam).signature
        oracle = matrix_signature(rf, lam)
        trace_path = trace_form_signature_complex(su_p_q_basis(p, q))
        assert formula == oracle == trace_path, name
