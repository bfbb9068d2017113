"""Shared test utilities.

The key piece is a third, fully independent signature path used by the
adjoint-representation cross-checks: build an explicit real matrix Lie
algebra basis, form the Gram matrix of the trace form tr(XY), and read
off its inertia with exact symmetric pivoting.  No root systems, weights,
or intertwiners are involved.
"""
from __future__ import annotations

from fractions import Fraction

from hermsig.linalg import symmetric_pivot_signs

Q = Fraction

Matrix = list[list[Q]]


def _zero(n: int) -> Matrix:
    return [[Q(0)] * n for _ in range(n)]


def _unit(n: int, i: int, j: int) -> Matrix:
    m = _zero(n)
    m[i][j] = Q(1)
    return m


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = _zero(n)
    for i in range(n):
        for k in range(n):
            if a[i][k]:
                for j in range(n):
                    if b[k][j]:
                        out[i][j] += a[i][k] * b[k][j]
    return out


def _trace(m: Matrix) -> Q:
    return sum((m[i][i] for i in range(len(m))), Q(0))


def sl_n_real_basis(n: int) -> list[Matrix]:
    """Basis of traceless real n x n matrices: off-diagonal units and
    simple-coroot diagonals."""
    basis = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    for k in range(n - 1):
        m = _zero(n)
        m[k][k] = Q(1)
        m[k + 1][k + 1] = Q(-1)
        basis.append(m)
    return basis


def su_p_q_basis(p: int, q: int) -> list[tuple[Matrix, Matrix]]:
    """Basis of the real Lie algebra of matrices X with X* J = -J X for
    J = diag(1_p, -1_q), trace zero.  Elements are (real, imaginary)
    rational matrix pairs."""
    n = p + q
    eta = [Q(1)] * p + [Q(-1)] * q
    basis: list[tuple[Matrix, Matrix]] = []
    for j in range(n):
        for k in range(j + 1, n):
            re = _zero(n)
            re[j][k] = Q(1)
            re[k][j] = -eta[j] * eta[k]
            basis.append((re, _zero(n)))
            im = _zero(n)
            im[j][k] = Q(1)
            im[k][j] = eta[j] * eta[k]
            basis.append((_zero(n), im))
    for k in range(n - 1):
        im = _zero(n)
        im[k][k] = Q(1)
        im[k + 1][k + 1] = Q(-1)
        basis.append((_zero(n), im))
    return basis


def trace_form_signature_real(basis: list[Matrix]) -> int:
    """|n_plus - n_minus| for the form (X, Y) -> tr(XY) on a real basis."""
    d = len(basis)
    gram = [[_trace(_mat_mul(basis[a], basis[b])) for b in range(d)] for a in range(d)]
    pos, neg, zero = symmetric_pivot_signs(gram)
    assert zero == 0, "trace form must be nondegenerate"
    return abs(pos - neg)


def trace_form_signature_complex(basis: list[tuple[Matrix, Matrix]]) -> int:
    """Same for a basis of (real, imaginary) pairs; tr(XY) must be real."""
    d = len(basis)
    gram = []
    for a in range(d):
        row = []
        ra, ia = basis[a]
        for b in range(d):
            rb, ib = basis[b]
            re = _trace(_mat_mul(ra, rb)) - _trace(_mat_mul(ia, ib))
            im = _trace(_mat_mul(ra, ib)) + _trace(_mat_mul(ia, rb))
            assert im == 0, "trace form must be real on the real subalgebra"
            row.append(re)
        gram.append(row)
    pos, neg, zero = symmetric_pivot_signs(gram)
    assert zero == 0, "trace form must be nondegenerate"
    return abs(pos - neg)
