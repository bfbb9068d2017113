"""Signature of the invariant hermitian form via the compact-subgroup
dimension formula.

For a dominant integral highest weight lam, the form on the irreducible
exists exactly when the Cartan involution maps lam into its own Weyl orbit.
When it does, the signature equals the absolute value of a signed sum of
compact-subgroup Weyl dimensions, one term for every Weyl element that
commutes with the involution and moves lam+rho into the strict compact
chamber, divided by 2^r with 2r = dim s - dim a.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateRestriction,
    InexactDivision,
    NonDominant,
    NonIntegral,
    NonIntegralDecomposition,
)
from .realform import RealForm
from .rootsys import Vector, WeylElement, vadd, vsub, weyl_dimension

Q = Fraction


@dataclass(frozen=True)
class SignatureTerm:
    """One contribution: Weyl element, compact highest weight, lowering
    coefficients of lam - w(lam), sign, and compact Weyl dimension."""

    element: WeylElement
    mu: Vector
    lowering: tuple[int, ...]
    sign: int
    dim: int


@dataclass(frozen=True)
class SignatureReport:
    exists_form: bool
    dim_v: int
    terms: tuple[SignatureTerm, ...]
    signed_sum: int
    divisor: int
    signature: int | None
    inertia: tuple[int, int] | None


def _validate_weight(rf: RealForm, lam: Vector) -> None:
    rs = rf.root_system
    if not rs.is_dominant(lam):
        raise NonDominant(f"highest weight {lam} is not dominant")
    if not rs.is_integral(lam):
        raise NonIntegral(f"highest weight {lam} is not integral")


def exists_invariant_form(rf: RealForm, lam: Vector) -> bool:
    """True when theta(lam) lies in the Weyl orbit of lam, which is exactly
    when the irreducible carries an invariant hermitian form."""
    _validate_weight(rf, lam)
    return rf.root_system.dominant_vector(rf.theta(lam)) == lam


def contributing_weyl_elements(rf: RealForm, lam: Vector) -> list[WeylElement]:
    """Weyl elements commuting with theta whose action takes lam+rho strictly
    into the compact chamber after restriction, sorted by word length then
    word.  A restriction landing on a chamber wall is rejected loudly."""
    rs = rf.root_system
    shifted = vadd(lam, rs.rho)
    out = []
    for w in rs.weyl_elements():
        if not rf.commutes_with_theta(w):
            continue
        verdict = rf.compact_dominance(rf.restricted(w.apply(shifted)))
        if verdict == 0:
            raise DegenerateRestriction(
                f"restriction of {w.word_str()}(lam+rho) lies on a compact chamber wall"
            )
        if verdict == 1:
            out.append(w)
    out.sort(key=lambda w: (w.length, w.word))
    return out


def lowering_coefficients(rf: RealForm, lam: Vector, w: WeylElement) -> tuple[int, ...]:
    """Coefficients n with lam - w(lam) = sum n_i alpha_i, which must be
    nonnegative integers."""
    diff = vsub(lam, w.apply(lam))
    if any(c.denominator != 1 or c < 0 for c in diff):
        raise NonIntegralDecomposition(
            f"lam - w(lam) = {diff} is not a nonnegative integer root combination"
        )
    return tuple(int(c) for c in diff)


def term_sign(rf: RealForm, lam: Vector, w: WeylElement) -> int:
    """Product over painted nodes of (-1)^(coefficient of lam - w(lam))."""
    coeffs = lowering_coefficients(rf, lam, w)
    parity = sum(coeffs[i] for i in rf.diagram.painting)
    return -1 if parity % 2 else 1


def compact_type_dimension(rf: RealForm, lam: Vector, w: WeylElement) -> tuple[Vector, int]:
    """Highest weight and dimension of the compact-subgroup type attached to w:
    the restriction of w(lam+rho) shifted down by the compact half-sum."""
    rs = rf.root_system
    mu = vsub(rf.restricted(w.apply(vadd(lam, rs.rho))), rf.rho_compact)
    dim = weyl_dimension(rf.k_positive_roots, rs.form, mu)
    return mu, dim


def signature(rf: RealForm, lam: Vector) -> SignatureReport:
    """Full signature report for the irreducible with highest weight lam."""
    _validate_weight(rf, lam)
    rs = rf.root_system
    dim_v = rs.weyl_dimension(lam)
    if not exists_invariant_form(rf, lam):
        return SignatureReport(False, dim_v, (), 0, 2**rf.r, None, None)

    terms = []
    total = 0
    for w in contributing_weyl_elements(rf, lam):
        lowering = lowering_coefficients(rf, lam, w)
        sign = term_sign(rf, lam, w)
        mu, dim = compact_type_dimension(rf, lam, w)
        terms.append(SignatureTerm(w, mu, lowering, sign, dim))
        total += sign * dim
    divisor = 2**rf.r
    if abs(total) % divisor:
        raise InexactDivision(f"signed sum {total} is not divisible by {divisor}")
    sig = abs(total) // divisor
    if sig > dim_v or (dim_v - sig) % 2:
        raise InexactDivision(
            f"signature {sig} incompatible with dimension {dim_v}"
        )
    p = (dim_v + sig) // 2
    return SignatureReport(True, dim_v, tuple(terms), total, divisor, sig, (p, dim_v - p))
