"""Independent brute-force checks of the signature formula.

Two oracles, deliberately on different routes from the formula:

* weight_trace: for equal-rank forms the involution acts on each weight
  space by a sign read off the painted coordinates of lam - mu, so the
  signature is the absolute value of a signed sum of weight multiplicities.

* an explicit matrix construction: the irreducible is realized by exact
  rational matrices (lowering monomials modulo the radical of the
  contravariant form), the involution is lifted to an intertwiner T
  normalized to +1 on the highest weight vector, and the signature is
  |trace T|.  Every structural identity is verified exactly during
  construction; any failure raises instead of returning.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import (
    ConsistencyError,
    IntertwinerInconsistent,
    NotEqualRank,
    RepTooLarge,
    ThetaMovesHighestWeight,
)
from .linalg import is_positive_definite, rank_profile, solve
from .realform import RealForm
from .rootsys import (
    DIM_CAP,
    RootSystem,
    Vector,
    vadd,
    vsub,
    weight_multiplicities,
)

Q = Fraction

REP_CAP = 200

Column = dict[int, Q]


def weight_trace(rf: RealForm, lam: Vector, dim_cap: int = DIM_CAP) -> int:
    """Signature from weight multiplicities; equal-rank forms only."""
    if not rf.equal_rank:
        raise NotEqualRank("weight-trace oracle needs the involution trivial on weights")
    rs = rf.root_system
    painted = rf.diagram.painting
    total = 0
    for mu, mult in weight_multiplicities(rs, lam, dim_cap).items():
        diff = vsub(lam, mu)
        parity = sum(int(diff[i]) for i in painted)
        total += -mult if parity % 2 else mult
    return abs(total)


class MatrixRepresentation:
    """Exact matrices for one irreducible: generator actions as sparse
    columns, diagonal Cartan action, and the contravariant Gram matrix."""

    def __init__(self, rs: RootSystem, lam: Vector, dim_cap: int = REP_CAP):
        self.root_system = rs
        self.highest_weight = lam
        expected = rs.weyl_dimension(lam)
        if expected > dim_cap:
            raise RepTooLarge(f"dimension {expected} exceeds cap {dim_cap}")
        mults = weight_multiplicities(rs, lam, dim_cap=max(expected, 1))

        self.weights: list[Vector] = [lam]
        self.parents: list[tuple[int, int] | None] = [None]
        rank = rs.rank
        self.e_cols: list[list[Column]] = [[{}] for _ in range(rank)]
        self.f_cols: list[list[Column]] = [[] for _ in range(rank)]
        self._blocks: dict[Vector, tuple[list[int], list[list[Q]]]] = {
            lam: ([0], [[Q(1)]])
        }
        self._block_pos: dict[int, int] = {0: 0}

        current = [0]
        while current:
            current = self._build_level(current, mults)
        if len(self.weights) != expected:
            raise ConsistencyError(
                f"constructed dimension {len(self.weights)} != Weyl dimension {expected}"
            )
        for wt, mult in mults.items():
            block = self._blocks.get(wt)
            if mult != (len(block[0]) if block else 0):
                raise ConsistencyError(f"multiplicity mismatch at weight {wt}")
        self.dimension = len(self.weights)
        self._verify()

    # -- construction ----------------------------------------------------

    def _shapovalov(self, j: int, b: int, k: int, b2: int) -> Q:
        """Contravariant pairing <f_j b, f_k b2> by lowering through e_j."""
        rs = self.root_system
        vec = self.apply_f(k, self.e_cols[j][b2])
        if j == k:
            total = rs.pairing(self.weights[b2], j) * self.gram_entry(b, b2)
        else:
            total = Q(0)
        for m, coeff in vec.items():
            total += coeff * self.gram_entry(b, m)
        return total

    def _build_level(self, current: list[int], mults) -> list[int]:
        rs = self.root_system
        groups: dict[Vector, list[tuple[int, int]]] = {}
        for b in current:
            for j in range(rs.rank):
                wt = vsub(self.weights[b], rs.simple_roots[j])
                groups.setdefault(wt, []).append((j, b))
        new_level: list[int] = []
        for wt in sorted(groups):
            cands = groups[wt]
            n = len(cands)
            gram = [[Q(0)] * n for _ in range(n)]
            for a in range(n):
                for c in range(a, n):
                    val = self._shapovalov(*cands[a], *cands[c])
                    gram[a][c] = val
                    gram[c][a] = val
            pivots = rank_profile(gram)
            if len(pivots) != mults.get(wt, 0):
                raise ConsistencyError(
                    f"Gram rank {len(pivots)} != multiplicity {mults.get(wt, 0)} at {wt}"
                )
            block = [[gram[a][c] for c in pivots] for a in pivots]
            if block and not is_positive_definite(block):
                raise ConsistencyError(f"Gram block at {wt} is not positive definite")
            base = len(self.weights)
            indices = list(range(base, base + len(pivots)))
            for pos, p in enumerate(pivots):
                j, b = cands[p]
                self.weights.append(wt)
                self.parents.append((b, j))
                self._block_pos[base + pos] = pos
            if indices:
                self._blocks[wt] = (indices, block)
            new_level.extend(indices)

            for c, (j, b) in enumerate(cands):
                while len(self.f_cols[j]) <= b:
                    self.f_cols[j].append({})
                if pivots:
                    rhs = [gram[p][c] for p in pivots]
                    coeffs = solve(block, rhs)
                    self.f_cols[j][b] = {
                        idx: coeff for idx, coeff in zip(indices, coeffs) if coeff
                    }
                else:
                    self.f_cols[j][b] = {}

            for pos, p in enumerate(pivots):
                j, b = cands[p]
                for i in range(rs.rank):
                    vec = self.apply_f(j, self.e_cols[i][b])
                    if i == j:
                        c0 = rs.pairing(self.weights[b], i)
                        if c0:
                            vec[b] = vec.get(b, Q(0)) + c0
                            if not vec[b]:
                                del vec[b]
                    self.e_cols[i].append(vec)
        # keep f column lists aligned with the basis
        for j in range(rs.rank):
            while len(self.f_cols[j]) < len(self.weights):
                self.f_cols[j].append({})
        return new_level

    # -- sparse operator helpers ----------------------------------------

    def apply_f(self, j: int, vec: Column) -> Column:
        out: Column = {}
        for b, coeff in vec.items():
            for idx, val in self.f_cols[j][b].items():
                out[idx] = out.get(idx, Q(0)) + coeff * val
        return {k: v for k, v in out.items() if v}

    def apply_e(self, i: int, vec: Column) -> Column:
        out: Column = {}
        for b, coeff in vec.items():
            for idx, val in self.e_cols[i][b].items():
                out[idx] = out.get(idx, Q(0)) + coeff * val
        return {k: v for k, v in out.items() if v}

    def h_value(self, i: int, idx: int) -> Q:
        return self.root_system.pairing(self.weights[idx], i)

    def gram_entry(self, a: int, b: int) -> Q:
        if self.weights[a] != self.weights[b]:
            return Q(0)
        block = self._blocks[self.weights[a]][1]
        return block[self._block_pos[a]][self._block_pos[b]]

    def gram_apply(self, vec: Column) -> Column:
        """Pair a coordinate vector against the basis: (G vec) as a column."""
        out: Column = {}
        for b, coeff in vec.items():
            indices, block = self._blocks[self.weights[b]]
            row = self._block_pos[b]
            for pos, idx in enumerate(indices):
                val = coeff * block[pos][row]
                if val:
                    out[idx] = out.get(idx, Q(0)) + val
        return {k: v for k, v in out.items() if v}

    def weight_block(self, wt: Vector) -> list[int]:
        block = self._blocks.get(wt)
        return list(block[0]) if block else []

    def dense_matrix(self, cols: list[Column]) -> list[list[Q]]:
        n = self.dimension
        out = [[Q(0)] * n for _ in range(n)]
        for c, col in enumerate(cols):
            for r, v in col.items():
                out[r][c] = v
        return out

    # -- verification ----------------------------------------------------

    def _verify(self) -> None:
        rs = self.root_system
        rank = rs.rank
        dim = self.dimension
        for i in range(rank):
            for c in range(dim):
                up = vadd(self.weights[c], rs.simple_roots[i])
                for r in self.e_cols[i][c]:
                    if self.weights[r] != up:
                        raise ConsistencyError("raising operator breaks weight grading")
                down = vsub(self.weights[c], rs.simple_roots[i])
                for r in self.f_cols[i][c]:
                    if self.weights[r] != down:
                        raise ConsistencyError("lowering operator breaks weight grading")
        for i in range(rank):
            for j in range(rank):
                for c in range(dim):
                    lhs = self.apply_e(i, self.f_cols[j][c])
                    rhs = self.apply_f(j, self.e_cols[i][c])
                    if i == j:
                        hv = self.h_value(i, c)
                        if hv:
                            rhs[c] = rhs.get(c, Q(0)) + hv
                    if lhs != {k: v for k, v in rhs.items() if v}:
                        raise ConsistencyError(f"[e_{i}, f_{j}] identity fails at column {c}")
        for i in range(rank):
            for j in range(rank):
                if i == j:
                    continue
                steps = 1 - rs.cartan[j][i]
                for cols in (self.e_cols, self.f_cols):
                    ad = [dict(col) for col in cols[j]]
                    for _ in range(steps):
                        ad = self._commutator(cols[i], ad)
                    if any(ad_col for ad_col in ad):
                        raise ConsistencyError(f"Serre relation fails for pair ({i}, {j})")
        for i in range(rank):
            for c in range(dim):
                lhs = self.gram_apply(self.f_cols[i][c])
                evec_pairings: Column = {}
                for r in self.weight_block(vsub(self.weights[c], rs.simple_roots[i])):
                    val = Q(0)
                    for k, coeff in self.e_cols[i][r].items():
                        val += coeff * self.gram_entry(k, c)
                    if val:
                        evec_pairings[r] = val
                if lhs != evec_pairings:
                    raise ConsistencyError(f"contravariance fails for generator {i}")

    def _commutator(self, a_cols: list[Column], b_cols: list[Column]) -> list[Column]:
        out = []
        for c in range(self.dimension):
            left: Column = {}
            for r, v in b_cols[c].items():
                for r2, v2 in a_cols[r].items():
                    left[r2] = left.get(r2, Q(0)) + v * v2
            for r, v in a_cols[c].items():
                for r2, v2 in b_cols[r].items():
                    left[r2] = left.get(r2, Q(0)) - v * v2
            out.append({k: v for k, v in left.items() if v})
        return out


def build_representation(rs: RootSystem, lam: Vector, dim_cap: int = REP_CAP) -> MatrixRepresentation:
    return MatrixRepresentation(rs, lam, dim_cap)


def build_intertwiner(rep: MatrixRepresentation, rf: RealForm) -> list[Column]:
    """Lift of the Cartan involution to the representation: T is determined by
    T(v_top) = v_top and T(f_j x) = s_j f_{p(j)} T(x) with s_j = -1 exactly on
    painted nodes.  All defining identities are then verified exactly."""
    lam = rep.highest_weight
    if rf.theta(lam) != lam:
        raise ThetaMovesHighestWeight(
            f"involution moves highest weight {lam}; no normalized intertwiner"
        )
    p = rf.diagram.involution
    painted = set(rf.diagram.painting)
    cols: list[Column] = [{} for _ in range(rep.dimension)]
    cols[0] = {0: Q(1)}
    for idx in range(1, rep.dimension):
        b, j = rep.parents[idx]
        vec = rep.apply_f(p[j], cols[b])
        if j in painted:
            vec = {k: -v for k, v in vec.items()}
        cols[idx] = vec

    def apply_t(vec: Column) -> Column:
        out: Column = {}
        for b, coeff in vec.items():
            for idx, val in cols[b].items():
                out[idx] = out.get(idx, Q(0)) + coeff * val
        return {k: v for k, v in out.items() if v}

    for c in range(rep.dimension):
        if apply_t(cols[c]) != {c: Q(1)}:
            raise IntertwinerInconsistent("T squared is not the identity")
    for i in range(rep.root_system.rank):
        s = Q(-1) if i in painted else Q(1)
        for c in range(rep.dimension):
            lhs = apply_t(rep.e_cols[i][c])
            rhs = {k: s * v for k, v in rep.apply_e(p[i], cols[c]).items()}
            if lhs != {k: v for k, v in rhs.items() if v}:
                raise IntertwinerInconsistent(f"T does not intertwine raising generator {i}")
            lhs = apply_t(rep.f_cols[i][c])
            rhs = {k: s * v for k, v in rep.apply_f(p[i], cols[c]).items()}
            if lhs != {k: v for k, v in rhs.items() if v}:
                raise IntertwinerInconsistent(f"T does not intertwine lowering generator {i}")
    gt = [rep.gram_apply(cols[c]) for c in range(rep.dimension)]
    for c in range(rep.dimension):
        for r, v in gt[c].items():
            if gt[r].get(c, Q(0)) != v:
                raise IntertwinerInconsistent("T is not self-adjoint for the contravariant form")
    return cols


def intertwiner_signature(cols: list[Column]) -> int:
    """|trace T|: T has eigenvalues +-1 with form-orthogonal eigenspaces, so
    the trace is the signature up to sign."""
    trace = sum((col.get(c, Q(0)) for c, col in enumerate(cols)), Q(0))
    if trace.denominator != 1:
        raise IntertwinerInconsistent(f"intertwiner trace {trace} is not an integer")
    return abs(int(trace))


def matrix_signature(rf: RealForm, lam: Vector, dim_cap: int = REP_CAP) -> int:
    """Oracle entry point: build the representation and return |trace T|."""
    rep = build_representation(rf.root_system, lam, dim_cap)
    return intertwiner_signature(build_intertwiner(rep, rf))
