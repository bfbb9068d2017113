"""Root systems, Weyl groups, and weight combinatorics over exact rationals.

Weights live in the simple-root basis: a weight is a tuple of Fraction
coordinates c with v = sum c_i alpha_i.  The Cartan matrix convention is
cartan[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j), so the pairing of v
with the j-th coroot is the dot product of the coordinates with column j.
The bilinear form is normalized so long roots in each simple component have
squared length 2.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ConsistencyError,
    GroupTooLarge,
    InvalidType,
    NonDominant,
    NonIntegral,
    RepTooLarge,
    UnsupportedRank,
)
from .linalg import invert

Q = Fraction
Vector = tuple[Q, ...]

RANK_CAP = 8
WEYL_CAP = 1_000_000
DIM_CAP = 100_000

_FAMILY_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_TYPE_RE = re.compile(r"^([A-G])(\d+)$")


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Q, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vzero(n: int) -> Vector:
    return (Q(0),) * n


@dataclass(frozen=True)
class CartanType:
    """A finite Cartan type, possibly a sum of simple components."""

    components: tuple[tuple[str, int], ...]

    @staticmethod
    def parse(text: str) -> "CartanType":
        parts = [p.strip() for p in text.replace("x", "+").split("+")]
        comps = []
        for part in parts:
            m = _TYPE_RE.match(part)
            if not m:
                raise InvalidType(f"cannot parse Cartan type {part!r}")
            family, n = m.group(1), int(m.group(2))
            lo, hi = _FAMILY_RANGES[family]
            if n < lo or (hi is not None and n > hi):
                raise InvalidType(f"{family}{n} is outside the supported range for family {family}")
            comps.append((family, n))
        if not comps:
            raise InvalidType("empty Cartan type")
        return CartanType(tuple(comps))

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.components)

    def __str__(self) -> str:
        return "+".join(f"{f}{n}" for f, n in self.components)


def _component_cartan(family: str, n: int) -> list[list[int]]:
    """Cartan matrix of one simple component, Bourbaki numbering."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        a[i][j] = cij
        a[j][i] = cji

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if family == "B":
            # alpha_n short: cartan[n-1][n] = -2
            link(n - 2, n - 1, -2, -1)
        if family == "C":
            # alpha_n long: cartan[n][n-1] = -2
            link(n - 2, n - 1, -1, -2)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for u, v in zip(chain, chain[1:]):
            link(u, v)
        link(1, 3)
    elif family == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif family == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -1, -3)
    return a


def cartan_matrix(ct: CartanType) -> list[list[int]]:
    n = ct.rank
    full = [[0] * n for _ in range(n)]
    offset = 0
    for family, m in ct.components:
        block = _component_cartan(family, m)
        for i in range(m):
            for j in range(m):
                full[offset + i][offset + j] = block[i][j]
        offset += m
    return full


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> list[Q]:
    """Half squared lengths d_i with long roots normalized to d = 1 per component."""
    n = len(cartan)
    d: list[Q | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Q(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[j][i] / cartan[i][j]
                    component.append(j)
                    stack.append(j)
        top = max(d[i] for i in component)
        for i in component:
            d[i] = d[i] / top
    return [x for x in d]  # type: ignore[misc]


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: reduced word and integer matrix on root coordinates."""

    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def apply(self, v: Vector) -> Vector:
        return tuple(
            sum((Q(row[j]) * v[j] for j in range(len(v)) if row[j]), Q(0))
            for row in self.matrix
        )

    def word_str(self) -> str:
        if not self.word:
            return "id"
        return "*".join(f"s{i + 1}" for i in self.word)


class RootSystem:
    """Immutable root-system data for one Cartan type."""

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.cartan = tuple(tuple(row) for row in cartan_matrix(cartan_type))
        d = _symmetrizer(self.cartan)
        self.form = tuple(
            tuple(d[j] * self.cartan[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )
        self.simple_roots = tuple(
            tuple(Q(int(i == j)) for j in range(self.rank)) for i in range(self.rank)
        )
        self.positive_roots = self._closure()
        self.rho = vscale(Q(1, 2), _vsum(self.positive_roots, self.rank))
        inv = invert([[Q(x) for x in row] for row in self.cartan])
        self.fundamental_weights = tuple(tuple(inv[i][k] for k in range(self.rank)) for i in range(self.rank))
        self._reflections = tuple(self._reflection_matrix(i) for i in range(self.rank))
        self._weyl_cache: list[WeylElement] | None = None

    # -- basic pairings -------------------------------------------------

    def inner(self, u: Vector, v: Vector) -> Q:
        total = Q(0)
        for i, ui in enumerate(u):
            if ui:
                row = self.form[i]
                total += ui * sum((row[j] * v[j] for j in range(self.rank) if v[j]), Q(0))
        return total

    def pairing(self, v: Vector, i: int) -> Q:
        """Pairing of v with the i-th simple coroot."""
        return sum((v[j] * self.cartan[j][i] for j in range(self.rank) if v[j]), Q(0))

    def coroot_pairing(self, v: Vector, root: Vector) -> Q:
        return 2 * self.inner(v, root) / self.inner(root, root)

    def reflect(self, i: int, v: Vector) -> Vector:
        c = self.pairing(v, i)
        if not c:
            return v
        out = list(v)
        out[i] -= c
        return tuple(out)

    def is_dominant(self, v: Vector) -> bool:
        return all(self.pairing(v, i) >= 0 for i in range(self.rank))

    def is_integral(self, v: Vector) -> bool:
        return all(self.pairing(v, i).denominator == 1 for i in range(self.rank))

    # -- roots ----------------------------------------------------------

    def _closure(self) -> tuple[Vector, ...]:
        roots: set[Vector] = set(self.simple_roots)
        level = sorted(self.simple_roots)
        out: list[Vector] = list(level)
        while level:
            nxt: set[Vector] = set()
            for r in level:
                for i in range(self.rank):
                    alpha = self.simple_roots[i]
                    q = 0
                    probe = vsub(r, alpha)
                    while probe in roots:
                        q += 1
                        probe = vsub(probe, alpha)
                    if q - self.pairing(r, i) >= 1:
                        cand = vadd(r, alpha)
                        if cand not in roots:
                            nxt.add(cand)
            level = sorted(nxt)
            roots.update(nxt)
            out.extend(level)
        return tuple(out)

    def height(self, root: Vector) -> int:
        total = sum(root)
        if total.denominator != 1:
            raise ConsistencyError("root height is not an integer")
        return int(total)

    def highest_root(self) -> Vector:
        if len(self.cartan_type.components) != 1:
            raise InvalidType("adjoint weight is defined only for a single simple component")
        return max(self.positive_roots, key=lambda r: (self.height(r), r))

    # -- Weyl group -----------------------------------------------------

    def _reflection_matrix(self, i: int) -> tuple[tuple[int, ...], ...]:
        rows = []
        for k in range(self.rank):
            if k != i:
                rows.append(tuple(int(k == j) for j in range(self.rank)))
            else:
                rows.append(tuple(int(i == j) - self.cartan[j][i] for j in range(self.rank)))
        return tuple(rows)

    def weyl_order(self) -> int:
        orders = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}
        total = 1
        for family, n in self.cartan_type.components:
            if family == "A":
                total *= math.factorial(n + 1)
            elif family in ("B", "C"):
                total *= 2**n * math.factorial(n)
            elif family == "D":
                total *= 2 ** (n - 1) * math.factorial(n)
            else:
                total *= orders[f"{family}{n}"]
        return total

    def weyl_elements(self, cap: int = WEYL_CAP) -> list[WeylElement]:
        """All Weyl elements with reduced words, identity first, by word length.

        Breadth-first closure over right multiplication by simple reflections;
        the first word reaching a matrix is reduced because Cayley-graph
        distance equals Coxeter length.
        """
        order = self.weyl_order()
        if order > cap:
            raise GroupTooLarge(f"Weyl group order {order} exceeds cap {cap}")
        if self._weyl_cache is not None and len(self._weyl_cache) == order:
            return self._weyl_cache
        ident = tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))
        seen = {ident}
        out = [WeylElement((), ident)]
        frontier = out
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    mat = _int_mat_mul(w.matrix, self._reflections[i])
                    if mat not in seen:
                        seen.add(mat)
                        nxt.append(WeylElement(w.word + (i,), mat))
            out.extend(nxt)
            frontier = nxt
        if len(out) != order:
            raise ConsistencyError(
                f"Weyl enumeration produced {len(out)} elements, classification says {order}"
            )
        self._weyl_cache = out
        return out

    def element_from_word(self, word: Iterable[int]) -> WeylElement:
        mat = tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))
        word = tuple(word)
        for i in word:
            mat = _int_mat_mul(mat, self._reflections[i])
        return WeylElement(word, mat)

    def dominant_representative(self, v: Vector) -> tuple[Vector, WeylElement]:
        """The dominant chamber representative of v and one w with w(v) dominant."""
        current = v
        applied: list[int] = []
        limit = 4 * len(self.positive_roots) + 8
        for _ in range(limit):
            i = next((i for i in range(self.rank) if self.pairing(current, i) < 0), None)
            if i is None:
                return current, self.element_from_word(reversed(applied))
            current = self.reflect(i, current)
            applied.append(i)
        raise ConsistencyError("dominance descent did not terminate")

    def dominant_vector(self, v: Vector) -> Vector:
        """Dominant representative only, skipping Weyl element bookkeeping."""
        current = v
        limit = 4 * len(self.positive_roots) + 8
        for _ in range(limit):
            i = next((i for i in range(self.rank) if self.pairing(current, i) < 0), None)
            if i is None:
                return current
            current = self.reflect(i, current)
        raise ConsistencyError("dominance descent did not terminate")

    # -- weights --------------------------------------------------------

    def weight_from_fundamental(self, coeffs: Sequence[int | Q]) -> Vector:
        out = vzero(self.rank)
        for i, c in enumerate(coeffs):
            if c:
                out = vadd(out, vscale(Q(c), self.fundamental_weights[i]))
        return out

    def fundamental_coords(self, v: Vector) -> Vector:
        return tuple(self.pairing(v, i) for i in range(self.rank))

    def weyl_dimension(self, mu: Vector) -> int:
        return weyl_dimension(self.positive_roots, self.form, mu)


def _vsum(vectors: Iterable[Vector], rank: int) -> Vector:
    total = vzero(rank)
    for v in vectors:
        total = vadd(total, v)
    return total


def _int_mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def build_root_system(ct: CartanType | str, rank_cap: int = RANK_CAP) -> RootSystem:
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    if ct.rank > rank_cap:
        raise UnsupportedRank(f"total rank {ct.rank} exceeds cap {rank_cap}")
    return RootSystem(ct)


def form_inner(form: Sequence[Sequence[Q]], u: Vector, v: Vector) -> Q:
    total = Q(0)
    for i, ui in enumerate(u):
        if ui:
            row = form[i]
            total += ui * sum((row[j] * v[j] for j in range(len(v)) if v[j]), Q(0))
    return total


def weyl_dimension(positive_roots: Sequence[Vector], form: Sequence[Sequence[Q]], mu: Vector) -> int:
    """Weyl dimension of the irreducible with highest weight mu for the given
    positive system; the product must come out an exact positive integer."""
    rank = len(mu)
    rho_sys = vscale(Q(1, 2), _vsum(positive_roots, rank))
    num = Q(1)
    den = Q(1)
    for alpha in positive_roots:
        aa = form_inner(form, alpha, alpha)
        if 2 * form_inner(form, mu, alpha) / aa < 0:
            raise NonDominant(f"weight {mu} is not dominant for the given positive system")
        rho_a = form_inner(form, rho_sys, alpha)
        if rho_a <= 0:
            raise ConsistencyError("half-sum pairs nonpositively with a positive root")
        num *= form_inner(form, vadd(mu, rho_sys), alpha)
        den *= rho_a
    value = num / den
    if value.denominator != 1 or value <= 0:
        raise NonIntegral(f"Weyl dimension product {value} is not a positive integer")
    return int(value)


def weight_multiplicities(rs: RootSystem, lam: Vector, dim_cap: int = DIM_CAP) -> dict[Vector, int]:
    """Weight multiplicities of the irreducible with highest weight lam by the
    Freudenthal recursion, all arithmetic exact.

    The support is generated downward level by level; membership of a
    candidate is decided through its dominant representative (a dominant
    weight belongs to the support exactly when it sits under lam in the root
    lattice).  Multiplicities are then filled in by increasing depth, so every
    weight upward along a root string is already known.
    """
    if not rs.is_dominant(lam):
        raise NonDominant(f"highest weight {lam} is not dominant")
    if not rs.is_integral(lam):
        raise NonIntegral(f"highest weight {lam} is not integral")
    dim = rs.weyl_dimension(lam)
    if dim > dim_cap:
        raise RepTooLarge(f"dimension {dim} exceeds cap {dim_cap}")

    def member(v: Vector) -> bool:
        return all(c >= 0 for c in vsub(lam, rs.dominant_vector(v)))

    levels: list[list[Vector]] = [[lam]]
    seen = {lam}
    while levels[-1]:
        nxt = []
        for v in levels[-1]:
            for alpha in rs.simple_roots:
                cand = vsub(v, alpha)
                if cand not in seen and member(cand):
                    seen.add(cand)
                    nxt.append(cand)
        levels.append(sorted(nxt))
    levels.pop()

    top_norm = rs.inner(vadd(lam, rs.rho), vadd(lam, rs.rho))
    mult: dict[Vector, int] = {lam: 1}
    for level in levels[1:]:
        for mu in level:
            acc = Q(0)
            for alpha in rs.positive_roots:
                nu = vadd(mu, alpha)
                while nu in mult:
                    acc += mult[nu] * rs.inner(nu, alpha)
                    nu = vadd(nu, alpha)
            denom = top_norm - rs.inner(vadd(mu, rs.rho), vadd(mu, rs.rho))
            if denom <= 0:
                raise ConsistencyError("Freudenthal denominator is not positive")
            value = 2 * acc / denom
            if value.denominator != 1 or value <= 0:
                raise ConsistencyError(f"Freudenthal multiplicity {value} at {mu} is not a positive integer")
            mult[mu] = int(value)
    if sum(mult.values()) != dim:
        raise ConsistencyError("multiplicities do not sum to the Weyl dimension")
    return mult


def dominant_weights_up_to(rs: RootSystem, dim_cap: int) -> list[tuple[tuple[int, ...], Vector, int]]:
    """All dominant integral weights of dimension <= dim_cap, as
    (fundamental coefficients, root-basis coordinates, dimension), in
    lexicographic coefficient order.  Pruning relies on the Weyl dimension
    being monotone in every fundamental coefficient."""
    out: list[tuple[tuple[int, ...], Vector, int]] = []
    n = rs.rank

    def rec(prefix: tuple[int, ...]) -> None:
        pos = len(prefix)
        if pos == n:
            v = rs.weight_from_fundamental(prefix)
            out.append((prefix, v, rs.weyl_dimension(v)))
            return
        m = 0
        while True:
            trial = prefix + (m,) + (0,) * (n - pos - 1)
            if rs.weyl_dimension(rs.weight_from_fundamental(trial)) > dim_cap:
                break
            rec(prefix + (m,))
            m += 1

    rec(())
    return out
