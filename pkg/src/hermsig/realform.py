"""Real forms from Vogan diagrams.

A Vogan diagram is a Cartan-matrix involution (a diagram automorphism of
order at most two) plus a painting of involution-fixed nodes.  The Cartan
involution theta acts on weight coordinates by the node permutation; painted
nodes carry the sign -1 on their root vectors.  From this the module derives
the root classification (imaginary compact / imaginary noncompact / complex),
the root system of the maximal compact subgroup on the compact Cartan part,
and the dimension bookkeeping used by the signature formula.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .errors import (
    ConsistencyError,
    InvalidInvolution,
    NotARootSystem,
    UnexpectedRealRoot,
    UnknownForm,
)
from .rootsys import (
    CartanType,
    RootSystem,
    Vector,
    WeylElement,
    build_root_system,
    cartan_matrix,
    form_inner,
    vadd,
    vscale,
    vsub,
    vzero,
)

Q = Fraction

IMAGINARY_COMPACT = "imaginary-compact"
IMAGINARY_NONCOMPACT = "imaginary-noncompact"
COMPLEX = "complex"


@dataclass(frozen=True)
class VoganDiagram:
    """Cartan type, node involution (0-based image tuple), painted node set."""

    cartan_type: CartanType
    involution: tuple[int, ...]
    painting: tuple[int, ...]

    def __post_init__(self):
        rank = self.cartan_type.rank
        p = self.involution
        if sorted(p) != list(range(rank)):
            raise InvalidInvolution(f"involution {p} is not a permutation of 0..{rank - 1}")
        if any(p[p[i]] != i for i in range(rank)):
            raise InvalidInvolution("involution does not have order at most two")
        cartan = cartan_matrix(self.cartan_type)
        for i in range(rank):
            for j in range(rank):
                if cartan[p[i]][p[j]] != cartan[i][j]:
                    raise InvalidInvolution("involution does not preserve the Cartan matrix")
        if list(self.painting) != sorted(set(self.painting)):
            raise InvalidInvolution(f"painting {self.painting} must be sorted and duplicate-free")
        for i in self.painting:
            if not 0 <= i < rank:
                raise InvalidInvolution(f"painted node {i} out of range")
            if p[i] != i:
                raise InvalidInvolution(f"painted node {i} is moved by the involution")

    @staticmethod
    def identity(ct: CartanType, painting: tuple[int, ...] = ()) -> "VoganDiagram":
        return VoganDiagram(ct, tuple(range(ct.rank)), tuple(painting))


class RealForm:
    """Root-level data of a real form: theta action, root classification,
    compact subsystem, and dimension ledger."""

    def __init__(self, diagram: VoganDiagram, name: str | None = None):
        self.diagram = diagram
        self.name = name
        self.root_system = build_root_system(diagram.cartan_type)
        rs = self.root_system
        p = diagram.involution
        painted = set(diagram.painting)

        fixed = sum(1 for i in range(rs.rank) if p[i] == i)
        self.dim_t = (rs.rank + fixed) // 2
        self.dim_a = (rs.rank - fixed) // 2

        # Orbit pairs adjacent in the diagram flip the grading of every fixed
        # root containing them (the bracket of the two swapped root vectors
        # picks up a sign); one representative per such orbit.
        adjacent_reps = tuple(
            i for i in range(rs.rank) if p[i] > i and rs.cartan[i][p[i]] != 0
        )

        classification: dict[Vector, str] = {}
        for root in rs.positive_roots:
            troot = self.theta(root)
            if troot == root:
                parity = sum(int(root[i]) for i in painted) + sum(
                    int(root[i]) for i in adjacent_reps
                )
                label = IMAGINARY_NONCOMPACT if parity % 2 else IMAGINARY_COMPACT
            elif troot == vscale(Q(-1), root):
                raise UnexpectedRealRoot(
                    f"root {root} restricts to zero on the compact Cartan part"
                )
            else:
                label = COMPLEX
            classification[root] = label
            classification[vscale(Q(-1), root)] = label
        self.classification = classification

        n_ic = sum(1 for v in classification.values() if v == IMAGINARY_COMPACT)
        n_in = sum(1 for v in classification.values() if v == IMAGINARY_NONCOMPACT)
        n_cx = sum(1 for v in classification.values() if v == COMPLEX)
        if n_cx % 2:
            raise ConsistencyError("complex roots must come in theta pairs")
        self.dim_g = rs.rank + len(classification)
        self.dim_k = self.dim_t + n_ic + n_cx // 2
        self.dim_s = self.dim_a + n_in + n_cx // 2
        if self.dim_k + self.dim_s != self.dim_g:
            raise ConsistencyError("dim k + dim s != dim g")
        if (self.dim_s - self.dim_a) % 2:
            raise ConsistencyError("dim s - dim a must be even")
        self.r = (self.dim_s - self.dim_a) // 2
        self.spin_dim = 2 ** (self.dim_s // 2)
        self.spin_multiplicity = 2 ** (self.dim_a // 2)
        self.root_counts = {
            IMAGINARY_COMPACT: n_ic,
            IMAGINARY_NONCOMPACT: n_in,
            COMPLEX: n_cx,
        }

        self.k_positive_roots = self._compact_positive_roots()
        self._check_compact_closure()
        self.k_simple_roots = self._compact_simple_roots()
        self.rho_compact = vscale(Q(1, 2), _vsum(self.k_positive_roots, rs.rank))
        for delta in self.k_simple_roots:
            if rs.coroot_pairing(self.rho_compact, delta) != 1:
                raise ConsistencyError("compact half-sum does not pair to 1 with a simple root")
        if self.dim_t + 2 * len(self.k_positive_roots) != self.dim_k:
            raise ConsistencyError("compact subsystem size does not match dim k")

    # -- theta ----------------------------------------------------------

    def theta(self, v: Vector) -> Vector:
        p = self.diagram.involution
        return tuple(v[p[i]] for i in range(len(v)))

    def restricted(self, v: Vector) -> Vector:
        """Projection of v to the compact Cartan part: (v + theta v)/2."""
        return vscale(Q(1, 2), vadd(v, self.theta(v)))

    @property
    def equal_rank(self) -> bool:
        return self.dim_a == 0

    def commutes_with_theta(self, w: WeylElement) -> bool:
        p = self.diagram.involution
        m = w.matrix
        n = len(m)
        return all(m[i][p[j]] == m[p[i]][j] for i in range(n) for j in range(n))

    # -- compact subsystem ----------------------------------------------

    def _compact_positive_roots(self) -> tuple[Vector, ...]:
        rs = self.root_system
        out: list[Vector] = []
        seen: set[Vector] = set()
        for root in rs.positive_roots:
            if self.classification[root] == IMAGINARY_NONCOMPACT:
                continue
            res = self.restricted(root)
            if res not in seen:
                seen.add(res)
                out.append(res)
        out.sort(key=lambda v: (sum(v), v))
        return tuple(out)

    def _check_compact_closure(self) -> None:
        rs = self.root_system
        full = set(self.k_positive_roots) | {
            vscale(Q(-1), v) for v in self.k_positive_roots
        }
        for delta in full:
            dd = rs.inner(delta, delta)
            for other in full:
                c = 2 * rs.inner(other, delta) / dd
                if c.denominator != 1:
                    raise NotARootSystem(
                        f"restricted pairing of {other} against {delta} is not integral"
                    )
                if vsub(other, vscale(c, delta)) not in full:
                    raise NotARootSystem(
                        "restricted root set is not closed under its reflections"
                    )

    def _compact_simple_roots(self) -> tuple[Vector, ...]:
        pos = self.k_positive_roots
        sums = {vadd(a, b) for a in pos for b in pos}
        return tuple(d for d in pos if d not in sums)

    # -- dominance on the compact part ----------------------------------

    def compact_dominance(self, v: Vector) -> int:
        """1 if strictly dominant for the compact subsystem, -1 if some
        pairing is negative, 0 if on a wall."""
        rs = self.root_system
        on_wall = False
        for delta in self.k_simple_roots:
            c = rs.coroot_pairing(v, delta)
            if c < 0:
                return -1
            if c == 0:
                on_wall = True
        return 0 if on_wall else 1

    def describe(self) -> dict:
        d = self.diagram
        return {
            "name": self.name,
            "cartan_type": str(d.cartan_type),
            "involution": [i + 1 for i in d.involution],
            "painting": [i + 1 for i in d.painting],
            "equal_rank": self.equal_rank,
            "dims": {
                "g": self.dim_g,
                "k": self.dim_k,
                "s": self.dim_s,
                "t": self.dim_t,
                "a": self.dim_a,
            },
            "r": self.r,
            "spin_dim": self.spin_dim,
            "spin_multiplicity": self.spin_multiplicity,
            "root_counts": dict(self.root_counts),
        }


def _vsum(vectors, rank) -> Vector:
    total = vzero(rank)
    for v in vectors:
        total = vadd(total, v)
    return total


# -- presets ------------------------------------------------------------

_COMPACT_RE = re.compile(r"^compact\((.+)\)$")


@lru_cache(maxsize=1)
def _preset_table() -> dict[str, dict]:
    text = resources.files("hermsig").joinpath("data/realforms.json").read_text()
    return json.loads(text)


def preset_names() -> list[str]:
    return sorted(_preset_table())


def diagram_from_entry(entry: dict) -> VoganDiagram:
    """Diagram from a JSON-style entry with 1-based node numbering."""
    ct = CartanType.parse(entry["type"])
    inv = entry.get("involution")
    involution = (
        tuple(range(ct.rank)) if inv is None else tuple(i - 1 for i in inv)
    )
    painting = tuple(sorted(i - 1 for i in entry.get("painting", [])))
    return VoganDiagram(ct, involution, painting)


def resolve_form(name: str) -> RealForm:
    m = _COMPACT_RE.match(name)
    if m:
        ct = CartanType.parse(m.group(1))
        return RealForm(VoganDiagram.identity(ct), name=name)
    table = _preset_table()
    if name not in table:
        raise UnknownForm(
            f"unknown real form {name!r}; presets: {', '.join(preset_names())}, "
            "or compact(<type>)"
        )
    return RealForm(diagram_from_entry(table[name]), name=name)
