"""Error taxonomy.

Three buckets drive the CLI exit codes: bad user input in a case spec (2),
structurally valid input the engine refuses to handle (3), and internal
consistency failures that signal a bug rather than a bad request (4).
"""
from __future__ import annotations


class HermsigError(Exception):
    """Base class for all package errors."""


class InputError(HermsigError):
    """Malformed case spec, weight string, or flag combination."""


class UnsupportedInput(HermsigError):
    """Well-formed input outside the supported envelope."""


class ConsistencyError(HermsigError):
    """An internal invariant failed; indicates a bug, not a bad request."""


class InvalidType(UnsupportedInput):
    """Unknown Cartan family or rank outside the family's range."""


class UnsupportedRank(UnsupportedInput):
    """Total rank exceeds the configured cap."""


class GroupTooLarge(UnsupportedInput):
    """Weyl group order exceeds the enumeration cap."""


class RepTooLarge(UnsupportedInput):
    """Representation dimension exceeds the configured cap."""


class InvalidInvolution(UnsupportedInput):
    """Involution is not a Cartan-matrix automorphism of order at most two,
    or a painted node is moved by the involution."""


class UnknownForm(UnsupportedInput):
    """Requested real-form name is not in the preset table."""


class NotEqualRank(UnsupportedInput):
    """Weight-trace oracle requested for a form with noncompact Cartan part."""


class ThetaMovesHighestWeight(UnsupportedInput):
    """Matrix intertwiner requested for a highest weight not fixed by the
    involution; no equivariant normalization exists in that case."""


class NonDominant(ConsistencyError):
    """Weight failed a dominance precondition.  Reachable from the engine only
    through a filtering bug; user weights are validated at parse time."""


class NonIntegral(ConsistencyError):
    """A quantity that must be an exact integer is not."""


class NonIntegralDecomposition(ConsistencyError):
    """lambda - w(lambda) is not a nonnegative integer combination of simple
    roots; signals a non-integral weight or a coset filtering bug."""


class InexactDivision(ConsistencyError):
    """Signed term sum is not divisible by the expected power of two."""


class NotARootSystem(ConsistencyError):
    """Candidate compact subsystem is not closed under its own reflections."""


class UnexpectedRealRoot(ConsistencyError):
    """A root restricted to zero on the compact Cartan part; impossible for a
    maximally compact Cartan subalgebra and never handled silently."""


class DegenerateRestriction(ConsistencyError):
    """Restricted weight landed on a wall of the compact chamber during coset
    filtering; borderline cases are rejected loudly, never included."""


class IntertwinerInconsistent(ConsistencyError):
    """Constructed intertwiner failed an exact matrix identity."""
