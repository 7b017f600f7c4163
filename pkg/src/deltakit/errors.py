"""Exception types shared across the package.

Every error raised on bad input or a violated precondition derives from
DeltakitError, so callers (and the CLI) can catch one base class.
"""
from __future__ import annotations


class DeltakitError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------------------
# construction and membership


class EmptyInput(DeltakitError):
    """Generator list is empty."""


class ContainsZero(DeltakitError):
    """Generator list contains zero."""


class NegativeInput(DeltakitError):
    """A negative integer where a nonnegative one is required."""


class GcdNotOne(DeltakitError):
    """Generators have gcd > 1, so the complement in N is infinite."""


class NotAMember(DeltakitError):
    """The given integer is not an element of the semigroup (or not positive)."""


class WholeNumbersSemigroup(DeltakitError):
    """Operation is vacuous on S = N (Frobenius number -1)."""


class EmbeddingDimensionOne(DeltakitError):
    """Operation requires embedding dimension >= 2."""


# ---------------------------------------------------------------------------
# factorizations and presentations


class TooManyFactorizations(DeltakitError):
    """A fiber exceeded the configured enumeration cap."""


class InvalidRelation(DeltakitError):
    """A relation's sides differ in image, length, or are equal."""


# ---------------------------------------------------------------------------
# embedding dimension three structure theory


class WrongEmbeddingDimension(DeltakitError):
    """Operation is defined only for embedding dimension three."""


class SymmetricSemigroup(DeltakitError):
    """Invariant machinery for the non-symmetric case was applied to a
    symmetric semigroup (use the symmetric decomposition instead)."""


class NotSymmetric(DeltakitError):
    """Symmetric decomposition requested for a non-symmetric semigroup."""


class DecompositionNotFound(DeltakitError):
    """No admissible decomposition exists; signals an internal inconsistency
    for symmetric embedding-dimension-3 semigroups."""


# ---------------------------------------------------------------------------
# family constructors


class ExcludedParameters(DeltakitError):
    """Parameters fall in a family's explicitly excluded set."""


class GcdViolation(DeltakitError):
    """Family parameters violate a required coprimality condition."""


class BadPrime(DeltakitError):
    """Parameter must be an odd prime."""


class DividesD(DeltakitError):
    """The prime parameter divides d, which the family excludes."""


class DegenerateParameters(DeltakitError):
    """Parameters produce a non-minimal generating set or break a side
    condition the family's predictions rely on."""


class BadParameters(DeltakitError):
    """Parameters outside a family's stated domain."""


# ---------------------------------------------------------------------------
# search and catalog


class UnrealizableByGcdTest(DeltakitError):
    """Target delta set fails min(T) = gcd(T), so no semigroup realizes it."""


class UnrealizableLengthOne(DeltakitError):
    """Target length set contains 1 together with other lengths; an element
    with a length-1 factorization is a minimal generator and has a unique
    factorization."""


class IoFailure(DeltakitError):
    """Catalog file could not be read or written."""


class PartialScanRejected(DeltakitError):
    """Catalog records must carry a full-bound delta scan."""
