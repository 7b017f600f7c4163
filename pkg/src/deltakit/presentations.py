"""R-class partitions, Betti elements, minimal presentations, verification.

Factorizations of one element fall into R-classes: the finest partition in
which factorizations with intersecting support are together.  Elements with
more than one R-class are the Betti elements, and pairing representatives
across the classes of every Betti element yields a minimal presentation.

Every fiber beyond F(S) + ne + n_{e-1} has a single R-class (for such n
every n - ni - nj lies in S, so the support graph is complete), which gives
a hard cutoff for Betti scans; completeness over a requested bound is still
certified by an explicit verification pass rather than assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import NumericalSemigroup
from .errors import (
    EmbeddingDimensionOne,
    InvalidRelation,
    NotAMember,
)
from .factorizations import Factorization, delta_bound, factorizations_of

DEFAULT_FIBER_CAP = 1_000_000


@dataclass(frozen=True)
class RClassPartition:
    """The factorizations of one element, grouped into R-classes.

    Classes are ordered by their lexicographically least member; members
    within a class are in ascending lexicographic order.
    """

    element: int
    classes: tuple[tuple[Factorization, ...], ...]


@dataclass(frozen=True)
class PresentationRelation:
    """A pair of factorizations of the same element, canonically oriented
    with the lexicographically smaller side on the left."""

    left: Factorization
    right: Factorization
    element: int


@dataclass(frozen=True)
class BettiRecord:
    """A Betti element together with its R-class partition."""

    value: int
    partition: RClassPartition
    factorization_count: int


@dataclass(frozen=True)
class BettiScan:
    """All Betti elements up to a requested bound.

    complete is True when the relations derived from the records verifiably
    generate the kernel congruence over the whole requested range.
    """

    records: tuple[BettiRecord, ...]
    bound: int
    complete: bool

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(r.value for r in self.records)


def _find(parent: list[int], i: int) -> int:
    root = i
    while parent[root] != root:
        root = parent[root]
    while parent[i] != root:
        parent[i], i = root, parent[i]
    return root


def _union(parent: list[int], i: int, j: int) -> None:
    ri, rj = _find(parent, i), _find(parent, j)
    if ri != rj:
        parent[max(ri, rj)] = min(ri, rj)


def r_classes(
    S: NumericalSemigroup, n: int, cap: int = DEFAULT_FIBER_CAP
) -> RClassPartition:
    """Partition the factorizations of n into R-classes.

    Uses union-find bucketed by generator index: factorizations sharing a
    support index are merged directly, which is linear in total support
    size.  Raises TooManyFactorizations when the fiber exceeds cap.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0 or not S.contains(n):
        raise NotAMember(f"{n} is not an element of the semigroup")
    facs = factorizations_of(S, n, limit=cap)
    parent = list(range(len(facs)))
    first_with_index: dict[int, int] = {}
    for t, f in enumerate(facs):
        for i, a in enumerate(f):
            if a:
                seen = first_with_index.get(i)
                if seen is None:
                    first_with_index[i] = t
                else:
                    _union(parent, seen, t)
    groups: dict[int, list[Factorization]] = {}
    for t, f in enumerate(facs):
        groups.setdefault(_find(parent, t), []).append(f)
    classes = sorted((tuple(g) for g in groups.values()), key=lambda c: c[0])
    return RClassPartition(element=n, classes=tuple(classes))


def _gn_component_count(S: NumericalSemigroup, n: int) -> int:
    """Number of connected components of the support graph of n: vertices
    are generator indices i with n - ni in S, edges are pairs with
    n - ni - nj in S.  Equals the number of R-classes of the fiber."""
    gens = S.generators
    verts = [i for i, g in enumerate(gens) if n >= g and S.contains(n - g)]
    if not verts:
        return 0
    parent = list(range(len(verts)))
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            m = n - gens[verts[a]] - gens[verts[b]]
            if m >= 0 and S.contains(m):
                _union(parent, a, b)
    return sum(1 for i in range(len(verts)) if _find(parent, i) == i)


def betti_scan_cap(S: NumericalSemigroup) -> int:
    """Least bound guaranteed to contain every Betti element: beyond
    F(S) + ne + n_{e-1} the support graph of every element is complete."""
    gens = S.generators
    if len(gens) < 2:
        raise EmbeddingDimensionOne("a one-generator semigroup has no Betti elements")
    return S.frobenius + gens[-1] + gens[-2]


def _betti_records(S: NumericalSemigroup, limit: int) -> tuple[BettiRecord, ...]:
    records = []
    for n in S.members(limit):
        if n and _gn_component_count(S, n) > 1:
            part = r_classes(S, n)
            count = sum(len(c) for c in part.classes)
            records.append(BettiRecord(n, part, count))
    return tuple(records)


def _chain_relations(
    records: Iterable[BettiRecord],
) -> tuple[PresentationRelation, ...]:
    # one representative per class, chained pairwise; class order makes the
    # left side lexicographically smaller automatically
    rels = []
    for rec in records:
        reps = [c[0] for c in rec.partition.classes]
        for a, b in zip(reps, reps[1:]):
            rels.append(PresentationRelation(left=a, right=b, element=rec.value))
    return tuple(rels)


def _normalize_relations(
    S: NumericalSemigroup, relations: Iterable
) -> list[tuple[Factorization, Factorization, int]]:
    gens = S.generators
    e = len(gens)
    out = []
    for rel in relations:
        if isinstance(rel, PresentationRelation):
            left, right, declared = rel.left, rel.right, rel.element
        else:
            left, right = rel
            declared = None
        left, right = tuple(left), tuple(right)
        for side in (left, right):
            if len(side) != e:
                raise InvalidRelation(
                    f"relation side {side} has length {len(side)}, expected {e}"
                )
            if any(not isinstance(a, int) or isinstance(a, bool) or a < 0 for a in side):
                raise InvalidRelation(
                    f"relation side {side} must consist of nonnegative integers"
                )
        il = sum(a * g for a, g in zip(left, gens))
        ir = sum(a * g for a, g in zip(right, gens))
        if il != ir:
            raise InvalidRelation(
                f"relation sides map to different elements: {il} != {ir}"
            )
        if left == right:
            raise InvalidRelation(f"relation sides are identical: {left}")
        if declared is not None and declared != il:
            raise InvalidRelation(
                f"relation declares element {declared} but sides map to {il}"
            )
        out.append((left, right, il))
    return out


def _relations_connect(
    records: Sequence[BettiRecord],
    relations: Sequence[tuple[Factorization, Factorization, int]],
) -> bool:
    # relations of image exactly n are the only ones that can join distinct
    # R-classes of the fiber of n (any application of a relation with a
    # smaller image leaves a shared nonzero coordinate, hence stays inside
    # one R-class), so congruence generation reduces to a per-Betti check
    by_element: dict[int, list[tuple[Factorization, Factorization]]] = {}
    for left, right, elem in relations:
        by_element.setdefault(elem, []).append((left, right))
    for rec in records:
        classes = rec.partition.classes
        class_of = {f: ci for ci, cls in enumerate(classes) for f in cls}
        parent = list(range(len(classes)))
        for left, right in by_element.get(rec.value, ()):
            _union(parent, class_of[left], class_of[right])
        roots = {_find(parent, i) for i in range(len(classes))}
        if len(roots) > 1:
            return False
    return True


def betti_elements(
    S: NumericalSemigroup, scan_bound: int | None = None
) -> BettiScan:
    """All Betti elements of S up to scan_bound (default: the delta-scan
    bound), each with its R-class partition.

    Fibers are prefiltered through the support graph, so full factorization
    enumeration only happens at actual Betti elements.
    """
    if S.embedding_dimension < 2:
        raise EmbeddingDimensionOne("a one-generator semigroup has no Betti elements")
    requested = delta_bound(S) if scan_bound is None else scan_bound
    if not isinstance(requested, int) or isinstance(requested, bool) or requested < 1:
        raise ValueError(f"scan bound must be a positive integer, got {scan_bound!r}")
    records = _betti_records(S, min(requested, betti_scan_cap(S)))
    complete = _relations_connect(
        records, [(r.left, r.right, r.element) for r in _chain_relations(records)]
    )
    return BettiScan(records=records, bound=requested, complete=complete)


def minimal_presentation(S: NumericalSemigroup) -> tuple[PresentationRelation, ...]:
    """A minimal presentation of S: for each Betti element with k R-classes,
    k - 1 relations chaining the lexicographically least member of each
    class, ordered by element value."""
    if S.embedding_dimension < 2:
        raise EmbeddingDimensionOne(
            "a one-generator semigroup has the empty presentation"
        )
    return _chain_relations(_betti_records(S, betti_scan_cap(S)))


def is_uniquely_presented(S: NumericalSemigroup) -> bool:
    """True iff every Betti element has exactly two factorizations, which is
    equivalent to the minimal presentation being unique."""
    if S.embedding_dimension < 2:
        raise EmbeddingDimensionOne(
            "unique presentation is vacuous in embedding dimension one"
        )
    return all(
        rec.factorization_count == 2
        for rec in _betti_records(S, betti_scan_cap(S))
    )


def verify_presentation(
    S: NumericalSemigroup, relations: Iterable, bound: int
) -> bool:
    """True iff the relations generate the kernel congruence over [0, bound]:
    every fiber with at least two factorizations is connected by relation
    applications.

    Relations may be PresentationRelation instances or bare (left, right)
    pairs.  Connectivity of every fiber reduces to connectivity of the
    R-classes of each Betti element under relations of that exact image.
    """
    if not isinstance(bound, int) or isinstance(bound, bool) or bound < 1:
        raise ValueError(f"bound must be a positive integer, got {bound!r}")
    normalized = _normalize_relations(S, relations)
    if S.embedding_dimension < 2:
        # the factorization map is injective, every fiber is a single point
        return True
    records = _betti_records(S, min(bound, betti_scan_cap(S)))
    return _relations_connect(records, normalized)
