"""Bounded realization search: which semigroups or elements realize a given
delta set or length set.

The search space is every numerical semigroup whose minimal generators fit
under (max_gen, max_e); candidates stream in lexicographic generator order,
which is also ascending multiplicity.  Unrealizable targets are rejected up
front when a cheap invariant rules them out, each surviving candidate goes
through a rejection cascade before it earns a full scan, and any hit is
verified by independent recomputation before it is reported.  An empty
result is only ever a bounded statement: nothing within the bounds realizes
the target.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from math import gcd
from pathlib import Path
from typing import Callable, Iterator

from ._bits import backend, set_bits
from .catalog import CatalogWriter, record_for
from .core import NumericalSemigroup, combination_member, construct
from .errors import BadParameters, UnrealizableByGcdTest, UnrealizableLengthOne
from .factorizations import (
    delta_bound,
    delta_of_element,
    delta_of_length_bits,
    delta_semigroup,
    iter_length_bitsets,
    length_set,
)


class TargetKind(Enum):
    """What a realization search is matching against."""

    DELTA_OF_SEMIGROUP = "delta-s"
    DELTA_OF_ELEMENT = "delta-x"
    LENGTH_SET_OF_ELEMENT = "length-x"


class SearchMode(Enum):
    FIRST_HIT = "first-hit"
    EXHAUSTIVE = "exhaustive"


_KIND_ALIASES = {
    "delta-s": TargetKind.DELTA_OF_SEMIGROUP,
    "deltaofsemigroup": TargetKind.DELTA_OF_SEMIGROUP,
    "delta-x": TargetKind.DELTA_OF_ELEMENT,
    "deltaofelement": TargetKind.DELTA_OF_ELEMENT,
    "length-x": TargetKind.LENGTH_SET_OF_ELEMENT,
    "lengthsetofelement": TargetKind.LENGTH_SET_OF_ELEMENT,
}


def parse_target_kind(text: str) -> TargetKind:
    """Accepts the short CLI spellings (delta-s, delta-x, length-x) and the
    long type names, case-insensitively."""
    key = str(text).strip().lower().replace("_", "").replace(" ", "")
    kind = _KIND_ALIASES.get(key)
    if kind is None:
        choices = ", ".join(sorted({k.value for k in TargetKind}))
        raise BadParameters(f"unknown target kind {text!r}; choose one of {choices}")
    return kind


def _require_int(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise BadParameters(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise BadParameters(f"{name} must be at least {minimum}, got {value}")
    return value


@dataclass(frozen=True, slots=True)
class SearchQuery:
    """A realization question: target kind, the target set, and the bounds.

    The target is normalized to a sorted duplicate-free tuple.  Construction
    already applies the structural prechecks, so an unrealizable target
    fails here rather than after a pointless sweep:

    * a semigroup delta set always has min equal to gcd, so a semigroup
      target violating that raises UnrealizableByGcdTest;
    * an element of length 1 is a minimal generator, whose only length is 1,
      so a length-set target containing 1 alongside anything else raises
      UnrealizableLengthOne.
    """

    target_kind: TargetKind
    target: tuple[int, ...]
    max_gen: int
    max_e: int
    max_frobenius: int | None = None
    mode: SearchMode = SearchMode.FIRST_HIT

    def __post_init__(self):
        if not isinstance(self.target_kind, TargetKind):
            raise BadParameters(f"target_kind must be a TargetKind, got {self.target_kind!r}")
        if not isinstance(self.mode, SearchMode):
            raise BadParameters(f"mode must be a SearchMode, got {self.mode!r}")
        values = tuple(self.target)
        for v in values:
            _require_int(v, "target value", 1)
        if not values:
            raise BadParameters(
                "target must be nonempty; only embedding dimension one gives "
                "an empty delta set, and those semigroups are outside the "
                "search space"
            )
        object.__setattr__(self, "target", tuple(sorted(set(values))))
        _require_int(self.max_gen, "max_gen", 1)
        _require_int(self.max_e, "max_e", 1)
        if self.max_frobenius is not None:
            _require_int(self.max_frobenius, "max_frobenius", 1)
        if self.target_kind is TargetKind.DELTA_OF_SEMIGROUP:
            g = gcd(*self.target)
            if self.target[0] != g:
                raise UnrealizableByGcdTest(
                    f"a semigroup delta set has min equal to gcd; target "
                    f"{set(self.target)} has min {self.target[0]} but gcd {g}"
                )
        if self.target_kind is TargetKind.LENGTH_SET_OF_ELEMENT:
            if self.target[0] == 1 and len(self.target) > 1:
                raise UnrealizableLengthOne(
                    "length 1 makes the element a minimal generator, whose "
                    "whole length set is {1}"
                )


@dataclass(frozen=True, slots=True)
class Witness:
    """A verified hit: the semigroup, the element when the target is
    element-level, and the recomputed realized set."""

    semigroup: NumericalSemigroup
    element: int | None
    realized: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "generators": list(self.semigroup.generators),
            "element": self.element,
            "realized": list(self.realized),
        }


@dataclass(frozen=True, slots=True)
class SearchResult:
    """Outcome of one realize() run.

    exhausted means the whole bounded space was enumerated, which is what
    licenses reading an empty witness tuple as bounded non-existence.
    """

    query: SearchQuery
    witnesses: tuple[Witness, ...]
    candidates: int
    full_scans: int
    exhausted: bool

    @property
    def found(self) -> bool:
        return bool(self.witnesses)

    def summary(self) -> str:
        q = self.query
        target = "{" + ", ".join(str(v) for v in q.target) + "}"
        bounds = f"max_gen={q.max_gen}, max_e={q.max_e}"
        if q.max_frobenius is not None:
            bounds += f", max_frobenius={q.max_frobenius}"
        if not self.witnesses:
            return (
                f"no witness within bounds ({bounds}) for "
                f"{q.target_kind.value} target {target}"
            )
        lines = []
        for w in self.witnesses:
            gens = "<" + ", ".join(str(n) for n in w.semigroup.generators) + ">"
            where = gens if w.element is None else f"{gens} at element {w.element}"
            lines.append(f"{q.target_kind.value} target {target} realized by {where}")
        return "\n".join(lines)


def enumerate_semigroups(max_gen: int, max_e: int) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup whose minimal generators are <= max_gen and
    whose embedding dimension is <= max_e, each exactly once, in
    lexicographic generator order.

    Tuples grow in ascending order and a new generator is admitted only when
    it is not a combination of the prefix, which keeps every visited tuple
    minimal; emitting a prefix before its extensions makes depth-first order
    agree with lexicographic order.  The semigroup generated by 1 is the
    only one with embedding dimension one and is excluded: its delta set is
    empty and it carries no factorization structure worth searching.
    """
    _require_int(max_gen, "max_gen", 1)
    _require_int(max_e, "max_e", 1)

    def walk(prefix: tuple[int, ...]) -> Iterator[NumericalSemigroup]:
        if gcd(*prefix) == 1:
            yield construct(prefix)
        if len(prefix) >= max_e:
            return
        for nxt in range(prefix[-1] + 1, max_gen + 1):
            if not combination_member(nxt, prefix):
                yield from walk(prefix + (nxt,))

    for first in range(2, max_gen + 1):
        yield from walk((first,))


def _scan_within(
    S: NumericalSemigroup, bound: int, allowed: frozenset[int]
) -> tuple[set[int], bool]:
    """Stream the delta scan up to bound, aborting at the first value outside
    allowed; returns (values seen, completed flag)."""
    d0 = S.min_delta()
    seen: set[int] = set()
    for _, bits in iter_length_bitsets(S, bound):
        for d in delta_of_length_bits(bits, d0):
            if d not in seen:
                if d not in allowed:
                    return seen, False
                seen.add(d)
    return seen, True


def _match_delta_semigroup(
    S: NumericalSemigroup,
    target: tuple[int, ...],
    allowed: frozenset[int],
    writer: CatalogWriter | None,
    clock: Callable[[], float],
) -> tuple[Witness | None, int]:
    """Rejection cascade for one candidate; returns (witness or None, number
    of completed full scans)."""
    d0 = S.min_delta()
    if d0 != target[0]:
        return None, 0
    if S.embedding_dimension == 2:
        # two coprime generators: trades swap n2 copies of n1 for n1 copies
        # of n2, so every length set is an arithmetic progression with step
        # n2 - n1 and the whole delta set is {d0}
        if (d0,) != target:
            return None, 0
        return _verified_semigroup_witness(S, target), 0
    rec = writer.lookup(S.generators) if writer is not None else None
    if rec is not None:
        if rec.delta != target:
            return None, 0
        return _verified_semigroup_witness(S, target), 0
    bound = delta_bound(S)
    partial = min(10 * S.generators[-1] ** 2, bound)
    seen, ok = _scan_within(S, partial, allowed)
    if not ok:
        return None, 0
    if partial < bound:
        seen, ok = _scan_within(S, bound, allowed)
        if not ok:
            return None, 0
    delta = tuple(sorted(seen))
    if writer is not None:
        writer.append(record_for(S, delta, bound, int(clock())))
    if delta != target:
        return None, 1
    return _verified_semigroup_witness(S, target), 1


def _verified_semigroup_witness(
    S: NumericalSemigroup, target: tuple[int, ...]
) -> Witness:
    # hits are cheap relative to the search, so recompute the delta set from
    # scratch through the public scan before reporting anything
    check = delta_semigroup(S).delta
    if check != target:
        raise RuntimeError(
            f"witness verification failed for {S.generators}: "
            f"recomputed delta {check} != target {target}"
        )
    return Witness(semigroup=S, element=None, realized=check)


def _match_delta_element(
    S: NumericalSemigroup, target: tuple[int, ...]
) -> Witness | None:
    d0 = S.min_delta()
    # all lengths of one element are congruent mod d0, so its gaps are
    # multiples of d0
    if any(t % d0 for t in target):
        return None
    if S.embedding_dimension == 2 and target != (d0,):
        # arithmetic-progression length sets never give anything else
        return None
    for x, bits in iter_length_bitsets(S, delta_bound(S)):
        if delta_of_length_bits(bits, d0) == target:
            check = delta_of_element(S, x)
            if check != target:
                raise RuntimeError(
                    f"witness verification failed for {S.generators} at {x}: "
                    f"recomputed delta {check} != target {target}"
                )
            return Witness(semigroup=S, element=x, realized=check)
    return None


def _match_length_element(
    S: NumericalSemigroup, target: tuple[int, ...]
) -> Witness | None:
    d0 = S.min_delta()
    lo, hi = target[0], target[-1]
    # all lengths of one element are congruent mod d0
    if any((t - lo) % d0 for t in target):
        return None
    if S.embedding_dimension == 2 and target != tuple(range(lo, hi + 1, d0)):
        # with two generators every length set is a full progression
        return None
    popcount = backend.popcount
    lowest_bit = backend.lowest_bit
    want = len(target)
    # a factorization of length hi uses at most hi copies of the largest
    # generator, so any element realizing the target sits at or below hi * ne
    bound = min(delta_bound(S), hi * S.generators[-1])
    for x, bits in iter_length_bitsets(S, bound):
        if popcount(bits) != want:
            continue
        if lowest_bit(bits) != lo or bits.bit_length() - 1 != hi:
            continue
        if tuple(set_bits(bits)) == target:
            check = length_set(S, x)
            if check != target:
                raise RuntimeError(
                    f"witness verification failed for {S.generators} at {x}: "
                    f"recomputed length set {check} != target {target}"
                )
            return Witness(semigroup=S, element=x, realized=check)
    return None


def realize(
    query: SearchQuery,
    catalog_path: str | Path | None = None,
    clock: Callable[[], float] | None = None,
) -> SearchResult:
    """Sweep the bounded space for the query's target and return verified
    witnesses.

    FirstHit stops at the first witness; Exhaustive sweeps everything, with
    element searches still reporting at most one element (the smallest) per
    semigroup.  Semigroup-delta candidates go through the rejection cascade:
    min_delta must equal min(target), a partial scan to min(10 * ne^2, N)
    must stay inside the target, and only survivors get the full scan, which
    itself aborts at the first out-of-target value.

    With catalog_path, completed full scans are appended as catalog records
    and already cataloged tuples are not rescanned, so an interrupted search
    resumes where it stopped.  The catalog only applies to semigroup-delta
    searches; element searches never compute whole-semigroup invariants.
    clock supplies record timestamps (defaults to time.time) so tests can
    pin them.
    """
    ticks = clock if clock is not None else time.time
    target = query.target
    kind = query.target_kind
    writer: CatalogWriter | None = None
    if catalog_path is not None:
        if kind is not TargetKind.DELTA_OF_SEMIGROUP:
            raise BadParameters(
                "a catalog only applies to delta-s searches; element "
                "searches do not produce catalog records"
            )
        writer = CatalogWriter(catalog_path)
    allowed = frozenset(target)
    witnesses: list[Witness] = []
    candidates = 0
    full_scans = 0
    exhausted = True
    for S in enumerate_semigroups(query.max_gen, query.max_e):
        if query.max_frobenius is not None and S.frobenius > query.max_frobenius:
            continue
        candidates += 1
        if kind is TargetKind.DELTA_OF_SEMIGROUP:
            hit, scans = _match_delta_semigroup(S, target, allowed, writer, ticks)
            full_scans += scans
        elif kind is TargetKind.DELTA_OF_ELEMENT:
            hit = _match_delta_element(S, target)
        else:
            hit = _match_length_element(S, target)
        if hit is not None:
            witnesses.append(hit)
            if query.mode is SearchMode.FIRST_HIT:
                exhausted = False
                break
    return SearchResult(
        query=query,
        witnesses=tuple(witnesses),
        candidates=candidates,
        full_scans=full_scans,
        exhausted=exhausted,
    )


OPEN_DELTA_TARGETS: tuple[tuple[int, ...], ...] = ((1, 3, 4, 5), (1, 3, 6))


def open_target_queries(max_gen: int = 25, max_e: int = 4) -> tuple[SearchQuery, ...]:
    """Queries for the delta sets whose realizability is unsettled; at the
    default bounds both sweeps come back witness-free, which is a bounded
    statement, not a proof."""
    return tuple(
        SearchQuery(
            target_kind=TargetKind.DELTA_OF_SEMIGROUP,
            target=t,
            max_gen=max_gen,
            max_e=max_e,
        )
        for t in OPEN_DELTA_TARGETS
    )
