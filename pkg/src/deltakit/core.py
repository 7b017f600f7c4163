"""Numerical semigroups: minimal generators, membership, Apery sets, gaps.

A numerical semigroup is an additive submonoid of N with finite complement,
i.e. the set of nonnegative integer combinations of generators with gcd 1.
NumericalSemigroup validates and minimalizes its input once, precomputes the
membership table up to the Frobenius number, and is immutable afterwards, so
instances are safely shareable.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import (
    ContainsZero,
    EmbeddingDimensionOne,
    EmptyInput,
    GcdNotOne,
    NegativeInput,
    NotAMember,
    WholeNumbersSemigroup,
)

# all arithmetic stays in 64-bit range; scans beyond this are out of scope
WIDTH_LIMIT = 2**63 - 1


def combination_member(value: int, gens: Sequence[int]) -> bool:
    """True iff value is a nonnegative integer combination of gens.

    Standalone DP used during minimalization and generator enumeration,
    before any membership table exists.  gens must be sorted ascending.
    """
    if value == 0:
        return True
    if not gens or value < 0:
        return False
    table = bytearray(value + 1)
    table[0] = 1
    for v in range(gens[0], value + 1):
        for g in gens:
            if g > v:
                break
            if table[v - g]:
                table[v] = 1
                break
    return bool(table[value])


@dataclass(frozen=True)
class GapProfile:
    """Frobenius number, genus, and the full gap list of a semigroup."""

    frobenius: int
    genus: int
    gaps: tuple[int, ...]


class NumericalSemigroup:
    """A numerical semigroup given by any generating set with gcd 1.

    The constructor removes duplicates and redundant generators, records
    whether the input was already minimal, and builds the membership table
    up to the Frobenius number.  All attributes are read-only by convention;
    nothing mutates after construction.
    """

    __slots__ = ("generators", "input_was_minimal", "frobenius", "_table")

    generators: tuple[int, ...]
    input_was_minimal: bool
    frobenius: int
    _table: bytearray

    def __init__(self, raw_generators: Iterable[int]):
        raw = list(raw_generators)
        if not raw:
            raise EmptyInput("generator list is empty")
        for v in raw:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"generators must be integers, got {v!r}")
            if v < 0:
                raise NegativeInput(f"generator {v} is negative")
            if v == 0:
                raise ContainsZero("generators must be positive")
        g = 0
        for v in raw:
            g = gcd(g, v)
        if g != 1:
            raise GcdNotOne(f"generators {sorted(set(raw))} have gcd {g}")

        # ascending greedy minimalization: a generator is redundant iff it is
        # a combination of the smaller kept ones (larger generators cannot
        # contribute to representing a smaller value)
        minimal: list[int] = []
        for v in sorted(set(raw)):
            if not combination_member(v, minimal):
                minimal.append(v)
        object.__setattr__(self, "generators", tuple(minimal))
        object.__setattr__(self, "input_was_minimal", set(raw) == set(minimal))

        if len(minimal) >= 2:
            n1, n2, ne = minimal[0], minimal[1], minimal[-1]
            scan_bound = 2 * len(minimal) * n2 * ne * ne + n1 * ne
            if scan_bound > WIDTH_LIMIT:
                raise ValueError(
                    f"delta scan bound {scan_bound} exceeds the 64-bit limit; "
                    "generators this large are out of supported range"
                )

        object.__setattr__(self, "_table", self._build_table())
        table = self._table
        frob = -1
        for x in range(len(table) - 1, -1, -1):
            if not table[x]:
                frob = x
                break
        object.__setattr__(self, "frobenius", frob)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("NumericalSemigroup is immutable")

    def _build_table(self) -> bytearray:
        # membership DP until n1 consecutive members, after which every
        # larger integer is a member
        gens = self.generators
        n1 = gens[0]
        if n1 == 1:
            return bytearray((1,))
        table = bytearray((1,))
        run = 0
        x = 0
        while run < n1:
            x += 1
            table.append(0)
            for g in gens:
                if g > x:
                    break
                if table[x - g]:
                    table[x] = 1
                    break
            run = run + 1 if table[x] else 0
        return table

    # -- basic attributes ---------------------------------------------------

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        if isinstance(other, NumericalSemigroup):
            return self.generators == other.generators
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({', '.join(map(str, self.generators))})"

    # -- membership ---------------------------------------------------------

    def contains(self, x: int) -> bool:
        """True iff x is a nonnegative integer combination of the generators."""
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"expected an integer, got {x!r}")
        if x < 0:
            raise NegativeInput(f"{x} is negative")
        if x > self.frobenius:
            return True
        return bool(self._table[x])

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def members(self, bound: int) -> Iterator[int]:
        """Yield the elements of S up to and including bound, ascending."""
        table = self._table
        frob = self.frobenius
        for x in range(0, min(bound, frob) + 1):
            if table[x]:
                yield x
        for x in range(frob + 1, bound + 1):
            yield x

    # -- classical invariants -------------------------------------------------

    def apery(self, m: int | None = None) -> tuple[int, ...]:
        """Apery set of S with respect to m: entry i is the least element of
        S congruent to i mod m.  m defaults to the multiplicity."""
        if m is None:
            m = self.multiplicity
        if not isinstance(m, int) or isinstance(m, bool) or m < 1 or not self.contains(m):
            raise NotAMember(f"{m} is not a positive element of the semigroup")
        out: list[int | None] = [None] * m
        found = 0
        x = 0
        while found < m:
            if out[x % m] is None and self.contains(x):
                out[x % m] = x
                found += 1
            x += 1
        return tuple(out)  # type: ignore[arg-type]

    def gap_profile(self) -> GapProfile:
        """Frobenius number, genus, and the sorted gap list."""
        table = self._table
        gaps = tuple(x for x in range(self.frobenius + 1) if not table[x])
        return GapProfile(self.frobenius, len(gaps), gaps)

    def is_symmetric(self) -> bool:
        """True iff for every i in [1, F], exactly one of i and F-i is in S."""
        frob = self.frobenius
        if frob < 0:
            raise WholeNumbersSemigroup(
                "symmetry is vacuous for S = N (Frobenius number -1)"
            )
        table = self._table
        for i in range(1, frob + 1):
            if bool(table[i]) == bool(table[frob - i]):
                return False
        return True

    def min_delta(self) -> int:
        """gcd of consecutive generator differences; this equals min Delta(S)
        whenever the delta set is nonempty."""
        gens = self.generators
        if len(gens) < 2:
            raise EmbeddingDimensionOne(
                "the delta set of a one-generator semigroup is empty"
            )
        d = 0
        for a, b in zip(gens, gens[1:]):
            d = gcd(d, b - a)
        return d


def construct(raw_generators: Iterable[int]) -> NumericalSemigroup:
    """Build a numerical semigroup from any generating set with gcd 1."""
    return NumericalSemigroup(raw_generators)
