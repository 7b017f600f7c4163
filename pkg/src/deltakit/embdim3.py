"""Structure theory for embedding dimension three.

Non-symmetric case: each generator ni has a least multiple ci*ni landing in
the subsemigroup spanned by the other two, with a unique representation
ci*ni = rij*nj + rik*nk; the three resulting relations form the unique
minimal presentation, and the differences delta1 = c1 - (r12 + r13),
delta3 = (r31 + r32) - c3 control the extremes of the delta set.

Symmetric case: S decomposes as <a*m1, a*m2, b*m1 + c*m2> with a, b+c >= 2
and gcd(m1, m2) = 1 = gcd(a, b*m1 + c*m2); the length set of the key
element a*(b*m1 + c*m2) is {a} plus an arithmetic progression with step
m2 - m1, which determines the delta set shape.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .core import NumericalSemigroup
from .errors import (
    DecompositionNotFound,
    NotSymmetric,
    SymmetricSemigroup,
    WrongEmbeddingDimension,
)
from .factorizations import LengthSet, delta_semigroup
from .presentations import PresentationRelation


@dataclass(frozen=True)
class Ed3Invariants:
    """The ci / rij system of a non-symmetric embedding-dimension-3
    semigroup, with the derived delta parameters.

    Construction re-checks every defining identity; a violation means a bug
    upstream, never bad user input.
    """

    generators: tuple[int, int, int]
    c1: int
    c2: int
    c3: int
    r12: int
    r13: int
    r21: int
    r23: int
    r31: int
    r32: int
    delta1: int
    delta2: int
    delta3: int

    def __post_init__(self):
        n1, n2, n3 = self.generators
        checks = [
            self.c1 * n1 == self.r12 * n2 + self.r13 * n3,
            self.c2 * n2 == self.r21 * n1 + self.r23 * n3,
            self.c3 * n3 == self.r31 * n1 + self.r32 * n2,
            # the three relation rows sum to zero coordinatewise
            self.c1 == self.r21 + self.r31,
            self.c2 == self.r12 + self.r32,
            self.c3 == self.r13 + self.r23,
            self.delta1 == self.c1 - (self.r12 + self.r13),
            self.delta2 == abs(self.c2 - (self.r21 + self.r23)),
            self.delta3 == (self.r31 + self.r32) - self.c3,
            self.delta1 > 0,
            self.delta3 > 0,
            self.delta2 == abs(self.delta1 - self.delta3),
        ]
        if not all(checks):
            raise RuntimeError(
                f"inconsistent ed3 invariants for {self.generators}: {self}"
            )

    @property
    def betti_values(self) -> tuple[int, ...]:
        n1, n2, n3 = self.generators
        return tuple(sorted((self.c1 * n1, self.c2 * n2, self.c3 * n3)))

    @property
    def max_delta(self) -> int:
        return max(self.delta1, self.delta3)


@dataclass(frozen=True)
class SymmetricDecomposition:
    """S = <a*m1, a*m2, b*m1 + c*m2> with the canonical 0 <= c < m1.

    positions records where a*m1, a*m2, and the mixed generator sit inside
    the ascending generator tuple, so relations can be expressed in the
    semigroup's own coordinates.
    """

    generators: tuple[int, int, int]
    a: int
    m1: int
    m2: int
    b: int
    c: int
    positions: tuple[int, int, int]

    def __post_init__(self):
        ok = (
            self.a >= 2
            and self.b + self.c >= 2
            and self.m1 < self.m2
            and 0 <= self.c < self.m1
            and self.b >= 0
            and gcd(self.m1, self.m2) == 1
            and gcd(self.a, self.b * self.m1 + self.c * self.m2) == 1
            and sorted(
                (self.a * self.m1, self.a * self.m2, self.b * self.m1 + self.c * self.m2)
            )
            == sorted(self.generators)
        )
        if not ok:
            raise RuntimeError(
                f"inconsistent symmetric decomposition for {self.generators}: {self}"
            )

    @property
    def r(self) -> int:
        return self.c // self.m1

    @property
    def s(self) -> int:
        return self.b // self.m2

    @property
    def key_element(self) -> int:
        return self.a * (self.b * self.m1 + self.c * self.m2)


class Ed3DeltaKind(Enum):
    SIZE_ONE = "SizeOne"
    SIZE_TWO_CONFORMING = "SizeTwoConforming"
    SIZE_TWO_VIOLATION = "SizeTwoViolation"
    SIZE_THREE_PLUS = "SizeThreePlus"


@dataclass(frozen=True)
class Ed3DeltaClassification:
    """Exact delta set of an ed3 semigroup sorted into the two-element
    trichotomy: a two-element delta set must be {d, 2d}."""

    kind: Ed3DeltaKind
    delta: tuple[int, ...]
    min_delta: int


def _require_ed3(S: NumericalSemigroup) -> tuple[int, int, int]:
    gens = S.generators
    if len(gens) != 3:
        raise WrongEmbeddingDimension(
            f"expected embedding dimension 3, got {len(gens)}"
        )
    return gens  # type: ignore[return-value]


def _least_multiple_in_pair(ni: int, nj: int, nk: int) -> tuple[int, tuple[int, int]]:
    """Least k >= 1 with k*ni in <nj, nk>, plus the representation
    k*ni = rj*nj + rk*nk, which is unique in the non-symmetric case."""
    k = 1
    while True:
        v = k * ni
        reps = [
            (bj, (v - bj * nj) // nk)
            for bj in range(v // nj + 1)
            if (v - bj * nj) % nk == 0
        ]
        if reps:
            if len(reps) > 1:
                raise RuntimeError(
                    f"{v} has several representations over ({nj}, {nk}); "
                    "expected uniqueness for a non-symmetric semigroup"
                )
            return k, reps[0]
        k += 1


def ed3_invariants(S: NumericalSemigroup) -> Ed3Invariants:
    """Compute the ci / rij invariants of a non-symmetric ed3 semigroup by
    ascending scan.  Refuses symmetric input, where the representations need
    not be unique; use symmetric_decomposition there instead."""
    n1, n2, n3 = _require_ed3(S)
    if S.is_symmetric():
        raise SymmetricSemigroup(
            "the ci/rij system requires a non-symmetric semigroup; "
            "use symmetric_decomposition"
        )
    c1, (r12, r13) = _least_multiple_in_pair(n1, n2, n3)
    c2, (r21, r23) = _least_multiple_in_pair(n2, n1, n3)
    c3, (r31, r32) = _least_multiple_in_pair(n3, n1, n2)
    delta1 = c1 - (r12 + r13)
    delta3 = (r31 + r32) - c3
    return Ed3Invariants(
        generators=(n1, n2, n3),
        c1=c1,
        c2=c2,
        c3=c3,
        r12=r12,
        r13=r13,
        r21=r21,
        r23=r23,
        r31=r31,
        r32=r32,
        delta1=delta1,
        delta2=abs(delta1 - delta3),
        delta3=delta3,
    )


def _canonical_relation(left, right, element) -> PresentationRelation:
    if right < left:
        left, right = right, left
    return PresentationRelation(left=tuple(left), right=tuple(right), element=element)


def nonsymmetric_presentation(
    S: NumericalSemigroup,
) -> tuple[PresentationRelation, ...]:
    """The unique minimal presentation of a non-symmetric ed3 semigroup,
    read directly off the ci / rij invariants."""
    inv = ed3_invariants(S)
    n1, n2, n3 = inv.generators
    rels = [
        _canonical_relation((inv.c1, 0, 0), (0, inv.r12, inv.r13), inv.c1 * n1),
        _canonical_relation((0, inv.c2, 0), (inv.r21, 0, inv.r23), inv.c2 * n2),
        _canonical_relation((0, 0, inv.c3), (inv.r31, inv.r32, 0), inv.c3 * n3),
    ]
    return tuple(sorted(rels, key=lambda r: (r.element, r.left, r.right)))


def all_symmetric_decompositions(
    S: NumericalSemigroup,
) -> tuple[SymmetricDecomposition, ...]:
    """Every decomposition of a symmetric ed3 semigroup, one per generator
    pair with a common divisor that satisfies all side conditions.

    Several pairs may qualify (e.g. <4,6,9> via (4,6) and via (6,9)), and
    decomposition-sensitive criteria such as the single-delta test must be
    quantified over all of them, not read off an arbitrary one.
    """
    gens = _require_ed3(S)
    if not S.is_symmetric():
        raise NotSymmetric(f"{gens} is not symmetric")
    found = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        a = gcd(gens[i], gens[j])
        if a < 2:
            continue
        m1, m2 = gens[i] // a, gens[j] // a
        k = 3 - i - j
        third = gens[k]
        if gcd(m1, m2) != 1 or gcd(a, third) != 1:
            continue
        c = (third * pow(m2, -1, m1)) % m1 if m1 > 1 else 0
        rem = third - c * m2
        if rem < 0 or rem % m1:
            continue
        b = rem // m1
        if b + c < 2:
            continue
        found.append(
            SymmetricDecomposition(
                generators=gens, a=a, m1=m1, m2=m2, b=b, c=c, positions=(i, j, k)
            )
        )
    if not found:
        raise DecompositionNotFound(
            f"no valid decomposition found for symmetric semigroup {gens}; "
            "this contradicts the structure theorem and indicates a bug"
        )
    return tuple(found)


def symmetric_decomposition(S: NumericalSemigroup) -> SymmetricDecomposition:
    """Decompose a symmetric ed3 semigroup as <a*m1, a*m2, b*m1 + c*m2>,
    taking the first qualifying generator pair in ascending index order.
    The canonical mixed representation takes 0 <= c < m1."""
    return all_symmetric_decompositions(S)[0]


def single_delta_criterion(D: SymmetricDecomposition) -> bool:
    """True iff a = b + c + k*(m2 - m1) for some k in [-s-1, r+1].

    When this holds for at least one decomposition of S, the delta set is a
    singleton, and conversely; a single decomposition is not decisive (see
    all_symmetric_decompositions).
    """
    step = D.m2 - D.m1
    return any(
        D.a == D.b + D.c + k * step for k in range(-D.s - 1, D.r + 2)
    )


def symmetric_presentation(
    D: SymmetricDecomposition,
) -> tuple[PresentationRelation, ...]:
    """A minimal presentation of the decomposed symmetric semigroup, in the
    coordinates of the ascending generator tuple: m2*(a*m1) = m1*(a*m2) and
    a*(b*m1 + c*m2) = b*(a*m1) + c*(a*m2).  Minimal presentations need not
    be unique in the symmetric case, so callers compare by size plus a
    verification pass, not by set equality."""
    p1, p2, p3 = D.positions
    first_left = [0, 0, 0]
    first_left[p1] = D.m2
    first_right = [0, 0, 0]
    first_right[p2] = D.m1
    second_left = [0, 0, 0]
    second_left[p3] = D.a
    second_right = [0, 0, 0]
    second_right[p1] = D.b
    second_right[p2] = D.c
    rels = [
        _canonical_relation(
            tuple(first_left), tuple(first_right), D.a * D.m1 * D.m2
        ),
        _canonical_relation(tuple(second_left), tuple(second_right), D.key_element),
    ]
    return tuple(sorted(rels, key=lambda r: (r.element, r.left, r.right)))


def symmetric_key_length_set(D: SymmetricDecomposition) -> LengthSet:
    """Predicted length set of the key element a*(b*m1 + c*m2): the value a
    together with the progression b + c + k*(m2 - m1) for k in [-s, r]."""
    step = D.m2 - D.m1
    lengths = {D.a}
    for k in range(-D.s, D.r + 1):
        lengths.add(D.b + D.c + k * step)
    return tuple(sorted(lengths))


def classify_two_element_delta(S: NumericalSemigroup) -> Ed3DeltaClassification:
    """Compute the exact delta set of an ed3 semigroup and classify it; a
    SizeTwoViolation would contradict the {d, 2d} theorem and means a bug."""
    _require_ed3(S)
    delta = delta_semigroup(S).delta
    if not delta:
        raise RuntimeError(
            f"empty delta set for embedding dimension 3 semigroup {S.generators}"
        )
    d = S.min_delta()
    if len(delta) == 1:
        kind = Ed3DeltaKind.SIZE_ONE
    elif len(delta) == 2:
        kind = (
            Ed3DeltaKind.SIZE_TWO_CONFORMING
            if delta == (d, 2 * d)
            else Ed3DeltaKind.SIZE_TWO_VIOLATION
        )
    else:
        kind = Ed3DeltaKind.SIZE_THREE_PLUS
    return Ed3DeltaClassification(kind=kind, delta=delta, min_delta=d)
