"""Explicit semigroup families bundled with their predicted invariants.

Each constructor returns a FamilyInstance: the semigroup together with the
predictions the family carries (delta set, Betti elements, presentation,
unique-presentation status, fiber shapes).  Proven predictions verify as
PASS/FAIL; conjectured ones as CONSISTENT/INCONSISTENT.  verify_family
recomputes everything from scratch through the exact scans, so instances
double as oracles for the general machinery and as verification targets.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .core import NumericalSemigroup, construct
from .embdim3 import SymmetricDecomposition, symmetric_key_length_set, symmetric_presentation
from .errors import (
    BadParameters,
    BadPrime,
    DegenerateParameters,
    DividesD,
    ExcludedParameters,
    GcdViolation,
)
from .factorizations import (
    Factorization,
    delta_semigroup,
    factorizations_of,
    length_set,
)
from .presentations import (
    PresentationRelation,
    betti_elements,
    betti_scan_cap,
    is_uniquely_presented,
    minimal_presentation,
    r_classes,
    verify_presentation,
)


class FamilyId(Enum):
    MINPRES = "MinPres"
    ARITH48 = "Arith48"
    GAP49 = "Gap49"
    SYMMETRIC_D = "SymmetricD"
    COMPLETE_INTERSECTION = "CompleteIntersection"
    CON3A = "Con3A"
    CON3B = "Con3B"
    CON3C = "Con3C"
    CON3D = "Con3D"
    POWER = "PowerFamily"


@dataclass(frozen=True)
class FiberCheck:
    """Expected shape of the fiber over one element: its cardinality, the
    exact factorization list (ascending), and its R-class count.  Fields
    left as None are not checked."""

    element: int
    note: str
    count: int | None = None
    fiber: tuple[Factorization, ...] | None = None
    r_class_count: int | None = None


@dataclass(frozen=True)
class FamilyPredictions:
    """What a family predicts about its semigroup.  Fields left as None are
    not predicted by that family.

    presentation_exact asks verify_family to compare the predicted
    presentation with the computed one by set equality up to orientation;
    otherwise the prediction is only required to be a verifying presentation
    of the stated size (minimal presentations need not be unique).
    """

    conjectural: bool
    delta: tuple[int, ...] | None = None
    betti: tuple[int, ...] | None = None
    presentation: tuple[PresentationRelation, ...] | None = None
    presentation_size: int | None = None
    presentation_exact: bool = False
    uniquely_presented: bool | None = None
    symmetric: bool | None = None
    complete_intersection: bool | None = None
    key_element: int | None = None
    key_length_set: tuple[int, ...] | None = None
    delta_gap: tuple[int, int] | None = None
    fiber_checks: tuple[FiberCheck, ...] = ()
    decomposition: SymmetricDecomposition | None = None
    base_delta: tuple[int, ...] | None = None


@dataclass(frozen=True)
class FamilyInstance:
    family_id: FamilyId
    params: tuple[int, ...]
    semigroup: NumericalSemigroup
    predictions: FamilyPredictions

    @property
    def label(self) -> str:
        return f"{self.family_id.value}({', '.join(str(p) for p in self.params)})"


@dataclass(frozen=True)
class PredictionCheck:
    """One prediction compared against its recomputed value."""

    name: str
    predicted: object
    computed: object
    passed: bool
    status: str


@dataclass(frozen=True)
class FamilyReport:
    instance: FamilyInstance
    checks: tuple[PredictionCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[PredictionCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def as_dict(self) -> dict:
        return {
            "family": self.instance.family_id.value,
            "params": list(self.instance.params),
            "generators": list(self.instance.semigroup.generators),
            "conjectural": self.instance.predictions.conjectural,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "predicted": _plain(c.predicted),
                    "computed": _plain(c.computed),
                }
                for c in self.checks
            ],
        }


@dataclass(frozen=True)
class StatedFormReport:
    """Side-by-side comparison of the two readings of the symmetric {d,2d}
    construction: the stated triple <p^2, p^2+2d, p^2-(p-2)d> against the
    proof-consistent <p^2, p^2+2pd, p^2-(p-2)d> that its own decomposition
    a = m1 = p, m2 = p+2d regenerates."""

    d: int
    p: int
    stated_input: tuple[int, int, int]
    stated_generators: tuple[int, ...]
    stated_delta: tuple[int, ...]
    proof_generators: tuple[int, ...]
    proof_delta: tuple[int, ...]
    predicted_delta: tuple[int, int]

    @property
    def stated_matches(self) -> bool:
        return self.stated_delta == self.predicted_delta

    @property
    def proof_matches(self) -> bool:
        return self.proof_delta == self.predicted_delta

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "p": self.p,
            "stated_input": list(self.stated_input),
            "stated_generators": list(self.stated_generators),
            "stated_delta": list(self.stated_delta),
            "stated_matches": self.stated_matches,
            "proof_generators": list(self.proof_generators),
            "proof_delta": list(self.proof_delta),
            "proof_matches": self.proof_matches,
            "predicted_delta": list(self.predicted_delta),
        }


def _plain(value):
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    return value


def _require_int(value, name: str, minimum: int, error=BadParameters) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise error(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise error(f"{name} must be at least {minimum}, got {value}")
    return value


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _construct_minimal(gens, label: str) -> NumericalSemigroup:
    S = construct(gens)
    if S.generators != tuple(sorted(set(gens))):
        raise DegenerateParameters(
            f"{label} yields a non-minimal generating set {sorted(set(gens))}; "
            f"the minimal set is {S.generators}"
        )
    return S


def _rel(left, right, element: int) -> PresentationRelation:
    left, right = tuple(left), tuple(right)
    if right < left:
        left, right = right, left
    return PresentationRelation(left=left, right=right, element=element)


def family_minpres(p: int, x: int) -> FamilyInstance:
    """S = <q, 2q+1, 2q+p, ..., 2q+p^(x-1)> with q = p^x - 2, for p, x >= 2
    and (p, x) != (2, 2) (that pair gives the non-minimal {2, 5, 6}).

    Predicts delta {p-1, (p-1)x}, the full Betti set, the explicit x+1
    relation presentation, unique presentation exactly for p > 2, and the
    fiber shapes over every Betti element.
    """
    _require_int(p, "p", 2, ExcludedParameters)
    _require_int(x, "x", 2, ExcludedParameters)
    if (p, x) == (2, 2):
        raise ExcludedParameters(
            "(p, x) = (2, 2) gives the non-minimal generating set {2, 5, 6}"
        )
    q = p**x - 2
    gens = [q] + [2 * q + p**i for i in range(x)]
    S = _construct_minimal(gens, f"MinPres({p}, {x})")
    e = x + 1
    big = (2 * x * (p - 1) - 1) * q

    def vec(entries: dict[int, int]) -> tuple[int, ...]:
        out = [0] * e
        for pos, val in entries.items():
            out[pos] = val
        return tuple(out)

    rel_a = _rel(
        vec({0: 2 * p - 3, 1: 2}),
        vec({x: p}),
        p * (2 * q + p ** (x - 1)),
    )
    rel_b = _rel(
        vec({0: 2 * x * (p - 1) - 1}),
        vec({1: p - 2, **{i: p - 1 for i in range(2, x + 1)}}),
        big,
    )
    steps = [
        _rel(vec({i: p}), vec({0: 2 * (p - 1), i + 1: 1}), p * (2 * q + p ** (i - 1)))
        for i in range(1, x)
    ]
    presentation = tuple(
        sorted([rel_a, rel_b, *steps], key=lambda r: (r.element, r.left, r.right))
    )

    checks = [
        FiberCheck(
            element=r.element,
            note=f"step fiber over p*(2q+p^{i - 1})",
            count=2,
            fiber=tuple(sorted((r.left, r.right))),
            r_class_count=2,
        )
        for i, r in enumerate(steps, start=1)
    ]
    top_fiber = [rel_a.left, rel_a.right]
    if p == 2:
        top_fiber.append(vec({0: 2 * p - 1, 2: 1}))
    checks.append(
        FiberCheck(
            element=rel_a.element,
            note=f"top fiber over p*(2q+p^{x - 1}), three factorizations iff p = 2",
            count=3 if p == 2 else 2,
            fiber=tuple(sorted(top_fiber)),
            r_class_count=2,
        )
    )
    checks.append(
        FiberCheck(
            element=big,
            note="fiber over (2x(p-1)-1)q",
            count=2,
            fiber=tuple(sorted((rel_b.left, rel_b.right))),
            r_class_count=2,
        )
    )

    predictions = FamilyPredictions(
        conjectural=False,
        delta=(p - 1, (p - 1) * x),
        betti=tuple(sorted({big} | {p * (2 * q + p ** (i - 1)) for i in range(1, x + 1)})),
        presentation=presentation,
        presentation_size=x + 1,
        presentation_exact=True,
        uniquely_presented=p > 2,
        delta_gap=(p - 1, (p - 1) * x),
        fiber_checks=tuple(checks),
    )
    return FamilyInstance(FamilyId.MINPRES, (p, x), S, predictions)


def family_arith48(n: int, d: int) -> FamilyInstance:
    """S = <n, n+d, (d+1)n - d> for n >= 3, d >= 1, gcd(n, d) = 1, with
    delta set {d, 2d, ..., floor((n+d-1)/(d+2)) d}."""
    _require_int(n, "n", 3)
    _require_int(d, "d", 1)
    if gcd(n, d) != 1:
        raise GcdViolation(f"gcd({n}, {d}) = {gcd(n, d)} != 1")
    S = _construct_minimal(
        [n, n + d, (d + 1) * n - d], f"Arith48({n}, {d})"
    )
    t = (n + d - 1) // (d + 2)
    predictions = FamilyPredictions(
        conjectural=False,
        delta=tuple(j * d for j in range(1, t + 1)),
    )
    return FamilyInstance(FamilyId.ARITH48, (n, d), S, predictions)


def family_gap49(n: int) -> FamilyInstance:
    """S = <n, n+1, n^2 - n - 1> for n >= 3, with delta set
    [1, n-2] union {2n - 5}."""
    _require_int(n, "n", 3)
    S = _construct_minimal([n, n + 1, n * n - n - 1], f"Gap49({n})")
    predictions = FamilyPredictions(
        conjectural=False,
        delta=tuple(sorted(set(range(1, n - 1)) | {2 * n - 5})),
    )
    return FamilyInstance(FamilyId.GAP49, (n,), S, predictions)


def _symmetric_d_decomposition(d: int, p: int) -> tuple[int, int, int, int, int]:
    """Validate (d, p) and return (a, m1, m2, b, c) with a = m1 = p,
    m2 = p + 2d, b = p - d - 1, c = 1."""
    _require_int(d, "d", 1)
    _require_int(p, "p", 2, BadPrime)
    if p == 2 or not _is_prime(p):
        raise BadPrime(f"p must be an odd prime, got {p}")
    if d % p == 0:
        raise DividesD(f"p = {p} divides d = {d}")
    b = p - d - 1
    if b < 1:
        raise DegenerateParameters(
            f"d = {d} >= p - 1 = {p - 1} leaves no valid decomposition "
            "(the mixed generator needs b >= 1)"
        )
    return p, p, p + 2 * d, b, 1


def family_symmetric_d(d: int, p: int) -> FamilyInstance:
    """Symmetric S = <p^2, p^2 + 2pd, p^2 - (p-2)d> for an odd prime p not
    dividing d, with delta set {d, 2d}.

    Decomposes as <a m1, a m2, b m1 + c m2> with a = m1 = p, m2 = p + 2d,
    b = p - d - 1, c = 1; the decomposition, its two-relation presentation,
    and the length set of the key element a(b m1 + c m2) ride along as
    predictions.
    """
    a, m1, m2, b, c = _symmetric_d_decomposition(d, p)
    mixed = b * m1 + c * m2
    S = _construct_minimal([a * m1, a * m2, mixed], f"SymmetricD({d}, {p})")
    # ascending order is always mixed < a*m1 < a*m2 here
    decomposition = SymmetricDecomposition(
        generators=S.generators, a=a, m1=m1, m2=m2, b=b, c=c, positions=(1, 2, 0)
    )
    predictions = FamilyPredictions(
        conjectural=False,
        delta=(d, 2 * d),
        symmetric=True,
        presentation=symmetric_presentation(decomposition),
        presentation_size=2,
        key_element=decomposition.key_element,
        key_length_set=symmetric_key_length_set(decomposition),
        decomposition=decomposition,
    )
    return FamilyInstance(FamilyId.SYMMETRIC_D, (d, p), S, predictions)


def stated_form_report(d: int, p: int) -> StatedFormReport:
    """Exact delta sets of both readings of the symmetric construction.

    The stated triple <p^2, p^2+2d, p^2-(p-2)d> disagrees with the
    decomposition a = m1 = p, m2 = p+2d used to prove it symmetric, which
    regenerates <p^2, p^2+2pd, p^2-(p-2)d>; this report computes both delta
    sets so the discrepancy is recorded rather than silently resolved.
    """
    proof = family_symmetric_d(d, p)
    stated_input = (p * p, p * p + 2 * d, p * p - (p - 2) * d)
    stated = construct(list(stated_input))
    return StatedFormReport(
        d=d,
        p=p,
        stated_input=stated_input,
        stated_generators=stated.generators,
        stated_delta=delta_semigroup(stated).delta,
        proof_generators=proof.semigroup.generators,
        proof_delta=delta_semigroup(proof.semigroup).delta,
        predicted_delta=(d, 2 * d),
    )


def family_complete_intersection(m: int, k: int) -> FamilyInstance:
    """S = <g, 2g+1, 2g+2, ..., 2g+2^m> with g = 3*2^(m+k) - 2^m, for
    m >= 1, k >= 0.  Conjectured: S is a complete intersection presented by
    ((3*2^(k+1)-1, 0, ..., 0), (0, ..., 0, 3*2^k-1)) plus, for i in [1, m],
    2 at position i against 2 at position 0 and 1 at position i+1, and the
    delta set follows the three-case formula in m."""
    _require_int(m, "m", 1)
    _require_int(k, "k", 0)
    g = 3 * 2 ** (m + k) - 2**m
    gens = [g] + [2 * g + 2**i for i in range(m + 1)]
    S = _construct_minimal(gens, f"CompleteIntersection({m}, {k})")
    e = m + 2

    def vec(entries: dict[int, int]) -> tuple[int, ...]:
        out = [0] * e
        for pos, val in entries.items():
            out[pos] = val
        return tuple(out)

    first = _rel(
        vec({0: 3 * 2 ** (k + 1) - 1}),
        vec({e - 1: 3 * 2**k - 1}),
        (3 * 2 ** (k + 1) - 1) * g,
    )
    steps = [
        _rel(vec({i: 2}), vec({0: 2, i + 1: 1}), 2 * (2 * g + 2 ** (i - 1)))
        for i in range(1, m + 1)
    ]
    presentation = tuple(
        sorted([first, *steps], key=lambda r: (r.element, r.left, r.right))
    )

    top = 3 * 2**k
    base = set(range(1, top + 1))
    # the removed values march down from top+n in steps of 3 (m = 2) or 7
    # (m >= 3), never removing 1 itself
    offsets, stride = ((1,), 3) if m == 2 else ((1, 2, 5), 7) if m >= 3 else ((), 1)
    removed: set[int] = set()
    for n_off in offsets:
        value = top + n_off
        while value >= 1:
            removed.add(value)
            value -= stride
    removed.discard(1)

    predictions = FamilyPredictions(
        conjectural=True,
        delta=tuple(sorted(base - removed)),
        betti=tuple(sorted({r.element for r in presentation})),
        presentation=presentation,
        presentation_size=e - 1,
        presentation_exact=True,
        complete_intersection=True,
    )
    return FamilyInstance(FamilyId.COMPLETE_INTERSECTION, (m, k), S, predictions)


def family_con3a(x: int) -> FamilyInstance:
    """S = <2^x, 2^(x+1)+1, ..., 2^(x+1)+2^(x-1)> for x >= 2; conjectured
    delta set {1, 2, 3}."""
    _require_int(x, "x", 2)
    g = 2**x
    S = _construct_minimal(
        [g] + [2 * g + 2**i for i in range(x)], f"Con3A({x})"
    )
    return FamilyInstance(
        FamilyId.CON3A,
        (x,),
        S,
        FamilyPredictions(conjectural=True, delta=(1, 2, 3)),
    )


def family_con3b(x: int) -> FamilyInstance:
    """S = <g, 2g+1, ..., 2g+2^(x-2)> with g = 2^(x-1)-1, for x >= 3;
    conjectured delta set {1, 2, x}."""
    _require_int(x, "x", 3)
    g = 2 ** (x - 1) - 1
    S = _construct_minimal(
        [g] + [2 * g + 2**i for i in range(x - 1)], f"Con3B({x})"
    )
    return FamilyInstance(
        FamilyId.CON3B,
        (x,),
        S,
        FamilyPredictions(conjectural=True, delta=tuple(sorted({1, 2, x}))),
    )


def family_con3c(x: int) -> FamilyInstance:
    """S = <g, 2g+1, ..., 2g+2^x> with g = 2^(x+1)-3, for x >= 2;
    conjectured delta set {1, x, x+1}."""
    _require_int(x, "x", 2)
    g = 2 ** (x + 1) - 3
    S = _construct_minimal(
        [g] + [2 * g + 2**i for i in range(x + 1)], f"Con3C({x})"
    )
    return FamilyInstance(
        FamilyId.CON3C,
        (x,),
        S,
        FamilyPredictions(conjectural=True, delta=tuple(sorted({1, x, x + 1}))),
    )


def _con3d_offsets(count: int) -> list[int]:
    # i_0 = 0; i_j advances by 1 for odd j, else by 2 or 3 as j mod 4 is 2
    # or 0 (the odd case is tested first, resolving the overlap at j odd)
    vals = [0]
    for j in range(1, count + 1):
        if j % 2 == 1:
            step = 1
        elif j % 4 == 2:
            step = 2
        else:
            step = 3
        vals.append(vals[-1] + step)
    return vals


def family_con3d(c: int, x: int) -> FamilyInstance:
    """S = <g, 2g+1, ..., 2g+2^(x+c-5)> with g = 2^(x+c-3)-c, for c >= 4 and
    x >= 2; conjectured delta set {1, x+i_0, ..., x+i_floor((c-1)/2)} with
    the i_j recurrence stepping 1/2/3 by the parity pattern of j."""
    _require_int(c, "c", 4)
    _require_int(x, "x", 2)
    g = 2 ** (x + c - 3) - c
    S = _construct_minimal(
        [g] + [2 * g + 2**i for i in range(x + c - 4)], f"Con3D({c}, {x})"
    )
    delta = tuple(sorted({1} | {x + i for i in _con3d_offsets((c - 1) // 2)}))
    return FamilyInstance(
        FamilyId.CON3D,
        (c, x),
        S,
        FamilyPredictions(conjectural=True, delta=delta),
    )


def family_power(
    c: int, h: int, n: int, x: int, three_generator: bool = False
) -> FamilyInstance:
    """S_n = <g, ng+1, ng+2, ng+4, ..., ng+2^(x+h)> with g = 2^x - c, for
    c, h >= 0 and n >= 2.  Conjectured relative rule: if the n = 2 instance
    has delta set {1, c_0, ..., c_k} (computed exactly here), then S_n has
    delta set {1, ..., n-1} union {(n-1)(c_j - 1) + 1}.

    three_generator selects the three-generator reading <g, ng+1,
    ng+2^(x+h)> of the same parameters (the generator list is elided in the
    source formulation; both readings are exposed).
    """
    _require_int(c, "c", 0)
    _require_int(h, "h", 0)
    _require_int(n, "n", 2)
    _require_int(x, "x", 1)
    g = 2**x - c
    if g < 2:
        raise BadParameters(f"2^{x} - {c} = {g} is too small to generate")

    def gens_for(mult: int) -> list[int]:
        if three_generator:
            return [g, mult * g + 1, mult * g + 2 ** (x + h)]
        return [g] + [mult * g + 2**i for i in range(x + h + 1)]

    label = f"PowerFamily({c}, {h}, {n}, {x})"
    S = _construct_minimal(gens_for(n), label)
    if n == 2:
        base = S
    else:
        base = _construct_minimal(gens_for(2), label + " n=2 base")
    base_delta = delta_semigroup(base).delta
    predicted = set(range(1, n)) | {
        (n - 1) * (v - 1) + 1 for v in base_delta if v != 1
    }
    predictions = FamilyPredictions(
        conjectural=True,
        delta=tuple(sorted(predicted)),
        base_delta=base_delta,
    )
    return FamilyInstance(FamilyId.POWER, (c, h, n, x), S, predictions)


_CONJECTURE_BUILDERS = {
    FamilyId.COMPLETE_INTERSECTION: (family_complete_intersection, 2),
    FamilyId.CON3A: (family_con3a, 1),
    FamilyId.CON3B: (family_con3b, 1),
    FamilyId.CON3C: (family_con3c, 1),
    FamilyId.CON3D: (family_con3d, 2),
    FamilyId.POWER: (family_power, 4),
}

_ALL_BUILDERS = {
    FamilyId.MINPRES: (family_minpres, 2),
    FamilyId.ARITH48: (family_arith48, 2),
    FamilyId.GAP49: (family_gap49, 1),
    FamilyId.SYMMETRIC_D: (family_symmetric_d, 2),
    **_CONJECTURE_BUILDERS,
}

_ID_ALIASES = {
    "minpres": FamilyId.MINPRES,
    "arith48": FamilyId.ARITH48,
    "gap49": FamilyId.GAP49,
    "symmetricd": FamilyId.SYMMETRIC_D,
    "completeintersection": FamilyId.COMPLETE_INTERSECTION,
    "ci": FamilyId.COMPLETE_INTERSECTION,
    "con3a": FamilyId.CON3A,
    "con3b": FamilyId.CON3B,
    "con3c": FamilyId.CON3C,
    "con3d": FamilyId.CON3D,
    "powerfamily": FamilyId.POWER,
    "power": FamilyId.POWER,
}


def parse_family_id(text: str) -> FamilyId:
    """Resolve a family name as typed on a command line ('minpres',
    'symmetric-d', 'CompleteIntersection', 'ci', ...)."""
    key = str(text).strip().lower().replace("-", "").replace("_", "")
    if key not in _ID_ALIASES:
        known = ", ".join(sorted(set(_ID_ALIASES)))
        raise BadParameters(f"unknown family {text!r}; known ids: {known}")
    return _ID_ALIASES[key]


def build_family(
    family_id: FamilyId | str, *params: int, three_generator: bool = False
) -> FamilyInstance:
    """Dispatch to the constructor for any family id, checking arity."""
    fid = parse_family_id(family_id.value if isinstance(family_id, FamilyId) else family_id)
    builder, arity = _ALL_BUILDERS[fid]
    if len(params) != arity:
        raise BadParameters(
            f"{fid.value} takes {arity} parameter(s), got {len(params)}"
        )
    if fid is FamilyId.POWER:
        return family_power(*params, three_generator=three_generator)
    return builder(*params)


def family_conjecture(
    family_id: FamilyId | str, *params: int, three_generator: bool = False
) -> FamilyInstance:
    """Constructor for the conjectured families only; proven families must
    be built through their own constructors."""
    fid = parse_family_id(family_id.value if isinstance(family_id, FamilyId) else family_id)
    if fid not in _CONJECTURE_BUILDERS:
        raise BadParameters(f"{fid.value} is not one of the conjectured families")
    return build_family(fid, *params, three_generator=three_generator)


def _unordered(relations) -> tuple:
    """Orientation-insensitive canonical form of a relation collection."""
    pairs = []
    for r in relations:
        left, right = tuple(r.left), tuple(r.right)
        pairs.append((min(left, right), max(left, right)))
    return tuple(sorted(pairs))


def _make_check(name: str, predicted, computed, conjectural: bool) -> PredictionCheck:
    passed = predicted == computed
    if conjectural:
        status = "CONSISTENT" if passed else "INCONSISTENT"
    else:
        status = "PASS" if passed else "FAIL"
    return PredictionCheck(
        name=name, predicted=predicted, computed=computed, passed=passed, status=status
    )


def verify_family(F: FamilyInstance) -> FamilyReport:
    """Recompute every prediction of a family instance from scratch.

    The delta set is recomputed by the exact full-bound scan, Betti elements
    and presentations by the fiber machinery, so nothing in the instance's
    own predictions feeds back into what it is checked against.
    """
    S = F.semigroup
    P = F.predictions
    conj = P.conjectural
    checks: list[PredictionCheck] = []

    if P.delta is not None:
        computed_delta = delta_semigroup(S).delta
        checks.append(_make_check("delta set", P.delta, computed_delta, conj))
        if P.delta_gap is not None:
            lo, hi = P.delta_gap
            inside = tuple(v for v in computed_delta if lo < v < hi)
            checks.append(
                _make_check(f"no delta value strictly inside ({lo}, {hi})", (), inside, conj)
            )

    if P.betti is not None:
        scan = betti_elements(S)
        checks.append(_make_check("betti elements", P.betti, scan.values, conj))

    computed_presentation = None
    if P.presentation_size is not None or P.complete_intersection is not None:
        computed_presentation = minimal_presentation(S)
    if P.presentation_size is not None:
        checks.append(
            _make_check(
                "presentation size",
                P.presentation_size,
                len(computed_presentation),
                conj,
            )
        )
    if P.presentation is not None:
        if P.presentation_exact:
            checks.append(
                _make_check(
                    "presentation relations (up to orientation)",
                    _unordered(P.presentation),
                    _unordered(computed_presentation),
                    conj,
                )
            )
        else:
            verified = verify_presentation(S, P.presentation, betti_scan_cap(S))
            checks.append(
                _make_check("predicted presentation verifies", True, verified, conj)
            )
    if P.complete_intersection is not None:
        is_ci = len(computed_presentation) == S.embedding_dimension - 1
        checks.append(
            _make_check("complete intersection (e-1 relations)", P.complete_intersection, is_ci, conj)
        )
    if P.uniquely_presented is not None:
        checks.append(
            _make_check(
                "uniquely presented",
                P.uniquely_presented,
                is_uniquely_presented(S),
                conj,
            )
        )
    if P.symmetric is not None:
        checks.append(_make_check("symmetric", P.symmetric, S.is_symmetric(), conj))
    if P.key_length_set is not None:
        checks.append(
            _make_check(
                f"length set of key element {P.key_element}",
                P.key_length_set,
                length_set(S, P.key_element),
                conj,
            )
        )
    for fc in P.fiber_checks:
        facs = factorizations_of(S, fc.element)
        if fc.count is not None:
            checks.append(
                _make_check(f"fiber size of {fc.element} ({fc.note})", fc.count, len(facs), conj)
            )
        if fc.fiber is not None:
            checks.append(
                _make_check(f"fiber of {fc.element} ({fc.note})", fc.fiber, facs, conj)
            )
        if fc.r_class_count is not None:
            classes = r_classes(S, fc.element).classes
            checks.append(
                _make_check(
                    f"R-class count of {fc.element} ({fc.note})",
                    fc.r_class_count,
                    len(classes),
                    conj,
                )
            )
    return FamilyReport(instance=F, checks=tuple(checks))
