"""The acceptance suite: every headline result the package must reproduce.

Each criterion is one function returning a CriterionResult; run_all executes
them in order and reports one pass/fail line each.  The quick grid trims the
two long-running sweeps (the exhaustive embedding-dimension-3 scan and the
open-target searches) for CI smoke runs; the full grid is the real gate.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import gcd
from typing import Callable

from ._bits import set_bits
from .core import NumericalSemigroup, construct
from .embdim3 import ed3_invariants, nonsymmetric_presentation
from .errors import UnrealizableByGcdTest
from .factorizations import delta_bound, delta_semigroup, iter_length_bitsets
from .families import (
    FamilyId,
    build_family,
    family_minpres,
    family_symmetric_d,
    stated_form_report,
    verify_family,
)
from .presentations import minimal_presentation, verify_presentation
from .search import SearchMode, SearchQuery, TargetKind, open_target_queries, realize

DEFAULT_SEED = 20260814


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] criterion {self.number}: {self.title} ({self.seconds:.1f}s) - {self.detail}"


@dataclass(frozen=True)
class AcceptanceReport:
    results: tuple[CriterionResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = [r.line() for r in self.results]
        verdict = "PASS" if self.ok else "FAIL"
        failed = sum(1 for r in self.results if not r.passed)
        total = sum(r.seconds for r in self.results)
        out.append(
            f"acceptance: {verdict} ({len(self.results) - failed}/{len(self.results)} criteria, {total:.1f}s)"
        )
        return out


def _result(number: int, title: str, t0: float, failures: list[str], detail: str) -> CriterionResult:
    passed = not failures
    body = detail if passed else "; ".join(failures)
    return CriterionResult(number, title, passed, body, time.perf_counter() - t0)


def _fmt(values) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def criterion_1(quick: bool = False) -> CriterionResult:
    """Exact delta sets of five pinned semigroups at the full scan bound."""
    expected = {
        (6, 13, 14, 16): (1, 3),
        (7, 15, 17): (2, 4),
        (5, 6, 19): (1, 2, 3, 5),
        (6, 7, 29): (1, 2, 3, 4, 7),
        (7, 8, 13): (1, 2),
    }
    t0 = time.perf_counter()
    failures: list[str] = []
    parts: list[str] = []
    for gens, want in expected.items():
        started = time.perf_counter()
        scan = delta_semigroup(construct(gens))
        took = time.perf_counter() - started
        if scan.partial:
            failures.append(f"{gens}: scan flagged partial")
        if scan.delta != want:
            failures.append(f"{gens}: delta {scan.delta} != {want}")
        if took >= 10.0:
            failures.append(f"{gens}: {took:.1f}s breaches the 10s budget")
        parts.append(f"delta{_fmt(gens)}={_fmt(scan.delta)} in {took:.2f}s")
    return _result(1, "exact delta sets", t0, failures, "; ".join(parts))


def criterion_2(quick: bool = False) -> CriterionResult:
    """Proven three-step family: full verification across the sweep grid."""
    grid = [(2, 3), (3, 2)] if quick else [(2, 3), (2, 4), (3, 2), (5, 2), (3, 3)]
    t0 = time.perf_counter()
    failures: list[str] = []
    for p, x in grid:
        report = verify_family(family_minpres(p, x))
        bad = [c for c in report.checks if c.status != "PASS"]
        if bad:
            failures.append(
                f"({p},{x}): " + "; ".join(f"{c.name} -> {c.status}" for c in bad)
            )
    return _result(
        2,
        "family theorem sweep",
        t0,
        failures,
        f"all checks PASS for {len(grid)} (p, x) instances",
    )


def criterion_3(quick: bool = False) -> CriterionResult:
    """Exhaustive embedding-dimension-3 verification up to n3 <= 35."""
    from .search import enumerate_semigroups

    cap = 18 if quick else 35
    t0 = time.perf_counter()
    failures: list[str] = []
    swept = 0
    nonsymmetric = 0
    for S in enumerate_semigroups(cap, 3):
        if S.embedding_dimension != 3:
            continue
        swept += 1
        gens = S.generators
        delta = delta_semigroup(S).delta
        d = S.min_delta()
        if len(delta) == 2 and delta != (d, 2 * d):
            failures.append(f"{gens}: two-element delta {delta} is not {{d,2d}}")
        if len(delta) > 1 and 2 * d not in delta:
            failures.append(f"{gens}: 2d missing from {delta}")
        if len(delta) > 2 and 3 * d not in delta:
            failures.append(f"{gens}: 3d missing from {delta}")
        if not S.is_symmetric():
            nonsymmetric += 1
            inv = ed3_invariants(S)
            if inv.delta2 != abs(inv.delta1 - inv.delta3):
                failures.append(f"{gens}: delta2 identity fails")
            if max(delta) != inv.max_delta:
                failures.append(
                    f"{gens}: max delta {max(delta)} != max(d1,d3)={inv.max_delta}"
                )
            sigma = _unordered(nonsymmetric_presentation(S))
            scanned = _unordered(minimal_presentation(S))
            if sigma != scanned:
                failures.append(f"{gens}: sigma differs from scanned presentation")
        if len(failures) > 20:
            failures.append("... aborting after 20 violations")
            break
    return _result(
        3,
        f"exhaustive ed3 verification (n3 <= {cap})",
        t0,
        failures,
        f"{swept} semigroups swept, {nonsymmetric} non-symmetric, zero violations",
    )


def _unordered(relations) -> tuple:
    out = []
    for rel in relations:
        pair = (rel.left, rel.right)
        out.append((min(pair), max(pair)))
    return tuple(sorted(out))


def criterion_4(quick: bool = False) -> CriterionResult:
    """Symmetric family: symmetry, delta {d,2d}, and the stated-form report."""
    grid = [(1, 3), (1, 5), (2, 5), (3, 5)]
    t0 = time.perf_counter()
    failures: list[str] = []
    for d, p in grid:
        fam = family_symmetric_d(d, p)
        S = fam.semigroup
        if not S.is_symmetric():
            failures.append(f"(d={d},p={p}): not symmetric")
        delta = delta_semigroup(S).delta
        if delta != (d, 2 * d):
            failures.append(f"(d={d},p={p}): delta {delta} != {(d, 2 * d)}")
        report = verify_family(fam)
        if not report.ok:
            failures.append(
                f"(d={d},p={p}): " + "; ".join(c.name for c in report.failures)
            )
    stated = stated_form_report(1, 3)
    if stated.stated_generators != (8, 9, 11) or stated.stated_delta != (1,):
        failures.append(
            f"stated-form report changed: {stated.stated_generators} "
            f"delta {stated.stated_delta}"
        )
    if stated.proof_delta != (1, 2):
        failures.append(f"proof-form delta {stated.proof_delta} != (1, 2)")
    return _result(
        4,
        "symmetric family",
        t0,
        failures,
        "4 instances symmetric with delta {d, 2d}; stated-form discrepancy "
        "reproduced: delta<8,9,11> = {1} vs proof form {1, 2}",
    )


def random_suite(seed: int, count: int) -> list[NumericalSemigroup]:
    """Deterministic random semigroups with e <= 5 and largest generator <= 40."""
    rng = random.Random(seed)
    suite: list[NumericalSemigroup] = []
    seen: set[tuple[int, ...]] = set()
    while len(suite) < count:
        size = rng.randint(2, 5)
        gens = rng.sample(range(2, 41), size)
        if gcd(*gens) != 1:
            continue
        S = construct(gens)
        if S.generators in seen:
            continue
        seen.add(S.generators)
        suite.append(S)
    return suite


def _set_table_length_sets(S: NumericalSemigroup, bound: int) -> list[set[int]]:
    """Independent oracle: the length-set recurrence on plain Python sets."""
    gens = S.generators
    table: list[set[int]] = [set() for _ in range(bound + 1)]
    table[0].add(0)
    for x in range(1, bound + 1):
        acc = table[x]
        for n in gens:
            if n > x:
                break
            prev = table[x - n]
            if prev:
                acc.update(l + 1 for l in prev)
    return table


def criterion_5(quick: bool = False, seed: int = DEFAULT_SEED) -> CriterionResult:
    """Oracle equivalence on seeded random semigroups."""
    count, bound = (12, 400) if quick else (50, 2000)
    t0 = time.perf_counter()
    failures: list[str] = []
    for S in random_suite(seed, count):
        table = _set_table_length_sets(S, bound)
        via_bits = {x: tuple(set_bits(bits)) for x, bits in iter_length_bitsets(S, bound)}
        for x in range(bound + 1):
            want = tuple(sorted(table[x]))
            got = via_bits.get(x, ())
            if want != got:
                failures.append(f"{S.generators}: length sets differ at {x}")
                break
        scan = delta_semigroup(S)
        diffs_gcd = gcd(*(b - a for a, b in zip(S.generators, S.generators[1:])))
        if S.min_delta() != diffs_gcd:
            failures.append(f"{S.generators}: min_delta != gcd of generator steps")
        if scan.delta and (scan.delta[0] != diffs_gcd or gcd(*scan.delta) != diffs_gcd):
            failures.append(f"{S.generators}: scanned delta {scan.delta} breaks Prop identities")
        if not scan.delta and S.embedding_dimension >= 2:
            failures.append(f"{S.generators}: empty delta for e >= 2")
    return _result(
        5,
        "oracle equivalence on random semigroups",
        t0,
        failures,
        f"{count} semigroups, all length sets to {bound} match; min delta = "
        "gcd of generator steps = gcd of delta set throughout",
    )


def criterion_6(quick: bool = False, seed: int = DEFAULT_SEED) -> CriterionResult:
    """Presentation machinery: verification, drop-one failure, size bounds."""
    pinned = [(7, 15, 17), (6, 13, 14, 16), (4, 9, 11), (2, 5)]
    t0 = time.perf_counter()
    failures: list[str] = []
    for gens in pinned:
        S = construct(gens)
        relations = minimal_presentation(S)
        bound = delta_bound(S)
        if not verify_presentation(S, relations, bound):
            failures.append(f"{gens}: own minimal presentation fails verification")
        for i in range(len(relations)):
            reduced = relations[:i] + relations[i + 1 :]
            if verify_presentation(S, reduced, bound):
                failures.append(f"{gens}: dropping relation {i} still verifies")
    count = 12 if quick else 50
    for S in random_suite(seed, count):
        size = len(minimal_presentation(S))
        e = S.embedding_dimension
        n1 = S.multiplicity
        upper = (2 * n1 - e + 1) * (e - 2) // 2 + 1
        if not (e - 1 <= size <= upper):
            failures.append(
                f"{S.generators}: presentation size {size} outside [{e - 1}, {upper}]"
            )
    return _result(
        6,
        "presentation machinery",
        t0,
        failures,
        f"4 pinned semigroups verify and fail on any dropped relation; "
        f"sizes within bounds on {count} random semigroups",
    )


def criterion_7(quick: bool = False) -> CriterionResult:
    """Realization searches: hits, precheck rejection, bounded misses."""
    t0 = time.perf_counter()
    failures: list[str] = []
    res = realize(SearchQuery(TargetKind.DELTA_OF_SEMIGROUP, (1, 3), 16, 4))
    took = time.perf_counter() - t0
    if [w.semigroup.generators for w in res.witnesses] != [(6, 13, 14, 16)]:
        failures.append(f"delta {{1,3}}: witnesses {[w.semigroup.generators for w in res.witnesses]}")
    if took >= 300:
        failures.append(f"delta {{1,3}} search took {took:.0f}s (budget 300s)")
    element = realize(
        SearchQuery(
            TargetKind.DELTA_OF_ELEMENT, (2, 3), 11, 3, mode=SearchMode.EXHAUSTIVE
        )
    )
    hits = [(w.semigroup.generators, w.element) for w in element.witnesses]
    if ((4, 9, 11), 36) not in hits:
        failures.append(f"delta-x {{2,3}}: {hits} misses (<4,9,11>, 36)")
    try:
        SearchQuery(TargetKind.DELTA_OF_SEMIGROUP, (2, 3), 16, 4)
        failures.append("delta-s {2,3} was not rejected by the gcd precheck")
    except UnrealizableByGcdTest:
        pass
    open_bounds = dict(max_gen=12, max_e=3) if quick else dict(max_gen=25, max_e=4)
    for query in open_target_queries(**open_bounds):
        res = realize(query)
        if res.witnesses or not res.exhausted:
            failures.append(f"open target {query.target}: unexpected witness {res.witnesses}")
        if "no witness within bounds" not in res.summary():
            failures.append(f"open target {query.target}: summary lost its bounded wording")
    return _result(
        7,
        "realization search",
        t0,
        failures,
        "it finds <6,13,14,16> for {1, 3} and (<4,9,11>, 36) for element target "
        f"{{2, 3}}; {{2, 3}} rejected for semigroups; open targets "
        f"{[q.target for q in open_target_queries()]} report no witness within "
        f"bounds (max_gen={open_bounds['max_gen']}, max_e={open_bounds['max_e']})",
    )


def criterion_8(quick: bool = False) -> CriterionResult:
    """Conjectured families reproduce their predicted invariants."""
    instances = [
        (FamilyId.COMPLETE_INTERSECTION, (1, 0)),
        (FamilyId.COMPLETE_INTERSECTION, (1, 1)),
        (FamilyId.COMPLETE_INTERSECTION, (2, 0)),
        (FamilyId.CON3A, (2,)),
        (FamilyId.CON3A, (3,)),
        (FamilyId.CON3B, (3,)),
        (FamilyId.CON3C, (2,)),
    ]
    t0 = time.perf_counter()
    failures: list[str] = []
    findings: list[str] = []
    for family_id, params in instances:
        report = verify_family(build_family(family_id, *params))
        label = report.instance.label
        for check in report.checks:
            if check.status == "INCONSISTENT":
                findings.append(
                    f"FINDING - {label}: {check.name} predicted {check.predicted} "
                    f"but computed {check.computed}"
                )
            elif check.status not in ("CONSISTENT", "PASS"):
                failures.append(f"{label}: {check.name} -> {check.status}")
    if findings:
        # a conjecture clash is a result to surface, and for these pinned
        # instances it also contradicts the oracle-verified baseline
        failures.extend(findings)
    return _result(
        8,
        "conjecture consistency",
        t0,
        failures,
        f"{len(instances)} conjectured instances all CONSISTENT "
        "(delta formulas and complete-intersection presentations)",
    )


CRITERIA: tuple[Callable[..., CriterionResult], ...] = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
)


def run_all(
    quick: bool = False,
    seed: int = DEFAULT_SEED,
    echo: Callable[[str], None] | None = None,
) -> AcceptanceReport:
    """Run every criterion in order, echoing one line per result."""
    results = []
    for func in CRITERIA:
        if func in (criterion_5, criterion_6):
            result = func(quick=quick, seed=seed)
        else:
            result = func(quick=quick)
        results.append(result)
        if echo is not None:
            echo(result.line())
    report = AcceptanceReport(tuple(results))
    if echo is not None:
        echo(report.lines()[-1])
    return report
