"""Command-line entry point: every module behind one `deltakit` command.

Human-readable tables by default, canonical single-line JSON with --json
(sorted keys, no whitespace, set-valued arrays sorted), so JSON output
round-trips byte-identically.  Exit codes: 0 success, 2 validation errors,
3 a verification command found a failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import acceptance
from .core import NumericalSemigroup, construct
from .embdim3 import (
    all_symmetric_decompositions,
    classify_two_element_delta,
    ed3_invariants,
    nonsymmetric_presentation,
    single_delta_criterion,
    symmetric_key_length_set,
)
from .errors import BadParameters, DeltakitError
from .factorizations import (
    delta_bound,
    delta_of_element,
    delta_semigroup,
    factorizations_of,
    length_set,
)
from .families import build_family, parse_family_id, verify_family
from .presentations import (
    betti_elements,
    is_uniquely_presented,
    minimal_presentation,
)
from .search import SearchMode, SearchQuery, parse_target_kind, realize

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_VERIFY_FAILED = 3


def parse_generators(text: str) -> tuple[int, ...]:
    """Comma-separated base-10 generators, whitespace tolerated, with an
    optional angle-bracket wrapper: "6,13,14,16" or "<6, 13, 14, 16>"."""
    cleaned = text.strip()
    for bracket in ("<", ">", "⟨", "⟩"):
        cleaned = cleaned.replace(bracket, "")
    tokens = [tok.strip() for tok in cleaned.split(",")]
    if not any(tokens):
        raise BadParameters("no generators given")
    values = []
    for tok in tokens:
        if not tok.isdigit():
            raise BadParameters(f"generators must be base-10 positive integers, got {tok!r}")
        values.append(int(tok, 10))
    return tuple(values)


def _parse_int_list(text: str) -> tuple[int, ...]:
    return parse_generators(text)


def fmt_set(values) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def fmt_gens(gens) -> str:
    return "<" + ", ".join(str(n) for n in gens) + ">"


def emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _semigroup_from(args) -> NumericalSemigroup:
    S = construct(parse_generators(args.generators))
    if not S.input_was_minimal:
        print(f"note: generators minimalized to {fmt_gens(S.generators)}", file=sys.stderr)
    return S


def cmd_delta(args) -> int:
    S = _semigroup_from(args)
    if args.element is not None:
        delta = delta_of_element(S, args.element)
        if not length_set(S, args.element):
            print(f"note: {args.element} is not in the semigroup", file=sys.stderr)
        if args.json:
            emit_json(
                {
                    "delta": list(delta),
                    "element": args.element,
                    "generators": list(S.generators),
                }
            )
        else:
            print(f"Δ({args.element}) = {fmt_set(delta)}")
        return EXIT_OK
    if S.embedding_dimension == 1:
        # the whole-numbers semigroup: empty delta set by convention
        print("warning: embedding dimension 1, delta set is empty", file=sys.stderr)
        if args.json:
            emit_json({"bound": 0, "delta": [], "generators": [1], "partial": False})
        else:
            print("Δ(S) = {}")
        return EXIT_OK
    scan = delta_semigroup(S, bound_override=args.bound)
    if scan.partial:
        print(
            f"warning: partial scan (bound {scan.bound} below the full bound "
            f"{delta_bound(S)}); the delta set may be incomplete",
            file=sys.stderr,
        )
    if args.json:
        emit_json(
            {
                "bound": scan.bound,
                "delta": list(scan.delta),
                "generators": list(S.generators),
                "partial": scan.partial,
            }
        )
    else:
        print(f"Δ(S) = {fmt_set(scan.delta)}")
    return EXIT_OK


def cmd_lengths(args) -> int:
    S = _semigroup_from(args)
    lengths = length_set(S, args.element)
    if not lengths:
        print(f"note: {args.element} is not in the semigroup", file=sys.stderr)
    if args.json:
        emit_json(
            {
                "element": args.element,
                "generators": list(S.generators),
                "lengths": list(lengths),
            }
        )
    else:
        print(fmt_set(lengths))
    return EXIT_OK


def cmd_factorizations(args) -> int:
    S = _semigroup_from(args)
    facs = factorizations_of(S, args.element, limit=args.limit)
    if args.json:
        emit_json(
            {
                "element": args.element,
                "factorizations": [list(f) for f in facs],
                "generators": list(S.generators),
            }
        )
        return EXIT_OK
    if not facs:
        print(f"{args.element} is not in the semigroup")
        return EXIT_OK
    print(f"{len(facs)} factorization(s) of {args.element}:")
    for f in facs:
        print("  (" + ", ".join(str(a) for a in f) + ")  length " + str(sum(f)))
    return EXIT_OK


def cmd_betti(args) -> int:
    S = _semigroup_from(args)
    scan = betti_elements(S)
    if args.json:
        emit_json(
            {
                "betti": list(scan.values),
                "bound": scan.bound,
                "complete": scan.complete,
                "generators": list(S.generators),
                "records": [
                    {
                        "element": rec.value,
                        "factorizations": rec.factorization_count,
                        "r_classes": len(rec.partition.classes),
                    }
                    for rec in scan.records
                ],
            }
        )
        return EXIT_OK
    print(f"Betti elements: {fmt_set(scan.values)}")
    for rec in scan.records:
        print(
            f"  {rec.value}: {rec.factorization_count} factorizations, "
            f"{len(rec.partition.classes)} R-classes"
        )
    return EXIT_OK


def cmd_minpres(args) -> int:
    S = _semigroup_from(args)
    relations = minimal_presentation(S)
    unique = is_uniquely_presented(S)
    if args.json:
        emit_json(
            {
                "generators": list(S.generators),
                "relations": [
                    {
                        "element": rel.element,
                        "left": list(rel.left),
                        "right": list(rel.right),
                    }
                    for rel in relations
                ],
                "size": len(relations),
                "uniquely_presented": unique,
            }
        )
        return EXIT_OK
    print(f"minimal presentation ({len(relations)} relations):")
    for rel in relations:
        left = "(" + ", ".join(str(a) for a in rel.left) + ")"
        right = "(" + ", ".join(str(a) for a in rel.right) + ")"
        print(f"  {left} = {right}  [element {rel.element}]")
    print(f"uniquely presented: {'yes' if unique else 'no'}")
    return EXIT_OK


def cmd_ed3(args) -> int:
    S = _semigroup_from(args)
    classification = classify_two_element_delta(S)
    symmetric = S.is_symmetric()
    if symmetric:
        decomps = all_symmetric_decompositions(S)
        payload = {
            "delta": list(classification.delta),
            "delta_kind": classification.kind.value,
            "decompositions": [
                {
                    "a": D.a,
                    "m1": D.m1,
                    "m2": D.m2,
                    "b": D.b,
                    "c": D.c,
                    "key_element": D.key_element,
                    "key_length_set": list(symmetric_key_length_set(D)),
                    "single_delta": single_delta_criterion(D),
                }
                for D in decomps
            ],
            "generators": list(S.generators),
            "symmetric": True,
        }
        if args.json:
            emit_json(payload)
            return EXIT_OK
        print(f"{fmt_gens(S.generators)}: symmetric")
        print(f"delta set: {fmt_set(classification.delta)} ({classification.kind.value})")
        if not decomps:
            print("no symmetric decomposition <a*m1, a*m2, b*m1 + c*m2> found")
        for D in decomps:
            klen = fmt_set(symmetric_key_length_set(D))
            print(
                f"decomposition a={D.a} m1={D.m1} m2={D.m2} b={D.b} c={D.c}: "
                f"key element {D.key_element} with lengths {klen}, "
                f"single-delta criterion {'holds' if single_delta_criterion(D) else 'fails'}"
            )
        return EXIT_OK
    inv = ed3_invariants(S)
    relations = nonsymmetric_presentation(S)
    if args.json:
        emit_json(
            {
                "betti": list(inv.betti_values),
                "c": [inv.c1, inv.c2, inv.c3],
                "delta": list(classification.delta),
                "delta_kind": classification.kind.value,
                "delta_parameters": [inv.delta1, inv.delta2, inv.delta3],
                "generators": list(S.generators),
                "max_delta": inv.max_delta,
                "min_delta": classification.min_delta,
                "r": [
                    [0, inv.r12, inv.r13],
                    [inv.r21, 0, inv.r23],
                    [inv.r31, inv.r32, 0],
                ],
                "relations": [
                    {
                        "element": rel.element,
                        "left": list(rel.left),
                        "right": list(rel.right),
                    }
                    for rel in relations
                ],
                "symmetric": False,
            }
        )
        return EXIT_OK
    print(f"{fmt_gens(S.generators)}: non-symmetric")
    print(f"c = ({inv.c1}, {inv.c2}, {inv.c3})")
    print(f"r12={inv.r12} r13={inv.r13} r21={inv.r21} r23={inv.r23} r31={inv.r31} r32={inv.r32}")
    print(f"delta parameters: ({inv.delta1}, {inv.delta2}, {inv.delta3}), max delta {inv.max_delta}")
    print(f"Betti elements: {fmt_set(inv.betti_values)}")
    print(f"delta set: {fmt_set(classification.delta)} ({classification.kind.value})")
    print("presentation:")
    for rel in relations:
        left = "(" + ", ".join(str(a) for a in rel.left) + ")"
        right = "(" + ", ".join(str(a) for a in rel.right) + ")"
        print(f"  {left} = {right}  [element {rel.element}]")
    return EXIT_OK


def cmd_family(args) -> int:
    family_id = parse_family_id(args.family)
    instance = build_family(
        family_id, *args.params, three_generator=args.three_generator
    )
    if not args.verify:
        P = instance.predictions
        if args.json:
            payload = {
                "conjectural": P.conjectural,
                "family": instance.family_id.value,
                "generators": list(instance.semigroup.generators),
                "label": instance.label,
                "params": list(instance.params),
            }
            if P.delta is not None:
                payload["delta"] = list(P.delta)
            if P.betti is not None:
                payload["betti"] = list(P.betti)
            if P.presentation_size is not None:
                payload["presentation_size"] = P.presentation_size
            emit_json(payload)
            return EXIT_OK
        print(f"{instance.label}: {fmt_gens(instance.semigroup.generators)}")
        kind = "conjectured" if P.conjectural else "proven"
        print(f"predictions ({kind}):")
        if P.delta is not None:
            print(f"  delta set {fmt_set(P.delta)}")
        if P.betti is not None:
            print(f"  Betti elements {fmt_set(P.betti)}")
        if P.presentation_size is not None:
            print(f"  presentation size {P.presentation_size}")
        if P.symmetric is not None:
            print(f"  symmetric: {'yes' if P.symmetric else 'no'}")
        if P.uniquely_presented is not None:
            print(f"  uniquely presented: {'yes' if P.uniquely_presented else 'no'}")
        return EXIT_OK
    report = verify_family(instance)
    if args.json:
        emit_json(report.as_dict())
        return EXIT_VERIFY_FAILED if not report.ok else EXIT_OK
    print(f"{instance.label}: {fmt_gens(instance.semigroup.generators)}")
    counts: dict[str, int] = {}
    for check in report.checks:
        counts[check.status] = counts.get(check.status, 0) + 1
        line = f"  [{check.status}] {check.name}"
        if check.status in ("FAIL", "INCONSISTENT"):
            line += f": predicted {check.predicted}, computed {check.computed}"
        print(line)
    summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
    print(f"{instance.label}: {summary}")
    if any(c.status == "INCONSISTENT" for c in report.checks):
        print(
            "FINDING: a conjectured prediction disagrees with computation; "
            "this is a result worth reporting, not a tooling error"
        )
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_search(args) -> int:
    query = SearchQuery(
        target_kind=parse_target_kind(args.target_kind),
        target=_parse_int_list(args.target),
        max_gen=args.max_gen,
        max_e=args.max_e,
        max_frobenius=args.max_frobenius,
        mode=SearchMode.EXHAUSTIVE if args.exhaustive else SearchMode.FIRST_HIT,
    )
    result = realize(query, catalog_path=args.catalog)
    if args.json:
        emit_json(
            {
                "candidates": result.candidates,
                "exhausted": result.exhausted,
                "found": result.found,
                "full_scans": result.full_scans,
                "query": {
                    "max_e": query.max_e,
                    "max_frobenius": query.max_frobenius,
                    "max_gen": query.max_gen,
                    "mode": query.mode.value,
                    "target": list(query.target),
                    "target_kind": query.target_kind.value,
                },
                "witnesses": [w.as_dict() for w in result.witnesses],
            }
        )
        return EXIT_OK
    print(result.summary())
    print(
        f"searched {result.candidates} candidate semigroups "
        f"({result.full_scans} full scans)"
    )
    return EXIT_OK


def cmd_verify_all(args) -> int:
    if args.json:
        report = acceptance.run_all(quick=args.quick, seed=args.seed, echo=None)
        emit_json(
            {
                "ok": report.ok,
                "quick": args.quick,
                "results": [
                    {
                        "detail": r.detail,
                        "number": r.number,
                        "passed": r.passed,
                        "seconds": round(r.seconds, 3),
                        "title": r.title,
                    }
                    for r in report.results
                ],
                "seed": args.seed,
            }
        )
    else:
        report = acceptance.run_all(quick=args.quick, seed=args.seed, echo=print)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltakit",
        description=(
            "Factorization invariants of numerical semigroups: delta sets, "
            "length sets, Betti elements, minimal presentations, families, "
            "and realization searches."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, generators: bool = True):
        p = sub.add_parser(name, help=help_text)
        if generators:
            p.add_argument("generators", help="e.g. 6,13,14,16 or '<6, 13, 14, 16>'")
        p.add_argument("--json", action="store_true", help="canonical JSON output")
        return p

    p = add("delta", "delta set of a semigroup or of one element")
    p.add_argument("--element", type=int, help="compute delta of this element instead")
    p.add_argument("--bound", type=int, help="override the scan bound (marks the result partial)")
    p.set_defaults(func=cmd_delta)

    p = add("lengths", "length set of an element")
    p.add_argument("--element", type=int, required=True)
    p.set_defaults(func=cmd_lengths)

    p = add("factorizations", "all factorizations of an element")
    p.add_argument("--element", type=int, required=True)
    p.add_argument("--limit", type=int, help="abort beyond this many factorizations")
    p.set_defaults(func=cmd_factorizations)

    p = add("betti", "Betti elements with fiber statistics")
    p.set_defaults(func=cmd_betti)

    p = add("minpres", "minimal presentation")
    p.set_defaults(func=cmd_minpres)

    p = add("ed3", "embedding-dimension-3 structure report")
    p.set_defaults(func=cmd_ed3)

    p = sub.add_parser("family", help="build or verify a named family instance")
    p.add_argument(
        "family",
        help="minpres | arith48 | gap49 | symmetric-d | ci | con3a | con3b | con3c | con3d | power",
    )
    p.add_argument("params", nargs="+", type=int, help="family parameters")
    p.add_argument("--verify", action="store_true", help="compare predictions against computation")
    p.add_argument(
        "--three-generator",
        action="store_true",
        help="power family only: drop the upper generator range",
    )
    p.add_argument("--json", action="store_true", help="canonical JSON output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", help="bounded realization search")
    p.add_argument("--target-kind", required=True, help="delta-s | delta-x | length-x")
    p.add_argument("--target", required=True, help="e.g. 1,3")
    p.add_argument("--max-gen", type=int, required=True)
    p.add_argument("--max-e", type=int, required=True)
    p.add_argument("--max-frobenius", type=int)
    p.add_argument("--exhaustive", action="store_true", help="collect every witness in bounds")
    p.add_argument("--catalog", help="JSONL catalog path for resumable delta-s searches")
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker count (accepted for compatibility; execution is sequential)",
    )
    p.add_argument("--json", action="store_true", help="canonical JSON output")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-all", help="run the acceptance suite")
    p.add_argument("--quick", action="store_true", help="reduced parameter grid")
    p.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker count (accepted for compatibility; execution is sequential)",
    )
    p.add_argument("--json", action="store_true", help="canonical JSON output")
    p.set_defaults(func=cmd_verify_all)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    threads = getattr(args, "threads", 1)
    if threads is not None and threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        return args.func(args)
    except DeltakitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def main() -> None:
    sys.exit(run())
