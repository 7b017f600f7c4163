"""Realization searches: which delta sets and length sets actually occur?"""
from __future__ import annotations

import tempfile
from pathlib import Path

from deltakit import (
    SearchMode,
    SearchQuery,
    TargetKind,
    enumerate_semigroups,
    parse_target_kind,
    read_catalog,
    realize,
)
from deltakit.errors import UnrealizableByGcdTest

# every numerical semigroup with generators below the bounds, each exactly
# once, in lexicographic order of the minimal generating tuple
print("all semigroups with generators <= 5 and at most 2 of them:")
for S in enumerate_semigroups(5, 2):
    print("  ", S.generators)

# first semigroup whose delta set is exactly {1, 3}
# target kinds are an enum; parse_target_kind accepts the short spellings
kind = parse_target_kind("delta-s")
query = SearchQuery(target_kind=kind, target=(1, 3), max_gen=16, max_e=4)
result = realize(query)
print("\n" + result.summary())
print(f"({result.candidates} candidates, {result.full_scans} full scans)")

# impossible targets are rejected before any scanning: min must equal gcd
try:
    SearchQuery(TargetKind.DELTA_OF_SEMIGROUP, (2, 3), max_gen=16, max_e=4)
except UnrealizableByGcdTest as exc:
    print("\nrejected up front:", exc)

# element targets: find (semigroup, element) whose delta set of one element
# is exactly {2, 3}; exhaustive mode collects all witnesses in bounds
query = SearchQuery(
    TargetKind.DELTA_OF_ELEMENT, (2, 3), max_gen=11, max_e=3,
    mode=SearchMode.EXHAUSTIVE,
)
result = realize(query)
print("\nelement-delta witnesses for {2, 3} with generators <= 11:")
for w in result.witnesses:
    print(f"  {w.semigroup.generators} at element {w.element}")

# a length-set target
query = SearchQuery(TargetKind.LENGTH_SET_OF_ELEMENT, (4, 6, 9), max_gen=11, max_e=3)
result = realize(query)
print("\n" + result.summary())

# semigroup-delta searches can persist every completed scan to a JSONL
# catalog; a rerun reuses the records instead of rescanning
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "catalog.jsonl"
    query = SearchQuery(
        TargetKind.DELTA_OF_SEMIGROUP, (1, 2), max_gen=8, max_e=3,
        mode=SearchMode.EXHAUSTIVE,
    )
    first = realize(query, catalog_path=path)
    second = realize(query, catalog_path=path)
    print(f"\ncatalog run: {first.full_scans} scans first time, "
          f"{second.full_scans} on rerun")
    records = read_catalog(path)
    print(f"{len(records)} catalog records, e.g.")
    for rec in records[:3]:
        print(f"  {rec.generators}: delta {rec.delta}, "
              f"Betti {rec.betti}, F = {rec.frobenius}")

# open question: no semigroup with delta set {1, 3, 4, 5} or {1, 3, 6} is
# known; bounded sweeps come back empty
for target in ((1, 3, 4, 5), (1, 3, 6)):
    query = SearchQuery(TargetKind.DELTA_OF_SEMIGROUP, target, max_gen=12, max_e=3)
    result = realize(query)
    print("\n" + result.summary())
