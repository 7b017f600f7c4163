"""Betti elements, R-classes, and minimal presentations."""
from __future__ import annotations

from deltakit import (
    betti_elements,
    construct,
    is_uniquely_presented,
    minimal_presentation,
    r_classes,
    verify_presentation,
)
from deltakit.presentations import betti_scan_cap

S = construct([6, 13, 14, 16])

# two factorizations of the same element are R-related when they share a
# generator; an element whose factorizations split into several R-classes
# is a Betti element, and those are where relations must be anchored
scan = betti_elements(S)
print("Betti elements of", S.generators, ":", scan.values)
for rec in scan.records:
    print(f"  {rec.value}: {rec.factorization_count} factorizations, "
          f"{len(rec.partition.classes)} R-classes")

# the R-class partition of one Betti element
part = r_classes(S, 26)
print("\nR-classes of 26:")
for cls in part.classes:
    print("  ", cls)

# a minimal presentation picks one bridging relation per R-class gap
relations = minimal_presentation(S)
print("\nminimal presentation:")
for rel in relations:
    print(f"  {rel.left} = {rel.right}   [element {rel.element}]")
print("size:", len(relations))
print("uniquely presented:", is_uniquely_presented(S))

# verify_presentation checks a candidate generates the whole factorization
# congruence up to a bound; dropping any single relation must break it
cap = betti_scan_cap(S)
print("\nfull presentation verifies:", verify_presentation(S, relations, cap))
for i in range(len(relations)):
    pruned = relations[:i] + relations[i + 1:]
    print(f"without relation {i}:", verify_presentation(S, pruned, cap))

# a non-Betti element may still have several factorizations, but they all
# sit in one R-class
part = r_classes(S, 54)
print(f"\n54 has {sum(len(c) for c in part.classes)} factorizations in "
      f"{len(part.classes)} R-class(es)")
