"""Length sets of elements and the delta set of a whole semigroup."""
from __future__ import annotations

from math import gcd

from deltakit import (
    construct,
    delta_bound,
    delta_of_element,
    delta_semigroup,
    factorizations_of,
    length_set,
)

S = construct([4, 9, 11])

# a factorization of x writes it as a combination of the generators; its
# length is the total number of generators used
x = 36
print(f"factorizations of {x} in {S.generators}:")
for f in factorizations_of(S, x):
    print("  ", f, "length", sum(f))

# the length set collects the distinct lengths, the delta set of x the gaps
# between consecutive lengths
print("length set:", length_set(S, x))
print("delta set of the element:", delta_of_element(S, x))

# the delta set of the semigroup is the union over all elements; scanning
# up to a computable bound provably sees every value
bound = delta_bound(S)
scan = delta_semigroup(S)
print(f"\nscan bound for {S.generators}: {bound}")
print("delta set of the semigroup:", scan.delta, "(partial:", scan.partial, ")")

# min of the delta set equals the gcd of consecutive generator differences
steps = [b - a for a, b in zip(S.generators, S.generators[1:])]
d0 = gcd(*steps) if len(steps) > 1 else steps[0]
print("gcd of generator steps:", d0, "== min delta:", S.min_delta())

# two generators force a single difference: every length set is a full
# arithmetic progression with step n2 - n1
T = construct([3, 7])
print(f"\ndelta set of {T.generators}:", delta_semigroup(T).delta)
print("length set of 21:", length_set(T, 21))

# a richer example: four generators, two delta values
U = construct([6, 13, 14, 16])
print(f"\ndelta set of {U.generators}:", delta_semigroup(U).delta)
