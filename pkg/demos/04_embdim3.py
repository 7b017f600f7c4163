"""Structure theory in embedding dimension 3."""
from __future__ import annotations

from deltakit import (
    all_symmetric_decompositions,
    classify_two_element_delta,
    construct,
    delta_semigroup,
    ed3_invariants,
    length_set,
    nonsymmetric_presentation,
    single_delta_criterion,
    symmetric_key_length_set,
)

# non-symmetric case: the three numbers c_i (least multiple of one
# generator expressible through the others) and the coefficient matrix r
# determine the Betti elements, the presentation, and the extreme deltas
S = construct([7, 15, 17])
print(S.generators, "symmetric:", S.is_symmetric())
inv = ed3_invariants(S)
print("c =", (inv.c1, inv.c2, inv.c3))
print("r12..r32 =", (inv.r12, inv.r13, inv.r21, inv.r23, inv.r31, inv.r32))
print("Betti elements:", inv.betti_values)
print("delta parameters:", (inv.delta1, inv.delta2, inv.delta3))
print("max delta predicted:", inv.max_delta)
print("presentation:")
for rel in nonsymmetric_presentation(S):
    print("  ", rel.left, "=", rel.right, " [element", rel.element, "]")
print("scanned delta set:", delta_semigroup(S).delta)

# the middle delta parameter is always |delta1 - delta3|
assert inv.delta2 == abs(inv.delta1 - inv.delta3)

# symmetric case: generators arrange as <a*m1, a*m2, b*m1 + c*m2> and one
# key element's length set controls whether the delta set collapses
T = construct([10, 15, 21])
print("\n", T.generators, "symmetric:", T.is_symmetric())
for D in all_symmetric_decompositions(T):
    print(f"decomposition a={D.a} m1={D.m1} m2={D.m2} b={D.b} c={D.c}")
    print("  key element:", D.key_element,
          "lengths:", symmetric_key_length_set(D))
    print("  single-delta criterion:", single_delta_criterion(D))
print("scanned delta set:", delta_semigroup(T).delta)

# classification of the delta set shape for any embedding dimension 3
print()
for gens in ([7, 15, 17], [5, 6, 19], [10, 15, 21], [8, 9, 11]):
    C = classify_two_element_delta(construct(gens))
    print(f"{gens}: delta {C.delta} -> {C.kind.value}")

# <8, 9, 11> collapses to a single delta value: every length set there is
# an unbroken run of consecutive integers
U = construct([8, 9, 11])
print("\nsample length sets in <8, 9, 11>:")
for x in (72, 88, 99):
    print(f"  L({x}) =", length_set(U, x))
