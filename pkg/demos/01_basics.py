"""Construct numerical semigroups and read off their basic invariants."""
from __future__ import annotations

from deltakit import construct

# a numerical semigroup is the set of non-negative integer combinations of
# its generators; gcd 1 means it has only finitely many gaps
S = construct([6, 13, 14, 16])
print("generators:", S.generators)
print("embedding dimension:", S.embedding_dimension)
print("multiplicity:", S.multiplicity)
print("Frobenius number:", S.frobenius)

profile = S.gap_profile()
print("genus (number of gaps):", profile.genus)
print("gaps:", profile.gaps)
print("symmetric:", S.is_symmetric())

# membership is a bitset lookup after one pass of the numerical recurrence
print("\nmembership around the Frobenius number:")
for x in range(S.frobenius - 2, S.frobenius + 4):
    print(f"  {x}: {'in' if S.contains(x) else 'out'}")

# the apery set collects the smallest member in each residue class mod m;
# everything about the semigroup above the Frobenius number follows from it
print("\nApery set mod", S.multiplicity, ":", S.apery())

# redundant generators are dropped and the minimal system is recorded
T = construct([4, 9, 11, 13])
print("\nconstruct([4, 9, 11, 13]) minimalizes to", T.generators)
print("input was minimal:", T.input_was_minimal)

# the whole-numbers semigroup is allowed: one generator, no gaps
W = construct([1])
print("\nconstruct([1]):", W.generators, "Frobenius", W.frobenius)
