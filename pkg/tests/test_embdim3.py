"""Embedding-dimension-3 structure: invariants, decompositions, deltas."""
from __future__ import annotations

from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from deltakit.core import construct
from deltakit.embdim3 import (
    Ed3DeltaKind,
    all_symmetric_decompositions,
    classify_two_element_delta,
    ed3_invariants,
    nonsymmetric_presentation,
    single_delta_criterion,
    symmetric_decomposition,
    symmetric_key_length_set,
    symmetric_presentation,
)
from deltakit.errors import (
    NotSymmetric,
    SymmetricSemigroup,
    WrongEmbeddingDimension,
)
from deltakit.factorizations import delta_semigroup, factorizations_of, length_set
from deltakit.presentations import minimal_presentation, verify_presentation


def ed3_triples(limit):
    # all minimal generator triples n1 < n2 < n3 <= limit with gcd 1
    for n1 in range(3, limit + 1):
        for n2 in range(n1 + 1, limit + 1):
            for n3 in range(n2 + 1, limit + 1):
                if gcd(gcd(n1, n2), n3) != 1:
                    continue
                S = construct([n1, n2, n3])
                if S.generators == (n1, n2, n3):
                    yield S


triples = st.tuples(
    st.integers(3, 28), st.integers(4, 29), st.integers(5, 30)
).filter(lambda t: t[0] < t[1] < t[2] and gcd(gcd(t[0], t[1]), t[2]) == 1)


def test_invariants_example():
    inv = ed3_invariants(construct([4, 9, 11]))
    assert (inv.c1, inv.c2, inv.c3) == (5, 3, 2)
    assert (inv.r12, inv.r13) == (1, 1)
    assert (inv.r21, inv.r23) == (4, 1)
    assert (inv.r31, inv.r32) == (1, 2)
    assert (inv.delta1, inv.delta2, inv.delta3) == (3, 2, 1)
    assert inv.max_delta == 3
    assert inv.betti_values == (20, 22, 27)


def test_invariants_errors():
    with pytest.raises(WrongEmbeddingDimension):
        ed3_invariants(construct([2, 5]))
    with pytest.raises(WrongEmbeddingDimension):
        ed3_invariants(construct([6, 13, 14, 16]))
    with pytest.raises(SymmetricSemigroup):
        ed3_invariants(construct([8, 9, 15]))
    with pytest.raises(NotSymmetric):
        symmetric_decomposition(construct([4, 9, 11]))
    with pytest.raises(WrongEmbeddingDimension):
        symmetric_decomposition(construct([2, 5]))
    with pytest.raises(WrongEmbeddingDimension):
        classify_two_element_delta(construct([2, 5]))


def test_nonsymmetric_presentation_example():
    S = construct([4, 9, 11])
    rels = nonsymmetric_presentation(S)
    assert {frozenset((r.left, r.right)) for r in rels} == {
        frozenset({(5, 0, 0), (0, 1, 1)}),
        frozenset({(0, 3, 0), (4, 0, 1)}),
        frozenset({(0, 0, 2), (1, 2, 0)}),
    }
    assert rels == minimal_presentation(S)


def test_decomposition_examples():
    D = symmetric_decomposition(construct([8, 9, 15]))
    assert (D.a, D.m1, D.m2, D.b, D.c) == (3, 3, 5, 1, 1)
    assert (D.r, D.s) == (0, 0)
    assert D.key_element == 24
    D = symmetric_decomposition(construct([4, 6, 9]))
    assert (D.a, D.m1, D.m2, D.b, D.c) == (2, 2, 3, 3, 1)
    assert (D.r, D.s) == (0, 1)


def test_symmetric_presentation():
    for gens in [(8, 9, 15), (4, 6, 9), (10, 14, 15)]:
        S = construct(gens)
        D = symmetric_decomposition(S)
        rels = symmetric_presentation(D)
        assert len(rels) == 2
        assert len(minimal_presentation(S)) == 2
        assert verify_presentation(S, rels, 600)


def test_key_length_set_example():
    D = symmetric_decomposition(construct([8, 9, 15]))
    assert symmetric_key_length_set(D) == (2, 3)
    assert length_set(construct([8, 9, 15]), 24) == (2, 3)


def test_classification_examples():
    c = classify_two_element_delta(construct([8, 9, 15]))
    assert c.kind is Ed3DeltaKind.SIZE_TWO_CONFORMING
    assert c.delta == (1, 2) and c.min_delta == 1
    c = classify_two_element_delta(construct([5, 6, 19]))
    assert c.kind is Ed3DeltaKind.SIZE_THREE_PLUS
    assert c.delta == (1, 2, 3, 5)
    c = classify_two_element_delta(construct([4, 9, 11]))
    assert c.kind is Ed3DeltaKind.SIZE_THREE_PLUS
    assert c.delta == (1, 2, 3)
    c = classify_two_element_delta(construct([7, 15, 17]))
    assert c.kind is Ed3DeltaKind.SIZE_TWO_CONFORMING
    assert c.delta == (2, 4) and c.min_delta == 2


@given(triples)
@settings(max_examples=40, deadline=None)
def test_invariant_identities(t):
    S = construct(list(t))
    assume(S.embedding_dimension == 3)
    if S.is_symmetric():
        return
    inv = ed3_invariants(S)
    n1, n2, n3 = inv.generators
    # the dataclass re-checks all identities on construction; spot-check the
    # headline ones explicitly
    assert inv.c1 * n1 == inv.r12 * n2 + inv.r13 * n3
    assert inv.delta2 == abs(inv.delta1 - inv.delta3)
    assert inv.delta1 > 0 and inv.delta3 > 0


@given(triples)
@settings(max_examples=25, deadline=None)
def test_sigma_matches_scanned_presentation(t):
    S = construct(list(t))
    assume(S.embedding_dimension == 3)
    if S.is_symmetric():
        return
    assert nonsymmetric_presentation(S) == minimal_presentation(S)


def test_small_sweep_nonsymmetric():
    # delta extremes and divisibility against the exact scan
    for S in ed3_triples(21):
        if S.is_symmetric():
            continue
        inv = ed3_invariants(S)
        delta = delta_semigroup(S).delta
        assert max(delta) == inv.max_delta
        g = gcd(inv.delta1, inv.delta3)
        assert all(d % g == 0 for d in delta)
        from deltakit.presentations import betti_elements

        assert betti_elements(S).values == inv.betti_values


def test_small_sweep_symmetric():
    step_hits = 0
    for S in ed3_triples(24):
        if not S.is_symmetric():
            continue
        for D in all_symmetric_decompositions(S):
            # every decomposition regenerates the semigroup
            regen = construct(
                [D.a * D.m1, D.a * D.m2, D.b * D.m1 + D.c * D.m2]
            )
            assert regen == S
            # predicted key length set matches the scan, for every
            # decomposition, not just the first
            assert symmetric_key_length_set(D) == length_set(S, D.key_element)
        # single-delta criterion: some decomposition puts a into the
        # (widened) progression exactly when the delta set is a singleton
        delta = delta_semigroup(S).delta
        hits = any(
            single_delta_criterion(D) for D in all_symmetric_decompositions(S)
        )
        assert (len(delta) == 1) == hits
        step_hits += hits
    assert step_hits > 0  # the sweep exercised both branches


def test_single_delta_criterion_is_decomposition_sensitive():
    # <9,10,15> decomposes via (9,15) as a=3,m=(3,5),b=0,c=2 (criterion
    # fails) and via (10,15) as a=5,m=(2,3),b=3,c=1 (criterion holds); its
    # delta set is the singleton {1}, so only the exists-form is sound
    S = construct([9, 10, 15])
    ds = all_symmetric_decompositions(S)
    assert [(D.a, D.m1, D.m2, D.b, D.c) for D in ds] == [
        (3, 3, 5, 0, 2),
        (5, 2, 3, 3, 1),
    ]
    assert [single_delta_criterion(D) for D in ds] == [False, True]
    assert delta_semigroup(S).delta == (1,)
    # and the first decomposition's key-element prediction still holds
    assert symmetric_key_length_set(ds[0]) == length_set(S, ds[0].key_element)


def test_extra_element_factorizations():
    # beyond the key element: x = a(bm1+cm2) + a*m1*m2 has the two stated
    # factorizations whenever a < b+c-s(m2-m1)
    checked = 0
    for S in ed3_triples(24):
        if not S.is_symmetric():
            continue
        D = symmetric_decomposition(S)
        if not D.a < D.b + D.c - D.s * (D.m2 - D.m1):
            continue
        x = D.key_element + D.a * D.m1 * D.m2
        p1, p2, p3 = D.positions
        first = [0, 0, 0]
        first[p1], first[p3] = D.m2, D.a
        second = [0, 0, 0]
        second[p1], second[p2] = D.b - D.s * D.m2, D.c + D.s * D.m1 + D.m1
        facs = factorizations_of(S, x)
        assert tuple(first) in facs and tuple(second) in facs
        checked += 1
    assert checked > 0


def test_two_element_theorem_small_sweep():
    # |delta| = 2 forces {d, 2d}: no violations anywhere in the range
    for S in ed3_triples(20):
        c = classify_two_element_delta(S)
        assert c.kind is not Ed3DeltaKind.SIZE_TWO_VIOLATION
        if c.kind is Ed3DeltaKind.SIZE_TWO_CONFORMING:
            assert c.delta == (c.min_delta, 2 * c.min_delta)
        if len(c.delta) > 1:
            assert 2 * c.min_delta in c.delta
        if len(c.delta) > 2:
            assert 3 * c.min_delta in c.delta
