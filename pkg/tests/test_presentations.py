"""R-classes, Betti elements, minimal presentations, verification."""
from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltakit.core import construct
from deltakit.errors import (
    EmbeddingDimensionOne,
    InvalidRelation,
    NotAMember,
    TooManyFactorizations,
)
from deltakit.factorizations import factorizations_of
from deltakit.presentations import (
    PresentationRelation,
    _gn_component_count,
    betti_elements,
    betti_scan_cap,
    is_uniquely_presented,
    minimal_presentation,
    r_classes,
    verify_presentation,
)


def _gcd_all(values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


gen_sets = st.sets(st.integers(2, 25), min_size=2, max_size=4).filter(
    lambda s: _gcd_all(s) == 1
)


def unordered(relations):
    # orientation-insensitive view of a presentation
    return {frozenset((r.left, r.right)) for r in relations}


def naive_verify(S, relations, bound):
    # oracle route: breadth-first search on the raw fiber graph, edges given
    # by literal relation applications in both directions
    rels = []
    for left, right in relations:
        rels.append((tuple(left), tuple(right)))
        rels.append((tuple(right), tuple(left)))
    for n in S.members(bound):
        facs = factorizations_of(S, n)
        if len(facs) < 2:
            continue
        seen = {facs[0]}
        stack = [facs[0]]
        while stack:
            f = stack.pop()
            for a, b in rels:
                if all(x >= y for x, y in zip(f, a)):
                    g = tuple(x - y + z for x, y, z in zip(f, a, b))
                    if g not in seen:
                        seen.add(g)
                        stack.append(g)
        if len(seen) != len(facs):
            return False
    return True


def test_r_classes_examples():
    part = r_classes(construct([6, 13, 14, 16]), 32)
    assert part.element == 32
    assert set(map(frozenset, part.classes)) == {
        frozenset({(1, 2, 0, 0), (3, 0, 1, 0)}),
        frozenset({(0, 0, 0, 2)}),
    }
    part = r_classes(construct([7, 15, 17]), 49)
    assert set(map(frozenset, part.classes)) == {
        frozenset({(7, 0, 0)}),
        frozenset({(0, 1, 2)}),
    }
    assert r_classes(construct([7, 15, 17]), 7).classes == (((1, 0, 0),),)
    assert r_classes(construct([7, 15, 17]), 0).classes == (((0, 0, 0),),)


def test_r_classes_ordering():
    part = r_classes(construct([6, 13, 14, 16]), 32)
    # classes ordered by lex-least member, members lex-ascending
    assert part.classes == (((0, 0, 0, 2),), ((1, 2, 0, 0), (3, 0, 1, 0)))


def test_r_classes_errors():
    S = construct([7, 15, 17])
    with pytest.raises(NotAMember):
        r_classes(S, 5)
    with pytest.raises(NotAMember):
        r_classes(S, -3)
    with pytest.raises(TooManyFactorizations):
        r_classes(construct([2, 3]), 600, cap=10)


def test_betti_examples():
    assert betti_elements(construct([7, 15, 17])).values == (45, 49, 51)
    assert betti_elements(construct([6, 13, 14, 16])).values == (26, 28, 30, 32)
    assert betti_elements(construct([4, 9, 11])).values == (20, 22, 27)
    with pytest.raises(EmbeddingDimensionOne):
        betti_elements(construct([1]))


def test_betti_scan_fields():
    scan = betti_elements(construct([7, 15, 17]))
    assert scan.bound == 26129 and scan.complete
    rec = scan.records[1]
    assert rec.value == 49 and rec.factorization_count == 2
    assert len(rec.partition.classes) == 2
    # restricted scans keep the requested bound and stay certified
    small = betti_elements(construct([7, 15, 17]), scan_bound=46)
    assert small.values == (45,) and small.bound == 46 and small.complete
    with pytest.raises(ValueError):
        betti_elements(construct([7, 15, 17]), scan_bound=0)


def test_betti_cap_is_tight_for_pairs():
    # coprime pair: single Betti element n1*n2, sitting exactly at the cap
    S = construct([4, 9])
    assert betti_scan_cap(S) == 36
    assert betti_elements(S).values == (36,)


def test_minimal_presentation_examples():
    assert unordered(minimal_presentation(construct([7, 15, 17]))) == {
        frozenset({(0, 3, 0), (4, 0, 1)}),
        frozenset({(7, 0, 0), (0, 1, 2)}),
        frozenset({(3, 2, 0), (0, 0, 3)}),
    }
    assert unordered(minimal_presentation(construct([4, 9, 11]))) == {
        frozenset({(5, 0, 0), (0, 1, 1)}),
        frozenset({(0, 3, 0), (4, 0, 1)}),
        frozenset({(0, 0, 2), (1, 2, 0)}),
    }
    assert unordered(minimal_presentation(construct([2, 5]))) == {
        frozenset({(5, 0), (0, 2)})
    }


def test_minimal_presentation_canonical_form():
    for rel in minimal_presentation(construct([6, 13, 14, 16])):
        assert rel.left < rel.right
        gens = (6, 13, 14, 16)
        assert sum(a * g for a, g in zip(rel.left, gens)) == rel.element
    elems = [r.element for r in minimal_presentation(construct([6, 13, 14, 16]))]
    assert elems == sorted(elems)


def test_relation_sides_in_distinct_classes():
    for gens in [(7, 15, 17), (6, 13, 14, 16), (4, 9, 11), (5, 6, 19)]:
        S = construct(gens)
        for rel in minimal_presentation(S):
            part = r_classes(S, rel.element)
            holders = [
                ci
                for ci, cls in enumerate(part.classes)
                for f in cls
                if f in (rel.left, rel.right)
            ]
            assert len(holders) == 2 and holders[0] != holders[1]


def test_is_uniquely_presented():
    assert is_uniquely_presented(construct([7, 15, 17]))
    assert not is_uniquely_presented(construct([6, 13, 14, 16]))
    assert is_uniquely_presented(construct([4, 9, 11]))


def test_verify_presentation_examples():
    S = construct([7, 15, 17])
    rels = [(r.left, r.right) for r in minimal_presentation(S)]
    assert verify_presentation(S, rels, 1000)
    for i in range(len(rels)):
        assert not verify_presentation(S, rels[:i] + rels[i + 1 :], 1000)
    assert verify_presentation(construct([2, 5]), [((5, 0), (0, 2))], 510)
    # PresentationRelation objects are accepted directly
    assert verify_presentation(S, minimal_presentation(S), 1000)


def test_verify_presentation_validation():
    S = construct([4, 9, 11])
    with pytest.raises(InvalidRelation):
        verify_presentation(S, [((1, 0, 0), (0, 1, 0))], 100)  # images differ
    with pytest.raises(InvalidRelation):
        verify_presentation(S, [((1, 0), (0, 1))], 100)  # wrong length
    with pytest.raises(InvalidRelation):
        verify_presentation(S, [((1, 0, 0), (1, 0, 0))], 100)  # identical sides
    with pytest.raises(InvalidRelation):
        verify_presentation(S, [((-1, 1, 0), (0, 0, -1))], 100)  # negative
    with pytest.raises(InvalidRelation):
        verify_presentation(
            S, [PresentationRelation((0, 1, 1), (5, 0, 0), 21)], 100
        )  # wrong declared element
    with pytest.raises(ValueError):
        verify_presentation(S, [], 0)


def test_verify_matches_naive_oracle():
    # dual route: the Betti-level check must agree with brute-force fiber
    # connectivity, both on full presentations and with one relation removed
    for gens in [(4, 9, 11), (5, 6, 19), (4, 6, 9), (6, 13, 14, 16)]:
        S = construct(gens)
        bound = betti_scan_cap(S) + 15
        rels = [(r.left, r.right) for r in minimal_presentation(S)]
        assert verify_presentation(S, rels, bound) == naive_verify(S, rels, bound)
        assert verify_presentation(S, rels, bound)
        for i in range(len(rels)):
            sub = rels[:i] + rels[i + 1 :]
            assert verify_presentation(S, sub, bound) == naive_verify(S, sub, bound)


def test_presentation_size_bounds():
    for gens in [(7, 15, 17), (6, 13, 14, 16), (4, 9, 11), (2, 5), (5, 6, 19)]:
        S = construct(gens)
        e, n1 = S.embedding_dimension, S.multiplicity
        size = len(minimal_presentation(S))
        assert size >= e - 1
        assert size <= (2 * n1 - e + 1) * (e - 2) // 2 + 1


@given(gen_sets)
@settings(max_examples=30, deadline=None)
def test_gn_components_match_r_classes(gens):
    S = construct(sorted(gens))
    for n in list(S.members(betti_scan_cap(S)))[:40]:
        if n == 0:
            continue
        assert _gn_component_count(S, n) == len(r_classes(S, n).classes)


@given(st.integers(2, 30), st.integers(2, 30))
@settings(max_examples=40, deadline=None)
def test_coprime_pair_betti(a, b):
    if gcd(a, b) != 1 or a == b:
        return
    S = construct([a, b])
    n1, n2 = S.generators
    assert betti_elements(S).values == (n1 * n2,)
    rels = minimal_presentation(S)
    assert len(rels) == 1
    assert unordered(rels) == {frozenset({(n2, 0), (0, n1)})}


@given(gen_sets)
@settings(max_examples=20, deadline=None)
def test_minimal_presentation_verifies(gens):
    S = construct(sorted(gens))
    bound = betti_scan_cap(S)
    assert verify_presentation(S, minimal_presentation(S), bound)
