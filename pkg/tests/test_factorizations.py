"""Length sets, element deltas, and the whole-semigroup delta scan."""
from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltakit.core import construct
from deltakit.errors import EmbeddingDimensionOne, TooManyFactorizations
from deltakit.factorizations import (
    delta_bound,
    delta_of_element,
    delta_semigroup,
    factorizations_of,
    length_of,
    length_set,
    support_of,
)


def _gcd_all(values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


gen_sets = st.sets(st.integers(2, 30), min_size=2, max_size=4).filter(
    lambda s: _gcd_all(s) == 1
)


def naive_length_set(S, x):
    # oracle route: read lengths off the backtracking enumeration, which
    # shares no code with the sliding-window scan
    return tuple(sorted({length_of(f) for f in factorizations_of(S, x)}))


def test_factorizations_examples():
    assert factorizations_of(construct([4, 9, 11]), 36) == (
        (0, 4, 0),
        (4, 1, 1),
        (9, 0, 0),
    )
    assert factorizations_of(construct([6, 13, 14, 16]), 32) == (
        (0, 0, 0, 2),
        (1, 2, 0, 0),
        (3, 0, 1, 0),
    )
    assert factorizations_of(construct([4, 9, 11]), 0) == ((0, 0, 0),)
    assert factorizations_of(construct([4, 9, 11]), 5) == ()
    assert factorizations_of(construct([4, 9, 11]), -3) == ()


def test_factorization_helpers():
    assert length_of((4, 1, 1)) == 6
    assert support_of((4, 0, 1)) == frozenset({0, 2})
    assert support_of((0, 0, 0)) == frozenset()


def test_factorizations_limit():
    S = construct([2, 3])
    assert len(factorizations_of(S, 60)) == 11
    with pytest.raises(TooManyFactorizations):
        factorizations_of(S, 60, limit=10)
    # limit equal to the count is fine
    assert len(factorizations_of(S, 60, limit=11)) == 11


def test_length_set_examples():
    assert length_set(construct([4, 9, 11]), 36) == (4, 6, 9)
    assert length_set(construct([7, 15, 17]), 49) == (3, 7)
    assert length_set(construct([6, 13, 14, 16]), 6) == (1,)
    assert length_set(construct([4, 9, 11]), 0) == (0,)
    assert length_set(construct([4, 9, 11]), 5) == ()
    assert length_set(construct([4, 9, 11]), -1) == ()


def test_delta_of_element_examples():
    assert delta_of_element(construct([4, 9, 11]), 36) == (2, 3)
    assert delta_of_element(construct([6, 13, 14, 16]), 30) == (3,)
    assert delta_of_element(construct([6, 13, 14, 16]), 6) == ()


def test_delta_bound_examples():
    assert delta_bound(construct([6, 13, 14, 16])) == 26720
    assert delta_bound(construct([7, 15, 17])) == 26129
    assert delta_bound(construct([2, 5])) == 510
    with pytest.raises(EmbeddingDimensionOne):
        delta_bound(construct([1]))


def test_delta_semigroup_examples():
    r = delta_semigroup(construct([6, 13, 14, 16]))
    assert r.delta == (1, 3)
    assert r.bound == 26720 and not r.partial
    assert r.generators == (6, 13, 14, 16)
    assert delta_semigroup(construct([7, 15, 17])).delta == (2, 4)
    assert delta_semigroup(construct([5, 6, 19])).delta == (1, 2, 3, 5)
    with pytest.raises(EmbeddingDimensionOne):
        delta_semigroup(construct([1]))


def test_delta_semigroup_partial_flag():
    S = construct([6, 13, 14, 16])
    r = delta_semigroup(S, bound_override=500)
    assert r.partial and r.bound == 500
    assert set(r.delta) <= {1, 3}
    # override at or above the proven bound is not partial
    assert not delta_semigroup(S, bound_override=26720).partial
    assert not delta_semigroup(S, bound_override=30000).partial
    with pytest.raises(ValueError):
        delta_semigroup(S, bound_override=0)


def test_monotone_scan():
    S = construct([5, 6, 19])
    prev: set[int] = set()
    for bound in (50, 200, 800, 3200):
        cur = set(delta_semigroup(S, bound_override=bound).delta)
        assert prev <= cur
        prev = cur
    assert prev <= set(delta_semigroup(S).delta)


def test_embedding_dimension_two():
    for n1, n2 in [(2, 5), (3, 7), (4, 9), (5, 11), (7, 12)]:
        assert delta_semigroup(construct([n1, n2])).delta == (n2 - n1,)


@given(gen_sets, st.integers(0, 400))
@settings(max_examples=80, deadline=None)
def test_dp_matches_enumeration(gens, x):
    S = construct(sorted(gens))
    assert length_set(S, x) == naive_length_set(S, x)


@given(gen_sets)
@settings(max_examples=25, deadline=None)
def test_scan_invariants(gens):
    S = construct(sorted(gens))
    if S.embedding_dimension < 2:
        return
    r = delta_semigroup(S)
    d0 = S.min_delta()
    if not r.delta:
        return
    assert min(r.delta) == d0
    assert _gcd_all(r.delta) == d0
    assert all(d % d0 == 0 for d in r.delta)


def test_element_delta_congruence():
    # every length of a fixed element is congruent mod the semigroup min delta
    S = construct([7, 15, 17])
    d0 = S.min_delta()
    for x, l in [(49, length_set(S, 49)), (105, length_set(S, 105))]:
        assert len({v % d0 for v in l}) == 1
