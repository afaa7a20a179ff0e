"""Cover-DAG posets, Mobius values, serialization."""

import pytest
from hypothesis import given, strategies as st

from corelabel import CycleError, FormatError, from_covers
from corelabel.fixtures import load_poset
from corelabel.poset import (
    read_poset_json,
    read_poset_text,
    write_poset_json,
    write_poset_text,
)


@st.composite
def posets(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    edges = [
        (i, j)
        for j in range(1, n)
        for i in range(j)
        if draw(st.booleans())
    ]
    return from_covers(n, edges)


def test_from_covers_reduces_transitive_edges():
    p = from_covers(3, [(0, 1), (1, 2), (0, 2)])
    assert set(p.covers) == {(0, 1), (1, 2)}


def test_from_covers_rejects_cycles():
    with pytest.raises(CycleError) as err:
        from_covers(3, [(0, 1), (1, 2), (2, 0)])
    assert set(err.value.cycle) == {0, 1, 2}


def test_leq_and_extremes():
    p = load_poset("fig1a")
    assert p.n == 5
    assert p.leq(0, 4) and p.leq(1, 4) and not p.leq(1, 2)
    assert p.minimals() == [0]
    assert p.maximals() == [4]


def test_mobius_of_diamond_and_chain():
    assert load_poset("fig1a").mobius(0, 4) == 2
    ch = from_covers(3, [(0, 1), (1, 2)])
    assert ch.mobius(0, 2) == 0
    assert ch.mobius(0, 1) == -1
    assert ch.mobius(0, 0) == 1


def test_maximal_chains_of_diamond():
    chains = list(load_poset("fig1a").maximal_chains())
    assert len(chains) == 3
    assert all(c[0] == 0 and c[-1] == 4 for c in chains)


def test_antichain_and_convexity():
    p = load_poset("fig1a")
    assert p.is_antichain([1, 2, 3])
    assert not p.is_antichain([0, 1])
    assert p.is_order_convex([1])
    assert p.is_order_convex([0, 1, 2, 3, 4])


def test_marked_set_of_the_doubling_example_is_not_convex():
    p = load_poset("fig3_left")
    assert not p.is_order_convex([1, 2, 4, 5])


def test_text_round_trip():
    p = load_poset("fig2a")
    assert read_poset_text(write_poset_text(p)) == p


def test_text_reader_reports_line_numbers():
    with pytest.raises(FormatError) as err:
        read_poset_text("3\n0 1\nbogus line\n")
    assert err.value.lineno == 3


def test_json_round_trip():
    p = load_poset("fig7a")
    assert read_poset_json(write_poset_json(p)) == p


@given(posets())
def test_mobius_sums_vanish_off_the_diagonal(p):
    for x in range(p.n):
        for y in range(p.n):
            if not p.leq(x, y):
                continue
            total = sum(p.mobius(x, z) for z in range(p.n) if p.leq(x, z) and p.leq(z, y))
            assert total == (1 if x == y else 0)


@given(posets())
def test_dual_swaps_mobius_arguments(p):
    d = p.dual()
    assert d.dual() == p
    last = p.n - 1
    for x in range(p.n):
        for y in range(p.n):
            if p.leq(x, y):
                assert d.leq(last - y, last - x)
                assert d.mobius(last - y, last - x) == p.mobius(x, y)


@given(posets())
def test_maximal_chains_step_through_covers(p):
    covers = set(p.covers)
    for chain in p.maximal_chains():
        assert chain[0] in p.minimals()
        assert chain[-1] in p.maximals()
        assert all((a, b) in covers for a, b in zip(chain, chain[1:]))


@given(posets())
def test_rebuilding_from_covers_is_stable(p):
    assert from_covers(p.n, p.covers) == p
    assert read_poset_text(write_poset_text(p)) == p
