"""Cover congruences, Con(L), quotients, kernels."""

import pytest

from corelabel import (
    Congruence,
    are_isomorphic,
    as_lattice,
    cg,
    cg_join_irreducible,
    congruence_lattice,
    from_covers,
    identity_congruence,
    is_congruence_uniform,
    kernel_irreducibles,
    quotient,
)
from corelabel.fixtures import load_lattice


def boolean2():
    got = as_lattice(from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)]))
    return got


def test_cg_golden_on_the_pentagon():
    n5 = load_lattice("fig2a")
    theta = cg(n5, 1, 3)
    assert theta.classes() == [[0], [1, 3], [2], [4]]
    assert cg(n5, 3, 1) == theta
    assert theta.collapses(1, 3) and not theta.collapses(0, 2)


def test_cg_rejects_non_covers():
    n5 = load_lattice("fig2a")
    with pytest.raises(ValueError):
        cg(n5, 0, 4)
    with pytest.raises(ValueError):
        cg(n5, 1, 1)


def test_cg_join_irreducible():
    n5 = load_lattice("fig2a")
    assert cg_join_irreducible(n5, 3) == cg(n5, 1, 3)
    with pytest.raises(ValueError):
        cg_join_irreducible(n5, 4)
    with pytest.raises(ValueError):
        cg_join_irreducible(n5, 0)


def test_congruence_validation():
    n5 = load_lattice("fig2a")
    with pytest.raises(ValueError):
        Congruence(n5, (0, 0, 0))
    with pytest.raises(ValueError):
        Congruence(n5, (0, 1, 2, 3, 3))
    with pytest.raises(ValueError):
        Congruence(n5, (0, 1, 1, 3, 4))
    with pytest.raises(ValueError):
        Congruence(n5, (0, 0, 2, 3, 4))


def test_congruence_lattice_of_the_pentagon():
    n5 = load_lattice("fig2a")
    con = congruence_lattice(n5)
    assert len(con.congruences) == 5
    parts = [theta.classes() for theta in con.congruences]
    assert parts == [
        [[0], [1], [2], [3], [4]],
        [[0], [1, 3], [2], [4]],
        [[0, 1, 3], [2, 4]],
        [[0, 2], [1, 3, 4]],
        [[0, 1, 2, 3, 4]],
    ]
    assert con.lattice.n == 5


def test_congruence_lattice_sizes():
    assert len(congruence_lattice(load_lattice("fig1a")).congruences) == 2
    assert len(congruence_lattice(boolean2()).congruences) == 4


def test_identity_and_full_congruences():
    n5 = load_lattice("fig2a")
    ident = identity_congruence(n5)
    assert ident.num_classes() == 5
    full = Congruence(n5, (0,) * 5)
    assert full.num_classes() == 1
    assert ident.refines(full) and not full.refines(ident)
    for theta in congruence_lattice(n5).congruences:
        assert ident.refines(theta) and theta.refines(full)


def test_quotient_golden():
    n5 = load_lattice("fig2a")
    q, proj = quotient(n5, cg(n5, 1, 3))
    assert q.n == 4
    assert proj == [0, 1, 2, 1, 3]
    assert are_isomorphic(q.poset, boolean2().poset)


def test_quotient_by_identity_and_full():
    n5 = load_lattice("fig2a")
    q, proj = quotient(n5, identity_congruence(n5))
    assert q.poset == n5.poset and proj == [0, 1, 2, 3, 4]
    q, proj = quotient(n5, Congruence(n5, (0,) * 5))
    assert q.n == 1 and proj == [0] * 5


def test_quotient_rejects_foreign_congruence():
    n5 = load_lattice("fig2a")
    other = load_lattice("fig1a")
    theta = identity_congruence(other)
    with pytest.raises(ValueError):
        quotient(n5, theta)


def test_kernel_irreducibles():
    n5 = load_lattice("fig2a")
    assert kernel_irreducibles(n5, cg(n5, 1, 3)) == [3]
    assert kernel_irreducibles(n5, identity_congruence(n5)) == []
    assert kernel_irreducibles(n5, Congruence(n5, (0,) * 5)) == [1, 2, 3]


def test_cg_is_finest_collapsing_congruence():
    for name in ("fig2a", "fig7a", "fig8a"):
        lat = load_lattice(name)
        con = congruence_lattice(lat).congruences
        for x, y in lat.poset.covers:
            theta = cg(lat, x, y)
            for other in con:
                if other.collapses(x, y):
                    assert theta.refines(other)


def test_uniformity_verdicts():
    assert is_congruence_uniform(load_lattice("fig2a"))
    assert is_congruence_uniform(load_lattice("fig8a"))
    m3 = is_congruence_uniform(load_lattice("fig1a"))
    assert not m3 and m3.witness == ("join", 1, 2)
    fig5 = is_congruence_uniform(load_lattice("fig5"))
    assert not fig5 and fig5.witness == ("join", 3, 5)
