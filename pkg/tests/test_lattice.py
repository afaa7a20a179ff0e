"""Lattice verdicts, irreducibles, semidistributivity, crosscuts."""

import pytest

from corelabel import (
    Lattice,
    NotALattice,
    as_lattice,
    atoms,
    canonical_join_representation,
    coatoms,
    crosscut_mobius,
    from_covers,
    is_atomic,
    is_crosscut,
    is_join_semidistributive,
    is_meet_semidistributive,
    is_semidistributive,
    is_spherical,
    join_irreducibles,
    meet_irreducibles,
)
from corelabel.fixtures import load_lattice, load_poset


def chain(n):
    got = as_lattice(from_covers(n, [(i, i + 1) for i in range(n - 1)]))
    assert isinstance(got, Lattice)
    return got


def test_join_and_meet_tables():
    n5 = load_lattice("fig2a")
    assert n5.bottom == 0 and n5.top == 4
    assert n5.join[1][2] == 4
    assert n5.meet[3][2] == 0
    assert n5.join[1][3] == 3


def test_missing_join_is_reported_with_bounds():
    got = as_lattice(load_poset("fig3_right"))
    assert isinstance(got, NotALattice)
    assert got.kind == "join"
    assert got.pair == (1, 5)
    assert got.bounds == (8, 9)


def test_missing_upper_bound_has_empty_bounds():
    got = as_lattice(from_covers(2, []))
    assert isinstance(got, NotALattice)
    assert got.kind == "join"
    assert got.pair == (0, 1)
    assert got.bounds == ()


def test_irreducibles_of_the_nine_element_fixture():
    f8 = load_lattice("fig8a")
    assert [(ji.j, ji.j_star) for ji in join_irreducibles(f8)] == [
        (1, 0),
        (2, 0),
        (3, 0),
        (4, 2),
    ]
    assert [(ji.j, ji.j_star) for ji in meet_irreducibles(f8)] == [
        (2, 4),
        (5, 8),
        (6, 8),
        (7, 8),
    ]
    assert atoms(f8) == [1, 2, 3]
    assert coatoms(f8) == [5, 6, 7]


def test_diamond_fails_semidistributivity():
    m3 = load_lattice("fig1a")
    verdict = is_semidistributive(m3)
    assert not verdict
    assert is_join_semidistributive(m3).witness == (1, 2, 3)
    assert is_meet_semidistributive(m3).witness == (1, 2, 3)


def test_semidistributive_fixtures():
    assert is_semidistributive(load_lattice("fig2a"))
    assert is_semidistributive(load_lattice("fig5"))
    assert is_meet_semidistributive(load_lattice("fig9")).witness == (2, 1, 3)


def test_canonical_join_representations():
    n5 = load_lattice("fig2a")
    assert canonical_join_representation(n5, 0) == frozenset()
    assert canonical_join_representation(n5, 3) == frozenset({3})
    assert canonical_join_representation(n5, 4) == frozenset({1, 2})
    assert canonical_join_representation(load_lattice("fig1a"), 4) is None


def test_atomicity():
    assert is_atomic(load_lattice("fig1a"))
    assert not is_atomic(load_lattice("fig2a"))
    assert not is_atomic(chain(3))


def test_crosscut_detection():
    m3 = load_lattice("fig1a")
    assert is_crosscut(m3, atoms(m3))
    assert not is_crosscut(m3, [1, 2])
    assert not is_crosscut(m3, [0])
    assert not is_crosscut(m3, [])


def test_crosscut_mobius_values():
    assert crosscut_mobius(load_lattice("fig1a"), [1, 2, 3]) == 2
    assert crosscut_mobius(chain(3), [1]) == 0
    with pytest.raises(ValueError):
        crosscut_mobius(load_lattice("fig1a"), [1, 2])


def test_sphericity():
    assert is_spherical(load_lattice("fig2a"))
    assert is_spherical(load_lattice("fig8a"))
    assert not is_spherical(load_lattice("fig7a"))
    assert not is_spherical(chain(3))
    with pytest.raises(ValueError):
        is_spherical(load_lattice("fig1a"))


def test_every_small_lattice_reconstructs(small_lattices):
    for lat in small_lattices:
        rebuilt = as_lattice(from_covers(lat.n, lat.poset.covers))
        assert isinstance(rebuilt, Lattice)
        assert rebuilt.poset == lat.poset
