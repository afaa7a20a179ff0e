"""Shared corpora: all small lattices and all small congruence-uniform lattices."""

import pytest

from corelabel import (
    core_label_order,
    enumerate_lattices,
    generate_cu,
    label_covers,
)


@pytest.fixture(scope="session")
def small_lattices():
    lats = []
    for n in range(1, 9):
        lats.extend(enumerate_lattices(n))
    assert len(lats) == 300
    return lats


@pytest.fixture(scope="session")
def cu_corpus():
    lats = list(generate_cu(9))
    assert len(lats) == 274
    return lats


@pytest.fixture(scope="session")
def labeled_corpus(cu_corpus):
    out = []
    for lat in cu_corpus:
        cl = label_covers(lat)
        out.append((lat, cl, core_label_order(cl)))
    return out
