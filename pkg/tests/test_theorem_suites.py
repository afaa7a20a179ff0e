"""Structural properties checked over every small congruence-uniform lattice."""

import pytest

from suites import CRITERION_CHECKS, EXTRA_CHECKS, SMALL_CHECKS


@pytest.mark.parametrize(("name", "fn"), CRITERION_CHECKS, ids=[n for n, _ in CRITERION_CHECKS])
def test_corpus_property(name, fn, labeled_corpus):
    bad = fn(labeled_corpus)
    assert not bad, f"{name}: {bad[:5]}"


@pytest.mark.parametrize(("name", "fn"), EXTRA_CHECKS, ids=[n for n, _ in EXTRA_CHECKS])
def test_corpus_extra(name, fn, labeled_corpus):
    bad = fn(labeled_corpus)
    assert not bad, f"{name}: {bad[:5]}"


@pytest.mark.parametrize(("name", "fn"), SMALL_CHECKS, ids=[n for n, _ in SMALL_CHECKS])
def test_small_lattice_property(name, fn, small_lattices):
    bad = fn(small_lattices)
    assert not bad, f"{name}: {bad[:5]}"
