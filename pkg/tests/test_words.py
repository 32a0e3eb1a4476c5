from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import corpus_graphs
from coxhom.chains import fundamental_cycle_basis
from coxhom.errors import (
    InfiniteLabel,
    NonPositiveLength,
    OrderViolation,
    SameVertex,
)
from coxhom.graph import INFINITY, build_graph, from_catalog, odd_subgraph
from coxhom.invariants import invariant_profile
from coxhom.words import (
    Word,
    abelianize,
    alternating_word,
    commutator,
    free_reduce,
    generator,
    in_commutator_subgroup,
    omega_sets,
    presentation_relators,
    project_word,
    relator,
)

letters = st.lists(
    st.integers(min_value=-5, max_value=5).filter(lambda a: a != 0), max_size=40
)


def test_alternating_word():
    assert alternating_word(0, 1, 3).letters == (1, 2, 1)
    assert alternating_word(0, 1, 1).letters == (1,)
    assert alternating_word(0, 1, 4).letters == (1, 2, 1, 2)
    with pytest.raises(SameVertex):
        alternating_word(2, 2, 3)
    with pytest.raises(NonPositiveLength):
        alternating_word(0, 1, 0)


def test_relator_shapes():
    assert relator(0, 1, 2).letters == (1, 2, -1, -2)
    assert relator(0, 1, 3).letters == (1, 2, 1, -2, -1, -2)
    assert relator(0, 1, 4).letters == (1, 2, 1, 2, -1, -2, -1, -2)
    with pytest.raises(InfiniteLabel):
        relator(0, 1, INFINITY)
    with pytest.raises(OrderViolation):
        relator(1, 0, 3)


def test_relator_equals_commutator_for_label_two():
    assert relator(0, 1, 2) == commutator(generator(0), generator(1))


def test_presentation_relators():
    a2 = from_catalog("A2")
    artin = presentation_relators(a2, "artin")
    assert artin == [relator(0, 1, 3)]
    coxeter = presentation_relators(a2, "coxeter")
    assert coxeter == [relator(0, 1, 3), Word((1, 1)), Word((2, 2))]
    assert presentation_relators(from_catalog("I2(inf)"), "artin") == []
    # label-2 pairs contribute commuting relators
    a3 = from_catalog("A3")
    assert relator(0, 2, 2) in presentation_relators(a3, "artin")


def test_free_reduce_examples():
    assert free_reduce([1, -1]).letters == ()
    assert free_reduce([1, 2, -2, 1]).letters == (1, 1)
    assert free_reduce([1, 2, 1]).letters == (1, 2, 1)


@given(letters)
def test_free_reduce_idempotent_and_shorter(raw):
    w = free_reduce(raw)
    assert free_reduce(w.letters) == w
    assert len(w) <= len(raw)


@given(letters)
def test_abelianize_survives_reduction(raw):
    counts = [0] * 5
    for a in raw:
        counts[abs(a) - 1] += 1 if a > 0 else -1
    assert abelianize(free_reduce(raw), 5) == tuple(counts)


def test_commutator_examples():
    assert commutator(generator(0), generator(1)).letters == (1, 2, -1, -2)
    assert commutator(generator(0), generator(0)).is_identity()
    w = commutator(free_reduce([1, 2]), generator(0))
    assert w.letters == (1, 2, 1, -2, -1, -1)
    assert in_commutator_subgroup(w)


def test_abelianize_examples():
    assert abelianize(relator(0, 1, 3), 2) == (1, -1)
    assert abelianize(relator(0, 1, 4), 2) == (0, 0)


@pytest.mark.parametrize("m", range(2, 13))
def test_relator_abelianization_by_parity(m):
    vec = abelianize(relator(0, 1, m), 2)
    assert vec == ((1, -1) if m % 2 else (0, 0))


def test_in_commutator_subgroup():
    assert in_commutator_subgroup(Word())
    assert not in_commutator_subgroup(generator(0))
    assert not in_commutator_subgroup(relator(0, 1, 5))


@given(letters, letters)
def test_commutators_abelianize_to_zero(a, b):
    assert in_commutator_subgroup(commutator(free_reduce(a), free_reduce(b)))


def test_word_power_and_inverse():
    w = free_reduce([1, 2])
    assert (w ** -1) == w.inverse()
    assert (w ** 2).letters == (1, 2, 1, 2)
    assert (w * w.inverse()).is_identity()


def test_omega_sets_a3():
    om = omega_sets(from_catalog("A3"), "artin")
    assert om.omega1 == (commutator(generator(0), generator(2)),)
    assert om.omega2 == ()
    assert om.omega3 == ()


def test_omega_sets_i24():
    om = omega_sets(from_catalog("I2(4)"), "artin")
    assert om.omega1 == ()
    assert om.omega2 == (relator(0, 1, 4),)
    assert om.omega2[0].letters == (1, 2, 1, 2, -1, -2, -1, -2)
    assert om.omega3 == ()


TRIANGLE = build_graph(["s1", "s2", "s3"], [("s1", "s2", 3), ("s2", "s3", 3), ("s1", "s3", 3)])


def test_omega_sets_triangle_cycle_word():
    om = omega_sets(TRIANGLE, "artin")
    assert (len(om.omega1), len(om.omega2), len(om.omega3)) == (0, 0, 1)
    word = om.omega3[0]
    assert in_commutator_subgroup(word)
    # the word is the relator product with the fundamental cycle's exponents
    pg = odd_subgraph(TRIANGLE)
    (cycle,) = fundamental_cycle_basis(pg).basis
    parts = []
    for coefficient, (i, j) in zip(cycle.coefficients, pg.edges):
        parts.extend((relator(i, j, 3) ** coefficient).letters)
    assert word == free_reduce(parts)


def test_omega_exponent_recovery_on_corpus():
    for g in corpus_graphs(40, base_seed=300):
        pg = odd_subgraph(g)
        basis = fundamental_cycle_basis(pg)
        for flavor in ("artin", "coxeter"):
            om = omega_sets(g, flavor)
            assert len(om.omega3) == len(basis.basis)
            for word, cycle in zip(om.omega3, basis.basis):
                parts = []
                for coefficient, (i, j) in zip(cycle.coefficients, pg.edges):
                    rel = relator(i, j, g.label_ix(i, j)) ** coefficient
                    parts.extend(rel.letters)
                assert word == free_reduce(parts)


def test_omega_counts_and_abelianization_on_corpus():
    for g in corpus_graphs(60, base_seed=100):
        profile = invariant_profile(g)
        for flavor in ("artin", "coxeter"):
            om = omega_sets(g, flavor)
            assert len(om.omega1) == profile.p + profile.q1
            assert len(om.omega2) == profile.q2
            assert len(om.omega3) == profile.q3
            assert om.total == profile.p + profile.q
            for w in om.omega1 + om.omega2 + om.omega3:
                assert in_commutator_subgroup(w)
                assert abelianize(w, len(g.vertices)) == (0,) * len(g.vertices)


def test_project_word_is_the_identity_lift():
    assert project_word(Word()) == Word()
    r = relator(0, 1, 3)
    assert project_word(r) == r


def test_projection_maps_artin_onto_coxeter():
    for g in corpus_graphs(40, base_seed=200):
        artin = omega_sets(g, "artin")
        coxeter = omega_sets(g, "coxeter")
        assert tuple(project_word(w) for w in artin.omega1) == coxeter.omega1
        assert tuple(project_word(w) for w in artin.omega2) == coxeter.omega2
        assert len(artin.omega3) == len(coxeter.omega3)
