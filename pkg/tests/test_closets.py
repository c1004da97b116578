import random

import pytest

from cantorfull.closets import CloSet
from cantorfull.elements import compose, element_image, shift
from cantorfull.errors import EngineMismatch
from cantorfull.words import Word
from conftest import sample_elements


def random_closets(engine, count, seed):
    rng = random.Random(seed)
    words = engine.allowed_words(3)
    out = []
    for _ in range(count):
        members = [w for w in words if rng.random() < 0.5]
        out.append(CloSet(engine, 1, members))
    return out


def test_empty_and_full(fibonacci):
    empty, full = CloSet.empty(fibonacci), CloSet.full(fibonacci)
    assert empty.is_empty() and not full.is_empty()
    assert empty.at_radius(3) == empty
    assert full.at_radius(2) == full
    assert full.complement() == empty


def test_cylinder_reexpression(fibonacci):
    U = CloSet.cylinder(fibonacci, Word(("a",), 0))
    assert U.at_radius(4) == U
    assert U.at_radius(4).reduced().radius == 0


def test_unallowed_cylinder_is_empty(fibonacci):
    assert CloSet.cylinder(fibonacci, Word(("b", "b"), 0)).is_empty()


def test_boolean_algebra_identities(fibonacci, golden_mean):
    for engine in (fibonacci, golden_mean):
        full = CloSet.full(engine)
        triples = random_closets(engine, 30, seed=11)
        for u, v, w in zip(triples[::3], triples[1::3], triples[2::3]):
            assert u.union(v) == v.union(u)
            assert u.intersect(v) == v.intersect(u)
            assert u.union(v.union(w)) == u.union(v).union(w)
            assert u.intersect(v.intersect(w)) == u.intersect(v).intersect(w)
            assert u.intersect(v.union(w)) == u.intersect(v).union(u.intersect(w))
            assert u.union(v.intersect(w)) == u.union(v).intersect(u.union(w))
            assert u.union(u.intersect(v)) == u
            assert u.intersect(u.union(v)) == u
            assert u.union(v).complement() == u.complement().intersect(v.complement())
            assert u.intersect(v).complement() == u.complement().union(v.complement())
            assert u.complement().complement() == u
            assert u.union(u.complement()) == full
            assert u.intersect(u.complement()).is_empty()


def test_subset_via_complement(fibonacci):
    U = CloSet.cylinder(fibonacci, Word(("a", "a"), 0))
    V = CloSet.cylinder(fibonacci, Word(("a",), 0))
    assert U.is_subset(V)
    assert U.intersect(V.complement()).is_empty()
    assert not V.is_subset(U)


def test_shift_image_examples(fibonacci):
    U = CloSet.cylinder(fibonacci, Word(("a",), 0))
    assert U.shift_image(1) == CloSet.cylinder(fibonacci, Word(("a",), 1))
    assert U.shift_image(2).shift_image(-2) == U
    meet = U.intersect(CloSet.cylinder(fibonacci, Word(("a",), 1)))
    assert meet == CloSet.cylinder(fibonacci, Word(("a", "a"), 0))
    assert not meet.is_empty()


def test_element_image_of_shift(fibonacci):
    U = CloSet.cylinder(fibonacci, Word(("a", "b"), 0))
    phi = shift(fibonacci)
    assert element_image(U, phi) == U.shift_image(1)


def test_element_image_composition(fibonacci, fib_pool):
    closets = random_closets(fibonacci, 6, seed=5)
    for U, (f, g) in zip(closets, zip(sample_elements(fib_pool, 6, 7),
                                      sample_elements(fib_pool, 6, 8))):
        assert element_image(U, compose(f, g)) == element_image(element_image(U, g), f)


def test_engine_mismatch(fibonacci, golden_mean):
    with pytest.raises(EngineMismatch):
        CloSet.full(fibonacci).union(CloSet.full(golden_mean))
