import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starweb.generate import random_setmap_images
from starweb.setmap import SetMapping, free_decompose, is_free


def check_decomposition(f, classes):
    seen = set()
    for cls in classes:
        assert is_free(cls, f)
        assert not (cls & seen)
        seen |= cls
    assert seen == set(range(f.n))


def test_is_free_examples():
    f = SetMapping.from_dict(3, {0: {1}, 2: {1}})
    assert is_free(set(), f)
    assert not is_free({0, 1}, f)
    assert is_free({0, 2}, f)


def test_is_free_rejects_foreign_elements():
    with pytest.raises(ValueError):
        is_free({5}, SetMapping.from_dict(2, {}))


def test_set_mapping_validation():
    with pytest.raises(ValueError):
        SetMapping(({0},))
    with pytest.raises(ValueError):
        SetMapping(({3}, set()))


def test_decompose_without_conflicts():
    f = SetMapping.from_dict(5, {})
    assert free_decompose(f) == [frozenset(range(5))]


def test_decompose_mutual_conflict():
    f = SetMapping.from_dict(2, {0: {1}, 1: {0}})
    assert free_decompose(f) == [frozenset({0}), frozenset({1})]


def test_decompose_three_cycle():
    f = SetMapping.from_dict(3, {0: {1}, 1: {2}, 2: {0}})
    # every pair conflicts, so brute force over all colourings needs 3 classes
    least = min(
        len(set(col)) for col in itertools.product(range(3), repeat=3)
        if all(is_free({i for i in range(3) if col[i] == c}, f) for c in set(col))
    )
    assert least == 3
    classes = free_decompose(f)
    assert classes == [frozenset({0}), frozenset({1}), frozenset({2})]
    check_decomposition(f, classes)


@st.composite
def setmaps(draw, max_n=40, max_image=8):
    n = draw(st.integers(1, max_n))
    images = []
    for s in range(n):
        others = [t for t in range(n) if t != s]
        images.append(frozenset(draw(st.lists(st.sampled_from(others), max_size=max_image)) if others else []))
    return SetMapping(tuple(images))


@given(setmaps())
@settings(max_examples=300)
def test_decomposition_properties(f):
    classes = free_decompose(f)
    check_decomposition(f, classes)
    max_deg = max(len(a) for a in f.neighbours())
    assert len(classes) <= max_deg + 1


@given(setmaps(), st.randoms(use_true_random=False))
@settings(max_examples=200)
def test_relabelled_decomposition_is_valid(f, rng):
    perm = list(range(f.n))
    rng.shuffle(perm)
    g = f.relabel(perm)
    check_decomposition(g, free_decompose(g))
    # any visiting order also yields a valid decomposition
    check_decomposition(f, free_decompose(f, perm))


def test_order_must_be_permutation():
    with pytest.raises(ValueError):
        free_decompose(SetMapping.from_dict(3, {}), [0, 1])


def test_large_random_mapping():
    rng = random.Random(3)
    f = SetMapping(random_setmap_images(2000, rng))
    check_decomposition(f, free_decompose(f))
