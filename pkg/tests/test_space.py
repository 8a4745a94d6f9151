import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starweb.cube import unit_point, z_points
from starweb.generate import random_family
from starweb.oracle import brute_closed_discrete, brute_closed_discrete_points
from starweb.space import TOP, Fiber, LevelFamily, XPoint, fiber, is_closed_discrete, top_points, union

from conftest import pt


def fam(tau, prefix=(), tail=()):
    return LevelFamily(tau, len(prefix), tuple(frozenset(map(pt, s)) for s in prefix), frozenset(map(pt, tail)))


def test_fiber_examples():
    f = fam(2, tail=["11"])
    assert fiber(f, pt("11")) == Fiber(frozenset(), 0)
    assert fiber(f, pt("00")) == Fiber(frozenset())
    assert fiber(fam(2, prefix=[["10"]]), pt("10")) == Fiber(frozenset({0}))


def test_fiber_normalises_cofinite_start():
    f = fam(2, prefix=[["10"], [], ["10"], ["10"]], tail=["10"])
    assert fiber(f, pt("10")) == Fiber(frozenset({0}), 2)
    assert 0 in fiber(f, pt("10")) and 1 not in fiber(f, pt("10")) and 99 in fiber(f, pt("10"))


def test_fiber_dimension_mismatch():
    with pytest.raises(ValueError):
        fiber(fam(2), pt("101"))


def test_xpoint_top_requires_unit():
    assert str(XPoint(pt("10"), TOP)) == "(10,TOP)"
    with pytest.raises(ValueError):
        XPoint(pt("11"), TOP)
    assert str(XPoint(pt("01"), 0)) == "(01,0)"


def test_closed_discrete_examples():
    ok = fam(2, tail=["11", "00"])
    assert is_closed_discrete(ok)
    assert brute_closed_discrete(ok, 10)  # oracle at horizon 10
    bad = is_closed_discrete(fam(2, tail=["10"]))
    assert not bad and bad.certificate == unit_point(0, 2)
    assert is_closed_discrete(LevelFamily.empty(2))


def test_prefix_unit_points_are_fine():
    # finitely many levels over z_0 never accumulate
    assert is_closed_discrete(fam(2, prefix=[["10"], ["10", "01"]], tail=["11"]))


def test_union_examples():
    a, b = pt("10"), pt("01")
    f = fam(2, prefix=[["11"]], tail=["00"])
    assert union(f, LevelFamily.empty(2)) == f
    assert union(fam(2, tail=["10"]), fam(2, tail=["01"])).tail == {a, b}
    u = union(fam(2, prefix=[["10"]]), fam(2, tail=["10"]))
    assert u.horizon == 1 and u.prefix == (frozenset({a}),) and u.tail == {a}
    assert u.normalized() == fam(2, tail=["10"])


def test_union_dimension_mismatch():
    with pytest.raises(ValueError):
        union(fam(2), fam(3))


def test_level_family_validation():
    with pytest.raises(ValueError):
        LevelFamily(2, 2, (frozenset(),))
    with pytest.raises(ValueError):
        LevelFamily(2, 0, (), frozenset({pt("101")}))


def families(tau):
    return st.randoms(use_true_random=False).map(lambda r: random_family(tau, r))


@given(st.integers(1, 6).flatmap(families))
@settings(max_examples=300)
def test_closed_discrete_agrees_with_oracle(f):
    assert is_closed_discrete(f).ok == brute_closed_discrete(f, f.horizon + 1).ok
    assert is_closed_discrete(f).ok == brute_closed_discrete(f, 8 + 1).ok


@given(st.integers(1, 5).flatmap(lambda t: st.tuples(families(t), families(t), families(t))))
@settings(max_examples=200)
def test_union_algebra(fs):
    f, g, h = fs
    assert union(f, g).denotes_same(union(g, f))
    assert union(union(f, g), h).denotes_same(union(f, union(g, h)))
    assert f.issubset(union(f, g)) and g.issubset(union(f, g))
    # fibres over Z add, so closed-discreteness of the union is the conjunction
    assert is_closed_discrete(union(f, g)).ok == (is_closed_discrete(f).ok and is_closed_discrete(g).ok)
    for z in z_points(f.tau):
        assert fiber(union(f, g), z).is_finite == (fiber(f, z).is_finite and fiber(g, z).is_finite)


@given(st.integers(1, 5).flatmap(families))
@settings(max_examples=200)
def test_fiber_matches_membership(f):
    for p in f.points():
        fb = fiber(f, p)
        for n in range(f.horizon + 3):
            assert (n in fb) == f.contains(p, n)
        assert fb.is_finite == (p not in f.tail)


def test_normalized_keeps_denotation():
    rng = random.Random(0)
    for _ in range(100):
        f = random_family(3, rng)
        g = f.normalized()
        assert g.horizon <= f.horizon
        for n in range(f.horizon + 2):
            assert f.level(n) == g.level(n)


@pytest.mark.parametrize("tau", [1, 2, 4, 7])
def test_top_level_copy_of_z_is_closed_discrete(tau):
    tops = top_points(tau)
    assert len(tops) == tau
    assert brute_closed_discrete_points(tops, tau, 3)
