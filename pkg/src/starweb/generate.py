"""Seeded random covers and level families for test corpora."""

from __future__ import annotations

import random

from .cover import Cover, LevelInterval, validate_cover
from .cube import Box, CubePoint, unit_point
from .space import TOP, LevelFamily


def _random_box(tau: int, rng: random.Random, pin_prob: float = 0.35) -> Box:
    ones, zeros = set(), set()
    for i in range(tau):
        if rng.random() < pin_prob:
            (ones if rng.random() < 0.4 else zeros).add(i)
    return Box(frozenset(ones), frozenset(zeros), tau)


def _random_interval(rng: random.Random) -> LevelInterval:
    lo = rng.choice((0, 0, 0, 1, 2, 3, 4))
    if rng.random() < 0.6:
        return LevelInterval(lo)
    return LevelInterval(lo, lo + rng.randint(0, 3))


def _patch(x, tau: int, rng: random.Random, pin_prob: float) -> tuple:
    """A piece containing the missed point ``x``, pinning some of its coordinates."""
    ones, zeros = set(), set()
    for i in range(tau):
        if rng.random() < pin_prob:
            (ones if x.base[i] else zeros).add(i)
    box = Box(frozenset(ones), frozenset(zeros), tau)
    if x.level is TOP:
        return box, LevelInterval(rng.randint(0, 3))
    n = x.level
    lo = rng.randint(max(0, n - 2), n)
    # unbounded patches from level 6 on keep cover horizons below 10
    hi = None if n >= 6 or rng.random() < 0.5 else n + rng.randint(0, 2)
    return box, LevelInterval(lo, hi)


def random_cover(tau: int, rng: random.Random, pin_prob: float = 0.5) -> Cover:
    """A valid cover: random pieces, then targeted patches until nothing is missed.

    Every finite interval ends below level 9, so ``horizon <= 9``.
    """
    pieces = [(_random_box(tau, rng), _random_interval(rng)) for _ in range(rng.randint(1, 2 * tau))]
    while True:
        c = Cover.from_pieces(tau, pieces)
        verdict = validate_cover(c)
        if verdict:
            return c
        pieces.append(_patch(verdict.certificate, tau, rng, pin_prob))


def _random_points(tau: int, rng: random.Random, k: int, unit_prob: float) -> frozenset:
    pts = set()
    for _ in range(k):
        if rng.random() < unit_prob:
            pts.add(unit_point(rng.randrange(tau), tau))
        else:
            pts.add(CubePoint(rng.getrandbits(tau), tau))
    return frozenset(pts)


def random_family(tau: int, rng: random.Random, max_horizon: int = 8, unit_prob: float = 0.2) -> LevelFamily:
    h = rng.randint(0, max_horizon)
    prefix = tuple(_random_points(tau, rng, rng.randint(0, 3), unit_prob) for _ in range(h))
    tail = _random_points(tau, rng, rng.randint(0, 3), unit_prob)
    return LevelFamily(tau, h, prefix, tail)


def random_neighborhoods(tau: int, rng: random.Random, max_size: int) -> tuple:
    """F_a for each coordinate a, with |F_a| <= max_size."""
    out = []
    for a in range(tau):
        others = [b for b in range(tau) if b != a]
        out.append(frozenset(rng.sample(others, rng.randint(0, min(max_size, len(others))))))
    return tuple(out)


def random_setmap_images(n: int, rng: random.Random, max_image: int = 8) -> tuple:
    images = []
    for s in range(n):
        k = rng.randint(0, min(max_image, n - 1))
        im = set()
        while len(im) < k:
            t = rng.randrange(n)
            if t != s:
                im.add(t)
        images.append(frozenset(im))
    return tuple(images)

