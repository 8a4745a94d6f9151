"""Brute-force ground truth by enumerating X up to a horizon.

A :class:`FiniteModel` holds every (p, n) with n < H plus every top point.
Once H exceeds the horizons of the cover and family under test, the last
finite level stands for all levels beyond it, so enumeration is exact. The
checks here only use raw membership (box pins, interval bounds, level
slices) and never call the symbolic fiber/star/region machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .cover import Cover, validate_cover
from .cube import MAX_ORACLE_TAU, all_points, point_in_box
from .errors import HorizonTooSmall, InvalidCover
from .space import TOP, LevelFamily, Verdict, XPoint, top_points

DEFAULT_HORIZON = 20


@dataclass(frozen=True)
class FiniteModel:
    tau: int
    horizon: int

    def __post_init__(self):
        if self.tau > MAX_ORACLE_TAU:
            raise ValueError(f"tau={self.tau} exceeds oracle limit {MAX_ORACLE_TAU}")
        if self.horizon < 1:
            raise ValueError("horizon must be at least 1")

    def points(self) -> list:
        cube = list(all_points(self.tau))
        pts = [XPoint(p, n) for n in range(self.horizon) for p in cube]
        return pts + top_points(self.tau)


def _require(h: int, needed: int, what: str) -> None:
    if h < needed:
        raise HorizonTooSmall(f"horizon {h} too small for {what}; need at least {needed}")


def _in_family(x: XPoint, a: LevelFamily) -> bool:
    return x.level is not TOP and x.base in a.level(x.level)


def _in_element(x: XPoint, e) -> bool:
    iv = e.interval
    if x.level is TOP:
        level_ok = iv.hi is None
    else:
        level_ok = iv.lo <= x.level and (iv.hi is None or x.level <= iv.hi)
    return level_ok and point_in_box(x.base, e.box)


def brute_meeting(a: LevelFamily, c: Cover, H: int, tops: Iterable[XPoint] = ()) -> list:
    """Elements of ``c`` containing some enumerated point of ``a`` or of ``tops``."""
    _require(H, max(a.horizon, c.horizon) + 1, "family and cover")
    tops = list(tops)
    members = [x for x in FiniteModel(c.tau, H).points() if _in_family(x, a)] + tops
    return [e for e in c.elements if any(_in_element(x, e) for x in members)]


def brute_star_covers(a: LevelFamily, c: Cover, H: int, tops: Iterable[XPoint] = ()) -> Verdict:
    meeting = brute_meeting(a, c, H, tops)
    for x in FiniteModel(c.tau, H).points():
        if not any(_in_element(x, e) for e in meeting):
            return Verdict(False, x)
    return Verdict(True)


def brute_closed_discrete(a: LevelFamily, H: int) -> Verdict:
    """No point of X is an accumulation point of ``a``.

    Finite-level points are isolated in X, so only top points are examined:
    (z, TOP) accumulates iff every neighbourhood {z} x [m, TOP] meets ``a``.
    """
    _require(H, a.horizon + 1, "family")
    for t in top_points(a.tau):
        if all(any(a.contains(t.base, n) for n in range(m, H)) for m in range(H)):
            return Verdict(False, t.base)
    return Verdict(True)


def brute_closed_discrete_points(points: Iterable[XPoint], tau: int, H: int) -> Verdict:
    """Closed-discreteness of a finite set of points of X, by neighbourhood enumeration.

    The neighbourhood base used is {(p, n)} at finite levels and
    {z} x [m, TOP] at top points.
    """
    A = set(points)
    finite = [x.level for x in A if x.level is not TOP]
    _require(H, max(finite, default=0) + 2, "point set")
    for x in FiniteModel(tau, H).points():
        if x.level is not TOP:
            continue  # singleton neighbourhood meets A \ {x} in nothing
        nbhd_hits = []
        for m in range(H + 1):
            hits = [y for y in A if y != x and y.base == x.base and (y.level is TOP or y.level >= m)]
            nbhd_hits.append(bool(hits))
        if all(nbhd_hits):
            return Verdict(False, x)
    return Verdict(True)


@dataclass(frozen=True)
class StarcompactResult:
    points: Optional[tuple]
    exhaustive: bool

    @property
    def found(self) -> bool:
        return self.points is not None


EXHAUSTIVE_MAX_TAU = 3
EXHAUSTIVE_MAX_SIZE = 4


def starcompact_search(c: Cover, k: int, H: Optional[int] = None) -> StarcompactResult:
    """Look for a set A of at most ``k`` points with St(A, c) = X.

    Greedy first (each step takes the point whose star reaches the most
    still-unstarred model points); if that fails and tau <= 3, k <= 4, every
    combination of point classes is tried, and a NotFound is conclusive.
    """
    valid = validate_cover(c)
    if not valid:
        raise InvalidCover(valid.certificate)
    H = c.horizon + 1 if H is None else H
    _require(H, c.horizon + 1, "cover")
    model = FiniteModel(c.tau, H).points()
    sig = {x: frozenset(e.id for e in c.elements if _in_element(x, e)) for x in model}
    reps: dict = {}
    for x in model:
        reps.setdefault(sig[x], x)
    classes = list(reps)

    def covers(ids) -> bool:
        return all(sig[x] & ids for x in model)

    chosen: list = []
    ids: frozenset = frozenset()
    while len(chosen) < k and not covers(ids):
        def gain(s):
            return sum(1 for x in model if not (sig[x] & ids) and sig[x] & (ids | s))
        best = max(classes, key=gain)
        if gain(best) == 0:
            break
        chosen.append(reps[best])
        ids |= best
    if covers(ids):
        return StarcompactResult(tuple(chosen), False)

    exhaustive = c.tau <= EXHAUSTIVE_MAX_TAU and k <= EXHAUSTIVE_MAX_SIZE
    if exhaustive:
        for size in range(k + 1):
            for combo in itertools.combinations(classes, size):
                if covers(frozenset().union(*combo)):
                    return StarcompactResult(tuple(reps[s] for s in combo), True)
    return StarcompactResult(None, exhaustive)


def extent_lower_bound(tau: int, H: int = 4) -> tuple:
    """``(tau, Z x {TOP})`` after checking the witness is closed discrete in X."""
    if tau < 1:
        raise ValueError("tau must be positive")
    witness = top_points(tau)
    verdict = brute_closed_discrete_points(witness, tau, H)
    if not verdict:
        raise AssertionError(f"Z x {{TOP}} accumulates at {verdict.certificate}")
    return len(witness), witness
