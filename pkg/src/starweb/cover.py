"""Finite covers of X by basic open pieces (box x level interval).

All decisions are exact: past the horizon N of a piece list (largest
interval endpoint plus one) every level slice equals slice N, so checking
levels 0..N and the top level settles a question about all of X.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .cube import Box, first_uncovered, point_in_box, unit_point
from .space import TOP, LevelFamily, Verdict, XPoint, fiber


@dataclass(frozen=True)
class LevelInterval:
    """[lo, hi]; ``hi=None`` means [lo, infinity), which also holds TOP."""

    lo: int
    hi: Optional[int] = None

    def __post_init__(self):
        if self.lo < 0:
            raise ValueError(f"negative level {self.lo}")
        if self.hi is not None and self.hi < self.lo:
            raise ValueError(f"empty interval {self.lo}..{self.hi}")

    @property
    def unbounded(self) -> bool:
        return self.hi is None

    def __contains__(self, level) -> bool:
        if level is TOP:
            return self.hi is None
        return self.lo <= level and (self.hi is None or level <= self.hi)

    def text(self) -> str:
        return f"{self.lo}..{'*' if self.hi is None else self.hi}"


@dataclass(frozen=True)
class CoverElement:
    box: Box
    interval: LevelInterval
    id: int = 0

    def __contains__(self, x: XPoint) -> bool:
        return x.level in self.interval and point_in_box(x.base, self.box)

    def text(self) -> str:
        return f"box {self.box.text()} levels={self.interval.text()}"


@dataclass(frozen=True)
class Cover:
    tau: int
    elements: tuple = ()

    def __post_init__(self):
        elements = tuple(self.elements)
        for e in elements:
            if e.box.tau != self.tau:
                raise ValueError(f"element {e.id} has tau={e.box.tau}, cover has tau={self.tau}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def from_pieces(cls, tau: int, pieces: Iterable) -> "Cover":
        """Build from (box, interval) pairs, numbering elements in order."""
        return cls(tau, tuple(CoverElement(b, i, k) for k, (b, i) in enumerate(pieces)))

    @property
    def horizon(self) -> int:
        return pieces_horizon(self.elements)


@dataclass(frozen=True)
class Region:
    """Finite union of cover elements."""

    tau: int
    pieces: tuple = ()

    @property
    def horizon(self) -> int:
        return pieces_horizon(self.pieces)

    def __contains__(self, x: XPoint) -> bool:
        return any(x in e for e in self.pieces)


def pieces_horizon(pieces) -> int:
    ends = [0]
    for e in pieces:
        ends.append(e.interval.lo)
        if e.interval.hi is not None:
            ends.append(e.interval.hi)
    return max(ends) + 1


def _first_uncovered(pieces, tau: int) -> Optional[XPoint]:
    # order: levels below N, top points, then the stable level N; a unit point
    # missed on all levels >= N is reported as the top point it converges to
    N = pieces_horizon(pieces)

    def level(n):
        hit = first_uncovered([e.box for e in pieces if n in e.interval], tau)
        return None if hit is None else XPoint(hit, n)

    for n in range(N):
        miss = level(n)
        if miss is not None:
            return miss
    for alpha in range(tau):
        z = unit_point(alpha, tau)
        if not any(e.interval.unbounded and point_in_box(z, e.box) for e in pieces):
            return XPoint(z, TOP)
    return level(N)


def validate_cover(c: Cover) -> Verdict:
    """Whether the elements of ``c`` cover X; certificate is the first missed point.

    Levels 0..N-1 are scanned upward, then top points by coordinate, then
    level N; within a level the lexicographically smallest missed point is
    reported.
    """
    miss = _first_uncovered(c.elements, c.tau)
    return Verdict(miss is None, miss)


def region_covers_X(r: Region, tau: Optional[int] = None) -> Verdict:
    tau = r.tau if tau is None else tau
    miss = _first_uncovered(r.pieces, tau)
    return Verdict(miss is None, miss)


def region_contains(big: Region, small: Region) -> Verdict:
    """Exact test of ``small`` being a subset of ``big``; certificate is a point of small \\ big."""
    if big.tau != small.tau:
        raise ValueError("dimension mismatch")
    top = max(big.horizon, small.horizon)
    for n in range(top + 1):
        boxes = [e.box for e in big.pieces if n in e.interval]
        for e in small.pieces:
            if n in e.interval:
                hit = first_uncovered(boxes, big.tau, within=e.box)
                if hit is not None:
                    return Verdict(False, XPoint(hit, n))
    for alpha in range(small.tau):
        z = unit_point(alpha, small.tau)
        x = XPoint(z, TOP)
        if x in small and x not in big:
            return Verdict(False, x)
    return Verdict(True)


def per_level_subcover(c: Cover, n: int) -> list:
    """Elements containing level ``n``, greedily thinned in list order.

    An element is kept only if its box reaches a point the boxes kept so
    far miss; the kept boxes still cover D^tau.
    """
    kept: list = []
    for e in c.elements:
        if n in e.interval and first_uncovered([k.box for k in kept], c.tau, within=e.box) is not None:
            kept.append(e)
    hole = first_uncovered([k.box for k in kept], c.tau)
    if hole is not None:
        raise ValueError(f"level {n} is not covered: {XPoint(hole, n)} is missed")
    return kept


def meets(e: CoverElement, fam: LevelFamily, tops: Iterable[XPoint] = ()) -> bool:
    lo, hi = e.interval.lo, e.interval.hi
    for p in fam.points():
        if point_in_box(p, e.box) and fiber(fam, p).meets(lo, hi):
            return True
    return any(t in e for t in tops)


def star(fam: LevelFamily, c: Cover, tops: Iterable[XPoint] = ()) -> Region:
    """Union of the elements of ``c`` meeting ``fam`` (plus optional top points)."""
    if fam.tau != c.tau:
        raise ValueError(f"dimension mismatch: family tau={fam.tau}, cover tau={c.tau}")
    tops = tuple(tops)
    return Region(c.tau, tuple(e for e in c.elements if meets(e, fam, tops)))
