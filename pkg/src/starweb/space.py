"""The space X = (D^tau x (omega+1)) minus ((D^tau \\ Z) x {omega}).

Finite levels are natural numbers; the single limit level is ``TOP``. A
point ``(p, TOP)`` belongs to X only when ``p`` is a unit point.

Countable subsets of the finite levels are carried as eventually constant
:class:`LevelFamily` values, which makes closed-discreteness decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .cube import CubePoint, lex_key, z_points


class _Top:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOP"

    def __reduce__(self):
        return (_Top, ())


TOP = _Top()

Level = Union[int, _Top]


@dataclass(frozen=True)
class XPoint:
    base: CubePoint
    level: Level

    def __post_init__(self):
        if self.level is TOP:
            if not self.base.is_unit:
                raise ValueError(f"({self.base},TOP) is not a point of X")
        elif not (isinstance(self.level, int) and self.level >= 0):
            raise ValueError(f"bad level {self.level!r}")

    def __str__(self):
        return f"({self.base},{'TOP' if self.level is TOP else self.level})"


@dataclass(frozen=True)
class Verdict:
    """Boolean decision plus a counterexample when it is false."""

    ok: bool
    certificate: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Fiber:
    """A set of levels: explicit ``levels`` plus every n >= ``cofinite_from``."""

    levels: frozenset
    cofinite_from: Optional[int] = None

    @property
    def is_finite(self) -> bool:
        return self.cofinite_from is None

    def __contains__(self, n: int) -> bool:
        return n in self.levels or (self.cofinite_from is not None and n >= self.cofinite_from)

    def meets(self, lo: int, hi: Optional[int]) -> bool:
        """Whether the fiber meets the interval [lo, hi] (``hi=None``: unbounded)."""
        if self.cofinite_from is not None and (hi is None or self.cofinite_from <= hi):
            return True
        return any(lo <= n and (hi is None or n <= hi) for n in self.levels)


@dataclass(frozen=True)
class LevelFamily:
    """Subset {(p,n): n<H, p in prefix[n]} u {(p,n): n>=H, p in tail} of D^tau x omega."""

    tau: int
    horizon: int = 0
    prefix: tuple = ()
    tail: frozenset = frozenset()

    def __post_init__(self):
        prefix = tuple(frozenset(s) for s in self.prefix)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", frozenset(self.tail))
        if self.horizon < 0 or len(prefix) != self.horizon:
            raise ValueError(f"prefix has {len(prefix)} levels, horizon is {self.horizon}")
        for p in self.points():
            if p.tau != self.tau:
                raise ValueError(f"point {p} has tau={p.tau}, family has tau={self.tau}")

    @classmethod
    def empty(cls, tau: int) -> "LevelFamily":
        return cls(tau)

    @classmethod
    def constant(cls, tau: int, points) -> "LevelFamily":
        return cls(tau, 0, (), frozenset(points))

    def level(self, n: int) -> frozenset:
        return self.prefix[n] if n < self.horizon else self.tail

    def contains(self, p: CubePoint, n: int) -> bool:
        return p in self.level(n)

    def points(self) -> frozenset:
        """Projection onto D^tau."""
        out = set(self.tail)
        for s in self.prefix:
            out |= s
        return frozenset(out)

    @property
    def is_empty(self) -> bool:
        return not self.tail and not any(self.prefix)

    def normalized(self) -> "LevelFamily":
        """Same denoted set with the smallest horizon."""
        h = self.horizon
        while h and self.prefix[h - 1] == self.tail:
            h -= 1
        return LevelFamily(self.tau, h, self.prefix[:h], self.tail)

    def denotes_same(self, other: "LevelFamily") -> bool:
        return self.tau == other.tau and self.normalized() == other.normalized()

    def extended(self, horizon: int) -> "LevelFamily":
        if horizon < self.horizon:
            raise ValueError("cannot shrink horizon by extension")
        prefix = self.prefix + (self.tail,) * (horizon - self.horizon)
        return LevelFamily(self.tau, horizon, prefix, self.tail)

    def issubset(self, other: "LevelFamily") -> bool:
        h = max(self.horizon, other.horizon)
        return all(self.level(n) <= other.level(n) for n in range(h + 1))

    def max_slice(self) -> int:
        return max([len(self.tail)] + [len(s) for s in self.prefix])

    def __str__(self):
        levels = "; ".join(f"{n}: {_pts(s)}" for n, s in enumerate(self.prefix))
        return f"LevelFamily(tau={self.tau}, {levels + '; ' if levels else ''}tail: {_pts(self.tail)})"


def _pts(points) -> str:
    return ",".join(sorted(map(str, points)))


def sorted_points(points) -> list:
    return sorted(points, key=lex_key)


def fiber(fam: LevelFamily, p: CubePoint) -> Fiber:
    """Exact set of levels n with (p, n) in ``fam``."""
    if p.tau != fam.tau:
        raise ValueError(f"dimension mismatch: point tau={p.tau}, family tau={fam.tau}")
    levels = {n for n, s in enumerate(fam.prefix) if p in s}
    if p not in fam.tail:
        return Fiber(frozenset(levels))
    start = fam.horizon
    while start - 1 in levels:
        start -= 1
        levels.discard(start)
    return Fiber(frozenset(levels), start)


def is_closed_discrete(fam: LevelFamily) -> Verdict:
    """Closed and discrete in X iff every fiber over a unit point is finite.

    Level slices are finite, so the only possible accumulation points are
    top points (z, TOP), and (z, TOP) accumulates iff the fiber over z is
    infinite. The certificate is the first such z.
    """
    for z in z_points(fam.tau):
        if not fiber(fam, z).is_finite:
            return Verdict(False, z)
    return Verdict(True)


def union(fam1: LevelFamily, fam2: LevelFamily) -> LevelFamily:
    if fam1.tau != fam2.tau:
        raise ValueError(f"dimension mismatch: {fam1.tau} vs {fam2.tau}")
    h = max(fam1.horizon, fam2.horizon)
    prefix = tuple(fam1.level(n) | fam2.level(n) for n in range(h))
    return LevelFamily(fam1.tau, h, prefix, fam1.tail | fam2.tail)


def top_points(tau: int) -> list:
    """Z x {TOP}, the closed discrete copy of Z at the limit level."""
    return [XPoint(z, TOP) for z in z_points(tau)]
