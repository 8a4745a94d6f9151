"""Points and basic clopen boxes of the finite Cantor cube D^tau.

Points are stored as integer bit masks (bit ``a`` holds coordinate ``a``)
but print as bit strings with coordinate 0 first, so ``unit_point(0, 2)``
prints as ``10``. "Lexicographic" always refers to that printed form.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

from .errors import BoxInsideZ

MAX_TAU = 64
MAX_ORACLE_TAU = 12


def _check_tau(tau: int) -> None:
    if not 1 <= tau <= MAX_TAU:
        raise ValueError(f"tau must be in 1..{MAX_TAU}, got {tau}")


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class CubePoint:
    mask: int
    tau: int

    def __post_init__(self):
        _check_tau(self.tau)
        if self.mask < 0 or self.mask >> self.tau:
            raise ValueError(f"mask {self.mask:#x} does not fit in {self.tau} coordinates")

    @classmethod
    def from_bits(cls, bits) -> "CubePoint":
        bits = list(bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"bits must be 0/1, got {bits!r}")
        return cls(_mask(i for i, b in enumerate(bits) if b), len(bits))

    @classmethod
    def parse(cls, text: str) -> "CubePoint":
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls.from_bits(int(c) for c in text)

    @property
    def bits(self) -> tuple:
        return tuple((self.mask >> i) & 1 for i in range(self.tau))

    def __getitem__(self, alpha: int) -> int:
        if not 0 <= alpha < self.tau:
            raise IndexError(alpha)
        return (self.mask >> alpha) & 1

    def __str__(self) -> str:
        return "".join("1" if (self.mask >> i) & 1 else "0" for i in range(self.tau))

    def __repr__(self) -> str:
        return f"CubePoint({self})"

    @property
    def ones_count(self) -> int:
        return self.mask.bit_count()

    @property
    def is_unit(self) -> bool:
        return self.ones_count == 1

    def with_coordinate(self, alpha: int, value: int) -> "CubePoint":
        if value:
            return CubePoint(self.mask | (1 << alpha), self.tau)
        return CubePoint(self.mask & ~(1 << alpha), self.tau)


def lex_key(p: CubePoint) -> str:
    return str(p)


@dataclass(frozen=True)
class Box:
    """Basic clopen box: coordinates in ``ones`` pinned to 1, ``zeros`` to 0."""

    ones: frozenset
    zeros: frozenset
    tau: int

    def __post_init__(self):
        _check_tau(self.tau)
        object.__setattr__(self, "ones", frozenset(self.ones))
        object.__setattr__(self, "zeros", frozenset(self.zeros))
        if self.ones & self.zeros:
            raise ValueError(f"coordinates pinned both ways: {sorted(self.ones & self.zeros)}")
        bad = [i for i in self.ones | self.zeros if not 0 <= i < self.tau]
        if bad:
            raise ValueError(f"coordinates out of range for tau={self.tau}: {sorted(bad)}")

    @classmethod
    def whole(cls, tau: int) -> "Box":
        return cls(frozenset(), frozenset(), tau)

    @classmethod
    def singleton(cls, p: CubePoint) -> "Box":
        ones = frozenset(i for i in range(p.tau) if p[i])
        return cls(ones, frozenset(range(p.tau)) - ones, p.tau)

    @cached_property
    def one_mask(self) -> int:
        return _mask(self.ones)

    @cached_property
    def zero_mask(self) -> int:
        return _mask(self.zeros)

    @cached_property
    def free(self) -> tuple:
        return tuple(i for i in range(self.tau) if i not in self.ones and i not in self.zeros)

    def __contains__(self, p: CubePoint) -> bool:
        return point_in_box(p, self)

    def points(self) -> Iterator[CubePoint]:
        """All points of the box in lexicographic order."""
        free = self.free
        for values in itertools.product((0, 1), repeat=len(free)):
            m = self.one_mask
            for i, v in zip(free, values):
                if v:
                    m |= 1 << i
            yield CubePoint(m, self.tau)

    def text(self) -> str:
        return f"ones={_fmt_list(self.ones)} zeros={_fmt_list(self.zeros)}"

    def __str__(self) -> str:
        return self.text()


def _fmt_list(indices) -> str:
    return ",".join(str(i) for i in sorted(indices))


def unit_point(alpha: int, tau: int) -> CubePoint:
    if not 0 <= alpha < tau:
        raise IndexError(f"coordinate {alpha} out of range for tau={tau}")
    return CubePoint(1 << alpha, tau)


def z_points(tau: int) -> list:
    """The set Z of unit points, ordered by coordinate."""
    return [unit_point(a, tau) for a in range(tau)]


def all_points(tau: int) -> Iterator[CubePoint]:
    if tau > MAX_ORACLE_TAU:
        raise ValueError(f"refusing to enumerate D^{tau}; limit is {MAX_ORACLE_TAU}")
    return Box.whole(tau).points()


def point_in_box(p: CubePoint, b: Box) -> bool:
    if p.tau != b.tau:
        raise ValueError(f"dimension mismatch: point has tau={p.tau}, box has tau={b.tau}")
    return (p.mask & b.one_mask) == b.one_mask and not (p.mask & b.zero_mask)


def pick_off_Z_point(b: Box, rng: Optional[random.Random] = None) -> CubePoint:
    """Pick a point of ``b`` outside Z.

    Unpinned coordinates are set to 1; if that lands on a unit point the
    lexicographically smallest point of ``b`` with ones_count != 1 is used.
    With ``rng`` a uniformly random qualifying point is drawn instead.
    """
    p = CubePoint(b.one_mask | _mask(b.free), b.tau)
    if p.is_unit:
        p = next((q for q in b.points() if not q.is_unit), None)
        if p is None:
            raise BoxInsideZ(f"box {b} lies inside Z", detail=b)
    if rng is None:
        return p
    free = b.free
    for _ in range(64):
        m = b.one_mask
        for i in free:
            if rng.getrandbits(1):
                m |= 1 << i
        q = CubePoint(m, b.tau)
        if not q.is_unit:
            return q
    return p


def canonical_z_neighborhood(b: Box, alpha: int) -> frozenset:
    """Zero-pinned coordinates F of the canonical neighbourhood of z_alpha in ``b``.

    Every point with coordinate ``alpha`` equal to 1 and coordinates in F
    equal to 0 lies in ``b``.
    """
    z = unit_point(alpha, b.tau)
    if not point_in_box(z, b):
        raise ValueError(f"z_{alpha} = {z} is not in box {b}")
    return b.zeros


def first_uncovered(boxes, tau: int, within: Optional[Box] = None) -> Optional[CubePoint]:
    """Lexicographically smallest point of ``within`` outside the union of ``boxes``.

    Exact for any tau: branches only on coordinates some surviving box pins.
    Returns None when the union covers ``within`` (default: the whole cube).
    """
    within = within or Box.whole(tau)
    pins = [(b.one_mask, b.zero_mask) for b in boxes]
    return _uncovered(pins, within.one_mask, within.zero_mask, tau)


def _uncovered(pins, c1: int, c0: int, tau: int) -> Optional[CubePoint]:
    live = [(o, z) for o, z in pins if not (o & c0) and not (z & c1)]
    for o, z in live:
        if (o & c1) == o and (z & c0) == z:
            return None
    if not live:
        return CubePoint(c1, tau)
    fixed = c1 | c0
    relevant = 0
    for o, z in live:
        relevant |= (o | z) & ~fixed
    # smallest unpinned coordinate; unconstrained ones are fixed to 0 without branching
    for i in range(tau):
        bit = 1 << i
        if fixed & bit:
            continue
        if not relevant & bit:
            c0 |= bit
            fixed |= bit
            continue
        hit = _uncovered(live, c1, c0 | bit, tau)
        if hit is not None:
            return hit
        return _uncovered(live, c1 | bit, c0, tau)
    raise AssertionError("unreachable: fully pinned constraint with live boxes")


def box_subset_of_union(b: Box, boxes) -> bool:
    return first_uncovered(boxes, b.tau, within=b) is None
