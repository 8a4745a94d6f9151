"""Construction of a countable closed discrete A with St(A, V) = X.

Given a finite cover V of X the pipeline builds two eventually constant
level families:

* Q, which stars every finite level: on each level take a finite subcover
  and pick, in each of its boxes, a point outside Z.
* R, which stars every top point (z_a, TOP): pick for each a a cover
  element around (z_a, TOP), shrink it to a canonical neighbourhood
  {f(a)=1, f(b)=0 for b in F_a}, and hit all of these neighbourhoods with a
  finite set S off Z built from a decomposition of a -> F_a into free sets.
  R puts s_0..s_n on level n.

Neither family has a point over Z, so both are closed discrete, and so is
their union. Wherever a choice is made the default picks the first
candidate; passing a ``random.Random`` makes every choice at random instead.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cover import Cover, CoverElement, per_level_subcover, region_covers_X, star, validate_cover
from .cube import CubePoint, pick_off_Z_point, point_in_box, unit_point, canonical_z_neighborhood
from .errors import InvalidCover, SingletonUnfixable
from .setmap import SetMapping, free_decompose
from .space import TOP, LevelFamily, XPoint, is_closed_discrete, union


@dataclass(frozen=True)
class TopAssignment:
    """Per coordinate a: element O_a holding (z_a, TOP), its zero pins F_a, threshold n_a.

    The box {f(a)=1, f(b)=0 for b in F_a} times [n_a, TOP] lies inside O_a.
    """

    elements: tuple
    neighborhoods: tuple
    thresholds: tuple


@dataclass(frozen=True)
class WitnessReport:
    witness: LevelFamily
    q_part: LevelFamily
    r_part: LevelFamily
    closed_discrete: bool
    star_covers: bool
    certificates: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.closed_discrete and self.star_covers


def lemma1_S(neighborhoods: Sequence, rng: Optional[random.Random] = None) -> list:
    """Finite S off Z meeting every canonical neighbourhood of a unit point.

    ``neighborhoods[a]`` is the set F_a of coordinates pinned to 0 around
    z_a. The map a -> F_a is a set mapping; each free class H gives the
    point with ones exactly on H, which lies in the neighbourhood of every
    a in H. A singleton class {a} would give z_a itself, so one spare
    coordinate outside F_a and a is switched on as well.
    """
    tau = len(neighborhoods)
    F = [frozenset(s) for s in neighborhoods]
    for a, s in enumerate(F):
        if a in s or any(not 0 <= b < tau for b in s):
            raise ValueError(f"F_{a} = {sorted(s)} must avoid {a} and lie in 0..{tau - 1}")
    f = SetMapping(tuple(F))
    order = None
    if rng is not None:
        order = list(range(tau))
        rng.shuffle(order)
    classes = free_decompose(f, order)
    S = []
    for H in classes:
        mask = 0
        for a in H:
            mask |= 1 << a
        if len(H) == 1:
            (a,) = H
            spare = [b for b in range(tau) if b != a and b not in F[a]]
            if not spare:
                raise SingletonUnfixable(
                    f"singleton class {{{a}}} has no spare coordinate outside F_{a}", detail=a
                )
            mask |= 1 << (rng.choice(spare) if rng is not None else spare[0])
        S.append(CubePoint(mask, tau))
    return S


def build_Q(c: Cover, rng: Optional[random.Random] = None) -> LevelFamily:
    """Points off Z, one per box of each level's finite subcover."""
    picks: dict = {}
    slices = []
    for n in range(c.horizon + 1):
        level = set()
        for e in per_level_subcover(c, n):
            if e.box not in picks:
                picks[e.box] = pick_off_Z_point(e.box, rng)
            level.add(picks[e.box])
        slices.append(frozenset(level))
    h = c.horizon
    return LevelFamily(c.tau, h, tuple(slices[:h]), slices[h]).normalized()


def top_assignment(c: Cover, rng: Optional[random.Random] = None) -> TopAssignment:
    elements, F, thresholds = [], [], []
    for a in range(c.tau):
        z = unit_point(a, c.tau)
        candidates = [e for e in c.elements if e.interval.unbounded and point_in_box(z, e.box)]
        if not candidates:
            raise InvalidCover(XPoint(z, TOP))
        e: CoverElement = rng.choice(candidates) if rng is not None else candidates[0]
        zeros = set(canonical_z_neighborhood(e.box, a))
        n_a = e.interval.lo
        if rng is not None:
            # shrinking the neighbourhood keeps it inside O_a; leave one spare coordinate
            room = [b for b in range(c.tau) if b != a and b not in zeros]
            for b in rng.sample(room, min(rng.randint(0, 2), max(0, len(room) - 1))):
                zeros.add(b)
            n_a += rng.randint(0, 2)
        elements.append(e)
        F.append(frozenset(zeros))
        thresholds.append(n_a)
    return TopAssignment(tuple(elements), tuple(F), tuple(thresholds))


def build_R(c: Cover, rng: Optional[random.Random] = None) -> LevelFamily:
    """R_n = {s_k : k <= n}, constant S from level |S| - 1 on."""
    assignment = top_assignment(c, rng)
    S = lemma1_S(assignment.neighborhoods, rng)
    m = len(S)
    prefix = tuple(frozenset(S[: n + 1]) for n in range(m))
    return LevelFamily(c.tau, m, prefix, frozenset(S)).normalized()


def synthesize(c: Cover, rng: Optional[random.Random] = None) -> WitnessReport:
    valid = validate_cover(c)
    if not valid:
        raise InvalidCover(valid.certificate)
    q = build_Q(c, rng)
    r = build_R(c, rng)
    w = union(q, r).normalized()
    cd = is_closed_discrete(w)
    sc = region_covers_X(star(w, c), c.tau)
    certs = {}
    if not cd:
        certs["closed_discrete"] = cd.certificate
    if not sc:
        certs["star_covers"] = sc.certificate
    return WitnessReport(w, q, r, cd.ok, sc.ok, certs)
