"""Set mappings on finite ground sets and their decomposition into free sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence


@dataclass(frozen=True)
class SetMapping:
    """``images[s]`` is the finite set f(s) assigned to ground element ``s``.

    The ground set is ``range(n)``; f(s) never contains ``s``.
    """

    images: tuple

    def __post_init__(self):
        images = tuple(frozenset(im) for im in self.images)
        n = len(images)
        for s, im in enumerate(images):
            if s in im:
                raise ValueError(f"element {s} lies in its own image")
            bad = [t for t in im if not (isinstance(t, int) and 0 <= t < n)]
            if bad:
                raise ValueError(f"image of {s} leaves the ground set: {sorted(bad)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_dict(cls, n: int, images: Mapping[int, Iterable[int]]) -> "SetMapping":
        extra = [s for s in images if not 0 <= s < n]
        if extra:
            raise ValueError(f"elements outside ground set: {sorted(extra)}")
        return cls(tuple(frozenset(images.get(s, ())) for s in range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, s: int) -> frozenset:
        return self.images[s]

    def neighbours(self) -> list:
        """Symmetric conflict graph: s ~ t iff t in f(s) or s in f(t)."""
        adj = [set(im) for im in self.images]
        for s, im in enumerate(self.images):
            for t in im:
                adj[t].add(s)
        return adj

    def relabel(self, perm: Sequence[int]) -> "SetMapping":
        """Mapping g with g(perm[s]) = perm[f(s)]."""
        images = [None] * self.n
        for s, im in enumerate(self.images):
            images[perm[s]] = frozenset(perm[t] for t in im)
        return SetMapping(tuple(images))


def is_free(T: Iterable[int], f: SetMapping) -> bool:
    T = set(T)
    outside = [t for t in T if not 0 <= t < f.n]
    if outside:
        raise ValueError(f"elements outside ground set: {sorted(outside)}")
    return all(not (f(t) & T) for t in T)


def free_decompose(f: SetMapping, order: Optional[Sequence[int]] = None) -> list:
    """Split the ground set into pairwise disjoint f-free classes.

    Greedy colouring of the conflict graph: each element, visited in
    ``order`` (ascending by default), joins the lowest-numbered class it has
    no conflict with. Uses at most max-degree + 1 classes.
    """
    adj = f.neighbours()
    if order is None:
        order = range(f.n)
    elif sorted(order) != list(range(f.n)):
        raise ValueError("order must be a permutation of the ground set")
    colour = [-1] * f.n
    classes: list = []
    for s in order:
        taken = {colour[t] for t in adj[s] if colour[t] >= 0}
        c = 0
        while c in taken:
            c += 1
        colour[s] = c
        if c == len(classes):
            classes.append(set())
        classes[c].add(s)
    return [frozenset(c) for c in classes]
