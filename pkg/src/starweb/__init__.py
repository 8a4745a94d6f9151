"""Closed discrete star witnesses for covers of X = (D^tau x (omega+1)) \\ ((D^tau \\ Z) x {omega})."""

from .cover import (
    Cover,
    CoverElement,
    LevelInterval,
    Region,
    per_level_subcover,
    region_contains,
    region_covers_X,
    star,
    validate_cover,
)
from .cube import Box, CubePoint, canonical_z_neighborhood, pick_off_Z_point, point_in_box, unit_point
from .errors import BoxInsideZ, DegenerateConstruction, InvalidCover, SingletonUnfixable
from .setmap import SetMapping, free_decompose, is_free
from .space import TOP, Fiber, LevelFamily, XPoint, fiber, is_closed_discrete, union
from .witness import build_Q, build_R, lemma1_S, synthesize

__version__ = "0.1.0"
