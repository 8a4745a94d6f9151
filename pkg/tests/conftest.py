import pytest

from starweb.cover import Cover, LevelInterval
from starweb.cube import Box, CubePoint


def box(tau, ones=(), zeros=()):
    return Box(frozenset(ones), frozenset(zeros), tau)


def pt(s):
    return CubePoint.parse(s)


@pytest.fixture
def three_cover():
    """tau=2: (ones={0}) x [0,inf), (ones={1}) x [0,inf), (zeros={0,1}) x [0,inf)."""
    return Cover.from_pieces(2, [
        (box(2, ones={0}), LevelInterval(0)),
        (box(2, ones={1}), LevelInterval(0)),
        (box(2, zeros={0, 1}), LevelInterval(0)),
    ])


@pytest.fixture
def whole_cover_1():
    return Cover.from_pieces(1, [(box(1), LevelInterval(0))])
