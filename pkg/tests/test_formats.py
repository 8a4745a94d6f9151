import random

import pytest

from starweb.errors import ParseError
from starweb.formats import format_cover, format_report, format_witness, parse_cover, parse_witness
from starweb.generate import random_cover, random_family
from starweb.space import LevelFamily

from conftest import pt

THREE = """tau 2
box ones=0 zeros= levels=0..*
box ones=1 zeros= levels=0..*
box ones= zeros=0,1 levels=0..*
"""


def test_cover_roundtrip_exact(three_cover):
    assert parse_cover(THREE) == three_cover
    assert format_cover(three_cover) == THREE


def test_cover_comments_and_blank_lines(three_cover):
    text = "# demo\ntau 2\n\nbox ones=0 zeros= levels=0..*  # first\nbox ones=1 zeros= levels=0..*\nbox ones= zeros=1,0 levels=0..*\n"
    assert parse_cover(text) == three_cover


@pytest.mark.parametrize("text,lineno", [
    ("tau 2\nbox ones= zeros= levels=3..1\n", 2),
    ("tau 2\nbox ones=0 zeros=0 levels=0..*\n", 2),
    ("tau 2\nbox ones=5 zeros= levels=0..*\n", 2),
    ("tau 2\n\nbox ones=x zeros= levels=0..*\n", 3),
    ("tau 2\nboxes\n", 2),
    ("tau two\n", 1),
    ("", 1),
])
def test_cover_parse_errors(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_cover(text)
    assert exc.value.lineno == lineno


def test_random_covers_roundtrip():
    rng = random.Random(1)
    for tau in range(2, 7):
        for _ in range(10):
            c = random_cover(tau, rng)
            text = format_cover(c)
            assert parse_cover(text) == c
            assert format_cover(parse_cover(text)) == text


WITNESS = """tau 2
horizon 2
level 0: 11
level 1:
tail: 00,11
"""


def test_witness_roundtrip_exact():
    fam = parse_witness(WITNESS)
    assert fam == LevelFamily(2, 2, (frozenset({pt("11")}), frozenset()), frozenset({pt("00"), pt("11")}))
    assert format_witness(fam) == WITNESS


def test_witness_with_report_block():
    text = WITNESS + format_report(True, False, {"star_covers": "(00,3)"})
    assert parse_witness(text) == parse_witness(WITNESS)
    assert text.endswith("closed_discrete: true\nstar_covers: false\ncertificate: (00,3)\n")


def test_report_formats_accumulation_point():
    assert format_report(False, True, {"closed_discrete": pt("10")}).splitlines()[-1] == "certificate: (10,TOP)"


def test_random_witness_roundtrip():
    rng = random.Random(4)
    for _ in range(100):
        fam = random_family(rng.randint(1, 6), rng)
        text = format_witness(fam)
        assert parse_witness(text) == fam
        assert format_witness(parse_witness(text)) == text


@pytest.mark.parametrize("text", [
    "tau 2\nhorizon 1\ntail: 11\n",
    "tau 2\nhorizon 0\nlevel 0: 11\ntail:\n",
    "tau 2\nhorizon 0\ntail: 111\n",
    "tau 2\nhorizon 0\n",
    "tau 2\nlevel 0: 11\n",
    "tau 2\nhorizon 1\nlevel 1: 11\ntail:\n",
])
def test_witness_parse_errors(text):
    with pytest.raises(ParseError):
        parse_witness(text)
