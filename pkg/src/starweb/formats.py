"""Line-oriented text formats for covers and witnesses.

Cover file::

    tau 2
    # comment
    box ones=0 zeros= levels=0..*

Witness file (an optional report block may follow)::

    tau 2
    horizon 1
    level 0: 11
    tail: 00,11
    closed_discrete: true
    star_covers: true

Formatting is canonical (sorted index lists and point lists), so a
formatted file re-parses and re-formats to the same bytes.
"""

from __future__ import annotations

import re

from .cover import Cover, CoverElement, LevelInterval
from .cube import Box, CubePoint
from .errors import ParseError
from .space import TOP, LevelFamily, XPoint, sorted_points

_BOX_RE = re.compile(r"^box\s+ones=(\S*)\s+zeros=(\S*)\s+levels=(\d+)\.\.(\d+|\*)$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if line:
            yield lineno, line


def _index_list(s: str, lineno: int) -> frozenset:
    if not s:
        return frozenset()
    try:
        out = [int(t) for t in s.split(",")]
    except ValueError:
        raise ParseError(lineno, f"bad index list {s!r}") from None
    if len(set(out)) != len(out):
        raise ParseError(lineno, f"repeated index in {s!r}")
    return frozenset(out)


def _tau_line(lines, what: str) -> int:
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(1, f"empty {what} file") from None
    m = re.fullmatch(r"tau\s+(\d+)", line)
    if not m:
        raise ParseError(lineno, f"expected 'tau <k>', got {line!r}")
    tau = int(m.group(1))
    if not 1 <= tau <= 64:
        raise ParseError(lineno, f"tau out of range: {tau}")
    return tau


def parse_cover(text: str) -> Cover:
    lines = _lines(text)
    tau = _tau_line(lines, "cover")
    elements = []
    for lineno, line in lines:
        m = _BOX_RE.match(line)
        if not m:
            raise ParseError(lineno, f"expected 'box ones=.. zeros=.. levels=lo..hi', got {line!r}")
        ones = _index_list(m.group(1), lineno)
        zeros = _index_list(m.group(2), lineno)
        hi = None if m.group(4) == "*" else int(m.group(4))
        try:
            box = Box(ones, zeros, tau)
            interval = LevelInterval(int(m.group(3)), hi)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        elements.append(CoverElement(box, interval, len(elements)))
    return Cover(tau, tuple(elements))


def format_cover(c: Cover) -> str:
    out = [f"tau {c.tau}"]
    out += [e.text() for e in c.elements]
    return "\n".join(out) + "\n"


def _point_list(s: str, tau: int, lineno: int) -> frozenset:
    s = s.strip()
    if not s:
        return frozenset()
    pts = []
    for tok in s.split(","):
        tok = tok.strip()
        try:
            p = CubePoint.parse(tok)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        if p.tau != tau:
            raise ParseError(lineno, f"point {tok} has length {p.tau}, expected {tau}")
        pts.append(p)
    return frozenset(pts)


_REPORT_KEYS = ("closed_discrete", "star_covers", "certificate")


def parse_witness(text: str) -> LevelFamily:
    lines = _lines(text)
    tau = _tau_line(lines, "witness")
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(2, "missing 'horizon <H>' line") from None
    m = re.fullmatch(r"horizon\s+(\d+)", line)
    if not m:
        raise ParseError(lineno, f"expected 'horizon <H>', got {line!r}")
    horizon = int(m.group(1))
    prefix = []
    tail = None
    for lineno, line in lines:
        if line.split(":", 1)[0] in _REPORT_KEYS:
            continue
        if tail is not None:
            raise ParseError(lineno, f"unexpected line after tail: {line!r}")
        m = re.fullmatch(r"level\s+(\d+):(.*)", line)
        if m:
            if int(m.group(1)) != len(prefix):
                raise ParseError(lineno, f"expected level {len(prefix)}, got {m.group(1)}")
            prefix.append(_point_list(m.group(2), tau, lineno))
            continue
        m = re.fullmatch(r"tail:(.*)", line)
        if not m:
            raise ParseError(lineno, f"unrecognised line {line!r}")
        if len(prefix) != horizon:
            raise ParseError(lineno, f"horizon {horizon} but {len(prefix)} level lines")
        tail = _point_list(m.group(1), tau, lineno)
    if tail is None:
        raise ParseError(lineno + 1, "missing 'tail:' line")
    return LevelFamily(tau, horizon, tuple(prefix), tail)


def _fmt_points(points) -> str:
    return ",".join(str(p) for p in sorted_points(points))


def format_witness(fam: LevelFamily) -> str:
    out = [f"tau {fam.tau}", f"horizon {fam.horizon}"]
    for n, s in enumerate(fam.prefix):
        out.append(f"level {n}: {_fmt_points(s)}".rstrip())
    out.append(f"tail: {_fmt_points(fam.tail)}".rstrip())
    return "\n".join(out) + "\n"


def format_certificate(cert) -> str:
    # an accumulating unit point z is reported as the top point it accumulates at
    if isinstance(cert, CubePoint):
        cert = XPoint(cert, TOP)
    return str(cert)


def format_report(closed_discrete: bool, star_covers: bool, certificates: dict) -> str:
    out = [
        f"closed_discrete: {str(closed_discrete).lower()}",
        f"star_covers: {str(star_covers).lower()}",
    ]
    for key in ("closed_discrete", "star_covers"):
        if key in certificates:
            out.append(f"certificate: {format_certificate(certificates[key])}")
    return "\n".join(out) + "\n"
