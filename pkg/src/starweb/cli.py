"""Command-line interface.

Exit codes: 0 success, 1 invalid cover or failed check, 2 parse/usage
error, 3 degenerate construction at finite tau.
"""

from __future__ import annotations

import argparse
import os
import random
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import oracle
from .cover import region_covers_X, star, validate_cover
from .errors import DegenerateConstruction, HorizonTooSmall, InvalidCover, ParseError
from .formats import (
    format_cover,
    format_report,
    format_witness,
    parse_cover,
    parse_witness,
)
from .generate import random_cover
from .setmap import SetMapping, free_decompose
from .space import is_closed_discrete
from .witness import synthesize

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_DEGENERATE = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[str] = None
    tau: Optional[int] = None
    horizon: int = oracle.DEFAULT_HORIZON
    seed: Optional[int] = None
    random_choices: bool = False
    output: Optional[str] = None

    def __post_init__(self):
        if self.random_choices and self.seed is None:
            raise ValueError("--random-choices requires --seed")
        if self.horizon < 1:
            raise ValueError("horizon must be at least 1")

    def rng(self) -> Optional[random.Random]:
        return random.Random(self.seed) if self.random_choices else None


def _horizon_from_env() -> int:
    raw = os.environ.get("STARWEB_HORIZON")
    return int(raw) if raw else oracle.DEFAULT_HORIZON


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _degenerate_message(exc: DegenerateConstruction) -> str:
    return f"error: {type(exc).__name__} ({exc.lemma} hypothesis fails at finite tau)"


def _read(path: str, parser):
    return parser(Path(path).read_text())


def cmd_verify_cover(cfg: RunConfig) -> int:
    c = _read(cfg.input, parse_cover)
    verdict = validate_cover(c)
    if verdict:
        print("valid")
        return EXIT_OK
    print(f"invalid: {verdict.certificate}")
    return EXIT_INVALID


def cmd_synthesize(cfg: RunConfig) -> int:
    c = _read(cfg.input, parse_cover)
    try:
        report = synthesize(c, cfg.rng())
    except InvalidCover as exc:
        print(f"invalid: {exc.certificate}")
        return EXIT_INVALID
    except DegenerateConstruction as exc:
        _err(_degenerate_message(exc))
        _err(f"detail: {exc}")
        return EXIT_DEGENERATE
    text = format_witness(report.witness) + format_report(
        report.closed_discrete, report.star_covers, report.certificates
    )
    if cfg.output:
        Path(cfg.output).write_text(text)
        print(format_report(report.closed_discrete, report.star_covers, report.certificates), end="")
    else:
        print(text, end="")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_check_witness(cfg: RunConfig, witness_path: str) -> int:
    c = _read(cfg.input, parse_cover)
    fam = _read(witness_path, parse_witness)
    if fam.tau != c.tau:
        _err(f"error: witness tau={fam.tau} but cover tau={c.tau}")
        return EXIT_PARSE
    verdict = validate_cover(c)
    if not verdict:
        print(f"invalid: {verdict.certificate}")
        return EXIT_INVALID
    cd = is_closed_discrete(fam)
    sc = region_covers_X(star(fam, c), c.tau)
    certs = {}
    if not cd:
        certs["closed_discrete"] = cd.certificate
    if not sc:
        certs["star_covers"] = sc.certificate
    print(format_report(cd.ok, sc.ok, certs), end="")
    try:
        agree = (
            oracle.brute_closed_discrete(fam, cfg.horizon).ok == cd.ok
            and oracle.brute_star_covers(fam, c, cfg.horizon).ok == sc.ok
        )
    except HorizonTooSmall as exc:
        _err(f"error: {exc}")
        return EXIT_PARSE
    print(f"oracle: {'agree' if agree else 'DISAGREE'} (horizon {cfg.horizon})")
    return EXIT_OK if (cd.ok and sc.ok and agree) else EXIT_INVALID


def cmd_random_covers(cfg: RunConfig, count: int) -> int:
    if cfg.tau is None or cfg.tau < 2:
        _err("error: --tau must be at least 2")
        return EXIT_PARSE
    if count < 1:
        _err("error: --count must be at least 1")
        return EXIT_PARSE
    rng = random.Random(cfg.seed)
    out = Path(cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    success = degenerate = failed = 0
    width = max(4, len(str(count - 1)))
    for i in range(count):
        c = random_cover(cfg.tau, rng)
        path = out / f"cover_{i:0{width}d}.txt"
        path.write_text(format_cover(c))
        try:
            report = synthesize(c)
        except DegenerateConstruction as exc:
            degenerate += 1
            print(f"{path.name}: degenerate {type(exc).__name__}")
            continue
        if report.ok:
            success += 1
            print(f"{path.name}: ok")
        else:
            failed += 1
            print(f"{path.name}: FAILED")
    print(f"summary: count={count} success={success} degenerate={degenerate} failed={failed}")
    return EXIT_OK if failed == 0 else EXIT_INVALID


def parse_setmap(text: str) -> SetMapping:
    lines = [(k, ln.split("#", 1)[0].strip()) for k, ln in enumerate(text.splitlines(), 1)]
    lines = [(k, ln) for k, ln in lines if ln]
    if not lines:
        raise ParseError(1, "empty set mapping file")
    k, first = lines[0]
    m = re.fullmatch(r"(?:n\s+)?(\d+)", first)
    if not m:
        raise ParseError(k, f"expected ground size 'n <k>', got {first!r}")
    n = int(m.group(1))
    images: dict = {}
    for k, line in lines[1:]:
        m = re.fullmatch(r"(\d+)\s*:\s*([\d,\s]*)", line)
        if not m:
            raise ParseError(k, f"expected 's: t1,t2,...', got {line!r}")
        s = int(m.group(1))
        if s in images:
            raise ParseError(k, f"element {s} listed twice")
        body = m.group(2).replace(" ", "")
        images[s] = [int(t) for t in body.split(",") if t]
    try:
        return SetMapping.from_dict(n, images)
    except ValueError as exc:
        raise ParseError(k, str(exc)) from None


def cmd_free_decompose(cfg: RunConfig) -> int:
    f = _read(cfg.input, parse_setmap)
    for k, cls in enumerate(free_decompose(f)):
        print(f"class {k}: {','.join(map(str, sorted(cls)))}")
    return EXIT_OK


def cmd_starcompact(cfg: RunConfig, max_size: int) -> int:
    c = _read(cfg.input, parse_cover)
    try:
        res = oracle.starcompact_search(c, max_size)
    except InvalidCover as exc:
        print(f"invalid: {exc.certificate}")
        return EXIT_INVALID
    if res.found:
        mode = "exhaustive" if res.exhaustive else "greedy"
        print(f"found ({mode}): {','.join(map(str, res.points))}")
    else:
        print(f"NotFound ({'conclusive' if res.exhaustive else 'inconclusive'})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starweb", description="Star-cover witnesses for the space X over D^tau.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-cover", help="check that a cover file covers X")
    p.add_argument("file")

    p = sub.add_parser("synthesize", help="build a closed discrete star witness")
    p.add_argument("file")
    p.add_argument("--seed", type=int)
    p.add_argument("--random-choices", action="store_true")
    p.add_argument("--out", help="write witness file here instead of stdout")

    p = sub.add_parser("check-witness", help="verify a witness file against a cover")
    p.add_argument("cover")
    p.add_argument("witness")

    p = sub.add_parser("random-covers", help="generate seeded random valid covers")
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("free-decompose", help="split a set mapping into free classes")
    p.add_argument("file")

    p = sub.add_parser("starcompact", help="search for a finite star witness")
    p.add_argument("file")
    p.add_argument("--max-size", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        horizon = _horizon_from_env()
        if args.command == "verify-cover":
            return cmd_verify_cover(RunConfig(args.command, args.file, horizon=horizon))
        if args.command == "synthesize":
            cfg = RunConfig(
                args.command, args.file, horizon=horizon, seed=args.seed,
                random_choices=args.random_choices, output=args.out,
            )
            return cmd_synthesize(cfg)
        if args.command == "check-witness":
            return cmd_check_witness(RunConfig(args.command, args.cover, horizon=horizon), args.witness)
        if args.command == "random-covers":
            cfg = RunConfig(args.command, tau=args.tau, horizon=horizon, seed=args.seed, output=args.out)
            return cmd_random_covers(cfg, args.count)
        if args.command == "free-decompose":
            return cmd_free_decompose(RunConfig(args.command, args.file, horizon=horizon))
        if args.command == "starcompact":
            return cmd_starcompact(RunConfig(args.command, args.file, horizon=horizon), args.max_size)
    except ParseError as exc:
        _err(f"parse error: {exc}")
        return EXIT_PARSE
    except (OSError, ValueError) as exc:
        _err(f"error: {exc}")
        return EXIT_PARSE
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
