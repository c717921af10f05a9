"""Command line front end.

Input is a JSON document::

    {"vertices": ["i", "j"],
     "arrows": [{"from": "i", "to": "j", "count": 3}],
     "theta": {"i": 1, "j": 0},
     "d": {"i": 1, "j": 1}}

or a preset such as ``--preset kronecker:n=3,a=1,b=1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import betti, hn
from .checks import run_checks
from .errors import InvalidInput, NotCoprime, QuiverModError
from .presets import parse_preset
from .quiver import DimVector, Quiver, StabilityData, is_coprime, moduli_dimension

COMMANDS = ("betti", "semistable", "strata", "check")


@dataclass(frozen=True)
class InputDocument:
    vertices: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str, int], ...]
    theta: Dict[str, int]
    d: Dict[str, int]

    def quiver(self) -> Quiver:
        counts: Dict[Tuple[str, str], int] = {}
        for src, dst, c in self.arrows:
            counts[(src, dst)] = counts.get((src, dst), 0) + c
        return Quiver.from_arrows(self.vertices, counts)

    def stability(self) -> StabilityData:
        return StabilityData(tuple(self.theta[v] for v in self.vertices))

    def dimvec(self) -> DimVector:
        return tuple(self.d[v] for v in self.vertices)


def _int(value, where: str, minimum: Optional[int] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"{where}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise InvalidInput(f"{where}: must be >= {minimum}, got {value}")
    return value


def parse_input(text) -> InputDocument:
    """Parse and validate an input document (bytes or str)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise InvalidInput("line 1, column 1: document must be a JSON object")
    for key in ("vertices", "arrows", "theta", "d"):
        if key not in raw:
            raise InvalidInput(f"missing field {key!r}")

    vertices = raw["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InvalidInput("vertices: expected a list of strings")
    if len(set(vertices)) != len(vertices):
        raise InvalidInput("vertices: names must be unique")
    declared = set(vertices)

    arrows = []
    if not isinstance(raw["arrows"], list):
        raise InvalidInput("arrows: expected a list")
    for k, arrow in enumerate(raw["arrows"]):
        where = f"arrows[{k}]"
        if not isinstance(arrow, dict):
            raise InvalidInput(f"{where}: expected an object")
        src, dst = arrow.get("from"), arrow.get("to")
        for name, value in (("from", src), ("to", dst)):
            if value not in declared:
                raise InvalidInput(f"{where}.{name}: unknown vertex {value!r}")
        arrows.append((src, dst, _int(arrow.get("count", 1), f"{where}.count", 1)))

    maps = {}
    for key, minimum in (("theta", None), ("d", 0)):
        value = raw[key]
        if not isinstance(value, dict):
            raise InvalidInput(f"{key}: expected an object keyed by vertex")
        unknown = set(value) - declared
        if unknown:
            raise InvalidInput(f"{key}: unknown vertex {sorted(unknown)[0]!r}")
        missing = [v for v in vertices if v not in value]
        if missing:
            raise InvalidInput(f"{key}: missing vertex {missing[0]!r}")
        maps[key] = {v: _int(value[v], f"{key}.{v}", minimum) for v in vertices}

    doc = InputDocument(tuple(vertices), tuple(arrows), maps["theta"], maps["d"])
    doc.quiver()  # raises CyclicQuiver
    return doc


def strata_table(Q: Quiver, S: StabilityData, d: DimVector) -> List[Tuple[Tuple[DimVector, ...], int]]:
    """All HN types of weight d with codimension, by codimension then type."""
    rows = [(t, hn.hn_codim(Q, t)) for t in hn.enumerate_hn_types(Q, S, d)]
    return sorted(rows, key=lambda row: (row[1], row[0]))


def strata_to_json(rows) -> list:
    return [{"type": [list(p) for p in t], "codim": c} for t, c in rows]


def strata_from_json(data) -> list:
    return [(tuple(tuple(p) for p in row["type"]), row["codim"]) for row in data]


def _fmt_vec(v) -> str:
    return "(" + ", ".join(map(str, v)) + ")"


def _fmt_type(t) -> str:
    return "[" + ", ".join(_fmt_vec(p) for p in t) + "]"


def _load(args) -> Tuple[Quiver, StabilityData, DimVector]:
    if args.input:
        if args.input == "-":
            text = sys.stdin.buffer.read()
        else:
            with open(args.input, "rb") as fh:
                text = fh.read()
        doc = parse_input(text)
        Q, S, d = doc.quiver(), doc.stability(), doc.dimvec()
    else:
        Q, S, d = parse_preset(args.preset)
    if args.dim:
        try:
            d = tuple(int(x) for x in args.dim.split(","))
        except ValueError as exc:
            raise InvalidInput("--dim must be comma-separated integers") from exc
    if d is None:
        d = (1,) * Q.n
    if len(d) != Q.n or any(x < 0 for x in d):
        raise InvalidInput(f"dimension vector {d} does not match the {Q.n} vertices")
    if not any(d):
        raise InvalidInput("dimension vector must be nonzero")
    return Q, S, d


def cmd_betti(Q, S, d, args, out) -> int:
    coprime = is_coprime(S, d)
    if args.check:
        series = {m: betti.counting_series(Q, S, d, m) for m in ("tm", "recursion", "oracle")}
        if len(set(series.values())) != 1:
            raise QuiverModError(f"routes disagree: {series}")
    if not coprime:
        series = betti.counting_series(Q, S, d, args.method)
        warning = (f"not coprime: gcd(theta(d), dim d) = gcd({S(d)}, {sum(d)}) != 1; "
                   "the counting series below is not a Poincare polynomial")
        if args.format == "json":
            payload = {
                "coprime": False,
                "empty": series.is_zero(),
                "moduli_dimension": moduli_dimension(Q, d),
                "poincare_v": [],
                "betti": [],
                "euler": None,
                "warnings": [warning],
                "counting_series": {"numerator": list(series.num.coeffs),
                                    "denominator": list(series.den.coeffs)},
            }
            print(json.dumps(payload, sort_keys=True), file=out)
        else:
            print(f"d = {_fmt_vec(d)}", file=out)
            print(f"warning: {warning}", file=out)
            print(f"counting series #R^ss/#G = {series}", file=out)
        if args.strict:
            raise NotCoprime(warning)
        return 0

    result = betti.poincare(Q, S, d, method=args.method)
    if args.format == "json":
        print(json.dumps(result.to_dict(), sort_keys=True), file=out)
        return 0
    print(f"d = {_fmt_vec(d)}", file=out)
    print(f"moduli dimension: {result.moduli_dim}", file=out)
    if result.empty:
        print("semistable locus is empty", file=out)
    print(f"poincare: {result.poincare_str('q' if args.q_form else 'v')}", file=out)
    print(f"betti: {result.betti}", file=out)
    print(f"euler: {result.euler}", file=out)
    return 0


def cmd_semistable(Q, S, d, args, out) -> int:
    witness = hn.semistability_witness(Q, S, d)
    if args.format == "json":
        payload = {"d": list(d), "semistable": witness is None,
                   "witness": None if witness is None else [list(p) for p in witness]}
        print(json.dumps(payload, sort_keys=True), file=out)
        return 0
    print(f"semistable: {'true' if witness is None else 'false'}", file=out)
    if witness is not None:
        print(f"witness HN type: {_fmt_type(witness)} (all Euler brackets vanish)", file=out)
    return 0


def cmd_strata(Q, S, d, args, out) -> int:
    rows = strata_table(Q, S, d)
    if args.format == "json":
        print(json.dumps({"d": list(d), "strata": strata_to_json(rows)}, sort_keys=True), file=out)
        return 0
    print(f"{'codim':>5}  HN type", file=out)
    for t, c in rows:
        print(f"{c:>5}  {_fmt_type(t)}", file=out)
    return 0


def cmd_check(Q, S, d, args, out) -> int:
    results = run_checks(Q, S, d)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        payload = [{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        print(json.dumps({"d": list(d), "checks": payload}, sort_keys=True), file=out)
    else:
        for r in results:
            status = "SKIP" if r.skipped else ("PASS" if r.passed else "FAIL")
            extra = f"  ({r.detail})" if (r.detail and not r.passed) or r.skipped else ""
            print(f"{status}  {r.name}{extra}", file=out)
    return 1 if failed else 0


HANDLERS = {"betti": cmd_betti, "semistable": cmd_semistable, "strata": cmd_strata, "check": cmd_check}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quivermod",
        description="Betti numbers and HN strata of quiver moduli, computed exactly.",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="JSON input document ('-' for stdin)")
    src.add_argument("--preset", metavar="SPEC",
                     help="linear:n=N | subspace:m=M,n=N | kronecker:n=N,a=A,b=B | flag:r=R,N=N,dims=1-2/1-2,d0=D")
    p.add_argument("--dim", metavar="D1,D2,...", help="override the dimension vector")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--method", choices=betti.METHODS, default="tm")
    p.add_argument("--strict", action="store_true", help="exit nonzero when d is not coprime")
    p.add_argument("--check", action="store_true", help="betti: cross-check all routes")
    p.add_argument("--q-form", action="store_true", help="print the Poincare polynomial in q = v^2")
    p.add_argument("command", choices=COMMANDS)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        Q, S, d = _load(args)
        return HANDLERS[args.command](Q, S, d, args, out)
    except (QuiverModError, OSError) as exc:
        kind = type(exc).__name__
        print(f"quivermod: {kind}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
