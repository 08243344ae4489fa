"""Command-line front end.

    frobenius3 solve 4327 6716 9237 --json
    frobenius3 verify --random 1000 --max 300 --seed 1
    frobenius3 emit-geometry 5 6 7

Exit codes: 0 ok, 1 internal inconsistency, 2 usage, 3 infinite, 4 verify mismatch.
"""

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from functools import reduce
from math import gcd

from .errors import FrobeniusError, InfiniteGapSet
from .geometry import boundary_points, lshape_polygon, sector_directions, shoelace2
from .oracle import brute_gaps, brute_lx
from .solver import LATTICE3, Solution, solve, solve_oracle

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_INFINITE, EXIT_MISMATCH = 0, 1, 2, 3, 4


@dataclass
class OutputRecord:
    """One solved instance. ``timing_micros`` is informational and not canonical."""

    a: list
    method: str
    g: int
    N: int
    l: list | None = None
    x: dict | None = None
    f: list | None = None
    diag: dict | None = None
    timing_micros: int | None = None

    @classmethod
    def from_solution(cls, sol: Solution, timing_micros=None):
        rec = cls(list(sol.a), sol.method, sol.g, sol.N, timing_micros=timing_micros)
        if sol.data is not None:
            rec.l = list(sol.data.l)
            rec.x = sol.data.x_dict()
            rec.f = [list(v) for v in sol.basis]
        if sol.diagnostics is not None:
            rec.diag = sol.diagnostics.to_dict()
        return rec

    def to_dict(self, canonical=False) -> dict:
        d = {"a": self.a, "method": self.method, "g": self.g, "N": self.N,
             "l": self.l, "x": self.x, "f": self.f, "diag": self.diag}
        if not canonical:
            d["timing_micros"] = self.timing_micros
        return d

    def to_json(self, canonical=False) -> str:
        return json.dumps(self.to_dict(canonical))

    @classmethod
    def from_json(cls, line: str):
        return cls(**json.loads(line))

    def to_text(self) -> str:
        parts = [f"a=({', '.join(map(str, self.a))})", f"method={self.method}",
                 f"g={self.g}", f"N={self.N}"]
        if self.l is not None:
            parts.append(f"l=({', '.join(map(str, self.l))})")
            parts.append(" ".join(f"{k}={v}" for k, v in self.x.items()))
        if self.diag is not None:
            parts.append(" ".join(f"{k}={v}" for k, v in self.diag.items()))
        return "  ".join(parts)


def parse_batch(lines):
    """Integers per line, separated by whitespace or commas; ``#`` starts a comment."""
    out = []
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].replace(",", " ").strip()
        if not line:
            continue
        try:
            out.append(tuple(int(t) for t in line.split()))
        except ValueError:
            raise ValueError(f"line {n}: cannot parse {raw.strip()!r}") from None
    return out


def random_instances(count, max_value, seed, size=3):
    """Deterministic triples in ``[2, max_value]`` with overall gcd 1."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = tuple(rng.randint(2, max_value) for _ in range(size))
        if reduce(gcd, a) == 1:
            out.append(a)
    return out


class UsageError(Exception):
    pass


def _instances(args):
    if args.batch:
        with open(args.batch) as fh:
            items = parse_batch(fh)
    elif args.random is not None:
        if args.max is None:
            raise UsageError("--random requires --max")
        items = random_instances(args.random, args.max, args.seed)
    else:
        items = [tuple(args.values)]
    if not items or not all(items):
        raise UsageError("no generators given")
    for a in items:
        if not 2 <= len(a) <= 3 or min(a) < 1:
            raise UsageError(f"expected 2 or 3 positive integers, got {a}")
    return items


def _emit(text, args):
    if not args.quiet:
        print(text)


def _error_code(exc):
    return EXIT_INFINITE if isinstance(exc, InfiniteGapSet) else EXIT_INTERNAL


def cmd_solve(args) -> int:
    status = EXIT_OK
    for a in _instances(args):
        t0 = time.perf_counter_ns()
        try:
            sol = solve_oracle(a) if args.oracle else solve(a, diagnostics=args.diagnostics)
        except FrobeniusError as exc:
            print(f"{' '.join(map(str, a))}: {exc}", file=sys.stderr)
            status = max(status, _error_code(exc))
            continue
        rec = OutputRecord.from_solution(sol, (time.perf_counter_ns() - t0) // 1000)
        _emit(rec.to_json() if args.json else rec.to_text(), args)
    return status


def verify_one(a):
    """Compare the closed-form pipeline with the oracle. Returns ``(ok, report)``."""
    try:
        sol = solve(a, fallback=False)
    except InfiniteGapSet:
        try:
            brute_gaps(a)
        except InfiniteGapSet as exc:
            return True, {"a": list(a), "status": "MATCH", "error": str(exc)}
        return False, {"a": list(a), "status": "DIFF", "error": "pipeline reported infinite"}
    except FrobeniusError as exc:
        return False, {"a": list(a), "status": "DIFF", "error": str(exc)}
    gs = brute_gaps(a)
    ok = (sol.g, sol.N) == (gs.g, gs.N)
    report = {"a": list(a), "method": sol.method, "g": sol.g, "N": sol.N,
              "oracle_g": gs.g, "oracle_N": gs.N}
    if sol.method == LATTICE3:
        data, _, _ = brute_lx(a)
        ok = ok and data == sol.data
        report["lx_match"] = data == sol.data
    report["status"] = "MATCH" if ok else "DIFF"
    return ok, report


def _verify_text(rep):
    if "error" in rep:
        return f"{rep['status']} a=({', '.join(map(str, rep['a']))}) {rep['error']}"
    s = f"{rep['status']} g={rep['g']} N={rep['N']}"
    if rep["status"] != "MATCH":
        s += f" oracle g={rep['oracle_g']} N={rep['oracle_N']}"
    return f"{s}  a=({', '.join(map(str, rep['a']))}) method={rep['method']}"


def cmd_verify(args) -> int:
    matches = mismatches = 0
    for a in _instances(args):
        ok, rep = verify_one(a)
        if ok:
            matches += 1
        else:
            mismatches += 1
        _emit(json.dumps(rep) if args.json else _verify_text(rep), args)
    summary = f"{matches} MATCH, {mismatches} DIFF"
    print(summary if not args.json else json.dumps({"match": matches, "diff": mismatches}),
          file=sys.stderr if not args.quiet else sys.stdout)
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def geometry_document(a) -> dict:
    sol = solve(a, fallback=False)
    if sol.method != LATTICE3:
        raise UsageError(f"{a} is not on the three-generator lattice path (method {sol.method})")
    shapes = []
    for i in (1, 2, 3):
        poly = lshape_polygon(sol.a, sol.data, i)
        j = i % 3 + 1
        b = boundary_points(poly)
        area2 = shoelace2(poly)
        shapes.append({
            "plane": i,
            "axes": [j, j % 3 + 1],
            "vertices": [list(p) for p in poly],
            "area": area2 // 2,
            "boundary_points": b,
            "interior_points": (area2 - b + 2) // 2,
        })
    return {
        "a": list(sol.a),
        "l": list(sol.data.l),
        "x": sol.data.x_dict(),
        "f": [list(v) for v in sol.basis],
        "lshapes": shapes,
        "sector_directions": [list(v) for v in sector_directions(sol.a)],
    }


def cmd_emit_geometry(args) -> int:
    status = EXIT_OK
    for a in _instances(args):
        if len(a) != 3:
            raise UsageError("emit-geometry needs three generators")
        try:
            doc = geometry_document(a)
        except FrobeniusError as exc:
            print(f"{' '.join(map(str, a))}: {exc}", file=sys.stderr)
            status = max(status, _error_code(exc))
            continue
        _emit(json.dumps(doc), args)
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("values", nargs="*", type=int, help="two or three positive integers")
    common.add_argument("--json", action="store_true", help="emit JSON lines")
    common.add_argument("--diagnostics", action="store_true", help="attach geometric cross-checks")
    common.add_argument("--oracle", action="store_true", help="force the brute-force method")
    common.add_argument("--batch", metavar="FILE", help="one instance per line")
    common.add_argument("--random", type=int, metavar="N", help="N seeded random triples")
    common.add_argument("--max", type=int, metavar="M", help="largest random generator")
    common.add_argument("--seed", type=int, default=0, metavar="S")
    common.add_argument("--quiet", action="store_true", help="suppress per-instance output")

    parser = argparse.ArgumentParser(prog="frobenius3", description="Frobenius numbers of two or three generators.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="compute g and N").set_defaults(func=cmd_solve)
    sub.add_parser("verify", parents=[common], help="compare against brute force").set_defaults(func=cmd_verify)
    sub.add_parser("emit-geometry", parents=[common], help="L-shapes and basic vectors as JSON").set_defaults(
        func=cmd_emit_geometry)
    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
