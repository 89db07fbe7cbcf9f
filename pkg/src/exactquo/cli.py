"""Command line front end.

    exactquo div U V [--base B] [--variant V] [--mult M]
    exactquo shinv V H [--base B] [--variant V]
    exactquo pdiv U V --field F5
    exactquo census UMAX
    exactquo trace U V W0
    exactquo bench --sizes 256,512,1024

Every command takes ``--format text|csv|json``.  JSON output always has
the keys command, inputs, result and stats (iterations, mults, wall_ns).
Signed integers are accepted by ``div`` only: the quotient is truncated
toward zero, so q has sign sign(u)*sign(v) and r has the sign of u.
Contract errors such as division by zero exit with status 2.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import random
import statistics
import sys
import time

from . import dynamics, int_shinv
from .bigdigits import DEFAULT_BASE, DEFAULT_KARATSUBA_THRESHOLD, MultBackend, Natural
from .generic_core import IterationStats, RefineVariant
from .poly import parse_poly, pdivmod


class OutputFormat(str, enum.Enum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"


class ContractError(Exception):
    pass


def _backend(args) -> MultBackend:
    return MultBackend(args.mult, args.threshold)


def _parse_signed(text: str) -> tuple[int, str]:
    t = text.strip()
    if t[:1] in "+-":
        return (-1 if t[0] == "-" else 1), t[1:]
    return 1, t


def _natural(text: str, base: int) -> Natural:
    try:
        return Natural.from_str(text, base)
    except ValueError as e:
        raise ContractError(f"not a nonnegative integer: {text!r}") from e


def _stats_dict(st: IterationStats | None, wall_ns: int) -> dict:
    return {"iterations": st.iterations if st else 0,
            "mults": st.mults if st else 0,
            "wall_ns": wall_ns}


def _emit(args, payload: dict, text: str, rows: list | None = None, header=None):
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.JSON:
        print(json.dumps(payload))
    elif fmt is OutputFormat.CSV:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        if rows is None:
            header = list(payload["result"].keys())
            rows = [list(payload["result"].values())]
        wr.writerow(header)
        wr.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


# ---------------------------------------------------------------------------

def cmd_div(args) -> int:
    su, mu = _parse_signed(args.u)
    sv, mv = _parse_signed(args.v)
    u, v = _natural(mu, args.base), _natural(mv, args.base)
    if not v:
        raise ContractError("division by zero")
    st = IterationStats()
    t = time.perf_counter_ns()
    q, r, delta = int_shinv.divmod_delta(u, v, args.variant, _backend(args), st)
    wall = time.perf_counter_ns() - t
    qi, ri = su * sv * int(q), su * int(r)
    payload = {"command": "div", "inputs": {"u": args.u, "v": args.v, "base": args.base,
                                            "variant": args.variant, "mult": args.mult},
               "result": {"q": str(qi), "r": str(ri), "delta": delta},
               "stats": _stats_dict(st, wall)}
    _emit(args, payload, f"q={qi} r={ri}")
    return 0


def cmd_shinv(args) -> int:
    v = _natural(args.v, args.base)
    if not v:
        raise ContractError("shifted inverse of zero")
    if args.h < 0:
        raise ContractError("negative shift exponent")
    st = IterationStats()
    t = time.perf_counter_ns()
    w = int_shinv.shinv(v, args.h, args.variant, _backend(args), st)
    wall = time.perf_counter_ns() - t
    w0 = None if st.w0 is None else int(st.w0)
    payload = {"command": "shinv", "inputs": {"v": args.v, "h": args.h, "base": args.base,
                                              "variant": args.variant, "mult": args.mult},
               "result": {"value": str(w), "w0": None if w0 is None else str(w0),
                          "ells": st.ells},
               "stats": _stats_dict(st, wall)}
    lines = [str(w), f"iterations={st.iterations} mults={st.mults}"]
    if w0 is not None:
        lines.append(f"w0={w0} ells={','.join(map(str, st.ells))}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_pdiv(args) -> int:
    try:
        field = parse_poly(f"@ {args.field}").ring if args.field else None
        u = parse_poly(args.u, field)
        v = parse_poly(args.v, field or u.ring)
    except ValueError as e:
        raise ContractError(str(e)) from e
    if not v:
        raise ContractError("polynomial division by zero")
    t = time.perf_counter_ns()
    q, r = pdivmod(u, v, args.variant)
    wall = time.perf_counter_ns() - t
    payload = {"command": "pdiv", "inputs": {"u": args.u, "v": args.v, "field": repr(u.ring)},
               "result": {"q": q.coeff_str(), "r": r.coeff_str()},
               "stats": _stats_dict(None, wall)}
    _emit(args, payload, f'q="{q.coeff_str()}" r="{r.coeff_str()}"')
    return 0


def _census_values(umax: int) -> list[int]:
    vals, u = [], 10
    while u <= umax:
        vals.append(u)
        u *= 10
    if not vals or vals[-1] != umax:
        vals.append(umax)
    return vals


def cmd_census(args) -> int:
    if args.u_max <= 2:
        raise ContractError("census needs u > 2")
    values = args.values or _census_values(args.u_max)
    t = time.perf_counter_ns()
    rows = dynamics.census_table(values)
    wall = time.perf_counter_ns() - t
    table = [[r.u, r.actual, r.estimate, r.abs_err, dynamics.format_rel_err(r.rel_err)] for r in rows]
    payload = {"command": "census", "inputs": {"u_max": args.u_max, "values": values},
               "result": {"rows": [dict(zip(("u", "actual", "estimate", "abs_err", "rel_err"), t))
                                   for t in table]},
               "stats": _stats_dict(None, wall)}
    text = "\n".join(", ".join(map(str, t)) for t in table)
    _emit(args, payload, text, table, ["u", "actual", "estimate", "abs_err", "rel_err"])
    return 0


def cmd_trace(args) -> int:
    if not 1 < args.v < args.u:
        raise ContractError("trace needs 1 < v < u")
    t = time.perf_counter_ns()
    tr = dynamics.steps_to_converge(args.u, args.v, args.w0, args.budget)
    wall = time.perf_counter_ns() - t
    payload = {"command": "trace", "inputs": {"u": args.u, "v": args.v, "w0": args.w0},
               "result": tr.as_dict(),
               "stats": {"iterations": tr.steps, "mults": 2 * tr.steps, "wall_ns": wall}}
    rows = [[i, w] for i, w in enumerate(tr.iterates)]
    _emit(args, payload, str(tr), rows, ["i", "w"])
    return 0


def bench_shinv(sizes, variant="refine3", backend=None, repeats=5, seed=0):
    """Median shinv times for random v of each digit count (base 2**32), h = 2n."""
    rng = random.Random(seed)
    out = []
    prev = None
    for n in sizes:
        v = Natural.from_int(rng.getrandbits(32 * n) | 1 << (32 * n - 1), DEFAULT_BASE)
        int_shinv.shinv(v, 2 * n, variant, backend)     # warmup
        times = []
        st = IterationStats()
        for _ in range(repeats):
            st = IterationStats()
            t = time.perf_counter()
            int_shinv.shinv(v, 2 * n, variant, backend, st)
            times.append(time.perf_counter() - t)
        med = statistics.median(times)
        out.append({"digits": n, "median_s": med, "ratio": med / prev if prev else None,
                    "iterations": st.iterations})
        prev = med
    return out


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError as e:
        raise ContractError(f"bad --sizes: {args.sizes!r}") from e
    if not sizes or min(sizes) < 1:
        raise ContractError("sizes must be positive digit counts")
    t = time.perf_counter_ns()
    rows = bench_shinv(sizes, args.variant, _backend(args), args.repeats)
    wall = time.perf_counter_ns() - t
    payload = {"command": "bench", "inputs": {"sizes": sizes, "variant": args.variant,
                                              "mult": args.mult, "repeats": args.repeats},
               "result": {"rows": rows},
               "stats": {"iterations": sum(r["iterations"] for r in rows), "mults": None,
                         "wall_ns": wall}}
    table = [[r["digits"], f"{r['median_s']:.6f}",
              "" if r["ratio"] is None else f"{r['ratio']:.2f}", r["iterations"]] for r in rows]
    text = "\n".join(f"{d:>8} digits  {m} s  ratio {q or '-':>5}  iterations {i}"
                     for d, m, q, i in table)
    _emit(args, payload, text, table, ["digits", "median_s", "ratio", "iterations"])
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="exactquo", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, arith=True):
        sp.add_argument("--format", choices=[f.value for f in OutputFormat], default="text")
        if arith:
            sp.add_argument("--variant", choices=[v.value for v in RefineVariant],
                            default="refine3")
            sp.add_argument("--mult", choices=["karatsuba", "schoolbook"], default="karatsuba")
            sp.add_argument("--threshold", type=int, default=DEFAULT_KARATSUBA_THRESHOLD,
                            help="Karatsuba cutoff in digits")

    sp = sub.add_parser("div", help="exact integer quotient and remainder")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--base", type=int, default=DEFAULT_BASE)
    common(sp)
    sp.set_defaults(func=cmd_div)

    sp = sub.add_parser("shinv", help="floor(B**h / v) with iteration statistics")
    sp.add_argument("v")
    sp.add_argument("h", type=int)
    sp.add_argument("--base", type=int, default=DEFAULT_BASE)
    common(sp)
    sp.set_defaults(func=cmd_shinv)

    sp = sub.add_parser("pdiv", help="polynomial quotient and remainder over a prime field")
    sp.add_argument("u", help='coefficients low to high, e.g. "1,2,0,1"')
    sp.add_argument("v")
    sp.add_argument("--field", help="prime field such as F5")
    sp.add_argument("--variant", choices=[v.value for v in RefineVariant], default="refine3")
    common(sp, arith=False)
    sp.set_defaults(func=cmd_pdiv)

    sp = sub.add_parser("census", help="count of v where floor(u/v)-1 is a fixed point")
    sp.add_argument("u_max", type=int)
    sp.add_argument("--values", type=lambda s: [int(x) for x in s.split(",")],
                    help="explicit comma-separated u values")
    common(sp, arith=False)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("trace", help="iterate the integer Newton map")
    sp.add_argument("u", type=int)
    sp.add_argument("v", type=int)
    sp.add_argument("w0", type=int)
    sp.add_argument("--budget", type=int)
    common(sp, arith=False)
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("bench", help="shinv timings over digit counts (base 2**32)")
    sp.add_argument("--sizes", default="256,512,1024,2048")
    sp.add_argument("--repeats", type=int, default=5)
    common(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ContractError, ZeroDivisionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
