"""Command-line front end: ring inspection, unit classification, code
construction, duals, distance tables, self-dual inventories, and
verification sweeps.

All output is deterministic: JSON is emitted with sorted keys and no
timestamps, CSV rows follow the documented column orders.  Exit codes:
0 success, 1 validation error, 2 budget exceeded, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .ambient_ring import AmbientParams
from .constacodes import ConstaCode, dual_code, enumerate_codewords, self_dual_codes, sort_words
from .distances import DistanceRow, distance_table
from .errors import BudgetExceededError, GalringError
from .galois_ring import DEFAULT_ENUM_CAP, GrElement, RingContext, RingParams, build_ring
from .unit_types import classify_unit, is_chain_ambient
from .verification import SweepConfig, run_default_verification, run_sweep

ENV_BUDGET = "GALRING_BUDGET"


def _parse_element(ctx: RingContext, text: str) -> GrElement:
    """Integers for m = 1; comma-separated coefficients c0,c1,... for m >= 2."""
    m = ctx.params.m
    if m == 1:
        if "," in text:
            raise ValueError(f"m=1 elements are plain integers, got {text!r}")
        return ctx.from_int(int(text))
    parts = text.split(",")
    if len(parts) != m:
        raise ValueError(f"expected {m} comma-separated coefficients, got {text!r}")
    return ctx.element([int(v) for v in parts])


def _budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get(ENV_BUDGET)
    if env is not None:
        value = int(env)
        if value <= 0:
            raise ValueError(f"{ENV_BUDGET} must be positive, got {env}")
        return value
    return None


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _print_csv(rows, header=None) -> None:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if header is not None:
        writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    sys.stdout.write(out.getvalue())


def _ring(args) -> RingContext:
    return build_ring(RingParams(args.p, args.a, args.m))


def _ambient(args) -> AmbientParams:
    ctx = _ring(args)
    gamma = _parse_element(ctx, args.gamma)
    return AmbientParams(ctx, args.s, gamma)


def cmd_ring_info(args) -> int:
    ctx = _ring(args)
    params = ctx.params
    out = {
        "p": params.p,
        "a": params.a,
        "m": params.m,
        "h": list(ctx.h),
        "zeta": list(ctx.zeta.coeffs),
        "size": ctx.size,
        "units": ctx.size - ctx.size // params.residue_size,
    }
    if params.residue_size <= 64:
        out["teichmuller"] = [list(t.coeffs) for t in ctx.teich_table]
    _print_json(out)
    return 0


def cmd_classify(args) -> int:
    ctx = _ring(args)
    x = _parse_element(ctx, args.element)
    cls = classify_unit(x)
    out = cls.to_json_dict()
    out["chain"] = is_chain_ambient(x, args.s) if x.is_unit else None
    _print_json(out)
    return 0


def _code_from_args(args) -> ConstaCode:
    return ConstaCode(_ambient(args), args.i)


def _emit_code(code: ConstaCode, args) -> int:
    budget = _budget(args)
    words = None
    if args.words:
        kwargs = {"budget": budget} if budget is not None else {}
        words = sort_words(enumerate_codewords(code, **kwargs))
    if args.format == "csv":
        if words is not None:
            _print_csv([[el.to_int() for el in w] for w in words])
        else:
            d = code.to_json_dict()
            d["gamma"] = code.gamma.to_int()
            d["alpha"] = code.alpha.to_int()
            cols = ("p", "a", "m", "s", "gamma", "alpha", "i", "cardinality")
            _print_csv([[d[c] for c in cols]], header=cols)
        return 0
    out = code.to_json_dict()
    if words is not None:
        out["words"] = [[el.to_int() for el in w] for w in words]
    _print_json(out)
    return 0


def cmd_code(args) -> int:
    return _emit_code(_code_from_args(args), args)


def cmd_dual(args) -> int:
    return _emit_code(dual_code(_code_from_args(args)), args)


def cmd_distances(args) -> int:
    kwargs = {}
    budget = _budget(args)
    if budget is not None:
        kwargs["budget"] = budget
    rows = distance_table(_ambient(args), with_oracle=args.oracle, **kwargs)
    if args.format == "csv":
        _print_csv([r.to_row() for r in rows], header=DistanceRow.COLUMNS)
    else:
        _print_json({"rows": [r.to_json_dict() for r in rows]})
    return 0


def cmd_selfdual(args) -> int:
    codes = sorted(self_dual_codes(_ambient(args)), key=lambda c: c.i)
    if args.format == "csv":
        cols = ("p", "a", "m", "s", "gamma", "alpha", "i", "cardinality")
        rows = []
        for c in codes:
            d = dict(c.to_json_dict(), gamma=c.gamma.to_int(), alpha=c.alpha.to_int())
            rows.append([d[col] for col in cols])
        _print_csv(rows, header=cols)
    else:
        _print_json({"codes": [c.to_json_dict() for c in codes]})
    return 0


def cmd_verify(args) -> int:
    if args.config is not None:
        with open(args.config) as fh:
            config = SweepConfig.from_json_dict(json.load(fh))
        if args.budget is not None:
            config.budget = args.budget
        elif config.budget is None:
            config.budget = _budget(args)
        results = run_sweep(config)
        output, fmt = config.output, config.format
    else:
        results = run_default_verification()
        output, fmt = None, "json"
    for r in results:
        print(r.line())
    if output is not None:
        payload = [
            {"name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ]
        with open(output, "w") as fh:
            if fmt == "csv":
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(("name", "passed", "detail"))
                for r in results:
                    writer.writerow((r.name, r.passed, r.detail))
            else:
                json.dump(payload, fh, sort_keys=True, indent=2)
                fh.write("\n")
    return 0 if all(r.passed for r in results) else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galring",
        description="Constacyclic codes of length p^s over Galois rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_flags(sp):
        sp.add_argument("-p", type=int, required=True, help="prime")
        sp.add_argument("-a", type=int, required=True, help="characteristic exponent")
        sp.add_argument("-m", type=int, required=True, help="extension degree")

    def ambient_flags(sp):
        ring_flags(sp)
        sp.add_argument("-s", type=int, required=True, help="length exponent")
        sp.add_argument("--gamma", required=True, help="constacyclic constant")

    def output_flags(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--budget", type=int, default=None)

    sp = sub.add_parser("ring-info", help="print ring construction data")
    ring_flags(sp)
    sp.set_defaults(func=cmd_ring_info)

    sp = sub.add_parser("classify", help="classify an element's unit type")
    ring_flags(sp)
    sp.add_argument("-s", type=int, default=1, help="length exponent for the chain verdict")
    sp.add_argument("element", help="ring element")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("code", help="build the code <(x - alpha)^i>")
    ambient_flags(sp)
    sp.add_argument("-i", type=int, required=True, help="generator exponent")
    sp.add_argument("--words", action="store_true", help="enumerate codewords")
    output_flags(sp)
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("dual", help="build the dual code")
    ambient_flags(sp)
    sp.add_argument("-i", type=int, required=True, help="generator exponent")
    sp.add_argument("--words", action="store_true", help="enumerate codewords")
    output_flags(sp)
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("distances", help="distance table for one constant")
    ambient_flags(sp)
    sp.add_argument("--oracle", action="store_true", help="run the brute-force minimum")
    output_flags(sp)
    sp.set_defaults(func=cmd_distances)

    sp = sub.add_parser("selfdual", help="list self-dual codes")
    ambient_flags(sp)
    output_flags(sp)
    sp.set_defaults(func=cmd_selfdual)

    sp = sub.add_parser("verify", help="run formula-vs-oracle verification")
    sp.add_argument("--config", default=None, help="JSON sweep configuration")
    sp.add_argument("--budget", type=int, default=None)
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GalringError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
