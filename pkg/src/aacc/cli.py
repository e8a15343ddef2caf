"""Command-line interface.

Exit codes: 0 success / property holds, 1 property fails, 2 trace
conditions violated, 3 input error, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from . import __version__
from .attack import AttackError, averaging_attack
from .code import Code, CodeError, GeneratedWord, parse_code, serialize_code
from .concat import ConcatSpec, decompose
from .props import Budget, BudgetExceeded, DEFAULT_BUDGET, check, code_rate
from .search import SEARCH_PROPERTIES, exhaustive_search, greedy_search
from .trace import soft_trace, two_stage_trace

EXIT_OK, EXIT_FAIL, EXIT_VIOLATED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3, 4

ALL_PROPERTIES = ("fpc", "sc", "scld", "ssc", "smippc", "udc")


class InputError(Exception):
    pass


def _write_atomic(path: str, text: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, target)


def _emit(text: str, out: str | None) -> None:
    if out:
        _write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _emit_json(report: dict, out: str | None) -> None:
    _emit(json.dumps(report, indent=2, sort_keys=False) + "\n", out)


def _load_code(path: str) -> Code:
    try:
        return parse_code(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read code file {path}: {exc}") from exc
    except CodeError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_word(path: str) -> GeneratedWord:
    try:
        return GeneratedWord.from_json(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read word file {path}: {exc}") from exc
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _parse_indices(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError as exc:
        raise InputError(f"bad index list {text!r}") from exc


def cmd_verify(args) -> int:
    code = _load_code(args.code)
    props = args.properties or list(ALL_PROPERTIES)
    list_cap = args.list_cap if args.list_cap is not None else code.M
    budget = Budget(args.budget)
    verdicts = {}
    for p in props:
        verdicts[p] = check(p, code, args.t, budget, list_cap).to_dict()
    report = {
        "command": "verify",
        "version": __version__,
        "code": args.code,
        "n": code.n,
        "M": code.M,
        "q": code.q,
        "t": args.t,
        "list_cap": list_cap,
        "budget": args.budget,
        "budget_used": budget.used,
        "rate": code_rate(code),
        "verdicts": verdicts,
    }
    _emit_json(report, args.out)
    return EXIT_OK if all(v["holds"] for v in verdicts.values()) else EXIT_FAIL


def cmd_attack(args) -> int:
    code = _load_code(args.code)
    try:
        x = averaging_attack(code, _parse_indices(args.colluders))
    except (AttackError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    _emit(x.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_trace(args) -> int:
    x = _load_word(args.word)
    try:
        if args.two_stage:
            if args.outer and args.inner:
                spec = ConcatSpec(_load_code(args.outer), _load_code(args.inner))
            elif args.code and args.n1:
                spec = decompose(_load_code(args.code), args.n1)
            else:
                raise InputError("--two-stage needs --code with --n1, or --outer with --inner")
            outcome = two_stage_trace(spec.outer, spec.inner, x, args.t_cap)
        else:
            if not args.code:
                raise InputError("--code is required")
            outcome = soft_trace(_load_code(args.code), x, args.t_cap)
    except (CodeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    report = outcome.to_dict()
    report["t0"] = outcome.t0
    _emit_json(report, args.out)
    return EXIT_OK if outcome.ok else EXIT_VIOLATED


def cmd_concat(args) -> int:
    try:
        code = ConcatSpec(_load_code(args.outer), _load_code(args.inner)).code
    except CodeError as exc:
        raise InputError(str(exc)) from exc
    _emit(serialize_code(code), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.mode == "exhaustive":
        result = exhaustive_search(args.n, args.q, args.t, args.property, args.budget)
    else:
        result = greedy_search(
            args.n, args.q, args.t, args.property, args.trials, args.seed, args.budget
        )
    report = {
        "command": "search",
        "version": __version__,
        "n": args.n,
        "q": args.q,
        "t": args.t,
        "property": args.property,
        "mode": result.mode,
        "seed": args.seed,
        "trials": args.trials if args.mode == "greedy" else None,
        "budget": args.budget,
        "budget_used": result.budget_used,
        "budget_exhausted": result.exhausted,
        "optimal": result.optimal,
        "M": result.M,
        "rate": code_rate(result.code),
        "code": serialize_code(result.code),
    }
    if args.code_out:
        _write_atomic(args.code_out, serialize_code(result.code))
    _emit_json(report, args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    from . import specsim

    code = _load_code(args.code)
    colluders = _parse_indices(args.colluders)
    try:
        exact = averaging_attack(code, colluders)
    except (AttackError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    try:
        params = specsim.EmbeddingParams(args.dim, args.alpha, args.seed)
        basis = specsim.make_basis(code.n, params.dim, params.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    import numpy as np

    host = np.random.default_rng(args.seed + 1).standard_normal(params.dim)
    copies = [specsim.embed(host, basis, code.codeword(j), params.alpha) for j in colluders]
    pirate = specsim.collude_average(copies)
    if args.noise > 0:
        pirate = specsim.add_noise(pirate, args.noise, args.seed + 2)
    floats = specsim.extract(pirate, host, basis, params.alpha)
    t_max = args.t_max or len(colluders)
    err = float(np.max(np.abs(floats - np.array([float(e) for e in exact]))))
    report = {
        "command": "simulate",
        "version": __version__,
        "seed": args.seed,
        "dim": args.dim,
        "alpha": args.alpha,
        "noise": args.noise,
        "colluders": sorted(set(colluders)),
        "extracted": floats.tolist(),
        "max_abs_error": err,
        "exact": exact.to_dict(),
    }
    try:
        word = specsim.rationalize(floats, t_max, args.tol)
        report["word"] = word.to_dict()
        report["matches_exact"] = word == exact
    except ValueError as exc:
        report["word"] = None
        report["matches_exact"] = False
        report["snap_error"] = str(exc)
    if args.pirate_out:
        specsim.write_signal(args.pirate_out, pirate)
    if args.host_out:
        specsim.write_signal(args.host_out, host)
    _emit_json(report, args.out)
    return EXIT_OK if report["matches_exact"] else EXIT_FAIL


def cmd_bench(args) -> int:
    from .bench import scaling_report

    sizes = tuple(int(v) for v in args.sizes.split(","))
    report = scaling_report(sizes, args.t, args.seed, args.attacks, args.repeats)
    report.update(command="bench", version=__version__)
    _emit_json(report, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aacc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"aacc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("verify", help="check code-class properties")
    p.add_argument("--code", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--list-cap", type=int, help="SCLD list size (default M)")
    p.add_argument("--properties", nargs="+", choices=ALL_PROPERTIES)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    add_out(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("attack", help="exact averaging attack")
    p.add_argument("--code", required=True)
    p.add_argument("--colluders", required=True, help="comma-separated 1-based indices")
    add_out(p)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("trace", help="trace colluders from a generated word")
    p.add_argument("--code")
    p.add_argument("--word", required=True, help="generated-word JSON file")
    p.add_argument("--t-cap", type=int, required=True)
    p.add_argument("--two-stage", action="store_true")
    p.add_argument("--n1", type=int, help="outer length for --two-stage")
    p.add_argument("--outer", help="outer code file for --two-stage")
    p.add_argument("--inner", help="inner code file for --two-stage")
    add_out(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("concat", help="concatenate outer and inner codes")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    add_out(p)
    p.set_defaults(func=cmd_concat)

    p = sub.add_parser("search", help="search for a large code with a property")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--property", choices=SEARCH_PROPERTIES, required=True)
    p.add_argument("--mode", choices=("greedy", "exhaustive"), default="greedy")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--code-out", help="write the best code here")
    add_out(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("simulate", help="spread-spectrum embed/average/extract round trip")
    p.add_argument("--code", required=True)
    p.add_argument("--colluders", required=True)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--dim", type=int, default=64)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--t-max", type=int, help="largest denominator to snap to (default: #colluders)")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--noise", type=float, default=0.0, help="additive Gaussian noise sigma")
    p.add_argument("--pirate-out", help="write the averaged signal (binary float64)")
    p.add_argument("--host-out", help="write the host signal (binary float64)")
    add_out(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("bench", help="soft-trace wall time versus code size")
    p.add_argument("--sizes", default="64,128,256,512")
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--attacks", type=int, default=20)
    p.add_argument("--repeats", type=int, default=5)
    add_out(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "t", 1) is not None and getattr(args, "t", 1) < 1:
        print("error: t must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
