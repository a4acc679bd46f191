"""Command-line front end.

    multifiber dims "(13,9,5)(11^2,7^2,3^2)"
    multifiber std "(13,9,5)(11^2,7^2,3^2)" --trace
    multifiber dim "(1,1,1,1,1,1,1)(3^3)" --format json
    multifiber degen "(5,5,5)(3^6)"
    multifiber conjecture "(2,2,2)(2^7)"
    multifiber phi push --n 7 "(4)(3^9)"
    multifiber batch systems.txt --jobs 4 --oracle --degen
    multifiber selftest

Exit codes: 0 success, 1 internal or oracle error, 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .conjecture import conjecture_test
from .degen import speciality
from .dims import dim_report
from .interp import DEFAULT_PRIME, InterpConfig, dim_oracle
from .lattice import DivisorClassX, LatticeError
from .notation import ParseError, parse_system, render_mults, render_system
from .weyl import phi_pull, phi_push, standard_form

EXIT_OK, EXIT_ERROR, EXIT_PARSE = 0, 1, 2


def default_prime() -> int:
    return int(os.environ.get("MULTIFIBER_PRIME", DEFAULT_PRIME))


def _std_dict(D):
    out, trace = standard_form(D)
    return {
        "std": None if out is None else render_system(out),
        "empty": out is None,
        "steps": [render_system(s) for s in trace.steps],
    }


def _dims_text(rep) -> str:
    return (
        f"vcount={rep.vcount} vdim={rep.vdim} edim={rep.edim} "
        f"fcount={rep.fcount} fdim={rep.fdim} efdim={rep.efdim}"
    )


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def cmd_dims(args):
    D = parse_system(args.system)
    rep = dim_report(D)
    _emit(args, {"input": args.system, **rep.as_dict()}, _dims_text(rep))


def cmd_std(args):
    D = parse_system(args.system)
    info = _std_dict(D)
    lines = [info["std"] if not info["empty"] else "empty"]
    if args.trace:
        lines = [render_system(D)] + [f"  -> {s}" for s in info["steps"]] + lines
    _emit(args, {"input": args.system, **info}, "\n".join(lines))


def _cfg(args) -> InterpConfig:
    return InterpConfig(prime=args.prime, seed=args.seed, trials=args.trials)


def cmd_dim(args):
    D = parse_system(args.system)
    rep = dim_oracle(D, _cfg(args))
    text = (
        f"matrix {rep.rows}x{rep.cols} rank={rep.rank} "
        f"dim_affine={rep.dim_affine} dim_proj={rep.dim_proj} "
        f"(p={rep.prime}, failure bound per trial {rep.failure_bound:.2e})"
    )
    _emit(args, {"input": args.system, **rep.as_dict()}, text)


def _trace_lines(t, depth=0):
    head = f"{'  ' * depth}{render_system(t.system)} [{t.rule}]"
    if t.split:
        head += f" k={t.split[0]} s={t.split[1]}"
    yield head
    for c in t.children:
        yield from _trace_lines(c, depth + 1)


def cmd_degen(args):
    D = parse_system(args.system)
    v = speciality(D, max_depth=args.max_depth, strict_compat=args.strict_compat)
    lines = [v.kind + (" (truncated)" if v.truncated else "")]
    if args.trace:
        lines += list(_trace_lines(v.trace))
    _emit(args, {"input": args.system, **v.as_dict()}, "\n".join(lines))


def cmd_conjecture(args):
    D = parse_system(args.system)
    rep = conjecture_test(D, _cfg(args))
    lines = [
        f"{c['class']}: " + ("empty" if c.get("empty") else f"std {c['std']} q={c['q']} {c['prediction']}")
        for c in rep.chain
    ]
    lines.append(
        f"predicted count {rep.predicted_count}, oracle {rep.oracle.dim_affine}: "
        + ("agree" if rep.agree else "DISAGREE")
    )
    _emit(args, {"input": args.system, **rep.as_dict()}, "\n".join(lines))


def cmd_phi(args):
    if args.direction == "push":
        if args.n is None:
            raise ParseError("phi push needs --n", args.cls, 0)
        D = parse_system(args.cls, allow_negative=True)
        if D.n != 1:
            raise ParseError("an X class is written (d0)(m_1,...)", args.cls, 0)
        out = phi_push(DivisorClassX(args.n, D.d[0], D.m))
        text = render_system(out)
        payload = {"d": list(out.d), "m": list(out.m)}
    else:
        D = parse_system(args.cls, allow_negative=True)
        out = phi_pull(D)
        text = f"n={out.n} ({out.d0}){render_mults(out.m)}"
        payload = {"n": out.n, "d0": out.d0, "m": list(out.m)}
    _emit(args, {"input": args.cls, "direction": args.direction, **payload}, text)


def process_line(job):
    """One batch line -> JSON-ready dict.  Module level so it pickles."""
    lineno, text, opts = job
    out = {"line": lineno, "input": text}
    try:
        D = parse_system(text)
    except ParseError as exc:
        out["error"] = str(exc)
        out["exit"] = EXIT_PARSE
        return out
    try:
        out["dims"] = dim_report(D).as_dict()
        out["std"] = _std_dict(D)
        if opts["oracle"]:
            out["oracle"] = dim_oracle(D, InterpConfig(**opts["cfg"])).as_dict()
        if opts["degen"]:
            v = speciality(D, max_depth=opts["max_depth"])
            out["verdict"] = {"kind": v.kind, "truncated": v.truncated, "certificate": v.certificate}
    except Exception as exc:  # reported per line, batch keeps going
        out["error"] = f"{type(exc).__name__}: {exc}"
        out["exit"] = EXIT_ERROR
    return out


def read_batch(path: str) -> list[tuple[int, str]]:
    jobs = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                jobs.append((lineno, line))
    return jobs


def cmd_batch(args):
    opts = {
        "oracle": args.oracle,
        "degen": args.degen,
        "max_depth": args.max_depth,
        "cfg": {"prime": args.prime, "seed": args.seed, "trials": args.trials},
    }
    jobs = [(n, t, opts) for n, t in read_batch(args.file)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(process_line, jobs))
    else:
        results = [process_line(j) for j in jobs]
    code = EXIT_OK
    for res in results:
        print(json.dumps(res))
        code = max(code, res.get("exit", EXIT_OK))
    return code


def cmd_selftest(args):
    from .selftest import run_checks

    results = run_checks(_cfg(args))
    if args.format == "json":
        print(json.dumps([{"check": n, "ok": ok, "detail": repr(d)} for n, ok, d in results]))
    else:
        for name, ok, detail in results:
            print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="multifiber",
        description="Dimensions of linear systems with multiple base points on (P^1)^n.",
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def oracle_flags(sp):
        sp.add_argument("--prime", type=int, default=default_prime())
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=3)

    sp = sub.add_parser("dims", help="virtual, expected and fiber dimensions")
    sp.add_argument("system")
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("std", help="standard form")
    sp.add_argument("system")
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(func=cmd_std)

    sp = sub.add_parser("dim", help="finite-field interpolation oracle")
    sp.add_argument("system")
    oracle_flags(sp)
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("degen", help="speciality by degeneration")
    sp.add_argument("system")
    sp.add_argument("--max-depth", type=int, default=None)
    sp.add_argument("--strict-compat", action="store_true")
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(func=cmd_degen)

    sp = sub.add_parser("conjecture", help="quadric-class prediction on (P^1)^3 vs the oracle")
    sp.add_argument("system")
    oracle_flags(sp)
    sp.set_defaults(func=cmd_conjecture)

    sp = sub.add_parser("phi", help="move classes between P^n and (P^1)^n")
    sp.add_argument("direction", choices=["push", "pull"])
    sp.add_argument("cls")
    sp.add_argument("--n", type=int, default=None, help="dimension, for push")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("batch", help="one system per line in, JSON lines out")
    sp.add_argument("file")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--degen", action="store_true")
    sp.add_argument("--max-depth", type=int, default=None)
    oracle_flags(sp)
    sp.set_defaults(func=cmd_batch)

    sp = sub.add_parser("selftest", help="check the worked examples")
    oracle_flags(sp)
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (LatticeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
