"""Known worked examples, runnable as a quick self-check."""

from __future__ import annotations

from .conjecture import conjecture_test
from .degen import NON_SPECIAL, SPECIAL, UNDECIDED, speciality
from .dims import dim_report
from .interp import InterpConfig, dim_oracle
from .lattice import DivisorClassX, DivisorClassY
from .notation import parse_system, render_system
from .weyl import phi_push, standard_form

EX1 = "(13,9,5)(11^2,7^2,3^2)"
EX1_STD = "(5,5,5)(3^6)"
SP3 = "(1,1,1,1,1,1,1)(3^3)"


def _sorted(D):
    return render_system(DivisorClassY(sorted(D.d, reverse=True), D.m))


def _std_chain():
    out, trace = standard_form(parse_system(EX1))
    steps = [render_system(s) for s in trace.steps]
    return render_system(out) == EX1_STD and "(9,5,5)(7^2,3^4)" in steps, steps


def _counts():
    got = {s: dim_report(parse_system(s)) for s in (EX1, EX1_STD, SP3)}
    ok = (
        (got[EX1].vcount, got[EX1].fcount) == (80, 154)
        and (got[EX1_STD].vcount, got[EX1_STD].fcount) == (156, 156)
        and (got[SP3].vcount, got[SP3].fcount) == (20, 41)
    )
    return ok, {s: (r.vcount, r.fcount) for s, r in got.items()}


def _oracle(cfg):
    a = dim_oracle(parse_system(EX1_STD), cfg)
    b = dim_oracle(parse_system(SP3), cfg)
    nq = [dim_oracle(parse_system(f"({n},{n},{n})({n}^7)"), cfg).dim_affine for n in range(1, 5)]
    ok = a.dim_affine == 156 and (b.dim_affine, b.rank) == (42, 86) and nq == [1, 1, 1, 1]
    return ok, {"ex1_std": a.dim_affine, "sp3": (b.dim_affine, b.rank), "nQ": nq}


def _degen():
    v_ex1 = speciality(parse_system(EX1))
    v_std = speciality(parse_system(EX1_STD))
    v_sp3 = speciality(parse_system(SP3))
    nodes = {_sorted(t.system) for t in v_std.trace.walk()}
    ok = (
        v_ex1.kind == SPECIAL
        and v_std.kind == NON_SPECIAL
        and "(5,5,2)(3^3)" in nodes
        and v_sp3.kind == UNDECIDED
    )
    return ok, {"ex1": v_ex1.kind, "ex1_std": v_std.kind, "sp3": v_sp3.kind}


def _phi():
    D = phi_push(DivisorClassX(7, 4, (3,) * 9))
    return render_system(D) == SP3, render_system(D)


def _conjecture(cfg):
    reps = [conjecture_test(parse_system(f"({n},{n},{n})({n}^7)"), cfg) for n in range(1, 5)]
    reps.append(conjecture_test(parse_system(EX1_STD), cfg))
    return all(r.agree for r in reps), [r.agree for r in reps]


def run_checks(cfg: InterpConfig = InterpConfig()) -> list[tuple[str, bool, object]]:
    checks = [
        ("standard-form chain", _std_chain),
        ("virtual and fiber counts", _counts),
        ("oracle dimensions", lambda: _oracle(cfg)),
        ("degeneration verdicts", _degen),
        ("P^7 correspondence", _phi),
        ("quadric conjecture instances", lambda: _conjecture(cfg)),
    ]
    results = []
    for name, fn in checks:
        ok, detail = fn()
        results.append((name, bool(ok), detail))
    return results
