import re

from hypothesis import strategies as st

from multifiber.lattice import DivisorClassY


@st.composite
def classes(draw, n=None, r=None, lo=-6, hi=6):
    n = draw(st.integers(2, 5)) if n is None else n
    r = draw(st.integers(0, 6)) if r is None else r
    d = draw(st.lists(st.integers(lo, hi), min_size=n, max_size=n))
    m = draw(st.lists(st.integers(lo, hi), min_size=r, max_size=r))
    return DivisorClassY(d, m)


@st.composite
def class_pairs(draw, min_r=0):
    n = draw(st.integers(2, 5))
    r = draw(st.integers(min_r, 6))
    return draw(classes(n, r)), draw(classes(n, r))


def pytest_terminal_summary(terminalreporter):
    groups = {}
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                name = rep.nodeid.split("::")[-1]
                key = re.match(r"test_c(\d+)", name).group(1)
                groups.setdefault(int(key), []).append((name, outcome == "passed"))
    if not groups:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(groups):
        parts = sorted(groups[key])
        ok = all(p for _, p in parts)
        detail = ", ".join(f"{n[len('test_'):]}={'ok' if p else 'FAIL'}" for n, p in parts)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
