"""
Speciality by degeneration
==========================

Split the first factor into two pieces and share the points out.  When
both halves are non-special and the points fit, the original system has
exactly its fiber count.
"""

from multifiber import parse_system, render_system, speciality


def show(t, depth=0):
    extra = "" if t.split is None else " k=%d s=%d" % t.split
    print("  " * depth + render_system(t.system), t.rule + extra)
    for c in t.children:
        show(c, depth + 1)


for text in ["(5,5,5)(3^6)", "(13,9,5)(11^2,7^2,3^2)", "(1,1,1,1,1,1,1)(3^3)"]:
    v = speciality(parse_system(text))
    print(text, "->", v.kind, v.certificate or "")

show(speciality(parse_system("(5,5,5)(3^6)")).trace)
