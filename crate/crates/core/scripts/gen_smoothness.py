#!/usr/bin/env python3
"""Generate closed-form smoothness-indicator forms for src/smoothness_tables.rs.

For a stencil of r cells (offsets relative to cell i), the degree r-1 primitive
reconstruction p(x) matches the cell averages of the point values. The indicator

    beta = sum_{l=1}^{r-1} int_{-1/2}^{1/2} (d^l p / dx^l)^2 dx

is a quadratic form in the r-1 first differences of the stencil values. It is
factored exactly as beta = sum_t w_t (sum_s c_ts diff_s)^2 (LDL^T), so constant
data gives exactly zero and the result is never negative.

Usage: python3 scripts/gen_smoothness.py > src/smoothness_tables.rs
"""
import sympy as sp

x = sp.Symbol("x")

STENCILS = [
    ("CANDIDATE_0", -1, 3),
    ("CANDIDATE_1", 0, 3),
    ("CANDIDATE_2", -2, 3),
    ("CANDIDATE_3", 0, 4),
    ("CANDIDATE_4", -3, 4),
    ("CANDIDATE_5", 0, 5),
    ("FULL_6", -2, 6),
    ("FULL_8", -3, 8),
]


def form(offset, r):
    f = sp.symbols(f"f0:{r}")
    a = sp.symbols(f"a0:{r}")
    p = sum(a[l] * x**l for l in range(r))
    eqs = []
    for j in range(r):
        c = offset + j
        eqs.append(sp.Eq(sp.integrate(p, (x, sp.Rational(2 * c - 1, 2), sp.Rational(2 * c + 1, 2))), f[j]))
    sol = sp.solve(eqs, a, dict=True)[0]
    p = sp.expand(p.subs(sol))
    beta = 0
    for l in range(1, r):
        beta += sp.integrate(sp.diff(p, x, l) ** 2, (x, -sp.Rational(1, 2), sp.Rational(1, 2)))
    d = sp.symbols(f"d0:{r - 1}")
    subs = {f[0]: 0}
    for j in range(1, r):
        subs[f[j]] = sum(d[:j])
    beta = sp.expand(beta.subs(subs))
    g = sp.Matrix(r - 1, r - 1, lambda i, j: sp.Rational(1, 2) * sp.diff(beta, d[i], d[j]))
    lower, diag = g.LDLdecomposition()
    weights = [diag[t, t] for t in range(r - 1)]
    rows = [[lower[s, t] for s in range(r - 1)] for t in range(r - 1)]
    return weights, rows


def lit(q):
    q = sp.Rational(q)
    if q.q == 1:
        return f"{q.p}.0"
    return f"{q.p}.0 / {q.q}.0"


print("// @generated by scripts/gen_smoothness.py; do not edit by hand.")
print()
print("use crate::stencil::SmoothnessForm;")
for name, offset, r in STENCILS:
    weights, rows = form(offset, r)
    n = r - 1
    print()
    print(f"/// Cells {offset}..={offset + r - 1} relative to cell i.")
    print(f"pub(crate) const {name}: SmoothnessForm<{n}> = SmoothnessForm {{")
    print("    weights: [" + ", ".join(lit(w) for w in weights) + "],")
    print("    rows: [")
    for row in rows:
        print("        [" + ", ".join(lit(c) for c in row) + "],")
    print("    ],")
    print("};")
