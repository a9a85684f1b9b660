"""Regenerate vinberg5_brackets.txt with sympy, independently of the C++ code.

Fields are written in the coordinates (z1..z5) of the matrix
[[z1,0,z4],[0,z2,z5],[z4,z5,z3]].  The abstract bracket follows
[X,Y]^# = [Y^#, X^#] with the field bracket [P,Q] = D_P Q - D_Q P.
"""
import sys
import sympy as sp

z = sp.symbols("z1:6")
z1, z2, z3, z4, z5 = z
h = sp.Rational(1, 2)

FIELDS = [
    ("A1", (z1, 0, 0, h * z4, 0)),
    ("A2", (0, z2, 0, 0, h * z5)),
    ("A3", (0, 0, z3, h * z4, h * z5)),
    ("A31", (0, 0, 2 * z4, z1, 0)),
    ("A32", (0, 0, 2 * z5, 0, z2)),
    ("E1", (1, 0, 0, 0, 0)),
    ("E2", (0, 1, 0, 0, 0)),
    ("E3", (0, 0, 1, 0, 0)),
    ("E31", (0, 0, 0, 1, 0)),
    ("E32", (0, 0, 0, 0, 1)),
    ("W1", (-z1**2 - 1, 0, -z4**2, -z1 * z4, 0)),
    ("W2", (0, -z2**2 - 1, -z5**2, 0, -z2 * z5)),
]


def directional(p, q):
    return [sp.expand(sum(p[j] * sp.diff(q[i], z[j]) for j in range(5))) for i in range(5)]


def field_bracket(p, q):
    a = directional(p, q)
    b = directional(q, p)
    return [sp.expand(a[i] - b[i]) for i in range(5)]


def coords(vec):
    cs = sp.symbols("c0:12")
    eqs = []
    for i in range(5):
        expr = sp.expand(vec[i] - sum(cs[k] * FIELDS[k][1][i] for k in range(12)))
        poly = sp.Poly(expr, *z)
        eqs.extend(poly.coeffs())
    sol = sp.solve(eqs, cs, dict=True)
    if len(sol) != 1:
        raise SystemExit("not in span")
    return [sp.nsimplify(sol[0].get(c, 0)) for c in cs]


def term(c, label, first):
    c = sp.Rational(c)
    neg = c < 0
    a = -c if neg else c
    body = label if a == 1 else f"{a}*{label}"
    if first:
        return ("-" if neg else "") + body
    return (" - " if neg else " + ") + body


def main(out):
    lines = []
    for i in range(12):
        for k in range(i + 1, 12):
            x, y = FIELDS[i], FIELDS[k]
            val = field_bracket(y[1], x[1])
            c = coords(val)
            parts = []
            for idx, ck in enumerate(c):
                if ck != 0:
                    parts.append(term(ck, FIELDS[idx][0], not parts))
            rhs = "".join(parts) if parts else "0"
            lines.append(f"[{x[0]}, {y[0]}] = {rhs}")
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "vinberg5_brackets.txt")
