"""Regenerate classify_grid.jsonl: the 10x10x10x10 parameter grid.

Unitarizable iff (x<0, n>0, n'>0) or (x=0, n>=0, n'>=0).  B level: every
x<0 point is one class, x=0 points are singletons.  G level: x<0 points are
classed by (n, n'), x=0 points are singletons.
"""
import json
import sys
from fractions import Fraction

XS = ["-4", "-3", "-2", "-3/2", "-1", "-1/2", "0", "1/2", "1", "2"]
YS = [str(v) for v in range(-4, 6)]
NS = list(range(-2, 8))


def fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def row(x, y, n, m):
    xq = Fraction(x)
    ok = (xq < 0 and n > 0 and m > 0) or (xq == 0 and n >= 0 and m >= 0)
    if not ok:
        b = g = "-"
    elif xq < 0:
        b, g = "B:MinusClass", f"G:Minus({n},{m})"
    else:
        key = f"({fmt(y)},{n},{m})"
        b, g = "B:Singleton" + key, "G:Singleton" + key
    return {"xi": [fmt(x), fmt(y), str(n), str(m)], "unitarizable": ok,
            "B_class": b, "G_class": g}


def main(out):
    with open(out, "w") as f:
        for x in XS:
            for y in YS:
                for n in NS:
                    for m in NS:
                        f.write(json.dumps(row(x, y, n, m), separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "classify_grid.jsonl")
