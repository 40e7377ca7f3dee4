#!/usr/bin/env python3
"""Regenerate the bundled S_2(Gamma_0(N)) q-expansion fixtures.

Requires cypari2 (PARI/GP). The basis written is the reduced row echelon
form of the q-expansion matrix of mfbasis(mfinit([N,2],1)), which is the
same normalized basis Sage returns for CuspForms(Gamma0(N), 2).

    python3 tools/gen_fixtures.py fixtures/ --prec 120
"""
import argparse
import pathlib
from fractions import Fraction

import cypari2

LEVELS = [34, 35, 37, 38, 44, 54, 55, 60]


def rref(rows):
    rows = [list(r) for r in rows]
    r = 0
    for c in range(len(rows[0])):
        k = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return rows[:r]


def fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir")
    ap.add_argument("--prec", type=int, default=120)
    args = ap.parse_args()
    pari = cypari2.Pari()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for n in LEVELS:
        mf = pari.mfinit([n, 2], 1)
        coefs = pari.mfcoefs(mf, args.prec - 1)
        g = int(pari.matsize(coefs)[1])
        rows = [[Fraction(int(coefs[i, j])) for i in range(args.prec)] for j in range(g)]
        basis = rref(rows)
        assert len(basis) == g
        lines = [
            "QEXP 1",
            f"# S_2(Gamma_0({n})) basis, reduced echelon form of PARI/GP mfbasis(mfinit([{n},2],1))",
            f"# generated by tools/gen_fixtures.py with PARI/GP {'.'.join(map(str, pari.version()))}",
            f"LEVEL {n}",
            "WEIGHT 2",
            f"PREC {args.prec}",
            f"FORMS {g}",
        ]
        for i, f in enumerate(basis):
            lines.append(f"FORM f{i}")
            lines.append(" ".join(fmt(x) for x in f))
        (out / f"g0n{n}_s2.qexp").write_text("\n".join(lines) + "\n")
        print(n, g)


if __name__ == "__main__":
    main()
