#!/usr/bin/env python3
"""Regenerates tests/golden/radical_oracle.txt from sympy.

Each line: field;input;radical;div_radical;parts
Polynomials are comma-separated coefficient lists, constant term first.
parts is a space-separated list of mult:coeffs items.
"""

import random
import sys
from pathlib import Path

from sympy import GF, QQ, Poly, symbols

t = symbols("t")


def coeff_list(p, modulus):
    cs = list(reversed(p.all_coeffs())) if not p.is_zero else []
    if modulus:
        return ",".join(str(int(c) % modulus) for c in cs)
    return ",".join(str(c) for c in cs)


def random_poly(rng, dom, modulus, max_deg):
    shape = rng.randrange(4)
    def plain(d):
        lo, hi = (0, modulus - 1) if modulus else (-5, 5)
        return Poly([rng.randint(lo, hi) for _ in range(d + 1)], t, domain=dom)
    if shape == 0:
        p = plain(rng.randint(0, max_deg))
    elif shape == 1:
        g = plain(rng.randint(1, 3))
        k = rng.randint(2, 4)
        p = g ** k * plain(rng.randint(0, max(0, max_deg - k * 3)))
    elif shape == 2 and modulus:
        g = plain(rng.randint(1, max(1, max_deg // modulus)))
        p = g.compose(Poly(t ** modulus, t, domain=dom)) * plain(rng.randint(0, 2))
    else:
        p = plain(rng.randint(0, 3)) ** 2 * plain(rng.randint(0, 3)) ** 3 * plain(rng.randint(0, 2))
    return p


def main(out_path):
    rng = random.Random(20261019)
    lines = []
    for name, modulus in (("q", 0), ("fp:2", 2), ("fp:3", 3), ("fp:5", 5), ("fp:7", 7)):
        dom = GF(modulus) if modulus else QQ
        count = 0
        while count < 60:
            p = random_poly(rng, dom, modulus, 12)
            if p.is_zero:
                continue
            _, parts = p.sqf_list()
            monic_parts = {}
            for f, m in parts:
                if f.degree() <= 0:
                    continue
                f = f.monic()
                monic_parts[m] = monic_parts.get(m, Poly(1, t, domain=dom)) * f
            rad = Poly(1, t, domain=dom)
            for f in monic_parts.values():
                rad = rad * f
            q, r = p.div(rad)
            assert r.is_zero
            enc = " ".join(f"{m}:{coeff_list(f, modulus)}" for m, f in sorted(monic_parts.items()))
            lines.append(";".join([name, coeff_list(p, modulus), coeff_list(rad, modulus), coeff_list(q, modulus), enc]))
            count += 1
    Path(out_path).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/golden/radical_oracle.txt")
