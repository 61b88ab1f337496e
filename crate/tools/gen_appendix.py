#!/usr/bin/env python3
"""Builds the appendix claim files (JSON) from symbolic table entries.

Variables:
  ad, bd, cd - a^dbar, b^dbar, c^dbar (Laurent)
  a, b, c    - literal first powers (Laurent); used only by rows that carry
               an as-printed flag
  qd         - q^dbar
  sd         - (q - q^{-1})^dbar
  tlam       - T_dbar(Lambda)
  tlam2      - T_{2 dbar}(Lambda)
"""

import json
import os
from fractions import Fraction

VARS = ["ad", "bd", "cd", "a", "b", "c", "qd", "sd", "tlam", "tlam2"]


class P:
    """Sparse polynomial over the claim variables."""

    def __init__(self, terms=None):
        self.terms = dict(terms or {})  # tuple(exps) -> Fraction

    @staticmethod
    def const(v):
        return P({tuple([0] * len(VARS)): Fraction(v)})

    @staticmethod
    def var(name, exp=1):
        e = [0] * len(VARS)
        e[VARS.index(name)] = exp
        return P({tuple(e): Fraction(1)})

    def __add__(self, other):
        other = other if isinstance(other, P) else P.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
            if out[k] == 0:
                del out[k]
        return P(out)

    __radd__ = __add__

    def __neg__(self):
        return P({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = other if isinstance(other, P) else P.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return P.const(other) + (-self)

    def __mul__(self, other):
        other = other if isinstance(other, P) else P.const(other)
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                out[k] = out.get(k, Fraction(0)) + v1 * v2
                if out[k] == 0:
                    del out[k]
        return P(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            assert len(self.terms) == 1, "only monomials invert"
            (k, v), = self.terms.items()
            inv = P({tuple(-x for x in k): 1 / v})
            return inv ** (-n)
        out = P.const(1)
        for _ in range(n):
            out = out * self
        return out

    def to_json(self):
        terms = []
        for k in sorted(self.terms):
            v = self.terms[k]
            terms.append(
                {
                    "exps": list(k),
                    "coeff": [int(v.numerator), int(v.denominator)],
                }
            )
        return {"vars": VARS, "terms": terms}


ad, bd, cd = P.var("ad"), P.var("bd"), P.var("cd")
a_raw, b_raw, c_raw = P.var("a"), P.var("b"), P.var("c")
qd, sd, T = P.var("qd"), P.var("sd"), P.var("tlam")
adi, bdi, cdi = ad ** -1, bd ** -1, cd ** -1


def row(k, f, e, coeff, as_printed=False, suggested=None):
    out = {"basis": {"kexp": k, "fexp": f, "eexp": e}, "coeff": coeff.to_json()}
    if as_printed:
        out["as_printed"] = True
    if suggested is not None:
        out["suggested"] = suggested.to_json()
    return out


TABLES = {}

TABLES["ta"] = [
    row(-1, 0, 0, ad),
    row(1, 0, 0, adi),
    row(-1, 0, 1, -sd * qd * ad),
    row(0, 0, 1, sd * bd * cdi),
]

TABLES["tb"] = [
    row(0, 1, 0, sd * bdi),
    row(1, 1, 0, -sd * qd * adi * cd),
    row(-1, 0, 0, bdi),
    row(1, 0, 0, bd),
]

TABLES["tc"] = [
    row(-1, 1, 0, -sd * qd * ad * bdi),
    row(0, 1, 0, sd * cd),
    row(-2, 0, 0, -2 * qd * ad * bdi),
    row(-1, 0, 0, ad * bdi * T + cd + cdi),
    row(-2, 0, 1, sd * ad * bdi),
    row(-1, 0, 1, -sd * qd * cdi),
]

TABLES["taa"] = [
    row(-2, 0, 0, ad ** 2),
    row(0, 0, 0, P.const(2)),
    row(2, 0, 0, adi ** 2),
    row(-2, 0, 1, -2 * sd * qd * ad ** 2),
    row(-1, 0, 1, 2 * sd * ad * bd * cdi),
    row(0, 0, 1, -2 * sd * qd),
    row(1, 0, 1, 2 * sd * adi * bd * cdi),
    row(-2, 0, 2, sd ** 2 * ad ** 2),
    row(-1, 0, 2, -2 * sd ** 2 * qd * ad * bd * cdi),
    row(0, 0, 2, sd ** 2 * bd ** 2 * cdi ** 2),
]

TABLES["tbb"] = [
    row(0, 2, 0, sd ** 2 * bdi ** 2),
    row(1, 2, 0, -2 * sd ** 2 * qd * adi * bdi * cd),
    row(2, 2, 0, sd ** 2 * adi ** 2 * cd ** 2),
    row(-1, 1, 0, 2 * sd * bdi ** 2),
    row(0, 1, 0, -2 * sd * qd * adi * bdi * cd),
    row(1, 1, 0, 2 * sd),
    row(2, 1, 0, -2 * sd * qd * adi * bd * cd),
    row(-2, 0, 0, bdi ** 2),
    row(0, 0, 0, P.const(2)),
    row(2, 0, 0, bd ** 2),
]

TABLES["tcc"] = [
    row(-2, 2, 0, sd ** 2 * ad ** 2 * bdi ** 2),
    row(-1, 2, 0, -2 * sd ** 2 * qd * ad * bdi * cd),
    row(0, 2, 0, sd ** 2 * cd ** 2),
    row(-3, 1, 0, 4 * sd * ad ** 2 * bdi ** 2),
    row(-2, 1, 0, -2 * sd * qd * ad * bdi * (ad * bdi * T + 3 * cd + cdi)),
    row(-1, 1, 0, 2 * sd * cd * (ad * bdi * T + cd + cdi)),
    row(-4, 0, 0, 6 * ad ** 2 * bdi ** 2),
    row(-3, 0, 0, -6 * qd * ad * bdi * (ad * bdi * T + cd + cdi)),
    row(
        -2,
        0,
        0,
        ad ** 2 * bdi ** 2 * (T * T + 2)
        + (cd + cdi) * (4 * ad * bdi * T + cd + cdi)
        + 2,
    ),
    row(-1, 0, 0, -2 * qd * ad * bdi * (adi * bd * T + cd + cdi)),
    row(0, 0, 0, P.const(2)),
    row(-4, 0, 1, -4 * sd * qd * ad ** 2 * bdi ** 2),
    row(-3, 0, 1, 2 * sd * ad * bdi * (ad * bdi * T + cd + 3 * cdi)),
    row(-2, 0, 1, -2 * sd * qd * cdi * (ad * bdi * T + cd + cdi)),
    row(-4, 0, 2, sd ** 2 * ad ** 2 * bdi ** 2),
    row(-3, 0, 2, -2 * sd ** 2 * qd * ad * bdi * cdi),
    row(-2, 0, 2, sd ** 2 * cdi ** 2),
]

TABLES["tab"] = [
    row(-1, 1, 0, sd * ad * bdi),
    row(0, 1, 0, -sd * qd * cd),
    row(1, 1, 0, sd * adi * bdi),
    row(2, 1, 0, -sd * qd * adi ** 2 * cd),
    row(-2, 0, 0, 2 * ad * bdi),
    row(-1, 0, 0, -qd * (ad * bdi * T + cd + cdi)),
    row(0, 0, 0, (cd + cdi) * T + (ad + adi) * (bd + bdi)),
    row(1, 0, 0, -qd * (adi * bd * T + cd + cdi)),
    row(2, 0, 0, 2 * adi * bd),
    row(-2, 0, 1, -sd * qd * ad * bdi),
    row(-1, 0, 1, sd * cdi),
    row(0, 0, 1, -sd * qd * ad * bd),
    row(1, 0, 1, sd * bd ** 2 * cdi),
]

TABLES["tbc"] = [
    row(-1, 2, 0, -sd ** 2 * qd * ad * bdi ** 2),
    row(0, 2, 0, 2 * sd ** 2 * bdi * cd),
    row(1, 2, 0, -sd ** 2 * qd * adi * cd ** 2),
    row(-2, 1, 0, -3 * sd * qd * ad * bdi ** 2),
    row(-1, 1, 0, sd * bdi * (ad * bdi * T + 4 * cd + cdi)),
    row(0, 1, 0, -sd * qd * adi * (ad * bdi * cd * T + ad ** 2 + 1 + cd ** 2)),
    row(1, 1, 0, sd * bd * cd),
    row(-3, 0, 0, -3 * qd * ad * bdi ** 2),
    row(-2, 0, 0, 2 * bdi * (ad * bdi * T + cd + cdi)),
    row(-1, 0, 0, -qd * ad * (adi * bdi * (cd + cdi) * T + adi ** 2 + 2 + bdi ** 2)),
    row(0, 0, 0, (ad + adi) * T + (bd + bdi) * (cd + cdi)),
    row(1, 0, 0, -qd * adi),
    row(-3, 0, 1, sd * ad * bdi ** 2),
    row(-2, 0, 1, -sd * qd * bdi * cdi),
    row(-1, 0, 1, sd * ad),
    row(0, 0, 1, -sd * qd * bd * cdi),
]

TABLES["tca"] = [
    row(-2, 1, 0, -sd * qd * ad ** 2 * bdi),
    row(-1, 1, 0, sd * ad * cd),
    row(0, 1, 0, -sd * qd * bdi),
    row(1, 1, 0, sd * adi * cd),
    row(-3, 0, 0, -3 * qd * ad ** 2 * bdi),
    row(-2, 0, 0, 2 * ad * (ad * bdi * T + cd + cdi)),
    # Printed with "(c + c^{-dbar})" where matching rows elsewhere use
    # "(c^{dbar} + c^{-dbar})".
    row(
        -1,
        0,
        0,
        -qd * bdi * (ad * bd * (c_raw + cdi) * T + ad ** 2 + 2 + bd ** 2),
        as_printed=True,
        suggested=-qd * bdi * (ad * bd * (cd + cdi) * T + ad ** 2 + 2 + bd ** 2),
    ),
    # Printed with "(b + b^{-dbar})" where "(b^{dbar} + b^{-dbar})" is the
    # symmetric form.
    row(
        0,
        0,
        0,
        (b_raw + bdi) * T + (ad + adi) * (cd + cdi),
        as_printed=True,
        suggested=(bd + bdi) * T + (ad + adi) * (cd + cdi),
    ),
    row(1, 0, 0, -qd * bd),
    row(-3, 0, 1, 3 * sd * ad ** 2 * bdi),
    row(-2, 0, 1, -sd * qd * ad * (ad * bdi * T + cd + 4 * cdi)),
    row(-1, 0, 1, sd * bd * (ad * bdi * cdi * T + bdi ** 2 + 1 + cdi ** 2)),
    row(0, 0, 1, -sd * qd * adi * cdi),
    row(-3, 0, 2, -sd ** 2 * qd * ad ** 2 * bdi),
    row(-2, 0, 2, 2 * sd ** 2 * ad * cdi),
    row(-1, 0, 2, -sd ** 2 * qd * bd * cdi ** 2),
]

TABLES["tabc"] = [
    row(-2, 2, 0, -sd ** 2 * qd * ad ** 2 * bdi ** 2),
    row(-1, 2, 0, 2 * sd ** 2 * ad * bdi * cd),
    row(0, 2, 0, -sd ** 2 * qd * (bdi ** 2 + cd ** 2)),
    row(1, 2, 0, 2 * sd ** 2 * adi * bdi * cd),
    row(2, 2, 0, -sd ** 2 * qd * adi ** 2 * cd ** 2),
    row(-3, 1, 0, -4 * sd * qd * ad ** 2 * bdi ** 2),
    row(-2, 1, 0, 2 * sd * ad * bdi * (ad * bdi * T + 3 * cd + cdi)),
    row(
        -1,
        1,
        0,
        -sd
        * qd
        * (
            ad * bdi * (3 * cd + cdi) * T
            + (ad ** 2 + 3) * (bdi ** 2 + 1)
            + 2 * cd ** 2
        ),
    ),
    row(
        0,
        1,
        0,
        sd
        * (
            (bdi ** 2 + 2 + cd ** 2) * T
            + bdi * cd * (ad + adi) * (bd ** 2 + 2 + cdi ** 2)
            + 2 * adi * bdi * cd
        ),
    ),
    row(
        1,
        1,
        0,
        -sd * qd * (adi * cd * (bd + bdi) * T + (adi ** 2 + 1) * (cd ** 2 + 1) + 2),
    ),
    row(2, 1, 0, 2 * sd * adi * bd * cd),
    row(-4, 0, 0, -6 * qd * ad ** 2 * bdi ** 2),
    row(-3, 0, 0, 6 * ad * bdi * (ad * bdi * T + cd + cdi)),
    row(
        -2,
        0,
        0,
        -qd
        * (
            ad ** 2 * bdi ** 2 * T * T
            + 6 * ad * bdi * (cd + cdi) * T
            + (ad ** 2 + 3) * (bdi ** 2 + 3)
            + 3 * ad ** 2 * bdi ** 2
            + cd ** 2
            - 3
            + cdi ** 2
        ),
    ),
    row(
        -1,
        0,
        0,
        ad * bdi * (cd + cdi) * (T * T + (adi ** 2 + 2) * (bd ** 2 + 2) + 1)
        + ((ad ** 2 + 2) * (bdi ** 2 + 2) + cd ** 2 + 3 + cdi ** 2) * T,
    ),
    row(
        0,
        0,
        0,
        -qd
        * (
            T * T
            + (ad + adi) * (bd + bdi) * (cd + cdi) * T
            + ad ** 2
            + bd ** 2
            + cd ** 2
            + 8
            + adi ** 2
            + bdi ** 2
            + cdi ** 2
        ),
    ),
    row(
        1,
        0,
        0,
        (adi ** 2 + 2 + bd ** 2) * T
        + adi * bd * (ad ** 2 + 2 + bdi ** 2) * (cd + cdi),
    ),
    row(2, 0, 0, -qd * (adi ** 2 + bd ** 2)),
    row(-4, 0, 1, 4 * sd * ad ** 2 * bdi ** 2),
    row(-3, 0, 1, -2 * sd * qd * ad * bdi * (ad * bdi * T + cd + 3 * cdi)),
    row(
        -2,
        0,
        1,
        sd
        * (
            ad * bdi * (cd + 3 * cdi) * T
            + (ad ** 2 + 1) * (bdi ** 2 + 3)
            + 2 * cdi ** 2
        ),
    ),
    row(
        -1,
        0,
        1,
        -sd
        * qd
        * (
            (ad ** 2 + 2 + cdi ** 2) * T
            + ad * cdi * (bd + bdi) * (adi ** 2 + 2 + cd ** 2)
            + 2 * ad * bd * cdi
        ),
    ),
    row(0, 0, 1, sd * (bd * cdi * (ad + adi) * T + (bd ** 2 + 1) * (cdi ** 2 + 1) + 2)),
    row(1, 0, 1, -2 * sd * qd * adi * bd * cdi),
    row(-4, 0, 2, -sd ** 2 * qd * ad ** 2 * bdi ** 2),
    row(-3, 0, 2, 2 * sd ** 2 * ad * bdi * cdi),
    row(-2, 0, 2, -sd ** 2 * qd * (ad ** 2 + cdi ** 2)),
    row(-1, 0, 2, 2 * sd ** 2 * ad * bd * cdi),
    row(0, 0, 2, -sd ** 2 * qd * bd ** 2 * cdi ** 2),
]


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data", "appendix")
    os.makedirs(out_dir, exist_ok=True)
    for name, rows in TABLES.items():
        doc = {"product": name, "rows": rows}
        path = os.path.join(out_dir, f"{name}.json")
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
            fh.write("\n")
        print(f"wrote {path} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
