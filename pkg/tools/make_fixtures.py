"""Regenerates the shipped fixture files from the built-in catalog data.

Run from the repository root:  python tools/make_fixtures.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from ilcverify import catalog as cat
from ilcverify.ingest import ParsedAnalytic, ParsedModel, ParsedTubular, serialize

OUT = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def from_algebra(label, alg, params=(), quad=None, kev=None, antiinvs=None,
                 tubulars=(), analytic=()):
    field = alg.field
    parsed = ParsedModel(label, alg.dim, field, list(params),
                         (quad, field.quad_ext[1]) if quad else None)
    for key in sorted(alg._c):
        parsed.brackets[key] = list(alg._c[key])
    if kev:
        parsed.k_idx, parsed.e_idx, parsed.v_idx = kev
    for name, (when, phi) in sorted((antiinvs or {}).items()):
        cols = {j: phi.matrix.col(j) for j in range(alg.dim)}
        parsed.antiinvs[name] = (when, cols)
    for t in tubulars:
        t.vectors = [[field.scalar(x) for x in v] for v in t.vectors]
        parsed.tubulars.append(t)
    parsed.analytic.extend(analytic)
    return parsed


def main():
    OUT.mkdir(exist_ok=True)
    entries = cat.catalog()

    d63 = entries["D.6-3"]
    parsed = from_algebra(
        "D.6-3", d63.model.algebra,
        params=[("a", "conj=abar", None), ("abar", "conj=a", None)],
        kev=([5], [0, 1, 5], [2, 3, 5]),
        antiinvs={
            "phi1": ("real(a) and nonzero(a)", d63.anti_involutions["phi1"]),
            "phi2+": ("real(a) and nonzero(a)", d63.anti_involutions["phi2+"]),
            "phi2-": ("real(a) and nonzero(a)", d63.anti_involutions["phi2-"]),
            "phi3": ("imag(a) and nonzero(a)", d63.anti_involutions["phi3"]),
        },
        tubulars=[ParsedTubular(
            "quadric", cat._a_d63(d63.model), "phi1", 3)],
    )
    (OUT / "d63.model").write_text(serialize(parsed))

    iii = entries["III.6-1"]
    parsed = from_algebra("III.6-1", iii.model.algebra,
                          kev=([5], [0, 1, 5], [2, 3, 5]))
    (OUT / "iii61.model").write_text(serialize(parsed))

    n62s = entries["N.6-2-S"]
    parsed = from_algebra(
        "N.6-2-S", n62s.algebra,
        params=[("mu", "conj=mubar", None), ("mubar", "conj=mu", None)])
    (OUT / "n62_s_presentation.model").write_text(serialize(parsed))

    parsed = from_algebra("N.6-2-half", entries["N.6-2-half"].algebra)
    (OUT / "n62_half.model").write_text(serialize(parsed))

    n61 = entries["N.6-1-a2eq2"]
    parsed = from_algebra(
        "N.6-1-a2eq2", n61.algebra,
        tubulars=[ParsedTubular("translations", cat._a_n61_pres(n61), None, 1)])
    (OUT / "n61_a2eq2.model").write_text(serialize(parsed))

    # analytic fixture: the log-log tube with its seven symmetries
    an = ParsedAnalytic(
        "log-log-tube",
        "(w + wb)/2 - 2*log((z1 + z1b)/2) - log((z2 + z2b)/2)",
        graph_kind="u", graph_text="2*log(x) + log(y)",
        fields=[
            ("T1", ("i", "0", "0")),
            ("T2", ("0", "i", "0")),
            ("T3", ("0", "0", "i")),
            ("S1", ("z1", "0", "2")),
            ("S2", ("0", "z2", "1")),
            ("Q1", ("i*z1**2", "0", "4*i*z1")),
            ("Q2", ("0", "i*z2**2", "2*i*z2")),
        ],
        domains=[("x", 0.5, 1.8), ("y", 0.5, 1.8)])
    parsed = ParsedModel("log-log-tube-file", 1,
                         cat.field_plain(), [], None)
    parsed.analytic.append(an)
    parsed.brackets = {}
    parsed.dim = 1
    (OUT / "exd7_tube.surface").write_text(serialize(parsed))
    print("fixtures written to", OUT)


if __name__ == "__main__":
    main()
