"""Catalog of explicit hypersurfaces and their symmetry fields: tubes over
real affine surfaces (type N and type D families), the translation-invariant
quartic model, and the exponential/logarithmic families with their PDE
systems.  Everything here is data feeding the numeric checks in vecfield."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np
import sympy
from sympy import I as _I, Rational

from .vecfield import (HoloVectorField, Hypersurface, PDEFamily,
                       winkelmann_family, winkelmann_pde,
                       z1, z2, w, z1b, z2b, wb, a1, a2, b, w1s, w2s)

X_RE = (z1 + z1b) / 2
Y_RE = (z2 + z2b) / 2
U_RE = (w + wb) / 2


def VF(c1, c2, c3, name=""):
    return HoloVectorField(sympy.sympify(c1), sympy.sympify(c2),
                           sympy.sympify(c3), name=name)


TRANSLATIONS = (VF(_I, 0, 0, "i d/dz1"), VF(0, _I, 0, "i d/dz2"),
                VF(0, 0, _I, "i d/dw"))

WINK_N = (VF(0, z1, 0, "N1"),
          VF(0, 1, z1, "N2"),
          VF(0, _I, -_I * z1, "N3"),
          VF(0, 0, 1, "N4"))


def tube_sampler(g_numeric, xbox=(0.5, 1.8), ybox=(0.5, 1.8), imag=0.7):
    """Sampler for Re(w) = g(Re z1, Re z2); imaginary parts are free."""
    def sampler(rng, n):
        x = rng.uniform(*xbox, n)
        y = rng.uniform(*ybox, n)
        u = g_numeric(x, y)
        return {"z1": x + 1j * rng.uniform(-imag, imag, n),
                "z2": y + 1j * rng.uniform(-imag, imag, n),
                "w": u + 1j * rng.uniform(-imag, imag, n)}
    return sampler


def tube_surface(label, g_expr, g_numeric, params=None, xbox=(0.5, 1.8),
                 ybox=(0.5, 1.8)) -> Hypersurface:
    """Tube Re(w) = g(Re z1, Re z2) with defining function U - g(X, Y)."""
    x, y = sympy.symbols("x y")
    F = U_RE - sympy.sympify(g_expr).subs({x: X_RE, y: Y_RE})
    return Hypersurface(label, F, tube_sampler(g_numeric, xbox, ybox),
                        params=params or {})


def wink_sampler(F_numeric, z1box=((0.5, 1.8), (-0.3, 0.3))):
    def sampler(rng, n):
        v1 = (rng.uniform(*z1box[0], n) + 1j * rng.uniform(*z1box[1], n))
        v2 = rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)
        t = rng.uniform(-1, 1, n)
        im = F_numeric(v1) - (np.conjugate(v1) * v2).imag
        return {"z1": v1, "z2": v2, "w": t + 1j * im}
    return sampler


def wink_surface(label, F_expr, F_numeric, params=None, param_conj=None,
                 z1box=((0.5, 1.8), (-0.3, 0.3))) -> Hypersurface:
    """Im(w + conj(z1) z2) = F(z1, conj(z1))."""
    q = (w + z1b * z2 - wb - z1 * z2b) / (2 * _I)
    F = q - sympy.sympify(F_expr)
    return Hypersurface(label, F, wink_sampler(F_numeric, z1box),
                        params=params or {}, param_conj=param_conj or {})


@dataclass
class AnalyticRow:
    label: str
    surface: Hypersurface
    fields: list
    classification: str
    levi_expected: str | None = None
    closure_expected: dict = dc_field(default_factory=dict)
    provenance: str = ""


def _rows_type_n() -> list:
    rows = []
    alpha = sympy.Symbol("alpha")

    rows.append(AnalyticRow(
        "N.8 quartic tube", tube_surface(
            "u = xy + x^4", "x*y + x**4", lambda x, y: x * y + x ** 4),
        list(TRANSLATIONS) + [
            VF(0, 1, z1),
            VF(0, _I * z1, _I * z1 ** 2 / 2),
            VF(z1, 3 * z2, 4 * w),
            VF(1, -6 * z1 ** 2, z2 - 2 * z1 ** 3),
            VF(_I * z1, _I * (z2 - 2 * z1 ** 3),
               _I * (z1 * z2 - z1 ** 4 / 2)),
        ],
        "N.8",
        provenance="affine-surface table (type N), quartic row"))

    rows.append(AnalyticRow(
        "N.7-2 tube (split form)", tube_surface(
            "u = xy + x ln x", "x*y + x*log(x)",
            lambda x, y: x * y + x * np.log(x)),
        list(TRANSLATIONS) + [
            VF(0, 1, z1),
            VF(0, _I * z1, _I * z1 ** 2 / 2),
            VF(z1, -1, w),
            VF(_I * z1 ** 2 / 2, _I * (w - z1), _I * w * z1),
        ],
        "N.7-2 phi+",
        provenance="affine-surface table (type N), x log x row"))

    X = sympy.exp(2 * sympy.Symbol("x")) + 1
    rows.append(AnalyticRow(
        "N.7-2 tube (compact form)", tube_surface(
            "u = Xy + X ln X, X = exp(2x)+1",
            X * sympy.Symbol("y") + X * sympy.log(X),
            lambda x, y: (np.exp(2 * x) + 1) * y
                         + (np.exp(2 * x) + 1) * np.log(np.exp(2 * x) + 1),
            xbox=(-0.5, 0.5)),
        list(TRANSLATIONS) + [
            VF(sympy.cosh(z1),
               -(sympy.exp(-z1) * w / 2 + sympy.exp(z1)),
               w * sympy.sinh(z1)),
            VF(0, sympy.exp(-z1), 2 * sympy.cosh(z1)),
            VF(0, _I * sympy.exp(-z1), -2 * _I * sympy.sinh(z1)),
            VF(_I * sympy.sinh(z1),
               _I * (sympy.exp(-z1) * w / 2 - sympy.exp(z1)),
               _I * w * sympy.cosh(z1)),
        ],
        "N.7-2 phi-",
        provenance="affine-surface table (type N), compact-form row"))

    for aval in (5, -1):
        rows.append(AnalyticRow(
            f"N.6-1 power tube (alpha={aval})", tube_surface(
                f"u = xy + x^{aval}", f"x*y + x**({aval})",
                (lambda a: lambda x, y: x * y + x ** float(a))(aval)),
            list(TRANSLATIONS) + [
                VF(0, 1, z1),
                VF(0, _I * z1, _I * z1 ** 2 / 2),
                VF(z1, (aval - 1) * z2, aval * w),
            ],
            f"N.6-1, a^2 = (1-alpha)/(alpha-4) at alpha={aval}",
            provenance="affine-surface table (type N), power rows"))

    rows.append(AnalyticRow(
        "N.6-1 log tube", tube_surface(
            "u = xy + ln x", "x*y + log(x)", lambda x, y: x * y + np.log(x)),
        list(TRANSLATIONS) + [
            VF(0, 1, z1),
            VF(0, _I * z1, _I * z1 ** 2 / 2),
            VF(z1, -z2, 1),
        ],
        "N.6-1, a^2 = -1/4",
        provenance="affine-surface table (type N), log row"))

    rows.append(AnalyticRow(
        "N.6-1 x^2 log tube", tube_surface(
            "u = xy + x^2 ln x", "x*y + x**2*log(x)",
            lambda x, y: x * y + x ** 2 * np.log(x)),
        list(TRANSLATIONS) + [
            VF(0, 1, z1),
            VF(0, _I * z1, _I * z1 ** 2 / 2),
            VF(z1, z2 - z1, 2 * w),
        ],
        "N.6-1, a^2 = 1/2",
        provenance="affine-surface table (type N), x^2 log row"))

    rows.append(AnalyticRow(
        "N.6-1 x^3 log tube", tube_surface(
            "u = xy + x^3 ln x", "x*y + x**3*log(x)",
            lambda x, y: x * y + x ** 3 * np.log(x)),
        list(TRANSLATIONS) + [
            VF(0, 1, z1),
            VF(0, _I * z1, _I * z1 ** 2 / 2),
            VF(z1, 2 * z2 - Rational(3, 2) * z1 ** 2, 3 * w - z1 ** 3 / 2),
        ],
        "N.6-1, a^2 = 2",
        provenance="affine-surface table (type N), x^3 log row"))

    for aval in (3, -2):
        rows.append(AnalyticRow(
            f"N.6-2 exponential tube (alpha={aval})", tube_surface(
                f"u = y exp(x) + exp({aval} x)",
                f"y*exp(x) + exp({aval}*x)",
                (lambda a: lambda x, y: y * np.exp(x) + np.exp(a * x))(aval),
                xbox=(-0.6, 0.6)),
            list(TRANSLATIONS) + [
                VF(1, (aval - 1) * z2, aval * w),
                VF(0, sympy.exp(-z1 / 2), sympy.exp(z1 / 2)),
                VF(0, -_I * sympy.exp(-z1 / 2), _I * sympy.exp(z1 / 2)),
            ],
            f"N.6-2, b^2 = a^2 = -(2a-1)^2/((a+1)(a-2)) at alpha={aval}",
            provenance="affine-surface table (type N), exponential rows"))

    # rotational row: the screw motion and the two trigonometric symmetries,
    # in the orientation tangent to this defining function (derived; see notes)
    for bval in (1, 2):
        rows.append(AnalyticRow(
            f"N.6-2 rotational tube (beta={bval})", Hypersurface(
                f"u cos x + y sin x = exp({bval} x)",
                U_RE * sympy.cos(X_RE) + Y_RE * sympy.sin(X_RE)
                - sympy.exp(bval * X_RE),
                (lambda bb: (lambda rng, n: _rot_sampler(rng, n, bb)))(bval)),
            list(TRANSLATIONS) + [
                VF(1, bval * z2 + w, bval * w - z2),
                VF(0, -sympy.cos(z1), sympy.sin(z1)),
                VF(0, _I * sympy.sin(z1), _I * sympy.cos(z1)),
            ],
            f"N.6-2, b^2 = a^2 = -4 beta^2/(beta^2+9) at beta={bval}",
            provenance="affine-surface table (type N), rotational row "
                       "(symmetries re-derived for this orientation)"))

    rows.append(AnalyticRow(
        "N.6-2 tube a^2 = -4", tube_surface(
            "u = xy + exp(x)", "x*y + exp(x)",
            lambda x, y: x * y + np.exp(x), xbox=(-0.6, 0.6)),
        list(TRANSLATIONS) + [
            VF(0, 1, z1),
            VF(0, _I * z1, _I * z1 ** 2 / 2),
            VF(1, z2, w + z2),
        ],
        "N.6-2, b^2 = a^2 = -4",
        provenance="affine-surface table (type N), xy + exp(x) row"))

    rows.append(AnalyticRow(
        "N.6-2 tube a^2 = 1/2", tube_surface(
            "u = y exp(x) - x^2/2", "y*exp(x) - x**2/2",
            lambda x, y: y * np.exp(x) - x ** 2 / 2, xbox=(-0.6, 0.6)),
        list(TRANSLATIONS) + [
            VF(1, -z2, -z1),
            VF(0, sympy.exp(-z1 / 2), sympy.exp(z1 / 2)),
            VF(0, -_I * sympy.exp(-z1 / 2), _I * sympy.exp(z1 / 2)),
        ],
        "N.6-2, b^2 = a^2 = 1/2",
        provenance="affine-surface table (type N), y exp(x) - x^2/2 row"))
    return rows


def _rot_sampler(rng, n, bval):
    x = rng.uniform(-0.5, 0.5, n)
    y = rng.uniform(0.5, 1.5, n)
    u = (np.exp(bval * x) - y * np.sin(x)) / np.cos(x)
    return {"z1": x + 1j * rng.uniform(-0.5, 0.5, n),
            "z2": y + 1j * rng.uniform(-0.5, 0.5, n),
            "w": u + 1j * rng.uniform(-0.5, 0.5, n)}


def _rows_type_d() -> list:
    rows = []
    for aval, levi in ((2, "definite"), (-2, "indefinite")):
        rows.append(AnalyticRow(
            f"D.7 log tube (alpha={aval})", tube_surface(
                f"u = {aval} ln x + ln y", f"{aval}*log(x) + log(y)",
                (lambda a: lambda x, y: a * np.log(x) + np.log(y))(aval)),
            list(TRANSLATIONS) + [
                VF(z1, 0, aval),
                VF(0, z2, 1),
                VF(_I * z1 ** 2, 0, 2 * _I * aval * z1),
                VF(0, _I * z2 ** 2, 2 * _I * z2),
            ],
            f"D.7 via a = (3/4)(alpha-1)/(alpha+1), alpha={aval}",
            levi_expected=levi,
            closure_expected={"center_dim": 1, "derived_dim": 6},
            provenance="affine-surface table (type D), log-log row"))

    aval = 2
    rows.append(AnalyticRow(
        "D.7 mixed compact tube", tube_surface(
            "u = 2 ln(exp(2x)+1) + ln y",
            2 * sympy.log(sympy.exp(2 * sympy.Symbol("x")) + 1)
            + sympy.log(sympy.Symbol("y")),
            lambda x, y: 2 * np.log(np.exp(2 * x) + 1) + np.log(y),
            xbox=(-0.5, 0.5)),
        list(TRANSLATIONS) + [
            VF(0, z2, 1),
            VF(0, _I * z2 ** 2, 2 * _I * z2),
            VF(sympy.cosh(z1), 0, aval * sympy.exp(z1)),
            VF(_I * sympy.sinh(z1), 0, _I * aval * sympy.exp(z1)),
        ],
        "D.7, mixed real form",
        provenance="affine-surface table (type D), second row"))

    rows.append(AnalyticRow(
        "D.7 compact-compact tube", tube_surface(
            "u = 2 ln(exp(2x)+1) + ln(exp(2y)+1)",
            2 * sympy.log(sympy.exp(2 * sympy.Symbol("x")) + 1)
            + sympy.log(sympy.exp(2 * sympy.Symbol("y")) + 1),
            lambda x, y: (2 * np.log(np.exp(2 * x) + 1)
                          + np.log(np.exp(2 * y) + 1)),
            xbox=(-0.5, 0.5), ybox=(-0.5, 0.5)),
        list(TRANSLATIONS) + [
            VF(sympy.cosh(z1), 0, 2 * sympy.exp(z1)),
            VF(0, sympy.cosh(z2), sympy.exp(z2)),
            VF(_I * sympy.sinh(z1), 0, 2 * _I * sympy.exp(z1)),
            VF(0, _I * sympy.sinh(z2), _I * sympy.exp(z2)),
        ],
        "D.7, compact-compact real form",
        provenance="affine-surface table (type D), third row"))

    # spiral row: surface read with ln of the modulus (the reading under which
    # the printed Euler and rotation fields are tangent); the two remaining
    # symmetries are derived exactly and carry i on their quadratic parts
    aval = 2
    D = aval ** 2 + 1
    rows.append(AnalyticRow(
        "D.7 spiral tube", Hypersurface(
            "u = 2 arg(ix+y) + ln sqrt(x^2+y^2)",
            U_RE - (aval / (2 * _I)) * (sympy.log(Y_RE + _I * X_RE)
                                        - sympy.log(Y_RE - _I * X_RE))
            - (sympy.log(Y_RE + _I * X_RE) + sympy.log(Y_RE - _I * X_RE)) / 2,
            _spiral_sampler),
        list(TRANSLATIONS) + [
            VF(z1, z2, 1),
            VF(z2, -z1, aval),
            VF(_I * (z1 ** 2 + 2 * aval * z1 * z2 - z2 ** 2),
               _I * (-aval * z1 ** 2 + 2 * z1 * z2 + aval * z2 ** 2),
               2 * _I * D * z1),
            VF(_I * (-aval * z1 ** 2 + 2 * z1 * z2 + aval * z2 ** 2),
               -_I * (z1 ** 2 + 2 * aval * z1 * z2 - z2 ** 2),
               2 * _I * D * z2),
        ],
        "D.7 via a = (3/8) i alpha (split form of the symmetry pair)",
        provenance="affine-surface table (type D), spiral row "
                   "(quadratic symmetries re-derived)"))

    for eps in (1, -1):
        rows.append(AnalyticRow(
            f"D.7 boundary tube sl2 (eps={eps})", tube_surface(
                f"u = y^2 + ({eps}) ln x", f"y**2 + ({eps})*log(x)",
                (lambda e: lambda x, y: y ** 2 + e * np.log(x))(eps)),
            list(TRANSLATIONS) + [
                VF(0, 1, 2 * z2),
                VF(z1, 0, eps),
                VF(0, _I * z2, _I * z2 ** 2),
                VF(_I * z1 ** 2, 0, 2 * _I * eps * z1),
            ],
            f"D.7 at the boundary parameter, split form, eps={eps}",
            provenance="affine-surface table (type D), y^2 + eps log x row"))

    for eps in (1, -1):
        rows.append(AnalyticRow(
            f"D.7 boundary tube su2 (eps={eps})", tube_surface(
                f"u = y^2 + ({eps}) ln(exp(2x)+1)",
                sympy.Symbol("y") ** 2
                + eps * sympy.log(sympy.exp(2 * sympy.Symbol("x")) + 1),
                (lambda e: lambda x, y: y ** 2
                 + e * np.log(np.exp(2 * x) + 1))(eps),
                xbox=(-0.5, 0.5)),
            list(TRANSLATIONS) + [
                VF(0, 1, 2 * z2),
                VF(0, _I * z2, _I * z2 ** 2),
                VF(sympy.cosh(z1), 0, eps * sympy.exp(z1)),
                VF(_I * sympy.sinh(z1), 0, _I * eps * sympy.exp(z1)),
            ],
            f"D.7 at the boundary parameter, compact form, eps={eps}",
            provenance="affine-surface table (type D), y^2 + eps ln(e^2x+1) row"))

    for eps in (1, -1):
        rows.append(AnalyticRow(
            f"D.6-1 tube (eps={eps})", Hypersurface(
                f"xu = y^2 - ({eps}) x ln x",
                X_RE * U_RE - Y_RE ** 2 + eps * X_RE * sympy.log(X_RE),
                (lambda e: (lambda rng, n: _d61_sampler(rng, n, e)))(eps)),
            list(TRANSLATIONS) + [
                VF(0, z1, 2 * z2),
                VF(2 * z1, z2, -2 * eps),
                VF(_I * z1 ** 2, _I * z1 * z2,
                   _I * (-2 * eps * z1 + z2 ** 2)),
            ],
            f"D.6-1, eps={eps}",
            provenance="affine-surface table (type D), xu = y^2 - eps x ln x row"))

    for eps, aval in ((1, 3), (-1, Rational(1, 2))):
        rows.append(AnalyticRow(
            f"D.6-2 power tube (eps={eps}, alpha={aval})", tube_surface(
                f"u = y^2 + ({eps}) x^({aval})",
                sympy.Symbol("y") ** 2 + eps * sympy.Symbol("x") ** aval,
                (lambda e, a: lambda x, y: y ** 2 + e * x ** float(a))(eps, aval)),
            list(TRANSLATIONS) + [
                VF(0, 1, 2 * z2),
                VF(0, _I * z2, _I * z2 ** 2),
                VF(z1, sympy.Rational(aval) / 2 * z2, aval * w),
            ],
            f"D.6-2 via a = (2/3)(alpha+1)/alpha at alpha={aval}",
            provenance="affine-surface table (type D), y^2 + eps x^alpha row"))

    for eps in (1, -1):
        rows.append(AnalyticRow(
            f"D.6-2 boundary tube (eps={eps})", tube_surface(
                f"u = y^2 + ({eps}) x ln x",
                sympy.Symbol("y") ** 2
                + eps * sympy.Symbol("x") * sympy.log(sympy.Symbol("x")),
                (lambda e: lambda x, y: y ** 2 + e * x * np.log(x))(eps)),
            list(TRANSLATIONS) + [
                VF(0, 1, 2 * z2),
                VF(0, _I * z2, _I * z2 ** 2),
                VF(z1, z2 / 2, eps * z1 + w),
            ],
            f"D.6-2 at a = 4/3, eps={eps}",
            provenance="affine-surface table (type D), y^2 + eps x ln x row"))

    for e1, e2 in ((1, 1), (1, -1), (-1, -1)):
        levi = "definite" if e1 * e2 > 0 else "indefinite"
        rows.append(AnalyticRow(
            f"D.6-3 quadric tube (eps=({e1},{e2}))", Hypersurface(
                f"u^2 + ({e1}) x^2 + ({e2}) y^2 = 1",
                U_RE ** 2 + e1 * X_RE ** 2 + e2 * Y_RE ** 2 - 1,
                (lambda p, q: (lambda rng, n: _quadric_sampler(rng, n, p, q)))(e1, e2)),
            list(TRANSLATIONS) + [
                VF(e1 * z2, -e2 * z1, 0),
                VF(w, 0, -e1 * z1),
                VF(0, w, -e2 * z2),
            ],
            f"D.6-3 at a^2 = 9, eps = ({e1},{e2})",
            levi_expected=levi,
            provenance="affine-surface table (type D), quadric rows"))
    return rows


def _spiral_sampler(rng, n):
    x = rng.uniform(-0.4, 0.4, n)
    y = rng.uniform(0.7, 1.7, n)
    u = 2 * np.angle(1j * x + y) + 0.5 * np.log(x ** 2 + y ** 2)
    return {"z1": x + 1j * rng.uniform(-0.4, 0.4, n),
            "z2": y + 1j * rng.uniform(-0.4, 0.4, n),
            "w": u + 1j * rng.uniform(-0.7, 0.7, n)}


def _d61_sampler(rng, n, eps):
    x = rng.uniform(0.5, 1.8, n)
    y = rng.uniform(0.5, 1.8, n)
    u = (y ** 2 - eps * x * np.log(x)) / x
    return {"z1": x + 1j * rng.uniform(-0.7, 0.7, n),
            "z2": y + 1j * rng.uniform(-0.7, 0.7, n),
            "w": u + 1j * rng.uniform(-0.7, 0.7, n)}


def _quadric_sampler(rng, n, e1, e2):
    x = rng.uniform(-0.45, 0.45, n)
    y = rng.uniform(-0.45, 0.45, n)
    u = np.sqrt(1 - e1 * x ** 2 - e2 * y ** 2)
    return {"z1": x + 1j * rng.uniform(-0.4, 0.4, n),
            "z2": y + 1j * rng.uniform(-0.4, 0.4, n),
            "w": u + 1j * rng.uniform(-0.4, 0.4, n)}


def _rows_wink() -> list:
    rows = []
    for aval, tag in ((1 + 1j, "alpha=1+i"), (3 + 0j, "alpha=3")):
        ab = np.conjugate(aval)
        s = complex(aval + ab)
        d = complex(aval - ab)
        rows.append(AnalyticRow(
            f"translation-invariant power model ({tag})", wink_surface(
                f"Im(w + conj(z1) z2) = z1^alpha conj(z1)^conj(alpha), {tag}",
                z1 ** sympy.nsimplify(aval, rational=False)
                * z1b ** sympy.nsimplify(ab, rational=False),
                (lambda a: lambda v: np.abs(v) ** (2 * a.real)
                 * np.exp(-2 * a.imag * np.angle(v)))(complex(aval))),
            list(WINK_N) + [
                VF(z1, (s - 1) * z2, s * w),
                VF(_I * z1, _I * (d + 1) * z2, _I * d * w),
            ],
            f"N.6-2, a^2 = -(2 alpha - 1)^2/((alpha+1)(alpha-2)), {tag}",
            provenance="translation-invariant models table, power row"))

    rows.append(AnalyticRow(
        "translation-invariant exponential model", wink_surface(
            "Im(w + conj(z1) z2) = exp(z1) exp(conj(z1))",
            sympy.exp(z1) * sympy.exp(z1b),
            lambda v: np.exp(2 * v.real), z1box=((-0.6, 0.6), (-0.6, 0.6))),
        list(WINK_N) + [
            VF(_I, 0, _I * z2),
            VF(1, 2 * z2, 2 * w - z2),
        ],
        "N.6-2, b^2 = a^2 = -4",
        provenance="translation-invariant models table, exponential row"))

    rows.append(AnalyticRow(
        "translation-invariant logarithmic model", wink_surface(
            "Im(w + conj(z1) z2) = ln(z1) ln(conj(z1))",
            sympy.log(z1) * sympy.log(z1b),
            lambda v: np.abs(np.log(v)) ** 2),
        list(WINK_N) + [
            VF(z1, -z2, 2 * _I * sympy.log(z1)),
            VF(_I * z1, _I * z2, 2 * sympy.log(z1)),
        ],
        "N.6-2, b^2 = a^2 = 1/2",
        provenance="translation-invariant models table, logarithmic row"))
    return rows


_ROWS = None


def analytic_rows() -> list:
    global _ROWS
    if _ROWS is None:
        _ROWS = _rows_type_n() + _rows_type_d() + _rows_wink()
    return _ROWS


def get_row(label: str) -> AnalyticRow:
    for r in analytic_rows():
        if r.label == label:
            return r
    raise KeyError(f"unknown hypersurface row {label!r}; known: "
                   f"{[r.label for r in analytic_rows()]}")


# -- PDE families -----------------------------------------------------------------


def _pde_families() -> list:
    fams = []
    fams.append(winkelmann_family((a1 * z1) ** 2, f11=4 * _I * w2s ** 2,
                                  label="quartic model PDE"))

    alpha = 2
    fams.append(PDEFamily(
        "log-log tube PDE (alpha=2)",
        2 * alpha * sympy.log((z1 + a1) / 2) + 2 * sympy.log((z2 + a2) / 2) - b,
        -w1s ** 2 / (2 * alpha), sympy.Integer(0), -w2s ** 2 / 2))

    alpha = 2
    x_half = (z1 + a1) / 2
    y_half = (z2 + a2) / 2
    g = (alpha * sympy.log(sympy.exp(2 * x_half) + 1) + sympy.log(y_half + 1)
         - alpha * x_half - alpha * sympy.log(2) - y_half)
    fams.append(PDEFamily(
        "compact-form tube PDE (alpha=2)",
        2 * g - b,
        (alpha ** 2 - w1s ** 2) / (2 * alpha), sympy.Integer(0),
        -(w2s + 1) ** 2 / 2,
        sample_box={"z1": ((-0.4, 0.4), (-0.2, 0.2)),
                    "a1": ((-0.4, 0.4), (-0.2, 0.2)),
                    "z2": ((0.2, 1.2), (-0.2, 0.2)),
                    "a2": ((0.2, 1.2), (-0.2, 0.2))}))

    alpha = 3
    g = y_half * sympy.exp(x_half) + sympy.exp(alpha * x_half)
    fams.append(PDEFamily(
        "exponential tube PDE (alpha=3)",
        2 * g - b,
        (alpha * (alpha - 1) * w2s ** alpha + w1s) / 2, w2s / 2,
        sympy.Integer(0),
        sample_box={"z1": ((-0.5, 0.5), (-0.2, 0.2)),
                    "a1": ((-0.5, 0.5), (-0.2, 0.2))}))

    g = x_half * y_half + sympy.exp(x_half)
    fams.append(PDEFamily(
        "xy + exp(x) tube PDE",
        2 * g - b,
        sympy.exp(w2s) / 2, Rational(1, 2), sympy.Integer(0),
        sample_box={"z1": ((-0.5, 0.5), (-0.2, 0.2)),
                    "a1": ((-0.5, 0.5), (-0.2, 0.2))}))

    g = y_half * sympy.exp(x_half) - x_half ** 2 / 2
    fams.append(PDEFamily(
        "y exp(x) - x^2/2 tube PDE",
        2 * g - b,
        (w1s + sympy.log(w2s) - 1) / 2, w2s / 2, sympy.Integer(0),
        sample_box={"z1": ((-0.5, 0.5), (-0.2, 0.2)),
                    "a1": ((-0.5, 0.5), (-0.2, 0.2))}))

    alpha = 1 + _I
    abar = 1 - _I
    fams.append(PDEFamily(
        "complex-power model PDE (alpha=1+i)",
        b + a1 * z2 + z1 * a2 + 2 * _I * z1 ** alpha * a1 ** abar,
        2 * _I * alpha * (alpha - 1) * z1 ** (alpha - 2) * w2s ** abar,
        sympy.Integer(0), sympy.Integer(0)))
    return fams


_FAMS = None


def pde_families() -> list:
    global _FAMS
    if _FAMS is None:
        _FAMS = _pde_families()
    return _FAMS


def get_family(label: str) -> PDEFamily:
    for f in pde_families():
        if f.label == label:
            return f
    raise KeyError(f"unknown PDE family {label!r}; known: "
                   f"{[f.label for f in pde_families()]}")
