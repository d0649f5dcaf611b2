"""Holomorphic vector fields on C^3 and real-analytic hypersurfaces:
symbolic differentiation and Lie brackets, seeded numeric tangency checks,
closure of symmetry spans, orbit/isotropy dimensions, pointwise Levi type,
and verification of second-order PDE systems against explicit solution
families.

Expressions are sympy trees over the holomorphic coordinates z1, z2, w, their
formal conjugates z1b, z2b, wb, and parameters.  Allowed nodes: complex
constants, the variables, +, *, powers with constant exponent, exp, log, sin,
cos, sinh, cosh (principal branches; sampling boxes stay away from the cuts).
Samplers produce batches of on-surface points as arrays."""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field as dc_field

import numpy as np
import sympy
from sympy import I as _I

z1, z2, w = sympy.symbols("z1 z2 w")
z1b, z2b, wb = sympy.symbols("z1b z2b wb")
a1, a2, b = sympy.symbols("a1 a2 b")
w1s, w2s = sympy.symbols("w1 w2")

HOLO_VARS = (z1, z2, w)
BAR_VARS = (z1b, z2b, wb)
ALL_VARS = HOLO_VARS + BAR_VARS
_BAR_SWAP = {z1: z1b, z1b: z1, z2: z2b, z2b: z2, w: wb, wb: w}

_ALLOWED_FUNCS = (sympy.exp, sympy.log, sympy.sin, sympy.cos, sympy.sinh,
                  sympy.cosh)


class ExprError(ValueError):
    pass


class SamplingFailure(ExprError):
    pass


class RankDeficientSampling(ExprError):
    pass


class BranchCutHit(ExprError):
    pass


class DegenerateContact(ExprError):
    pass


def check_expr(e) -> sympy.Expr:
    """Validate that e uses only the supported node set."""
    e = sympy.sympify(e)
    for node in sympy.preorder_traversal(e):
        if node.is_Atom:
            continue
        if isinstance(node, (sympy.Add, sympy.Mul)):
            continue
        if isinstance(node, sympy.Pow):
            if node.exp.free_symbols:
                raise ExprError(f"non-constant exponent in {node}")
            continue
        if isinstance(node, _ALLOWED_FUNCS):
            continue
        raise ExprError(f"unsupported node {type(node).__name__} in {e}")
    return e


def bar_expr(e, param_conj: dict | None = None) -> sympy.Expr:
    """Formal conjugate: swaps variables with their barred copies, conjugates
    constants (I -> -I) and maps parameters through param_conj."""
    sub = dict(_BAR_SWAP)
    if param_conj:
        for k, v in param_conj.items():
            sub[sympy.Symbol(k) if isinstance(k, str) else k] = sympy.sympify(v)
    out = sympy.sympify(e).subs(sub, simultaneous=True)
    return out.subs(_I, -_I)


def differentiate(e, var) -> sympy.Expr:
    """Exact symbolic derivative; barred variables are independent slots."""
    return sympy.diff(sympy.sympify(e), var)


def _lamb(args, expr):
    return sympy.lambdify(args, expr, modules="numpy")


def _rng(seed, tag):
    return np.random.default_rng((seed, zlib.crc32(tag.encode())))


@dataclass
class HoloVectorField:
    """Coefficients of d/dz1, d/dz2, d/dw; must be holomorphic (no barred
    variables)."""
    a1: sympy.Expr
    a2: sympy.Expr
    a3: sympy.Expr
    name: str = ""

    def __post_init__(self):
        self.a1 = check_expr(self.a1)
        self.a2 = check_expr(self.a2)
        self.a3 = check_expr(self.a3)
        for c in (self.a1, self.a2, self.a3):
            if set(c.free_symbols) & set(BAR_VARS):
                raise ExprError("holomorphic coefficients cannot reference "
                                "conjugate variables")

    def coeffs(self):
        return (self.a1, self.a2, self.a3)

    def apply(self, f) -> sympy.Expr:
        return (self.a1 * sympy.diff(f, z1) + self.a2 * sympy.diff(f, z2)
                + self.a3 * sympy.diff(f, w))

    def apply_bar(self, f, param_conj=None) -> sympy.Expr:
        b1 = bar_expr(self.a1, param_conj)
        b2 = bar_expr(self.a2, param_conj)
        b3 = bar_expr(self.a3, param_conj)
        return (b1 * sympy.diff(f, z1b) + b2 * sympy.diff(f, z2b)
                + b3 * sympy.diff(f, wb))

    def __repr__(self):
        nm = f"{self.name}: " if self.name else ""
        return f"VF({nm}{self.a1} dz1 + {self.a2} dz2 + {self.a3} dw)"


def lie_bracket_vf(X: HoloVectorField, Y: HoloVectorField) -> HoloVectorField:
    out = []
    for c_y, c_x in zip(Y.coeffs(), X.coeffs()):
        out.append(sympy.expand(X.apply(c_y) - Y.apply(c_x)))
    return HoloVectorField(*out)


def vf_equal(X: HoloVectorField, Y: HoloVectorField) -> bool:
    return all(sympy.simplify(a - c) == 0 for a, c in zip(X.coeffs(), Y.coeffs()))


@dataclass
class Hypersurface:
    """Real-analytic defining function F(z, zbar) with a batch sampler.

    ``sampler(rng, n)`` returns {"z1": array, "z2": array, "w": array} of
    on-surface points.  ``params`` holds numeric parameter values and
    ``param_conj`` names the conjugate partner of each complex parameter."""
    label: str
    F: sympy.Expr
    sampler: object
    params: dict = dc_field(default_factory=dict)
    param_conj: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.F = check_expr(self.F)

    def _conj_value_map(self):
        out = {}
        for k, v in self.param_conj.items():
            out[k] = self.params.get(v, sympy.Symbol(v))
        return out

    def subs_params(self, e):
        return sympy.sympify(e).subs({sympy.Symbol(k): v
                                      for k, v in self.params.items()})

    def batch(self, rng, n):
        pts = self.sampler(rng, n)
        vz1 = np.asarray(pts["z1"], dtype=complex)
        vz2 = np.asarray(pts["z2"], dtype=complex)
        vw = np.asarray(pts["w"], dtype=complex)
        return (vz1, vz2, vw, vz1.conjugate(), vz2.conjugate(), vw.conjugate())

    def realness_residual(self, seed=0, n=25) -> float:
        Fp = self.subs_params(self.F)
        Fb = self.subs_params(bar_expr(self.F, self._conj_value_map()))
        args = self.batch(_rng(seed, f"real:{self.label}"), n)
        vals = np.broadcast_to(np.asarray(_lamb(ALL_VARS, Fp)(*args),
                                          dtype=complex), (n,))
        valsb = np.broadcast_to(np.asarray(_lamb(ALL_VARS, Fb)(*args),
                                           dtype=complex), (n,))
        scale = np.maximum(1.0, np.abs(vals))
        return float(np.max(np.abs(vals - valsb) / scale))


@dataclass
class TangencyReport:
    max_residual: float
    tolerance: float
    passed: bool
    n_samples: int


def tangency_check(X: HoloVectorField, M: Hypersurface, n_samples: int = 100,
                   tol: float = 1e-9, seed: int = 0) -> TangencyReport:
    """Evaluates 2 Re(X(F)) at seeded on-surface samples; the pass bound
    scales with the gradient and coefficient sizes."""
    rng = _rng(seed, f"tangency:{M.label}:{X.name or sympy.sstr(X.a1)}")
    F = M.subs_params(M.F)
    TF = M.subs_params(X.apply(M.F) + X.apply_bar(M.F, M._conj_value_map()))
    args = M.batch(rng, n_samples)

    def ev(expr):
        v = np.asarray(_lamb(ALL_VARS, expr)(*args), dtype=complex)
        return np.broadcast_to(v, (n_samples,))

    fvals = ev(F)
    scaleF = np.maximum(1.0, np.abs(fvals))
    if np.max(np.abs(fvals) / scaleF) > 1e-12:
        raise SamplingFailure(f"{M.label}: sampler misses the hypersurface "
                              f"(max |F| = {np.max(np.abs(fvals)):.3e})")
    res = np.abs(ev(TF))
    gsq = np.zeros(n_samples)
    for v in ALL_VARS:
        gsq = gsq + np.abs(ev(sympy.diff(F, v))) ** 2
    xsq = np.zeros(n_samples)
    for c in X.coeffs():
        xsq = xsq + np.abs(ev(M.subs_params(c))) ** 2
    bound = tol * (1 + np.sqrt(gsq) * np.sqrt(xsq))
    return TangencyReport(float(np.max(res)), tol, bool(np.all(res <= bound)),
                          n_samples)


# -- span closure and numeric algebra invariants --------------------------------


@dataclass
class ClosureReport:
    constants: np.ndarray        # real structure constants c[i, j, k]
    max_residual: float
    passed: bool

    def center_dim(self, tol=1e-8) -> int:
        n = self.constants.shape[0]
        M = np.concatenate([self.constants[:, j, :] for j in range(n)], axis=1)
        s = np.linalg.svd(M, compute_uv=False)
        return int(np.sum(s <= tol * max(1.0, s[0])))

    def derived_dim(self, tol=1e-8) -> int:
        n = self.constants.shape[0]
        vecs = [self.constants[i, j, :] for i in range(n) for j in range(i + 1, n)]
        if not vecs:
            return 0
        s = np.linalg.svd(np.array(vecs), compute_uv=False)
        return int(np.sum(s > tol * max(1.0, s[0])))


def _value_matrix(fields, pts):
    """Real (6k) x n matrix: columns are the fields, rows the real/imaginary
    coordinate values over k points."""
    cols = []
    for X in fields:
        vals = []
        for c in X.coeffs():
            v = np.asarray(_lamb(HOLO_VARS, c)(pts["z1"], pts["z2"], pts["w"]),
                           dtype=complex)
            v = np.broadcast_to(v, pts["z1"].shape)
            vals.extend([v.real, v.imag])
        cols.append(np.concatenate([np.asarray(x, dtype=float).ravel()
                                    for x in vals]))
    return np.array(cols).T


def span_closure(fields, n_samples: int = 12, seed: int = 0,
                 tol: float = 1e-8, box=None) -> ClosureReport:
    """Fits real constants expressing each pairwise bracket inside the span at
    sample points and validates at held-out points."""
    if len(fields) < 2:
        raise ExprError("need at least two fields")
    n = len(fields)
    rng = _rng(seed, "span-closure")
    box = box or ((0.4, 1.6), (-0.6, 0.6))

    def sample(k):
        def arr():
            return (rng.uniform(box[0][0], box[0][1], k)
                    + 1j * rng.uniform(box[1][0], box[1][1], k))
        return {"z1": arr(), "z2": arr(), "w": arr()}

    pts_fit = sample(n_samples)
    pts_out = sample(max(4, n_samples // 2))
    A_fit = _value_matrix(fields, pts_fit)
    A_out = _value_matrix(fields, pts_out)
    s = np.linalg.svd(A_fit, compute_uv=False)
    if int(np.sum(s > 1e-10 * max(1.0, s[0]))) < n:
        raise RankDeficientSampling("sampled field values do not separate the "
                                    "fields; enlarge the sample box")
    consts = np.zeros((n, n, n))
    worst = 0.0
    passed = True
    for i in range(n):
        for j in range(i + 1, n):
            Z = lie_bracket_vf(fields[i], fields[j])
            b_fit = _value_matrix([Z], pts_fit)[:, 0]
            sol, *_ = np.linalg.lstsq(A_fit, b_fit, rcond=None)
            b_out = _value_matrix([Z], pts_out)[:, 0]
            res = float(np.max(np.abs(A_out @ sol - b_out)))
            scale = max(1.0, float(np.max(np.abs(b_out))))
            worst = max(worst, res / scale)
            if res > tol * scale:
                passed = False
            consts[i, j, :] = sol
            consts[j, i, :] = -sol
    return ClosureReport(consts, worst, passed)


def isotropy_and_orbit_dim(fields, point: dict, tol: float = 1e-9):
    """Real span of the fields at one point: (orbit dim, isotropy dim)."""
    cols = []
    for X in fields:
        v = [complex(sympy.sympify(c).subs({z1: point["z1"], z2: point["z2"],
                                            w: point["w"]}))
             for c in X.coeffs()]
        cols.append([v[0].real, v[0].imag, v[1].real, v[1].imag,
                     v[2].real, v[2].imag])
    M = np.array(cols).T
    s = np.linalg.svd(M, compute_uv=False)
    rk = int(np.sum(s > tol * max(1.0, s[0])))
    return rk, len(fields) - rk


# -- pointwise Levi type -----------------------------------------------------------


def levi_signature_numeric(M: Hypersurface, point: dict, tol: float = 1e-9) -> str:
    """Complex Hessian of F restricted to the holomorphic tangent plane at an
    on-surface point; classified by the determinant sign of the 2x2 Hermitian
    restriction (definite | indefinite | degenerate)."""
    F = M.subs_params(M.F)
    vals = {z1: complex(point["z1"]), z2: complex(point["z2"]),
            w: complex(point["w"])}
    vals[z1b] = vals[z1].conjugate()
    vals[z2b] = vals[z2].conjugate()
    vals[wb] = vals[w].conjugate()
    if abs(complex(F.subs(vals))) > 1e-8:
        raise SamplingFailure("point is not on the hypersurface")
    hol = (z1, z2, w)
    bar = (z1b, z2b, wb)
    grad = np.array([complex(sympy.diff(F, v).subs(vals)) for v in hol])
    if np.linalg.norm(grad) < 1e-12:
        raise DegenerateContact("vanishing holomorphic gradient")
    H = np.array([[complex(sympy.diff(F, zi, bj).subs(vals)) for bj in bar]
                  for zi in hol])
    _, _, vh = np.linalg.svd(grad.reshape(1, 3))
    basis = vh.conj().T[:, 1:]          # kernel of the gradient functional
    L = basis.conj().T @ H @ basis
    scale = max(1.0, float(np.max(np.abs(L))))
    if float(np.max(np.abs(L - L.conj().T))) > 1e-8 * scale:
        raise DegenerateContact("restricted Hessian is not Hermitian")
    det = float(np.linalg.det((L + L.conj().T) / 2).real)
    if abs(det) <= tol * scale ** 2:
        return "degenerate"
    return "definite" if det > 0 else "indefinite"


# -- PDE systems --------------------------------------------------------------------


@dataclass
class PDEFamily:
    """Solution family w(z1, z2; a1, a2, b) and candidate right-hand sides
    f11, f12, f22 in (z1, z2, w, w1, w2)."""
    label: str
    w_expr: sympy.Expr
    f11: sympy.Expr
    f12: sympy.Expr
    f22: sympy.Expr
    sample_box: dict = dc_field(default_factory=dict)
    params: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.w_expr = check_expr(self.w_expr)
        for f in (self.f11, self.f12, self.f22):
            check_expr(f)


@dataclass
class PDEReport:
    max_residual: float
    passed: bool
    n_samples: int


_FAMILY_ARGS = (z1, z2, a1, a2, b)
_PDE_ARGS = (z1, z2, w, w1s, w2s)


def verify_pde_family(fam: PDEFamily, n_samples: int = 40, tol: float = 1e-9,
                      seed: int = 0) -> PDEReport:
    """Differentiates the family symbolically and evaluates the residuals
    w_jk - f_jk(z, w, grad w) at seeded parameter/point samples."""
    subs_p = {sympy.Symbol(k): v for k, v in fam.params.items()}
    wexpr = fam.w_expr.subs(subs_p)
    first = [sympy.diff(wexpr, z1), sympy.diff(wexpr, z2)]
    second = [sympy.diff(wexpr, z1, 2), sympy.diff(wexpr, z1, z2),
              sympy.diff(wexpr, z2, 2)]
    fs = [fam.f11.subs(subs_p), fam.f12.subs(subs_p), fam.f22.subs(subs_p)]
    rng = _rng(seed, f"pde:{fam.label}")
    box = {"z1": ((0.6, 1.8), (-0.25, 0.25)), "z2": ((0.6, 1.8), (-0.25, 0.25)),
           "a1": ((0.6, 1.8), (-0.25, 0.25)), "a2": ((0.6, 1.8), (-0.25, 0.25)),
           "b": ((-1.0, 1.0), (-1.0, 1.0))}
    box.update(fam.sample_box)
    samples = []
    for name in ("z1", "z2", "a1", "a2", "b"):
        (re_lo, re_hi), (im_lo, im_hi) = box[name]
        samples.append(rng.uniform(re_lo, re_hi, n_samples)
                       + 1j * rng.uniform(im_lo, im_hi, n_samples))
    wv = np.asarray(_lamb(_FAMILY_ARGS, wexpr)(*samples), dtype=complex)
    w1v = np.asarray(_lamb(_FAMILY_ARGS, first[0])(*samples), dtype=complex)
    w2v = np.asarray(_lamb(_FAMILY_ARGS, first[1])(*samples), dtype=complex)
    if not (np.all(np.isfinite(wv)) and np.all(np.isfinite(w1v))
            and np.all(np.isfinite(w2v))):
        raise BranchCutHit(f"{fam.label}: non-finite values in the sample box")
    scale = np.maximum.reduce([np.ones(n_samples), np.abs(wv), np.abs(w1v),
                               np.abs(w2v)])
    worst = 0.0
    passed = True
    pde_args = (samples[0], samples[1], wv, w1v, w2v)
    for d2, f in zip(second, fs):
        lhs = np.asarray(_lamb(_FAMILY_ARGS, d2)(*samples), dtype=complex)
        lhs = np.broadcast_to(lhs, wv.shape)
        rhs = np.broadcast_to(np.asarray(_lamb(_PDE_ARGS, f)(*pde_args),
                                         dtype=complex), wv.shape)
        res = np.abs(lhs - rhs)
        bound = np.maximum(scale, np.abs(lhs))
        worst = max(worst, float(np.max(res / bound)))
        if np.any(res > tol * bound):
            passed = False
    return PDEReport(worst, passed, n_samples)


def winkelmann_pde(F) -> dict:
    """PDE right-hand sides of the translation-invariant family
    w = b + a1 z2 + z1 a2 + 2i F(z1, a1): after the documented sign relabel of
    z2 (so that w2 = a1) the system is w11 = 2i F_z1z1(z1, w2),
    w12 = w22 = 0."""
    F = check_expr(F)
    f11 = 2 * _I * sympy.diff(F, z1, 2).subs(a1, w2s)
    return {"w11": sympy.expand(f11), "w12": sympy.Integer(0),
            "w22": sympy.Integer(0),
            "note": "z2 relabelled with a sign so that w2 = a1"}


def winkelmann_family(F, f11=None, label="winkelmann", sample_box=None) -> PDEFamily:
    """The solution family matching winkelmann_pde's relabelling."""
    F = check_expr(F)
    wexpr = b + a1 * z2 + z1 * a2 + 2 * _I * F
    if f11 is None:
        f11 = winkelmann_pde(F)["w11"]
    return PDEFamily(label, wexpr, f11, sympy.Integer(0), sympy.Integer(0),
                     sample_box=sample_box or {})
