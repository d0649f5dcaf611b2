"""Transitivity of the symmetry algebra near a point of the product space:
the center obstruction (exact) and the generic-exponential rank test
(numeric sampling, upgraded to exact when ad X is nilpotent)."""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field as dc_field

import numpy as np

from .exactalg import ExactMatrix, FieldDescriptor, FieldError, ParamSpec, rank
from .ilcmodels import ILCModel, validate_ilc
from .liealg import LieAlgebra, adjoint_exp, ad_nilpotency_index, center
from .realforms import coerce_algebra


class CenterMeetsIsotropy(FieldError):
    pass


class XInContactSpan(FieldError):
    pass


class LeviDegenerateModel(FieldError):
    pass


DEFAULT_EPS_GRID = (0.1, 0.3, 0.7, 1.0, 1.7)


def _require_nondegenerate(m: ILCModel):
    rep = validate_ilc(m)
    if not rep.ok:
        raise LeviDegenerateModel(f"{m.label}: {rep.violations}")


def center_obstruction(m: ILCModel, assignment: dict | None = None) -> dict:
    """Nontrivial center implies the symmetry algebra is nowhere transitive on
    the ambient product space.  The center must avoid the isotropy, else the
    model is not effective."""
    _require_nondegenerate(m)
    alg = m.algebra if not assignment else m.algebra.specialize(assignment)
    Z = center(alg)
    if Z.dim == 0:
        return {"verdict": "no-obstruction", "center_dim": 0}
    if assignment:
        from .realforms import AntiInvolution  # noqa: F401 (import parity)
        kvecs = [[alg.field.scalar(x.as_sympy()) for x in b] for b in m.k.basis]
    else:
        kvecs = m.k.basis
    from .liealg import Subspace
    K = Subspace(alg, kvecs)
    if Z.intersect(K).dim > 0:
        raise CenterMeetsIsotropy(f"{m.label}: center meets the isotropy")
    return {"verdict": "not-transitive", "center_dim": Z.dim,
            "center_basis": [[str(x) for x in b] for b in Z.basis]}


@dataclass
class TransitivityEvidence:
    verdict: str                 # 'transitive-evidence' | 'not-transitive-evidence'
    ranks: list                  # (eps, rank) samples
    exact: bool = False
    detail: str = ""


def _seeded_rng(seed: int, tag: str) -> np.random.Generator:
    return np.random.default_rng((seed, zlib.crc32(tag.encode())))


def generic_transitivity(m: ILCModel, assignment: dict | None = None,
                         X=None, eps_samples=None, seed: int = 0,
                         n_random: int = 8) -> TransitivityEvidence:
    """Samples eps and checks whether e + exp(eps ad X)(v) spans the algebra.

    Evidence semantics: a full-rank sample certifies transitivity up to float
    rank tolerance; uniformly deficient ranks over the grid are evidence of
    non-transitivity, not a proof.  With nilpotent ad X the rank is also
    computed exactly over the rational function field in eps."""
    _require_nondegenerate(m)
    alg = m.algebra
    a = assignment or {}
    n = alg.dim
    if X is None:
        X = alg.basis_vector(m.transversal_index())
    ev = m.e.sum(m.v)
    if ev.contains(X):
        raise XInContactSpan("X must not lie in e + v")
    c = alg.to_numeric(a)
    e_cols = [_vec_to_complex(b, a) for b in m.e.basis]
    v_cols = [_vec_to_complex(b, a) for b in m.v.basis]
    eps_list = list(eps_samples if eps_samples is not None else DEFAULT_EPS_GRID)
    rng = _seeded_rng(seed, f"transitivity:{m.label}")
    eps_list += [complex(x, y) for x, y in
                 zip(rng.uniform(-2, 2, n_random), rng.uniform(-2, 2, n_random))]
    ranks = []
    full = False
    for eps in eps_list:
        T = adjoint_exp(alg, X, eps, assignment=a)
        cols = e_cols + [T @ v for v in v_cols]
        M = np.array(cols).T
        s = np.linalg.svd(M, compute_uv=False)
        rk = int(np.sum(s > 1e-9 * s[0]))
        ranks.append((complex(eps), rk))
        if rk == n:
            full = True
    verdict = "transitive-evidence" if full else "not-transitive-evidence"
    out = TransitivityEvidence(verdict, ranks)
    k = ad_nilpotency_index(alg, X)
    if k is not None:
        out.exact = True
        out.detail = _exact_rank_detail(m, X, a)
    return out


def _vec_to_complex(vec, assignment):
    from .exactalg import specialize
    return np.array([specialize(x, assignment, float_mode=True) for x in vec])


def _exact_rank_detail(m: ILCModel, X, assignment) -> str:
    """Exact rank of e + exp(eps ad X)(v) over the field extended by eps."""
    alg = m.algebra if not assignment else m.algebra.specialize(assignment)
    base = alg.field
    params = tuple(base.params) + (ParamSpec("eps", real=True),)
    qe = None
    if base.quad_ext:
        rname, rho = base.quad_ext
        qe = (rname, rho.as_sympy())
    ext = FieldDescriptor(has_i=True, params=params, quad_ext=qe)
    algx = coerce_algebra(alg, ext)
    Xv = [ext.scalar(getattr(x, "as_sympy", lambda: x)()) if hasattr(x, "as_sympy")
          else ext.scalar(x) for x in X]
    T = adjoint_exp(algx, Xv, ext.param("eps"), exact=True)
    cols = []
    for b in m.e.basis:
        cols.append([ext.scalar(x.as_sympy()) for x in b])
    for b in m.v.basis:
        cols.append(T.apply_vector([ext.scalar(x.as_sympy()) for x in b]))
    M = ExactMatrix(ext, [[cols[j][i] for j in range(len(cols))]
                          for i in range(alg.dim)])
    rk = rank(M)
    return f"exact rank over field with generic eps: {rk} of {alg.dim}"
