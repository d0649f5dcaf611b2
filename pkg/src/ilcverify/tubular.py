"""Tubular realizations (a, phi): an abelian, self-centralizing subalgebra
transverse to e and v and stable under the anti-involution.  Verifies the
four defining conditions exactly and computes the affine-symmetry dimension
dim N(a)/a."""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import ExactMatrix, FieldError
from .liealg import Subspace, centralizer, is_abelian, normalizer
from .realforms import AntiInvolution, verify_admissible, _coerce_space


@dataclass
class TubularRealization:
    phi: AntiInvolution
    a_vectors: list          # coordinate vectors over the model/matrix field

    @property
    def model(self):
        return self.phi.model


@dataclass
class TubularReport:
    ok: bool
    conditions: dict         # name -> True | False | 'skipped: ...'
    affine_dim: int | None = None


def _prepare(t: TubularRealization, assignment):
    ctx = t.phi._context(assignment)
    avecs = [[ctx.reduce(ctx.field.scalar(x)) for x in v] for v in t.a_vectors]
    return ctx, Subspace(ctx.alg, avecs)


def verify_tubular(t: TubularRealization, assignment: dict | None = None) -> TubularReport:
    """Conditions: (T.1) a abelian of dimension n, (T.2) centralizer(a) = a,
    (T.3) a ∩ e = 0 = a ∩ v, (T.4) phi(a) = a.  Admissibility of phi is a
    precondition and is re-checked."""
    adm = verify_admissible(t.phi, assignment)
    if not adm.ok:
        raise FieldError(f"anti-involution not admissible: {adm.violations}")
    ctx, A = _prepare(t, assignment)
    model = t.model
    # contact manifold dim 2n-1 = dim(s/k); a must be n-dimensional
    n = (ctx.alg.dim - model.k.dim + 1) // 2
    conditions = {}
    conditions["T1_abelian"] = (A.dim == len(t.a_vectors) == n) and is_abelian(A)
    conditions["T2_self_centralizing"] = centralizer(ctx.alg, A) == A
    es = _coerce_space(ctx, model.e)
    vs = _coerce_space(ctx, model.v)
    conditions["T3_transverse"] = (A.intersect(es).dim == 0
                                   and A.intersect(vs).dim == 0)
    img = Subspace(ctx.alg, [ctx.apply_phi(b) for b in A.basis])
    conditions["T4_phi_stable"] = img == A
    ok = all(v is True for v in conditions.values())
    return TubularReport(ok, conditions)


def verify_tubular_partial(algebra, a_vectors) -> TubularReport:
    """(T.1) and (T.2) for a bare algebra presentation without (k, e, v)."""
    A = Subspace(algebra, a_vectors)
    conditions = {
        "T1_abelian": A.dim == len(a_vectors) and is_abelian(A),
        "T2_self_centralizing": centralizer(algebra, A) == A,
        "T3_transverse": "skipped: presentation has no (e, v) data",
        "T4_phi_stable": "skipped: presentation has no anti-involution",
    }
    ok = conditions["T1_abelian"] is True and conditions["T2_self_centralizing"] is True
    return TubularReport(ok, conditions)


def affine_symmetry_dim(t: TubularRealization, assignment: dict | None = None) -> int:
    """dim N(a) - dim a, exactly."""
    rep = verify_tubular(t, assignment)
    if not rep.ok:
        raise FieldError(f"not a tubular realization: {rep.conditions}")
    ctx, A = _prepare(t, assignment)
    N = normalizer(ctx.alg, A)
    return N.dim - A.dim


def affine_symmetry_dim_partial(algebra, a_vectors) -> int:
    A = Subspace(algebra, a_vectors)
    return normalizer(algebra, A).dim - A.dim


@dataclass
class TableRecord:
    row: str
    antiinv: str
    assignment: dict
    status: str              # pass | fail | skipped
    detail: str = ""
    affine_dim: int | None = None
    expected_dim: object = None


def verify_tubular_table(entries, selection=None, max_samples: int = 3):
    """Runs every catalog tubular row (or the selected labels) at its stored
    sample assignments; rows on stub models or flagged unverifiable are
    reported as skipped."""
    records = []
    for label, entry in sorted(entries.items()):
        if selection is not None and label not in selection:
            continue
        for row in getattr(entry, "tubular_rows", []):
            rowid = f"{label}: {row.description}"
            if row.unverifiable:
                records.append(TableRecord(rowid, ",".join(row.antiinv_names), {},
                                           "skipped", row.unverifiable))
                continue
            if entry.stub or (entry.model is None and row.partial is None):
                records.append(TableRecord(rowid, ",".join(row.antiinv_names), {},
                                           "skipped", "fixture missing"))
                continue
            if row.partial is not None:
                alg = entry.algebra if entry.algebra is not None else entry.model.algebra
                avecs = row.a_vectors(entry)
                rep = verify_tubular_partial(alg, avecs)
                dim = affine_symmetry_dim_partial(alg, avecs) if rep.ok else None
                status = "pass" if rep.ok and dim == row.expected_affine_dim else "fail"
                records.append(TableRecord(rowid, "", {}, status,
                                           f"partial ({row.partial})", dim,
                                           row.expected_affine_dim))
                continue
            for name in row.antiinv_names:
                phi = entry.anti_involutions[name]
                for asg in row.samples[:max_samples]:
                    t = TubularRealization(phi, row.a_vectors(entry.model))
                    rep = verify_tubular(t, asg if asg else None)
                    if not rep.ok:
                        records.append(TableRecord(rowid, name, asg, "fail",
                                                   str(rep.conditions)))
                        continue
                    dim = affine_symmetry_dim(t, asg if asg else None)
                    status = "pass" if dim == row.expected_affine_dim else "fail"
                    records.append(TableRecord(rowid, name, asg, status, "",
                                               dim, row.expected_affine_dim))
    return records
