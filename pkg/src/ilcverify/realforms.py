"""Anti-involutions of contact models: admissibility, fixed-point real forms,
real-form identification, Levi forms, the derived-series obstruction and
equivalence checks under admissible automorphisms."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .exactalg import (ExactMatrix, FieldDescriptor, FieldError,
                       MissingAssignment, NegativeDiscriminantOnRealPath,
                       Scalar, conjugate_assignment, rank, signature,
                       specialize)
from .liealg import (LieAlgebra, Subspace, center, derived_series,
                     is_automorphism, killing_form)
from .ilcmodels import ILCModel, ParamConstraint


class ConstraintViolation(FieldError):
    pass


class NonHermitianResidual(FieldError):
    pass


class UnrecognizedRealForm(FieldError):
    def __init__(self, invariants):
        super().__init__(f"no named real form for invariants {invariants}")
        self.invariants = invariants


def coerce_algebra(L: LieAlgebra, field: FieldDescriptor) -> LieAlgebra:
    """Reinterpret structure constants in a (compatible or larger) field.

    Parameter symbols are matched by name, so extending the field by further
    parameters or a quadratic generator is transparent."""
    table = {}
    for (i, j), v in L._c.items():
        table[(i, j)] = [Scalar(field, x.num, x.den) for x in v]
    return LieAlgebra(field, L.dim, table, L.basis_names)


class AntiInvolution:
    """Anti-linear involution phi(sum c_j e_j) = sum conj(c_j) * A e_j.

    ``matrix`` lives over ``matrix_field`` which may extend the model's field
    (e.g. by a square root required by the representative).  ``constraint``
    carries the parameter conditions of the representative, the formal
    substitutions making a symbolic check sound, and in-range samples."""

    def __init__(self, model: ILCModel, name: str, matrix: ExactMatrix,
                 constraint: ParamConstraint | None = None,
                 levi_expected: str | None = None, provenance: str = ""):
        self.model = model
        self.name = name
        self.matrix = matrix
        self.matrix_field = matrix.field
        self.constraint = constraint
        self.levi_expected = levi_expected
        self.provenance = provenance

    def _context(self, assignment: dict | None) -> "_CheckContext":
        """Algebra and matrix ready for exact checking: either specialized at
        an assignment, or symbolically with the constraint substitutions.

        When a quadratic generator cannot be resolved to a rational value
        (e.g. sqrt(2)), the assignment is substituted in-field instead, which
        is equally exact.  The returned context's ``conj`` re-applies the
        constraint substitutions after structural conjugation, so identities
        like conj(a) = a (a real) or conj(gam) = 3 - gam hold."""
        if assignment is not None:
            if self.constraint is not None and not self.constraint.holds(assignment):
                raise ConstraintViolation(
                    f"{self.model.label}/{self.name}: assignment violates "
                    f"'{self.constraint.text}'")
            full = conjugate_assignment(self.matrix_field, assignment)
            base = coerce_algebra(self.model.algebra, self.matrix_field)
            try:
                A = specialize(self.matrix, full)
                alg = base.specialize(full)
                field = A.field
                alg = coerce_algebra(alg, field)
                reduce = lambda s: specialize(
                    self.matrix_field.scalar(s.as_sympy()), full)
                return _CheckContext(alg, A, field, reduce, lambda s: s.conj())
            except (MissingAssignment, NegativeDiscriminantOnRealPath):
                field = self.matrix_field
                submap = {k: field.scalar(v) for k, v in full.items()
                          if k != (field.quad_ext[0] if field.quad_ext else None)}

                def reduce(s: Scalar) -> Scalar:
                    return field.scalar(s.as_sympy()).subs(submap)

                table = {k: [reduce(x) for x in v] for k, v in base._c.items()}
                alg = LieAlgebra(field, base.dim, table, base.basis_names)
                A = ExactMatrix(field, [[reduce(x) for x in row]
                                        for row in self.matrix.rows()])
                return _CheckContext(alg, A, field, reduce,
                                     lambda s: reduce(s.conj()))
        if self.constraint is not None and not self.constraint.symbolic_ok:
            raise ConstraintViolation(
                f"{self.model.label}/{self.name}: symbolic verification is not "
                "sound here; supply an assignment")
        field = self.matrix_field
        submap = dict(self.constraint.subs) if self.constraint else {}

        def reduce(s: Scalar) -> Scalar:
            s = field.scalar(s.as_sympy())
            return s.subs(submap) if submap else s

        alg = coerce_algebra(self.model.algebra, field)
        table = {k: [reduce(x) for x in v] for k, v in alg._c.items()}
        alg = LieAlgebra(field, alg.dim, table, alg.basis_names)
        A = ExactMatrix(field, [[reduce(x) for x in row] for row in self.matrix.rows()])
        return _CheckContext(alg, A, field, reduce, lambda s: reduce(s.conj()))

    def __repr__(self):
        return f"AntiInvolution({self.model.label}/{self.name})"


@dataclass
class _CheckContext:
    alg: LieAlgebra
    A: ExactMatrix
    field: FieldDescriptor
    reduce: object   # model-field scalar -> context scalar
    conj: object     # constraint-aware conjugation in the context field

    def apply_phi(self, vec):
        """phi of a coordinate vector in context coordinates."""
        return self.A.apply_vector([self.conj(self.field.scalar(x)) for x in vec])

    def conj_matrix(self, M: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(self.field, [[self.conj(x) for x in row]
                                        for row in M.rows()])


@dataclass
class AdmissibilityReport:
    ok: bool
    violations: list


def _subspace_image(ctx: _CheckContext, space: Subspace) -> Subspace:
    return Subspace(ctx.alg, [ctx.apply_phi(b) for b in space.basis])


def _coerce_space(ctx: _CheckContext, space: Subspace) -> Subspace:
    return Subspace(ctx.alg, [[ctx.reduce(x) for x in b] for b in space.basis])


def verify_admissible(phi: AntiInvolution, assignment: dict | None = None) -> AdmissibilityReport:
    """Exact check of: phi is an involution (A conj(A) = I), an anti-morphism
    (all sigma_jk vanish), preserves k and swaps e with v."""
    ctx = phi._context(assignment)
    alg, A, field = ctx.alg, ctx.A, ctx.field
    n = alg.dim
    violations = []
    AC = A * ctx.conj_matrix(A)
    if not (AC == ExactMatrix.identity(field, n)):
        violations.append("phi∘phi != id")
    for j in range(n):
        for k in range(j + 1, n):
            lhs = alg.bracket(A.col(j), A.col(k))
            rhs = ctx.apply_phi(alg.bracket_basis(j, k))
            if any(not (x - y).is_zero() for x, y in zip(lhs, rhs)):
                violations.append(f"sigma_{j+1}{k+1} != 0")
    ks = _coerce_space(ctx, phi.model.k)
    es = _coerce_space(ctx, phi.model.e)
    vs = _coerce_space(ctx, phi.model.v)
    if not (_subspace_image(ctx, ks) == ks):
        violations.append("phi(k) != k")
    if not (_subspace_image(ctx, es) == vs):
        violations.append("phi(e) != v")
    if not (_subspace_image(ctx, vs) == es):
        violations.append("phi(v) != e")
    return AdmissibilityReport(not violations, violations)


# -- fixed real forms -----------------------------------------------------------


@dataclass
class RealForm:
    algebra: LieAlgebra        # over the conjugation-fixed subfield
    embedding: list            # real-basis vectors as complex coordinate vectors
    model_label: str
    antiinv_name: str

    def killing_signature(self):
        return signature(killing_form(self.algebra))


def _split_re_im(x: Scalar):
    half = Fraction(1, 2)
    xr = (x + x.conj()) * x.field.scalar(half)
    xi = (x - x.conj()) * x.field.scalar(half)
    if x.field.has_i:
        xi = xi * x.field.i().inv()
    elif not xi.is_zero():  # pragma: no cover
        raise FieldError("imaginary part in a field without i")
    return xr, xi


def _to_real_field(x: Scalar, rfield: FieldDescriptor) -> Scalar:
    return Scalar(rfield, x.num, x.den)


def fixed_real_form(phi: AntiInvolution, assignment: dict | None = None) -> RealForm:
    """Real basis of {x : phi(x) = x} with its exact structure constants.

    Requires an assignment whenever the model has non-real parameters."""
    rep = verify_admissible(phi, assignment)
    if not rep.ok:
        raise ConstraintViolation(f"not admissible: {rep.violations}")
    ctx = phi._context(assignment)
    alg, A, field = ctx.alg, ctx.A, ctx.field
    n = alg.dim
    rfield = _real_subfield_for_fixed(field)
    # split A = P + i Q over the real subfield
    P = [[None] * n for _ in range(n)]
    Q = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            xr, xi = _split_re_im(A[i, j])
            P[i][j] = _to_real_field(xr, rfield)
            Q[i][j] = _to_real_field(xi, rfield)
    one = rfield.one()
    zero = rfield.zero()
    rows = []
    # (P - I) u + Q v = 0 ; Q u - (P + I) v = 0
    for i in range(n):
        rows.append([P[i][j] - (one if i == j else zero) for j in range(n)] +
                    [Q[i][j] for j in range(n)])
    for i in range(n):
        rows.append([Q[i][j] for j in range(n)] +
                    [-(P[i][j] + (one if i == j else zero)) for j in range(n)])
    from .exactalg import kernel_basis
    ker = kernel_basis(ExactMatrix(rfield, rows))
    if len(ker) != n:
        raise FieldError(f"fixed set has real dimension {len(ker)}, expected {n}")
    # embed back: x = u + i v over the complex field
    if field.has_i:
        iunit = field.i()
    else:  # pragma: no cover
        raise FieldError("fixed real form requires a field containing i")
    embedding = []
    for kv in ker:
        u = [Scalar(field, x.num, x.den) for x in kv[:n]]
        v = [Scalar(field, x.num, x.den) for x in kv[n:]]
        embedding.append([u[t] + iunit * v[t] for t in range(n)])
    # structure constants: [x_r, x_s] = sum real coefficients * x_t
    cols = []
    for x in embedding:
        col = []
        for t in range(n):
            xr, xi = _split_re_im(x[t])
            col.append(_to_real_field(xr, rfield))
        for t in range(n):
            xr, xi = _split_re_im(x[t])
            col.append(_to_real_field(xi, rfield))
        cols.append(col)
    M = ExactMatrix(rfield, [[cols[j][i] for j in range(n)] for i in range(2 * n)])
    from .exactalg import linear_solve
    table = {}
    for r in range(n):
        for s in range(r + 1, n):
            br = alg.bracket(embedding[r], embedding[s])
            rhs = []
            for t in range(n):
                xr, _ = _split_re_im(br[t])
                rhs.append([_to_real_field(xr, rfield)])
            for t in range(n):
                _, xi = _split_re_im(br[t])
                rhs.append([_to_real_field(xi, rfield)])
            sol = linear_solve(M, ExactMatrix(rfield, rhs))
            if not sol.consistent:
                raise FieldError("fixed set is not closed under the bracket")
            table[(r, s)] = sol.particular.col(0)
    real_alg = LieAlgebra(rfield, n, table)
    return RealForm(real_alg, embedding, phi.model.label, phi.name)


def _real_subfield_for_fixed(field: FieldDescriptor) -> FieldDescriptor:
    qe = None
    if field.quad_ext:
        rname, rho = field.quad_ext
        if not rho.is_rational():
            raise FieldError("specialize parameters under the square root first")
        qe = (rname, Fraction(int(rho.num), int(rho.den)))
    for p in field.params:
        if not p.real:
            raise FieldError("fixed_real_form needs a parameter-free or "
                             "real-parameter field; pass an assignment")
    return FieldDescriptor(has_i=False, params=field.params, quad_ext=qe)


_SEMISIMPLE_NAMES = {
    (6, (0, 6)): "so(4)",
    (6, (3, 3)): "so(3,1)",
    (6, (4, 2)): "so(2,2)",
    (6, (2, 4)): "so*(4)",
    (3, (0, 3)): "su(2)",
    (3, (2, 1)): "sl(2,R)",
}


def identify_real_form(R: RealForm) -> str:
    """Name from (dim, Killing signature); descriptive composite otherwise."""
    p, q, z = R.killing_signature()
    n = R.algebra.dim
    if z == 0:
        name = _SEMISIMPLE_NAMES.get((n, (p, q)))
        if name is None:
            raise UnrecognizedRealForm({"dim": n, "killing": (p, q, z)})
        return name
    from .liealg import full_space
    chain = derived_series(full_space(R.algebra))
    solvable = chain[-1].dim == 0
    cdim = center(R.algebra).dim
    return (f"non-semisimple(dim={n}, killing=({p},{q},{z}), "
            f"center_dim={cdim}, solvable={solvable})")


# -- Levi form --------------------------------------------------------------------


@dataclass
class LeviReport:
    matrix: ExactMatrix
    classification: str  # definite | indefinite | degenerate


def levi_form(phi: AntiInvolution, assignment: dict | None = None) -> LeviReport:
    """Levi matrix L_ij = transversal coefficient of [e_{2+i}, phi(e_{2+j})]
    for the v-side basis (e3, e4); classified by the sign of det after the
    Hermitian check (the transversal is only defined up to real scale, so only
    definite/indefinite/degenerate is meaningful)."""
    model = phi.model
    if model.e.dim - model.k.dim != 2 or model.v.dim - model.k.dim != 2:
        raise FieldError("Levi form requires dim e/k = dim v/k = 2")
    rep = verify_admissible(phi, assignment)
    if not rep.ok:
        raise ConstraintViolation(f"not admissible: {rep.violations}")
    ctx = phi._context(assignment)
    alg, A, field = ctx.alg, ctx.A, ctx.field
    ev = _coerce_space(ctx, model.e).sum(_coerce_space(ctx, model.v))
    t = model.transversal_index()
    from .ilcmodels import _transversal_coefficient
    vidx = (2, 3)
    rows = []
    for i in vidx:
        row = []
        for j in vidx:
            br = alg.bracket(alg.basis_vector(i), ctx.apply_phi(alg.basis_vector(j)))
            row.append(_transversal_coefficient(alg, ev, t, br))
        rows.append(row)
    L = ExactMatrix(field, rows)
    skew = L - ctx.conj_matrix(L).transpose()
    if not skew.is_zero():
        raise NonHermitianResidual(f"Levi matrix is not Hermitian: {L!r}")
    det = L[0, 0] * L[1, 1] - L[0, 1] * L[1, 0]
    if not (det - ctx.conj(det)).is_zero():
        raise NonHermitianResidual(f"det of Levi matrix is not real: {det!r}")
    s = det.real_sign()
    cls = "definite" if s > 0 else ("indefinite" if s < 0 else "degenerate")
    return LeviReport(L, cls)


# -- derived-series obstruction ----------------------------------------------------


def derived_series_obstruction(m: ILCModel):
    """Compares the derived-series dimension sequences of e and v; when they
    differ, no admissible anti-involution exists."""
    de = [S.dim for S in derived_series(m.e)]
    dv = [S.dim for S in derived_series(m.v)]
    found = de != dv
    return {"obstruction": found, "dims_e": de, "dims_v": dv}


# -- equivalence of anti-involutions ------------------------------------------------


def conjugate_and_check(phi: AntiInvolution, psi: AntiInvolution,
                        T: ExactMatrix, assignment: dict | None = None) -> dict:
    """Checks whether psi = T ∘ phi ∘ T^{-1} for an admissible automorphism T.

    Returns a dict with the individual verdicts; 'equivalent' is their
    conjunction."""
    ctx = phi._context(assignment)
    alg, A, field = ctx.alg, ctx.A, ctx.field
    B = psi._context(assignment).A
    out = {}
    TT = ExactMatrix(field, [[ctx.reduce(field.scalar(x)) for x in row]
                             for row in T.rows()])
    out["automorphism"] = is_automorphism(alg, TT)
    ks = _coerce_space(ctx, phi.model.k)
    es = _coerce_space(ctx, phi.model.e)
    vs = _coerce_space(ctx, phi.model.v)
    Tk = Subspace(alg, [TT.apply_vector(b) for b in ks.basis])
    Te = Subspace(alg, [TT.apply_vector(b) for b in es.basis])
    Tv = Subspace(alg, [TT.apply_vector(b) for b in vs.basis])
    out["preserves_k"] = Tk == ks
    out["admissible"] = out["preserves_k"] and (
        (Te == es and Tv == vs) or (Te == vs and Tv == es))
    # anti-linear conjugation: matrix of T phi T^{-1} is T A conj(T)^{-1}
    conjT = ctx.conj_matrix(TT)
    M = TT * A * conjT.inverse()
    out["matches"] = M == ExactMatrix(field, [[ctx.reduce(field.scalar(x)) for x in row]
                                              for row in B.rows()])
    out["equivalent"] = out["automorphism"] and out["admissible"] and out["matches"]
    return out
