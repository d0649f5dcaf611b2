"""Finite-dimensional Lie algebras given by structure constants over an exact
scalar field: brackets, Jacobi verification, structural subspaces, Killing
form, adjoint exponentials and base changes.

Structure constants are stored for i < j only; antisymmetry is implied.
Subspaces are canonicalized to reduced echelon form so span equality is
syntactic equality of the stored bases.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exactalg import (ExactMatrix, FieldDescriptor, FieldError, Scalar,
                       kernel_basis, linear_solve, rank, rref, specialize)


class DimensionMismatch(FieldError):
    pass


class NotASubalgebra(FieldError):
    pass


class SingularMatrix(FieldError):
    pass


class NotNilpotent(FieldError):
    pass


class LieAlgebra:
    def __init__(self, field: FieldDescriptor, dim: int, brackets: dict,
                 basis_names=None):
        """brackets maps (i, j) with i < j (0-based) to a coordinate vector of
        length dim (entries coercible to scalars); omitted pairs are zero."""
        self.field = field
        self.dim = dim
        self.basis_names = tuple(basis_names or (f"e{k+1}" for k in range(dim)))
        zero = field.zero()
        table = {}
        for (i, j), vec in brackets.items():
            if not (0 <= i < j < dim):
                raise DimensionMismatch(f"bad bracket indices ({i},{j})")
            v = [field.scalar(x) for x in vec]
            if len(v) != dim:
                raise DimensionMismatch("bracket vector has wrong length")
            if any(not x.is_zero() for x in v):
                table[(i, j)] = v
        self._c = table
        self._zero_vec = [zero] * dim

    # -- brackets ---------------------------------------------------------------

    def bracket_basis(self, i: int, j: int):
        if i == j:
            return list(self._zero_vec)
        if i < j:
            return list(self._c.get((i, j), self._zero_vec))
        v = self._c.get((j, i))
        if v is None:
            return list(self._zero_vec)
        return [-x for x in v]

    def bracket(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vectors must have length dim")
        x = [self.field.scalar(t) for t in x]
        y = [self.field.scalar(t) for t in y]
        out = list(self._zero_vec)
        for (i, j), v in self._c.items():
            coef = x[i] * y[j] - x[j] * y[i]
            if not coef.is_zero():
                for k in range(self.dim):
                    if not v[k].is_zero():
                        out[k] = out[k] + coef * v[k]
        return out

    def ad(self, x) -> ExactMatrix:
        """Matrix of ad(x): column j holds [x, e_j]."""
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return ExactMatrix(self.field, [[cols[j][i] for j in range(self.dim)]
                                        for i in range(self.dim)])

    def basis_vector(self, k: int):
        v = list(self._zero_vec)
        v[k] = self.field.one()
        return v

    # -- verification -----------------------------------------------------------

    def verify_jacobi(self):
        """Returns [] on pass, else a list of (i, j, k, residual vector)."""
        bad = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                eij = self.bracket_basis(i, j)
                for k in range(j + 1, self.dim):
                    t1 = self.bracket(eij, self.basis_vector(k))
                    t2 = self.bracket(self.bracket_basis(j, k), self.basis_vector(i))
                    t3 = self.bracket(self.bracket_basis(k, i), self.basis_vector(j))
                    res = [t1[m] + t2[m] + t3[m] for m in range(self.dim)]
                    if any(not x.is_zero() for x in res):
                        bad.append((i, j, k, res))
        return bad

    # -- invariants -------------------------------------------------------------

    def killing_form(self) -> ExactMatrix:
        ads = [self.ad(self.basis_vector(k)) for k in range(self.dim)]
        n = self.dim
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                if j < i:
                    row.append(out[j][i])
                    continue
                s = self.field.zero()
                for p in range(n):
                    for q in range(n):
                        s = s + ads[i][p, q] * ads[j][q, p]
                row.append(s)
            out.append(row)
        return ExactMatrix(self.field, out)

    # -- transformations ----------------------------------------------------------

    def change_basis(self, T: ExactMatrix) -> "LieAlgebra":
        """New algebra in the basis f_j = sum_i T[i,j] e_i."""
        if T.nrows != self.dim or T.ncols != self.dim:
            raise DimensionMismatch("T must be dim x dim")
        sol = linear_solve(T, ExactMatrix.identity(self.field, self.dim))
        if not sol.consistent or sol.rank < self.dim:
            raise SingularMatrix("basis-change matrix is singular")
        Tinv = sol.particular
        out = {}
        for i in range(self.dim):
            fi = T.col(i)
            for j in range(i + 1, self.dim):
                fj = T.col(j)
                br = self.bracket(fi, fj)
                out[(i, j)] = Tinv.apply_vector(br)
        return LieAlgebra(self.field, self.dim, out, self.basis_names)

    def specialize(self, assignment: dict) -> "LieAlgebra":
        """Exact evaluation of all structure constants at the assignment."""
        newfield = None
        newtable = {}
        for key, v in self._c.items():
            vv = [specialize(x, assignment) for x in v]
            newtable[key] = vv
            if vv and newfield is None:
                newfield = vv[0].field
        if newfield is None:
            from .exactalg import QQ
            newfield = QQ
        return LieAlgebra(newfield, self.dim, newtable, self.basis_names)

    def to_numeric(self, assignment: dict | None = None) -> np.ndarray:
        """Structure constants as a complex array c[i, j, k]."""
        a = assignment or {}
        c = np.zeros((self.dim, self.dim, self.dim), dtype=complex)
        for (i, j), v in self._c.items():
            for k, x in enumerate(v):
                val = specialize(x, a, float_mode=True)
                c[i, j, k] = val
                c[j, i, k] = -val
        return c

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field})"


class Subspace:
    """Subspace of the coordinate space of a Lie algebra, stored as the
    reduced-echelon basis (rows)."""

    def __init__(self, parent: LieAlgebra, vectors):
        self.parent = parent
        field = parent.field
        rows = [[field.scalar(x) for x in v] for v in vectors]
        if any(len(r) != parent.dim for r in rows):
            raise DimensionMismatch("vector length must equal dim")
        if rows:
            mat = ExactMatrix(field, rows)
            red, pivots = rref(mat)
            self.basis = [red.row(i) for i in range(len(pivots))]
            self.pivots = tuple(pivots)
        else:
            self.basis = []
            self.pivots = ()

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v) -> bool:
        field = self.parent.field
        v = [field.scalar(x) for x in v]
        for row, p in zip(self.basis, self.pivots):
            coef = v[p]
            if not coef.is_zero():
                v = [v[t] - coef * row[t] for t in range(len(v))]
        return all(x.is_zero() for x in v)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.dim != other.dim or self.pivots != other.pivots:
            return False
        return all(all(a == b for a, b in zip(r1, r2))
                   for r1, r2 in zip(self.basis, other.basis))

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.parent, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Exact intersection via the kernel of [B1^T | -B2^T]."""
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.parent, [])
        field = self.parent.field
        n = self.parent.dim
        cols = []
        for i in range(n):
            cols.append([b[i] for b in self.basis] + [-b[i] for b in other.basis])
        A = ExactMatrix(field, cols)  # n x (d1+d2)
        vecs = []
        for kv in kernel_basis(A):
            coeffs = kv[: self.dim]
            v = [field.zero()] * n
            for c, b in zip(coeffs, self.basis):
                for t in range(n):
                    v[t] = v[t] + c * b[t]
            vecs.append(v)
        return Subspace(self.parent, vecs)

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.parent.dim})"


def full_space(L: LieAlgebra) -> Subspace:
    return Subspace(L, [L.basis_vector(k) for k in range(L.dim)])


def is_subalgebra(S: Subspace) -> bool:
    L = S.parent
    for i in range(S.dim):
        for j in range(i + 1, S.dim):
            if not S.contains(L.bracket(S.basis[i], S.basis[j])):
                return False
    return True


def is_abelian(S: Subspace) -> bool:
    L = S.parent
    for i in range(S.dim):
        for j in range(i + 1, S.dim):
            br = L.bracket(S.basis[i], S.basis[j])
            if any(not x.is_zero() for x in br):
                return False
    return True


def derived_series(S: Subspace):
    """S >= [S,S] >= ... until stable; S must be a subalgebra."""
    if not is_subalgebra(S):
        raise NotASubalgebra("derived series requires a subalgebra")
    chain = [S]
    cur = S
    while True:
        L = cur.parent
        brs = [L.bracket(cur.basis[i], cur.basis[j])
               for i in range(cur.dim) for j in range(i + 1, cur.dim)]
        nxt = Subspace(L, brs)
        if nxt.dim == cur.dim:
            break
        chain.append(nxt)
        cur = nxt
        if nxt.dim == 0:
            break
    return chain


def _stacked_ad_kernel(L: LieAlgebra, vectors) -> list:
    """Kernel of x -> ([x, v] for v in vectors)."""
    n = L.dim
    rows = []
    for v in vectors:
        cols = [L.bracket(L.basis_vector(j), v) for j in range(n)]
        for i in range(n):
            rows.append([cols[j][i] for j in range(n)])
    if not rows:
        return [L.basis_vector(k) for k in range(n)]
    return kernel_basis(ExactMatrix(L.field, rows))


def center(L: LieAlgebra) -> Subspace:
    return Subspace(L, _stacked_ad_kernel(L, [L.basis_vector(k) for k in range(L.dim)]))


def centralizer(L: LieAlgebra, S: Subspace) -> Subspace:
    return Subspace(L, _stacked_ad_kernel(L, S.basis))


def normalizer(L: LieAlgebra, S: Subspace) -> Subspace:
    """{x : [x, S] subset S}, via kernels after quotient projection."""
    n = L.dim
    field = L.field
    comp_rows = []
    in_pivots = set(S.pivots)
    # quotient projection: coordinates of v mod S in the non-pivot slots
    def project(v):
        v = list(v)
        for row, p in zip(S.basis, S.pivots):
            c = v[p]
            if not c.is_zero():
                v = [v[t] - c * row[t] for t in range(n)]
        return [v[t] for t in range(n) if t not in in_pivots]

    for v in S.basis:
        cols = [project(L.bracket(L.basis_vector(j), v)) for j in range(n)]
        for i in range(len(cols[0])):
            comp_rows.append([cols[j][i] for j in range(n)])
    if not comp_rows:
        return full_space(L)
    return Subspace(L, kernel_basis(ExactMatrix(field, comp_rows)))


def killing_form(L: LieAlgebra) -> ExactMatrix:
    return L.killing_form()


def ad_nilpotency_index(L: LieAlgebra, x):
    """Smallest k <= dim with (ad x)^k = 0, or None when not nilpotent."""
    A = L.ad(x)
    P = A
    for k in range(1, L.dim + 1):
        if P.is_zero():
            return k
        P = P * A
    return None


def adjoint_exp(L: LieAlgebra, x, eps, order=None, exact=False,
                assignment=None):
    """exp(eps * ad x) as a dim x dim matrix.

    exact=True requires ad x nilpotent and returns an ExactMatrix (eps may be
    any scalar of the field); otherwise a complex numpy matrix computed by
    scaling-and-squaring on a Taylor series.
    """
    if exact:
        k = ad_nilpotency_index(L, x)
        if k is None:
            raise NotNilpotent("ad x is not nilpotent")
        A = L.ad(x)
        field = L.field
        eps = field.scalar(eps)
        out = ExactMatrix.identity(field, L.dim)
        term = ExactMatrix.identity(field, L.dim)
        fact = 1
        for m in range(1, k):
            term = term * A
            fact *= m
            out = out + term * (eps ** m * field.scalar(Fraction(1, fact)))
        return out
    a = assignment or {}
    A = L.ad(x).to_complex(a) * complex(eps)
    norm = np.linalg.norm(A, ord=np.inf)
    s = max(0, int(np.ceil(np.log2(norm)))) if norm > 1 else 0
    B = A / (2 ** s)
    out = np.eye(L.dim, dtype=complex)
    term = np.eye(L.dim, dtype=complex)
    kmax = order or 30
    for m in range(1, kmax + 1):
        term = term @ B / m
        out = out + term
        if np.max(np.abs(term)) < 1e-18 * max(1.0, np.max(np.abs(out))):
            break
    for _ in range(s):
        out = out @ out
    return out


def automorphism_residual(L: LieAlgebra, T: np.ndarray,
                          assignment: dict | None = None) -> float:
    """max_ij |T[e_i,e_j] - [T e_i, T e_j]| over basis pairs, relative scale."""
    c = L.to_numeric(assignment or {})
    n = L.dim
    worst = 0.0
    scale = max(1.0, float(np.max(np.abs(c))))
    for i in range(n):
        for j in range(i + 1, n):
            lhs = T @ c[i, j, :]
            xi, yj = T[:, i], T[:, j]
            rhs = np.einsum("i,j,ijk->k", xi, yj, c)
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst / scale


def is_automorphism(L: LieAlgebra, T: ExactMatrix) -> bool:
    """Exact bracket-preservation check for an exact matrix."""
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = T.apply_vector(L.bracket_basis(i, j))
            rhs = L.bracket(T.col(i), T.col(j))
            if any(not (a - b).is_zero() for a, b in zip(lhs, rhs)):
                return False
    return True
