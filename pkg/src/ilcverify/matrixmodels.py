"""Explicit realizations of the 6-dim type D family with so(4,C) symmetry:
the orbit bases built from linear vector fields Z_jk on C^4 and the
quaternionic sl(2,R) + su(2) basis.  Both are verified against the abstract
structure equations, exactly over suitable field towers and numerically at
sampled parameters.

Linear vector fields are carried as 4x4 matrices; the vector-field bracket of
X_A = sum A[m,n] z_n d/dz_m is X_[B,A], i.e. the reversed matrix commutator.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import sympy

from .catalog import algebra_d63, algebra_sl2_su2
from .exactalg import ExactMatrix, FieldDescriptor, ParamSpec, Scalar
from .liealg import LieAlgebra


# -- Z-basis of so(4) as matrices -------------------------------------------------


def z_matrix(field, j, k, eps):
    """Matrix of Z_jk = eps_j z_j d/dz_k - eps_k z_k d/dz_j (1-based j < k)."""
    M = [[field.zero() for _ in range(4)] for _ in range(4)]
    M[k - 1][j - 1] = field.scalar(eps[j - 1])
    M[j - 1][k - 1] = field.scalar(-eps[k - 1])
    return ExactMatrix(field, M)


def vf_bracket(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Bracket of the corresponding linear vector fields: [X_A, X_B] = X_{BA-AB}."""
    return B * A - A * B


def so4_z_algebra(eps=(1, 1, 1, 1), field=None):
    """Abstract algebra of the six Z_jk under the vector-field bracket."""
    from .exactalg import QQ_I, linear_solve
    field = field or QQ_I
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    mats = [z_matrix(field, j, k, eps) for j, k in pairs]
    cols = [[m[r, c] for m in mats] for r in range(4) for c in range(4)]
    M = ExactMatrix(field, cols)  # 16 x 6, columns are the basis matrices
    table = {}
    for i in range(6):
        for j in range(i + 1, 6):
            br = vf_bracket(mats[i], mats[j])
            rhs = ExactMatrix(field, [[br[r, c]] for r in range(4) for c in range(4)])
            sol = linear_solve(M, rhs)
            if not sol.consistent:
                raise ValueError("bracket left the span of the Z basis")
            table[(i, j)] = sol.particular.col(0)
    names = [f"Z{j}{k}" for j, k in pairs]
    return LieAlgebra(field, 6, table, names), mats, pairs


def _check_structure_match(bracket_fn, basis, expected: LieAlgebra,
                           equal_fn) -> bool:
    """brackets of `basis` must equal the expected structure constants."""
    n = expected.dim
    for i in range(n):
        for j in range(i + 1, n):
            want = expected.bracket_basis(i, j)
            target = None
            for k in range(n):
                c = want[k]
                term = _scale(basis[k], c)
                target = term if target is None else _add(target, term)
            got = bracket_fn(basis[i], basis[j])
            if not equal_fn(got, target):
                return False
    return True


def _scale(x, c):
    if isinstance(x, ExactMatrix):
        return x * c
    return [c * t for t in x]


def _add(x, y):
    if isinstance(x, ExactMatrix):
        return x + y
    return [a + b for a, b in zip(x, y)]


# -- orbit bases for the positive-definite plane case ------------------------------


def d63_orbit_basis_exact(case="O(4)", y_value=None):
    """The exact e1..e6 (as 4x4 matrices) for the orbit through
    [(1, iy, 0, 0)] and the stated real-form case; returns (field, basis, a)
    with a = 3(1-y^2)/(1+y^2).

    With y_value None the field is Q(i)(y)(rho), rho^2 = ±3/(4(1+y^2));
    with a rational y_value the field is Q(i)(rho) at the evaluated rho^2."""
    sign = -1 if case == "O(2,2)" else 1
    if y_value is None:
        field = FieldDescriptor(
            has_i=True, params=(ParamSpec("y", real=True),),
            quad_ext=("rho", f"{sign}*3/(4*(1+y*y))"))
        y = field.param("y")
    else:
        yq = Fraction(y_value)
        rho2 = Fraction(sign * 3, 1) / (4 * (1 + yq * yq))
        field = FieldDescriptor(has_i=True, quad_ext=("rho", rho2))
        y = field.scalar(yq)
    eps = (1, 1, 1, 1) if case == "O(4)" else (
        (1, 1, 1, -1) if case == "O(3,1)" else (1, 1, -1, -1))
    i = field.i()
    rho = field.r()
    Z = {(j, k): z_matrix(field, j, k, eps) for j, k in
         [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]}
    v1 = _add(_scale(Z[(1, 3)], y), _scale(Z[(2, 3)], i))
    v2 = _add(_scale(Z[(1, 4)], y), _scale(Z[(2, 4)], i))
    v1b = _add(_scale(Z[(1, 3)], y), _scale(Z[(2, 3)], -i))
    v2b = _add(_scale(Z[(1, 4)], y), _scale(Z[(2, 4)], -i))
    one = field.one()
    if case == "O(4)":
        e1 = _scale(_add(v1b, _scale(v2b, -i)), rho)
        e2 = _scale(_add(v1b, _scale(v2b, i)), rho)
        e3 = _scale(_add(v1, _scale(v2, i)), rho)
        e4 = _scale(_add(v1, _scale(v2, -i)), rho)
        e6 = _scale(Z[(3, 4)], i)
    elif case == "O(3,1)":
        e1 = _scale(_add(v1b, _scale(v2b, -one)), rho)
        e2 = _scale(_add(v1b, _scale(v2b, one)), rho)
        e3 = _scale(_add(v1, _scale(v2, one)), rho)
        e4 = _scale(_add(v1, _scale(v2, -one)), rho)
        e6 = Z[(3, 4)]
    elif case == "O(2,2)":
        e1 = _scale(_add(v1b, _scale(v2b, i)), rho)
        e2 = _scale(_add(v1b, _scale(v2b, -i)), rho)
        e3 = _scale(_add(v1, _scale(v2, -i)), rho)
        e4 = _scale(_add(v1, _scale(v2, i)), rho)
        e6 = _scale(Z[(3, 4)], i)
    else:
        raise ValueError(f"unknown case {case!r}")
    three = field.scalar(3)
    e5 = _scale(Z[(1, 2)], three * i * y / (one + y * y))
    a = three * (one - y * y) / (one + y * y)
    return field, [e1, e2, e3, e4, e5, e6], a


def check_d63_orbit_exact(case="O(4)", y_value=None) -> bool:
    """Exact verification that the orbit basis satisfies the abstract
    structure equations with a = 3(1-y^2)/(1+y^2), symbolically in y (with
    rho adjoined) or at a rational y (rho still adjoined, evaluated)."""
    field, basis, a = d63_orbit_basis_exact(case, y_value)
    expected = _expected_d63(a)
    return _check_structure_match(vf_bracket, basis, expected,
                                  lambda A, B: A == B)


def _expected_d63(a: Scalar) -> LieAlgebra:
    """The abstract 6-dim type D structure table with its parameter set to the
    given scalar, over that scalar's field."""
    field = a.field
    half = Fraction(1, 2)
    ah = a * field.scalar(half)
    th = field.scalar(Fraction(3, 2))
    one = field.one()
    z = field.zero()

    def v(**kw):
        vec = [z] * 6
        for key, c in kw.items():
            vec[int(key[1]) - 1] = c
        return vec

    table = {
        (0, 1): v(e6=ah),
        (0, 2): v(e5=-one, e6=-th),
        (0, 4): v(e1=-th, e4=-ah),
        (0, 5): v(e1=-one),
        (1, 3): v(e5=-one, e6=th),
        (1, 4): v(e2=-th, e3=-ah),
        (1, 5): v(e2=one),
        (2, 3): v(e6=-ah),
        (2, 4): v(e3=th, e2=ah),
        (2, 5): v(e3=one),
        (3, 4): v(e4=th, e1=ah),
        (3, 5): v(e4=-one),
    }
    return LieAlgebra(field, 6, table)


def _restrict_field(alg: LieAlgebra, field: FieldDescriptor) -> LieAlgebra:
    table = {k: [Scalar(field, x.num, x.den) for x in v] for k, v in alg._c.items()}
    return LieAlgebra(field, alg.dim, table, alg.basis_names)


def check_d63_orbit_numeric(case="O(4)", y_value=0.37) -> float:
    """Float verification at a sampled y; returns the worst relative residual
    of all 15 structure relations."""
    yv = float(y_value)
    sign = -1.0 if case == "O(2,2)" else 1.0
    rho = complex(np.sqrt(complex(sign * 3.0 / (4 * (1 + yv * yv)))))
    eps = (1, 1, 1, 1) if case == "O(4)" else (
        (1, 1, 1, -1) if case == "O(3,1)" else (1, 1, -1, -1))

    def zmat(j, k):
        M = np.zeros((4, 4), dtype=complex)
        M[k - 1, j - 1] = eps[j - 1]
        M[j - 1, k - 1] = -eps[k - 1]
        return M

    v1 = yv * zmat(1, 3) + 1j * zmat(2, 3)
    v2 = yv * zmat(1, 4) + 1j * zmat(2, 4)
    v1b = yv * zmat(1, 3) - 1j * zmat(2, 3)
    v2b = yv * zmat(1, 4) - 1j * zmat(2, 4)
    if case == "O(4)":
        basis = [rho * (v1b - 1j * v2b), rho * (v1b + 1j * v2b),
                 rho * (v1 + 1j * v2), rho * (v1 - 1j * v2),
                 (3j * yv / (1 + yv * yv)) * zmat(1, 2), 1j * zmat(3, 4)]
    elif case == "O(3,1)":
        basis = [rho * (v1b - v2b), rho * (v1b + v2b),
                 rho * (v1 + v2), rho * (v1 - v2),
                 (3j * yv / (1 + yv * yv)) * zmat(1, 2), zmat(3, 4)]
    else:
        basis = [rho * (v1b + 1j * v2b), rho * (v1b - 1j * v2b),
                 rho * (v1 - 1j * v2), rho * (v1 + 1j * v2),
                 (3j * yv / (1 + yv * yv)) * zmat(1, 2), 1j * zmat(3, 4)]
    a = 3 * (1 - yv * yv) / (1 + yv * yv)
    return _numeric_structure_residual(basis, a,
                                       lambda A, B: B @ A - A @ B)


def _numeric_structure_residual(basis, a_value, bracket) -> float:
    coeffs = _d63_numeric_constants(complex(a_value))
    worst = 0.0
    scale = max(np.max(np.abs(np.asarray(m, dtype=complex))) for m in basis)
    for i in range(6):
        for j in range(i + 1, 6):
            got = bracket(np.asarray(basis[i], dtype=complex),
                          np.asarray(basis[j], dtype=complex))
            want = sum(c * np.asarray(basis[k], dtype=complex)
                       for k, c in enumerate(coeffs[(i, j)]))
            worst = max(worst, float(np.max(np.abs(got - want))) / scale)
    return worst


def _d63_numeric_constants(a: complex) -> dict:
    z = np.zeros(6, dtype=complex)
    out = {}

    def put(i, j, **kw):
        v = z.copy()
        for key, c in kw.items():
            v[int(key[1]) - 1] = c
        out[(i - 1, j - 1)] = v

    put(1, 2, e6=a / 2)
    put(1, 3, e5=-1, e6=-1.5)
    put(1, 4)
    put(1, 5, e1=-1.5, e4=-a / 2)
    put(1, 6, e1=-1)
    put(2, 3)
    put(2, 4, e5=-1, e6=1.5)
    put(2, 5, e2=-1.5, e3=-a / 2)
    put(2, 6, e2=1)
    put(3, 4, e6=-a / 2)
    put(3, 5, e3=1.5, e2=a / 2)
    put(3, 6, e3=1)
    put(4, 5, e4=1.5, e1=a / 2)
    put(4, 6, e4=-1)
    put(5, 6)
    return out


# -- quaternionic realization --------------------------------------------------------


def quaternionic_basis_exact(cos_t: Fraction, sin_t: Fraction, rho_expr=None):
    """The sl(2,R)+su(2) basis at a Pythagorean angle (cos, sin rational,
    cos^2 + sin^2 = 1); rho^2 = (3/16)(1 + 1/cos) must resolve in the chosen
    quadratic extension.  Returns (field, basis vectors, a = 3i tan).

    Basis order of the ambient algebra: H, X, Y, i, j, k."""
    c = Fraction(cos_t)
    s = Fraction(sin_t)
    if c * c + s * s != 1:
        raise ValueError("need an exact point on the unit circle")
    rho2 = Fraction(3, 16) * (1 + Fraction(1, 1) / c)
    field = FieldDescriptor(has_i=True, quad_ext=("rho", rho2))
    i = field.i()
    rho = field.r()
    cs = field.scalar(c)
    sn = field.scalar(s)
    one = field.one()

    def vec(H=0, X=0, Y=0, qi=0, qj=0, qk=0):
        return [field.scalar(t) for t in (H, X, Y, qi, qj, qk)]

    # T = -i e^{k theta} + X - Y; in quaternions i e^{k theta} = cos i - sin j
    T = [field.zero(), one, -one, -cs, sn, field.zero()]
    w1 = vec(qk=1)
    w2 = vec(qj=1, Y=-2 * s)
    w3 = vec(H=1)
    w4 = vec(qi=1, Y=2 * c)

    def comb(*terms):
        out = [field.zero()] * 6
        for coef, v in terms:
            for t in range(6):
                out[t] = out[t] + coef * v[t]
        return out

    w12 = comb((i * sn, w1), (i * i * sn, w2))          # i sin (w1 + i w2)
    w34 = comb((one, w3), (i, w4))                      # w3 + i w4
    v1 = comb((one, w12), (-i * (cs - one), w34), (-(cs - one), T))
    v2 = comb((one, w12), (-i * (cs + one), w34), ((cs + one), T))

    def conj_vec(v):
        return [x.conj() for x in v]

    v1b, v2b = conj_vec(v1), conj_vec(v2)
    e1 = comb((field.scalar(3) * (one + cs) / (field.scalar(16) * rho * cs * sn), v1b))
    e2 = comb((i * rho / (one + cs), v2b))
    e3 = comb((rho / sn, v1))
    e4 = comb((field.scalar(3) * i / (field.scalar(16) * rho * cs), v2))
    # e5 = (3/4) i sec (i e^{k theta} + X - Y); i e^{k theta} = cos i - sin j
    e5_inner = [field.zero(), one, -one, cs, -sn, field.zero()]
    e5 = comb((field.scalar(Fraction(3, 4)) * i / cs, e5_inner))
    e6 = comb((-i * field.scalar(Fraction(1, 2)), T))
    a = field.scalar(3) * i * sn / cs
    return field, [e1, e2, e3, e4, e5, e6], a


def check_quaternionic_exact(cos_t=Fraction(3, 5), sin_t=Fraction(4, 5)) -> bool:
    field, basis, a = quaternionic_basis_exact(cos_t, sin_t)
    amb = _restrict_field(_coerce(algebra_sl2_su2(), field), field)
    expected = _expected_d63(a)
    return _check_structure_match(lambda x, y: amb.bracket(x, y), basis,
                                  expected,
                                  lambda u, v: all((p - q).is_zero()
                                                   for p, q in zip(u, v)))


def _coerce(alg: LieAlgebra, field: FieldDescriptor) -> LieAlgebra:
    from .realforms import coerce_algebra
    return coerce_algebra(alg, field)


def check_quaternionic_numeric(theta: float) -> float:
    """Float check at an arbitrary angle; returns the worst residual."""
    c, s = float(np.cos(theta)), float(np.sin(theta))
    rho = float(np.sqrt(3 * (1 + 1 / c)) / 4)
    # ambient structure constants (H, X, Y, i, j, k)
    amb = np.zeros((6, 6, 6), dtype=complex)

    def setb(i, j, vec):
        amb[i, j, :] = vec
        amb[j, i, :] = -np.asarray(vec)

    setb(0, 1, [0, 2, 0, 0, 0, 0])
    setb(0, 2, [0, 0, -2, 0, 0, 0])
    setb(1, 2, [1, 0, 0, 0, 0, 0])
    setb(3, 4, [0, 0, 0, 0, 0, 2])
    setb(4, 5, [0, 0, 0, 2, 0, 0])
    setb(3, 5, [0, 0, 0, 0, -2, 0])

    def bracket(x, y):
        return np.einsum("i,j,ijk->k", x, y, amb)

    T = np.array([0, 1, -1, -c, s, 0], dtype=complex)
    w1 = np.array([0, 0, 0, 0, 0, 1], dtype=complex)
    w2 = np.array([0, 0, -2 * s, 0, 1, 0], dtype=complex)
    w3 = np.array([1, 0, 0, 0, 0, 0], dtype=complex)
    w4 = np.array([0, 0, 2 * c, 1, 0, 0], dtype=complex)
    w12 = 1j * s * (w1 + 1j * w2)
    w34 = w3 + 1j * w4
    v1 = w12 - 1j * (c - 1) * w34 - (c - 1) * T
    v2 = w12 - 1j * (c + 1) * w34 + (c + 1) * T
    v1b, v2b = v1.conjugate(), v2.conjugate()
    basis = [
        3 * (1 + c) / (16 * rho * c * s) * v1b,
        1j * rho / (1 + c) * v2b,
        rho / s * v1,
        3j / (16 * rho * c) * v2,
        (3 / 4) * 1j / c * np.array([0, 1, -1, c, -s, 0], dtype=complex),
        -0.5j * T,
    ]
    a = 3j * s / c
    coeffs = _d63_numeric_constants(a)
    worst = 0.0
    scale = max(np.max(np.abs(m)) for m in basis)
    for i in range(6):
        for j in range(i + 1, 6):
            got = bracket(basis[i], basis[j])
            want = sum(cc * basis[k] for k, cc in enumerate(coeffs[(i, j)]))
            worst = max(worst, float(np.max(np.abs(got - want))) / scale)
    return worst
