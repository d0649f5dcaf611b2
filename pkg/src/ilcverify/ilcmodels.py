"""Algebraic models (s, k; e, v) of homogeneous Legendrian contact structures,
their validation, duality, and the closed-form parameter dictionaries that tie
realization parameters to structure-constant parameters."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .exactalg import ExactMatrix, FieldError, Scalar, rank
from .liealg import LieAlgebra, Subspace, is_subalgebra


class DomainViolation(FieldError):
    pass


@dataclass
class ParamConstraint:
    """Machine-checkable condition on a parameter assignment.

    ``subs`` gives the formal identifications (by parameter name) under which
    symbolic verification is sound, e.g. {'abar': 'a'} for a real parameter.
    ``check`` accepts an exact assignment dict and returns True/False.
    ``samples`` lists representative in-range assignments.
    """

    text: str
    subs: dict = dc_field(default_factory=dict)
    check: object = None
    samples: list = dc_field(default_factory=list)
    symbolic_ok: bool = True

    def holds(self, assignment: dict) -> bool:
        if self.check is None:
            return True
        return bool(self.check(assignment))


class ILCModel:
    """Lie algebra with distinguished isotropy k = e ∩ v and the two tangent
    subalgebras e, v of a homogeneous Legendrian contact structure."""

    def __init__(self, label: str, algebra: LieAlgebra, k_idx=None, e_idx=None,
                 v_idx=None, k_vecs=None, e_vecs=None, v_vecs=None,
                 constraints=(), transversal: int | None = None,
                 param_doc: str = ""):
        self.label = label
        self.algebra = algebra
        L = algebra

        def mk(idx, vecs):
            if vecs is not None:
                return Subspace(L, vecs)
            return Subspace(L, [L.basis_vector(i) for i in (idx or [])])

        self.e = mk(e_idx, e_vecs)
        self.v = mk(v_idx, v_vecs)
        if k_idx is None and k_vecs is None:
            self.k = self.e.intersect(self.v)
        else:
            self.k = mk(k_idx, k_vecs)
        self.constraints = tuple(constraints)
        self.param_doc = param_doc
        self._transversal = transversal

    @property
    def field(self):
        return self.algebra.field

    def transversal_index(self) -> int:
        """Index of the coordinate representing s/(e+v); must avoid the pivot
        coordinates of the echelonized e+v so reduction modulo e+v leaves
        exactly this coordinate."""
        ev = self.e.sum(self.v)
        if self._transversal is not None:
            if self._transversal in ev.pivots:
                raise FieldError("declared transversal lies in a pivot of e+v")
            return self._transversal
        for t in range(self.algebra.dim):
            if t not in ev.pivots:
                return t
        raise FieldError("e + v is the whole algebra; no transversal")

    def contact_pairing(self) -> ExactMatrix:
        """Matrix of the induced pairing e/k x v/k -> s/(e+v), in the
        transversal coordinate."""
        L = self.algebra
        ebasis = _complement_in(self.e, self.k)
        vbasis = _complement_in(self.v, self.k)
        t = self.transversal_index()
        ev = self.e.sum(self.v)
        rows = []
        for x in ebasis:
            row = []
            for y in vbasis:
                br = L.bracket(x, y)
                row.append(_transversal_coefficient(L, ev, t, br))
            rows.append(row)
        if not rows or not rows[0]:
            raise FieldError("empty contact pairing")
        return ExactMatrix(L.field, rows)

    def dualize(self) -> "ILCModel":
        out = ILCModel.__new__(ILCModel)
        out.label = self.label
        out.algebra = self.algebra
        out.e = self.v
        out.v = self.e
        out.k = self.k
        out.constraints = self.constraints
        out.param_doc = self.param_doc
        out._transversal = self._transversal
        return out

    def __repr__(self):
        return f"ILCModel({self.label}, dim={self.algebra.dim})"


def _complement_in(big: Subspace, small: Subspace):
    """Vectors of big's echelon basis spanning a complement of small."""
    out = []
    cur = small
    for b in big.basis:
        if not cur.contains(b):
            out.append(b)
            cur = Subspace(big.parent, [v for v in cur.basis] + [b])
    return out


def _transversal_coefficient(L: LieAlgebra, ev: Subspace, t: int, vec):
    """Coefficient of the transversal basis vector in vec mod (e+v)."""
    field = L.field
    v = list(vec)
    # reduce modulo ev using its echelon basis
    for row, p in zip(ev.basis, ev.pivots):
        c = v[p]
        if not c.is_zero():
            v = [v[m] - c * row[m] for m in range(len(v))]
    coef = v[t]
    v[t] = field.zero()
    if any(not x.is_zero() for x in v):
        raise FieldError("vector does not reduce into (e+v) + transversal line")
    return coef


@dataclass
class ValidationReport:
    ok: bool
    violations: list
    pairing_rank: int | None


def validate_ilc(m: ILCModel) -> ValidationReport:
    """Checks: k = e ∩ v, e and v are subalgebras, dim(e+v) = dim - 1, and the
    contact pairing has full rank over the parameter field."""
    L = m.algebra
    violations = []
    if not (m.e.intersect(m.v) == m.k):
        violations.append("k != e ∩ v")
    if not is_subalgebra(m.e):
        violations.append("e is not a subalgebra")
    if not is_subalgebra(m.v):
        violations.append("v is not a subalgebra")
    ev = m.e.sum(m.v)
    if ev.dim != L.dim - 1:
        violations.append(f"dim(e+v) = {ev.dim}, expected {L.dim - 1}")
        return ValidationReport(False, violations, None)
    prank = None
    try:
        P = m.contact_pairing()
        prank = rank(P)
        n = m.e.dim - m.k.dim
        if prank != n:
            violations.append(f"contact pairing rank {prank} < {n}")
    except FieldError as ex:
        violations.append(f"contact pairing: {ex}")
    return ValidationReport(not violations, violations, prank)


@dataclass
class CatalogEntry:
    label: str
    provenance: str
    model: ILCModel | None = None          # full contact-model data
    algebra: LieAlgebra | None = None      # bare presentation when no (k,e,v)
    anti_involutions: dict = dc_field(default_factory=dict)
    tubular_rows: list = dc_field(default_factory=list)
    notes: str = ""
    stub: bool = False

    def require_model(self) -> ILCModel:
        if self.model is None:
            raise FieldError(f"{self.label}: structure constants not built in; "
                             "supply them as an ingestion fixture")
        return self.model


# -- parameter dictionaries -----------------------------------------------------


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise DomainViolation(f"expected an exact rational, got {x!r}")


def _d7_a_from_alpha(alpha):
    alpha = _frac(alpha)
    if alpha in (-1,):
        raise DomainViolation("alpha = -1 is outside the domain")
    return Fraction(3, 4) * (alpha - 1) / (alpha + 1)

def _d7_lambda_from_a(a):
    a = _frac(a)
    if a == Fraction(3, 4):
        raise DomainViolation("a = 3/4 is outside the domain")
    return (3 + 4 * a) / (3 - 4 * a)

def _n62_a2_from_alpha(alpha):
    alpha = _frac(alpha)
    if alpha in (-1, 0, 1, 2):
        raise DomainViolation("alpha in {-1,0,1,2} is outside the domain")
    return -((2 * alpha - 1) ** 2) / ((alpha + 1) * (alpha - 2))

def _n62_a2_from_beta_rot(beta):
    beta = _frac(beta)
    return Fraction(-4) * beta ** 2 / (beta ** 2 + 9)

def _d62_a_from_alpha(alpha):
    alpha = _frac(alpha)
    if alpha == 0:
        raise DomainViolation("alpha = 0 is outside the domain")
    return Fraction(2, 3) * (alpha + 1) / alpha

def _d63_a2_from_beta(beta):
    beta = _frac(beta)
    if beta == 0:
        raise DomainViolation("beta = 0 is outside the domain")
    return Fraction(9) / beta ** 2

def _d63_a2_from_gamma(gamma):
    gamma = _frac(gamma)
    if gamma == 0:
        raise DomainViolation("gamma = 0 is outside the domain")
    return Fraction(-9) / gamma ** 2

def _cr3_gamma_from_a(a):
    a = _frac(a)
    if a == 1:
        raise DomainViolation("a = 1 is outside the domain")
    return (a - 2) / (a - 1)

def _n62_mu_from_b(b):
    import cmath
    b = complex(b)
    return 0.5 + 3 * b / (2 * cmath.sqrt(b * b + 4))

def _n62_kappa_from_a(a):
    import cmath
    a = complex(a)
    return -1.5 + 3 * a / (2 * cmath.sqrt(a * a + 4))

def _d63_a_from_theta(theta):
    import math
    return 3j * math.tan(float(theta))


_PARAMETER_MAPS = {
    "d7_a_from_alpha": _d7_a_from_alpha,
    "d7_lambda_from_a": _d7_lambda_from_a,
    "n62_mu_from_b": _n62_mu_from_b,
    "n62_kappa_from_a": _n62_kappa_from_a,
    "n62_a2_from_alpha": _n62_a2_from_alpha,
    "n62_a2_from_beta_rot": _n62_a2_from_beta_rot,
    "d62_a_from_alpha": _d62_a_from_alpha,
    "d63_a2_from_beta": _d63_a2_from_beta,
    "d63_a_from_theta": _d63_a_from_theta,
    "d63_a2_from_gamma": _d63_a2_from_gamma,
    "cr3_gamma_from_a": _cr3_gamma_from_a,
}


def parameter_map(name: str, *args):
    """Evaluate one of the named closed-form parameter dictionaries."""
    try:
        fn = _PARAMETER_MAPS[name]
    except KeyError:
        raise DomainViolation(f"unknown parameter map {name!r}; "
                              f"known: {sorted(_PARAMETER_MAPS)}")
    try:
        return fn(*args)
    except ZeroDivisionError:
        raise DomainViolation(f"{name}: input outside the domain (division by zero)")


def parameter_map_names():
    return sorted(_PARAMETER_MAPS)
