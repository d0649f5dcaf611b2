"""Built-in catalog: the structure-constant tables of the multiply-transitive
Legendrian contact models carried by this toolkit, their representative
anti-involutions, tubular-realization data, and stub entries for the models
whose Cartan-basis tables must be supplied externally.

Bracket helpers use 1-based basis indices, matching the published tables;
everything is converted to 0-based storage."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .exactalg import ExactMatrix, FieldDescriptor, ParamSpec, Scalar
from .ilcmodels import CatalogEntry, ILCModel, ParamConstraint
from .liealg import LieAlgebra
from .realforms import AntiInvolution


def _brackets(dim, table):
    """table: {(i,j): [(coeff, k), ...]} with 1-based i<j and targets k."""
    out = {}
    for (i, j), terms in table.items():
        vec = [0] * dim
        for coeff, k in terms:
            vec[k - 1] = coeff
        out[(i - 1, j - 1)] = vec
    return out


def _aimatrix(field, dim, images):
    """images: {j: [(coeff, k), ...]} with 1-based indices; column j of the
    returned matrix holds the coordinates of phi(e_j)."""
    cols = {}
    for j, terms in images.items():
        col = [field.zero()] * dim
        for coeff, k in terms:
            col[k - 1] = field.scalar(coeff)
        cols[j - 1] = col
    rows = [[cols[j][i] for j in range(dim)] for i in range(dim)]
    return ExactMatrix(field, rows)


H = Fraction(1, 2)


# -- fields ---------------------------------------------------------------------

def field_plain():
    return FieldDescriptor(has_i=True)


def field_sqrt2():
    return FieldDescriptor(has_i=True, quad_ext=("r", 2))


def field_ab():
    return FieldDescriptor(has_i=True, params=(
        ParamSpec("a", conj="abar"), ParamSpec("abar", conj="a"),
        ParamSpec("b", conj="bbar"), ParamSpec("bbar", conj="b")))


def field_a():
    return FieldDescriptor(has_i=True, params=(
        ParamSpec("a", conj="abar"), ParamSpec("abar", conj="a")))


def field_named(name):
    return FieldDescriptor(has_i=True, params=(
        ParamSpec(name, conj=name + "bar"), ParamSpec(name + "bar", conj=name)))


# -- structure tables -------------------------------------------------------------


def algebra_iii61():
    F = field_plain()
    t = {
        (1, 2): [(Fraction(5, 4), 2)],
        (1, 3): [(Fraction(3, 2), 3), (-1, 5)],
        (1, 4): [(-1, 1), (H, 4), (Fraction(-9, 8), 6)],
        (1, 5): [(H, 2), (Fraction(-3, 16), 3), (1, 5)],
        (2, 4): [(1, 2), (Fraction(3, 4), 3), (-1, 5)],
        (2, 6): [(2, 2)],
        (3, 4): [(3, 3)],
        (3, 6): [(2, 3)],
        (4, 5): [(Fraction(-3, 4), 3), (-2, 5)],
        (5, 6): [(2, 5)],
    }
    return LieAlgebra(F, 6, _brackets(6, t))


def algebra_d61():
    F = field_sqrt2()
    r = F.r()
    t = {
        (1, 3): [(-1, 5), (Fraction(1, 4), 6)],
        (1, 4): [(-r, 2)],
        (1, 5): [(3, 1)],
        (1, 6): [(-4, 1)],
        (2, 3): [(r, 4)],
        (2, 4): [(-1, 5), (Fraction(-3, 4), 6)],
        (2, 5): [(Fraction(3, 2), 2)],
        (2, 6): [(-2, 2)],
        (3, 5): [(-3, 3)],
        (3, 6): [(4, 3)],
        (4, 5): [(Fraction(-3, 2), 4)],
        (4, 6): [(2, 4)],
    }
    return LieAlgebra(F, 6, _brackets(6, t))


def algebra_n62():
    F = field_ab()
    a, b = F.param("a"), F.param("b")
    t = {
        (1, 2): [(-2 * a, 2), (-1, 6)],
        (1, 3): [(-a, 3), (-1, 5)],
        (1, 4): [(-1, 6)],
        (1, 5): [(-1, 3), (-2 * a, 5)],
        (1, 6): [(-1, 2), (-a, 6)],
        (2, 4): [(b, 2), (-1, 5)],
        (3, 4): [(2 * b, 3), (-1, 6)],
        (4, 5): [(1, 2), (-2 * b, 5)],
        (4, 6): [(1, 3), (-b, 6)],
    }
    return LieAlgebra(F, 6, _brackets(6, t))


def algebra_d63():
    F = field_a()
    a = F.param("a")
    ah = a * F.scalar(H)
    t = {
        (1, 2): [(ah, 6)],
        (1, 3): [(-1, 5), (Fraction(-3, 2), 6)],
        (1, 5): [(Fraction(-3, 2), 1), (-ah, 4)],
        (1, 6): [(-1, 1)],
        (2, 4): [(-1, 5), (Fraction(3, 2), 6)],
        (2, 5): [(Fraction(-3, 2), 2), (-ah, 3)],
        (2, 6): [(1, 2)],
        (3, 4): [(-ah, 6)],
        (3, 5): [(Fraction(3, 2), 3), (ah, 2)],
        (3, 6): [(1, 3)],
        (4, 5): [(Fraction(3, 2), 4), (ah, 1)],
        (4, 6): [(-1, 4)],
    }
    return LieAlgebra(F, 6, _brackets(6, t))


def algebra_n62_s_presentation():
    """Basis order S1, S2, N1, N2, N3, N4; the span of N1..N4 is an abelian
    ideal and the diagonal actions are as in the generic self-dual family."""
    F = field_named("mu")
    mu = F.param("mu")
    one = F.one()
    t = {
        (1, 3): [(mu - one, 3)],
        (1, 4): [(mu, 4)],
        (1, 5): [(mu, 5)],
        (1, 6): [(mu - one, 6)],
        (2, 3): [(mu - one, 3)],
        (2, 4): [(mu - one, 4)],
        (2, 5): [(mu, 5)],
        (2, 6): [(mu, 6)],
    }
    return LieAlgebra(F, 6, _brackets(6, t), "S1 S2 N1 N2 N3 N4".split())


def algebra_n62_half_presentation():
    """The a^2 = b^2 = 1/2 presentation; basis order S1, S2, N1, N2, N3, N4."""
    F = field_plain()
    t = {
        (1, 2): [(1, 5)],
        (1, 3): [(-1, 3)],
        (1, 6): [(-1, 6)],
        (2, 3): [(-1, 3)],
        (2, 4): [(-1, 4)],
    }
    return LieAlgebra(F, 6, _brackets(6, t), "S1 S2 N1 N2 N3 N4".split())


def algebra_n61_a2eq2():
    """The a^2 = 2 presentation; basis order S, N1, N2, N3, N4, N5 with
    N2..N5 spanning an abelian ideal."""
    F = field_plain()
    t = {
        (1, 2): [(1, 2), (-1, 3)],
        (1, 3): [(1, 3)],
        (1, 4): [(2, 4)],
        (1, 5): [(3, 5)],
        (1, 6): [(2, 6)],
        (2, 3): [(1, 4)],
        (2, 4): [(1, 5)],
    }
    return LieAlgebra(F, 6, _brackets(6, t), "S N1 N2 N3 N4 N5".split())


def algebra_sl2_su2():
    """sl(2,R) + su(2) with basis H, X, Y, i, j, k; quaternionic brackets
    [i,j] = 2k (cyclic)."""
    F = field_plain()
    t = {
        (1, 2): [(2, 2)],
        (1, 3): [(-2, 3)],
        (2, 3): [(1, 1)],
        (4, 5): [(2, 6)],
        (5, 6): [(2, 4)],
        (4, 6): [(-2, 5)],
    }
    return LieAlgebra(F, 6, _brackets(6, t), "H X Y qi qj qk".split())


# Appendix-style 3-dimensional models (point-symmetry algebras of scalar ODEs).

def algebra_ode_A():
    F = field_plain()
    t = {(1, 2): [(1, 1)], (1, 3): [(2, 2)], (2, 3): [(1, 3)]}
    return LieAlgebra(F, 3, _brackets(3, t))


def algebra_ode_B():
    F = field_named("c")
    c = F.param("c")
    t = {
        (1, 2): [(1, 1)],
        (1, 3): [(c * H, 1), (2, 2)],
        (2, 3): [(2, 1), (-c * H, 2), (1, 3)],
    }
    return LieAlgebra(F, 3, _brackets(3, t))


def algebra_ode_C():
    F = field_named("gam")
    g = F.param("gam")
    one = F.one()
    t = {
        (1, 2): [(-(g - one), 2)],
        (1, 3): [(-(g - 2 * one), 3)],
    }
    return LieAlgebra(F, 3, _brackets(3, t))


def algebra_ode_D():
    F = field_plain()
    t = {(1, 3): [(1, 1), (1, 2)], (2, 3): [(1, 2)]}
    return LieAlgebra(F, 3, _brackets(3, t))


# -- constraint helpers ------------------------------------------------------------


def _is_real(v):
    from .exactalg import QQ_I, _value_as_scalar
    s = _value_as_scalar(QQ_I, v)
    return s == s.conj()


def _is_imag(v):
    from .exactalg import QQ_I, _value_as_scalar
    s = _value_as_scalar(QQ_I, v)
    return s == -(s.conj())


def _nonzero(v):
    from .exactalg import QQ_I, _value_as_scalar
    return not _value_as_scalar(QQ_I, v).is_zero()


def constraint_real_nonzero(pname):
    return ParamConstraint(
        text=f"{pname} real, nonzero",
        subs={pname + "bar": pname},
        check=lambda asg: _is_real(asg[pname]) and _nonzero(asg[pname]),
        samples=[{pname: Fraction(1)}, {pname: Fraction(2)}, {pname: Fraction(1, 2)}],
    )


def constraint_imag_nonzero(pname):
    def chk(asg):
        return _is_imag(asg[pname]) and _nonzero(asg[pname])
    return ParamConstraint(
        text=f"{pname} purely imaginary, nonzero",
        subs={},
        check=chk,
        samples=[{pname: "i"}, {pname: "3/2*i"}, {pname: "2*i"}],
        symbolic_ok=False,
    )


def constraint_n62(eps):
    sgn = "" if eps == 1 else "-"

    def chk(asg):
        from .exactalg import QQ_I, _value_as_scalar
        a = _value_as_scalar(QQ_I, asg["a"])
        b = _value_as_scalar(QQ_I, asg["b"])
        return b == a.conj() * QQ_I.scalar(eps)

    samples = ([{"a": "1+i", "b": "1-i"}, {"a": 2, "b": 2}, {"a": "i", "b": "-i"}]
               if eps == 1 else
               [{"a": "1+i", "b": "-1+i"}, {"a": 2, "b": -2}, {"a": "i", "b": "i"}])
    return ParamConstraint(
        text=f"b = {sgn}conj(a)",
        subs={"b": f"{sgn}abar", "bbar": f"{sgn}a"},
        check=chk,
        samples=samples,
    )


# -- anti-involutions over the built-in models ---------------------------------------


def _phi_d61(model, eps):
    F = model.field
    A = _aimatrix(F, 6, {1: [(1, 3)], 2: [(eps, 4)], 3: [(1, 1)], 4: [(eps, 2)],
                         5: [(-1, 5)], 6: [(-1, 6)]})
    name = "phi+" if eps == 1 else "phi-"
    levi = "definite" if eps == 1 else "indefinite"
    return AntiInvolution(model, name, A, constraint=None, levi_expected=levi,
                          provenance="anti-involution table, D.6-1 row")


def _phi_n62(model, eps):
    F = model.field
    A = _aimatrix(F, 6, {1: [(eps, 4)], 2: [(eps, 3)], 3: [(eps, 2)], 4: [(eps, 1)],
                         5: [(-1, 5)], 6: [(-1, 6)]})
    name = "phi" if eps == 1 else "phi-"
    return AntiInvolution(model, name, A, constraint=constraint_n62(eps),
                          levi_expected="indefinite",
                          provenance="anti-involution table, N.6-2 row")


def _phi_d63_1(model):
    F = model.field
    A = _aimatrix(F, 6, {1: [(1, 4)], 2: [(1, 3)], 3: [(1, 2)], 4: [(1, 1)],
                         5: [(-1, 5)], 6: [(1, 6)]})
    return AntiInvolution(model, "phi1", A, constraint=constraint_real_nonzero("a"),
                          levi_expected="indefinite",
                          provenance="anti-involution table, D.6-3 row")


def _phi_d63_2(model, eps):
    F = model.field
    A = _aimatrix(F, 6, {1: [(eps, 3)], 2: [(eps, 4)], 3: [(eps, 1)], 4: [(eps, 2)],
                         5: [(-1, 5)], 6: [(-1, 6)]})
    name = "phi2+" if eps == 1 else "phi2-"
    return AntiInvolution(model, name, A, constraint=constraint_real_nonzero("a"),
                          levi_expected="definite",
                          provenance="anti-involution table, D.6-3 row")


def _phi_d63_3(model):
    F = model.field
    A = _aimatrix(F, 6, {1: [(1, 3)], 2: [(-1, 4)], 3: [(1, 1)], 4: [(-1, 2)],
                         5: [(-1, 5)], 6: [(-1, 6)]})
    return AntiInvolution(model, "phi3", A, constraint=constraint_imag_nonzero("a"),
                          levi_expected="indefinite",
                          provenance="anti-involution table, D.6-3 row")


def _phi_ode_C1(model):
    F = model.field
    A = _aimatrix(F, 3, {1: [(1, 1), (-1, 2), (-1, 3)], 2: [(-1, 2)], 3: [(-1, 3)]})
    con = ParamConstraint(
        text="gam real, not in {0,1,2,3}",
        subs={"gambar": "gam"},
        check=lambda asg: _is_real(asg["gam"]) and asg["gam"] not in (0, 1, 2, 3),
        samples=[{"gam": 4}, {"gam": -1}, {"gam": Fraction(1, 2)}],
    )
    return AntiInvolution(model, "phi1", A, constraint=con,
                          provenance="scalar-ODE models: case (C)")


def _phi_ode_C2(model):
    F = model.field
    A = _aimatrix(F, 3, {1: [(-1, 1), (1, 2), (1, 3)], 2: [(1, 3)], 3: [(1, 2)]})

    def chk(asg):
        from .exactalg import QQ_I, _value_as_scalar
        g = _value_as_scalar(QQ_I, asg["gam"])
        return g + g.conj() == QQ_I.scalar(3)

    con = ParamConstraint(
        text="Re(gam) = 3/2",
        subs={"gambar": "3-gam"},
        check=chk,
        samples=[{"gam": "3/2+i"}, {"gam": "3/2+2*i"}, {"gam": "3/2-1/2*i"}],
    )
    return AntiInvolution(model, "phi2", A, constraint=con,
                          provenance="scalar-ODE models: case (C)")


def _phi_ode_D(model):
    F = model.field
    A = _aimatrix(F, 3, {1: [(-1, 1)], 2: [(-1, 2)], 3: [(1, 1), (1, 3)]})
    return AntiInvolution(model, "phi", A, constraint=None,
                          provenance="scalar-ODE models: case (D)")


def _phi_ode_B(model, eps):
    """sigma is a square root of 4/(16+c^2); entries live in the extension.

    For eps = +1 (c real) the check is symbolic over Q(i)(c)(sigma); for
    eps = -1 (c imaginary) sigma is imaginary, which the conjugation-fixed
    extension cannot express, so only sampled assignments are verified."""
    if eps == 1:
        F = FieldDescriptor(has_i=True, params=(ParamSpec("c", real=True),),
                            quad_ext=("sigma", "4/(16+c*c)"))
        samples = [{"c": 3, "sigma": Fraction(2, 5)},
                   {"c": Fraction(15, 2), "sigma": Fraction(4, 17)},
                   {"c": Fraction(63, 4), "sigma": Fraction(8, 65)}]
        con = ParamConstraint(text="c real nonzero; sigma^2 = 4/(16+c^2)",
                              subs={}, check=lambda asg: _nonzero(asg["c"]),
                              samples=samples)
    else:
        F = FieldDescriptor(has_i=True, params=(
            ParamSpec("c", conj="cbar"), ParamSpec("cbar", conj="c"),
            ParamSpec("sigma", conj="sigmabar"), ParamSpec("sigmabar", conj="sigma")))
        samples = [{"c": "5*i", "sigma": "2/3*i"},
                   {"c": "17/2*i", "sigma": "4/15*i"},
                   {"c": "65/4*i", "sigma": "8/63*i"}]

        def chk(asg):
            from .exactalg import QQ_I, _value_as_scalar
            c = _value_as_scalar(QQ_I, asg["c"])
            s = _value_as_scalar(QQ_I, asg["sigma"])
            return (c.conj() == -c and s.conj() == -s
                    and (s * s * (QQ_I.scalar(16) + c * c) == QQ_I.scalar(4)))

        con = ParamConstraint(text="c imaginary nonzero; sigma^2 = 4/(16+c^2), "
                                   "sigma imaginary",
                              subs={}, check=chk, samples=samples,
                              symbolic_ok=False)
    c = F.param("c")
    s = F.param("sigma") if eps != 1 else F.r()
    e = F.scalar(eps)
    q = (c * s - 2) * F.scalar(Fraction(1, 4))
    A = ExactMatrix(F, [
        [-e, F.zero(), F.zero()],
        [e * q / s, F.zero(), e / s],
        [e * q, s, F.zero()],
    ])
    name = "phi+" if eps == 1 else "phi-"
    return AntiInvolution(model, name, A, constraint=con,
                          provenance="scalar-ODE models: case (B)")


# -- tubular-realization data ----------------------------------------------------------


@dataclass
class TubularRow:
    model_label: str
    antiinv_names: tuple
    description: str
    a_vectors: object            # callable(model) -> list of coordinate vectors
    expected_affine_dim: int | object
    samples: list = dc_field(default_factory=list)
    provenance: str = ""
    partial: str | None = None   # reason when only (T.1)/(T.2) are checkable
    unverifiable: str | None = None
    condition: object = None     # callable(assignment) -> bool

    def applies(self, assignment) -> bool:
        if self.condition is None:
            return True
        try:
            return bool(self.condition(assignment))
        except Exception:
            return False


def _a_d61(model):
    F = model.field
    r = F.r()
    half_r = r * F.scalar(H)     # 1/sqrt(2) = r/2
    return [
        [1, 0, -1, 0, 0, half_r],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, Fraction(3, 4)],
    ]


def _a_d63(model):
    F = model.field
    a = F.param("a")
    three_over_a = F.scalar(3) / a
    return [
        [1, 0, 0, three_over_a, 0, 0],
        [0, 1, three_over_a, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
    ]


def _a_n62_real(model):
    F = model.field
    a = F.param("a")
    return [
        [1, 0, 0, -1, 0, 0],
        [0, 1, -1, 0, 0, -a],
        [0, 0, 0, 0, 1, -1],
    ]


def _a_n62_2i(model):
    # the unique phi-stable abelian complement with 2-dim affine quotient at
    # b = a = 2i, written in this table's basis orientation (found by an
    # exhaustive Groebner search over all transverse abelian subalgebras)
    F = model.field
    i = F.i()
    m2i = F.scalar(-2) * i
    third = -i * F.scalar(Fraction(1, 3))
    return [
        [1, 0, 0, -1, 0, third],
        [0, 1, -1, 0, 0, m2i],
        [0, 0, 0, 0, 1, -1],
    ]


def _a_n61_pres(model):
    return [
        [0, 1, 0, 0, 0, 0],   # N1
        [0, 0, 0, 0, 1, 0],   # N4
        [0, 0, 0, 0, 0, 1],   # N5
    ]


# -- catalog assembly --------------------------------------------------------------------


_CARTAN_IDX = dict(k_idx=[5], e_idx=[0, 1, 5], v_idx=[2, 3, 5])


def build_catalog() -> dict:
    entries = {}

    def add(entry):
        entries[entry.label] = entry

    # full contact models
    m = ILCModel("III.6-1", algebra_iii61(), transversal=4, **_CARTAN_IDX)
    add(CatalogEntry(
        "III.6-1", "structure-constant table: type III, 6-dim, first model",
        model=m,
        notes="no admissible anti-involution exists (guided derivation ends in "
              "a contradiction); kept for the obstruction and duality checks"))

    m = ILCModel("D.6-1", algebra_d61(), transversal=4, **_CARTAN_IDX)
    e = CatalogEntry("D.6-1", "structure-constant table: type D, 6-dim, first model",
                     model=m)
    e.anti_involutions = {"phi+": _phi_d61(m, 1), "phi-": _phi_d61(m, -1)}
    e.tubular_rows = [TubularRow(
        "D.6-1", ("phi+", "phi-"),
        "a = {e1 - e3 + (1/sqrt(2)) e6, e2 + e4, e5 + (3/4) e6}",
        _a_d61, 2, samples=[{}],
        provenance="tubular-realization table, D.6-1 row")]
    add(e)

    m = ILCModel("N.6-2", algebra_n62(), transversal=4, **_CARTAN_IDX,
                 param_doc="parameters (a, b); essential parameters (a^2, b^2); "
                           "CR real forms require b = ±conj(a)")
    e = CatalogEntry("N.6-2", "structure-constant table: type N, 6-dim, second model",
                     model=m,
                     notes="duality swap corresponds to (a,b) -> (b,a); recorded, "
                           "not verified by isomorphism search")
    e.anti_involutions = {"phi": _phi_n62(m, 1), "phi-": _phi_n62(m, -1)}
    def _n62_real_cond(asg):
        from .exactalg import QQ_I, _value_as_scalar
        a = _value_as_scalar(QQ_I, asg["a"])
        bb = _value_as_scalar(QQ_I, asg["b"])
        return (a == bb and a == a.conj()
                and not (a * a == QQ_I.scalar(-4)))

    def _n62_2i_cond(asg):
        from .exactalg import QQ_I, _value_as_scalar
        a = _value_as_scalar(QQ_I, asg["a"])
        bb = _value_as_scalar(QQ_I, asg["b"])
        return a == bb and a == QQ_I.scalar(2) * QQ_I.i()

    e.tubular_rows = [
        TubularRow("N.6-2", ("phi",),
                   "b = a real (a^2 != -4): a = {e1 - e4, e2 - e3 - a e6, e5 - e6}",
                   _a_n62_real, 1,
                   samples=[{"a": 1, "b": 1}, {"a": 2, "b": 2},
                            {"a": Fraction(1, 2), "b": Fraction(1, 2)}],
                   provenance="tubular-realization table, N.6-2 generic row",
                   condition=_n62_real_cond),
        TubularRow("N.6-2", ("phi-",),
                   "b = a = 2i: a = {e1 - e4 - (i/3) e6, e2 - e3 - 2i e6, "
                   "e5 - e6}",
                   _a_n62_2i, 2, samples=[{"a": "2*i", "b": "2*i"}],
                   provenance="tubular-realization table, N.6-2 special row "
                              "(vectors re-derived in this basis orientation)",
                   condition=_n62_2i_cond),
    ]
    add(e)

    m = ILCModel("D.6-3", algebra_d63(), transversal=4, **_CARTAN_IDX,
                 param_doc="essential parameter a^2 in C \\ {0}; a^2 = 9 is the "
                           "affine-quadric case")
    e = CatalogEntry("D.6-3", "6-dim type D structure equations, third model",
                     model=m)
    e.anti_involutions = {
        "phi1": _phi_d63_1(m),
        "phi2+": _phi_d63_2(m, 1),
        "phi2-": _phi_d63_2(m, -1),
        "phi3": _phi_d63_3(m),
    }
    def _d63_cond(asg):
        from .exactalg import QQ_I, _value_as_scalar
        a = _value_as_scalar(QQ_I, asg["a"])
        return a * a == QQ_I.scalar(9)

    e.tubular_rows = [TubularRow(
        "D.6-3", ("phi1", "phi2+", "phi2-"),
        "a^2 = 9: a = {e1 + (3/a) e4, e2 + (3/a) e3, e5}",
        _a_d63, 3, samples=[{"a": 3}, {"a": -3}],
        provenance="tubular-realization table, D.6-3 row",
        condition=_d63_cond)]
    add(e)

    # bare presentations
    add(CatalogEntry("N.6-2-S", "self-dual family presentation with abelian "
                                "nilradical (S1, S2; N1..N4)",
                     algebra=algebra_n62_s_presentation()))
    add(CatalogEntry("N.6-2-half", "the a^2 = b^2 = 1/2 presentation "
                                   "(S1, S2; N1..N4)",
                     algebra=algebra_n62_half_presentation()))
    n61 = CatalogEntry("N.6-1-a2eq2", "the a^2 = 2 presentation (S; N1..N5)",
                       algebra=algebra_n61_a2eq2())
    n61.tubular_rows = [TubularRow(
        "N.6-1-a2eq2", (),
        "a = {N1, N4, N5} in the a^2 = 2 presentation",
        _a_n61_pres, 1, samples=[{}],
        provenance="tubular-realization table, N.6-1 row (a^2 = 2 case)",
        partial="presentation carries no (k, e, v) data; only the abelian and "
                "self-centralizing conditions plus the affine dimension are "
                "checkable")]
    add(n61)
    add(CatalogEntry("sl2-su2", "quaternionic model: sl(2,R) + su(2) basis "
                                "H, X, Y, i, j, k",
                     algebra=algebra_sl2_su2()))

    # 3-dimensional models from the scalar-ODE classification
    m = ILCModel("ODE-A", algebra_ode_A(), k_idx=[],
                 e_vecs=[[1, 0, Fraction(-1, 2)]], v_vecs=[[0, 0, 1]])
    add(CatalogEntry("ODE-A", "scalar-ODE models: case (A)", model=m,
                     notes="no anti-involution swaps e and v"))

    m = ILCModel("ODE-B", algebra_ode_B(), k_idx=[],
                 e_vecs=[[0, 0, 1]], v_vecs=[[0, 1, 0]],
                 param_doc="parameter c != 0; c ~ -c")
    e = CatalogEntry("ODE-B", "scalar-ODE models: case (B)", model=m)
    e.anti_involutions = {"phi+": _phi_ode_B(m, 1), "phi-": _phi_ode_B(m, -1)}
    add(e)

    m = ILCModel("ODE-C", algebra_ode_C(), k_idx=[],
                 e_vecs=[[-1, 1, 1]], v_vecs=[[1, 0, 0]],
                 param_doc="parameter gam not in {0,1,2,3}; gam ~ 3-gam")
    e = CatalogEntry("ODE-C", "scalar-ODE models: case (C)", model=m)
    e.anti_involutions = {"phi1": _phi_ode_C1(m), "phi2": _phi_ode_C2(m)}
    add(e)

    m = ILCModel("ODE-D", algebra_ode_D(), k_idx=[],
                 e_vecs=[[1, 0, 1]], v_vecs=[[0, 0, 1]])
    e = CatalogEntry("ODE-D", "scalar-ODE models: case (D)", model=m)
    e.anti_involutions = {"phi": _phi_ode_D(m)}
    add(e)

    # stubs: Cartan-basis tables live in the prior classification literature and
    # are accepted as ingestion fixtures, never invented here.
    for label, note in [
        ("N.8", "8-dim type N model (the quartic hypersurface); anti-involution "
                "and tubular data are recorded, structure constants are not"),
        ("N.7-1", "7-dim type N model; derived-series dimensions obstruct any "
                  "admissible anti-involution"),
        ("N.7-2", "7-dim type N model"),
        ("N.6-1", "6-dim type N model, Cartan basis"),
        ("D.7", "7-dim type D model"),
        ("D.6-2", "6-dim type D model; its tubular row is stored verbatim and "
                  "flagged: the middle vector's final term '(a-1/3)' carries no "
                  "basis element in the source"),
        ("D.6-4", "6-dim type D model; derived-series dimensions obstruct any "
                  "admissible anti-involution"),
        ("III.6-2", "6-dim type III model; derived-series dimensions obstruct "
                    "any admissible anti-involution"),
    ]:
        add(CatalogEntry(label, "external structure-constant table", stub=True,
                         notes=note))
    entries["D.6-2"].tubular_rows = [TubularRow(
        "D.6-2", ("phi+", "phi-"),
        "a = {e1 - eps e3, e2 - tau e4 + (a-1/3), e5 + (3a+5)/(4(a-1)) e6}",
        None, 2, samples=[],
        provenance="tubular-realization table, D.6-2 row",
        unverifiable="middle vector is incomplete in the source (term '(a-1/3)' "
                     "has no attached basis element); stored verbatim")]

    # affine-symmetry dimension selectors for fixture-dependent rows
    def d7_phi1_dim(eps1, eps2, a):
        a = Fraction(a)
        if abs(a) < Fraction(3, 4):
            return 1 - Fraction(eps1 + eps2, 2)
        if abs(a) == Fraction(3, 4):
            return Fraction(3 - eps2, 2)
        return 1 + Fraction(eps1 - eps2, 2)

    entries["D.7"].notes += ("; affine-symmetry dimension for phi1^(e1,e2): "
                             "1-(e1+e2)/2 for |a|<3/4, 1+(e1-e2)/2 for a>3/4, "
                             "(3-e2)/2 for a=3/4")
    entries["D.7"].affine_dim_selector = d7_phi1_dim
    return entries


_CATALOG = None


def catalog() -> dict:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = build_catalog()
    return _CATALOG


def get_entry(label: str) -> CatalogEntry:
    c = catalog()
    if label not in c:
        raise KeyError(f"unknown model {label!r}; known: {sorted(c)}")
    return c[label]
