"""Exact scalars over a field tower Q -> Q(i) -> Q(i)(params) -> quadratic ext,
and exact dense linear algebra on top of them.

A scalar is stored as a canonical fraction num/den where num is an expanded
polynomial in the parameters, the imaginary unit and the quadratic generator
(degree <= 1 in i and in the generator), and den is a polynomial in the
parameters only.  Equality is canonical-form comparison of the difference.

Conjugation maps i -> -i, each parameter to its declared conjugate (itself
when flagged real) and fixes the quadratic generator; the element under the
square root must therefore be conjugation-fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy import I as _I


class FieldError(Exception):
    pass


class DivisionByZero(FieldError):
    pass


class IncompatibleFields(FieldError):
    pass


class MissingAssignment(FieldError):
    pass


class ConjugacyViolation(FieldError):
    pass


class NegativeDiscriminantOnRealPath(FieldError):
    pass


class NotSymmetric(FieldError):
    pass


class NotRealAfterAssignment(FieldError):
    pass


class ScalarParseError(FieldError):
    pass


_SYMCACHE: dict[str, sympy.Symbol] = {}


def _sym(name: str) -> sympy.Symbol:
    s = _SYMCACHE.get(name)
    if s is None:
        s = sympy.Symbol(name)
        _SYMCACHE[name] = s
    return s


@dataclass(frozen=True)
class ParamSpec:
    """A formal parameter of the field.

    ``conj`` names the parameter acting as its conjugate; ``real`` means the
    parameter is its own conjugate.  Exactly one of the two must be set for a
    non-real parameter pair (each member naming the other).
    """

    name: str
    conj: str | None = None
    real: bool = False


class FieldDescriptor:
    def __init__(self, has_i: bool = False, params: tuple = (),
                 quad_ext: tuple | None = None):
        self.has_i = has_i
        self.params = tuple(params)
        names = [p.name for p in self.params]
        if len(set(names)) != len(names):
            raise FieldError("parameter symbols must be pairwise distinct")
        by_name = {p.name: p for p in self.params}
        for p in self.params:
            if p.real and p.conj is not None:
                raise FieldError(f"parameter {p.name}: real and conj are exclusive")
            if not p.real:
                if p.conj is None:
                    raise FieldError(f"parameter {p.name}: needs conj partner or real flag")
                q = by_name.get(p.conj)
                if q is None:
                    raise FieldError(f"conjugate {p.conj} of {p.name} is not a declared parameter")
                if q.real:
                    if q.name != p.name:
                        raise FieldError(f"conj(conj({p.name})) != {p.name}")
                elif q.conj != p.name:
                    raise FieldError(f"conj(conj({p.name})) != {p.name}")
        self._by_name = by_name
        # quad_ext: (generator name, rho0) with rho0 a Scalar of the sub-tower
        self.quad_ext = None
        self._rho_num = None
        self._rho_den = None
        if quad_ext is not None:
            rname, rho0 = quad_ext
            if rname in by_name:
                raise FieldError("quadratic generator clashes with a parameter name")
            sub = FieldDescriptor(has_i=has_i, params=self.params, quad_ext=None)
            rho0 = sub.scalar(rho0)
            if rho0.is_zero():
                raise FieldError("rho0 of the quadratic extension must be nonzero")
            if rho0 != rho0.conj():
                raise FieldError("rho0 must be fixed by conjugation")
            self.quad_ext = (rname, rho0)
            self._rho_num = rho0._num
            self._rho_den = rho0._den
        self._conjmap = {}
        for p in self.params:
            self._conjmap[_sym(p.name)] = _sym(p.name if p.real else p.conj)

    # -- construction helpers -------------------------------------------------

    @property
    def r_symbol(self):
        return _sym(self.quad_ext[0]) if self.quad_ext else None

    def param_symbols(self):
        return [_sym(p.name) for p in self.params]

    def zero(self) -> "Scalar":
        return Scalar(self, sympy.Integer(0), sympy.Integer(1), _canon=False)

    def one(self) -> "Scalar":
        return Scalar(self, sympy.Integer(1), sympy.Integer(1), _canon=False)

    def i(self) -> "Scalar":
        if not self.has_i:
            raise FieldError("field has no imaginary unit")
        return Scalar(self, _I, sympy.Integer(1), _canon=False)

    def r(self) -> "Scalar":
        if not self.quad_ext:
            raise FieldError("field has no quadratic extension")
        return Scalar(self, self.r_symbol, sympy.Integer(1), _canon=False)

    def param(self, name: str) -> "Scalar":
        if name not in self._by_name:
            raise FieldError(f"unknown parameter {name}")
        return Scalar(self, _sym(name), sympy.Integer(1), _canon=False)

    def scalar(self, x) -> "Scalar":
        """Coerce ints, Fractions, strings (literal grammar) or Scalars."""
        if isinstance(x, Scalar):
            if x.field is self:
                return x
            return Scalar(self, x._num, x._den)
        if isinstance(x, bool):
            raise FieldError("bool is not a scalar")
        if isinstance(x, int):
            return Scalar(self, sympy.Integer(x), sympy.Integer(1), _canon=False)
        if isinstance(x, Fraction):
            return Scalar(self, sympy.Integer(x.numerator), sympy.Integer(x.denominator))
        if isinstance(x, str):
            return parse_scalar(self, x)
        if isinstance(x, sympy.Expr):
            n, d = sympy.fraction(sympy.together(x))
            return Scalar(self, n, d)
        raise FieldError(f"cannot coerce {x!r} to a scalar")

    def compatible(self, other: "FieldDescriptor") -> bool:
        if self is other:
            return True
        return (self.has_i == other.has_i and self.params == other.params
                and ((self.quad_ext is None) == (other.quad_ext is None))
                and (self.quad_ext is None or
                     (self.quad_ext[0] == other.quad_ext[0]
                      and self._rho_num == other._rho_num
                      and self._rho_den == other._rho_den)))

    def __repr__(self):
        parts = []
        if self.has_i:
            parts.append("i")
        parts += [p.name for p in self.params]
        if self.quad_ext:
            parts.append(f"{self.quad_ext[0]}^2={self.quad_ext[1]}")
        return "Field(" + ", ".join(parts) + ")"


QQ = FieldDescriptor()
QQ_I = FieldDescriptor(has_i=True)


class Scalar:
    """Element of the field tower, kept in canonical fraction form."""

    __slots__ = ("field", "_num", "_den")

    def __init__(self, field: FieldDescriptor, num, den=sympy.Integer(1), _canon=True):
        self.field = field
        if _canon:
            num, den = _canonicalize(field, num, den)
        self._num = num
        self._den = den

    # -- canonical data --------------------------------------------------------

    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    def as_sympy(self) -> sympy.Expr:
        return self._num / self._den

    def is_zero(self) -> bool:
        return self._num == 0

    def is_one(self) -> bool:
        return self._num == self._den

    def is_rational(self) -> bool:
        return self._num.is_Rational and self._den.is_Rational

    def free_params(self) -> set:
        syms = self._num.free_symbols | self._den.free_symbols
        rs = self.field.r_symbol
        return {s for s in syms if s is not rs}

    def has_r(self) -> bool:
        rs = self.field.r_symbol
        return rs is not None and (self._num.has(rs) or self._den.has(rs))

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            return self.field.scalar(other)
        if other.field is not self.field and not self.field.compatible(other.field):
            raise IncompatibleFields(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Scalar(self.field,
                      self._num * other._den + other._num * self._den,
                      self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, -self._num, self._den, _canon=False)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + self._check(other)

    def __mul__(self, other):
        other = self._check(other)
        return Scalar(self.field, self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        # 1/(num/den) = den/num; then clear r and i from the new denominator.
        return Scalar(self.field, self._den, self._num)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inv()

    def __rtruediv__(self, other):
        return self._check(other) * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise FieldError("only integer powers")
        if k < 0:
            return self.inv() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def conj(self) -> "Scalar":
        sub = dict(self.field._conjmap)
        sub[_I] = -_I
        num = self._num.subs(sub, simultaneous=True) if sub else self._num
        den = self._den.subs(sub, simultaneous=True) if sub else self._den
        return Scalar(self.field, num, den)

    def subs(self, mapping: dict) -> "Scalar":
        """Substitute parameters (by name) with scalars of the same field."""
        sub = {}
        for name, val in mapping.items():
            sub[_sym(name)] = self.field.scalar(val).as_sympy()
        if not sub:
            return self
        return Scalar(self.field,
                      self._num.subs(sub, simultaneous=True),
                      self._den.subs(sub, simultaneous=True))

    def __eq__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = self._check(other)
        return sympy.expand(self._num * other._den - other._num * self._den) == 0

    def __hash__(self):
        return hash((self._num, self._den))

    def is_conj_real(self) -> bool:
        return self == self.conj()

    def real_sign(self) -> int:
        """Sign of a conjugation-real element of the form x + y*r with x, y
        rational and rho0 a positive rational (r taken as the positive root)."""
        num, den = self._num, self._den
        rs = self.field.r_symbol
        if not den.is_Rational:
            raise NotRealAfterAssignment(f"non-constant denominator {den}")
        dsign = 1 if den > 0 else -1

        def _split(e):
            if rs is not None and e.has(rs):
                p = sympy.Poly(e, rs)
                if p.degree() > 1:
                    raise FieldError("unreduced quadratic generator")
                x = p.nth(0)
                ycoef = p.nth(1)
            else:
                x, ycoef = e, sympy.Integer(0)
            if not (x.is_Rational and ycoef.is_Rational):
                raise NotRealAfterAssignment(f"not a real constant: {e}")
            return x, ycoef

        x, y = _split(num)
        if y == 0:
            if x == 0:
                return 0
            return dsign * (1 if x > 0 else -1)
        rho = self.field.quad_ext[1]
        if not rho.is_rational():
            raise NotRealAfterAssignment("sign undecidable: symbolic rho0")
        rhov = sympy.Rational(rho._num) / sympy.Rational(rho._den)
        if rhov <= 0:
            raise NotRealAfterAssignment("quadratic generator is not real")
        if x == 0:
            return dsign * (1 if y > 0 else -1)
        if x > 0 and y > 0:
            return dsign
        if x < 0 and y < 0:
            return -dsign
        big = x * x - y * y * rhov  # sign of x + y*sqrt(rhov), mixed signs
        if big == 0:
            return 0
        s = 1 if big > 0 else -1
        return dsign * s * (1 if x > 0 else -1)

    def __repr__(self):
        return scalar_str(self)


# -- canonicalization ----------------------------------------------------------


def _fold_r_expr(field: FieldDescriptor, e):
    """Reduce powers of the quadratic generator in e to degree <= 1.

    Returns (e2, mult) with e == e2 / mult and mult a power of the denominator
    of rho0 (so mult is free of i and of the generator)."""
    rs = field.r_symbol
    one = sympy.Integer(1)
    if rs is None or not e.has(rs):
        return sympy.expand(e), one
    e = sympy.expand(e)
    p = sympy.Poly(e, rs)
    rho_n, rho_d = field._rho_num, field._rho_den
    kmax = max(m[0] // 2 for m in p.monoms())
    if kmax == 0:
        return e, one
    out = sympy.Integer(0)
    for (deg,), coef in zip(p.monoms(), p.coeffs()):
        k, rem = divmod(deg, 2)
        term = coef * rho_n ** k * rho_d ** (kmax - k)
        if rem:
            term *= rs
        out += term
    return sympy.expand(out), rho_d ** kmax


def _canonicalize(field: FieldDescriptor, num, den):
    num = sympy.expand(num)
    den = sympy.expand(den)
    if den == 0:
        raise DivisionByZero("zero denominator")
    if num == 0:
        return sympy.Integer(0), sympy.Integer(1)
    rs = field.r_symbol
    num, dn = _fold_r_expr(field, num)
    den, dd = _fold_r_expr(field, den)
    num = sympy.expand(num * dd)
    den = sympy.expand(den * dn)
    if rs is not None and den.has(rs):
        conj_r = den.subs(rs, -rs)
        num = num * conj_r
        den = den * conj_r
        num, dn = _fold_r_expr(field, num)
        den, dd = _fold_r_expr(field, den)
        num = sympy.expand(num * dd)
        den = sympy.expand(den * dn)
    if den.has(_I):
        conj_i = den.subs(_I, -_I)
        num = sympy.expand(num * conj_i)
        den = sympy.expand(den * conj_i)
    q = sympy.cancel(num / den)
    num, den = sympy.fraction(q)
    num = sympy.expand(num)
    den = sympy.expand(den)
    if den.has(_I) or (rs is not None and den.has(rs)):  # pragma: no cover
        raise FieldError(f"canonicalization failed to clear denominator {den}")
    return num, den


# -- literal grammar: parse and print ------------------------------------------


class _Tok:
    def __init__(self, kind, val):
        self.kind, self.val = kind, val

    def __repr__(self):
        return f"{self.kind}:{self.val}"


def _tokenize(text: str):
    toks = []
    k = 0
    while k < len(text):
        ch = text[k]
        if ch.isspace():
            k += 1
            continue
        if ch.isdigit():
            j = k
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(text[k:j])))
            k = j
            continue
        if ch.isalpha() or ch == "_":
            j = k
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("ident", text[k:j]))
            k = j
            continue
        if ch in "+-*/()":
            toks.append(_Tok(ch, ch))
            k += 1
            continue
        raise ScalarParseError(f"unexpected character {ch!r} at column {k}")
    toks.append(_Tok("end", None))
    return toks


class _ScalarParser:
    def __init__(self, field: FieldDescriptor, text: str):
        self.field = field
        self.toks = _tokenize(text)
        self.pos = 0
        self.text = text

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        t = self.toks[self.pos]
        if kind is not None and t.kind != kind:
            raise ScalarParseError(f"expected {kind}, got {t.kind} in {self.text!r}")
        self.pos += 1
        return t

    def parse(self) -> Scalar:
        v = self.expr()
        if self.peek().kind != "end":
            raise ScalarParseError(f"trailing input in {self.text!r}")
        return v

    def expr(self) -> Scalar:
        v = self.term()
        while self.peek().kind in "+-":
            op = self.take().kind
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self) -> Scalar:
        v = self.factor()
        while self.peek().kind in "*/":
            op = self.take().kind
            w = self.factor()
            v = v * w if op == "*" else v / w
        return v

    def factor(self) -> Scalar:
        t = self.peek()
        if t.kind == "-":
            self.take()
            return -self.factor()
        if t.kind == "+":
            self.take()
            return self.factor()
        if t.kind == "int":
            self.take()
            return self.field.scalar(t.val)
        if t.kind == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        if t.kind == "ident":
            self.take()
            if t.val == "i":
                return self.field.i()
            if t.val == "sqrt":
                self.take("(")
                q = self.expr()
                self.take(")")
                if not self.field.quad_ext:
                    raise ScalarParseError("sqrt() used but the field has no quadratic extension")
                if not (q == self.field.quad_ext[1]):
                    raise ScalarParseError(
                        f"sqrt argument {q!r} does not match the declared extension")
                return self.field.r()
            return self.field.param(t.val)
        raise ScalarParseError(f"unexpected token {t.kind} in {self.text!r}")


def parse_scalar(field: FieldDescriptor, text: str) -> Scalar:
    return _ScalarParser(field, text).parse()


def _rat_str(q: sympy.Rational) -> str:
    return str(q.p) if q.q == 1 else f"{q.p}/{q.q}"


def _coeff_str(c: sympy.Expr) -> str:
    """Gaussian rational coefficient as literal text."""
    re, im = c.as_real_imag()
    if im == 0:
        return _rat_str(sympy.Rational(re))
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{_rat_str(sympy.Rational(im))}*i"
    s_im = "i" if im == 1 else ("-i" if im == -1 else f"{_rat_str(sympy.Rational(im))}*i")
    joiner = "+" if not s_im.startswith("-") else ""
    return f"({_rat_str(sympy.Rational(re))}{joiner}{s_im})"


def _poly_str(field: FieldDescriptor, e: sympy.Expr) -> str:
    gens = field.param_symbols()
    rs = field.r_symbol
    if rs is not None:
        gens = gens + [rs]
    if not gens:
        return _coeff_str(e)
    p = sympy.Poly(e, *gens)
    terms = sorted(zip(p.monoms(), p.coeffs()), reverse=True)
    parts = []
    for mono, coef in terms:
        factors = []
        for g, k in zip(gens, mono):
            name = g.name
            if rs is not None and g is rs:
                name = f"sqrt({_scalar_str_rho(field)})"
            factors.extend([name] * k)
        cs = _coeff_str(coef)
        if factors:
            if cs == "1":
                parts.append("*".join(factors))
            elif cs == "-1":
                parts.append("-" + "*".join(factors))
            else:
                parts.append(cs + "*" + "*".join(factors))
        else:
            parts.append(cs)
    return " + ".join(parts) if parts else "0"


def _scalar_str_rho(field: FieldDescriptor) -> str:
    rho = field.quad_ext[1]
    if not rho.is_rational():
        raise FieldError("cannot print sqrt of a non-rational extension element")
    q = sympy.Rational(rho._num) / sympy.Rational(rho._den)
    return _rat_str(q)


def scalar_str(s: Scalar) -> str:
    """Deterministic literal-grammar rendering of the canonical form."""
    n = _poly_str(s.field, s._num)
    if s._den == 1:
        return n
    d = _poly_str(s.field, s._den)
    return f"({n})/({d})"


# -- specialization ------------------------------------------------------------


def _value_as_scalar(target: FieldDescriptor, v):
    if isinstance(v, Scalar):
        return target.scalar(v.as_sympy())
    if isinstance(v, (int, Fraction)):
        return target.scalar(v)
    if isinstance(v, str):
        return parse_scalar(target, v)
    raise MissingAssignment(f"cannot use {v!r} as an exact parameter value")


def specialize(x, assignment: dict, float_mode: bool = False):
    """Evaluate a Scalar or ExactMatrix at a parameter assignment.

    Exact path: values are Gaussian rationals (ints, Fractions, 'i'-bearing
    literal strings, Scalars).  The declared conjugate of every parameter must
    be assigned the conjugate value.  The quadratic generator may be assigned
    explicitly (value v with v^2 = rho0) or is resolved to a rational root when
    one exists; otherwise the exact path fails and the float path takes over
    only if requested.

    Float path: returns complex numbers.
    """
    if isinstance(x, ExactMatrix):
        data = [[specialize(e, assignment, float_mode) for e in row] for row in x.rows()]
        if float_mode:
            return data
        return ExactMatrix.from_scalars(data)
    if not isinstance(x, Scalar):
        raise FieldError("specialize expects a Scalar or ExactMatrix")
    f = x.field
    if float_mode:
        sub = {}
        for p in f.params:
            if p.name not in assignment:
                if _sym(p.name) in (x._num.free_symbols | x._den.free_symbols):
                    raise MissingAssignment(f"no value for parameter {p.name}")
                continue
            sub[_sym(p.name)] = complex(assignment[p.name])
        _check_conj_pairs(f, assignment, exact=False)
        if f.quad_ext:
            rname, rho = f.quad_ext
            if rname in assignment:
                rv = complex(assignment[rname])
            else:
                rho_v = complex(rho.as_sympy().subs(sub)) if rho.free_params() else complex(rho.as_sympy())
                rv = complex(sympy.sqrt(sympy.Float(rho_v.real)) if rho_v.imag == 0 and rho_v.real >= 0
                             else complex(rho_v) ** 0.5)
            sub[f.r_symbol] = rv
        val = (x._num.subs(sub) / x._den.subs(sub))
        return complex(val)

    target = QQ_I if f.has_i or any(not p.real for p in f.params) else QQ
    sub = {}
    for p in f.params:
        if p.name not in assignment:
            if _sym(p.name) in (x._num.free_symbols | x._den.free_symbols):
                raise MissingAssignment(f"no value for parameter {p.name}")
            continue
        sub[_sym(p.name)] = _value_as_scalar(target, assignment[p.name]).as_sympy()
    _check_conj_pairs(f, assignment, exact=True)
    if f.quad_ext:
        rname, rho = f.quad_ext
        rho_val = sympy.cancel(rho.as_sympy().subs(sub))
        if rname in assignment:
            rv = _value_as_scalar(target, assignment[rname]).as_sympy()
            if sympy.cancel(rv * rv - rho_val) != 0:
                raise ConjugacyViolation(
                    f"assigned root {rv} does not square to {rho_val}")
        else:
            rv = _exact_sqrt(rho_val)
            if rv is None:
                raise NegativeDiscriminantOnRealPath(
                    f"{rho_val} has no rational square root; assign {rname} explicitly "
                    "or use the float path")
        sub[f.r_symbol] = rv
    val = x.as_sympy().subs(sub)
    return target.scalar(val)


def _exact_sqrt(q: sympy.Expr):
    if not q.is_Rational:
        return None
    if q < 0:
        return None
    num, den = sympy.Integer(q.p), sympy.Integer(q.q)
    rn = sympy.sqrt(num)
    rd = sympy.sqrt(den)
    if rn.is_Integer and rd.is_Integer:
        return sympy.Rational(rn, rd)
    return None


def _check_conj_pairs(f: FieldDescriptor, assignment: dict, exact: bool):
    for p in f.params:
        if p.real:
            if p.name in assignment:
                v = assignment[p.name]
                if exact:
                    sv = _value_as_scalar(QQ_I, v)
                    if sv != sv.conj():
                        raise ConjugacyViolation(f"parameter {p.name} is declared real")
                else:
                    if abs(complex(v).imag) > 1e-12 * (1 + abs(complex(v))):
                        raise ConjugacyViolation(f"parameter {p.name} is declared real")
            continue
        if p.name in assignment and p.conj in assignment:
            if exact:
                v = _value_as_scalar(QQ_I, assignment[p.name])
                w = _value_as_scalar(QQ_I, assignment[p.conj])
                if w != v.conj():
                    raise ConjugacyViolation(
                        f"value of {p.conj} must be the conjugate of {p.name}")
            else:
                v, w = complex(assignment[p.name]), complex(assignment[p.conj])
                if abs(w - v.conjugate()) > 1e-12 * (1 + abs(v)):
                    raise ConjugacyViolation(
                        f"value of {p.conj} must be the conjugate of {p.name}")


def conjugate_assignment(field: FieldDescriptor, assignment: dict) -> dict:
    """Complete an assignment with the implied values of conjugate parameters."""
    out = dict(assignment)
    for p in field.params:
        if p.real or p.conj is None:
            continue
        if p.name in out and p.conj not in out:
            v = _value_as_scalar(QQ_I, out[p.name])
            out[p.conj] = v.conj()
    return out


# -- exact matrices ------------------------------------------------------------


class ExactMatrix:
    def __init__(self, field: FieldDescriptor, entries):
        self.field = field
        self._e = [[field.scalar(x) for x in row] for row in entries]
        if self._e:
            w = len(self._e[0])
            if any(len(r) != w for r in self._e):
                raise FieldError("ragged matrix")

    @staticmethod
    def from_scalars(entries):
        if not entries or not entries[0]:
            raise FieldError("empty matrix")
        return ExactMatrix(entries[0][0].field, entries)

    @staticmethod
    def identity(field: FieldDescriptor, n: int) -> "ExactMatrix":
        return ExactMatrix(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(field: FieldDescriptor, n: int, m: int) -> "ExactMatrix":
        return ExactMatrix(field, [[0] * m for _ in range(n)])

    @property
    def nrows(self):
        return len(self._e)

    @property
    def ncols(self):
        return len(self._e[0]) if self._e else 0

    def rows(self):
        return [list(r) for r in self._e]

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def col(self, j):
        return [r[j] for r in self._e]

    def row(self, i):
        return list(self._e[i])

    def transpose(self):
        return ExactMatrix(self.field, [[self._e[i][j] for i in range(self.nrows)]
                                        for j in range(self.ncols)])

    def conj(self):
        return ExactMatrix(self.field, [[x.conj() for x in row] for row in self._e])

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return ExactMatrix(self.field, [[x * other for x in row] for row in self._e])
        if self.ncols != other.nrows:
            raise FieldError("dimension mismatch in matrix product")
        z = self.field.zero()
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                s = z
                for k in range(self.ncols):
                    s = s + self._e[i][k] * other._e[k][j]
                row.append(s)
            out.append(row)
        return ExactMatrix(self.field, out)

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise FieldError("dimension mismatch in matrix sum")
        return ExactMatrix(self.field, [[self._e[i][j] + other._e[i][j]
                                         for j in range(self.ncols)] for i in range(self.nrows)])

    def __sub__(self, other):
        return self + (other * self.field.scalar(-1))

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return all(self._e[i][j] == other._e[i][j]
                   for i in range(self.nrows) for j in range(self.ncols))

    def apply_vector(self, v):
        """Matrix times a coordinate vector (list of scalars)."""
        if len(v) != self.ncols:
            raise FieldError("dimension mismatch")
        out = []
        for i in range(self.nrows):
            s = self.field.zero()
            for k in range(self.ncols):
                s = s + self._e[i][k] * v[k]
            out.append(s)
        return out

    def is_zero(self):
        return all(x.is_zero() for row in self._e for x in row)

    def to_complex(self, assignment=None):
        import numpy as np
        a = assignment or {}
        return np.array([[specialize(x, a, float_mode=True) for x in row]
                         for row in self._e], dtype=complex)

    def inverse(self) -> "ExactMatrix":
        if self.nrows != self.ncols:
            raise FieldError("inverse of a non-square matrix")
        sol = linear_solve(self, ExactMatrix.identity(self.field, self.nrows))
        if not sol.consistent or sol.rank < self.nrows:
            raise FieldError("singular matrix")
        return sol.particular

    def __repr__(self):
        return "ExactMatrix([" + "; ".join(
            ", ".join(scalar_str(x) for x in row) for row in self._e) + "])"


@dataclass
class LinearSolution:
    consistent: bool
    rank: int
    particular: ExactMatrix | None
    kernel: list  # list of coordinate vectors (lists of Scalar)


def _rref(field, rows, width):
    """In-place reduced row echelon form; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(width):
        pr = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [rows[i][j] - f * rows[r][j] for j in range(len(rows[i]))]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rref(mat: ExactMatrix):
    rows = [list(r) for r in mat._e]
    pivots = _rref(mat.field, rows, mat.ncols)
    return ExactMatrix(mat.field, rows), pivots


def kernel_basis(mat: ExactMatrix) -> list:
    """Exact basis of the right kernel."""
    field = mat.field
    red, pivots = rref(mat)
    n = mat.ncols
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for fcol in free:
        v = [field.zero()] * n
        v[fcol] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = -red[r, fcol]
        basis.append(v)
    return basis


def rank(mat: ExactMatrix) -> int:
    return len(rref(mat)[1])


def linear_solve(A: ExactMatrix, b: ExactMatrix) -> LinearSolution:
    """Solve A x = b exactly; returns particular solution, kernel and rank.

    b may have several columns; inconsistency is reported, not raised.
    """
    if b.nrows != A.nrows:
        raise FieldError("dimension mismatch between A and b")
    field = A.field
    n, m, k = A.nrows, A.ncols, b.ncols
    rows = [A.row(i) + b.row(i) for i in range(n)]
    pivots = _rref(field, rows, m)  # pivots restricted to the A-block
    rnk = len(pivots)
    # consistency: rows with zero A-part must have zero b-part
    for i in range(rnk, n):
        if any(not rows[i][m + t].is_zero() for t in range(k)):
            return LinearSolution(False, rnk, None, kernel_basis(A))
    part = [[field.zero()] * k for _ in range(m)]
    for r, pc in enumerate(pivots):
        for t in range(k):
            part[pc][t] = rows[r][m + t]
    return LinearSolution(True, rnk, ExactMatrix(field, part), kernel_basis(A))


def signature(S: ExactMatrix, assignment: dict | None = None):
    """Inertia (p, q, z) of a symmetric matrix, exactly.

    Entries must be conjugation-real after specialization (rationals, or
    rational combinations of a real quadratic generator)."""
    if S.nrows != S.ncols:
        raise NotSymmetric("matrix is not square")
    if assignment is not None:
        S = specialize(S, assignment)
    n = S.nrows
    field = S.field
    M = [list(S.row(i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if not (M[i][j] == M[j][i]):
                raise NotSymmetric(f"entry ({i},{j}) differs from ({j},{i})")
            if not M[i][j].is_conj_real():
                raise NotRealAfterAssignment(f"entry ({i},{j}) = {M[i][j]} is not real")
    p = q = z = 0
    size = n
    # congruence diagonalization
    start = 0
    while start < size:
        # find usable pivot
        piv = None
        for i in range(start, size):
            if not M[i][i].is_zero():
                piv = i
                break
        if piv is None:
            # try symmetric completion: find nonzero off-diagonal
            done = True
            for i in range(start, size):
                for j in range(i + 1, size):
                    if not M[i][j].is_zero():
                        # row/col addition keeps symmetry, creates diagonal entry
                        for t in range(size):
                            M[i][t] = M[i][t] + M[j][t]
                        for t in range(size):
                            M[t][i] = M[t][i] + M[t][j]
                        done = False
                        break
                if not done:
                    break
            if done:
                z += size - start
                break
            continue
        if piv != start:
            M[piv], M[start] = M[start], M[piv]
            for t in range(size):
                M[t][piv], M[t][start] = M[t][start], M[t][piv]
        d = M[start][start]
        s = d.real_sign()
        if s > 0:
            p += 1
        elif s < 0:
            q += 1
        else:  # pragma: no cover - pivot chosen nonzero
            z += 1
        factors = [M[i][start] / d for i in range(start + 1, size)]
        for i in range(start + 1, size):
            f = factors[i - start - 1]
            if not f.is_zero():
                for t in range(size):
                    M[i][t] = M[i][t] - f * M[start][t]
        for j in range(start + 1, size):
            f = factors[j - start - 1]
            if not f.is_zero():
                for t in range(size):
                    M[t][j] = M[t][j] - f * M[t][start]
        start += 1
    return (p, q, z)
