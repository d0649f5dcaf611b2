"""Guided solver for anti-involution ansatze.

The caller prescribes the shape of phi on (part of) the basis, with unknown
coefficients; the solver expands the involution conditions phi∘phi = id and
the anti-morphism conditions sigma_jk = [phi(e_j), phi(e_k)] - phi([e_j, e_k])
into polynomial equations over the unknowns, then repeatedly substitutes
unknowns that occur linearly with a provably invertible coefficient.  It ends
in a fully determined family, a contradiction (an equation reduces to a
nonzero constant), or an inconclusive state when only nonlinear equations
remain.

Unknown kinds: plain (a conjugate partner symbol is created), invertible
(nonzero; may be cancelled and inverted), unit (|u| = 1, conj(u) = 1/u) and
sign (u = ±1, real)."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import sympy
from sympy import I as _I

from .ilcmodels import ILCModel


@dataclass(frozen=True)
class Unknown:
    name: str
    invertible: bool = False
    unit: bool = False
    sign: bool = False

    @property
    def sym(self):
        return sympy.Symbol(self.name)

    @property
    def conj_name(self):
        if self.unit or self.sign:
            return None
        return self.name + "bar"


@dataclass
class AnsatzResult:
    status: str                      # 'family' | 'contradiction' | 'inconclusive'
    solved: dict                     # unknown name -> sympy expr (fully reduced)
    free: list                       # names of undetermined unknowns
    residuals: list                  # (eq_id, expr) still required to vanish
    trace: list                      # human-readable derivation steps
    assumed_nonzero: list            # cleared denominators beyond declared units
    images: dict | None = None       # final phi images (j -> coefficient list)


def unknown(name, **kw) -> Unknown:
    return Unknown(name, **kw)


class _Solver:
    def __init__(self, model: ILCModel, images: dict, unknowns, field_subs=None):
        self.model = model
        self.alg = model.algebra
        self.n = self.alg.dim
        self.unknowns = list(unknowns)
        byname = {}
        self.conj_map = {}
        self.inv_syms = []
        self.sign_syms = []
        self.all_syms = []
        for u in self.unknowns:
            s = u.sym
            byname[u.name] = u
            self.all_syms.append(s)
            if u.sign:
                self.sign_syms.append(s)
                self.conj_map[s] = s
                self.inv_syms.append(s)
            elif u.unit:
                self.conj_map[s] = 1 / s
                self.inv_syms.append(s)
            else:
                c = sympy.Symbol(u.conj_name)
                self.all_syms.append(c)
                self.conj_map[s] = c
                self.conj_map[c] = s
                if u.invertible:
                    self.inv_syms.extend([s, c])
        # field parameter conjugation
        for p in self.alg.field.params:
            ps = sympy.Symbol(p.name)
            self.conj_map[ps] = sympy.Symbol(p.name if p.real else p.conj)
        # the quadratic generator is a nonzero conjugation-fixed constant
        self.nonzero_syms = list(self.inv_syms)
        if self.alg.field.quad_ext:
            self.nonzero_syms.append(self.alg.field.r_symbol)
        self.field_subs = {sympy.Symbol(k): sympy.sympify(v)
                           for k, v in (field_subs or {}).items()}
        self.images = {j: {k: sympy.sympify(e) for k, e in img.items()}
                       for j, img in images.items()}
        self.subs = {}
        self.trace = []
        self.assumed_nonzero = set()

    # -- scalar helpers ---------------------------------------------------------

    def conj(self, e):
        e = sympy.sympify(e).subs(self.conj_map, simultaneous=True).subs(_I, -_I)
        return e

    def reduce_full(self, e):
        e = sympy.sympify(e)
        for _ in range(len(self.subs) + len(self.field_subs) + 2):
            e2 = e.subs(self.subs, simultaneous=True)
            e2 = e2.subs(self.field_subs, simultaneous=True)
            if e2 == e:
                break
            e = e2
        return sympy.cancel(sympy.together(e))

    def normalize_equation(self, e):
        """Returns the cleared, content-reduced polynomial form (0 == trivial)."""
        e = self.reduce_full(e)
        if e == 0:
            return sympy.Integer(0)
        num, den = sympy.fraction(e)
        num = sympy.expand(num)
        self._note_denominator(den)
        if self.alg.field.quad_ext:
            from .exactalg import _fold_r_expr
            num, _ = _fold_r_expr(self.alg.field, num)
        # reduce sign-symbol powers
        for s in self.sign_syms:
            if num.has(s):
                p = sympy.Poly(num, s)
                acc = sympy.Integer(0)
                for (deg,), coef in zip(p.monoms(), p.coeffs()):
                    acc += coef * (s if deg % 2 else 1)
                num = sympy.expand(acc)
        # cancel invertible monomial content
        for s in self.nonzero_syms:
            if num.has(s):
                p = sympy.Poly(num, s)
                mindeg = min(m[0] for m in p.monoms())
                if mindeg > 0:
                    num = sympy.expand(sympy.cancel(num / s ** mindeg))
        return num

    def _note_denominator(self, den):
        den = sympy.expand(den)
        if den.is_Number:
            return
        # factor out declared-invertible symbols; leftover factors are assumptions
        rest = den
        for s in self.nonzero_syms:
            while True:
                q = sympy.cancel(rest / s)
                qn, qd = sympy.fraction(q)
                if qd == 1:
                    rest = qn
                else:
                    break
        rest = sympy.expand(rest)
        if not rest.is_Number:
            self.assumed_nonzero.add(sympy.sstr(rest))

    # -- equation assembly --------------------------------------------------------

    def _phi_vec(self, coeffs):
        """phi applied to a coordinate vector of scalar-field coefficients
        (no unknowns): sum conj(c_m) * images[m]; None if an image is missing."""
        out = {}
        for m, c in enumerate(coeffs):
            cs = c.as_sympy() if hasattr(c, "as_sympy") else sympy.sympify(c)
            if cs == 0:
                continue
            if m not in self.images:
                return None
            for k, e in self.images[m].items():
                out[k] = out.get(k, 0) + self.conj(cs) * e
        return out

    def _bracket_images(self, j, k):
        """[phi(e_j), phi(e_k)] in coordinates (dict)."""
        X, Y = self.images[j], self.images[k]
        out = {}
        for (m, n), v in self.alg._c.items():
            xm, yn = X.get(m, 0), Y.get(n, 0)
            xn, ym = X.get(n, 0), Y.get(m, 0)
            coef = xm * yn - xn * ym
            if coef == 0:
                continue
            for t, c in enumerate(v):
                cs = c.as_sympy()
                if cs != 0:
                    out[t] = out.get(t, 0) + coef * cs
        return out

    def equations(self):
        eqs = []
        # sigma_jk for pairs with everything defined
        for j in range(self.n):
            if j not in self.images:
                continue
            for k in range(j + 1, self.n):
                if k not in self.images:
                    continue
                target = self.alg.bracket_basis(j, k)
                rhs = self._phi_vec(target)
                if rhs is None:
                    continue
                lhs = self._bracket_images(j, k)
                comps = set(lhs) | set(rhs)
                for t in sorted(comps):
                    eqs.append((f"sigma[{j+1},{k+1}]~e{t+1}",
                                lhs.get(t, 0) - rhs.get(t, 0)))
        # involution: phi(phi(e_j)) = e_j
        for j in sorted(self.images):
            img = self.images[j]
            out = {}
            ok = True
            for m, c in img.items():
                if m not in self.images:
                    ok = False
                    break
                for k, e in self.images[m].items():
                    out[k] = out.get(k, 0) + self.conj(c) * e
            if not ok:
                continue
            out[j] = out.get(j, 0) - 1
            for t in sorted(out):
                eqs.append((f"phi^2[e{j+1}]~e{t+1}", out[t]))
        return eqs

    # -- main loop ------------------------------------------------------------------

    def _provably_invertible(self, coef):
        """True when coef is a nonzero number times a monomial in declared
        invertible unknowns (and the quadratic generator)."""
        coef = sympy.expand(sympy.cancel(coef))
        if coef == 0:
            return False
        factors = sympy.Mul.make_args(coef)
        for f in factors:
            base, exp = f.as_base_exp()
            if base.is_Number or f.is_Number:
                continue
            if base in self.nonzero_syms and exp.is_Integer:
                continue
            return False
        return True

    def _try_solve(self, eqid, expr):
        syms = [s for s in self.all_syms if expr.has(s) and s not in self.subs]
        for x in syms:
            try:
                p = sympy.Poly(expr, x)
            except sympy.PolynomialError:
                continue
            if p.degree() != 1:
                continue
            alpha = p.nth(1)
            beta = p.nth(0)
            partner = self.conj_map.get(x)
            if isinstance(partner, sympy.Symbol) and partner != x:
                if beta.has(partner) or alpha.has(partner):
                    # reality/imaginarity patterns alpha*(x -+ xbar) are still
                    # conclusive: they pin the conjugate partner to +-x.
                    for sgn, tag in ((1, "real"), (-1, "imaginary")):
                        quot = sympy.cancel(expr / (x - sgn * partner))
                        qn, qd = sympy.fraction(quot)
                        if qd == 1 and self._provably_invertible(qn):
                            self._assign(partner, sgn * x,
                                         f"{eqid} ({x} is {tag})")
                            return True
                    continue
            if alpha.has(x):
                continue
            if not self._provably_invertible(alpha):
                continue
            val = sympy.cancel(-beta / alpha)
            self._assign(x, val, eqid)
            return True
        return False

    def _assign(self, x, val, eqid):
        self.subs[x] = val
        self.trace.append(f"{eqid}: {x} = {sympy.sstr(val)}")
        partner = self.conj_map.get(x)
        if isinstance(partner, sympy.Symbol) and partner != x and partner not in self.subs:
            pval = self.reduce_full(self.conj(val))
            if pval != partner:
                self.subs[partner] = pval

    def run(self) -> AnsatzResult:
        raw = self.equations()
        for _round in range(4 * len(self.all_syms) + 8):
            progressed = False
            contradiction = None
            pending = []
            for eqid, e in raw:
                ne = self.normalize_equation(e)
                if ne == 0:
                    continue
                if not any(ne.has(s) for s in self.all_syms):
                    if ne.is_Number or not ne.free_symbols:
                        contradiction = (eqid, ne)
                        break
                    pending.append((eqid, ne))
                    continue
                pending.append((eqid, ne))
            if contradiction:
                eqid, ne = contradiction
                self.trace.append(f"{eqid}: reduces to nonzero constant {ne}")
                return self._result("contradiction", pending)
            for eqid, ne in pending:
                if self._try_solve(eqid, ne):
                    progressed = True
                    break
                ce = self.normalize_equation(self.conj(ne))
                if ce != 0 and self._try_solve(eqid + "~conj", ce):
                    progressed = True
                    break
            if not progressed:
                residuals = [(eqid, ne) for eqid, ne in pending
                             if self.normalize_equation(ne) != 0]
                if residuals:
                    return self._result("inconclusive", residuals)
                return self._result("family", [])
        return self._result("inconclusive", [("loop-limit", sympy.Integer(1))])

    def _result(self, status, residuals):
        solved = {}
        for x, v in self.subs.items():
            solved[str(x)] = self.reduce_full(v)
        free = [u.name for u in self.unknowns if u.sym not in self.subs]
        images = None
        if status == "family":
            images = {}
            for j, img in self.images.items():
                images[j] = {k: self.reduce_full(e) for k, e in img.items()}
        return AnsatzResult(status, solved, free,
                            [(eqid, sympy.sstr(e)) for eqid, e in residuals],
                            list(self.trace), sorted(self.assumed_nonzero),
                            images)


def ansatz_solve(model: ILCModel, images: dict, unknowns, field_subs=None) -> AnsatzResult:
    """images: {basis index (0-based): {target index: sympy-able coefficient}}.

    Unknown coefficients must be declared through ``unknown(...)``; modulus-one
    unknowns with unit=True, sign unknowns with sign=True, nonzero ones with
    invertible=True.  ``field_subs`` may identify field parameters (e.g. the
    conjugate of a parameter under a reality constraint)."""
    return _Solver(model, images, unknowns, field_subs).run()
