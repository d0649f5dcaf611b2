"""Line-oriented ingestion format for externally supplied models.

    model <label>
    dim <n>
    param <sym> [conj=<sym>|real] [constraint "<text>"]
    quadext <r> = <scalar-expr>
    bracket e<i> e<j> = (<scalar>) e<k> [+ (<scalar>) e<m> ...]
    k = e<i> ...
    e = e<i> ...
    v = e<i> ...
    antiinv <name> [when "<constraint>"]: e<i> -> (<scalar>) e<j> [+ ...] ; ...
    tubular <name> [dim <d>]: <vector>; <vector>; <vector> [with <antiinv>]
    hypersurface <label>: F = <expr>
    graph u = <expr-in-x-y>            (tube sampling rule)
    graph v = <expr-in-z1-z1b>         (translation-invariant sampling rule)
    field <name> = <expr> dz1 + <expr> dz2 + <expr> dw
    domain <var> in [lo, hi]
    # comment

Constraint texts use: real(p), imag(p), nonzero(p), eq(p, <scalar-expr>),
joined with ' and '; conj(<expr>) is allowed inside eq.  Serialization
reproduces this grammar bit-exactly, so serialize(load(text)) == text for
files written by the serializer."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import sympy

from .exactalg import (ExactMatrix, FieldDescriptor, FieldError, ParamSpec,
                       Scalar, parse_scalar, scalar_str)
from .ilcmodels import CatalogEntry, ILCModel, ParamConstraint, validate_ilc
from .liealg import LieAlgebra
from .realforms import AntiInvolution


class IngestSyntaxError(FieldError):
    def __init__(self, msg, line_no, line=""):
        super().__init__(f"line {line_no}: {msg}" + (f" | {line}" if line else ""))
        self.line_no = line_no


class ValidationFailure(FieldError):
    def __init__(self, label, violations):
        super().__init__(f"{label}: invalid model: {violations}")
        self.violations = violations


@dataclass
class ParsedTubular:
    name: str
    vectors: list                # list of coordinate vectors (Scalar lists)
    with_antiinv: str | None
    expected_dim: int | None


@dataclass
class ParsedAnalytic:
    label: str
    F_text: str
    graph_kind: str | None = None    # 'u' (tube) or 'v' (translation-invariant)
    graph_text: str | None = None
    fields: list = dc_field(default_factory=list)   # (name, (c1, c2, c3) texts)
    domains: list = dc_field(default_factory=list)  # (var, lo, hi)


@dataclass
class ParsedModel:
    label: str
    dim: int = 0
    field: FieldDescriptor | None = None
    params: list = dc_field(default_factory=list)   # (name, kind, constraint|None)
    quadext: tuple | None = None                    # (rname, Scalar)
    brackets: dict = dc_field(default_factory=dict) # (i,j) -> Scalar vector
    k_idx: list | None = None
    e_idx: list | None = None
    v_idx: list | None = None
    antiinvs: dict = dc_field(default_factory=dict) # name -> (when, columns)
    tubulars: list = dc_field(default_factory=list)
    analytic: list = dc_field(default_factory=list)


def _split_top(text, sep):
    """Split on sep at paren depth zero."""
    parts = []
    depth = 0
    cur = []
    k = 0
    while k < len(text):
        ch = text[k]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text.startswith(sep, k):
            parts.append("".join(cur))
            cur = []
            k += len(sep)
            continue
        cur.append(ch)
        k += 1
    parts.append("".join(cur))
    return parts


def _parse_terms(field, text, dim, line_no, line):
    """'(<scalar>) e<k> + ...' -> coordinate vector."""
    vec = [field.zero()] * dim
    for term in _split_top(text.strip(), "+"):
        term = term.strip()
        if not term or term == "0":
            continue
        pos = term.rfind("e")
        if pos < 0:
            raise IngestSyntaxError(f"term {term!r} has no basis element",
                                    line_no, line)
        idx_txt = term[pos + 1:].strip()
        if not idx_txt.isdigit():
            raise IngestSyntaxError(f"bad basis index in term {term!r}",
                                    line_no, line)
        k = int(idx_txt)
        if not (1 <= k <= dim):
            raise IngestSyntaxError(f"basis element e{k} out of range 1..{dim}",
                                    line_no, line)
        coef_txt = term[:pos].strip()
        coef = field.one() if not coef_txt else parse_scalar(field, coef_txt)
        vec[k - 1] = vec[k - 1] + coef
    return vec


def _basis_index(tok, dim, line_no, line):
    if not tok.startswith("e") or not tok[1:].isdigit():
        raise IngestSyntaxError(f"expected a basis element, got {tok!r}",
                                line_no, line)
    k = int(tok[1:])
    if not (1 <= k <= dim):
        raise IngestSyntaxError(f"basis element {tok} out of range", line_no, line)
    return k - 1


def parse_model_text(text: str) -> ParsedModel:
    lines = text.splitlines()
    parsed = None
    cur_analytic = None
    # first pass: field data
    params = []
    quad = None
    dim = 0
    label = None
    for ln, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        toks = line.split()
        if toks[0] == "model":
            if label is not None:
                raise IngestSyntaxError("duplicate model line", ln, line)
            label = line.split(None, 1)[1].strip()
        elif toks[0] == "dim":
            dim = int(toks[1])
        elif toks[0] == "param":
            name = toks[1]
            kind = "plain"
            constraint = None
            rest = line.split(None, 2)[2] if len(toks) > 2 else ""
            if "conj=" in rest:
                kind = "conj=" + rest.split("conj=", 1)[1].split()[0]
            elif rest.strip().startswith("real"):
                kind = "real"
            if 'constraint "' in line:
                constraint = line.split('constraint "', 1)[1].rsplit('"', 1)[0]
            params.append((name, kind, constraint))
    if label is None:
        raise IngestSyntaxError("missing 'model' line", 1)
    if dim <= 0:
        raise IngestSyntaxError("missing or bad 'dim' line", 1)
    specs = []
    for name, kind, _c in params:
        if kind == "real":
            specs.append(ParamSpec(name, real=True))
        elif kind.startswith("conj="):
            specs.append(ParamSpec(name, conj=kind[5:]))
        else:
            specs.append(ParamSpec(name, conj=name + "bar"))
            specs.append(ParamSpec(name + "bar", conj=name))
    # quadext needs the parameter field first
    base = FieldDescriptor(has_i=True, params=tuple(specs))
    for ln, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip().startswith("quadext"):
            body = line.split(None, 1)[1]
            rname, expr = body.split("=", 1)
            quad = (rname.strip(), parse_scalar(base, expr.strip()))
    field = FieldDescriptor(has_i=True, params=tuple(specs),
                            quad_ext=(quad[0], quad[1].as_sympy()) if quad else None)
    parsed = ParsedModel(label, dim, field, params,
                         (quad[0], field.quad_ext[1]) if quad else None)

    for ln, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].rstrip()
        s = line.strip()
        if not s:
            continue
        toks = s.split()
        head = toks[0]
        if head in ("model", "dim", "param", "quadext"):
            continue
        if head == "bracket":
            if len(toks) < 3:
                raise IngestSyntaxError("bracket needs two basis elements", ln, line)
            i = _basis_index(toks[1], dim, ln, line)
            j = _basis_index(toks[2].rstrip("="), dim, ln, line)
            if i >= j:
                raise IngestSyntaxError("bracket indices must satisfy i < j", ln, line)
            rhs = s.split("=", 1)
            if len(rhs) != 2:
                raise IngestSyntaxError("bracket needs '='", ln, line)
            parsed.brackets[(i, j)] = _parse_terms(field, rhs[1], dim, ln, line)
        elif head in ("k", "e", "v") and len(toks) > 1 and toks[1] == "=":
            idx = [_basis_index(t, dim, ln, line) for t in toks[2:]]
            setattr(parsed, f"{head}_idx", idx)
        elif head == "antiinv":
            name_part, _, body = s.partition(":")
            ntoks = name_part.split()
            name = ntoks[1]
            when = None
            if 'when "' in name_part:
                when = name_part.split('when "', 1)[1].rsplit('"', 1)[0]
            cols = {}
            for piece in _split_top(body, ";"):
                piece = piece.strip()
                if not piece:
                    continue
                lhs, _, rhs = piece.partition("->")
                j = _basis_index(lhs.strip(), dim, ln, line)
                cols[j] = _parse_terms(field, rhs, dim, ln, line)
            if set(cols) != set(range(dim)):
                raise IngestSyntaxError(
                    f"antiinv {name} must give the image of every basis element",
                    ln, line)
            parsed.antiinvs[name] = (when, cols)
        elif head == "tubular":
            name_part, _, body = s.partition(":")
            ntoks = name_part.split()
            name = ntoks[1]
            expected = None
            if "dim" in ntoks:
                expected = int(ntoks[ntoks.index("dim") + 1])
            with_name = None
            if " with " in body:
                body, _, with_name = body.rpartition(" with ")
                with_name = with_name.strip()
            vectors = [
                _parse_terms(field, piece, dim, ln, line)
                for piece in _split_top(body, ";") if piece.strip()]
            parsed.tubulars.append(ParsedTubular(name, vectors, with_name,
                                                 expected))
        elif head == "hypersurface":
            name_part, _, body = s.partition(":")
            hlabel = name_part.split(None, 1)[1].strip()
            if not body.strip().startswith("F ="):
                raise IngestSyntaxError("hypersurface needs 'F = <expr>'", ln, line)
            cur_analytic = ParsedAnalytic(hlabel, body.split("=", 1)[1].strip())
            parsed.analytic.append(cur_analytic)
        elif head == "graph":
            if cur_analytic is None:
                raise IngestSyntaxError("graph outside a hypersurface block", ln, line)
            kind = toks[1]
            if kind not in ("u", "v"):
                raise IngestSyntaxError("graph kind must be 'u' or 'v'", ln, line)
            cur_analytic.graph_kind = kind
            cur_analytic.graph_text = s.split("=", 1)[1].strip()
        elif head == "field":
            if cur_analytic is None:
                raise IngestSyntaxError("field outside a hypersurface block", ln, line)
            name_part, _, body = s.partition("=")
            fname = name_part.split()[1]
            comps = {"dz1": "0", "dz2": "0", "dw": "0"}
            for piece in _split_top(body, "+"):
                piece = piece.strip()
                for tag in comps:
                    if piece.endswith(tag):
                        comps[tag] = piece[: -len(tag)].strip()
            cur_analytic.fields.append((fname, (comps["dz1"], comps["dz2"],
                                                comps["dw"])))
        elif head == "domain":
            if cur_analytic is None:
                raise IngestSyntaxError("domain outside a hypersurface block", ln, line)
            var = toks[1]
            parts = s.split(None, 3)
            if len(parts) < 4 or parts[2] != "in":
                raise IngestSyntaxError("domain needs '<var> in [lo, hi]'", ln, line)
            rng = parts[3].strip()
            if not (rng.startswith("[") and rng.endswith("]")):
                raise IngestSyntaxError("domain needs '[lo, hi]'", ln, line)
            lo, hi = (float(t) for t in rng[1:-1].split(","))
            cur_analytic.domains.append((var, lo, hi))
        else:
            raise IngestSyntaxError(f"unknown directive {head!r}", ln, line)
    return parsed


# -- constraint mini-language -----------------------------------------------------


def compile_constraint(field: FieldDescriptor, text: str) -> ParamConstraint:
    """Atoms: real(p), imag(p), nonzero(p), eq(p, expr); ' and ' conjunction.
    conj(expr) inside eq resolves through the field's conjugation."""
    atoms = [t.strip() for t in text.split(" and ")]
    subs = {}
    checks = []
    symbolic_ok = True
    by_name = {p.name: p for p in field.params}

    def conj_name(p):
        spec = by_name.get(p)
        return None if spec is None or spec.real else spec.conj

    def parse_arg(expr_text):
        # allow conj( ... ) wrapping inside scalar expressions
        out = expr_text
        while "conj(" in out:
            start = out.index("conj(")
            depth = 0
            for k in range(start + 4, len(out)):
                if out[k] == "(":
                    depth += 1
                elif out[k] == ")":
                    depth -= 1
                    if depth == 0:
                        inner = out[start + 5:k]
                        val = parse_scalar(field, inner).conj()
                        out = out[:start] + "(" + scalar_str(val) + ")" + out[k + 1:]
                        break
        return parse_scalar(field, out)

    for atom in atoms:
        if not atom:
            continue
        if "(" not in atom or not atom.endswith(")"):
            raise FieldError(f"bad constraint atom {atom!r}")
        op = atom[: atom.index("(")].strip()
        inner = atom[atom.index("(") + 1: -1]
        if op == "real":
            p = inner.strip()
            cn = conj_name(p)
            if cn:
                subs[cn] = p
            checks.append(("real", p))
        elif op == "imag":
            p = inner.strip()
            cn = conj_name(p)
            if cn:
                subs[cn] = f"-{p}"
            checks.append(("imag", p))
        elif op == "nonzero":
            checks.append(("nonzero", inner.strip()))
        elif op == "eq":
            lhs, rhs = _split_top(inner, ",")
            p = lhs.strip()
            if p not in by_name:
                raise FieldError(f"eq() needs a parameter on the left, got {p!r}")
            val = parse_arg(rhs.strip())
            subs[p] = scalar_str(val)
            cn = conj_name(p)
            if cn:
                subs[cn] = scalar_str(val.conj())
            checks.append(("eq", p, rhs.strip()))
        else:
            raise FieldError(f"unknown constraint atom {op!r}")

    from .exactalg import QQ_I, _value_as_scalar

    def check(assignment):
        for item in checks:
            if item[0] == "real":
                v = _value_as_scalar(QQ_I, assignment[item[1]])
                if not (v == v.conj()):
                    return False
            elif item[0] == "imag":
                v = _value_as_scalar(QQ_I, assignment[item[1]])
                if not (v == -(v.conj())):
                    return False
            elif item[0] == "nonzero":
                v = _value_as_scalar(QQ_I, assignment[item[1]])
                if v.is_zero():
                    return False
            elif item[0] == "eq":
                # evaluate rhs at the assignment through exact specialization
                from .exactalg import specialize, conjugate_assignment
                val = parse_arg(item[2])
                full = conjugate_assignment(field, dict(assignment))
                lhsv = _value_as_scalar(QQ_I, assignment[item[1]])
                if not (specialize(val, full) == lhsv):
                    return False
        return True

    return ParamConstraint(text=text, subs=subs, check=check, samples=[])


# -- building runtime objects -------------------------------------------------------


def to_entry(parsed: ParsedModel, validate: bool = True) -> CatalogEntry:
    field = parsed.field
    alg = LieAlgebra(field, parsed.dim, parsed.brackets)
    entry = CatalogEntry(parsed.label, "ingested model file")
    constraints = []
    for name, kind, ctext in parsed.params:
        if ctext:
            constraints.append(compile_constraint(field, ctext))
    if parsed.e_idx is not None and parsed.v_idx is not None:
        model = ILCModel(parsed.label, alg, k_idx=parsed.k_idx,
                         e_idx=parsed.e_idx, v_idx=parsed.v_idx,
                         constraints=constraints)
        if validate:
            rep = validate_ilc(model)
            if not rep.ok:
                raise ValidationFailure(parsed.label, rep.violations)
        entry.model = model
    else:
        entry.algebra = alg
    for name, (when, cols) in sorted(parsed.antiinvs.items()):
        if entry.model is None:
            raise ValidationFailure(parsed.label,
                                    ["antiinv blocks need k/e/v lines"])
        A = ExactMatrix(field, [[cols[j][i] for j in range(parsed.dim)]
                                for i in range(parsed.dim)])
        con = compile_constraint(field, when) if when else None
        entry.anti_involutions[name] = AntiInvolution(
            entry.model, name, A, constraint=con,
            provenance="ingested model file")
    from .catalog import TubularRow
    for tub in parsed.tubulars:
        entry.tubular_rows.append(TubularRow(
            parsed.label,
            (tub.with_antiinv,) if tub.with_antiinv else (),
            f"ingested realization {tub.name}",
            (lambda vecs: (lambda _m: vecs))(tub.vectors),
            tub.expected_dim, samples=[{}],
            provenance="ingested model file",
            partial=None if tub.with_antiinv else
            "no anti-involution attached; (T.3)/(T.4) need one"))
    entry.parsed = parsed
    return entry


def load_model(text: str, validate: bool = True) -> CatalogEntry:
    """Parse, build and (for full models) validate; see the module docstring
    for the grammar."""
    return to_entry(parse_model_text(text), validate=validate)


# -- serialization -------------------------------------------------------------------


def _terms_str(vec) -> str:
    parts = []
    for k, c in enumerate(vec, 1):
        if not c.is_zero():
            parts.append(f"({scalar_str(c)}) e{k}")
    return " + ".join(parts) if parts else "0"


def serialize(parsed: ParsedModel) -> str:
    out = [f"model {parsed.label}", f"dim {parsed.dim}"]
    for name, kind, ctext in parsed.params:
        line = f"param {name}"
        if kind == "real":
            line += " real"
        elif kind.startswith("conj="):
            line += f" conj={kind[5:]}"
        if ctext:
            line += f' constraint "{ctext}"'
        out.append(line)
    if parsed.quadext:
        rname, rho = parsed.quadext
        out.append(f"quadext {rname} = {scalar_str(rho)}")
    for (i, j) in sorted(parsed.brackets):
        vec = parsed.brackets[(i, j)]
        if all(c.is_zero() for c in vec):
            continue
        out.append(f"bracket e{i+1} e{j+1} = {_terms_str(vec)}")
    for tag in ("k", "e", "v"):
        idx = getattr(parsed, f"{tag}_idx")
        if idx is not None:
            out.append(f"{tag} = " + " ".join(f"e{t+1}" for t in idx))
    for name in sorted(parsed.antiinvs):
        when, cols = parsed.antiinvs[name]
        head = f"antiinv {name}"
        if when:
            head += f' when "{when}"'
        images = " ; ".join(f"e{j+1} -> {_terms_str(cols[j])}"
                            for j in range(parsed.dim))
        out.append(f"{head}: {images}")
    for tub in parsed.tubulars:
        head = f"tubular {tub.name}"
        if tub.expected_dim is not None:
            head += f" dim {tub.expected_dim}"
        body = "; ".join(_terms_str(v) for v in tub.vectors)
        if tub.with_antiinv:
            body += f" with {tub.with_antiinv}"
        out.append(f"{head}: {body}")
    for an in parsed.analytic:
        out.append(f"hypersurface {an.label}: F = {an.F_text}")
        if an.graph_kind:
            out.append(f"graph {an.graph_kind} = {an.graph_text}")
        for fname, (c1, c2, c3) in an.fields:
            out.append(f"field {fname} = {c1} dz1 + {c2} dz2 + {c3} dw")
        for var, lo, hi in an.domains:
            out.append(f"domain {var} in [{lo}, {hi}]")
    return "\n".join(out) + "\n"


def serialize_entry(entry: CatalogEntry) -> str:
    parsed = getattr(entry, "parsed", None)
    if parsed is None:
        raise FieldError("entry was not produced by the ingestion loader")
    return serialize(parsed)


# -- analytic block runtime -----------------------------------------------------------


_ANALYTIC_LOCALS = None


def _analytic_locals():
    global _ANALYTIC_LOCALS
    if _ANALYTIC_LOCALS is None:
        from . import vecfield as vf
        _ANALYTIC_LOCALS = {
            "z1": vf.z1, "z2": vf.z2, "w": vf.w,
            "z1b": vf.z1b, "z2b": vf.z2b, "wb": vf.wb,
            "x": sympy.Symbol("x"), "y": sympy.Symbol("y"),
            "i": sympy.I, "I": sympy.I,
            "exp": sympy.exp, "log": sympy.log, "ln": sympy.log,
            "sin": sympy.sin, "cos": sympy.cos,
            "sinh": sympy.sinh, "cosh": sympy.cosh,
        }
    return _ANALYTIC_LOCALS


def parse_analytic_expr(text: str) -> sympy.Expr:
    from sympy.parsing.sympy_parser import parse_expr
    return parse_expr(text, local_dict=_analytic_locals(), evaluate=True)


def build_hypersurface(an: ParsedAnalytic):
    """Hypersurface plus fields from an analytic block."""
    import numpy as np
    from .vecfield import HoloVectorField, Hypersurface
    from .analytic import tube_sampler, wink_sampler
    F = parse_analytic_expr(an.F_text)
    boxes = {var: (lo, hi) for var, lo, hi in an.domains}
    if an.graph_kind == "u":
        g = parse_analytic_expr(an.graph_text)
        x, y = sympy.Symbol("x"), sympy.Symbol("y")
        gn = sympy.lambdify((x, y), g, modules="numpy")
        sampler = tube_sampler(gn, boxes.get("x", (0.5, 1.8)),
                               boxes.get("y", (0.5, 1.8)))
    elif an.graph_kind == "v":
        from .vecfield import z1 as vz1, z1b as vz1b
        g = parse_analytic_expr(an.graph_text)
        gl = sympy.lambdify((vz1, vz1b), g, modules="numpy")
        lo, hi = boxes.get("x", (0.5, 1.8))
        sampler = wink_sampler(lambda v: np.real(gl(v, np.conjugate(v))),
                               z1box=((lo, hi), boxes.get("x_im", (-0.3, 0.3))))
    else:
        raise FieldError(f"hypersurface {an.label}: no sampling rule (graph line)")
    M = Hypersurface(an.label, F, sampler)
    fields = [HoloVectorField(parse_analytic_expr(c1), parse_analytic_expr(c2),
                              parse_analytic_expr(c3), name=name)
              for name, (c1, c2, c3) in an.fields]
    return M, fields
