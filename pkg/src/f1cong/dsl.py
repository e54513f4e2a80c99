"""Plain-text format for monoids, homs, schemes, morphisms and test diagrams.

    # comments run to the end of the line
    monoid E = table { elements e; e*e = e; }
    monoid A = free(t1, t2) invert(t2)
    hom f: E -> F1 { e -> 0; }
    scheme P1 = glue {
        chart U0 = free(t);
        chart U1 = free(t);
        U0 ~ U1 along t { t -> t^-1; }
        U1 ~ U0 along t { t -> t^-1; }
    }
    morphism s: P1 -> Pt = structure(P1)
    diagram D for s { val matrix [1]; eta U0 { t -> g1^-1; } nu pt { } }
    check separated s

Builtins: F1, point, affine_space(n), projective(n), torus(n), affine(M).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from . import congruence as cg
from . import scheme as sc
from . import spectra as sp
from .monoid import (F1, FiniteMonoid, FreeMonomialMonoid, MonoidError, MonoidHom, ZERO,
                     from_products)
from .valuation import ChartMap, TestDiagram, ValuationData

FORMAT = 1
PROPERTIES = ("closed_immersion", "separated", "universally_closed", "proper", "dominant",
              "closed_map", "affine")

GRAMMAR = r"""
start: decl*

?decl: monoid_decl | hom_decl | scheme_decl | morphism_decl | diagram_decl | check_decl

monoid_decl: "monoid" NAME "=" monoid_expr ";"?
?monoid_expr: table | free | NAME -> monoid_ref
table: "table" "{" ("elements" atom* ";")? unit_clause* product* "}"
unit_clause: (ZERO_KW | ONE_KW) atom ";"
ZERO_KW: "zero"
ONE_KW: "one"
product: atom "*" atom "=" atom ";"
free: "free" "(" [NAME ("," NAME)*] ")" invert?
invert: "invert" "(" NAME ("," NAME)* ")"

hom_decl: "hom" NAME ":" NAME "->" NAME assignments ";"?
assignments: "{" assignment* "}"
assignment: atom "->" value ";"

scheme_decl: "scheme" NAME "=" scheme_expr ";"?
?scheme_expr: glue | builtin
glue: "glue" "{" chart* gluing* "}"
chart: "chart" NAME "=" monoid_expr ";"
gluing: NAME "~" NAME "along" value assignments
builtin: NAME "(" [arg ("," arg)*] ")" | NAME -> builtin
?arg: INT | NAME

morphism_decl: "morphism" NAME ":" NAME "->" NAME "=" morph_expr ";"?
?morph_expr: "structure" "(" NAME ")" -> structure
    | "identity" "(" NAME ")"          -> identity
    | "affine" "(" NAME ")"            -> affine_of
    | "charts" "{" chart_map* "}"      -> charts
chart_map: NAME "->" NAME "via" NAME ";"

diagram_decl: "diagram" NAME "for" NAME "{" "val" ("rank" INT)? "matrix" matrix ";" local_map local_map "}" ";"?
matrix: "[" row ("," row)* "]" | "[" SIGNED_INT ("," SIGNED_INT)* "]" -> flat_matrix
row: "[" SIGNED_INT ("," SIGNED_INT)* "]"
local_map: (ETA | NU) NAME assignments ";"?
ETA: "eta"
NU: "nu"

check_decl: "check" NAME NAME ";"?

?atom: NAME | INT | STRING
?value: VALUE | STRING | NAME | INT
VALUE: /[A-Za-z0-9_'\/]+(\^-?\d+)?(\*[A-Za-z0-9_'\/]+(\^-?\d+)?)+/ | /[A-Za-z0-9_'\/]+\^-?\d+/
NAME: /[A-Za-z_][A-Za-z0-9_'\/]*/
STRING: /"[^"\n]*"/
INT: /\d+/
SIGNED_INT: /-?\d+/

COMMENT: /#[^\n]*/
%import common.WS
%ignore WS
%ignore COMMENT
"""

_parser = Lark(GRAMMAR, parser="earley", propagate_positions=True)


class DSLError(MonoidError):
    """Error with a source position."""

    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


@dataclass
class Declaration:
    kind: str
    name: str
    value: object
    line: int = 0
    column: int = 0


@dataclass
class Document:
    declarations: list = field(default_factory=list)
    names: dict = field(default_factory=dict)

    def __getitem__(self, name):
        return self.names[name]

    @property
    def checks(self) -> list:
        return [d.value for d in self.declarations if d.kind == "check"]

    def of_kind(self, kind) -> dict:
        return {d.name: d.value for d in self.declarations if d.kind == kind}


def _text(tok) -> str:
    s = str(tok)
    return s[1:-1] if s.startswith('"') else s


def _pos(tok):
    return getattr(tok, "line", None), getattr(tok, "column", None)


# ---------------------------------------------------------------- value parsing

_MONO = re.compile(r"^([A-Za-z_][A-Za-z0-9_'/]*)(?:\^(-?\d+))?$")


def parse_value(M, text: str):
    """An element of M written as a label (finite) or a monomial such as t1^2*t2^-1."""
    if M.is_finite:
        try:
            return M.index(text)
        except MonoidError:
            raise MonoidError(f"no element named {text!r} in {M}") from None
    if text == "0":
        return ZERO
    exps = [0] * M.num_vars
    if text != "1":
        for part in text.split("*"):
            m = _MONO.match(part)
            if not m or m.group(1) not in M.names:
                raise MonoidError(f"cannot read {text!r} as a monomial of {M}")
            exps[M.names.index(m.group(1))] += int(m.group(2) or 1)
    return M.check(tuple(exps))


def _generators(M):
    if M.is_finite:
        return [M.label(g) for g in M.generators]
    return list(M.names)


def hom_from_assignments(A, B, assigned: dict) -> MonoidHom:
    """Images given by label; finite sources need every generator, other entries are checked."""
    if A.is_finite:
        gens = A.generators
        missing = [A.label(g) for g in gens if A.label(g) not in assigned]
        if missing:
            raise MonoidError(f"missing images for {', '.join(missing)}")
        imgs = []
        for a in A.elements():
            w = A.words[a]
            imgs.append(B.zero if w is None else
                        B.prod(assigned[A.label(g)] for g, e in zip(gens, w) for _ in range(e)))
        f = MonoidHom(A, B, imgs)
        for k, v in assigned.items():
            if f(A.index(k)) != v:
                raise MonoidError(f"image of {k} is inconsistent with the generators")
        return f
    missing = [n for n in A.names if n not in assigned]
    extra = [k for k in assigned if k not in A.names]
    if missing or extra:
        raise MonoidError(f"give one image per variable of {A} (missing {missing}, unknown {extra})")
    return MonoidHom(A, B, [assigned[n] for n in A.names])


def _table_in_order(elements, units, rules) -> FiniteMonoid:
    """A table over `elements` in the given order with named zero and one."""
    if set(units) != {"zero", "one"}:
        raise MonoidError("give both zero and one")
    idx = {n: i for i, n in enumerate(elements)}
    for n in list(units.values()) + [x for k in rules for x in k] + list(rules.values()):
        if n not in idx:
            raise MonoidError(f"unknown element {n!r}")
    z, o = idx[units["zero"]], idx[units["one"]]
    n = len(elements)
    t = [[None] * n for _ in range(n)]
    for a in range(n):
        t[z][a] = t[a][z] = z
        t[o][a] = t[a][o] = a
    for (x, y), c in rules.items():
        t[idx[x]][idx[y]] = t[idx[y]][idx[x]] = idx[c]
    for a in range(n):
        for b in range(n):
            if t[a][b] is None:
                raise MonoidError(f"missing product {elements[a]}*{elements[b]}")
    return FiniteMonoid(t, z, o, list(elements))


# ---------------------------------------------------------------- builder

class _Builder(Transformer):
    def __init__(self, doc: Document):
        super().__init__()
        self.doc = doc

    def _lookup(self, tok, kinds):
        name = str(tok)
        if name == "F1" and "monoid" in kinds and name not in self.doc.names:
            return F1()
        for d in self.doc.declarations:
            if d.name == name and d.kind in kinds:
                return d.value
        raise DSLError(f"unresolved reference {name!r}", *_pos(tok))

    def _declare(self, kind, tok, value):
        name = str(tok)
        if name in self.doc.names:
            raise DSLError(f"duplicate name {name!r}", *_pos(tok))
        self.doc.names[name] = value
        self.doc.declarations.append(Declaration(kind, name, value, *_pos(tok)))
        return value

    # monoids
    def table(self, items):
        elements, rules, units = [], {}, {}
        first = items[0] if items else None
        for it in items:
            if isinstance(it, tuple) and it[0] == "unit":
                units[it[1]] = it[2]
            elif isinstance(it, tuple):
                (a, b, c), tok = it
                rules[(a, b)] = c
            else:
                elements.append(_text(it))
        for (a, b), c in rules.items():
            if rules.get((b, a), c) != c:
                raise DSLError(f"{a}*{b} and {b}*{a} differ", *_pos(first))
        try:
            if not units:
                for (a, b), c in rules.items():
                    for x in (a, b, c):
                        if x not in ("0", "1") and x not in elements:
                            elements.append(x)
                return from_products(elements, rules)
            return _table_in_order(elements, units, rules)
        except MonoidError as e:
            raise DSLError(str(e), *_pos(first)) from None

    def unit_clause(self, items):
        return ("unit", str(items[0]), _text(items[1]))

    def product(self, items):
        a, b, c = (_text(x) for x in items)
        return ((a, b, c), items[0])

    def free(self, items):
        names = [str(x) for x in items if isinstance(x, Token)]
        inv = next((x for x in items if isinstance(x, list)), [])
        bad = [n for n in inv if n not in names]
        if bad:
            raise DSLError(f"cannot invert unknown variable {str(bad[0])!r}", *_pos(bad[0]))
        return FreeMonomialMonoid(len(names), frozenset(names.index(n) for n in inv), tuple(names))

    def invert(self, items):
        return list(items)

    def monoid_ref(self, items):
        return self._lookup(items[0], ("monoid",))

    def monoid_decl(self, items):
        return self._declare("monoid", items[0], items[1])

    # homs
    def assignment(self, items):
        return (_text(items[0]), items[1], items[0])

    def assignments(self, items):
        return list(items)

    def _resolve(self, M, assigns):
        out = {}
        for k, v, tok in assigns:
            try:
                out[k] = parse_value(M, _text(v))
            except MonoidError as e:
                raise DSLError(str(e), *_pos(v)) from None
        return out

    def hom_decl(self, items):
        name, a, b, assigns = items
        A, B = self._lookup(a, ("monoid",)), self._lookup(b, ("monoid",))
        try:
            f = hom_from_assignments(A, B, self._resolve(B, assigns))
        except MonoidError as e:
            raise DSLError(str(e), *_pos(name)) from None
        return self._declare("hom", name, f)

    # schemes
    def chart(self, items):
        return ("chart", str(items[0]), items[1], items[0])

    def gluing(self, items):
        return ("gluing", str(items[0]), str(items[1]), items[2], items[3], items[0])

    def glue(self, items):
        charts = [it for it in items if it[0] == "chart"]
        names = [c[1] for c in charts]
        monoids = [c[2] for c in charts]
        gluings = {}
        for _, i, j, s, assigns, tok in (it for it in items if it[0] == "gluing"):
            if i not in names or j not in names:
                raise DSLError(f"unknown chart in gluing {i} ~ {j}", *_pos(tok))
            a, b = names.index(i), names.index(j)
            A, B = monoids[a], monoids[b]
            try:
                sv = parse_value(A, _text(s))
                loc = sc.principal_localization(A, sv)
                if loc.empty:
                    raise MonoidError(f"localizing {i} at {s} gives the zero monoid")
                L = loc.monoid
                vals = self._resolve(L, assigns)
                if B.is_finite:
                    gens = [B.label(g) for g in B.generators]
                    missing = [g for g in gens if g not in vals]
                    if missing:
                        raise MonoidError(f"missing images for {', '.join(missing)}")
                    images = [vals[g] for g in gens]
                else:
                    missing = [n for n in B.names if n not in vals]
                    if missing:
                        raise MonoidError(f"missing images for {', '.join(missing)}")
                    images = [vals[n] for n in B.names]
            except MonoidError as e:
                raise DSLError(str(e), *_pos(tok)) from None
            gluings[(a, b)] = (sv, images)
        try:
            return sc.glue(monoids, gluings, names)
        except MonoidError as e:
            raise DSLError(str(e), *_pos(charts[0][3] if charts else None)) from None

    def builtin(self, items):
        head = items[0]
        args = [x for x in items[1:] if x is not None]
        name = str(head)
        try:
            if name == "point" and not args:
                return sc.point()
            if name in ("affine_space", "projective", "torus") and len(args) == 1 and args[0].type == "INT":
                n = int(args[0])
                return {"affine_space": sc.affine_space, "projective": sc.projective_space,
                        "torus": sc.torus}[name](n)
            if name == "affine" and len(args) == 1:
                return sc.affine(self._lookup(args[0], ("monoid",)))
            if not args and (name in self.doc.names or name == "F1"):
                return self._lookup(head, ("scheme",))
        except MonoidError as e:
            raise DSLError(str(e), *_pos(head)) from None
        raise DSLError(f"unknown scheme constructor {name!r} with {len(args)} argument(s)", *_pos(head))

    def scheme_decl(self, items):
        return self._declare("scheme", items[0], items[1])

    # morphisms
    def structure(self, items):
        return ("structure", items[0])

    def identity(self, items):
        return ("identity", items[0])

    def affine_of(self, items):
        return ("affine", items[0])

    def chart_map(self, items):
        return tuple(items)

    def charts(self, items):
        return ("charts", list(items))

    def morphism_decl(self, items):
        name, y, x, (how, arg) = items
        Y, X = self._lookup(y, ("scheme",)), self._lookup(x, ("scheme",))
        try:
            if how == "structure":
                phi = sc.structure_morphism(self._lookup(arg, ("scheme",)))
            elif how == "identity":
                phi = sc.identity_morphism(self._lookup(arg, ("scheme",)))
            elif how == "affine":
                phi = sc.affine_morphism(self._lookup(arg, ("hom",)))
            else:
                assign, homs = [None] * len(Y.charts), [None] * len(Y.charts)
                for src, tgt, h in arg:
                    i, a = Y.names.index(str(src)), X.names.index(str(tgt))
                    assign[i], homs[i] = a, self._lookup(h, ("hom",))
                if None in assign:
                    raise MonoidError("every source chart needs a chart map")
                phi = sc.SchemeMorphism(Y, X, assign, homs)
        except (MonoidError, ValueError) as e:
            raise DSLError(str(e), *_pos(name)) from None
        if list(phi.source.charts) != list(Y.charts) or list(phi.target.charts) != list(X.charts):
            raise DSLError("morphism endpoints do not match the declared schemes", *_pos(name))
        phi.name = str(name)
        return self._declare("morphism", name, phi)

    # diagrams
    def row(self, items):
        return [int(x) for x in items]

    def matrix(self, items):
        return items

    def flat_matrix(self, items):
        return [[int(x) for x in items]]

    def local_map(self, items):
        return (str(items[0]), items[1], items[2])

    def diagram_decl(self, items):
        name, phi_tok = items[0], items[1]
        rest = items[2:]
        rank = None
        if isinstance(rest[0], Token):
            rank, rest = int(rest[0]), rest[1:]
        matrix, m1, m2 = rest
        phi = self._lookup(phi_tok, ("morphism",))
        if rank is not None and any(len(r) != rank for r in matrix):
            raise DSLError(f"matrix rows must have length {rank}", *_pos(name))
        try:
            vd = ValuationData(tuple(tuple(r) for r in matrix))
            G = vd.group
            maps = {}
            for kind, chart, assigns in (m1, m2):
                Z = phi.source if kind == "eta" else phi.target
                if chart not in Z.names:
                    raise MonoidError(f"unknown chart {chart!r}")
                c = Z.names.index(chart)
                maps[kind] = ChartMap(c, hom_from_assignments(Z.charts[c], G, self._resolve(G, assigns)))
            if set(maps) != {"eta", "nu"}:
                raise MonoidError("a diagram needs one eta and one nu")
            d = TestDiagram(vd, maps["eta"], maps["nu"], phi)
        except MonoidError as e:
            raise DSLError(str(e), *_pos(name)) from None
        return self._declare("diagram", name, d)

    def check_decl(self, items):
        prop, target = items
        if str(prop) not in PROPERTIES:
            raise DSLError(f"unknown property {str(prop)!r}", *_pos(prop))
        phi = self._lookup(target, ("morphism",))
        self.doc.declarations.append(Declaration("check", str(target), (str(prop), phi), *_pos(prop)))
        return None

    def start(self, items):
        return self.doc


def parse(text: str) -> Document:
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        raise DSLError(f"syntax error near {e.get_context(text).strip()!r}", e.line, e.column) from None
    doc = Document()
    try:
        return _Builder(doc).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, MonoidError):
            raise e.orig_exc from None
        raise


def parse_file(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------- text emitters

_PLAIN = re.compile(r"^[A-Za-z0-9_'/]+$")


def _q(s: str) -> str:
    return s if _PLAIN.match(s) else json.dumps(s)


def _v(M, x) -> str:
    """An element as it is written in a value position."""
    if M.is_finite:
        return _q(M.label(x))
    return M.fmt(x)


def emit_monoid(M) -> str:
    if not M.is_finite:
        inv = [M.names[i] for i in sorted(M.inverted)]
        s = f"free({', '.join(M.names)})"
        return s + (f" invert({', '.join(inv)})" if inv else "")
    rest = [a for a in M.elements() if a not in (M.zero, M.one)]
    if (M.zero, M.one, M.label(M.zero), M.label(M.one)) == (0, 1, "0", "1"):
        lines = [f"table {{ elements {' '.join(_q(M.label(a)) for a in rest)};"]
    else:
        lines = [f"table {{ elements {' '.join(_q(M.label(a)) for a in M.elements())};",
                 f"  zero {_q(M.label(M.zero))}; one {_q(M.label(M.one))};"]
    for i, a in enumerate(rest):
        for b in rest[i:]:
            lines.append(f"  {_q(M.label(a))}*{_q(M.label(b))} = {_q(M.label(M.mul(a, b)))};")
    return "\n".join(lines) + " }"


def emit_hom(f: MonoidHom, name, src, tgt) -> str:
    A, B = f.source, f.target
    if A.is_finite:
        body = "; ".join(f"{_q(A.label(g))} -> {_v(B, f(g))}" for g in A.generators)
    else:
        body = "; ".join(f"{n} -> {_v(B, f(A.var(i)))}" for i, n in enumerate(A.names))
    return f"hom {name}: {src} -> {tgt} {{ {body + ';' if body else ''} }}"


def emit_scheme(X, name) -> str:
    lines = [f"scheme {name} = glue {{"]
    for n, A in zip(X.names, X.charts):
        lines.append(f"  chart {n} = {emit_monoid(A)};")
    for (i, j), ov in sorted(X.overlaps.items()):
        B, L = X.charts[j], ov.loc.monoid
        if B.is_finite:
            body = "; ".join(f"{_q(B.label(g))} -> {_v(L, ov.res(g))}" for g in B.generators)
        else:
            body = "; ".join(f"{n} -> {_v(L, ov.res(B.var(k)))}" for k, n in enumerate(B.names))
        s = _v(X.charts[i], ov.s)
        lines.append(f"  {X.names[i]} ~ {X.names[j]} along {s} {{ {body + ';' if body else ''} }}")
    lines.append("}")
    return "\n".join(lines)


def emit_morphism(phi, name, src, tgt) -> str:
    """Chart homs are emitted as separate hom declarations; returns the full text."""
    out = []
    rows = []
    for i, (a, f) in enumerate(zip(phi.assign, phi.homs)):
        hname = f"{name}_{i}"
        out.append(emit_hom(f, hname, f"{tgt}_{phi.target.names[a]}", f"{src}_{phi.source.names[i]}"))
        rows.append(f"  {phi.source.names[i]} -> {phi.target.names[a]} via {hname};")
    head = []
    for sname, Z in ((src, phi.source), (tgt, phi.target)):
        for n, A in zip(Z.names, Z.charts):
            head.append(f"monoid {sname}_{n} = {emit_monoid(A)}")
    body = "\n".join(rows)
    return "\n".join(head + [emit_scheme(phi.source, src), emit_scheme(phi.target, tgt)] + out
                     + [f"morphism {name}: {src} -> {tgt} = charts {{\n{body}\n}}"])


# ---------------------------------------------------------------- JSON and DOT

def to_data(value):
    """Plain data for JSON export."""
    if isinstance(value, FiniteMonoid):
        return {"kind": "monoid", "tier": "finite", "elements": [value.label(a) for a in value.elements()],
                "zero": value.label(value.zero), "one": value.label(value.one),
                "table": [list(r) for r in value.table]}
    if isinstance(value, FreeMonomialMonoid):
        return {"kind": "monoid", "tier": "symbolic", "variables": list(value.names),
                "inverted": [value.names[i] for i in sorted(value.inverted)]}
    if isinstance(value, MonoidHom):
        A, B = value.source, value.target
        src = A.elements() if A.is_finite else [A.var(i) for i in range(A.num_vars)]
        return {"kind": "hom", "source": to_data(A), "target": to_data(B),
                "images": {_v(A, x) if A.is_finite else A.fmt(x): _v(B, value(x)) for x in src}}
    if isinstance(value, sp.FiniteSpace):
        return {"kind": "space", "points": list(value.labels),
                "closed_points": [value.labels[i] for i in value.closed_points()],
                "covering": [[value.labels[i], value.labels[j]] for i, j in value.covering_relations()],
                "opens": {str(k): sorted(value.labels[i] for i in U) for k, U in value.subbasis.items()}}
    if isinstance(value, cg.FiniteCongruence):
        A = value.monoid
        return {"kind": "congruence", "classes": [[A.label(a) for a in c] for c in value.classes()]}
    if isinstance(value, cg.SymbolicPrimeCongruence):
        return {"kind": "symbolic_prime", "label": point_label(value),
                "vanishing": [value.ambient.names[i] for i in sorted(value.vanishing)],
                "lattice": [list(r) for r in value.lattice.basis]}
    if isinstance(value, sc.MonoidScheme):
        return {"kind": "scheme", "charts": [{"name": n, "monoid": to_data(A)} for n, A in zip(value.names, value.charts)],
                "overlaps": [{"from": value.names[i], "to": value.names[j], "along": _v(value.charts[i], ov.s)}
                             for (i, j), ov in sorted(value.overlaps.items())]}
    if isinstance(value, sc.SchemeMorphism):
        return {"kind": "morphism", "name": value.name, "source": to_data(value.source),
                "target": to_data(value.target), "assign": list(value.assign),
                "homs": [to_data(f) for f in value.homs]}
    if isinstance(value, TestDiagram):
        return {"kind": "diagram", **value.to_dict()}
    if isinstance(value, dict):
        return {str(k): to_data(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_data(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(to_data(v) for v in value)
    if value is ZERO:
        return "0"
    return value


def emit_json(value) -> str:
    data = to_data(value)
    if isinstance(data, dict):
        data = {"format": FORMAT, **data}
    else:
        data = {"format": FORMAT, "value": data}
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


def emit_dot(space, name: str = "space") -> str:
    """Hasse diagram of the specialization order: an edge runs from a point to each immediate specialization."""
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
    for i, lab in enumerate(space.labels):
        shape = "box" if space.spec[i] == {i} else "ellipse"
        lines.append(f"  n{i} [label={json.dumps(str(lab), ensure_ascii=False)}, shape={shape}];")
    for i, j in space.covering_relations():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def point_label(p: cg.SymbolicPrimeCongruence) -> str:
    """p_{I,H} with I the vanishing indices and H named when it is 0 or full."""
    I = "".join(str(i + 1) for i in sorted(p.vanishing)) or "∅"
    k = len(p.J)
    basis = [list(r) for r in p.lattice.basis]
    if not basis:
        H = "0"
    elif p.lattice.is_full():
        H = "Z" if k == 1 else f"Z^{k}"
    else:
        H = "<" + ",".join("(" + ",".join(map(str, r)) + ")" for r in basis) + ">"
    return f"p_{{{I},{H}}}"


def symbolic_listing(A: FreeMonomialMonoid, bound: int = 1) -> list:
    """Labels of the points p_{I,H} with H generated within the bound."""
    return [point_label(p) for p in cg.enumerate_symbolic_primes(A, bound)]


def emit_symbolic_dot(A: FreeMonomialMonoid, bound: int = 1, name: str = "cong") -> str:
    pts = cg.enumerate_symbolic_primes(A, bound)
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
    for i, p in enumerate(pts):
        lines.append(f"  n{i} [label={json.dumps(point_label(p), ensure_ascii=False)}];")
    for i, p in enumerate(pts):
        for j, q in enumerate(pts):
            if i != j and cg.symbolic_le(p, q) and not any(
                    k not in (i, j) and cg.symbolic_le(p, r) and cg.symbolic_le(r, q) for k, r in enumerate(pts)):
                lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
