"""Test corpus: small pointed monoids, schemes and a suite of morphisms."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import scheme as sc
from .monoid import (F1, ZERO, FiniteMonoid, FreeMonomialMonoid, MonoidHom, direct_product, from_products,
                     identity, truncated_polynomial)


# ---------------------------------------------------------------- monoids

def _canonical(table, perms):
    """Least relabelled table over permutations fixing 0 and 1."""
    n = len(table)
    best = None
    for p in perms:
        inv = [0] * n
        for i, j in enumerate(p):
            inv[j] = i
        t = tuple(tuple(p[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        if best is None or t < best:
            best = t
    return best


@lru_cache(maxsize=None)
def pointed_monoids(max_size: int = 5) -> tuple:
    """Every commutative pointed monoid with 2..max_size elements, one per isomorphism class.

    Element 0 is the zero and 1 the identity; the rest are filled in by brute force.
    """
    out = []
    for n in range(2, max_size + 1):
        rest = list(range(2, n))
        perms = [(0, 1) + q for q in itertools.permutations(rest)]
        pairs = [(a, b) for i, a in enumerate(rest) for b in rest[i:]]
        seen = set()
        for vals in itertools.product(range(n), repeat=len(pairs)):
            t = [[None] * n for _ in range(n)]
            for a in range(n):
                t[0][a] = t[a][0] = 0
                t[1][a] = t[a][1] = a
            for (a, b), v in zip(pairs, vals):
                t[a][b] = t[b][a] = v
            if not all(t[t[a][b]][c] == t[a][t[b][c]] for a in rest for b in rest for c in rest):
                continue
            key = _canonical(t, perms)
            if key in seen:
                continue
            seen.add(key)
            labels = ["0", "1"] + [f"a{i - 1}" for i in rest]
            out.append(FiniteMonoid([list(r) for r in key], 0, 1, labels, check=False))
    return tuple(out)


def e_monoid() -> FiniteMonoid:
    return from_products(["e"], {("e", "e"): "e"})


def cyclic_group(n: int) -> FiniteMonoid:
    """C_n u {0}."""
    names = ["0", "1"] + [f"u^{k}" if k > 1 else "u" for k in range(1, n)]
    def idx(k):
        return 1 if k % n == 0 else 1 + k % n
    t = [[0] * (n + 1) for _ in range(n + 1)]
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            t[a][b] = idx((a - 1) + (b - 1))
    return FiniteMonoid(t, 0, 1, names)


def two_idempotents() -> FiniteMonoid:
    """{0, x, y, 1} with x, y idempotent and xy = 0."""
    return from_products(["x", "y"], {("x", "x"): "x", ("y", "y"): "y", ("x", "y"): "0"})


def named_monoids() -> dict:
    return {
        "F1": F1(),
        "E": e_monoid(),
        "T2": truncated_polynomial(2),
        "T3": truncated_polynomial(3),
        "S2": truncated_polynomial(2, "stable"),
        "C2": cyclic_group(2),
        "C3": cyclic_group(3),
        "XY": two_idempotents(),
        "E*T2": direct_product(e_monoid(), truncated_polynomial(2)),
    }


def finite_corpus(max_size: int = 5) -> list:
    """The enumerated monoids followed by the named ones that are not already there (by size)."""
    out = list(pointed_monoids(max_size))
    out += [A for A in named_monoids().values() if A.size > max_size]
    return out


# ---------------------------------------------------------------- schemes

def free(n: int, inverted=(), names=None) -> FreeMonomialMonoid:
    return FreeMonomialMonoid(n, frozenset(inverted), names)


def doubled_origin_line() -> sc.MonoidScheme:
    A = free(1, names=("t",))
    return sc.glue([A, A], {(0, 1): (A.var(0), [(1,)]), (1, 0): (A.var(0), [(1,)])}, ["U0", "U1"])


def doubled_point_e() -> sc.MonoidScheme:
    """Two copies of MSpec({0,e,1}) glued along D(e)."""
    E = e_monoid()
    e = E.index("e")
    loc = sc.principal_localization(E, e)
    img = [loc.iota(g) for g in E.generators]
    return sc.glue([E, E], {(0, 1): (e, img), (1, 0): (e, img)}, ["V0", "V1"])


def corpus_schemes() -> dict:
    out = {f"MSpec({k})": sc.affine(A) for k, A in named_monoids().items()}
    out.update({
        "point": sc.point(),
        "A1": sc.affine_space(1),
        "A2": sc.affine_space(2),
        "Gm": sc.torus(1),
        "P1": sc.projective_line(),
        "P2": sc.projective_space(2),
        "doubled origin": doubled_origin_line(),
        "E doubled": doubled_point_e(),
        "pt+pt": sc.disjoint_union(sc.point(), sc.point()),
    })
    return out


def finite_schemes() -> dict:
    return {k: X for k, X in corpus_schemes().items() if all(A.is_finite for A in X.charts)}


# ---------------------------------------------------------------- morphisms

@dataclass
class SuiteEntry:
    name: str
    phi: sc.SchemeMorphism
    kind: str                   # closed | open | fold | locally closed | other
    closed_immersion: bool | None = None
    separated: bool | None = None


def _aff(A, B, images, name):
    return sc.affine_morphism(MonoidHom(A, B, images), name=name)


def _fold(X: sc.MonoidScheme, name) -> sc.SchemeMorphism:
    Y = sc.disjoint_union(X, X)
    n = len(X.charts)
    return sc.SchemeMorphism(Y, X, list(range(n)) * 2, [identity(A) for A in X.charts] * 2, name=name)


def morphism_suite() -> list:
    E, T2, T3, XY, C2 = e_monoid(), truncated_polynomial(2), truncated_polynomial(3), two_idempotents(), cyclic_group(2)
    one = F1()
    e = E.index("e")
    t1 = free(1, names=("t",))
    gm = free(1, (0,), names=("t",))
    a2 = free(2, names=("t1", "t2"))
    pt, A1 = sc.point(), sc.affine_space(1)
    out = []

    def add(name, phi, kind, ci=None, sep=None):
        phi.name = name
        out.append(SuiteEntry(name, phi, kind, ci, sep))

    # closed immersions
    add("MSpec(F1) -> MSpec(E) at e=0", _aff(E, one, [0, 1, 0], ""), "closed", True, True)
    add("MSpec(T2) -> MSpec(T3)", _aff(T3, T2, [0, 1, T2.index("t"), 0], ""), "closed", True, True)
    add("origin in A1", _aff(t1, one, [one.zero], ""), "closed", True, True)
    add("point 1 in A1", _aff(t1, one, [one.one], ""), "closed", True, True)
    add("diagonal A1 -> A2", _aff(a2, t1, [(1,), (1,)], ""), "closed", True, True)
    add("axis A1 -> A2", _aff(a2, t1, [(1,), ZERO], ""), "closed", True, True)
    add("line t2=1 in A2", _aff(a2, t1, [(1,), (0,)], ""), "closed", True, True)
    add("MSpec(F1) -> MSpec(C2)", _aff(C2, one, [0, 1, 1], ""), "closed", True, True)
    Xr, iota = _sred_of(sc.affine(T3))
    add("sred MSpec(T3)", iota, "closed", True, True)
    # open immersions
    add("D(e) in MSpec(E)", _aff(E, one, [0, 1, 1], ""), "open", True, True)
    add("Gm in A1", _aff(t1, gm, [(1,)], ""), "open", False, True)
    P1 = sc.projective_line()
    add("chart U0 in P1", sc.SchemeMorphism(sc.affine(P1.charts[0]), P1, [0], [identity(P1.charts[0])]),
        "open", False, True)
    Ed = doubled_point_e()
    add("chart V0 in E doubled", sc.SchemeMorphism(sc.affine(E), Ed, [0], [identity(E)]), "open", True, True)
    # folds
    add("fold pt+pt -> pt", _fold(pt, ""), "fold", False, True)
    add("fold A1+A1 -> A1", _fold(A1, ""), "fold", False, True)
    add("fold E+E -> MSpec(E)", _fold(sc.affine(E), ""), "fold", False, True)
    # locally closed, not closed
    XYs = sc.affine(XY)
    add("two points in MSpec(XY)", sc.SchemeMorphism(
        sc.disjoint_union(pt, pt), XYs, [0, 0],
        [MonoidHom(XY, one, [0, 1, 0, 1]), MonoidHom(XY, one, [0, 1, 1, 0])]), "locally closed", False, True)
    add("0 and 1 in A1", sc.SchemeMorphism(
        sc.disjoint_union(pt, pt), A1, [0, 0], [MonoidHom(A1.charts[0], one, [one.zero]), MonoidHom(A1.charts[0], one, [one.one])]),
        "other", False, True)
    # structure morphisms and others
    add("A1 -> point", sc.structure_morphism(A1), "other", False, True)
    add("P1 -> point", sc.structure_morphism(P1), "other", False, True)
    add("doubled origin -> point", sc.structure_morphism(doubled_origin_line()), "other", False, False)
    add("E doubled -> point", sc.structure_morphism(Ed), "other", False, True)
    add("MSpec(E) -> point", sc.structure_morphism(sc.affine(E)), "other", False, True)
    add("identity P1", sc.identity_morphism(P1), "closed", True, True)
    return out


def _sred_of(X):
    from .properties import sred_scheme
    return sred_scheme(X)


def closed_immersions() -> list:
    return [s for s in morphism_suite() if s.closed_immersion]
