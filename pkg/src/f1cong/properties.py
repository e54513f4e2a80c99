"""Deciders for morphism classes: vanishing sets, closed immersions, dominance, closed maps, separatedness."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import congruence as cg
from .monoid import ZERO, FiniteMonoid, MonoidError, MonoidHom, compose, localize, localize_symbolic
from .scheme import (GluingError, MonoidScheme, SchemeMorphism, SymbolicSchemeCongSpace, diagonal, structure_morphism,
                     extend_hom, induced_cong_map, induced_point_map, is_affine_morphism,
                     is_quasi_compact, is_quasi_separated, principal_localization, scheme_cong_space,
                     sections_surjective, transport_congruence)


class UnsupportedQuery(MonoidError):
    """The question is outside what the finite and free monomial tiers can decide."""


class CharacterizationMismatch(AssertionError):
    pass


DEFAULT_BOUND = 2


def _finite_scheme(X: MonoidScheme) -> bool:
    return all(A.is_finite for A in X.charts)


def _symbolic_scheme(X: MonoidScheme) -> bool:
    return not any(A.is_finite for A in X.charts)


# ---------------------------------------------------------------- vanishing sets on finite charts

@dataclass
class VanishingSet:
    scheme: MonoidScheme
    congs: list                 # radical congruence per chart
    points: frozenset           # global indices in the glued congruence space

    def __eq__(self, other):
        return isinstance(other, VanishingSet) and self.congs == other.congs


def _chart_meet(Xc, Z, i):
    A = Xc.scheme.charts[i]
    local = [Xc.local_rep(g, i) for g in Z if g in Xc.chart_points[i]]
    return cg.radical(cg.meet_all(A, local))


def _V(Xc, i, c) -> frozenset:
    return frozenset(Xc.point_of[(i, p)] for p in Xc.local_points[i] if c.le(p))


def vanishing_set_of(Xc, congs) -> frozenset:
    pts = set()
    for i, c in enumerate(congs):
        pts |= _V(Xc, i, c)
    return frozenset(pts)


def is_vanishing_set(Xc, Z) -> bool:
    """Z meets every chart in V_c for the meet c of its points there."""
    Z = frozenset(Z)
    for i in range(len(Xc.scheme.charts)):
        if _V(Xc, i, _chart_meet(Xc, Z, i)) != Z & Xc.chart_points[i]:
            return False
    return True


def vanishing_closure(Xc, Z) -> VanishingSet:
    """Least vanishing set containing Z; chart-wise closures repeated until stable."""
    Z = frozenset(Z)
    while True:
        congs = [_chart_meet(Xc, Z, i) for i in range(len(Xc.scheme.charts))]
        W = vanishing_set_of(Xc, congs)
        if W == Z:
            return VanishingSet(Xc.scheme, congs, Z)
        Z = Z | W


# ---------------------------------------------------------------- congruence sheaves

def chart_pieces(phi: SchemeMorphism, a) -> list:
    """Homs Gamma(X_a) -> Gamma(Y_i meet phi^-1 X_a), one per source chart meeting the preimage."""
    Y, X = phi.source, phi.target
    out = []
    for i, (b, f) in enumerate(zip(phi.assign, phi.homs)):
        if b == a:
            out.append((i, f))
            continue
        ov = X.overlaps.get((b, a))
        if ov is None:
            continue
        tgt = principal_localization(Y.charts[i], f(ov.s))
        if tgt.empty:
            continue
        out.append((i, compose(extend_hom(f, ov.loc, tgt), ov.res)))
    return out


@dataclass
class CongruenceSheaf:
    """Chart data of a congruence sheaf.

    Finite charts carry a FiniteCongruence; free monomial charts carry
    generator pairs whose prime hull is the congruence.
    """
    scheme: MonoidScheme
    congs: list
    quasi_coherent: bool
    witnesses: list = field(default_factory=list)

    def vanishing_points(self, Xc) -> frozenset:
        return vanishing_set_of(Xc, [cg.radical(c) for c in self.congs])


def congker_pairs(A, pieces) -> object:
    """Congruence kernel of A -> product of pieces.

    Finite A: the exact FiniteCongruence. Free monomial A: generator pairs
    with the same prime hull.
    """
    if A.is_finite:
        if not pieces:
            return cg.full(A)
        return cg.meet_all(A, [cg.congker(g) for g in pieces])
    if not pieces:
        return [(A.one, ZERO)]
    if all(g.target.is_finite for g in pieces):
        return _congker_into_finite(A, pieces)
    if len(pieces) == 1:
        return cg.symbolic_congker_generators(pieces[0])
    zero_patterns = {tuple(x is ZERO for x in g.images) for g in pieces if not g.target.is_finite}
    if any(g.target.is_finite for g in pieces) or len(zero_patterns) > 1:
        raise UnsupportedQuery("kernel into a mixed product of free monomial pieces")
    # no variable changes its vanishing across pieces: concatenate exponent vectors
    from .monoid import FreeMonomialMonoid
    n = sum(g.target.num_vars for g in pieces)
    T = FreeMonomialMonoid(n)
    images = []
    for v in range(A.num_vars):
        if pieces[0].images[v] is ZERO:
            images.append(ZERO)
            continue
        images.append(tuple(e for g in pieces for e in _as_exponents(g.images[v])))
    return cg.symbolic_congker_generators(MonoidHom(A, T, images, check=False))


def _as_exponents(x):
    return tuple(x)


def _congker_into_finite(A, pieces):
    """Generators of the kernel of a monomial hom into a finite product, by normal forms.

    Monomials are visited by degree; the first to reach an image value is its
    normal form, and every other monomial m*t_i is tied to the normal form of
    its value. These pairs rewrite every monomial to its normal form.
    """
    def value(x):
        return tuple(g(x) for g in pieces)

    one = A.one
    nf = {value(one): one}
    frontier = [one]
    pairs = []
    zero_val = value(ZERO)
    gens = [A.var(i) for i in range(A.num_vars)]
    gens += [A.inverse(A.var(i)) for i in sorted(A.inverted)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                y = A.mul(m, g)
                v = value(y)
                if v == zero_val:
                    pairs.append((y, ZERO))
                elif v in nf:
                    if nf[v] != y:
                        pairs.append((y, nf[v]))
                else:
                    nf[v] = y
                    nxt.append(y)
        frontier = nxt
    return pairs


def congruence_sheaf_of(phi: SchemeMorphism) -> CongruenceSheaf:
    if not is_quasi_compact(phi):
        raise UnsupportedQuery("congruence kernel needs a quasi-compact morphism")
    X = phi.target
    congs = []
    for a, A in enumerate(X.charts):
        pieces = [g for _, g in chart_pieces(phi, a)]
        if not A.is_finite:
            pieces = [_reduce_finite(g) for g in pieces]
        congs.append(congker_pairs(A, pieces))
    ok, wit = quasi_coherence(X, congs)
    return CongruenceSheaf(X, congs, ok, wit)


def _reduce_finite(g: MonoidHom) -> MonoidHom:
    """Compose a hom into a finite monoid with its strong reduction."""
    if not g.target.is_finite:
        return g
    S, proj = cg.sred(g.target)
    return compose(proj, g)


def quasi_coherence(X: MonoidScheme, congs) -> tuple[bool, list]:
    """Chart data must localize to the same congruence on every overlap."""
    bad = []
    for (i, j), ov in X.overlaps.items():
        A = X.charts[i]
        g = X.overlap_map(i, j)            # Gamma(U_j)[s_ji^-1] -> Gamma(U_i)[s_ij^-1]
        back = X.overlaps[(j, i)]
        if A.is_finite:
            mine, _ = cg.localize_congruence(congs[i], [ov.s], localize(A, [ov.s]))
            theirs_loc, _ = cg.localize_congruence(congs[j], [back.s], localize(X.charts[j], [back.s]))
            theirs = cg.pushforward(g, theirs_loc)
            if mine != theirs:
                bad.append((i, j))
        else:
            L = ov.loc.monoid
            mine = [(ov.loc.iota(x), ov.loc.iota(y)) for x, y in congs[i]]
            theirs = [(g(back.loc.iota(x)), g(back.loc.iota(y))) for x, y in congs[j]]
            same = all(cg.vanishing_set_contains(L, mine, pr) for pr in theirs) and \
                all(cg.vanishing_set_contains(L, theirs, pr) for pr in mine)
            if not same:
                bad.append((i, j))
    return not bad, bad


# ---------------------------------------------------------------- images on congruence spaces

def cong_image_finite(phi: SchemeMorphism, Yc=None, Xc=None):
    m = induced_cong_map(phi, Yc, Xc)
    return m, m.image()


def _in_image_chart(phi: SchemeMorphism, a, q) -> bool:
    """Is the prime q of the free monomial chart X_a in the image of the congruence map?"""
    for i, g in chart_pieces(phi, a):
        B = g.target
        if B.is_finite:
            if any(cg.symbolic_pullback(g, p) == q for p in cg.prime_congruences(B)):
                return True
        elif cg.symbolic_in_pullback_image(g, q):
            return True
    return False


def _symbolic_chart_window(X, a, bound):
    return cg.enumerate_symbolic_primes(X.charts[a], bound)


def _chart_vanishing(A, data, q) -> bool:
    """q contains the congruence given by generator pairs."""
    return all(pr in q for pr in data)


# ---------------------------------------------------------------- closed immersions

def is_closed_immersion_def(phi: SchemeMorphism) -> bool:
    """Affine, with surjective section maps over every target chart."""
    if not is_affine_morphism(phi):
        return False
    return all(sections_surjective(phi).values())


def _local_ring(A, P):
    """A localized at the complement of the prime P, with the localization map."""
    if A.is_finite:
        loc = localize(A, [a for a in A.elements() if a not in P])
        return loc.monoid, loc.iota
    inv = [A.var(v) for v in A.free_vars if v not in P]
    return localize_symbolic(A, inv)


def _local_map(f: MonoidHom, P, Q) -> MonoidHom:
    """A_P -> B_Q induced by f with f^-1(Q) = P."""
    A, B = f.source, f.target
    AP, iA = _local_ring(A, P)
    BQ, iB = _local_ring(B, Q)
    if AP.is_finite:
        loc = localize(A, [a for a in A.elements() if a not in P])
        return MonoidHom(AP, BQ, [BQ.mul(iB(f(x)), BQ.inverse(iB(f(s)))) for x, s in loc.rep])
    return MonoidHom(AP, BQ, [iB(f(AP.var(v))) for v in range(AP.num_vars)])


def stalk_surjectivity(phi: SchemeMorphism) -> dict:
    """O_{X,x} -> (phi_* O_Y)_x at each scheme point x; None where not decidable here.

    The stalk of phi_* O_Y at x is the section monoid over the preimage of the
    minimal open neighbourhood of x.
    """
    Y, X = phi.source, phi.target
    Ys, Xs = Y.space(), X.space()
    pm = phi.point_map()
    out = {}
    for x in range(len(X.points)):
        U = Xs.minimal_open(x)
        W = frozenset(y for y in range(len(Y.points)) if pm[y] in U)
        if not W:
            out[x] = True
            continue
        closed = [y for y in W if not any(z != y and z in W for z in Ys.spec[y])]
        pieces = []
        for y in closed:
            i = next(k for k in range(len(Y.charts)) if y in Y.chart_points[k])
            Q = Y.local_rep(y, i)
            a = phi.assign[i]
            P = X.local_rep(x, a)
            if P is not None:
                pieces.append(_stalk_piece(phi.homs[i], P, Q))
                continue
            piece = _transported_piece(phi, i, x, Q)
            if piece is None:
                pieces = None
                break
            pieces.append(piece)
        if pieces is None:
            out[x] = None
            continue
        if len(pieces) > 1:
            gens = [set(Ys.minimal_open(y)) for y in closed]
            if any(g & h for g, h in itertools.combinations(gens, 2)):
                out[x] = None
                continue
        out[x] = _jointly_surjective(pieces)
    return out


def _transported_piece(phi, i, x, Q):
    """O_{X,x} -> O_{Y,y} when x lies outside the chart that Y_i maps into."""
    X = phi.target
    a, f = phi.assign[i], phi.homs[i]
    for b in range(len(X.charts)):
        P = X.local_rep(x, b)
        ov = X.overlaps.get((a, b))
        if P is None or ov is None:
            continue
        Ab = X.charts[b]
        BQ, iB = _local_ring(f.target, Q)
        vals = []
        gens = list(Ab.elements()) if Ab.is_finite else [Ab.var(k) for k in range(Ab.num_vars)]
        for z in gens:
            num, den = ov.loc.fraction(ov.res(z))
            vals.append(BQ.zero if num is ZERO else BQ.mul(iB(f(num)), BQ.inverse(iB(f(den)))))
        g = MonoidHom(Ab, BQ, vals)
        if BQ.is_finite:
            M = frozenset(c for c in BQ.elements() if not BQ.is_unit(c))
        else:
            M = frozenset(BQ.free_vars)
        return _local_map(g, frozenset(P), M)
    return None


def _stalk_piece(f, P, Q):
    A = f.source
    Pf = frozenset(P)
    # the preimage of the local point Q is contained in P; localize A at P itself
    return _local_map(f, Pf, Q)


def _jointly_surjective(pieces) -> bool:
    if len(pieces) == 1:
        return pieces[0].is_surjective()
    if not all(g.source.is_finite and g.target.is_finite for g in pieces):
        return None
    A = pieces[0].source
    img = {tuple(g(a) for g in pieces) for a in A.elements()}
    total = 1
    for g in pieces:
        total *= g.target.size
    return len(img) == total


def closed_immersion_report(phi: SchemeMorphism, bound: int = DEFAULT_BOUND) -> dict:
    """The three topological conditions, each evaluated on its own."""
    rep = {"quasi_compact": is_quasi_compact(phi)}
    pmap = induced_point_map(phi)
    rep["embedding"] = pmap.is_embedding()
    stalks = stalk_surjectivity(phi)
    rep["sheaf_surjective"] = None if None in stalks.values() else all(stalks.values())
    rep["stalks"] = stalks
    rep["image_vanishing"] = image_is_vanishing_set(phi, bound)
    conds = [rep["quasi_compact"], rep["embedding"], rep["sheaf_surjective"], rep["image_vanishing"]]
    if any(c is False for c in conds):
        rep["verdict"] = False
    elif all(c is True for c in conds):
        rep["verdict"] = True
    else:
        rep["verdict"] = None
    return rep


def is_closed_immersion_topological(phi: SchemeMorphism, bound: int = DEFAULT_BOUND) -> bool:
    v = closed_immersion_report(phi, bound)["verdict"]
    if v is None:
        raise UnsupportedQuery("a topological condition could not be decided")
    return v


def image_is_vanishing_set(phi: SchemeMorphism, bound: int = DEFAULT_BOUND) -> bool:
    X = phi.target
    if _finite_scheme(X) and _finite_scheme(phi.source):
        Xc = scheme_cong_space(X)
        _, Z = cong_image_finite(phi, None, Xc)
        return is_vanishing_set(Xc, Z)
    if _symbolic_scheme(X):
        # per chart: the image is contained in V of the meet of its points;
        # the reverse inclusion is tested on a window of points
        for a, A in enumerate(X.charts):
            pieces = [_reduce_finite(g) for _, g in chart_pieces(phi, a)]
            data = congker_pairs(A, pieces)
            for q in _symbolic_chart_window(X, a, bound):
                if _chart_vanishing(A, data, q) and not _in_image_chart(phi, a, q):
                    return False
        return True
    raise UnsupportedQuery("mixed finite and free monomial target charts")


# ---------------------------------------------------------------- dominance

def is_dominant(phi: SchemeMorphism, bound: int = DEFAULT_BOUND) -> bool:
    """The image on congruence spaces is strictly dense."""
    X = phi.target
    if _finite_scheme(X) and _finite_scheme(phi.source):
        Xc = scheme_cong_space(X)
        _, Z = cong_image_finite(phi, None, Xc)
        return vanishing_closure(Xc, Z).points == frozenset(range(len(Xc.points)))
    if _symbolic_scheme(X):
        if len(X.charts) != 1:
            raise UnsupportedQuery("vanishing closures on glued free monomial schemes")
        A = X.charts[0]
        data = congker_pairs(A, [_reduce_finite(g) for _, g in chart_pieces(phi, 0)])
        # V_c is everything iff c lies in every prime; the trivial congruence is one of them
        return all(x == y for x, y in data)
    raise UnsupportedQuery("mixed finite and free monomial target charts")


def vanishing_closure_is_everything(A, pairs) -> bool:
    return all(x == y for x, y in pairs)


# ---------------------------------------------------------------- closed maps

def is_closed_map(phi: SchemeMorphism) -> bool:
    """Finite tier: the image of every point closure is closed."""
    if not (_finite_scheme(phi.source) and _finite_scheme(phi.target)):
        raise UnsupportedQuery("closed-map checks enumerate finite congruence spaces")
    if not is_quasi_compact(phi):
        raise UnsupportedQuery("closed-map check needs a quasi-compact morphism")
    return closed_map_witness(phi) is None


def closed_map_witness(phi: SchemeMorphism):
    """A point whose closure has non-closed image, or None."""
    m = induced_cong_map(phi)
    Ysp, Xsp = m.source, m.target
    for y in range(len(Ysp.points)):
        img = m.image(Ysp.closure({y}))
        if not Xsp.is_closed(img):
            return {"point": Ysp.labels[y], "image": sorted(Xsp.labels[x] for x in img)}
    return None


# ---------------------------------------------------------------- separatedness

def diagonal_image_closed(phi: SchemeMorphism, bound: int = DEFAULT_BOUND):
    """Is the image of the diagonal closed in the congruence space of Y x_X Y?"""
    d, fp = diagonal(phi)
    W = fp.scheme
    if _finite_scheme(W) and _finite_scheme(phi.source):
        m = induced_cong_map(d)
        return m.target.is_closed(m.image()), d
    if _symbolic_scheme(W):
        # specialization-closed on a window of points, chart by chart
        for a, A in enumerate(W.charts):
            pts = _symbolic_chart_window(W, a, bound)
            inside = [q for q in pts if _in_image_chart(d, a, q)]
            for z in inside:
                for q in pts:
                    if cg.symbolic_le(z, q) and not _in_image_chart(d, a, q):
                        return False, d
        return True, d
    raise UnsupportedQuery("mixed finite and free monomial charts in the fibre product")


def _diagonal_supported(phi: SchemeMorphism) -> bool:
    X, Y = phi.target, phi.source
    if len(X.charts) != 1:
        return False
    C = X.charts[0]
    if C.is_finite and _finite_scheme(Y):
        return True
    return _symbolic_scheme(Y) and not C.is_finite and C.num_vars == 0


def separated_report(phi: SchemeMorphism, bound: int = DEFAULT_BOUND) -> dict:
    if not _diagonal_supported(phi):
        C = phi.target.charts[0]
        if len(phi.target.charts) == 1 and (C.size == 2 if C.is_finite else C.num_vars == 0):
            raise UnsupportedQuery("mixed finite and free monomial charts in the fibre product")
        # over a separated target, Y -> X is separated iff Y -> MSpec(F1) is
        base = separated_report(structure_morphism(phi.target), bound)
        if not (base["definition"] and base["topological"]):
            raise UnsupportedQuery("the target is not separated, so the diagonal cannot be reduced")
        rep = separated_report(structure_morphism(phi.source), bound)
        return {**rep, "via": "source over F1"}
    d, _ = diagonal(phi)
    definitional = is_closed_immersion_def(d)
    closed, _ = diagonal_image_closed(phi, bound)
    topological = is_quasi_separated(phi) and closed
    return {"definition": definitional, "quasi_separated": is_quasi_separated(phi),
            "diagonal_image_closed": closed, "topological": topological}


def is_separated(phi: SchemeMorphism, bound: int = DEFAULT_BOUND) -> bool:
    rep = separated_report(phi, bound)
    if rep["definition"] != rep["topological"]:
        raise CharacterizationMismatch(f"separatedness checks disagree: {rep}")
    return rep["definition"]


# ---------------------------------------------------------------- strong reduction of schemes

def sred_scheme(X: MonoidScheme):
    """Chart-wise strong reduction glued along the induced overlaps, with its closed immersion."""
    from .scheme import Overlap, glue
    if not _finite_scheme(X):
        raise UnsupportedQuery("strong reduction is computed on finite charts")
    reds = [cg.sred(A) for A in X.charts]
    charts = [R for R, _ in reds]
    gluings = {}
    for (i, j), ov in X.overlaps.items():
        Ri, pi = reds[i]
        Rj, pj = reds[j]
        s = pi(ov.s)
        loc = principal_localization(Ri, s)
        if loc.empty:
            continue
        # Gamma(U_j) -> Gamma(U_i)[s^-1] -> Ri[s^-1], then strongly reduce the target
        src = ov.loc
        step = extend_hom(pi, src, loc)
        res = compose(step, ov.res)
        Ls, lproj = cg.sred(loc.monoid)
        if Ls.size != loc.monoid.size:
            raise GluingError("localized strong reduction is not strongly reduced")
        images = []
        for b in Rj.elements():
            pre = next(x for x in X.charts[j].elements() if pj(x) == b)
            images.append(res(pre))
        gluings[(i, j)] = (s, images)
    Xr = glue(charts, gluings, X.names)
    iota = SchemeMorphism(Xr, X, list(range(len(charts))), [p for _, p in reds], name="sred")
    return Xr, iota
