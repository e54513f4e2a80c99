"""Monoid schemes as gluing data of affine charts, their morphisms, and fibre products."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import congruence as cg
from .monoid import (ZERO, F1, FiniteMonoid, FreeMonomialMonoid, MonoidError, MonoidHom,
                     compose, identity, localize, localize_symbolic, tensor, unique_hom_from_f1)
from .spectra import FiniteSpace, symbolic_prime_ideals
from .unionfind import UnionFind


class GluingError(MonoidError):
    pass


# ---------------------------------------------------------------- localization helpers

@dataclass
class PrincipalLocalization:
    """A[s^-1] with its map; `rep` gives a fraction (a, s^k) for finite charts."""
    base: object
    s: object
    monoid: object
    iota: MonoidHom
    rep: list | None = None

    @property
    def empty(self) -> bool:
        return self.monoid is None

    def fraction(self, x):
        """(numerator, denominator) over the base."""
        if self.base.is_finite:
            return self.rep[x]
        if x is ZERO:
            return ZERO, self.base.one
        num = tuple(max(e, 0) for e in x)
        den = tuple(max(-e, 0) for e in x)
        return num, den


def principal_localization(A, s) -> PrincipalLocalization:
    if A.is_finite:
        loc = localize(A, [s])
        if loc.monoid.is_degenerate:
            return PrincipalLocalization(A, s, None, None)
        return PrincipalLocalization(A, s, loc.monoid, loc.iota, loc.rep)
    B, iota = localize_symbolic(A, [s])
    return PrincipalLocalization(A, s, B, iota)


def divide(T, a, b):
    """a * b^-1 in T (b must be a unit)."""
    return T.mul(a, T.inverse(b))


def extend_hom(f: MonoidHom, src: PrincipalLocalization, tgt: PrincipalLocalization) -> MonoidHom:
    """f: A -> B induces A[s^-1] -> B[f(s)^-1]; src localizes A at s, tgt localizes B at (a multiple of) f(s)."""
    L, M = src.monoid, tgt.monoid
    if L is None:
        raise GluingError("cannot extend over an empty localization")
    if L.is_finite:
        images = []
        for x in L.elements():
            a, u = src.rep[x]
            images.append(divide(M, tgt.iota(f(a)), tgt.iota(f(u))))
        return MonoidHom(L, M, images)
    return MonoidHom(L, M, [tgt.iota(f(L.var(i))) for i in range(L.num_vars)])


def extend_to_localization(f: MonoidHom, src: PrincipalLocalization) -> MonoidHom:
    """f: A -> M with f(s) a unit extends to A[s^-1] -> M."""
    L, M = src.monoid, f.target
    if L.is_finite:
        return MonoidHom(L, M, [divide(M, f(a), f(u)) for a, u in src.rep])
    return MonoidHom(L, M, [f(L.var(i)) for i in range(L.num_vars)])


def compose_into_localization(g: MonoidHom, loc: PrincipalLocalization, further) -> tuple:
    """Compose g: C -> loc.monoid with loc.monoid -> loc.base[further^-1] (further a multiple of s)."""
    big = principal_localization(loc.base, further)
    if big.empty:
        return big, None
    step = extend_hom(identity(loc.base), loc, big)
    return big, compose(step, g)


# ---------------------------------------------------------------- schemes

@dataclass
class Overlap:
    """U_i meets U_j in D(s) of U_i; `res` restricts sections of U_j into Gamma(U_i)[s^-1]."""
    i: int
    j: int
    s: object
    loc: PrincipalLocalization
    res: MonoidHom


class MonoidScheme:
    def __init__(self, charts, overlaps=None, names=None, *, check: bool = True):
        self.charts = list(charts)
        self.names = list(names) if names else [f"U{i}" for i in range(len(self.charts))]
        self.overlaps: dict = {}
        for (i, j), ov in (overlaps or {}).items():
            self.overlaps[(i, j)] = ov
        if check:
            self.validate()
        self._build_points()

    # construction checks
    def validate(self):
        n = len(self.charts)
        for (i, j), ov in self.overlaps.items():
            if (j, i) not in self.overlaps:
                raise GluingError(f"overlap ({i},{j}) has no reverse")
            A = self.charts[i]
            if ov.loc.monoid is None:
                raise GluingError(f"overlap ({i},{j}) is empty; omit it instead")
            if ov.res.source != self.charts[j] or ov.res.target != ov.loc.monoid:
                raise GluingError(f"restriction ({i},{j}) has the wrong shape")
            back = self.overlaps[(j, i)]
            if not ov.loc.monoid.is_unit(ov.res(back.s)):
                raise GluingError(f"restriction ({i},{j}) must invert s_{j}{i}: not an open immersion")
        for (i, j) in self.overlaps:
            if i < j:
                self._check_iso(i, j)
        for i, j, k in itertools.permutations(range(n), 3):
            if (i, j) in self.overlaps and (i, k) in self.overlaps and (j, k) in self.overlaps:
                self._check_cocycle(i, j, k)

    def overlap_map(self, i, j) -> MonoidHom:
        """Gamma(U_j)[s_ji^-1] -> Gamma(U_i)[s_ij^-1]."""
        ov, back = self.overlaps[(i, j)], self.overlaps[(j, i)]
        return extend_to_localization(ov.res, back.loc)

    def _check_iso(self, i, j):
        f = self.overlap_map(i, j)   # U_j side -> U_i side
        g = self.overlap_map(j, i)
        for h, name in ((compose(f, g), i), (compose(g, f), j)):
            L = h.source
            if L.is_finite:
                ok = all(h(x) == x for x in L.elements())
            else:
                ok = all(h(L.var(k)) == L.var(k) for k in range(L.num_vars))
            if not ok:
                raise GluingError(f"gluing maps between charts {i} and {j} are not mutually inverse")

    def _check_cocycle(self, i, j, k):
        """Restricting from U_k to the triple overlap directly or through U_j agrees."""
        A, B = self.charts[i], self.charts[j]
        ov_ij, ov_ik, ov_jk = self.overlaps[(i, j)], self.overlaps[(i, k)], self.overlaps[(j, k)]
        Ck = self.charts[k]
        gens = list(Ck.generators) if Ck.is_finite else [Ck.var(t) for t in range(Ck.num_vars)]
        for b in gens:
            direct = ov_ik.loc.fraction(ov_ik.res(b))
            c, u = ov_jk.loc.fraction(ov_jk.res(b))
            a1, s1 = ov_ij.loc.fraction(ov_ij.res(c) if c is not ZERO else ov_ij.loc.monoid.zero)
            a2, s2 = ov_ij.loc.fraction(ov_ij.res(u))
            via = (A.mul(a1, s2), A.mul(s1, a2))
            if not _fraction_equal(A, direct, via, [ov_ij.s, ov_ik.s, a2]):
                raise GluingError(f"cocycle condition fails on charts ({i},{j},{k})")

    # points of the scheme
    def _build_points(self):
        local = []
        for i, A in enumerate(self.charts):
            ps = list(A.prime_ideals) if A.is_finite else symbolic_prime_ideals(A)
            local.append(ps)
        self.local_points = local
        flat = [(i, P) for i, ps in enumerate(local) for P in ps]
        pos = {x: k for k, x in enumerate(flat)}
        uf = UnionFind(len(flat))
        for (i, j), ov in self.overlaps.items():
            for P in local[i]:
                if _in_ideal(self.charts[i], ov.s, P):
                    continue
                Q = transport_prime(ov, P, self.charts[j])
                uf.union(pos[(i, P)], pos[(j, Q)])
        roots = sorted(set(uf.reps()))
        gidx = {r: g for g, r in enumerate(roots)}
        self.point_of = {x: gidx[uf.find(pos[x])] for x in flat}
        self.points = [flat[r] for r in roots]
        self.chart_points = [frozenset(self.point_of[(i, P)] for P in local[i]) for i in range(len(self.charts))]

    def global_point(self, i, P) -> int:
        return self.point_of[(i, frozenset(P))]

    def local_rep(self, g, chart) -> frozenset | None:
        for P in self.local_points[chart]:
            if self.point_of[(chart, P)] == g:
                return P
        return None

    def space(self) -> FiniteSpace:
        sub = {}
        for i, A in enumerate(self.charts):
            sub[self.names[i]] = self.chart_points[i]
            hs = list(A.elements()) if A.is_finite else [
                tuple(int(v in S) for v in range(A.num_vars))
                for r in range(len(A.free_vars) + 1) for S in itertools.combinations(A.free_vars, r)]
            for h in hs:
                sub[f"{self.names[i]}:D({A.fmt(h)})"] = frozenset(
                    self.point_of[(i, P)] for P in self.local_points[i] if not _in_ideal(A, h, P))
        labels = [f"{self.names[i]}:{_prime_label(self.charts[i], P)}" for i, P in self.points]
        return FiniteSpace(list(range(len(self.points))), labels, sub)

    def is_affine(self) -> bool:
        sp = self.space()
        return len(sp.closed_points()) <= 1

    def __repr__(self):
        return f"MonoidScheme({', '.join(f'{n}={c}' for n, c in zip(self.names, self.charts))})"


def _fraction_equal(A, x, y, dens) -> bool:
    (a, s), (b, u) = x, y
    if not A.is_finite:
        if a is ZERO or b is ZERO:
            return a is ZERO and b is ZERO
        return tuple(p - q for p, q in zip(a, s)) == tuple(p - q for p, q in zip(b, u))
    T = A.submonoid([d for d in dens if d is not None])
    return any(A.mul(t, A.mul(u, a)) == A.mul(t, A.mul(s, b)) for t in T)


def _in_ideal(A, h, P) -> bool:
    if A.is_finite:
        return h in P
    return h is ZERO or any(h[i] for i in P)


def _prime_label(A, P) -> str:
    if A.is_finite:
        from .spectra import _ideal_label
        return _ideal_label(A, P)
    from .spectra import symbolic_ideal_label
    return symbolic_ideal_label(A, P)


def transport_prime(ov: Overlap, P, target) -> frozenset:
    """Prime of U_j matching the prime P of U_i on the overlap."""
    L = ov.loc
    A = ov.loc.base
    if target.is_finite:
        return frozenset(b for b in target.elements() if _in_ideal(A, L.fraction(ov.res(b))[0], P))
    return frozenset(v for v in target.free_vars if _in_ideal(A, L.fraction(ov.res(target.var(v)))[0], P))


def transport_congruence(ov: Overlap, p, target):
    """Prime congruence of U_j matching p on U_i (I_p must avoid s)."""
    A = ov.loc.base
    if A.is_finite:
        pl, _ = cg.localize_congruence(p, [ov.s], localize(A, [ov.s]))
        return cg.pullback(ov.res, pl)
    pl = cg.SymbolicPrimeCongruence(ov.loc.monoid, p.vanishing, p.lattice)
    return cg.symbolic_pullback(ov.res, pl)


# ---------------------------------------------------------------- constructors

def affine(A, name: str = "U0") -> MonoidScheme:
    return MonoidScheme([A], {}, [name])


def glue(charts, gluings, names=None) -> MonoidScheme:
    """Glue charts along principal opens.

    `gluings` maps (i, j) to (s_ij, images) where `images` are the images of
    the generators of chart j (elements for finite charts, variables for
    free monomial ones) inside chart i localized at s_ij.
    """
    overlaps = {}
    for (i, j), (s, images) in gluings.items():
        A, B = charts[i], charts[j]
        loc = principal_localization(A, s)
        if loc.empty:
            continue
        L = loc.monoid
        if B.is_finite:
            res = MonoidHom(B, L, _images_from_generators(B, L, images))
        else:
            res = MonoidHom(B, L, list(images))
        overlaps[(i, j)] = Overlap(i, j, s, loc, res)
    return MonoidScheme(charts, overlaps, names)


def _images_from_generators(B: FiniteMonoid, L, images):
    if len(images) == B.size:
        return list(images)
    gens = B.generators
    if len(images) != len(gens):
        raise GluingError("give one image per generator of a finite chart")
    out = []
    for b in B.elements():
        w = B.words[b]
        out.append(L.zero if w is None else L.prod(x for x, e in zip(images, w) for _ in range(e)))
    return out


def disjoint_union(*schemes) -> MonoidScheme:
    charts, names, overlaps = [], [], {}
    for X in schemes:
        off = len(charts)
        charts += X.charts
        names += [f"{n}" if n not in names else f"{n}_{off}" for n in X.names]
        for (i, j), ov in X.overlaps.items():
            overlaps[(i + off, j + off)] = Overlap(i + off, j + off, ov.s, ov.loc, ov.res)
    return MonoidScheme(charts, overlaps, names)


def point() -> MonoidScheme:
    return affine(F1(), "pt")


def symbolic_point() -> MonoidScheme:
    """MSpec(F1) on the free monomial tier (no variables)."""
    return affine(FreeMonomialMonoid(0), "pt")


def affine_space(n: int, names=None) -> MonoidScheme:
    return affine(FreeMonomialMonoid(n, names=names), "A")


def torus(n: int = 1, names=None) -> MonoidScheme:
    return affine(FreeMonomialMonoid(n, frozenset(range(n)), names), "G")


def projective_space(n: int) -> MonoidScheme:
    """P^n glued from n+1 copies of A^n with chart i using coordinates x_k/x_i."""
    charts, names = [], []
    coords = []
    for i in range(n + 1):
        ks = [k for k in range(n + 1) if k != i]
        coords.append(ks)
        charts.append(FreeMonomialMonoid(n, names=tuple(f"x{k}/x{i}" for k in ks)))
        names.append(f"U{i}")
    gluings = {}
    for i in range(n + 1):
        for j in range(n + 1):
            if i == j:
                continue
            A = charts[i]
            s = A.var(coords[i].index(j))           # x_j / x_i
            images = []
            for k in coords[j]:                    # variable x_k / x_j of chart j
                v = [0] * n
                if k != i:
                    v[coords[i].index(k)] += 1
                v[coords[i].index(j)] -= 1
                images.append(tuple(v))
            gluings[(i, j)] = (s, images)
    return glue(charts, gluings, names)


def projective_line() -> MonoidScheme:
    return projective_space(1)


# ---------------------------------------------------------------- morphisms

class SchemeMorphism:
    """phi: Y -> X; Y's chart i maps into X's chart assign[i] via homs[i]: Gamma(X_a) -> Gamma(Y_i)."""

    def __init__(self, source: MonoidScheme, target: MonoidScheme, assign, homs, *, check: bool = True, name=None):
        self.source, self.target = source, target
        self.assign = list(assign)
        self.homs = list(homs)
        self.name = name
        if check:
            self.validate()

    def validate(self):
        Y, X = self.source, self.target
        if len(self.assign) != len(Y.charts) or len(self.homs) != len(Y.charts):
            raise GluingError("one target chart and one hom per source chart")
        for i, (a, f) in enumerate(zip(self.assign, self.homs)):
            if f.source != X.charts[a] or f.target != Y.charts[i]:
                raise GluingError(f"hom for chart {i} has the wrong endpoints")
        # images of a point computed from different charts must agree
        for (i, P), g in Y.point_of.items():
            x = self.point_image_local(i, P)
            for j in range(len(Y.charts)):
                Q = Y.local_rep(g, j)
                if Q is not None and self.point_image_local(j, Q) != x:
                    raise GluingError(f"chart maps {i} and {j} disagree on a point")
        self._check_local_stalks()

    def _check_local_stalks(self):
        # local homs: units of the target stalk pull back to units (finite charts only)
        Y, X = self.source, self.target
        for i, f in enumerate(self.homs):
            A, B = f.source, f.target
            if not (A.is_finite and B.is_finite):
                continue
            for P in Y.local_points[i]:
                Q = frozenset(a for a in A.elements() if f(a) in P)
                for a in A.elements():
                    if (a not in Q) != (f(a) not in P):
                        raise GluingError("stalk map is not local")

    def point_image_local(self, i, P) -> int:
        a, f = self.assign[i], self.homs[i]
        A = f.source
        if A.is_finite:
            Q = frozenset(x for x in A.elements() if _in_ideal(f.target, f(x), P))
        else:
            Q = frozenset(v for v in A.free_vars if _in_ideal(f.target, f(A.var(v)), P))
        return self.target.point_of[(a, Q)]

    def point_map(self) -> list:
        Y = self.source
        return [self.point_image_local(i, P) for (i, P) in Y.points]

    def preimage_chart(self, a) -> frozenset:
        X = self.target
        pm = self.point_map()
        return frozenset(g for g, x in enumerate(pm) if x in X.chart_points[a])

    def __repr__(self):
        return self.name or f"SchemeMorphism({self.source} -> {self.target})"


def affine_morphism(f: MonoidHom, name=None) -> SchemeMorphism:
    """MSpec(B) -> MSpec(A) for f: A -> B."""
    return SchemeMorphism(affine(f.target), affine(f.source), [0], [f], name=name)


def identity_morphism(X: MonoidScheme) -> SchemeMorphism:
    return SchemeMorphism(X, X, list(range(len(X.charts))), [identity(A) for A in X.charts], name="id")


def structure_morphism(X: MonoidScheme) -> SchemeMorphism:
    """X -> MSpec(F1), on the symbolic tier when every chart is free monomial."""
    if any(A.is_finite for A in X.charts):
        pt = point()
        homs = [unique_hom_from_f1(A) for A in X.charts]
    else:
        pt = symbolic_point()
        homs = [MonoidHom(pt.charts[0], A, []) for A in X.charts]
    return SchemeMorphism(X, pt, [0] * len(X.charts), homs, name="to_pt")


def compose_morphisms(psi: SchemeMorphism, phi: SchemeMorphism) -> SchemeMorphism:
    """psi after phi, when every chart image lands in a single chart of psi's source."""
    if phi.target is not psi.source:
        raise GluingError("compose: endpoints do not match")
    assign, homs = [], []
    for i, (b, f) in enumerate(zip(phi.assign, phi.homs)):
        c, g = psi.assign[b], psi.homs[b]
        assign.append(c)
        homs.append(compose(f, g))
    return SchemeMorphism(phi.source, psi.target, assign, homs)


# ---------------------------------------------------------------- fibre products

@dataclass
class FibreProduct:
    scheme: MonoidScheme
    pr1: SchemeMorphism
    pr2: SchemeMorphism
    index: dict          # (i, k) -> chart index
    tensors: dict        # (i, k) -> TensorProduct


def fiber_product(phi: SchemeMorphism, psi: SchemeMorphism, cap: int = 10000) -> FibreProduct:
    X = phi.target
    if psi.target is not X and psi.target.charts != X.charts:
        raise GluingError("fibre product needs a common target")
    if len(X.charts) != 1:
        raise GluingError("fibre products are supported over an affine base")
    Y, Z = phi.source, psi.source
    charts, names, index, tensors = [], [], {}, {}
    for i in range(len(Y.charts)):
        for k in range(len(Z.charts)):
            tp = tensor(phi.homs[i], psi.homs[k], cap)
            if tp.monoid.is_degenerate:
                continue  # empty piece
            index[(i, k)] = len(charts)
            tensors[(i, k)] = tp
            charts.append(tp.monoid)
            names.append(f"{Y.names[i]}x{Z.names[k]}")
    overlaps = {}
    for (i, k), (i2, k2) in itertools.permutations(index, 2):
        if not _has_overlap(Y, i, i2) or not _has_overlap(Z, k, k2):
            continue
        tp, tp2 = tensors[(i, k)], tensors[(i2, k2)]
        T = tp.monoid
        sY = Y.overlaps[(i, i2)].s if i != i2 else Y.charts[i].one
        sZ = Z.overlaps[(k, k2)].s if k != k2 else Z.charts[k].one
        s = T.mul(tp.left(sY), tp.right(sZ))
        loc = principal_localization(T, s)
        if loc.empty:
            continue
        hA = _restrict_factor(Y, i, i2, tp.left, loc)
        hB = _restrict_factor(Z, k, k2, tp.right, loc)
        res = tp2.mediate(hA, hB)
        overlaps[(index[(i, k)], index[(i2, k2)])] = Overlap(index[(i, k)], index[(i2, k2)], s, loc, res)
    W = MonoidScheme(charts, overlaps, names)
    pr1 = SchemeMorphism(W, Y, [i for (i, k) in index], [tensors[key].left for key in index], name="pr1")
    pr2 = SchemeMorphism(W, Z, [k for (i, k) in index], [tensors[key].right for key in index], name="pr2")
    return FibreProduct(W, pr1, pr2, index, tensors)


def _has_overlap(Y, i, i2) -> bool:
    return i == i2 or (i, i2) in Y.overlaps


def _restrict_factor(Y, i, i2, coproj: MonoidHom, loc: PrincipalLocalization) -> MonoidHom:
    """Gamma(Y_i2) -> Gamma(Y_i)[s^-1] -> T[s'^-1] through the coprojection of chart i."""
    L = loc.monoid
    into = compose(loc.iota, coproj)         # Gamma(Y_i) -> T[s^-1]
    if i == i2:
        return into
    ov = Y.overlaps[(i, i2)]
    M = ov.loc.monoid                          # Gamma(Y_i)[s_ii2^-1]
    if M.is_finite:
        images = []
        for x in M.elements():
            a, u = ov.loc.rep[x]
            images.append(divide(L, into(a), into(u)))
        ext = MonoidHom(M, L, images)
    else:
        ext = MonoidHom(M, L, [into(M.var(v)) for v in range(M.num_vars)])
    return compose(ext, ov.res)


def diagonal(phi: SchemeMorphism) -> tuple[SchemeMorphism, FibreProduct]:
    fp = fiber_product(phi, phi)
    Y = phi.source
    assign, homs = [], []
    for i in range(len(Y.charts)):
        tp = fp.tensors[(i, i)]
        assign.append(fp.index[(i, i)])
        homs.append(tp.mediate(identity(Y.charts[i]), identity(Y.charts[i])))
    return SchemeMorphism(Y, fp.scheme, assign, homs, name="diagonal"), fp


# ---------------------------------------------------------------- morphism classes

def is_quasi_compact(phi: SchemeMorphism) -> bool:
    # preimages of affine charts are finite unions of principal opens of finitely many charts
    return True


def is_quasi_separated(phi: SchemeMorphism) -> bool:
    # chart intersections are principal opens, hence affine and quasi-compact
    return True


def is_finite_type(phi: SchemeMorphism) -> bool:
    return True


def preimage_space(phi: SchemeMorphism, a):
    Y = phi.source
    sp = Y.space()
    pre = phi.preimage_chart(a)
    return sp, pre


def is_affine_morphism(phi: SchemeMorphism) -> bool:
    """Preimage of every target chart is empty or has a unique closed point."""
    sp = phi.source.space()
    for a in range(len(phi.target.charts)):
        pre = phi.preimage_chart(a)
        if len(_closed_in(sp, pre)) > 1:
            return False
    return True


def _closed_in(sp: FiniteSpace, S) -> list:
    return [i for i in S if not any(j != i and j in S for j in sp.spec[i])]


def section_map(phi: SchemeMorphism, a):
    """Gamma(X_a) -> Gamma(phi^-1 X_a) when the preimage is affine; None if empty."""
    Y, X = phi.source, phi.target
    sp = Y.space()
    pre = phi.preimage_chart(a)
    if not pre:
        return None
    closed = _closed_in(sp, pre)
    if len(closed) != 1:
        raise GluingError("preimage of the chart is not affine")
    g = closed[0]
    i = next(i for i in range(len(Y.charts)) if g in Y.chart_points[i])
    b, f = phi.assign[i], phi.homs[i]
    if b == a:
        return f
    ov = X.overlaps[(b, a)]           # X_b meets X_a in D(s) of X_b
    tgt = principal_localization(Y.charts[i], f(ov.s))
    ext = extend_hom(f, ov.loc, tgt)
    return compose(ext, ov.res)


def sections_surjective(phi: SchemeMorphism) -> dict:
    out = {}
    for a in range(len(phi.target.charts)):
        m = section_map(phi, a)
        out[a] = True if m is None else m.is_surjective()
    return out


# ---------------------------------------------------------------- congruence spaces of schemes

@dataclass
class GluedCongSpace:
    """Congruence space of a scheme with finite charts, glued from the chart spaces."""
    scheme: MonoidScheme
    space: FiniteSpace
    points: list                      # canonical (chart, congruence)
    point_of: dict                    # (chart, congruence) -> global index
    chart_points: list
    local_points: list

    def pi(self) -> list:
        X = self.scheme
        return [X.point_of[(i, cg.nullideal(p))] for i, p in self.points]

    def pi_map(self):
        from .spectra import ContinuousMap
        return ContinuousMap(self.space, self.scheme.space(), self.pi())

    def local_rep(self, g, chart):
        for p in self.local_points[chart]:
            if self.point_of[(chart, p)] == g:
                return p
        return None


def scheme_cong_space(X: MonoidScheme, cap: int = cg.DEFAULT_CAP) -> GluedCongSpace:
    if not all(A.is_finite for A in X.charts):
        raise GluingError("glued congruence spaces are enumerated for finite charts; "
                          "use SymbolicSchemeCongSpace for free monomial charts")
    local = [cg.prime_congruences(A) for A in X.charts]
    flat = [(i, p) for i, ps in enumerate(local) for p in ps]
    pos = {x: k for k, x in enumerate(flat)}
    uf = UnionFind(len(flat))
    for (i, j), ov in X.overlaps.items():
        for p in local[i]:
            if ov.s in cg.nullideal(p):
                continue
            q = transport_congruence(ov, p, X.charts[j])
            uf.union(pos[(i, p)], pos[(j, q)])
    roots = sorted(set(uf.reps()))
    gidx = {r: g for g, r in enumerate(roots)}
    point_of = {x: gidx[uf.find(pos[x])] for x in flat}
    points = [flat[r] for r in roots]
    chart_points = [frozenset(point_of[(i, p)] for p in local[i]) for i in range(len(X.charts))]
    sub = {}
    from .spectra import congruence_label
    for i, A in enumerate(X.charts):
        sub[X.names[i]] = chart_points[i]
        for a, b in itertools.combinations(A.elements(), 2):
            sub[f"{X.names[i]}:U({A.fmt(a)},{A.fmt(b)})"] = frozenset(
                point_of[(i, p)] for p in local[i] if not p.related(a, b))
    prefix = len(X.charts) > 1
    labels = [(f"{X.names[i]}:" if prefix else "") + congruence_label(p) for i, p in points]
    space = FiniteSpace(list(range(len(points))), labels, sub)
    return GluedCongSpace(X, space, points, point_of, chart_points, local)


def cong_point_map(phi: SchemeMorphism, Yc: GluedCongSpace, Xc: GluedCongSpace) -> list:
    """The induced map on congruence spaces: p on chart i goes to its pullback along homs[i]."""
    out = []
    for i, p in Yc.points:
        q = cg.pullback(phi.homs[i], p)
        out.append(Xc.point_of[(phi.assign[i], q)])
    return out


def induced_cong_map(phi: SchemeMorphism, Yc=None, Xc=None, cap: int = cg.DEFAULT_CAP):
    from .spectra import ContinuousMap
    Yc = Yc or scheme_cong_space(phi.source, cap)
    Xc = Xc or scheme_cong_space(phi.target, cap)
    return ContinuousMap(Yc.space, Xc.space, cong_point_map(phi, Yc, Xc))


def induced_point_map(phi: SchemeMorphism):
    from .spectra import ContinuousMap
    return ContinuousMap(phi.source.space(), phi.target.space(), phi.point_map())


class SymbolicSchemeCongSpace:
    """Chart-indexed congruence space of a scheme with free monomial charts; points are never all listed."""

    def __init__(self, X: MonoidScheme):
        if any(A.is_finite for A in X.charts):
            raise GluingError("expected free monomial charts")
        self.scheme = X

    def transport(self, i, p, j):
        if i == j:
            return p
        ov = self.scheme.overlaps.get((i, j))
        if ov is None or p.vanishes(ov.s):
            return None
        return transport_congruence(ov, p, self.scheme.charts[j])

    def canonical(self, i, p):
        """Least chart containing the point, with its congruence there."""
        for j in range(len(self.scheme.charts)):
            q = self.transport(i, p, j)
            if q is not None:
                return j, q
        return i, p

    def same_point(self, x, y) -> bool:
        return self.canonical(*x) == self.canonical(*y)

    def points(self, bound: int = 2) -> list:
        out = []
        for i, A in enumerate(self.scheme.charts):
            for p in cg.enumerate_symbolic_primes(A, bound):
                c = self.canonical(i, p)
                if c not in out:
                    out.append(c)
        return out

    def closed_points(self) -> list:
        from .spectra import SymbolicCongSpace
        X = self.scheme
        out = []
        for i, A in enumerate(X.charts):
            for p in SymbolicCongSpace(A).closed_points():
                closed = True
                for j in range(len(X.charts)):
                    q = self.transport(i, p, j)
                    if q is not None and not SymbolicCongSpace(X.charts[j]).is_closed_point(q):
                        closed = False
                c = self.canonical(i, p)
                if closed and c not in out:
                    out.append(c)
        return out

    def pi(self, x) -> int:
        i, p = x
        return self.scheme.point_of[(i, cg.symbolic_nullideal(p))]
