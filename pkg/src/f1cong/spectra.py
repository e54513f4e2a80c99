"""Prime spectra and congruence spaces as finite topological spaces, plus the symbolic tier."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import congruence as cg
from . import zlinalg as zl
from .monoid import (ZERO, F1, FiniteMonoid, FreeMonomialMonoid, MonoidError, MonoidHom,
                     compose, enumerate_homs_to_F1, frac, localize, quotient_by_ideal)


@dataclass
class FiniteSpace:
    """Finite space generated by a subbasis of named opens.

    `spec[i]` is the set of points in the closure of point i.
    """
    points: list
    labels: list
    subbasis: dict
    spec: list = field(default_factory=list)

    def __post_init__(self):
        n = len(self.points)
        opens = list(self.subbasis.values())
        # j lies in the closure of i iff every subbasic open around j contains i
        self.spec = [frozenset(j for j in range(n) if all(i in U for U in opens if j in U))
                     for i in range(n)]

    def __len__(self):
        return len(self.points)

    def index(self, point) -> int:
        return self.points.index(point)

    def leq(self, i, j) -> bool:
        """j is a specialization of i."""
        return j in self.spec[i]

    def closure(self, S) -> frozenset:
        out = set()
        for i in S:
            out |= self.spec[i]
        return frozenset(out)

    def is_closed(self, S) -> bool:
        return self.closure(S) == frozenset(S)

    def is_open(self, S) -> bool:
        S = frozenset(S)
        return self.is_closed(frozenset(range(len(self))) - S)

    def minimal_open(self, i) -> frozenset:
        out = frozenset(range(len(self)))
        for U in self.subbasis.values():
            if i in U:
                out &= U
        return out

    def closed_points(self) -> list:
        return [i for i in range(len(self)) if self.spec[i] == {i}]

    def is_T0(self) -> bool:
        return all(not (self.leq(i, j) and self.leq(j, i)) for i in range(len(self)) for j in range(i))

    def is_discrete(self) -> bool:
        return all(self.spec[i] == {i} for i in range(len(self)))

    def covering_relations(self) -> list:
        """Pairs (i, j) with j an immediate specialization of i."""
        out = []
        for i in range(len(self)):
            for j in self.spec[i]:
                if j == i:
                    continue
                if not any(k not in (i, j) and self.leq(i, k) and self.leq(k, j) for k in range(len(self))):
                    out.append((i, j))
        return out

    def subspace(self, S):
        S = sorted(S)
        pos = {i: k for k, i in enumerate(S)}
        sub = {name: frozenset(pos[i] for i in U if i in pos) for name, U in self.subbasis.items()}
        return FiniteSpace([self.points[i] for i in S], [self.labels[i] for i in S], sub)


@dataclass
class ContinuousMap:
    source: FiniteSpace
    target: FiniteSpace
    mapping: tuple

    def __call__(self, i):
        return self.mapping[i]

    def preimage(self, S) -> frozenset:
        S = set(S)
        return frozenset(i for i, j in enumerate(self.mapping) if j in S)

    def image(self, S=None) -> frozenset:
        if S is None:
            S = range(len(self.source))
        return frozenset(self.mapping[i] for i in S)

    def is_continuous(self) -> bool:
        return all(self.source.is_open(self.preimage(U)) for U in self.target.subbasis.values())

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self) -> bool:
        return set(self.mapping) == set(range(len(self.target)))

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def is_open_map(self) -> bool:
        # images of minimal open neighbourhoods generate all opens
        return all(self.target.is_open(self.image(self.source.minimal_open(i))) for i in range(len(self.source)))

    def is_closed_map(self) -> bool:
        return all(self.target.is_closed(self.image(self.source.spec[i])) for i in range(len(self.source)))

    def is_embedding(self) -> bool:
        """Injective, continuous, and open onto its image."""
        if not (self.is_injective() and self.is_continuous()):
            return False
        im = self.image()
        for i in range(len(self.source)):
            V = self.image(self.source.minimal_open(i))
            # V must be the trace of an open set: its generization closure meets the image in V
            gen = frozenset(k for k in range(len(self.target)) if any(self.target.leq(k, j) for j in V))
            if gen & im != V:
                return False
        return True

    def is_closed_embedding(self) -> bool:
        return self.is_embedding() and self.target.is_closed(self.image())

    def is_homeomorphism(self) -> bool:
        return self.is_bijective() and self.is_continuous() and self.is_open_map()


# ---------------------------------------------------------------- finite tier

def mspec(A: FiniteMonoid) -> FiniteSpace:
    pts = list(A.prime_ideals)
    labels = [_ideal_label(A, P) for P in pts]
    sub = {f"U({A.label(h)})": frozenset(i for i, P in enumerate(pts) if h not in P) for h in A.elements()}
    return FiniteSpace(pts, labels, sub)


def _ideal_label(A, P) -> str:
    gens = _ideal_generators(A, P)
    return "<" + ",".join(A.label(g) for g in gens) + ">" if gens else "<0>"


def _ideal_generators(A, P):
    gens = []
    have = {A.zero}
    for a in sorted(P, key=lambda x: (x != A.zero, x)):
        if a not in have:
            gens.append(a)
            have = set(A.ideal_generated(gens))
    return gens


def cong_space(A: FiniteMonoid, cap: int = cg.DEFAULT_CAP, primes=None) -> FiniteSpace:
    pts = primes if primes is not None else cg.prime_congruences(A)
    labels = [congruence_label(p) for p in pts]
    sub = {}
    for a in A.elements():
        for b in range(a + 1, A.size):
            sub[f"U({A.label(a)},{A.label(b)})"] = frozenset(i for i, p in enumerate(pts) if not p.related(a, b))
    return FiniteSpace(pts, labels, sub)


def congruence_label(c) -> str:
    A = c.monoid
    pairs = []
    for cls in c.classes():
        r = cls[0]
        for a in cls[1:]:
            pairs.append(f"({A.label(a)},{A.label(r)})")
    return "<" + ",".join(pairs) + ">" if pairs else "triv"


def projection_pi(A: FiniteMonoid, X: FiniteSpace | None = None, Y: FiniteSpace | None = None) -> ContinuousMap:
    X = X or cong_space(A)
    Y = Y or mspec(A)
    return ContinuousMap(X, Y, tuple(Y.index(cg.nullideal(p)) for p in X.points))


def tau_congruence(A: FiniteMonoid, P) -> cg.FiniteCongruence:
    P = frozenset(P)
    out_rep = next((a for a in A.elements() if a not in P), None)
    in_rep = min(P)
    return cg.FiniteCongruence(A, [in_rep if a in P else out_rep for a in A.elements()], check=False)


def residue_map(A: FiniteMonoid, P):
    """A -> A/P -> Frac(A/P) = k(P), returned as (k(P), map)."""
    Q, q = quotient_by_ideal(A, P)
    K, iota = frac(Q)
    return K, compose(iota, q)


def sigma_congruence(A: FiniteMonoid, P) -> cg.FiniteCongruence:
    K, r = residue_map(A, P)
    return cg.pullback(r, cg.trivial(K))


def section_sigma(A: FiniteMonoid, X: FiniteSpace | None = None, Y: FiniteSpace | None = None) -> ContinuousMap:
    X = X or mspec(A)
    Y = Y or cong_space(A)
    return ContinuousMap(X, Y, tuple(Y.index(sigma_congruence(A, P)) for P in X.points))


def section_tau(A: FiniteMonoid, X: FiniteSpace | None = None, Y: FiniteSpace | None = None) -> ContinuousMap:
    X = X or mspec(A)
    Y = Y or cong_space(A)
    return ContinuousMap(X, Y, tuple(Y.index(tau_congruence(A, P)) for P in X.points))


def closed_points(space: FiniteSpace) -> list:
    return space.closed_points()


def chi(A, space: FiniteSpace | None = None) -> dict:
    """Hom(A, F1) -> Cong(A), f -> congker(f); values are point indices (finite) or symbolic primes."""
    if not A.is_finite:
        return {f: cg.symbolic_pullback(f, cg.trivial(F1())) for f in enumerate_homs_to_F1(A)}
    space = space or cong_space(A)
    return {f: space.index(cg.congker(f)) for f in enumerate_homs_to_F1(A)}


def stalk(A: FiniteMonoid, p: cg.FiniteCongruence):
    P = cg.nullideal(p)
    loc = localize(A, [a for a in A.elements() if a not in P])
    return loc.monoid, loc.iota


def residue_field(A: FiniteMonoid, p: cg.FiniteCongruence):
    """k(p) = Frac(A/p) with the map from A."""
    Q, q = cg.quotient(A, p)
    K, iota = frac(Q)
    return K, compose(iota, q)


@dataclass
class Fibre:
    points: list          # indices into the congruence space
    subspace: FiniteSpace
    residue: FiniteMonoid
    comparison: ContinuousMap   # Cong(k(P)) -> fibre subspace

    def is_homeomorphic(self) -> bool:
        return self.comparison.is_homeomorphism()


def fibre(A: FiniteMonoid, P, X: FiniteSpace | None = None) -> Fibre:
    X = X or cong_space(A)
    P = frozenset(P)
    idx = [i for i, p in enumerate(X.points) if cg.nullideal(p) == P]
    sub = X.subspace(idx)
    K, r = residue_map(A, P)
    CK = cong_space(K)
    mapping = tuple(sub.index(cg.pullback(r, q)) for q in CK.points)
    return Fibre(idx, sub, K, ContinuousMap(CK, sub, mapping))


def induced_map(f: MonoidHom, X: FiniteSpace, Y: FiniteSpace, kind: str = "cong") -> ContinuousMap:
    """Map from the space of the target of f to the space of its source (pullback)."""
    if kind == "mspec":
        mapping = tuple(Y.index(frozenset(a for a in f.source.elements() if f(a) in Q)) for Q in X.points)
    else:
        mapping = tuple(Y.index(cg.pullback(f, q)) for q in X.points)
    return ContinuousMap(X, Y, mapping)


# ---------------------------------------------------------------- symbolic tier

def symbolic_prime_ideals(A: FreeMonomialMonoid) -> list:
    free = A.free_vars
    return [frozenset(I) for r in range(len(free) + 1) for I in itertools.combinations(free, r)]


def symbolic_ideal_label(A: FreeMonomialMonoid, I) -> str:
    return "P_{" + "".join(str(i + 1) for i in sorted(I)) + "}" if I else "P_{}"


def symbolic_mspec(A: FreeMonomialMonoid) -> FiniteSpace:
    pts = symbolic_prime_ideals(A)
    free = A.free_vars
    sub = {}
    for r in range(len(free) + 1):
        for S in itertools.combinations(free, r):
            name = "U(" + "*".join(A.names[i] for i in S) + ")" if S else "U(1)"
            sub[name] = frozenset(k for k, I in enumerate(pts) if not (I & set(S)))
    return FiniteSpace(pts, [symbolic_ideal_label(A, I) for I in pts], sub)


def symbolic_pullback_ideal(f: MonoidHom, I) -> frozenset:
    """f^-1(P_I) for a hom out of a free monomial monoid, as a variable set."""
    T = f.target
    if T.is_finite:
        return frozenset(i for i, x in enumerate(f.images) if x in I)
    return frozenset(i for i, x in enumerate(f.images) if x is ZERO or any(x[j] for j in I))


class SymbolicCongSpace:
    """Cong(F1[t1..tn][inverses]) with decision procedures instead of a point list."""

    def __init__(self, ambient: FreeMonomialMonoid):
        self.ambient = ambient

    def contains(self, p) -> bool:
        return isinstance(p, cg.SymbolicPrimeCongruence) and p.ambient == self.ambient

    def in_U(self, p, a, b) -> bool:
        return not cg.symbolic_member((a, b), p)

    def in_V(self, p, pairs) -> bool:
        return all(cg.symbolic_member(pr, p) for pr in pairs)

    def specializes(self, p, q) -> bool:
        """q lies in the closure of p, i.e. p is contained in q."""
        return cg.symbolic_le(p, q)

    def pi(self, p) -> frozenset:
        return p.vanishing

    def sigma(self, I) -> cg.SymbolicPrimeCongruence:
        return cg.symbolic_prime(self.ambient, I)

    def tau(self, I) -> cg.SymbolicPrimeCongruence:
        A = self.ambient
        k = A.num_vars - len(I)
        return cg.SymbolicPrimeCongruence(A, frozenset(I), zl.full_lattice(k))

    def is_closed_point(self, p) -> bool:
        return p.lattice.is_full()

    def closed_points(self) -> list:
        return [self.tau(I) for I in symbolic_prime_ideals(self.ambient)]

    def points(self, bound: int = 2) -> list:
        return cg.enumerate_symbolic_primes(self.ambient, bound)

    def U_is_empty(self, a, b) -> bool:
        return cg.vanishing_set_contains(self.ambient, [], (a, b))

    def U_contained_in_intersection(self, a, b, opens) -> bool:
        """U_{a,b} inside the intersection of U_{c,d} over `opens`, decided exactly."""
        return all(cg.vanishing_set_contains(self.ambient, [(c, d)], (a, b)) for c, d in opens)


def notbasis_report(max_degree: int = 6) -> dict:
    """Search U_{a,b} (monomials of degree <= D) inside U_{t,0} and U_{t,1} on Cong(F1[t])."""
    A = FreeMonomialMonoid(1, names=("t",))
    X = SymbolicCongSpace(A)
    t, one = A.var(0), A.one
    t2 = A.pow(t, 2)
    literal = least_prime_containing(A, [(t, t2)])
    exponent_two = cg.symbolic_prime(A, (), [(2,)])
    opens = [(t, ZERO), (t, one)]
    monos = [ZERO] + [A.pow(t, k) for k in range(max_degree + 1)]
    inside = []
    for a, b in itertools.combinations(monos, 2):
        if not X.U_is_empty(a, b) and X.U_contained_in_intersection(a, b, opens):
            inside.append((A.fmt(a), A.fmt(b)))
    return {
        "literal_point": literal.label(),
        "literal_in_intersection": all(X.in_U(literal, *o) for o in opens),
        "exponent_two_point": exponent_two.label(),
        "exponent_two_in_intersection": all(X.in_U(exponent_two, *o) for o in opens),
        "contained_subbasic_opens": inside,
        "max_degree": max_degree,
    }


def least_prime_containing(A: FreeMonomialMonoid, pairs, vanishing=()):
    """Least p_{I,H} with the given I containing `pairs` (None if there is none)."""
    for p in cg.minimal_primes_over(A, pairs):
        if p.vanishing == frozenset(vanishing):
            return p
    return None
