"""Congruences on pointed monoids: closure, primes, radicals, localization, symbolic primes."""
from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass

from . import zlinalg as zl
from .monoid import (ZERO, CapExceeded, FiniteMonoid, FreeMonomialMonoid, MonoidError,
                     MonoidHom, localize)
from .unionfind import UnionFind, close_multiplicative

DEFAULT_CAP = 8


class FiniteCongruence:
    """Congruence stored as the min-index representative of each element's class."""

    def __init__(self, monoid: FiniteMonoid, reps, *, check: bool = True):
        self.monoid = monoid
        self.reps = tuple(reps)
        if check:
            self.validate()

    def validate(self):
        A, r = self.monoid, self.reps
        if len(r) != A.size or any(r[r[a]] != r[a] or r[a] > a for a in A.elements()):
            raise MonoidError("representatives must be canonical class minima")
        for a in A.elements():
            for c in A.elements():
                if r[A.mul(a, c)] != r[A.mul(r[a], c)]:
                    raise MonoidError(f"not multiplicative at ({A.label(a)}, {A.label(c)})")

    def related(self, a, b) -> bool:
        return self.reps[a] == self.reps[b]

    def __contains__(self, pair) -> bool:
        return self.reps[pair[0]] == self.reps[pair[1]]

    def classes(self) -> list:
        out = {}
        for a, r in enumerate(self.reps):
            out.setdefault(r, []).append(a)
        return [out[k] for k in sorted(out)]

    def pairs(self):
        return [(a, b) for a in self.monoid.elements() for b in self.monoid.elements()
                if self.reps[a] == self.reps[b]]

    def le(self, other) -> bool:
        """self is contained in other."""
        return all(other.reps[a] == other.reps[r] for a, r in enumerate(self.reps))

    def is_trivial(self) -> bool:
        return all(r == a for a, r in enumerate(self.reps))

    def is_full(self) -> bool:
        return len(set(self.reps)) == 1

    def __eq__(self, other):
        return isinstance(other, FiniteCongruence) and self.monoid == other.monoid and self.reps == other.reps

    def __hash__(self):
        return hash(self.reps)

    def __repr__(self):
        A = self.monoid
        return "{" + " | ".join(",".join(A.label(a) for a in c) for c in self.classes()) + "}"

    def describe(self):
        """Generating pairs of a minimal-looking form: each element tied to its class minimum."""
        A = self.monoid
        return [(A.label(r), A.label(a)) for a, r in enumerate(self.reps) if r != a]


def trivial(A: FiniteMonoid) -> FiniteCongruence:
    return FiniteCongruence(A, range(A.size), check=False)


def full(A: FiniteMonoid) -> FiniteCongruence:
    return FiniteCongruence(A, [0] * A.size, check=False)


def generate(A: FiniteMonoid, pairs) -> FiniteCongruence:
    reps = close_multiplicative(A.size, A.mul, A.generators, pairs)
    return FiniteCongruence(A, reps, check=False)


def from_relation(A: FiniteMonoid, rel) -> FiniteCongruence:
    """Partition spanned by a relation that is already a congruence (checked)."""
    uf = UnionFind(A.size)
    for a, b in rel:
        uf.union(a, b)
    return FiniteCongruence(A, uf.reps())


def meet(c: FiniteCongruence, d: FiniteCongruence) -> FiniteCongruence:
    A = c.monoid
    key = {}
    reps = []
    for a in A.elements():
        k = (c.reps[a], d.reps[a])
        reps.append(key.setdefault(k, a))
    return FiniteCongruence(A, reps, check=False)


def meet_all(A: FiniteMonoid, cs) -> FiniteCongruence:
    out = full(A)
    for c in cs:
        out = meet(out, c)
    return out


def join(c: FiniteCongruence, d: FiniteCongruence) -> FiniteCongruence:
    return generate(c.monoid, c.pairs() + d.pairs())


def quotient(A: FiniteMonoid, c: FiniteCongruence):
    """A/c with the projection; classes ordered by their minimum."""
    classes = sorted(set(c.reps))
    pos = {r: i for i, r in enumerate(classes)}
    t = [[pos[c.reps[A.mul(a, b)]] for b in classes] for a in classes]
    Q = FiniteMonoid(t, pos[c.reps[A.zero]], pos[c.reps[A.one]], [A.label(a) for a in classes], check=False)
    return Q, MonoidHom(A, Q, [pos[c.reps[a]] for a in A.elements()], check=False)


def congker(f: MonoidHom) -> FiniteCongruence:
    A = f.source
    if not A.is_finite:
        raise MonoidError("congker of a symbolic hom: use symbolic_congker_contains")
    first = {}
    reps = [first.setdefault(f(a), a) for a in A.elements()]
    return FiniteCongruence(A, reps, check=False)


def is_prime(A: FiniteMonoid, c: FiniteCongruence) -> bool:
    Q, _ = quotient(A, c)
    return Q.is_integral()


def is_weak_prime(A: FiniteMonoid, c: FiniteCongruence) -> bool:
    Q, _ = quotient(A, c)
    return not Q.is_degenerate and not Q.has_zero_divisors()


def is_prime_by_definition(A: FiniteMonoid, c: FiniteCongruence) -> bool:
    """(ab, ac) in c implies (a, 0) in c or (b, c) in c; the full congruence is excluded."""
    if c.is_full():
        return False
    r, m, z = c.reps, A.mul, A.zero
    for a, b, x in itertools.product(A.elements(), repeat=3):
        if r[m(a, b)] == r[m(a, x)] and r[a] != r[z] and r[b] != r[x]:
            return False
    return True


def nullideal(c: FiniteCongruence) -> frozenset:
    A = c.monoid
    return frozenset(a for a in A.elements() if c.reps[a] == c.reps[A.zero])


def pushforward(f: MonoidHom, c: FiniteCongruence) -> FiniteCongruence:
    return generate(f.target, [(f(a), f(b)) for a, b in c.pairs()])


def pullback(f: MonoidHom, d):
    A = f.source
    if isinstance(d, SymbolicPrimeCongruence) or not A.is_finite:
        return symbolic_pullback(f, d)
    first = {}
    reps = [first.setdefault(d.reps[f(a)], a) for a in A.elements()]
    return FiniteCongruence(A, reps, check=False)


def localize_congruence(c: FiniteCongruence, S, loc=None):
    """S^-1 c on S^-1 A, returned with the localization data."""
    A = c.monoid
    loc = loc or localize(A, S)
    L = loc.monoid
    m, r = A.mul, c.reps
    Sl = sorted(loc.S)
    uf = UnionFind(L.size)
    for x in L.elements():
        a, s = loc.rep[x]
        for y in L.elements():
            if y <= x:
                continue
            b, u = loc.rep[y]
            if any(r[m(t, m(u, a))] == r[m(t, m(s, b))] for t in Sl):
                uf.union(x, y)
    return FiniteCongruence(L, uf.reps(), check=False), loc


# ---------------------------------------------------------------- radicals

def radical_ideal(A: FiniteMonoid, I) -> frozenset:
    I = frozenset(I)
    return frozenset(a for a in A.elements() if any(A.pow(a, n) in I for n in range(1, A.size + 1)))


def radical(c: FiniteCongruence) -> FiniteCongruence:
    """(a, b) with (a a^n, b a^n) and (a b^n, b b^n) in c for some n in [0, |A|]."""
    A = c.monoid
    r, m = c.reps, A.mul
    n_max = A.size
    pw = [[A.pow(a, n) for n in range(n_max + 1)] for a in A.elements()]

    def rel(a, b):
        ok1 = any(r[m(a, pw[a][n])] == r[m(b, pw[a][n])] for n in range(n_max + 1))
        return ok1 and any(r[m(a, pw[b][n])] == r[m(b, pw[b][n])] for n in range(n_max + 1))

    uf = UnionFind(A.size)
    for a in A.elements():
        for b in range(a + 1, A.size):
            if rel(a, b):
                uf.union(a, b)
    return FiniteCongruence(A, uf.reps(), check=False)


def is_radical(c: FiniteCongruence) -> bool:
    return radical(c) == c


def Nil(A: FiniteMonoid) -> frozenset:
    return radical_ideal(A, {A.zero})


def nil(A: FiniteMonoid) -> FiniteCongruence:
    return radical(trivial(A))


def red(A: FiniteMonoid):
    from .monoid import quotient_by_ideal
    return quotient_by_ideal(A, Nil(A))


def sred(A: FiniteMonoid):
    return quotient(A, nil(A))


def is_reduced(A: FiniteMonoid) -> bool:
    return Nil(A) == {A.zero}


def is_strongly_reduced(A: FiniteMonoid) -> bool:
    return nil(A).is_trivial()


def is_triv_prime(A: FiniteMonoid) -> bool:
    """The alternative reading of strong reducedness: the trivial congruence is prime."""
    return is_prime(A, trivial(A))


# ---------------------------------------------------------------- enumeration

def enumerate_congruences(A: FiniteMonoid, cap: int = DEFAULT_CAP) -> list:
    """All congruences, via restricted growth strings pruned on multiplicativity."""
    n = A.size
    if n > cap:
        raise CapExceeded(f"monoid of size {n} exceeds the enumeration cap {cap}")
    m = A.table
    labels = [-1] * n
    out = []

    def consistent(k):
        # element k just got its label; test every pair involving k against all multipliers
        lk = labels[k]
        for j in range(k + 1):
            if labels[j] != lk:
                continue
            for c in range(n):
                x, y = m[k][c], m[j][c]
                if x <= k and y <= k and labels[x] != labels[y]:
                    return False
        # products that just became decidable: pairs (i, j) < k with i*c or j*c == k
        for i in range(k):
            for j in range(i):
                if labels[i] != labels[j]:
                    continue
                for c in range(n):
                    x, y = m[i][c], m[j][c]
                    if (x == k or y == k) and x <= k and y <= k and labels[x] != labels[y]:
                        return False
        return True

    def rec(k, top):
        if k == n:
            reps = []
            first = {}
            for a in range(n):
                reps.append(first.setdefault(labels[a], a))
            out.append(FiniteCongruence(A, reps, check=False))
            return
        for lab in range(top + 2):
            labels[k] = lab
            if consistent(k):
                rec(k + 1, max(top, lab))
        labels[k] = -1

    rec(0, -1)
    out.sort(key=lambda c: (-len(set(c.reps)), c.reps))
    return out


def enumerate_prime_congruences(A: FiniteMonoid, cap: int = DEFAULT_CAP) -> list:
    return [c for c in enumerate_congruences(A, cap) if is_prime(A, c)]


def enumerate_weak_prime_congruences(A: FiniteMonoid, cap: int = DEFAULT_CAP) -> list:
    return [c for c in enumerate_congruences(A, cap) if is_weak_prime(A, c)]


def prime_congruences(A: FiniteMonoid) -> list:
    """All prime congruences without the size cap.

    A prime p with nullideal P is the kernel of A -> Frac(A/P) -> Frac(A/P)/N
    for a unique subgroup N of the unit group, so it suffices to walk prime
    ideals and subgroups of small finite groups.
    """
    from .monoid import frac, quotient_by_ideal
    out = []
    for P in A.prime_ideals:
        Q, proj = quotient_by_ideal(A, P)
        F, iota = frac(Q)
        to_F = [iota(proj(a)) for a in A.elements()]
        for N in _subgroups(F):
            reps = []
            first = {}
            for a in A.elements():
                if a in P:
                    key = None
                else:
                    key = min(F.mul(to_F[a], n) for n in N)
                reps.append(first.setdefault(key, a))
            out.append(FiniteCongruence(A, reps, check=False))
    out.sort(key=lambda c: (-len(set(c.reps)), c.reps))
    return out


def _subgroups(F: FiniteMonoid) -> list:
    """Subgroups of the unit group of a finite pointed group, as frozensets."""
    units = sorted(F.units)
    seen = {frozenset([F.one])}
    frontier = list(seen)
    while frontier:
        nxt = []
        for H in frontier:
            for g in units:
                if g in H:
                    continue
                K = F.submonoid(list(H) + [g])
                if K not in seen:
                    seen.add(K)
                    nxt.append(K)
        frontier = nxt
    return sorted(seen, key=lambda H: (len(H), sorted(H)))


def primes_containing(primes, c) -> list:
    return [p for p in primes if c.le(p)]


# ---------------------------------------------------------------- symbolic primes

@dataclass(frozen=True)
class SymbolicPrimeCongruence:
    """p_{I,H}: variables in I vanish, exponent differences on J = rest lie in H."""
    ambient: FreeMonomialMonoid
    vanishing: frozenset
    lattice: zl.Lattice

    def __post_init__(self):
        object.__setattr__(self, "vanishing", frozenset(self.vanishing))
        if self.vanishing & self.ambient.inverted:
            raise MonoidError("an inverted variable cannot vanish")
        if self.lattice.ambient_rank != len(self.J):
            raise MonoidError("lattice rank must equal the number of non-vanishing variables")

    @property
    def J(self) -> tuple:
        return tuple(i for i in range(self.ambient.num_vars) if i not in self.vanishing)

    def vanishes(self, x) -> bool:
        return x is ZERO or any(x[i] for i in self.vanishing)

    def __contains__(self, pair) -> bool:
        return symbolic_member(pair, self)

    def le(self, other) -> bool:
        return symbolic_le(self, other)

    def __repr__(self):
        A = self.ambient
        I = "".join(str(i + 1) for i in sorted(self.vanishing)) or "{}"
        return f"p_{{{I},{self.lattice}}}"

    def label(self) -> str:
        A = self.ambient
        I = ",".join(A.names[i] for i in sorted(self.vanishing))
        H = ";".join("(" + ",".join(map(str, r)) + ")" for r in self.lattice.basis)
        return f"p[{I}|{H}]"


def symbolic_prime(A: FreeMonomialMonoid, vanishing=(), generators=()) -> SymbolicPrimeCongruence:
    vanishing = frozenset(vanishing)
    J = [i for i in range(A.num_vars) if i not in vanishing]
    return SymbolicPrimeCongruence(A, vanishing, zl.hnf(list(generators), len(J)))


def symbolic_trivial(A) -> SymbolicPrimeCongruence:
    return symbolic_prime(A)


def symbolic_member(pair, p: SymbolicPrimeCongruence) -> bool:
    x, y = pair
    A = p.ambient
    if not (A.contains(x) and A.contains(y)):
        raise MonoidError("pair is not in the ambient monoid")
    vx, vy = p.vanishes(x), p.vanishes(y)
    if vx or vy:
        return vx and vy
    diff = [x[j] - y[j] for j in p.J]
    return zl.lattice_member(diff, p.lattice)


def symbolic_le(p: SymbolicPrimeCongruence, q: SymbolicPrimeCongruence) -> bool:
    """p is contained in q.

    With D = I' minus I: no h in H may have a nonzero restriction to D of one
    sign (its two halves would split into a vanishing and a live monomial),
    and the part of H vanishing on D must project into H'.
    """
    if p.ambient != q.ambient:
        raise MonoidError("ambient mismatch")
    if not p.vanishing <= q.vanishing:
        return False
    Jp, Jq = p.J, q.J
    D = [Jp.index(j) for j in sorted(q.vanishing - p.vanishing)]
    B = [list(r) for r in p.lattice.basis]
    if D and B and _one_signed_combination([[r[d] for d in D] for r in B]):
        return False
    if D and B:
        K = zl.kernel([[B[k][d] for k in range(len(B))] for d in D], len(B))
        rows = [[sum(c[k] * B[k][j] for k in range(len(B))) for j in range(len(Jp))] for c in K.basis]
    else:
        rows = B
    keep = [Jp.index(j) for j in Jq]
    return all(zl.lattice_member([r[j] for j in keep], q.lattice) for r in rows)


def _one_signed_combination(rows) -> bool:
    """Is there a rational combination c of `rows` with c.rows >= 0 and not zero?"""
    rows = tuple(tuple(r) for r in rows if any(r))
    if not rows:
        return False
    if len(rows[0]) == 1 or any(min(r) >= 0 or max(r) <= 0 for r in rows):
        return True
    return _one_signed_lp(rows)


@lru_cache(maxsize=65536)
def _one_signed_lp(rows) -> bool:
    import numpy as np
    from scipy.optimize import linprog

    R = np.array(rows, dtype=float)              # r x d
    r, d = R.shape
    if np.linalg.matrix_rank(R) == d:
        return True
    # c.R >= 0 and sum(c.R) >= 1
    A_ub = np.vstack([-R.T, -R.sum(axis=1)[None, :]])
    b_ub = np.concatenate([np.zeros(d), [-1.0]])
    res = linprog(np.zeros(r), A_ub=A_ub, b_ub=b_ub, bounds=[(None, None)] * r, method="highs")
    return res.status == 0


def symbolic_nullideal(p: SymbolicPrimeCongruence) -> frozenset:
    """Variables generating the prime ideal P_I."""
    return p.vanishing


def symbolic_pullback(f: MonoidHom, q):
    """Pull a prime congruence back along a hom out of a free monomial monoid."""
    A, B = f.source, f.target
    if A.is_finite:
        raise MonoidError("finite source: use pullback")
    if B.is_finite:
        # q is a finite prime congruence; its quotient minus 0 is a finite group
        return _pullback_into_finite(f, q)
    if not isinstance(q, SymbolicPrimeCongruence) or q.ambient != B:
        raise MonoidError("ambient mismatch in pullback")
    van = frozenset(i for i, x in enumerate(f.images) if q.vanishes(x))
    Jp = [i for i in range(A.num_vars) if i not in van]
    Jq = q.J
    M = [[f.images[c][r] for c in Jp] for r in Jq]
    H = zl.preimage(M, q.lattice, len(Jp)) if Jq else zl.full_lattice(len(Jp))
    return SymbolicPrimeCongruence(A, van, H)


def _pullback_into_finite(f, q):
    A, B = f.source, f.target
    r = q.reps
    zero = r[B.zero]
    van = frozenset(i for i, x in enumerate(f.images) if r[x] == zero)
    J = [i for i in range(A.num_vars) if i not in van]
    Q, proj = quotient(B, q)
    if not Q.is_integral():
        raise MonoidError("pullback into a finite target needs a prime congruence")
    gens = [proj(f.images[j]) for j in J]
    # Schreier generators of the kernel of Z^J -> Q^x
    path = {Q.one: (0,) * len(J)}
    frontier = [Q.one]
    rels = []
    while frontier:
        nxt = []
        for g in frontier:
            for k, h in enumerate(gens):
                y = Q.mul(g, h)
                v = list(path[g])
                v[k] += 1
                if y in path:
                    rels.append([a - b for a, b in zip(v, path[y])])
                else:
                    path[y] = tuple(v)
                    nxt.append(y)
        frontier = nxt
    return SymbolicPrimeCongruence(A, van, zl.hnf(rels, len(J)))


def _admissible_subsets(B: FreeMonomialMonoid):
    free = B.free_vars
    for r in range(len(free) + 1):
        yield from (frozenset(I) for I in itertools.combinations(free, r))


def _pullback_data(f: MonoidHom, Iq):
    """Vanishing set and exponent matrix of the pullback of any p_{Iq, H'}."""
    A, B = f.source, f.target
    van = frozenset(i for i, x in enumerate(f.images) if x is ZERO or any(x[k] for k in Iq))
    Jp = [i for i in range(A.num_vars) if i not in van]
    Jq = [k for k in range(B.num_vars) if k not in Iq]
    M = [[f.images[c][r] for c in Jp] for r in Jq]
    return van, Jp, M


def symbolic_in_pullback_image(f: MonoidHom, p: SymbolicPrimeCongruence) -> bool:
    """Is p = f^*(q) for some prime q of the target? Exact for monomial homs.

    For a fixed vanishing set I' of q the pullback lattice is M^-1(H'), and
    H = M^-1(H') is solvable iff ker M lies in H (take H' = M(H)).
    """
    if f.source.is_finite or f.target.is_finite:
        raise MonoidError("expected a hom between free monomial monoids")
    for Iq in _admissible_subsets(f.target):
        van, Jp, M = _pullback_data(f, Iq)
        if van != p.vanishing:
            continue
        K = zl.kernel(M, len(Jp)) if M else zl.full_lattice(len(Jp))
        if all(zl.lattice_member(u, p.lattice) for u in K.basis):
            return True
    return False


def symbolic_pullback_injective(f: MonoidHom) -> bool:
    """Is f^* injective on prime congruences? Exact for monomial homs.

    Distinct I' must give distinct vanishing sets, and for each I' the map
    H' -> M^-1(H') is injective iff M is onto Z^{J'}.
    """
    if f.source.is_finite or f.target.is_finite:
        raise MonoidError("expected a hom between free monomial monoids")
    seen = set()
    for Iq in _admissible_subsets(f.target):
        van, Jp, M = _pullback_data(f, Iq)
        if van in seen:
            return False
        seen.add(van)
        rows = len(M)
        if rows:
            cols = [[M[r][c] for r in range(rows)] for c in range(len(Jp))]
            if not zl.lattice_equal(zl.hnf(cols, rows), zl.full_lattice(rows)):
                return False
    return True


def vanishing_set_contains(A: FreeMonomialMonoid, generators, pair) -> bool:
    """Decide V(generators) <= V(pair) on the symbolic congruence space of A.

    For each vanishing set I the least prime p_{I,H} containing the generators
    uses H spanned by their exponent differences; membership is monotone in H.
    """
    return all(pair in p for p in minimal_primes_over(A, generators))


def minimal_primes_over(A: FreeMonomialMonoid, generators) -> list:
    """For every admissible I, the least p_{I,H} containing all generator pairs (if any)."""
    out = []
    free = A.free_vars
    for r in range(len(free) + 1):
        for I in itertools.combinations(free, r):
            p0 = symbolic_prime(A, I)
            J = p0.J
            diffs = []
            ok = True
            for x, y in generators:
                vx, vy = p0.vanishes(x), p0.vanishes(y)
                if vx and vy:
                    continue
                if vx != vy:
                    ok = False
                    break
                diffs.append([x[j] - y[j] for j in J])
            if ok:
                out.append(SymbolicPrimeCongruence(A, frozenset(I), zl.hnf(diffs, len(J))))
    return out


def symbolic_congker_generators(f: MonoidHom) -> list:
    """Monomial pairs whose prime hull agrees with the congruence kernel of a monomial hom.

    (t_i, 0) for variables sent to 0 and one binomial per kernel lattice basis vector.
    """
    A = f.source
    pairs = [(A.var(i), ZERO) for i, x in enumerate(f.images) if x is ZERO]
    live = [i for i, x in enumerate(f.images) if x is not ZERO]
    if f.target.is_finite:
        raise MonoidError("symbolic congruence kernels need a symbolic target")
    M = [[f.images[c][r] for c in live] for r in range(f.target.num_vars)]
    K = zl.kernel(M, len(live)) if M else zl.full_lattice(len(live))
    for u in K.basis:
        x = [0] * A.num_vars
        y = [0] * A.num_vars
        for k, c in enumerate(live):
            if u[k] > 0:
                x[c] = u[k]
            elif u[k] < 0:
                y[c] = -u[k]
        pairs.append((A.check(tuple(x)), A.check(tuple(y))))
    return pairs


def symbolic_contains_congker(f: MonoidHom, p: SymbolicPrimeCongruence) -> bool:
    """Exact test of congker(f) <= p for a monomial hom between free monomial monoids."""
    import numpy as np
    from scipy.optimize import linprog

    A, B = f.source, f.target
    zero_vars = {i for i, x in enumerate(f.images) if x is ZERO}
    if not zero_vars <= p.vanishing:
        return False
    live = [i for i in range(A.num_vars) if i not in zero_vars]
    I = [k for k, c in enumerate(live) if c in p.vanishing]
    M = np.array([[f.images[c][r] for c in live] for r in range(B.num_vars)], dtype=float).reshape(B.num_vars, len(live))
    # a kernel vector whose positive part meets I while its negative part avoids I
    # would give a pair with exactly one vanishing side
    for i in I:
        bounds = []
        for k, c in enumerate(live):
            if k in I:
                bounds.append((1 if k == i else 0, None))
            else:
                bounds.append((None, None))
        if M.size == 0:
            return False
        res = linprog(np.zeros(len(live)), A_eq=M, b_eq=np.zeros(B.num_vars), bounds=bounds, method="highs")
        if res.status == 0:
            return False
    Jl = [c for c in live if c not in p.vanishing]
    M2 = [[f.images[c][r] for c in Jl] for r in range(B.num_vars)]
    K = zl.kernel(M2, len(Jl)) if B.num_vars else zl.full_lattice(len(Jl))
    J = p.J
    for u in K.basis:
        v = [0] * len(J)
        for k, c in enumerate(Jl):
            v[J.index(c)] = u[k]
        if not zl.lattice_member(v, p.lattice):
            return False
    return True


def enumerate_symbolic_primes(A: FreeMonomialMonoid, bound: int = 2) -> list:
    """All p_{I,H} whose HNF entries are bounded; a finite window onto an infinite space."""
    out = []
    free = A.free_vars
    for r in range(len(free) + 1):
        for I in itertools.combinations(free, r):
            k = A.num_vars - r
            for H in zl.small_lattices(k, bound):
                out.append(SymbolicPrimeCongruence(A, frozenset(I), H))
    return out
