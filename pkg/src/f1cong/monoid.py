"""Commutative pointed monoids: finite tables and free monomial monoids."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .unionfind import UnionFind, close_multiplicative


class MonoidError(ValueError):
    pass


class CapExceeded(MonoidError):
    pass


# ---------------------------------------------------------------- finite tier

class FiniteMonoid:
    """Pointed monoid given by a full multiplication table on range(size)."""

    is_finite = True

    def __init__(self, table, zero: int = 0, one: int = 1, labels=None, *, check: bool = True):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.zero = int(zero)
        self.one = int(one)
        n = len(self.table)
        if labels is None:
            labels = [_default_label(i, self.zero, self.one) for i in range(n)]
        self.labels = tuple(str(x) for x in labels)
        if check:
            self.validate()

    def validate(self):
        n = self.size
        t = self.table
        if n < 2 or self.zero == self.one:
            raise MonoidError("a pointed monoid needs 0 != 1 (the trivial monoid is rejected)")
        if any(len(r) != n for r in t):
            raise MonoidError("table is not square")
        if len(set(self.labels)) != n or len(self.labels) != n:
            raise MonoidError("labels must be distinct, one per element")
        for a in range(n):
            for b in range(n):
                if not 0 <= t[a][b] < n:
                    raise MonoidError(f"entry {a}*{b} out of range")
                if t[a][b] != t[b][a]:
                    raise MonoidError(f"not commutative: {self.labels[a]}*{self.labels[b]}")
        for a in range(n):
            if t[self.zero][a] != self.zero:
                raise MonoidError(f"0*{self.labels[a]} != 0")
            if t[self.one][a] != a:
                raise MonoidError(f"1*{self.labels[a]} != {self.labels[a]}")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                la = self.labels
                raise MonoidError(f"not associative on ({la[a]}, {la[b]}, {la[c]})")

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def is_degenerate(self) -> bool:
        return self.zero == self.one

    def elements(self):
        return range(self.size)

    def mul(self, a, b):
        return self.table[a][b]

    def prod(self, xs):
        r = self.one
        for x in xs:
            r = self.table[r][x]
        return r

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inverse(a), -n)
        r = self.one
        for _ in range(n):
            r = self.table[r][a]
        return r

    def idempotent_power(self, a):
        """The unique idempotent among the powers of a."""
        seen = []
        x = a
        while x not in seen:
            seen.append(x)
            x = self.mul(x, a)
        for y in seen:
            if self.mul(y, y) == y:
                return y
        raise MonoidError("no idempotent power")  # unreachable in a finite monoid

    def label(self, a) -> str:
        return self.labels[a]

    def index(self, name: str) -> int:
        try:
            return self.labels.index(name)
        except ValueError:
            raise MonoidError(f"no element named {name!r}") from None

    def fmt(self, a) -> str:
        return self.labels[a]

    def __eq__(self, other):
        return (isinstance(other, FiniteMonoid) and self.table == other.table
                and self.zero == other.zero and self.one == other.one
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.table, self.zero, self.one))

    def __repr__(self):
        return f"FiniteMonoid({{{', '.join(self.labels)}}})"

    # units and structure
    @cached_property
    def units(self) -> frozenset:
        return frozenset(a for a in self.elements() if self.one in self.table[a])

    def is_unit(self, a) -> bool:
        return a in self.units

    def inverse(self, a):
        for b in self.elements():
            if self.table[a][b] == self.one:
                return b
        raise MonoidError(f"{self.labels[a]} is not a unit")

    @cached_property
    def nonunits(self) -> frozenset:
        return frozenset(self.elements()) - self.units

    @cached_property
    def generators(self) -> tuple:
        gens = []
        reach = self.submonoid([]) | {self.zero}
        for a in self.elements():
            if a not in reach:
                gens.append(a)
                reach = self.submonoid(gens) | {self.zero}
        return tuple(gens)

    @cached_property
    def words(self) -> dict:
        """Each element written as a product of generators (exponent tuple)."""
        gens = self.generators
        k = len(gens)
        words = {self.one: (0,) * k, self.zero: None}
        frontier = [self.one]
        while frontier:
            nxt = []
            for a in frontier:
                for i, g in enumerate(gens):
                    b = self.table[a][g]
                    if b not in words:
                        w = list(words[a])
                        w[i] += 1
                        words[b] = tuple(w)
                        nxt.append(b)
            frontier = nxt
        if len(words) < self.size:
            raise MonoidError("generators do not reach every element")
        return words

    def submonoid(self, gens) -> frozenset:
        seen = {self.one}
        frontier = [self.one]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.table[a][g]
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(seen)

    def ideal_generated(self, gens) -> frozenset:
        out = {self.zero}
        for g in gens:
            out.update(self.table[g])
        return frozenset(out)

    def is_ideal(self, subset) -> bool:
        subset = frozenset(subset)
        return self.zero in subset and all(self.table[a][b] in subset for a in subset for b in self.elements())

    def is_prime_ideal(self, subset) -> bool:
        subset = frozenset(subset)
        if not self.is_ideal(subset) or self.one in subset:
            return False
        comp = [a for a in self.elements() if a not in subset]
        return all(self.table[a][b] not in subset for a in comp for b in comp)

    def is_multiplicative(self, subset) -> bool:
        subset = frozenset(subset)
        return self.one in subset and all(self.table[a][b] in subset for a in subset for b in subset)

    @cached_property
    def prime_ideals(self) -> tuple:
        """Prime ideals in canonical order (by size, then sorted members)."""
        out = [frozenset(a for a in self.elements() if f[a] == 0) for f in _maps_to_f1(self)]
        return tuple(sorted(set(out), key=lambda p: (len(p), sorted(p))))

    @cached_property
    def maximal_ideal(self) -> frozenset:
        return self.nonunits

    def multiplicative_sets(self):
        """All multiplicatively closed subsets containing 1."""
        seen = set()
        rest = [a for a in self.elements() if a != self.one]
        out = []
        for r in range(len(rest) + 1):
            for combo in itertools.combinations(rest, r):
                s = self.submonoid(combo)
                if s not in seen:
                    seen.add(s)
                    out.append(s)
        return sorted(out, key=lambda s: (len(s), sorted(s)))

    def has_zero_divisors(self) -> bool:
        z = self.zero
        return any(self.table[a][b] == z for a in self.elements() if a != z
                   for b in self.elements() if b != z)

    def is_integral(self) -> bool:
        """Non-degenerate and cancellative away from 0."""
        if self.is_degenerate:
            return False
        z = self.zero
        for a in self.elements():
            if a == z:
                continue
            row = [self.table[a][b] for b in self.elements()]
            if len(set(row)) != self.size:
                return False
        return True

    def is_pointed_group(self) -> bool:
        return not self.is_degenerate and self.units == frozenset(self.elements()) - {self.zero}


def _default_label(i, zero, one):
    if i == zero:
        return "0"
    if i == one:
        return "1"
    return f"x{i}"


def _maps_to_f1(A: FiniteMonoid):
    """All homs A -> F1 as 0/1 value tuples, driven by generator images."""
    gens = A.generators
    words = A.words
    out = []
    for vals in itertools.product((0, 1), repeat=len(gens)):
        f = [None] * A.size
        for a, w in words.items():
            if w is None:
                f[a] = 0
            else:
                f[a] = int(all(vals[i] or not e for i, e in enumerate(w)))
        if all(f[A.table[a][b]] == f[a] * f[b] for a in A.elements() for b in A.elements()):
            out.append(tuple(f))
    return out


def F1() -> FiniteMonoid:
    return FiniteMonoid([[0, 0], [0, 1]], 0, 1, ["0", "1"])


def from_products(elements, rules, zero="0", one="1") -> FiniteMonoid:
    """Build a table from named elements and a dict {(x, y): z} for the non-trivial products."""
    names = [zero, one] + [e for e in elements if e not in (zero, one)]
    idx = {n: i for i, n in enumerate(names)}
    n = len(names)
    t = [[None] * n for _ in range(n)]
    for a in range(n):
        t[0][a] = t[a][0] = 0
        t[1][a] = t[a][1] = a
    for (x, y), z in rules.items():
        t[idx[x]][idx[y]] = idx[z]
        t[idx[y]][idx[x]] = idx[z]
    for a in range(n):
        for b in range(n):
            if t[a][b] is None:
                raise MonoidError(f"missing product {names[a]}*{names[b]}")
    return FiniteMonoid(t, 0, 1, names)


def truncated_polynomial(k: int, relation: str = "zero", var: str = "t") -> FiniteMonoid:
    """F1[t] with t^k = 0 (relation='zero') or t^k = t^(k-1) (relation='stable')."""
    if relation not in ("zero", "stable"):
        raise MonoidError(f"unknown relation {relation!r}")
    names = ["0", "1"] + [f"{var}" if i == 1 else f"{var}^{i}" for i in range(1, k)]
    if relation == "stable":
        names = ["0", "1"] + [f"{var}" if i == 1 else f"{var}^{i}" for i in range(1, k + 1)]
    n = len(names)

    def exp(i):
        return None if i == 0 else i - 1

    def idx(e):
        if e is None:
            return 0
        if relation == "zero":
            return 0 if e >= k else e + 1
        return min(e, k) + 1

    t = [[idx(None if exp(a) is None or exp(b) is None else exp(a) + exp(b)) for b in range(n)]
         for a in range(n)]
    return FiniteMonoid(t, 0, 1, names)


def direct_product(A: FiniteMonoid, B: FiniteMonoid) -> FiniteMonoid:
    pairs = [(a, b) for a in A.elements() for b in B.elements()]
    pos = {p: i for i, p in enumerate(pairs)}
    t = [[pos[(A.mul(a, c), B.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    labels = [f"({A.label(a)},{B.label(b)})" for a, b in pairs]
    return FiniteMonoid(t, pos[(A.zero, B.zero)], pos[(A.one, B.one)], labels)


# ---------------------------------------------------------------- symbolic tier

class _Zero:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


@dataclass(frozen=True)
class FreeMonomialMonoid:
    """F1[t1..tn] with the variables in `inverted` adjoined with inverses.

    Elements are ZERO or exponent tuples; variable indices are 0-based.
    """
    num_vars: int
    inverted: frozenset = frozenset()
    names: tuple | None = None

    is_finite = False

    def __post_init__(self):
        object.__setattr__(self, "inverted", frozenset(self.inverted))
        if any(not 0 <= i < self.num_vars for i in self.inverted):
            raise MonoidError("inverted variable out of range")
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"t{i + 1}" for i in range(self.num_vars)))
        elif len(self.names) != self.num_vars:
            raise MonoidError("one name per variable")
        else:
            object.__setattr__(self, "names", tuple(self.names))

    @property
    def zero(self):
        return ZERO

    @property
    def one(self):
        return (0,) * self.num_vars

    @property
    def is_degenerate(self) -> bool:
        return False

    def var(self, i: int):
        return tuple(int(j == i) for j in range(self.num_vars))

    def contains(self, x) -> bool:
        if x is ZERO:
            return True
        return (isinstance(x, tuple) and len(x) == self.num_vars
                and all(e >= 0 or i in self.inverted for i, e in enumerate(x)))

    def check(self, x):
        if not self.contains(x):
            raise MonoidError(f"{x!r} is not an element of {self}")
        return x

    def mul(self, a, b):
        if a is ZERO or b is ZERO:
            return ZERO
        return tuple(x + y for x, y in zip(a, b))

    def prod(self, xs):
        r = self.one
        for x in xs:
            r = self.mul(r, x)
        return r

    def pow(self, a, n: int):
        if a is ZERO:
            return self.one if n == 0 else ZERO
        r = tuple(n * x for x in a)
        return self.check(r)

    def is_unit(self, a) -> bool:
        return a is not ZERO and all(e == 0 or i in self.inverted for i, e in enumerate(a))

    def inverse(self, a):
        if not self.is_unit(a):
            raise MonoidError(f"{self.fmt(a)} is not a unit")
        return tuple(-e for e in a)

    def support(self, a) -> frozenset:
        return frozenset(i for i, e in enumerate(a) if e)

    @property
    def free_vars(self) -> tuple:
        return tuple(i for i in range(self.num_vars) if i not in self.inverted)

    def localized(self, variables) -> "FreeMonomialMonoid":
        return FreeMonomialMonoid(self.num_vars, self.inverted | frozenset(variables), self.names)

    def fmt(self, a) -> str:
        if a is ZERO:
            return "0"
        parts = []
        for i, e in enumerate(a):
            if e == 1:
                parts.append(self.names[i])
            elif e:
                parts.append(f"{self.names[i]}^{e}")
        return "*".join(parts) if parts else "1"

    def monomials(self, max_degree: int):
        """All elements with absolute exponent sum <= max_degree, plus ZERO."""
        out = [ZERO]
        rng = range(-max_degree, max_degree + 1)
        for e in itertools.product(rng, repeat=self.num_vars):
            if sum(map(abs, e)) <= max_degree and self.contains(e):
                out.append(e)
        return out

    def __repr__(self):
        inv = [self.names[i] for i in sorted(self.inverted)]
        s = f"F1[{', '.join(self.names)}]"
        return s + (f"[{', '.join(inv)}^-1]" if inv else "")


# ---------------------------------------------------------------- homomorphisms

class MonoidHom:
    """Morphism of pointed monoids.

    Finite source: `images[a]` for every element a. Symbolic source:
    `images[i]` for each variable.
    """

    def __init__(self, source, target, images, *, check: bool = True):
        self.source = source
        self.target = target
        self.images = tuple(images)
        if check:
            self.validate()

    def validate(self):
        S, T = self.source, self.target
        if S.is_finite:
            if len(self.images) != S.size:
                raise MonoidError("one image per source element")
            im = self.images
            if T.is_finite:
                if any(not 0 <= x < T.size for x in im):
                    raise MonoidError("image out of range")
            else:
                for x in im:
                    T.check(x)
            if im[S.zero] != T.zero or im[S.one] != T.one:
                raise MonoidError("hom must preserve 0 and 1")
            for a in S.elements():
                for b in S.elements():
                    if im[S.mul(a, b)] != T.mul(im[a], im[b]):
                        raise MonoidError(f"not multiplicative at ({S.label(a)}, {S.label(b)})")
        else:
            if len(self.images) != S.num_vars:
                raise MonoidError("one image per variable")
            for i, x in enumerate(self.images):
                if T.is_finite:
                    if not 0 <= x < T.size:
                        raise MonoidError("image out of range")
                else:
                    T.check(x)
                if i in S.inverted and not T.is_unit(x):
                    raise MonoidError(f"inverted variable {S.names[i]} must map to a unit")

    def __call__(self, x):
        S, T = self.source, self.target
        if S.is_finite:
            return self.images[x]
        if x is ZERO:
            return T.zero
        r = T.one
        for i, e in enumerate(x):
            if e:
                r = T.mul(r, T.pow(self.images[i], e))
        return r

    def __eq__(self, other):
        return (isinstance(other, MonoidHom) and self.source == other.source
                and self.target == other.target and self.images == other.images)

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        S, T = self.source, self.target
        if S.is_finite:
            body = ", ".join(f"{S.label(a)}->{T.fmt(self.images[a])}" for a in S.elements())
        else:
            body = ", ".join(f"{S.names[i]}->{T.fmt(x)}" for i, x in enumerate(self.images))
        return f"MonoidHom({S} -> {T}: {body})"

    def matrix(self, columns=None):
        """Exponent matrix (rows: target variables) of a monomial hom on the given source variables."""
        S, T = self.source, self.target
        cols = range(S.num_vars) if columns is None else columns
        return [[self.images[c][r] for c in cols] for r in range(T.num_vars)]

    def image_set(self) -> frozenset:
        S, T = self.source, self.target
        if S.is_finite:
            return frozenset(self.images)
        if not T.is_finite:
            raise MonoidError("image of a symbolic hom into a symbolic target is infinite")
        gens = list(self.images) + [T.inverse(self.images[i]) for i in S.inverted]
        return T.submonoid(gens) | {T.zero}

    def is_injective(self) -> bool:
        S, T = self.source, self.target
        if S.is_finite:
            return len(set(self.images)) == S.size
        if any(x is ZERO for x in self.images):
            return False
        if T.is_finite:
            return S.num_vars == 0
        from .zlinalg import kernel
        return kernel(self.matrix(), S.num_vars).is_zero()

    def is_surjective(self, search_bound: int = 6) -> bool:
        S, T = self.source, self.target
        if T.is_finite:
            return self.image_set() == frozenset(T.elements())
        if S.is_finite:
            return T.num_vars == 0
        gens = [x for x in self.images if x is not ZERO]
        gens += [T.inverse(self.images[i]) for i in S.inverted]
        targets = [T.var(j) for j in range(T.num_vars)]
        targets += [T.inverse(T.var(j)) for j in T.inverted]
        return all(_in_monoid_span(t, gens, search_bound) for t in targets)


def _in_monoid_span(v, gens, bound):
    """Is v a non-negative integer combination of gens with coefficient sum <= bound."""
    gens = list(dict.fromkeys(gens))
    n = len(v)
    seen = {tuple([0] * n)}
    frontier = [tuple([0] * n)]
    v = tuple(v)
    if v in seen:
        return True
    for _ in range(bound):
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(a + b for a, b in zip(x, g))
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return False


def identity(A) -> MonoidHom:
    if A.is_finite:
        return MonoidHom(A, A, list(A.elements()), check=False)
    return MonoidHom(A, A, [A.var(i) for i in range(A.num_vars)], check=False)


def compose(g: MonoidHom, f: MonoidHom) -> MonoidHom:
    """g after f."""
    if f.target != g.source:
        raise MonoidError("compose: target of f is not the source of g")
    S = f.source
    if S.is_finite:
        return MonoidHom(S, g.target, [g(f(a)) for a in S.elements()], check=False)
    return MonoidHom(S, g.target, [g(x) for x in f.images], check=False)


def is_finite_type(f: MonoidHom) -> bool:
    # finite sources are finitely generated; symbolic ones have finitely many variables
    return True


def unique_hom_from_f1(B) -> MonoidHom:
    return MonoidHom(F1(), B, [B.zero, B.one], check=False)


# ---------------------------------------------------------------- quotients, localization

def quotient_by_ideal(A: FiniteMonoid, ideal) -> tuple[FiniteMonoid, MonoidHom]:
    ideal = frozenset(ideal)
    if not A.is_ideal(ideal):
        raise MonoidError("not an ideal")
    keep = [A.zero] + [a for a in A.elements() if a not in ideal]
    pos = {a: i for i, a in enumerate(keep)}

    def red(x):
        return 0 if x in ideal else pos[x]

    t = [[red(A.mul(a, b)) for b in keep] for a in keep]
    one = red(A.one)
    Q = FiniteMonoid(t, 0, one, [A.label(a) for a in keep], check=False)
    return Q, MonoidHom(A, Q, [red(a) for a in A.elements()], check=False)


def saturate(A: FiniteMonoid, S) -> frozenset:
    return A.submonoid(S)


class Localization:
    """Result of localizing a finite monoid: the monoid, the map iota, and fraction data."""

    def __init__(self, A, S, monoid, iota, rep, cls):
        self.base = A
        self.S = S
        self.monoid = monoid
        self.iota = iota
        self.rep = rep      # element of S^-1 A -> a representing pair (a, s)
        self.cls = cls      # pair (a, s) -> element

    def frac(self, a, s):
        return self.cls[(a, s)]


def localize(A: FiniteMonoid, S) -> Localization:
    # For finite A the localization is eA with identity e, where e is the
    # idempotent power of the product of S: any map inverting S sends e to 1.
    S = A.submonoid(S)
    Sl = sorted(S)
    m = A.mul
    prod = A.one
    for s in Sl:
        prod = m(prod, s)
    e = A.idempotent_power(prod)
    image = {}
    for a in A.elements():
        ea = m(e, a)
        image.setdefault(ea, a)
    order = sorted(image, key=lambda x: image[x])
    pos = {x: k for k, x in enumerate(order)}
    inv = {}
    for s in Sl:
        es = m(e, s)
        inv[s] = next(y for y in order if m(es, y) == e)
    cls = {(a, s): pos[m(m(e, a), inv[s])] for a in A.elements() for s in Sl}
    rep = [(image[x], A.one) for x in order]
    n = len(order)
    t = [[pos[m(order[x], order[y])] for y in range(n)] for x in range(n)]
    labels = [A.label(image[x]) for x in order]
    L = FiniteMonoid(t, pos[m(e, A.zero)], pos[e], labels, check=False)
    iota = MonoidHom(A, L, [pos[m(e, a)] for a in A.elements()], check=False)
    return Localization(A, S, L, iota, rep, cls)


def localize_symbolic(A: FreeMonomialMonoid, monomials) -> tuple[FreeMonomialMonoid, MonoidHom]:
    """Invert monomials of a free monomial monoid; a ZERO in S gives None."""
    vs = set()
    for x in monomials:
        if x is ZERO:
            return None, None
        vs |= A.support(x)
    B = A.localized(vs)
    return B, MonoidHom(A, B, [A.var(i) for i in range(A.num_vars)], check=False)


def localize_at(A, s):
    """Principal localization A[s^-1] with its map; (None, None) when s is nilpotent-to-zero."""
    if A.is_finite:
        L = localize(A, [s])
        if L.monoid.is_degenerate:
            return None, None
        return L.monoid, L.iota
    return localize_symbolic(A, [s])


def frac(A):
    if not A.is_finite:
        return localize_symbolic(A, [A.var(i) for i in range(A.num_vars)])
    if A.has_zero_divisors():
        raise MonoidError("Frac needs a monoid without zero divisors")
    L = localize(A, [a for a in A.elements() if a != A.zero])
    return L.monoid, L.iota


def image_monoid(f: MonoidHom) -> tuple[FiniteMonoid, MonoidHom, MonoidHom]:
    """Image of a finite hom as a monoid: (image, corestriction, inclusion)."""
    T = f.target
    im = sorted(f.image_set(), key=lambda x: (x != T.zero, x != T.one, x))
    pos = {x: i for i, x in enumerate(im)}
    t = [[pos[T.mul(a, b)] for b in im] for a in im]
    M = FiniteMonoid(t, pos[T.zero], pos[T.one], [T.fmt(x) for x in im], check=False)
    S = f.source
    if S.is_finite:
        cores = MonoidHom(S, M, [pos[f(a)] for a in S.elements()], check=False)
    else:
        cores = MonoidHom(S, M, [pos[x] for x in f.images], check=False)
    return M, cores, MonoidHom(M, T, im, check=False)


def integral_quotient(A):
    if not A.is_finite:
        return A, identity(A)
    K, iota = frac(A)
    M, cores, _ = image_monoid(iota)
    return M, cores


# ---------------------------------------------------------------- tensor products

class TensorProduct:
    """Pushout A (x)_C B with coprojections; `pair` maps (a, b) to its class."""

    def __init__(self, f, g, monoid, left, right, pair=None):
        self.f, self.g = f, g
        self.monoid = monoid
        self.left, self.right = left, right
        self.pair = pair

    def mediate(self, hA: MonoidHom, hB: MonoidHom) -> MonoidHom:
        """The unique map out of the pushout restricting to hA and hB."""
        C = self.f.source
        if hA.target != hB.target:
            raise MonoidError("cocone maps need a common target")
        D = hA.target
        for c in _sample_elements(C):
            if hA(self.f(c)) != hB(self.g(c)):
                raise MonoidError("cocone does not commute on the base")
        T = self.monoid
        if T.is_finite:
            A, B = self.f.target, self.g.target
            im = [None] * T.size
            for a in A.elements():
                for b in B.elements():
                    x = self.pair[(a, b)]
                    v = D.mul(hA(a), hB(b))
                    if im[x] is None:
                        im[x] = v
                    elif im[x] != v:
                        raise MonoidError("cocone is not well defined on the tensor product")
            return MonoidHom(T, D, im)
        nA = self.f.target.num_vars
        imgs = [hA(self.f.target.var(i)) for i in range(nA)]
        imgs += [hB(self.g.target.var(i)) for i in range(self.g.target.num_vars)]
        return MonoidHom(T, D, imgs)


def _sample_elements(C):
    if C.is_finite:
        return list(C.elements())
    return [C.zero, C.one] + [C.var(i) for i in range(C.num_vars)]


def _is_f1_base(C) -> bool:
    if C.is_finite:
        return C.size == 2
    return C.num_vars == 0


def tensor(f: MonoidHom, g: MonoidHom, cap: int = 10000) -> TensorProduct:
    if f.source != g.source:
        raise MonoidError("tensor needs two maps out of the same base")
    A, B, C = f.target, g.target, f.source
    if not (A.is_finite and B.is_finite):
        if not A.is_finite and not B.is_finite and _is_f1_base(C):
            names = tuple(A.names) + tuple(B.names)
            if len(set(names)) < len(names):
                names = tuple(f"{n}_1" for n in A.names) + tuple(f"{n}_2" for n in B.names)
            T = FreeMonomialMonoid(A.num_vars + B.num_vars,
                                   frozenset(A.inverted) | {A.num_vars + i for i in B.inverted},
                                   names)
            left = MonoidHom(A, T, [T.var(i) for i in range(A.num_vars)], check=False)
            right = MonoidHom(B, T, [T.var(A.num_vars + i) for i in range(B.num_vars)], check=False)
            return TensorProduct(f, g, T, left, right)
        raise MonoidError("symbolic tensor products are only supported over F1 between free monomial monoids")
    if A.size * B.size > cap:
        raise CapExceeded(f"tensor needs {A.size * B.size} raw pairs, cap is {cap}")
    pairs = [(a, b) for a in A.elements() for b in B.elements()]
    pos = {p: i for i, p in enumerate(pairs)}

    def mul(x, y):
        (a, b), (c, d) = pairs[x], pairs[y]
        return pos[(A.mul(a, c), B.mul(b, d))]

    z = pos[(A.zero, B.zero)]
    rel = []
    for a in A.elements():
        rel.append((pos[(a, B.zero)], z))
    for b in B.elements():
        rel.append((pos[(A.zero, b)], z))
    for c in C.elements():
        fc, gc = f(c), g(c)
        for a in A.elements():
            for b in B.elements():
                rel.append((pos[(A.mul(fc, a), b)], pos[(a, B.mul(gc, b))]))
    gens = [pos[(a, B.one)] for a in A.generators] + [pos[(A.one, b)] for b in B.generators]
    reps = close_multiplicative(len(pairs), mul, gens, rel)
    classes = sorted(set(reps), key=lambda r: (r != reps[z], r != reps[pos[(A.one, B.one)]], r))
    cpos = {r: i for i, r in enumerate(classes)}
    n = len(classes)
    t = [[cpos[reps[mul(x, y)]] for y in classes] for x in classes]

    def lab(r):
        a, b = pairs[r]
        if r == reps[z]:
            return "0"
        la, lb = A.label(a), B.label(b)
        if lb == B.label(B.one):
            return la
        if la == A.label(A.one):
            return lb if lb not in A.labels else f"{lb}'"
        return f"{la}*{lb}"

    labels = [lab(r) for r in classes]
    if len(set(labels)) < n:
        labels = [f"{A.label(pairs[r][0])}(x){B.label(pairs[r][1])}" if r != reps[z] else "0" for r in classes]
    T = FiniteMonoid(t, cpos[reps[z]], cpos[reps[pos[(A.one, B.one)]]], labels, check=False)
    pair = {p: cpos[reps[pos[p]]] for p in pairs}
    left = MonoidHom(A, T, [pair[(a, B.one)] for a in A.elements()], check=False)
    right = MonoidHom(B, T, [pair[(A.one, b)] for b in B.elements()], check=False)
    return TensorProduct(f, g, T, left, right, pair)


def fold(tp: TensorProduct) -> MonoidHom:
    """a (x) b -> ab for a self tensor product A (x)_C A."""
    A = tp.f.target
    return tp.mediate(identity(A), identity(A))


# ---------------------------------------------------------------- homs to F1, isomorphisms

def enumerate_homs_to_F1(A) -> list:
    target = F1()
    if A.is_finite:
        return [MonoidHom(A, target, list(f), check=False) for f in
                sorted(_maps_to_f1(A), key=lambda f: (-sum(f), f))]
    out = []
    free = A.free_vars
    for r in range(len(free) + 1):
        for I in itertools.combinations(free, r):
            out.append(MonoidHom(A, target, [0 if i in I else 1 for i in range(A.num_vars)], check=False))
    return out


def f_P(A: FiniteMonoid, P) -> MonoidHom:
    P = frozenset(P)
    return MonoidHom(A, F1(), [0 if a in P else 1 for a in A.elements()])


def homs(A: FiniteMonoid, B: FiniteMonoid) -> list:
    """All homs between finite monoids, by generator images."""
    gens = A.generators
    words = A.words
    out = []
    for vals in itertools.product(list(B.elements()), repeat=len(gens)):
        im = [None] * A.size
        for a, w in words.items():
            im[a] = B.zero if w is None else B.prod(v for v, e in zip(vals, w) for _ in range(e))
        ok = all(im[A.mul(a, b)] == B.mul(im[a], im[b]) for a in A.elements() for b in A.elements())
        if ok:
            out.append(MonoidHom(A, B, im, check=False))
    return out


def find_isomorphism(A: FiniteMonoid, B: FiniteMonoid):
    if A.size != B.size or len(A.units) != len(B.units):
        return None
    for h in homs(A, B):
        if h.is_injective():
            return h
    return None


def is_isomorphic(A, B) -> bool:
    return find_isomorphism(A, B) is not None
