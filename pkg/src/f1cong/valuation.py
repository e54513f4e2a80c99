"""Valuation monoids, test diagrams and the lift solver behind the valuative criteria."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .monoid import FreeMonomialMonoid, MonoidError, MonoidHom, ZERO, frac
from . import scheme as sc

DEFAULT_RADIUS = 5


class PrerequisiteError(MonoidError):
    pass


# ---------------------------------------------------------------- valuation data

@dataclass(frozen=True)
class ValuationData:
    """A_v = {0} u {g in Z^r : v.g >=_lex 0} inside the pointed group G = Z^r u {0}."""
    valuation: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.valuation)
        if not rows or len({len(r) for r in rows}) != 1:
            raise MonoidError("valuation must be a non-empty integer matrix")
        object.__setattr__(self, "valuation", rows)

    @property
    def group_rank(self) -> int:
        return len(self.valuation[0])

    @property
    def value_rank(self) -> int:
        return len(self.valuation)

    @property
    def group(self) -> FreeMonomialMonoid:
        r = self.group_rank
        return FreeMonomialMonoid(r, frozenset(range(r)), tuple(f"g{i + 1}" for i in range(r)))

    def value(self, g) -> tuple:
        return tuple(int(x) for x in np.asarray(self.valuation) @ np.asarray(g, dtype=int))

    def contains(self, g) -> bool:
        if g is ZERO:
            return True
        return self.value(g) >= (0,) * self.value_rank

    def is_unit(self, g) -> bool:
        return g is not ZERO and not any(self.value(g))

    def sample(self, radius: int = DEFAULT_RADIUS):
        rng = range(-radius, radius + 1)
        return itertools.product(rng, repeat=self.group_rank)

    def inclusion_is_dominant(self) -> bool:
        # A_v -> G pulls every unit of G back, so it is dominant only when A_v = G
        return not any(any(row) for row in self.valuation)

    def to_dict(self) -> dict:
        return {"rank": self.group_rank, "matrix": [list(r) for r in self.valuation]}

    def __repr__(self):
        return f"ValuationData({[list(r) for r in self.valuation]})"


def default_valuations() -> list:
    return [ValuationData(((1,),)), ValuationData(((1, 0), (0, 1))), ValuationData(((1, 1),))]


def is_valuation_monoid(A, radius: int = DEFAULT_RADIUS) -> bool:
    if isinstance(A, ValuationData):
        G = A.group
        for g in A.sample(radius):
            if not (A.contains(g) or A.contains(G.inverse(g))):
                return False
        return True
    if not A.is_integral():
        raise MonoidError(f"{A} is not integral")
    F, iota = frac(A)
    img = set(iota.images)
    return all(x in img or F.inverse(x) in img for x in F.elements() if x != F.zero)


def dominates(f: MonoidHom) -> bool:
    """f^-1(units of B) consists of units of A."""
    A, B = f.source, f.target
    if A.is_finite:
        return all(A.is_unit(a) or not B.is_unit(f(a)) for a in A.elements())
    # a monomial maps to a unit only if each free variable in it does
    return not any(B.is_unit(f(A.var(i))) for i in A.free_vars)


def is_maximal_for_domination(A) -> bool:
    """No proper submonoid of Frac(A) dominates A (finite integral A)."""
    if not A.is_integral():
        raise MonoidError(f"{A} is not integral")
    F, iota = frac(A)
    img = frozenset(iota.images)
    rest = [x for x in F.elements() if x not in img]
    for k in range(1, len(rest) + 1):
        for extra in itertools.combinations(rest, k):
            B = F.submonoid(list(img) + list(extra))
            if B == img:
                continue
            units_B = {b for b in B if b != F.zero and F.inverse(b) in B}
            if all(F.inverse(a) in img for a in img if a in units_B):
                return False
    return True


# ---------------------------------------------------------------- chart-local maps

@dataclass
class ChartMap:
    """A map out of chart `chart`: hom Gamma(chart) -> G."""
    chart: int
    hom: MonoidHom

    def images(self):
        A = self.hom.source
        if A.is_finite:
            return [(A.label(a), self.hom(a)) for a in A.elements()]
        return [(A.names[i], self.hom(A.var(i))) for i in range(A.num_vars)]


def _gens(A):
    if A.is_finite:
        return list(A.elements())
    return [A.var(i) for i in range(A.num_vars)]


def _hom_from(A, G, values):
    return MonoidHom(A, G, list(values))


def transport(Z, m: ChartMap, target: int, is_unit, G) -> ChartMap | None:
    """Move a map out of chart m.chart to `target` when the relevant point lies in both charts."""
    if m.chart == target:
        return m
    ov = Z.overlaps.get((m.chart, target))
    if ov is None or not is_unit(m.hom(ov.s)):
        return None
    h = m.hom
    B = Z.charts[target]
    vals = []
    for x in _gens(B):
        num, den = ov.loc.fraction(ov.res(x))
        if num is ZERO:
            vals.append(ZERO)
        else:
            vals.append(G.mul(h(num), G.inverse(h(den))))
    return ChartMap(target, _hom_from(B, G, vals))


def _pull(phi, m: ChartMap, G) -> ChartMap:
    """phi composed with a map out of a source chart: a map out of the assigned target chart."""
    f = phi.homs[m.chart]
    A = f.source
    return ChartMap(phi.assign[m.chart], _hom_from(A, G, [m.hom(f(x)) for x in _gens(A)]))


def _same(m1: ChartMap, m2: ChartMap) -> bool:
    return m1.chart == m2.chart and all(m1.hom(x) == m2.hom(x) for x in _gens(m1.hom.source))


def _agree(Z, m1: ChartMap, m2: ChartMap, is_unit, G) -> bool:
    t = transport(Z, m2, m1.chart, is_unit, G)
    return t is not None and _same(m1, t)


# ---------------------------------------------------------------- diagrams and lifts

@dataclass
class TestDiagram:
    """eta: MSpec(G) -> Y, nu: MSpec(A_v) -> X, with phi: Y -> X."""
    valuation: ValuationData
    eta: ChartMap
    nu: ChartMap
    phi: sc.SchemeMorphism
    check: bool = field(default=True, repr=False)

    __test__ = False  # not a pytest class

    def __post_init__(self):
        if self.check:
            self.validate()

    def validate(self):
        vd, G = self.valuation, self.valuation.group
        if not all(vd.contains(y) for _, y in self.nu.images()):
            raise MonoidError("nu does not land in the valuation monoid")
        outer = _pull(self.phi, self.eta, G)
        if not _agree(self.phi.target, outer, self.nu, _nonzero, G):
            raise MonoidError("test diagram does not commute")

    def to_dict(self) -> dict:
        G = self.valuation.group
        def enc(m):
            return {"chart": m.chart, "images": {k: G.fmt(v) for k, v in m.images()}}
        return {"valuation": self.valuation.to_dict(), "eta": enc(self.eta), "nu": enc(self.nu)}


def _nonzero(g) -> bool:
    return g is not ZERO


def solve_lifts(d: TestDiagram) -> list:
    """All lifts MSpec(A_v) -> Y, each as a ChartMap into A_v (inside G)."""
    vd, G, phi = d.valuation, d.valuation.group, d.phi
    Y, X = phi.source, phi.target
    lifts = []
    for j in range(len(Y.charts)):
        cand = transport(Y, d.eta, j, _nonzero, G)
        if cand is None:
            continue
        if not all(vd.contains(y) for _, y in cand.images()):
            continue
        if not _agree(X, _pull(phi, cand, G), d.nu, vd.is_unit, G):
            continue
        # the same lift seen from another chart: its closed point lies in both
        if any(_agree(Y, old, cand, vd.is_unit, G) for old in lifts):
            continue
        lifts.append(cand)
    for m in lifts:
        assert _agree(X, _pull(phi, m, G), d.nu, vd.is_unit, G)
        assert _agree(Y, transport(Y, d.eta, m.chart, _nonzero, G), m, _nonzero, G)
    return lifts


def _chart_maps(A, G, radius):
    """Homs Gamma(chart) -> G: monomial ones with exponents in [-radius, radius]."""
    if A.is_finite:
        for P in A.prime_ideals:
            yield [ZERO if a in P else G.one for a in A.elements()]
        return
    choices = []
    box = [tuple(e) for e in itertools.product(range(-radius, radius + 1), repeat=G.num_vars)]
    for i in range(A.num_vars):
        choices.append(box if i in A.inverted else [ZERO] + box)
    yield from itertools.product(*choices)


def generate_family(phi, valuations=None, radius: int = DEFAULT_RADIUS) -> list:
    valuations = valuations if valuations is not None else default_valuations()
    Y, X = phi.source, phi.target
    out = []
    for vd in valuations:
        G = vd.group
        for i, A in enumerate(Y.charts):
            for vals in _chart_maps(A, G, radius):
                eta = ChartMap(i, MonoidHom(A, G, list(vals), check=A.is_finite))
                # generated from the first chart containing the generic point
                if any(transport(Y, eta, k, _nonzero, G) is not None for k in range(i)):
                    continue
                outer = _pull(phi, eta, G)
                nus = []
                for w in range(len(X.charts)):
                    nu = transport(X, outer, w, _nonzero, G)
                    if nu is None or not all(vd.contains(y) for _, y in nu.images()):
                        continue
                    if any(_agree(X, old, nu, vd.is_unit, G) for old in nus):
                        continue
                    nus.append(nu)
                out += [TestDiagram(vd, eta, nu, phi, check=False) for nu in nus]
    return out


# ---------------------------------------------------------------- valuative checks

def _run(phi, family, radius, valuations, bad, prop, prereq):
    pre = {name: fn(phi) for name, fn in prereq}
    if not all(pre.values()):
        raise PrerequisiteError(f"{prop}: prerequisite failed {pre}")
    diagrams = list(family or []) + generate_family(phi, valuations, radius)
    for d in diagrams:
        n = len(solve_lifts(d))
        if bad(n):
            return {"property": prop, "verdict": "counterexample", "lifts": n,
                    "witness": d.to_dict(), "diagrams": len(diagrams), "prerequisites": pre}
    return {"property": prop, "verdict": "no-counterexample-found", "diagrams": len(diagrams),
            "prerequisites": pre}


def check_universally_closed(phi, family=None, radius: int = DEFAULT_RADIUS, valuations=None) -> dict:
    return _run(phi, family, radius, valuations, lambda n: n == 0, "universally_closed",
                [("quasi_compact", sc.is_quasi_compact)])


def check_separated_valuative(phi, family=None, radius: int = DEFAULT_RADIUS, valuations=None) -> dict:
    return _run(phi, family, radius, valuations, lambda n: n >= 2, "separated",
                [("quasi_separated", sc.is_quasi_separated)])


def check_proper(phi, family=None, radius: int = DEFAULT_RADIUS, valuations=None) -> dict:
    return _run(phi, family, radius, valuations, lambda n: n != 1, "proper",
                [("quasi_separated", sc.is_quasi_separated), ("finite_type", sc.is_finite_type)])
