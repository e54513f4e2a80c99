import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from f1cong import congruence as cg
from f1cong import corpus
from f1cong.monoid import (F1, ZERO, FiniteMonoid, FreeMonomialMonoid, MonoidError, MonoidHom, compose, frac,
                           from_products, homs, is_isomorphic, localize, tensor, truncated_polynomial,
                           unique_hom_from_f1)

CORPUS = corpus.finite_corpus()
SMALL = [A for A in CORPUS if A.size <= 4]
monoids = st.sampled_from(CORPUS)
small = st.sampled_from(SMALL)


def test_corpus_tables_are_valid():
    for A in CORPUS:
        assert oracles.is_monoid_table(A.table, A.zero, A.one)
        A.validate()


def test_rejects_bad_tables():
    with pytest.raises(MonoidError, match="associative"):
        FiniteMonoid([[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 0], [0, 3, 0, 2]])
    with pytest.raises(MonoidError):
        FiniteMonoid([[0, 0], [0, 0]], 0, 0)
    with pytest.raises(MonoidError, match="commutative"):
        FiniteMonoid([[0, 0, 0], [0, 1, 2], [0, 1, 2]])
    with pytest.raises(MonoidError, match="missing"):
        from_products(["a", "b"], {("a", "a"): "b"})
    with pytest.raises(MonoidError):
        truncated_polynomial(3, "idem")


@given(monoids)
def test_prime_ideals_match_oracle(A):
    assert set(A.prime_ideals) == set(oracles.prime_ideals(A.table, A.zero, A.one))


@given(monoids, st.data())
def test_localization_size_matches_naive_pairs(A, data):
    S = data.draw(st.sampled_from(A.multiplicative_sets()))
    L = localize(A, S)
    assert L.monoid.size == oracles.localization_size(A.table, S)
    # every element of S becomes a unit
    assert all(L.monoid.is_unit(L.iota(s)) for s in S)


@given(small, st.data())
def test_localization_universal_property(A, data):
    S = data.draw(st.sampled_from(A.multiplicative_sets()))
    loc = localize(A, S)
    for B in SMALL:
        for h in homs(A, B):
            if not all(B.is_unit(h(s)) for s in S):
                continue
            through = [g for g in homs(loc.monoid, B) if compose(g, loc.iota).images == h.images]
            assert len(through) == 1


def _f_S(f, loc_A, loc_B):
    """S^-1 A -> f(S)^-1 B induced by f."""
    LB = loc_B.monoid
    out = []
    for x in loc_A.monoid.elements():
        a, s = loc_A.rep[x]
        out.append(LB.mul(loc_B.iota(f(a)), LB.inverse(loc_B.iota(f(s)))))
    return MonoidHom(loc_A.monoid, LB, out)


@given(small, st.data())
def test_localization_is_exact(A, data):
    c = data.draw(st.sampled_from(cg.enumerate_congruences(A)))
    S = data.draw(st.sampled_from(A.multiplicative_sets()))
    B, f = cg.quotient(A, c)
    loc_A = localize(A, S)
    loc_B = localize(B, [f(s) for s in S])
    fS = _f_S(f, loc_A, loc_B)
    lhs = cg.congker(fS)
    rhs, _ = cg.localize_congruence(cg.congker(f), S, loc_A)
    assert lhs == rhs


@given(monoids)
def test_frac_is_pointed_group(A):
    if A.has_zero_divisors():
        with pytest.raises(MonoidError):
            frac(A)
        return
    F, iota = frac(A)
    assert F.is_pointed_group()
    assert all(F.mul(x, F.inverse(x)) == F.one for x in F.elements() if x != F.zero)


@given(small, small, st.sampled_from([A for A in SMALL if A.size <= 3]))
def test_tensor_over_f1_universal_property(A, B, D):
    f, g = unique_hom_from_f1(A), unique_hom_from_f1(B)
    tp = tensor(f, g)
    for hA in homs(A, D):
        for hB in homs(B, D):
            med = [m for m in homs(tp.monoid, D)
                   if compose(m, tp.left).images == hA.images and compose(m, tp.right).images == hB.images]
            assert len(med) == 1
            assert med[0].images == tp.mediate(hA, hB).images


def test_tensor_over_a_common_base():
    E = corpus.e_monoid()
    targets = [A for A in SMALL if A.size <= 3]
    tp = tensor(homs(E, E)[-1], homs(E, E)[-1])
    assert is_isomorphic(tp.monoid, E)
    for A, B in itertools.product(targets, repeat=2):
        for f in homs(E, A):
            for g in homs(E, B):
                tp = tensor(f, g)
                for D in targets:
                    for hA in homs(A, D):
                        for hB in homs(B, D):
                            if compose(hA, f).images != compose(hB, g).images:
                                continue
                            med = [m for m in homs(tp.monoid, D) if compose(m, tp.left).images == hA.images
                                   and compose(m, tp.right).images == hB.images]
                            assert len(med) == 1


def test_idempotent_power_and_units():
    C3 = corpus.cyclic_group(3)
    assert C3.is_pointed_group()
    u = C3.index("u")
    assert C3.idempotent_power(u) == C3.one
    T3 = truncated_polynomial(3)
    assert T3.idempotent_power(T3.index("t")) == T3.zero
    assert T3.units == {T3.one}


def test_free_monomial_monoid_arithmetic():
    A = FreeMonomialMonoid(2, {1}, ("x", "y"))
    x, y = A.var(0), A.var(1)
    assert A.mul(x, A.inverse(y)) == (1, -1)
    assert A.fmt(A.mul(A.pow(x, 2), A.inverse(y))) == "x^2*y^-1"
    assert A.mul(x, ZERO) is ZERO
    assert not A.contains((-1, 0))
    with pytest.raises(MonoidError):
        A.inverse(x)


def test_hom_validation():
    E = corpus.e_monoid()
    with pytest.raises(MonoidError):
        MonoidHom(E, F1(), [0, 0, 1])          # 1 must go to 1
    with pytest.raises(MonoidError):
        MonoidHom(F1(), E, [0, 2])


def test_homs_match_oracle():
    for A in SMALL:
        for B in SMALL:
            ours = {h.images for h in homs(A, B)}
            theirs = set(oracles.homs(A.table, A.zero, A.one, B.table, B.zero, B.one))
            assert ours == theirs


def test_localization_labels_follow_the_base():
    E = corpus.e_monoid()
    L = localize(E, [E.index("e")]).monoid
    assert L.labels == ("0", "1")
