import itertools

from hypothesis import given, strategies as st

from f1cong import congruence as cg
from f1cong import corpus
from f1cong import spectra as sp
from f1cong.monoid import F1, FreeMonomialMonoid, MonoidHom, ZERO, compose, enumerate_homs_to_F1, homs

CORPUS = corpus.finite_corpus()
SMALL = [A for A in CORPUS if A.size <= 4]
monoids = st.sampled_from(CORPUS)


def brute_topology(X):
    """Every open set: unions of finite intersections of the subbasis."""
    n = len(X)
    basis = {frozenset(range(n))}
    subs = list(X.subbasis.values())
    for r in range(1, len(subs) + 1):
        for combo in itertools.combinations(subs, r):
            basis.add(frozenset.intersection(*combo))
        if r > 3:
            break
    opens = {frozenset()}
    for r in range(1, len(basis) + 1):
        for combo in itertools.combinations(basis, r):
            opens.add(frozenset().union(*combo))
        if len(opens) > 4000:
            break
    return opens


@given(st.sampled_from([A for A in CORPUS if A.size <= 3]))
def test_closure_matches_brute_topology(A):
    for X in (sp.mspec(A), sp.cong_space(A)):
        n = len(X)
        closed = [frozenset(range(n)) - U for U in brute_topology(X)]
        for r in range(n + 1):
            for S in itertools.combinations(range(n), r):
                want = min((C for C in closed if set(S) <= C), key=len)
                assert X.closure(S) == want


@given(monoids)
def test_spaces_are_T0(A):
    assert sp.mspec(A).is_T0()
    assert sp.cong_space(A).is_T0()


@given(monoids)
def test_pi_is_continuous_and_surjective(A):
    pi = sp.projection_pi(A)
    assert pi.is_continuous() and pi.is_surjective()
    # every prime ideal is hit by tau
    tau = sp.section_tau(A)
    assert all(pi(tau(i)) == i for i in range(len(tau.source)))


@given(monoids)
def test_closed_points_are_the_kernels_of_maps_to_f1(A):
    X, Y = sp.cong_space(A), sp.mspec(A)
    chi = sp.chi(A, X)
    assert set(sp.closed_points(X)) == set(chi.values())
    pi = sp.projection_pi(A, X, Y)
    assert sorted(pi(i) for i in chi.values()) == list(range(len(Y)))


@given(monoids)
def test_sigma_and_tau_are_sections(A):
    pi = sp.projection_pi(A)
    for s in (sp.section_sigma(A), sp.section_tau(A)):
        assert all(pi(s(i)) == i for i in range(len(s.source)))


@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_pullback_of_prime_is_prime(A, B):
    for f in homs(A, B):
        for q in cg.prime_congruences(B):
            assert cg.is_prime(A, cg.pullback(f, q))


@given(st.sampled_from(SMALL), st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_cong_functoriality(A, B, C):
    XA, XB, XC = sp.cong_space(A), sp.cong_space(B), sp.cong_space(C)
    for f in homs(A, B):
        for g in homs(B, C):
            gf = sp.induced_map(compose(g, f), XC, XA)
            two = tuple(sp.induced_map(f, XB, XA)(sp.induced_map(g, XC, XB)(i)) for i in range(len(XC)))
            assert gf.mapping == two
            assert gf.is_continuous()


@given(monoids, st.data())
def test_tau_is_functorial_under_quotients(A, data):
    c = data.draw(st.sampled_from(cg.enumerate_congruences(A, 10)))
    if c.is_full():
        return
    Q, q = cg.quotient(A, c)
    for P in Q.prime_ideals:
        pre = frozenset(a for a in A.elements() if q(a) in P)
        assert cg.pullback(q, sp.tau_congruence(Q, P)) == sp.tau_congruence(A, pre)


@given(monoids)
def test_fibres_are_residue_congruence_spaces(A):
    for P in A.prime_ideals:
        assert sp.fibre(A, P).is_homeomorphic()


def test_e_monoid_spaces():
    E = corpus.e_monoid()
    Y, X = sp.mspec(E), sp.cong_space(E)
    assert sorted(Y.labels) == ["<0>", "<e>"]
    assert [Y.labels[i] for i in Y.closed_points()] == ["<e>"]
    assert sorted(X.labels) == ["<(e,0)>", "<(e,1)>"] and X.is_discrete()
    pi = sp.projection_pi(E, X, Y)
    assert pi.is_bijective() and not pi.is_open_map()


# ---------------------------------------------------------------- symbolic tier

def test_sigma_fails_functoriality_on_the_diagonal():
    A1, A2 = FreeMonomialMonoid(1), FreeMonomialMonoid(2)
    delta = MonoidHom(A2, A1, [(1,), (1,)])
    X1, X2 = sp.SymbolicCongSpace(A1), sp.SymbolicCongSpace(A2)
    I = sp.symbolic_pullback_ideal(delta, frozenset())
    assert cg.symbolic_pullback(delta, X1.sigma(frozenset())) != X2.sigma(I)
    assert cg.symbolic_pullback(delta, X1.tau(frozenset())) == X2.tau(I)


def test_symbolic_closed_points_are_kernels_of_maps_to_f1():
    A2 = FreeMonomialMonoid(2)
    X = sp.SymbolicCongSpace(A2)
    assert set(X.closed_points()) == set(sp.chi(A2).values())
    assert sorted(X.pi(p) for p in X.closed_points()) == sorted(sp.symbolic_prime_ideals(A2))


def test_subbasic_opens_inside_u_t0_and_u_t1():
    A = FreeMonomialMonoid(1, names=("t",))
    X = sp.SymbolicCongSpace(A)
    t, one = A.var(0), A.one
    t2 = A.pow(t, 2)
    # t ~ t^2 is not prime: the least prime containing it also contains (t, 1)
    assert cg.minimal_primes_over(A, [(t, t2)])[0].label() == "p[|(1)]"
    rep = sp.notbasis_report(6)
    assert rep["exponent_two_in_intersection"]
    # U_{t,t^2} is a non-empty subbasic open inside the intersection
    assert ("t", "t^2") in rep["contained_subbasic_opens"]
    assert X.in_U(cg.symbolic_prime(A, (), [(2,)]), t, t2)


def test_symbolic_mspec_of_a2():
    Y = sp.symbolic_mspec(FreeMonomialMonoid(2))
    assert len(Y) == 4 and len(Y.closed_points()) == 1
