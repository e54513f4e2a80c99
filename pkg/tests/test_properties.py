import pytest

from f1cong import congruence as cg
from f1cong import corpus
from f1cong import properties as pr
from f1cong import scheme as sc
from f1cong.monoid import FreeMonomialMonoid, MonoidHom, ZERO, homs


def _finite(phi):
    return all(A.is_finite for A in phi.source.charts + phi.target.charts)


def _by_name(suite):
    return {s.name: s for s in suite}


def test_suite_shape(suite):
    kinds = {s.kind for s in suite}
    assert len(suite) >= 20
    assert {"closed", "open", "fold", "locally closed"} <= kinds


def test_closed_immersion_characterizations_agree(suite, suite_reports):
    for s in suite:
        r = suite_reports[s.name]
        assert r["definition"] == r["topological"]["verdict"] == s.closed_immersion, s.name


def test_separatedness_characterizations_agree(suite, suite_reports):
    for s in suite:
        r = suite_reports[s.name]["separated"]
        assert r["definition"] == r["topological"] == s.separated, s.name


def test_locally_closed_example(suite_reports):
    r = suite_reports["two points in MSpec(XY)"]["topological"]
    assert r["embedding"] and r["sheaf_surjective"] and not r["image_vanishing"]
    assert r["verdict"] is False


def test_closed_immersions_are_closed_embeddings(suite):
    for s in suite:
        if s.closed_immersion and _finite(s.phi):
            assert sc.induced_cong_map(s.phi).is_closed_embedding(), s.name


def test_vanishing_set_triangle(suite):
    for s in suite:
        phi = s.phi
        if not (s.closed_immersion and _finite(phi)):
            continue
        Xc = sc.scheme_cong_space(phi.target)
        _, image = pr.cong_image_finite(phi, None, Xc)
        sheaf = pr.congruence_sheaf_of(phi)
        assert sheaf.quasi_coherent
        assert sheaf.vanishing_points(Xc) == image
        assert pr.is_vanishing_set(Xc, image)


def _closed_subscheme(X, congs):
    """Chart-wise quotients glued along the induced overlaps, with the immersion."""
    charts, projs = [], []
    for A, c in zip(X.charts, congs):
        Q, q = cg.quotient(A, c)
        charts.append(Q)
        projs.append(q)
    keep = [i for i, Q in enumerate(charts) if not cg.full(X.charts[i]) == congs[i]]
    assert keep == list(range(len(X.charts))), "only subschemes meeting every chart are built here"
    gluings = {}
    for (i, j), ov in X.overlaps.items():
        s = projs[i](ov.s)
        loc = sc.principal_localization(charts[i], s)
        if loc.empty:
            continue
        step = sc.extend_hom(projs[i], ov.loc, loc)
        res = step.__class__(ov.res.source, loc.monoid, [step(ov.res(x)) for x in ov.res.source.elements()])
        images = [res(next(x for x in X.charts[j].elements() if projs[j](x) == b)) for b in charts[j].elements()]
        gluings[(i, j)] = (s, images)
    Z = sc.glue(charts, gluings, X.names)
    return sc.SchemeMorphism(Z, X, list(range(len(charts))), projs)


def test_every_vanishing_set_comes_from_its_closed_immersion():
    for name, X in corpus.finite_schemes().items():
        Xc = sc.scheme_cong_space(X)
        n = len(Xc.points)
        seen = set()
        for bits in range(1, 2 ** n):
            Z = frozenset(k for k in range(n) if bits >> k & 1)
            if not pr.is_vanishing_set(Xc, Z) or not all(Z & cp for cp in Xc.chart_points):
                continue
            V = pr.vanishing_closure(Xc, Z)
            assert V.points == Z
            phi = _closed_subscheme(X, V.congs)
            assert pr.is_closed_immersion_def(phi), name
            _, image = pr.cong_image_finite(phi, None, Xc)
            assert image == Z, name
            # closed subscheme -> congruence sheaf -> closed subscheme
            sheaf = pr.congruence_sheaf_of(phi)
            assert [cg.radical(c) for c in sheaf.congs] == V.congs
            seen.add(Z)
        assert seen, name


def test_vanishing_closure_of_image_is_kernel_vanishing_set(suite):
    for s in suite:
        phi = s.phi
        if not _finite(phi):
            continue
        Xc = sc.scheme_cong_space(phi.target)
        _, image = pr.cong_image_finite(phi, None, Xc)
        sheaf = pr.congruence_sheaf_of(phi)
        assert pr.vanishing_closure(Xc, image).points == sheaf.vanishing_points(Xc), s.name


def test_vanishing_closure_is_a_closure_operator():
    for name, X in corpus.finite_schemes().items():
        Xc = sc.scheme_cong_space(X)
        n = len(Xc.points)
        for bits in range(2 ** n):
            Z = frozenset(k for k in range(n) if bits >> k & 1)
            V = pr.vanishing_closure(Xc, Z).points
            assert Z <= V and pr.vanishing_closure(Xc, V).points == V
            assert Xc.space.is_closed(V)


def test_strongly_reduced_pairs_are_separated_by_primes():
    for A in corpus.finite_corpus():
        R, _ = cg.sred(A)
        primes = cg.prime_congruences(R)
        for a in R.elements():
            for b in R.elements():
                if a != b:
                    assert not all(p.related(a, b) for p in primes)


def test_sred_scheme_is_a_closed_immersion_and_homeomorphism():
    for name, X in corpus.finite_schemes().items():
        Xr, iota = pr.sred_scheme(X)
        assert pr.is_closed_immersion_def(iota), name
        assert sc.induced_point_map(iota).is_homeomorphism(), name
        assert sc.induced_cong_map(iota).is_homeomorphism(), name


def test_dominance(suite):
    by = _by_name(suite)
    assert pr.is_dominant(sc.identity_morphism(sc.affine_space(1)))
    assert pr.is_dominant(sc.identity_morphism(corpus.doubled_point_e()))
    with pytest.raises(pr.UnsupportedQuery):
        pr.is_dominant(by["identity P1"].phi)
    assert not pr.is_dominant(by["diagonal A1 -> A2"].phi)
    assert pr.is_dominant(by["Gm in A1"].phi)
    assert pr.is_dominant(by["D(e) in MSpec(E)"].phi) is False


def test_two_points_in_a1_are_not_strictly_dense(suite):
    """t -> 0 and t -> 1: the kernel contains (t^2, t), so the closure is just the two points."""
    phi = _by_name(suite)["0 and 1 in A1"].phi
    assert not pr.is_dominant(phi)
    sheaf = pr.congruence_sheaf_of(phi)
    A = phi.target.charts[0]
    t = A.var(0)
    assert cg.vanishing_set_contains(A, sheaf.congs[0], (A.pow(t, 2), t))
    p = cg.symbolic_prime(A, (), [(1,)])          # t ~ 1
    q = cg.symbolic_prime(A, (0,))                # t ~ 0
    r = cg.symbolic_prime(A, (), [(2,)])          # t^2 ~ 1, not in the closure
    assert all(pr_ in p and pr_ in q for pr_ in sheaf.congs[0])
    assert not all(pr_ in r for pr_ in sheaf.congs[0])


def test_closed_maps_on_the_finite_tier(suite):
    for s in suite:
        if _finite(s.phi):
            assert pr.is_closed_map(s.phi), s.name
    small = [A for A in corpus.finite_corpus() if A.size <= 4]
    for A in small:
        for B in small:
            for f in homs(A, B):
                assert pr.is_closed_map(sc.affine_morphism(f))
    with pytest.raises(pr.UnsupportedQuery):
        pr.is_closed_map(_by_name(suite)["A1 -> point"].phi)


def test_diagonal_of_a1_over_a2_image_is_closed(suite):
    assert pr.image_is_vanishing_set(_by_name(suite)["diagonal A1 -> A2"].phi)


def test_sheaf_of_e_equals_zero():
    E = corpus.e_monoid()
    phi = sc.affine_morphism(MonoidHom(E, corpus.F1(), [0, 1, 0]))
    sheaf = pr.congruence_sheaf_of(phi)
    assert sheaf.congs[0].describe() == [("0", "e")]


def test_open_immersion_sheaf_is_trivial():
    E = corpus.e_monoid()
    phi = sc.affine_morphism(MonoidHom(E, corpus.F1(), [0, 1, 1]))
    assert not pr.congruence_sheaf_of(phi).congs[0].is_trivial()
    Gm = sc.affine_morphism(MonoidHom(corpus.free(1), corpus.free(1, (0,)), [(1,)]))
    assert all(x == y for x, y in pr.congruence_sheaf_of(Gm).congs[0])


def test_separated_over_a_non_affine_base_uses_the_source(suite):
    rep = pr.separated_report(_by_name(suite)["chart U0 in P1"].phi)
    assert rep["via"] == "source over F1" and rep["definition"]


def test_non_separated_base_is_refused():
    X = corpus.doubled_origin_line()
    phi = sc.identity_morphism(X)
    with pytest.raises(pr.UnsupportedQuery):
        pr.separated_report(phi)
