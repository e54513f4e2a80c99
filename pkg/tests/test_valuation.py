import pytest
from hypothesis import given, strategies as st

from f1cong import corpus, dsl
from f1cong import scheme as sc
from f1cong import valuation as va
from f1cong.monoid import F1, MonoidError, MonoidHom, ZERO, frac

GOLDEN = __import__("pathlib").Path(__file__).parent.parent / "golden"

matrices = st.integers(1, 2).flatmap(lambda r: st.lists(
    st.lists(st.integers(-3, 3), min_size=r, max_size=r), min_size=1, max_size=r))


@given(matrices)
def test_valuation_monoid_contains_g_or_its_inverse(rows):
    vd = va.ValuationData(tuple(map(tuple, rows)))
    G = vd.group
    for g in vd.sample(3):
        assert vd.contains(g) or vd.contains(G.inverse(g))
        assert vd.is_unit(g) == (vd.contains(g) and vd.contains(G.inverse(g)))
    assert va.is_valuation_monoid(vd, 3)


def test_finite_valuation_monoids():
    assert va.is_valuation_monoid(F1())
    assert va.is_valuation_monoid(corpus.cyclic_group(3))
    with pytest.raises(MonoidError):
        va.is_valuation_monoid(corpus.e_monoid())


def test_valuation_monoids_are_maximal_for_domination():
    for A in corpus.finite_corpus():
        if A.is_integral():
            assert va.is_valuation_monoid(A) == va.is_maximal_for_domination(A)


def test_domination():
    t = corpus.free(1)
    assert va.dominates(MonoidHom(t, t, [(1,)]))
    assert va.dominates(MonoidHom(t, t, [(2,)]))
    gm = corpus.free(1, (0,))
    assert not va.dominates(MonoidHom(t, gm, [(1,)]))
    assert not va.ValuationData(((1,),)).inclusion_is_dominant()
    assert va.ValuationData(((0,),)).inclusion_is_dominant()


@pytest.fixture(scope="module")
def doc():
    return dsl.parse_file(GOLDEN / "valuative.f1")


def test_a1_has_a_diagram_with_no_lift(doc):
    assert va.solve_lifts(doc["Da"]) == []
    rep = va.check_universally_closed(doc["a"], radius=2)
    assert rep["verdict"] == "counterexample" and rep["lifts"] == 0


def test_p1_lifts_uniquely(doc):
    (m,) = va.solve_lifts(doc["Dp"])
    assert doc["p"].source.names[m.chart] == "U1"
    rep = va.check_proper(doc["p"], radius=3)
    assert rep["verdict"] == "no-counterexample-found" and rep["diagrams"] > 50


def test_every_generated_diagram_commutes(doc):
    for phi in (doc["a"], doc["p"]):
        for d in va.generate_family(phi, radius=2):
            d.validate()


def test_doubled_origin_has_two_lifts():
    phi = sc.structure_morphism(corpus.doubled_origin_line())
    rep = va.check_separated_valuative(phi, radius=2)
    assert rep["verdict"] == "counterexample" and rep["lifts"] == 2


def test_separated_suite_entries_never_lift_twice(suite):
    for s in suite:
        if not s.separated or not sc.is_quasi_separated(s.phi):
            continue
        radius = 1 if any(A.num_vars > 1 for A in s.phi.source.charts + s.phi.target.charts
                          if not A.is_finite) else 2
        for d in va.generate_family(s.phi, radius=radius):
            assert len(va.solve_lifts(d)) <= 1, s.name


def test_closed_immersions_are_proper(suite):
    for s in suite:
        if s.closed_immersion:
            assert va.check_proper(s.phi, radius=1)["verdict"] == "no-counterexample-found", s.name


def test_reports_record_prerequisites(doc):
    rep = va.check_proper(doc["p"], radius=1)
    assert rep["prerequisites"] == {"quasi_separated": True, "finite_type": True}


def test_diagram_must_commute():
    A1 = sc.affine_space(1)
    phi = sc.identity_morphism(A1)
    vd = va.ValuationData(((1,),))
    G, A = vd.group, A1.charts[0]
    eta = va.ChartMap(0, MonoidHom(A, G, [(1,)]))
    va.TestDiagram(vd, eta, va.ChartMap(0, MonoidHom(A, G, [(1,)])), phi)
    with pytest.raises(MonoidError, match="commute"):
        va.TestDiagram(vd, eta, va.ChartMap(0, MonoidHom(A, G, [(2,)])), phi)
    with pytest.raises(MonoidError, match="valuation monoid"):
        va.TestDiagram(vd, eta, va.ChartMap(0, MonoidHom(A, G, [(-1,)])), phi)
    with pytest.raises(MonoidError):
        va.ValuationData(())
