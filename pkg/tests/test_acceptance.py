"""One test per acceptance criterion; each prints a PASS or FAIL line with its wall time.

Criterion 2 and the literal radical half of criterion 5 are false as stated and are
marked as strict expected failures; the corrected statements are checked alongside.
"""
import itertools
import time
from contextlib import contextmanager

import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from f1cong import congruence as cg
from f1cong import corpus
from f1cong import properties as pr
from f1cong import scheme as sc
from f1cong import spectra as sp
from f1cong import valuation as va
from f1cong.monoid import FreeMonomialMonoid, MonoidHom, ZERO, compose, homs, localize


@contextmanager
def criterion(tag, title, limit):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        ok = ok and dt < limit
        line = f"criterion {tag:>3}: {'PASS' if ok else 'FAIL'}  {title} ({dt:.2f}s, limit {limit}s)"
        print(line)
        ACCEPTANCE_LINES.append(line)
    assert dt < limit, f"took {dt:.1f}s"


def test_01_spaces_of_e():
    with criterion("1", "MSpec and Cong of {0,e,1}", 1):
        E = corpus.e_monoid()
        M, C = sp.mspec(E), sp.cong_space(E)
        assert sorted(M.labels) == ["<0>", "<e>"]
        assert [M.labels[i] for i in M.closed_points()] == ["<e>"]
        assert sorted(C.labels) == ["<(e,0)>", "<(e,1)>"] and C.is_discrete()
        pi = sp.projection_pi(E, C, M)
        assert pi.is_bijective() and pi.is_continuous() and not pi.is_open_map()


@pytest.mark.xfail(strict=True, reason="(t,t^2) generates no prime; see the decisions ledger")
def test_02_notbasis_literal():
    with criterion("2", "notbasis as stated: <(t,t^2)> in both opens, no U_{a,b} inside", 1):
        rep = sp.notbasis_report(6)
        assert rep["literal_in_intersection"]
        assert rep["contained_subbasic_opens"] == []


def test_02b_notbasis_corrected():
    with criterion("2b", "notbasis corrected: p_{0,2Z} in both opens, U_{t,t^2} inside", 1):
        A = FreeMonomialMonoid(1, names=("t",))
        t = A.var(0)
        rep = sp.notbasis_report(6)
        assert not rep["literal_in_intersection"] and rep["literal_point"] == "p[|(1)]"
        assert rep["exponent_two_in_intersection"]
        assert ("t", "t^2") in rep["contained_subbasic_opens"]
        X = sp.SymbolicCongSpace(A)
        assert not X.U_is_empty(t, A.pow(t, 2))


def test_03_diagonal_images():
    with criterion("3", "image of the diagonal: not closed in MSpec(A2), a vanishing set in Cong(A2)", 1):
        A2, A1 = FreeMonomialMonoid(2, names=("t1", "t2")), FreeMonomialMonoid(1, names=("t",))
        f = MonoidHom(A2, A1, [(1,), (1,)])
        M2 = sp.symbolic_mspec(A2)
        image = frozenset(M2.index(sp.symbolic_pullback_ideal(f, I)) for I in sp.symbolic_prime_ideals(A1))
        assert not M2.is_closed(image)
        added = {M2.labels[i] for i in M2.closure(image) - image}
        assert added == {"P_{1}", "P_{2}"}
        assert {M2.labels[i] for i in image} == {"P_{}", "P_{12}"}
        # V<(t1,t2)> = image, both inclusions over a window of primes
        pair = (A2.var(0), A2.var(1))
        window = cg.enumerate_symbolic_primes(A2, 3)
        assert len(window) > 50
        for p in window:
            assert cg.symbolic_in_pullback_image(f, p) == cg.symbolic_member(pair, p), p.label()
        assert cg.symbolic_contains_congker(f, cg.symbolic_prime(A2, (), [(1, -1)]))


def test_04_radical_oracle():
    with criterion("4", "radical formula = meet of primes and I_rad = rad I, all monoids of size <= 5", 300):
        ms = corpus.pointed_monoids(5)
        assert len(ms) >= 30
        checked = 0
        for A in ms:
            T = A.table
            ps = oracles.primes(T, 0, 1)
            for c in cg.enumerate_congruences(A, 10):
                lab = oracles.block_map_from_keys(c.reps)
                want = oracles.meet([p for p in ps if oracles.le(lab, p)], A.size)
                r = cg.radical(c)
                assert oracles.same(oracles.block_map_from_keys(r.reps), want)
                assert cg.nullideal(r) == oracles.radical_ideal(T, cg.nullideal(c))
                checked += 1
        assert checked > 300


def _pairs():
    for A in corpus.finite_corpus():
        for S in A.multiplicative_sets():
            loc = localize(A, S)
            if not loc.monoid.is_degenerate:
                yield A, S, loc


def test_05_prime_localizations():
    with criterion("5a", "prime congruences in localizations round trip", 120):
        n = 0
        for A, S, loc in _pairs():
            for d in cg.prime_congruences(loc.monoid):
                c = cg.pullback(loc.iota, d)
                assert not cg.nullideal(c) & loc.S
                assert cg.localize_congruence(c, S, loc)[0] == d
                n += 1
            for p in cg.prime_congruences(A):
                if not cg.nullideal(p) & loc.S:
                    assert cg.pullback(loc.iota, cg.localize_congruence(p, S, loc)[0]) == p
                    n += 1
        assert n > 400


@pytest.mark.xfail(strict=True, reason="trivial congruence on {0,e,1} with S={1,e}; see the decisions ledger")
def test_05_radical_localizations_literal():
    with criterion("5b", "radical congruences with I_c disjoint from S round trip (as stated)", 120):
        for A, S, loc in _pairs():
            for c in cg.enumerate_congruences(A, 10):
                if cg.is_radical(c) and not cg.nullideal(c) & loc.S:
                    assert cg.pullback(loc.iota, cg.localize_congruence(c, S, loc)[0]) == c


def test_05_radical_localizations_corrected():
    with criterion("5c", "radical round trip when every prime over c avoids S", 120):
        n = 0
        for A, S, loc in _pairs():
            primes = cg.prime_congruences(A)
            for d in cg.enumerate_congruences(loc.monoid, 10):
                if cg.is_radical(d):
                    c = cg.pullback(loc.iota, d)
                    assert cg.is_radical(c) and cg.localize_congruence(c, S, loc)[0] == d
            for c in cg.enumerate_congruences(A, 10):
                if cg.is_radical(c) and not any(cg.nullideal(p) & loc.S for p in cg.primes_containing(primes, c)):
                    assert cg.pullback(loc.iota, cg.localize_congruence(c, S, loc)[0]) == c
                    n += 1
        assert n > 500


def test_06_closed_points():
    with criterion("6", "closed points of Cong(A) = chi(Hom(A,F1)), pi o chi bijective", 60):
        for A in corpus.finite_corpus():
            C, M = sp.cong_space(A), sp.mspec(A)
            ch = sp.chi(A, C)
            assert set(C.closed_points()) == set(ch.values())
            assert len(set(ch.values())) == len(ch)
            pi = sp.projection_pi(A, C, M)
            assert sorted(pi(i) for i in ch.values()) == list(range(len(M)))


def test_07_dual_characterizations(suite, suite_reports):
    with criterion("7", "closed immersion and separatedness characterizations agree on the suite", 120):
        assert len(suite) >= 20
        assert {"closed", "open", "fold", "locally closed"} <= {s.kind for s in suite}
        for s in suite:
            r = suite_reports[s.name]
            assert r["definition"] == r["topological"]["verdict"] == s.closed_immersion, s.name
            assert r["separated"]["definition"] == r["separated"]["topological"] == s.separated, s.name


def test_08_strong_reduction():
    with criterion("8", "X^sred -> X homeomorphic on both spaces; sred is a reflection", 120):
        for name, X in corpus.finite_schemes().items():
            _, iota = pr.sred_scheme(X)
            assert sc.induced_point_map(iota).is_homeomorphism(), name
            assert sc.induced_cong_map(iota).is_homeomorphism(), name
        small = list(corpus.pointed_monoids(5))
        reduced = [B for B in small if cg.is_strongly_reduced(B)]
        for A in small:
            R, q = cg.sred(A)
            for B in reduced:
                through = homs(R, B)
                for f in homs(A, B):
                    lifts = [g for g in through if compose(g, q).images == f.images]
                    assert len(lifts) == 1


def test_09_valuative_suite():
    with criterion("9", "A1 not universally closed but separated, P1 proper, closed immersions proper", 300):
        A1, P1 = sc.affine_space(1), sc.projective_line()
        a, p = sc.structure_morphism(A1), sc.structure_morphism(P1)
        uc = va.check_universally_closed(a, radius=5)
        assert uc["verdict"] == "counterexample" and uc["lifts"] == 0
        assert uc["witness"]["eta"]["images"]["t1"].startswith("g1^-")
        assert va.check_separated_valuative(a, radius=5)["verdict"] == "no-counterexample-found"
        fam = va.generate_family(p, radius=5)
        assert {d.valuation.value_rank for d in fam} == {1, 2}
        assert all(len(va.solve_lifts(d)) == 1 for d in fam)
        for s in corpus.closed_immersions():
            assert va.check_proper(s.phi, radius=5)["verdict"] == "no-counterexample-found", s.name


def test_10_weak_prime():
    with criterion("10", "c_triv on {0,e,1} weak prime, not prime; more weak primes than primes", 1):
        E = corpus.e_monoid()
        t = cg.trivial(E)
        assert cg.is_weak_prime(E, t) and not cg.is_prime(E, t)
        assert len(cg.enumerate_weak_prime_congruences(E)) > len(cg.prime_congruences(E))
