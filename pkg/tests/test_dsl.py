import json

import pytest
from hypothesis import given, strategies as st

from f1cong import corpus, dsl
from f1cong import scheme as sc
from f1cong.monoid import MonoidError


def _roundtrip_monoid(M):
    doc = dsl.parse(f"monoid M = {dsl.emit_monoid(M)}")
    return doc["M"]


def test_corpus_monoids_round_trip():
    for M in corpus.finite_corpus() + list(corpus.named_monoids().values()):
        N = _roundtrip_monoid(M)
        assert [N.label(a) for a in N.elements()] == [M.label(a) for a in M.elements()]
        assert N.table == M.table


def test_free_monoids_round_trip():
    for M in (corpus.free(2, names=("x", "y")), corpus.free(3, (1,)), corpus.free(0)):
        N = _roundtrip_monoid(M)
        assert (N.num_vars, N.inverted, N.names) == (M.num_vars, M.inverted, M.names)


def test_schemes_round_trip_to_a_fixed_point():
    for name, X in corpus.corpus_schemes().items():
        text = dsl.emit_scheme(X, "X")
        Y = dsl.parse(text)["X"]
        assert dsl.emit_scheme(Y, "X") == text, name
        assert len(Y.charts) == len(X.charts) and set(Y.overlaps) == set(X.overlaps)


def test_suite_morphisms_round_trip(suite):
    for s in suite:
        text = dsl.emit_morphism(s.phi, "f", "S", "T")
        phi = dsl.parse(text)["f"]
        assert phi.assign == s.phi.assign, s.name
        assert dsl.emit_morphism(phi, "f", "S", "T") == text, s.name


def test_emitters_are_deterministic(suite):
    for s in suite[:6]:
        a = dsl.emit_json(s.phi)
        assert a == dsl.emit_json(s.phi)
        assert json.loads(a)["format"] == dsl.FORMAT


def test_tables_in_any_order():
    a = dsl.parse("monoid M = table { elements x y; y*x = 0; x*x = x; y*y = y; }")["M"]
    b = dsl.parse("monoid M = table { elements y x; x*y = 0; y*y = y; x*x = x; }")["M"]
    assert a.table == b.table


@pytest.mark.parametrize("text,line,column", [
    ("monoid E = table { elements e; e*e = ; }", 1, 38),
    ("\n\nscheme X = glue { chart U = free(t) }", 3, 37),
    ("monoid E = table { elements e; e*e = e; }\nmonoid E = free(t)", 2, 8),
    ("hom f: Q -> F1 { }", 1, 8),
])
def test_errors_carry_positions(text, line, column):
    with pytest.raises(dsl.DSLError) as exc:
        dsl.parse(text)
    assert (exc.value.line, exc.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(exc.value)


def test_semantic_errors():
    with pytest.raises(MonoidError):
        dsl.parse("monoid M = table { elements a b; a*a = b; a*b = a; b*b = a; }")
    with pytest.raises(MonoidError):
        dsl.parse("monoid E = table { elements e; e*e = e; }\nhom f: E -> F1 { e -> 2; }")


names = st.lists(st.sampled_from(["t", "u", "v", "w"]), min_size=0, max_size=4, unique=True)


@given(names, st.data())
def test_free_declarations(vars_, data):
    inv = data.draw(st.lists(st.sampled_from(vars_), unique=True)) if vars_ else []
    text = f"monoid A = free({', '.join(vars_)})" + (f" invert({', '.join(inv)})" if inv else "")
    A = dsl.parse(text)["A"]
    canon = [v for v in vars_ if v in inv]
    expect = f"free({', '.join(vars_)})" + (f" invert({', '.join(canon)})" if inv else "")
    assert dsl.emit_monoid(A) == expect


def test_builtins():
    doc = dsl.parse("scheme P = projective(2)\nscheme A = affine_space(3)\nscheme G = torus(1)\nscheme Q = point")
    assert len(doc["P"].charts) == 3 and doc["A"].charts[0].num_vars == 3
    assert doc["G"].is_affine() and len(doc["Q"].charts) == 1


def test_dot_output_lists_every_point():
    X = __import__("f1cong.spectra", fromlist=["x"]).cong_space(corpus.e_monoid())
    dot = dsl.emit_dot(X, "E")
    assert dot.startswith('digraph "E"') and dot.count("[label=") == len(X)
