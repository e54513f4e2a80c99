import itertools

import oracles
from f1cong import corpus
from f1cong.monoid import is_isomorphic


def test_counts_match_the_oracle(frozen):
    got = {}
    for A in corpus.pointed_monoids(5):
        got[A.size] = got.get(A.size, 0) + 1
    assert got == {int(k): v for k, v in frozen["monoid_counts"].items()}
    assert {oracles.key(A.table) for A in corpus.pointed_monoids(4)} == \
        {oracles.key(T) for n in (2, 3, 4) for T in oracles.all_pointed_tables(n)}


def test_pairwise_non_isomorphic():
    ms = corpus.pointed_monoids(5)
    for A, B in itertools.combinations(ms, 2):
        if A.size == B.size:
            assert not is_isomorphic(A, B)


def test_named_monoids_are_in_the_enumeration():
    keys = {oracles.key(A.table) for A in corpus.pointed_monoids(5)}
    for name, A in corpus.named_monoids().items():
        assert (oracles.key(A.table) in keys) == (A.size <= 5), name


def test_suite_names_are_unique(suite):
    assert len({s.name for s in suite}) == len(suite)
