import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def frozen():
    import oracles
    return oracles.load()


@pytest.fixture(scope="session")
def corpus_monoids():
    from f1cong import corpus
    return corpus.finite_corpus()


@pytest.fixture(scope="session")
def suite():
    from f1cong import corpus
    return corpus.morphism_suite()


@pytest.fixture(scope="session")
def suite_reports(suite):
    """Both characterizations of each suite morphism, computed once."""
    from f1cong import properties as pr
    out = {}
    for s in suite:
        out[s.name] = {
            "definition": pr.is_closed_immersion_def(s.phi),
            "topological": pr.closed_immersion_report(s.phi),
            "separated": pr.separated_report(s.phi),
        }
    return out


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        def order(line):
            tag = line.split(":")[0].split()[-1]
            return int(tag.rstrip("abc")), tag
        for line in sorted(ACCEPTANCE_LINES, key=order):
            terminalreporter.write_line(line)
