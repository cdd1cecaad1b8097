import numpy as np
import pytest
from hypothesis import strategies as st

from linquot.monomial import Monomial


def monomials(n, max_exp=3):
    return st.lists(st.integers(0, max_exp), min_size=n, max_size=n).map(lambda e: Monomial(tuple(e)))


@st.composite
def same_n_monomials(draw, count, min_n=1, max_n=6, max_exp=3):
    n = draw(st.integers(min_n, max_n))
    return [draw(monomials(n, max_exp)) for _ in range(count)]


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def m(text, n):
    from linquot.monomial import parse_text

    return parse_text(text, n)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(k.split(".")[0]), k)):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"criterion {key:>4}: {'PASS' if ok else 'FAIL'}  {detail}")


def random_ideal(rng, max_gens=8, min_gens=1):
    """Small random monomial ideal: edge ideals, equal-degree sets, or mixed
    degrees, with between ``min_gens`` and ``max_gens`` generators."""
    from linquot.graphs import Graph, edge_ideal
    from linquot.ideal import minimalize, power

    while True:
        kind = rng.integers(3)
        n = int(rng.integers(3, 7))
        if kind == 0:
            pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            k = int(rng.integers(1, min(len(pairs), max_gens) + 1))
            chosen = rng.choice(len(pairs), size=k, replace=False)
            ideal = edge_ideal(Graph(n, [pairs[c] for c in chosen]))
            if len(ideal) <= 3 and rng.random() < 0.5:
                ideal = power(ideal, 2)
        else:
            k = int(rng.integers(1, max_gens + 1))
            if kind == 1:
                deg = int(rng.integers(1, 4))
                rows = [rng.multinomial(deg, [1 / n] * n) for _ in range(k)]
            else:
                rows = [rng.integers(0, 3, size=n) for _ in range(k)]
            rows = [r for r in rows if r.sum() > 0]
            if not rows:
                continue
            ideal = minimalize([Monomial(tuple(int(x) for x in r)) for r in rows])
        if min_gens <= len(ideal) <= max_gens:
            return ideal
