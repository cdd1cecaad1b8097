import json

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from linquot.compose import (
    CompositePlan,
    HypothesisViolation,
    binomial_decomposition,
    compose,
    direct_power,
    paper_orderings,
)
from linquot.graphs import Graph, anticycle, edge_ideal, embed, h_n, star_adjacency_condition, star_f
from linquot.ideal import ideal_sum, power
from linquot.quotients import lex_order, verify_colon
from linquot.replay import accepts
from linquot.search import SearchConfig, find_ordering


def _g0_f0(n):
    return embed(anticycle(n - 1), n), star_f(n)


@pytest.mark.parametrize("s", [2, 3])
def test_decomposition_shape(s):
    g0, f0 = _g0_f0(6)
    parts = binomial_decomposition(g0, f0, s)
    assert len(parts) == s + 1
    for k, part in enumerate(parts):
        assert {g.exponents[5] for g in part.generators} == {s - k}
    assert ideal_sum(parts) == direct_power(g0, f0, s) == power(edge_ideal(h_n(6)), s)


@pytest.mark.parametrize("n,s", [(6, 2), (7, 3)])
def test_compose_anticycle_star_instances(n, s):
    plan = paper_orderings(n, s)
    res = compose(plan)
    assert res.certificate.verdict
    assert res.ordering.ideal == power(edge_ideal(h_n(n)), s)
    assert accepts(res.ordering.order, res.certificate.to_json())
    # strata appear in descending x_n degree
    degs = [m.exponents[n - 1] for m in res.ordering.order]
    assert degs == sorted(degs, reverse=True)


def test_plan_json_round_trip():
    plan = paper_orderings(6, 2)
    back = CompositePlan.from_json(json.loads(json.dumps(plan.to_json())))
    assert back == plan
    assert compose(back).ordering == compose(plan).ordering


def test_adjacency_violation():
    n = 7
    g0 = Graph(n, [(2, 4), (5, 6)])
    f0 = Graph(n, [(1, 7), (2, 7)])  # leaf set {1, 2}; edge {5,6} misses it
    assert not star_adjacency_condition(g0, f0)
    subs = [lex_order(I) for I in binomial_decomposition(g0, f0, 2)]
    with pytest.raises(HypothesisViolation) as exc:
        compose(CompositePlan(n, 2, g0, f0, subs))
    assert exc.value.hypothesis == "(2)"


def test_structural_violations():
    g0, f0 = _g0_f0(6)
    with pytest.raises(HypothesisViolation) as exc:
        binomial_decomposition(g0, f0, 1)
    assert exc.value.hypothesis == "s>=2"
    with pytest.raises(HypothesisViolation) as exc:
        binomial_decomposition(Graph(6, [(1, 6)]), f0, 2)
    assert exc.value.hypothesis == "G0-on-[n-1]"


def test_swapped_strata_rejected():
    plan = paper_orderings(6, 2)
    swapped = CompositePlan(6, 2, plan.g0, plan.f0, list(reversed(plan.sub_orderings)))
    with pytest.raises(HypothesisViolation) as exc:
        compose(swapped)
    assert exc.value.hypothesis in ("(1)", "stratification")


def test_bad_sub_ordering_rejected():
    # lex order of I_G^2 is not linear for n = 6
    plan = paper_orderings(6, 2)
    g_sq = binomial_decomposition(plan.g0, plan.f0, 2)[-1]
    if verify_colon(lex_order(g_sq)).verdict:
        pytest.skip("lex already works here")
    bad = CompositePlan(6, 2, plan.g0, plan.f0, plan.sub_orderings[:-1] + [lex_order(g_sq)])
    with pytest.raises(HypothesisViolation) as exc:
        compose(bad)
    assert exc.value.hypothesis == "(1)"


@st.composite
def star_and_graph(draw):
    n = draw(st.integers(5, 7))
    leaves = draw(st.sets(st.integers(1, n - 1), min_size=1, max_size=n - 2))
    f0 = Graph(n, [(v, n) for v in leaves])
    pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n) if i in leaves or j in leaves]
    edges = draw(st.sets(st.sampled_from(pairs), min_size=1, max_size=4))
    return n, Graph(n, edges), f0


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(star_and_graph())
def test_composite_of_searched_orderings_is_linear(data):
    n, g0, f0 = data
    assert star_adjacency_condition(g0, f0)
    parts = binomial_decomposition(g0, f0, 2)
    subs = []
    for part in parts:
        res = find_ordering(part, SearchConfig(budget_nodes=200_000))
        if not res.found:
            return  # hypothesis (1) unavailable; nothing to check
        subs.append(res.ordering)
    result = compose(CompositePlan(n, 2, g0, f0, subs))
    assert result.certificate.verdict
    assert result.ordering.ideal == direct_power(g0, f0, 2)
