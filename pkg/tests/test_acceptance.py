"""Acceptance criteria, each checked at its stated tolerance.

Every test records ``RESULTS[k] = (passed, detail)``; ``conftest`` prints one
PASS/FAIL line per criterion at the end of the session. Run directly with
``python3 tests/test_acceptance.py`` to execute only this module.
"""

import itertools
import time

import numpy as np
import pytest

from conftest import random_ideal
from oracles import lq_ordering_exists
from linquot.compose import binomial_decomposition, compose, direct_power, paper_orderings
from linquot.graphs import anticycle, edge_ideal, embed, find_gap, g_n, h_family, h_n, is_gap, star_f
from linquot.ideal import ideal_sum, power, product
from linquot.monomial import Monomial, colon, divides, lex_compare, projections, sort_lex
from linquot.quotients import OrderedGenerators, lex_order, verify_colon, verify_works
from linquot.replay import accepts
from linquot.search import FOUND, NONE_EXISTS, SearchConfig, find_ordering

RESULTS = {}
SEED = 20261016


def record(key, ok, detail):
    RESULTS[key] = (bool(ok), detail)
    print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def _g_f(n):
    return edge_ideal(embed(anticycle(n - 1), n), n), edge_ideal(star_f(n))


def test_criterion_1_lex_positives():
    t0 = time.perf_counter()
    checked, bad = 0, []
    for n in range(6, 11):
        ig, if_ = _g_f(n)
        cases = {f"I_F^{s}": power(if_, s) for s in (1, 2, 3)}
        cases["I_G I_F"] = product(ig, if_)
        cases["I_G I_F^2"] = product(ig, power(if_, 2))
        cases["I_G^2 I_F"] = product(power(ig, 2), if_)
        for name, ideal in cases.items():
            checked += 1
            if not verify_colon(lex_order(ideal)).verdict:
                bad.append((n, name))
    dt = time.perf_counter() - t0
    record("1", not bad and dt < 10.0, f"{checked} lex orderings, failures {bad}, {dt:.2f}s (limit 10s)")


def test_criterion_2_composite_instances():
    cfg = SearchConfig(budget_nodes=10_000_000)
    t0 = time.perf_counter()
    bad, sizes = [], []
    for n in range(6, 10):
        for s in (2, 3):
            res = compose(paper_orderings(n, s, cfg))
            ok = (
                res.certificate.verdict
                and verify_colon(res.ordering).verdict
                and res.ordering.ideal == power(edge_ideal(h_n(n)), s)
            )
            sizes.append(len(res.ordering))
            if not ok:
                bad.append((n, s))
    dt = time.perf_counter() - t0
    n6 = "fail" if any(n == 6 for n, _ in bad) else "ok"
    rest = "fail" if any(n >= 7 for n, _ in bad) else "ok"
    record(
        "2",
        not bad,
        f"8 instances with {min(sizes)}..{max(sizes)} generators (n=6: {n6}; n=7..9: {rest}), failures {bad}, {dt:.1f}s",
    )


def test_criterion_3_lex_negatives():
    t0 = time.perf_counter()
    bad, witnesses = [], []
    for n in range(5, 11):
        og = lex_order(power(edge_ideal(g_n(n)), 2))
        cert = verify_colon(og)
        f = cert.failure
        ok = not cert.verdict and f is not None and f.get("witness") and accepts(og.order, cert.to_json())
        if not ok:
            bad.append(n)
        else:
            witnesses.append(f"n={n}:{f['witness']}")
    dt = time.perf_counter() - t0
    record("3", not bad and dt < 5.0, f"rejected n=5..10 with witnesses [{', '.join(witnesses)}], failures {bad}, {dt:.2f}s (limit 5s)")


def test_criterion_4_gap():
    g = g_n(5)
    gap = find_gap(g)
    ok = gap is not None and is_gap(g, *gap)
    expected = gap == ((1, 3), (2, 5))
    record("4", ok, f"gap {gap} (the stated gap {{1,3}},{{2,5}}: {expected})")


def test_criterion_5_search():
    cfg = SearchConfig(budget_seconds=300.0)
    details, ok = [], True
    for name, ideal in (
        ("I_(H_6)^2", power(edge_ideal(h_n(6)), 2)),
        ("I_(G_6)^3", power(edge_ideal(g_n(6)), 3)),
    ):
        res = find_ordering(ideal, cfg)
        good = res.found and verify_colon(res.ordering).verdict and verify_works(res.ordering).verdict
        ok &= good
        details.append(f"{name}: {res.status} in {res.seconds:.2f}s")
    # stretch targets, reported but not gating
    for n in (7, 8):
        res = find_ordering(power(edge_ideal(g_n(n)), 3), SearchConfig(budget_seconds=120.0))
        details.append(f"stretch I_(G_{n})^3: {res.status} in {res.seconds:.2f}s")
    record("5", ok, "; ".join(details))


def test_criterion_6_binomial_decomposition():
    bad = []
    for n in range(6, 10):
        g0, f0 = embed(anticycle(n - 1), n), star_f(n)
        for s in (2, 3):
            union = set().union(*(p.generator_set() for p in binomial_decomposition(g0, f0, s)))
            target = power(edge_ideal(h_n(n)), s).generator_set()
            if union != target or target != direct_power(g0, f0, s).generator_set():
                bad.append((n, s))
    record("6", not bad, f"8 (n, s) instances, set mismatches {bad}")


def test_criterion_7_criterion_equivalence():
    rng = np.random.default_rng(SEED)
    disagree, positives, pairs = [], 0, 0
    while pairs < 10_000:
        ideal = random_ideal(rng, max_gens=8)
        orders = [tuple(ideal.generators[k] for k in rng.permutation(len(ideal)))]
        if pairs % 5 == 0:
            orders.append(lex_order(ideal).order)
        for order in orders:
            og = OrderedGenerators(ideal, order)
            a, b = verify_colon(og).verdict, verify_works(og).verdict
            pairs += 1
            positives += a
            if a != b:
                disagree.append(order)
    exhaustive_ideals, perms = 0, 0
    for r in range(1, 7):
        seen = 0
        while seen < 12:
            ideal = random_ideal(rng, max_gens=r, min_gens=r)
            for p in itertools.permutations(ideal.generators):
                og = OrderedGenerators(ideal, p)
                if verify_colon(og).verdict != verify_works(og).verdict:
                    disagree.append(p)
                perms += 1
            seen += 1
            exhaustive_ideals += 1
    record(
        "7",
        not disagree,
        f"{pairs} random pairs ({positives} linear), {perms} orderings over {exhaustive_ideals} ideals "
        f"exhaustively; disagreements {len(disagree)}",
    )


def test_criterion_8_projections():
    rng = np.random.default_rng(SEED + 8)
    violations, pairs, total = 0, 0, 0
    while pairs < 10_000:
        n = int(rng.integers(2, 9))
        d = int(rng.integers(1, 7))
        a = Monomial(tuple(int(x) for x in rng.multinomial(d, [1 / n] * n)))
        b = Monomial(tuple(int(x) for x in rng.multinomial(d, [1 / n] * n)))
        if a == b:
            continue
        m1, m2 = sort_lex([a, b])
        pairs += 1
        projs = projections(m1, m2)
        if not projs:
            violations += 1
        target = colon(m1, m2)
        for p in projs:
            total += 1
            q = colon(p, m2)
            if not (lex_compare(p, m2) > 0 and q.degree == 1 and divides(q, target)):
                violations += 1
    record("8", violations == 0, f"{pairs} pairs, {total} projections, {violations} violations")


def test_criterion_9_oracle_completeness():
    rng = np.random.default_rng(SEED + 9)
    mismatches, counts = [], {FOUND: 0, NONE_EXISTS: 0}
    cfg = SearchConfig(strategy="exhaustive")
    for _ in range(500):
        ideal = random_ideal(rng, max_gens=7)
        res = find_ordering(ideal, cfg)
        counts[res.status] = counts.get(res.status, 0) + 1
        if res.status not in (FOUND, NONE_EXISTS) or res.found != lq_ordering_exists(ideal):
            mismatches.append(ideal.to_json())
    record("9", not mismatches, f"500 ideals, verdicts {counts}, mismatches {len(mismatches)}")


def test_criterion_10_h_family():
    bad, total = [], 0
    for n in range(7, 11):
        target = h_n(n).edges
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if (a - b) % n not in (2, n - 2):
                    continue
                total += 1
                h, perm = h_family(n, a, b)
                if sorted(perm.values()) != list(range(1, n + 1)) or h.relabel(perm).edges != target:
                    bad.append((n, a, b))
    record("10", not bad, f"{total} (n, a, b) triples, mismatches {bad}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
