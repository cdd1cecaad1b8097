"""Search for a linear quotient ordering of a monomial ideal.

Orderings are grown one generator at a time; a generator may be appended
only if the colon of the current prefix by it is generated by variables.
Whether that holds depends on the prefix as a *set*, so prefixes already
shown to be dead ends are remembered by their set of generators and never
re-entered. With that memo, backtracking is a search over subsets and an
exhausted search is a proof that no ordering exists.
"""

from __future__ import annotations

import json
import logging
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import kernels
from .ideal import MonomialIdeal
from .monomial import Monomial, sort_lex
from .quotients import OrderedGenerators, QuotientCertificate, verify_colon

log = logging.getLogger(__name__)

CACHE_ENV = "LINQUOT_CACHE"

FOUND = "found"
NONE_EXISTS = "none_exists"
BUDGET_EXHAUSTED = "budget_exhausted"

STRATEGIES = ("greedy", "backtrack", "exhaustive")


@dataclass
class SearchConfig:
    strategy: str = "backtrack"
    budget_nodes: int = 10_000_000
    budget_seconds: float = 300.0
    seed: int = 0
    # "lex" (descending lex), "random" (seeded shuffle) or an explicit sequence
    candidate_order: str | Sequence[Monomial] = "lex"
    exhaustive_cap: int = 12
    memo_limit: int = 2_000_000

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        if self.budget_nodes <= 0 or self.budget_seconds <= 0:
            raise ValueError("budgets must be positive")


@dataclass
class SearchResult:
    status: str
    ordering: OrderedGenerators | None = None
    certificate: QuotientCertificate | None = None
    nodes: int = 0
    seconds: float = 0.0
    reason: str = ""
    from_cache: bool = False

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "nodes": self.nodes,
            "seconds": round(self.seconds, 6),
            "reason": self.reason,
            "from_cache": self.from_cache,
            "ordering": self.ordering.to_json() if self.ordering else None,
            "certificate": self.certificate.to_json() if self.certificate else None,
        }


@dataclass
class PrefixState:
    """Generators placed so far, as rows of an exponent array."""

    n: int
    rows: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.rows is None:
            self.rows = np.zeros((0, self.n), dtype=kernels.DTYPE)

    def __len__(self):
        return self.rows.shape[0]


def incremental_colon_check(state: PrefixState, candidate: Monomial) -> tuple[bool, PrefixState]:
    """Test whether ``candidate`` can follow the prefix; on success return the
    extended state, otherwise the unchanged one."""
    gens = np.vstack([state.rows, np.asarray([candidate.exponents], dtype=kernels.DTYPE)])
    k = len(state)
    if kernels.uncovered(gens, np.arange(k), k, k) >= 0:
        return False, state
    return True, PrefixState(state.n, np.ascontiguousarray(gens))


def _candidate_order(gens: list[Monomial], cfg: SearchConfig) -> np.ndarray:
    index = {m: k for k, m in enumerate(gens)}
    if isinstance(cfg.candidate_order, str):
        if cfg.candidate_order == "lex":
            return np.arange(len(gens), dtype=np.int64)
        if cfg.candidate_order == "random":
            return np.random.default_rng(cfg.seed).permutation(len(gens)).astype(np.int64)
        raise ValueError(f"unknown candidate order {cfg.candidate_order!r}")
    hint = list(cfg.candidate_order)
    if set(hint) != set(gens) or len(hint) != len(gens):
        raise ValueError("candidate order hint must list every generator once")
    return np.asarray([index[m] for m in hint], dtype=np.int64)


def find_ordering(ideal: MonomialIdeal, cfg: SearchConfig | None = None) -> SearchResult:
    cfg = cfg or SearchConfig()
    gens_list = sort_lex(ideal.generators)
    r = len(gens_list)
    if cfg.strategy == "exhaustive" and r > cfg.exhaustive_cap:
        raise ValueError(f"exhaustive search is capped at {cfg.exhaustive_cap} generators, got {r}")
    gens = kernels.as_array([m.exponents for m in gens_list], ideal.n)
    order = _candidate_order(gens_list, cfg)

    t0 = time.perf_counter()
    prefix = np.zeros(r, dtype=np.int64)
    used = np.zeros(r, dtype=np.bool_)
    starts = [0]
    mask = 0
    dead: set[int] = set()
    k = 0
    nodes = 0

    def out(status, reason=""):
        return SearchResult(status, nodes=nodes, seconds=time.perf_counter() - t0, reason=reason)

    while k < r:
        pos, tested = kernels.next_valid(gens, order, used, prefix, k, starts[k])
        nodes += tested
        if nodes > cfg.budget_nodes:
            return out(BUDGET_EXHAUSTED, f"node budget {cfg.budget_nodes} exceeded at depth {k}/{r}")
        if time.perf_counter() - t0 > cfg.budget_seconds:
            return out(BUDGET_EXHAUSTED, f"time budget {cfg.budget_seconds}s exceeded at depth {k}/{r}")
        if pos < 0:
            if cfg.strategy == "greedy":
                return out(BUDGET_EXHAUSTED, f"greedy dead end at depth {k}/{r} (no backtracking allowed)")
            if len(dead) < cfg.memo_limit:
                dead.add(mask)
            if k == 0:
                return out(NONE_EXISTS, "every prefix was refuted")
            k -= 1
            c = prefix[k]
            used[c] = False
            mask ^= 1 << int(c)
            starts.pop()
            continue
        c = int(order[pos])
        starts[k] = pos + 1
        child = mask | (1 << c)
        if child in dead:
            continue
        prefix[k] = c
        used[c] = True
        mask = child
        k += 1
        starts.append(0)

    og = OrderedGenerators(ideal, tuple(gens_list[int(c)] for c in prefix))
    cert = verify_colon(og)
    if not cert.verdict:  # pragma: no cover - would be a kernel bug
        raise AssertionError("search produced an ordering that fails verification")
    res = out(FOUND)
    res.ordering, res.certificate = og, cert
    return res


# ---------------------------------------------------------------------------
# on-disk cache of found orderings
# ---------------------------------------------------------------------------


def cache_dir(path: str | os.PathLike | None = None) -> Path | None:
    path = path or os.environ.get(CACHE_ENV)
    return Path(path) if path else None


def _cache_file(directory: Path, ideal: MonomialIdeal) -> Path:
    return directory / f"{ideal.digest()}.json"


def load_cached(ideal: MonomialIdeal, directory: Path) -> SearchResult | None:
    """Cached ordering for ``ideal``, re-verified; None on miss or stale."""
    f = _cache_file(directory, ideal)
    if not f.exists():
        return None
    try:
        data = json.loads(f.read_text(encoding="utf-8"))
        og = OrderedGenerators.from_json(data["ordering"])
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        log.warning("ignoring unreadable cache file %s: %s", f, exc)
        return None
    if og.ideal != ideal:
        log.warning("cache file %s belongs to a different ideal", f)
        return None
    cert = verify_colon(og)
    if not cert.verdict:
        log.warning("cached ordering in %s no longer verifies", f)
        return None
    return SearchResult(FOUND, og, cert, nodes=int(data.get("nodes", 0)), from_cache=True)


def store_cached(result: SearchResult, directory: Path) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    f = _cache_file(directory, result.ordering.ideal)
    payload = {
        "ideal": result.ordering.ideal.to_json(),
        "ordering": result.ordering.to_json(),
        "certificate": result.certificate.to_json(),
        "nodes": result.nodes,
    }
    tmp = f.with_suffix(".tmp")
    tmp.write_text(json.dumps(payload), encoding="utf-8")
    tmp.replace(f)
    return f


def find_ordering_cached(
    ideal: MonomialIdeal, cfg: SearchConfig | None = None, directory: str | os.PathLike | None = None
) -> SearchResult:
    d = cache_dir(directory)
    if d is not None:
        hit = load_cached(ideal, d)
        if hit is not None:
            return hit
    res = find_ordering(ideal, cfg)
    if res.found and d is not None:
        store_cached(res, d)
    return res
