"""Simple graphs on {1..n} and the families built from the anticycle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .ideal import MonomialIdeal
from .monomial import Monomial

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        es = set()
        for e in edges:
            u, v = e
            uv = _edge(int(u), int(v))
            if not (1 <= uv[0] and uv[1] <= n):
                raise ValueError(f"edge {uv} has an endpoint outside 1..{n}")
            es.add(uv)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", frozenset(es))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def union(self, other: Graph) -> Graph:
        return Graph(max(self.n, other.n), self.edges | other.edges)

    def relabel(self, perm: dict[int, int]) -> Graph:
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls(int(data["n"]), data["edges"])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complement(g: Graph) -> Graph:
    return Graph(g.n, (e for e in combinations(range(1, g.n + 1), 2) if e not in g.edges))


def anticycle(n: int) -> Graph:
    if n < 4:
        raise ValueError("anticycle needs n >= 4")
    return complement(cycle(n))


def star_f(n: int) -> Graph:
    """Star with centre n and leaves 1..n-3."""
    if n < 5:
        raise ValueError("star_f needs n >= 5")
    return Graph(n, [(i, n) for i in range(1, n - 2)])


def h_n(n: int) -> Graph:
    """Anticycle of order n minus {n-2, n} and {1, n-1}, plus {1, n}."""
    if n < 6:
        raise ValueError("h_n needs n >= 6")
    edges = set(anticycle(n).edges) - {(n - 2, n), (1, n - 1)}
    edges.add((1, n))
    return Graph(n, edges)


def g_n(n: int) -> Graph:
    """Anticycle of order n minus the edge {n-2, n}."""
    if n < 5:
        raise ValueError("g_n needs n >= 5")
    return Graph(n, set(anticycle(n).edges) - {(n - 2, n)})


def embed(g: Graph, n: int) -> Graph:
    """Same edges, viewed on the larger vertex set 1..n."""
    if n < g.n:
        raise ValueError("cannot shrink the vertex set")
    return Graph(n, g.edges)


def _residue(c: int, n: int) -> int:
    return (c - 1) % n + 1


def h_family_graph(n: int, a: int, b: int) -> Graph:
    """Anticycle of order n minus {a, b} and {a+1, b+1}, plus {a+1, a} (mod n)."""
    if n < 7:
        raise ValueError("h_family needs n >= 7")
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"a, b must lie in 1..{n}")
    if (a - b) % n not in (2, n - 2):
        raise ValueError(f"|a - b| must be congruent to +-2 mod {n}")
    a1, b1 = _residue(a + 1, n), _residue(b + 1, n)
    edges = set(anticycle(n).edges) - {_edge(a, b), _edge(a1, b1)}
    edges.add(_edge(a1, a))
    return Graph(n, edges)


def dihedral_permutations(n: int):
    """The 2n symmetries of the n-cycle, as dicts on 1..n."""
    for shift in range(n):
        yield {k: _residue(k + shift, n) for k in range(1, n + 1)}
        yield {k: _residue(shift - k, n) for k in range(1, n + 1)}


def h_family(n: int, a: int, b: int) -> tuple[Graph, dict[int, int]]:
    """Build the modified anticycle for (a, b) and a dihedral relabelling
    carrying it onto h_n(n)."""
    h = h_family_graph(n, a, b)
    target = h_n(n)
    for perm in dihedral_permutations(n):
        if h.relabel(perm).edges == target.edges:
            return h, perm
    raise AssertionError(f"no dihedral map sends H({n},{a},{b}) onto h_n({n})")


def edge_ideal(g: Graph, n: int | None = None) -> MonomialIdeal:
    """One squarefree quadric x_u x_v per edge; ``n`` widens the ring."""
    if not g.edges:
        raise ValueError("edge ideal of an edgeless graph")
    n = g.n if n is None else n
    return MonomialIdeal(n, tuple(Monomial.from_indices(e, n) for e in g.edges))


def is_gap(g: Graph, e1: Edge, e2: Edge) -> bool:
    if e1 not in g.edges or e2 not in g.edges:
        return False
    if set(e1) & set(e2):
        return False
    return not any(g.has_edge(u, v) for u in e1 for v in e2)


def find_gap(g: Graph) -> tuple[Edge, Edge] | None:
    for e1, e2 in combinations(g.sorted_edges(), 2):
        if is_gap(g, e1, e2):
            return e1, e2
    return None


def star_center(f: Graph) -> int | None:
    """Centre of a star graph, or None if ``f`` is not a star."""
    if not f.edges:
        return None
    common = set.intersection(*(set(e) for e in f.edges))
    if len(f.edges) == 1:
        return max(common)
    return common.pop() if len(common) == 1 else None


def star_adjacency_condition(g0: Graph, f0: Graph) -> bool:
    """Every edge of g0 shares a vertex with an edge of the star f0."""
    if star_center(f0) != f0.n:
        raise ValueError(f"f0 is not a star centred at {f0.n}")
    leaves = {v for e in f0.edges for v in e} - {f0.n}
    return all(set(e) & leaves for e in g0.edges)
