"""Monomial ideals stored by their minimal generators."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .monomial import Monomial, colon, from_json, mul, sort_lex, to_json


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    ``generators`` is kept in descending lex order; equality is set equality
    because the canonical order is unique.
    """

    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(sort_lex(set(self.generators)))
        for g in gens:
            if g.n != self.n:
                raise ValueError(f"generator {g} has n={g.n}, expected {self.n}")
        if len(gens) != len(self.generators):
            raise ValueError("duplicate generators")
        object.__setattr__(self, "generators", gens)
        if len(self.degrees()) > 1 and not kernels.minimal_mask(self.array()).all():
            raise ValueError("generators are not pairwise non-dividing")

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return m in self.generator_set()

    def generator_set(self) -> frozenset[Monomial]:
        return frozenset(self.generators)

    def array(self) -> np.ndarray:
        return kernels.as_array([g.exponents for g in self.generators], self.n)

    def degrees(self) -> set[int]:
        return {g.degree for g in self.generators}

    def contains_monomial(self, m: Monomial) -> bool:
        """Ideal membership: some generator divides m."""
        e = m.exponents
        return any(all(a <= b for a, b in zip(g.exponents, e)) for g in self.generators)

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [to_json(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal:
        n = int(data["n"])
        return minimalize([from_json(g) for g in data["generators"]], n=n)

    def digest(self) -> str:
        payload = json.dumps(self.to_json(), separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()


def minimalize(monomials: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """Keep the divisibility-minimal monomials."""
    ms = list(dict.fromkeys(monomials))
    if not ms:
        raise ValueError("cannot build an ideal from no monomials")
    if n is None:
        n = ms[0].n
    if any(m.n != n for m in ms):
        raise ValueError("monomials live in different numbers of variables")
    if len({m.degree for m in ms}) == 1:
        # equal degree: divisibility is equality, already deduplicated
        return MonomialIdeal(n, tuple(ms))
    mask = kernels.minimal_mask(kernels.as_array([m.exponents for m in ms], n))
    return MonomialIdeal(n, tuple(m for m, keep in zip(ms, mask) if keep))


def principal(m: Monomial) -> MonomialIdeal:
    return MonomialIdeal(m.n, (m,))


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.n != b.n:
        raise ValueError(f"ambient variable counts differ: {a.n} != {b.n}")
    return minimalize((mul(x, y) for x in a.generators for y in b.generators), n=a.n)


def power(a: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise ValueError("power must be at least 1")
    out = a
    for _ in range(s - 1):
        out = product(out, a)
    return out


def ideal_sum(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("empty sum")
    return minimalize((g for I in ideals for g in I.generators), n=ideals[0].n)


def colon_generators(prefix: Sequence[Monomial], m: Monomial) -> MonomialIdeal:
    """Minimal generators of (prefix) : m."""
    if not prefix:
        raise ValueError("empty prefix")
    return minimalize((colon(p, m) for p in prefix), n=m.n)
