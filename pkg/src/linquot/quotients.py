"""Checking whether an ordering of minimal generators has linear quotients.

Two criteria are implemented along separate code paths:

* ``colon``: the colon ideal (M_1, ..., M_{i-1}) : M_i is generated by
  variables, for every i.
* ``works``: for every pair j < i some h < i has M_h : M_i a variable that
  divides M_j : M_i.

Both produce a :class:`QuotientCertificate`; indices in certificates are
1-based, matching M_1, ..., M_r.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .ideal import MonomialIdeal, colon_generators, minimalize
from .monomial import Monomial, colon, divides, from_json, parse_text, sort_lex, to_json, to_text


@dataclass(frozen=True)
class OrderedGenerators:
    ideal: MonomialIdeal
    order: tuple[Monomial, ...]

    def __post_init__(self):
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        if len(order) != len(self.ideal) or set(order) != self.ideal.generator_set():
            raise ValueError("order is not a permutation of the minimal generators")

    @classmethod
    def of(cls, monomials: Sequence[Monomial]) -> OrderedGenerators:
        """Wrap a sequence of pairwise non-dividing monomials."""
        monomials = tuple(monomials)
        if not monomials:
            raise ValueError("empty ordering")
        ideal = minimalize(monomials)
        if len(ideal) != len(monomials):
            raise ValueError("sequence is not a set of minimal generators")
        return cls(ideal, monomials)

    @property
    def n(self) -> int:
        return self.ideal.n

    def __len__(self) -> int:
        return len(self.order)

    def array(self) -> np.ndarray:
        return kernels.as_array([m.exponents for m in self.order], self.n)

    def position(self, m: Monomial) -> int:
        return self.order.index(m)

    def to_json(self) -> dict:
        return {"n": self.n, "order": [to_json(m) for m in self.order]}

    @classmethod
    def from_json(cls, data: dict) -> OrderedGenerators:
        return cls.of([from_json(m) for m in data["order"]])


def lex_order(ideal: MonomialIdeal) -> OrderedGenerators:
    """Descending lex ordering of the generators."""
    return OrderedGenerators(ideal, tuple(sort_lex(ideal.generators)))


@dataclass
class QuotientCertificate:
    criterion: str
    verdict: bool
    n: int
    r: int
    # colon: [{"i": i, "colon": [text, ...]}]; works: [[i, j, h], ...]
    evidence: list = field(default_factory=list)
    failure: dict | None = None

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "verdict": self.verdict,
            "n": self.n,
            "r": self.r,
            "evidence": self.evidence,
            "failure": self.failure,
        }

    @classmethod
    def from_json(cls, data: dict) -> QuotientCertificate:
        return cls(
            criterion=data["criterion"],
            verdict=bool(data["verdict"]),
            n=int(data["n"]),
            r=int(data["r"]),
            evidence=list(data["evidence"]),
            failure=data.get("failure"),
        )


def _check_ordering(og: OrderedGenerators) -> None:
    if not isinstance(og, OrderedGenerators):
        raise TypeError("expected OrderedGenerators")
    if len(og) < 1:
        raise ValueError("empty ordering")


def verify_colon(og: OrderedGenerators) -> QuotientCertificate:
    """Colon-ideal criterion; the default verifier."""
    _check_ordering(og)
    n, r = og.n, len(og)
    arr = og.array()
    fi, fj = kernels.first_failure(arr)
    upto = r if fi < 0 else fi
    lin = kernels.colon_variables(arr, upto)
    evidence = [
        {"i": i + 1, "colon": [to_text(Monomial.var(v + 1, n)) for v in np.flatnonzero(lin[i])]}
        for i in range(1, upto)
    ]
    if fi < 0:
        return QuotientCertificate("colon", True, n, r, evidence)
    gens = colon_generators(og.order[:fi], og.order[fi])
    offending = colon(og.order[fj], og.order[fi])
    witness = next(g for g in gens.generators if g.degree >= 2 and divides(g, offending))
    failure = {
        "i": fi + 1,
        "j": fj + 1,
        "witness": to_text(witness),
        "colon": [to_text(g) for g in gens.generators],
    }
    return QuotientCertificate("colon", False, n, r, evidence, failure)


def works(m1: Monomial, m2: Monomial, m3: Monomial, og: OrderedGenerators) -> bool:
    """Whether m3 works in ``og`` with respect to m1 preceding m2."""
    pos = {m: k for k, m in enumerate(og.order)}
    if m1 not in pos or m2 not in pos:
        raise ValueError("m1 and m2 must belong to the ordering")
    if pos[m1] >= pos[m2]:
        raise ValueError(f"{m1} does not precede {m2}")
    if m3 not in pos or pos[m3] >= pos[m2]:
        return False
    q = colon(m3, m2)
    return q.degree == 1 and divides(q, colon(m1, m2))


def verify_works(og: OrderedGenerators) -> QuotientCertificate:
    """Pairwise witness criterion, searching an explicit h for every j < i."""
    _check_ordering(og)
    n, r = og.n, len(og)
    arr = og.array()
    evidence: list[list[int]] = []
    for i in range(1, r):
        colons = np.maximum(arr[:i] - arr[i], 0)
        linear = np.flatnonzero(colons.sum(axis=1) == 1)
        # divides[a, j]: colon of linear[a] divides colon of j
        divisible = (colons[linear][:, None, :] <= colons[None, :, :]).all(axis=2)
        for j in range(i):
            if colons[j].sum() == 1:
                h = j
            else:
                hits = np.flatnonzero(divisible[:, j])
                if hits.size == 0:
                    failure = {
                        "i": i + 1,
                        "j": j + 1,
                        "witness": to_text(colon(og.order[j], og.order[i])),
                    }
                    return QuotientCertificate("works", False, n, r, evidence, failure)
                h = int(linear[hits[0]])
            evidence.append([i + 1, j + 1, h + 1])
    return QuotientCertificate("works", True, n, r, evidence)


def verify(og: OrderedGenerators, criterion: str = "colon") -> QuotientCertificate:
    if criterion == "colon":
        return verify_colon(og)
    if criterion == "works":
        return verify_works(og)
    raise ValueError(f"unknown criterion {criterion!r}")


def has_linear_quotients(og: OrderedGenerators) -> bool:
    return kernels.first_failure(og.array())[0] < 0


def parse_colon_entry(entry: dict, n: int) -> list[Monomial]:
    return [parse_text(t, n) for t in entry["colon"]]
