"""Monic monomials as exponent vectors, with the x_n > ... > x_1 lex order."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

_MAX_EXPONENT = 2**31 - 1
_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True, order=False)
class Monomial:
    """x_1^e_1 * ... * x_n^e_n, stored as the tuple (e_1, ..., e_n)."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent in {exps}")
            if e > _MAX_EXPONENT:
                raise OverflowError(f"exponent {e} exceeds {_MAX_EXPONENT}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int) -> Monomial:
        """The variable x_i (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(tuple(e))

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> Monomial:
        """Product of x_i over ``indices`` (1-based, repeats allowed)."""
        e = [0] * n
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} outside 1..{n}")
            e[i - 1] += 1
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def lex_key(self) -> tuple[int, ...]:
        """Sort key realising the lex order with x_n most significant."""
        return self.exponents[::-1]

    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    def __mul__(self, other: Monomial) -> Monomial:
        return mul(self, other)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Monomial({to_text(self)!r}, n={self.n})"


def _check_n(a: Monomial, b: Monomial) -> None:
    if a.n != b.n:
        raise ValueError(f"ambient variable counts differ: {a.n} != {b.n}")


def degree(m: Monomial) -> int:
    return m.degree


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b."""
    _check_n(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_n(a, b)
    return Monomial(tuple(map(min, a.exponents, b.exponents)))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_n(a, b)
    return Monomial(tuple(map(max, a.exponents, b.exponents)))


def mul(a: Monomial, b: Monomial) -> Monomial:
    _check_n(a, b)
    return Monomial(tuple(x + y for x, y in zip(a.exponents, b.exponents)))


def colon(a: Monomial, b: Monomial) -> Monomial:
    """The monomial quotient a : b = a / gcd(a, b)."""
    _check_n(a, b)
    return Monomial(tuple(x - y if x > y else 0 for x, y in zip(a.exponents, b.exponents)))


def is_variable(m: Monomial) -> bool:
    return m.degree == 1


def lex_compare(a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as a <, =, > b in lex order with x_n > ... > x_1."""
    _check_n(a, b)
    ka, kb = a.lex_key(), b.lex_key()
    return (ka > kb) - (ka < kb)


def sort_lex(monomials: Iterable[Monomial], descending: bool = True) -> list[Monomial]:
    return sorted(monomials, key=Monomial.lex_key, reverse=descending)


def sorted_indices(m: Monomial) -> tuple[int, ...]:
    """Variable indices of m in ascending order, with multiplicity."""
    if m.degree == 0:
        raise ValueError("the constant monomial has no indices")
    out: list[int] = []
    for i, e in enumerate(m.exponents, start=1):
        out.extend([i] * e)
    return tuple(out)


def _check_pair(m1: Monomial, m2: Monomial) -> tuple[tuple[int, ...], tuple[int, ...]]:
    _check_n(m1, m2)
    if m1.degree != m2.degree:
        raise ValueError(f"degree mismatch: {m1.degree} != {m2.degree}")
    if m1.degree == 0:
        raise ValueError("monomials must have positive degree")
    c = lex_compare(m1, m2)
    if c == 0:
        raise ValueError("monomials are equal")
    if c < 0:
        raise ValueError(f"{m1} is not lex-greater than {m2}")
    return sorted_indices(m1), sorted_indices(m2)


def agreement_order(m1: Monomial, m2: Monomial) -> int:
    """Number of top sorted positions where m1 and m2 coincide.

    Requires deg m1 == deg m2 and m1 >lex m2. With ``t`` the result and ``s``
    the degree, the (s - t)-th smallest index of m1 is strictly larger than
    that of m2.
    """
    i_seq, j_seq = _check_pair(m1, m2)
    s = len(i_seq)
    t = 0
    while t < s and i_seq[s - 1 - t] == j_seq[s - 1 - t]:
        t += 1
    # t == s would mean m1 == m2, excluded above
    assert i_seq[s - 1 - t] > j_seq[s - 1 - t]
    return t


def projections(m1: Monomial, m2: Monomial) -> list[Monomial]:
    """Lexicographical projections of m1 onto m2.

    Each projection is x_p * m2 / x_q where p is the first disagreeing index of
    m1 (scanning from the top) and q ranges over the s - t smallest indices of
    m2. Returned deduplicated, in descending lex order.
    """
    i_seq, j_seq = _check_pair(m1, m2)
    s = len(i_seq)
    t = agreement_order(m1, m2)
    n = m1.n
    p = i_seq[s - t - 1]
    out = set()
    for q in j_seq[: s - t]:
        e = list(m2.exponents)
        e[q - 1] -= 1
        e[p - 1] += 1
        out.add(Monomial(tuple(e)))
    assert all(x.n == n for x in out)
    return sort_lex(out)


def to_text(m: Monomial) -> str:
    """Canonical text form, e.g. ``x3^2*x6``; the constant monomial is ``1``."""
    parts = []
    for i, e in enumerate(m.exponents, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def parse_text(text: str, n: int) -> Monomial:
    """Inverse of :func:`to_text`; factors may appear in any order."""
    text = text.strip()
    e = [0] * n
    if text == "1":
        return Monomial(tuple(e))
    for factor in text.split("*"):
        match = _FACTOR_RE.match(factor.strip())
        if match is None:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside 1..{n}")
        e[i - 1] += int(match.group(2) or 1)
    return Monomial(tuple(e))


def to_json(m: Monomial) -> list[int]:
    return list(m.exponents)


def from_json(data: Sequence[int]) -> Monomial:
    return Monomial(tuple(data))
