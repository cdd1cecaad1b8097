"""Independent re-validation of quotient certificates.

Uses only exact monomial arithmetic on the raw ordering; nothing here calls
the array kernels that produced the certificate.
"""

from __future__ import annotations

from typing import Sequence

from .monomial import Monomial, colon, divides, parse_text


class ReplayError(Exception):
    """A certificate does not match its ordering."""


def _minimal(monomials) -> set[Monomial]:
    kept: list[Monomial] = []
    for m in sorted(set(monomials), key=lambda x: x.degree):
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return set(kept)


def _colon_set(order: Sequence[Monomial], i: int) -> set[Monomial]:
    """Minimal generators of (order[0..i-1]) : order[i], 0-based i."""
    return _minimal(colon(p, order[i]) for p in order[:i])


def _replay_colon(order, cert) -> None:
    n, r = order[0].n, len(order)
    seen = []
    for entry in cert["evidence"]:
        i = int(entry["i"])
        recorded = {parse_text(t, n) for t in entry["colon"]}
        actual = _colon_set(order, i - 1)
        if recorded != actual:
            raise ReplayError(f"colon generators at i={i} do not match")
        if any(m.degree != 1 for m in actual):
            raise ReplayError(f"evidence at i={i} is not linear")
        seen.append(i)
    failure = cert["failure"]
    if cert["verdict"]:
        if failure is not None or seen != list(range(2, r + 1)):
            raise ReplayError("positive certificate must cover i = 2..r exactly")
        return
    if failure is None:
        raise ReplayError("negative certificate without failure record")
    fi, fj = int(failure["i"]), int(failure["j"])
    if seen != list(range(2, fi)) or not 1 <= fj < fi <= r:
        raise ReplayError("failure index inconsistent with evidence")
    witness = parse_text(failure["witness"], n)
    actual = _colon_set(order, fi - 1)
    if witness not in actual or witness.degree < 2:
        raise ReplayError("witness is not a non-linear minimal colon generator")
    if not divides(witness, colon(order[fj - 1], order[fi - 1])):
        raise ReplayError("witness does not divide the offending colon")


def _replay_works(order, cert) -> None:
    n, r = order[0].n, len(order)
    covered = []
    for i, j, h in cert["evidence"]:
        if not (1 <= j < i <= r and 1 <= h < i):
            raise ReplayError(f"bad indices {(i, j, h)}")
        q = colon(order[h - 1], order[i - 1])
        if q.degree != 1 or not divides(q, colon(order[j - 1], order[i - 1])):
            raise ReplayError(f"h={h} does not work for (i, j)=({i}, {j})")
        covered.append((i, j))
    expected = [(i, j) for i in range(2, r + 1) for j in range(1, i)]
    failure = cert["failure"]
    if cert["verdict"]:
        if failure is not None or covered != expected:
            raise ReplayError("positive certificate must cover every pair j < i")
        return
    if failure is None:
        raise ReplayError("negative certificate without failure record")
    fi, fj = int(failure["i"]), int(failure["j"])
    if covered != expected[: len(covered)] or (fi, fj) != expected[len(covered)]:
        raise ReplayError("failure pair is not the first uncovered pair")
    target = colon(order[fj - 1], order[fi - 1])
    if parse_text(failure["witness"], n) != target:
        raise ReplayError("witness is not the offending colon")
    for h in range(fi - 1):
        q = colon(order[h], order[fi - 1])
        if q.degree == 1 and divides(q, target):
            raise ReplayError(f"h={h + 1} works, so ({fi}, {fj}) is not a failure")


def replay(order: Sequence[Monomial], cert: dict) -> None:
    """Raise :class:`ReplayError` unless ``cert`` (certificate JSON) is valid
    for ``order``."""
    order = list(order)
    if not order:
        raise ReplayError("empty ordering")
    if int(cert["r"]) != len(order) or int(cert["n"]) != order[0].n:
        raise ReplayError("certificate shape does not match ordering")
    if len(set(order)) != len(order):
        raise ReplayError("ordering repeats a generator")
    if cert["criterion"] == "colon":
        _replay_colon(order, cert)
    elif cert["criterion"] == "works":
        _replay_works(order, cert)
    else:
        raise ReplayError(f"unknown criterion {cert['criterion']!r}")


def accepts(order: Sequence[Monomial], cert: dict) -> bool:
    try:
        replay(order, cert)
    except ReplayError:
        return False
    return True
