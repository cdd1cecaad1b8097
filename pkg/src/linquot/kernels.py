"""Hot loops over exponent arrays.

Every kernel has a numba version and a vectorised numpy version with the same
signature and identical results; ``_accel.BACKEND`` picks which one is
exported. Exponent arrays are C-contiguous int32 of shape (rows, n).
"""

import numpy as np

from ._accel import BACKEND, HAS_NUMBA, njit

DTYPE = np.int32
# cap on the size of the (candidates, prefix, n) temporaries in the numpy path
_NUMPY_CHUNK_CELLS = 1 << 22


def as_array(rows, n):
    arr = np.asarray(rows, dtype=DTYPE)
    if arr.size == 0:
        return np.zeros((0, n), dtype=DTYPE)
    return np.ascontiguousarray(arr.reshape(-1, n))


# ---------------------------------------------------------------------------
# numba kernels
# ---------------------------------------------------------------------------


@njit(cache=True)
def _uncovered_nb(gens, prefix_idx, k, c):
    """First prefix position whose colon against gens[c] is not divisible by a
    linear colon generator, or -1."""
    n = gens.shape[1]
    lin = np.zeros(n, dtype=np.bool_)
    for r in range(k):
        p = prefix_idx[r]
        deg = 0
        var = -1
        for v in range(n):
            d = gens[p, v] - gens[c, v]
            if d > 0:
                deg += d
                var = v
                if deg > 1:
                    break
        if deg == 1:
            lin[var] = True
    for r in range(k):
        p = prefix_idx[r]
        ok = False
        for v in range(n):
            if lin[v] and gens[p, v] > gens[c, v]:
                ok = True
                break
        if not ok:
            return r
    return -1


@njit(cache=True)
def _first_failure_nb(gens):
    r = gens.shape[0]
    idx = np.arange(r)
    for i in range(1, r):
        j = _uncovered_nb(gens, idx, i, i)
        if j >= 0:
            return i, j
    return -1, -1


@njit(cache=True)
def _next_valid_nb(gens, order, used, prefix_idx, k, start):
    nodes = 0
    for pos in range(start, order.shape[0]):
        c = order[pos]
        if used[c]:
            continue
        nodes += 1
        if _uncovered_nb(gens, prefix_idx, k, c) < 0:
            return pos, nodes
    return -1, nodes


@njit(cache=True)
def _colon_variables_nb(gens, upto):
    r, n = gens.shape
    out = np.zeros((r, n), dtype=np.bool_)
    for i in range(1, upto):
        for p in range(i):
            deg = 0
            var = -1
            for v in range(n):
                d = gens[p, v] - gens[i, v]
                if d > 0:
                    deg += d
                    var = v
                    if deg > 1:
                        break
            if deg == 1:
                out[i, var] = True
    return out


@njit(cache=True)
def _minimal_mask_nb(gens):
    r, n = gens.shape
    keep = np.ones(r, dtype=np.bool_)
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            divides = True
            equal = True
            for v in range(n):
                if gens[j, v] > gens[i, v]:
                    divides = False
                    break
                if gens[j, v] != gens[i, v]:
                    equal = False
            if divides and (not equal or j < i):
                keep[i] = False
                break
    return keep


# ---------------------------------------------------------------------------
# numpy fallbacks
# ---------------------------------------------------------------------------


def _uncovered_np(gens, prefix_idx, k, c):
    if k == 0:
        return -1
    colons = np.maximum(gens[prefix_idx[:k]] - gens[c], 0)
    deg = colons.sum(axis=1)
    lin = (colons[deg == 1] > 0).any(axis=0)
    covered = (colons[:, lin] > 0).any(axis=1)
    bad = np.flatnonzero(~covered)
    return int(bad[0]) if bad.size else -1


def _first_failure_np(gens):
    idx = np.arange(gens.shape[0])
    for i in range(1, gens.shape[0]):
        j = _uncovered_np(gens, idx, i, i)
        if j >= 0:
            return i, j
    return -1, -1


def _next_valid_np(gens, order, used, prefix_idx, k, start):
    positions = np.arange(start, order.shape[0])
    positions = positions[~used[order[positions]]]
    if positions.size == 0:
        return -1, 0
    if k == 0:
        return int(positions[0]), 1
    n = gens.shape[1]
    prefix = gens[prefix_idx[:k]]
    chunk = max(1, _NUMPY_CHUNK_CELLS // max(1, k * n))
    for lo in range(0, positions.size, chunk):
        pos = positions[lo : lo + chunk]
        colons = np.maximum(prefix[None, :, :] - gens[order[pos]][:, None, :], 0)
        deg = colons.sum(axis=2)
        lin = ((colons > 0) & (deg == 1)[:, :, None]).any(axis=1)
        covered = ((colons > 0) & lin[:, None, :]).any(axis=2)
        ok = covered.all(axis=1)
        hit = np.flatnonzero(ok)
        if hit.size:
            return int(pos[hit[0]]), lo + int(hit[0]) + 1
    return -1, int(positions.size)


def _colon_variables_np(gens, upto):
    out = np.zeros(gens.shape, dtype=bool)
    for i in range(1, upto):
        colons = np.maximum(gens[:i] - gens[i], 0)
        out[i] = (colons[colons.sum(axis=1) == 1] > 0).any(axis=0)
    return out


def _minimal_mask_np(gens):
    r = gens.shape[0]
    keep = np.ones(r, dtype=bool)
    for i in range(r):
        div = (gens <= gens[i]).all(axis=1)
        div[i] = False
        eq = (gens == gens[i]).all(axis=1)
        # duplicates: only the first copy survives
        strict = div & ~eq
        earlier_dup = div & eq & (np.arange(r) < i)
        if strict.any() or earlier_dup.any():
            keep[i] = False
    return keep


# ---------------------------------------------------------------------------
# exported API
# ---------------------------------------------------------------------------

if HAS_NUMBA:
    _uncovered, _first_failure, _next_valid, _colon_variables, _minimal_mask = (
        _uncovered_nb,
        _first_failure_nb,
        _next_valid_nb,
        _colon_variables_nb,
        _minimal_mask_nb,
    )
else:
    _uncovered, _first_failure, _next_valid, _colon_variables, _minimal_mask = (
        _uncovered_np,
        _first_failure_np,
        _next_valid_np,
        _colon_variables_np,
        _minimal_mask_np,
    )

# both code paths by name, for the benchmark and the backend-agreement tests
IMPLEMENTATIONS = {
    "numpy": dict(
        uncovered=_uncovered_np,
        first_failure=_first_failure_np,
        next_valid=_next_valid_np,
        colon_variables=_colon_variables_np,
        minimal_mask=_minimal_mask_np,
    ),
}
if HAS_NUMBA:
    IMPLEMENTATIONS["numba"] = dict(
        uncovered=_uncovered_nb,
        first_failure=_first_failure_nb,
        next_valid=_next_valid_nb,
        colon_variables=_colon_variables_nb,
        minimal_mask=_minimal_mask_nb,
    )


def uncovered(gens, prefix_idx, k, c):
    """Position in ``prefix_idx[:k]`` of the first generator whose colon
    against ``gens[c]`` escapes the variables of the colon ideal; -1 if the
    colon ideal is generated by variables."""
    return int(_uncovered(gens, np.asarray(prefix_idx, dtype=np.int64), int(k), int(c)))


def first_failure(gens):
    """(i, j) 0-based for the first index i whose prefix colon is not linear,
    with j the first offending prefix position; (-1, -1) if none."""
    i, j = _first_failure(gens)
    return int(i), int(j)


def next_valid(gens, order, used, prefix_idx, k, start):
    """Scan ``order[start:]`` for the first unused generator that can be
    appended to the prefix. Returns (position or -1, candidates tested)."""
    pos, nodes = _next_valid(gens, order, used, prefix_idx, int(k), int(start))
    return int(pos), int(nodes)


def colon_variables(gens, upto=None):
    """Boolean (r, n): row i marks the variables x_v with x_v = gens[p] : gens[i]
    for some p < i. Rows at or past ``upto`` are left False."""
    upto = gens.shape[0] if upto is None else int(upto)
    return np.asarray(_colon_variables(gens, upto), dtype=bool)


def minimal_mask(gens):
    """Mask of divisibility-minimal rows (first copy of duplicates kept)."""
    if gens.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    return np.asarray(_minimal_mask(gens), dtype=bool)


__all__ = ["BACKEND", "DTYPE", "as_array", "uncovered", "first_failure", "next_valid", "colon_variables", "minimal_mask"]
