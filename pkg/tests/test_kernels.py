import os
import subprocess
import sys

import numpy as np
import pytest

from linquot import kernels

BACKENDS = sorted(kernels.IMPLEMENTATIONS)


def random_rows(rng, r, n, hi=3):
    return np.ascontiguousarray(rng.integers(0, hi, size=(r, n)).astype(kernels.DTYPE))


def test_numba_backend_is_available():
    assert "numba" in kernels.IMPLEMENTATIONS


@pytest.mark.parametrize("trial", range(30))
def test_backends_agree(trial):
    rng = np.random.default_rng(trial)
    r, n = int(rng.integers(2, 30)), int(rng.integers(2, 7))
    gens = random_rows(rng, r, n)
    order = rng.permutation(r).astype(np.int64)
    used = rng.random(r) < 0.3
    prefix = np.flatnonzero(used).astype(np.int64)
    prefix = np.concatenate([prefix, np.zeros(r - prefix.size, dtype=np.int64)])
    k = int(used.sum())
    start = int(rng.integers(0, r))
    out = {}
    for name in BACKENDS:
        f = kernels.IMPLEMENTATIONS[name]
        out[name] = (
            [int(f["uncovered"](gens, prefix, k, c)) for c in range(r)],
            tuple(int(x) for x in f["first_failure"](gens)),
            tuple(int(x) for x in f["next_valid"](gens, order, used, prefix, k, start)),
            np.asarray(f["colon_variables"](gens, r)).tolist(),
            np.asarray(f["minimal_mask"](gens)).tolist(),
        )
    first = out[BACKENDS[0]]
    for name in BACKENDS[1:]:
        assert out[name] == first


def test_minimal_mask_duplicates():
    gens = kernels.as_array([[1, 0], [1, 0], [1, 1], [0, 2]], 2)
    assert kernels.minimal_mask(gens).tolist() == [True, False, False, True]


def test_numpy_backend_via_env_flag():
    code = (
        "import linquot, linquot.kernels as k; from linquot import *;"
        "from linquot.search import find_ordering;"
        "r = find_ordering(power(edge_ideal(g_n(6)), 3));"
        "print(linquot.BACKEND, r.status, r.nodes, [str(x) for x in r.ordering.order][:5])"
    )
    outs = {}
    for backend in ("numpy", "numba"):
        env = dict(os.environ, LINQUOT_BACKEND=backend)
        res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True)
        outs[backend] = res.stdout.split(" ", 1)
        assert outs[backend][0] == backend
    assert outs["numpy"][1] == outs["numba"][1]


def test_bad_backend_flag():
    env = dict(os.environ, LINQUOT_BACKEND="fortran")
    res = subprocess.run([sys.executable, "-c", "import linquot"], capture_output=True, env=env)
    assert res.returncode != 0


def test_first_failure_on_disjoint_pair():
    gens = kernels.as_array([[1, 1, 0, 0], [0, 0, 1, 1]], 4)
    for name in BACKENDS:
        assert tuple(kernels.IMPLEMENTATIONS[name]["first_failure"](gens)) == (1, 0)


def test_colon_variables_triangle():
    gens = kernels.as_array([[0, 1, 1], [1, 0, 1], [1, 1, 0]], 3)
    lin = kernels.colon_variables(gens)
    assert lin.tolist() == [[False] * 3, [False, True, False], [False, False, True]]
