"""Compare the numba and numpy kernel backends.

In-process timings call both implementations directly on the same arrays;
end-to-end timings run a full search in a subprocess per backend with
LINQUOT_BACKEND set, so import-time selection is exercised too.

    python3 benchmarks/bench_kernels.py --n 8 --s 3 --repeat 5
"""

import argparse
import json
import os
import subprocess
import sys
import timeit

import numpy as np

from linquot import kernels
from linquot.graphs import edge_ideal, h_n
from linquot.ideal import power
from linquot.quotients import lex_order


def _inputs(n, s):
    ideal = power(edge_ideal(h_n(n)), s)
    gens = lex_order(ideal).array()
    r = gens.shape[0]
    order = np.arange(r, dtype=np.int64)
    used = np.zeros(r, dtype=np.bool_)
    half = r // 2
    used[:half] = True
    prefix = np.zeros(r, dtype=np.int64)
    prefix[:half] = np.arange(half)
    return {
        "first_failure": (gens,),
        "colon_variables": (gens, r),
        "minimal_mask": (gens,),
        "next_valid": (gens, order, used, prefix, half, 0),
        "uncovered": (gens, prefix, half, r - 1),
    }, r


def bench_in_process(n, s, repeat):
    args, r = _inputs(n, s)
    rows = []
    for name, a in args.items():
        times = {}
        for backend, impl in kernels.IMPLEMENTATIONS.items():
            fn = impl[name]
            fn(*a)  # compile / warm up
            times[backend] = min(timeit.repeat(lambda: fn(*a), number=1, repeat=repeat))
        rows.append((name, times))
    return r, rows


_CHILD = """
import json, time
from linquot import _accel
from linquot.graphs import edge_ideal, g_n
from linquot.ideal import power
from linquot.search import find_ordering
ideal = power(edge_ideal(g_n({n})), {s})
find_ordering(ideal)  # warm up
t = time.perf_counter()
res = find_ordering(ideal)
print(json.dumps({{"backend": _accel.BACKEND, "status": res.status, "nodes": res.nodes,
                  "seconds": time.perf_counter() - t, "r": len(ideal)}}))
"""


def bench_search(n, s, backends):
    out = []
    for backend in backends:
        env = dict(os.environ, LINQUOT_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, "-c", _CHILD.format(n=n, s=s)], env=env, capture_output=True, text=True, check=True
        )
        out.append(json.loads(proc.stdout.strip().splitlines()[-1]))
    return out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--skip-search", action="store_true")
    args = p.parse_args(argv)

    r, rows = bench_in_process(args.n, args.s, args.repeat)
    backends = list(kernels.IMPLEMENTATIONS)
    print(f"kernels on lex order of I_(H_{args.n})^{args.s}, {r} generators (best of {args.repeat})")
    print(f"{'kernel':<16}" + "".join(f"{b:>12}" for b in backends) + f"{'ratio':>10}")
    for name, times in rows:
        ratio = times["numpy"] / times["numba"] if "numba" in times and times["numba"] > 0 else float("nan")
        print(f"{name:<16}" + "".join(f"{times[b] * 1e3:>10.3f}ms" for b in backends) + f"{ratio:>9.1f}x")

    if not args.skip_search:
        print(f"\nfull search for I_(G_{args.n})^{args.s}, one subprocess per backend")
        for row in bench_search(args.n, args.s, backends):
            print(
                f"{row['backend']:<8} {row['status']:<12} r={row['r']:<6} nodes={row['nodes']:<8} "
                f"{row['seconds'] * 1e3:.2f}ms"
            )


if __name__ == "__main__":
    main()
