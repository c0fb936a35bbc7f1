"""Time the compiled kernels against their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from largeness import _pykernels

try:
    from largeness import _ckernels
except ImportError:
    _ckernels = None


def _cr_case(lim: int = 1 << 16):
    rng = np.random.default_rng(0)
    fam = rng.integers(1, 4, size=(4, 5)).astype(np.int64)
    masks = np.arange(1, 32, dtype=np.int64)
    sizes = np.array([bin(m).count("1") for m in range(1, 32)], dtype=np.int64)
    occ = (rng.random(lim) < 0.6).astype(np.uint8)
    amask = np.ones(lim, dtype=np.uint8)
    idx = np.arange(lim + 1, dtype=np.int64)
    free = np.ones(lim + 1, dtype=bool)
    free[:lim] = occ == 0
    nxt = np.where(free, idx, idx + 1)
    return fam, masks, sizes, occ, amask, nxt


_CR = _cr_case()

CASES = {
    "fs_sums (16 generators)": lambda k: k.fs_sums(list(range(1, 17))),
    "positive_differences (400 x 400)": lambda k: k.positive_differences(list(range(1, 401)), list(range(3, 1203, 3))),
    "cr_scan (5 x 31 subsets, 60% occupied)": lambda k: k.cr_scan(*_CR[:5], _CR[5].copy(), 40000, 0),
    "ex_law_scan (ex(4,6), 13824 triples)": lambda k: k.ex_law_scan(
        [lv for lv in range(4) for _ in range(6)], [i for _ in range(4) for i in range(1, 7)], 5
    ),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("compiled", _ckernels)] if _ckernels else [])
    print(f"{'kernel':42s}" + "".join(f"{name:>12s}" for name, _ in backends) + ("   speedup" if _ckernels else ""))
    for label, fn in CASES.items():
        times = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for _, k in backends]
        row = f"{label:42s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"   {times[0] / times[1]:7.1f}x"
        print(row)
    if _ckernels is None:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
