"""Time the compiled enumeration kernel against the pure-Python fallback.

    python benchmarks/bench_kernel.py            # default cases
    python benchmarks/bench_kernel.py --quick    # smaller sizes
    python benchmarks/bench_kernel.py --json out.json

Each case is one full histogram call; both backends must return the same
list, which is asserted before timings are reported.
"""

from __future__ import annotations

import argparse
import json
import platform
import time

from mahonian import _pykernel
from mahonian.harness import BruteSpec, brute_sum

try:
    from mahonian import _kernel
except ImportError:  # extension not built
    _kernel = None

# (label, family, n, stat, sign, restriction)
CASES = [
    ("S_8 maj over derangements", "s", 8, "maj-nat", "len-a", "derangements"),
    ("B_6 fmaj signed", "b", 6, "fmaj", "len-b", "all"),
    ("B_7 fmaj over derangements", "b", 7, "fmaj", "none", "derangements"),
    ("D_7 dmaj signed", "d", 7, "dmaj", "len-d", "all"),
    ("Delta_6 fmaj over even derangements", "delta", 6, "fmaj", "none", "even"),
]
QUICK = [(label, fam, n - 2, stat, sign, r) for label, fam, n, stat, sign, r in CASES]


def _codes(fam, stat, sign, restriction):
    return BruteSpec(fam, restriction, stat, sign).codes()[:4]


def _time(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def run(cases, repeat: int, workers: int):
    rows = []
    for label, fam, n, stat, sign, restriction in cases:
        codes = _codes(fam, stat, sign, restriction)
        t_py, h_py = _time(lambda: _pykernel.histogram(n, *codes), 1)
        row = {"case": label, "n": n, "python_s": t_py}
        if _kernel is not None:
            t_c, h_c = _time(lambda: _kernel.histogram(n, *codes), repeat)
            assert h_c == h_py, f"backends disagree on {label}"
            row["cython_s"] = t_c
            row["speedup"] = t_py / t_c if t_c else float("inf")
            if workers > 1:
                spec = BruteSpec(fam, restriction, stat, sign)
                t_w, _ = _time(lambda: brute_sum(spec, n, workers), repeat)
                row[f"cython_{workers}w_s"] = t_w
        rows.append(row)
    return rows


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--quick", action="store_true")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--workers", type=int, default=4)
    p.add_argument("--json", metavar="PATH")
    args = p.parse_args(argv)

    rows = run(QUICK if args.quick else CASES, args.repeat, args.workers)
    wcol = f"cython_{args.workers}w_s"
    print(f"{'case':<38}{'python':>10}{'cython':>10}{'speedup':>9}"
          + (f"{str(args.workers) + ' thr':>10}" if args.workers > 1 else ""))
    for r in rows:
        line = f"{r['case']:<38}{r['python_s']:>9.3f}s"
        if "cython_s" in r:
            line += f"{r['cython_s']:>9.4f}s{r['speedup']:>8.0f}x"
            if wcol in r:
                line += f"{r[wcol]:>9.4f}s"
        print(line)
    if _kernel is None:
        print("compiled kernel not built; only the Python timings are shown")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"python": platform.python_version(), "machine": platform.machine(),
                       "rows": rows}, fh, indent=2)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
