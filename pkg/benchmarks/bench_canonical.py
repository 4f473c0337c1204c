"""Time canonical certificates with the compiled and the pure-Python flag kernel.

Usage: python3 benchmarks/bench_canonical.py [--repeat N]

The Python backend is measured in a subprocess with SEMIMAP_DISABLE_JIT=1,
since the backend is fixed at import time.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _workload():
    from semimap.catalog import catalog_entries
    from semimap.map_core import stack_all_faces

    maps = [e.map for e in catalog_entries()]
    # stacking every face gives larger maps with many more flags
    maps += [stack_all_faces(m) for m in maps[:6]]
    return maps


def measure(repeat: int) -> dict:
    from semimap import _flagkernel
    from semimap.isomorphism import _canon

    maps = _workload()
    t0 = time.perf_counter()
    _canon.cache_clear()
    for m in maps:
        _canon(m)
    first = time.perf_counter() - t0
    times = []
    for _ in range(repeat):
        _canon.cache_clear()
        t0 = time.perf_counter()
        for m in maps:
            _canon(m)
        times.append(time.perf_counter() - t0)
    return {"backend": _flagkernel.BACKEND, "maps": len(maps), "first": first, "best": min(times)}


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps(measure(args.repeat)))
        return

    rows = []
    for disable in ("0", "1"):
        env = dict(os.environ, SEMIMAP_DISABLE_JIT=disable)
        out = subprocess.run(
            [sys.executable, __file__, "--child", "--repeat", str(args.repeat)],
            env=env, check=True, capture_output=True, text=True,
        )
        rows.append(json.loads(out.stdout.strip().splitlines()[-1]))

    print(f"{'backend':<8} {'maps':>5} {'first run (s)':>14} {'best run (s)':>13}")
    for r in rows:
        print(f"{r['backend']:<8} {r['maps']:>5} {r['first']:>14.3f} {r['best']:>13.4f}")
    if len(rows) == 2 and rows[0]["backend"] != rows[1]["backend"]:
        print(f"speedup (best run): {rows[1]['best'] / rows[0]['best']:.1f}x")


if __name__ == "__main__":
    main()
