"""Compare the pure-Python and compiled letter kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

from __future__ import annotations

import argparse
import json
import random
import timeit

from heckoid import kernels


def workloads(rng: random.Random):
    words = ["".join(rng.choice("abAB") for _ in range(2000)) for _ in range(50)]
    slopes = [(rng.randint(1, 10**5), rng.randint(10**5, 2 * 10**5)) for _ in range(20)]
    trivial = "ab" * 3 * 700 + "BA" * 3 * 300
    codes = [rng.randint(0, 3) for _ in range(20_000)]
    return {
        "free_reduce": lambda k: [k.free_reduce(w) for w in words],
        "normal_form": lambda k: [k.normal_form(w, 5) for w in words],
        "dehn_reduce": lambda k: [k.dehn_reduce(w, 3) for w in words] + [k.dehn_reduce(trivial, 3)],
        "riley_word": lambda k: [k.riley_word(q, p) for q, p in slopes],
        "sign_runs": lambda k: [k.sign_runs(w) for w in words],
        "least_rotation": lambda k: k.least_rotation(codes),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    tasks = workloads(random.Random(0))
    rows = []
    for name, fn in tasks.items():
        row = {"kernel": name}
        for b in backends:
            impl = kernels.get_backend(b)
            row[b] = min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat))
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    if "cython" not in backends:
        print("compiled kernels not built; showing the Python backend only")
    header = f"{'kernel':<16}" + "".join(f"{b:>12}" for b in backends) + ("   speedup" if len(backends) > 1 else "")
    print(header)
    for row in rows:
        line = f"{row['kernel']:<16}" + "".join(f"{row[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) > 1:
            line += f"{row['python'] / row['cython']:>9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
