"""Compare the compiled and pure-Python word kernels.

    python3 benchmarks/bench_wordkernel.py [--repeat 5]
"""

import argparse
import random
import timeit

from braidsurf import kernel
from braidsurf.factorization import beta_family, product


def workloads(rng):
    boundary = {n: product(beta_family(n, 1)) for n in (4, 16)}
    words = [tuple(rng.choice((1, -1)) * rng.randint(1, 7) for _ in range(24)) for _ in range(200)]
    long_word = tuple(rng.choice((1, -1)) * rng.randint(1, 5) for _ in range(20_000))
    return {
        "artin_images beta(4)": lambda k: k.artin_images(boundary[4].letters, 7),
        "artin_images beta(16)": lambda k: k.artin_images(boundary[16].letters, 19),
        "artin_images 200x24 random": lambda k: [k.artin_images(w, 8) for w in words],
        "reduce_word 20k letters": lambda k: k.reduce_word(long_word),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(0)
    backends = [("python", kernel.python_backend)]
    if kernel.compiled_backend is not None:
        backends.append(("cython", kernel.compiled_backend))
    else:
        print("compiled backend not built; timing pure Python only")
    print(f"{'workload':<30}" + "".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for label, fn in workloads(rng).items():
        outs = [fn(k) for _, k in backends]
        assert all(o == outs[0] for o in outs), f"backends disagree on {label}"
        times = [min(timeit.repeat(lambda k=k: fn(k), number=1, repeat=args.repeat))
                 for _, k in backends]
        speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
        print(f"{label:<30}" + "".join(f"{t * 1e3:10.2f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
