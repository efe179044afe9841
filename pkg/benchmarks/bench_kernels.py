"""Time the compiled kernels against the pure-Python ones on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]

Both modules are imported directly, so the environment switch in
``hyperpoincare.kernels`` does not matter here.  Results are checked for
equality before any timing is reported.
"""
import argparse
import random
import sys
import time

from hyperpoincare import _pykernels
from hyperpoincare.hypergraph import FamilySpec, build_family

try:
    from hyperpoincare import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    for spec in (FamilySpec("wheel", 15), FamilySpec("hyperline", 5, 4, 1), FamilySpec("hyperstar", 14, 2, 1)):
        h = build_family(spec)
        full = (1 << h.vertex_count) - 1
        label = f"{spec.family}({spec.n},{spec.d},{spec.alpha})"
        yield f"covered_supports {label}", lambda k, h=h: k.covered_supports(h.vertex_count, h.edge_masks)
        yield f"face_numbers {label}", lambda k, h=h, f=full: k.face_numbers(h.vertex_count, h.edge_masks, f)
        yield f"independent_sets {label}", lambda k, h=h, f=full: k.independent_sets(h.vertex_count, h.edge_masks, f)
        yield (
            f"maximal_independent_sets {label}",
            lambda k, h=h, f=full: k.maximal_independent_sets(h.vertex_count, h.edge_masks, f),
        )
    gens = [sum(1 << v for v in e) for e in build_family(FamilySpec("hypercycle", 14, 3, 1)).edges]
    yield "taylor_minimal hypercycle(14,3,1)", lambda k: k.taylor_minimal(gens)
    rng = random.Random(7)
    rows = [[rng.randint(0, 100) if rng.random() < 0.05 else 0 for _ in range(300)] for _ in range(300)]
    yield "rank_mod_p 300x300 dense storage, 5% fill", lambda k: k.rank_mod_p(rows, 300, 1_000_003)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'kernel':52s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in cases():
        if fn(_pykernels) != fn(_ckernels):
            print(f"{name}: RESULTS DIFFER")
            return 1
        tp = best_of(lambda: fn(_pykernels), args.repeat)
        tc = best_of(lambda: fn(_ckernels), args.repeat)
        print(f"{name:52s} {tp:9.4f}s {tc:9.4f}s {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
