"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--samples N] [--max-states K]
"""

import argparse
import time

from specalg import kernels
from specalg.generate import GenConfig, gen_random


def _fa_jobs(samples, max_states, alphabet_size):
    cfg = GenConfig("fa", max_states=max_states, alphabet_size=alphabet_size, seed=42)
    autos = [gen_random(cfg, i) for i in range(2 * samples)]
    k = alphabet_size
    incl = []
    det = []
    for a, b in zip(autos[::2], autos[1::2]):
        na, sa, ia, aa = a.encoded
        nb, sb, ib, ab = b.encoded
        incl.append((na, nb, k, sa, ia, aa, sb, ib, ab, 1 << 16))
        det.append((na, k, sa, ia, 1 << 16))
    return incl, det


def _mts_jobs(samples, max_states, alphabet_size):
    cfg = GenConfig("mts", max_states=max_states, alphabet_size=alphabet_size, seed=42)
    systems = [m for m in (gen_random(cfg, i) for i in range(3 * samples)) if not m.inconsistent]
    k = alphabet_size
    sim, prod, attr = [], [], []
    for a, b in zip(systems[::2], systems[1::2]):
        na, may_a, must_a, _ = a.encoded
        nb, may_b, must_b, _ = b.encoded
        sim.append((na, nb, k, may_a, must_a, may_b, must_b))
        _, da, ra, ia = a.det_encoded
        _, db, rb, ib = b.det_encoded
        prod.append((nb, k, da, ra, ia, db, rb, ib, True))
        attr.append((na, k, must_a, (1 << k) - 1, 1 << (na - 1)))
    return {"simulation": sim[:samples], "det_product": prod[:samples], "attractor": attr[:samples]}


def _time(fn, jobs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in jobs:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--max-states", type=int, default=12)
    p.add_argument("--alphabet-size", type=int, default=3)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if kernels.ext is None:
        raise SystemExit("compiled kernels are not available; build with `pip install -e .`")

    incl, det = _fa_jobs(args.samples, args.max_states, args.alphabet_size)
    suites = {"nfa_included": incl, "determinize": det}
    suites.update(_mts_jobs(args.samples, args.max_states, args.alphabet_size))

    print(f"{'kernel':<14}{'jobs':>7}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, jobs in suites.items():
        t_py = _time(getattr(kernels.py, name), jobs, args.repeat)
        t_ext = _time(getattr(kernels.ext, name), jobs, args.repeat)
        print(f"{name:<14}{len(jobs):>7}{t_py * 1e3:>12.1f}{t_ext * 1e3:>12.1f}{t_py / t_ext:>9.1f}x")


if __name__ == "__main__":
    main()
