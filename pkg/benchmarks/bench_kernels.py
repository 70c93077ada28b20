"""Compare the compiled and pure-Python RS kernels.

    python benchmarks/bench_kernels.py [--trials N] [--errors E]
"""

import argparse
import random
import time

from rskeychain import _backend, rs


def run(kernels, words, originals):
    _backend.kernels = kernels
    t0 = time.perf_counter()
    for m in originals:
        rs.rs_encode(m)
    t1 = time.perf_counter()
    for w in words:
        rs.rs_decode(w)
    t2 = time.perf_counter()
    return t1 - t0, t2 - t1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--errors", type=int, default=32)
    args = ap.parse_args()

    rng = random.Random(0)
    originals = [bytes(rng.randrange(128) for _ in range(63)) for _ in range(args.trials)]
    words = []
    for m in originals:
        w = bytearray(rs.rs_encode(m))
        for p in rng.sample(range(127), args.errors):
            w[p] ^= rng.randrange(1, 128)
        words.append(bytes(w))

    backends = _backend.available()
    timings = {name: run(mod, words, originals) for name, mod in backends.items()}
    print(f"{args.trials} codewords, {args.errors} errors each")
    print(f"{'backend':<8} {'encode/cw':>12} {'decode/cw':>12}")
    for name, (enc, dec) in timings.items():
        print(f"{name:<8} {enc / args.trials * 1e6:>10.1f}us {dec / args.trials * 1e6:>10.1f}us")
    if "cython" in timings:
        py, cy = timings["python"], timings["cython"]
        print(f"speedup: encode x{py[0] / cy[0]:.1f}, decode x{py[1] / cy[1]:.1f}")


if __name__ == "__main__":
    main()
