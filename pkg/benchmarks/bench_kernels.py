"""Compiled vs pure-Python kernels.

Times the raw kernels on a fixed random workload, then the whole engine on a
corpus program under each backend (the engine run uses a subprocess so the
backend is chosen at import time).

    python3 benchmarks/bench_kernels.py [--repeat N] [--program NAME]
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from symwasm._kernels import _pykernels as P
from symwasm.binary.encoder import sleb, uleb

try:
    from symwasm._kernels import _ckernels as C
except ImportError:
    C = None

HERE = os.path.dirname(os.path.abspath(__file__))
CORPUS = os.path.join(HERE, "..", "corpus", "wasm")


def workload(seed=0, n=20_000):
    rng = random.Random(seed)
    ops = []
    for _ in range(n):
        w = rng.choice((32, 64))
        ops.append((rng.randrange(15), rng.getrandbits(w), rng.getrandbits(w) | 1, w))
    lebs = b"".join(uleb(rng.getrandbits(32)) + sleb(rng.getrandbits(63) - (1 << 62))
                    for _ in range(n // 2))
    return ops, lebs


def run_kernels(k, ops, lebs):
    binop, cmp, unop = k.int_binop, k.int_cmp, k.int_unop
    for op, a, b, w in ops:
        binop(op, a, b, w)
        cmp(op % 10, a, b, w)
        unop(op % 4, a, w)
    pos, end = 0, len(lebs)
    ru, rs = k.read_uleb, k.read_sleb
    while pos < end:
        _, pos = ru(lebs, pos, 32)
        _, pos = rs(lebs, pos, 64)


def engine_seconds(program, pure):
    env = dict(os.environ)
    if pure:
        env["SYMWASM_PURE_PYTHON"] = "1"
    else:
        env.pop("SYMWASM_PURE_PYTHON", None)
    code = ("import sys, time, tempfile; from symwasm.cli import main; t = time.perf_counter(); "
            "d = tempfile.mkdtemp(); rc = main(sys.argv[1:] + ['--output-dir', d + '/o']); "
            "print(time.perf_counter() - t); sys.exit(rc)")
    path = os.path.join(CORPUS, program + ".wasm")
    r = subprocess.run([sys.executable, "-c", code, "-f", path], env=env,
                       capture_output=True, text=True, check=True)
    return float(r.stdout.split()[-1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--program", default="c20_crc32", help="concrete corpus program for the engine run")
    args = ap.parse_args(argv)

    ops, lebs = workload()
    rows = [("python", P)] + ([("compiled", C)] if C else [])
    best = {}
    for name, k in rows:
        best[name] = min(timeit.repeat(lambda: run_kernels(k, ops, lebs), number=1, repeat=args.repeat))
        print(f"kernels  {name:9s} {best[name] * 1e3:8.1f} ms")
    if C:
        print(f"kernels  speedup   {best['python'] / best['compiled']:8.2f}x")
    else:
        print("compiled kernels not built; only the fallback was timed")

    if os.path.exists(os.path.join(CORPUS, args.program + ".wasm")):
        for pure in (True, False):
            t = min(engine_seconds(args.program, pure) for _ in range(max(1, args.repeat // 2)))
            print(f"engine   {'python' if pure else 'compiled':9s} {t * 1e3:8.1f} ms  ({args.program})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
