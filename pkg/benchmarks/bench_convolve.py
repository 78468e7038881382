#!/usr/bin/env python3
"""Benchmark the compiled convolution kernel against the pure-Python twin.

Microbenchmark: raw quad_conv calls on integer-scaled coefficients.
End-to-end: a full guess run per backend (subprocesses, since the backend
is chosen at import time via QUADGUESS_KERNEL).
"""

import os
import random
import subprocess
import sys
import time

from quadguess import _convolve_py

try:
    from quadguess import _convolve_c
except ImportError:
    _convolve_c = None


def time_kernel(impl, nums, reps, m, p, q):
    start = time.perf_counter()
    for _ in range(reps):
        impl.quad_conv(nums, m, p, q)
    return time.perf_counter() - start


def micro():
    rng = random.Random(7)
    print(f"{'n':>6} {'python (s)':>12} {'c (s)':>12} {'speedup':>8}")
    for size, reps in ((50, 2000), (200, 400), (1000, 40), (4000, 4)):
        nums = [rng.randrange(-10**12, 10**12) for _ in range(size + 3)]
        m, p, q = size, 2, 1
        t_py = time_kernel(_convolve_py, nums, reps, m, p, q)
        if _convolve_c is None:
            print(f"{size:>6} {t_py/reps:>12.3e} {'n/a':>12} {'n/a':>8}")
            continue
        assert _convolve_c.quad_conv(nums, m, p, q) == \
            _convolve_py.quad_conv(nums, m, p, q)
        t_c = time_kernel(_convolve_c, nums, reps, m, p, q)
        print(f"{size:>6} {t_py/reps:>12.3e} {t_c/reps:>12.3e} "
              f"{t_py/t_c:>8.2f}x")


END_TO_END = """
import time
from quadguess import guess, oracle_sequence, kernel
prefix = oracle_sequence("bell-egf", 60)
start = time.perf_counter()
result = guess(prefix)
elapsed = time.perf_counter() - start
print(f"  backend={kernel.BACKEND}: guess(bell-egf, 60 terms) "
      f"status={result.status} d={result.d} in {elapsed:.3f}s")
"""


def end_to_end():
    backends = ["python"] + (["c"] if _convolve_c is not None else [])
    for backend in backends:
        env = dict(os.environ, QUADGUESS_KERNEL=backend)
        sys.stdout.flush()
        subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                       check=True)


if __name__ == "__main__":
    print("quad_conv microbenchmark (quadratic Cauchy rows):")
    micro()
    print("\nend-to-end guess:")
    end_to_end()
