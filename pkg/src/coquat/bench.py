"""Benchmark: closed-form matrix power versus the naive repeated product.

The closed form costs O(1) in the exponent (polar data, two trig values,
one axis representation); the naive power costs n matrix multiplications.
Quaternions are sampled on the unit circular class (timelike with timelike
vector part, N_q = 1), whose powers stay bounded for any n - so both
methods remain finite even at n = 10^6 and the timing comparison is fair.

Output is CSV with header ``n,method,median_ns,max_abs_diff``. The last
column is the worst cross-check between the two methods over the repetition
set; a value beyond the De Moivre tolerance renders as ``FAIL(<value>)``
and an overflowed closed form would render as ``overflow``.
"""

from __future__ import annotations

import logging
import random
import statistics
import time

from .algebra import format_number
from .errors import CoquatError, OverflowedToInfinity
from .matrix import left_matrix, mat_max_abs_diff
from .polar import decompose
from .powers import left_pow_closed, mat_pow_naive
from .sampling import sample_unit_circular

log = logging.getLogger(__name__)

CSV_HEADER = "n,method,median_ns,max_abs_diff"
CROSS_CHECK_TOL = 1e-9
DEFAULT_N_VALUES = (10, 100, 1000, 100000, 1000000)
DEFAULT_REPS = 25
DEFAULT_SEED = 42


def bench_pow(n_values=DEFAULT_N_VALUES, reps: int = DEFAULT_REPS,
              seed: int = DEFAULT_SEED) -> str:
    """Time left_pow_closed against mat_pow_naive; return the CSV text."""
    if reps < 1:
        raise ValueError("reps must be >= 1")
    if any(n < 1 for n in n_values):
        raise ValueError("n values must be positive")
    rng = random.Random(seed)
    lines = [CSV_HEADER]
    for n in n_values:
        lines.extend(_bench_one(rng, n, reps))
    return "\n".join(lines) + "\n"


def _bench_one(rng: random.Random, n: int, reps: int) -> list[str]:
    closed_ns: list[int] = []
    naive_ns: list[int] = []
    worst_diff = 0.0
    worst_scale = 1.0
    overflowed = False
    resamples = 0
    for _ in range(reps):
        q, extra = _sample(rng)
        resamples += extra
        matrix = left_matrix(q)

        t0 = time.perf_counter_ns()
        try:
            closed = left_pow_closed(q, n)
        except OverflowedToInfinity:
            closed = None
            overflowed = True
        closed_ns.append(time.perf_counter_ns() - t0)

        t0 = time.perf_counter_ns()
        naive = mat_pow_naive(matrix, n)
        naive_ns.append(time.perf_counter_ns() - t0)

        if closed is not None:
            diff = mat_max_abs_diff(closed, naive)
            if diff > worst_diff:
                worst_diff = diff
            scale = max(1.0, naive.max_abs())
            if scale > worst_scale:
                worst_scale = scale
    if resamples:
        log.info("resampled %d quaternion(s) while benchmarking n=%d", resamples, n)
    if overflowed:
        cell = "overflow"
    else:
        cell = format_number(worst_diff)
        if worst_diff > CROSS_CHECK_TOL * worst_scale:
            cell = f"FAIL({cell})"
    med_closed = int(statistics.median(closed_ns))
    med_naive = int(statistics.median(naive_ns))
    return [
        f"{n},closed,{med_closed},{cell}",
        f"{n},naive,{med_naive},{cell}",
    ]


def _sample(rng: random.Random):
    # Decomposition failures (null-band vector parts) are resampled; the
    # circular sampler already rejects them, so extras are rare.
    total = 0
    while True:
        q, extra = sample_unit_circular(rng)
        total += extra
        try:
            decompose(q)
        except CoquatError:
            total += 1
            continue
        return q, total
