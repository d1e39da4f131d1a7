"""Pure-Python reference kernels.

These are the fallback twins of the compiled extension in ``_fast.pyx``.
Both implementations must stay operation-for-operation identical: every
arithmetic expression is written in the same order so that results agree
bit-for-bit on the same platform. Keep the two files in sync.
"""

import math

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15
_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53

DIST_UNIFORM = 0
DIST_TRIANGULAR = 1


def logistic(t):
    """Numerically stable 1/(1+exp(-t)); saturates to 0.0/1.0 without overflow."""
    if t >= 0.0:
        return 1.0 / (1.0 + math.exp(-t))
    e = math.exp(t)
    return e / (1.0 + e)


def _mix64(x):
    # SplitMix64 finalizer (Steele, Lea & Flood 2014).
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB & _MASK64
    return (x ^ (x >> 31)) & _MASK64


def unit_sample(seed, index):
    """Deterministic u in [0,1) for (seed, index); independent of batching."""
    x = (seed + (index + 1) * _GAMMA) & _MASK64
    return (_mix64(x) >> 11) * _INV_2_53


def _inverse_cdf(u, kind, a, b, c):
    # kind 0: Uniform(a, b); kind 1: Triangular(a, mode=b, c).
    if kind == DIST_UNIFORM:
        return a + u * (b - a)
    if c == a:
        return a
    fc = (b - a) / (c - a)
    if u < fc:
        return a + math.sqrt(u * (c - a) * (b - a))
    return c - math.sqrt((1.0 - u) * (c - a) * (c - b))


def violation_count(x_plus_y, samples, seed, kind, a, b, c):
    """Count samples where the combined exposure window exceeds the sampled horizon."""
    count = 0
    for i in range(samples):
        u = unit_sample(seed, i)
        z = _inverse_cdf(u, kind, a, b, c)
        if x_plus_y > z:
            count += 1
    return count


def landscape_rows(xy_start, xy_count, xy_step, z_start, z_count, z_step, alpha):
    """Row-major (x_plus_y, z, r, T) grid; values derived by counter, not accumulation."""
    rows = []
    for i in range(xy_count):
        xy = xy_start + i * xy_step
        for j in range(z_count):
            z = z_start + j * z_step
            r = xy / z
            t = logistic(alpha * (r - 1.0))
            rows.append((xy, z, r, t))
    return rows
