# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fast-path kernels; the twin of ``_ref.py``.

Every expression mirrors the pure-Python reference exactly (same operation
order, libm exp/sqrt, no fast-math) so both backends agree bit-for-bit.
"""

from libc.math cimport exp, sqrt
from libc.stdint cimport uint64_t

DIST_UNIFORM = 0
DIST_TRIANGULAR = 1

cdef double _INV_2_53 = 1.0 / 9007199254740992.0
cdef uint64_t _GAMMA = 0x9E3779B97F4A7C15U


cdef inline double _logistic(double t) nogil:
    cdef double e
    if t >= 0.0:
        return 1.0 / (1.0 + exp(-t))
    e = exp(t)
    return e / (1.0 + e)


cdef inline uint64_t _mix64(uint64_t x) nogil:
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9U
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBU
    return x ^ (x >> 31)


cdef inline double _unit_sample(uint64_t seed, uint64_t index) nogil:
    cdef uint64_t x = seed + (index + 1) * _GAMMA
    return <double>(_mix64(x) >> 11) * _INV_2_53


cdef inline double _inverse_cdf(double u, int kind, double a, double b, double c) nogil:
    cdef double fc
    if kind == 0:
        return a + u * (b - a)
    if c == a:
        return a
    fc = (b - a) / (c - a)
    if u < fc:
        return a + sqrt(u * (c - a) * (b - a))
    return c - sqrt((1.0 - u) * (c - a) * (c - b))


def logistic(double t):
    """Numerically stable 1/(1+exp(-t)); saturates to 0.0/1.0 without overflow."""
    return _logistic(t)


def unit_sample(seed, index):
    """Deterministic u in [0,1) for (seed, index); independent of batching."""
    return _unit_sample(<uint64_t>(seed & 0xFFFFFFFFFFFFFFFF), <uint64_t>index)


def violation_count(double x_plus_y, long samples, seed, int kind,
                    double a, double b, double c):
    """Count samples where the combined exposure window exceeds the sampled horizon."""
    cdef uint64_t s = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef long count = 0
    cdef long i
    cdef double u, z
    with nogil:
        for i in range(samples):
            u = _unit_sample(s, <uint64_t>i)
            z = _inverse_cdf(u, kind, a, b, c)
            if x_plus_y > z:
                count += 1
    return count


def landscape_rows(double xy_start, long xy_count, double xy_step,
                   double z_start, long z_count, double z_step, double alpha):
    """Row-major (x_plus_y, z, r, T) grid; values derived by counter, not accumulation."""
    cdef long i, j
    cdef double xy, z, r, t
    rows = []
    for i in range(xy_count):
        xy = xy_start + i * xy_step
        for j in range(z_count):
            z = z_start + j * z_step
            r = xy / z
            t = _logistic(alpha * (r - 1.0))
            rows.append((xy, z, r, t))
    return rows
