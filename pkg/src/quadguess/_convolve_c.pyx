# cython: language_level=3
"""Compiled convolution kernel; mirrors quadguess._convolve_py.

Coefficients stay Python ints (they grow without bound), but the loop
bookkeeping runs in C and the derivative weights are updated incrementally
instead of being rebuilt per summand.
"""

BACKEND = "c"


def weight(Py_ssize_t j, Py_ssize_t p):
    """(j+p)!/j! as a plain int."""
    cdef Py_ssize_t t
    w = 1
    for t in range(j + 1, j + p + 1):
        w *= t
    return w


def quad_conv(list nums, Py_ssize_t m, Py_ssize_t p, Py_ssize_t q):
    """Sum_{t=0..m} (t+p)!/t! * (m-t+q)!/(m-t)! * nums[t+p] * nums[m-t+q]."""
    cdef Py_ssize_t t
    total = 0
    w1 = weight(0, p)
    w2 = weight(m, q)
    for t in range(m + 1):
        total += w1 * w2 * nums[t + p] * nums[m - t + q]
        # w(t+1, p) = w(t, p) * (t+p+1) / (t+1); likewise for the co-factor.
        w1 = w1 * (t + p + 1) // (t + 1)
        if t < m:
            w2 = w2 * (m - t) // (m - t + q)
    return total
