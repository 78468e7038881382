"""Pure-Python convolution kernel.

Operates on integer-scaled coefficients (numerators over one common
denominator) so the inner loop is big-integer only; callers divide by the
appropriate power of the denominator.  quadguess._convolve_c is the compiled
twin with the same signatures.
"""

BACKEND = "python"


def weight(j, p):
    """(j+p)!/j! as a plain int."""
    w = 1
    for t in range(j + 1, j + p + 1):
        w *= t
    return w


def quad_conv(nums, m, p, q):
    """Sum_{t=0..m} (t+p)!/t! * (m-t+q)!/(m-t)! * nums[t+p] * nums[m-t+q].

    The z^m coefficient of f^(p) * f^(q) when nums are scaled series
    coefficients.  Requires len(nums) > m + max(p, q).
    """
    total = 0
    for t in range(m + 1):
        w1 = 1
        for u in range(t + 1, t + p + 1):
            w1 *= u
        w2 = 1
        for u in range(m - t + 1, m - t + q + 1):
            w2 *= u
        total += w1 * w2 * nums[t + p] * nums[m - t + q]
    return total
