"""Check equations against prefixes, extend sequences term by term, and
generate reference sequences from classical integer triangles.

Extension realizes the recurrence as a recursion: row n introduces the
single unknown a_{n + max_shift}; rows that introduce nothing new must
vanish on the supplied initial terms (warm-up consistency)."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from quadguess.errors import (InconsistentInitialTermsError,
                              InsufficientTermsError,
                              LeadingCoefficientZeroError, NonlinearStepError)
from quadguess.exact import falling_weight
from quadguess.prefix import SequencePrefix


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    rows_checked: int
    first_failure: int | None = None
    residual: Fraction | None = None


def check(eq, prefix):
    """Evaluate every fully determined row (n = 0 .. N - max_shift) of the
    equation on the prefix; pass iff all vanish exactly."""
    last = prefix.last_index - eq.max_shift
    for n in range(0, last + 1):
        residual = eq.row_value(prefix, n)
        if residual != 0:
            return CheckReport(passed=False, rows_checked=n + 1,
                               first_failure=n, residual=residual)
    return CheckReport(passed=True, rows_checked=max(0, last + 1))


def _row_split(eq, values, n, unknown):
    """Row n of eq on `values` as (constant, coefficient-of-a_unknown).

    Indices other than `unknown` must be < len(values).  Raises
    NonlinearStepError if a_unknown enters a convolution twice in one
    summand (the row would be quadratic in the unknown)."""
    const = Fraction(0)
    slope = Fraction(0)
    for s, mono, c in eq.terms:
        m = n - s
        if m < 0:
            continue
        p, q = mono.p, mono.q
        if p == -1:
            if m == 0:
                const += c
            continue
        if q == -1:
            idx = m + p
            w = c * falling_weight(m, p)
            if idx == unknown:
                slope += w
            else:
                const += w * values[idx]
            continue
        for t in range(m + 1):
            i1 = t + p
            i2 = m - t + q
            w = c * falling_weight(t, p) * falling_weight(m - t, q)
            if i1 == unknown and i2 == unknown:
                raise NonlinearStepError(n)
            if i1 == unknown:
                slope += w * values[i2]
            elif i2 == unknown:
                slope += w * values[i1]
            else:
                const += w * values[i1] * values[i2]
    return const, slope


def extend(eq, initial, count):
    """Append `count` new terms to `initial` using the recurrence of eq.

    Warm-up rows (those fully determined by the initial terms) must vanish;
    afterwards each row is linear in exactly one new term, which is solved
    for exactly.  Raises LeadingCoefficientZeroError when the new term's
    coefficient vanishes."""
    values = list(initial.values)
    shift = eq.max_shift
    if len(values) < shift:
        raise InsufficientTermsError(
            f"extension needs at least {shift} initial terms, got {len(values)}")
    for n in range(0, len(values) - shift):
        const, slope = _row_split(eq, values, n, unknown=-1)
        if const != 0:
            raise InconsistentInitialTermsError(n, const)
    for _ in range(count):
        t = len(values)
        n = t - shift
        const, slope = _row_split(eq, values, n, unknown=t)
        if slope == 0:
            raise LeadingCoefficientZeroError(n)
        values.append(-const / slope)
    return SequencePrefix(values)


# ---------------------------------------------------------------------------
# Reference sequences.  Each is generated by a classical method independent
# of the equation machinery above: defining recurrences and integer
# triangles, never the guessed equations themselves.


def _bernoulli_numbers(count):
    """B_0 .. B_{count-1} (B_1 = -1/2) via sum_k C(n+1, k) B_k = 0."""
    bern = []
    for n in range(count):
        if n == 0:
            bern.append(Fraction(1))
            continue
        acc = sum((comb(n + 1, k) * bern[k] for k in range(n)), Fraction(0))
        bern.append(-acc / (n + 1))
    return bern


def _zigzag_numbers(count):
    """Up/down numbers 1, 1, 1, 2, 5, 16, 61, ... via the boustrophedon
    triangle (each row is the reversed running sum of the previous)."""
    out = []
    row = [1]
    for n in range(count):
        out.append(row[-1])
        nxt = [0]
        for v in reversed(row):
            nxt.append(nxt[-1] + v)
        row = nxt
    return out


def _bell_numbers(count):
    """Bell numbers via the Bell triangle."""
    out = []
    row = [1]
    for n in range(count):
        out.append(row[0])
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return out


def _egf(ints):
    return [Fraction(v, factorial(n)) for n, v in enumerate(ints)]


def _oracle_bernoulli_egf(count):
    return _egf(_bernoulli_numbers(count))


def _oracle_euler_egf(count):
    zig = _zigzag_numbers(count)
    vals = []
    for n in range(count):
        if n % 2:
            vals.append(Fraction(0))
        else:
            vals.append(Fraction((-1) ** (n // 2) * zig[n], factorial(n)))
    return vals


def _oracle_bell_egf(count):
    return _egf(_bell_numbers(count))


def _oracle_zigzag_egf(count):
    return _egf(_zigzag_numbers(count))


def _oracle_zeta_rescaled(count):
    """zeta(2n+2) / pi^(2n+2) = (-1)^n 2^(2n+1) B_{2n+2} / (2n+2)!."""
    bern = _bernoulli_numbers(2 * count + 2)
    return [Fraction((-1) ** n * 2 ** (2 * n + 1)) * bern[2 * n + 2]
            / factorial(2 * n + 2) for n in range(count)]


def _oracle_lambertw(count):
    """Taylor coefficients of the principal Lambert W branch at 0:
    0, then (-n)^(n-1)/n!."""
    vals = [Fraction(0)]
    for n in range(1, count):
        vals.append(Fraction((-n) ** (n - 1), factorial(n)))
    return vals


def _oracle_exp(count):
    return [Fraction(1, factorial(n)) for n in range(count)]


ORACLES = {
    "bernoulli-egf": _oracle_bernoulli_egf,
    "euler-egf": _oracle_euler_egf,
    "bell-egf": _oracle_bell_egf,
    "zigzag-egf": _oracle_zigzag_egf,
    "zeta-rescaled": _oracle_zeta_rescaled,
    "lambertw": _oracle_lambertw,
    "exp": _oracle_exp,
}


def oracle_sequence(name, count):
    """First `count` terms of a named reference sequence."""
    if count < 1:
        raise ValueError("count must be >= 1")
    try:
        gen = ORACLES[name]
    except KeyError:
        raise ValueError(f"unknown oracle {name!r} "
                         f"(known: {', '.join(sorted(ORACLES))})") from None
    return SequencePrefix(gen(count))
