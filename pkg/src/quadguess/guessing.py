"""Fit quadratic differential equations to a sequence prefix.

For growing ansatz size d, build the homogeneous linear system whose
unknowns are the coefficients c_{k,i} of (c_{k,0} + ... + c_{k,m} z^m)
applied to monomial slot k+2, evaluate its recurrence rows on the prefix,
and return the nullspace basis as normalized equations.

The stacked matrix contains every row the prefix can support: the first
(m+1)(d+1) rows determine the unknowns and the remaining rows are held-out
verification.  Computing one joint nullspace is at least as strict as
filtering basis vectors against leftover rows individually.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd, lcm

from quadguess.equations import (QuadEquation, compile_term, equation_from_obj,
                                 equation_to_obj)
from quadguess.errors import DegenerateInputError, InsufficientTermsError
from quadguess.exact import LinearForm, nullspace
from quadguess.monomials import max_derivative_order, monomial_of_index


@dataclass(frozen=True)
class GuessConfig:
    """Search-space bounds for the ansatz loop.

    m: max z-degree of the polynomial coefficients (2 suffices for the
    classical Bernoulli/Euler/Bell equations).  d runs from d_start to
    d_max (default ceil((N+1)/(m+1))), capped so that every construction
    row plus min_verify_rows held-out rows fit inside the prefix.
    """

    m: int = 2
    d_start: int = 3
    d_max: int | None = None
    min_verify_rows: int = 2

    def __post_init__(self):
        if self.m < 0 or self.d_start < 1 or self.min_verify_rows < 0:
            raise ValueError("invalid search bounds")


def column_order(d, m):
    """Unknown ids (k, i) in k-major order; the system's column order."""
    return [(k, i) for k in range(d + 1) for i in range(m + 1)]


def assemble_system(prefix, d, m):
    """(matrix, usable_rows): rows n = 0, 1, ... of the ansatz recurrence
    evaluated on the prefix, emitted while every touched index fits.

    Row n's entry for unknown (k, i) is the z^n coefficient of
    z^i * (monomial slot k+2) on the prefix; row n reads indices up to
    n + r(d) where r(d) is the largest derivative order in the ansatz.
    """
    if d < 1 or m < 0:
        raise ValueError("need d >= 1 and m >= 0")
    cols = column_order(d, m)
    generators = {(k, i): compile_term(i, monomial_of_index(k + 2))
                  for k, i in cols}
    usable = max(0, prefix.last_index - max_derivative_order(d) + 1)
    matrix = []
    for n in range(usable):
        row = LinearForm()
        for key in cols:
            row.add_term(key, generators[key].value(prefix, n))
        matrix.append(row.as_vector(cols))
    return matrix, usable


def normalize(vector, d, m):
    """Turn a nonzero solution vector into a QuadEquation: drop zeros,
    clear denominators, divide by the content, and make the coefficient of
    the highest (monomial index, z-power) term positive."""
    vector = [Fraction(v) for v in vector]
    if all(v == 0 for v in vector):
        raise ValueError("cannot normalize the zero vector")
    den = lcm(*(v.denominator for v in vector))
    ints = [int(v * den) for v in vector]
    content = 0
    for v in ints:
        content = gcd(content, abs(v))
    ints = [v // content for v in ints]
    terms = []
    for (k, i), coeff in zip(column_order(d, m), ints):
        if coeff != 0:
            terms.append((i, monomial_of_index(k + 2), Fraction(coeff)))
    if terms[-1][2] < 0:  # column order == (monomial index, z-power) order
        terms = [(s, mono, -c) for s, mono, c in terms]
    return QuadEquation(terms)


@dataclass(frozen=True)
class GuessResult:
    status: str                       # "success" | "fail"
    d: int | None = None
    m: int | None = None
    basis: tuple = ()
    construction_rows: int = 0
    verification_rows: int = 0

    @property
    def succeeded(self):
        return self.status == "success"

    def to_obj(self):
        return {"status": self.status, "d": self.d, "m": self.m,
                "basis": [equation_to_obj(eq) for eq in self.basis],
                "rows": {"construction": self.construction_rows,
                         "verification": self.verification_rows}}

    def to_json(self):
        return json.dumps(self.to_obj())

    @classmethod
    def from_obj(cls, obj):
        return cls(status=obj["status"], d=obj["d"], m=obj["m"],
                   basis=tuple(equation_from_obj(e) for e in obj["basis"]),
                   construction_rows=obj["rows"]["construction"],
                   verification_rows=obj["rows"]["verification"])

    @classmethod
    def from_json(cls, text):
        return cls.from_obj(json.loads(text))


def guess(prefix, cfg=GuessConfig()):
    """Search for quadratic equations annihilating the prefix.

    Returns the result at the smallest successful d (larger-d solution
    spaces only add consequences of the smaller equation).  Raises
    DegenerateInputError on an all-zero prefix and InsufficientTermsError
    when not even the first candidate d admits a full system.
    """
    if prefix.is_zero():
        raise DegenerateInputError("degenerate input: all terms zero")
    n_terms = len(prefix)
    m = cfg.m
    d_cap = cfg.d_max if cfg.d_max is not None else ceil(n_terms / (m + 1))
    attempted = False
    for d in range(cfg.d_start, d_cap + 1):
        construction = (m + 1) * (d + 1)
        usable = max(0, prefix.last_index - max_derivative_order(d) + 1)
        if usable < construction + cfg.min_verify_rows:
            break  # larger d only demands more rows; never fabricate terms
        attempted = True
        matrix, usable = assemble_system(prefix, d, m)
        basis = nullspace(matrix, width=construction)
        if basis:
            equations = tuple(normalize(v, d, m) for v in basis)
            return GuessResult(status="success", d=d, m=m, basis=equations,
                               construction_rows=construction,
                               verification_rows=usable - construction)
    if not attempted:
        raise InsufficientTermsError(
            f"{n_terms} terms admit no system at d = {cfg.d_start} "
            f"(m = {m}, min_verify_rows = {cfg.min_verify_rows})")
    return GuessResult(status="fail", m=m)
