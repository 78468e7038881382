"""Concrete quadratic differential equations and their recurrence rows.

A QuadEquation is a sum of terms coeff * z^s * f^(p) * f^(q).  Each term
compiles, via the Cauchy product, into a generator of exact recurrence rows:
the z^n Taylor coefficient of the term evaluated on a sequence prefix.

Wire format: {"terms": [{"s": int, "p": int, "q": int, "c": "p/q"}, ...]}
with p >= q >= -1 (not both -1).
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from quadguess import kernel
from quadguess.errors import EquationFormatError
from quadguess.exact import format_rational, parse_rational
from quadguess.monomials import QuadMonomial, monomial_of_orders


@dataclass(frozen=True)
class RowGenerator:
    """Exact recurrence-row values of one term z^s * f^(p) * f^(q).

    Rows below index s are identically zero (coefficient extraction below
    the z^s shift); otherwise the Cauchy product convolution applies with
    a_t = 0 understood for t < 0.
    """

    s: int
    monomial: QuadMonomial

    def max_index(self, n):
        """Largest prefix index the row at n reads."""
        return n - self.s + self.monomial.max_order

    def value(self, prefix, n):
        """Exact value of row n on the given SequencePrefix."""
        m = n - self.s
        if m < 0:
            return Fraction(0)
        p, q = self.monomial.p, self.monomial.q
        if p == -1:                      # constant term: z^s itself
            return Fraction(1) if m == 0 else Fraction(0)
        nums, den = prefix.scaled()
        if q == -1:                      # linear: weighted single coefficient
            return Fraction(kernel.weight(m, p) * nums[m + p], den)
        return Fraction(kernel.quad_conv(nums, m, p, q), den * den)


def compile_term(s, monomial):
    """Row generator for the term z^s * f^(p) * f^(q)."""
    if s < 0:
        raise ValueError("z-power must be >= 0")
    return RowGenerator(s=s, monomial=monomial)


class QuadEquation:
    """Sum of terms coeff * z^s * f^(p) * f^(q), coefficients exact and
    nonzero, terms sorted by (monomial index, z-power)."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        merged = {}
        monos = {}
        for s, mono, coeff in terms:
            if s < 0:
                raise ValueError("z-power must be >= 0")
            key = (mono.index, s)
            merged[key] = merged.get(key, Fraction(0)) + Fraction(coeff)
            monos[key] = mono
        cleaned = []
        for key in sorted(merged):
            if merged[key] != 0:
                cleaned.append((key[1], monos[key], merged[key]))
        if not cleaned:
            raise ValueError("an equation needs at least one nonzero term")
        self.terms = tuple(cleaned)

    def __eq__(self, other):
        return isinstance(other, QuadEquation) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"QuadEquation({render_text(self, 'ode')!r})"

    @property
    def max_shift(self):
        """max over terms of (max(p, q, 0) - s): row n reads prefix indices
        up to n + max_shift, and row n introduces term n + max_shift when
        extending."""
        return max(t[1].max_order - t[0] for t in self.terms)

    def row_value(self, prefix, n):
        """Exact value of recurrence row n on a prefix (all indices must
        fit: n + max_shift <= prefix.last_index)."""
        total = Fraction(0)
        for s, mono, coeff in self.terms:
            total += coeff * compile_term(s, mono).value(prefix, n)
        return total

    def rescaled(self, lam):
        """Equation satisfied by b_n = a_n * lam^n whenever self is
        satisfied by a_n: each coefficient picks up lam^(s - p - max(q,0))."""
        lam = Fraction(lam)
        if lam == 0:
            raise ValueError("rescale factor must be nonzero")
        out = []
        for s, mono, coeff in self.terms:
            exp = s - mono.p - max(mono.q, 0)
            out.append((s, mono, coeff * lam ** exp))
        return QuadEquation(out)


def equation_to_obj(eq):
    return {"terms": [{"s": s, "p": mono.p, "q": mono.q,
                       "c": format_rational(coeff)}
                      for s, mono, coeff in eq.terms]}


def equation_to_json(eq):
    return json.dumps(equation_to_obj(eq))


def equation_from_obj(obj):
    if not isinstance(obj, dict) or "terms" not in obj:
        raise EquationFormatError('expected an object with a "terms" list')
    if not isinstance(obj["terms"], list) or not obj["terms"]:
        raise EquationFormatError('"terms" must be a nonempty list')
    terms = []
    for pos, item in enumerate(obj["terms"]):
        try:
            s = int(item["s"])
            p = int(item["p"])
            q = int(item["q"])
            coeff = parse_rational(str(item["c"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise EquationFormatError(f"term {pos}: {exc}") from exc
        if s < 0:
            raise EquationFormatError(f"term {pos}: z-power must be >= 0")
        if not (p >= q >= -1) or (p, q) == (-1, -1):
            raise EquationFormatError(
                f"term {pos}: orders must satisfy p >= q >= -1, not both -1")
        terms.append((s, monomial_of_orders(p, q), coeff))
    try:
        return QuadEquation(terms)
    except ValueError as exc:
        raise EquationFormatError(str(exc)) from exc


def equation_from_json(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EquationFormatError(f"invalid JSON: {exc}") from exc
    return equation_from_obj(obj)


# ---------------------------------------------------------------------------
# Rendering: canonical expression trees, with text and LaTeX views.
# Terms render highest (monomial index, z-power) first.


def render_tree(eq, mode):
    """Canonical JSON-able expression tree ('ode' or 'recurrence')."""
    if mode == "ode":
        terms = []
        for s, mono, coeff in reversed(eq.terms):
            orders = [] if mono.p == -1 else (
                [mono.p] if mono.q == -1 else sorted((mono.p, mono.q)))
            terms.append({"coeff": format_rational(coeff),
                          "z_power": s, "orders": orders})
        return {"kind": "ode", "terms": terms, "rhs": "0"}
    if mode == "recurrence":
        terms = []
        for s, mono, coeff in reversed(eq.terms):
            p, q = mono.p, mono.q
            entry = {"coeff": format_rational(coeff)}
            if p == -1:
                entry.update(kind="constant", at=s)
            elif q == -1:
                # coeff * (n-s+1)...(n-s+p) * a(n-s+p)
                entry.update(kind="linear",
                             weight_offsets=list(range(1 - s, p - s + 1)),
                             index_offset=p - s)
            else:
                # coeff * Sum_{k=0..n-s} (k+1)..(k+p) * (n-s-k+1)..(n-s-k+q)
                #         * a(k+p) * a(n-s-k+q)
                entry.update(kind="convolution",
                             upper_offset=-s,
                             k_weight_offsets=list(range(1, p + 1)),
                             k_index_offset=p,
                             n_weight_offsets=list(range(1 - s, q - s + 1)),
                             n_index_offset=q - s)
            terms.append(entry)
        return {"kind": "recurrence", "terms": terms, "rhs": "0"}
    raise ValueError(f"unknown render mode {mode!r}")


def _fmt_shift(var, offset, bare=False):
    """'n', 'n+2', 'n-1' (parenthesized unless bare or offset-free)."""
    if offset == 0:
        body = var
    elif offset > 0:
        body = f"{var}+{offset}"
    else:
        body = f"{var}-{-offset}"
    if bare or offset == 0:
        return body
    return f"({body})"


def _deriv_text(order):
    if order <= 3:
        return "y" + "'" * order
    return f"y^({order})"


def _deriv_latex(order):
    if order <= 3:
        return "y" + "'" * order
    return f"y^{{({order})}}"


def _join_signed(pieces):
    """Combine (sign, body) pairs into 'a - b + c'."""
    out = ""
    for i, (negative, body) in enumerate(pieces):
        if i == 0:
            out = ("-" if negative else "") + body
        else:
            out += (" - " if negative else " + ") + body
    return out


def _coeff_factor(coeff_str, latex=False):
    """(negative, multiplier-prefix) for a coefficient string."""
    negative = coeff_str.startswith("-")
    mag = coeff_str[1:] if negative else coeff_str
    if mag == "1":
        return negative, ""
    if latex and "/" in mag:
        num, den = mag.split("/")
        return negative, f"\\tfrac{{{num}}}{{{den}}}"
    return negative, mag + ("" if latex else "*")


def _ode_factors(term, latex=False):
    parts = []
    z = term["z_power"]
    if z == 1:
        parts.append("z")
    elif z > 1:
        parts.append(f"z^{{{z}}}" if latex else f"z^{z}")
    orders = term["orders"]
    deriv = _deriv_latex if latex else _deriv_text
    if not orders:
        parts.append("1")
    elif len(orders) == 1:
        parts.append(deriv(orders[0]))
    elif orders[0] == orders[1]:
        base = deriv(orders[0])
        if orders[0] == 0:
            parts.append("y^{2}" if latex else "y^2")
        else:
            parts.append(f"({base})^{{2}}" if latex else f"({base})^2")
    else:
        parts.append(deriv(orders[0]))
        parts.append(deriv(orders[1]))
    sep = r"\," if latex else "*"
    return sep.join(parts)


def _weight_text(var, offsets, latex=False):
    factors = []
    for off in offsets:
        body = _fmt_shift(var, off, bare=False)
        if body == var:
            factors.append(var)
        else:
            factors.append(body)
    sep = r"\," if latex else "*"
    return sep.join(factors)


def _seq_ref(var, offset, latex=False):
    inner = _fmt_shift(var, offset, bare=True)
    return f"a({inner})"


def _recurrence_term_body(term, latex=False):
    sep = r"\," if latex else "*"
    kind = term["kind"]
    if kind == "constant":
        return f"[n={term['at']}]"
    if kind == "linear":
        parts = []
        w = _weight_text("n", term["weight_offsets"], latex)
        if w:
            parts.append(w)
        parts.append(_seq_ref("n", term["index_offset"], latex))
        return sep.join(parts)
    # convolution
    parts = []
    wk = _weight_text("k", term["k_weight_offsets"], latex)
    if wk:
        parts.append(wk)
    wn = _weight_text("n-k", term["n_weight_offsets"], latex)
    if wn:
        parts.append(wn)
    parts.append(_seq_ref("k", term["k_index_offset"], latex))
    parts.append(_seq_ref("n-k", term["n_index_offset"], latex))
    body = sep.join(parts)
    upper = _fmt_shift("n", term["upper_offset"], bare=True)
    if latex:
        return f"\\sum_{{k=0}}^{{{upper}}} {body}"
    return f"Sum({body}, k=0..{upper})"


def render_text(eq, mode):
    tree = render_tree(eq, mode)
    pieces = []
    for term in tree["terms"]:
        negative, prefix = _coeff_factor(term["coeff"], latex=False)
        if tree["kind"] == "ode":
            body = _ode_factors(term, latex=False)
        else:
            body = _recurrence_term_body(term, latex=False)
        pieces.append((negative, prefix + body))
    return _join_signed(pieces) + " = 0"


def render_latex(eq, mode):
    tree = render_tree(eq, mode)
    pieces = []
    for term in tree["terms"]:
        negative, prefix = _coeff_factor(term["coeff"], latex=True)
        if tree["kind"] == "ode":
            body = _ode_factors(term, latex=True)
        else:
            body = _recurrence_term_body(term, latex=True)
        pieces.append((negative, prefix + (r"\," if prefix else "") + body))
    return _join_signed(pieces) + " = 0"


def render(eq, mode):
    """All three views of an equation: tree, text, LaTeX."""
    return {"tree": render_tree(eq, mode),
            "text": render_text(eq, mode),
            "latex": render_latex(eq, mode)}
