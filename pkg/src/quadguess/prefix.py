"""Finite sequence prefixes a_0 .. a_N of exact rationals.

The convention a_t = 0 for t < 0 is applied by consumers, never stored.
Prefixes cache an integer-scaled view (numerators over one common
denominator) for the convolution kernel.
"""

import json
from fractions import Fraction
from math import lcm

from quadguess.errors import PrefixFormatError
from quadguess.exact import format_rational, parse_rational


class SequencePrefix:
    """Immutable list of exact rational terms."""

    __slots__ = ("values", "_scaled")

    def __init__(self, values):
        values = tuple(Fraction(v) for v in values)
        if not values:
            raise ValueError("a prefix needs at least one term")
        self.values = values
        self._scaled = None

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return isinstance(other, SequencePrefix) and self.values == other.values

    def __repr__(self):
        shown = ", ".join(format_rational(v) for v in self.values[:6])
        if len(self.values) > 6:
            shown += ", ..."
        return f"SequencePrefix([{shown}])"

    @property
    def last_index(self):
        return len(self.values) - 1

    def is_zero(self):
        return all(v == 0 for v in self.values)

    def scaled(self):
        """(nums, den): integer numerators over one common denominator."""
        if self._scaled is None:
            den = lcm(*(v.denominator for v in self.values))
            nums = [int(v * den) for v in self.values]
            self._scaled = (nums, den)
        return self._scaled

    def rescaled(self, lam):
        """New prefix with a_n -> a_n / lam^n (lam a nonzero rational)."""
        lam = Fraction(lam)
        if lam == 0:
            raise ValueError("rescale factor must be nonzero")
        scale = Fraction(1)
        out = []
        for v in self.values:
            out.append(v / scale)
            scale *= lam
        return SequencePrefix(out)


def parse_prefix_text(text, source="<input>"):
    """Parse a prefix from text: either a JSON array of rational strings or
    one rational per line (blank lines skipped)."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        try:
            items = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PrefixFormatError(f"{source}: invalid JSON: {exc}") from exc
        if not isinstance(items, list):
            raise PrefixFormatError(f"{source}: expected a JSON array")
        values = []
        for pos, item in enumerate(items):
            try:
                values.append(parse_rational(str(item)))
            except (ValueError, ZeroDivisionError) as exc:
                raise PrefixFormatError(
                    f"{source}: entry {pos}: malformed rational {item!r}"
                ) from exc
        if not values:
            raise PrefixFormatError(f"{source}: empty sequence")
        return SequencePrefix(values)

    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(parse_rational(line))
        except (ValueError, ZeroDivisionError) as exc:
            raise PrefixFormatError(f"malformed rational {line!r}",
                                    line=lineno) from exc
    if not values:
        raise PrefixFormatError(f"{source}: empty sequence")
    return SequencePrefix(values)


def load_prefix(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_prefix_text(fh.read(), source=str(path))


def dump_prefix(prefix):
    """One rational per line, the on-disk text format."""
    return "\n".join(format_rational(v) for v in prefix.values) + "\n"
