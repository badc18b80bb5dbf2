"""Exponent-vector monomials, monic binomials and weighted grevlex orders.

Monomials are plain tuples of nonnegative exponents indexed by ``x0..xn``.
A binomial ``lead - trail`` always carries coefficients +1 and -1, so no
coefficient arithmetic appears anywhere; the zero binomial is ``None``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Sequence

ASC = "asc"    # x0 < x1 < ... < xn
DESC = "desc"  # x0 > x1 > ... > xn

Monomial = tuple


def weighted_degree(mon: Monomial, weights: Sequence[int]) -> int:
    if len(mon) != len(weights):
        raise ValueError("dimension mismatch")
    return sum(a * m for a, m in zip(mon, weights))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def variable(i: int, n: int, power: int = 1) -> Monomial:
    e = [0] * (n + 1)
    e[i] = power
    return tuple(e)


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted grevlex: weighted degree first, then a reverse-lex tie-break.

    Ascending (x0 < ... < xn): the smallest index where the exponents differ
    decides, and the smaller exponent there wins.  Descending
    (x0 > ... > xn): the largest index in 1..n where they differ decides, the
    smaller exponent winning.
    """

    weights: tuple
    convention: str = ASC

    def __post_init__(self):
        if self.convention not in (ASC, DESC):
            raise ValueError(f"unknown convention {self.convention!r}")
        object.__setattr__(self, "weights", tuple(self.weights))

    def key(self, mon: Monomial) -> tuple:
        """Sort key: ``a > b`` iff ``key(a) > key(b)``."""
        deg = sum(a * m for a, m in zip(mon, self.weights))
        if self.convention == ASC:
            return (deg,) + tuple(-a for a in mon)
        return (deg,) + tuple(-a for a in reversed(mon[1:]))


def compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class Binomial:
    lead: Monomial
    trail: Monomial
    order: MonomialOrder = field(compare=False, repr=False)

    def monomials(self):
        return (self.lead, self.trail)

    def __str__(self):
        return format_binomial(self)


def make_binomial(a: Monomial, b: Monomial, order: MonomialOrder) -> Optional[Binomial]:
    """The binomial ``±(a - b)`` with its larger monomial leading; None if ``a == b``."""
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    a, b = tuple(a), tuple(b)
    if a == b:
        return None
    if order.key(a) > order.key(b):
        return Binomial(a, b, order)
    return Binomial(b, a, order)


def is_homogeneous(f: Binomial, weights: Sequence[int]) -> bool:
    return weighted_degree(f.lead, weights) == weighted_degree(f.trail, weights)


# ---------- text format ----------

def format_monomial(mon: Monomial) -> str:
    parts = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(mon) if e]
    return "*".join(parts) if parts else "1"


def format_binomial(f: Optional[Binomial]) -> str:
    if f is None:
        return "0"
    return f"{format_monomial(f.lead)} - {format_monomial(f.trail)}"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    text = text.strip()
    e = [0] * (n + 1)
    if text == "1":
        return tuple(e)
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(match.group(1))
        if i > n:
            raise ValueError(f"variable x{i} out of range for n={n}")
        e[i] += int(match.group(2) or 1)
    return tuple(e)


def parse_binomial(text: str, n: int, order: MonomialOrder) -> Optional[Binomial]:
    if text.strip() == "0":
        return None
    left, sep, right = text.partition(" - ")
    if not sep:
        raise ValueError(f"expected 'lead - trail', got {text!r}")
    return make_binomial(parse_monomial(left, n), parse_monomial(right, n), order)
