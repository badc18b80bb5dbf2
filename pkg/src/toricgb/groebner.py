"""Binomial Buchberger engine.

S-polynomials and reductions of monic binomials are again monic binomials
(or zero), so every routine here works on pairs of monomials only.
"""

from __future__ import annotations

from collections import deque
from typing import List, NamedTuple, Optional, Sequence

from .errors import NonHomogeneousInput
from .polycore import (
    Binomial,
    MonomialOrder,
    coprime,
    divides,
    is_homogeneous,
    make_binomial,
    mono_div,
    mono_lcm,
    mono_mul,
)


class SPairWitness(NamedTuple):
    f: Binomial
    g: Binomial
    spoly: Optional[Binomial]
    normal_form: Optional[Binomial]


class GroebnerResult(NamedTuple):
    basis: list
    added: list
    is_input_gb: bool


def s_polynomial(f: Binomial, g: Binomial, order: MonomialOrder) -> Optional[Binomial]:
    lcm = mono_lcm(f.lead, g.lead)
    a = mono_mul(mono_div(lcm, f.lead), f.trail)
    b = mono_mul(mono_div(lcm, g.lead), g.trail)
    return make_binomial(a, b, order)


def _rewrite(mon, basis):
    for g in basis:
        if divides(g.lead, mon):
            return mono_mul(mono_div(mon, g.lead), g.trail)
    return None


def _normal_form(f, basis, order, trace=None):
    if f is None:
        return None
    key = order.key
    a, b = f.lead, f.trail
    while True:
        if a == b:
            return None
        if key(a) < key(b):
            a, b = b, a
        for slot in (0, 1):
            mon = a if slot == 0 else b
            new = _rewrite(mon, basis)
            if new is not None:
                if trace is not None:
                    trace.append((mon, new))
                if slot == 0:
                    a = new
                else:
                    b = new
                break
        else:
            return Binomial(a, b, order)


def normal_form(f: Optional[Binomial], basis: Sequence[Binomial],
                order: MonomialOrder) -> Optional[Binomial]:
    """Fully reduce both monomials of ``f`` modulo ``basis``.

    The first basis element (by list position) whose lead divides a monomial
    is used to rewrite it.
    """
    return _normal_form(f, basis, order)


def _check_homogeneous(gens, order):
    for f in gens:
        if f is None or not is_homogeneous(f, order.weights):
            raise NonHomogeneousInput(f"{f} is not homogeneous for weights {order.weights}")


def buchberger(gens: Sequence[Binomial], order: MonomialOrder) -> GroebnerResult:
    _check_homogeneous(gens, order)
    basis = list(gens)
    added = []
    pairs = deque((i, j) for j in range(len(basis)) for i in range(j))
    while pairs:
        i, j = pairs.popleft()
        f, g = basis[i], basis[j]
        if coprime(f.lead, g.lead):
            continue
        h = _normal_form(s_polynomial(f, g, order), basis, order)
        if h is None:
            continue
        assert is_homogeneous(h, order.weights)
        k = len(basis)
        basis.append(h)
        added.append(h)
        pairs.extend((i, k) for i in range(k))
    return GroebnerResult(basis, added, not added)


def _failing(gens, order):
    _check_homogeneous(gens, order)
    gens = list(gens)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            f, g = gens[i], gens[j]
            if coprime(f.lead, g.lead):
                continue
            s = s_polynomial(f, g, order)
            h = _normal_form(s, gens, order)
            if h is not None:
                yield SPairWitness(f, g, s, h)


def is_groebner(gens: Sequence[Binomial], order: MonomialOrder):
    """Buchberger criterion; returns ``(True, None)`` or ``(False, witness)``.

    Pairs are visited as ``(i, j)`` with ``i < j`` in row-major order, so the
    witness is the first failing pair in that enumeration.
    """
    witness = next(_failing(gens, order), None)
    return witness is None, witness


def failing_pairs(gens: Sequence[Binomial], order: MonomialOrder) -> List[SPairWitness]:
    """Every S-pair of ``gens`` whose normal form is nonzero."""
    return list(_failing(gens, order))


def interreduce(basis: Sequence[Binomial], order: MonomialOrder) -> List[Binomial]:
    """Reduced Groebner basis from a Groebner basis, sorted by descending lead."""
    basis = [f for f in basis if f is not None]
    keep = []
    for i, f in enumerate(basis):
        redundant = any(
            divides(g.lead, f.lead) and (g.lead != f.lead or j < i)
            for j, g in enumerate(basis) if j != i
        )
        if not redundant:
            keep.append(f)
    out = []
    for i, f in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        out.append(_normal_form(f, others, order))
    out.sort(key=lambda f: order.key(f.lead), reverse=True)
    return out
