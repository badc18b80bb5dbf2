"""Explicit generating sets of the toric ideal and their classification.

Three index regimes share one constructor:

* ``g``            phi_i for i in [0, p-r], psi_j for j in J
* ``patil``        phi_i for i in I,        psi_j for j in J
* ``patil-singh``  phi_i for i in [0, p-r], psi_j for j in [0, p-r']

Each also contains theta and every xi_{i,j} with 1 <= i <= j <= p-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

from .errors import InternalInconsistency
from .polycore import (
    ASC,
    Binomial,
    MonomialOrder,
    divides,
    is_homogeneous,
    make_binomial,
)
from .semigroup import SemigroupParams, ValidatedSequence, interval_range

G = "g"
PATIL = "patil"
PATIL_SINGH = "patil-singh"
VARIANTS = (G, PATIL, PATIL_SINGH)


class GeneratorTag(NamedTuple):
    kind: str  # "xi" | "phi" | "psi" | "theta"
    indices: tuple = ()

    def __str__(self):
        if not self.indices:
            return self.kind
        return f"{self.kind}({','.join(map(str, self.indices))})"


@dataclass(frozen=True)
class BasisSet:
    variant: str
    elements: tuple  # of (GeneratorTag, Binomial)
    params: SemigroupParams
    order: MonomialOrder
    seq: ValidatedSequence

    @property
    def binomials(self) -> List[Binomial]:
        return [f for _, f in self.elements]

    def tags(self, kind=None) -> List[GeneratorTag]:
        return [t for t, _ in self.elements if kind is None or t.kind == kind]


class ConditionReport(NamedTuple):
    c1: bool
    c2: bool
    reduced_predicted: bool


def _mono(n, *factors):
    """Product of ``(index, power)`` factors as an exponent tuple."""
    e = [0] * (n + 1)
    for i, k in factors:
        e[i] += k
    if any(x < 0 for x in e):
        raise InternalInconsistency(f"negative exponent in {e}")
    return tuple(e)


def xi(i: int, j: int, p: int, n: int) -> Tuple[tuple, tuple]:
    if i + j <= p:
        return _mono(n, (i, 1), (j, 1)), _mono(n, (0, 1), (i + j, 1))
    return _mono(n, (i, 1), (j, 1)), _mono(n, (i + j - p, 1), (p, 1))


def phi(i: int, params: SemigroupParams, n: int):
    P = params
    return (_mono(n, (P.r + i, 1), (P.p, P.q)),
            _mono(n, (0, P.lam - 1), (i, 1), (n, P.w)))


def psi(j: int, params: SemigroupParams, n: int):
    P = params
    return (_mono(n, (P.rprime + j, 1), (P.p, P.qprime), (n, P.v - P.w)),
            _mono(n, (0, P.nu - 1), (j, 1)))


def theta(params: SemigroupParams, n: int):
    """``x_n^v - x_0^mu * x_{rz} * x_p^{qz}``; the second factor is 1 when z = 0."""
    P = params
    if P.z == 0:
        return _mono(n, (n, P.v)), _mono(n, (0, P.mu))
    return _mono(n, (n, P.v)), _mono(n, (0, P.mu), (P.rz, 1), (P.p, P.qz))


def theta_original(params: SemigroupParams, n: int):
    """theta written with r', q' instead of rz, qz."""
    P = params
    if P.rprime < P.r:
        return (_mono(n, (n, P.v)),
                _mono(n, (0, P.mu), (P.r - P.rprime, 1), (P.p, P.q - P.qprime)))
    return (_mono(n, (n, P.v)),
            _mono(n, (0, P.mu), (P.p + P.r - P.rprime, 1), (P.p, P.q - P.qprime - 1)))


def _index_sets(variant, params):
    p = params.p
    full_phi = range(0, p - params.r + 1)
    if variant == G:
        return full_phi, interval_range(params.interval_J)
    if variant == PATIL:
        return interval_range(params.interval_I), interval_range(params.interval_J)
    if variant == PATIL_SINGH:
        return full_phi, range(0, p - params.rprime + 1)
    raise ValueError(f"unknown variant {variant!r}")


def generator_pairs(seq: ValidatedSequence, params: SemigroupParams, variant: str):
    """``(tag, underlined monomial, other monomial)`` for every element.

    Listing order is theta, the xi_{i,j} (lexicographic in (i, j)), the phi_i
    and the psi_j.
    """
    n, p = seq.n, seq.p
    phi_idx, psi_idx = _index_sets(variant, params)
    out = [(GeneratorTag("theta"),) + theta(params, n)]
    for i in range(1, p):
        for j in range(i, p):
            out.append((GeneratorTag("xi", (i, j)),) + xi(i, j, p, n))
    for i in phi_idx:
        out.append((GeneratorTag("phi", (i,)),) + phi(i, params, n))
    for j in psi_idx:
        out.append((GeneratorTag("psi", (j,)),) + psi(j, params, n))
    return out


def build_generators(seq: ValidatedSequence, params: SemigroupParams, variant: str,
                     order: MonomialOrder) -> BasisSet:
    if tuple(order.weights) != seq.m:
        raise ValueError("order weights must be the sequence itself")
    elements = []
    for tag, a, b in generator_pairs(seq, params, variant):
        f = make_binomial(a, b, order)
        if f is None or not is_homogeneous(f, seq.m):
            raise InternalInconsistency(f"{tag} = {a} - {b} is not a homogeneous binomial")
        elements.append((tag, f))
    return BasisSet(variant, tuple(elements), params, order, seq)


def ascending_order(seq: ValidatedSequence) -> MonomialOrder:
    return MonomialOrder(seq.m, ASC)


def check_conditions(params: SemigroupParams) -> ConditionReport:
    P = params
    c1 = (not P.J_empty and P.qprime == 0 and P.v - P.w <= P.w
          and P.lam == 1 and P.rprime <= P.p - P.r)
    c2 = P.q == 1 and P.r <= P.p - 2
    return ConditionReport(c1, c2, not c1 and not c2)


def c1_relaxed(params: SemigroupParams) -> bool:
    """C1 without the ``lambda == 1`` clause.

    No lead of G involves x0, so the factor x0^(lambda-1) of SM(phi_i) never
    blocks divisibility by LM(psi_j); dropping the clause gives the exact
    test for SM(phi_{r'}) lying in the ideal of the psi leads.
    """
    P = params
    return (not P.J_empty and P.qprime == 0 and P.v - P.w <= P.w
            and P.rprime <= P.p - P.r)


def _others_divide(mon, leads, skip):
    return any(divides(lead, mon) for k, lead in enumerate(leads) if k != skip)


def is_minimal_binomials(fs) -> bool:
    leads = [f.lead for f in fs]
    return not any(_others_divide(lead, leads, k) for k, lead in enumerate(leads))


def is_reduced_binomials(fs) -> bool:
    leads = [f.lead for f in fs]
    return not any(
        _others_divide(f.lead, leads, k) or _others_divide(f.trail, leads, k)
        for k, f in enumerate(fs)
    )


def is_minimal_basis(basis: BasisSet) -> bool:
    # leading coefficients are 1 by construction, so only divisibility is checked
    return is_minimal_binomials(basis.binomials)


def is_reduced_basis(basis: BasisSet) -> bool:
    return is_reduced_binomials(basis.binomials)


def j_closed_form(params: SemigroupParams):
    """J rewritten through qz and epsilon; only meaningful when W is nonempty."""
    if params.qz > 0 or params.epsilon > 0:
        return (0, params.p - params.rprime)
    return (0, params.rz - 1)

