"""Verification of the closed-form bases against the binomial engine.

Two independent routes decide whether a generating set is a Groebner basis:
the Buchberger criterion, and the standard-monomial test.  The latter
enumerates the monomials outside the initial ideal up to a weighted-degree
bound and looks for two of them with the same weighted degree; such a pair
differs by an element of the toric ideal, which is impossible when the set is
a Groebner basis.  A collision is therefore a proof of failure, while the
absence of one is only evidence up to the bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence

from . import closedform as cf
from .groebner import SPairWitness, buchberger, interreduce, is_groebner
from .polycore import (
    ASC,
    DESC,
    Binomial,
    MonomialOrder,
    divides,
    format_binomial,
    format_monomial,
    weighted_degree,
)
from .semigroup import SemigroupParams, ValidatedSequence, compute_params, validate_input
from .errors import InvalidSequence

BUCHBERGER = "buchberger"
STANDARD_MONOMIALS = "standard-monomials"
BOTH = "both"


class FailureHypotheses(NamedTuple):
    patil_not_gb: bool
    ps_not_gb_desc: bool


@dataclass
class VerificationReport:
    sequence: ValidatedSequence
    order_convention: str
    variant: str
    is_gb: Optional[bool]
    gb_witness: Optional[SPairWitness]
    is_minimal: bool
    is_reduced: bool
    c1: bool
    c2: bool
    engine_match: bool
    standard_monomial_ok: Optional[bool]
    standard_monomial_witness: Optional[tuple]
    degree_bound_used: Optional[int]

    def claims_hold(self) -> bool:
        """True unless some checked Groebner or classification claim failed."""
        if self.is_gb is False or self.standard_monomial_ok is False:
            return False
        if self.order_convention == ASC:
            if not self.engine_match:
                return False
            if self.variant == cf.G and self.is_gb:
                if not self.is_minimal or self.is_reduced != (not self.c1 and not self.c2):
                    return False
        return True

    def to_dict(self) -> dict:
        w = self.gb_witness
        pair = self.standard_monomial_witness
        if self.standard_monomial_ok is None:
            verdict = None
        elif self.standard_monomial_ok:
            verdict = f"consistent up to bound {self.degree_bound_used}"
        else:
            verdict = "refuted"
        return {
            "sequence": list(self.sequence.m),
            "order_convention": self.order_convention,
            "variant": self.variant,
            "is_gb": self.is_gb,
            "gb_witness": None if w is None else {
                "f": format_binomial(w.f),
                "g": format_binomial(w.g),
                "spoly": format_binomial(w.spoly),
                "normal_form": format_binomial(w.normal_form),
            },
            "is_minimal": self.is_minimal,
            "is_reduced": self.is_reduced,
            "c1": self.c1,
            "c2": self.c2,
            "engine_match": self.engine_match,
            "standard_monomial_ok": self.standard_monomial_ok,
            "standard_monomial_witness": None if pair is None else [format_monomial(x) for x in pair],
            "standard_monomial_verdict": verdict,
            "degree_bound_used": self.degree_bound_used,
        }


# ---------- the two Groebner tests ----------

def verify_buchberger(basis: cf.BasisSet):
    ok, witness = is_groebner(basis.binomials, basis.order)
    if witness is not None:
        _check_witness(witness, basis)
    return ok, witness


def _check_witness(witness: SPairWitness, basis: cf.BasisSet):
    h = witness.normal_form
    leads = [f.lead for f in basis.binomials]
    assert weighted_degree(h.lead, basis.seq.m) == weighted_degree(h.trail, basis.seq.m)
    assert not any(divides(l, mon) for l in leads for mon in h.monomials())


def default_degree_bound(fs: Iterable[Binomial], weights: Sequence[int]) -> int:
    """``max(top + 2*m_n, top + second)`` over the element degrees.

    A failing S-pair (f, g) leaves a normal form whose two monomials are
    standard and collide in degree <= deg f + deg g, so ``top + second``
    always reaches a refutation when one exists.
    """
    degrees = sorted((weighted_degree(f.lead, weights) for f in fs), reverse=True)
    top = degrees[0] if degrees else 0
    second = degrees[1] if len(degrees) > 1 else 0
    return max(top + 2 * weights[-1], top + second)


def _levels(leads, nvars):
    """Group leads by their lowest variable index."""
    levels = [[] for _ in range(nvars)]
    for lead in leads:
        support = [j for j, x in enumerate(lead) if x]
        if not support:
            return None  # the unit ideal: nothing is standard
        levels[support[0]].append(lead)
    return levels


def _walk(leads, weights, bound, visit_x0):
    """Depth-first over standard monomials, highest variable outermost.

    At level ``i`` the exponents above ``i`` are fixed and those below are 0,
    so only leads whose lowest variable is ``i`` can start dividing; they cap
    the exponent of ``x_i``.  ``visit_x0(exps, deg, cap)`` receives each
    prefix together with the admissible range ``0..cap`` of the x0 exponent.
    """
    nvars = len(weights)
    levels = _levels(leads, nvars)
    if levels is None:
        return
    exps = [0] * nvars

    def rec(i, deg):
        cap = (bound - deg) // weights[i]
        for lead in levels[i]:
            if lead[i] <= cap and all(lead[j] <= exps[j] for j in range(i + 1, nvars)):
                cap = lead[i] - 1
        if i == 0:
            visit_x0(exps, deg, cap)
            return
        for e in range(cap + 1):
            exps[i] = e
            rec(i - 1, deg + e * weights[i])
        exps[i] = 0

    rec(nvars - 1, 0)


def standard_monomials(leads: Sequence[tuple], weights: Sequence[int], bound: int) -> List[tuple]:
    """Monomials of weighted degree <= bound divisible by no element of ``leads``."""
    out = []

    def visit(exps, deg, cap):
        for e in range(cap + 1):
            out.append((e,) + tuple(exps[1:]))

    _walk(leads, weights, bound, visit)
    return out


def eta_collision(leads, weights, bound):
    """Least weighted degree shared by two standard monomials, with the pair.

    Among the standard monomials of that degree the two lexicographically
    smallest exponent vectors are returned.
    """
    counts = bytearray(bound + 1)
    m0 = weights[0]

    def count(exps, deg, cap):
        for d in range(deg, deg + cap * m0 + 1, m0):
            if counts[d] < 2:
                counts[d] += 1

    _walk(leads, weights, bound, count)
    try:
        target = counts.index(2)
    except ValueError:
        return None
    hits = [mon for mon in standard_monomials(leads, weights, target)
            if weighted_degree(mon, weights) == target]
    l1, l2 = sorted(hits)[:2]
    return l1, l2


def verify_standard_monomials(basis, degree_bound: int, weights=None):
    """``(True, None)`` if weighted degrees of standard monomials are distinct up to
    ``degree_bound``, else ``(False, (l1, l2))`` for the least colliding pair."""
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    if isinstance(basis, cf.BasisSet):
        fs, weights = basis.binomials, basis.seq.m
    else:
        fs = list(basis)
    pair = eta_collision([f.lead for f in fs], weights, degree_bound)
    return pair is None, pair


# ---------- orchestration ----------

def failure_hypotheses(params: SemigroupParams) -> FailureHypotheses:
    P = params
    patil = P.rprime >= P.r and P.mu == 0 and P.w_nonempty
    ps_desc = (P.z >= 1 and P.r < P.rz < P.p and P.lam > 1 and P.w > 0)
    return FailureHypotheses(patil, ps_desc)


def engine_match(seq: ValidatedSequence, params: SemigroupParams, order: MonomialOrder) -> bool:
    g = cf.build_generators(seq, params, cf.G, order)
    ps = cf.build_generators(seq, params, cf.PATIL_SINGH, order)
    from_engine = interreduce(buchberger(ps.binomials, order).basis, order)
    return interreduce(g.binomials, order) == from_engine


def _report(basis, conditions, match, method, degree_bound):
    is_gb = witness = sm_ok = pair = bound = None
    if method in (BUCHBERGER, BOTH):
        is_gb, witness = verify_buchberger(basis)
    if method in (STANDARD_MONOMIALS, BOTH):
        bound = degree_bound
        if bound is None:
            bound = default_degree_bound(basis.binomials, basis.seq.m)
        sm_ok, pair = verify_standard_monomials(basis, bound)
    return VerificationReport(
        sequence=basis.seq,
        order_convention=basis.order.convention,
        variant=basis.variant,
        is_gb=is_gb,
        gb_witness=witness,
        is_minimal=cf.is_minimal_basis(basis),
        is_reduced=cf.is_reduced_basis(basis),
        c1=conditions.c1,
        c2=conditions.c2,
        engine_match=match,
        standard_monomial_ok=sm_ok,
        standard_monomial_witness=pair,
        degree_bound_used=bound,
    )


def verify_variant(seq: ValidatedSequence, convention: str = ASC, variant: str = cf.G,
                   method: str = BOTH, degree_bound: Optional[int] = None) -> VerificationReport:
    params = compute_params(seq)
    order = MonomialOrder(seq.m, convention)
    basis = cf.build_generators(seq, params, variant, order)
    match = engine_match(seq, params, order)
    return _report(basis, cf.check_conditions(params), match, method, degree_bound)


def cross_check(seq: ValidatedSequence, convention: str = ASC,
                degree_bound: Optional[int] = None) -> Dict[str, VerificationReport]:
    """One report per variant, all sharing parameters, conditions and engine_match."""
    params = compute_params(seq)
    order = MonomialOrder(seq.m, convention)
    conditions = cf.check_conditions(params)
    match = engine_match(seq, params, order)
    return {
        variant: _report(cf.build_generators(seq, params, variant, order),
                         conditions, match, BOTH, degree_bound)
        for variant in cf.VARIANTS
    }


# ---------- sweeps ----------

def enumerate_sequences(max_m: int, max_n: int, min_n: int = 2) -> Iterator[ValidatedSequence]:
    """All valid almost arithmetic sequences with every entry <= max_m, sorted."""
    for n in range(min_n, max_n + 1):
        p = n - 1
        for m0 in range(1, max_m + 1):
            for d in range(1, max_m + 1):
                if m0 + p * d > max_m:
                    break
                arith = tuple(m0 + k * d for k in range(p + 1))
                for mn in range(1, max_m + 1):
                    if mn in arith or reduce(math.gcd, arith + (mn,)) != 1:
                        continue
                    try:
                        yield validate_input(arith + (mn,))
                    except InvalidSequence:
                        continue


@dataclass
class InstanceResult:
    sequence: tuple
    checks: int = 0
    violations: List[str] = field(default_factory=list)
    notes: Dict[str, bool] = field(default_factory=dict)

    def expect(self, ok: bool, label: str):
        self.checks += 1
        if not ok:
            self.violations.append(label)


def _coupling(res, basis, label):
    """Standard-monomial verdict at the default bound must agree with Buchberger."""
    is_gb, _ = is_groebner(basis.binomials, basis.order)
    sm_ok, _ = verify_standard_monomials(basis, default_degree_bound(basis.binomials, basis.seq.m))
    if is_gb:
        res.expect(sm_ok, f"{label}: Groebner basis but eta collision among standard monomials")
    else:
        res.expect(not sm_ok, f"{label}: not a Groebner basis but no eta collision up to default bound")
    return is_gb


def check_instance(seq: ValidatedSequence, conventions=(ASC, DESC),
                   standard_monomials_check: bool = True) -> InstanceResult:
    params = compute_params(seq)
    res = InstanceResult(seq.m)
    hyp = failure_hypotheses(params)
    if ASC in conventions:
        order = MonomialOrder(seq.m, ASC)
        bases = {v: cf.build_generators(seq, params, v, order) for v in cf.VARIANTS}
        g, patil, ps = bases[cf.G], bases[cf.PATIL], bases[cf.PATIL_SINGH]
        cond = cf.check_conditions(params)

        g_gb, _ = is_groebner(g.binomials, order)
        res.expect(g_gb, "asc: G fails the Buchberger criterion")
        res.expect(cf.is_minimal_basis(g), "asc: G is not minimal")
        g_reduced = cf.is_reduced_basis(g)
        res.expect(g_reduced == cond.reduced_predicted,
                   "asc: is_reduced(G) disagrees with (not C1 and not C2)")
        res.expect(g_reduced == (not cf.c1_relaxed(params) and not cond.c2),
                   "asc: is_reduced(G) disagrees with (not relaxed C1 and not C2)")
        ps_gb, _ = is_groebner(ps.binomials, order)
        res.expect(ps_gb, "asc: Patil-Singh fails the Buchberger criterion")
        res.expect(engine_match(seq, params, order),
                   "asc: reduced basis from Patil-Singh differs from interreduced G")

        gset, pset, psset = (set(b.binomials) for b in (g, patil, ps))
        res.expect(pset <= gset <= psset, "asc: Patil <= G <= Patil-Singh fails")
        strictly = psset != gset
        res.expect(cf.is_minimal_basis(ps) == (not strictly),
                   "asc: Patil-Singh minimality does not track strict containment of G")
        patil_gb, _ = is_groebner(patil.binomials, order)
        if hyp.patil_not_gb:
            res.expect(not patil_gb, "asc: Patil hypotheses hold but Patil set is a Groebner basis")
        res.notes.update(
            patil_gb=patil_gb, ps_strict=strictly, g_reduced=g_reduced,
            c1=cond.c1, c2=cond.c2, c1_relaxed=cf.c1_relaxed(params),
        )
        if standard_monomials_check:
            for v, b in bases.items():
                _coupling(res, b, f"asc/{v}")
    if DESC in conventions:
        order = MonomialOrder(seq.m, DESC)
        bases = {v: cf.build_generators(seq, params, v, order) for v in cf.VARIANTS}
        ps_gb, _ = is_groebner(bases[cf.PATIL_SINGH].binomials, order)
        if hyp.ps_not_gb_desc:
            res.expect(not ps_gb, "desc: failure hypotheses hold but Patil-Singh is a Groebner basis")
        res.notes.update(ps_desc_gb=ps_gb, ps_desc_hyp=hyp.ps_not_gb_desc)
        if standard_monomials_check:
            for v, b in bases.items():
                _coupling(res, b, f"desc/{v}")
    return res


@dataclass
class SweepSummary:
    max_m: int
    max_n: int
    conventions: tuple
    instances: int = 0
    checks: int = 0
    violations: List[tuple] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "max_m": self.max_m,
            "max_n": self.max_n,
            "orders": list(self.conventions),
            "instances": self.instances,
            "checks": self.checks,
            "violations": [{"sequence": list(s), "claim": c} for s, c in self.violations],
            "counts": dict(sorted(self.counts.items())),
            "ok": self.ok,
        }


def run_sweep(max_m: int, max_n: int, conventions=(ASC, DESC), min_n: int = 2,
              standard_monomials_check: bool = True, progress=None) -> SweepSummary:
    summary = SweepSummary(max_m, max_n, tuple(conventions))
    for seq in enumerate_sequences(max_m, max_n, min_n):
        res = check_instance(seq, conventions, standard_monomials_check)
        summary.instances += 1
        summary.checks += res.checks
        summary.violations.extend((res.sequence, v) for v in res.violations)
        for key, val in res.notes.items():
            if val:
                summary.counts[key] = summary.counts.get(key, 0) + 1
        if progress is not None:
            progress(summary)
    return summary
