"""Numerical semigroup arithmetic for almost arithmetic sequences.

A sequence ``m_0 < m_1 < ... < m_p`` in arithmetic progression followed by an
arbitrary ``m_n`` (``p = n - 1``) generates the semigroup ``Gamma``; the
arithmetic part alone generates ``Gamma'``.  This module validates such
sequences and extracts the structural parameters ``u, v, w, z, lambda, mu,
nu`` together with everything derived from them.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence

from .errors import (
    GcdNotOne,
    InvalidSequence,
    InternalInconsistency,
    NonUniqueRepresentation,
    NotAMember,
    NotArithmetic,
    NotMinimallyGenerated,
    TooShort,
)

SEARCH_CAP = 10**6

Interval = tuple  # (lo, hi); lo > hi encodes the empty interval


@dataclass(frozen=True)
class ValidatedSequence:
    m: tuple

    @property
    def n(self) -> int:
        return len(self.m) - 1

    @property
    def p(self) -> int:
        return len(self.m) - 2

    @property
    def arithmetic_part(self) -> tuple:
        return self.m[:-1]

    def g(self, t: int) -> int:
        return decompose_index(t, self.p, self.m)[2]


@dataclass(frozen=True)
class SemigroupParams:
    p: int
    u: int
    v: int  # upsilon
    w: int
    z: int
    lam: int
    mu: int
    nu: int
    q: int
    r: int
    qprime: int
    rprime: int
    qz: Optional[int]  # None when z == 0
    rz: Optional[int]
    epsilon: Optional[int]
    w_nonempty: bool
    interval_I: Interval
    interval_J: Interval

    @property
    def J_empty(self) -> bool:
        return interval_empty(self.interval_J)


def interval_empty(iv: Interval) -> bool:
    return iv[0] > iv[1]


def interval_range(iv: Interval) -> range:
    return range(iv[0], iv[1] + 1)


# ---------- membership ----------

_tables: dict = {}
_tables_lock = threading.Lock()
_MAX_TABLES = 512


def _reachable(gens: tuple, limit: int) -> bytearray:
    """Boolean table ``t`` with ``t[x] == 1`` iff ``x`` is in the semigroup, x <= limit."""
    with _tables_lock:
        table = _tables.get(gens)
        if table is not None and len(table) > limit:
            return table
    size = max(limit + 1, 2 * len(table) if table is not None else 0, 64)
    table = bytearray(size)
    table[0] = 1
    for g in gens:
        for x in range(g, size):
            if table[x - g]:
                table[x] = 1
    with _tables_lock:
        if len(_tables) >= _MAX_TABLES:
            _tables.clear()
        _tables[gens] = table
    return table


def is_member(gamma: int, gens: Sequence[int]) -> bool:
    if gamma < 0:
        return False
    if gamma == 0:
        return True
    key = tuple(sorted(set(gens)))
    if not key or key[0] <= 0:
        raise ValueError("generators must be positive")
    return bool(_reachable(key, gamma)[gamma])


# ---------- validation ----------

def validate_input(m: Sequence[int]) -> ValidatedSequence:
    m = tuple(int(x) for x in m)
    if len(m) < 3:
        raise TooShort(f"need at least 3 entries (n >= 2), got {len(m)}")
    if any(x <= 0 for x in m):
        raise InvalidSequence("all entries must be positive integers")
    arith = m[:-1]
    d = arith[1] - arith[0]
    if d < 1 or any(b - a != d for a, b in zip(arith, arith[1:])):
        raise NotArithmetic(
            f"m0..m{len(arith) - 1} = {arith} is not a strictly increasing arithmetic progression"
        )
    if reduce(math.gcd, m) != 1:
        raise GcdNotOne(f"gcd{m} = {reduce(math.gcd, m)}")
    for i, x in enumerate(m):
        others = m[:i] + m[i + 1:]
        if x in others or is_member(x, others):
            raise NotMinimallyGenerated(i, x)
    return ValidatedSequence(m)


# ---------- the g_t decomposition ----------

def decompose_index(t: int, p: int, m: Sequence[int] = None):
    """Write ``t = q_t*p + r_t`` with ``r_t`` in ``[1, p]``.

    Returns ``(q_t, r_t, g_t)`` with ``g_t = q_t*m_p + m_{r_t}``; ``g_t`` is
    None when ``m`` is not supplied.  ``t = 0`` gives ``(-1, p, 0)``.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    q_t, r_t = divmod(t - 1, p)
    r_t += 1
    if m is None:
        return q_t, r_t, None
    return q_t, r_t, q_t * m[p] + m[r_t]


# ---------- parameters ----------

def compute_params(seq: ValidatedSequence) -> SemigroupParams:
    m, p, n = seq.m, seq.p, seq.n
    m0, mn = m[0], m[n]
    gens = m
    arith = seq.arithmetic_part
    g = seq.g

    u = next((t for t in range(1, SEARCH_CAP) if is_member(g(t) - m0, gens)), None)
    if u is None:
        raise InternalInconsistency("u not found within the search cap")
    v = next((b for b in range(1, SEARCH_CAP) if is_member(b * mn, arith)), None)
    if v is None:
        raise InternalInconsistency("v not found within the search cap")

    q, r, g_u = decompose_index(u, p, m)

    # (i) g_u = lam*m0 + w*mn, lam >= 1, 0 <= w < v
    sols = [
        (w, (g_u - w * mn) // m0)
        for w in range(v)
        if g_u - w * mn >= m0 and (g_u - w * mn) % m0 == 0
    ]
    if len(sols) != 1:
        raise InternalInconsistency(f"g_u = lam*m0 + w*mn has {len(sols)} solutions")
    w, lam = sols[0]

    # (ii) v*mn = mu*m0 + g_z, mu >= 0, 0 <= z < u
    sols = [
        (z, (v * mn - g(z)) // m0)
        for z in range(u)
        if v * mn - g(z) >= 0 and (v * mn - g(z)) % m0 == 0
    ]
    if len(sols) != 1:
        raise InternalInconsistency(f"v*mn = mu*m0 + g_z has {len(sols)} solutions")
    z, mu = sols[0]

    qprime, rprime, g_uz = decompose_index(u - z, p, m)

    # (iii) g_{u-z} + (v-w)*mn = nu*m0
    nu, rem = divmod(g_uz + (v - w) * mn, m0)
    expected_nu = lam + mu + 1 if rprime < r else lam + mu
    if rem or nu < 2 or nu != expected_nu:
        raise InternalInconsistency(
            f"g_(u-z) + (v-w)*mn = {g_uz + (v - w) * mn} is not {expected_nu}*m0"
        )

    if z >= 1:
        qz, rz, _ = decompose_index(z, p)
        epsilon = 0 if r > rz else 1
        if qprime != q - qz - epsilon or rprime != epsilon * p + r - rz:
            raise InternalInconsistency("q', r' disagree with q - qz - eps, eps*p + r - rz")
    else:
        qz = rz = epsilon = None

    if u <= p or q < 1:
        raise InternalInconsistency(f"u={u} must exceed p={p}")

    w_nonempty = z >= 1 and w >= 1
    if mu != 0 or not w_nonempty:
        interval_I = (0, p - r)
    else:
        interval_I = (max(rz - r + 1, 0), p - r)
    interval_J = (0, min(z - 1, p - rprime)) if w_nonempty else (0, -1)

    return SemigroupParams(
        p=p, u=u, v=v, w=w, z=z, lam=lam, mu=mu, nu=nu, q=q, r=r,
        qprime=qprime, rprime=rprime, qz=qz, rz=rz, epsilon=epsilon,
        w_nonempty=w_nonempty, interval_I=interval_I, interval_J=interval_J,
    )


def apery_set(seq: ValidatedSequence) -> set:
    """Least element of the semigroup in each residue class modulo ``m0``."""
    m0 = seq.m[0]
    bound = m0 * max(seq.m)
    table = _reachable(tuple(sorted(seq.m)), bound)
    least = {}
    for x in range(bound + 1):
        if table[x] and x % m0 not in least:
            least[x % m0] = x
            if len(least) == m0:
                break
    if len(least) != m0:
        raise InternalInconsistency("Apery set incomplete below the search bound")
    return set(least.values())


def representation_domain(params: SemigroupParams):
    """The index pairs ``(s, b)`` of ``V \\ W``."""
    u, v, w, z = params.u, params.v, params.w, params.z
    return [
        (s, b)
        for s in range(u)
        for b in range(v)
        if not (u - z <= s and v - w <= b)
    ]


def unique_representation(gamma: int, params: SemigroupParams, seq: ValidatedSequence):
    """Return the unique ``(a, s, b)`` with ``gamma = a*m0 + g_s + b*mn``."""
    if not is_member(gamma, seq.m):
        raise NotAMember(f"{gamma} is not in the semigroup generated by {seq.m}")
    m0, mn = seq.m[0], seq.m[-1]
    found = []
    for s, b in representation_domain(params):
        rest = gamma - seq.g(s) - b * mn
        if rest >= 0 and rest % m0 == 0:
            found.append((rest // m0, s, b))
    if len(found) > 1:
        raise NonUniqueRepresentation(f"{gamma} has representations {found}")
    if not found:
        raise InternalInconsistency(f"{gamma} is a member but has no representation")
    return found[0]
