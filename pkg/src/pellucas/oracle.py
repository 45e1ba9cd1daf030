"""Naive reference implementations, kept independent of the fast paths.

These exist so property tests and the CLI --verify flag can cross-check
results by direct enumeration.  They share no code with the modules they
validate; speed is not a goal, but the big enumerations use numpy with an
exact integer confirmation of every candidate.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .lucas import LucasParams, SeqTerm
from .pell import MembershipVerdict, PellSolution


def naive_lucas(params: LucasParams, n: int) -> SeqTerm:
    """(U_n, V_n) by the two-term recurrence."""
    if n < 0:
        raise ValueError("index must be non-negative")
    p, q = params.p, params.q
    u0, u1 = 0, 1
    v0, v1 = 2, p
    for _ in range(n):
        u0, u1 = u1, p * u1 - q * u0
        v0, v1 = v1, p * v1 - q * v0
    return SeqTerm(n, u0, v0)


def _square_roots_of(values: np.ndarray) -> np.ndarray:
    """Float-filtered candidate roots; callers must confirm exactly."""
    with np.errstate(invalid="ignore"):
        r = np.rint(np.sqrt(values.astype(np.float64))).astype(np.int64)
    return r


def enumerate_pell(d: int, sign: int, v_bound: int) -> list[PellSolution]:
    """All solutions of u^2 - d v^2 = sign with 0 <= v <= v_bound, u >= 0.

    Direct check of d*v^2 + sign for every v, numpy-filtered in chunks and
    confirmed in exact integer arithmetic.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    out = []
    chunk = 1 << 20
    for lo in range(0, v_bound + 1, chunk):
        v = np.arange(lo, min(lo + chunk, v_bound + 1), dtype=np.int64)
        t = d * v * v + sign
        r = _square_roots_of(t)
        near = np.abs(r * r - t) <= 2
        for vv in v[near & (t >= 0)].tolist():
            usq = d * vv * vv + sign
            u = isqrt(usq)
            if u * u == usq:
                out.append(PellSolution(u, vv, sign))
    return out


def naive_membership(value: int, flavor: str, param: int,
                     term_bound: int = 10 ** 6) -> MembershipVerdict:
    """Membership by generating the sequence until it passes `value`."""
    if value < 1:
        raise ValueError("value must be >= 1")
    if flavor == "a":
        step = lambda prev, cur: param * cur + prev
    elif flavor == "b":
        step = lambda prev, cur: param * cur - prev
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    prev, cur = 0, 1
    k = 1
    while k <= term_bound:
        if cur == value:
            parity = ("even" if k % 2 == 0 else "odd") if flavor == "a" else None
            return MembershipVerdict(True, k, parity, None)
        if cur > value:
            break
        prev, cur = cur, step(prev, cur)
        k += 1
    return MembershipVerdict(False)


def membership_set(flavor: str, param: int, bound: int) -> dict[int, int]:
    """{term value: smallest index k >= 1} for terms <= bound."""
    out: dict[int, int] = {}
    prev, cur = 0, 1
    k = 1
    while cur <= bound:
        out.setdefault(cur, k)
        if flavor == "a":
            prev, cur = cur, param * cur + prev
        else:
            prev, cur = cur, param * cur - prev
        k += 1
    return out


def whitney_member_mask(d: int, shift: int, bound: int) -> np.ndarray:
    """Boolean mask over n = 0..bound of `d*n^2 + shift is a perfect square`.

    Vectorized with exact confirmation; index 0 is never a member.
    """
    mask = np.zeros(bound + 1, dtype=bool)
    chunk = 1 << 20
    for lo in range(1, bound + 1, chunk):
        n = np.arange(lo, min(lo + chunk, bound + 1), dtype=np.int64)
        t = d * n * n + shift
        r = _square_roots_of(t)
        near = np.flatnonzero((np.abs(r * r - t) <= 2) & (t >= 0))
        for i in near.tolist():
            nn = int(n[i])
            tt = d * nn * nn + shift
            rr = isqrt(tt)
            if rr * rr == tt:
                mask[nn] = True
    return mask


def enumerate_disc_group(lattice) -> tuple[tuple[int, int], list[tuple[Fraction, Fraction]]]:
    """Invariant factors and coset representatives of the discriminant group.

    The group is (dual lattice)/(lattice); representatives are given in the
    lattice basis as fractional coordinate pairs in [0, 1).  For a 2x2 Gram
    matrix the Smith normal form is diag(g, |det|/g) with g the gcd of the
    entries.
    """
    q = lattice.gram
    det = q.det
    if det == 0:
        raise ValueError("degenerate lattice has no discriminant group")
    order = abs(det)
    if order > 10 ** 4:
        raise ValueError("discriminant group too large to enumerate")
    g = gcd(gcd(q.e00, q.e01), q.e11)
    invariants = (g, order // g)
    # Dual lattice = Q^{-1} Z^2; reduce each generator combination mod Z^2.
    adj = q.adjugate
    seen = set()
    reps = []
    for i in range(order):
        for j in range(order):
            x = Fraction(adj.e00 * i + adj.e01 * j, det) % 1
            y = Fraction(adj.e10 * i + adj.e11 * j, det) % 1
            if (x, y) not in seen:
                seen.add((x, y))
                reps.append((x, y))
    assert len(reps) == order
    return invariants, reps


def disc_action_direct(lattice, g) -> str:
    """Action of g on the discriminant group by checking every coset rep."""
    _, reps = enumerate_disc_group(lattice)
    for eps, tag in ((1, "+id"), (-1, "-id")):
        ok = True
        for x, y in reps:
            gx = g.e00 * x + g.e01 * y - eps * x
            gy = g.e10 * x + g.e11 * y - eps * y
            if gx.denominator != 1 or gy.denominator != 1:
                ok = False
                break
        if ok:
            return tag
    return "other"
