"""Exact solver for the Pell equations x^2 - d y^2 = +-4.

The fundamental solution comes from the continued fraction of sqrt(.):
the classical convergent scan yields the fundamental unit of Z[sqrt(n)],
and a half-unit lift (possible only for d = 5 mod 8) recovers odd
solutions of the +-4 form.  Everything is integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

from .lucas import is_square


def isqrt_exact(n: int) -> Optional[int]:
    """The integer r with r*r == n, or None when n is not a perfect square."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


@dataclass(frozen=True)
class PellProblem:
    """The equation u^2 - d v^2 = sign, sign in {+4, -4}."""

    d: int
    sign: int = 4

    def __post_init__(self):
        if self.d <= 0:
            raise ValueError("d must be positive")
        if self.sign not in (4, -4):
            raise ValueError("sign must be +4 or -4")


@dataclass(frozen=True)
class PellSolution:
    u: int
    v: int
    sign: int

    def check(self, d: int) -> bool:
        return self.u * self.u - d * self.v * self.v == self.sign


@dataclass(frozen=True)
class MembershipVerdict:
    is_member: bool
    index: Optional[int] = None
    parity: Optional[str] = None
    square_witness: Optional[int] = None


def compose(d: int, s1: PellSolution, s2: PellSolution) -> PellSolution:
    """Product of (u1 + v1 sqrt(d))/2 and (u2 + v2 sqrt(d))/2 as a solution.

    Both numerators are always even for solutions of the +-4 equations.
    """
    un = s1.u * s2.u + d * s1.v * s2.v
    vn = s1.u * s2.v + s2.u * s1.v
    assert un % 2 == 0 and vn % 2 == 0, "half-integer composition parity broken"
    return PellSolution(un // 2, vn // 2, s1.sign * s2.sign // 4)


def _cf_unit(n: int) -> tuple[int, int, int]:
    """Fundamental solution (x, y, norm) of x^2 - n y^2 = +-1, n nonsquare > 1.

    Scans the continued-fraction convergents of sqrt(n); the first convergent
    with x^2 - n y^2 in {1, -1} is the fundamental unit of Z[sqrt(n)].
    """
    a0 = isqrt(n)
    m, den, a = 0, 1, a0
    pprev, qprev = 1, 0
    p, q = a0, 1
    while True:
        norm = p * p - n * q * q
        if norm in (1, -1):
            return p, q, norm
        m = den * a - m
        den = (n - m * m) // den
        a = (a0 + m) // den
        pprev, p = p, a * p + pprev
        qprev, q = q, a * q + qprev


def _icbrt(n: int) -> int:
    """floor of the real cube root of n >= 0."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    return x


def _fundamental_unit(d: int) -> tuple[int, int, int]:
    """Smallest (u, v, norm) with u^2 - d v^2 = 4*norm, u, v > 0; d nonsquare.

    This is the fundamental unit (u + v sqrt(d))/2 of the quadratic order of
    discriminant d when d = 0, 1 (mod 4), and the scaled unit of Z[sqrt(d)]
    otherwise (where u and v are forced to be even).
    """
    if d % 4 == 0:
        x, y, norm = _cf_unit(d // 4)
        return 2 * x, y, norm
    x, y, norm = _cf_unit(d)
    if d % 8 == 5:
        # Odd solutions exist only for d = 5 (mod 8); if (u+v sqrt(d))/2 is a
        # unit with u, v odd, its cube is x + y sqrt(d), so u^3 - 3*norm*u = 2x.
        target = 2 * x
        u0 = _icbrt(target)
        for u in range(max(1, u0 - 2), u0 + 4):
            if u ** 3 - 3 * norm * u == target:
                vsq, rem = divmod(u * u - 4 * norm, d)
                v = isqrt_exact(vsq) if rem == 0 else None
                if v:
                    return u, v, norm
    return 2 * x, 2 * y, norm


def fundamental_solution(problem: PellProblem) -> Optional[PellSolution]:
    """Minimal positive solution, or None when the equation has none.

    For square d and sign +4 the only solution is (2, 0).
    """
    d, sign = problem.d, problem.sign
    s = isqrt_exact(d)
    if s is not None:
        if sign == 4:
            return PellSolution(2, 0, 4)
        # u^2 - (sv)^2 = -4 factors as (sv-u)(sv+u) = 4: needs s | 2.
        if d == 1:
            return PellSolution(0, 2, -4)
        if d == 4:
            return PellSolution(0, 1, -4)
        return None
    u, v, norm = _fundamental_unit(d)
    unit = PellSolution(u, v, 4 * norm)
    if sign == -4:
        return unit if norm == -1 else None
    return unit if norm == 1 else compose(d, unit, unit)


def solutions_iter(problem: PellProblem, count: int) -> list[PellSolution]:
    """First `count` positive solutions in increasing u order.

    +4: powers of the fundamental +4 solution; -4: odd powers of the
    fundamental -4 solution.  Raises ValueError when no solution exists.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    d = problem.d
    fund = fundamental_solution(problem)
    if fund is None:
        raise ValueError(f"x^2 - {d} y^2 = {problem.sign} has no solution")
    if isqrt_exact(d) is not None:
        return [fund]
    out = [fund]
    if problem.sign == 4:
        step = fund
    else:
        step = fundamental_solution(PellProblem(d, 4))
        assert step is not None
    cur = fund
    for _ in range(count - 1):
        cur = compose(d, cur, step)
        assert cur.check(d)
        out.append(cur)
    return out


def _recover_index(value: int, seq) -> Optional[int]:
    """Smallest k >= 1 with seq(k) == value, scanning until terms pass value."""
    k = 1
    while True:
        t = seq(k)
        if t == value:
            return k
        if t > value:
            return None
        k += 1


def is_gen_fib_a(n: int, a: int) -> MembershipVerdict:
    """Membership of n in {a_k}: (a^2+4)n^2 + 4 or - 4 must be a square.

    The +4 branch corresponds to even k, the -4 branch to odd k.  When both
    branches succeed (n = 1, a = 1) the parity of the smallest index wins.
    """
    if n < 1 or a < 1:
        raise ValueError("n and a must be >= 1")
    from .lucas import gen_fib_a
    d = a * a + 4
    plus = isqrt_exact(d * n * n + 4)
    minus = isqrt_exact(d * n * n - 4)
    if plus is None and minus is None:
        return MembershipVerdict(False)
    index = _recover_index(n, lambda k: gen_fib_a(a, k))
    assert index is not None, "criterion passed but value not in sequence"
    if index % 2 == 0:
        return MembershipVerdict(True, index, "even", plus)
    return MembershipVerdict(True, index, "odd", minus if minus is not None else plus)


def is_gen_fib_b(n: int, b: int) -> MembershipVerdict:
    """Membership of n in {b_k}: (b^2-4)n^2 + 4 must be a square."""
    if n < 1 or b < 4:
        raise ValueError("need n >= 1 and b >= 4")
    from .lucas import gen_fib_b
    witness = isqrt_exact((b * b - 4) * n * n + 4)
    if witness is None:
        return MembershipVerdict(False)
    index = _recover_index(n, lambda k: gen_fib_b(b, k))
    assert index is not None, "criterion passed but value not in sequence"
    return MembershipVerdict(True, index, None, witness)
