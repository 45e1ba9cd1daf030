"""The three-way correspondence: generalized Fibonacci numbers, Pell
y-solutions, and lattice actions of infinite-order K3 automorphisms.

A "pair (surface, automorphism)" is represented purely by its arithmetic
shadow: the lattice, the 2x2 action matrix, its trace, and the sign of the
action on the 2-form.  No geometry is materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .lattice import (IsometryAction, Lattice2, disc_group_action,
                      is_isometry, make_lattice, preserves_cone)
from .lucas import LucasParams, Mat2, gen_fib_a, gen_fib_b, lucas_uv, m_matrix, n_matrix
from .pell import is_gen_fib_a, is_gen_fib_b


class NotInCorrespondenceError(ValueError):
    """Raised when a claimed y-solution fails the membership criterion."""


def rank_of_apparition(m: int, a: int) -> int:
    """Smallest n >= 1 with m | a_n, found by running the recurrence mod m.

    The pair (a_j, a_{j+1}) mod m cycles within m^2 steps, and 0 appears in
    every cycle, so the cap is defensive only.
    """
    if m < 2 or a < 1:
        raise ValueError("need m >= 2 and a >= 1")
    prev, cur = 0, 1
    for n in range(1, m * m + 3):
        if cur % m == 0:
            return n
        prev, cur = cur, (a * cur + prev) % m
    raise RuntimeError("apparition search exceeded its pigeonhole cap")


def case_a_lattice(m: int, a: int) -> Lattice2:
    """The lattice m * [[2, a], [a, -2]]."""
    return make_lattice(m, m * a, -m)


def case_b_lattice(b: int) -> Lattice2:
    """The lattice [[2, b], [b, 2]]."""
    return make_lattice(1, b, 1)


def _action(lattice: Lattice2, g: Mat2) -> IsometryAction:
    assert is_isometry(lattice, g)
    return IsometryAction(g, g.det, g.trace, preserves_cone(lattice, g),
                          disc_group_action(lattice, g))


@dataclass(frozen=True)
class K3CaseA:
    m: int
    a: int
    n: int
    action: IsometryAction
    omega_sign: int

    @property
    def symplectic(self) -> bool:
        return self.omega_sign == 1


@dataclass(frozen=True)
class K3CaseB:
    b: int
    n: int
    action: IsometryAction

    symplectic: bool = True


def a_generators(a: int) -> tuple[Mat2, Mat2]:
    """The involution pair A = [[1,0],[a,-1]], B = [[1,a],[0,-1]]."""
    return Mat2(1, 0, a, -1), Mat2(1, a, 0, -1)


def classify_case_a(m: int, a: int) -> K3CaseA:
    """Automorphism action on the lattice m*[[2,a],[a,-2]].

    n is the smallest index with m | a_n; the action is (AB)^n = M_a^{2n},
    symplectic for even n and anti-symplectic for odd n, with
    trace = (a^2+4) a_n^2 + (-1)^n 2.
    """
    n = rank_of_apparition(m, a)
    mat_a, mat_b = a_generators(a)
    assert mat_a @ mat_b == m_matrix(a) ** 2
    g = m_matrix(a) ** (2 * n)
    action = _action(case_a_lattice(m, a), g)
    assert action.trace == (a * a + 4) * gen_fib_a(a, n) ** 2 + (-1) ** n * 2
    return K3CaseA(m, a, n, action, (-1) ** n)


def classify_case_b(b: int, n: int) -> K3CaseB:
    """Symplectic automorphism action C^{2n} on [[2,b],[b,2]], b >= 4.

    For b = 3 the lattice contains a (-2)-element and the automorphism
    group is finite, so b < 4 is rejected.
    """
    if b < 4:
        raise ValueError(
            f"b={b} < 4 rejected: the lattice [[2,b],[b,2]] has a (-2)-element "
            "(or is not hyperbolic), so no infinite-order automorphism exists")
    if n < 1:
        raise ValueError("n must be >= 1")
    c = n_matrix(b).transpose  # [[0,-1],[1,b]]
    g = c ** (2 * n)
    action = _action(case_b_lattice(b), g)
    assert action.trace == (b * b - 4) * gen_fib_b(b, n) ** 2 + 2
    assert action.disc_action == "+id"
    return K3CaseB(b, n, action)


@dataclass(frozen=True)
class CorrespondenceRecord:
    """One point of the correspondence, carrying all three representations."""

    flavor: str                 # "a" or "b"
    param: int                  # a or b
    index: int                  # sequence index n
    term: int                   # a_n or b_n, the Pell y-value
    x: int                      # matching Pell x-value
    pell_sign: int              # +4 or -4
    trace: int                  # trace of the lattice action
    omega_sign: int             # +1 symplectic, -1 anti-symplectic
    m: Optional[int] = None     # a-flavor only: chosen divisor of the term

    @property
    def pell_d(self) -> int:
        p = self.param
        return p * p + 4 if self.flavor == "a" else p * p - 4


_TRIAL_DIVISION_BOUND = 10 ** 4


def _smallest_divisor_ge2(n: int) -> Optional[int]:
    """Smallest divisor >= 2 found by bounded trial division.

    Returns n itself when the search certifies n prime, and None when n has
    no divisor below the bound but is too large to certify (the pair data is
    then left without a preferred m; any divisor works).
    """
    if n < 2:
        return None
    if n % 2 == 0:
        return 2
    i = 3
    while i * i <= n and i <= _TRIAL_DIVISION_BOUND:
        if n % i == 0:
            return i
        i += 2
    return n if i * i > n else None


def correspondence_from_term(flavor: str, param: int, index: int) -> CorrespondenceRecord:
    """Record for the sequence term at `index` (index >= 1)."""
    if index < 1:
        raise ValueError("index must be >= 1")
    if flavor == "a":
        if param < 1:
            raise ValueError("a must be >= 1")
        seq = lucas_uv(LucasParams(param, -1), index)
        term, x = seq.u, seq.v
        sign = 4 * (-1) ** index
        omega = (-1) ** index
        trace = (param * param + 4) * term * term + omega * 2
        return CorrespondenceRecord("a", param, index, term, x, sign, trace,
                                    omega, _smallest_divisor_ge2(term))
    if flavor == "b":
        if param < 4:
            raise ValueError("b must be >= 4")
        seq = lucas_uv(LucasParams(param, 1), index)
        term, x = seq.u, seq.v
        trace = (param * param - 4) * term * term + 2
        return CorrespondenceRecord("b", param, index, term, x, 4, trace, 1)
    raise ValueError(f"unknown flavor {flavor!r}")


def correspondence_from_pell_y(flavor: str, param: int, y: int) -> CorrespondenceRecord:
    """Record for a y-coordinate Pell solution; the index is recovered by the
    membership criterion.  Ambiguous values (a = 1 gives a_1 = a_2 = 1) are
    reported with the smallest index >= 2 when one exists.
    """
    if y < 1:
        raise ValueError("y must be >= 1")
    verdict = is_gen_fib_a(y, param) if flavor == "a" else is_gen_fib_b(y, param)
    if not verdict.is_member:
        raise NotInCorrespondenceError(
            f"{y} is not a y-solution for flavor {flavor!r}, param {param}")
    index = verdict.index
    if index == 1 and flavor == "a" and param == 1:
        index = 2  # a_1 = a_2 = 1; the correspondence is stated for n >= 2
    return correspondence_from_term(flavor, param, index)


def correspondence_from_pair(flavor: str, param: int, index: int,
                             m: Optional[int] = None) -> CorrespondenceRecord:
    """Record for pair data (m, a, n) or (b, n); validates m when given."""
    record = correspondence_from_term(flavor, param, index)
    if flavor == "a" and m is not None:
        if m < 2 or record.term % m != 0:
            raise ValueError(f"m={m} does not divide a_{index} = {record.term}")
        record = CorrespondenceRecord(record.flavor, record.param, record.index,
                                      record.term, record.x, record.pell_sign,
                                      record.trace, record.omega_sign, m)
    return record


def correspondence_roundtrip(flavor: str, param: int, index: int) -> dict:
    """Walk every leg from the term at `index` and check mutual consistency.

    Returns the record plus per-leg agreement booleans; raises if any leg
    disagrees (which would falsify the correspondence).
    """
    base = correspondence_from_term(flavor, param, index)
    via_y = correspondence_from_pell_y(flavor, param, base.term)
    via_pair = correspondence_from_pair(flavor, param, via_y.index, m=via_y.m)
    # Pell leg: the (x, y) pair must solve the equation with the stated sign.
    d = base.pell_d
    assert base.x * base.x - d * base.term * base.term == base.pell_sign
    # Pair leg: trace must match the lattice action actually constructed.
    if flavor == "a":
        if base.m is not None:
            case = classify_case_a(base.m, param)
            # The apparition rank of the chosen m need not equal `index`, but
            # the trace formula must hold at `index` itself.
        assert base.trace == (param * param + 4) * base.term ** 2 \
            + base.omega_sign * 2
    else:
        case = classify_case_b(param, index)
        assert case.action.trace == base.trace
    if via_pair != base:
        raise AssertionError(f"round trip diverged: {via_pair} != {base}")
    return {"record": base, "term_leg": True, "pell_leg": True, "pair_leg": True}
