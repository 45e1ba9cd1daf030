"""Rank-2 even lattices [[2a, b], [b, 2c]]: isometries from Pell solutions,
discriminant-group actions, and (0)/(-2)-element detection.

The (-2) search uses the reduction cycle of the indefinite binary form
a x^2 + b x y + c y^2 (square discriminants are handled by factoring the
form); the exhaustive-search oracle lives in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional

from .lucas import Mat2, is_square
from .pell import PellProblem, PellSolution, fundamental_solution, isqrt_exact

CYCLE_CAP = 10 ** 6


@dataclass(frozen=True)
class Lattice2:
    """Even lattice with Gram matrix [[2a, b], [b, 2c]]."""

    a: int
    b: int
    c: int

    @property
    def gram(self) -> Mat2:
        return Mat2(2 * self.a, self.b, self.b, 2 * self.c)

    @property
    def disc(self) -> int:
        return 4 * self.a * self.c - self.b * self.b

    @property
    def pell_d(self) -> int:
        return -self.disc

    @property
    def k(self) -> int:
        return gcd(gcd(self.a, self.b), self.c)

    @property
    def signature(self) -> tuple[int, int]:
        if self.disc < 0:
            return (1, 1)
        return (2, 0) if self.a > 0 else (0, 2)

    @property
    def is_hyperbolic(self) -> bool:
        return self.disc < 0

    def norm(self, x: int, y: int) -> int:
        return 2 * (self.a * x * x + self.b * x * y + self.c * y * y)

    def pairing(self, v: tuple[int, int], w: tuple[int, int]) -> int:
        return (2 * self.a * v[0] * w[0] + self.b * (v[0] * w[1] + v[1] * w[0])
                + 2 * self.c * v[1] * w[1])


@dataclass(frozen=True)
class IsometryAction:
    g: Mat2
    det: int
    trace: int
    preserves_cone: bool
    disc_action: str


def make_lattice(a: int, b: int, c: int) -> Lattice2:
    lattice = Lattice2(a, b, c)
    if lattice.disc == 0:
        raise ValueError(f"degenerate lattice: 4*{a}*{c} - {b}^2 = 0")
    return lattice


def is_isometry(lattice: Lattice2, g: Mat2) -> bool:
    q = lattice.gram
    return g.transpose @ q @ g == q and abs(g.det) == 1


def positive_norm_vector(lattice: Lattice2) -> tuple[int, int]:
    """Some vector of positive self-pairing; exists in signature (1,1)."""
    if lattice.a > 0:
        return (1, 0)
    if lattice.c > 0:
        return (0, 1)
    bound = 1
    while bound < 10 ** 6:
        for x in range(-bound, bound + 1):
            for y in (-bound, bound):
                for v in ((x, y), (y, x)):
                    if lattice.norm(*v) > 0:
                        return v
        bound *= 2
    raise AssertionError("no positive-norm vector found")


def preserves_cone(lattice: Lattice2, g: Mat2) -> bool:
    """True when g keeps the two positive-norm components in place.

    For two positive-norm vectors in signature (1,1) the pairing is nonzero
    and its sign tells whether they share a component.
    """
    w = positive_norm_vector(lattice)
    return lattice.pairing(g.apply(*w), w) > 0


def disc_group_action(lattice: Lattice2, g: Mat2) -> str:
    """'+id' / '-id' / 'other' action on the discriminant group.

    g acts as eps*id iff (g - eps*I) * Q^{-1} is integral; tested by
    divisibility of (g - eps*I) * adj(Q) by det(Q).
    """
    if not is_isometry(lattice, g):
        raise ValueError("matrix is not an isometry of the lattice")
    det = lattice.disc
    adj = lattice.gram.adjugate
    for eps, tag in ((1, "+id"), (-1, "-id")):
        m = (g - Mat2(eps, 0, 0, eps)) @ adj
        if all(e % det == 0 for e in (m.e00, m.e01, m.e10, m.e11)):
            return tag
    return "other"


def isometry_from_pell(lattice: Lattice2, sol: PellSolution) -> IsometryAction:
    """The SO+ element [[(u-bv)/2, -cv], [av, (u+bv)/2]] of a +4 solution."""
    if sol.sign != 4:
        raise ValueError("only solutions of the positive equation give isometries")
    d = lattice.pell_d
    if not sol.check(d):
        raise ValueError(f"({sol.u}, {sol.v}) does not solve u^2 - {d} v^2 = 4")
    u, v, b = sol.u, sol.v, lattice.b
    # u = bv (mod 2) holds for every genuine solution: u^2 = b^2 v^2 (mod 4).
    assert (u - b * v) % 2 == 0, "parity violation in Pell solution"
    g = Mat2((u - b * v) // 2, -lattice.c * v, lattice.a * v, (u + b * v) // 2)
    assert is_isometry(lattice, g) and g.det == 1
    return IsometryAction(g, g.det, g.trace, preserves_cone(lattice, g),
                          disc_group_action(lattice, g))


def so_plus_generator(lattice: Lattice2) -> Optional[IsometryAction]:
    """Generator of SO+(L), or None when pell_d is square (trivial group)."""
    if not lattice.is_hyperbolic:
        raise ValueError("lattice must have signature (1,1)")
    if is_square(lattice.pell_d):
        return None
    fund = fundamental_solution(PellProblem(lattice.pell_d, 4))
    assert fund is not None
    return isometry_from_pell(lattice, fund)


def _reduced(a: int, b: int, s: int) -> bool:
    # |sqrt(D) - 2|a|| < b < sqrt(D), in integers with s = floor(sqrt(D)).
    return 0 < b <= s and s < b + 2 * abs(a) and 2 * abs(a) - b <= s


def _rho(a: int, b: int, c: int, s: int, d: int) -> tuple[tuple[int, int, int], int]:
    """One reduction step (a,b,c) -> (c, r, (r^2-d)/(4c)) with its column op."""
    ac = abs(c)
    r = (-b) % (2 * ac)
    if ac > s:
        if r > ac:
            r -= 2 * ac
    else:
        r += ((s - r) // (2 * ac)) * (2 * ac)
    t = (b + r) // (2 * c)
    return (c, r, (r * r - d) // (4 * c)), t


def _represents_minus_one_cycle(a: int, b: int, c: int, d: int
                                ) -> Optional[tuple[int, int]]:
    """Witness (x, y) with a x^2 + b x y + c y^2 = -1, nonsquare d = b^2-4ac.

    Walks the reduction cycle; -1 appears as a leading coefficient of some
    form in the cycle iff it is represented (|-1| < sqrt(d)/2 for d >= 5).
    """
    s = isqrt(d)
    m = Mat2.identity()
    form = (a, b, c)
    first_reduced = None
    for _ in range(CYCLE_CAP):
        if form[0] == -1:
            return m.apply(1, 0)
        if _reduced(form[0], form[1], s):
            if first_reduced is None:
                first_reduced = form
            elif form == first_reduced:
                return None
        (fa, fb, fc), t = _rho(*form, s, d)
        form = (fa, fb, fc)
        m = m @ Mat2(0, -1, 1, t)
    raise RuntimeError("reduction cycle exceeded the step cap")


def _represents_minus_one_square_disc(a: int, b: int, c: int, d: int
                                      ) -> Optional[tuple[int, int]]:
    """Square-discriminant case: the form factors, so enumerate divisors."""
    s = isqrt(d)
    if a == 0:
        # b x y + c y^2 = -1 needs y = +-1 and a divisible linear solve.
        for y in (1, -1):
            num = -1 - c
            if b != 0 and num % (b * y) == 0:
                return (num // (b * y), y)
        return None
    target = -4 * a
    for e in range(1, abs(target) + 1):
        if target % e:
            continue
        for e1 in (e, -e):
            f1 = target // e1
            if (f1 - e1) % (2 * s):
                continue
            y = (f1 - e1) // (2 * s)
            num = e1 - (b - s) * y
            if num % (2 * a) == 0:
                x = num // (2 * a)
                if a * x * x + b * x * y + c * y * y == -1:
                    return (x, y)
    return None


def find_roots(lattice: Lattice2, norm_target: int) -> Optional[tuple[int, int]]:
    """Nonzero (x, y) with self-pairing norm_target in {0, -2}, or None."""
    if not lattice.is_hyperbolic:
        raise ValueError("lattice must have signature (1,1)")
    if norm_target not in (0, -2):
        raise ValueError("norm_target must be 0 or -2")
    a, b, c = lattice.a, lattice.b, lattice.c
    d = lattice.pell_d
    if norm_target == 0:
        s = isqrt_exact(d)
        if s is None:
            return None
        if a == 0:
            return (1, 0)
        x, y = s - b, 2 * a
        g = gcd(x, y)
        witness = (x // g, y // g) if g else (x, y)
        assert lattice.norm(*witness) == 0
        return witness
    # norm -2 means a x^2 + b x y + c y^2 = -1: content must be 1.
    if lattice.k != 1:
        return None
    if is_square(d):
        witness = _represents_minus_one_square_disc(a, b, c, d)
    else:
        witness = _represents_minus_one_cycle(a, b, c, d)
    if witness is not None:
        assert lattice.norm(*witness) == -2
    return witness
