import pytest

from pellucas.intersection import (PellSystem, SearchCapExceeded,
                                   brute_force_common, common_lucas_params,
                                   intersect, minimal_trace_match,
                                   square_product_test)
from pellucas.lucas import LucasParams, is_square, lucas_uv


def test_square_product_examples():
    assert square_product_test(PellSystem("plus_plus", 1, 4))
    assert not square_product_test(PellSystem("plus_plus", 1, 2))
    assert square_product_test(PellSystem("minus_minus", 4, 14))


def test_minimal_trace_match_examples():
    assert minimal_trace_match(PellSystem("plus_plus", 1, 4)) == (3, 1)
    assert minimal_trace_match(PellSystem("minus_minus", 4, 14)) == (2, 1)
    assert minimal_trace_match(PellSystem("mixed", 1, 7)) == (4, 1)


def test_intersect_examples():
    r = intersect(PellSystem("plus_plus", 1, 4), 4)
    assert [s[0] for s in r.solutions] == [2, 4, 18, 76]
    assert r.solutions[1] == (4, 2, 1) and r.solutions[2] == (18, 8, 4)
    assert r.common_params == LucasParams(4, -1)

    r = intersect(PellSystem("minus_minus", 4, 14), 3)
    assert [s[0] for s in r.solutions] == [2, 14, 194]
    assert r.solutions[1] == (14, 4, 1)
    assert r.common_params == LucasParams(14, 1)

    r = intersect(PellSystem("mixed", 1, 7), 4)
    assert [s[0] for s in r.solutions] == [2, 7, 47, 322]
    assert r.solutions[1] == (7, 3, 1)
    assert r.common_params == LucasParams(7, 1)


def test_nonsquare_trivial_only():
    r = intersect(PellSystem("plus_plus", 1, 2), 5)
    assert r.verdict == "trivial_only" and r.solutions == [(2, 0, 0)]


def test_brute_force_examples():
    s = PellSystem("plus_plus", 1, 4)
    assert brute_force_common(s, 100) == [(2, 0, 0), (4, 2, 1), (18, 8, 4), (76, 34, 17)]
    assert brute_force_common(PellSystem("plus_plus", 1, 2), 10 ** 6) == [(2, 0, 0)]
    assert brute_force_common(PellSystem("minus_minus", 4, 14), 200) == \
        [(2, 0, 0), (14, 4, 1), (194, 56, 14)]


def test_brute_force_paths_agree():
    # same system through the scalar and the vectorized enumeration
    from pellucas.intersection import _brute_force_small, _brute_force_vectorized
    for system in (PellSystem("plus_plus", 1, 4),
                   PellSystem("minus_minus", 4, 14),
                   PellSystem("mixed", 1, 7),
                   PellSystem("opposite_signs", 1, 3)):
        assert _brute_force_small(system, 150_000) == \
            _brute_force_vectorized(system, 150_000)


def test_solutions_substitute_exactly():
    for system in (PellSystem("plus_plus", 1, 4),
                   PellSystem("minus_minus", 4, 14),
                   PellSystem("mixed", 1, 7)):
        r = intersect(system, 8)
        for x, y, z in r.solutions:
            ok1 = any(x * x - system.d1 * y * y == s for s in system.signs1)
            ok2 = any(x * x - system.d2 * z * z == s
                      for s1 in system.signs1 for s in system.signs2_for(s1))
            assert ok1 and ok2


def test_lucas_closure_of_emitted_x():
    r = intersect(PellSystem("plus_plus", 1, 4), 10)
    p, q = r.common_params.p, r.common_params.q
    xs = [s[0] for s in r.solutions]
    for k in range(2, len(xs)):
        assert xs[k] == p * xs[k - 1] - q * xs[k - 2]
    assert not is_square(r.common_params.discriminant)


def test_common_params_cross_flavor_identity():
    system = PellSystem("minus_minus", 4, 14)
    m, n = minimal_trace_match(system)
    params = common_lucas_params(system, m, n)
    assert params.p == lucas_uv(LucasParams(4, 1), m).v
    assert params.p == lucas_uv(LucasParams(14, 1), n).v


def test_divisor_structure_of_further_matches():
    system = PellSystem("plus_plus", 1, 4)
    m, n = minimal_trace_match(system)
    d1, d2 = system.d1, system.d2
    from pellucas.lucas import gen_fib_a
    matches = []
    for k in range(1, 10 * m + 1):
        w = d1 * gen_fib_a(1, k) ** 2
        for l in range(1, 200):
            if d2 * gen_fib_a(4, l) ** 2 == w and (k - l) % 2 == 0:
                matches.append((k, l))
    for k, l in matches:
        assert k % m == 0 and l % n == 0


def test_opposite_signs_requires_bound():
    with pytest.raises(ValueError):
        intersect(PellSystem("opposite_signs", 1, 3), 3)
    r = intersect(PellSystem("opposite_signs", 1, 3), 5, x_bound=10 ** 5)
    assert r.verdict == "finite_only"
    assert (3, 1, 1) in r.solutions


def test_domain_validation():
    with pytest.raises(ValueError):
        PellSystem("minus_minus", 3, 14)
    with pytest.raises(ValueError):
        PellSystem("plus_plus", 2, 2)
    with pytest.raises(ValueError):
        PellSystem("mixed", 1, 3)


def test_cap_exceeded_is_reported():
    system = PellSystem("plus_plus", 1, 4)
    with pytest.raises(SearchCapExceeded):
        minimal_trace_match(system, cap=2)


def test_intersect_agrees_with_brute_force_grid():
    systems = []
    for p1 in range(1, 12):
        for p2 in range(p1 + 1, 13):
            systems.append(PellSystem("plus_plus", p1, p2))
    for p1 in range(4, 12):
        for p2 in range(p1 + 1, 13):
            systems.append(PellSystem("minus_minus", p1, p2))
    for a in range(1, 8):
        for b in range(4, 13):
            systems.append(PellSystem("mixed", a, b))
    for system in systems:
        expect = brute_force_common(system, 100_000)
        if square_product_test(system):
            r = intersect(system, 12)
            got = [s for s in r.solutions if s[0] <= 100_000]
            assert got == expect, system
        else:
            assert expect == [(2, 0, 0)], system
