from fractions import Fraction
from math import gcd, pi

import pytest

import eigenprime as ep


@pytest.fixture(scope="module")
def tables():
    return ep.Tables(ep.required_table_limit(2000))


def test_arith(tables):
    assert [tables.mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert tables.prime_count(100) == 25
    assert tables.totient_ratio_sum(3) == Fraction(13, 6)
    assert tables.totient_ratio_sum_div3(9, "iterative") == Fraction(5, 3)
    assert ep.is_prime(7919)
    with pytest.raises(ep.CapacityError):
        tables.mobius(10**9)
    with pytest.raises(ep.DomainError):
        tables.prime_count_ap(20, 6, 3)


def test_surface():
    assert ep.phi_map(1, 2, 1) == (8, 7, 5)
    assert ep.classify((3, 7, 8)) == (4, (2, 1))
    assert ep.classify((1, 1, 1)) == (0, None)
    assert ep.q_value((3, 8, 8)) == -15
    pts = ep.enumerate_solutions(10)
    assert [p[2] for p in pts] == [(1, 1, 1), (8, 7, 5), (5, 7, 8), (8, 7, 3), (3, 7, 8)]
    with pytest.raises(ep.DomainError):
        ep.classify((5, 0, 6))
    poly = ep.dihedral_char_poly(2 * pi / 3)
    assert abs(poly["c02"] + 1) < 1e-12


def test_counts_against_python_scan(tables):
    N = 12
    w = 6 * N // 5
    ys = xs = 0
    primes = {p for p in range(2, w + 1) if all(p % d for d in range(2, p))}
    for a in range(1, w + 1):
        for b in range(1, N + 1):
            for c in range(1, w + 1):
                if gcd(gcd(a, b), c) == 1 and a * a - b * b + c * c - a * c == 0:
                    ys += 1
                    xs += bool({a, b, c} & primes)
    r = ep.count_all(tables, N)
    assert (r["xs"], r["ys"]) == (xs, ys)
    assert ep.count_all(tables, 300) == ep.count_all(tables, 300, "brute")
    assert ep.count_all(tables, 2) == {"N": 2, "x_plus": 6, "y_plus": 7, "xs": 0, "ys": 1}


def test_regions(tables):
    assert ep.count_region(tables, 10, 1, -1) == {"total": 16, "mod3_distinct": 12, "mod3_equal": 4}
    assert ep.count_region(tables, 10, 1, "-1", k3=3) == ep.count_region(tables, 10, 1, -1, k3=3, method="brute")
    assert ep.count_region(tables, 30, Fraction(1, 2), Fraction(-2, 3))["total"] > 0
    assert ep.count_coprime_box_modp(tables, 4, 2) == 8
    assert ep.triangle_area(10, 1, -1) == pytest.approx(25)


def test_density_and_cli(tables):
    c = ep.constants()
    assert round(c["three_zeta3"], 4) == 3.6062
    s = ep.density_sample(tables, 1000, with_plane=True)
    assert s["ratio"] is not None and s["plane_ratio"] is not None
    assert ep.density_sample(tables, 1)["ratio"] is None
    status, out, _ = ep.run_cli(["count", "--n", "10", "--what", "surface"])
    assert (status, out) == (0, '{"N":10,"xs":4,"ys":5}\n')
    assert ep.run_cli(["count", "--n", "0"])[0] == 2


def test_big_integers_are_python_ints():
    t = ep.Tables(ep.required_table_limit(200000))
    r = ep.count_all(t, 200000)
    assert isinstance(r["y_plus"], int) and r["y_plus"] > 2**53
