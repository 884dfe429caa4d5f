import math
import random
from fractions import Fraction

import pytest

from egyfrac import (
    DomainError,
    IntSet,
    build_decomposition,
    exact_prime_powers,
    gcd_ppower_recip_sum,
    omega,
    ppowers_in_set,
    qsum_check,
    rec_sum_q,
    smooth_cofactor,
    subset_aq,
)


def test_subset_aq_examples(small_table):
    assert subset_aq([4, 8, 12], 4, small_table) == IntSet([4, 12])
    assert subset_aq([2, 6, 4], 2, small_table) == IntSet([2, 6])
    assert subset_aq([3, 5], 7, small_table) == IntSet([])
    with pytest.raises(DomainError):
        subset_aq([2, 3], 6, small_table)


def test_ppowers_in_set_examples(small_table):
    assert ppowers_in_set([12, 18], small_table) == IntSet([2, 3, 4, 9])
    assert ppowers_in_set([], small_table) == IntSet([])
    assert ppowers_in_set([8], small_table) == IntSet([8])
    with pytest.raises(DomainError):
        ppowers_in_set([1, 8], small_table)


def test_rec_sum_q_examples(small_table):
    assert rec_sum_q([12, 36], 4, small_table) == Fraction(4, 9)
    assert rec_sum_q([4], 4, small_table) == Fraction(1)
    assert rec_sum_q([3, 5], 7, small_table) == Fraction(0)


def _cofactor_candidates(n, q, y, t):
    """Oracle: every divisor d of n/q meeting the three exit conditions."""
    m = n // q
    out = []
    for d in range(1, m + 1):
        if m % d == 0:
            qd = q * d
            if n % qd == 0 and math.gcd(qd, n // qd) == 1:
                if all(pk > y for pk in exact_prime_powers(d, t)) if d > 1 else True:
                    out.append(d)
    return out


def test_smooth_cofactor_examples(small_table):
    # oracle cross-check: the result is the largest valid cofactor
    for n, q, y, expected in [(360, 8, 4, 45), (360, 8, 5, 9), (360, 8, 100, 1)]:
        cands = _cofactor_candidates(n, q, y, small_table)
        assert smooth_cofactor(n, q, y, small_table) == expected == max(cands)


def test_smooth_cofactor_precondition(small_table):
    with pytest.raises(DomainError):
        smooth_cofactor(360, 4, 2, small_table)  # 360/4 shares the factor 2
    with pytest.raises(DomainError):
        smooth_cofactor(360, 6, 2, small_table)  # not a prime power


def test_smooth_cofactor_exhaustive_desk_check(small_table):
    for n in range(2, 10_001):
        qs = exact_prime_powers(n, small_table)
        for q in qs:
            m = n // q
            for y in (1, 2, 5, 10, 100):
                d = smooth_cofactor(n, q, y, small_table)
                qd = q * d
                assert n % qd == 0
                assert math.gcd(qd, n // qd) == 1
                if d > 1:
                    assert all(pk > y for pk in exact_prime_powers(d, small_table))
                stripped = math.prod(
                    pk for pk in exact_prime_powers(m, small_table) if pk <= y
                ) if m > 1 else 1
                assert qd > m // stripped


def test_gcd_ppower_recip_sum_examples(small_table):
    assert gcd_ppower_recip_sum(12, 18, small_table) == Fraction(5, 6)
    assert gcd_ppower_recip_sum(7, 9, small_table) == Fraction(0)
    assert gcd_ppower_recip_sum(8, 8, small_table) == Fraction(7, 8)


def test_qsum_check_examples(small_table):
    # oracle: explicit sum over the prime powers of {12, 18}
    oracle = sum((Fraction(1, q) for q in (2, 3, 4, 9)), Fraction(0))
    assert oracle == Fraction(43, 36)
    assert qsum_check([12, 18], small_table) == oracle
    assert qsum_check([8], small_table) == Fraction(1, 8)
    assert qsum_check([], small_table) == Fraction(0)


def test_double_counting_identity(small_table):
    rng = random.Random(11)
    for _ in range(50):
        A = IntSet(rng.sample(range(2, 10_000), rng.randint(1, 30)))
        qs = ppowers_in_set(A, small_table)
        lhs = sum((rec_sum_q(A, q, small_table) / q for q in qs), Fraction(0))
        rhs = sum((Fraction(omega(n, small_table), n) for n in A), Fraction(0))
        assert lhs == rhs


def test_class_size_partition(small_table):
    rng = random.Random(12)
    for _ in range(30):
        A = IntSet(rng.sample(range(2, 10_000), rng.randint(1, 30)))
        qs = ppowers_in_set(A, small_table)
        assert sum(len(subset_aq(A, q, small_table)) for q in qs) == sum(
            omega(n, small_table) for n in A
        )


def test_build_decomposition_invariants(small_table):
    rng = random.Random(13)
    for _ in range(20):
        A = IntSet(rng.sample(range(2, 10_000), rng.randint(1, 25)))
        dec = build_decomposition(A, small_table)
        assert dec.qset == ppowers_in_set(A, small_table)
        assert set(dec.parts) == set(dec.qset)
        for q, members in dec.parts.items():
            assert len(members) > 0
            assert members == subset_aq(A, q, small_table)
        for n in A:
            owners = IntSet(q for q, members in dec.parts.items() if n in members)
            assert owners == exact_prime_powers(n, small_table)


def test_decomposition_json_shape(small_table):
    dec = build_decomposition([12, 18], small_table)
    d = dec.to_json_dict()
    assert d["base"] == [12, 18]
    assert d["qset"] == [2, 3, 4, 9]
    assert d["parts"]["4"] == [12]
    assert d["parts"]["2"] == [18]
