import math

import pytest

from oracles import count_partitions_into_blocks, pascal_table
from superosc.combinat import (
    StirlingTable,
    binomial,
    pochhammer,
    stirling2,
    stirling2_alt_sum,
)
from superosc.exact import Poly, Rat


class TestBinomial:
    def test_small_values_against_pascal(self):
        rows = pascal_table(12)
        for n in range(13):
            for k in range(n + 1):
                assert binomial(n, k) == rows[n][k]

    def test_frozen_example(self):
        assert binomial(5, 2) == 10

    def test_edge_conventions(self):
        assert binomial(7, 0) == 1
        assert binomial(0, 0) == 1
        assert binomial(3, 5) == 0
        assert binomial(4, -1) == 0
        assert binomial(-2, 0) == 1

    def test_pascal_rule_everywhere(self):
        # includes k < 0, k > n, and negative n
        for n in range(-6, 10):
            for k in range(-3, 12):
                assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)

    def test_negative_n_product_formula(self):
        # C(-n, k) = (-1)^k C(n+k-1, k)
        for n in range(1, 6):
            for k in range(0, 8):
                assert binomial(-n, k) == (-1) ** k * binomial(n + k - 1, k)


class TestPochhammer:
    def test_empty_product_for_all_beta(self):
        for beta in (Rat(1), Rat(0), Rat(-3, 2), Rat(7, 3)):
            assert pochhammer(beta, 0) == 1

    def test_frozen_example(self):
        assert pochhammer(2, 3) == 24  # 2*3*4

    def test_rising_factorial_of_one(self):
        for v in range(8):
            assert pochhammer(1, v) == math.factorial(v)

    def test_terminates_at_negative_integer(self):
        assert pochhammer(-3, 4) == 0
        assert pochhammer(-3, 3) == -6


class TestStirling2:
    def test_corner_values(self):
        assert stirling2(0, 0) == 1
        assert stirling2(3, 0) == 0
        for c in range(11):
            assert stirling2(c, c) == 1

    def test_brute_force_example(self):
        assert count_partitions_into_blocks(4, 2) == 7
        assert stirling2(4, 2) == 7

    def test_triple_agreement_up_to_ten(self):
        # recurrence table == alternating sum == exhaustive enumeration
        for c in range(11):
            for d in range(c + 1):
                rec = stirling2(c, d)
                alt = stirling2_alt_sum(c, d)
                brute = count_partitions_into_blocks(c, d)
                assert rec == alt == brute, (c, d, rec, alt, brute)

    def test_falling_factorial_expansion(self):
        # sum_d S2(c,d) x(x-1)...(x-d+1) == x^c as polynomials, c <= 8
        x = Poly([0, 1])
        for c in range(9):
            acc = Poly()
            falling = Poly([1])
            for d in range(c + 1):
                if d:
                    falling = falling * Poly([-(d - 1), 1])
                acc = acc + falling * stirling2(c, d)
            assert acc == x**c

    def test_table_reuse_and_bounds(self):
        table = StirlingTable(5)
        assert table.value(5, 2) == stirling2(5, 2)
        assert table.value(2, 5) == 0
        assert table.value(-1, 0) == 0
        assert table.value(9, 3) == stirling2(9, 3)  # lazy growth
