import math
import random

import pytest

from psi_grh.errors import DomainError
from psi_grh.field_params import FieldParams, grh_disc_floor, signatures
from psi_grh.zero_bounds.sums import (
    C_CAPS,
    TRUDGIAN,
    first_moment_bound,
    low_lying_sum_bound,
    tail_inverse_square_bound,
    zero_count_upper,
    zero_count_window,
)

Q = FieldParams.rationals()
S5 = FieldParams(2, 2, 0, math.log(5))
TWO_PI = 2 * math.pi


def test_trudgian_constants_respect_caps():
    assert TRUDGIAN.r_param == 2
    for c, c_hi, cap in zip(TRUDGIAN.c, TRUDGIAN.c_upper, C_CAPS):
        assert c <= c_hi <= cap
        assert cap - c < 0.01
    assert TRUDGIAN.c1 == pytest.approx(math.pi * 0.459)
    assert TRUDGIAN.c2 == pytest.approx(math.pi * (1.996 + 0.459 * math.log(TWO_PI)))
    assert TRUDGIAN.c3 == pytest.approx(math.pi * 2.754)


def test_zero_count_upper_for_Q():
    v = zero_count_upper(5, Q)
    oracle = (5 / math.pi) * 1.29 * math.log(5 / TWO_PI) + (5 / math.pi) * (8.93 / 5 - 1) + 8.66 / math.pi
    assert v == pytest.approx(oracle, abs=1e-12)
    assert v == pytest.approx(3.54, abs=0.01)
    assert v >= 0  # N_Q(5) = 0: the first zero has height 14.13


def test_zero_count_upper_linear_and_monotone():
    # affine in log|disc| with slope (T/pi)(1 + c1/T)
    T = 5.0
    slope = zero_count_upper(T, FieldParams(2, 2, 0, 3.0)) - zero_count_upper(T, FieldParams(2, 2, 0, 2.0))
    assert slope == pytest.approx((T / math.pi) * (1 + 1.45 / T))
    assert zero_count_upper(10, S5) > zero_count_upper(5, S5)
    with pytest.raises(DomainError):
        zero_count_upper(4.9, Q)


def test_zero_count_window_reconstructs_upper():
    rng = random.Random(7)
    for _ in range(200):
        T = 5 + rng.expovariate(0.01)
        n = rng.randint(1, 12)
        r2 = rng.randint(0, n // 2)
        p = FieldParams(n, n - 2 * r2, r2, 0.0 if n == 1 else rng.uniform(0.5, 60))
        A, R = zero_count_window(T, p, c=C_CAPS)
        assert A + R == pytest.approx(zero_count_upper(T, p), abs=1e-9 * max(1, abs(A)))


def test_zero_count_window_values():
    A, R = zero_count_window(5, Q)
    assert A == pytest.approx((5 / math.pi) * math.log(5 / (TWO_PI * math.e)), abs=1e-12)
    assert A == pytest.approx(-1.955122, abs=1e-6)
    # R is affine in log T: equal steps in log T give equal increments
    Rs = [zero_count_window(T, S5)[1] for T in (5, 10, 20)]
    assert Rs[1] - Rs[0] == pytest.approx(Rs[2] - Rs[1]) and Rs[1] > Rs[0]


def test_tail_inverse_square():
    v = tail_inverse_square_bound(5, Q)
    oracle = (1.578 * math.log(5 / TWO_PI) / 5 + 4.722 / 5 + 17.31 / 25) / math.pi
    assert v == pytest.approx(oracle, abs=1e-12)
    assert v == pytest.approx(0.4981, abs=1e-4)
    T = 17.0
    slope = tail_inverse_square_bound(T, FieldParams(2, 2, 0, 3.0)) - tail_inverse_square_bound(T, FieldParams(2, 2, 0, 2.0))
    assert slope == pytest.approx((1 + 2.89 / T) / (math.pi * T))
    # derivative in T is negative from some T1 on; check monotone decay past T1 = 40
    vals = [tail_inverse_square_bound(T, S5) for T in (40, 80, 1e3, 1e5, 1e8)]
    assert all(a > b for a, b in zip(vals, vals[1:])) and vals[-1] < 1e-6


def test_first_moment():
    v = first_moment_bound(5, Q)
    assert v == pytest.approx((0.5 * math.log(5 / TWO_PI) ** 2 - 1.41 + 25.57) / math.pi, abs=1e-12)
    assert v == pytest.approx(7.6987, abs=1e-4)
    T = TWO_PI * math.e
    slope = first_moment_bound(T, FieldParams(2, 2, 0, 3.0)) - first_moment_bound(T, FieldParams(2, 2, 0, 2.0))
    assert slope == pytest.approx(5.01 / math.pi)
    for T1, T2 in [(5, 6), (6.3, 100), (100, 1e6)]:
        assert first_moment_bound(T2, S5) >= first_moment_bound(T1, S5)


def test_low_lying_sum():
    assert low_lying_sum_bound(Q) == pytest.approx(5.41)
    assert low_lying_sum_bound(S5) == pytest.approx(1.02 * math.log(5) - 3.26 + 7.04)
    a = low_lying_sum_bound(FieldParams(2, 2, 0, 3.0)) - low_lying_sum_bound(FieldParams(2, 2, 0, 2.0))
    assert a == pytest.approx(1.02)


def test_first_moment_dominates_low_lying_part():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(2, 20)
        r1, r2 = rng.choice(signatures(n))
        L = max(0.1, grh_disc_floor(n)) + rng.expovariate(0.2)
        p = FieldParams(n, r1, r2, L)
        T = 5 + rng.expovariate(0.001)
        assert tail_inverse_square_bound(T, p) >= 0
        assert first_moment_bound(T, p) >= low_lying_sum_bound(p)
