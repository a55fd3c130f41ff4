import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from paramodular.jacobi import all_characters, dim_cusp, trace_wd_full
from paramodular.weil import eigenspace_dimension, gauss_sum

# tr(W_d) on J^cusp_{3,t} from a floating-point eigenvalue computation on the
# Weil representation (numpy, run once); every t <= 80 not listed has all
# traces zero.
ORACLE_TRACES = {
    13: {1: 1, 13: -1},
    17: {1: 1, 17: -1},
    19: {1: 1, 19: -1},
    21: {1: 1, 3: 1, 7: -1, 21: -1},
    22: {1: 1, 2: 1, 11: -1, 22: -1},
    23: {1: 1, 23: -1},
    25: {1: 1, 25: -1},
    26: {1: 1, 2: 1, 13: -1, 26: -1},
    27: {1: 1, 27: -1},
    28: {1: 1, 4: -1, 7: 1, 28: -1},
    29: {1: 2, 29: -2},
    31: {1: 2, 31: -2},
    32: {1: 1, 32: -1},
    33: {1: 2, 3: 0, 11: 0, 33: -2},
    34: {1: 2, 2: 2, 17: -2, 34: -2},
    35: {1: 1, 5: 1, 7: -1, 35: -1},
    37: {1: 4, 37: -4},
    38: {1: 2, 2: 2, 19: -2, 38: -2},
    39: {1: 2, 3: 2, 13: -2, 39: -2},
    40: {1: 1, 5: 1, 8: -1, 40: -1},
    41: {1: 3, 41: -3},
    42: {1: 1, 2: 1, 3: 1, 6: 1, 7: -1, 14: -1, 21: -1, 42: -1},
    43: {1: 4, 43: -4},
    44: {1: 2, 4: 0, 11: 0, 44: -2},
    45: {1: 2, 5: 0, 9: 0, 45: -2},
    46: {1: 3, 2: 1, 23: -1, 46: -3},
    47: {1: 3, 47: -3},
    48: {1: 1, 3: 1, 16: -1, 48: -1},
    49: {1: 3, 49: -3},
    50: {1: 2, 2: 2, 25: -2, 50: -2},
    51: {1: 3, 3: 1, 17: -1, 51: -3},
    52: {1: 3, 4: 1, 13: -1, 52: -3},
    53: {1: 5, 53: -5},
    54: {1: 2, 2: 2, 27: -2, 54: -2},
    55: {1: 3, 5: -1, 11: 1, 55: -3},
    56: {1: 2, 7: 2, 8: -2, 56: -2},
    57: {1: 5, 3: 3, 19: -3, 57: -5},
    58: {1: 5, 2: 3, 29: -3, 58: -5},
    59: {1: 4, 59: -4},
    60: {1: 1, 3: 1, 4: -1, 5: 1, 12: -1, 15: 1, 20: -1, 60: -1},
    61: {1: 6, 61: -6},
    62: {1: 4, 2: 2, 31: -2, 62: -4},
    63: {1: 3, 7: 1, 9: -1, 63: -3},
    64: {1: 3, 64: -3},
    65: {1: 5, 5: 1, 13: -1, 65: -5},
    66: {1: 3, 2: 3, 3: 1, 6: 1, 11: -1, 22: -1, 33: -3, 66: -3},
    67: {1: 7, 67: -7},
    68: {1: 4, 4: 2, 17: -2, 68: -4},
    69: {1: 5, 3: 1, 23: -1, 69: -5},
    70: {1: 3, 2: 3, 5: 1, 7: -1, 10: 1, 14: -1, 35: -3, 70: -3},
    71: {1: 5, 71: -5},
    72: {1: 2, 8: 0, 9: 0, 72: -2},
    73: {1: 8, 73: -8},
    74: {1: 6, 2: 4, 37: -4, 74: -6},
    75: {1: 4, 3: 2, 25: -2, 75: -4},
    76: {1: 5, 4: 1, 19: -1, 76: -5},
    77: {1: 6, 7: 2, 11: -2, 77: -6},
    78: {1: 4, 2: 2, 3: 2, 6: 0, 13: 0, 26: -2, 39: -2, 78: -4},
    79: {1: 7, 79: -7},
    80: {1: 3, 5: 1, 16: -1, 80: -3},}


@given(st.integers(-60, 60), st.integers(1, 60))
def test_gauss_sum_matches_direct_sum(a, n):
    direct = sum(cmath.exp(2j * math.pi * a * x * x / n) for x in range(n))
    exact = complex(gauss_sum(a, n).evalf(30))
    assert abs(direct - exact) < 1e-9


def test_gauss_sum_rejects_bad_modulus():
    with pytest.raises(ValueError):
        gauss_sum(1, 0)


@pytest.mark.parametrize("t", range(2, 81))
def test_traces_match_frozen_oracle(t):
    expected = ORACLE_TRACES.get(t)
    for d, value in (expected or {}).items():
        assert trace_wd_full(t, d) == value
    if expected is None:
        assert dim_cusp(t) == 0


def _dim_m(k):
    if k < 0 or k % 2 or k == 2:
        return 0
    return k // 12 + (0 if k % 12 == 2 else 1)


def _total_dim(m, k=3):
    """dim J_{k,m} for odd k from the classical closed formula."""
    return sum(_dim_m(k + 2 * j - 1) - math.ceil(Fraction(j * j, 4 * m)) for j in range(1, m))


@pytest.mark.parametrize("t", [t for t in range(1, 150) if all(t % (p * p) for p in (2, 3, 5, 7, 11))])
def test_total_dimension_matches_closed_formula(t):
    assert dim_cusp(t) == _total_dim(t)


def test_even_sign_on_xi_t_gives_zero():
    for t in (13, 30, 42):
        for eps in all_characters(t):
            if eps(t) == 1:
                assert eigenspace_dimension(t, tuple((d, eps(d)) for d in (1, t))) == 0
                break


def test_dimension_examples():
    assert eigenspace_dimension(13, ((1, 1), (13, -1))) == 1
    assert eigenspace_dimension(22, ((1, 1), (2, -1), (11, 1), (22, -1))) == 0
