import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from paramodular.jacobi import (CoefficientKey, CoefficientTable, EigenCharacter, FormulaError,
                                all_characters, apply_wd, dim_cusp, dim_eigenspace,
                                eigen_projection, key_of, make_key, trace_table,
                                trace_wd_full, trace_wd_printed, trace_wd_squarefree,
                                trivial_eigenspace_scan, wd_key_map, wd_key_map_crt)
from paramodular.lifting import synth_eigen_table
from paramodular.numtheory import is_squarefree, unitary_divisors

ZERO_LIST = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 24, 30, 36]

# (t, sign on the first written factor, sign on the second) with (-, +)
THIRTEEN = [(2 * 11, 2, 11), (2 * 13, 2, 13), (2 * 17, 2, 17), (2 * 19, 2, 19),
            (2 * 25, 2, 25), (2 * 27, 2, 27), (3 * 7, 3, 7), (3 * 13, 3, 13),
            (3 * 16, 3, 16), (5 * 7, 5, 7), (5 * 8, 5, 8), (7 * 4, 7, 4), (7 * 8, 7, 8)]


def test_character_evaluation():
    eps = EigenCharacter.from_signs(30, {2: 1, 3: -1, 5: -1})
    assert eps(1) == 1 and eps(3) == -1 and eps(15) == 1 and eps(30) == 1
    assert eps.pattern == "+--"
    with pytest.raises(ValueError):
        eps(4)
    with pytest.raises(ValueError):
        EigenCharacter.from_signs(30, [1, 1])


def test_wd_key_map_examples():
    t = 6
    key = make_key(t, 4 * t - 1, 1)
    assert wd_key_map(t, 1, key) == key
    assert wd_key_map(t, 2, key).residue == 7
    with pytest.raises(ValueError):
        make_key(t, 5, 1)
    with pytest.raises(ValueError):
        CoefficientKey(0, 0)


@given(st.integers(1, 200), st.data())
def test_wd_key_map_agrees_with_congruences(t, data):
    l = data.draw(st.integers(-3 * t, 3 * t))
    n = data.draw(st.integers(l * l // (4 * t) + 1, l * l // (4 * t) + 5))
    key = key_of(t, n, l)
    for d in unitary_divisors(t):
        image = wd_key_map(t, d, key)
        assert image == wd_key_map_crt(t, d, key)
        assert wd_key_map(t, d, image) == key


def _random_table(t, seed, d_max=None):
    rng = random.Random(seed)
    d_max = d_max or 8 * t
    values = {}
    for disc in range(1, d_max + 1):
        for r in range(2 * t):
            if (disc + r * r) % (4 * t) == 0 and rng.random() < 0.6:
                values[CoefficientKey(disc, r)] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return CoefficientTable(t, values, d_max)


@pytest.mark.parametrize("t", [6, 10, 12, 30])
def test_wd_action_is_a_group_action(t):
    table = _random_table(t, t)
    ds = unitary_divisors(t)
    for d in ds:
        assert apply_wd(apply_wd(table, d), d).equals(table)
        for e in ds:
            if d * e in ds and d != e:
                assert apply_wd(apply_wd(table, d), e).equals(apply_wd(table, d * e))


@pytest.mark.parametrize("t", [6, 10, 30])
def test_projectors(t):
    table = _random_table(t, 100 + t)
    chars = all_characters(t)
    pieces = [eigen_projection(table, eps) for eps in chars]
    total = {}
    for piece in pieces:
        for k, v in piece.values.items():
            total[k] = total.get(k, 0) + v
    assert CoefficientTable(t, total).equals(table)
    for eps, piece in zip(chars, pieces):
        assert eigen_projection(piece, eps).equals(piece)


def test_eigen_tables_are_eigen():
    for t in (6, 10, 15):
        for eps in all_characters(t):
            if eps(t) != -1:
                continue
            table = synth_eigen_table(t, eps, 1, 12 * t)
            for d in unitary_divisors(t):
                assert apply_wd(table, d).equals(table.scaled(eps(d)))


def test_trace_examples():
    assert trace_wd_full(11, 1) == 0
    assert trace_wd_full(13, 1) == 1
    assert trace_wd_full(13, 13) == -1
    assert trace_wd_squarefree(11, 11) == 0
    assert trace_wd_squarefree(35, 5) == trace_wd_full(35, 5)


def test_printed_formula_examples():
    assert trace_wd_printed(11, 1) == 0
    assert trace_wd_printed(13, 1) == 1
    # with a square factor the closed expression is not integral
    assert trace_wd_printed(4, 1) == Fraction(-1, 8)


@pytest.mark.parametrize("t", [t for t in range(1, 201) if is_squarefree(t)])
def test_printed_formula_agrees_on_squarefree(t):
    for d in unitary_divisors(t):
        assert trace_wd_printed(t, d) == trace_wd_full(t, d)
        if t % 2 and t % 3:
            assert trace_wd_squarefree(t, d) == trace_wd_full(t, d)


def test_short_formula_preconditions():
    with pytest.raises(ValueError):
        trace_wd_squarefree(6, 1)
    with pytest.raises(ValueError):
        trace_wd_squarefree(25, 1)


@given(st.integers(1, 200))
@settings(max_examples=80, deadline=None)
def test_traces_antisymmetric_and_dims_consistent(t):
    for d in unitary_divisors(t):
        assert trace_wd_full(t, d) == -trace_wd_full(t, t // d)
    dims = [dim_eigenspace(t, eps) for eps in all_characters(t)]
    assert all(x >= 0 for x in dims)
    assert sum(dims) == dim_cusp(t)


def test_dimension_examples():
    assert dim_eigenspace(42, EigenCharacter.from_pattern(42, "++-")) == 1
    assert dim_eigenspace(22, EigenCharacter.from_signs(22, {2: -1, 11: 1})) == 0
    assert dim_eigenspace(13, EigenCharacter.from_pattern(13, "-")) == 1


def test_210_characters_trivial_on_three_generators():
    t = 210
    for minus in (2, 3, 5, 7):
        signs = {q: (-1 if q == minus else 1) for q in (2, 3, 5, 7)}
        assert dim_eigenspace(t, EigenCharacter.from_signs(t, signs)) >= 1


def test_trivial_scan_to_40():
    scan = trivial_eigenspace_scan(40)
    assert scan.zero_dimension == ZERO_LIST
    assert [t for t, _ in scan.pairs] == [21, 22, 26, 28, 34, 35, 38, 39, 40]


def test_trivial_scan_pairs_match_list():
    scan = trivial_eigenspace_scan(100)
    expected = {(t, ((p, -1), (q, 1))) for t, p, q in THIRTEEN}
    got = {(t, tuple(sorted(signs.items(), key=lambda kv: kv[1]))) for t, signs in scan.pairs}
    assert got == expected


def test_trace_table_rows():
    rows = trace_table(42)
    assert [r.d for r in rows] == unitary_divisors(42)
    assert sum(r.trace for r in rows) == 8 * dim_eigenspace(
        42, EigenCharacter.from_pattern(42, "+++"))


def test_formula_error_is_arithmetic():
    assert issubclass(FormulaError, ArithmeticError)
