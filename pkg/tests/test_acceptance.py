"""Acceptance gate: the twelve criteria, each at its stated tolerance and
time limit.  Prints one PASS/FAIL line per criterion (also at the end of a
pytest run) and can be executed directly: python tests/test_acceptance.py
"""

import sys
import time

import pytest

from paramodular import suites, weil
from paramodular.jacobi import (EigenCharacter, all_characters, dim_cusp, dim_eigenspace,
                                trace_wd_full, trivial_eigenspace_scan)
from paramodular.numtheory import unitary_divisors

RESULTS = {}

ZERO_LIST = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 24, 30, 36]
PAIRS = {(22, 2, 11), (26, 2, 13), (34, 2, 17), (38, 2, 19), (50, 2, 25), (54, 2, 27),
         (21, 3, 7), (39, 3, 13), (48, 3, 16), (35, 5, 7), (40, 5, 8), (28, 7, 4), (56, 7, 8)}


def _cold():
    """Drop cached Weil data so timings measure real work."""
    weil.eigenspace_dimension.cache_clear()
    weil._weil_traces.cache_clear()


def zero_list():
    zeros = [t for t in range(1, 41) if dim_cusp(t) == 0]
    return zeros == ZERO_LIST, f"zeros={zeros}"


def thirteen_pairs():
    scan = trivial_eigenspace_scan(250)
    got = set()
    ok = True
    for t, signs in scan.pairs:
        minus = [q for q, s in signs.items() if s == -1]
        plus = [q for q, s in signs.items() if s == 1]
        got.add((t, minus[0], plus[0]))
        eps = EigenCharacter.from_signs(t, signs)
        ok &= dim_eigenspace(t, eps) == 0 and eps(t) == -1
    return ok and got == PAIRS and len(scan.pairs) == 13, f"{len(scan.pairs)} pairs"


def example_2_6():
    ok = dim_eigenspace(42, EigenCharacter.from_pattern(42, "++-")) == 1
    dims = []
    for minus in (2, 3, 5, 7):
        signs = {q: (-1 if q == minus else 1) for q in (2, 3, 5, 7)}
        dims.append(dim_eigenspace(210, EigenCharacter.from_signs(210, signs)))
    return ok and all(d >= 1 for d in dims), f"dim J42(++-)=1, t=210 dims={dims}"


def antisymmetry():
    for t in range(1, 201):
        traces = {d: trace_wd_full(t, d) for d in unitary_divisors(t)}
        for d, value in traces.items():
            if not isinstance(value, int) or value != -traces[t // d]:
                return False, f"t={t} d={d}"
        for eps in all_characters(t):
            dim = dim_eigenspace(t, eps)
            if not isinstance(dim, int) or dim < 0:
                return False, f"t={t} eps={eps.pattern} dim={dim}"
    return True, "t<=200"


def _suite(verdict):
    return verdict.passed, f"{verdict.trials} trials" + (
        f", witness={verdict.witness}" if verdict.witness else "")


CRITERIA = [
    (1, "zero-dimension list t<=40", 5, zero_list),
    (2, "thirteen trivial pairs to 250", 30, thirteen_pairs),
    (3, "t=42 and t=210 dimensions", 5, example_2_6),
    (4, "trace antisymmetry and integrality t<=200", 60, antisymmetry),
    (5, "Psi(V_d) closed form, square-free t<=50", None, lambda: _suite(suites.psi_template(50))),
    (6, "Psi on 500 Gamma_t samples", None, lambda: _suite(suites.lemma1_1(500))),
    (7, "commutative diagram on 100 samples", None,
     lambda: _suite(suites.prop1_2_diagram(100))),
    (8, "lift identity and mutation control", 60, lambda: _suite(suites.thm2_1())),
    (9, "ramification vs reflection survey", 300,
     lambda: _suite(suites.lemma3_8_oracle(30, 10))),
    (10, "involution witnesses t<=30", None, lambda: _suite(suites.involution_witnesses(30))),
    (11, "Brasch example", None, lambda: _suite(suites.brasch())),
    (12, "Hilbert embedding identities", 60, lambda: _suite(suites.hilbert(100))),
]


def evaluate(number, name, limit, check):
    _cold()
    start = time.perf_counter()
    try:
        ok, detail = check()
    except Exception as exc:  # a crash is a failed criterion, reported as such
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok, detail = False, f"{detail}; {elapsed:.1f}s exceeds {limit}s"
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {name} ({elapsed:.1f}s) {detail}"
    RESULTS[number] = line
    return ok, line


@pytest.mark.parametrize("number,name,limit,check", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(number, name, limit, check):
    ok, line = evaluate(number, name, limit, check)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for criterion in CRITERIA:
        ok, line = evaluate(*criterion)
        print(line, flush=True)
        failures += not ok
    sys.exit(1 if failures else 0)
