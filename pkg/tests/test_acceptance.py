"""Exit criteria, one test per numbered criterion, at the stated tolerances.

A summary with one PASS/FAIL line per criterion is printed at the end of
the pytest run.  Wall-clock limits use the best of a few repetitions.
"""

import random
import time

import pytest

from conftest import oracle_digits
from rootspigot import oracle
from rootspigot.bignat import ZERO, add, from_int, mul_small, shl10, sub
from rootspigot.cbrt import cbrt_digits_quint, cbrt_digits_subtractive
from rootspigot.groups import parse_input
from rootspigot.metaroot import eval_f, root_digits, root_digits_float
from rootspigot.sqrt import sqrt_digits_pair, sqrt_digits_subtractive
from rootspigot.trace import Recorder

FIFTH_ROOT_7 = (
    "14757731615945520692769166956322441065440"
    "9361374020356777090416888452176749920836"
    "0714411082351298307654442294189726695499"
    "1677818301896039335532935966839393186145"
    "4579258848931485233873464556602592552045"
)

SQRT3_PAIRS = [
    ("A", 15, 5), ("B", 10, 15), ("A", 1000, 105), ("A", 895, 115), ("A", 780, 125),
    ("A", 655, 135), ("A", 520, 145), ("A", 375, 155), ("A", 220, 165), ("B", 55, 175),
    ("A", 5500, 1705), ("A", 3795, 1715), ("A", 2080, 1725), ("B", 355, 1735),
    ("A", 35500, 17305), ("A", 18195, 17315), ("B", 880, 17325), ("B", 88000, 173205),
    ("A", 8800000, 1732005), ("A", 7067995, 1732015), ("A", 5335980, 1732025),
    ("A", 3603955, 1732035), ("A", 1871920, 1732045), ("B", 139875, 1732055),
]

DEFAULT_MACHINE = {
    2: lambda g, n: sqrt_digits_pair(g, n),
    3: lambda g, n: cbrt_digits_quint(g, n),
}


def best_time(fn, repeat=5):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


@pytest.mark.acceptance("AC1 sqrt(3) pair-machine trace")
def test_ac1_sqrt3_pair_trace():
    rec = Recorder()
    digits = sqrt_digits_pair(parse_input("3", 2), 6, rec)
    seen = [(rule, int(s.P), int(s.Q)) for rule, s in rec.steps]
    assert seen == SQRT3_PAIRS
    assert digits == [1, 7, 3, 2, 0, 5]
    elapsed, _ = best_time(lambda: sqrt_digits_pair(parse_input("3", 2), 6))
    assert elapsed < 1e-3


@pytest.mark.acceptance("AC2 sqrt(7) subtractive remainders")
def test_ac2_sqrt7_subtractive():
    rec = Recorder()
    assert sqrt_digits_subtractive(parse_input("7", 2), 4, rec) == [2, 6, 4, 5]
    assert [int(s.remainder) for s in rec.before_b()] == [3, 24, 304, 3975]
    elapsed, _ = best_time(lambda: sqrt_digits_subtractive(parse_input("7", 2), 4))
    assert elapsed < 1e-3


@pytest.mark.acceptance("AC3 cbrt(7) both variants + quintuple invariants")
def test_ac3_cbrt7_both_variants():
    g = parse_input("7", 3)
    rec = Recorder()
    assert cbrt_digits_quint(g, 4, rec) == [1, 9, 1, 2]
    assert [int(s.M) for s in rec.before_b()] == [6, 141, 32129, 10217472]
    for _, s in rec.steps:
        r = int(s.R)
        assert int(s.W) == 3 * r * r + 3 * r + 1
        assert int(s.S) == 6 * r
    rec = Recorder()
    assert cbrt_digits_subtractive(g, 4, rec) == [1, 9, 1, 2]
    assert [int(s.remainder) for s in rec.before_b()] == [6, 141, 32129, 10217472]
    for run in (cbrt_digits_quint, cbrt_digits_subtractive):
        elapsed, _ = best_time(lambda: run(parse_input("7", 3), 4))
        assert elapsed < 1e-3


@pytest.mark.acceptance("AC4 fifth root of 7 to 201 digits")
def test_ac4_fifth_root_201_digits():
    elapsed, digits = best_time(lambda: root_digits(5, parse_input("7", 5), 201), repeat=3)
    assert "".join(map(str, digits)) == FIFTH_ROOT_7
    assert elapsed < 1.0


@pytest.mark.acceptance("AC5 oracle equivalence sweep")
def test_ac5_oracle_sweep():
    rng = random.Random(5)
    t0 = time.perf_counter()
    for _ in range(500):
        r = rng.randint(2, 7)
        m = str(rng.randrange(10**12))
        n = rng.randint(1, 25)
        machine = DEFAULT_MACHINE.get(r, lambda g, n, r=r: root_digits(r, g, n))
        assert machine(parse_input(m, r), n) == oracle_digits(m, r, n), (r, m, n)
    assert time.perf_counter() - t0 < 60


@pytest.mark.acceptance("AC6 cross-variant equivalence")
def test_ac6_cross_variant():
    rng = random.Random(6)
    t0 = time.perf_counter()
    for _ in range(200):
        m = str(rng.randrange(10 ** rng.randint(1, 12)))
        g2, g3 = parse_input(m, 2), parse_input(m, 3)
        pair = sqrt_digits_pair(g2, 20)
        assert pair == sqrt_digits_subtractive(g2, 20) == root_digits(2, g2, 20), m
        quint = cbrt_digits_quint(g3, 20)
        assert quint == cbrt_digits_subtractive(g3, 20) == root_digits(3, g3, 20), m
    assert time.perf_counter() - t0 < 30


@pytest.mark.acceptance("AC7 telescoping identity")
def test_ac7_telescoping():
    rng = random.Random(7)
    t0 = time.perf_counter()
    for _ in range(1000):
        r = rng.randint(2, 6)
        base = 10 * rng.randrange(10**4)
        d = rng.randint(0, 9)
        total = ZERO
        for k in range(base, base + d):
            total = add(total, eval_f(r, from_int(k)))
        expected = sub(oracle.ipow(from_int(base + d), r), oracle.ipow(from_int(base), r))
        assert total == expected, (r, base, d)
    assert time.perf_counter() - t0 < 10


@pytest.mark.acceptance("AC8 cube rescale identity")
def test_ac8_rescale_identity():
    rng = random.Random(8)
    t0 = time.perf_counter()
    for _ in range(1000):
        r = rng.randrange(10 ** rng.randint(1, 30) + 1)
        big_r = from_int(r)
        w = from_int(3 * r * r + 3 * r + 1)
        lhs = sub(sub(shl10(w, 2), mul_small(big_r, 270)), from_int(99))
        assert int(lhs) == 3 * (10 * r) ** 2 + 3 * (10 * r) + 1
    assert time.perf_counter() - t0 < 5


@pytest.mark.acceptance("AC9 float mode 2.71^(1/3.14)")
def test_ac9_float_mode():
    rec = Recorder()
    result = root_digits_float(3.14, 2.71, 4, rec)
    assert result.digits == [1, 3, 7, 3]
    group2 = [s for rule, s in rec.steps if s.k >= 10]
    after_first_subtraction = group2[1].remainder
    assert after_first_subtraction == pytest.approx(1878.86984778, rel=1e-6)
    elapsed, _ = best_time(lambda: root_digits_float(3.14, 2.71, 4))
    assert elapsed < 1e-3


class _GroupEnds:
    def __init__(self):
        self.remainders = []

    def __call__(self, rule, state):
        if rule == "B":
            self.remainders.append(state.trace_fields()[0][1])


@pytest.mark.acceptance("AC10 performance floor + remainder growth bound")
def test_ac10_performance_and_growth():
    elapsed, digits = best_time(lambda: sqrt_digits_pair(parse_input("2", 2), 1000), repeat=2)
    assert elapsed < 5.0
    assert "".join(map(str, digits)) == oracle.root_digit_string("2", "", 2, 1000)

    runs = [
        (2, "2", 1000, lambda g, n, t: sqrt_digits_subtractive(g, n, t)),
        (3, "2", 300, lambda g, n, t: cbrt_digits_subtractive(g, n, t)),
        (5, "7", 201, lambda g, n, t: root_digits(5, g, n, t)),
        (7, "123456", 100, lambda g, n, t: root_digits(7, g, n, t)),
    ]
    for r, m, n, run in runs:
        ends = _GroupEnds()
        run(parse_input(m, r), n, ends)
        for prev, cur in zip(ends.remainders, ends.remainders[1:]):
            assert len(cur) <= len(prev) + r
