import math

import numpy as np
import pytest
from scipy.integrate import quad

from itint.mzv import eval_mzv, multiple_polylog, series_terms_needed

# Apery's constant, standard tabulated value
ZETA3 = 1.2020569031595942


def nested_sum(idx, M):
    """Plain truncated definition: sum over m_1 < ... < m_r <= M."""
    m = np.arange(1, M + 1, dtype=float)
    s = m ** -float(idx[0])
    for k in idx[1:]:
        s = np.concatenate(([0.0], np.cumsum(s)[:-1])) * m ** -float(k)
    return float(s.sum())


def nested_tail_bound(idx, M):
    # inner sums <= (1 + ln m)^(r-1); the summand bound is decreasing past M,
    # so the tail is below its integral from M
    r, kr = len(idx), idx[-1]
    # x = M e^y turns the integral into a well-scaled one on [0, oo)
    L = 1 + math.log(M)
    val, _ = quad(lambda y: (L + y) ** (r - 1) * math.exp(-(kr - 1) * y), 0, np.inf)
    return M ** (1 - kr) * val + 1e-12


@pytest.mark.parametrize("idx", [(2,), (3,), (1, 2), (2, 2), (1, 3), (1, 1, 2), (3, 2), (2, 1, 3)])
def test_against_truncated_definition(idx):
    M = 200_000
    assert abs(eval_mzv(idx) - nested_sum(idx, M)) < nested_tail_bound(idx, M)


@pytest.mark.parametrize("idx, exact", [
    ((2,), math.pi ** 2 / 6),
    ((4,), math.pi ** 4 / 90),
    ((6,), math.pi ** 6 / 945),
    ((3,), ZETA3),
    ((1, 2), ZETA3),
    ((2, 2), math.pi ** 4 / 120),
    ((1, 3), math.pi ** 4 / 360),
])
def test_closed_forms(idx, exact):
    assert abs(eval_mzv(idx) - exact) < 1e-12


def test_zeta2_tolerance():
    assert abs(eval_mzv((2,)) - math.pi ** 2 / 6) < 1e-10


@pytest.mark.parametrize("idx", [(2,), (1, 1, 2), (2, 1, 3), (1, 2, 1, 2)])
def test_split_point_independent(idx):
    ref = eval_mzv(idx, split=0.5)
    for split in (0.3, 0.375, 0.45):
        assert abs(eval_mzv(idx, split=split) - ref) < 1e-12


def test_polylog_closed_forms():
    x = 0.375
    tol = 1e-15
    assert multiple_polylog((1,), x, tol) == pytest.approx(-math.log(1 - x), abs=1e-14)
    assert multiple_polylog((1, 1), x, tol) == pytest.approx(math.log(1 - x) ** 2 / 2, abs=1e-14)
    # dilogarithm at 1/2
    assert multiple_polylog((2,), 0.5, tol) == pytest.approx(
        math.pi ** 2 / 12 - math.log(2) ** 2 / 2, abs=1e-14)
    assert multiple_polylog((), x, tol) == 1.0


def test_terms_needed_bound_holds():
    x, d, tol = 0.625, 3, 1e-13
    M = series_terms_needed(x, d, tol)
    tail = sum(x ** m * (1 + math.log(m)) ** (d - 1) for m in range(M + 1, M + 2000))
    assert tail < tol
    assert M > 10


def test_inadmissible():
    with pytest.raises(ValueError):
        eval_mzv((2, 1))
