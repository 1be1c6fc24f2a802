"""
The full verification sweep, grouped into eight criteria.

Each ``criterion_*`` function returns a list of RelationReport; a criterion
passes when all of its reports pass.  Tolerances are fixed here and are the
ones the sweep is judged by.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .evaluator import EvalConfig, eval_at_infinity, eval_word
from .mzv import eval_mzv
from .oracle import eval_word_oracle
from .relations import (
    DEFAULT_Z_POINTS, E0, E1, EZ, RelationReport, check_duality, check_relation,
    check_sum, compositions, differential_check, g_lincomb, lemma32_check,
    mzv_duality_check, sum_formula_mzv_check, sum_relation,
)
from .words import (
    Letter, LinComb, Word, concat, enumerate_convergent, is_convergent, parse_lincomb,
    parse_word, partial, substitute_ez_zero, tau, tau_infinity,
)

DUALITY_TOL = 1e-6
DUALITY_RUNTIME_LIMIT = 300.0
SUM_TOL = 1e-6
DIFF_TOL = 1e-4
FD_STEP = 1e-5
MZV_TOL = 1e-9
ZETA2_TOL = 1e-10
ORACLE_TOL = 1e-5
CLOSED_FORM_TOL = 1e-8
LIMIT_TOL = 1e-2
LEMMA_TOL = 1e-4

# written-out instances of the sum relation, (k, r) = (3, 2) and (2, 2)
SUM_EXAMPLE_32 = parse_lincomb("[z,1,0] + [1,z,0] + [z,0,0] - [z,z,0]")
SUM_EXAMPLE_22 = parse_lincomb("[z,z] - [z,0] - [1,z]")


@dataclass
class CriterionResult:
    number: int
    title: str
    reports: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failures(self) -> list:
        return [r for r in self.reports if not r.passed]


def _exact(relation_id: str, ok: bool, **params) -> RelationReport:
    # symbolic check: residual 0 on success, 1 on failure
    return RelationReport(relation_id, params, [None], [0.0 if ok else 1.0], 0.5)


def words_up_to(n: int) -> list[Word]:
    return [w for m in range(n + 1) for w in enumerate_convergent(m)]


def all_words(n: int):
    return (Word(p) for p in itertools.product(Letter, repeat=n))


# ------------------------------------------------------------------ 1

def criterion_duality(cfg: EvalConfig, weight_max: int = 4,
                      z_points=DEFAULT_Z_POINTS) -> list:
    start = time.perf_counter()
    reports = [check_duality(w, z_points, DUALITY_TOL, cfg) for w in words_up_to(weight_max)]
    elapsed = time.perf_counter() - start
    reports.append(RelationReport("duality/runtime-seconds", {"words": len(reports)},
                                  [None], [elapsed], DUALITY_RUNTIME_LIMIT))
    return reports


# ------------------------------------------------------------------ 2

def criterion_sum(cfg: EvalConfig, k_max: int = 7, z_points=(2 + 0j, -1 + 0j)) -> list:
    reports = [check_sum(k, r, z_points, SUM_TOL, cfg)
               for k in range(2, k_max + 1) for r in range(1, k + 1)]
    reports.append(_exact("sum/example-k3r2-symbolic", sum_relation(3, 2) == SUM_EXAMPLE_32))
    reports.append(_exact("sum/example-k2r2-symbolic", sum_relation(2, 2) == -SUM_EXAMPLE_22))
    reports.append(check_relation(SUM_EXAMPLE_32, z_points, SUM_TOL, cfg, "sum/example-k3r2", {"k": 3, "r": 2}))
    reports.append(check_relation(SUM_EXAMPLE_22, z_points, SUM_TOL, cfg, "sum/example-k2r2", {"k": 2, "r": 2}))
    return reports


# ------------------------------------------------------------------ 3

def _words_over(letters, max_len):
    for n in range(max_len + 1):
        for p in itertools.product(letters, repeat=n):
            yield Word(p)


def example_derivative_shapes(max_len: int = 4) -> list:
    """Symbolic d_{z,0}, d_{z,1} of the word shapes with closed derivative formulas."""
    Z, O, I = Letter.Z, Letter.ZERO, Letter.ONE
    ok = {k: True for k in ("ez.e0.w", "ez.e1.w", "ez.w.e0", "e1.ez.w.e0", "e1.e0.w.e0")}

    def L(*parts):
        res = LinComb.one()
        for p in parts:
            res = concat(res, p)
        return res

    ez, e0, e1 = EZ, E0, E1
    for w in _words_over((O, I), max_len):
        if w and w[-1] == I:
            continue
        W = LinComb.word(w)
        x = L(ez, e0, W)
        ok["ez.e0.w"] &= partial(Z, O, x) == -L(ez, W) and partial(Z, I, x) == 0
        if not w:
            continue   # e_z e_1 alone is not convergent
        x = L(ez, e1, W)
        ok["ez.e1.w"] &= (partial(Z, I, x) == -L(ez, W) + L(e1, W)
                          and partial(Z, O, x) == -L(e1, W))
    for w in _words_over((O, Z), max_len):
        W = LinComb.word(w)
        x = L(ez, W, e0)
        ok["ez.w.e0"] &= partial(Z, O, x) == -L(ez, W) and partial(Z, I, x) == 0
        x = L(e1, ez, W, e0)
        ok["e1.ez.w.e0"] &= (partial(Z, O, x) == -L(e1, ez, W) + L(e1, W, e0)
                             and partial(Z, I, x) == L(ez - e1, W, e0))
        x = L(e1, e0, W, e0)
        ok["e1.e0.w.e0"] &= (partial(Z, O, x) == L(e1, W, e0) - L(e1, e0, W)
                             and partial(Z, I, x) == 0)
    return [_exact(f"diff/shape/{name}", good, max_len=max_len) for name, good in ok.items()]


def criterion_differential(cfg: EvalConfig, weight_max: int = 4,
                           z_points=DEFAULT_Z_POINTS) -> list:
    reports = example_derivative_shapes()
    for w in words_up_to(weight_max):
        for z in z_points:
            reports.append(differential_check(w, z, cfg, FD_STEP, DIFF_TOL))
    return reports


# ------------------------------------------------------------------ 4

def mzv_words(weight_max: int) -> list[Word]:
    return [w for n in range(2, weight_max + 1) for w in enumerate_convergent(n)
            if Letter.Z not in w]


def criterion_mzv(cfg: EvalConfig, dual_weight_max: int = 6, k_max: int = 8) -> list:
    reports = [mzv_duality_check(w, MZV_TOL, cfg) for w in mzv_words(dual_weight_max)]
    reports += [sum_formula_mzv_check(k, r, MZV_TOL, cfg)
                for k in range(2, k_max + 1) for r in range(1, k)]
    z2 = eval_mzv((2,), cfg.series_truncation_tol)
    reports.append(RelationReport("mzv/zeta2-vs-pi2over6", {}, [None],
                                  [abs(z2 - math.pi ** 2 / 6)], ZETA2_TOL))
    return reports


# ------------------------------------------------------------------ 5

LN2 = math.log(2)
CLOSED_FORMS = [
    ("z", 2, -LN2),
    ("z,0", 2, -(math.pi ** 2 / 12 - LN2 ** 2 / 2)),   # -Li2(1/2)
    ("z,z", 2, LN2 ** 2 / 2),
]


def criterion_oracle(cfg: EvalConfig, weight_max: int = 3,
                     z_points=DEFAULT_Z_POINTS) -> list:
    reports = []
    for w in words_up_to(weight_max):
        res = [abs(eval_word(w, z, cfg).value - eval_word_oracle(w, z)) for z in z_points]
        reports.append(RelationReport(f"oracle/w={w}", {"w": str(w)}, list(z_points),
                                      res, ORACLE_TOL, 2 * len(z_points)))
    for text, z, exact in CLOSED_FORMS:
        w = parse_word(text)
        reports.append(RelationReport(f"closed-form/w={text}", {"w": text}, [complex(z)],
                                      [abs(eval_word(w, z, cfg).value - exact)],
                                      CLOSED_FORM_TOL, 1))
    return reports


# ------------------------------------------------------------------ 6

LIMIT_POINTS = (10.0, 100.0, 1000.0)


def criterion_limits(cfg: EvalConfig, weight_max: int = 3) -> list:
    reports = []
    for w in words_up_to(weight_max):
        if Letter.Z not in w:
            continue
        mags = [abs(eval_word(w, z, cfg).value) for z in LIMIT_POINTS]
        monotone = all(a > b for a, b in zip(mags, mags[1:]))
        reports.append(_exact(f"limit/monotone/w={w}", monotone,
                              magnitudes=[repr(m) for m in mags]))
        gap = abs(eval_word(w, LIMIT_POINTS[-1], cfg).value - eval_at_infinity(w, cfg))
        reports.append(RelationReport(f"limit/value/w={w}", {"w": str(w)},
                                      [complex(LIMIT_POINTS[-1])], [gap], LIMIT_TOL, 1))
    return reports


# ------------------------------------------------------------------ 7

LEMMA_CASES = ((3, 2), (4, 2), (4, 3), (5, 3))


def criterion_lemma(cfg: EvalConfig, z_points=(2 + 0j, -1 + 0j)) -> list:
    return [lemma32_check(k, r, z, cfg, FD_STEP, LEMMA_TOL)
            for k, r in LEMMA_CASES for z in z_points]


# ------------------------------------------------------------------ 8

def random_lincomb(rng: random.Random, max_weight: int = 3, terms: int = 3) -> LinComb:
    out = []
    for _ in range(terms):
        n = rng.randint(0, max_weight)
        w = Word(rng.choice(list(Letter)) for _ in range(n))
        out.append((w, Fraction(rng.randint(-5, 5), rng.randint(1, 4))))
    return LinComb(out)


def criterion_symbolic(involution_weight: int = 6, seed: int = 20240601) -> list:
    reports = []
    ok = all(tau(tau(w)) == LinComb.word(w)
             for n in range(involution_weight + 1) for w in all_words(n))
    reports.append(_exact("symbolic/tau-involution", ok, weight_max=involution_weight))

    rng = random.Random(seed)
    ok = True
    for _ in range(200):
        x, y = random_lincomb(rng), random_lincomb(rng)
        ok &= tau(concat(x, y)) == concat(tau(y), tau(x))
    reports.append(_exact("symbolic/tau-anti-multiplicative", ok, samples=200, seed=seed))

    ok = True
    for w in words_up_to(6):
        for x, y in itertools.product(Letter, repeat=2):
            ok &= all(is_convergent(v) for v in partial(x, y, w))
    reports.append(_exact("symbolic/partial-well-defined", ok, weight_max=6))

    ok = all(all(is_convergent(v) for v in tau(w)) for w in words_up_to(6))
    reports.append(_exact("symbolic/tau-preserves-convergent", ok, weight_max=6))

    ok = all(tau_infinity(w) == substitute_ez_zero(tau(w))
             for n in range(7) for w in all_words(n))
    reports.append(_exact("symbolic/tau-infinity-is-limit-of-tau", ok, weight_max=6))

    ok = all(sum_relation(k, 1) == 0 for k in range(2, 11))
    reports.append(_exact("symbolic/sum-r1-vanishes", ok, k_max=10))

    ok = True
    for k in range(2, 7):
        e1k = LinComb.word([Letter.ONE] * (k - 1) + [Letter.ZERO])
        ok &= g_lincomb(k, k) == (-1) ** k * tau(e1k)
        ok &= tau_infinity(E1 * E0 ** (k - 1)) == (-1) ** k * e1k
    reports.append(_exact("symbolic/sum-r-equals-k-duality-chain", ok, k_max=6))

    ok = all(len(enumerate_convergent(n)) == 4 * 3 ** (n - 2) for n in range(2, 11))
    ok &= len(enumerate_convergent(0)) == 1 and len(enumerate_convergent(1)) == 1
    reports.append(_exact("symbolic/convergent-word-counts", ok, weight_max=10))

    ok = all(sum(1 for _ in compositions(k, r)) == math.comb(k - 2, r - 1)
             for k in range(2, 11) for r in range(1, k + 1))
    reports.append(_exact("symbolic/composition-counts", ok, k_max=10))
    return reports


CRITERIA = (
    (1, "duality sweep, weight <= 4", criterion_duality),
    (2, "sum formula, 2 <= k <= 7", criterion_sum),
    (3, "differential formula, weight <= 4", criterion_differential),
    (4, "MZV duality and sum formula by series", criterion_mzv),
    (5, "oracle equivalence and closed forms", criterion_oracle),
    (6, "limit z -> oo", criterion_limits),
    (7, "derivative identities for f and g", criterion_lemma),
    (8, "symbolic suite", None),
)


def run_criterion(number: int, cfg: EvalConfig | None = None) -> CriterionResult:
    cfg = cfg or EvalConfig()
    _, title, fn = CRITERIA[number - 1]
    reports = criterion_symbolic() if fn is None else fn(cfg)
    return CriterionResult(number, title, reports)


def run_all(cfg: EvalConfig | None = None) -> list[CriterionResult]:
    return [run_criterion(n, cfg) for n, _, _ in CRITERIA]
