"""
Relation families among the L(w) and checkers that evaluate them.

Every generator returns a LinComb that should evaluate to zero; checkers
evaluate it (by quadrature, or by MZV series for the z -> oo and z -> 1
limits) and wrap the residuals in a RelationReport.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import comb

from .evaluator import (
    EvalConfig, derivative_fd, eval_at_infinity, eval_lincomb, format_complex,
)
from .mzv import eval_mzv
from .words import (
    Letter, LinComb, Word, format_word, is_convergent, partial, tau, tau_infinity,
)

__all__ = [
    "RelationReport", "duality_relation", "sum_relation", "sum_words",
    "compositions", "f_lincomb", "g_lincomb", "broadhurst_relation",
    "mzv_duality_check", "sum_formula_mzv_check", "differential_check",
    "lemma32_check", "check_relation", "DEFAULT_Z_POINTS",
    "RELATION_TOL", "DIFF_TOL", "SERIES_TOL", "check_duality", "check_broadhurst",
    "check_sum", "differential_rhs", "h_value", "expected_sum_word_count",
]

DEFAULT_Z_POINTS = (2 + 0j, -1 + 0j, 3 + 2j)
RELATION_TOL = 1e-6
DIFF_TOL = 1e-4
SERIES_TOL = 1e-9

E0 = LinComb.letter(Letter.ZERO)
E1 = LinComb.letter(Letter.ONE)
EZ = LinComb.letter(Letter.Z)

ZETA_LIMIT = complex("inf")   # stands for z -> oo in reports
ONE_LIMIT = 1 + 0j            # stands for z -> 1+0


@dataclass
class RelationReport:
    """Outcome of one check.  A ``None`` z point marks a z-independent
    (symbolic or series) check; ``inf`` and ``1`` stand for the limits."""

    relation_id: str
    parameters: dict
    z_points: list
    residuals: list
    tolerance: float
    evaluations: int = 0
    passed: bool = field(init=False)

    def __post_init__(self):
        if len(self.residuals) != len(self.z_points):
            raise ValueError("one residual per z point")
        self.passed = max(self.residuals, default=0.0) < self.tolerance

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def to_dict(self) -> dict:
        return {
            "relation_id": self.relation_id,
            "parameters": self.parameters,
            "z_points": [None if z is None else format_complex(z) for z in self.z_points],
            "residuals": list(self.residuals),
            "tolerance": self.tolerance,
            "pass": self.passed,
            "evaluations": self.evaluations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _require_convergent(w) -> Word:
    w = w if isinstance(w, Word) else Word(w)
    if not is_convergent(w):
        raise ValueError(f"[{format_word(w)}] is not a convergent word")
    return w


def _require_kr(k: int, r: int):
    if not (k >= 2 and 1 <= r <= k):
        raise ValueError(f"need k >= 2 and 1 <= r <= k, got k={k}, r={r}")


# ------------------------------------------------------------ generators

def duality_relation(w) -> LinComb:
    w = _require_convergent(w)
    return LinComb.word(w) - tau(w)


def compositions(k: int, r: int):
    """(k_1, ..., k_r) with sum k, k_i >= 1 and k_r >= 2."""
    if r < 1 or k < r + 1:
        return
    for cuts in itertools.combinations(range(1, k - 1), r - 1):
        bounds = (0,) + cuts + (k,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def sum_words(k: int, r: int) -> list[Word]:
    """e_z e0^{k1-1} e1 e0^{k2-1} ... e1 e0^{kr-1} over admissible compositions."""
    _require_kr(k, r)
    out = []
    for parts in compositions(k, r):
        letters = [Letter.Z] + [Letter.ZERO] * (parts[0] - 1)
        for p in parts[1:]:
            letters += [Letter.ONE] + [Letter.ZERO] * (p - 1)
        out.append(Word(letters))
    return sorted(out)


def f_lincomb(k: int, r: int) -> LinComb:
    return LinComb((w, 1) for w in sum_words(k, r))


def g_lincomb(k: int, r: int) -> LinComb:
    """(e1 - ez)(e0 - ez)^{r-1} e0^{k-r}."""
    _require_kr(k, r)
    return (E1 - EZ) * (E0 - EZ) ** (r - 1) * E0 ** (k - r)


def sum_relation(k: int, r: int) -> LinComb:
    """(-1)^r f_{k,r} + e1 e0^{k-1} - g_{k,r}; evaluates to zero."""
    _require_kr(k, r)
    return (-1) ** r * f_lincomb(k, r) + E1 * E0 ** (k - 1) - g_lincomb(k, r)


def broadhurst_relation(w):
    return duality_relation(w), -1 + 0j


# -------------------------------------------------------------- checkers

def _count_evals(x: LinComb) -> int:
    return sum(1 for w in x if w.weight > 0)


def check_relation(x, z_points, tol: float = RELATION_TOL, cfg: EvalConfig | None = None,
                   relation_id: str = "relation", parameters: dict | None = None) -> RelationReport:
    cfg = cfg or EvalConfig()
    x = LinComb() if x == 0 else x
    z_points = [complex(z) for z in z_points]
    residuals = [abs(eval_lincomb(x, z, cfg).value) for z in z_points]
    return RelationReport(relation_id, dict(parameters or {}), z_points, residuals, tol,
                          _count_evals(x) * len(z_points))


def check_duality(w, z_points=DEFAULT_Z_POINTS, tol: float = RELATION_TOL,
                  cfg: EvalConfig | None = None) -> RelationReport:
    w = _require_convergent(w)
    return check_relation(duality_relation(w), z_points, tol, cfg,
                          f"duality/w={format_word(w)}", {"w": format_word(w)})


def check_broadhurst(w, tol: float = RELATION_TOL, cfg: EvalConfig | None = None) -> RelationReport:
    rel, z = broadhurst_relation(w)
    return check_relation(rel, [z], tol, cfg, f"broadhurst/w={format_word(w)}",
                          {"w": format_word(w)})


def check_sum(k: int, r: int, z_points=(2 + 0j, -1 + 0j), tol: float = RELATION_TOL,
              cfg: EvalConfig | None = None) -> RelationReport:
    return check_relation(sum_relation(k, r), z_points, tol, cfg,
                          f"sum/k={k},r={r}", {"k": k, "r": r})


def mzv_duality_check(w, tol: float = SERIES_TOL, cfg: EvalConfig | None = None) -> RelationReport:
    """|L(w - tau_oo(w))| at z = oo, both sides by MZV series."""
    cfg = cfg or EvalConfig()
    w = _require_convergent(w)
    if Letter.Z in w:
        raise ValueError("MZV duality needs a word in e0, e1 only")
    rel = LinComb.word(w) - tau_infinity(w)
    residual = abs(eval_at_infinity(rel, cfg))
    dual = tau_infinity(w)
    return RelationReport(
        f"mzv-duality/w={format_word(w)}",
        {"w": format_word(w), "dual": format_word(dual.words()[0]) if dual else ""},
        [ZETA_LIMIT], [residual], tol, 0,
    )


def sum_formula_mzv_check(k: int, r: int, tol: float = SERIES_TOL,
                          cfg: EvalConfig | None = None) -> RelationReport:
    """|sum over compositions of zeta(k_1..k_r) - zeta(k)|, series only."""
    cfg = cfg or EvalConfig()
    if not (k > r >= 1):
        raise ValueError(f"need k > r >= 1, got k={k}, r={r}")
    stol = cfg.series_truncation_tol
    lhs = sum(eval_mzv(p, stol) for p in compositions(k, r))
    residual = abs(lhs - eval_mzv((k,), stol))
    params = {"k": k, "r": r}
    if r == 1:
        # the z -> 1+0 limit argument covers k > r > 1 only
        params["note"] = "r=1 is the trivial case"
    return RelationReport(f"mzv-sum/k={k},r={r}", params, [ONE_LIMIT], [residual], tol, 0)


def differential_rhs(x, z, cfg: EvalConfig | None = None) -> complex:
    """sum_{a in {0,1}} L(d_{z,a} x) / (z - a)."""
    cfg = cfg or EvalConfig()
    z = complex(z)
    return sum(
        eval_lincomb(partial(Letter.Z, a, x), z, cfg).value / (z - int(a))
        for a in (Letter.ZERO, Letter.ONE)
    )


def differential_check(w, z, cfg: EvalConfig | None = None, h: float = 1e-5,
                       tol: float = DIFF_TOL) -> RelationReport:
    cfg = cfg or EvalConfig()
    w = _require_convergent(w)
    z = complex(z)
    lhs = derivative_fd(LinComb.word(w), z, h, cfg)
    rhs = differential_rhs(w, z, cfg)
    n_rhs = sum(_count_evals(partial(Letter.Z, a, w)) for a in (Letter.ZERO, Letter.ONE))
    return RelationReport(
        f"diff/w={format_word(w)}", {"w": format_word(w), "h": h},
        [z], [abs(lhs - rhs)], tol, 2 * int(w.weight > 0) + n_rhs,
    )


def h_value(k: int, r: int, cfg: EvalConfig | None = None) -> float:
    """h_{k,r} = sum over compositions of L(e1 e0^{k1-1} ... ) = (-1)^r sum zeta."""
    cfg = cfg or EvalConfig()
    return (-1) ** r * sum(eval_mzv(p, cfg.series_truncation_tol) for p in compositions(k, r))


def lemma32_check(k: int, r: int, z, cfg: EvalConfig | None = None, h: float = 1e-5,
                  tol: float = DIFF_TOL) -> RelationReport:
    """Derivative identities for f_{k,r} and g_{k,r} (1 < r < k).

    f' = -f_{k-1,r}/z - f_{k-1,r-1}/(z-1) + (1/(z-1) - 1/z) h_{k-1,r-1}
    g' = -g_{k-1,r}/z + g_{k-1,r-1}/(z-1)
    The residual is the larger of the two; both are kept in ``parameters``.
    """
    cfg = cfg or EvalConfig()
    if not 1 < r < k:
        raise ValueError(f"need 1 < r < k, got k={k}, r={r}")
    z = complex(z)

    def L(x):
        return eval_lincomb(x, z, cfg).value

    f, g = f_lincomb(k, r), g_lincomb(k, r)
    hv = h_value(k - 1, r - 1, cfg)
    f_rhs = (-L(f_lincomb(k - 1, r)) / z - L(f_lincomb(k - 1, r - 1)) / (z - 1)
             + (1 / (z - 1) - 1 / z) * hv)
    g_rhs = -L(g_lincomb(k - 1, r)) / z + L(g_lincomb(k - 1, r - 1)) / (z - 1)
    f_res = abs(derivative_fd(f, z, h, cfg) - f_rhs)
    g_res = abs(derivative_fd(g, z, h, cfg) - g_rhs)
    n = (2 * (len(f) + len(g)) + len(f_lincomb(k - 1, r)) + len(f_lincomb(k - 1, r - 1))
         + len(g_lincomb(k - 1, r)) + len(g_lincomb(k - 1, r - 1)))
    return RelationReport(
        f"lemma32/k={k},r={r}",
        {"k": k, "r": r, "f_residual": f_res, "g_residual": g_res, "h": h},
        [z], [max(f_res, g_res)], tol, n,
    )


def expected_sum_word_count(k: int, r: int) -> int:
    return comb(k - 2, r - 1)
