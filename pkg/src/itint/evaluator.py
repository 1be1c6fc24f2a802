"""
Numerical evaluation of L(w) = I(0; a_1, ..., a_n; 1) for z off [0, 1].

The iterated integral is built one letter at a time,

    g_1(t) = int_0^t ds / (s - a_1),   g_j(t) = int_0^t g_{j-1}(s) ds / (s - a_j),

on a composite Gauss-Legendre mesh that is geometrically graded toward both
endpoints of [0, 1].  Inside each panel g_{j-1}(s) / (s - a_j) is replaced by
its interpolant at the Gauss nodes and integrated exactly up to every node
(a spectral integration matrix), so all g_j live on the same node set.
Interior letters 0 and 1 make the g_j logarithmic at the endpoints; the
grading keeps every panel a fixed ratio away from those singularities.

Nodes close to t = 1 are carried together with their complement 1 - t so the
factor 1 / (s - 1) never loses precision.
"""

from __future__ import annotations

import cmath
import logging
import math
import re
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np
from numpy.polynomial import legendre

from .mzv import eval_mzv
from .words import Letter, LinComb, Word, as_lincomb, is_convergent, substitute_ez_zero, word_to_kindex

log = logging.getLogger(__name__)

__all__ = [
    "EvalConfig", "EvalResult", "EvaluationError", "DomainError", "ConvergenceError",
    "parse_complex", "format_complex", "parse_complex_list", "segment_distance",
    "eval_word", "eval_lincomb", "derivative_fd", "eval_at_infinity",
]


class EvaluationError(ValueError):
    """Evaluation refused or failed."""


class DomainError(EvaluationError):
    pass


class ConvergenceError(EvaluationError):
    """Mesh doubling did not reach the target; ``result`` holds the best value."""

    def __init__(self, message: str, result: "EvalResult"):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class EvalConfig:
    panels_per_side: int = 14
    nodes_per_panel: int = 16
    grading_ratio: float = 0.5
    target_tol: float = 1e-9
    series_truncation_tol: float = 1e-12
    segment_cutoff: float = 1e-3
    max_weight: int = 10
    max_doublings: int = 4

    def __post_init__(self):
        if self.panels_per_side < 1 or self.nodes_per_panel < 2 or self.max_weight < 0:
            raise ValueError("panel, node and weight counts must be positive")
        if self.max_doublings < 1:
            raise ValueError("max_doublings must be >= 1")
        if not 0.0 < self.grading_ratio < 1.0:
            raise ValueError("grading_ratio must lie in (0, 1)")
        if min(self.target_tol, self.series_truncation_tol, self.segment_cutoff) <= 0:
            raise ValueError("tolerances and cutoff must be positive")


@dataclass(frozen=True)
class EvalResult:
    value: complex
    est_error: float
    mesh_used: str = ""


# ---------------------------------------------------------------- points

_COMPLEX_RE = re.compile(r"^[0-9.eE+\-ij]+$")


def parse_complex(text: str) -> complex:
    """Parse ``2``, ``-1``, ``3+2i``, ``0.5-1.5i``, ``2i``."""
    s = text.strip().replace(" ", "")
    if not s or not _COMPLEX_RE.match(s):
        raise ValueError(f"not a complex literal: {text!r}")
    try:
        z = complex(s.replace("i", "j"))
    except ValueError:
        raise ValueError(f"not a complex literal: {text!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"not a finite complex number: {text!r}")
    return z


def parse_complex_list(text: str) -> list[complex]:
    return [parse_complex(p) for p in text.split(",") if p.strip()]


def _fmt_real(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def format_complex(z) -> str:
    z = complex(z)
    if z.imag == 0:
        return _fmt_real(z.real)
    im = _fmt_real(abs(z.imag))
    im = "" if im == "1" else im
    if z.real == 0:
        return f"{'-' if z.imag < 0 else ''}{im}i"
    return f"{_fmt_real(z.real)}{'-' if z.imag < 0 else '+'}{im}i"


def segment_distance(z: complex) -> float:
    """Distance from z to the closed segment [0, 1]."""
    if z.real < 0:
        return abs(z)
    if z.real > 1:
        return abs(z - 1)
    return abs(z.imag)


def _check_point(z, cfg: EvalConfig) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"z = {z} is not finite")
    d = segment_distance(z)
    if d <= cfg.segment_cutoff:
        raise DomainError(
            f"z = {format_complex(z)} is within {d:.3g} of [0,1] "
            f"(cutoff {cfg.segment_cutoff:g})"
        )
    return z


# ------------------------------------------------------------------ mesh

@lru_cache(maxsize=None)
def _panel_rule(n: int):
    """Gauss-Legendre nodes/weights on [-1, 1] and the matrix mapping
    samples at the nodes to the integral from -1 up to each node."""
    x, w = legendre.leggauss(n)
    vander = legendre.legvander(x, n - 1)
    vint = np.empty((n, n))
    for m in range(n):
        e = np.zeros(n)
        e[m] = 1.0
        vint[:, m] = legendre.legval(x, legendre.legint(e, lbnd=-1))
    S = vint @ np.linalg.inv(vander)
    S.flags.writeable = False
    return x, w, S


@dataclass(frozen=True)
class _Mesh:
    t: np.ndarray        # nodes, shape (P, n)
    u: np.ndarray        # 1 - t, accurate near t = 1
    half: np.ndarray     # panel half widths, shape (P,)
    n_panels: int
    description: str


def _breakpoints(levels: int, q: float, z: complex, subdiv: int):
    # each breakpoint is a pair (t, 1 - t)
    pts = [(0.0, 1.0), (0.5, 0.5), (1.0, 0.0)]
    for j in range(1, levels + 1):
        s = 0.5 * q ** j
        pts.append((s, 1.0 - s))
        pts.append((1.0 - s, s))
    d = segment_distance(z)
    if d < 0.5:
        # pole close to the segment: geometric panels around its foot point
        x0 = min(max(z.real, 0.0), 1.0)
        k = 0
        while d * 2 ** k < 1.0:
            for p in (x0 - d * 2 ** k, x0 + d * 2 ** k):
                if 0.0 < p < 1.0:
                    pts.append((p, 1.0 - p))
            k += 1
        if 0.0 < x0 < 1.0:
            pts.append((x0, 1.0 - x0))
    pts.sort(key=lambda p: (p[0], -p[1]))
    merged = [pts[0]]
    for p in pts[1:]:
        prev = merged[-1]
        gap = p[0] - prev[0] if prev[0] < 0.5 else prev[1] - p[1]
        if gap > 0:
            merged.append(p)
    if subdiv > 1:
        fine = [merged[0]]
        for a, b in zip(merged, merged[1:]):
            for i in range(1, subdiv + 1):
                f = i / subdiv
                fine.append((a[0] + f * (b[0] - a[0]), a[1] + f * (b[1] - a[1])))
        merged = fine
    return merged


@lru_cache(maxsize=64)
def _mesh(levels: int, n: int, q: float, z: complex, subdiv: int) -> _Mesh:
    x, _, _ = _panel_rule(n)
    bps = _breakpoints(levels, q, z, subdiv)
    a = np.array(bps[:-1])
    b = np.array(bps[1:])
    mid_t = 0.5 * (a[:, 0] + b[:, 0])
    mid_u = 0.5 * (a[:, 1] + b[:, 1])
    # take the width from whichever coordinate is small, hence accurate
    half = np.where(mid_u < 0.5, 0.5 * (a[:, 1] - b[:, 1]), 0.5 * (b[:, 0] - a[:, 0]))
    t = mid_t[:, None] + half[:, None] * x[None, :]
    u = mid_u[:, None] - half[:, None] * x[None, :]
    desc = f"levels={levels},subdiv={subdiv},panels={len(half)},nodes={n}"
    return _Mesh(t, u, half, len(half), desc)


def _integrate_word(w: Word, z: complex, mesh: _Mesh, n: int) -> complex:
    _, wts, S = _panel_rule(n)
    g = None
    total = 1.0 + 0j
    for a in w:
        if a == Letter.ZERO:
            f = 1.0 / mesh.t
        elif a == Letter.ONE:
            f = -1.0 / mesh.u
        else:
            f = 1.0 / (mesh.t - z)
        if g is not None:
            f = f * g
        local = (f @ S.T) * mesh.half[:, None]
        panel_tot = (f @ wts) * mesh.half
        offsets = np.cumsum(panel_tot) - panel_tot
        g = local + offsets[:, None]
        total = complex(panel_tot.sum())
    return total


def _mesh_at(cfg: EvalConfig, z: complex, m: int) -> _Mesh:
    return _mesh(cfg.panels_per_side * 2 ** m, cfg.nodes_per_panel,
                 cfg.grading_ratio, z, 2 ** m)


@lru_cache(maxsize=65536)
def _eval_word_cached(w: Word, z: complex, cfg: EvalConfig) -> EvalResult:
    prev = None
    best = None
    for m in range(cfg.max_doublings + 1):
        mesh = _mesh_at(cfg, z, m)
        val = _integrate_word(w, z, mesh, cfg.nodes_per_panel)
        if prev is not None:
            err = abs(val - prev)
            best = EvalResult(val, err, mesh.description)
            if err < cfg.target_tol:
                return best
        prev = val
    raise ConvergenceError(
        f"L([{w}]) at z={format_complex(z)} did not converge: "
        f"last difference {best.est_error:.3g} > {cfg.target_tol:g}",
        best,
    )


def mesh_values(w, z, cfg: EvalConfig | None = None, doublings: int = 3) -> list[complex]:
    """L(w) on the base mesh and each of the next ``doublings`` refinements."""
    cfg = cfg or EvalConfig()
    w = w if isinstance(w, Word) else Word(w)
    z = _check_point(z, cfg)
    return [_integrate_word(w, z, _mesh_at(cfg, z, m), cfg.nodes_per_panel)
            for m in range(doublings + 1)]


def eval_word(w, z, cfg: EvalConfig | None = None) -> EvalResult:
    """Evaluate L(w) at z by cumulative quadrature with mesh doubling."""
    cfg = cfg or EvalConfig()
    w = w if isinstance(w, Word) else Word(w)
    if not is_convergent(w):
        raise DomainError(f"[{w}] is not a convergent word")
    if w.weight > cfg.max_weight:
        raise DomainError(f"weight {w.weight} exceeds max_weight {cfg.max_weight}")
    z = _check_point(z, cfg)
    if w.weight == 0:
        return EvalResult(1.0 + 0j, 0.0, "exact")
    return _eval_word_cached(w, z, cfg)


def eval_lincomb(x, z, cfg: EvalConfig | None = None) -> EvalResult:
    cfg = cfg or EvalConfig()
    x = as_lincomb(x)
    z = _check_point(z, cfg)
    value = 0j
    err = 0.0
    meshes = set()
    for w, c in x.items():
        r = eval_word(w, z, cfg)
        value += float(c) * r.value
        err += abs(float(c)) * r.est_error
        meshes.add(r.mesh_used)
    return EvalResult(value, err, ";".join(sorted(meshes)))


def derivative_fd(x, z, h: float = 1e-5, cfg: EvalConfig | None = None,
                  direction: str = "real") -> complex:
    """Central difference of L(x) at z along the real or imaginary axis."""
    cfg = cfg or EvalConfig()
    z = complex(z)
    step = {"real": complex(h), "imag": complex(0, h)}.get(direction)
    if step is None:
        raise ValueError(f"direction must be 'real' or 'imag', not {direction!r}")
    for p in (z + step, z - step):
        _check_point(p, cfg)
    hi = eval_lincomb(x, z + step, cfg).value
    lo = eval_lincomb(x, z - step, cfg).value
    return (hi - lo) / (2 * step)


def eval_at_infinity(x, cfg: EvalConfig | None = None) -> float:
    """lim_{z -> oo} L(x): drop words containing e_z, evaluate the rest as MZVs."""
    cfg = cfg or EvalConfig()
    total = 0.0
    for w, c in substitute_ez_zero(as_lincomb(x)).items():
        if w.weight == 0:
            total += float(c)
            continue
        idx = word_to_kindex(w)
        total += float(c) * (-1) ** idx.depth * eval_mzv(idx, cfg.series_truncation_tol)
    return total


def with_overrides(cfg: EvalConfig, **kw) -> EvalConfig:
    return replace(cfg, **{k: v for k, v in kw.items() if v is not None})
