"""
Reference evaluation of I(0; a_1, ..., a_n; 1) by nested adaptive quadrature.

Shares nothing with the cumulative-mesh evaluator: each level calls QUADPACK's
adaptive subdivision on the next inner integral, and the innermost one-letter
integral is the closed-form logarithm.  Cost is roughly (evaluations per
quad)^(n-1), so it is limited to short words.
"""

from __future__ import annotations

import cmath
import math
import warnings

from scipy.integrate import IntegrationWarning, quad

from .words import Letter, Word, format_word, is_convergent

__all__ = ["eval_word_oracle", "ORACLE_MAX_WEIGHT"]

ORACLE_MAX_WEIGHT = 4


def _pole(a: Letter, z: complex) -> complex:
    return {Letter.ZERO: 0j, Letter.ONE: 1 + 0j, Letter.Z: z}[a]


def _inner(word: tuple, t: float, z: complex, tol: float) -> complex:
    # I(0; word; t)
    if not word:
        return 1 + 0j
    p = _pole(word[-1], z)
    if len(word) == 1:
        # int_0^t ds/(s-p) = log(1 - t/p); 1 - t/p avoids the negative axis
        # because p is 1 or off [0, 1]
        return cmath.log(1 - t / p) if p != 1 else complex(math.log1p(-t))
    head = word[:-1]
    val, _ = quad(
        lambda s: _inner(head, s, z, tol) / (s - p),
        0.0, t, epsabs=tol, epsrel=tol, limit=200, complex_func=True,
    )
    return val


def eval_word_oracle(w, z, tol: float | None = None) -> complex:
    """I(0; w; 1) at z.  Default tolerance is 1e-11, relaxed to 1e-7 at
    weight 4 where the tight setting takes minutes per word."""
    w = w if isinstance(w, Word) else Word(w)
    if w.weight > ORACLE_MAX_WEIGHT:
        raise ValueError(f"oracle limited to weight <= {ORACLE_MAX_WEIGHT}, got {w.weight}")
    if not is_convergent(w):
        raise ValueError(f"[{format_word(w)}] is not a convergent word")
    if tol is None:
        tol = 1e-11 if w.weight <= 3 else 1e-7
    with warnings.catch_warnings():
        # roundoff warnings fire when the tolerance is already met at the
        # double-precision floor; agreement is checked externally anyway
        warnings.simplefilter("ignore", IntegrationWarning)
        return _inner(tuple(w), 1.0, complex(z), tol)
