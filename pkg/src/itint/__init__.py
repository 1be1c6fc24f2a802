"""Iterated integrals on P^1 minus {0, 1, z, oo}: word algebra, numerical
evaluation, and the duality / sum / differential relation families."""

from .evaluator import (
    ConvergenceError, DomainError, EvalConfig, EvalResult, EvaluationError,
    derivative_fd, eval_at_infinity, eval_lincomb, eval_word, format_complex, parse_complex,
)
from .mzv import eval_mzv
from .oracle import eval_word_oracle
from .relations import (
    RelationReport, broadhurst_relation, check_broadhurst, check_duality, check_relation,
    check_sum, differential_check,
    duality_relation, lemma32_check, mzv_duality_check, sum_formula_mzv_check,
    sum_relation, sum_words,
)
from .words import (
    KIndex, Letter, LinComb, Word, WordParseError, concat, enumerate_convergent,
    format_word, is_convergent, mzv_word, parse_lincomb, parse_word, partial,
    substitute_ez_zero, tau, tau_infinity,
)

__version__ = "0.1.0"
