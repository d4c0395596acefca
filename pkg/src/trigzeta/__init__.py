"""Riemann zeta via finite cotangent/cosecant power sums.

The package has four layers:

* :mod:`trigzeta.trig_sums` -- the finite trigonometric power sums
  whose q -> infinity limit is zeta(s) for Re(s) > 1, plus the catalog
  of classical special cases.
* :mod:`trigzeta.oracle` -- six independent classical reference
  computations of zeta used for cross-validation.
* :mod:`trigzeta.tannery` -- a checkable harness for the
  limit-interchange theorem that justifies the representations.
* :mod:`trigzeta.convergence` -- sweeps, empirical order fitting and
  Richardson extrapolation.
"""

from .convergence import (
    ConvergenceSeries,
    OrderFit,
    QSchedule,
    SweepRecord,
    empirical_order,
    richardson_accelerate,
    run_sweep,
)
from .errors import (
    CrossCheckError,
    DomainError,
    InsufficientDataError,
    UnsupportedRangeError,
    UsageError,
)
from .oracle import (
    BernoulliTable,
    PrimeCache,
    StieltjesTable,
    ZetaReference,
    bernoulli_numbers,
    reference_zeta,
    sieve_primes,
    stieltjes,
    zeta_dirichlet,
    zeta_eta,
    zeta_euler_maclaurin,
    zeta_euler_product,
    zeta_even,
    zeta_laurent,
)
from .tannery import (
    ConditionIIReport,
    ConditionIReport,
    ConditionReport,
    ExchangeResult,
    TanneryInstance,
    c_bound,
    exp_instance,
    exp_limit,
    gamma_limit,
    tannery_exchange,
    term_bound,
    verify_condition_i,
    verify_condition_ii,
    zeta_trig_instance,
)
from .trig_sums import (
    CATALOG_IDS,
    LimitEstimate,
    SumEvaluation,
    TrigKind,
    TrigSumSpec,
    classical_form,
    finite_trig_sum,
    term,
    upper_index,
    zeta_limit_estimate,
)

__version__ = "0.1.0"

__all__ = [
    "BernoulliTable",
    "CATALOG_IDS",
    "ConditionIIReport",
    "ConditionIReport",
    "ConditionReport",
    "ConvergenceSeries",
    "CrossCheckError",
    "DomainError",
    "ExchangeResult",
    "InsufficientDataError",
    "LimitEstimate",
    "OrderFit",
    "PrimeCache",
    "QSchedule",
    "StieltjesTable",
    "SumEvaluation",
    "SweepRecord",
    "TanneryInstance",
    "TrigKind",
    "TrigSumSpec",
    "UnsupportedRangeError",
    "UsageError",
    "ZetaReference",
    "bernoulli_numbers",
    "c_bound",
    "classical_form",
    "empirical_order",
    "exp_instance",
    "exp_limit",
    "finite_trig_sum",
    "gamma_limit",
    "reference_zeta",
    "richardson_accelerate",
    "run_sweep",
    "sieve_primes",
    "stieltjes",
    "tannery_exchange",
    "term",
    "term_bound",
    "upper_index",
    "verify_condition_i",
    "verify_condition_ii",
    "zeta_dirichlet",
    "zeta_eta",
    "zeta_euler_maclaurin",
    "zeta_euler_product",
    "zeta_even",
    "zeta_laurent",
    "zeta_limit_estimate",
    "zeta_trig_instance",
]
