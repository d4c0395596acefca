"""Finite cotangent/cosecant power sums whose q -> infinity limit is zeta(s).

For Re(s) > 1 the zeta function is the limit of

    (pi/(2q+m))^s * sum_{p=1}^{floor((2q+n-1)/2)} cot^s(p*pi/(2q+n))

and of the same expression with csc in place of cot.  The nonnegative
integers m and n shift the prefactor and the angle denominator; every
classical cotangent/cosecant limit formula for zeta(2n), zeta(2n+1) and
general s is an (m, n, kind) instance of this family, catalogued in
``classical_form``.

Admissibility: the angle p*pi/(2q+n) must stay strictly inside
(0, pi/2) for all p up to the upper index, which holds exactly when
n = 0 with q >= 2, or n >= 1 with q >= 1.

Every base (pi/(2q+m))*cot(...) or (pi/(2q+m))*csc(...) is a strictly
positive real, so complex powers are defined branch-free as
exp(s * ln base) with the real natural logarithm.  For real s the same
value is computed with ``math.pow``, which is a tick more accurate and
identical in exact arithmetic.

All functions here are pure; the module holds no mutable state and is
safe to call from any number of threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .accumulate import ComplexNeumaier
from .errors import DomainError


class TrigKind(str, Enum):
    COT = "cot"
    CSC = "csc"


@dataclass(frozen=True)
class TrigSumSpec:
    """Parameterization (kind, m, n) of one finite trigonometric power sum.

    m shifts the prefactor denominator (pi/(2q+m)); n shifts the angle
    denominator (p*pi/(2q+n)).  Both must be nonnegative.
    """

    kind: TrigKind
    m: int = 0
    n: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.kind, TrigKind):
            object.__setattr__(self, "kind", TrigKind(self.kind))
        if self.m < 0 or self.n < 0:
            raise DomainError(f"shifts must be nonnegative, got m={self.m}, n={self.n}")

    def min_q(self) -> int:
        """Smallest admissible q: 2 when n = 0, else 1."""
        return 2 if self.n == 0 else 1

    def is_admissible(self, q: int) -> bool:
        return q >= self.min_q()


@dataclass(frozen=True)
class SumEvaluation:
    """One finite-sum evaluation at a given q.

    ``compensation`` is the final correction term of the compensated
    accumulation, a rounding diagnostic only.
    """

    q: int
    term_count: int
    value: complex
    compensation: float


@dataclass(frozen=True)
class LimitEstimate:
    """Packaged q -> infinity limit: last evaluation plus convergence data.

    ``error_estimate`` is the magnitude of the difference between the
    last two schedule evaluations.
    """

    value: complex
    q_final: int
    error_estimate: float
    converged: bool


def upper_index(q: int, n: int) -> int:
    """Upper summation index floor((2q + n - 1)/2) for admissible (q, n).

    For every p from 1 to the result, the angle p*pi/(2q+n) lies
    strictly inside (0, pi/2).

    Raises:
        DomainError: if n = 0 with q < 2, or q < 1, or n < 0.
    """
    if n < 0:
        raise DomainError(f"angle shift n must be nonnegative, got {n}")
    if q < 1 or (n == 0 and q < 2):
        need = "q >= 2 when n = 0" if n == 0 else "q >= 1"
        raise DomainError(f"inadmissible pair (q={q}, n={n}): requires {need}")
    return (2 * q + n - 1) // 2


def _power_of_positive(base: float, s: complex) -> complex:
    """base**s for strictly positive real base, branch-free.

    Real exponents use math.pow; complex ones use exp(s * ln base) with
    the real logarithm.  Both agree with the principal power of a
    positive base.
    """
    if s.imag == 0.0:
        return complex(math.pow(base, s.real), 0.0)
    return cmath.exp(s * math.log(base))


def term(spec: TrigSumSpec, p: int, q: int, s: complex) -> complex:
    """Single summand ((pi/(2q+m)) * cot_or_csc(p*pi/(2q+n)))**s.

    Raises:
        DomainError: for inadmissible (q, n) or p outside
            1..upper_index(q, n).
    """
    s = complex(s)
    upper = upper_index(q, spec.n)
    if not 1 <= p <= upper:
        raise DomainError(f"index p={p} outside 1..{upper} for (q={q}, n={spec.n})")
    angle = (p * math.pi) / (2 * q + spec.n)
    # cot as cos/sin (not 1/tan): one rounding fewer per term.
    if spec.kind is TrigKind.COT:
        trig = math.cos(angle) / math.sin(angle)
    else:
        trig = 1.0 / math.sin(angle)
    base = (math.pi / (2 * q + spec.m)) * trig
    return _power_of_positive(base, s)


def finite_trig_sum(spec: TrigSumSpec, q: int, s: complex) -> SumEvaluation:
    """Compensated sum of term(spec, p, q, s) over p = 1..upper_index(q, n).

    Accumulation runs in ascending p.  For real s > 1 the result is a
    strictly positive real (imaginary part exactly zero).
    """
    s = complex(s)
    upper = upper_index(q, spec.n)
    angle_den = 2 * q + spec.n
    pref = math.pi / (2 * q + spec.m)
    is_cot = spec.kind is TrigKind.COT
    acc = ComplexNeumaier()
    for p in range(1, upper + 1):
        angle = (p * math.pi) / angle_den
        trig = math.cos(angle) / math.sin(angle) if is_cot else 1.0 / math.sin(angle)
        acc.add(_power_of_positive(pref * trig, s))
    return SumEvaluation(
        q=q,
        term_count=upper,
        value=acc.value,
        compensation=acc.correction_magnitude,
    )


#: Catalog of the classical limit formulas as (kind, m, n) instances.
#: Keys are opaque catalog ids; the comment gives each formula's shape.
_CATALOG: dict[str, TrigSumSpec] = {
    # prefactor pi/(2q),   angle p*pi/(2q+1), upper limit q
    "E10": TrigSumSpec(TrigKind.COT, 0, 1),
    # prefactor pi/(2q+1), angle p*pi/(2q+1), upper limit q
    "E11": TrigSumSpec(TrigKind.COT, 1, 1),
    # odd-exponent variant of E10 (same family member)
    "E12": TrigSumSpec(TrigKind.COT, 0, 1),
    # prefactor pi/(2q),   angle p*pi/(2q),   upper limit q-1
    "E14": TrigSumSpec(TrigKind.COT, 0, 0),
    "E15": TrigSumSpec(TrigKind.CSC, 0, 0),
    # prefactor pi/(2q),   angle p*pi/(2q+1), upper limit q
    "E16": TrigSumSpec(TrigKind.CSC, 0, 1),
    # general-s versions of the five shapes above
    "E28": TrigSumSpec(TrigKind.COT, 0, 1),
    "E29": TrigSumSpec(TrigKind.COT, 1, 1),
    "E30": TrigSumSpec(TrigKind.COT, 0, 0),
    "E31": TrigSumSpec(TrigKind.CSC, 0, 1),
    "E32": TrigSumSpec(TrigKind.CSC, 0, 0),
}

CATALOG_IDS: tuple[str, ...] = tuple(_CATALOG)


def classical_form(catalog_id: str) -> TrigSumSpec:
    """(kind, m, n) triple reproducing the cited classical formula.

    The upper summation limit of each catalogued formula equals
    upper_index(q, n) for the returned n: q when n = 1, q - 1 when n = 0.
    """
    try:
        return _CATALOG[catalog_id]
    except KeyError:
        raise DomainError(
            f"unknown catalog id {catalog_id!r}; known: {', '.join(CATALOG_IDS)}"
        ) from None


def zeta_limit_estimate(
    spec: TrigSumSpec,
    s: complex,
    schedule: Iterable[int],
    tol: float,
) -> LimitEstimate:
    """Drive the finite sum along a q-schedule until it settles.

    Convergence is declared when two consecutive schedule evaluations
    differ by less than ``tol`` in magnitude; the estimate is then the
    later of the two.  An exhausted schedule returns the best estimate
    with ``converged=False`` rather than raising (a single-point
    schedule has no consecutive pair, so its error estimate is inf).

    Raises:
        DomainError: if Re(s) <= 1 (the limit's dominating series
            sum 1/p^s would diverge), tol <= 0, or the schedule is not a
            strictly increasing sequence of admissible q.
    """
    s = complex(s)
    if not s.real > 1.0:
        raise DomainError(
            f"Re(s) must exceed 1 for the zeta limit, got Re(s)={s.real}"
        )
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    qs: Sequence[int] = list(schedule)
    if not qs:
        raise DomainError("empty q-schedule")
    if any(b <= a for a, b in zip(qs, qs[1:])):
        raise DomainError("q-schedule must be strictly increasing")
    for q in qs:
        if not spec.is_admissible(q):
            raise DomainError(
                f"schedule point q={q} inadmissible for n={spec.n} "
                f"(requires q >= {spec.min_q()})"
            )

    prev: complex | None = None
    value = complex("nan")
    q_final = qs[0]
    diff = math.inf
    for q in qs:
        value = finite_trig_sum(spec, q, s).value
        q_final = q
        if prev is not None:
            diff = abs(value - prev)
            if diff < tol:
                return LimitEstimate(value, q_final, diff, True)
        prev = value
    return LimitEstimate(value, q_final, diff, False)
