"""Compensated floating-point accumulation helpers.

Two tools, chosen by workload:

* ``Neumaier`` / ``ComplexNeumaier`` -- streaming compensated sums for
  term-by-term loops.  They expose the final correction term, which the
  finite-sum types report as a rounding diagnostic.
* ``fsum_array`` -- exactly rounded sum of a numpy array (Shewchuk
  accumulation via ``math.fsum``), for the large vectorized oracle sums.
"""

from __future__ import annotations

import math

import numpy as np


class Neumaier:
    """Running compensated sum (Neumaier's variant of Kahan summation).

    The improved variant also handles the case where the incoming term
    is larger than the running total, so ordering does not matter for
    correctness.  ``value`` folds the carried correction back in.
    """

    __slots__ = ("total", "correction")

    def __init__(self) -> None:
        self.total = 0.0
        self.correction = 0.0

    def add(self, x: float) -> None:
        t = self.total + x
        if abs(self.total) >= abs(x):
            self.correction += (self.total - t) + x
        else:
            self.correction += (x - t) + self.total
        self.total = t

    @property
    def value(self) -> float:
        return self.total + self.correction


class ComplexNeumaier:
    """Compensated sum of complex terms: one Neumaier stream per component."""

    __slots__ = ("re", "im")

    def __init__(self) -> None:
        self.re = Neumaier()
        self.im = Neumaier()

    def add(self, z: complex) -> None:
        self.re.add(z.real)
        self.im.add(z.imag)

    @property
    def value(self) -> complex:
        return complex(self.re.value, self.im.value)

    @property
    def correction_magnitude(self) -> float:
        return math.hypot(self.re.correction, self.im.correction)


def fsum_array(a: np.ndarray) -> float:
    """Exactly rounded sum of a real numpy array."""
    return math.fsum(a.tolist())


def fsum_complex_array(a: np.ndarray) -> complex:
    """Exactly rounded componentwise sum of a complex numpy array."""
    return complex(math.fsum(a.real.tolist()), math.fsum(a.imag.tolist()))
