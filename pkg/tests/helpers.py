"""Test-side oracles, independent of the package's evaluation paths.

The direct transcriptions evaluate each catalogued formula literally
(its own prefactor, angle denominator, upper limit and trig function)
at 50 decimal digits via mpmath, then round once to complex128.  The
comparison "package sum within k ulps of the transcription" therefore
measures the package's own rounding error against ground truth.
"""

import math

import mpmath as mp

# Formula shapes per catalog id: (prefactor denominator offset a in
# pi/(2q+a), angle denominator offset b in p*pi/(2q+b), upper limit,
# trig function name).  Upper limit "q-1" only for the b=0 shapes.
FORMULA_SHAPES = {
    "E10": (0, 1, "q", "cot"),
    "E11": (1, 1, "q", "cot"),
    "E12": (0, 1, "q", "cot"),
    "E14": (0, 0, "q-1", "cot"),
    "E15": (0, 0, "q-1", "csc"),
    "E16": (0, 1, "q", "csc"),
    "E28": (0, 1, "q", "cot"),
    "E29": (1, 1, "q", "cot"),
    "E30": (0, 0, "q-1", "cot"),
    "E31": (0, 1, "q", "csc"),
    "E32": (0, 0, "q-1", "csc"),
}


def direct_transcription(catalog_id: str, q: int, s: complex) -> complex:
    """Literal 50-digit evaluation of the catalogued formula."""
    a, b, upper_kind, fname = FORMULA_SHAPES[catalog_id]
    upper = q if upper_kind == "q" else q - 1
    with mp.workdps(50):
        pi = mp.pi
        pref = pi / (2 * q + a)
        f = mp.cot if fname == "cot" else mp.csc
        sv = mp.mpmathify(s)
        total = mp.mpc(0)
        for p in range(1, upper + 1):
            total += f(p * pi / (2 * q + b)) ** sv
        return complex(pref**sv * total)


def ulps_between(a: complex, b: complex) -> float:
    """|a - b| measured in ulps of the larger magnitude."""
    scale = max(abs(a), abs(b))
    if scale == 0.0:
        return 0.0 if a == b else math.inf
    return abs(a - b) / math.ulp(scale)


def brute_force_cot_square_sum(q: int) -> float:
    """sum_{p=1}^{q} cot^2(p pi / (2q+1)) by direct evaluation."""
    return math.fsum(
        (math.cos(x) / math.sin(x)) ** 2
        for p in range(1, q + 1)
        for x in [p * math.pi / (2 * q + 1)]
    )


def brute_force_cot_square_sum_even_den(q: int) -> float:
    """sum_{p=1}^{q-1} cot^2(p pi / (2q)) by direct evaluation."""
    return math.fsum(
        (math.cos(x) / math.sin(x)) ** 2
        for p in range(1, q)
        for x in [p * math.pi / (2 * q)]
    )
