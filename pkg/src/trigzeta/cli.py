"""Command-line front end.

Commands:

* ``eval``     -- one finite-sum evaluation at a given q, with the
  oracle error when a reference is available.
* ``converge`` -- sweep a q-schedule and emit text/CSV/JSON.
* ``verify``   -- run a named verification suite; exits 2 on failure.
* ``oracle``   -- print the cross-checked reference value for s.

Exit status: 0 success, 1 domain/usage error, 2 verification failure.
Every error path writes one ``error: ...`` line to stderr.  Output is
deterministic: identical argv yields byte-identical CSV/JSON.  Complex
literals are written RE, RE+IMi or RE-IMi with no spaces (e.g. ``2``,
``2.5+1.3i``).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from . import convergence, oracle, tannery, trig_sums
from .errors import (
    CrossCheckError,
    DomainError,
    InsufficientDataError,
    UnsupportedRangeError,
    UsageError,
)
from .io_utils import write_text_atomic

_COMPLEX_RE = re.compile(
    r"^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?$"
)

_SUITES = ("bernoulli", "cross", "tannery", "specializations")


def parse_complex(text: str) -> complex:
    """Parse RE, RE+IMi or RE-IMi (no spaces)."""
    match = _COMPLEX_RE.match(text)
    if match is None:
        raise UsageError(
            f"cannot parse complex literal {text!r}; expected RE, RE+IMi or RE-IMi"
        )
    re_part, sign, im_part = match.groups()
    imag = 0.0 if im_part is None else float(im_part) * (-1.0 if sign == "-" else 1.0)
    return complex(float(re_part), imag)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _fmt_complex(z: complex) -> str:
    if z.imag == 0.0:
        return _fmt(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{_fmt(z.real)}{sign}{_fmt(abs(z.imag))}i"


@dataclass(frozen=True)
class CliConfig:
    command: str
    s: complex | None = None
    spec: trig_sums.TrigSumSpec | None = None
    rep_label: str | None = None
    q: int | None = None
    schedule: convergence.QSchedule | None = None
    suite: str | None = None
    output: str = "text"
    out_path: Path | None = None


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route through UsageError
    # so the CLI's documented status 1 applies instead.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="trigzeta", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rep_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--rep", help="catalog id (e.g. E28)")
        p.add_argument("--kind", choices=["cot", "csc"], help="explicit kind")
        p.add_argument("--m", type=int, help="prefactor shift")
        p.add_argument("--n", type=int, help="angle shift")

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", choices=["text", "csv", "json"], default="text")
        p.add_argument("--out", help="write output to this file (atomically)")

    p_eval = sub.add_parser("eval", help="evaluate the finite sum at one q")
    p_eval.add_argument("--s", required=True)
    add_rep_flags(p_eval)
    p_eval.add_argument("--q", type=int, required=True)
    add_output_flags(p_eval)

    p_conv = sub.add_parser("converge", help="sweep a q schedule")
    p_conv.add_argument("--s", required=True)
    add_rep_flags(p_conv)
    p_conv.add_argument("--q0", type=int, default=10)
    p_conv.add_argument("--factor", type=int, default=2)
    p_conv.add_argument("--steps", type=int, default=11)
    add_output_flags(p_conv)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=_SUITES)
    p_verify.add_argument("--s", help="exponent for the tannery suite")

    p_oracle = sub.add_parser("oracle", help="print the reference value")
    p_oracle.add_argument("--s", required=True)
    add_output_flags(p_oracle)

    return parser


def _resolve_spec(ns: argparse.Namespace) -> tuple[trig_sums.TrigSumSpec, str]:
    explicit = [ns.kind, ns.m, ns.n]
    if ns.rep is not None:
        if any(v is not None for v in explicit):
            raise UsageError("--rep and --kind/--m/--n are mutually exclusive")
        spec = trig_sums.classical_form(ns.rep)
        return spec, ns.rep
    if any(v is None for v in explicit):
        raise UsageError("need either --rep or all of --kind/--m/--n")
    if ns.m < 0 or ns.n < 0:
        raise UsageError(f"--m and --n must be nonnegative, got m={ns.m} n={ns.n}")
    spec = trig_sums.TrigSumSpec(trig_sums.TrigKind(ns.kind), ns.m, ns.n)
    return spec, f"{ns.kind}(m={ns.m},n={ns.n})"


def parse_args(argv: list[str]) -> CliConfig:
    """Parse and fully validate; no computation happens here."""
    ns = _build_parser().parse_args(argv)

    if ns.command == "verify":
        s = None if ns.s is None else parse_complex(ns.s)
        if s is not None and ns.suite != "tannery":
            raise UsageError("--s applies to the tannery suite only")
        return CliConfig(command="verify", suite=ns.suite, s=s)

    s = parse_complex(ns.s)
    out_path = None if ns.out is None else Path(ns.out)

    if ns.command == "oracle":
        if not s.real > 0.0 or s == 1:
            raise UsageError(
                f"oracle needs Re(s) > 0 and s != 1, got s={_fmt_complex(s)}"
            )
        return CliConfig(command="oracle", s=s, output=ns.output, out_path=out_path)

    spec, label = _resolve_spec(ns)
    if not s.real > 1.0:
        raise UsageError(
            f"the limit representations need Re(s) > 1, got s={_fmt_complex(s)}"
        )

    if ns.command == "eval":
        if ns.q is None or not spec.is_admissible(ns.q):
            raise UsageError(
                f"q={ns.q} inadmissible for n={spec.n} (requires q >= {spec.min_q()})"
            )
        return CliConfig(
            command="eval",
            s=s,
            spec=spec,
            rep_label=label,
            q=ns.q,
            output=ns.output,
            out_path=out_path,
        )

    try:
        sched = convergence.QSchedule(q0=ns.q0, factor=ns.factor, steps=ns.steps)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    if not spec.is_admissible(ns.q0):
        raise UsageError(
            f"q0={ns.q0} inadmissible for n={spec.n} (requires q >= {spec.min_q()})"
        )
    return CliConfig(
        command="converge",
        s=s,
        spec=spec,
        rep_label=label,
        schedule=sched,
        output=ns.output,
        out_path=out_path,
    )


def _emit(text: str, out_path: Path | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        write_text_atomic(out_path, text)


def _run_eval(config: CliConfig) -> int:
    assert config.spec is not None and config.s is not None and config.q is not None
    ev = trig_sums.finite_trig_sum(config.spec, config.q, config.s)
    ref = oracle.reference_zeta(config.s)
    abs_error = abs(ev.value - ref.value)
    if config.output == "csv":
        rel = abs_error / abs(ref.value)
        text = (
            "q,re_estimate,im_estimate,abs_error,rel_error\n"
            f"{ev.q},{_fmt(ev.value.real)},{_fmt(ev.value.imag)},"
            f"{_fmt(abs_error)},{_fmt(rel)}\n"
        )
    elif config.output == "json":
        text = (
            json.dumps(
                {
                    "s_re": config.s.real,
                    "s_im": config.s.imag,
                    "representation": config.rep_label,
                    "q": ev.q,
                    "term_count": ev.term_count,
                    "re_value": ev.value.real,
                    "im_value": ev.value.imag,
                    "compensation": ev.compensation,
                    "reference": {
                        "re_value": ref.value.real,
                        "im_value": ref.value.imag,
                        "method": ref.method,
                        "error_bound": ref.error_bound,
                    },
                    "abs_error": abs_error,
                },
                indent=2,
            )
            + "\n"
        )
    else:
        text = (
            f"s = {_fmt_complex(config.s)}\n"
            f"representation = {config.rep_label}\n"
            f"q = {ev.q}\n"
            f"term_count = {ev.term_count}\n"
            f"value = {_fmt_complex(ev.value)}\n"
            f"reference = {_fmt_complex(ref.value)} "
            f"({ref.method}, error_bound {_fmt(ref.error_bound)})\n"
            f"abs_error = {_fmt(abs_error)}\n"
        )
    _emit(text, config.out_path)
    return 0


def _run_converge(config: CliConfig) -> int:
    assert config.spec is not None and config.s is not None and config.schedule is not None
    series = convergence.run_sweep(config.spec, config.s, config.schedule)
    if config.output == "csv":
        text = convergence.to_csv(series)
    elif config.output == "json":
        text = convergence.to_json(series)
    else:
        lines = [
            f"s = {_fmt_complex(config.s)}",
            f"representation = {config.rep_label}",
            f"reference = {_fmt_complex(series.reference.value)} "
            f"({series.reference.method}, error_bound {_fmt(series.reference.error_bound)})",
            f"{'q':>10}  {'estimate':>24}  {'abs_error':>12}",
        ]
        for r in series.records:
            lines.append(
                f"{r.q:>10}  {_fmt_complex(r.estimate):>24}  {r.abs_error:>12.6e}"
            )
        if series.fitted_order is not None:
            lines.append(
                f"fitted_order = {_fmt(series.fitted_order)} "
                f"(empirical; fit residual {_fmt(series.fit_residual or 0.0)})"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, config.out_path)
    return 0


def _run_oracle(config: CliConfig) -> int:
    assert config.s is not None
    ref = oracle.reference_zeta(config.s)
    if config.output == "json":
        text = (
            json.dumps(
                {
                    "s_re": config.s.real,
                    "s_im": config.s.imag,
                    "re_value": ref.value.real,
                    "im_value": ref.value.imag,
                    "method": ref.method,
                    "error_bound": ref.error_bound,
                },
                indent=2,
            )
            + "\n"
        )
    elif config.output == "csv":
        text = (
            "s,re_value,im_value,method,error_bound\n"
            f"{_fmt_complex(config.s)},{_fmt(ref.value.real)},{_fmt(ref.value.imag)},"
            f"{ref.method},{_fmt(ref.error_bound)}\n"
        )
    else:
        text = (
            f"s = {_fmt_complex(config.s)}\n"
            f"zeta = {_fmt_complex(ref.value)}\n"
            f"method = {ref.method}\n"
            f"error_bound = {_fmt(ref.error_bound)}\n"
        )
    _emit(text, config.out_path)
    return 0


# ----------------------------- verify suites -----------------------------


def _suite_bernoulli() -> list[str]:
    failures = []
    for n in range(1, 6):
        even = oracle.zeta_even(n)
        ref = oracle.zeta_dirichlet(complex(2 * n), 1_000_000)
        gap = abs(even.value - ref.value)
        ok = gap <= ref.error_bound
        print(
            f"bernoulli n={n}: |zeta_even - dirichlet| = {gap:.3e} "
            f"(bound {ref.error_bound:.3e}) {'ok' if ok else 'FAIL'}"
        )
        if not ok:
            failures.append(f"zeta_even({n}) vs dirichlet gap {gap:.3e} > {ref.error_bound:.3e}")
    return failures


_CROSS_S = (1.5, 2.0, 3.0, 4.0, 2.5 + 1.3j, 10.0)


def _suite_cross() -> list[str]:
    failures = []
    for s in _CROSS_S:
        s = complex(s)
        refs = [
            oracle.zeta_dirichlet(s, 1_000_000),
            oracle.zeta_eta(s, 1_000_000),
            oracle.zeta_euler_maclaurin(s, 64, oracle._choose_em_cutoff(s)),
            oracle.zeta_euler_product(s, oracle.sieve_primes(100_000)),
        ]
        for i in range(len(refs)):
            for j in range(i + 1, len(refs)):
                a, b = refs[i], refs[j]
                gap = abs(a.value - b.value)
                allowance = a.error_bound + b.error_bound
                ok = gap <= allowance
                print(
                    f"cross s={_fmt_complex(s)}: |{a.method} - {b.method}| = {gap:.3e} "
                    f"(bounds sum {allowance:.3e}) {'ok' if ok else 'FAIL'}"
                )
                if not ok:
                    failures.append(
                        f"s={_fmt_complex(s)} {a.method} vs {b.method}: "
                        f"{gap:.3e} > {allowance:.3e}"
                    )
    return failures


def _suite_tannery(s: complex | None) -> list[str]:
    s_values = [1.5, 2.0, 3.0] if s is None else [s]
    failures = []
    for s_val in s_values:
        s_val = complex(s_val)
        if s_val.imag != 0.0:
            raise UsageError("the tannery suite checks real s only")
        for kind in (trig_sums.TrigKind.COT, trig_sums.TrigKind.CSC):
            inst = tannery.zeta_trig_instance(kind, 0, 1, s_val.real)
            rep_i = tannery.verify_condition_i(inst, 5, [10, 100, 1000, 10000], 1e-3)
            rep_ii = tannery.verify_condition_ii(inst, 1000, 1000)
            report = tannery.ConditionReport(inst.name, rep_i, rep_ii)
            print(report.to_kv())
            if not report.passed:
                reason = []
                if not rep_i.passed:
                    reason.append("condition (i)")
                if not rep_ii.passed:
                    reason.append(
                        "condition (ii)"
                        + ("" if rep_ii.series_converges else " (bound series not convergent)")
                    )
                failures.append(f"{inst.name}: {' and '.join(reason)} failed")
    return failures


#: Upper summation limit of each catalogued formula, as a function of q.
_CATALOG_UPPER = {
    "E10": "q",
    "E11": "q",
    "E12": "q",
    "E14": "q-1",
    "E15": "q-1",
    "E16": "q",
    "E28": "q",
    "E29": "q",
    "E30": "q-1",
    "E31": "q",
    "E32": "q-1",
}


def _suite_specializations() -> list[str]:
    failures = []
    s = complex(2.0)
    q = 2048
    ref = oracle.reference_zeta(s)
    tol_rel = 10.0 / q
    for cid in trig_sums.CATALOG_IDS:
        spec = trig_sums.classical_form(cid)
        expected_upper = q if _CATALOG_UPPER[cid] == "q" else q - 1
        actual_upper = trig_sums.upper_index(q, spec.n)
        ok_upper = actual_upper == expected_upper
        value = trig_sums.finite_trig_sum(spec, q, s).value
        rel = abs(value - ref.value) / abs(ref.value)
        ok_limit = rel < tol_rel
        print(
            f"specialization {cid} -> ({spec.kind.value}, m={spec.m}, n={spec.n}): "
            f"upper {actual_upper} (want {expected_upper}) "
            f"rel_err {rel:.3e} (tol {tol_rel:.3e}) "
            f"{'ok' if ok_upper and ok_limit else 'FAIL'}"
        )
        if not ok_upper:
            failures.append(f"{cid}: upper limit {actual_upper} != {expected_upper}")
        if not ok_limit:
            failures.append(f"{cid}: rel err {rel:.3e} >= {tol_rel:.3e} at q={q}")
    return failures


def _run_verify(config: CliConfig) -> int:
    assert config.suite is not None
    if config.suite == "bernoulli":
        failures = _suite_bernoulli()
    elif config.suite == "cross":
        failures = _suite_cross()
    elif config.suite == "tannery":
        failures = _suite_tannery(config.s)
    else:
        failures = _suite_specializations()
    if failures:
        sys.stderr.write(
            f"error: verify suite {config.suite}: {len(failures)} check(s) failed: "
            f"{failures[0]}\n"
        )
        return 2
    print(f"suite {config.suite}: all checks passed")
    return 0


def execute(config: CliConfig) -> int:
    """Run a validated config; returns the process exit status."""
    if config.command == "eval":
        return _run_eval(config)
    if config.command == "converge":
        return _run_converge(config)
    if config.command == "oracle":
        return _run_oracle(config)
    if config.command == "verify":
        return _run_verify(config)
    raise UsageError(f"unknown command {config.command!r}")


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_args(sys.argv[1:] if argv is None else list(argv))
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    try:
        return execute(config)
    except (
        UsageError,
        DomainError,
        UnsupportedRangeError,
        InsufficientDataError,
        OSError,
    ) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except CrossCheckError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
