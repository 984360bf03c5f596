"""Batch command-line front end.

Subcommands: expand, progsum, coeff, verify, series, tau, kconst, maxfit.
Reports are JSON (default) or CSV; coefficient-sized integers always
serialize as decimal strings so downstream tools cannot truncate them at 64
bits.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 resource or precision failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import asymptotics, characters, partitions, poly
from .errors import ResourceLimitError

VERIFY_LABELS = (
    "main00",
    "main0000",
    "main000",
    "main0",
    "main1",
    "main00cor",
    "div1",
    "peak1",
    "tau",
    "maxpeak",
    "pentagonal",
    "jacobi",
    "hecke-rogers",
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# plain commands


def _cmd_expand(args) -> int:
    p = poly.expand_restricted_product(poly.ProductSpec(args.s, args.n))
    if args.format == "csv":
        _emit(p.to_csv(), args.output)
    else:
        payload = {
            "command": "expand",
            "s": args.s,
            "n": args.n,
            "degree": p.degree,
            "coefficients": [str(c) for c in p.coeffs],
        }
        _emit(_json(payload), args.output)
    return EXIT_OK


def _progsum_record(s, n, modulus, j, method) -> dict:
    spec = poly.ProductSpec(s, n)
    query = poly.ProgressionQuery(modulus, j)
    if method == "character":
        value, bits = characters.character_sum_with_precision(spec, query)
    elif method == "trig":
        value, bits = characters.trig_form_with_precision(spec, query)
    else:
        value, bits = poly.progression_sum_oracle(spec, query), 0
    return {
        "s": s,
        "n": n,
        "N": modulus,
        "j": j,
        "value": str(value),
        "method": method,
        "precision_bits": bits,
    }


def _cmd_progsum(args) -> int:
    record = _progsum_record(args.s, args.n, args.N, args.j, args.method)
    if args.format == "csv":
        keys = list(record)
        text = ",".join(keys) + "\n" + ",".join(str(record[k]) for k in keys) + "\n"
        _emit(text, args.output)
    else:
        _emit(_json(record), args.output)
    return EXIT_OK


def _cmd_coeff(args) -> int:
    spec = poly.ProductSpec(args.s, args.n)
    if not 0 <= args.j <= spec.degree:
        raise ValueError(f"coefficient index must lie in [0, {spec.degree}]")
    modulus = spec.degree + 1
    method = "character" if args.method == "character" else "oracle"
    record = _progsum_record(args.s, args.n, modulus, args.j, method)
    record["command"] = "coeff"
    _emit(_json(record), args.output)
    return EXIT_OK


def _cmd_series(args) -> int:
    name = args.name
    if name == "pentagonal":
        terms = partitions.pentagonal_series(args.max)
    elif name == "jacobi":
        terms = partitions.jacobi_series(args.max, args.convention)
    else:
        terms = partitions.hecke_rogers_series(args.max)
    if args.format == "csv":
        _emit(partitions.series_to_csv(terms), args.output)
    else:
        payload = {
            "command": "series",
            "name": name,
            "max_exponent": args.max,
            "terms": [
                {"exponent": t.exponent, "coefficient": str(t.coefficient)}
                for t in terms
            ],
        }
        if name == "jacobi":
            payload["convention"] = args.convention
        _emit(_json(payload), args.output)
    return EXIT_OK


def _cmd_tau(args) -> int:
    residues = [args.j] if args.j is not None else list(range(args.n + 1))
    rows = [
        {"j": j, "value": str(characters.tau_progression(args.n, j))}
        for j in residues
    ]
    _emit(_json({"command": "tau", "n": args.n, "rows": rows}), args.output)
    return EXIT_OK


def _cmd_kconst(args) -> int:
    result = asymptotics.sudler_constant(args.rel_tol)
    payload = {
        "command": "kconst",
        "value": result.value,
        "argmax_w": result.argmax_w,
        "quadrature_error": result.quadrature_error,
        "K_ref": asymptotics.K_REFERENCE,
    }
    _emit(_json(payload), args.output)
    return EXIT_OK


def _cmd_maxfit(args) -> int:
    fit = asymptotics.asymptotic_fit(args.s, args.nmin, args.nmax, args.step)
    payload = {
        "command": "maxfit",
        "s": fit.s,
        "n_range": [args.nmin, args.nmax, args.step],
        "slope": fit.slope,
        "slope_over_s": fit.slope / fit.s,
        "intercept": fit.intercept,
        "residual_bound": fit.residual_bound,
        "K_ref": asymptotics.K_REFERENCE,
    }
    _emit(_json(payload), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites
#
# Each verifier returns a report dict naming the label it checks; exit code 1
# when any enabled check fails.


def _iter_grid(smax, nmax):
    for s in range(1, smax + 1):
        for n in range(1, nmax + 1):
            yield poly.ProductSpec(s, n)


def _verify_progression_formula(label, evaluate, smax, nmax):
    failures = []
    cases = 0
    for spec in _iter_grid(smax, nmax):
        p = poly.expansion(spec)
        for modulus in range(1, spec.degree + 2):
            row = poly.cyclic_reduce(p, modulus).coeffs
            for j in range(modulus):
                cases += 1
                got = evaluate(spec, poly.ProgressionQuery(modulus, j))
                if got != row[j]:
                    failures.append(
                        {"s": spec.s, "n": spec.n, "N": modulus, "j": j,
                         "expected": str(row[j]), "got": str(got)}
                    )
    return cases, failures


def _verify_main00(args):
    cases, failures = _verify_progression_formula(
        "main00", characters.character_sum_main00, args.smax, args.nmax
    )
    return cases, failures


def _verify_main0000(args):
    cases, failures = _verify_progression_formula(
        "main0000", characters.trig_form_main0000, args.smax, args.nmax
    )
    return cases, failures


def _verify_main000(args):
    cases = 0
    failures = []
    for spec in _iter_grid(args.smax, args.nmax):
        if (spec.s * spec.n) % 2 == 0:
            continue
        p = poly.expansion(spec)
        for modulus in range(1, spec.degree + 2):
            row = poly.cyclic_reduce(p, modulus).coeffs
            for j in range(modulus):
                if (2 * j - spec.degree) % modulus:
                    continue
                cases += 1
                if row[j] != 0:
                    failures.append({"s": spec.s, "n": spec.n, "N": modulus, "j": j,
                                     "got": str(row[j])})
    return cases, failures


def _verify_main0(args):
    cases = 0
    failures = []
    for spec in _iter_grid(args.smax, min(args.nmax, 8)):
        p = poly.expansion(spec)
        for j in range(spec.degree + 1):
            cases += 1
            got = characters.single_coefficient_main0(spec, j)
            if got != p[j]:
                failures.append({"s": spec.s, "n": spec.n, "j": j,
                                 "expected": str(p[j]), "got": str(got)})
    return cases, failures


def _verify_main1(args):
    cases = 0
    failures = []
    for spec in _iter_grid(args.smax, args.nmax):
        row = poly.cyclic_reduce(poly.expansion(spec), spec.n + 1).coeffs
        for j in range(spec.n + 1):
            cases += 1
            got = characters.closed_form_main1(spec, j)
            if got != row[j]:
                failures.append({"s": spec.s, "n": spec.n, "j": j,
                                 "expected": str(row[j]), "got": str(got)})
    return cases, failures


def _verify_main00cor(args):
    cases = 0
    failures = []
    for spec in _iter_grid(args.smax, args.nmax):
        for modulus in range(1, spec.n):
            cases += 1
            if not characters.small_modulus_vanishing(spec, modulus):
                failures.append({"s": spec.s, "n": spec.n, "N": modulus})
    return cases, failures


def _verify_div1(args):
    cases = 0
    failures = []
    for spec in _iter_grid(args.smax, args.nmax):
        if spec.s % 2 == 0 or spec.n % 2 == 0:
            continue
        cases += 1
        try:
            pair = characters.divisor_coefficients_div1(spec, spec.degree)
        except ArithmeticError as exc:
            failures.append({"s": spec.s, "n": spec.n, "error": str(exc)})
            continue
        if pair != (-1, 1):
            failures.append({"s": spec.s, "n": spec.n, "pair": list(pair)})
    return cases, failures


def _verify_peak1(args):
    cases = 0
    failures = []
    for spec in _iter_grid(args.smax, args.nmax):
        if spec.n % 4 != 3 or spec.s % 2 == 0:
            continue
        cases += 1
        try:
            if characters.midpoint_zero_peak1(spec) != 0:
                failures.append({"s": spec.s, "n": spec.n})
        except ArithmeticError as exc:
            failures.append({"s": spec.s, "n": spec.n, "error": str(exc)})
    return cases, failures


def _verify_tau(args):
    cases = 0
    failures = []
    for n in range(1, min(args.nmax, 6) + 1):
        row = poly.cyclic_reduce(partitions.truncated_tau(n), n + 1).coeffs
        for j in range(n + 1):
            cases += 1
            got = characters.tau_progression(n, j)
            if got != row[j]:
                failures.append({"n": n, "j": j, "expected": str(row[j]),
                                 "got": str(got)})
    return cases, failures


def _verify_maxpeak(args):
    failures = []
    result = asymptotics.sudler_constant()
    cases = 1
    if abs(result.value - asymptotics.K_REFERENCE) > 5e-5:
        failures.append({"check": "K", "value": result.value})
    for spec in _iter_grid(min(args.smax, 2), min(args.nmax, 8)):
        cases += 1
        if not asymptotics.sandwich_inequality_check(spec):
            failures.append({"check": "sandwich", "s": spec.s, "n": spec.n})
    return cases, failures


def _verify_series_prefix(name, args):
    limit = args.max if args.max is not None else args.nmax
    n = max(limit, 1)
    if name == "pentagonal":
        s, terms = 1, partitions.pentagonal_series(limit)
    elif name == "jacobi":
        s, terms = 3, partitions.jacobi_series(limit, args.convention)
    else:
        s, terms = 2, partitions.hecke_rogers_series(limit)
    dense = partitions.series_to_coeffs(terms, limit)
    product = poly.expansion(poly.ProductSpec(s, n))
    failures = []
    for e in range(limit + 1):
        if product[e] != dense[e]:
            failures.append({"exponent": e, "product": str(product[e]),
                             "series": str(dense[e])})
    return limit + 1, failures


_VERIFIERS = {
    "main00": _verify_main00,
    "main0000": _verify_main0000,
    "main000": _verify_main000,
    "main0": _verify_main0,
    "main1": _verify_main1,
    "main00cor": _verify_main00cor,
    "div1": _verify_div1,
    "peak1": _verify_peak1,
    "tau": _verify_tau,
    "maxpeak": _verify_maxpeak,
    "pentagonal": lambda args: _verify_series_prefix("pentagonal", args),
    "jacobi": lambda args: _verify_series_prefix("jacobi", args),
    "hecke-rogers": lambda args: _verify_series_prefix("hecke-rogers", args),
}


def _cmd_verify(args) -> int:
    if not args.all and args.theorem is None:
        raise ValueError("verify needs --theorem LABEL or --all")
    labels = list(VERIFY_LABELS) if args.all else [args.theorem]
    checks = []
    for label in labels:
        cases, failures = _VERIFIERS[label](args)
        checks.append(
            {
                "label": label,
                "cases": cases,
                "failures": failures[:10],
                "failure_count": len(failures),
                "passed": not failures,
            }
        )
    passed = all(c["passed"] for c in checks)
    payload = {
        "command": "verify",
        "bounds": {"smax": args.smax, "nmax": args.nmax},
        "checks": checks,
        "passed": passed,
    }
    _emit(_json(payload), args.output)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qproduct",
        description="Exact coefficients and progression sums of (1-q)^s...(1-q^n)^s.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", "-o", default=None, help="write report to a file")

    p = sub.add_parser("expand", help="exact coefficient vector of the product")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    add_output(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("progsum", help="progression sum of coefficients mod N")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True, help="modulus")
    p.add_argument("--j", type=int, required=True, help="residue")
    p.add_argument("--method", choices=("oracle", "character", "trig"), default="oracle")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add_output(p)
    p.set_defaults(func=_cmd_progsum)

    p = sub.add_parser("coeff", help="single coefficient t_j")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--method", choices=("oracle", "character"), default="oracle")
    add_output(p)
    p.set_defaults(func=_cmd_coeff)

    p = sub.add_parser("verify", help="run identity checks against the exact oracle")
    p.add_argument("--theorem", choices=VERIFY_LABELS, default=None)
    p.add_argument("--all", action="store_true", help="run every check")
    p.add_argument("--smax", type=int, default=2)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--max", type=int, default=None,
                   help="series prefix length for the series checks")
    p.add_argument("--convention", choices=partitions.JACOBI_CONVENTIONS,
                   default="standard")
    add_output(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("series", help="classical series terms")
    p.add_argument("--name", choices=("pentagonal", "jacobi", "hecke-rogers"),
                   required=True)
    p.add_argument("--max", type=int, required=True, help="largest exponent")
    p.add_argument("--convention", choices=partitions.JACOBI_CONVENTIONS,
                   default="standard")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add_output(p)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("tau", help="progression sums of the 24th-power truncation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, default=None)
    add_output(p)
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("kconst", help="growth constant K by quadrature")
    p.add_argument("--rel-tol", type=float, default=1e-6)
    add_output(p)
    p.set_defaults(func=_cmd_kconst)

    p = sub.add_parser("maxfit", help="slope fit of log max-coefficient vs n")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--nmin", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--step", type=int, default=25)
    add_output(p)
    p.set_defaults(func=_cmd_maxfit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors as exit 2
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ResourceLimitError, ArithmeticError) as exc:
        # PrecisionError and quadrature convergence failures land here
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
