"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 parameters outside the domain,
4 file input/output error.  stdout carries only the payload.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import constructions, scan, spectra, transitivity
from .dynamics import DEFAULT_MAX_ITER, DomainError, Params, kneading_pair, project
from .exactnum import AlgebraicReal, IntPoly, ParseError, isolate_roots, parse_element
from .shifts import KneadingSpec, classify, classify_extended
from .words import EPWord

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# parameter parsing


def _parse_interval(text: str) -> tuple[Fraction, Fraction]:
    try:
        lo, hi = (Fraction(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad interval {text!r}: expected lo,hi", EXIT_PARSE) from exc
    if not lo < hi:
        raise CliError(f"bad interval {text!r}: need lo < hi", EXIT_PARSE)
    return lo, hi


def _beta(args) -> AlgebraicReal:
    if args.family:
        return _family(args).beta
    if not args.beta_poly:
        raise CliError("--beta-poly is required", EXIT_PARSE)
    try:
        poly = IntPoly.parse(args.beta_poly)
    except (ParseError, ValueError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse polynomial {args.beta_poly!r}: {exc}", EXIT_PARSE) from exc
    if poly.degree < 1:
        raise CliError("the polynomial must have degree at least 1", EXIT_PARSE)
    if args.beta_interval:
        lo, hi = _parse_interval(args.beta_interval)
        try:
            return AlgebraicReal(poly, (lo, hi))
        except ValueError as exc:
            raise CliError(str(exc), EXIT_DOMAIN) from exc
    roots = isolate_roots(poly, (1, 2))
    if len(roots) != 1:
        raise CliError(f"{poly} has {len(roots)} roots in (1, 2); pass --beta-interval", EXIT_DOMAIN)
    return roots[0]


def _family(args) -> Params:
    try:
        n, k = (int(v) for v in args.family.split(","))
    except ValueError as exc:
        raise CliError(f"bad --family {args.family!r}: expected n,k", EXIT_PARSE) from exc
    try:
        return constructions.family_params(n, k)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from exc


def _params(args) -> Params:
    if args.family:
        return _family(args)
    beta = _beta(args)
    try:
        alpha = parse_element(args.alpha_expr, beta)
    except (ParseError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse alpha {args.alpha_expr!r}: {exc}", EXIT_PARSE) from exc
    try:
        return Params(beta, alpha)
    except DomainError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from exc


def _word(text: str) -> EPWord:
    try:
        return EPWord.parse(text)
    except ValueError as exc:
        raise CliError(f"cannot parse word {text!r}: {exc}", EXIT_PARSE) from exc


def _beta_json(beta: AlgebraicReal) -> dict:
    iv = beta.isolating
    return {"poly": str(beta.defining), "interval": [str(iv.lo), str(iv.hi)], "approx": beta.approx(20)}


# ---------------------------------------------------------------------------
# commands


def cmd_kneading(args) -> dict:
    params = _params(args)
    minus, plus = kneading_pair(params, args.max_iter)
    return {
        "beta": _beta_json(params.beta),
        "alpha": str(params.alpha),
        "tau_minus": minus.text(),
        "tau_plus": plus.text(),
        "status_minus": minus.status.value,
        "status_plus": plus.status.value,
        "minus": minus.to_json(),
        "plus": plus.to_json(),
    }


def cmd_classify(args) -> dict:
    params = _params(args)
    spec = KneadingSpec.from_params(params, args.max_iter)
    fn = classify_extended if args.extended else classify
    out = fn(params, args.max_iter).to_json()
    out["kneading"] = spec.to_json()
    return out


def cmd_transitive(args) -> dict:
    return transitivity.transitivity_verdict(_params(args)).to_json()


def cmd_construct(args) -> dict:
    try:
        idx = constructions.FamilyIndex(args.n, args.k)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from exc
    params = constructions.family_params(idx)
    return {
        "n": idx.n,
        "k": idx.k,
        "beta": _beta_json(params.beta),
        "alpha": str(params.alpha),
        "xi_minus": str(constructions.xi_word(idx, "minus")),
        "xi_plus": str(constructions.xi_word(idx, "plus")),
        "period": idx.period,
        "checks": {
            "self_admissible": constructions.verify_self_admissible(idx),
            "maximal_root": constructions.verify_maximal_root(idx),
            "projection_half": constructions.verify_projection_half(idx),
        },
    }


def cmd_project(args) -> dict:
    params = _params(args)
    value = project(params, _word(args.word))
    return {"word": str(_word(args.word)), "value": str(value), "approx": float(value)}


def cmd_pm1(args) -> dict:
    beta = _beta(args)
    witness = spectra.pm1_witness_search(beta, args.max_degree)
    out = {
        "beta": _beta_json(beta),
        "max_degree": args.max_degree,
        "witness": str(witness) if witness is not None else None,
    }
    try:
        out["pisot"] = spectra.pisot_check(beta.defining).verdict.value
        out["perron"] = spectra.perron_check(beta.defining).verdict.value
        out["qualifier"] = spectra.POLYNOMIAL_LEVEL
    except spectra.PreconditionFailed as exc:
        out["spectral_note"] = str(exc)
    return out


def cmd_scan(args) -> str:
    lo, hi = _parse_interval(args.beta_range)
    try:
        cells = scan.scan_grid((lo, hi), args.beta_steps, args.alpha_steps)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from exc
    text = scan.to_svg(cells, (lo, hi)) if args.format == "svg" else scan.to_csv(cells)
    if args.output in (None, "-"):
        return text
    try:
        Path(args.output).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {args.output}: {exc}", EXIT_IO) from exc
    return ""


# ---------------------------------------------------------------------------
# parser


def _add_params(p: argparse.ArgumentParser, alpha: bool = True) -> None:
    p.add_argument("--beta-poly", help='integer polynomial in x, e.g. "x^2-x-1" or "5*x-9"')
    p.add_argument("--beta-interval", help="isolating interval lo,hi for the root")
    if alpha:
        p.add_argument("--alpha-expr", default="0", help='rational polynomial in b, e.g. "1-b/2"')
    p.add_argument("--family", help="use the family parameters for n,k instead")
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--json", action="store_true", help="emit JSON (the default for these commands)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="betashift", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key=value file overriding option defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kneading", help="kneading invariants tau-(p), tau+(p)")
    _add_params(p)
    p.set_defaults(func=cmd_kneading)

    p = sub.add_parser("classify", help="finite-type verdict and forbidden words")
    _add_params(p)
    p.add_argument("--extended", action="store_true", help="classify the extended model's shift")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("transitive", help="transitivity verdict with region witness")
    _add_params(p)
    p.set_defaults(func=cmd_transitive)

    p = sub.add_parser("construct", help="family member beta_{n,k} and its kneading words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("project", help="value of an eventually periodic word")
    _add_params(p)
    p.add_argument("--word", required=True, help='word in pre(period) form, e.g. "1(0)"')
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("pm1", help="{-1,0,1} polynomial witness and Pisot/Perron tests")
    _add_params(p, alpha=False)
    p.add_argument("--max-degree", type=int, default=20)
    p.set_defaults(func=cmd_pm1)

    p = sub.add_parser("scan", help="grid scan of the parameter space")
    p.add_argument("--beta-range", default="1,2")
    p.add_argument("--beta-steps", type=int, default=200)
    p.add_argument("--alpha-steps", type=int, default=200)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--output", "-o", help="output path (stdout if omitted)")
    p.set_defaults(func=cmd_scan)
    return parser


def read_config(path: str) -> dict:
    """key=value lines; '#' starts a comment; keys use dashes or underscores."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc}", EXIT_IO) from exc
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"{path}:{lineno}: expected key=value", EXIT_PARSE)
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not args.config:
        return args
    cfg = read_config(args.config)
    sub = parser._subparsers._group_actions[0].choices[args.command]
    known = {a.dest: a for a in sub._actions}
    defaults = {}
    for key, value in cfg.items():
        if key not in known:
            continue
        action = known[key]
        try:
            defaults[key] = action.type(value) if action.type else value
        except ValueError as exc:
            raise CliError(f"config value for {key}: {exc}", EXIT_PARSE) from exc
    sub.set_defaults(**defaults)
    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = _apply_config(parser, argv)
        result = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(json.dumps(result, indent=None if getattr(args, "json", False) else 2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
