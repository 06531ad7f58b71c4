"""Command-line front end.

Four subcommands: ``convert`` (basis conversions plus optional span and
Kronecker certification), ``family`` (family reports: identities, limits,
Salem classification, convergence), ``search`` (certified enumeration,
JSONL or CSV), and ``verify`` (fixture tables).  Payloads are JSON with a
``schema: v1`` field; numbers are exact rational strings with a decimal
rendering at ``--digits`` significant figures.  Identical invocations
produce byte-identical output, and ``--plot-dir`` renders figures next to
the delimited output without touching it.

Exit codes: 0 success, 1 failed invariant/certification, 2 argument or
parse error, 3 fixture mismatch.
"""

import argparse
import csv
import io
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from .chebbasis import IntPoly, from_cheb, to_cheb
from .errors import (
    ChebsalemError,
    FixtureMismatch,
    IdentityFailed,
    InvalidParams,
    NotApplicable,
    SearchSpaceTooLarge,
)
from .families import (
    THREEPARAM,
    TWOPARAM,
    FamilySpec,
    closed_form_z,
    coords_of,
    limit_extreme_root,
    limit_span,
    poly_of,
    salem_identity_check,
)
from .rootcert import is_hyperbolic, is_kronecker, isolate_real_roots, span
from .salem import classify_salem, salem_convergence_study
from .search import SearchConfig, enumerate_hits, verify_degree18, verify_table8

SCHEMA = "v1"
DEFAULT_DIGITS = 12


def _render_decimal(value: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _interval_json(iv, digits: int) -> dict:
    lo, hi = Fraction(iv[0]), Fraction(iv[1])
    return {
        "lo": str(lo),
        "hi": str(hi),
        "decimal": _render_decimal((lo + hi) / 2, digits),
    }


def _algebraic_limit_json(limit, digits: int) -> dict:
    return {
        "poly": limit.defining_poly.to_json(),
        "selector": limit.root_selector,
        "enclosure": _interval_json(limit.value_enclosure, digits),
    }


def _parse_int_list(text: str):
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise InvalidParams("expected comma-separated integers, got %r" % text)


def _parse_n_range(text: str):
    if ":" in text:
        a, _, b = text.partition(":")
        try:
            lo, hi = int(a), int(b)
        except ValueError:
            raise InvalidParams("bad range %r, want lo:hi" % text)
        if hi < lo:
            raise InvalidParams("empty range %r" % text)
        return range(lo, hi + 1)
    return _parse_int_list(text)


def _plot_path(args, name: str) -> str:
    os.makedirs(args.plot_dir, exist_ok=True)
    return os.path.join(args.plot_dir, name)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload: dict) -> None:
    _emit(args, json.dumps(payload, indent=2) + "\n")


# ----------------------------------------------------------------------


def cmd_convert(args) -> int:
    if (args.cheb is None) == (args.coeffs is None):
        raise InvalidParams("provide exactly one of --cheb or --coeffs")
    if args.cheb is not None:
        coords = _parse_int_list(args.cheb)
        if not coords:
            raise InvalidParams("empty coordinate vector")
        p = from_cheb(coords)
    else:
        p = IntPoly(_parse_int_list(args.coeffs))
        coords = to_cheb(p)
    payload = {
        "schema": SCHEMA,
        "cheb": list(coords),
        "monomial": p.to_json(),
        "pretty": str(p),
    }
    if args.span:
        payload["span"] = _interval_json(span(p), args.digits)
    if args.classify:
        payload["hyperbolic"] = is_hyperbolic(p)
        payload["kronecker"] = is_kronecker(p)
    if args.plot_dir:
        from .plotting import plot_roots

        payload["plots"] = [
            plot_roots(_plot_path(args, "convert_roots.png"), p, title=str(p))
        ]
    _emit_json(args, payload)
    return 0


def cmd_family(args) -> int:
    spec = FamilySpec.parse(args.spec)
    p = poly_of(spec)
    report = isolate_real_roots(p)
    degree = spec.degree
    payload = {
        "schema": SCHEMA,
        "spec": str(spec),
        "degree": degree,
        "coords": list(coords_of(spec)),
        "monomial": p.to_json(),
        "roots": report.to_json(),
        "complex_pairs": (degree - report.n_real) // 2,
    }
    if args.verify_identity:
        if spec.variant in (TWOPARAM, THREEPARAM):
            payload["identity"] = salem_identity_check(spec)
        else:
            identity = closed_form_z(spec)
            if not identity.holds:
                raise IdentityFailed(
                    "closed form failed for %s" % spec,
                    difference=identity.lhs - identity.rhs,
                )
            payload["identity"] = True
    if args.limits:
        limits = limit_extreme_root(spec)
        block = {
            "lower": _algebraic_limit_json(limits.lower, args.digits),
            "upper": _algebraic_limit_json(limits.upper, args.digits),
        }
        try:
            span_limit = limit_span(spec)
        except NotApplicable:
            span_limit = None
        if span_limit is not None:
            block["span"] = _algebraic_limit_json(span_limit, args.digits)
            slo, shi = span_limit.value_enclosure
            xlo, xhi = limits.lower.value_enclosure
            block["span_equals_two_minus_lower"] = not (
                shi < 2 - xhi or 2 - xlo < slo
            )
        payload["limits"] = block
    if args.classify:
        product = closed_form_z(spec).lhs.to_int()
        payload["salem"] = classify_salem(product).to_json()
    rows = None
    if args.n_range:
        rows = salem_convergence_study(spec, _parse_n_range(args.n_range))
        payload["convergence"] = [
            {
                "n": row.n,
                "root": _interval_json(row.root_enclosure, args.digits),
                "distance": _interval_json(row.distance, args.digits),
            }
            for row in rows
        ]
    if args.plot_dir:
        from .plotting import plot_convergence, plot_roots

        plots = [
            plot_roots(_plot_path(args, "family_roots.png"), p, title=str(spec))
        ]
        if rows:
            plots.append(
                plot_convergence(_plot_path(args, "family_convergence.png"), rows)
            )
        payload["plots"] = plots
    _emit_json(args, payload)
    return 0


def _hits_jsonl(hits, pruned: bool) -> str:
    lines = []
    for hit in hits:
        record = {"schema": SCHEMA}
        record.update(hit.to_json())
        if pruned:
            record["pruned"] = True
        lines.append(json.dumps(record))
    return "\n".join(lines) + ("\n" if lines else "")


def _hits_csv(hits, pruned: bool) -> str:
    buf = io.StringIO()
    if pruned:
        buf.write("# pruned search\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["coords", "monomial_coeffs", "span_lo", "span_hi", "kronecker"])
    for hit in hits:
        lo, hi = hit.span_enclosure
        writer.writerow(
            [
                ";".join(str(c) for c in hit.coords),
                ";".join(str(c) for c in hit.poly.coeffs),
                str(Fraction(lo)),
                str(Fraction(hi)),
                "true" if hit.kronecker else "false",
            ]
        )
    return buf.getvalue()


def cmd_search(args) -> int:
    config = SearchConfig(
        degree=args.degree,
        coeff_set=_parse_int_list(args.coeffs),
        require_hyperbolic=not args.allow_nonhyperbolic,
        span_bound=Fraction(args.span_lt),
        kronecker_only=args.kronecker_only,
        dedupe=not args.no_dedupe,
        prune_alternating=args.prune_alternating,
        prune_monotone=args.prune_monotone,
    )
    hits = enumerate_hits(config, threads=args.threads)
    if args.format == "csv":
        text = _hits_csv(hits, config.pruned)
    else:
        text = _hits_jsonl(hits, config.pruned)
    _emit(args, text)
    if args.plot_dir:
        from .plotting import plot_spans

        plot_spans(
            _plot_path(args, "search_spans.png"),
            [str(i) for i in range(len(hits))],
            [h.span_enclosure for h in hits],
            bound=config.span_bound,
            title="search degree %d" % config.degree,
        )
    return 0


def cmd_verify(args) -> int:
    if args.target == "table8":
        report = verify_table8()
    else:
        report = verify_degree18()
    payload = {
        "schema": SCHEMA,
        "target": args.target,
        "passed": True,
        "report": report.to_json(),
    }
    if args.plot_dir:
        from .plotting import plot_spans

        plot_spans(
            _plot_path(args, "verify_%s_spans.png" % args.target),
            [row.label for row in report.rows],
            [row.span_enclosure for row in report.rows],
            title="verify %s" % args.target,
        )
    _emit_json(args, payload)
    return 0


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebsalem",
        description="Chebyshev-coordinate polynomials: conversions, "
        "certified spans, Salem families, search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--digits", type=int, default=DEFAULT_DIGITS,
                        help="significant digits for decimal renderings")
        sp.add_argument("--out", help="write the report to this file")
        sp.add_argument("--plot-dir",
                        help="also render figures into this directory")

    sp = sub.add_parser("convert", help="convert between bases")
    sp.add_argument("--cheb", help="Chebyshev coordinates, ascending, comma-separated")
    sp.add_argument("--coeffs", help="monomial coefficients, ascending, comma-separated")
    sp.add_argument("--span", action="store_true", help="include a certified span enclosure")
    sp.add_argument("--classify", action="store_true",
                    help="include hyperbolic/Kronecker certificates")
    common(sp)
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("family", help="family reports")
    sp.add_argument("--spec", required=True,
                    help='e.g. "kns:k=1,n=3,s=0" or "two:h1=1,h2=2,n=5"')
    sp.add_argument("--verify-identity", action="store_true",
                    help="check the family's exact z-side identity")
    sp.add_argument("--limits", action="store_true",
                    help="include extreme-root and span limits")
    sp.add_argument("--classify", action="store_true",
                    help="Salem-classify the z-side product")
    sp.add_argument("--n-range",
                    help='convergence study over "lo:hi" or "n1,n2,..."')
    common(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("search", help="enumerate certified hits")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--coeffs", required=True,
                    help="coefficient set, comma-separated integers")
    sp.add_argument("--span-lt", default="4",
                    help="span bound as an integer or fraction p/q")
    sp.add_argument("--kronecker-only", action="store_true")
    sp.add_argument("--allow-nonhyperbolic", action="store_true",
                    help="drop the all-roots-real filter")
    sp.add_argument("--no-dedupe", action="store_true",
                    help="keep all representatives, not one per canonical form")
    sp.add_argument("--prune-alternating", action="store_true",
                    help="heuristic prune: adjacent coordinates must not share a sign")
    sp.add_argument("--prune-monotone", action="store_true",
                    help="heuristic prune: |c_j| must not increase")
    sp.add_argument("--threads", type=int,
                    help="worker processes (CHEBSALEM_THREADS caps this)")
    sp.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    common(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="re-certify fixture tables")
    sp.add_argument("target", choices=("table8", "degree18"))
    common(sp)
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FixtureMismatch as exc:
        print("fixture mismatch: %s" % exc, file=sys.stderr)
        return 3
    except (InvalidParams, SearchSpaceTooLarge, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ChebsalemError as exc:
        print("certification failed: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
