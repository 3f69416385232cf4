"""Command-line surface for the exact Sturmian repetition toolkit.

Every command prints deterministic output: no timestamps, no hash seeds,
no float round-trips.  Numeric results carry the exact component form and
a 40-digit correctly rounded decimal, in text and JSON alike.

Exit codes: 0 success, 2 usage or parse error, 3 resource cap hit,
4 internal invariant violation (oracle disagreement; should never fire).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence

from .cf import CFSyntaxError, ContinuedFraction, parse_cf
from .geometry import LEFT_CLOSED, RIGHT_CLOSED, EndpointConvention, ikm_intervals
from .kabelian import classify_by_intervals
from .quadreal import QuadReal
from .spectra import (
    ResourceCapExceeded,
    brute_kab_exponent,
    construct_linfty_slope,
    max_kab_exponent,
    sample_spectrum,
    theta_k,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_INTERNAL = 4

_CONVENTIONS = {"left": LEFT_CLOSED, "right": RIGHT_CLOSED}


@dataclass(frozen=True)
class RunConfig:
    """Complete, serializable description of one CLI invocation."""

    command: str
    cf_text: str | None = None
    k: int | None = None
    m: int | None = None
    t_max: int | None = None
    target: str | None = None
    stages: int | None = None
    pool: int | None = None
    workers: int = 0
    convention: str = "left"
    output: str = "text"
    verify: bool = False
    emit_circle: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        fields = {
            name: getattr(args, name)
            for name in cls.__dataclass_fields__
            if hasattr(args, name)
        }
        return cls(**fields)

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


def _error(code: int, kind: str, message: str, **extra) -> int:
    payload = {"error": {"type": kind, "message": message, **extra}}
    print(json.dumps(payload), file=sys.stderr)
    return code


def _frac_json(x: Fraction) -> dict:
    return QuadReal.from_fraction(x).to_json()


def _show(x: QuadReal) -> str:
    return f"{x} = {x.decimal()}"


def _show_frac(x: Fraction) -> str:
    return f"{x} = {QuadReal.from_fraction(x).decimal()}"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sturmian-spectra",
        description="Exact repetition thresholds of Sturmian words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, *choices: str) -> None:
        p.add_argument(
            "--format",
            dest="output",
            choices=choices,
            default="text",
            help="output format (default: text)",
        )

    def add_convention(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--convention",
            choices=sorted(_CONVENTIONS),
            default="left",
            help="endpoint convention for the coding intervals",
        )

    p_cf = sub.add_parser("cf", help="value, convergents and Lagrange constant")
    p_cf.add_argument("cf_text", metavar="CF", help='e.g. "[0; 2, (1)]"')
    p_cf.add_argument("--t-max", dest="t_max", type=_nonneg_int, default=10)
    add_format(p_cf, "text", "json", "csv")

    p_classes = sub.add_parser("classes", help="k-abelian classes of length-m factors")
    p_classes.add_argument("cf_text", metavar="CF")
    p_classes.add_argument("-k", type=_positive_int, required=True)
    p_classes.add_argument("-m", type=_positive_int, required=True)
    p_classes.add_argument(
        "--emit-circle",
        action="store_true",
        help="include circle cut coordinates for plotting",
    )
    add_convention(p_classes)
    add_format(p_classes, "text", "json")

    p_exp = sub.add_parser("exponent", help="max k-abelian power exponent of period m")
    p_exp.add_argument("cf_text", metavar="CF")
    p_exp.add_argument("-k", type=_positive_int, required=True)
    p_exp.add_argument("-m", type=_positive_int, required=True)
    p_exp.add_argument(
        "--verify",
        action="store_true",
        help="cross-check against the brute-force oracle",
    )
    add_convention(p_exp)
    add_format(p_exp, "text", "json")

    p_theta = sub.add_parser("theta", help="exact k-abelian critical exponent")
    p_theta.add_argument("cf_text", metavar="CF")
    p_theta.add_argument("-k", type=_positive_int, required=True)
    add_format(p_theta, "text", "json")

    p_spec = sub.add_parser("spectrum", help="sample theta_k over equivalent slopes")
    p_spec.add_argument("-k", type=_positive_int, required=True)
    p_spec.add_argument("--base", dest="cf_text", required=True, metavar="CF")
    p_spec.add_argument("--pool", type=_nonneg_int, default=200)
    p_spec.add_argument("--workers", type=_nonneg_int, default=0)
    add_format(p_spec, "text", "json", "csv")

    p_lin = sub.add_parser(
        "linfty", help="stagewise slope construction hitting a rational target"
    )
    p_lin.add_argument("target", metavar="LAMBDA", help='positive rational, e.g. "7/3"')
    p_lin.add_argument("--stages", type=_positive_int, default=4)
    add_format(p_lin, "text", "json")

    return parser


def _cmd_cf(cfg: RunConfig) -> int:
    cf = parse_cf(cfg.cf_text)
    value = cf.value()
    t_max = cfg.t_max
    if cf.is_rational:  # a finite expansion just ends early
        t_max = min(t_max, len(cf.preperiod) - 1)
    convs = cf.convergents(t_max)
    lam = None if cf.is_rational else cf.lagrange_constant()
    if cfg.output == "json":
        doc = {
            "cf": cf.render(),
            "value": value.to_json(),
            "lambda": None if lam is None else lam.to_json(),
            "convergents": [
                {"t": c.t, "p": str(c.p), "q": str(c.q)} for c in convs
            ],
        }
        print(json.dumps(doc))
    elif cfg.output == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["t", "p", "q"])
        for c in convs:
            writer.writerow([c.t, c.p, c.q])
    else:
        print(f"cf: {cf.render()}")
        print(f"value: {_show(value)}")
        if lam is not None:
            print(f"lambda: {_show(lam)}")
        print("t\tp\tq")
        for c in convs:
            print(f"{c.t}\t{c.p}\t{c.q}")
    return EXIT_OK


def _interval_doc(fam, index: int) -> dict:
    iv = fam.intervals[index]
    return {
        "index": index,
        "start": iv.start.to_json(),
        "length": iv.length.to_json(),
    }


def _cmd_classes(cfg: RunConfig) -> int:
    cf = parse_cf(cfg.cf_text)
    alpha = _irrational_value(cf)
    convention = _CONVENTIONS[cfg.convention]
    classes = classify_by_intervals(alpha, cfg.k, cfg.m, convention)
    fam = ikm_intervals(alpha, cfg.k, cfg.m, convention)
    if cfg.output == "json":
        doc = {
            "cf": cf.render(),
            "k": cfg.k,
            "m": cfg.m,
            "classes": [
                {
                    "words": list(c.members),
                    "interval": _interval_doc(fam, c.interval_index),
                }
                for c in classes
            ],
        }
        if cfg.emit_circle:
            doc["cuts"] = [cut.to_json() for cut in fam.cuts]
        print(json.dumps(doc))
    else:
        print(f"cf: {cf.render()}  k={cfg.k}  m={cfg.m}  classes={len(classes)}")
        for c in classes:
            iv = fam.intervals[c.interval_index]
            words = " ".join(c.members)
            print(
                f"class {c.interval_index}: {{{words}}}  "
                f"start={iv.start.decimal(12)} length={iv.length.decimal(12)}"
            )
        if cfg.emit_circle:
            print("cuts:")
            for i, cut in enumerate(fam.cuts):
                print(f"  {i}: {_show(cut)}")
    return EXIT_OK


def _cmd_exponent(cfg: RunConfig) -> int:
    cf = parse_cf(cfg.cf_text)
    alpha = _irrational_value(cf)
    convention = _CONVENTIONS[cfg.convention]
    record = max_kab_exponent(alpha, cfg.k, cfg.m, convention)
    brute = None
    if cfg.verify:
        brute = brute_kab_exponent(alpha, cfg.k, cfg.m, convention)
        if brute != record.exponent:
            return _error(
                EXIT_INTERNAL,
                "oracle_mismatch",
                f"interval formula gave {record.exponent}, oracle gave {brute}",
                k=cfg.k,
                m=cfg.m,
            )
    if cfg.output == "json":
        doc = {
            "cf": cf.render(),
            "k": cfg.k,
            "m": cfg.m,
            "exponent": record.exponent,
            "max_interval_length": record.max_interval_length.to_json(),
            "step": record.step.to_json(),
            "witness": record.witness,
            "witness_intercept": (
                None
                if record.witness_intercept is None
                else record.witness_intercept.to_json()
            ),
            "verified": None if brute is None else True,
        }
        print(json.dumps(doc))
    else:
        print(f"cf: {cf.render()}  k={cfg.k}  m={cfg.m}")
        print(f"exponent: {record.exponent}")
        print(f"max_interval_length: {_show(record.max_interval_length)}")
        print(f"step: {_show(record.step)}")
        if record.witness is not None:
            print(f"witness_intercept: {_show(record.witness_intercept)}")
            print(f"witness: {record.witness}")
        if brute is not None:
            print(f"verify: oracle agrees ({brute})")
    return EXIT_OK


def _cmd_theta(cfg: RunConfig) -> int:
    cf = parse_cf(cfg.cf_text)
    theta = theta_k(cf, cfg.k)
    if cfg.output == "json":
        doc = {"cf": cf.render(), "k": cfg.k, "theta": theta.to_json()}
        print(json.dumps(doc))
    else:
        print(f"cf: {cf.render()}  k={cfg.k}")
        print(f"theta: {_show(theta)}")
    return EXIT_OK


def _cmd_spectrum(cfg: RunConfig) -> int:
    base = parse_cf(cfg.cf_text)
    points = sample_spectrum(cfg.k, base, cfg.pool, workers=cfg.workers)
    if cfg.output == "json":
        for p in points:
            print(
                json.dumps(
                    {"cf": p.cf.render(), "k": p.k, "theta": p.theta.to_json()}
                )
            )
    elif cfg.output == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["cf", "k", "theta_decimal"])
        for p in points:
            writer.writerow([p.cf.render(), p.k, p.theta.decimal()])
    else:
        print(f"base: {base.render()}  k={cfg.k}  points={len(points)}")
        for p in points:
            print(f"{p.cf.render()}\t{p.theta.decimal()}")
    return EXIT_OK


def _cmd_linfty(cfg: RunConfig) -> int:
    try:
        lam = Fraction(cfg.target)
    except (ValueError, ZeroDivisionError) as exc:
        raise CFSyntaxError(f"bad rational target {cfg.target!r}: {exc}") from exc
    report = construct_linfty_slope(lam, cfg.stages)
    if cfg.output == "json":
        doc = {
            "target": _frac_json(report.target),
            "stages": [
                {
                    "t": s.t,
                    "k": s.k,
                    "q": str(s.q),
                    "a_next": str(s.a_next),
                    "ratio": _frac_json(s.ratio),
                    "error": _frac_json(s.error),
                    "bound": _frac_json(s.bound),
                }
                for s in report.stages
            ],
            "quotients": list(report.quotients),
            "prefix": report.prefix.render(),
            "padding_ok": report.padding_ok,
        }
        print(json.dumps(doc))
    else:
        print(f"target: {_show_frac(report.target)}")
        print("t\tk\tq\ta_next\tratio\terror\tbound")
        for s in report.stages:
            print(
                f"{s.t}\t{s.k}\t{s.q}\t{s.a_next}\t{s.ratio}\t{s.error}\t{s.bound}"
            )
        print(f"quotients: {list(report.quotients)}")
        print(f"prefix: {report.prefix.render()}")
        print(f"padding_ok: {report.padding_ok}")
    return EXIT_OK


def _irrational_value(cf: ContinuedFraction) -> QuadReal:
    if cf.is_rational:
        raise CFSyntaxError(f"slope must be irrational, got rational {cf.render()}")
    return cf.value()


_HANDLERS = {
    "cf": _cmd_cf,
    "classes": _cmd_classes,
    "exponent": _cmd_exponent,
    "theta": _cmd_theta,
    "spectrum": _cmd_spectrum,
    "linfty": _cmd_linfty,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        return _HANDLERS[cfg.command](cfg)
    except CFSyntaxError as exc:
        return _error(EXIT_USAGE, "parse_error", str(exc))
    except ResourceCapExceeded as exc:
        return _error(
            EXIT_RESOURCE, "resource_cap", str(exc), needed=exc.needed, cap=exc.cap
        )
    except ValueError as exc:
        return _error(EXIT_USAGE, "invalid_argument", str(exc))


if __name__ == "__main__":
    sys.exit(main())
