"""Command line front end.

Subcommands::

    nodes      node sets with exact coordinates, stratum and weights
    cubature   cubature rules with a self-check residual
    lebesgue   Lebesgue-constant estimates for a list of orders
    eval       interpolants or kernels at user-supplied points

Exit codes: 0 success, 2 validation error, 3 budget error, 4 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from . import chebyshev as cheb
from . import index_sets as ix
from .interpolation import KINDS, Interpolant, lebesgue_estimate, node_indices
from .lattice import BudgetError, ValidationError, check_dimension
from .quadrature import CubatureRule, cubature_omega, cubature_simplex, integrate, node_of
from .trig import dirichlet, phi, phi_star_kernel, tc, theta

EXIT_OK, EXIT_VALIDATION, EXIT_BUDGET, EXIT_IO = 0, 2, 3, 4
MAX_DEGREE_CAP = 40


class InputError(ValidationError):
    """Malformed input file."""


# ------------------------------------------------------------------ helpers

def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_number(value: Any, where: str) -> complex:
    """Accept a number, a "p/q" string or a [re, im] pair."""
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, str):
        try:
            return complex(float(Fraction(value)))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{where}: cannot parse {value!r} as a rational") from exc
    if isinstance(value, list) and len(value) == 2:
        re = parse_number(value[0], where).real
        im = parse_number(value[1], where).real
        return complex(re, im)
    raise InputError(f"{where}: expected a number, 'p/q' string or [re, im], got {value!r}")


def dec17(x: float) -> str:
    return f"{x:.17g}"


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _check_order(n: int) -> int:
    if n < 1:
        raise ValidationError(f"order must be >= 1, got {n}")
    return n


# -------------------------------------------------------------------- nodes

DOMAINS = ("omega", "omega-half", "simplex", "simplex-interior")


def node_records(domain: str, d: int, n: int) -> list[dict]:
    if domain == "omega":
        ks = ix.enum_Hn_star(d, n)
    elif domain == "omega-half":
        ks = ix.enum_Hn(d, n)
    elif domain == "simplex":
        ks = ix.enum_Lambda_n(d, n)
    elif domain == "simplex-interior":
        ks = ix.enum_Lambda_interior(d, n)
    else:
        raise ValidationError(f"unknown domain {domain!r}; expected one of {DOMAINS}")
    out = []
    for k in ks:
        rec = {
            "index": list(k),
            "point": [frac_str(x) for x in node_of(k, n)],
            "stratum": str(ix.classify(k, n)),
            "c": frac_str(ix.c_weight(k, n)),
        }
        if domain.startswith("simplex"):
            rec["lambda"] = frac_str(ix.lambda_weight(k, n))
        out.append(rec)
    return out


def cmd_nodes(args) -> str:
    d, n = check_dimension(args.dimension), _check_order(args.order)
    recs = node_records(args.domain, d, n)
    if args.format == "json":
        return _json_text({"dimension": d, "n": n, "domain": args.domain, "nodes": recs})
    header = (
        [f"k_{i + 1}" for i in range(d + 1)]
        + [f"t_{i + 1}" for i in range(d + 1)]
        + ["stratum", "c", "lambda"]
        + [f"t_{i + 1}_exact" for i in range(d + 1)]
    )
    rows = []
    for r in recs:
        pt = r["point"]
        rows.append(
            r["index"]
            + [dec17(float(Fraction(x))) for x in pt]
            + [r["stratum"], r["c"], r.get("lambda", "")]
            + pt
        )
    return _csv_text(header, rows)


# ----------------------------------------------------------------- cubature

RULE_KINDS = ("omega", "simplex-trig", "gauss", "lobatto")


def build_rule(kind: str, d: int, n: int):
    if kind == "omega":
        return cubature_omega(d, n)
    if kind == "simplex-trig":
        return cubature_simplex(d, n)
    if kind == "gauss":
        return cheb.gauss_rule(d, n)
    if kind == "lobatto":
        return cheb.lobatto_rule(d, n)
    raise ValidationError(f"unknown rule kind {kind!r}; expected one of {RULE_KINDS}")


def self_check(rule, degree: int) -> dict:
    """Largest deviation from the exact integrals over a basis up to ``degree``."""
    d = rule.d
    worst, cases = 0.0, 0
    if isinstance(rule, CubatureRule) and rule.domain == "omega":
        for k in ix.enum_Hn_star(d, degree):
            err = abs(integrate(rule, lambda t, k=k: phi(k, t)) - (1.0 if not any(k) else 0.0))
            worst, cases = max(worst, err), cases + 1
    elif isinstance(rule, CubatureRule):
        for k in ix.enum_Lambda_n(d, degree):
            err = abs(integrate(rule, lambda t, k=k: tc(k, t)) - (1.0 if not any(k) else 0.0))
            worst, cases = max(worst, err), cases + 1
    else:
        family = cheb.t_poly if rule.kind == "lobatto" else cheb.u_poly
        z = cheb.z_from_x(rule.nodes)
        w = rule.weights
        for k in ix.enum_Lambda_n(d, degree):
            a = cheb.alpha_of(k)
            val = np.sum(w * family(a, MAX_DEGREE_CAP).evaluate(z))
            err = abs(val - (1.0 if not any(a) else 0.0))
            worst, cases = max(worst, err), cases + 1
    return {"degree": degree, "cases": cases, "residual": worst}


def rule_payload(rule, kind: str, check: dict) -> dict:
    if isinstance(rule, CubatureRule):
        return {
            "kind": kind,
            "dimension": rule.d,
            "n": rule.n,
            "degree": rule.exactness_degree,
            "nodes": [[frac_str(x) for x in node] for node in rule.nodes],
            "indices": [list(k) for k in rule.indices],
            "weights": [frac_str(w) for w in rule.weights],
            "self_check": check,
        }
    payload = {
        "kind": kind,
        "dimension": rule.d,
        "n": rule.n,
        "degree": rule.degree,
        "nodes": [[float(v) for v in row] for row in rule.nodes],
        "weights": [float(w) for w in rule.weights],
        "t_preimages": [[frac_str(x) for x in pre] for pre in rule.t_preimages],
        "self_check": check,
    }
    if rule.exact_weights is not None:
        payload["exact_weights"] = [frac_str(w) for w in rule.exact_weights]
    return payload


def load_rule(payload: dict):
    """Rebuild a rule from its JSON payload."""
    try:
        kind = payload["kind"]
        d, n, degree = payload["dimension"], payload["n"], payload["degree"]
        if kind in ("omega", "simplex-trig"):
            return CubatureRule(
                "omega" if kind == "omega" else "simplex",
                d,
                n,
                tuple(tuple(k) for k in payload["indices"]),
                tuple(Fraction(w) for w in payload["weights"]),
                degree,
            )
        exact = payload.get("exact_weights")
        return cheb.GaussRule(
            kind,
            d,
            n,
            degree,
            np.asarray(payload["nodes"], dtype=float).reshape(-1, d),
            np.asarray(payload["weights"], dtype=float),
            tuple(tuple(Fraction(x) for x in pre) for pre in payload["t_preimages"]),
            None if exact is None else tuple(Fraction(w) for w in exact),
        )
    except KeyError as exc:
        raise InputError(f"rule file is missing key {exc.args[0]!r}") from exc


def cmd_cubature(args) -> str:
    d, n = check_dimension(args.dimension), _check_order(args.order)
    rule = build_rule(args.kind, d, n)
    degree = 2 * n - 1 if args.degree_cap is None else min(args.degree_cap, 2 * n - 1)
    if degree > MAX_DEGREE_CAP:
        raise ValidationError(f"self-check degree {degree} exceeds {MAX_DEGREE_CAP}; pass --degree-cap")
    check = self_check(rule, degree)
    if args.format == "json":
        return _json_text(rule_payload(rule, args.kind, check))
    if isinstance(rule, CubatureRule):
        header = (
            [f"t_{i + 1}" for i in range(d + 1)]
            + ["weight"]
            + [f"t_{i + 1}_exact" for i in range(d + 1)]
            + ["weight_exact"]
        )
        rows = [
            [dec17(float(x)) for x in node] + [dec17(float(w))] + [frac_str(x) for x in node] + [frac_str(w)]
            for node, w in zip(rule.nodes, rule.weights)
        ]
    else:
        header = (
            [f"x_{i + 1}" for i in range(d)]
            + ["weight"]
            + [f"t_{i + 1}_exact" for i in range(d + 1)]
        )
        rows = [
            [dec17(v) for v in x] + [dec17(w)] + [frac_str(p) for p in pre]
            for x, w, pre in zip(rule.nodes, rule.weights, rule.t_preimages)
        ]
    return _csv_text(header, rows)


# ----------------------------------------------------------------- lebesgue

def cmd_lebesgue(args) -> str:
    d = check_dimension(args.dimension)
    rows = []
    for n in args.order_list:
        _check_order(n)
        est = lebesgue_estimate(args.kind, d, n, args.grid)
        ratio = est / math.log(n) ** d if n > 1 else None
        rows.append({"n": n, "estimate": est, "ratio_to_log_power": ratio})
    if args.format == "json":
        return _json_text({"kind": args.kind, "dimension": d, "grid": args.grid, "rows": rows})
    return _csv_text(
        ["n", "estimate", "ratio_to_log_power"],
        [[r["n"], dec17(r["estimate"]), "" if r["ratio_to_log_power"] is None else dec17(r["ratio_to_log_power"])] for r in rows],
    )


# --------------------------------------------------------------------- eval

KERNELS = ("dirichlet", "phi_star", "theta")


def _load_json(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def read_points(path: str, d: int) -> np.ndarray:
    """Points file: JSON {"points": [[...], ...]} or CSV with one point per row.

    Rows may have d entries (projected onto the hyperplane) or d+1 entries
    summing to zero.
    """
    if path.endswith(".csv"):
        with open(path, encoding="utf-8") as fh:
            raw = [row for row in csv.reader(fh) if row]
        if raw and not _is_numeric(raw[0][0]):
            raw = raw[1:]
    else:
        data = _load_json(path)
        if not isinstance(data, dict) or "points" not in data:
            raise InputError(f"{path}: expected an object with key 'points'")
        raw = data["points"]
        if not isinstance(raw, list):
            raise InputError(f"{path}: 'points' must be a list")
    pts = []
    for i, row in enumerate(raw):
        where = f"{path}: points[{i}]"
        if not isinstance(row, list):
            raise InputError(f"{where}: expected a list of coordinates")
        vals = [parse_number(v, where).real for v in row]
        if len(vals) == d:
            vals.append(-math.fsum(vals))
        elif len(vals) != d + 1:
            raise InputError(f"{where}: expected {d} or {d + 1} coordinates, got {len(vals)}")
        elif abs(math.fsum(vals)) > 1e-12 * (d + 1):
            raise InputError(f"{where}: homogeneous coordinates must sum to zero")
        pts.append(vals)
    return np.asarray(pts, dtype=float).reshape(-1, d + 1)


def _is_numeric(s: str) -> bool:
    try:
        Fraction(s)
        return True
    except (ValueError, ZeroDivisionError):
        return False


def read_samples(path: str, d: int) -> dict[tuple[int, ...], complex]:
    """Samples file: JSON {"samples": [{"index": [...], "value": v}, ...]}.

    CSV alternative: columns k_1..k_{d+1}, value[, value_imag].
    """
    samples: dict[tuple[int, ...], complex] = {}
    if path.endswith(".csv"):
        with open(path, encoding="utf-8") as fh:
            rows = [row for row in csv.reader(fh) if row]
        if rows and not _is_numeric(rows[0][0]):
            rows = rows[1:]
        for i, row in enumerate(rows):
            where = f"{path}: row {i + 1}"
            if len(row) not in (d + 2, d + 3):
                raise InputError(f"{where}: expected {d + 1} index columns and a value")
            try:
                key = tuple(int(x) for x in row[: d + 1])
            except ValueError as exc:
                raise InputError(f"{where}: index entries must be integers") from exc
            val = parse_number(row[d + 1], where)
            if len(row) == d + 3:
                val += 1j * parse_number(row[d + 2], where).real
            samples[key] = val
        return samples
    data = _load_json(path)
    if not isinstance(data, dict) or "samples" not in data:
        raise InputError(f"{path}: expected an object with key 'samples'")
    if not isinstance(data["samples"], list):
        raise InputError(f"{path}: 'samples' must be a list")
    for i, rec in enumerate(data["samples"]):
        where = f"{path}: samples[{i}]"
        if not isinstance(rec, dict):
            raise InputError(f"{where}: expected an object")
        for key in ("index", "value"):
            if key not in rec:
                raise InputError(f"{where}: missing key '{key}'")
        idx = rec["index"]
        if not isinstance(idx, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in idx):
            raise InputError(f"{where}.index: expected a list of integers")
        if len(idx) != d + 1:
            raise InputError(f"{where}.index: expected {d + 1} entries, got {len(idx)}")
        samples[tuple(idx)] = parse_number(rec["value"], f"{where}.value")
    return samples


def cmd_eval(args) -> str:
    d, n = check_dimension(args.dimension), args.order
    if args.points is None:
        raise ValidationError("eval needs --points")
    pts = read_points(args.points, d)
    if args.kind in KERNELS:
        if args.kind == "theta":
            vals = theta(n, pts).astype(complex)
        elif args.kind == "dirichlet":
            vals = dirichlet(n, pts).astype(complex)
        else:
            vals = phi_star_kernel(_check_order(n), pts).astype(complex)
    elif args.kind in KINDS:
        _check_order(n)
        if args.samples is None:
            raise ValidationError(f"eval --kind {args.kind} needs --samples")
        samples = read_samples(args.samples, d)
        vals = Interpolant(args.kind, d, n, samples)(pts)
    else:
        raise ValidationError(f"unknown eval kind {args.kind!r}; expected one of {KINDS + KERNELS}")
    if args.format == "json":
        out = [
            {"point": [float(v) for v in p], "value": [float(v.real), float(v.imag)]}
            for p, v in zip(pts, vals)
        ]
        return _json_text({"kind": args.kind, "dimension": d, "n": n, "values": out})
    header = [f"t_{i + 1}" for i in range(d + 1)] + ["re", "im"]
    rows = [[dec17(v) for v in p] + [dec17(v.real), dec17(v.imag)] for p, v in zip(pts, vals)]
    return _csv_text(header, rows)


# --------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adfourier",
        description="Lattice Fourier analysis on the A_d fundamental domain and simplex.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order_many=False):
        p.add_argument("-d", "--dimension", type=int, required=True)
        if order_many:
            p.add_argument("-n", "--order", dest="order_list", type=int, nargs="+", required=True)
        else:
            p.add_argument("-n", "--order", type=int, required=True)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", "-o", default=None, help="output path (default stdout)")

    p = sub.add_parser("nodes", help="node sets with exact coordinates and weights")
    common(p)
    p.add_argument("--domain", choices=DOMAINS, default="omega")
    p.set_defaults(func=cmd_nodes)

    p = sub.add_parser("cubature", help="cubature rules with a self-check")
    common(p)
    p.add_argument("--kind", choices=RULE_KINDS, default="omega")
    p.add_argument("--degree-cap", type=int, default=None, help="cap on the self-check degree")
    p.set_defaults(func=cmd_cubature)

    p = sub.add_parser("lebesgue", help="Lebesgue constant estimates")
    common(p, order_many=True)
    p.add_argument("--kind", choices=KINDS, default="LnStar")
    p.add_argument("--grid", type=int, default=None, help="grid resolution per axis (default 8n)")
    p.set_defaults(func=cmd_lebesgue)

    p = sub.add_parser("eval", help="evaluate an interpolant or kernel at points")
    common(p)
    p.add_argument("--kind", choices=KINDS + KERNELS, required=True)
    p.add_argument("--samples", default=None, help="JSON or CSV samples keyed by node index")
    p.add_argument("--points", default=None, help="JSON or CSV evaluation points")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_VALIDATION
    try:
        text = args.func(args)
        _write(text, args.output)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
