"""Command-line front end.

Exit codes: 0 success, 2 unparseable input, 3 duplicate grid points,
4 argument outside the domain of the operation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import oracle, spectral, superconv
from .errors import ArgumentError, DegenerateConstant, DuplicateGridPoint
from .numkernel import ORDERINGS, ordering_permutation
from .tables import WeightTable, as_grid, fmt, to_array

EXIT_PARSE = 2
EXIT_DUPLICATE = 3
EXIT_DOMAIN = 4

# options whose values may legitimately start with "-"
_VALUE_FLAGS = ("--grid", "--center")


class GridParseError(ValueError):
    pass


def parse_number(text: str) -> float:
    """Parse a decimal or ``a/b`` rational literal to the nearest double."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return float(Fraction(int(num), int(den)))
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise GridParseError(f"cannot parse number {text!r}") from exc


def parse_grid(spec: str) -> tuple[tuple, dict]:
    """Resolve a grid spec to points plus a description.

    ``chebyshev:N`` generates Chebyshev points; an existing file path is read
    as a JSON array or one number per line; anything else is a comma list.
    """
    if spec.startswith("chebyshev:"):
        try:
            n = int(spec.split(":", 1)[1])
        except ValueError as exc:
            raise GridParseError(f"bad Chebyshev size in {spec!r}") from exc
        return spectral.chebyshev_grid(n), {"chebyshev": n}
    path = Path(spec)
    if spec and path.is_file():
        text = path.read_text()
        stripped = text.strip()
        if stripped.startswith("["):
            try:
                values = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise GridParseError(f"bad JSON in {spec}") from exc
            pts = [parse_number(str(v)) for v in values]
        else:
            pts = [parse_number(line) for line in text.splitlines() if line.strip()]
    else:
        pts = [parse_number(tok) for tok in spec.split(",") if tok.strip()]
    if not pts:
        raise GridParseError("empty grid")
    if not all(math.isfinite(x) for x in pts):
        raise GridParseError("grid contains non-finite values")
    return tuple(pts), {}


def _ordered_table(fn, z, M, center, ordering):
    perm = ordering_permutation(z, ordering)
    t = fn([z[i] for i in perm], M, center)
    rows = [None] * len(z)
    for a, i in enumerate(perm):
        rows[i] = list(t.weights[a])
    return WeightTable(tuple(z), to_array(rows), center)


def _weight_fn(name):
    from . import WEIGHT_ALGORITHMS

    try:
        return WEIGHT_ALGORITHMS[name]
    except KeyError:
        raise ArgumentError(f"unknown algorithm {name!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def cmd_weights(args) -> int:
    z, _ = parse_grid(args.grid)
    z = as_grid(z)
    center = parse_number(args.center)
    table = _ordered_table(_weight_fn(args.algorithm), z, args.m, center, args.ordering)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "z"] + [f"w{m}" for m in range(args.m + 1)])
        for k, (zk, row) in enumerate(zip(z, table.weights)):
            w.writerow([k, fmt(zk)] + [fmt(float(x)) for x in row])
        _emit(buf.getvalue(), args.out)
    else:
        doc = {
            "grid": list(z),
            "m": args.m,
            "center": center,
            "algorithm": args.algorithm,
            "weights": [[float(x) for x in row] for row in table.weights],
            "orders": [[float(x) for x in table.weights[:, m]] for m in range(args.m + 1)],
        }
        _emit(json.dumps(doc), args.out)
    return 0


def cmd_diffmat(args) -> int:
    z, info = parse_grid(args.grid)
    z = as_grid(z)
    if "chebyshev" in info:
        D = spectral.chebyshev_diff_matrix(info["chebyshev"], args.order, args.algorithm, args.ordering)
    else:
        D = spectral.diff_matrix(z, args.order, args.algorithm, args.ordering or "natural")
    _emit(D.to_csv() if args.format == "csv" else D.to_json(), args.out)
    return 0


def _load_weights_file(path):
    doc = json.loads(Path(path).read_text())
    z = as_grid(doc["grid"])
    table = WeightTable(z, to_array([[float(x) for x in row] for row in doc["weights"]]), doc.get("center", 0))
    return z, table


def cmd_analyze(args) -> int:
    if args.weights_file:
        z, table = _load_weights_file(args.weights_file)
        m = args.m if args.m is not None else table.M
    else:
        if args.grid is None:
            raise GridParseError("either --grid or --weights-file is required")
        z, _ = parse_grid(args.grid)
        z = as_grid(z)
        m = args.m
        if m is None:
            raise ArgumentError("--m is required")
        superconv._check_m(m, len(z))
        table = _weight_fn(args.algorithm)(z, m, 0)
    report = superconv.analyze(z, m, table, args.tau)
    _emit(json.dumps(report.to_dict()), args.out)
    return 0


def cmd_compare(args) -> int:
    z, info = parse_grid(args.grid)
    z = as_grid(z)
    digits = args.digits if args.digits is not None else oracle.default_digits()
    if "chebyshev" in info:
        n = info["chebyshev"]
        mats = {a: spectral.chebyshev_diff_matrix(n, args.M, a, args.ordering) for a in spectral.ALGORITHMS}
    else:
        mats = {a: spectral.diff_matrix(z, args.M, a, args.ordering or "natural") for a in spectral.ALGORITHMS}
    ref = oracle.exact_diff_matrix(z, args.M, digits)
    summary = {"grid": args.grid, "M": args.M, "digits": digits, "algorithms": {}}
    rows = []
    for name, D in mats.items():
        res = oracle.digits_lost(D, ref, digits)
        summary["algorithms"][name] = {"max_rel_error": res.max_rel, "max_digits_lost": res.max_digits}
        rows.extend(oracle.error_map_rows(D, ref, name, digits))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["algorithm", "i", "j", "rel_error", "digits_lost"])
    for name, i, j, rel, d in rows:
        w.writerow([name, i, j, fmt(rel), fmt(d)])
    if args.map:
        Path(args.map).write_text(buf.getvalue())
    _emit(buf.getvalue() if args.format == "csv" else json.dumps(summary), args.out)
    return 0


def cmd_order(args) -> int:
    if args.grid is not None:
        pts, _ = parse_grid(args.grid)
    elif args.n is not None:
        pts = [float(i) for i in range(args.n)]
    else:
        raise GridParseError("either --grid or --n is required")
    perm = ordering_permutation(pts, args.ordering)
    _emit(json.dumps({"ordering": args.ordering, "permutation": list(perm), "fallback": perm.fallback}), None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fdkit", description="Finite difference weights and spectral differentiation.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, ordering_default="natural"):
        sp.add_argument("--grid", help="comma list (a/b allowed), file path, or chebyshev:N")
        sp.add_argument("--ordering", choices=ORDERINGS, default=ordering_default)
        sp.add_argument("--algorithm", choices=spectral.ALGORITHMS, default="partial")
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("weights", help="finite difference weights at a point")
    common(sp)
    sp.add_argument("--m", type=int, required=True, help="highest derivative order")
    sp.add_argument("--center", default="0")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_weights)

    sp = sub.add_parser("diffmat", help="spectral differentiation matrix")
    common(sp, ordering_default=None)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_diffmat)

    sp = sub.add_parser("analyze", help="order of accuracy and error constant")
    common(sp)
    sp.add_argument("--m", type=int)
    sp.add_argument("--tau", type=float, default=superconv.DEFAULT_TAU)
    sp.add_argument("--weights-file", help="JSON written by the weights command")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("compare", help="digits lost by each algorithm against the extended-precision oracle")
    common(sp, ordering_default=None)
    sp.add_argument("--M", type=int, required=True)
    sp.add_argument("--digits", type=int)
    sp.add_argument("--map", help="also write the per-entry error map CSV here")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("order", help="print a point ordering permutation")
    sp.add_argument("--grid")
    sp.add_argument("--n", type=int)
    sp.add_argument("--ordering", choices=ORDERINGS, default="bit_reversed")
    sp.set_defaults(func=cmd_order)
    return p


def _glue_values(argv):
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GridParseError as exc:
        print(f"fdkit: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DuplicateGridPoint as exc:
        print(f"fdkit: {exc}", file=sys.stderr)
        return EXIT_DUPLICATE
    except DegenerateConstant as exc:
        print(f"fdkit: {exc}; candidates: {json.dumps(exc.candidates)}", file=sys.stderr)
        return EXIT_DOMAIN
    except ArgumentError as exc:
        print(f"fdkit: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
