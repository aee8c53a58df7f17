"""Command-line interface.

    matroid-kl kl --uniform 4 1
    matroid-kl kl --qniform 4 1 --q 2
    matroid-kl ekl --qniform 4 1 --format pretty
    matroid-kl lattice flats.json
    matroid-kl table --max-n 8 --format csv
    matroid-kl verify --max-n 8 --q-values 2,3

Exit status: 0 success, 1 computation or validation failure, 2 usage error.
Data goes to stdout; progress and diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .ekl_engine import EKLTable, ekl_recursive, ekl_unipotent
from .errors import MatroidKLError
from .exact_poly import evaluate, substitute_q
from .kl_engine import kl_polynomial
from .os_matroid import Explicit, QNiform, Uniform, char_poly, load_lattice
from .rep_ring import rep_dim, rep_qdim

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _q_arg(text: str) -> int:
    try:
        q = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--q expects an integer, got {text!r}") from None
    if q < 2:
        raise argparse.ArgumentTypeError(f"--q must be >= 2, got {q}")
    return q


def _q_list(text: str) -> list[int]:
    return [_q_arg(t) for t in text.split(",") if t.strip()]


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroid-kl",
        description="Kazhdan-Lusztig polynomials of uniform and q-niform matroids.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_spec(p, lattice=True):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--uniform", nargs=2, type=_nonneg, metavar=("N", "M"))
        g.add_argument("--qniform", nargs=2, type=_nonneg, metavar=("N", "M"))
        if lattice:
            g.add_argument("--lattice", metavar="FILE")

    def add_format(p, default="json"):
        p.add_argument("--format", choices=("json", "csv", "pretty"), default=default)

    p = sub.add_parser("kl", help="non-equivariant KL polynomial")
    add_spec(p)
    p.add_argument("--q", type=_q_arg, help="evaluate q-polynomials at this integer")
    add_format(p)

    p = sub.add_parser("ekl", help="equivariant KL coefficients")
    add_spec(p, lattice=False)
    p.add_argument("--q", type=_q_arg)
    add_format(p)

    p = sub.add_parser("lattice", help="KL polynomial of an explicit lattice of flats (JSON)")
    p.add_argument("file")
    add_format(p)

    p = sub.add_parser("table", help="equivariant coefficient table for all 0 <= m <= n <= max-n")
    p.add_argument("--max-n", type=_nonneg, default=8)
    p.add_argument("--min-n", type=_nonneg, default=0)
    p.add_argument("--flavor", choices=("symmetric", "unipotent"), default="symmetric")
    p.add_argument("--q", type=_q_arg)
    add_format(p, default="csv")

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--max-n", type=_nonneg, default=8)
    p.add_argument("--q-values", type=_q_list, default=[2, 3])
    add_format(p, default="pretty")
    return parser


def _spec_from(args, parser):
    if args.uniform is not None:
        n, m = args.uniform
        cls = Uniform
    elif args.qniform is not None:
        n, m = args.qniform
        cls = QNiform
    else:
        return Explicit(_read_lattice(args.lattice, parser))
    if m > n:
        parser.error(f"need m <= n, got n={n}, m={m}")
    return cls(n, m)


def _read_lattice(path, parser):
    if not Path(path).is_file():
        parser.error(f"lattice file not found: {path}")
    return load_lattice(path)


def _poly_out(poly, q):
    return substitute_q(poly, q) if q is not None else poly


def _emit_kl(spec, q, fmt, out):
    res = kl_polynomial(spec)
    poly = _poly_out(res.poly, q)
    chi = _poly_out(char_poly(spec), q)
    if fmt == "json":
        data = res.to_json(spec.to_json())
        data["P"] = poly.to_json()
        data["chi"] = chi.to_json()
        if q is not None:
            data["q"] = q
        out.write(_dump_json(data))
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["i", "coeff"])
        for i, c in enumerate(poly.coeffs):
            w.writerow([i, c])
    else:
        out.write(f"matroid: {spec}\nrank:    {res.rank}\n")
        out.write(f"chi(t) = {chi}\nP(t)   = {poly}\n")


def _multiplicity_cell(rep) -> str:
    return ";".join(f"{lam}={v}" for lam, v in sorted(rep.terms.items()))


def _table_rows(table: EKLTable, q):
    for i, rep in enumerate(table.entries):
        qd = rep_qdim(rep)
        yield [
            table.n,
            table.m,
            i,
            _multiplicity_cell(rep),
            rep_dim(rep),
            evaluate(qd, q) if q is not None else str(qd),
        ]


def _emit_tables(tables, q, fmt, out):
    if fmt == "json":
        payload = [t.to_json(q) for t in tables]
        out.write(_dump_json(payload[0] if len(payload) == 1 else payload))
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "m", "i", "multiplicities", "dim", "qdim"])
        for t in tables:
            w.writerows(_table_rows(t, q))
    else:
        for t in tables:
            prefix = "V(q)" if t.flavor == "unipotent" else "V"
            out.write(f"U({t.n},{t.m}){'(q)' if t.flavor == 'unipotent' else ''}  [{t.flavor}]\n")
            for i, rep in enumerate(t.entries):
                qd = rep_qdim(rep)
                qs = evaluate(qd, q) if q is not None else qd
                out.write(f"  C^{i} = {rep.format(prefix)}    dim {rep_dim(rep)}    qdim {qs}\n")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _dispatch(args, parser, out, err)
    except SystemExit as exc:  # parser.error during dispatch
        return EXIT_USAGE if exc.code else EXIT_OK
    except MatroidKLError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAIL


def _dispatch(args, parser, out, err) -> int:
    if args.verb == "kl":
        _emit_kl(_spec_from(args, parser), args.q, args.format, out)
    elif args.verb == "lattice":
        spec = Explicit(_read_lattice(args.file, parser))
        _emit_kl(spec, None, args.format, out)
    elif args.verb == "ekl":
        spec = _spec_from(args, parser)
        table = ekl_unipotent(spec.n, spec.m) if isinstance(spec, QNiform) else ekl_recursive(spec.n, spec.m)
        _emit_tables([table], args.q, args.format, out)
    elif args.verb == "table":
        make = ekl_unipotent if args.flavor == "unipotent" else ekl_recursive
        tables = [make(n, m) for n in range(args.min_n, args.max_n + 1) for m in range(n + 1)]
        if not tables:
            parser.error("empty range: --min-n exceeds --max-n")
        _emit_tables(tables, args.q, args.format, out)
    elif args.verb == "verify":
        return _verify(args, out, err)
    return EXIT_OK


def _verify(args, out, err) -> int:
    from .verify import run_verify

    def progress(res):
        err.write(f"[{'ok' if res.ok else 'FAIL'}] {res.name} ({res.cases} cases)\n")

    results = run_verify(args.max_n, args.q_values, progress=progress)
    ok = all(r.ok for r in results)
    if args.format == "json":
        out.write(_dump_json({
            "max_n": args.max_n,
            "q_values": args.q_values,
            "ok": ok,
            "checks": [r.to_json() for r in results],
        }))
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["check", "cases", "ok", "failures"])
        for r in results:
            w.writerow([r.name, r.cases, int(r.ok), len(r.failures)])
    else:
        for r in results:
            out.write(f"{'PASS' if r.ok else 'FAIL'}  {r.name}  ({r.cases} cases)\n")
            for witness, msg in r.failures:
                out.write(f"      witness {witness}: {msg}\n")
        out.write(f"{'all checks passed' if ok else 'verification FAILED'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
