"""Command line front end: enumeration, coefficients, tableau dynamics and
verification sweeps.

Exit status: 0 on success, 1 if a verification report fails, 2 for
malformed arguments, 3 for violated preconditions.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Optional, Sequence

from . import crystal, jdt, ribbon, symfunc, verify
from .partitions import PartitionError, parse_composition, parse_partition
from .tableaux import TableauError, enumerate_ssyt, format_tableau, parse_tableau

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


class ParseFailure(Exception):
    pass


def _parsed(fn: Callable, text: str):
    try:
        return fn(text)
    except (PartitionError, TableauError, symfunc.SymFuncError, ValueError) as exc:
        raise ParseFailure(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseFailure(f"expected comma-separated integers, got {text!r}") from None
    return vals


# --- enumerate ---------------------------------------------------------------------

def _default_m(mu, m):
    return m if m is not None else max(len(mu), 1)


def cmd_enumerate(args, out) -> int:
    kind = args.kind
    shape = _parsed(parse_partition, args.shape)
    if kind == "ssyt":
        content = _parsed(parse_composition, args.content)
        inner = _parsed(parse_partition, args.inner)
        items = [format_tableau(t) for t in enumerate_ssyt(shape, inner, content)]
    elif kind in ("eytab", "pytab"):
        mu = _parsed(parse_partition, args.mu)
        m = _default_m(mu, args.m)
        if kind == "eytab":
            tabs = verify.enumerate_eytab(shape, mu, m)
        else:
            tabs = verify.enumerate_pytab(shape, mu, m, args.n)
        items = [format_tableau(t) for t in tabs]
    elif kind == "ribbon":
        content = _parsed(parse_composition, args.content)
        items = [str(d) for d in ribbon.enumerate_ribbon_tableaux(shape, args.r, content)]
    else:
        content = _parsed(parse_composition, args.content)
        items = [str(d) for d in ribbon.enumerate_yamanouchi_domino(shape, content)]
    for line in items:
        print(line, file=out)
    print(f"count {len(items)}", file=out)
    return 0


# --- coeff --------------------------------------------------------------------------

def cmd_coeff(args, out) -> int:
    kind = args.kind
    S = symfunc.SchurExpansion.schur
    if kind == "lr":
        mu, nu, lam = (_parsed(parse_partition, x) for x in (args.mu, args.nu, args.lam))
        print(symfunc.lr_coefficient(mu, nu, lam), file=out)
    elif kind == "product":
        mu, nu = (_parsed(parse_partition, x) for x in (args.mu, args.nu))
        print(symfunc.schur_product(S(mu), S(nu)), file=out)
    elif kind == "plethysm":
        mu = _parsed(parse_partition, args.mu)
        print(symfunc.plethysm_power(args.k, S(mu)), file=out)
    elif kind == "phi":
        lam = _parsed(parse_partition, args.lam)
        print(symfunc.phi_adjoint(args.k, lam), file=out)
    else:
        mu, lam = (_parsed(parse_partition, x) for x in (args.mu, args.lam))
        print(symfunc.plethysm_coefficient(args.n, args.d, mu, lam), file=out)
    return 0


# --- apply --------------------------------------------------------------------------

def cmd_apply(args, out) -> int:
    t = _parsed(parse_tableau, args.tab)
    op = args.op
    if op in ("promote", "demote", "evacuate"):
        if args.s is None:
            raise ParseFailure(f"{op} needs --s")
        result = {"promote": jdt.promote, "demote": jdt.demote,
                  "evacuate": jdt.evacuate}[op](t, args.s)
    elif op in ("e", "f"):
        if args.i is None:
            raise ParseFailure(f"{op} needs --i")
        fn = crystal.apply_e if op == "e" else crystal.apply_f
        result = fn(t, args.i, args.s)
    else:
        result = jdt.rectify(t)
    print("VANISH" if result is None else format_tableau(result), file=out)
    return 0


# --- verify -------------------------------------------------------------------------

def _bounds(args) -> verify.SweepBounds:
    base = verify.SweepBounds()
    if args.config:
        base = verify.load_bounds(args.config, base)
    return verify.SweepBounds(
        max_weight=args.max_weight if args.max_weight is not None else base.max_weight,
        ms=_int_list(args.m) if args.m is not None else base.ms,
        ns=_int_list(args.n) if args.n is not None else base.ns,
        max_mu_weight=(args.max_mu_weight if args.max_mu_weight is not None
                       else base.max_mu_weight),
        padded=args.allow_padded or base.padded)


def cmd_verify(args, out) -> int:
    bounds = _bounds(args)
    theorems = verify.THEOREMS if args.theorem == "all" else (args.theorem,)
    reports = verify.run_sweep(theorems, bounds)
    lines = []
    if args.format == "json":
        lines = [r.to_json() for r in reports]
    elif args.format == "tsv":
        lines = [verify.TSV_HEADER] + [r.to_tsv() for r in reports]
    else:
        lines = [str(r) for r in reports]
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    failed = [r for r in reports if not r.passed]
    bad_signs = verify.sign_violations(reports)
    print(f"{len(reports)} reports, {len(failed)} failed, "
          f"{len(bad_signs)} sign inconsistencies", file=sys.stderr)
    return EXIT_FAIL if failed or bad_signs else 0


# --- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tabsieve",
        description="Tableaux, crystals, ribbon tableaux and power-sum plethysm coefficients.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list tableaux of a given kind")
    p.add_argument("kind", choices=["ssyt", "eytab", "pytab", "ribbon", "yamdomino"])
    p.add_argument("--shape", required=True)
    p.add_argument("--content", default="-")
    p.add_argument("--inner", default="-", help="inner shape for skew ssyt")
    p.add_argument("--mu", default="-")
    p.add_argument("--m", type=int, help="parts of mu (default: len(mu))")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("coeff", help="Schur expansions and coefficients")
    p.add_argument("kind", choices=["lr", "product", "plethysm", "phi", "pleth-coeff"])
    p.add_argument("--mu", default="-")
    p.add_argument("--nu", default="-")
    p.add_argument("--lam", default="-")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("apply", help="apply a map to one tableau")
    p.add_argument("op", choices=["promote", "demote", "evacuate", "e", "f", "rectify"])
    p.add_argument("--tab", required=True, help='rows split by "/", entries by ","')
    p.add_argument("--s", type=int)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="run a theorem sweep")
    p.add_argument("theorem", choices=list(verify.THEOREMS) + ["all"])
    p.add_argument("--max-weight", type=int, help="bound on |lambda| (default 6)")
    p.add_argument("--max-mu-weight", type=int, help="optional bound on |mu|")
    p.add_argument("--m", help="comma-separated m values (default 1,2)")
    p.add_argument("--n", help="comma-separated n values (default 2,3)")
    p.add_argument("--allow-padded", action="store_true",
                   help="also sweep rectangles with fewer than mn rows")
    p.add_argument("--format", choices=["json", "tsv", "text"], default="json")
    p.add_argument("--output")
    p.add_argument("--config", help="key=value file with the same bounds")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
