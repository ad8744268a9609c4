"""Command-line interface.

Subcommands
    expand        print coefficients of a tuple-count or eta-quotient series
    verify        check a catalogued congruence family on a range
    scan          sweep progressions for vanishing residue classes
    oracle-check  compare series coefficients against the enumeration oracle
    identities    run the six dual-path expansion identities
    list-theorems print the verification catalog

Exit codes: 0 all checks passed, 1 a verification failed (counterexample
found), 2 usage or validation error.  All output is deterministic; no
files are written unless --out is given, in which case the line-oriented
records format is written as UTF-8 with LF line endings.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from typing import Callable

from . import records, search
from .congruence import CongruenceFamily, VerificationReport, check_family
from .congruence import (
    family_conj11,
    family_cor14,
    family_eq28,
    family_gen_thm29,
    family_nss_13,
    family_nss_16,
    family_thm12,
    family_thm13,
    ramanujan_families,
)
from .etaq import EtaQuotientSpec, eta_quotient, identity_suite
from .series import Ring
from .tuples import ORACLE_LIMIT, TuplePartitionSpec, t_oracle, t_series

_PARTITION_GF = EtaQuotientSpec(((1, -1),))


@dataclass(frozen=True)
class TheoremEntry:
    tid: str
    status: str
    statement: str
    params: str
    build: Callable[[argparse.Namespace], list[CongruenceFamily]]


def _require(args: argparse.Namespace, names: list[str], tid: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join(f"--{n}" for n in missing)
        raise ValueError(f"{tid} requires {flags}")


def _build_conj11(args) -> list[CongruenceFamily]:
    _require(args, ["p", "t"], "conj1.1")
    js = [args.j] if args.j is not None else range(1, args.p)
    return [family_conj11(args.p, args.t, j, force=args.force) for j in js]


def _build_thm29(args) -> list[CongruenceFamily]:
    _require(args, ["p", "alpha", "s", "m", "ell"], "thm2.9")
    rs = [args.r] if args.r is not None else range(1, args.p**args.s)
    return [
        family_gen_thm29(args.p, args.alpha, args.s, args.m, args.ell, r, force=args.force)
        for r in rs
    ]


def _build_eq28(args) -> list[CongruenceFamily]:
    _require(args, ["ell", "p"], "eq2.8")
    rs = [args.r] if args.r is not None else range(1, args.p)
    return [family_eq28(args.ell, args.p, r, force=args.force) for r in rs]


CATALOG: list[TheoremEntry] = [
    TheoremEntry(
        "ramanujan",
        "classical",
        "p(5n+4), p(7n+5), p(11n+6) vanish mod 5, 7, 11",
        "(none)",
        lambda args: ramanujan_families(),
    ),
    TheoremEntry(
        "nss1.2",
        "inherited",
        "T_2(3^(4a+2) n + (9^(2a+1)-1)/8 + 3^(4a+1)) = 0 mod 24",
        "--alpha",
        lambda args: [family_nss_13("first", args.alpha or 0, force=args.force)],
    ),
    TheoremEntry(
        "nss1.3",
        "inherited",
        "T_2(3^(4a+2) n + (9^(2a+1)-1)/8 + 2*3^(4a+1)) = 0 mod 24",
        "--alpha",
        lambda args: [family_nss_13("second", args.alpha or 0, force=args.force)],
    ),
    TheoremEntry(
        "nss1.6",
        "inherited",
        "T_2(9 p^(2a+1) n + (9 p^(2a+2)-1)/8) = 0 mod 6, p = 5,7 mod 8, p not dividing n",
        "--p, --alpha",
        lambda args: (
            _require(args, ["p"], "nss1.6"),
            [family_nss_16(args.p, args.alpha or 0, force=args.force)],
        )[1],
    ),
    TheoremEntry(
        "conj1.1",
        "conjectural form, subsumed by thm1.2",
        "T_2(9t^2 n + 9t^2 j/p + (57t^2-1)/8) = 0 mod 6, p | t, (-2/p) = -1",
        "--p, --t [--j, default all 1..p-1]",
        _build_conj11,
    ),
    TheoremEntry(
        "thm1.2",
        "proved",
        "T_2(9n + (N t^2 - 1)/8) = 0 mod 24, N in {33, 57}, gcd(t, 6) = 1",
        "--N, --t",
        lambda args: (
            _require(args, ["N", "t"], "thm1.2"),
            [family_thm12(args.N, args.t, force=args.force)],
        )[1],
    ),
    TheoremEntry(
        "thm1.3",
        "proved",
        "T_2(p^(2a+1) n + (p^(2a+2)-1)/8) = 0 mod 8 (mod 24 when also 3 does not divide n)",
        "--p, --alpha, --strength mod8|mod24",
        lambda args: (
            _require(args, ["p"], "thm1.3"),
            [family_thm13(args.p, args.alpha or 0, args.strength, force=args.force)],
        )[1],
    ),
    TheoremEntry(
        "cor1.4",
        "proved",
        "T_2(9 p^(2a+1) n + (9 p^(2a+2)-1)/8) = 0 mod 24, p = 3,5,7 mod 8, p != 3",
        "--p, --alpha",
        lambda args: (
            _require(args, ["p"], "cor1.4"),
            [family_cor14(args.p, args.alpha or 0, force=args.force)],
        )[1],
    ),
    TheoremEntry(
        "thm2.9",
        "proved",
        "T_(ell, p^a m)(p^s n + r) = 0 mod p^(a-s+1)",
        "--p, --alpha, --s, --m, --ell [--r, default all 1..p^s-1]",
        _build_thm29,
    ),
    TheoremEntry(
        "eq2.8",
        "proved",
        "T_(ell, p)(p n + r) = 0 mod p",
        "--ell, --p [--r, default all 1..p-1]",
        _build_eq28,
    ),
]

_CATALOG_BY_ID = {entry.tid: entry for entry in CATALOG}


def _series_for(families: list[CongruenceFamily], n_max: int | None):
    """One shared series covering every family at its derived range."""
    modulus = math.lcm(*(f.M for f in families))
    if n_max is None:
        order = max(max(50_000, f.A * 50 + f.B) for f in families)
    else:
        order = max(f.A * n_max + f.B for f in families)
    spec = families[0].spec
    ring = Ring.mod(modulus)
    if spec is None:
        return eta_quotient(_PARTITION_GF, ring, order)
    return t_series(spec, ring, order)


def _emit_reports(reports: list[VerificationReport], args) -> None:
    if args.output == "records":
        text = records.format_report_block(reports)
        sys.stdout.write(text)
    else:
        for r in reports:
            fam = r.family
            spec = "-" if fam.spec is None else str(fam.spec)
            print(
                f"{r.status:<6} spec={spec} A={fam.A} B={fam.B} M={fam.M} "
                f"filter={fam.n_filter} n_max={r.n_max_tested} "
                f"exceptions={len(r.exceptions)}  [{fam.provenance}]"
            )
            for n, index, residue in r.exceptions[:10]:
                print(f"       counterexample n={n} index={index} residue={residue}")
            if len(r.exceptions) > 10:
                print(f"       ... {len(r.exceptions) - 10} more")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(records.format_report_block(reports))


def _cmd_expand(args) -> int:
    if (args.t is None) == (args.eta is None):
        raise ValueError("expand needs exactly one of --t or --eta")
    ring = Ring.mod(args.mod) if args.mod else Ring.integers()
    if args.t is not None:
        series = t_series(TuplePartitionSpec.parse(args.t), ring, args.n)
    else:
        series = eta_quotient(EtaQuotientSpec.parse(args.eta), ring, args.n)
    lines = []
    for n, c in enumerate(series.coeffs):
        if args.output == "records":
            lines.append(f"coefficient n={n} value={c}")
        else:
            lines.append(f"{n}\t{c}")
    print("\n".join(lines))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("".join(f"coefficient n={n} value={c}\n" for n, c in enumerate(series.coeffs)))
    return 0


def _cmd_verify(args) -> int:
    entry = _CATALOG_BY_ID.get(args.theorem)
    if entry is None:
        known = ", ".join(sorted(_CATALOG_BY_ID))
        raise ValueError(f"unknown theorem id {args.theorem!r}; known: {known}")
    families = entry.build(args)
    series = _series_for(families, args.nmax)
    reports = []
    for fam in families:
        n_top = fam.max_n(series.order) if args.nmax is None else args.nmax
        reports.append(check_family(fam, series, n_top))
    _emit_reports(reports, args)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_scan(args) -> int:
    spec = TuplePartitionSpec.parse(args.t)
    lo, _, hi = args.A.partition(":")
    a_range = (int(lo), int(hi) if hi else int(lo))
    moduli = tuple(int(m) for m in args.mods.split(","))
    job = search.ScanJob(spec, a_range, moduli, args.nmax, args.min_support)
    series = t_series(spec, Ring.mod(job.lcm), a_range[1] * args.nmax + a_range[1] - 1)
    found = search.scan(job, series)
    reports = [check_family(fam, series, fam.max_n(series.order)) for fam in found]
    if args.output == "records":
        for fam in found:
            print(records.format_family(fam))
    else:
        print(f"{len(found)} candidate families")
        for fam in found:
            print(f"  A={fam.A} B={fam.B} M={fam.M}  [{fam.provenance}]")
        print()
        print(records.summary_table(reports))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            for fam in found:
                fh.write(records.format_family(fam) + "\n")
            fh.write(records.format_report_block(reports))
    return 0


def _cmd_oracle_check(args) -> int:
    if args.nmax > ORACLE_LIMIT:
        raise ValueError(
            f"oracle bound: --nmax {args.nmax} exceeds enumeration limit {ORACLE_LIMIT}"
        )
    spec = TuplePartitionSpec.parse(args.t)
    series = t_series(spec, Ring.integers(), args.nmax)
    mismatches = []
    for n in range(args.nmax + 1):
        expected = t_oracle(spec, n)
        if series.coeffs[n] != expected:
            mismatches.append((n, expected, series.coeffs[n]))
    if mismatches:
        print(f"FAIL spec={spec} nmax={args.nmax}")
        for n, expected, got in mismatches:
            print(f"  n={n}: enumeration={expected} series={got}")
        return 1
    print(f"PASS spec={spec} nmax={args.nmax} (series matches enumeration)")
    return 0


def _cmd_identities(args) -> int:
    ring = Ring.mod(args.mod) if args.mod else Ring.integers()
    results = identity_suite(ring, args.n)
    ok = True
    for name, passed in results:
        print(f"{'PASS' if passed else 'FAIL'} {name} (ring={ring}, order={args.n})")
        ok = ok and passed
    return 0 if ok else 1


def _cmd_list_theorems(args) -> int:
    for entry in CATALOG:
        print(f"{entry.tid:<10} [{entry.status}]")
        print(f"    {entry.statement}")
        print(f"    flags: {entry.params}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tuplereg",
        description="Truncated q-series arithmetic and congruence checks for "
        "k-tuple l-regular partition counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", choices=["table", "records"], default="table")
        p.add_argument("--out", metavar="PATH", default=None, help="write records to a file")

    p = sub.add_parser("expand", help="print series coefficients")
    p.add_argument("--t", metavar="L,K", help="tuple-count series T_{l,k}")
    p.add_argument("--eta", metavar="SPEC", help="eta quotient, e.g. '1:-1' or '2:3,1:-3'")
    p.add_argument("--n", type=int, default=20, help="truncation order (default 20)")
    p.add_argument("--mod", type=int, default=None, help="reduce coefficients mod M")
    add_common(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("verify", help="verify a catalogued congruence family")
    p.add_argument("theorem", help="theorem id (see list-theorems)")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--strength", choices=["mod8", "mod24"], default="mod8")
    p.add_argument("--nmax", type=int, default=None, help="largest n to test (default: derived)")
    p.add_argument("--force", action="store_true", help="skip hypothesis checks (exploratory)")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="scan progressions for vanishing residues")
    p.add_argument("--t", required=True, metavar="L,K")
    p.add_argument("--A", required=True, metavar="LO:HI", help="inclusive step range")
    p.add_argument("--mods", required=True, metavar="M1,M2,...")
    p.add_argument("--nmax", type=int, default=2000)
    p.add_argument("--min-support", type=int, default=50, dest="min_support")
    add_common(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("oracle-check", help="series vs enumeration oracle")
    p.add_argument("--t", required=True, metavar="L,K")
    p.add_argument("--nmax", type=int, default=15)
    p.set_defaults(func=_cmd_oracle_check)

    p = sub.add_parser("identities", help="dual-path expansion identities")
    p.add_argument("--n", type=int, default=2000, help="truncation order")
    p.add_argument("--mod", type=int, default=None)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("list-theorems", help="print the verification catalog")
    p.set_defaults(func=_cmd_list_theorems)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
