"""Line-oriented record format for families and reports.

One record per line, space-separated key=value pairs after a record
tag, in a fixed field order so reports can be diffed byte-for-byte:

    family    spec A B M filter provenance
    report    spec A B M filter provenance n_max status exceptions
    exception n index residue

Exception lines follow their report line, sorted by n.  The spec field
is "l,k" or "-" when the family refers to an externally supplied
series.  Provenance strings are percent-encoded so every value stays a
single token; parsing is the exact inverse of formatting.
"""

from __future__ import annotations

from urllib.parse import quote, unquote

from .congruence import CongruenceFamily, NFilter, VerificationReport
from .tuples import TuplePartitionSpec


def _spec_token(spec: TuplePartitionSpec | None) -> str:
    return "-" if spec is None else str(spec)


def _parse_spec_token(token: str) -> TuplePartitionSpec | None:
    return None if token == "-" else TuplePartitionSpec.parse(token)


def format_family(family: CongruenceFamily) -> str:
    return (
        f"family spec={_spec_token(family.spec)} A={family.A} B={family.B} "
        f"M={family.M} filter={family.n_filter} provenance={quote(family.provenance, safe='')}"
    )


def _fields(line: str, expected_tag: str) -> dict[str, str]:
    parts = line.split()
    if not parts or parts[0] != expected_tag:
        raise ValueError(f"expected a {expected_tag!r} record, got {line!r}")
    out = {}
    for token in parts[1:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise ValueError(f"malformed field {token!r} in {line!r}")
        out[key] = value
    return out


def parse_family(line: str) -> CongruenceFamily:
    f = _fields(line, "family")
    return CongruenceFamily(
        _parse_spec_token(f["spec"]),
        int(f["A"]),
        int(f["B"]),
        int(f["M"]),
        NFilter.parse(f["filter"]),
        unquote(f["provenance"]),
    )


def format_report(report: VerificationReport) -> list[str]:
    fam = report.family
    lines = [
        f"report spec={_spec_token(fam.spec)} A={fam.A} B={fam.B} M={fam.M} "
        f"filter={fam.n_filter} provenance={quote(fam.provenance, safe='')} "
        f"n_max={report.n_max_tested} status={report.status} exceptions={len(report.exceptions)}"
    ]
    for n, index, residue in report.exceptions:
        lines.append(f"exception n={n} index={index} residue={residue}")
    return lines


def parse_report(lines: list[str]) -> VerificationReport:
    f = _fields(lines[0], "report")
    family = CongruenceFamily(
        _parse_spec_token(f["spec"]),
        int(f["A"]),
        int(f["B"]),
        int(f["M"]),
        NFilter.parse(f["filter"]),
        unquote(f["provenance"]),
    )
    count = int(f["exceptions"])
    if len(lines) != 1 + count:
        raise ValueError(f"report announces {count} exceptions but {len(lines) - 1} lines follow")
    exceptions = []
    for line in lines[1:]:
        e = _fields(line, "exception")
        exceptions.append((int(e["n"]), int(e["index"]), int(e["residue"])))
    return VerificationReport(family, int(f["n_max"]), tuple(exceptions), f["status"])


def format_report_block(reports: list[VerificationReport]) -> str:
    """All reports as one LF-joined records document."""
    lines = []
    for report in reports:
        lines.extend(format_report(report))
    return "\n".join(lines) + "\n" if lines else ""


def parse_report_block(text: str) -> list[VerificationReport]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    reports = []
    i = 0
    while i < len(lines):
        f = _fields(lines[i], "report")
        count = int(f["exceptions"])
        reports.append(parse_report(lines[i : i + 1 + count]))
        i += 1 + count
    return reports


def parse_records(text: str) -> tuple[list[CongruenceFamily], list[VerificationReport]]:
    """Parse a mixed records document into its families and reports.

    Accepts any interleaving of family records and report records (each
    report followed by its exception lines), as written by --out.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    families = []
    reports = []
    i = 0
    while i < len(lines):
        tag = lines[i].split(None, 1)[0]
        if tag == "family":
            families.append(parse_family(lines[i]))
            i += 1
        elif tag == "report":
            count = int(_fields(lines[i], "report")["exceptions"])
            reports.append(parse_report(lines[i : i + 1 + count]))
            i += 1 + count
        else:
            raise ValueError(f"unexpected record tag {tag!r} in {lines[i]!r}")
    return families, reports


def summary_table(reports: list[VerificationReport]) -> str:
    """Fixed-width summary: A, B, M, n_tested, exceptions_count."""
    header = f"{'A':>8} {'B':>10} {'M':>6} {'n_tested':>10} {'exceptions':>10}"
    rows = [header]
    for r in reports:
        rows.append(
            f"{r.family.A:>8} {r.family.B:>10} {r.family.M:>6} "
            f"{r.n_max_tested + 1:>10} {len(r.exceptions):>10}"
        )
    return "\n".join(rows)
