"""Report assembly: occurrence tables, delimited output, and rendered figures.

The reference occurrence table embeds the published cell values; computed
counts are compared cell by cell and mismatches flagged rather than silently
accepted.  Figure rendering writes PNG files next to the delimited output.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .bounds import TCBoundReport
from .genetics import CodeSignature, EnumeratedCode

RowPredicate = Callable[[CodeSignature], bool]


@dataclass(frozen=True)
class TableRow:
    label: str
    expected: dict[int, int]
    predicate: RowPredicate


TABLE1_ROWS: tuple[TableRow, ...] = (
    TableRow("2", {5: 4, 6: 5, 7: 6, 8: 7}, lambda s: s.sizes == (2,)),
    TableRow("3", {6: 5, 7: 15, 8: 21}, lambda s: s.sizes == (3,)),
    TableRow("4", {7: 4, 8: 21}, lambda s: s.sizes == (4,)),
    TableRow("3,3", {7: 15, 8: 35}, lambda s: s.sizes == (3, 3)),
    TableRow("4,3 Type 1", {7: 8, 8: 20}, lambda s: s.sizes == (4, 3) and s.type1),
    TableRow("4,3 Type 2", {7: 10, 8: 10}, lambda s: s.sizes == (4, 3) and s.type2),
    TableRow("3,3,3 Type 2", {7: 1, 8: 1}, lambda s: s.sizes == (3, 3, 3) and s.type2),
    TableRow("4,3,3 Type 2", {7: 14, 8: 14}, lambda s: s.sizes == (4, 3, 3) and s.type2),
    TableRow(
        "4,3,3,3 Type 2", {7: 2, 8: 2}, lambda s: s.sizes == (4, 3, 3, 3) and s.type2
    ),
    TableRow(
        "anything, 2", {6: 8, 7: 55, 8: 559},
        lambda s: len(s.sizes) >= 2 and 2 in s.sizes,
    ),
)


@dataclass(frozen=True)
class Table1Cell:
    row: str
    n: int
    count: int
    expected: int
    match: bool


@dataclass(frozen=True)
class Table1Result:
    ns: tuple[int, ...]
    cells: tuple[Table1Cell, ...]

    @property
    def mismatches(self) -> tuple[Table1Cell, ...]:
        return tuple(c for c in self.cells if not c.match)

    def count(self, row: str, n: int) -> int | None:
        for c in self.cells:
            if c.row == row and c.n == n:
                return c.count
        return None


def build_table1(
    enumerations: dict[int, Sequence[EnumeratedCode]]
) -> Table1Result:
    """Occurrence counts per row for the given enumerations, with the
    reference values attached."""
    cells = []
    for row in TABLE1_ROWS:
        for n, expected in sorted(row.expected.items()):
            if n not in enumerations:
                continue
            count = sum(1 for e in enumerations[n] if row.predicate(e.signature))
            cells.append(Table1Cell(row.label, n, count, expected, count == expected))
    return Table1Result(tuple(sorted(enumerations)), tuple(cells))


def table1_text(result: Table1Result) -> str:
    ns = result.ns
    width = max(len(r.label) for r in TABLE1_ROWS) + 2
    lines = ["gene sizes".ljust(width) + "".join(f"n={n}".rjust(10) for n in ns)]
    for row in TABLE1_ROWS:
        cells = []
        for n in ns:
            c = next((c for c in result.cells if c.row == row.label and c.n == n), None)
            if c is None:
                cells.append("".rjust(10))
            else:
                mark = "" if c.match else f" (ref {c.expected})"
                cells.append((str(c.count) + mark).rjust(10))
        lines.append(row.label.ljust(width) + "".join(cells))
    bad = result.mismatches
    if bad:
        lines.append("")
        for c in bad:
            lines.append(
                f"MISMATCH row '{c.row}' n={c.n}: computed {c.count}, reference {c.expected}"
            )
    else:
        lines.append("")
        lines.append("all cells match the reference table")
    return "\n".join(lines)


def table1_csv(result: Table1Result) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["row", "n", "count", "reference", "match"])
    for c in result.cells:
        writer.writerow([c.row, c.n, c.count, c.expected, c.match])
    return buf.getvalue()


def bounds_csv(reports: Sequence[TCBoundReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["code", "n", "m", "k", "lower", "upper", "method", "caveats"])
    for r in reports:
        writer.writerow([
            r.code.label(), r.code.n, r.m, r.k, r.lower, r.upper, r.winner,
            "; ".join(r.caveats),
        ])
    return buf.getvalue()


def bounds_text(reports: Sequence[TCBoundReport]) -> str:
    lines = []
    for r in reports:
        lines.append(
            f"{r.code.label()}  (n={r.code.n}, m={r.m})  "
            f"TC_{r.k} in [{r.lower}, {r.upper}]  via {r.winner}"
        )
        for mb in r.methods:
            mark = {True: "verified", False: "FAILED", None: "unverified"}[mb.verified]
            cert = f", certificate length {mb.certificate.length}" if mb.certificate else ""
            lines.append(f"    {mb.tag}: >= {mb.lower} ({mark}{cert}) - {mb.hypothesis}")
        for c in r.caveats:
            lines.append(f"    note: {c}")
    return "\n".join(lines)


def render_table1_figure(result: Table1Result, path: str | Path) -> Path:
    """Grouped bar chart of occurrence counts, one group per table row."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    labels = [row.label for row in TABLE1_ROWS]
    ns = result.ns
    fig, ax = plt.subplots(figsize=(10, 5))
    width = 0.8 / max(len(ns), 1)
    for i, n in enumerate(ns):
        xs, ys = [], []
        for j, label in enumerate(labels):
            count = result.count(label, n)
            if count is not None:
                xs.append(j + i * width)
                ys.append(count)
        ax.bar(xs, ys, width=width, label=f"n={n}")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=30, ha="right")
    ax.set_ylabel("realizable genetic codes")
    ax.set_yscale("log")
    ax.set_title("occurrences by gene-size signature")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_bounds_figure(reports: Sequence[TCBoundReport], path: str | Path) -> Path:
    """Lower/upper bound envelopes against k, one curve pair per code."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    by_code: dict[str, list[TCBoundReport]] = {}
    for r in reports:
        by_code.setdefault(r.code.label(), []).append(r)
    fig, ax = plt.subplots(figsize=(8, 5))
    for label, rs in sorted(by_code.items())[:12]:
        rs = sorted(rs, key=lambda r: r.k)
        ks = [r.k for r in rs]
        ax.plot(ks, [r.lower for r in rs], marker="o", label=f"{label} lower")
        ax.plot(ks, [r.upper for r in rs], marker="x", linestyle="--",
                color=ax.lines[-1].get_color())
    ax.set_xlabel("k")
    ax.set_ylabel("sequential topological complexity")
    ax.set_title("certified bounds (solid: lower, dashed: upper)")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
