"""Staircase matrices and the two-replication block designs they induce.

A decomposition n = r1*s1 + ... + rt*st is materialised as a staircase of
cells: s1 columns of height r1 on the left, then s2 columns of height r2,
and so on, all columns sharing their bottom row.  Symbols 1..n fill the
occupied cells row-major from the top.  Taking every row and every column
as a block yields a design with r1 + s1 + ... + st blocks in which each
symbol appears in exactly one row block and exactly one column block.

The serialised design file and the 0/1 incidence export (usable directly
as a pooling matrix in non-adaptive group testing) are specified here and
must stay byte-stable; tests pin them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .partition import StaircasePartition, validate

# Materialising a design costs O(n) cells; refuse absurd requests.
DESIGN_CEILING = 10**6

FILE_HEADER = "STAIRCASE-DESIGN v1"


@dataclass(frozen=True)
class StaircaseMatrix:
    partition: StaircasePartition
    column_heights: tuple[int, ...]
    row_widths: tuple[int, ...]
    cells: dict[tuple[int, int], int] = field(compare=False)

    @property
    def n_rows(self) -> int:
        return len(self.row_widths)

    @property
    def n_cols(self) -> int:
        return len(self.column_heights)

    @property
    def n(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class StaircaseDesign:
    """Row and column blocks of a staircase matrix, symbols stored ascending."""

    n: int
    partition: StaircasePartition
    row_blocks: tuple[tuple[int, ...], ...]
    column_blocks: tuple[tuple[int, ...], ...]


def build_matrix(p: StaircasePartition) -> StaircaseMatrix:
    """Lay out the staircase of a valid decomposition and number its cells.

    Row i (1 = top) meets column c exactly when the height of column c
    exceeds r1 - i; with column heights non-increasing left to right every
    row is a prefix of the columns, widths growing downward.
    """
    check = validate(p, p.total)
    if not check:
        raise ValueError(f"invalid decomposition: {','.join(check.reasons)}")
    if p.total > DESIGN_CEILING:
        raise ValueError(f"design would have {p.total} cells; ceiling is {DESIGN_CEILING}")
    heights = tuple(r for r, s in p.steps for _ in range(s))
    r1 = p.steps[0][0]
    widths = []
    for i in range(1, r1 + 1):
        need = r1 - i + 1
        w = 0
        for h in heights:
            if h >= need:
                w += 1
            else:
                break
        widths.append(w)
    cells = {}
    symbol = 0
    for i, w in enumerate(widths, start=1):
        for c in range(1, w + 1):
            symbol += 1
            cells[(i, c)] = symbol
    return StaircaseMatrix(p, heights, tuple(widths), cells)


def build_design(p: StaircasePartition) -> StaircaseDesign:
    """Blocks of the staircase matrix: all rows first, then all columns."""
    m = build_matrix(p)
    rows = []
    for i in range(1, m.n_rows + 1):
        rows.append(tuple(m.cells[(i, c)] for c in range(1, m.row_widths[i - 1] + 1)))
    cols = []
    for c in range(1, m.n_cols + 1):
        cols.append(tuple(m.cells[(i, c)] for i in range(1, m.n_rows + 1) if (i, c) in m.cells))
    return StaircaseDesign(m.n, p, tuple(rows), tuple(cols))


@dataclass(frozen=True)
class CheckResult:
    check_id: int
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class DesignReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)


def verify_design(d: StaircaseDesign) -> DesignReport:
    """Run the five structural checks; nothing is repaired silently.

    1. every symbol 1..n occurs exactly once among the row blocks and
       exactly once among the column blocks (and nothing else occurs);
    2. a row block and a column block share at most one symbol;
    3. row blocks are pairwise disjoint, column blocks likewise;
    4. the block count equals the weight r1 + sum s_i;
    5. the multiset of column block sizes is {r_i, multiplicity s_i}.
    """
    checks = []

    row_count: dict[int, int] = {}
    col_count: dict[int, int] = {}
    for block in d.row_blocks:
        for v in block:
            row_count[v] = row_count.get(v, 0) + 1
    for block in d.column_blocks:
        for v in block:
            col_count[v] = col_count.get(v, 0) + 1
    bad = sorted(
        v for v in range(1, d.n + 1) if row_count.get(v, 0) != 1 or col_count.get(v, 0) != 1
    )
    stray = sorted(v for v in set(row_count) | set(col_count) if not 1 <= v <= d.n)
    detail = ""
    if bad:
        detail = f"symbols without one row and one column occurrence: {bad[:10]}"
    if stray:
        detail += f" stray symbols outside 1..n: {stray[:10]}"
    checks.append(CheckResult(1, "two-replications", not bad and not stray, detail.strip()))

    row_sets = [set(b) for b in d.row_blocks]
    col_sets = [set(b) for b in d.column_blocks]
    big = [
        (i + 1, j + 1)
        for i, rb in enumerate(row_sets)
        for j, cb in enumerate(col_sets)
        if len(rb & cb) > 1
    ]
    checks.append(
        CheckResult(
            2,
            "row-column-intersection",
            not big,
            f"row/column pairs meeting twice: {big[:10]}" if big else "",
        )
    )

    def overlapping(sets):
        seen: set[int] = set()
        for b in sets:
            if seen & b:
                return True
            seen |= b
        return False

    clash = overlapping(row_sets) or overlapping(col_sets)
    checks.append(
        CheckResult(3, "parallel-disjointness", not clash, "overlapping blocks" if clash else "")
    )

    expected_blocks = d.partition.weight if d.partition.steps else 0
    actual = len(d.row_blocks) + len(d.column_blocks)
    checks.append(
        CheckResult(
            4,
            "block-count",
            actual == expected_blocks,
            f"{actual} blocks, weight {expected_blocks}" if actual != expected_blocks else "",
        )
    )

    want = sorted(r for r, s in d.partition.steps for _ in range(s))
    got = sorted(len(b) for b in d.column_blocks)
    checks.append(
        CheckResult(
            5,
            "column-size-multiset",
            want == got,
            f"column sizes {got} != {want}" if want != got else "",
        )
    )

    return DesignReport(tuple(checks))


def incidence_matrix(d: StaircaseDesign) -> list[list[int]]:
    """Blocks-by-symbols 0/1 matrix, rows ordered R1..Rr1 then C1..Cm.

    Only verified designs are accepted; every column of the result then
    sums to exactly 2 (one row block, one column block per symbol).
    """
    report = verify_design(d)
    if not report.passed:
        failed = ", ".join(f"check{c.check_id} {c.name}" for c in report.failures)
        raise ValueError(f"design fails verification: {failed}")
    out = []
    for block in d.row_blocks + d.column_blocks:
        row = [0] * d.n
        for v in block:
            row[v - 1] = 1
        out.append(row)
    return out


def render_incidence(d: StaircaseDesign) -> str:
    matrix = incidence_matrix(d)
    lines = [f"# blocks={len(matrix)} symbols={d.n}"]
    lines += ["".join("1" if x else "0" for x in row) for row in matrix]
    return "\n".join(lines) + "\n"


def render_design_file(d: StaircaseDesign) -> str:
    """Serialise to the v1 design file (UTF-8, LF, bit-exact)."""
    lines = [
        FILE_HEADER,
        f"n={d.n}",
        f"t={d.partition.t}",
        "r=" + ",".join(str(r) for r, _ in d.partition.steps),
        "s=" + ",".join(str(s) for _, s in d.partition.steps),
    ]
    for i, block in enumerate(d.row_blocks, start=1):
        lines.append(f"R{i}:" + ("" if not block else " " + " ".join(map(str, sorted(block)))))
    for j, block in enumerate(d.column_blocks, start=1):
        lines.append(f"C{j}:" + ("" if not block else " " + " ".join(map(str, sorted(block)))))
    return "\n".join(lines) + "\n"


_INT_LIST_RE = re.compile(r"^\d+(,\d+)*$")
_BLOCK_RE = re.compile(r"^([RC])([1-9]\d*):(?: (\d+(?: \d+)*))?$")


def _header_int(lines: list[str], idx: int, key: str) -> int:
    prefix = key + "="
    if idx >= len(lines) or not lines[idx].startswith(prefix):
        raise ValueError(f"line {idx + 1} must start with '{prefix}'")
    value = lines[idx][len(prefix) :]
    if not value.isdigit():
        raise ValueError(f"bad integer in '{lines[idx]}'")
    return int(value)


def parse_design_file(text: str) -> StaircaseDesign:
    """Strict parser for the v1 design file.

    Syntax errors raise ValueError; semantic defects (wrong counts,
    duplicated or missing symbols) parse fine and are left for
    verify_design to report.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != FILE_HEADER:
        raise ValueError(f"missing '{FILE_HEADER}' header")
    n = _header_int(lines, 1, "n")
    t = _header_int(lines, 2, "t")
    vectors = []
    for idx, key in ((3, "r"), (4, "s")):
        prefix = key + "="
        if idx >= len(lines) or not lines[idx].startswith(prefix):
            raise ValueError(f"line {idx + 1} must start with '{prefix}'")
        body = lines[idx][len(prefix) :]
        if not _INT_LIST_RE.match(body):
            raise ValueError(f"bad integer list in '{lines[idx]}'")
        vectors.append(tuple(int(x) for x in body.split(",")))
    rs, ss = vectors
    if len(rs) != t or len(ss) != t:
        raise ValueError(f"t={t} but r has {len(rs)} entries and s has {len(ss)}")
    if any(x < 1 for x in rs + ss):
        raise ValueError("r and s entries must be positive")

    rows: list[tuple[int, ...]] = []
    cols: list[tuple[int, ...]] = []
    in_cols = False
    for line in lines[5:]:
        m = _BLOCK_RE.match(line)
        if not m:
            raise ValueError(f"bad block line: {line!r}")
        kind, index, body = m.group(1), int(m.group(2)), m.group(3)
        symbols = tuple(int(x) for x in body.split(" ")) if body else ()
        if kind == "R":
            if in_cols:
                raise ValueError("row block after column blocks")
            if index != len(rows) + 1:
                raise ValueError(f"expected R{len(rows) + 1}, got R{index}")
            rows.append(symbols)
        else:
            in_cols = True
            if index != len(cols) + 1:
                raise ValueError(f"expected C{len(cols) + 1}, got C{index}")
            cols.append(symbols)
    partition = StaircasePartition(tuple(zip(rs, ss)))
    return StaircaseDesign(n, partition, tuple(rows), tuple(cols))
