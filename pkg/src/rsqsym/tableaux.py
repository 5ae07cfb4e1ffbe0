"""Fillings of composition and partition diagrams.

Four kinds of filling are supported:

* ``RSCT``  row-strict composition tableaux (rows strictly decreasing, first
  column weakly increasing, row-strict triple rule);
* ``CSCT``  column-strict composition tableaux (rows weakly decreasing, first
  column strictly increasing, column-strict triple rule);
* ``RRS``   reverse row-strict tableaux of partition shape;
* ``RCS``   reverse column-strict tableaux of partition shape.

Rows and columns are 1-indexed in messages and traces, 0-indexed in storage.
The zero-supplemented rectangle used by the triple rules is never built;
out-of-shape cells simply read as 0.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .compositions import Composition, composition_from_subset

Rows = tuple[tuple[int, ...], ...]


class Kind(str, enum.Enum):
    RSCT = "RSCT"
    CSCT = "CSCT"
    RRS = "ReverseRowStrict"
    RCS = "ReverseColumnStrict"

    @classmethod
    def parse(cls, text: str) -> "Kind":
        aliases = {"rsct": cls.RSCT, "csct": cls.CSCT,
                   "rrs": cls.RRS, "reverserowstrict": cls.RRS,
                   "rcs": cls.RCS, "reversecolumnstrict": cls.RCS}
        key = text.strip().lower().replace("-", "").replace("_", "")
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown tableau kind {text!r}") from None


@dataclass(frozen=True)
class Filling:
    rows: Rows
    kind: Kind

    def __init__(self, rows: Iterable[Iterable[int]], kind: Kind | str):
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in r) for r in rows))
        object.__setattr__(self, "kind", kind if isinstance(kind, Kind) else Kind.parse(kind))

    @property
    def shape(self) -> Composition:
        return Composition(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def columns(self) -> list[list[int]]:
        """Column contents, each listed top to bottom."""
        width = max((len(r) for r in self.rows), default=0)
        return [[r[k] for r in self.rows if k < len(r)] for k in range(width)]

    def is_valid(self) -> bool:
        return _VALIDATORS[self.kind](self)

    def entries(self) -> Iterable[int]:
        for r in self.rows:
            yield from r

    def __str__(self) -> str:
        return format_filling(self)


def _hat(rows: Sequence[Sequence[int]], i: int, k: int) -> int:
    r = rows[i]
    return r[k] if 0 <= k < len(r) else 0


def _positive(F: Filling) -> bool:
    return all(v >= 1 for v in F.entries()) and all(len(r) for r in F.rows)


def _is_partition_shape(F: Filling) -> bool:
    lengths = [len(r) for r in F.rows]
    return all(a >= b for a, b in zip(lengths, lengths[1:])) and all(lengths)


# -- validators --------------------------------------------------------------

def is_rsct(F: Filling) -> bool:
    rows = F.rows
    if not _positive(F):
        return False
    if any(a <= b for r in rows for a, b in zip(r, r[1:])):
        return False
    first = [r[0] for r in rows]
    if any(a > b for a, b in zip(first, first[1:])):
        return False
    width = max((len(r) for r in rows), default=0)
    for k in range(1, width):
        for j in range(len(rows)):
            for i in range(j):
                if _hat(rows, j, k) > _hat(rows, i, k) and _hat(rows, j, k) < _hat(rows, i, k - 1):
                    return False
    return True


def is_csct(F: Filling) -> bool:
    rows = F.rows
    if not _positive(F):
        return False
    if any(a < b for r in rows for a, b in zip(r, r[1:])):
        return False
    first = [r[0] for r in rows]
    if any(a >= b for a, b in zip(first, first[1:])):
        return False
    width = max((len(r) for r in rows), default=0)
    for k in range(1, width):
        for j in range(len(rows)):
            for i in range(j):
                b = _hat(rows, j, k)
                if b != 0 and b >= _hat(rows, i, k) and not b > _hat(rows, i, k - 1):
                    return False
    return True


def is_reverse_row_strict(F: Filling) -> bool:
    if not (_positive(F) and _is_partition_shape(F)):
        return False
    rows = F.rows
    if any(a <= b for r in rows for a, b in zip(r, r[1:])):
        return False
    return all(col[t] >= col[t + 1] for col in F.columns() for t in range(len(col) - 1))


def is_reverse_column_strict(F: Filling) -> bool:
    if not (_positive(F) and _is_partition_shape(F)):
        return False
    rows = F.rows
    if any(a < b for r in rows for a, b in zip(r, r[1:])):
        return False
    return all(col[t] > col[t + 1] for col in F.columns() for t in range(len(col) - 1))


_VALIDATORS = {
    Kind.RSCT: is_rsct,
    Kind.CSCT: is_csct,
    Kind.RRS: is_reverse_row_strict,
    Kind.RCS: is_reverse_column_strict,
}


def is_valid(F: Filling) -> bool:
    return _VALIDATORS[F.kind](F)


def is_standard(F: Filling) -> bool:
    return sorted(F.entries()) == list(range(1, F.size + 1))


# -- weights -----------------------------------------------------------------

def weight(F: Filling) -> tuple[int, ...]:
    """Weak composition whose i-th entry counts the occurrences of i."""
    counts = Counter(F.entries())
    top = max(counts, default=0)
    return tuple(counts[v] for v in range(1, top + 1))


# -- enumeration -------------------------------------------------------------

def _cell_ok(kind: Kind, rows: list[list[int]], j: int, k: int, v: int) -> bool:
    """Check every condition linking cell (j, k) to cells placed before it.

    Cells are placed row by row, left to right.  Every triple-rule instance
    whose lower cell (j, k) is nonzero only involves rows above j, so each
    condition can be checked the moment its lowest cell is filled.
    """
    row = rows[j]
    if kind is Kind.RSCT:
        if k and v >= row[k - 1]:
            return False
        if k == 0 and j and v < rows[j - 1][0]:
            return False
        if k:
            for i in range(j):
                if v > _hat(rows, i, k) and v < _hat(rows, i, k - 1):
                    return False
        return True
    if kind is Kind.CSCT:
        if k and v > row[k - 1]:
            return False
        if k == 0 and j and v <= rows[j - 1][0]:
            return False
        if k:
            for i in range(j):
                if v >= _hat(rows, i, k) and v <= _hat(rows, i, k - 1):
                    return False
        return True
    if kind is Kind.RRS:
        if k and v >= row[k - 1]:
            return False
        return not (j and v > rows[j - 1][k])
    if k and v > row[k - 1]:
        return False
    return not (j and v >= rows[j - 1][k])


@lru_cache(maxsize=None)
def _enumerate(shape: tuple[int, ...], kind: Kind, max_entry: int, standard: bool) -> tuple[Filling, ...]:
    cells = [(j, k) for j, length in enumerate(shape) for k in range(length)]
    if standard:
        max_entry = len(cells)
    rows: list[list[int]] = [[] for _ in shape]
    used = [False] * (max_entry + 1)
    out = []

    def place(t: int) -> None:
        if t == len(cells):
            out.append(Filling(rows, kind))
            return
        j, k = cells[t]
        for v in range(1, max_entry + 1):
            if standard and used[v]:
                continue
            if not _cell_ok(kind, rows, j, k, v):
                continue
            rows[j].append(v)
            used[v] = True
            place(t + 1)
            used[v] = False
            rows[j].pop()

    place(0)
    return tuple(out)


def enumerate_fillings(shape: Iterable[int], kind: Kind | str, max_entry: int) -> list[Filling]:
    """All valid fillings of ``shape`` with entries in [1, max_entry].

    Output is in row-major lexicographic order of the entry sequences.
    """
    kind = kind if isinstance(kind, Kind) else Kind.parse(kind)
    shape = tuple(shape)
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    if kind in (Kind.RRS, Kind.RCS) and any(a < b for a, b in zip(shape, shape[1:])):
        return []
    return list(_enumerate(shape, kind, max_entry, False))


def standard_fillings(shape: Iterable[int], kind: Kind | str) -> list[Filling]:
    """All valid fillings of ``shape`` using each of 1..n exactly once."""
    kind = kind if isinstance(kind, Kind) else Kind.parse(kind)
    shape = tuple(shape)
    if kind in (Kind.RRS, Kind.RCS) and any(a < b for a, b in zip(shape, shape[1:])):
        return []
    return list(_enumerate(shape, kind, 0, True))


# -- standardization and descents ----------------------------------------------

def _tie_order(kind: Kind, cell: tuple[int, int]) -> tuple:
    i, k = cell
    if kind in (Kind.RCS, Kind.CSCT):
        return (-k, -i)          # right to left
    if kind is Kind.RRS:
        return (-i, k)           # bottom to top
    # RSCT: columns left to right; first column top to bottom, others bottom to top
    return (k, i if k == 0 else -i)


def standardize(F: Filling) -> Filling:
    cells = sorted(
        ((v, _tie_order(F.kind, (i, k)), i, k)
         for i, r in enumerate(F.rows) for k, v in enumerate(r)))
    new = [list(r) for r in F.rows]
    for label, (_, _, i, k) in enumerate(cells, start=1):
        new[i][k] = label
    return Filling(new, F.kind)


def _columns_of_values(T: Filling) -> dict[int, int]:
    return {v: k for r in T.rows for k, v in enumerate(r)}


def descent_set(T: Filling, transpose: bool = False) -> frozenset[int]:
    """Descent set of a standard filling.

    With ``transpose=False`` this is D(T): all i with i+1 in a column weakly
    right of i.  With ``transpose=True`` it is D'(T): all i with i+1 strictly
    left of i.
    """
    if not is_standard(T):
        raise ValueError("descent sets are defined for standard fillings only")
    col = _columns_of_values(T)
    n = T.size
    if transpose:
        return frozenset(i for i in range(1, n) if col[i + 1] < col[i])
    return frozenset(i for i in range(1, n) if col[i + 1] >= col[i])


def descent_composition(T: Filling, transpose: bool = False) -> Composition:
    return composition_from_subset(descent_set(T, transpose), T.size)


# -- reading words -----------------------------------------------------------

def reading_cells(lengths: Sequence[int]) -> list[tuple[int, int]]:
    """Cells in reading order: columns right to left, each top to bottom."""
    width = max(lengths, default=0)
    return [(i, k) for k in range(width - 1, -1, -1)
            for i, length in enumerate(lengths) if k < length]


def reading_word(F: Filling, modified: bool = False) -> list[int]:
    rows = [list(r) + [0] for r in F.rows] if modified else [list(r) for r in F.rows]
    return [rows[i][k] for i, k in reading_cells([len(r) for r in rows])]


# -- text and JSON forms ---------------------------------------------------------

def format_filling(F: Filling | Rows) -> str:
    rows = F.rows if isinstance(F, Filling) else F
    if not rows:
        return "(empty)"
    w = max(len(str(v)) for r in rows for v in r) if any(rows) else 1
    return "\n".join(" ".join(str(v).rjust(w) for v in r) for r in rows)


def parse_rows(text: str) -> list[list[int]]:
    """Parse ``"2,1/2/3,2/3"`` into rows; the empty string is the empty filling."""
    text = text.strip()
    if not text:
        return []
    try:
        return [[int(v) for v in chunk.split(",")] for chunk in text.split("/")]
    except ValueError:
        raise ValueError(f"malformed rows {text!r}") from None


def filling_to_json(F: Filling) -> dict:
    return {"shape": list(F.shape), "rows": [list(r) for r in F.rows], "kind": F.kind.value}


def filling_from_json(data: dict) -> Filling:
    F = Filling(data["rows"], Kind.parse(data["kind"]))
    if "shape" in data and list(F.shape) != list(data["shape"]):
        raise ValueError(f"rows do not match shape {data['shape']}")
    return F
