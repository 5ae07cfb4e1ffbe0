"""Dual Schensted insertion and its extension to row-strict composition tableaux."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .bijections import rho_row
from .tableaux import Filling, Kind, reading_cells

Cell = tuple[int, int]


@dataclass(frozen=True)
class InsertionStep:
    """State at the start of one scan: the value in hand and what is left to scan."""
    value: int
    remaining: list[int]
    diagram: list[list[int]]


@dataclass(frozen=True)
class InsertionResult:
    result: Filling
    path: list[Cell]
    new_cell: Cell
    bumped: list[int] = field(default_factory=list)
    steps: list[InsertionStep] = field(default_factory=list)


def dual_row_insert(T: Filling, x: int) -> InsertionResult:
    """Row-insert ``x`` into a reverse row-strict tableau, T <- x.

    In each row the largest entry ``y <= x`` is replaced by ``x`` and ``y``
    moves on to the next row; when no such entry exists ``x`` is appended.
    """
    if x < 1:
        raise ValueError("only positive integers can be inserted")
    rows = [list(r) for r in T.rows]
    path: list[Cell] = []
    bumped: list[int] = []
    for i, row in enumerate(rows):
        # rows are strictly decreasing, so the first y <= x is the largest
        k = next((k for k, y in enumerate(row) if y <= x), None)
        if k is None:
            row.append(x)
            path.append((i + 1, len(row)))
            return InsertionResult(Filling(rows, Kind.RRS), path, path[-1], bumped)
        row[k], x = x, row[k]
        bumped.append(x)
        path.append((i + 1, k + 1))
    rows.append([x])
    path.append((len(rows), 1))
    return InsertionResult(Filling(rows, Kind.RRS), path, path[-1], bumped)


def rsct_insert(F: Filling, x: int) -> InsertionResult:
    """Insert ``x`` into an RSCT, written F ⤙ x.

    Scan the modified reading word (each row padded by a trailing 0) for the
    first ``y <= x`` whose left neighbour exceeds ``x``.  A 0 is overwritten
    and the insertion stops; any other ``y`` is bumped and the scan resumes
    after it with ``y`` in hand.  When the scan finds nothing outside the
    first column, ``x`` starts a new row directly below the last row whose
    first entry is ``<= x``.
    """
    if x < 1:
        raise ValueError("only positive integers can be inserted")
    tilde = [list(r) + [0] for r in F.rows]
    cells = reading_cells([len(r) for r in tilde])
    path: list[Cell] = []
    bumped: list[int] = []
    steps: list[InsertionStep] = []
    start = 0
    while True:
        steps.append(InsertionStep(x, [tilde[i][k] for i, k in cells[start:]],
                                   [list(r) for r in tilde]))
        hit = None
        for t in range(start, len(cells)):
            i, k = cells[t]
            if k == 0:
                break   # the first column is read last; nothing further can qualify
            if tilde[i][k] <= x < tilde[i][k - 1]:
                hit = t
                break
        if hit is None:
            pos = sum(1 for r in tilde if r[0] <= x)
            tilde.insert(pos, [x, 0])
            path = [(i + 1 if i > pos else i, k) for i, k in path]
            path.append((pos + 1, 1))
            break
        i, k = cells[hit]
        y = tilde[i][k]
        tilde[i][k] = x
        path.append((i + 1, k + 1))
        if y == 0:
            break
        bumped.append(y)
        x = y
        start = hit + 1
    rows = [r[:-1] if r[-1] == 0 else r for r in tilde]
    return InsertionResult(Filling(rows, Kind.RSCT), path, path[-1], bumped, steps)


def check_commutation(T: Filling, x: int) -> bool:
    """rho(T <- x) == rho(T) ⤙ x."""
    return rho_row(dual_row_insert(T, x).result) == rsct_insert(rho_row(T), x).result


# -- matrices ------------------------------------------------------------------

BiwordMatrix = Mapping[tuple[int, int], int]


def as_biword_matrix(A: BiwordMatrix | Sequence[Sequence[int]]) -> dict[tuple[int, int], int]:
    """Normalise a nested list (1-indexed by position) or a mapping to its support."""
    if isinstance(A, Mapping):
        items = A.items()
    else:
        items = (((i + 1, j + 1), a) for i, row in enumerate(A) for j, a in enumerate(row))
    out = {}
    for (i, j), a in items:
        if a < 0 or i < 1 or j < 1:
            raise ValueError("biword matrices have nonnegative entries at positive indices")
        if a:
            out[i, j] = int(a)
    return out


def biword(A: BiwordMatrix | Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Biletters (top, bottom) in lexicographic order.

    Bottoms must increase weakly within a run of equal tops: with the
    opposite tie order, A and its transpose can insert to tableaux of
    different underlying partitions.
    """
    A = as_biword_matrix(A)
    return sorted((i, j) for (i, j), a in A.items() for _ in range(a))


def insert_word(word: Iterable[int], F: Filling | None = None) -> Filling:
    F = F if F is not None else Filling([], Kind.RSCT)
    for x in word:
        F = rsct_insert(F, x).result
    return F


def rsk_pair(A: BiwordMatrix | Sequence[Sequence[int]]) -> tuple[Filling, Filling]:
    """Pair of RSCTs attached to an N-matrix.

    The first tableau inserts the bottom row of the biword of ``A``; the
    second does the same for the transposed matrix.
    """
    A = as_biword_matrix(A)
    At = {(j, i): a for (i, j), a in A.items()}
    return (insert_word(b for _, b in biword(A)),
            insert_word(b for _, b in biword(At)))
