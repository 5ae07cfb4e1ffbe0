"""Shape-rearranging bijections between tableaux and composition tableaux.

``rho_row``  reverse row-strict tableau     -> RSCT
``rho_col``  reverse column-strict tableau  -> CSCT
``transpose`` reflection across the main diagonal (RRS <-> RCS)
``phi``      CSCT -> RSCT, conjugating the underlying partition

All maps keep the multiset of entries in every column, except ``phi`` and
``transpose`` which move columns to rows.  Inputs are assumed valid; call
``Filling.is_valid`` first when that is not guaranteed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .tableaux import Filling, Kind

Step = tuple[int, tuple[int, int]]


@dataclass(frozen=True)
class BijectionTrace:
    input: Filling
    output: Filling
    steps: list[Step] = field(default_factory=list)

    def lines(self) -> list[str]:
        return [f"entry {e} -> (row {i}, col {k})" for e, (i, k) in self.steps]


def replay(steps: Sequence[Step]) -> list[list[int]]:
    """Rebuild the rows of a diagram from recorded (entry, (row, col)) placements."""
    cells: dict[tuple[int, int], int] = {}
    for e, cell in steps:
        cells[cell] = e
    nrows = max((i for i, _ in cells), default=0)
    return [[cells[i, k] for k in range(1, 1 + sum(1 for (r, _) in cells if r == i))]
            for i in range(1, nrows + 1)]


class PlacementError(RuntimeError):
    """An entry found no admissible cell; the input was not a valid tableau."""


def _assemble(columns: Sequence[Sequence[int]], strict: bool) -> tuple[list[list[int]], list[Step]]:
    """Build a composition tableau column by column.

    The first column is sorted increasingly top to bottom.  Entries of each
    later column go in largest first, each into the highest row whose cell in
    this column is still free and whose left neighbour is greater than the
    entry (strictly if ``strict``, weakly otherwise).
    """
    if not columns:
        return [], []
    rows = [[e] for e in sorted(columns[0])]
    steps: list[Step] = [(e, (i + 1, 1)) for i, (e,) in enumerate(rows)]
    for k, col in enumerate(columns[1:], start=1):
        for e in sorted(col, reverse=True):
            for i, r in enumerate(rows):
                if len(r) == k and (r[-1] > e if strict else r[-1] >= e):
                    r.append(e)
                    steps.append((e, (i + 1, k + 1)))
                    break
            else:
                raise PlacementError(f"no cell for entry {e} in column {k + 1}")
    return rows, steps


def _sorted_columns(F: Filling) -> tuple[list[list[int]], list[Step]]:
    cols = [sorted(c, reverse=True) for c in F.columns()]
    depth = max((len(c) for c in cols), default=0)
    rows = [[c[t] for c in cols if t < len(c)] for t in range(depth)]
    steps = [(e, (t + 1, k + 1)) for k, c in enumerate(cols) for t, e in enumerate(c)]
    return rows, steps


def _rho_row(T: Filling):
    rows, steps = _assemble(T.columns(), strict=True)
    return Filling(rows, Kind.RSCT), steps


def _rho_row_inv(F: Filling):
    rows, steps = _sorted_columns(F)
    return Filling(rows, Kind.RRS), steps


def _rho_col(T: Filling):
    rows, steps = _assemble(T.columns(), strict=False)
    return Filling(rows, Kind.CSCT), steps


def _rho_col_inv(F: Filling):
    rows, steps = _sorted_columns(F)
    return Filling(rows, Kind.RCS), steps


def _transpose(T: Filling):
    kind = {Kind.RRS: Kind.RCS, Kind.RCS: Kind.RRS}.get(T.kind)
    if kind is None:
        raise ValueError(f"transpose applies to partition-shaped tableaux, not {T.kind.value}")
    cols = T.columns()
    steps = [(e, (k + 1, i + 1)) for k, c in enumerate(cols) for i, e in enumerate(c)]
    return Filling(cols, kind), steps


def _phi(F: Filling):
    # C_j collects the j-th largest entry of every column of F that has one.
    cols = [sorted(c, reverse=True) for c in F.columns()]
    depth = max((len(c) for c in cols), default=0)
    collections = [[c[j] for c in cols if j < len(c)] for j in range(depth)]
    rows, steps = _assemble(collections, strict=True)
    return Filling(rows, Kind.RSCT), steps


def _phi_inv(F: Filling):
    T = rho_row_inv(F)
    return _rho_col(transpose(T))


_MAPS: dict[str, Callable[[Filling], tuple[Filling, list[Step]]]] = {
    "rho": _rho_row,
    "rho-inv": _rho_row_inv,
    "rho-col": _rho_col,
    "rho-col-inv": _rho_col_inv,
    "transpose": _transpose,
    "phi": _phi,
    "phi-inv": _phi_inv,
}

MAP_NAMES = tuple(_MAPS)


def rho_row(T: Filling) -> Filling:
    """Reverse row-strict tableau -> RSCT whose shape rearranges shape(T)."""
    return _rho_row(T)[0]


def rho_row_inv(F: Filling) -> Filling:
    """RSCT -> reverse row-strict tableau, by sorting each column decreasingly."""
    return _rho_row_inv(F)[0]


def rho_col(T: Filling) -> Filling:
    """Reverse column-strict tableau -> CSCT.

    Mirrors ``rho_row`` with the left-neighbour test weakened to ``>=``.
    """
    return _rho_col(T)[0]


def rho_col_inv(F: Filling) -> Filling:
    return _rho_col_inv(F)[0]


def transpose(T: Filling) -> Filling:
    return _transpose(T)[0]


def phi(F: Filling) -> Filling:
    """CSCT -> RSCT rearranging the conjugate partition; preserves weight.

    Only the column multisets of ``F`` are read, so ``phi(F)`` equals
    ``rho_row(transpose(rho_col_inv(F)))``.
    """
    return _phi(F)[0]


def phi_inv(F: Filling) -> Filling:
    return _phi_inv(F)[0]


def trace(name: str, F: Filling) -> BijectionTrace:
    try:
        fn = _MAPS[name]
    except KeyError:
        raise ValueError(f"unknown map {name!r}; choose from {', '.join(MAP_NAMES)}") from None
    out, steps = fn(F)
    return BijectionTrace(F, out, steps)
