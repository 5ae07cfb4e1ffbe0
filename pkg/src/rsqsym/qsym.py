"""Sparse quasisymmetric functions over the integers.

Elements carry a basis tag (M, F, QS or RS) and a degree.  The M and F bases
are handled here directly; the QS and RS bases get their monomial
coordinates from :mod:`rsqsym.expansions`.
"""
from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .compositions import (
    Composition,
    complement,
    composition_from_subset,
    compositions_of,
    format_composition,
    parse_composition,
    reverse,
    revlex_key,
    subset_of,
)


class Basis(str, enum.Enum):
    M = "M"
    F = "F"
    QS = "QS"
    RS = "RS"

    @classmethod
    def parse(cls, text: str) -> "Basis":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown basis {text!r}; choose from M, F, QS, RS") from None


class BasisError(ArithmeticError):
    """The target family is not a Z-basis of the degree-n component."""


class QSymElement:
    """An integer combination of basis elements of a single degree."""

    __slots__ = ("basis", "degree", "_terms")

    def __init__(self, basis: Basis | str, terms: Mapping[Iterable[int], int] | Iterable = (),
                 degree: int | None = None):
        self.basis = basis if isinstance(basis, Basis) else Basis.parse(basis)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Composition, int] = {}
        for alpha, c in items:
            alpha = Composition(alpha)
            if int(c) != c:
                raise ValueError(f"coefficients must be integers, got {c!r}")
            acc[alpha] = acc.get(alpha, 0) + int(c)
        degrees = {a.degree for a in acc}
        if degree is None:
            if len(degrees) > 1:
                raise ValueError(f"mixed degrees {sorted(degrees)}")
            degree = degrees.pop() if degrees else 0
        elif degrees - {degree}:
            raise ValueError(f"terms of degree {sorted(degrees)} in an element of degree {degree}")
        self.degree = degree
        self._terms = {a: c for a, c in acc.items() if c}

    @classmethod
    def basis_element(cls, basis: Basis | str, alpha: Iterable[int]) -> "QSymElement":
        alpha = Composition(alpha)
        return cls(basis, {alpha: 1}, alpha.degree)

    @classmethod
    def zero(cls, basis: Basis | str, degree: int) -> "QSymElement":
        return cls(basis, {}, degree)

    @property
    def terms(self) -> dict[Composition, int]:
        return dict(self._terms)

    def coefficient(self, alpha: Iterable[int]) -> int:
        return self._terms.get(Composition(alpha), 0)

    def __iter__(self) -> Iterator[tuple[Composition, int]]:
        """Terms, largest index first in revlex order."""
        for alpha in sorted(self._terms, key=revlex_key, reverse=True):
            yield alpha, self._terms[alpha]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "QSymElement") -> None:
        if not isinstance(other, QSymElement):
            raise TypeError(f"cannot combine QSymElement with {type(other).__name__}")
        if other.basis is not self.basis or other.degree != self.degree:
            raise ValueError(
                f"cannot combine {self.basis.value} degree {self.degree} "
                f"with {other.basis.value} degree {other.degree}")

    def __add__(self, other: "QSymElement") -> "QSymElement":
        self._check(other)
        return QSymElement(self.basis, [*self._terms.items(), *other._terms.items()], self.degree)

    def __neg__(self) -> "QSymElement":
        return QSymElement(self.basis, {a: -c for a, c in self._terms.items()}, self.degree)

    def __sub__(self, other: "QSymElement") -> "QSymElement":
        return self + (-other)

    def __mul__(self, scalar: int) -> "QSymElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return QSymElement(self.basis, {a: scalar * c for a, c in self._terms.items()}, self.degree)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymElement):
            return NotImplemented
        return (self.basis, self.degree, self._terms) == (other.basis, other.degree, other._terms)

    def __hash__(self) -> int:
        return hash((self.basis, self.degree, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"QSymElement({self.basis.value}, degree={self.degree}: {self})"

    def __str__(self) -> str:
        return format_element(self)

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "degree": self.degree,
            "terms": [{"parts": list(a), "coeff": c} for a, c in self],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QSymElement":
        return cls(data["basis"], [(t["parts"], t["coeff"]) for t in data["terms"]], data["degree"])


def format_element(e: QSymElement) -> str:
    out = []
    for alpha, c in e:
        term = f"{e.basis.value}({format_composition(alpha)})"
        if abs(c) != 1:
            term = f"{abs(c)}*{term}"
        if not out:
            out.append(term if c > 0 else f"-{term}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {term}")
    return " ".join(out) if out else "0"


def _require(e: QSymElement, basis: Basis) -> None:
    if e.basis is not basis:
        raise ValueError(f"expected an element of the {basis.value} basis, got {e.basis.value}")


def refinements(alpha: Iterable[int]) -> Iterator[Composition]:
    """All compositions refining ``alpha`` (including ``alpha`` itself)."""
    alpha = Composition(alpha)
    n = alpha.degree
    if n == 0:
        yield alpha
        return
    base = subset_of(alpha)
    free = sorted(set(range(1, n)) - base)
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            yield composition_from_subset(base | set(extra), n)


def f_to_m(e: QSymElement) -> QSymElement:
    """F_alpha = sum of M_beta over the refinements beta of alpha."""
    _require(e, Basis.F)
    return QSymElement(Basis.M, [(beta, c) for alpha, c in e._terms.items()
                                 for beta in refinements(alpha)], e.degree)


def m_to_f(e: QSymElement) -> QSymElement:
    """Inverse of :func:`f_to_m`, by Moebius inversion over refinement."""
    _require(e, Basis.M)
    return QSymElement(Basis.F, [(beta, c * (-1) ** (len(beta) - len(alpha)))
                                 for alpha, c in e._terms.items()
                                 for beta in refinements(alpha)], e.degree)


def omega(e: QSymElement) -> QSymElement:
    """omega(F_alpha) = F of the reversed complement of alpha."""
    _require(e, Basis.F)
    return QSymElement(Basis.F, [(reverse(complement(a)), c) for a, c in e._terms.items()], e.degree)


def reverse_variables(e: QSymElement) -> QSymElement:
    """Substitute x_i -> x_{k+1-i}; on M and F this reverses every index."""
    if e.basis not in (Basis.M, Basis.F):
        raise ValueError("variable reversal is only defined here on the M and F bases")
    return QSymElement(e.basis, [(reverse(a), c) for a, c in e._terms.items()], e.degree)


def polynomial(e: QSymElement, k: int) -> dict[tuple[int, ...], int]:
    """Expand an M- or F-element in the variables x_1..x_k.

    Returns a map from exponent vectors (length ``k``) to coefficients.
    """
    if e.basis is Basis.F:
        e = f_to_m(e)
    _require(e, Basis.M)
    poly: dict[tuple[int, ...], int] = {}
    for alpha, c in e._terms.items():
        for support in combinations(range(k), len(alpha)):
            exps = [0] * k
            for i, p in zip(support, alpha):
                exps[i] = p
            key = tuple(exps)
            poly[key] = poly.get(key, 0) + c
    return {m: c for m, c in poly.items() if c}


# -- transition matrices -------------------------------------------------------

def in_m(basis: Basis | str, alpha: Iterable[int]) -> QSymElement:
    """The basis element indexed by ``alpha`` written in the M basis."""
    basis = basis if isinstance(basis, Basis) else Basis.parse(basis)
    alpha = Composition(alpha)
    if basis is Basis.M:
        return QSymElement.basis_element(Basis.M, alpha)
    if basis is Basis.F:
        return f_to_m(QSymElement.basis_element(Basis.F, alpha))
    from . import expansions
    return expansions.qs_in_m(alpha) if basis is Basis.QS else expansions.rs_in_m(alpha)


@dataclass(frozen=True)
class TransitionMatrix:
    """``entries[i][j]`` is the coefficient of to-basis ``col_order[j]`` in from-basis ``row_order[i]``."""
    from_basis: Basis
    to_basis: Basis
    degree: int
    row_order: tuple[Composition, ...]
    col_order: tuple[Composition, ...]
    entries: tuple[tuple[int, ...], ...]

    def row(self, alpha: Iterable[int]) -> QSymElement:
        i = self.row_order.index(Composition(alpha))
        return QSymElement(self.to_basis, zip(self.col_order, self.entries[i]), self.degree)

    def __matmul__(self, other: "TransitionMatrix") -> list[list[int]]:
        """Plain product, after aligning ``other``'s rows with our columns."""
        if self.to_basis is not other.from_basis:
            raise ValueError("basis mismatch in matrix product")
        index = {a: i for i, a in enumerate(other.row_order)}
        return [[sum(self.entries[r][t] * other.entries[index[self.col_order[t]]][c]
                     for t in range(len(self.col_order)))
                 for c in range(len(other.col_order))]
                for r in range(len(self.row_order))]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["", *(format_composition(a) for a in self.col_order)])
        for a, row in zip(self.row_order, self.entries):
            w.writerow([format_composition(a), *row])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "from": self.from_basis.value,
            "to": self.to_basis.value,
            "degree": self.degree,
            "rows": [list(a) for a in self.row_order],
            "cols": [list(a) for a in self.col_order],
            "entries": [list(r) for r in self.entries],
        }

    def pretty(self) -> str:
        head = [f"{self.from_basis.value}\\{self.to_basis.value}",
                *("".join(map(str, a)) for a in self.col_order)]
        body = [["".join(map(str, a)), *map(str, r)] for a, r in zip(self.row_order, self.entries)]
        widths = [max(len(line[j]) for line in [head, *body]) for j in range(len(head))]
        return "\n".join(" ".join(cell.rjust(w) for cell, w in zip(line, widths))
                         for line in [head, *body])


def parse_matrix_csv(text: str) -> tuple[list[Composition], list[Composition], list[list[int]]]:
    rows = list(csv.reader(io.StringIO(text)))
    cols = [parse_composition(c) for c in rows[0][1:]]
    return ([parse_composition(r[0]) for r in rows[1:]], cols,
            [[int(v) for v in r[1:]] for r in rows[1:]])


def _solve_left(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact X with X @ B == A, for square invertible B (Gauss-Jordan over Q)."""
    n = len(B)
    # X B = A  <=>  B^T X^T = A^T
    aug = [[Fraction(B[j][i]) for j in range(n)] + [Fraction(A[r][i]) for r in range(len(A))]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise BasisError("transition target is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [[aug[i][n + r] for i in range(n)] for r in range(len(A))]


def transition_matrix(from_basis: Basis | str, to_basis: Basis | str, n: int,
                      row_order: Sequence[Iterable[int]] | None = None,
                      col_order: Sequence[Iterable[int]] | None = None,
                      expand: Callable[[Basis, Composition], QSymElement] = in_m) -> TransitionMatrix:
    """Exact change of basis in degree ``n``.

    Both families are written in M coordinates and the resulting integer
    system is solved over the rationals; a non-integral or singular result
    raises :class:`BasisError`.  Orders default to revlex, largest first.
    """
    src = from_basis if isinstance(from_basis, Basis) else Basis.parse(from_basis)
    dst = to_basis if isinstance(to_basis, Basis) else Basis.parse(to_basis)
    default = compositions_of(n)
    rows = tuple(Composition(a) for a in (row_order or default))
    cols = tuple(Composition(a) for a in (col_order or default))
    for label, order in (("row", rows), ("column", cols)):
        if sorted(order, key=revlex_key) != sorted(default, key=revlex_key):
            raise ValueError(f"{label} order must list every composition of {n} exactly once")
    m_index = {a: i for i, a in enumerate(default)}

    def vector(basis: Basis, alpha: Composition) -> list[int]:
        v = [0] * len(default)
        for beta, c in expand(basis, alpha).terms.items():
            v[m_index[beta]] = c
        return v

    A = [vector(src, a) for a in rows]
    B = [vector(dst, a) for a in cols]
    X = _solve_left(A, B)
    entries = []
    for r in X:
        if any(v.denominator != 1 for v in r):
            raise BasisError(f"{dst.value} is not a Z-basis in degree {n}")
        entries.append(tuple(int(v) for v in r))
    return TransitionMatrix(src, dst, n, rows, cols, tuple(entries))
