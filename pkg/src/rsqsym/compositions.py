"""Compositions, partitions and the orders on them.

Compositions are stored as tuples of positive integers.  ``Composition`` and
``Partition`` are thin tuple subclasses, so they compare and hash equal to the
plain tuple of their parts and can be used interchangeably as dict keys.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable


class Composition(tuple):
    """An ordered sequence of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"composition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({','.join(map(str, self))})"

    def __str__(self) -> str:
        return format_composition(self)


class Partition(Composition):
    """A weakly decreasing composition."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        for a, b in zip(self, self[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing, got {tuple(self)}")
        return self


def collapse(weak: Iterable[int]) -> Composition:
    """Drop the zero entries of a weak composition."""
    return Composition(p for p in weak if p)


def format_composition(alpha: Iterable[int]) -> str:
    return ",".join(str(p) for p in alpha)


def parse_composition(text: str) -> Composition:
    """Parse ``"2,1,2,1"`` (or the empty string) into a composition."""
    text = text.strip()
    if not text:
        return Composition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed composition {text!r}") from None
    return Composition(parts)


def composition_to_json(alpha: Iterable[int]) -> dict:
    return {"parts": list(alpha)}


def composition_from_json(data: dict) -> Composition:
    return Composition(data["parts"])


# -- set correspondence ------------------------------------------------------

def subset_of(alpha: Iterable[int]) -> frozenset[int]:
    """Partial sums of ``alpha`` below its degree, as a subset of [n-1]."""
    sums = list(accumulate(alpha))
    return frozenset(sums[:-1])


def composition_from_subset(subset: Iterable[int], n: int) -> Composition:
    """The composition of ``n`` whose partial-sum set is ``subset``."""
    points = sorted(set(subset))
    for s in points:
        if not 1 <= s <= n - 1:
            raise ValueError(f"{s} is not in [1, {n - 1}]")
    if n == 0:
        return Composition()
    bounds = [0, *points, n]
    return Composition(b - a for a, b in zip(bounds, bounds[1:]))


def complement(alpha: Iterable[int]) -> Composition:
    alpha = Composition(alpha)
    n = alpha.degree
    if n == 0:
        return alpha
    return composition_from_subset(set(range(1, n)) - subset_of(alpha), n)


def reverse(alpha: Iterable[int]) -> Composition:
    return Composition(tuple(alpha)[::-1])


# -- orders ------------------------------------------------------------------

def refinement_leq(alpha: Iterable[int], beta: Iterable[int]) -> bool:
    """True iff ``beta`` is obtained from ``alpha`` by summing adjacent parts."""
    alpha, beta = tuple(alpha), tuple(beta)
    if sum(alpha) != sum(beta):
        return False
    return subset_of(beta) <= subset_of(alpha)


def lambda_of(alpha: Iterable[int]) -> Partition:
    return Partition(sorted(alpha, reverse=True))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominance_leq(mu: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff ``lam`` dominates ``mu``."""
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal degrees, got {mu} and {lam}")
    return all(m <= l for m, l in zip(accumulate(mu), accumulate(lam)))


def revlex_key(alpha: Iterable[int]) -> tuple:
    """Sort key realising the revlex order.

    Lexicographic order on partitions is a linear extension of dominance, so
    comparing ``(lambda_of(alpha), alpha)`` lexicographically compares by
    dominance first, breaks dominance-incomparable ties by lex on the
    partitions, and finally compares the compositions lexicographically.
    """
    alpha = tuple(alpha)
    return (tuple(lambda_of(alpha)), alpha)


def revlex_leq(alpha: Iterable[int], beta: Iterable[int]) -> bool:
    alpha, beta = tuple(alpha), tuple(beta)
    if sum(alpha) != sum(beta):
        raise ValueError(f"revlex needs equal degrees, got {alpha} and {beta}")
    return revlex_key(alpha) <= revlex_key(beta)


# -- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return (Composition(),)
    found = []
    for mask in range(1 << (n - 1)):
        found.append(composition_from_subset(
            (i + 1 for i in range(n - 1) if mask >> i & 1), n))
    return tuple(sorted(found, key=revlex_key, reverse=True))


def compositions_of(n: int) -> list[Composition]:
    """All compositions of ``n``, largest first in revlex order.

    >>> [str(a) for a in compositions_of(3)]
    ['3', '2,1', '1,2', '1,1,1']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_compositions(n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first, *tail)
    return [Partition(p) for p in gen(n, n)]


def rearrangements(lam: Iterable[int]) -> list[Composition]:
    """Compositions whose parts sort to ``lam``, largest first in revlex order."""
    lam = lambda_of(lam)
    return [a for a in compositions_of(lam.degree) if lambda_of(a) == lam]
