"""Quasisymmetric Schur, row-strict quasisymmetric Schur and Schur functions.

Monomial coefficients are counted from tableaux whose entries are exactly
1..l for some l (entries up to the degree suffice, since renumbering values
order-preservingly keeps a tableau valid).  Fundamental coefficients are
counted from standard tableaux by their descent compositions.
"""
from __future__ import annotations

import json
import threading
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Iterable

from .compositions import (
    Composition,
    Partition,
    complement,
    compositions_of,
    conjugate,
    lambda_of,
    partitions_of,
    revlex_key,
)
from .insertion import check_commutation
from .qsym import Basis, QSymElement, f_to_m, omega, reverse_variables
from .tableaux import (
    Kind,
    descent_composition,
    enumerate_fillings,
    standard_fillings,
    weight,
)

FAMILY_KIND = {"QS": Kind.CSCT, "RS": Kind.RSCT, "SCHUR": Kind.RCS}
_TRANSPOSE_DESCENTS = {Kind.RSCT: True, Kind.CSCT: False, Kind.RCS: False}

_memo: dict[tuple[str, str, tuple[int, ...]], tuple[dict, int]] = {}
_memo_lock = threading.Lock()


@dataclass(frozen=True)
class ExpansionReport:
    family: str
    index: Composition
    target_basis: Basis
    element: QSymElement
    witness_count: int

    def to_json(self) -> dict:
        return {"family": self.family, "index": list(self.index),
                "witness_count": self.witness_count, **self.element.to_json()}


def _family(name: str) -> str:
    key = name.strip().upper()
    if key not in FAMILY_KIND:
        raise ValueError(f"unknown family {name!r}; choose from qs, rs, schur")
    return key


def _compute(family: str, basis: Basis, index: tuple[int, ...]) -> tuple[dict, int]:
    kind = FAMILY_KIND[family]
    n = sum(index)
    counts: Counter = Counter()
    if basis is Basis.M:
        for T in enumerate_fillings(index, kind, max(n, 1)):
            w = weight(T)
            if all(w):
                counts[Composition(w)] += 1
    else:
        for T in standard_fillings(index, kind):
            counts[descent_composition(T, _TRANSPOSE_DESCENTS[kind])] += 1
    return dict(counts), sum(counts.values())


def expand(family: str, index: Iterable[int], basis: Basis | str = Basis.M) -> ExpansionReport:
    """Expand QS_alpha, RS_alpha or s_lambda in the M or F basis."""
    family = _family(family)
    basis = basis if isinstance(basis, Basis) else Basis.parse(basis)
    if basis not in (Basis.M, Basis.F):
        raise ValueError("expansions target the M or F basis")
    index = Partition(index) if family == "SCHUR" else Composition(index)
    key = (family, basis.value, tuple(index))
    with _memo_lock:
        hit = _memo.get(key)
    if hit is None:
        hit = _compute(family, basis, tuple(index))
        with _memo_lock:
            _memo[key] = hit
    terms, witnesses = hit
    element = QSymElement(basis, terms, index.degree)
    return ExpansionReport(family, index, basis, element, witnesses)


def rs_in_m(alpha: Iterable[int]) -> QSymElement:
    return expand("RS", alpha, Basis.M).element


def qs_in_m(alpha: Iterable[int]) -> QSymElement:
    return expand("QS", alpha, Basis.M).element


def rs_in_f(alpha: Iterable[int]) -> QSymElement:
    return expand("RS", alpha, Basis.F).element


def qs_in_f(alpha: Iterable[int]) -> QSymElement:
    return expand("QS", alpha, Basis.F).element


def schur_in_m(lam: Iterable[int]) -> QSymElement:
    return expand("SCHUR", lam, Basis.M).element


def schur_in_f(lam: Iterable[int]) -> QSymElement:
    return expand("SCHUR", lam, Basis.F).element


def tableau_polynomial(shape: Iterable[int], kind: Kind | str, k: int) -> dict[tuple[int, ...], int]:
    """Sum of x^T over valid fillings with entries at most ``k``, as exponent vectors."""
    poly: Counter = Counter()
    for T in enumerate_fillings(tuple(shape), kind, k):
        w = weight(T)
        poly[w + (0,) * (k - len(w))] += 1
    return dict(poly)


def save_cache(path: str | Path) -> None:
    with _memo_lock:
        data = [{"family": f, "basis": b, "index": list(i), "witness_count": w,
                 "terms": [{"parts": list(a), "coeff": c}
                           for a, c in sorted(t.items(), key=lambda kv: revlex_key(kv[0]), reverse=True)]}
                for (f, b, i), (t, w) in sorted(_memo.items())]
    Path(path).write_text(json.dumps(data, indent=1) + "\n")


def load_cache(path: str | Path) -> int:
    """Merge a saved cache into the in-memory memo; returns the number of entries read."""
    path = Path(path)
    if not path.exists():
        return 0
    data = json.loads(path.read_text())
    with _memo_lock:
        for rec in data:
            terms = {Composition(t["parts"]): int(t["coeff"]) for t in rec["terms"]}
            _memo[rec["family"], rec["basis"], tuple(rec["index"])] = (terms, int(rec["witness_count"]))
    return len(data)


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()


# -- verification ----------------------------------------------------------------

@dataclass
class VerificationReport:
    name: str
    degree: int
    results: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.results)

    @property
    def failures(self) -> list[str]:
        return [label for label, ok in self.results if not ok]

    def summary(self) -> str:
        bad = self.failures
        status = "PASS" if not bad else "FAIL"
        line = f"{status} {self.name} n={self.degree}: {len(self.results) - len(bad)}/{len(self.results)}"
        return line + (f" (failed: {', '.join(bad)})" if bad else "")

    def to_json(self) -> dict:
        return {"name": self.name, "degree": self.degree, "passed": self.passed,
                "results": [{"case": c, "passed": ok} for c, ok in self.results]}


def _label(alpha: Iterable[int]) -> str:
    return "(" + ",".join(map(str, alpha)) + ")"


def _sum(elements: Iterable[QSymElement], basis: Basis, n: int) -> QSymElement:
    total = QSymElement.zero(basis, n)
    for e in elements:
        total = total + e
    return total


def verify_schur_decompositions(n: int) -> VerificationReport:
    """s_lam = sum of QS_alpha over rearrangements of lam = sum of RS_alpha over rearrangements of lam'."""
    report = VerificationReport("schur", n)
    comps = compositions_of(n)
    for lam in partitions_of(n):
        s = schur_in_m(lam)
        qs = _sum((qs_in_m(a) for a in comps if lambda_of(a) == lam), Basis.M, n)
        rs = _sum((rs_in_m(a) for a in comps if lambda_of(a) == conjugate(lam)), Basis.M, n)
        report.results.append((f"QS{_label(lam)}", qs == s))
        report.results.append((f"RS{_label(lam)}", rs == s))
    return report


def verify_omega_theorem(n: int) -> VerificationReport:
    """omega(QS_alpha)(x_1..x_k) equals RS_alpha(x_k..x_1), compared in M coordinates."""
    report = VerificationReport("omega", n)
    for alpha in compositions_of(n):
        lhs = f_to_m(omega(qs_in_f(alpha)))
        rhs = reverse_variables(rs_in_m(alpha))
        report.results.append((_label(alpha), lhs == rhs))
    return report


def rs_to_f_triangular_orders(n: int) -> tuple[list[Composition], list[Composition]]:
    """Rows: revlex, largest first.  Columns: ordered by revlex on complements."""
    rows = compositions_of(n)
    return rows, [complement(a) for a in rows]


def verify_triangularity(n: int) -> VerificationReport:
    """RS -> F is upper unitriangular when columns are ordered by complements."""
    report = VerificationReport("triangularity", n)
    rows, cols = rs_to_f_triangular_orders(n)
    for i, alpha in enumerate(rows):
        e = rs_in_f(alpha)
        ok = e.coefficient(cols[i]) == 1 and all(e.coefficient(cols[j]) == 0 for j in range(i))
        report.results.append((_label(alpha), ok))
    return report


def verify_commutation(n: int, max_x: int | None = None) -> VerificationReport:
    """rho(T <- x) == rho(T) ⤙ x for reverse row-strict T of degree n, entries <= n."""
    report = VerificationReport("commutation", n)
    max_x = max_x if max_x is not None else n + 1
    for lam in partitions_of(n):
        ok = all(check_commutation(T, x)
                 for T, x in product(enumerate_fillings(lam, Kind.RRS, max(n, 1)), range(1, max_x + 1)))
        report.results.append((_label(lam), ok))
    return report


VERIFIERS = {
    "omega": verify_omega_theorem,
    "schur": verify_schur_decompositions,
    "triangularity": verify_triangularity,
    "commutation": verify_commutation,
}
