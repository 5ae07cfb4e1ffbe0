"""Cross-checks between the printed n=4 tables.

The printed RS -> QS and RS -> F tables together determine QS -> F, since
RS -> QS is invertible.  The rows this forces for QS_(1,2,1) and QS_(1,1,2)
differ from the printed QS -> F table, which is why that comparison fails
in the acceptance suite.
"""
from fractions import Fraction

import figures as fig
from rsqsym.compositions import lambda_of
from rsqsym.expansions import qs_in_f, schur_in_f
from rsqsym.qsym import Basis, QSymElement, transition_matrix


def _inverse(M):
    n = len(M)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        aug[c] = [v / aug[c][c] for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                aug[r] = [a - aug[r][c] * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def _mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _forced_qs_to_f():
    # RS = X QS and RS = A F give QS = X^-1 A F
    return [[int(v) for v in row] for row in _mul(_inverse(fig.FIG_QS2DQS), fig.FIG_MATRIX_A)]


def test_printed_tables_force_qs_to_f():
    forced = _forced_qs_to_f()
    computed = transition_matrix(Basis.QS, Basis.F, 4, fig.N4_ORDER, fig.MATRIX_AB_COLS)
    assert forced == [list(r) for r in computed.entries]


def test_printed_qs_to_f_disagrees_only_on_two_rows():
    forced = _forced_qs_to_f()
    differing = [a for a, f, p in zip(fig.N4_ORDER, forced, fig.FIG_MATRIX_B) if f != p]
    assert differing == [(1, 2, 1), (1, 1, 2)]
    assert qs_in_f((1, 2, 1)) == QSymElement.basis_element(Basis.F, (1, 2, 1))
    assert qs_in_f((1, 1, 2)) == QSymElement.basis_element(Basis.F, (1, 1, 2))


def test_printed_rows_break_schur_decomposition():
    # s_(2,1,1) is the sum of QS_alpha over the rearrangements of (2,1,1)
    s = schur_in_f((2, 1, 1))
    rows = {a: r for a, r in zip(fig.N4_ORDER, fig.FIG_MATRIX_B)}
    printed = QSymElement.zero(Basis.F, 4)
    for a, row in rows.items():
        if lambda_of(a) == (2, 1, 1):
            printed = printed + QSymElement(Basis.F, dict(zip(fig.MATRIX_AB_COLS, row)), 4)
    assert sum(c for _, c in s) == 3
    assert sum(c for _, c in printed) == 5
    assert printed != s
