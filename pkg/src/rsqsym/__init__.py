"""Row-strict quasisymmetric Schur functions and composition tableaux."""
from .bijections import phi, phi_inv, rho_col, rho_col_inv, rho_row, rho_row_inv, transpose
from .compositions import (
    Composition,
    Partition,
    complement,
    composition_from_subset,
    compositions_of,
    conjugate,
    dominance_leq,
    lambda_of,
    refinement_leq,
    reverse,
    revlex_leq,
    subset_of,
)
from .expansions import (
    expand,
    qs_in_f,
    qs_in_m,
    rs_in_f,
    rs_in_m,
    schur_in_f,
    schur_in_m,
)
from .insertion import check_commutation, dual_row_insert, rsct_insert, rsk_pair
from .qsym import Basis, QSymElement, f_to_m, m_to_f, omega, transition_matrix
from .tableaux import Filling, Kind, enumerate_fillings, standardize

__version__ = "0.1.0"
