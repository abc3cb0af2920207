"""Exact prime-ideal counting for concrete small fields."""

from psi_grh.exact_psi.gfp import divides_index, poly_shape_mod_p
from psi_grh.exact_psi.psi import (
    LogCombination,
    PsiTables,
    RangeReport,
    goldston_sandwich_check,
    lambda_tilde,
    pi_K,
    psi1_K,
    psi_K,
    psi_tables,
    theta_K,
    verify_bound_on_range,
)
from psi_grh.exact_psi.splitting import (
    SplittingShape,
    kronecker_symbol,
    quadratic_splitting,
    splitting_shape,
)
