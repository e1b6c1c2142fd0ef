"""Exact symbolic computation of degenerate Bernoulli numbers and polynomials,
their generalizations through a formal Gauss hypergeometric generating
function, and the degenerate Stirling and Eulerian triangles they live on.

All arithmetic is exact, over Q[l] (polynomials in the degeneracy parameter),
Q(l), or Q[l][x].  Every major quantity has at least two independent
computation routes; the verify module runs the whole identity catalogue and
reports the first counterexample if any route disagrees.
"""

from .bernoulli import (
    RemarkReport,
    carlitz_beta,
    carlitz_beta_gf,
    classical_bernoulli,
    gen_beta,
    gen_beta_classical_limit,
    gen_beta_eulerian,
    gen_beta_gf,
    gen_beta_integral,
    gen_beta_poly,
    gen_beta_poly_derivative,
    gen_beta_poly_gf,
    gen_beta_poly_stirling,
    gen_beta_rstirling,
    gen_beta_rstirling_simplified,
    gen_beta_stirling_sum,
    verify_remark_identities,
)
from .exactcore import (
    ExactRational,
    PolyLambda,
    PolyXOverLambda,
    RationalFunctionLambda,
    poly_divmod,
    poly_gcd,
    specialize,
)
from .series import (
    TruncatedSeries,
    degenerate_exp,
    degenerate_log,
    gauss_2f1_formal,
)
from .triangles import (
    TriangleTable,
    eulerian_classical,
    eulerian_degenerate,
    falling_factorial,
    falling_lambda,
    forward_difference,
    log_weight,
    r_stirling2_classical,
    r_stirling2_deg,
    rising_factorial,
    rising_lambda,
    stirling1_classical,
    stirling1_deg,
    stirling2_classical,
    stirling2_deg,
    stirling2_deg_poly,
    stirling2_deg_table,
)
from .verify import (
    DESCRIPTIONS,
    FirstFailure,
    IdentityCase,
    IdentityId,
    IdentityReport,
    explain_failure,
    run_suite,
    suite_plan,
)

__version__ = "0.1.0"

__all__ = [
    "ExactRational",
    "PolyLambda",
    "RationalFunctionLambda",
    "PolyXOverLambda",
    "poly_divmod",
    "poly_gcd",
    "specialize",
    "TruncatedSeries",
    "degenerate_exp",
    "degenerate_log",
    "gauss_2f1_formal",
    "TriangleTable",
    "falling_factorial",
    "rising_factorial",
    "falling_lambda",
    "rising_lambda",
    "log_weight",
    "stirling1_deg",
    "stirling2_deg",
    "stirling1_classical",
    "stirling2_classical",
    "stirling2_deg_poly",
    "r_stirling2_deg",
    "r_stirling2_classical",
    "eulerian_classical",
    "eulerian_degenerate",
    "forward_difference",
    "stirling2_deg_table",
    "carlitz_beta",
    "carlitz_beta_gf",
    "classical_bernoulli",
    "gen_beta",
    "gen_beta_stirling_sum",
    "gen_beta_gf",
    "gen_beta_eulerian",
    "gen_beta_integral",
    "gen_beta_rstirling",
    "gen_beta_rstirling_simplified",
    "gen_beta_classical_limit",
    "gen_beta_poly",
    "gen_beta_poly_stirling",
    "gen_beta_poly_gf",
    "gen_beta_poly_derivative",
    "RemarkReport",
    "verify_remark_identities",
    "IdentityId",
    "IdentityCase",
    "IdentityReport",
    "FirstFailure",
    "DESCRIPTIONS",
    "run_suite",
    "suite_plan",
    "explain_failure",
    "__version__",
]
