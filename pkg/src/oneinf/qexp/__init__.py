"""q-expansions at cusps and canonical models."""
from .series import j_series, eisenstein_e4, delta_product, delta_pentagonal
from .curves import (WeierstrassCurve, check_invariants, duplication, isomorphism_test,
                     j_invariant, quadratic_twist, scaled_double, velu_2isogeny)
from .tate import local_data, minimal_discriminant, tate_conductor
from .branch import (BranchSolution, CuspChart, admissible_twists, branch_solve, cusp_chart,
                     ramified_cusps, twist_search)
from .assemble import (CanonicalModel, assemble_canonical_model, case_iv_report,
                       cusp_independence, table5_comparison)

__all__ = [
    "j_series", "eisenstein_e4", "delta_product", "delta_pentagonal",
    "WeierstrassCurve", "check_invariants", "duplication", "isomorphism_test", "j_invariant",
    "quadratic_twist", "scaled_double", "velu_2isogeny",
    "local_data", "minimal_discriminant", "tate_conductor",
    "BranchSolution", "CuspChart", "admissible_twists", "branch_solve", "cusp_chart",
    "ramified_cusps", "twist_search",
    "CanonicalModel", "assemble_canonical_model", "case_iv_report", "cusp_independence",
    "table5_comparison",
]
