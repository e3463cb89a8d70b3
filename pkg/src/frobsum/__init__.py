"""Exact Frobenius-summand decompositions for the Plücker coordinate ring of
Gr(2,n) in characteristic p, certified by independent oracles."""

from .params import Params, default_truncation
from .characters import (
    WeightChar, NotTiltingError,
    weyl_char, tilting_digits, tilting_char, tilting_dim, nabla_mults,
    tensor_decompose_simples, decompose_tilting_char,
)
from .series import TruncSeries, geometric_power
from .fusion import (
    APolynomials, fusion_product, graded_fusion_power, a_polynomials,
    tableau_count, tableau_distribution,
)
from .decomposition import (
    SummandList, InventoryReport, SubtractionUnderflowError, RangeViolationError,
    square_decomp, g1_invariants, tilting_part_T,
    decompose_invariants, decompose_ring, decompose_grassmannian, decompose,
    summand_inventory, duality_violations, contains_kaneda,
    published_sheaf_count,
)
from .hilbert import (
    char_S_degree, invariant_dim, char_K, hs_K, hs_M, hs_covariant,
    hs_T_brace, hs_K_brace, hs_R, hs_of_summand_list,
    verify_identities, VerifyReport,
)
from .fpkernel import bruteforce_g1_dim, BudgetExceededError, DEFAULT_BUDGET
from .ncr import (
    HomMatrix, NcrReport, NegativeEntryError, SingularConstantTermError,
    hom_entry, hom_hilbert_matrix, invert_truncated_matrix,
    polynomiality_report, product_check,
)

__version__ = "0.1.0"
