"""Exact mod-2 cohomology and sequential topological-complexity bounds for
planar polygon spaces, driven by genetic codes of length vectors."""

from .bounds import (
    PsiSolution,
    PsiTemplate,
    TCBoundReport,
    lemma_size3,
    lemma_size4,
    lemma_two3genes,
    lucas_binom_mod2,
    solve_psi,
    tc_bounds,
)
from .cohomology import (
    CohoClass,
    RingPresentation,
    build_ring,
    cup_length,
    ls_category,
    multiply,
    phi,
    phi_S,
    verify_poincare_pairing,
)
from .genetics import (
    CodeSignature,
    EnumeratedCode,
    GeneticCode,
    SubgeeFamily,
    classify,
    dominance_leq,
    enumerate_genetic_codes,
    realizable,
    subgees,
)
from .lengths import (
    LengthVector,
    NonGenericError,
    ShortSetFamily,
    genetic_code,
    is_generic,
    is_short,
    short_sets_with_n,
)
from .tensor import (
    Certificate,
    Factor,
    TensorClass,
    bar,
    diagonal_pullback,
    embed,
    evaluate_certificate,
    is_zero,
    position_sum,
    tensor_multiply,
    zcl_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "LengthVector", "NonGenericError", "ShortSetFamily",
    "is_generic", "is_short", "short_sets_with_n", "genetic_code",
    "GeneticCode", "SubgeeFamily", "CodeSignature", "EnumeratedCode",
    "dominance_leq", "subgees", "realizable", "enumerate_genetic_codes", "classify",
    "RingPresentation", "CohoClass", "build_ring", "multiply", "phi", "phi_S",
    "cup_length", "ls_category", "verify_poincare_pairing",
    "TensorClass", "Certificate", "Factor",
    "embed", "bar", "position_sum", "tensor_multiply", "is_zero",
    "diagonal_pullback", "evaluate_certificate", "zcl_lower_bound",
    "lucas_binom_mod2", "lemma_size3", "lemma_size4", "lemma_two3genes",
    "solve_psi", "PsiTemplate", "PsiSolution", "tc_bounds", "TCBoundReport",
    "__version__",
]
