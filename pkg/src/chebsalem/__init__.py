"""Integer polynomials in the monic Chebyshev basis on [-2, 2].

Exact basis conversions, palindromic lifts ``g(z) = z^d f(z + 1/z)``,
certified real-root isolation and span enclosures, six parametric families
with closed z-side forms and Salem limit behaviour, cyclotomic stripping
and Salem classification, and a deterministic certified search over
coordinate vectors.
"""

from .chebbasis import (
    IntPoly,
    RatPoly,
    chebyshev_T,
    from_cheb,
    matrix_b,
    matrix_m,
    to_cheb,
)
from .errors import (
    ChebsalemError,
    FixtureMismatch,
    IdentityFailed,
    InvalidParams,
    NotApplicable,
    NotPalindromic,
    OddDegree,
    SearchSpaceTooLarge,
    TooFewRealRoots,
    UncertifiedRoots,
)
from .families import (
    AN,
    BN,
    KNS,
    MINUS1,
    THREEPARAM,
    TWOPARAM,
    FamilySpec,
    closed_form_z,
    coords_of,
    limit_extreme_root,
    limit_span,
    poly_of,
    q_poly,
    salem_identity_check,
    u_poly,
)
from .palindrome import PalindromicPoly, lift, lift_cheb, unlift, unlift_coords
from .rootcert import (
    DEFAULT_REFINE,
    RegionCounts,
    SturmChain,
    classify_unit_circle,
    count_roots_in_disc,
    extreme_root,
    is_hyperbolic,
    is_kronecker,
    isolate_real_roots,
    real_root_regions,
    span,
    span_decide_less,
)
from .salem import (
    SalemAnalysis,
    classify_salem,
    cyclotomic_poly,
    pisot_check,
    salem_convergence_study,
    strip_cyclotomic,
)
from .search import (
    SearchConfig,
    SearchHit,
    canonical_form,
    enumerate_hits,
    verify_degree18,
    verify_table8,
)

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "RatPoly",
    "chebyshev_T",
    "from_cheb",
    "to_cheb",
    "matrix_m",
    "matrix_b",
    "PalindromicPoly",
    "lift",
    "lift_cheb",
    "unlift",
    "unlift_coords",
    "SturmChain",
    "DEFAULT_REFINE",
    "isolate_real_roots",
    "is_hyperbolic",
    "is_kronecker",
    "extreme_root",
    "span",
    "span_decide_less",
    "classify_unit_circle",
    "RegionCounts",
    "real_root_regions",
    "count_roots_in_disc",
    "FamilySpec",
    "KNS",
    "AN",
    "BN",
    "MINUS1",
    "TWOPARAM",
    "THREEPARAM",
    "coords_of",
    "poly_of",
    "closed_form_z",
    "u_poly",
    "q_poly",
    "salem_identity_check",
    "limit_extreme_root",
    "limit_span",
    "SalemAnalysis",
    "strip_cyclotomic",
    "classify_salem",
    "cyclotomic_poly",
    "pisot_check",
    "salem_convergence_study",
    "SearchConfig",
    "SearchHit",
    "canonical_form",
    "enumerate_hits",
    "verify_table8",
    "verify_degree18",
    "ChebsalemError",
    "NotPalindromic",
    "OddDegree",
    "TooFewRealRoots",
    "InvalidParams",
    "NotApplicable",
    "IdentityFailed",
    "SearchSpaceTooLarge",
    "FixtureMismatch",
    "UncertifiedRoots",
    "__version__",
]
