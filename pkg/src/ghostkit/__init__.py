"""ghostkit: exact calculus for the rank-1 bosonic ghost module category.

Canonical module labels, the functor dihedral action, the complete fusion
product table with its Grothendieck ring, Hom/Ext dimensions with covers,
hulls and presentations, truncated graded characters with an enumeration
oracle, and floating-point verification of the hypergeometric rigidity
constants.
"""

from .weights import Weight, conj_weight, coset, coset_add, flow_weight, weight
from .modules import (
    BStr, ExactSequence, FormalSum, LoewyWord, Proj, TStr, Typ, Vac,
    bstr, composition_factors, head, is_injective, is_projective, length,
    loewy, proj, sequence_catalog, socle, tstr, typ, vac,
    w_zero_minus, w_zero_plus,
)
from .functors import conjugate, dual_restricted, dual_star, dual_tensor, flow
from .fusion import (
    FusionResult, GrothClass, GuardExtensionError, ProjSum, expand_projsum,
    fuse, fuse_detailed, groth_class, groth_product, unit_class,
)
from .homalg import (
    ext_dim, euler_check, hom_dim, injective_hull, presentation_cokernel,
    presentation_kernel, projective_cover,
)
from .characters import (
    CharSeries, TruncationError, char_dual, char_flow, character,
    pbw_character_oracle,
)
from .rigidity import beta_fn, gamma_fn, hyp2f1, rigidity_constant
from .grammar import ParseError, parse_module_expr, parse_single_module

__version__ = "0.1.0"

__all__ = [
    "Weight", "conj_weight", "coset", "coset_add", "flow_weight", "weight",
    "BStr", "ExactSequence", "FormalSum", "LoewyWord", "Proj", "TStr", "Typ",
    "Vac", "bstr", "composition_factors", "head", "is_injective",
    "is_projective", "length", "loewy", "proj", "sequence_catalog", "socle",
    "tstr", "typ", "vac", "w_zero_minus", "w_zero_plus",
    "conjugate", "dual_restricted", "dual_star", "dual_tensor", "flow",
    "FusionResult", "GrothClass", "GuardExtensionError", "ProjSum",
    "expand_projsum", "fuse", "fuse_detailed", "groth_class", "groth_product",
    "unit_class",
    "ext_dim", "euler_check", "hom_dim", "injective_hull",
    "presentation_cokernel", "presentation_kernel", "projective_cover",
    "CharSeries", "TruncationError", "char_dual", "char_flow", "character",
    "pbw_character_oracle",
    "beta_fn", "gamma_fn", "hyp2f1", "rigidity_constant",
    "ParseError", "parse_module_expr", "parse_single_module",
]
