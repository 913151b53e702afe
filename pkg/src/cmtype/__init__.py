"""cmtype: Cohen-Macaulay representation type of complete hypersurface
singularities k[[x_0..x_d]]/(f), with the witnesses that drive the
classification: matrix factorizations and their double-branched-cover
lifts, the catalog of indecomposables over k[[x,y]]/(xy^2), and
conductor-square constructions of indecomposable modules of arbitrary
constant rank."""

from .classify import (
    BOUNDED_INFINITE,
    CMTypeReport,
    FINITE,
    UNBOUNDED,
    UNDETERMINED,
    classify,
    default_precision,
)
from .dinfty import CatalogEntry, catalog_export_text, enumerate_dinfty
from .fields import FieldSpec, QQ, prime_field
from .jets import ideal_member_below
from .local import (
    MilnorNumber,
    SplitResult,
    TangentConePattern,
    is_reduced_local,
    milnor_number,
    split_quadratic,
    tangent_cone_pattern,
)
from .mf import (
    MatrixFactorization,
    PresentationMatrix,
    knorrer_lift,
    mf_presentation,
    minimize_presentation,
    presents_free_module,
    reduce_mod_z,
    verify_mf,
)
from .pairs import (
    ArtinianPair,
    ConductorSquare,
    FiniteExtensionSpec,
    conductor_square,
    extension_cusp_cube,
    extension_double_line,
    extension_identity,
    pair_invariants,
    pair_k_into_small_fat_point,
    parse_extension,
)
from .pairmodules import (
    LiftedModulePresentation,
    PairModule,
    build_indecomposable_pair_module,
    direct_sum,
    is_indecomposable_pair_module,
    lift_module,
    trivial_pair_module,
)
from .parser import infer_variables, parse_matrix, parse_series
from .series import TruncatedSeries, invert_unit, jet_order, mul_series, substitute
from .weierstrass import WeierstrassData, weierstrass_divide, weierstrass_prepare

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
