"""Finite quasi-schemoids: construction, validation, strong homotopy and haut."""

from .aschemoid import (
    ASchemoid,
    ASchemoidMorphism,
    all_involutions,
    asmd_elementary_homotopy,
    enumerate_amorphisms,
    tilde_cylinder,
    tilde_interval,
    transpose_involution,
    validate_amorphism,
    validate_aschemoid,
)
from .catalog import (
    commuting_square_schemoid,
    cyclic_group,
    dihedral_group,
    direct_product_group,
    idempotent_pairs_schemoid,
    klein_four_group,
    symmetric_group,
)
from .constructors import (
    cylinder,
    discrete_k,
    find_isomorphism,
    forget_u,
    interval,
    iota,
    jmath,
    product_schemoid,
    scheme_of_group,
    stilde,
    trivial_schemoid,
)
from .errors import *  # noqa: F401,F403
from .fincat import (
    FinCat,
    FinGroup,
    FinGroupoid,
    Functor,
    cat_strong_homotopic,
    enumerate_functors,
    natural_transformation_exists,
    validate_category,
    validate_functor,
    validate_group,
    validate_groupoid,
)
from .formats import (
    emit_group,
    emit_scheme,
    emit_schemoid,
    load_schemoid,
    parse_aschemoid,
    parse_group,
    parse_scheme,
    parse_schemoid,
)
from .haut import (
    FiniteGroup,
    FiniteMonoid,
    HautResult,
    aut_of_group,
    endo_monoid,
    find_group_isomorphism,
    group_automorphisms,
    group_isomorphic,
    haut_group,
    identify_group,
)
from .homotopy import (
    Homotopy,
    HomotopyChain,
    HomotopyGraph,
    collapse_obstruction,
    contraction,
    elementary_homotopy,
    enumerate_morphisms,
    homotopic,
    homotopy_classes,
    horizontal_compose,
    is_contractible,
    is_homotopy,
    thin_homotopy_criterion,
    vertical_compose,
    whisker_left,
    whisker_right,
)
from .schemoid import (
    AssocScheme,
    Partition,
    QSchemoid,
    SchemoidMorphism,
    constant_morphism,
    identity_morphism,
    make_partition,
    schemoid_morphism,
    structure_constants,
    thin_morphism,
    trivial_scheme,
    validate_morphism,
    validate_scheme,
    validate_schemoid,
)
from .search import DEFAULT_LIMITS, SearchLimits

__version__ = "0.1.0"
