from .ball import Ball, RadiusTooLarge, ball_enumerate
from .structure import (
    NestingError,
    composite_iso,
    composite_ray,
    factor_kind,
    factorize,
    psi1_on_hng,
    reduce_h1_to_g,
)
from .triples import (
    FiniteSet,
    HoughtonElement,
    NotInClass,
    Point,
    SigmaMap,
    Triple,
    beta,
    chi,
    collapse_finite,
    embed_gn,
    eval_triple,
    expand,
    flatten,
    general_expand,
    identity_element,
    identity_triple,
    invert_triple,
    is_gn_factor,
    is_houghton_factor,
    make_triple,
    minimal_triple,
    multiply,
    unflatten,
)
