"""Scale-valued sets: lattice-valued membership, encodings, topology,
subgroups, and a grade/evidence decision engine."""

from .scale import (
    BoolScale,
    ChainScale,
    FiniteLatticeSpec,
    FiniteScale,
    FunctionGridScale,
    IFSDeltaScale,
    IntervalScale,
    LawReport,
    ProductScale,
    RoughChainScale,
    Scale,
    ScaleHom,
    UnitRationalScale,
    build_finite_scale,
    function_scale,
    identity_hom,
    interval_scale,
    m3_scale,
    product_scale,
    scale_from_json,
    verify_scale_hom,
    verify_scale_laws,
)
from .sets import (
    STAR,
    ParamSet,
    SVSet,
    Universe,
    pullback,
    pushforward,
    sv_complement,
    sv_intersection,
    sv_slice,
    sv_subset,
    sv_union,
    transport,
    unparameterized,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
