"""metakit: finite relation algebra, relational folds, and derived
divide-and-conquer algorithms, with an executable law registry."""

from .carrier import (
    BOOL,
    Carrier,
    CarrierMismatch,
    SizingError,
    UNIT,
    UNIT_ELEM,
    powerset_carrier,
    product_carrier,
    sum_carrier,
)
from .rel import (
    Fun,
    NotAFunction,
    Predicate,
    Rel,
    RelProfile,
    bang,
    bottom,
    classify,
    compose,
    const_fun,
    converse,
    coreflexive,
    dom,
    eta,
    identity,
    includes,
    inj1,
    inj2,
    inj_leq,
    join,
    junction,
    kernel,
    left_div,
    meet,
    membership,
    pairing,
    power_transpose,
    predicate_of,
    proj1,
    proj2,
    ran,
    rel_prod,
    rel_sum,
    right_div,
    shrink,
    sym_div,
    thin,
    top,
)
from .functors import (
    FConst,
    FId,
    FProd,
    FSum,
    FunctorExpr,
    apply_carrier,
    apply_fun,
    apply_pred,
    apply_rel,
    leaf_tree_base,
    list_base,
    node_tree_base,
    nonempty_list_base,
)
from .mu import MuCarrier, MuTerm
from .folds import FusionVerdict, HyloResult, ana_conv, cata, check_fusion, hylo
