"""Exact Temperley-Lieb-Jones computations.

Scalars live in Q(q) or in the cyclotomic field Q(zeta_2n); morphisms are
sparse combinations of noncrossing matchings.  On top of that sit the
Jones-Wenzl projectors, trivalent nets, fusion and recoupling at roots of
unity, and skein modules of holed disks with their HI-move matrices.
"""

from .diagram import (
    Morphism,
    Pairing,
    bar,
    basis,
    cap,
    catalan,
    compose,
    cup,
    dual,
    generator_u,
    identity,
    parse_morphism,
    partial_trace,
    tensor,
    trace,
)
from .errors import (
    DegenerateGram,
    DenominatorVanishes,
    DivisionByZero,
    EulerMismatch,
    IndexOutOfRange,
    InvalidDegree,
    InvalidEdge,
    LabelOutOfRange,
    NonPlanarEmbedding,
    NotAdmissible,
    ParseError,
    ShapeMismatch,
    TLError,
)
from .fusion import (
    RootContext,
    is_negligible,
    negligible_vertex,
    orthogonality_check,
    pentagon_check,
    q_admissible,
    sixj,
    truncated_fusion,
    truncated_sum,
)
from .jones_wenzl import check_jw, jw
from .nets import (
    TrivalentNet,
    admissible,
    bubble,
    compile_net,
    evaluate_net,
    fusion_coefficients,
    load_net,
    theta_formula,
    theta_net,
    vertex_morphism,
)
from .scalar import (
    GENERIC,
    CycloScalar,
    RatScalar,
    cyclo_ring,
    parse_cyclo,
    parse_rat,
    q,
    qfact,
    qint,
    specialize,
)
from .skein import (
    HIMove,
    Spine,
    apply_hi,
    enumerate_colorings,
    hi_matrix,
    load_spine,
    read_spine,
    transport,
)

__version__ = "0.1.0"
