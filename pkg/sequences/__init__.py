from .l2 import (
    BicomplexSequence,
    l2_norm,
    l2_norm_from_split,
    sequence_split,
    sequence_recombine,
    l2_scalar_product,
    partial_sums,
    tail_norms,
    ZERO_TAIL,
)
from .riesz_fischer import RieszFischerMap, rf_forward, rf_inverse, rf_component
