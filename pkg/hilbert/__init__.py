from .ket import Ket, ScalarProductSpec
from .scalar_product import (
    ket_split,
    ket_recombine,
    component_products,
    component_norms_sq,
    scalar_product,
    self_product,
    induced_norm,
    component_norm,
    nondegeneracy_constant,
    is_zero_ket,
    ZERO_KET_TOL,
)
