from .types import ConjugationKind, ModulusKind, ComplexI1, Scalar, Component
from .errors import (
    BicomplexError,
    NullConeError,
    NullConeBreakdown,
    DimensionMismatch,
    InvalidPrefix,
    ParseError,
    UnknownSuite,
)
from .bicomplex import (
    Bicomplex,
    IdempotentPair,
    Hyperbolic,
    add,
    mul,
    mul_idempotent,
    conj,
    modulus_sq,
    euclid_norm,
    euclid_norm_idempotent,
    to_idempotent,
    from_idempotent,
    project,
    inverse,
    is_null_cone,
    nth_root,
    all_nth_roots,
    in_D_plus,
    in_C_i1,
    in_C_i2,
    in_D,
    TAU_NULL,
    TAU_ABS,
    ZERO,
    ONE,
    I1,
    I2,
    J,
    E1,
    E2,
)
