from typing import Union, Tuple, Literal
from enum import Enum

import numpy as np

# an element of C(i1): Python's complex type, with 1j playing the role of i1
ComplexI1 = complex
# anything that can be promoted to a bicomplex number
Scalar = Union[int, float, complex]
# index of an idempotent component
Component = Literal[1, 2]
# (branch of the first component, branch of the second component)
RootBranch = Tuple[int, int]
# idempotent coordinates of a ket, shape (2, N), row k-1 holding the V_k coordinates
IdempotentArray = np.ndarray


class ConjugationKind(Enum):
    """The three bicomplex conjugations."""

    DAG1 = "dag1"
    """Complex conjugation of both C(i1) coordinates."""
    DAG2 = "dag2"
    """Sign flip of the i2 coordinate."""
    DAG3 = "dag3"
    """Composition of the other two."""


class ModulusKind(Enum):
    """The three squared bicomplex moduli, one per conjugation."""

    I1 = "i1"
    """w * w^dag2, lies in C(i1)."""
    I2 = "i2"
    """w * w^dag1, lies in C(i2)."""
    J = "j"
    """w * w^dag3, lies in D (indeed D+)."""
