from .system import OrthonormalSystem, CoefficientList, orthonormality_defect
from .gram_schmidt import (
    gram_schmidt,
    gram_schmidt_by_components,
    classical_gram_schmidt_component,
    BREAKDOWN_TOL,
)
from .approximation import fourier_coefficients, expand, best_approximation, residual_curve
