from typing import Tuple
import math

import numpy as np

from core import Bicomplex, IdempotentPair, from_idempotent, E1, E2, Component
from .ket import Ket, ScalarProductSpec

# zero-ket threshold, scaled by sqrt(N) * max weight
ZERO_KET_TOL = 1e-12


def ket_split(psi: Ket, k: Component) -> Ket:
    """Returns psi_k = e_k * psi, the part of psi living in V_k."""
    if k not in (1, 2):
        raise ValueError(f"idempotent components are numbered 1 and 2, got {k}")
    return psi.scale(E1 if k == 1 else E2)


def ket_recombine(psi1: Ket, psi2: Ket) -> Ket:
    return psi1 + psi2


def component_products(
    weights: np.ndarray, x: np.ndarray, y: np.ndarray
) -> np.ndarray:
    """Evaluates both standard products at once on (2, N) idempotent coordinate arrays.

    Row k-1 of the result is <x_k, y_k>_hk = sum_l w_k[l] * conj(x_k[l]) * y_k[l].
    """
    return np.sum(weights * np.conj(x) * y, axis=-1)


def component_norms_sq(weights: np.ndarray, x: np.ndarray) -> np.ndarray:
    """The real self-products <x_k, x_k>_hk, k = 1, 2."""
    return np.sum(weights * (x.real**2 + x.imag**2), axis=-1)


def scalar_product(spec: ScalarProductSpec, psi: Ket, phi: Ket) -> Bicomplex:
    """The bicomplex scalar product <psi, phi> = e1 <psi_1, phi_1>_h1 + e2 <psi_2, phi_2>_h2.

    Physicists' convention: antilinear (under dag3) in the first slot, linear in the second.
    """
    spec.check(psi, phi)
    c1, c2 = component_products(spec.weights, psi.idempotent, phi.idempotent)
    return from_idempotent(IdempotentPair(complex(c1), complex(c2)))


def self_product(spec: ScalarProductSpec, psi: Ket) -> Tuple[float, float]:
    """The idempotent coordinates of <psi, psi>, which lies in D+ by construction."""
    spec.check(psi)
    n1, n2 = component_norms_sq(spec.weights, psi.idempotent)
    return float(n1), float(n2)


def induced_norm(spec: ScalarProductSpec, psi: Ket) -> float:
    """The M(2)-norm (1/sqrt 2) * sqrt(<psi_1, psi_1>_h1 + <psi_2, psi_2>_h2)."""
    n1, n2 = self_product(spec, psi)
    return math.sqrt((n1 + n2) / 2)


def component_norm(spec: ScalarProductSpec, psi: Ket, k: Component) -> float:
    """The norm |psi_k|_k induced by the standard product on V_k."""
    return math.sqrt(self_product(spec, psi)[k - 1])


def nondegeneracy_constant(spec: ScalarProductSpec) -> float:
    """A constant c with |psi_l| <= c * ||psi|| for every coefficient of every ket.

    ||psi||^2 >= min(w) * sum_l |psi_l|^2, so c = 1 / sqrt(min(w)) works.
    """
    return 1.0 / math.sqrt(float(np.min(spec.weights)))


def is_zero_ket(spec: ScalarProductSpec, psi: Ket, tol: float = ZERO_KET_TOL) -> bool:
    threshold = tol * math.sqrt(spec.dim) * float(np.max(spec.weights))
    return induced_norm(spec, psi) <= threshold
