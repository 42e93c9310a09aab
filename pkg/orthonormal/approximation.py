from typing import List, Tuple
import math

import numpy as np

from core import DimensionMismatch, InvalidPrefix
from hilbert import Ket, induced_norm, component_norms_sq
from .system import OrthonormalSystem, CoefficientList


def fourier_coefficients(system: OrthonormalSystem, psi: Ket) -> CoefficientList:
    """The coefficients <m_l, psi> of psi against every member of the system."""
    return CoefficientList.from_idempotent(_coefficients(system, psi))


def _coefficients(system: OrthonormalSystem, psi: Ket) -> np.ndarray:
    # (m, 2) idempotent coordinates of <m_l, psi>
    system.space.check(psi)
    weights = system.space.weights
    return np.sum(weights * np.conj(system.idempotent) * psi.idempotent, axis=-1)


def expand(system: OrthonormalSystem, coefficients: CoefficientList) -> Ket:
    """The finite expansion sum_l c_l m_l."""
    if len(coefficients) != system.size:
        raise DimensionMismatch(
            f"{len(coefficients)} coefficients for a system of {system.size} kets"
        )
    return _expand(system, coefficients.idempotent)


def _expand(system: OrthonormalSystem, c: np.ndarray) -> Ket:
    if system.size == 0:
        return Ket.zeros(system.space.dim)
    # each coordinate of c_l scales the matching component of m_l
    h = np.einsum("lk,lkn->kn", c, system.idempotent)
    return Ket.from_idempotent(h)


def best_approximation(system: OrthonormalSystem, psi: Ket, n: int) -> Tuple[Ket, float]:
    """Projects psi onto the span of the first n members.

    Returns the projection sum_{l<n} <m_l, psi> m_l together with the M(2)-norm of the residual,
    which no other choice of coefficients can beat.
    """
    if not 0 <= n <= system.size:
        raise InvalidPrefix(f"prefix {n} outside [0, {system.size}]")
    c = _coefficients(system, psi)
    projection = _expand(system.prefix(n), c[:n])
    return projection, induced_norm(system.space, psi - projection)


def residual_curve(system: OrthonormalSystem, psi: Ket) -> List[float]:
    """The best-approximation residual for every prefix n = 0, ..., m.

    The residual of the n-th prefix satisfies ||r_n||^2 = ||psi||^2 - sum_{l<n} |<m_l, psi>|^2
    in exact arithmetic; here every entry is evaluated directly so the curve doubles as a check.
    """
    c = _coefficients(system, psi)
    weights = system.space.weights
    residual = psi.idempotent
    curve = [math.sqrt(float(np.sum(component_norms_sq(weights, residual))) / 2)]
    for l in range(system.size):
        residual = residual - c[l][:, None] * system.idempotent[l]
        curve.append(math.sqrt(float(np.sum(component_norms_sq(weights, residual))) / 2))
    return curve
