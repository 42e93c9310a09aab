from typing import Sequence
import logging
import warnings

import numpy as np

from core import IdempotentPair, NullConeBreakdown, from_idempotent, inverse, nth_root
from hilbert import Ket, ScalarProductSpec, component_products, component_norms_sq
from .system import OrthonormalSystem

log = logging.getLogger(__name__)

# a residual component whose self-product drops below this fraction of the input's squared scale is a breakdown
BREAKDOWN_TOL = 1e-10
# "twice is enough": a second pass that still shrinks the residual below this ratio signals lost orthogonality
REORTH_RATIO = 0.5


def gram_schmidt(
    space: ScalarProductSpec,
    kets: Sequence[Ket],
    tol: float = BREAKDOWN_TOL,
) -> OrthonormalSystem:
    """Orthonormalizes kets with modified Gram-Schmidt plus one re-orthogonalization pass.

    Both idempotent components are processed side by side: every projection coefficient is a
    bicomplex number whose two coordinates act on V_1 and V_2 independently. For every prefix n
    the V_k-span of the first n outputs equals the V_k-span of the first n inputs.

    Raises NullConeBreakdown(index) when a residual's self-product gets within `tol` (relative
    to the input's squared scale) of the null cone, i.e. when the input is dependent in at
    least one component.
    """
    space.check(*kets)
    weights = space.weights
    basis: list[np.ndarray] = []
    for index, ket in enumerate(kets):
        v = ket.idempotent
        scale_sq = float(np.max(component_norms_sq(weights, v)))

        v = _project_out(weights, basis, v)
        after_first = component_norms_sq(weights, v)
        v = _project_out(weights, basis, v)
        norms_sq = component_norms_sq(weights, v)

        if np.any(norms_sq <= tol * scale_sq):
            log.debug(
                "breakdown at %d: residual self-product %s, input scale^2 %g",
                index,
                norms_sq,
                scale_sq,
            )
            raise NullConeBreakdown(index)
        if np.any(norms_sq < REORTH_RATIO**2 * after_first):
            warnings.warn(f"loss of orthogonality at ket {index} of Gram-Schmidt")

        # divide by the principal square root of <v, v>, so that the new self-product is exactly 1
        root = nth_root(from_idempotent(IdempotentPair(norms_sq[0], norms_sq[1])), 2)
        basis.append(Ket.from_idempotent(v).scale(inverse(root, tol=0.0)).idempotent)

    return OrthonormalSystem(space, tuple(Ket.from_idempotent(q) for q in basis))


def _project_out(
    weights: np.ndarray, basis: Sequence[np.ndarray], v: np.ndarray
) -> np.ndarray:
    """One modified Gram-Schmidt sweep, subtracting <q, v> q for every q in turn."""
    for q in basis:
        v = v - component_products(weights, q, v)[:, None] * q
    return v


def classical_gram_schmidt_component(
    weights: np.ndarray, vectors: np.ndarray, tol: float = BREAKDOWN_TOL
) -> np.ndarray:
    """Classical Gram-Schmidt on complex vectors (rows) under a diagonal weighted product.

    Each vector is projected twice (CGS2), which keeps the result orthonormal to working precision.
    This is the ordinary procedure on a single V_k; running it on both components and recombining
    with e1, e2 reproduces `gram_schmidt`.
    """
    weights = np.asarray(weights, dtype=np.float64)
    out = []
    for v in np.asarray(vectors, dtype=np.complex128):
        scale_sq = np.sum(weights * np.abs(v) ** 2)
        for _ in range(2):
            coeffs = [np.sum(weights * np.conj(q) * v) for q in out]
            for c, q in zip(coeffs, out):
                v = v - c * q
        norm_sq = np.sum(weights * np.abs(v) ** 2)
        if norm_sq <= tol * scale_sq:
            raise NullConeBreakdown(len(out))
        out.append(v / np.sqrt(norm_sq))
    return np.array(out, dtype=np.complex128).reshape(len(out), weights.shape[-1])


def gram_schmidt_by_components(
    space: ScalarProductSpec, kets: Sequence[Ket]
) -> OrthonormalSystem:
    """Runs `classical_gram_schmidt_component` on V_1 and V_2 separately and recombines."""
    space.check(*kets)
    stack = np.stack([ket.idempotent for ket in kets]) if kets else np.zeros((0, 2, space.dim))
    q1 = classical_gram_schmidt_component(space.weights[0], stack[:, 0])
    q2 = classical_gram_schmidt_component(space.weights[1], stack[:, 1])
    return OrthonormalSystem(
        space,
        tuple(Ket.from_idempotent(np.stack([a, b])) for a, b in zip(q1, q2)),
    )
