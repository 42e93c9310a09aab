from typing import Sequence, Tuple, Union
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from core import Bicomplex, IdempotentPair, from_idempotent, DimensionMismatch, Scalar
from hilbert import Ket, ScalarProductSpec, component_products


@dataclass(frozen=True, eq=False)
class OrthonormalSystem:
    """An ordered family of kets m_0, ..., m_{m-1} with <m_i, m_j> = delta_ij under `space`.

    The constructor only checks dimensions; `gram_matrix` and `is_orthonormal` check the rest.
    """

    space: ScalarProductSpec
    kets: Tuple[Ket, ...]

    def __post_init__(self) -> None:
        kets = tuple(self.kets)
        self.space.check(*kets)
        if len(kets) > self.space.dim:
            raise DimensionMismatch(
                f"{len(kets)} kets cannot be orthonormal in a space of dimension {self.space.dim}"
            )
        object.__setattr__(self, "kets", kets)

    @property
    def size(self) -> int:
        return len(self.kets)

    @property
    def is_full_basis(self) -> bool:
        return self.size == self.space.dim

    @cached_property
    def idempotent(self) -> np.ndarray:
        """The (m, 2, N) stack of the members' idempotent coordinates."""
        if not self.kets:
            return np.zeros((0, 2, self.space.dim), dtype=np.complex128)
        return np.stack([ket.idempotent for ket in self.kets])

    def prefix(self, n: int) -> "OrthonormalSystem":
        return OrthonormalSystem(self.space, self.kets[:n])

    def gram_matrix(self) -> np.ndarray:
        """The (m, m, 2) array of idempotent coordinates of <m_i, m_j>."""
        m = self.idempotent
        return component_products(
            self.space.weights[None, None], m[:, None], m[None, :]
        )

    def is_orthonormal(self, tol: float = 1e-10) -> bool:
        # in idempotent coordinates the bicomplex 1 is (1, 1)
        return bool(np.max(orthonormality_defect(self), initial=0.0) <= tol)

    def __len__(self) -> int:
        return self.size


def orthonormality_defect(system: OrthonormalSystem) -> np.ndarray:
    """|<m_i, m_j> - delta_ij| in the Euclidean R^4-norm, as an (m, m) array."""
    gram = system.gram_matrix()
    gram = gram - np.eye(system.size)[:, :, None]
    return np.sqrt(np.sum(np.abs(gram) ** 2, axis=-1) / 2)


@dataclass(frozen=True)
class CoefficientList:
    """Fourier coefficients <m_l, psi>, or free coefficients alpha_l, of an orthonormal system."""

    values: Tuple[Bicomplex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "values", tuple(Bicomplex.coerce(v) for v in self.values)
        )

    @classmethod
    def from_idempotent(cls, c: np.ndarray) -> "CoefficientList":
        """Builds the list from an (m, 2) array of idempotent coordinates."""
        return cls(
            tuple(from_idempotent(IdempotentPair(a, b)) for a, b in np.asarray(c))
        )

    @classmethod
    def of(cls, values: Sequence[Union[Bicomplex, Scalar]]) -> "CoefficientList":
        return cls(tuple(values))

    @property
    def idempotent(self) -> np.ndarray:
        """The (m, 2) array of idempotent coordinates."""
        if not self.values:
            return np.zeros((0, 2), dtype=np.complex128)
        return np.array(
            [[v.z1 - 1j * v.z2, v.z1 + 1j * v.z2] for v in self.values],
            dtype=np.complex128,
        )

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> Bicomplex:
        return self.values[index]
