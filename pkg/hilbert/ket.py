from typing import Optional, Sequence, Tuple, Union
from dataclasses import dataclass

import numpy as np

from core import Bicomplex, DimensionMismatch, Scalar, Component
from core.types import IdempotentArray


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.complex128)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Ket:
    """A ket of a free M(2)-module of dimension N, stored as the two C(i1) coordinate arrays.

    The i-th coefficient is z1[i] + z2[i]*i2. Idempotent coordinates (the V_1 and V_2 parts)
    are computed on demand.
    """

    z1: np.ndarray
    z2: np.ndarray

    def __post_init__(self) -> None:
        z1, z2 = _frozen(self.z1), _frozen(self.z2)
        if z1.ndim != 1 or z1.shape != z2.shape:
            raise DimensionMismatch(
                f"coordinate arrays must be 1-D and of equal length, got {z1.shape} and {z2.shape}"
            )
        if not (np.all(np.isfinite(z1)) and np.all(np.isfinite(z2))):
            raise ValueError("ket coefficients must be finite")
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Union[Bicomplex, Scalar]]) -> "Ket":
        coeffs = [Bicomplex.coerce(c) for c in coeffs]
        return cls(
            np.array([c.z1 for c in coeffs], dtype=np.complex128),
            np.array([c.z2 for c in coeffs], dtype=np.complex128),
        )

    @classmethod
    def from_idempotent(cls, h: IdempotentArray) -> "Ket":
        """Builds a ket from its (2, N) idempotent coordinates."""
        h = np.asarray(h, dtype=np.complex128)
        if h.ndim != 2 or h.shape[0] != 2:
            raise DimensionMismatch(f"expected shape (2, N), got {h.shape}")
        return cls((h[0] + h[1]) / 2, (h[0] - h[1]) * 1j / 2)

    @classmethod
    def zeros(cls, dim: int) -> "Ket":
        return cls(np.zeros(dim, dtype=np.complex128), np.zeros(dim, dtype=np.complex128))

    @classmethod
    def basis(cls, dim: int, index: int) -> "Ket":
        """The standard basis ket with 1 at position index."""
        z1 = np.zeros(dim, dtype=np.complex128)
        z1[index] = 1.0
        return cls(z1, np.zeros(dim, dtype=np.complex128))

    @property
    def dim(self) -> int:
        return self.z1.shape[0]

    @property
    def coeffs(self) -> Tuple[Bicomplex, ...]:
        return tuple(Bicomplex(a, b) for a, b in zip(self.z1, self.z2))

    @property
    def idempotent(self) -> IdempotentArray:
        """The (2, N) array whose row k-1 holds the V_k coordinates z_hk of every coefficient."""
        return np.stack([self.z1 - 1j * self.z2, self.z1 + 1j * self.z2])

    def component(self, k: Component) -> np.ndarray:
        return self.idempotent[k - 1]

    def scale(self, s: Union[Bicomplex, Scalar]) -> "Ket":
        """Multiplies every coefficient by the bicomplex scalar s."""
        s = Bicomplex.coerce(s)
        return Ket(s.z1 * self.z1 - s.z2 * self.z2, s.z1 * self.z2 + s.z2 * self.z1)

    def is_close(self, other: "Ket", rel_tol: float = 1e-10, abs_tol: float = 0.0) -> bool:
        """Compares two kets coefficientwise in the Euclidean R^4N-norm."""
        _check_dims(self, other)
        diff = np.sqrt(np.sum(np.abs(self.z1 - other.z1) ** 2 + np.abs(self.z2 - other.z2) ** 2))
        scale = max(_euclid(self), _euclid(other))
        return bool(diff <= max(rel_tol * scale, abs_tol))

    def __len__(self) -> int:
        return self.dim

    def __getitem__(self, index: int) -> Bicomplex:
        return Bicomplex(self.z1[index], self.z2[index])

    def __add__(self, other: "Ket") -> "Ket":
        if not isinstance(other, Ket):
            return NotImplemented
        _check_dims(self, other)
        return Ket(self.z1 + other.z1, self.z2 + other.z2)

    def __sub__(self, other: "Ket") -> "Ket":
        if not isinstance(other, Ket):
            return NotImplemented
        _check_dims(self, other)
        return Ket(self.z1 - other.z1, self.z2 - other.z2)

    def __neg__(self) -> "Ket":
        return Ket(-self.z1, -self.z2)

    def __mul__(self, s: Union[Bicomplex, Scalar]) -> "Ket":
        try:
            return self.scale(s)
        except TypeError:
            return NotImplemented

    # the ring is commutative, so left and right scalar multiplication agree
    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Ket({[str(c) for c in self.coeffs]})"


def _euclid(ket: Ket) -> float:
    return float(np.sqrt(np.sum(np.abs(ket.z1) ** 2 + np.abs(ket.z2) ** 2)))


def _check_dims(*kets: Ket) -> None:
    dims = {ket.dim for ket in kets}
    if len(dims) > 1:
        raise DimensionMismatch(f"kets of different dimensions: {sorted(dims)}")


@dataclass(frozen=True)
class ScalarProductSpec:
    """A bicomplex scalar product on an N-dimensional free module.

    It is determined by two diagonal, positively weighted standard products
    <x, y>_hk = sum_l w_k[l] * conj(x_l) * y_l, one on each of V_1 and V_2.
    """

    dim: int
    w1: Optional[Tuple[float, ...]] = None
    w2: Optional[Tuple[float, ...]] = None

    def __post_init__(self) -> None:
        if not isinstance(self.dim, (int, np.integer)) or self.dim < 1:
            raise ValueError(f"dim must be a positive integer, got {self.dim!r}")
        object.__setattr__(self, "dim", int(self.dim))
        for name in ("w1", "w2"):
            # omitted weights give the standard product
            weights = getattr(self, name)
            weights = (1.0,) * self.dim if weights is None else tuple(float(w) for w in weights)
            if len(weights) != self.dim:
                raise DimensionMismatch(f"{name} has {len(weights)} weights, expected {self.dim}")
            if not all(np.isfinite(w) and w > 0 for w in weights):
                raise ValueError(f"all weights of {name} must be finite and positive")
            object.__setattr__(self, name, weights)

    @classmethod
    def standard(cls, dim: int) -> "ScalarProductSpec":
        return cls(dim)

    @property
    def weights(self) -> np.ndarray:
        """The (2, N) weight array, row k-1 weighting the product on V_k."""
        return np.array([self.w1, self.w2], dtype=np.float64)

    def check(self, *kets: Ket) -> None:
        for ket in kets:
            if ket.dim != self.dim:
                raise DimensionMismatch(f"ket of dimension {ket.dim} in a space of dimension {self.dim}")
