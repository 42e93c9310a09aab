from typing import List, Sequence, Tuple, Union
from dataclasses import dataclass
import math

import numpy as np

from core import Bicomplex, Scalar, Component, DimensionMismatch
from hilbert import Ket, ScalarProductSpec, scalar_product

# the only tail model: every entry past the stored ones is zero
ZERO_TAIL = "zero"


@dataclass(frozen=True, eq=False)
class BicomplexSequence:
    """A square-summable bicomplex sequence, truncated to its first N entries with a zero tail."""

    z1: np.ndarray
    z2: np.ndarray

    def __post_init__(self) -> None:
        z1 = np.array(self.z1, dtype=np.complex128).reshape(-1)
        z2 = np.array(self.z2, dtype=np.complex128).reshape(-1)
        if z1.shape != z2.shape:
            raise DimensionMismatch(f"coordinate arrays of lengths {z1.size} and {z2.size}")
        if not (np.all(np.isfinite(z1)) and np.all(np.isfinite(z2))):
            raise ValueError("sequence entries must be finite")
        z1.setflags(write=False)
        z2.setflags(write=False)
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)

    @classmethod
    def from_values(cls, values: Sequence[Union[Bicomplex, Scalar]]) -> "BicomplexSequence":
        values = [Bicomplex.coerce(v) for v in values]
        return cls([v.z1 for v in values], [v.z2 for v in values])

    @classmethod
    def from_idempotent(cls, h: np.ndarray) -> "BicomplexSequence":
        h = np.asarray(h, dtype=np.complex128)
        return cls((h[0] + h[1]) / 2, (h[0] - h[1]) * 1j / 2)

    @classmethod
    def zeros(cls, length: int) -> "BicomplexSequence":
        return cls(np.zeros(length), np.zeros(length))

    @classmethod
    def unit(cls, length: int, index: int) -> "BicomplexSequence":
        """The coordinate sequence delta_index."""
        z1 = np.zeros(length, dtype=np.complex128)
        z1[index] = 1.0
        return cls(z1, np.zeros(length))

    @property
    def tail(self) -> str:
        return ZERO_TAIL

    @property
    def values(self) -> Tuple[Bicomplex, ...]:
        return tuple(Bicomplex(a, b) for a, b in zip(self.z1, self.z2))

    @property
    def idempotent(self) -> np.ndarray:
        return np.stack([self.z1 - 1j * self.z2, self.z1 + 1j * self.z2])

    def as_ket(self) -> Ket:
        return Ket(self.z1, self.z2)

    def scale(self, s: Union[Bicomplex, Scalar]) -> "BicomplexSequence":
        ket = self.as_ket().scale(s)
        return BicomplexSequence(ket.z1, ket.z2)

    def is_close(self, other: "BicomplexSequence", rel_tol: float = 1e-10, abs_tol: float = 0.0) -> bool:
        return self.as_ket().is_close(other.as_ket(), rel_tol, abs_tol)

    def __len__(self) -> int:
        return self.z1.size

    def __add__(self, other: "BicomplexSequence") -> "BicomplexSequence":
        if len(self) != len(other):
            raise DimensionMismatch(f"sequences of lengths {len(self)} and {len(other)}")
        return BicomplexSequence(self.z1 + other.z1, self.z2 + other.z2)

    def __sub__(self, other: "BicomplexSequence") -> "BicomplexSequence":
        return self + other.scale(-1)


def l2_norm(s: BicomplexSequence) -> float:
    """||{w_l}||_2 = (sum_l |w_l|^2)^(1/2), with |.| the Euclidean R^4-norm."""
    return math.sqrt(float(np.sum(s.z1.real**2 + s.z1.imag**2 + s.z2.real**2 + s.z2.imag**2)))


def l2_norm_from_split(s: BicomplexSequence) -> float:
    """The induced M(2)-norm of e1 l^2 + e2 l^2, computed from the two C(i1) component sequences."""
    h1, h2 = (np.asarray(sequence_split(s, k)) for k in (1, 2))
    return math.sqrt((float(np.sum(np.abs(h1) ** 2)) + float(np.sum(np.abs(h2) ** 2))) / 2)


def sequence_split(s: BicomplexSequence, k: Component) -> List[complex]:
    """The C(i1) sequence {z_hk} of the k-th idempotent component."""
    if k not in (1, 2):
        raise ValueError(f"idempotent components are numbered 1 and 2, got {k}")
    return [complex(h) for h in s.idempotent[k - 1]]


def sequence_recombine(h1: Sequence[complex], h2: Sequence[complex]) -> BicomplexSequence:
    """e1 {h1_l} + e2 {h2_l}."""
    if len(h1) != len(h2):
        raise DimensionMismatch(f"components of lengths {len(h1)} and {len(h2)}")
    return BicomplexSequence.from_idempotent(np.array([h1, h2], dtype=np.complex128).reshape(2, -1))


def l2_scalar_product(s: BicomplexSequence, t: BicomplexSequence) -> Bicomplex:
    """The standard (unit-weight) bicomplex scalar product of l^2_2."""
    if len(s) != len(t):
        raise DimensionMismatch(f"sequences of lengths {len(s)} and {len(t)}")
    return scalar_product(ScalarProductSpec.standard(len(s)), s.as_ket(), t.as_ket())


def partial_sums(s: BicomplexSequence) -> np.ndarray:
    """The partial sums sum_{l<n} |w_l|^2 for n = 1, ..., N; nondecreasing and bounded by ||s||_2^2."""
    return np.cumsum(np.abs(s.z1) ** 2 + np.abs(s.z2) ** 2)


def tail_norms(s: BicomplexSequence) -> np.ndarray:
    """(sum_{l>=n} |w_l|^2)^(1/2) for n = 0, ..., N; nonincreasing down to the zero tail."""
    terms = np.abs(s.z1) ** 2 + np.abs(s.z2) ** 2
    tails = np.concatenate([np.cumsum(terms[::-1])[::-1], [0.0]])
    return np.sqrt(tails)
