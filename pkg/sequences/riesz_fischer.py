from dataclasses import dataclass

from core import Component, DimensionMismatch, E1, E2
from hilbert import Ket
from orthonormal import OrthonormalSystem, CoefficientList, fourier_coefficients, expand
from .l2 import BicomplexSequence


@dataclass(frozen=True)
class RieszFischerMap:
    """The map T: psi -> {<m_l, psi>} from a space with orthonormal basis {m_l} onto l^2_2.

    T is bicomplex linear, bijective and isometric; bijectivity needs a full basis, so partial
    systems are rejected (project with `best_approximation` instead).
    """

    domain: OrthonormalSystem

    def __post_init__(self) -> None:
        if not self.domain.is_full_basis:
            raise ValueError(
                f"a Riesz-Fischer map needs a full basis: {self.domain.size} kets in dimension {self.domain.space.dim}"
            )

    @classmethod
    def for_system(cls, system: OrthonormalSystem, tol: float = 1e-10) -> "RieszFischerMap":
        """Builds the map after checking that the system really is orthonormal."""
        if not system.is_orthonormal(tol):
            raise ValueError("the domain system is not orthonormal")
        return cls(system)

    @property
    def dim(self) -> int:
        return self.domain.space.dim


def rf_forward(rf_map: RieszFischerMap, psi: Ket) -> BicomplexSequence:
    """T(psi): the Fourier-coefficient sequence of psi."""
    coefficients = fourier_coefficients(rf_map.domain, psi)
    return BicomplexSequence.from_idempotent(coefficients.idempotent.T)


def rf_inverse(rf_map: RieszFischerMap, s: BicomplexSequence) -> Ket:
    """T^-1(s) = sum_l s_l m_l."""
    if len(s) != rf_map.dim:
        raise DimensionMismatch(f"sequence of length {len(s)} for a basis of {rf_map.dim} kets")
    return expand(rf_map.domain, CoefficientList(s.values))


def rf_component(rf_map: RieszFischerMap, psi: Ket, k: Component) -> BicomplexSequence:
    """T_k(psi) = e_k T(psi), which equals T(e_k psi)."""
    if k not in (1, 2):
        raise ValueError(f"idempotent components are numbered 1 and 2, got {k}")
    return rf_forward(rf_map, psi).scale(E1 if k == 1 else E2)
