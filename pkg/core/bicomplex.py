from typing import Iterator, List
from dataclasses import dataclass
import cmath
import math

from .types import ComplexI1, Scalar, Component, RootBranch, ConjugationKind, ModulusKind
from .errors import NullConeError

# relative threshold below which an idempotent component counts as zero
TAU_NULL = 1e-12
# absolute slack for D+ membership, so that computed boundary values (e.g. e1) classify as positive
TAU_ABS = 1e-12


def _as_complex(value: Scalar, name: str) -> complex:
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class Bicomplex:
    """A bicomplex number w = z1 + z2*i2, with z1 and z2 in C(i1).

    The Cartesian pair is the only stored form; the idempotent form is computed on demand.
    Python's imaginary unit 1j stands for i1 in both coordinates.
    """

    z1: ComplexI1 = 0j
    z2: ComplexI1 = 0j

    def __post_init__(self) -> None:
        # frozen, so the coercion has to go through object.__setattr__
        object.__setattr__(self, "z1", _as_complex(self.z1, "z1"))
        object.__setattr__(self, "z2", _as_complex(self.z2, "z2"))

    @classmethod
    def coerce(cls, value: "Bicomplex | Scalar") -> "Bicomplex":
        """Promotes ints, floats and C(i1) complex numbers to bicomplex numbers."""
        if isinstance(value, Bicomplex):
            return value
        if isinstance(value, (int, float, complex)):
            return cls(value, 0j)
        raise TypeError(f"cannot promote {type(value).__name__} to Bicomplex")

    @classmethod
    def from_idempotent(cls, h1: Scalar, h2: Scalar) -> "Bicomplex":
        return from_idempotent(IdempotentPair(h1, h2))

    @property
    def idempotent(self) -> "IdempotentPair":
        return to_idempotent(self)

    def conj(self, kind: ConjugationKind) -> "Bicomplex":
        return conj(self, kind)

    def is_close(
        self, other: "Bicomplex | Scalar", rel_tol: float = 1e-12, abs_tol: float = 0.0
    ) -> bool:
        """Compares two values in the Euclidean R^4-norm, like math.isclose does for reals."""
        other = Bicomplex.coerce(other)
        diff = euclid_norm(self - other)
        return diff <= max(
            rel_tol * max(euclid_norm(self), euclid_norm(other)), abs_tol
        )

    def __add__(self, other: "Bicomplex | Scalar") -> "Bicomplex":
        try:
            return add(self, Bicomplex.coerce(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: "Bicomplex | Scalar") -> "Bicomplex":
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return Bicomplex(self.z1 - other.z1, self.z2 - other.z2)

    def __rsub__(self, other: Scalar) -> "Bicomplex":
        try:
            return Bicomplex.coerce(other) - self
        except TypeError:
            return NotImplemented

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.z1, -self.z2)

    def __mul__(self, other: "Bicomplex | Scalar") -> "Bicomplex":
        try:
            return mul(self, Bicomplex.coerce(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: "Bicomplex | Scalar") -> "Bicomplex":
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return mul(self, inverse(other))

    def __rtruediv__(self, other: Scalar) -> "Bicomplex":
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return mul(other, inverse(self))

    def __pow__(self, n: int) -> "Bicomplex":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return inverse(self) ** (-n)
        # square-and-multiply
        result, base = ONE, self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def __abs__(self) -> float:
        return euclid_norm(self)

    def __str__(self) -> str:
        return f"({self.z1}) + ({self.z2})i2"


@dataclass(frozen=True, slots=True)
class IdempotentPair:
    """The idempotent coordinates (z_h1, z_h2) of w = z_h1*e1 + z_h2*e2."""

    h1: ComplexI1
    h2: ComplexI1

    def __post_init__(self) -> None:
        object.__setattr__(self, "h1", _as_complex(self.h1, "h1"))
        object.__setattr__(self, "h2", _as_complex(self.h2, "h2"))

    def __getitem__(self, k: Component) -> ComplexI1:
        if k == 1:
            return self.h1
        if k == 2:
            return self.h2
        raise IndexError(f"idempotent components are numbered 1 and 2, got {k}")

    def __iter__(self) -> Iterator[ComplexI1]:
        yield self.h1
        yield self.h2

    def to_bicomplex(self) -> Bicomplex:
        return from_idempotent(self)


@dataclass(frozen=True, slots=True)
class Hyperbolic:
    """A hyperbolic number x_h1*e1 + x_h2*e2, stored in idempotent coordinates."""

    x1: float
    x2: float

    def __post_init__(self) -> None:
        for name in ("x1", "x2"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_bicomplex(cls, w: Bicomplex, tol: float = 1e-10) -> "Hyperbolic":
        """Reads a hyperbolic number off a bicomplex value that lies in D (up to tol, relative)."""
        if not in_D(w, tol):
            raise ValueError(f"{w} is not a hyperbolic number")
        pair = to_idempotent(w)
        return cls(pair.h1.real, pair.h2.real)

    def to_bicomplex(self) -> Bicomplex:
        return from_idempotent(IdempotentPair(self.x1, self.x2))

    def __add__(self, other: "Hyperbolic") -> "Hyperbolic":
        return Hyperbolic(self.x1 + other.x1, self.x2 + other.x2)

    def __mul__(self, other: "Hyperbolic") -> "Hyperbolic":
        return Hyperbolic(self.x1 * other.x1, self.x2 * other.x2)


def add(s: Bicomplex, t: Bicomplex) -> Bicomplex:
    return Bicomplex(s.z1 + t.z1, s.z2 + t.z2)


def mul(s: Bicomplex, t: Bicomplex) -> Bicomplex:
    """Cartesian product (z1 z1' - z2 z2') + (z1 z2' + z2 z1') i2, which follows from i2^2 = -1."""
    return Bicomplex(s.z1 * t.z1 - s.z2 * t.z2, s.z1 * t.z2 + s.z2 * t.z1)


def mul_idempotent(s: Bicomplex, t: Bicomplex) -> Bicomplex:
    """The same product, computed componentwise in the idempotent basis."""
    p, q = to_idempotent(s), to_idempotent(t)
    return from_idempotent(IdempotentPair(p.h1 * q.h1, p.h2 * q.h2))


def conj(w: Bicomplex, kind: ConjugationKind) -> Bicomplex:
    if kind is ConjugationKind.DAG1:
        return Bicomplex(w.z1.conjugate(), w.z2.conjugate())
    if kind is ConjugationKind.DAG2:
        return Bicomplex(w.z1, -w.z2)
    if kind is ConjugationKind.DAG3:
        return Bicomplex(w.z1.conjugate(), -w.z2.conjugate())
    raise ValueError(f"unknown conjugation: {kind!r}")


_MODULUS_CONJUGATION = {
    ModulusKind.I1: ConjugationKind.DAG2,
    ModulusKind.I2: ConjugationKind.DAG1,
    ModulusKind.J: ConjugationKind.DAG3,
}


def modulus_sq(w: Bicomplex, kind: ModulusKind) -> Bicomplex:
    """Returns the squared modulus w * w^dag as a bicomplex number.

    For the i2 modulus the value lies in C(i2): its real part sits in z1 and its i2 part in z2.
    """
    return mul(w, conj(w, _MODULUS_CONJUGATION[kind]))


def euclid_norm(w: Bicomplex) -> float:
    return math.hypot(abs(w.z1), abs(w.z2))


def euclid_norm_idempotent(w: Bicomplex) -> float:
    pair = to_idempotent(w)
    return math.hypot(abs(pair.h1), abs(pair.h2)) / math.sqrt(2.0)


def to_idempotent(w: Bicomplex) -> IdempotentPair:
    return IdempotentPair(w.z1 - w.z2 * 1j, w.z1 + w.z2 * 1j)


def from_idempotent(p: IdempotentPair) -> Bicomplex:
    return Bicomplex((p.h1 + p.h2) / 2, (p.h1 - p.h2) * 1j / 2)


def project(w: Bicomplex, k: Component) -> ComplexI1:
    """The projector P_k: M(2) -> C(i1), w -> z_hk."""
    return to_idempotent(w)[k]


def is_null_cone(w: Bicomplex, tol: float = TAU_NULL) -> bool:
    """Whether w is a zero divisor (or zero), i.e. one idempotent component vanishes."""
    pair = to_idempotent(w)
    a, b = abs(pair.h1), abs(pair.h2)
    return min(a, b) <= tol * max(a, b, 1.0)


def inverse(w: Bicomplex, tol: float = TAU_NULL) -> Bicomplex:
    pair = to_idempotent(w)
    a, b = abs(pair.h1), abs(pair.h2)
    # relative, with no floor at 1; zero is caught as 0 <= 0
    if min(a, b) <= tol * max(a, b):
        raise NullConeError(f"{w} lies in the null cone and has no inverse")
    return from_idempotent(IdempotentPair(1 / pair.h1, 1 / pair.h2))


def _component_root(h: complex, n: int, branch: int) -> complex:
    if h == 0:
        return 0j
    # + 0.0 clears negative zeros, so negative reals take the +pi branch of log
    h = complex(h.real + 0.0, h.imag + 0.0)
    if n == 2 and branch % 2 == 0:
        # cmath.sqrt is exact on perfect squares
        return cmath.sqrt(h)
    root = cmath.exp(cmath.log(h) / n)
    if branch % n:
        root *= cmath.exp(2j * math.pi * (branch % n) / n)
    return root


def nth_root(w: Bicomplex, n: int, branch: RootBranch = (0, 0)) -> Bicomplex:
    """An nth root of w, taken componentwise in the idempotent basis.

    The default branch (0, 0) is the principal complex root in each component; branch (b1, b2)
    rotates component k by exp(2*pi*i1*b_k/n), so the n^2 choices reach every root.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n == 1 and branch == (0, 0):
        return w
    pair = to_idempotent(w)
    return from_idempotent(
        IdempotentPair(
            _component_root(pair.h1, n, branch[0]),
            _component_root(pair.h2, n, branch[1]),
        )
    )


def all_nth_roots(w: Bicomplex, n: int) -> List[Bicomplex]:
    """Every nth root of an invertible w (n^2 of them); zero components collapse duplicates."""
    return [nth_root(w, n, (b1, b2)) for b1 in range(n) for b2 in range(n)]


def in_D_plus(h: Hyperbolic, tol: float = TAU_ABS) -> bool:
    return h.x1 >= -tol and h.x2 >= -tol


def _scale(w: Bicomplex) -> float:
    return max(euclid_norm(w), 1.0)


def in_C_i1(w: Bicomplex, tol: float = 1e-12) -> bool:
    return abs(w.z2) <= tol * _scale(w)


def in_C_i2(w: Bicomplex, tol: float = 1e-12) -> bool:
    # x + y*i2 has real z1 and real z2
    return math.hypot(w.z1.imag, w.z2.imag) <= tol * _scale(w)


def in_D(w: Bicomplex, tol: float = 1e-12) -> bool:
    # x + y*j has real z1 and purely imaginary z2
    return math.hypot(w.z1.imag, w.z2.real) <= tol * _scale(w)


ZERO = Bicomplex(0, 0)
ONE = Bicomplex(1, 0)
I1 = Bicomplex(1j, 0)
I2 = Bicomplex(0, 1)
J = Bicomplex(0, 1j)
# (1 + j) / 2 and (1 - j) / 2, dyadic and therefore exact
E1 = Bicomplex(0.5, 0.5j)
E2 = Bicomplex(0.5, -0.5j)
