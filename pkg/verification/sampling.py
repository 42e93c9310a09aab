from typing import Any, Dict, List, Mapping
from dataclasses import dataclass
from functools import lru_cache
import hashlib

import numpy as np

from core import Bicomplex, IdempotentPair, from_idempotent, to_idempotent
from hilbert import Ket, ScalarProductSpec
from orthonormal import OrthonormalSystem, gram_schmidt

MAX_SEED = 2**64 - 1
# spawn-key streams: per-trial draws and per-basis draws never share a generator
TRIAL_STREAM = 0
BASIS_STREAM = 1


@dataclass(frozen=True)
class SamplingParams:
    """How random inputs are drawn; mirrors the `sampling` section of the configuration."""

    coeff_range: float = 10.0
    null_cone_rate: float = 0.05
    null_cone_scale: float = 1e-14
    weight_low: float = 0.5
    weight_high: float = 2.0
    perturbation_decades: float = 8.0
    rf_bases: int = 20

    @classmethod
    def from_config(cls, section: Mapping[str, Any]) -> "SamplingParams":
        known = {k: section[k] for k in cls.__dataclass_fields__ if k in section}
        params = cls(**known)
        if params.weight_low <= 0 or params.weight_high < params.weight_low:
            raise ValueError("weights must be drawn from a positive interval")
        if not 0 <= params.null_cone_rate <= 1:
            raise ValueError("null_cone_rate must lie in [0, 1]")
        return params


def suite_key(suite: str) -> int:
    """A stable 64-bit key for a suite name (Python's hash() is salted per process)."""
    return int.from_bytes(hashlib.blake2b(suite.encode(), digest_size=8).digest(), "little")


def check_seed(seed: int) -> int:
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def trial_rng(seed: int, suite: str, index: int) -> np.random.Generator:
    """Counter-mode generator for one trial: a function of (seed, suite, index) only."""
    sequence = np.random.SeedSequence(
        entropy=check_seed(seed), spawn_key=(suite_key(suite), TRIAL_STREAM, index)
    )
    return np.random.default_rng(sequence)


def random_bicomplex(rng: np.random.Generator, params: SamplingParams) -> Bicomplex:
    """Uniform in [-r, r]^4, occasionally pushed next to the null cone.

    The same number of draws happens whether or not the value is pushed, so streams stay aligned.
    """
    x = rng.uniform(-params.coeff_range, params.coeff_range, size=4)
    push, component = rng.random(), rng.integers(2)
    w = Bicomplex(complex(x[0], x[1]), complex(x[2], x[3]))
    if push < params.null_cone_rate:
        pair = to_idempotent(w)
        if component == 0:
            pair = IdempotentPair(pair.h1 * params.null_cone_scale, pair.h2)
        else:
            pair = IdempotentPair(pair.h1, pair.h2 * params.null_cone_scale)
        w = from_idempotent(pair)
    return w


def random_ket(rng: np.random.Generator, dim: int, params: SamplingParams) -> Ket:
    x = rng.uniform(-params.coeff_range, params.coeff_range, size=(4, dim))
    push = rng.random(dim) < params.null_cone_rate
    component = rng.integers(2, size=dim)
    ket = Ket(x[0] + 1j * x[1], x[2] + 1j * x[3])
    if not np.any(push):
        return ket
    h = ket.idempotent
    h[component[push], np.flatnonzero(push)] *= params.null_cone_scale
    return Ket.from_idempotent(h)


def random_space(rng: np.random.Generator, dim: int, params: SamplingParams) -> ScalarProductSpec:
    w = rng.uniform(params.weight_low, params.weight_high, size=(2, dim))
    return ScalarProductSpec(dim, tuple(w[0]), tuple(w[1]))


def random_basis(
    rng: np.random.Generator, space: ScalarProductSpec, params: SamplingParams
) -> OrthonormalSystem:
    """A random full orthonormal basis: Gram-Schmidt on random kets."""
    return gram_schmidt(space, [random_ket(rng, space.dim, params) for _ in range(space.dim)])


@lru_cache(maxsize=64)
def shared_basis(
    seed: int, suite: str, dim: int, index: int, params: SamplingParams
) -> OrthonormalSystem:
    """The index-th basis of a suite, shared by all trials that cycle through it."""
    sequence = np.random.SeedSequence(
        entropy=check_seed(seed), spawn_key=(suite_key(suite), BASIS_STREAM, index)
    )
    rng = np.random.default_rng(sequence)
    return random_basis(rng, random_space(rng, dim, params), params)


def random_coefficients(
    rng: np.random.Generator, n: int, params: SamplingParams
) -> List[Bicomplex]:
    return [random_bicomplex(rng, params) for _ in range(n)]


def random_null_cone_scalar(rng: np.random.Generator, params: SamplingParams) -> Bicomplex:
    """A random scalar that is a zero divisor (a multiple of e1 or e2) two times out of three."""
    w = random_bicomplex(rng, params)
    choice = rng.integers(3)
    if choice == 0:
        return w
    pair = to_idempotent(w)
    return from_idempotent(IdempotentPair(pair.h1, 0) if choice == 1 else IdempotentPair(0, pair.h2))


def sampling_summary(params: SamplingParams) -> Dict[str, Any]:
    return {k: getattr(params, k) for k in params.__dataclass_fields__}
