"""Shared fixtures and Hypothesis strategies for bicomplex values, kets and weighted spaces."""

import numpy as np
import pytest
from hypothesis import strategies as st

from core import Bicomplex
from hilbert import Ket, ScalarProductSpec

# bounded and finite, and flushed to zero below 1e-50 so that squared norms never underflow
_coord = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False).map(
    lambda x: x if abs(x) >= 1e-50 else 0.0
)
_weight = st.floats(min_value=0.5, max_value=2.0, allow_nan=False, allow_infinity=False)


@st.composite
def bicomplex(draw):
    return Bicomplex(complex(draw(_coord), draw(_coord)), complex(draw(_coord), draw(_coord)))


def complex_scalars():
    return st.builds(complex, _coord, _coord)


@st.composite
def kets(draw, dim):
    coords = draw(st.lists(_coord, min_size=4 * dim, max_size=4 * dim))
    x = np.array(coords).reshape(4, dim)
    return Ket(x[0] + 1j * x[1], x[2] + 1j * x[3])


@st.composite
def spaces(draw, dim):
    w1 = draw(st.lists(_weight, min_size=dim, max_size=dim))
    w2 = draw(st.lists(_weight, min_size=dim, max_size=dim))
    return ScalarProductSpec(dim, tuple(w1), tuple(w2))


@st.composite
def space_and_kets(draw, count, min_dim=1, max_dim=6):
    dim = draw(st.integers(min_value=min_dim, max_value=max_dim))
    return draw(spaces(dim)), [draw(kets(dim)) for _ in range(count)]


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_ket(rng, dim, scale=10.0):
    x = rng.uniform(-scale, scale, size=(4, dim))
    return Ket(x[0] + 1j * x[1], x[2] + 1j * x[3])


def random_space(rng, dim):
    w = rng.uniform(0.5, 2.0, size=(2, dim))
    return ScalarProductSpec(dim, tuple(w[0]), tuple(w[1]))
