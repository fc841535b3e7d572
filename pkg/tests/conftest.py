import numpy as np
import pytest

from opframe.hilbert import HilbertModel, l2_truncation
from opframe.seqops import FrameSequence


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_vector(rng, dim):
    return rng.standard_normal(dim) + 1j * rng.standard_normal(dim)


def random_matrix(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_weighted_model(rng, dim, label="weighted"):
    return HilbertModel(dim, 0.25 + rng.random(dim), label)


def random_frame(rng, dim, n_cols, model=None):
    """A random spanning family (full rank with probability one)."""
    model = model or l2_truncation(dim)
    return FrameSequence(model, random_matrix(rng, dim, n_cols))
