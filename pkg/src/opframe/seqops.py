"""Sequence-level operator machinery: analysis, synthesis, frame operator,
optimal bounds, canonical duals, reconstruction, partial sums.

A :class:`FrameSequence` stores the family {g_n} as the columns of a
dim x N complex matrix over a weighted model.  All spectra are computed on
the whitened Hermitian forms, so self-adjointness is exact under quadrature
weights: with Y = W^(1/2) G, the frame operator and the Gram matrix share
their nonzero spectrum through Y Y^H and Y^H Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ._linalg import as_complex_vector, hermitize
from .errors import InvalidDimension, InvalidIndex, NotAFrame
from .hilbert import HilbertModel
from .opmodel import OperatorModel

#: alpha > FRAME_TOL * beta decides frame vs bessel_only
FRAME_TOL = 1e-8

BOUND_KINDS = ("frame", "bessel_only", "k_frame", "weak_a_frame", "graph_a_frame")


@dataclass(frozen=True)
class FrameSequence:
    """An indexed finite family stored as matrix columns."""

    model: HilbertModel
    vectors: np.ndarray  # dim x N
    index_labels: Optional[Sequence[int]] = None

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[0] != self.model.dim:
            raise InvalidDimension("vectors must be a model.dim x N matrix")
        if v.shape[1] < 1:
            raise InvalidDimension("a sequence needs at least one column")
        norms = np.sqrt(self.model.weights @ (np.abs(v) ** 2))
        if not np.all(np.isfinite(norms)):
            raise InvalidDimension("sequence columns must have finite norm")
        # individual zero columns are legal (e.g. a zeroed mode); an all-zero
        # family is not a sequence worth analyzing
        if not np.any(norms > 0.0):
            raise InvalidDimension("all sequence columns are zero")
        object.__setattr__(self, "vectors", v)
        labels = self.index_labels
        if labels is None:
            labels = tuple(range(v.shape[1]))
        else:
            labels = tuple(int(k) for k in labels)
            if len(labels) != v.shape[1]:
                raise InvalidDimension("index_labels length must equal N")
        object.__setattr__(self, "index_labels", labels)

    @property
    def n_vectors(self) -> int:
        return self.vectors.shape[1]

    def column(self, label: int) -> np.ndarray:
        try:
            j = self.index_labels.index(int(label))
        except ValueError:
            raise InvalidIndex(f"label {label} not present") from None
        return self.vectors[:, j]

    def whitened(self) -> np.ndarray:
        return self.model.sqrt_weights[:, None] * self.vectors

    def permuted(self, order) -> "FrameSequence":
        order = list(order)
        return FrameSequence(
            self.model,
            self.vectors[:, order],
            [self.index_labels[j] for j in order],
        )


@dataclass(frozen=True)
class FrameBounds:
    alpha: float
    beta: float
    kind: str

    def __post_init__(self):
        if self.kind not in BOUND_KINDS:
            raise InvalidDimension(f"unknown bound kind {self.kind!r}")
        if not (self.alpha >= 0.0 or np.isnan(self.alpha)):
            raise InvalidDimension("alpha must be nonnegative")
        if not (self.beta >= 0.0 or np.isnan(self.beta)):
            raise InvalidDimension("beta must be nonnegative")


def analysis(seq: FrameSequence, f) -> np.ndarray:
    """Coefficient vector (inner(f, g_1), ..., inner(f, g_N))."""
    f = as_complex_vector(f, seq.model.dim)
    return seq.vectors.conj().T @ (seq.model.weights * f)


def synthesis(seq: FrameSequence, c) -> np.ndarray:
    """Weighted column sum sum_n c_n g_n."""
    c = as_complex_vector(c, seq.n_vectors)
    return seq.vectors @ c


def gram(seq: FrameSequence) -> np.ndarray:
    y = seq.whitened()
    return y.conj().T @ y


def frame_operator(seq: FrameSequence) -> OperatorModel:
    """S = (synthesis) o (analysis); matrix G G^H W in plain coordinates."""
    s = seq.vectors @ (seq.vectors.conj().T * seq.model.weights[None, :])
    return OperatorModel(s, seq.model, seq.model, name="frame operator")


def _whitened_spectrum(seq: FrameSequence) -> np.ndarray:
    """Full spectrum of the frame operator, via the smaller Hermitian form."""
    y = seq.whitened()
    d, n = y.shape
    if n <= d:
        vals = np.linalg.eigvalsh(hermitize(y.conj().T @ y))
        pad = np.zeros(d - n)
        return np.sort(np.concatenate([pad, np.clip(vals, 0.0, None)]))
    vals = np.linalg.eigvalsh(hermitize(y @ y.conj().T))
    return np.sort(np.clip(vals, 0.0, None))


def frame_bounds(seq: FrameSequence, frame_tol: float = FRAME_TOL) -> FrameBounds:
    """Optimal constants: alpha = lambda_min(S), beta = lambda_max(S)."""
    spec = _whitened_spectrum(seq)
    alpha, beta = float(spec[0]), float(spec[-1])
    kind = "frame" if alpha > frame_tol * max(beta, 1e-300) else "bessel_only"
    return FrameBounds(alpha, beta, kind)


def canonical_dual(seq: FrameSequence, frame_tol: float = FRAME_TOL) -> FrameSequence:
    """The dual family {S^-1 g_n}; requires an invertible frame operator."""
    y = seq.whitened()
    d, n = y.shape
    if n < d:
        raise NotAFrame("sequence has fewer columns than the model dimension")
    s_w = hermitize(y @ y.conj().T)
    vals = np.linalg.eigvalsh(s_w)
    if vals[0] <= frame_tol * max(vals[-1], 1e-300):
        raise NotAFrame(
            f"frame operator nearly singular (lambda_min={vals[0]:.3e}, "
            f"lambda_max={vals[-1]:.3e})"
        )
    dual_w = np.linalg.solve(s_w, y)
    return FrameSequence(
        seq.model, dual_w / seq.model.sqrt_weights[:, None], seq.index_labels
    )


def reconstruct(seq: FrameSequence, dual: FrameSequence, f):
    """sum_n inner(f, h_n) g_n and its relative error against f."""
    if dual.model.dim != seq.model.dim or dual.n_vectors != seq.n_vectors:
        raise InvalidDimension("sequence and dual must share model and length")
    f = as_complex_vector(f, seq.model.dim)
    rec = synthesis(seq, analysis(dual, f))
    nf = np.sqrt(np.sum(seq.model.weights * np.abs(f) ** 2))
    err = np.sqrt(np.sum(seq.model.weights * np.abs(rec - f) ** 2))
    residual = float(err / nf) if nf > 0 else float(err)
    return rec, residual


def partial_synthesis(seq: FrameSequence, c, upto: int) -> np.ndarray:
    """sum_{k <= upto} c_k g_k (1-based cutoff in storage order)."""
    c = as_complex_vector(c, seq.n_vectors)
    if not 1 <= upto <= seq.n_vectors:
        raise InvalidIndex(f"upto must be in 1..{seq.n_vectors}, got {upto}")
    return seq.vectors[:, :upto] @ c[:upto]
