"""Finite-dimensional Hilbert-space models with quadrature weights.

A :class:`HilbertModel` is C^dim equipped with the inner product

    inner(f, g) = sum_i w_i * f_i * conj(g_i),

linear in the first slot.  Continuous spaces are modeled on uniform midpoint
grids carrying uniform weights h = (interval length) / dim, which keeps the
discrete orthogonality of sampled exponentials exact.  Domain restrictions
(Dirichlet conditions, operator domains) are :class:`Subspace` values: a
matrix of columns orthonormal with respect to the weighted inner product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

import numpy as np

from ._linalg import as_complex_vector
from .errors import DomainViolation, EmptySpan, InvalidDimension

if TYPE_CHECKING:  # pragma: no cover
    from .opmodel import OperatorModel

#: relative tolerance deciding approximate membership f in a Subspace
MEMBERSHIP_RTOL = 1e-8


@dataclass(frozen=True)
class HilbertModel:
    """A weighted finite-dimensional complex inner-product space.

    points is optional grid metadata (coordinates of the quadrature nodes)
    used by the named constructions; abstract l2 truncations leave it None.
    """

    dim: int
    weights: np.ndarray
    label: str = ""
    points: Optional[np.ndarray] = field(default=None, compare=False)

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        if self.dim < 1:
            raise InvalidDimension("model dimension must be positive")
        if w.shape[0] != self.dim:
            raise InvalidDimension("weights length must equal dim")
        if not np.all(w > 0.0):
            raise InvalidDimension("all quadrature weights must be strictly positive")
        object.__setattr__(self, "weights", w)
        if self.points is not None:
            p = np.asarray(self.points, dtype=float).reshape(-1)
            if p.shape[0] != self.dim:
                raise InvalidDimension("points length must equal dim")
            object.__setattr__(self, "points", p)

    @property
    def sqrt_weights(self):
        return np.sqrt(self.weights)


def l2_truncation(dim, label=None):
    """Truncated l2 model: unit weights."""
    return HilbertModel(dim, np.ones(dim), label or f"l2 truncation N={dim}")


def interval_grid(dim, x0=0.0, x1=1.0, label=None):
    """Uniform midpoint grid on [x0, x1) with uniform weights (x1-x0)/dim."""
    h = (x1 - x0) / dim
    pts = x0 + (np.arange(dim) + 0.5) * h
    return HilbertModel(
        dim,
        np.full(dim, h),
        label or f"L2({x0:g},{x1:g}) uniform grid d={dim}",
        points=pts,
    )


def window_grid(dim, x0, x1, label=None):
    """Windowed real-line model: same layout as interval_grid, periodic use."""
    return interval_grid(dim, x0, x1, label or f"windowed R [{x0:g},{x1:g}) d={dim}")


def inner(model: HilbertModel, f, g) -> complex:
    """Weighted inner product, linear in f and conjugate-linear in g."""
    f = as_complex_vector(f, model.dim)
    g = as_complex_vector(g, model.dim)
    return complex(np.sum(model.weights * f * np.conj(g)))


def norm(model: HilbertModel, f) -> float:
    f = as_complex_vector(f, model.dim)
    return float(np.sqrt(np.sum(model.weights * np.abs(f) ** 2)))


@dataclass(frozen=True)
class Subspace:
    """A subspace of a model, stored as a weighted-orthonormal column basis.

    basis is dim x r with basis^H W basis = I_r.  basis=None denotes the
    whole ambient space (and keeps large models cheap).
    """

    ambient: HilbertModel
    basis: Optional[np.ndarray]  # None == full space

    def __post_init__(self):
        if self.basis is not None:
            b = np.asarray(self.basis, dtype=complex)
            if b.ndim != 2 or b.shape[0] != self.ambient.dim:
                raise InvalidDimension("basis must be dim x r")
            object.__setattr__(self, "basis", b)

    @classmethod
    def full(cls, model: HilbertModel) -> "Subspace":
        return cls(model, None)

    @property
    def rank(self) -> int:
        return self.ambient.dim if self.basis is None else self.basis.shape[1]

    def coords(self, f):
        """Orthonormal coordinates of the projection of f onto the subspace."""
        f = self._as_columns_or_vector(f)
        if self.basis is None:
            return f
        if f.ndim == 1:
            return self.basis.conj().T @ (self.ambient.weights * f)
        return self.basis.conj().T @ (self.ambient.weights[:, None] * f)

    def project(self, f):
        f = self._as_columns_or_vector(f)
        if self.basis is None:
            return f
        return self.basis @ self.coords(f)

    def _as_columns_or_vector(self, f):
        f = np.asarray(f, dtype=complex)
        if f.ndim == 2:
            if f.shape[0] != self.ambient.dim:
                raise InvalidDimension("columns must have ambient dimension")
            return f
        return as_complex_vector(f, self.ambient.dim)

    def violation(self, f) -> float:
        """norm(f - P f), the distance of f from the subspace."""
        f = as_complex_vector(f, self.ambient.dim)
        if self.basis is None:
            return 0.0
        return norm(self.ambient, f - self.project(f))

    def contains(self, f, rtol=MEMBERSHIP_RTOL) -> bool:
        nf = norm(self.ambient, f)
        return self.violation(f) <= rtol * max(nf, 1e-300)

    def require_member(self, f, what="vector", rtol=MEMBERSHIP_RTOL):
        if not self.contains(f, rtol):
            raise DomainViolation(f"{what} lies outside the declared subspace")


def orthonormalize(vectors, model: HilbertModel, drop_tol=1e-10) -> Subspace:
    """Gram-Schmidt with reorthogonalization against the model inner product.

    Columns whose residual norm after projection falls below drop_tol
    (relative to the largest input column norm) are dropped, so
    rank-deficient inputs are reduced rather than rejected.
    """
    v = np.asarray(vectors, dtype=complex)
    if v.ndim == 1:
        v = v[:, None]
    if v.shape[0] != model.dim:
        raise InvalidDimension("vectors must have model.dim rows")
    w = model.weights
    scale = max(
        (float(np.sqrt(np.sum(w * np.abs(v[:, j]) ** 2))) for j in range(v.shape[1])),
        default=0.0,
    )
    if scale <= 0.0:
        raise EmptySpan("all input columns are zero")
    kept = []
    for j in range(v.shape[1]):
        x = v[:, j].copy()
        for _ in range(2):  # two projection sweeps keep orthogonality to ~1e-15
            for q in kept:
                x = x - q * np.sum(w * x * np.conj(q))
        nx = float(np.sqrt(np.sum(w * np.abs(x) ** 2)))
        if nx < drop_tol * scale:
            continue
        kept.append(x / nx)
    if not kept:
        raise EmptySpan("input columns are numerically zero")
    return Subspace(model, np.column_stack(kept))


def graph_inner(A: "OperatorModel", f, g) -> complex:
    """Graph inner product inner(f, g) + inner(Af, Ag) on the domain of A.

    Both arguments must lie in D(A) up to the membership tolerance.
    """
    dom = A.domain_subspace
    dom.require_member(f, "f")
    dom.require_member(g, "g")
    af = A.apply(f)
    ag = A.apply(g)
    return inner(A.input_model, f, g) + inner(A.codomain, af, ag)


def graph_norm(A: "OperatorModel", f) -> float:
    return float(np.sqrt(max(graph_inner(A, f, f).real, 0.0)))
