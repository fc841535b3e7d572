"""Operator models with explicit domains.

An :class:`OperatorModel` is a matrix between two weighted models together
with a recorded domain subspace.  The matrix action is only trusted on the
domain: ``apply`` always projects first, so callers can measure the domain
violation separately.  Adjoints are taken with respect to the weighted inner
products, and the optional ``adjoint_domain`` carries discretized boundary
conditions (e.g. the Dirichlet subspace of the -i d/dx operators).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np
import scipy.linalg

from ._linalg import (
    adjoint_matrix,
    as_complex_vector,
    hermitize,
    pinv_weighted,
    whiten_matrix,
)
from .errors import GridTooCoarse, InvalidDimension, InvalidProbe
from .hilbert import HilbertModel, Subspace, interval_grid


@dataclass(frozen=True)
class OperatorModel:
    """A linear map between models, with domain bookkeeping.

    matrix         : dim_out x dim_in complex matrix
    input_model    : model of the input space
    codomain       : model of the output space
    domain         : Subspace of input_model (None == everywhere defined)
    adjoint_domain : declared domain of the adjoint (None == full codomain)
    range_basis    : optional precomputed Subspace spanning the closure of
                     the range; purely a performance cache for bound solvers
    """

    matrix: np.ndarray
    input_model: HilbertModel
    codomain: HilbertModel
    domain: Optional[Subspace] = None
    adjoint_domain: Optional[Subspace] = None
    name: str = ""
    range_basis: Optional[Subspace] = field(default=None, compare=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2:
            raise InvalidDimension("operator matrix must be 2-d")
        if m.shape != (self.codomain.dim, self.input_model.dim):
            raise InvalidDimension(
                f"matrix shape {m.shape} does not match models "
                f"({self.codomain.dim}, {self.input_model.dim})"
            )
        object.__setattr__(self, "matrix", m)

    # -- basic structure -------------------------------------------------
    @property
    def domain_subspace(self) -> Subspace:
        return self.domain if self.domain is not None else Subspace.full(self.input_model)

    @property
    def adjoint_domain_subspace(self) -> Subspace:
        if self.adjoint_domain is not None:
            return self.adjoint_domain
        return Subspace.full(self.codomain)

    def effective_matrix(self) -> np.ndarray:
        """matrix composed with the projection onto the domain."""
        if self.domain is None:
            return self.matrix
        b = self.domain.basis
        return (self.matrix @ b) @ (b.conj().T * self.input_model.weights[None, :])

    def domain_violation(self, f) -> float:
        return self.domain_subspace.violation(f)

    def apply(self, f) -> np.ndarray:
        """Apply as matrix o (projection onto domain)."""
        f = as_complex_vector(f, self.input_model.dim)
        return self.matrix @ self.domain_subspace.project(f)

    def apply_columns(self, fs) -> np.ndarray:
        fs = np.asarray(fs, dtype=complex)
        if self.domain is None:
            return self.matrix @ fs
        b = self.domain.basis
        return (self.matrix @ b) @ (b.conj().T @ (self.input_model.weights[:, None] * fs))

    def whitened(self) -> np.ndarray:
        """Effective matrix in whitened coordinates (Hermitian-friendly)."""
        return whiten_matrix(
            self.effective_matrix(), self.codomain.weights, self.input_model.weights
        )

    def domain_whitened(self) -> np.ndarray:
        """Whitened matrix restricted to orthonormal domain coordinates."""
        m = whiten_matrix(self.matrix, self.codomain.weights, self.input_model.weights)
        dom = self.domain_subspace
        if dom.basis is None:
            return m
        return m @ (self.input_model.sqrt_weights[:, None] * dom.basis)

    def operator_norm(self) -> float:
        s = np.linalg.svd(self.domain_whitened(), compute_uv=False)
        return float(s[0]) if s.size else 0.0


def identity_operator(model: HilbertModel, name="identity") -> OperatorModel:
    return OperatorModel(np.eye(model.dim, dtype=complex), model, model, name=name)


def diagonal_operator(model: HilbertModel, diag, name="diagonal") -> OperatorModel:
    d = np.asarray(diag, dtype=complex)
    if d.shape != (model.dim,):
        raise InvalidDimension("diagonal length must equal model dim")
    return OperatorModel(np.diag(d), model, model, name=name)


def adjoint(op: OperatorModel) -> OperatorModel:
    """Weighted adjoint W_in^-1 M^H W_out with the declared adjoint domain.

    The pairing inner(op f, u) == inner(f, adjoint(op) u) holds exactly for
    f in D(op), u anywhere; the declared adjoint domain only restricts where
    the adjoint's action is trusted.
    """
    m_adj = adjoint_matrix(
        op.effective_matrix(), op.codomain.weights, op.input_model.weights
    )
    return OperatorModel(
        m_adj,
        input_model=op.codomain,
        codomain=op.input_model,
        domain=op.adjoint_domain,
        adjoint_domain=op.domain,
        name=f"{op.name}*" if op.name else "adjoint",
    )


def pseudo_inverse(op: OperatorModel, rcond=1e-10) -> OperatorModel:
    """Moore-Penrose inverse with singular values below rcond*sigma_max zeroed.

    Satisfies, in the weighted geometry: N(W+) = R(W)^perp, R(W+) = N(W)^perp
    (within the domain), and W W+ f = f for f in R(W).
    """
    m = pinv_weighted(
        op.effective_matrix(), op.codomain.weights, op.input_model.weights, rcond
    )
    return OperatorModel(
        m,
        input_model=op.codomain,
        codomain=op.input_model,
        name=f"{op.name}^+" if op.name else "pinv",
    )


def graph_adjoint(A: OperatorModel) -> OperatorModel:
    """The adjoint of A viewed as a bounded map from its graph space into H.

    Solves (I + A^H A) y = A^H h in orthonormal domain coordinates, i.e.
    inner(A f, h) = graph_inner(f, A_sharp h) for all f in D(A).
    """
    at = A.domain_whitened()  # dim_out x r
    r = at.shape[1]
    gram = hermitize(at.conj().T @ at)
    rhs = at.conj().T * np.sqrt(A.codomain.weights)[None, :]  # r x dim_out
    y = scipy.linalg.solve(np.eye(r) + gram, rhs, assume_a="pos")
    dom = A.domain_subspace
    if dom.basis is None:
        back = y / np.sqrt(A.input_model.weights)[:, None]
    else:
        back = dom.basis @ y
    return OperatorModel(
        back,
        input_model=A.codomain,
        codomain=A.input_model,
        name=f"{A.name}#" if A.name else "graph adjoint",
    )


# -- concrete operators -------------------------------------------------

DIFF_VARIANTS = (
    "minus_i_ddx_H1",
    "minus_i_ddx_H10",
    "ddx_H1",
    "minus_i_ddx_periodic",
    "ddx_periodic",
)


def _central_difference(d, h, periodic):
    D = np.zeros((d, d))
    idx = np.arange(d)
    if periodic:
        D[idx, (idx - 1) % d] = -0.5 / h
        D[idx, (idx + 1) % d] = 0.5 / h
        return D
    for j in range(1, d - 1):
        D[j, j - 1] = -0.5 / h
        D[j, j + 1] = 0.5 / h
    # second-order one-sided rows at the interval ends
    D[0, 0], D[0, 1], D[0, 2] = -1.5 / h, 2.0 / h, -0.5 / h
    D[-1, -1], D[-1, -2], D[-1, -3] = 1.5 / h, -2.0 / h, 0.5 / h
    return D


def dirichlet_subspace(grid: HilbertModel) -> Subspace:
    """Vectors vanishing at the first and last grid node."""
    d = grid.dim
    basis = np.zeros((d, d - 2), dtype=complex)
    basis[1:-1, :] = np.diag(1.0 / grid.sqrt_weights[1:-1])
    return Subspace(grid, basis)


def diff_operator(grid: HilbertModel, variant: str) -> OperatorModel:
    """First-derivative operators on a uniform grid.

    Variants:
      minus_i_ddx_H1       -i d/dx, full domain, one-sided boundary rows
      minus_i_ddx_H10      -i d/dx, Dirichlet (zero-boundary) domain
      ddx_H1               d/dx, full domain
      minus_i_ddx_periodic -i d/dx with periodic wrap (exactly self-adjoint)
      ddx_periodic         d/dx with periodic wrap
    """
    if variant not in DIFF_VARIANTS:
        raise InvalidProbe(f"unknown diff_operator variant {variant!r}")
    if grid.dim < 16:
        raise GridTooCoarse("diff_operator needs at least 16 grid points")
    if grid.points is None:
        raise InvalidDimension("diff_operator requires a grid model with points")
    h = float(grid.points[1] - grid.points[0])
    periodic = variant.endswith("periodic")
    D = _central_difference(grid.dim, h, periodic)
    if variant.startswith("minus_i"):
        M = -1j * D
    else:
        M = D.astype(complex)
    dirich = None if periodic else dirichlet_subspace(grid)
    if variant == "minus_i_ddx_H10":
        return OperatorModel(
            M, grid, grid, domain=dirich, adjoint_domain=None, name=variant
        )
    if periodic:
        return OperatorModel(M, grid, grid, name=variant)
    # full-domain interval operators: the adjoint lives on the Dirichlet subspace
    return OperatorModel(M, grid, grid, adjoint_domain=dirich, name=variant)


def block_multiplier(alphas: Sequence[complex], pts_per_cell: int) -> OperatorModel:
    """Cellwise fold operator on [0, 2*cells).

    On cell k = [2k, 2k+2) the output equals alpha_k * f on the first unit
    half and alpha_k * f(x-1) on the second, i.e. the first half is copied
    (scaled) onto both halves.  The grid has pts_per_cell points per unit
    interval.
    """
    alphas = np.asarray(alphas, dtype=complex)
    cells = alphas.shape[0]
    p = int(pts_per_cell)
    d = 2 * cells * p
    grid = interval_grid(d, 0.0, 2.0 * cells, label=f"block grid cells={cells} p={p}")
    M = np.zeros((d, d), dtype=complex)
    eye = np.eye(p)
    for k in range(cells):
        first = slice(2 * k * p, 2 * k * p + p)
        second = slice(2 * k * p + p, 2 * k * p + 2 * p)
        M[first, first] = alphas[k] * eye
        M[second, first] = alphas[k] * eye
    return OperatorModel(M, grid, grid, name="block_multiplier")


# -- truncation families -------------------------------------------------


@dataclass(frozen=True)
class TruncationFamily:
    """A rule producing (operator, sequence) pairs at increasing sizes."""

    generator: Callable[[int], tuple]
    sizes: Sequence[int]


TRAJECTORY_PROBES = ("bessel_bound", "weak_alpha", "frame_alpha")


def truncation_trajectory(family: TruncationFamily, probe: str):
    """Evaluate a named probe at every family size; returns [(N, value)]."""
    from .seqops import frame_bounds
    from .weakframes import weak_aframe_bound

    if probe not in TRAJECTORY_PROBES:
        raise InvalidProbe(f"unknown probe {probe!r}; valid: {TRAJECTORY_PROBES}")
    out = []
    for n in family.sizes:
        op, seq = family.generator(n)
        if probe == "bessel_bound":
            value = frame_bounds(seq).beta
        elif probe == "frame_alpha":
            value = frame_bounds(seq).alpha
        else:
            value = weak_aframe_bound(seq, op).alpha
        out.append((int(n), float(value)))
    return out


def restrict_leading_block(op: OperatorModel, n: int) -> OperatorModel:
    """Leading principal block of an l2-truncation operator (embed check)."""
    from .hilbert import l2_truncation

    m = l2_truncation(n)
    return replace(
        op,
        matrix=op.matrix[:n, :n],
        input_model=m,
        codomain=m,
        domain=None,
        adjoint_domain=None,
        range_basis=None,
    )
