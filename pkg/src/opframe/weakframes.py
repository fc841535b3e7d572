"""Weak frame inequalities and constructive weak duals for densely defined
operators, at finite truncation.

The lower bound quantifies only over the declared adjoint domain V = D(A*):

    alpha = inf { sum_n |inner(f, g_n)|^2 / ||A* f||^2 : f in V, A* f != 0 }.

The infimum is taken over all of V, so components of f in ker(A*) are
minimized out (a Schur complement in factored form, see
:func:`opframe._linalg.pencil_lower_bound`).  The constructive dual follows
the minimum-norm factorization: restrict the analysis operator to V, extend
its adjoint by the full synthesis matrix, and solve A = B* M for the
minimum-norm M.  Strong-expansion failure is reported as a measured
residual, never an exception; only a failed *weak* factorization raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._linalg import (
    adjoint_matrix,
    as_complex_vector,
    hermitize,
    pencil_lower_bound,
    pinv_weighted,
    whiten_matrix,
)
from .errors import (
    DegenerateOperator,
    FactorizationFailed,
    InvalidDimension,
    NotSurjective,
)
from .hilbert import HilbertModel
from .opmodel import OperatorModel, adjoint, pseudo_inverse
from .seqops import FRAME_TOL, FrameBounds, FrameSequence, analysis

PRODUCERS = ("weak_a_dual_thm", "k_dual_thm", "interchange_thm", "canonical", "user")

#: weak factorization residual beyond this (relative) raises FactorizationFailed
FACTORIZATION_TOL = 1e-8

_DEGENERATE_TOL = 1e-14


@dataclass(frozen=True)
class DualSequence:
    """A constructed companion family, tagged with its producing theorem."""

    model: HilbertModel
    vectors: np.ndarray
    producer: str
    certificate_residual: float
    graph_space: bool = False
    bessel_bound: float = float("nan")

    def __post_init__(self):
        if self.producer not in PRODUCERS:
            raise InvalidDimension(f"unknown producer {self.producer!r}")
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[0] != self.model.dim:
            raise InvalidDimension("dual vectors must be model.dim x N")
        object.__setattr__(self, "vectors", v)
        if np.isnan(self.bessel_bound):
            y = self.model.sqrt_weights[:, None] * v
            g = hermitize(y.conj().T @ y)
            top = float(np.linalg.eigvalsh(g)[-1]) if g.size else 0.0
            object.__setattr__(self, "bessel_bound", top)

    @property
    def n_vectors(self) -> int:
        return self.vectors.shape[1]

    def whitened(self) -> np.ndarray:
        return self.model.sqrt_weights[:, None] * self.vectors

    def as_frame_sequence(self) -> FrameSequence:
        return FrameSequence(self.model, self.vectors)


def user_dual(model: HilbertModel, vectors, certificate_residual=float("nan")):
    return DualSequence(model, vectors, "user", certificate_residual)


# -- bound ----------------------------------------------------------------


def _adjoint_on_domain(A: OperatorModel):
    """(whitened A* restricted to V, orthonormal-coordinate map of V)."""
    astar = adjoint(A)
    v = A.adjoint_domain_subspace
    mt = whiten_matrix(astar.matrix, astar.codomain.weights, astar.input_model.weights)
    if v.basis is None:
        return mt, None
    return mt @ (A.codomain.sqrt_weights[:, None] * v.basis), v.basis


def weak_aframe_bound(
    seq: FrameSequence, A: OperatorModel, frame_tol: float = FRAME_TOL
) -> FrameBounds:
    """Optimal weak lower constant over D(A*); beta is diagnostic only.

    beta reports lambda_max of the frame operator restricted to D(A*); a
    weak frame carries no global upper-bound requirement.
    """
    if A.codomain.dim != seq.model.dim:
        raise InvalidDimension("operator codomain must match the sequence model")
    z, v_basis = _adjoint_on_domain(A)  # (d_in x rv) whitened A* on V-coords
    gt = seq.whitened().conj().T  # N x d
    if v_basis is None:
        x = gt
    else:
        x = gt @ (seq.model.sqrt_weights[:, None] * v_basis)
    _, sv, vh = np.linalg.svd(z, full_matrices=False)
    if sv.size == 0 or sv[0] <= _DEGENERATE_TOL:
        raise DegenerateOperator("A* vanishes on its domain")
    q = int(np.sum(sv > 1e-12 * sv[0]))
    b_basis = vh[:q].conj().T  # rv x q
    b_gram = np.diag(sv[:q] ** 2)
    alpha = pencil_lower_bound(x, b_basis, b_gram)
    svals = np.linalg.svd(x, compute_uv=False)
    beta = float(svals[0] ** 2) if svals.size else 0.0
    kind = "weak_a_frame" if alpha > frame_tol else "bessel_only"
    return FrameBounds(alpha, beta, kind)


# -- constructive dual -----------------------------------------------------


def _weak_factorization(seq: FrameSequence, A: OperatorModel, rcond=1e-10):
    """Minimum-norm M with P_V (G M - A) = 0, where V = D(A*).

    Returns (M, strong_residual); raises FactorizationFailed when even the
    projected (weak) equation cannot be met, which signals that the weak
    lower bound was spurious.
    """
    w = seq.model.weights
    v = A.adjoint_domain_subspace
    g = seq.vectors
    a_eff = A.effective_matrix()
    if v.basis is None:
        g_v, a_v = g, a_eff
    else:
        proj = v.basis @ (v.basis.conj().T * w[None, :])
        g_v, a_v = proj @ g, proj @ a_eff
    ones = np.ones(seq.n_vectors)
    m = pinv_weighted(g_v, w, ones, rcond) @ a_v
    wt = np.sqrt(w)[:, None]
    weak_res = np.linalg.norm(wt * (g_v @ m - a_v))
    weak_scale = np.linalg.norm(wt * a_v)
    if weak_res > FACTORIZATION_TOL * max(weak_scale, 1e-300):
        raise FactorizationFailed(
            f"projected factorization residual {weak_res:.3e} exceeds "
            f"{FACTORIZATION_TOL:.1e} * {weak_scale:.3e}"
        )
    strong = np.linalg.norm(wt * (g @ m - a_eff)) / max(
        np.linalg.norm(wt * a_eff), 1e-300
    )
    return m, float(strong)


def weak_a_dual(seq: FrameSequence, A: OperatorModel, rcond=1e-10) -> DualSequence:
    """Construct the Bessel weak dual {t_n} = {M* e_n} of a weak frame."""
    m, _ = _weak_factorization(seq, A, rcond)
    t = adjoint_matrix(m, np.ones(seq.n_vectors), seq.model.weights)  # d x N
    dual = DualSequence(seq.model, t, "weak_a_dual_thm", float("nan"))
    cert = verify_weak_duality(seq, dual, A, trials=100)
    return DualSequence(
        seq.model, t, "weak_a_dual_thm", cert, bessel_bound=dual.bessel_bound
    )


def factorize_synthesis(seq: FrameSequence, A: OperatorModel, rcond=1e-10):
    """Factor A = R Q through coefficient space: R extends synthesis, Q = M.

    Returns (R, Q, residual) with residual the *strong* relative gap
    ||R Q - A|| / ||A||; non-convergent strong expansions show up here as a
    large measured residual while the weak factorization still succeeds.
    """
    m, strong = _weak_factorization(seq, A, rcond)
    from .hilbert import l2_truncation

    coeff_model = l2_truncation(seq.n_vectors, "coefficient space")
    R = OperatorModel(
        seq.vectors, coeff_model, seq.model, name="synthesis extension"
    )
    Q = OperatorModel(m, seq.model, coeff_model, name="coefficient factor")
    return R, Q, strong


# -- verification ----------------------------------------------------------


def _domain_samples(sub, rng, trials):
    """Basis columns of a subspace plus random members, as ambient vectors."""
    d = sub.ambient.dim
    if sub.basis is None:
        basis = np.eye(d, dtype=complex)
        r = d
    else:
        basis = sub.basis
        r = basis.shape[1]
    rand = rng.standard_normal((r, trials)) + 1j * rng.standard_normal((r, trials))
    return np.concatenate([basis, basis @ rand], axis=1) if trials else basis


def verify_weak_duality(
    seq: FrameSequence,
    dual: DualSequence,
    A: OperatorModel,
    trials: int = 100,
    seed: int = 0,
    hs: Optional[np.ndarray] = None,
    us: Optional[np.ndarray] = None,
) -> float:
    """Max normalized residual of the weak duality identity.

    Over sampled h in D(A) and u in D(A*) (domain basis vectors plus
    `trials` random members, unless explicit columns hs/us are supplied):

        |inner(Ah, u) - sum_n inner(h, t_n) inner(g_n, u)|
        --------------------------------------------------
                     (||Ah|| ||u|| + eps)
    """
    rng = np.random.default_rng(seed)
    if hs is None:
        hs = _domain_samples(A.domain_subspace, rng, trials)
    else:
        hs = np.asarray(hs, dtype=complex)
    if us is None:
        us = _domain_samples(A.adjoint_domain_subspace, rng, trials)
    else:
        us = np.asarray(us, dtype=complex).reshape(seq.model.dim, -1)
        us = A.adjoint_domain_subspace.project(us)
    w = seq.model.weights
    wh = np.sqrt(w)
    ah = A.apply_columns(hs)
    lhs = (wh[:, None] * us).conj().T @ (wh[:, None] * ah)  # nu x nh
    ch = dual.whitened().conj().T @ (wh[:, None] * hs)  # N x nh: inner(h, t_n)
    cg = seq.whitened().conj().T @ (wh[:, None] * us)  # N x nu: inner(u, g_n)
    rhs = cg.conj().T @ ch  # sum_n inner(h,t_n) inner(g_n,u)
    n_ah = np.sqrt(np.sum(w[:, None] * np.abs(ah) ** 2, axis=0))
    n_u = np.sqrt(np.sum(w[:, None] * np.abs(us) ** 2, axis=0))
    den = np.outer(n_u, n_ah) + 1e-300
    return float(np.max(np.abs(lhs - rhs) / den))


def adjoint_decomposition(seq: FrameSequence, dual: DualSequence, A: OperatorModel, u):
    """sum_n inner(u, g_n) t_n and its relative error against A* u."""
    v = A.adjoint_domain_subspace
    v.require_member(u, "u")
    u = as_complex_vector(u, seq.model.dim)
    vec = dual.vectors @ analysis(seq, u)
    ref = adjoint(A).apply(u)
    w = seq.model.weights
    num = np.sqrt(np.sum(w * np.abs(vec - ref) ** 2))
    den = np.sqrt(np.sum(w * np.abs(ref) ** 2))
    return vec, float(num / den) if den > 0 else float(num)


def interchange_dual(
    seq: FrameSequence, dual: DualSequence, A: OperatorModel, sigma_tol: float = 1e-8
) -> DualSequence:
    """h_n = (A+)* t_n; reconstructs every u in D(A*) when A is surjective."""
    if A.codomain.dim != seq.model.dim or A.input_model.dim != seq.model.dim:
        raise InvalidDimension("interchange dual expects an endomorphism model")
    at = A.domain_whitened()
    sv = np.linalg.svd(at, compute_uv=False)
    if at.shape[1] < at.shape[0] or sv.size == 0 or sv[-1] <= sigma_tol:
        raise NotSurjective(
            "operator is not surjective onto the codomain "
            f"(sigma_min={sv[-1] if sv.size else 0.0:.3e})"
        )
    h_map = adjoint(pseudo_inverse(A))
    h = h_map.matrix @ dual.vectors
    # certificate: reconstruct the adjoint-domain basis through {h_n}
    sub = A.adjoint_domain_subspace
    basis = np.eye(seq.model.dim, dtype=complex) if sub.basis is None else sub.basis
    coeffs = seq.whitened().conj().T @ (seq.model.sqrt_weights[:, None] * basis)
    rec = h @ coeffs
    w = seq.model.weights
    errs = np.sqrt(np.sum(w[:, None] * np.abs(rec - basis) ** 2, axis=0))
    norms = np.sqrt(np.sum(w[:, None] * np.abs(basis) ** 2, axis=0))
    cert = float(np.max(errs / norms))
    return DualSequence(seq.model, h, "interchange_thm", cert)
