"""Internal weighted-linear-algebra helpers.

Everything here works in "whitened" coordinates: a model with weight vector w
is mapped to plain l2 by x -> sqrt(w) * x.  Hermitian structure is exact in
those coordinates, so eigensolvers and SVDs keep self-adjointness at machine
precision.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

_RANK_TOL = 1e-12


def as_complex_vector(f, dim):
    from .errors import InvalidDimension

    f = np.asarray(f, dtype=complex).reshape(-1)
    if f.shape[0] != dim:
        raise InvalidDimension(f"expected vector of length {dim}, got {f.shape[0]}")
    return f


def whiten_matrix(matrix, w_out, w_in):
    """W_out^(1/2) M W_in^(-1/2) for weight vectors w_out, w_in."""
    return (np.sqrt(w_out)[:, None] * matrix) / np.sqrt(w_in)[None, :]


def pinv_weighted(matrix, w_out, w_in, rcond=1e-10):
    """Moore-Penrose inverse of M with respect to the weighted inner products.

    Computed through the SVD of the whitened matrix; singular values below
    rcond * sigma_max are treated as zero.
    """
    mt = whiten_matrix(matrix, w_out, w_in)
    pt = np.linalg.pinv(mt, rcond=rcond)
    return (pt / np.sqrt(w_in)[:, None]) * np.sqrt(w_out)[None, :]


def adjoint_matrix(matrix, w_out, w_in):
    """W_in^-1 M^H W_out: the weighted adjoint of M."""
    return (matrix.conj().T * w_out[None, :]) / w_in[:, None]


def hermitize(a):
    return 0.5 * (a + a.conj().T)


def orthonormal_range(mat, rank_tol=_RANK_TOL, scale=None):
    """Orthonormal basis (plain l2) of the column space of mat; may be empty.

    The rank cut is rank_tol * scale with scale defaulting to sigma_max(mat).
    Pass an external scale when mat itself may be numerical noise (e.g. a
    residual that is exactly zero in exact arithmetic).
    """
    if mat.size == 0:
        return np.zeros((mat.shape[0], 0), dtype=complex)
    u, s, _ = np.linalg.svd(mat, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((mat.shape[0], 0), dtype=complex)
    cut = rank_tol * (float(s[0]) if scale is None else float(scale))
    r = int(np.sum(s > cut))
    return u[:, :r]


def pencil_lower_bound(sqrt_s, b_basis, b_gram, rank_tol=_RANK_TOL):
    """Optimal constant alpha = inf <S f, f> / <B f, f> over f with <B f, f> != 0.

    Arguments are given in orthonormal coordinates of the quantifier space V
    (dimension r):

    sqrt_s  : (m, r) array X with S-form = X^H X (a low-rank factor of S|_V)
    b_basis : (r, q) orthonormal basis of supp(B) inside V
    b_gram  : (q, q) Hermitian positive-definite Gram of the B-form on supp(B)

    The infimum allows components of f in ker(B); minimizing them out is a
    Schur complement, realized here in factored form: with f = U c + v,
    v in ker(B),

        min_v ||X (U c + v)||^2 = || P_T_perp (X U) c ||^2,

    where T is the column space of X restricted to ker(B).
    """
    q = b_basis.shape[1]
    if q == 0:
        raise ValueError("empty B support")
    xu = sqrt_s @ b_basis
    # X restricted to ker(B) = X (I - U U^H); its column space is T.  The
    # rank cut is taken relative to X itself: when ker(B) is trivial this
    # difference is pure roundoff and must not produce spurious directions.
    xk = sqrt_s - xu @ b_basis.conj().T
    xscale = np.linalg.svd(sqrt_s, compute_uv=False)[0] if sqrt_s.size else 0.0
    t_basis = orthonormal_range(xk, rank_tol, scale=xscale)
    if t_basis.shape[1]:
        xu = xu - t_basis @ (t_basis.conj().T @ xu)
    s_eff = hermitize(xu.conj().T @ xu)
    vals = scipy.linalg.eigh(s_eff, hermitize(b_gram), eigvals_only=True)
    return float(max(vals[0], 0.0))


def relative_residual(delta, reference, weights):
    num = np.sqrt(np.sum(weights * np.abs(delta) ** 2))
    den = np.sqrt(np.sum(weights * np.abs(reference) ** 2))
    return float(num / den) if den > 0 else float(num)
