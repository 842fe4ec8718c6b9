"""Real-matrix kernel: rank, index, Moore-Penrose, Drazin, core-EP.

Everything the dual layer consumes.  The central object is the
core-EP (Schur-like) decomposition

    A = U [[T1, T2], [O, N]] U^T

with U orthogonal, T1 invertible (t x t, t = rank(A^m), m = Ind(A))
and N nilpotent.  One factorization feeds the Drazin inverse, the
core-EP inverse and all dual formulas built on top of them.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError

__all__ = [
    "DEFAULT_TOL",
    "CoreEPBlocks",
    "numerical_rank",
    "index",
    "moore_penrose",
    "drazin",
    "core_ep_decompose",
    "core_ep_inverse",
]

#: Default relative residual threshold used throughout the package.
DEFAULT_TOL = 1e-10


def _square(a, op):
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"{op} needs a square matrix, got {a.shape}")
    return a


def numerical_rank(a, tol=None):
    """Rank via singular values.

    The default threshold is max(rows, cols) * eps * sigma_max, the
    usual SVD cutoff.  Pass ``tol`` to override with an absolute
    singular-value threshold.
    """
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return 0
    sv = np.linalg.svd(a, compute_uv=False)
    if tol is None:
        tol = max(a.shape) * np.finfo(float).eps * (sv[0] if sv.size else 0.0)
    return int(np.sum(sv > tol))


def _power_rank_tol(a, k):
    """Absolute singular-value threshold for rank(A^k).

    Roundoff in the computed power grows like sigma_max(A)^k, not like
    sigma_max(A^k) (which can be much smaller once nilpotent directions
    die off), so the cutoff must scale with the former.
    """
    sigma = np.linalg.norm(a, 2)
    return max(a.shape) * np.finfo(float).eps * max(sigma, 1e-300) ** k


def index(a, tol=None):
    """Smallest s >= 0 with rank(A^(s+1)) == rank(A^s).

    For A == O this evaluates to 1 (rank(A^0) = n > 0 = rank(A)),
    which is also what the downstream dual formulas need.
    """
    a = _square(a, "index")
    n = a.shape[0]
    prev_rank = n  # rank(A^0)
    p = np.eye(n)
    for s in range(n + 1):
        p = p @ a
        r = numerical_rank(p, tol if tol is not None
                           else _power_rank_tol(a, s + 1))
        if r == prev_rank:
            return s
        prev_rank = r
    return n  # not reachable: rank strictly decreases until it stabilizes


def moore_penrose(a):
    """Moore-Penrose inverse (the unique four-Penrose-equations solution)."""
    return np.linalg.pinv(np.asarray(a, dtype=float))


@dataclass(frozen=True)
class CoreEPBlocks:
    """Core-EP decomposition data A = U [[T1, T2], [O, N]] U^T.

    t = rank(A^m) and m = Ind(A).  U is orthogonal, T1 invertible,
    N nilpotent with N^max(m,1) = O.  U is not unique; only the
    reconstructed quantities are.
    """

    U: np.ndarray
    T1: np.ndarray
    T2: np.ndarray
    N: np.ndarray
    t: int
    m: int

    @property
    def n(self):
        return self.U.shape[0]

    def upper(self):
        """The block triangular middle factor [[T1, T2], [O, N]]."""
        top = np.hstack([self.T1, self.T2])
        bottom = np.hstack([np.zeros((self.n - self.t, self.t)), self.N])
        return np.vstack([top, bottom])

    def reconstruct(self):
        return self.U @ self.upper() @ self.U.T

    def split_blocks(self, b):
        """Partition U^T B U into (B1, B2, B3, B4) conformally with
        (T1, T2, O, N)."""
        b = np.asarray(b, dtype=float)
        if b.shape != (self.n, self.n):
            raise DimensionError(f"expected {(self.n, self.n)}, got {b.shape}")
        w = self.U.T @ b @ self.U
        t = self.t
        return w[:t, :t], w[:t, t:], w[t:, :t], w[t:, t:]

    def assemble(self, m11, m12, m21, m22):
        """U [[m11, m12], [m21, m22]] U^T for conformal blocks."""
        top = np.hstack([m11, m12])
        bottom = np.hstack([m21, m22])
        return self.U @ np.vstack([top, bottom]) @ self.U.T


def core_ep_decompose(a, tol=None, u=None):
    """Core-EP decomposition of a square matrix.

    The orthogonal U is built from an SVD of A^max(m,1): its leading t
    left singular vectors span range(A^m) (an A-invariant subspace),
    the remaining ones complete the basis.  A caller-supplied
    orthogonal ``u`` whose leading t columns span range(A^m) is
    accepted instead, which pins down a particular block frame.
    """
    a = _square(a, "core_ep_decompose")
    n = a.shape[0]
    m = index(a, tol)
    mp = max(m, 1)
    am = np.linalg.matrix_power(a, mp)
    t = numerical_rank(am, tol if tol is not None else _power_rank_tol(a, mp))
    if u is None:
        u, _, _ = np.linalg.svd(am)
    else:
        u = np.asarray(u, dtype=float)
        if u.shape != (n, n):
            raise DimensionError(f"basis must be {n}x{n}, got {u.shape}")
        if not np.allclose(u.T @ u, np.eye(n), atol=1e-10):
            raise ValueError("supplied basis is not orthogonal")
        proj = am @ moore_penrose(am)
        if not np.allclose(proj @ u[:, :t], u[:, :t], atol=1e-8):
            raise ValueError("leading columns of supplied basis do not "
                             "span range(A^m)")
    w = u.T @ a @ u
    t1 = w[:t, :t].copy()
    t2 = w[:t, t:].copy()
    nblock = w[t:, t:].copy()
    return CoreEPBlocks(U=u, T1=t1, T2=t2, N=nblock, t=t, m=m)


def _t_tilde(blocks):
    """Ttilde = sum_{i=0..mp-1} T1^i T2 N^(mp-1-i), the upper-right block
    of A^mp in the U frame (mp = max(m, 1))."""
    t1, t2, nb = blocks.T1, blocks.T2, blocks.N
    mp = max(blocks.m, 1)
    acc = np.zeros_like(t2)
    t1_pow = np.eye(blocks.t)
    for i in range(mp):
        acc += t1_pow @ t2 @ np.linalg.matrix_power(nb, mp - 1 - i)
        t1_pow = t1_pow @ t1
    return acc


def drazin(a, tol=None, blocks=None):
    """Drazin inverse via the core-EP block form.

    A^D = U [[T1^-1, (T1^(m+1))^-1 Ttilde], [O, O]] U^T.
    """
    if blocks is None:
        blocks = core_ep_decompose(a, tol)
    t, n = blocks.t, blocks.n
    if t == 0:
        return np.zeros((n, n))
    t1_inv = np.linalg.inv(blocks.T1)
    mp = max(blocks.m, 1)
    top_right = np.linalg.matrix_power(t1_inv, mp + 1) @ _t_tilde(blocks)
    return blocks.assemble(t1_inv, top_right,
                           np.zeros((n - t, t)), np.zeros((n - t, n - t)))


def core_ep_inverse(a, tol=None, blocks=None):
    """Core-EP inverse A = U [[T1^-1, O], [O, O]] U^T.

    Coincides with A^D A^m (A^m)^dagger (tested, not used as the
    computation route).
    """
    if blocks is None:
        blocks = core_ep_decompose(a, tol)
    t, n = blocks.t, blocks.n
    if t == 0:
        return np.zeros((n, n))
    t1_inv = np.linalg.inv(blocks.T1)
    return blocks.assemble(t1_inv, np.zeros((t, n - t)),
                           np.zeros((n - t, t)), np.zeros((n - t, n - t)))
