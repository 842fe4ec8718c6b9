"""Dual core-EP decomposition.

Builds a dual unitary Uhat = U + eps*U0 such that

    Ahat = Uhat [[T1hat, T2hat], [O, Nhat]] Uhat^T

with T1hat's standard part invertible.  U comes from the real core-EP
decomposition of the standard part; the off-diagonal generator of U0
is obtained from the Sylvester equation N U3 + B3 - U3 T1 = O, whose
solution terminates exactly because N is nilpotent and T1 invertible.

The upper-right generator is fixed to U2 = -U3^T, which is what makes
Uhat genuinely dual unitary (Uhat^T Uhat = I + eps O) while still
zeroing the lower-left infinitesimal block.  The diagonal blocks are
unchanged by this choice; only T2hat picks up an extra correction term
when U3 is nonzero.
"""

from dataclasses import dataclass

import numpy as np

from .dual import DualMatrix
from .errors import DimensionError, InverseNotExistError
from .inverses import dcepgi_exists
from .realkernel import DEFAULT_TOL, core_ep_decompose

__all__ = [
    "DualCoreEPDecomposition",
    "DualCNSplit",
    "dual_core_ep_decompose",
    "dual_cn_split",
    "dcepgi_from_decomposition",
]


@dataclass(frozen=True)
class DualCoreEPDecomposition:
    """Dual unitary Uhat and blocks of Uhat^T Ahat Uhat.

    ``canonical`` records whether the side conditions T2 U3 = O and
    U3 T2 = O hold, in which case T1hat = T1 + eps B1 and
    Nhat = N + eps B4 exactly.
    """

    U_hat: DualMatrix
    T1_hat: DualMatrix
    T2_hat: DualMatrix
    N_hat: DualMatrix
    U3: np.ndarray
    canonical: bool
    t: int
    m: int

    @property
    def n(self):
        return self.U_hat.shape[0]

    def middle(self):
        """The dual block factor [[T1hat, T2hat], [O, Nhat]]."""
        t, n = self.t, self.n

        def stack(part_t1, part_t2, part_n):
            top = np.hstack([part_t1, part_t2])
            bottom = np.hstack([np.zeros((n - t, t)), part_n])
            return np.vstack([top, bottom])

        return DualMatrix(
            stack(self.T1_hat.std, self.T2_hat.std, self.N_hat.std),
            stack(self.T1_hat.inf, self.T2_hat.inf, self.N_hat.inf))

    def reconstruct(self):
        return self.U_hat @ self.middle() @ self.U_hat.T

    def core_part(self):
        """Uhat [[T1hat, T2hat], [O, O]] Uhat^T."""
        t, n = self.t, self.n
        zero = DualMatrix.zeros(n - t, n - t)
        trimmed = DualCoreEPDecomposition(
            self.U_hat, self.T1_hat, self.T2_hat, zero, self.U3,
            self.canonical, self.t, self.m)
        return trimmed.reconstruct()

    def nilpotent_part(self):
        """Uhat [[O, O], [O, Nhat]] Uhat^T."""
        t = self.t
        zero_t1 = DualMatrix.zeros(t, t)
        zero_t2 = DualMatrix.zeros(t, self.n - t)
        trimmed = DualCoreEPDecomposition(
            self.U_hat, zero_t1, zero_t2, self.N_hat, self.U3,
            self.canonical, self.t, self.m)
        return trimmed.reconstruct()


@dataclass(frozen=True)
class DualCNSplit:
    """Additive split Ahat = core + nilpotent with core = Ahat X Ahat
    for X the DCEPGI."""

    core: DualMatrix
    nilpotent: DualMatrix


def dual_core_ep_decompose(ah, tol=DEFAULT_TOL, u=None):
    """Dual core-EP decomposition of a square dual matrix.

    Pass ``u`` to pin the real orthogonal frame (useful for matching a
    hand-picked basis); otherwise it comes from an SVD of A^m.
    """
    if not ah.is_square:
        raise DimensionError(f"dual_core_ep_decompose needs a square dual "
                             f"matrix, got {ah.shape}")
    a, b = ah.std, ah.inf
    blocks = core_ep_decompose(a, u=u)
    t, n = blocks.t, blocks.n
    m = max(blocks.m, 1)
    t1, t2, nb = blocks.T1, blocks.T2, blocks.N
    b1, b2, b3, b4 = blocks.split_blocks(b)

    # U3 = sum_{i=0..m-1} N^i B3 T1^-(i+1): the unique solution of
    # N U3 + B3 - U3 T1 = O (T1 invertible, N nilpotent).
    t1_inv = np.linalg.inv(t1) if t else np.zeros((0, 0))
    u3 = np.zeros((n - t, t))
    n_pow = np.eye(n - t)
    t1_inv_pow = t1_inv
    for _ in range(m):
        u3 += n_pow @ b3 @ t1_inv_pow
        n_pow = n_pow @ nb
        t1_inv_pow = t1_inv_pow @ t1_inv

    u0 = blocks.U @ np.block([[np.zeros((t, t)), -u3.T],
                              [u3, np.zeros((n - t, n - t))]])
    u_hat = DualMatrix(blocks.U, u0)

    t1_hat = DualMatrix(t1, t2 @ u3 + b1)
    t2_hat = DualMatrix(t2, b2 + u3.T @ nb - t1 @ u3.T)
    n_hat = DualMatrix(nb, b4 - u3 @ t2)
    scale = 1.0 + np.linalg.norm(b)
    canonical = bool(np.linalg.norm(t2 @ u3) <= tol * scale
                     and np.linalg.norm(u3 @ t2) <= tol * scale)
    return DualCoreEPDecomposition(U_hat=u_hat, T1_hat=t1_hat, T2_hat=t2_hat,
                                   N_hat=n_hat, U3=u3, canonical=canonical,
                                   t=t, m=blocks.m)


def dual_cn_split(ah, tol=DEFAULT_TOL):
    """Split Ahat into dual core and dual nilpotent parts.

    core = Ahat Ahat^cep Ahat and nilpotent = Ahat - core; requires the
    DCEPGI to exist.  The split is unique and agrees with the block
    split of the dual core-EP decomposition when the decomposition is
    canonical.
    """
    cert = dcepgi_exists(ah, tol)
    if not cert.exists:
        raise InverseNotExistError(
            "dual core-nilpotent split needs the DCEPGI to exist", cert)
    core = ah @ cert.witness @ ah
    return DualCNSplit(core=core, nilpotent=ah - core)


def dcepgi_from_decomposition(d, tol=DEFAULT_TOL):
    """Recover the DCEPGI from a canonical dual core-EP decomposition:
    Uhat [[T1hat^-1, O], [O, O]] Uhat^T with the dual inverse
    T1hat^-1 = T1^-1 - eps T1^-1 B1hat T1^-1."""
    if not d.canonical:
        raise InverseNotExistError(
            "decomposition is not canonical (T2 U3 or U3 T2 nonzero)", None)
    t, n = d.t, d.n
    if t == 0:
        return DualMatrix.zeros(n)
    t1 = d.T1_hat.std
    sv = np.linalg.svd(t1, compute_uv=False)
    if sv[-1] <= tol * (1.0 + sv[0]):
        raise InverseNotExistError("T1hat standard part is singular", None)
    t1_inv = np.linalg.inv(t1)
    t1_hat_inv = DualMatrix(t1_inv, -t1_inv @ d.T1_hat.inf @ t1_inv)
    zero_t2 = DualMatrix.zeros(t, n - t)
    zero_n = DualMatrix.zeros(n - t, n - t)
    trimmed = DualCoreEPDecomposition(d.U_hat, t1_hat_inv, zero_t2, zero_n,
                                      d.U3, d.canonical, d.t, d.m)
    return trimmed.reconstruct()
