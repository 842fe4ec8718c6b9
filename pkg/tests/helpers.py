"""Random dual-matrix factories with engineered index and existence.

Instances are built in an explicit orthogonal frame

    A = U [[T1, T2], [O, N]] U^T

with T1 well conditioned (singular values in [1, 2]) and N a nilpotent
chain of index exactly m, so rank(A^m) = t and Ind(A) = m by
construction.  The infinitesimal part B is assembled from blocks in the
same frame, which makes the existence conditions easy to hit or miss on
purpose:

* ``existing_dual(...)``: B3 = O and B4 = N X - X N.  The commutator
  telescopes inside sum N^(m-i) B4 N^(i-1), so the dual core-EP,
  dual Drazin and first-order-form conditions all hold.
* ``existing_dual_b3(...)``: B3 is nonzero and B4 solves the block
  existence condition (directly at index 1, by least squares above),
  giving instances whose DCEPGI exists while the first-order form
  Ahat^cep = A^cep - eps A^cep B A^cep fails.
* ``random_dual(...)``: unstructured B; existence is then a
  measure-zero event, giving nonexistence witnesses.
"""

import numpy as np

from dualgi import DualMatrix, DualVector, dcepgi_exists


def orthogonal(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def well_conditioned(rng, t):
    """t x t matrix with singular values drawn from [1, 2]."""
    if t == 0:
        return np.zeros((0, 0))
    sv = rng.uniform(1.0, 2.0, size=t)
    return orthogonal(rng, t) @ np.diag(sv) @ orthogonal(rng, t)


def nilpotent_chain(rng, size, m):
    """size x size nilpotent with nilpotency index exactly m (m <= size,
    or m == 1 with N = O for any size including 0)."""
    nb = np.zeros((size, size))
    for i in range(min(m - 1, size - 1)):
        nb[i, i + 1] = rng.uniform(1.0, 2.0)
    return nb


class Frame:
    """A standard part with its construction frame, for placing the
    infinitesimal part block by block."""

    def __init__(self, rng, n, t, m):
        if t == 0 or t == n or m > n - t:
            raise ValueError(f"need 0 < t < n and m <= n - t, got "
                             f"(n, t, m) = ({n}, {t}, {m})")
        self.n, self.t, self.m = n, t, m
        self.U = orthogonal(rng, n)
        self.T1 = well_conditioned(rng, t)
        self.T2 = rng.standard_normal((t, n - t))
        self.N = nilpotent_chain(rng, n - t, m)
        mid = np.block([[self.T1, self.T2],
                        [np.zeros((n - t, t)), self.N]])
        self.A = self.U @ mid @ self.U.T

    def lift(self, b1, b2, b3, b4):
        return self.U @ np.block([[b1, b2], [b3, b4]]) @ self.U.T

    def random_blocks(self, rng):
        t, s = self.t, self.n - self.t
        return (rng.standard_normal((t, t)), rng.standard_normal((t, s)),
                rng.standard_normal((s, t)), rng.standard_normal((s, s)))


def random_frame(rng, n_max=6, m_max=3):
    """Random frame with 2 <= n <= n_max, index 1..m_max, 0 < t < n."""
    n = int(rng.integers(2, n_max + 1))
    m = int(rng.integers(1, min(m_max, n - 1) + 1))
    t = int(rng.integers(1, n - m + 1)) if m > 1 else int(rng.integers(1, n))
    return Frame(rng, n, t, m)


def random_dual(rng, frame, scale=1.0):
    """Unstructured infinitesimal part (generic nonexistence)."""
    b1, b2, b3, b4 = frame.random_blocks(rng)
    return DualMatrix(frame.A, scale * frame.lift(b1, b2, b3, b4))


def existing_dual(rng, frame):
    """DCEPGI/DDGI exist and the first-order form holds (B3 = O,
    B4 a commutator with N)."""
    b1, b2, _, _ = frame.random_blocks(rng)
    s = frame.n - frame.t
    x = rng.standard_normal((s, s))
    b4 = frame.N @ x - x @ frame.N
    return DualMatrix(frame.A, frame.lift(b1, b2, np.zeros((s, frame.t)), b4))


def _t_tilde(frame):
    acc = np.zeros_like(frame.T2)
    t1_pow = np.eye(frame.t)
    for i in range(frame.m):
        acc += t1_pow @ frame.T2 @ np.linalg.matrix_power(frame.N,
                                                          frame.m - 1 - i)
        t1_pow = t1_pow @ frame.T1
    return acc


def existing_dual_b3(rng, frame):
    """DCEPGI exists with B3 nonzero (first-order form fails whenever
    sum N^(m-i) B3 T1^(i-1) is nonzero, which is generic).

    B4 is chosen so that the block existence condition
    S4 = S3 T1^(-m) Ttilde holds: directly at index 1, by a vectorized
    least-squares solve of the telescoping sum at higher index.
    Returns None when the least-squares system is inconsistent for the
    drawn B3 (the caller should redraw).
    """
    t, s, m = frame.t, frame.n - frame.t, frame.m
    b1, b2, b3, _ = frame.random_blocks(rng)
    t1_inv = np.linalg.inv(frame.T1)
    if m == 1:
        b4 = b3 @ t1_inv @ frame.T2
    else:
        tt = _t_tilde(frame)
        target = np.zeros((s, s))
        n_pow = [np.linalg.matrix_power(frame.N, k) for k in range(m)]
        t1_inv_pow = [np.linalg.matrix_power(t1_inv, k) for k in range(m + 2)]
        for i in range(1, m + 1):
            f = np.zeros_like(frame.T2)
            t1_pow = np.eye(t)
            for j in range(i - 1):
                f += t1_pow @ frame.T2 @ n_pow[i - 2 - j]
                t1_pow = t1_pow @ frame.T1
            target += (n_pow[m - i] @ b3 @ t1_inv_pow[m + 1 - i] @ tt
                       - n_pow[m - i] @ b3 @ f)
        # solve sum N^(m-i) B4 N^(i-1) = target for B4 (column-major vec)
        op = np.zeros((s * s, s * s))
        for i in range(1, m + 1):
            op += np.kron(n_pow[i - 1].T, n_pow[m - i])
        sol, *_ = np.linalg.lstsq(op, target.reshape(-1, order="F"),
                                  rcond=None)
        if np.linalg.norm(op @ sol - target.reshape(-1, order="F")) > 1e-10:
            return None
        b4 = sol.reshape((s, s), order="F")
    ah = DualMatrix(frame.A, frame.lift(b1, b2, b3, b4))
    if not dcepgi_exists(ah).exists:
        return None
    return ah


def mp_existing_dual(rng, frame):
    """DMPGI exists: B = A W + V A."""
    n = frame.n
    w = rng.standard_normal((n, n))
    v = rng.standard_normal((n, n))
    return DualMatrix(frame.A, frame.A @ w + v @ frame.A)


def random_dual_vector(rng, n):
    return DualVector(rng.standard_normal(n), rng.standard_normal(n))
