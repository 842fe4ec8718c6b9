"""Dual generalized inverses with existence certificates.

Implements the MPDGI formula, the dual Moore-Penrose inverse (DMPGI),
the dual Drazin inverse (DDGI), the dual group and dual core inverses,
and the dual core-EP generalized inverse (DCEPGI) together with its
compact product formula and a brute-force linear-system oracle.

Existence is decided numerically: each certificate lists relative
residuals (scaled by 1 + input norm) and the inverse exists exactly
when every listed residual is at or below the tolerance.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .dual import DualMatrix, dual_power, s_matrix
from .errors import DimensionError, InverseNotExistError
from .realkernel import (DEFAULT_TOL, core_ep_decompose, core_ep_inverse,
                         drazin, index, moore_penrose, numerical_rank)

__all__ = [
    "ExistenceCertificate",
    "mpdgi",
    "dmpgi_exists",
    "dmpgi",
    "ddgi_exists",
    "ddgi",
    "dual_group",
    "dcepgi_exists",
    "dcepgi",
    "dcepgi_compact",
    "dcepgi_bruteforce_oracle",
    "dual_core_inverse",
    "penrose_residuals",
    "drazin_residuals",
    "core_ep_residuals",
]


@dataclass(frozen=True)
class ExistenceCertificate:
    """Outcome of an existence test.

    ``residuals`` maps identity names to relative residual norms;
    ``exists`` is true iff every residual is <= ``tolerance``.  When
    the inverse exists, ``witness`` holds it.
    """

    exists: bool
    residuals: dict
    tolerance: float
    witness: Optional[DualMatrix] = None


def _rel(value, scale):
    return float(value) / (1.0 + float(scale))


def _certify(residuals, tol, witness_fn=None):
    exists = all(r <= tol for r in residuals.values())
    witness = witness_fn() if (exists and witness_fn is not None) else None
    return ExistenceCertificate(exists=exists, residuals=residuals,
                                tolerance=tol, witness=witness)


def _require_square(ah, op):
    if not ah.is_square:
        raise DimensionError(f"{op} needs a square dual matrix, got {ah.shape}")


def _eff_index(a, tol=None):
    """Index clamped to >= 1 so the S-matrix and power formulas are
    well formed (invertible A has index 0 but behaves as m = 1)."""
    return max(index(a, tol), 1)


# ---------------------------------------------------------------------------
# identity residual helpers (used by certificates and tests)
# ---------------------------------------------------------------------------

def penrose_residuals(ah, xh):
    """Relative residuals of the four dual Penrose equations."""
    scale = max(ah.norm(), xh.norm())
    ax, xa = ah @ xh, xh @ ah
    return {
        "penrose_1": _rel((ah @ xh @ ah - ah).norm(), scale),
        "penrose_2": _rel((xh @ ah @ xh - xh).norm(), scale),
        "penrose_3": _rel((ax.T - ax).norm(), scale),
        "penrose_4": _rel((xa.T - xa).norm(), scale),
    }


def drazin_residuals(ah, xh, m):
    """Relative residuals of the dual {1^m, 2, 5} identities."""
    scale = max(ah.norm(), xh.norm())
    return {
        "drazin_1m": _rel((xh @ dual_power(ah, m + 1) - dual_power(ah, m)).norm(),
                          scale),
        "drazin_2": _rel((xh @ ah @ xh - xh).norm(), scale),
        "drazin_5": _rel((ah @ xh - xh @ ah).norm(), scale),
    }


def core_ep_residuals(ah, xh, m):
    """Relative residuals of the three dual core-EP conditions
    (AX)^T = AX, AX^2 = X, XA^(m+1) = A^m."""
    scale = max(ah.norm(), xh.norm())
    ax = ah @ xh
    return {
        "cep_symmetry": _rel((ax.T - ax).norm(), scale),
        "cep_outer": _rel((ah @ xh @ xh - xh).norm(), scale),
        "cep_power": _rel((xh @ dual_power(ah, m + 1) - dual_power(ah, m)).norm(),
                          scale),
    }


# ---------------------------------------------------------------------------
# MPDGI and DMPGI
# ---------------------------------------------------------------------------

def mpdgi(ah):
    """Always-defined formula A^dagger - eps A^dagger B A^dagger.

    Not in general the dual Moore-Penrose inverse; see ``dmpgi``.
    """
    ap = moore_penrose(ah.std)
    return DualMatrix(ap, -ap @ ah.inf @ ap)


def dmpgi_exists(ah, tol=DEFAULT_TOL):
    """Existence certificate for the dual Moore-Penrose inverse.

    Verdict from the projector condition (I - A A^+) B (I - A^+ A) = O;
    the augmented-rank test rank([[B, A], [A, O]]) = 2 rank(A) is
    reported alongside as ``rank_gap`` (0 when the two agree).
    """
    a, b = ah.std, ah.inf
    ap = moore_penrose(a)
    m_rows, n_cols = a.shape
    left = np.eye(m_rows) - a @ ap
    right = np.eye(n_cols) - ap @ a
    res = _rel(np.linalg.norm(left @ b @ right), np.linalg.norm(b))
    stacked = np.block([[b, a], [a, np.zeros((m_rows, n_cols))]])
    # rank decisions at the certificate tolerance, not machine eps: the
    # inputs may carry roundoff well above eps (e.g. computed powers)
    cut = tol * max(np.linalg.norm(a, 2), np.linalg.norm(b, 2), 1e-300)
    gap = numerical_rank(stacked, cut) - 2 * numerical_rank(a, cut)
    residuals = {"penrose_projector": res, "rank_gap": float(gap)}
    return _certify(residuals, tol, lambda: _dmpgi_formula(ah, ap))


def _dmpgi_formula(ah, ap=None):
    a, b = ah.std, ah.inf
    if ap is None:
        ap = moore_penrose(a)
    m_rows, n_cols = a.shape
    corr = (-ap @ b @ ap
            + moore_penrose(a.T @ a) @ b.T @ (np.eye(m_rows) - a @ ap)
            + (np.eye(n_cols) - ap @ a) @ b.T @ moore_penrose(a @ a.T))
    return DualMatrix(ap, corr)


def dmpgi(ah, tol=DEFAULT_TOL):
    """Dual Moore-Penrose inverse (all four dual Penrose equations)."""
    cert = dmpgi_exists(ah, tol)
    if not cert.exists:
        raise InverseNotExistError("dual Moore-Penrose inverse does not exist",
                                   cert)
    return cert.witness


# ---------------------------------------------------------------------------
# DDGI and dual group inverse
# ---------------------------------------------------------------------------

def ddgi_exists(ah, tol=DEFAULT_TOL):
    """Existence certificate for the dual Drazin inverse.

    Verdict from (I - A A^D) S (I - A A^D) = O, cross-checked against
    the augmented rank test on [[S, A^m], [A^m, O]] and against the
    existence of the dual MP inverse of Ahat^m.
    """
    _require_square(ah, "ddgi_exists")
    a, b = ah.std, ah.inf
    n = a.shape[0]
    m = _eff_index(a)
    s = s_matrix(a, b, m)
    ad = drazin(a)
    proj = np.eye(n) - a @ ad
    res = _rel(np.linalg.norm(proj @ s @ proj), np.linalg.norm(s))
    am = np.linalg.matrix_power(a, m)
    stacked = np.block([[s, am], [am, np.zeros((n, n))]])
    # one cutoff for both ranks, at the certificate tolerance and scaled
    # to the roundoff floor of the computed power and S-matrix
    cut = tol * max(np.linalg.norm(a, 2) ** m, np.linalg.norm(s, 2), 1e-300)
    gap = numerical_rank(stacked, cut) - 2 * numerical_rank(am, cut)
    power_cert = dmpgi_exists(dual_power(ah, m), tol)
    residuals = {
        "drazin_projector": res,
        "rank_gap": float(gap),
        "power_mp": power_cert.residuals["penrose_projector"],
    }
    return _certify(residuals, tol, lambda: _ddgi_formula(ah, m, ad))


def _ddgi_formula(ah, m, ad):
    a, b = ah.std, ah.inf
    n = a.shape[0]
    proj = np.eye(n) - a @ ad
    corr = -ad @ b @ ad
    a_pow = np.eye(n)
    ad_pow2 = ad @ ad
    for i in range(m):
        corr += ad_pow2 @ b @ a_pow @ proj
        corr += proj @ a_pow @ b @ ad_pow2
        a_pow = a_pow @ a
        ad_pow2 = ad_pow2 @ ad
    return DualMatrix(ad, corr)


def ddgi(ah, tol=DEFAULT_TOL):
    """Dual Drazin inverse (dual {1^m, 2, 5} identities)."""
    cert = ddgi_exists(ah, tol)
    if not cert.exists:
        raise InverseNotExistError("dual Drazin inverse does not exist", cert)
    return cert.witness


def dual_group(ah, tol=DEFAULT_TOL):
    """Dual group inverse: the DDGI specialized to index(A) <= 1."""
    _require_square(ah, "dual_group")
    if index(ah.std) > 1:
        raise DimensionError("dual group inverse needs index(A) <= 1, "
                             f"got {index(ah.std)}")
    return ddgi(ah, tol)


# ---------------------------------------------------------------------------
# DCEPGI
# ---------------------------------------------------------------------------

def _block_condition_sides(blocks, b):
    """The two sides of the block-form existence condition
    S3 T1^(1-m) ... Ttilde vs the S4 sums, computed from the core-EP
    frame.  Both sides live in the (n-t) x (n-t) corner."""
    t1, t2, nb = blocks.T1, blocks.T2, blocks.N
    t = blocks.t
    m = max(blocks.m, 1)
    b1, b2, b3, b4 = blocks.split_blocks(b)
    t1_inv = np.linalg.inv(t1)

    n_pow = [np.eye(nb.shape[0])]
    t1_pow = [np.eye(t)]
    t1_inv_pow = [np.eye(t)]
    for _ in range(m + 2):
        n_pow.append(n_pow[-1] @ nb)
        t1_pow.append(t1_pow[-1] @ t1)
        t1_inv_pow.append(t1_inv_pow[-1] @ t1_inv)

    # Ttilde: upper-right block of A^m in the U frame
    t_tilde = np.zeros_like(t2)
    for i in range(m):
        t_tilde += t1_pow[i] @ t2 @ n_pow[m - 1 - i]

    lhs = np.zeros((nb.shape[0], nb.shape[0]))
    rhs = np.zeros((nb.shape[0], nb.shape[0]))
    for i in range(1, m + 1):
        lhs += n_pow[m - i] @ b3 @ t1_inv_pow[m + 1 - i] @ t_tilde
        f = np.zeros_like(t2)
        for j in range(i - 1):
            f += t1_pow[j] @ t2 @ n_pow[i - 2 - j]
        rhs += n_pow[m - i] @ b3 @ f + n_pow[m - i] @ b4 @ n_pow[i - 1]
    return lhs, rhs


def dcepgi_exists(ah, tol=DEFAULT_TOL):
    """Existence certificate for the dual core-EP generalized inverse.

    Verdict from (I - A^m (A^m)#) S (I - (A^m)# A^m) = O with # the
    core-EP inverse, cross-checked against the equivalent block
    condition in the core-EP frame.
    """
    _require_square(ah, "dcepgi_exists")
    a, b = ah.std, ah.inf
    n = a.shape[0]
    m = _eff_index(a)
    s = s_matrix(a, b, m)
    am = np.linalg.matrix_power(a, m)
    am_cep = core_ep_inverse(am)
    left = np.eye(n) - am @ am_cep
    right = np.eye(n) - am_cep @ am
    res = _rel(np.linalg.norm(left @ s @ right), np.linalg.norm(s))
    blocks = core_ep_decompose(a)
    lhs, rhs = _block_condition_sides(blocks, b)
    res_block = _rel(np.linalg.norm(lhs - rhs), np.linalg.norm(b))
    residuals = {"core_ep_projector": res, "block_condition": res_block}
    return _certify(residuals, tol, lambda: _dcepgi_canonical(ah, blocks))


def _dcepgi_canonical(ah, blocks=None):
    """Canonical block representation of the DCEPGI."""
    a, b = ah.std, ah.inf
    if blocks is None:
        blocks = core_ep_decompose(a)
    t, n = blocks.t, blocks.n
    if t == 0:
        return DualMatrix.zeros(n)
    m = max(blocks.m, 1)
    t1, t2, nb = blocks.T1, blocks.T2, blocks.N
    b1, _, b3, _ = blocks.split_blocks(b)
    t1_inv = np.linalg.inv(t1)
    t1_inv_pow = [np.eye(t)]
    for _ in range(m + 2):
        t1_inv_pow.append(t1_inv_pow[-1] @ t1_inv)
    # K = sum_{i=1..m} N^(m-i) B3 T1^(i-m-2); the companion sum with one
    # less inverse power is K T1.
    k = np.zeros((n - t, t))
    for i in range(1, m + 1):
        k += np.linalg.matrix_power(nb, m - i) @ b3 @ t1_inv_pow[m + 2 - i]
    r11 = -t1_inv @ b1 @ t1_inv - t1_inv @ t2 @ k
    r12 = t1_inv @ (k @ t1).T
    r = blocks.assemble(r11, r12, k, np.zeros((n - t, n - t)))
    x = blocks.assemble(t1_inv, np.zeros((t, n - t)),
                        np.zeros((n - t, t)), np.zeros((n - t, n - t)))
    return DualMatrix(x, r)


def dcepgi(ah, tol=DEFAULT_TOL):
    """Dual core-EP generalized inverse via the canonical block formula.

    Standard part is the real core-EP inverse of A; the infinitesimal
    part solves the defining linear system uniquely.
    """
    cert = dcepgi_exists(ah, tol)
    if not cert.exists:
        raise InverseNotExistError("dual core-EP inverse does not exist", cert)
    return cert.witness


def dcepgi_compact(ah, tol=DEFAULT_TOL):
    """Compact product formula Ahat^D Ahat^m (Ahat^m)^dagger.

    Needs both the DCEPGI and the DDGI to exist; agrees with ``dcepgi``
    whenever both hypotheses hold.
    """
    cep_cert = dcepgi_exists(ah, tol)
    if not cep_cert.exists:
        raise InverseNotExistError("dual core-EP inverse does not exist",
                                   cep_cert)
    d_cert = ddgi_exists(ah, tol)
    if not d_cert.exists:
        raise InverseNotExistError("dual Drazin inverse does not exist "
                                   "(required by the compact formula)", d_cert)
    m = _eff_index(ah.std)
    ahm = dual_power(ah, m)
    return d_cert.witness @ ahm @ dmpgi(ahm, tol)


def _vec(x):
    return x.reshape(-1, order="F")


def _transpose_permutation(n):
    """Permutation matrix P with P vec(X) = vec(X^T) (column-major vec)."""
    p = np.zeros((n * n, n * n))
    for i in range(n):
        for j in range(n):
            p[i * n + j, j * n + i] = 1.0
    return p


def dcepgi_bruteforce_oracle(ah, tol=DEFAULT_TOL):
    """Independent DCEPGI oracle: solve the defining linear system for
    the infinitesimal part R by vectorized least squares.

    The three dual conditions reduce to linear equations in R once the
    standard part is pinned to the real core-EP inverse X:

        (A R + B X)^T = A R + B X
        A X R + A R X - R = -B X^2
        R A^(m+1) = S - X A S - X B A^m

    Returns X + eps R when the least-squares residual is below
    tolerance, else None.  Test-scale only (dense n^2 unknowns).
    """
    _require_square(ah, "dcepgi_bruteforce_oracle")
    a, b = ah.std, ah.inf
    n = a.shape[0]
    m = _eff_index(a)
    x = core_ep_inverse(a)
    s = s_matrix(a, b, m)
    am = np.linalg.matrix_power(a, m)
    eye_n = np.eye(n)
    eye_n2 = np.eye(n * n)
    perm = _transpose_permutation(n)

    m1 = np.kron(eye_n, a) - perm @ np.kron(eye_n, a)
    rhs1 = _vec((b @ x).T - b @ x)
    m2 = np.kron(eye_n, a @ x) + np.kron(x.T, a) - eye_n2
    rhs2 = _vec(-b @ x @ x)
    m3 = np.kron((a @ am).T, eye_n)
    rhs3 = _vec(s - x @ a @ s - x @ b @ am)

    big = np.vstack([m1, m2, m3])
    rhs = np.concatenate([rhs1, rhs2, rhs3])
    sol, *_ = np.linalg.lstsq(big, rhs, rcond=None)
    residual = _rel(np.linalg.norm(big @ sol - rhs), ah.norm())
    if residual > tol:
        return None
    r = sol.reshape((n, n), order="F")
    return DualMatrix(x, r)


def dual_core_inverse(ah, tol=DEFAULT_TOL):
    """Dual core inverse: the DCEPGI at index one.

    Exists iff Ahat is dual-unitarily similar to [[T1hat, T2hat], [O, O]]
    with T1hat dual-invertible, which for index(A) <= 1 is exactly the
    DCEPGI existence condition.
    """
    _require_square(ah, "dual_core_inverse")
    if index(ah.std) > 1:
        raise InverseNotExistError(
            "dual core inverse needs index(A) <= 1; the block form "
            "[[T1, T2], [O, O]] is not attained", None)
    cert = dcepgi_exists(ah, tol)
    if not cert.exists:
        raise InverseNotExistError(
            "dual core inverse does not exist (block form not attained)", cert)
    return cert.witness
