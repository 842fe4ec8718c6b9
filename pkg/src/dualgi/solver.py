"""Solutions of inconsistent dual linear systems via the DCEPGI.

For Ahat xhat = bhat with an index-m standard part, the surrogate
system

    Ahat^(m+1) xhat = Ahat^(2m) (Ahat^m)^dagger bhat

is consistent whenever the DCEPGI and DDGI exist, with general solution
xhat = Ahat^cep bhat + (I - Ahat^D Ahat) yhat.  A second result gives
Ahat^cep bhat as the unique in-range solution of
Ahat Ahat^cep xhat = Ahat^cep bhat.
"""

from dataclasses import dataclass

import numpy as np

from .dual import DualMatrix, DualVector, dual_power
from .errors import DimensionError, HypothesisError, InverseNotExistError
from .inverses import dcepgi, dcepgi_exists, ddgi_exists, dmpgi, _eff_index, _rel
from .realkernel import DEFAULT_TOL
from .relations import _column_membership_residual, _stacked, \
    first_order_form_report

__all__ = ["SolutionReport", "solve_general", "solve_unique_in_range"]


@dataclass(frozen=True)
class SolutionReport:
    """Particular solution and homogeneous projector of the surrogate
    system, with its substitution residual."""

    particular: DualVector
    homogeneous_projector: DualMatrix
    residual: float
    tolerance: float

    def solution(self, yhat):
        """particular + projector @ yhat, a solution for any dual yhat."""
        return self.particular + self.homogeneous_projector @ yhat


def _check_rhs(ah, bhat):
    if not ah.is_square:
        raise DimensionError(f"solver needs a square dual matrix, got {ah.shape}")
    if len(bhat) != ah.shape[0]:
        raise DimensionError(f"right-hand side length {len(bhat)} does not "
                             f"match matrix size {ah.shape[0]}")


def solve_general(ah, bhat, tol=DEFAULT_TOL):
    """General solution of Ahat^(m+1) xhat = Ahat^(2m) (Ahat^m)^+ bhat.

    Returns the particular solution Ahat^cep bhat and the projector
    I - Ahat^D Ahat spanning the homogeneous solutions.  Requires both
    the DCEPGI and the DDGI.
    """
    _check_rhs(ah, bhat)
    x_cep = dcepgi(ah, tol)
    d_cert = ddgi_exists(ah, tol)
    if not d_cert.exists:
        raise InverseNotExistError("dual Drazin inverse does not exist "
                                   "(required by the general solution)", d_cert)
    n = ah.shape[0]
    m = _eff_index(ah.std)
    particular = x_cep @ bhat
    projector = DualMatrix.eye(n) - d_cert.witness @ ah

    ahm = dual_power(ah, m)
    lhs = dual_power(ah, m + 1) @ particular
    rhs = dual_power(ah, 2 * m) @ (dmpgi(ahm, tol) @ bhat)
    residual = _rel((lhs - rhs).norm(), bhat.norm())
    return SolutionReport(particular=particular,
                          homogeneous_projector=projector,
                          residual=residual, tolerance=tol)


def solve_unique_in_range(ah, bhat, tol=DEFAULT_TOL):
    """Unique solution of Ahat Ahat^cep xhat = Ahat^cep bhat inside the
    dual range of Ahat^m, namely Ahat^cep bhat.

    Requires the first-order form Ahat^cep = A^cep - eps A^cep B A^cep;
    membership in the dual range and the equation residual are
    verified before returning.
    """
    _check_rhs(ah, bhat)
    report = first_order_form_report(ah, tol)
    holds, res = report.conditions["first_order_form"]
    if not holds:
        raise HypothesisError(
            f"first-order form does not hold (residual {res:.3e})")
    x_cep = dcepgi(ah, tol)
    xhat = x_cep @ bhat
    m = _eff_index(ah.std)
    ahm = dual_power(ah, m)

    member = _column_membership_residual(
        np.concatenate([xhat.std, xhat.inf])[:, None], _stacked(ahm))
    if member > tol:
        raise HypothesisError(
            f"solution fails dual-range membership (residual {member:.3e})")
    eq_res = _rel((ah @ (x_cep @ xhat) - x_cep @ bhat).norm(), bhat.norm())
    if eq_res > tol:
        raise HypothesisError(
            f"solution fails the defining equation (residual {eq_res:.3e})")
    return xhat
