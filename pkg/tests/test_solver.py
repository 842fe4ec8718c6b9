"""Dual linear system solver built on the DCEPGI."""

import numpy as np
import pytest

from dualgi import (DualMatrix, DualVector, dcepgi, dmpgi, dual_power,
                    solve_general, solve_unique_in_range)
from dualgi.errors import DimensionError, HypothesisError, InverseNotExistError
from dualgi.inverses import _eff_index
from helpers import (existing_dual, existing_dual_b3, random_dual,
                     random_dual_vector, random_frame)

RNG = np.random.default_rng(20240822)


def surrogate_rhs(ah, bhat):
    m = _eff_index(ah.std)
    ahm = dual_power(ah, m)
    return dual_power(ah, 2 * m) @ (dmpgi(ahm) @ bhat)


class TestSolveGeneral:
    def test_particular_solution(self):
        for _ in range(20):
            f = random_frame(RNG)
            ah = existing_dual(RNG, f)
            bhat = random_dual_vector(RNG, f.n)
            sol = solve_general(ah, bhat)
            assert sol.residual < 1e-9
            assert (sol.particular - dcepgi(ah) @ bhat).norm() < 1e-12

    def test_homogeneous_shifts_still_solve(self):
        f = random_frame(RNG)
        ah = existing_dual(RNG, f)
        bhat = random_dual_vector(RNG, f.n)
        sol = solve_general(ah, bhat)
        m = _eff_index(ah.std)
        rhs = surrogate_rhs(ah, bhat)
        for _ in range(10):
            yhat = random_dual_vector(RNG, f.n)
            xh = sol.solution(yhat)
            res = (dual_power(ah, m + 1) @ xh - rhs).norm()
            assert res < 1e-8 * (1 + bhat.norm())

    def test_projector_annihilated_by_power(self):
        f = random_frame(RNG)
        ah = existing_dual(RNG, f)
        sol = solve_general(ah, random_dual_vector(RNG, f.n))
        m = _eff_index(ah.std)
        prod = dual_power(ah, m + 1) @ sol.homogeneous_projector
        assert prod.norm() < 1e-8 * (1 + ah.norm() ** (m + 1))

    def test_invertible_system(self):
        a = RNG.standard_normal((4, 4)) + 5 * np.eye(4)
        ah = DualMatrix(a, RNG.standard_normal((4, 4)))
        bhat = random_dual_vector(RNG, 4)
        sol = solve_general(ah, bhat)
        assert (ah @ sol.particular - bhat).norm() < 1e-9
        assert sol.homogeneous_projector.norm() < 1e-9

    def test_requires_existence(self):
        f = random_frame(RNG)
        with pytest.raises(InverseNotExistError):
            solve_general(random_dual(RNG, f), random_dual_vector(RNG, f.n))

    def test_shape_checks(self):
        f = random_frame(RNG)
        ah = existing_dual(RNG, f)
        with pytest.raises(DimensionError):
            solve_general(ah, random_dual_vector(RNG, f.n + 1))
        with pytest.raises(DimensionError):
            solve_general(DualMatrix(np.zeros((2, 3)), np.zeros((2, 3))),
                          random_dual_vector(RNG, 2))


class TestSolveUniqueInRange:
    def test_solution_properties(self):
        for _ in range(20):
            f = random_frame(RNG)
            ah = existing_dual(RNG, f)
            bhat = random_dual_vector(RNG, f.n)
            xhat = solve_unique_in_range(ah, bhat, tol=1e-8)
            x = dcepgi(ah)
            assert (xhat - x @ bhat).norm() < 1e-12
            assert (ah @ (x @ xhat) - x @ bhat).norm() < 1e-8 \
                * (1 + bhat.norm())

    def test_uniqueness_probe(self):
        # shifting by a nonzero element of the range of Ahat^m breaks
        # the defining equation
        f = random_frame(RNG)
        ah = existing_dual(RNG, f)
        bhat = random_dual_vector(RNG, f.n)
        xhat = solve_unique_in_range(ah, bhat, tol=1e-8)
        x = dcepgi(ah)
        m = _eff_index(ah.std)
        ahm = dual_power(ah, m)
        for _ in range(10):
            z = ahm @ random_dual_vector(RNG, f.n)
            if z.norm() < 1e-6:
                continue
            shifted = xhat + z
            res = (ah @ (x @ shifted) - x @ bhat).norm()
            assert res > 1e-8

    def test_hypothesis_failure_raises(self):
        for _ in range(10):
            ah = existing_dual_b3(RNG, random_frame(RNG))
            if ah is None:
                continue
            try:
                solve_unique_in_range(ah, random_dual_vector(RNG, ah.shape[0]))
            except HypothesisError:
                return
        pytest.skip("no first-order-form violation drawn")

    def test_zero_rhs(self):
        f = random_frame(RNG)
        ah = existing_dual(RNG, f)
        xhat = solve_unique_in_range(ah, DualVector.zeros(f.n), tol=1e-8)
        assert xhat.norm() < 1e-12

    def test_invertible_matches_inverse(self):
        a = RNG.standard_normal((3, 3)) + 4 * np.eye(3)
        ah = DualMatrix(a, RNG.standard_normal((3, 3)))
        bhat = random_dual_vector(RNG, 3)
        xhat = solve_unique_in_range(ah, bhat, tol=1e-7)
        assert (ah @ xhat - bhat).norm() < 1e-8
