"""Solving inconsistent dual linear systems with the DCEPGI.

When Ahat is singular, Ahat xhat = bhat is usually inconsistent.  The
DCEPGI gives a principled substitute: the surrogate system

    Ahat^(m+1) xhat = Ahat^(2m) (Ahat^m)^+ bhat

is consistent whenever the DCEPGI and the dual Drazin inverse exist,
its general solution is Ahat^cep bhat plus anything in the range of
I - Ahat^D Ahat, and under the first-order form Ahat^cep bhat is the
unique solution of Ahat Ahat^cep xhat = Ahat^cep bhat lying in the
dual range of Ahat^m.
"""

import numpy as np

from dualgi import (DualMatrix, DualVector, dual_power, solve_general,
                    solve_unique_in_range)

rng = np.random.default_rng(3)
q, _ = np.linalg.qr(rng.standard_normal((4, 4)))
t1 = np.array([[1.5, 0.3], [0.0, 2.0]])
t2 = rng.standard_normal((2, 2))
nil = np.array([[0.0, 1.0], [0.0, 0.0]])
a = q @ np.block([[t1, t2], [np.zeros((2, 2)), nil]]) @ q.T
b = q @ np.block([[rng.standard_normal((2, 4))], [np.zeros((2, 4))]]) @ q.T
ah = DualMatrix(a, b)
bhat = DualVector(rng.standard_normal(4), rng.standard_normal(4))

print("The original system is inconsistent: least-squares residual of")
print("the standard part alone is",
      np.linalg.norm(a @ np.linalg.lstsq(a, bhat.std, rcond=None)[0]
                     - bhat.std))

report = solve_general(ah, bhat)
print("\nsurrogate-system residual of the particular solution:",
      report.residual)

# Every shift by the homogeneous projector still solves the surrogate.
m = 2
lhs_op = dual_power(ah, m + 1)
rhs = lhs_op @ report.particular
for k in range(3):
    y = DualVector(rng.standard_normal(4), rng.standard_normal(4))
    x = report.solution(y)
    print(f"  shifted solution {k}: residual "
          f"{(lhs_op @ x - rhs).norm():.3e}")

x_unique = solve_unique_in_range(ah, bhat)
print("\nunique in-range solution equals the particular one:",
      (x_unique - report.particular).norm())
print("std part:", x_unique.std)
print("inf part:", x_unique.inf)
