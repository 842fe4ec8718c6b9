"""Real-matrix kernel: Moore-Penrose, Drazin and core-EP inverses.

Every dual inverse in this package reduces to one of these when the
infinitesimal part is zero, so we start on plain real matrices.  The
running example has index 2: its core (invertible-on-its-range) part
and its nilpotent part interact, which is exactly what separates the
Drazin and core-EP inverses from the Moore-Penrose inverse.
"""

import numpy as np

from dualgi import (core_ep_decompose, core_ep_inverse, drazin, index,
                    moore_penrose)

a = np.array([
    [2.0, 1.0, 0.0, 3.0],
    [0.0, 1.0, 1.0, -1.0],
    [0.0, 0.0, 0.0, 2.0],
    [0.0, 0.0, 0.0, 0.0],
])

print("A =\n", a)
print("index(A) =", index(a))  # smallest m with rank(A^m) = rank(A^(m+1))

ap = moore_penrose(a)
print("\nMoore-Penrose A^+ satisfies the four Penrose equations:")
print("  ||A A+ A - A||  =", np.linalg.norm(a @ ap @ a - a))
print("  ||(A A+)^T - A A+|| =", np.linalg.norm((a @ ap).T - a @ ap))

ad = drazin(a)
m = index(a)
am = np.linalg.matrix_power(a, m)
print("\nDrazin A^D commutes with A and inverts it past the index:")
print("  ||A A^D - A^D A||     =", np.linalg.norm(a @ ad - ad @ a))
print("  ||A^D A^(m+1) - A^m|| =", np.linalg.norm(ad @ a @ am - am))

a_cep = core_ep_inverse(a)
print("\nCore-EP A^cep blends both: A A^cep is an orthogonal projector")
print("onto the column space of A^m, and A^cep = A^D A^m (A^m)^+:")
p = a @ a_cep
print("  ||P^T - P||, ||P^2 - P|| =",
      np.linalg.norm(p.T - p), np.linalg.norm(p @ p - p))
print("  ||A^cep - A^D A^m (A^m)^+|| =",
      np.linalg.norm(a_cep - ad @ am @ moore_penrose(am)))

blocks = core_ep_decompose(a)
print("\nCore-EP decomposition A = U [[T1, T2], [0, N]] U^T with")
print("T1 invertible (t x t, t = rank(A^m)) and N nilpotent:")
print("  t =", blocks.t, " m =", blocks.m)
print("  T1 =\n", blocks.T1)
print("  N^m =", np.linalg.norm(np.linalg.matrix_power(blocks.N, blocks.m)))
print("  reconstruction error =", np.linalg.norm(blocks.reconstruct() - a))
print("\nIn that frame the core-EP inverse is just [[T1^-1, 0], [0, 0]]:")
x = blocks.assemble(np.linalg.inv(blocks.T1),
                    np.zeros((blocks.t, blocks.n - blocks.t)),
                    np.zeros((blocks.n - blocks.t, blocks.t)),
                    np.zeros((blocks.n - blocks.t, blocks.n - blocks.t)))
print("  ||A^cep - U [[T1^-1, 0], [0, 0]] U^T|| =", np.linalg.norm(a_cep - x))
