"""The adjoint action of a[0]: eigenvectors, decomposition, fusion law."""

import time

from hhat import a, decompose, mul
from hhat.eigen import check_fusion, check_primitivity, u_vec, v_vec, w_vec, wbar_vec

print("u_2 =", u_vec(2))
print("a0 u_2 =", mul(a(0), u_vec(2)))
print("a0 v_2 - 2 v_2 =", mul(a(0), v_vec(2)) - 2 * v_vec(2))
print("a0 w_2 - 3 w_2 =", mul(a(0), w_vec(2)) - 3 * w_vec(2))
print("a0 wbar_6 =", mul(a(0), wbar_vec(6)), " (3 = -2 in GF(5))")

x = a(3) + 2 * a(-1)
d = decompose(x)
print("\ndecompose", x)
print("  lambda:", d.lam)
print("  0-part:", d.comp0)
print("  2-part:", d.comp2)
print(" -2-part:", d.comp_b)
print("  reassembles:", d.reassemble() == x)

# products of eigenvectors land only where the fusion table allows
for W in (4, 8, 12):
    t = time.perf_counter()
    rep = check_fusion(W)
    print(f"fusion, window {W}: {rep.details['pairs']} pairs, pass={rep.passed} "
          f"({time.perf_counter() - t:.2f}s)")

rep = check_primitivity(16)
print("1-eigenspace dimension inside window 16:", rep.details["dimension"])
