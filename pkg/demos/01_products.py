"""Multiplying in Ĥ.

Elements are sparse vectors over GF(5) on the symbols a[i] and s[r,n].
Run with ``python demos/01_products.py``.
"""

from hhat import a, mul, parse_element, print_element, s
from hhat.symmetry import F, TAU0, THETA, apply

# two axes multiply into a combination of themselves and one s symbol
x = mul(a(0), a(1))
print("a[0] a[1] =", x)

# axes are idempotent
print("a[5] a[5] =", mul(a(5), a(5)))

# levels outside 3Z carry a single class; s[4,6] is s[1,6]
print(parse_element("s[4,6]"), parse_element("s[2,4]"))

# the class matters at levels 3k, where the axis-by-sigma rule picks up
# a correction term
print("a[1] s[0,3] =", mul(a(1), s(0, 3)))
print("signed:      ", print_element(mul(a(1), s(0, 3)), signed=True))

# the algebra is commutative but not associative
l = mul(mul(a(0), a(1)), a(2))
r = mul(a(0), mul(a(1), a(2)))
print("associator (a0 a1) a2 - a0 (a1 a2) =", l - r)

# a[-1] is already generated by a[0] and a[1]
s01 = mul(a(0), a(1)) + 2 * (a(0) + a(1))
print("a[-1] recovered:", mul(a(0), s01) + 2 * a(0) - a(1) + s01)

# automorphisms: reflection, swap, and the shift theta
for name, m in (("tau0", TAU0), ("f", F), ("theta", THETA)):
    print(f"{name}: a[2] -> {apply(m, a(2))}, s[0,3] -> {apply(m, s(0, 3))}")
