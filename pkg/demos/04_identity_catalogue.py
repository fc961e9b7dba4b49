"""Checking the identity catalogue and seeing where it breaks.

Several identities hold only after the three classes at each level 3k
are identified.  Each report says how many instances failed and whether
every failure disappears modulo the Highwater ideal.
"""

from hhat.core import s
from hhat.eigen import c2_vec, c_vec
from hhat.product import mul
from hhat.verify import check_all, highwater_collapse

for rep in check_all(10):
    d = rep.to_dict()
    failing = {k: v["failed"] for k, v in d["parts"].items() if v["failed"]}
    print(f"{d['identity']:14s} pass={d['pass']!s:5s} checked={d['checked']:5d} "
          f"failing={failing or '-'} modHighwater={d['holdsModuloHighwater']}")

# a concrete counterexample, and its image in the Highwater quotient
lhs, rhs = mul(c_vec(1), s(1, 3)), c2_vec(1, 3)
print("\nc_1 s[1,3] - c_{1,3} =", lhs - rhs)
print("after identifying classes:", highwater_collapse(lhs - rhs))
