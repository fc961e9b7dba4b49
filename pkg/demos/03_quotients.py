"""Windowed quotients: the Highwater algebra and 6A2.

Ĥ is infinite dimensional, so ideals are computed inside a window and
reported with a flag saying whether products left the window.
"""

from hhat import a, s
from hhat.quotient import Window, preset_6a2, preset_highwater, quotient_product

print("window sizes:", {W: Window(W).size for W in (3, 6, 9, 12)})

for W in (3, 9, 12, 18):
    span, dim = preset_highwater(W)
    print(f"highwater W={W:2d}: rank {span.rank:2d}, quotient dim {dim}, "
          f"truncationLoss {span.truncation_loss}")

span, _ = preset_highwater(9)
print("s[1,3] = s[0,3] in the quotient:", span.reduce(s(1, 3) - s(0, 3)).is_zero())

print()
for W in (6, 12, 18, 24):
    span, dim = preset_6a2(W)
    print(f"6A2 W={W:2d}: quotient dim {dim}")

span, _ = preset_6a2(12)
print("a[6] = a[0] in 6A2:", span.reduce(a(6) - a(0)).is_zero())
# coset representatives are written on the non-pivot symbols, which sit at
# the top of the window because pivots are chosen left to right
print("a[0] a[1] mod the ideal:", quotient_product(span, a(0), a(1)))
