"""The commutative nonassociative product of Ĥ.

Basis products follow the seven defining rules; ``mul`` extends them
bilinearly.  Class-pair forms not written out explicitly (``(1,1)``,
``(2,2)`` and the mixed pairs in either order) are obtained from the
written ones by the class shift ``r -> r+1`` and by swapping the two
levels, which leaves every right-hand side unchanged.
"""

from __future__ import annotations

from functools import lru_cache

from .core import ZERO, Axis, BasisSymbol, Element, P, Sigma, accumulate

# (-1) * t for t = 1, 2 mod 3; 0 * t = 0
STAR = {(-1, 1): -1, (-1, 2): 1, (0, 0): 0, (0, 1): 0, (0, 2): 0}


def star(sign: int, t: int) -> int:
    return STAR[(sign, t % 3)]


def _axis_axis(i: int, j: int) -> Element:
    return accumulate([(-2, None, i), (-2, None, j), (1, i, abs(i - j))])


def _axis_sigma(i: int, r: int, j: int) -> Element:
    delta = 1 if (i - r) % 3 == 0 else 0
    k = star(delta - 1, i - r)
    return accumulate(
        [
            (-2, None, i),
            (1, None, i - j),
            (1, None, i + j),
            (-1, r, j),
            (-k, r - 1, j),
            (k, r + 1, j),
        ]
    )


def _all_classes(c: int, n: int):
    return [(c, 0, n), (c, 1, n), (c, 2, n)]


def _sigma_sigma(r: int, i: int, t: int, j: int) -> Element:
    d, e = abs(i - j), i + j
    if i % 3 or j % 3:
        return accumulate(
            [(2, r, i), (2, t, j)] + _all_classes(-2, d) + _all_classes(-2, e)
        )
    if r == t:
        return accumulate([(2, r, i), (2, r, j), (-1, r, d), (-1, r, e)])
    m = 3 - r - t  # the remaining class enters with a minus sign

    def pattern(c, n):
        return [(c, r, n), (c, t, n), (-c, m, n)]

    return accumulate(pattern(2, i) + pattern(2, j) + pattern(-1, d) + pattern(-1, e))


@lru_cache(maxsize=1 << 16)
def mul_basis(b1: BasisSymbol, b2: BasisSymbol) -> Element:
    """Product of two canonical basis symbols."""
    if type(b1) is Axis:
        if type(b2) is Axis:
            return _axis_axis(b1.i, b2.i)
        return _axis_sigma(b1.i, b2.r, b2.n)
    if type(b2) is Axis:
        return _axis_sigma(b2.i, b1.r, b1.n)
    return _sigma_sigma(b1.r, b1.n, b2.r, b2.n)


def mul(x: Element, y: Element) -> Element:
    if not x or not y:
        return ZERO
    out: dict = {}
    for b1, c1 in x.items():
        for b2, c2 in y.items():
            c = c1 * c2
            for b, v in mul_basis(b1, b2).items():
                out[b] = out.get(b, 0) + c * v
    return Element._trusted({b: v % P for b, v in out.items() if v % P})
