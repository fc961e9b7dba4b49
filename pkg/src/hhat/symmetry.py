"""Infinite dihedral group of automorphisms of Ĥ.

A map ``(eps, t)`` sends ``a[k] -> a[eps*k + t]`` and
``s[r,n] -> s[eps*r + t, n]``.  Maps compose left to right, matching
the exponent notation ``x^(gh) = (x^g)^h``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Axis, Element, canon_symbol


@dataclass(frozen=True)
class DihedralMap:
    epsilon: int = 1
    shift: int = 0

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")

    def on_symbol(self, b):
        if type(b) is Axis:
            return Axis(self.epsilon * b.i + self.shift)
        return canon_symbol(self.epsilon * b.r + self.shift, b.n)

    def __call__(self, x: Element) -> Element:
        return apply(self, x)

    def then(self, other: "DihedralMap") -> "DihedralMap":
        return compose(self, other)

    def inverse(self) -> "DihedralMap":
        # eps*(eps*k + t) + t' = k  =>  t' = -eps*t
        return DihedralMap(self.epsilon, -self.epsilon * self.shift)

    def __pow__(self, n: int) -> "DihedralMap":
        base = self if n >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(n)):
            out = compose(out, base)
        return out


IDENTITY = DihedralMap(1, 0)
TAU0 = DihedralMap(-1, 0)
F = DihedralMap(-1, 1)
THETA = DihedralMap(1, 1)


def compose(m1: DihedralMap, m2: DihedralMap) -> DihedralMap:
    """Apply ``m1`` first, then ``m2``."""
    return DihedralMap(m1.epsilon * m2.epsilon, m2.epsilon * m1.shift + m2.shift)


def sigma(i: int) -> DihedralMap:
    """The involution swapping ``a[0]`` and ``a[i]``."""
    return DihedralMap(-1, i)


def miyamoto(j: int) -> DihedralMap:
    """Miyamoto involution of the axis ``a[j]``: ``a[k] -> a[2j - k]``."""
    return DihedralMap(-1, 2 * j)


tau = miyamoto


def apply(m: DihedralMap, x: Element) -> Element:
    out = {}
    for b, c in x.items():
        out[m.on_symbol(b)] = c
    return Element._trusted(out)


def parse_map(name: str) -> DihedralMap:
    """Parse ``tau0``, ``f``, ``theta``, ``sigma:<i>`` or ``tau:<j>``."""
    fixed = {"tau0": TAU0, "f": F, "theta": THETA, "id": IDENTITY}
    if name in fixed:
        return fixed[name]
    head, _, arg = name.partition(":")
    if head in ("sigma", "tau") and arg:
        try:
            k = int(arg)
        except ValueError:
            raise ValueError(f"bad map index in {name!r}") from None
        return sigma(k) if head == "sigma" else miyamoto(k)
    raise ValueError(f"unknown map {name!r}")
