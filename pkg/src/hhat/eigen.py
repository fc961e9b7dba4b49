"""Eigenvectors of ``ad(a[0])``, eigendecomposition and fusion-law checks.

The eigenvalues of ``ad(a[0])`` are 1, 0, 2 and -2; in GF(5) the last
one is stored as 3 (``-2 = 1/2 = 3``).  Every element splits level by
level: for each ``n >= 1`` the block spanned by ``a[n], a[-n]`` and the
``s[.,n]`` symbols has the eigenbasis ``u_n, v_n, w_n`` (plus ``ubar_n,
wbar_n`` when ``3 | n``), each carrying a multiple of ``a[0]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np

from . import linalg
from .core import ZERO, Axis, Element, P, a, combine, s
from .product import mul
from .quotient import Window

BETA = 3  # -2 == 1/2 in GF(5)
LABELS = {1: "1", 0: "0", 2: "2", BETA: "-2"}


def _check_index(i):
    if i < 0:
        raise ValueError("index must be nonnegative")
    return i


def c_vec(j: int) -> Element:
    j = _check_index(j)
    return combine([(-2, a(0)), (1, a(-j)), (1, a(j))])


def u_vec(i: int) -> Element:
    return c_vec(i) + 2 * s(0, i)


def v_vec(i: int) -> Element:
    return c_vec(i) - s(0, i)


def w_vec(i: int) -> Element:
    _check_index(i)
    return a(i) - a(-i)


def sum_classes(n: int) -> Element:
    return s(0, n) + s(1, n) + s(2, n)


def ubar_vec(i: int) -> Element:
    return c_vec(i) - sum_classes(i)


def wbar_vec(i: int) -> Element:
    _check_index(i)
    return s(1, i) - s(2, i)


def _pair(f, i, j):
    return combine([(-2, f(i)), (-2, f(j)), (1, f(abs(i - j))), (1, f(i + j))])


def c2_vec(i: int, j: int) -> Element:
    return _pair(c_vec, i, j)


def u2_vec(i: int, j: int) -> Element:
    return _pair(u_vec, i, j)


def v2_vec(i: int, j: int) -> Element:
    return _pair(v_vec, i, j)


def sigma2_vec(i: int, j: int) -> Element:
    d, e = abs(i - j), i + j
    return s(0, i) + s(0, j) + s(-i, d) + s(i, d) + s(-i, e) + s(i, e)


_ONE = {"u": u_vec, "v": v_vec, "w": w_vec, "ubar": ubar_vec, "wbar": wbar_vec, "c": c_vec}
_TWO = {"c2": c2_vec, "sigma2": sigma2_vec, "u2": u2_vec, "v2": v2_vec}
KINDS = tuple(_ONE) + tuple(_TWO)


def named(kind: str, i: int, j: int | None = None) -> Element:
    """Distinguished vector by name, e.g. ``named("u", 3)`` or
    ``named("sigma2", 3, 6)``."""
    if kind in _ONE:
        if j is not None:
            raise ValueError(f"{kind} takes one index")
        return _ONE[kind](i)
    if kind in _TWO:
        if j is None:
            raise ValueError(f"{kind} takes two indices")
        return _TWO[kind](i, j)
    raise ValueError(f"unknown vector kind {kind!r}")


# ---------------------------------------------------------------------------
# decomposition

# columns: coordinates of u, v, w (, ubar, wbar) on a[n], a[-n], s[0,n] (, s[1,n], s[2,n])
_SMALL = np.array([[1, 1, 1], [1, 1, -1], [2, -1, 0]]) % P
_LARGE = np.array(
    [
        [1, 1, 1, 1, 0],
        [1, 1, -1, 1, 0],
        [2, -1, 0, -1, 0],
        [0, 0, 0, -1, 1],
        [0, 0, 0, -1, -1],
    ]
) % P
_SMALL_INV = linalg.inverse(_SMALL)
_LARGE_INV = linalg.inverse(_LARGE)


@dataclass(frozen=True)
class EigenDecomposition:
    lam: int
    comp0: Element
    comp2: Element
    comp_b: Element

    def components(self) -> dict:
        return {1: self.lam, 0: self.comp0, 2: self.comp2, BETA: self.comp_b}

    def nonzero(self) -> set:
        """Eigenvalues (as GF(5) residues) with a nonzero component."""
        out = {1} if self.lam else set()
        out |= {e for e, c in ((0, self.comp0), (2, self.comp2), (BETA, self.comp_b)) if c}
        return out

    def reassemble(self) -> Element:
        return combine([(self.lam, a(0)), (1, self.comp0), (1, self.comp2), (1, self.comp_b)])


def _by_level(x: Element) -> tuple[int, dict]:
    x0 = 0
    levels: dict = {}
    for b, c in x.items():
        if type(b) is Axis:
            if b.i == 0:
                x0 = c
                continue
            n = abs(b.i)
            slot = 0 if b.i > 0 else 1
        else:
            n = b.n
            slot = 2 + b.r
        levels.setdefault(n, [0, 0, 0, 0, 0])[slot] = c
    return x0, levels


def decompose(x: Element) -> EigenDecomposition:
    lam, levels = _by_level(x)
    parts0, parts2, partsb = [], [], []
    for n in sorted(levels):
        coords = levels[n]
        if n % 3:
            A, B, C = (_SMALL_INV @ np.array(coords[:3])) % P
            U = Wb = 0
        else:
            A, B, C, U, Wb = (_LARGE_INV @ np.array(coords)) % P
        A, B, C, U, Wb = int(A), int(B), int(C), int(U), int(Wb)
        # every u, v, ubar carries -2 a[0]
        lam += 2 * (A + B + U)
        parts0 += [(A, u_vec(n)), (U, ubar_vec(n))]
        parts2.append((B, v_vec(n)))
        partsb += [(C, w_vec(n)), (Wb, wbar_vec(n))]
    return EigenDecomposition(lam % P, combine(parts0), combine(parts2), combine(partsb))


def lambda_of(x: Element) -> int:
    return decompose(x).lam


def project(x: Element, eigenvalue: int) -> Element:
    """Component of ``x`` in the given eigenspace (1 gives ``lam*a[0]``)."""
    d = decompose(x)
    e = eigenvalue % P
    if e == 1:
        return d.lam * a(0)
    return {0: d.comp0, 2: d.comp2, BETA: d.comp_b}[e]


# ---------------------------------------------------------------------------
# checks

# allowed product eigenvalues for each unordered pair of eigenvalues
FUSION = {
    (0, 0): {0},
    (0, 2): {2},
    (0, BETA): {BETA},
    (2, 2): {0, 1},
    (2, BETA): {BETA},
    (BETA, BETA): {0, 1, 2},
}


def eigenvectors(window: int) -> list:
    """``(label, eigenvalue, vector)`` for the eigenbasis up to ``window``."""
    out = []
    for i in range(1, window + 1):
        out += [(f"u[{i}]", 0, u_vec(i)), (f"v[{i}]", 2, v_vec(i)), (f"w[{i}]", BETA, w_vec(i))]
        if i % 3 == 0:
            out += [(f"ubar[{i}]", 0, ubar_vec(i)), (f"wbar[{i}]", BETA, wbar_vec(i))]
    return out


@dataclass
class Report:
    name: str
    passed: bool
    window: int
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"check": self.name, "pass": self.passed, "window": self.window,
             "violations": self.violations}
        d.update(self.details)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def check_fusion(window: int) -> Report:
    """Multiply every pair of eigenbasis vectors of level ``<= window``
    and check that each product lands in the eigenspaces allowed by the
    fusion law."""
    if window < 1:
        raise ValueError("window must be positive")
    vecs = eigenvectors(window)
    violations = []
    count = 0
    for (l1, e1, x), (l2, e2, y) in combinations_with_replacement(vecs, 2):
        key = tuple(sorted((e1, e2), key=lambda e: (e == BETA, e)))
        allowed = FUSION[key]
        got = decompose(mul(x, y)).nonzero()
        count += 1
        bad = got - allowed
        if bad:
            violations.append({
                "left": l1,
                "right": l2,
                "offendingComponent": sorted(LABELS[e] for e in bad),
            })
    return Report("fusion", not violations, window, violations, {"pairs": count})


def ad_matrix(window: int, shift: int = 0) -> np.ndarray:
    """Matrix of ``ad(a[0]) - shift`` from window ``window`` into window
    ``2*window`` (columns are images of the basis vectors)."""
    src = Window(window)
    dst = Window(2 * window)
    M = np.zeros((dst.size, src.size), dtype=np.int64)
    for k, b in enumerate(src.basis):
        img = combine([(1, mul(a(0), Element({b: 1}))), (-shift, Element({b: 1}))])
        M[:, k] = dst.to_vector(img)
    return M % P


def check_primitivity(window: int) -> Report:
    """The 1-eigenspace of ``ad(a[0])`` inside the window is spanned by
    ``a[0]``."""
    if window < 1:
        raise ValueError("window must be positive")
    M = ad_matrix(window, shift=1)
    dim = M.shape[1] - linalg.rank(M)
    src = Window(window)
    contains_a0 = not (M @ src.to_vector(a(0)) % P).any()
    ok = dim == 1 and contains_a0
    violations = [] if ok else [{"dimension": dim}]
    return Report("primitivity", ok, window, violations, {"dimension": dim})


__all__ = [
    "BETA", "EigenDecomposition", "FUSION", "KINDS", "Report", "ZERO",
    "check_fusion", "check_primitivity", "decompose", "eigenvectors",
    "lambda_of", "named", "project",
]
