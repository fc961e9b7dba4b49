"""Windowed linear algebra in Ĥ: spans, ideal closure and quotients.

Ĥ is infinite dimensional, so all linear algebra happens inside a
window ``W``: the axes ``a[i]`` with ``|i| <= W`` and the symbols
``s[r,n]`` with ``n <= W``.  Coordinates follow the fixed basis order
axes ``a[-W] .. a[W]``, then sigma symbols by ``(n, r)``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import linalg
from .core import Axis, Element, P, Sigma, a, s
from .product import mul, mul_basis
from .symmetry import F, TAU0, apply, compose


class WindowError(ValueError):
    """An element has support outside the window."""


@lru_cache(maxsize=None)
def _basis(W: int) -> tuple:
    axes = [Axis(i) for i in range(-W, W + 1)]
    sig = []
    for n in range(1, W + 1):
        sig.extend(Sigma(r, n) for r in (range(3) if n % 3 == 0 else (0,)))
    return tuple(axes + sig)


@lru_cache(maxsize=None)
def _index(W: int) -> dict:
    return {b: k for k, b in enumerate(_basis(W))}


def in_window(b, W: int) -> bool:
    if type(b) is Axis:
        return abs(b.i) <= W
    return b.n <= W


@dataclass(frozen=True)
class Window:
    W: int

    def __post_init__(self):
        if self.W < 1:
            raise ValueError("window must be positive")

    @property
    def basis(self) -> tuple:
        return _basis(self.W)

    @property
    def size(self) -> int:
        return (2 * self.W + 1) + self.W + 2 * (self.W // 3)

    def contains(self, x: Element) -> bool:
        return all(in_window(b, self.W) for b in x.support())

    def to_vector(self, x: Element) -> np.ndarray:
        idx = _index(self.W)
        v = np.zeros(self.size, dtype=np.int64)
        for b, c in x.items():
            k = idx.get(b)
            if k is None:
                raise WindowError(f"{b} lies outside window {self.W}")
            v[k] = c
        return v

    def from_vector(self, v) -> Element:
        basis = self.basis
        return Element({basis[k]: int(v[k]) for k in np.flatnonzero(v)})


def _as_window(window) -> Window:
    return window if isinstance(window, Window) else Window(int(window))


@dataclass
class WindowSpan:
    """Row-reduced span of elements supported in a window."""

    window: Window
    rows: np.ndarray
    pivots: list
    truncation_loss: bool = False
    _pivot_set: frozenset = field(default=frozenset(), repr=False)

    def __post_init__(self):
        self._pivot_set = frozenset(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def quotient_dim(self) -> int:
        return self.window.size - self.rank

    def elements(self) -> list:
        return [self.window.from_vector(r) for r in self.rows]

    def reduce(self, x: Element) -> Element:
        """Canonical coset representative of ``x`` modulo the span."""
        v = linalg.reduce_vector(self.window.to_vector(x), self.rows, self.pivots)
        return self.window.from_vector(v)

    def contains(self, x: Element) -> bool:
        return self.reduce(x).is_zero()

    def same_span(self, other: "WindowSpan") -> bool:
        return (
            self.window == other.window
            and self.pivots == other.pivots
            and np.array_equal(self.rows, other.rows)
        )

    def restrict(self, W: int) -> "WindowSpan":
        """The part of the span supported in the smaller window ``W``."""
        if W > self.window.W:
            raise WindowError("can only restrict to a smaller window")
        small = Window(W)
        inside = [in_window(b, W) for b in self.window.basis]
        keep = [k for k, f in enumerate(inside) if f]
        drop = [k for k, f in enumerate(inside) if not f]
        if not len(self.rows):
            return _span_from_matrix(small, [])
        R, piv = linalg.rref(self.rows[:, drop + keep], ncols=len(drop), keep_rest=True)
        rest = R[len(piv):, len(drop):]
        return _span_from_matrix(small, rest[rest.any(axis=1)])

    def to_dict(self) -> dict:
        return {
            "window": self.window.W,
            "basis": [str(b) for b in self.window.basis],
            "rows": self.rows.tolist(),
            "rank": self.rank,
            "quotientDim": self.quotient_dim,
            "truncationLoss": self.truncation_loss,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["# window", self.window.W, "rank", self.rank,
                    "quotientDim", self.quotient_dim,
                    "truncationLoss", str(self.truncation_loss).lower()])
        w.writerow([str(b) for b in self.window.basis])
        for r in self.rows:
            w.writerow([int(c) for c in r])
        return buf.getvalue()


def _span_from_matrix(window: Window, mat, truncation_loss=False) -> WindowSpan:
    if len(mat) == 0:
        rows = np.zeros((0, window.size), dtype=np.int64)
        return WindowSpan(window, rows, [], truncation_loss)
    R, piv = linalg.rref(mat)
    return WindowSpan(window, R, piv, truncation_loss)


def row_reduce(vectors, window) -> WindowSpan:
    window = _as_window(window)
    vecs = [window.to_vector(x) for x in vectors]
    return _span_from_matrix(window, np.array(vecs, dtype=np.int64).reshape(len(vecs), window.size))


@lru_cache(maxsize=8)
def _structure(W: int):
    """Products of window basis symbols in doubled-window coordinates.

    The doubled window holds every such product.  Its columns put the
    symbols outside ``W`` first, then the window basis in its own order.
    Returns ``(T, n_out)`` with ``T`` of shape ``(N, N, n_out + N)``.
    """
    inner = _basis(W)
    outer = [b for b in _basis(2 * W) if not in_window(b, W)]
    cols = {b: k for k, b in enumerate(outer + list(inner))}
    N, M = len(inner), len(outer) + len(inner)
    T = np.zeros((N, N, M), dtype=np.int64)
    for k1, b1 in enumerate(inner):
        for k2 in range(k1, N):
            for b, c in mul_basis(b1, inner[k2]).items():
                T[k1, k2, cols[b]] = c
                T[k2, k1, cols[b]] = c
    T.setflags(write=False)
    return T, len(outer)


def _inner_part(prods: np.ndarray, n_out: int) -> np.ndarray:
    """Rows spanning ``span(prods)`` intersected with the window."""
    prods = prods[prods.any(axis=1)]
    outside = prods[:, :n_out].any(axis=1)
    inside = prods[~outside, n_out:]
    mixed = prods[outside]
    if len(mixed):
        mixed = np.unique(mixed, axis=0)
        R, piv = linalg.rref(mixed, ncols=n_out, keep_rest=True)
        rest = R[len(piv):, n_out:]
        inside = np.vstack([inside, rest[rest.any(axis=1)]])
    return inside


def _close(span: WindowSpan, step) -> WindowSpan:
    loss = span.truncation_loss
    while span.rank:
        prods, n_out = step(span)
        if prods[:, :n_out].any():
            loss = True
        inside = _inner_part(prods, n_out)
        grown = _span_from_matrix(span.window, np.vstack([span.rows, inside]), loss)
        if grown.rank == span.rank:
            break
        span = grown
    span.truncation_loss = loss
    return span


def ideal_closure(generators, window):
    """Smallest span containing ``generators`` and closed, inside the
    window, under multiplication by every window basis symbol.

    Each round multiplies the reduced rows by every window basis symbol
    and keeps everything in the span of the products that can be written
    without symbols outside the window.  Returns ``(span, truncation_loss)``
    where ``truncation_loss`` records that some product left the window,
    so the span may be smaller than the true ideal's windowed part.
    """
    window = _as_window(window)
    T, n_out = _structure(window.W)
    N = window.size
    TT = T.reshape(N, -1)

    def step(span):
        return (span.rows @ TT % P).reshape(-1, T.shape[2]), n_out

    span = _close(row_reduce(generators, window), step)
    return span, span.truncation_loss


def subalgebra_closure(generators, window, maps=(TAU0, F)):
    """Span generated by ``generators`` under products and the given maps.

    Like :func:`ideal_closure` but multiplies span rows with each other
    instead of with all basis symbols.
    """
    window = _as_window(window)
    T, n_out = _structure(window.W)
    N = window.size
    inner = window.basis
    ext = [b for b in _basis(2 * window.W) if not in_window(b, window.W)] + list(inner)
    ext_index = {b: k for k, b in enumerate(ext)}
    perms = []
    for m in maps:
        perms.append(np.array([ext_index[m.on_symbol(b)] for b in inner]))

    def step(span):
        R = span.rows
        # (x T y) for all row pairs
        xt = np.einsum("ik,kjm->ijm", R, T) % P
        prods = np.einsum("ijm,lj->ilm", xt, R) % P
        prods = prods.reshape(-1, T.shape[2])
        images = []
        for perm in perms:
            img = np.zeros((len(R), T.shape[2]), dtype=np.int64)
            img[:, perm] = R
            images.append(img)
        return np.vstack([prods] + images), n_out

    return _close(row_reduce(generators, window), step)


# ---------------------------------------------------------------------------
# presets


def highwater_generators(W: int) -> list:
    gens = []
    for n in range(3, W + 1, 3):
        gens += [s(0, n) - s(1, n), s(0, n) - s(2, n), s(1, n) - s(2, n)]
    return gens


def preset_highwater(window):
    """Windowed ideal spanned by the class differences at levels ``3k``."""
    window = _as_window(window)
    if window.W < 3:
        span = row_reduce([], window)
        return span, span.quotient_dim
    span, _ = ideal_closure(highwater_generators(window.W), window)
    return span, span.quotient_dim


def x_hat() -> Element:
    return (
        s(0, 3) - s(0, 1) - s(0, 2)
        + a(-2) + a(-1) + a(1) + a(2)
        + 3 * (a(0) + a(3))
    )


def sixa2_generators(W: int, axes_from: int | None = None) -> list:
    """Linear generators of the 6A2 ideal inside window ``W``.

    ``axes_from`` restricts the axis differences ``a[i] - a[i-6]`` to
    ``i >= axes_from``; by default every pair inside the window is used.
    """
    lo = -W + 6 if axes_from is None else axes_from
    gens = [a(i) - a(i - 6) for i in range(lo, W + 1) if -W <= i - 6]
    gens += [s(0, 4) - s(0, 2), s(0, 5) - s(0, 1)]
    gens += [s(0, j) - s(0, j - 6) for j in range(6, W + 1)]
    x = x_hat()
    gens += [x, apply(F, x), apply(compose(F, TAU0), x)]
    return gens


def preset_6a2(window, axes_from: int | None = None):
    window = _as_window(window)
    if window.W < 6:
        raise ValueError("the 6A2 preset needs a window of at least 6")
    span, _ = ideal_closure(sixa2_generators(window.W, axes_from), window)
    return span, span.quotient_dim


PRESETS = {"highwater": preset_highwater, "6a2": preset_6a2}


def quotient_product(span: WindowSpan, x: Element, y: Element) -> Element:
    """Product of the cosets of ``x`` and ``y``, as a reduced representative."""
    W = span.window.W
    if not (span.window.contains(x) and span.window.contains(y)):
        raise WindowError("factors must lie in the window")
    xy = mul(x, y)
    if not span.window.contains(xy):
        raise WindowError(f"product leaves window {W}")
    return span.reduce(xy)
