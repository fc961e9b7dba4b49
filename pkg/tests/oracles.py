"""Independent brute-force oracles used to pin down derived values.

Nothing here touches numpy or the package's linear algebra; elements are
plain ``{symbol: coeff}`` dicts and elimination is textbook Gauss-Jordan.
"""

from itertools import product as cartesian

from hhat.core import Axis, Sigma
from hhat.product import mul_basis

P = 5


def window_symbols(W):
    syms = [Axis(i) for i in range(-W, W + 1)]
    for n in range(1, W + 1):
        syms += [Sigma(r, n) for r in (range(3) if n % 3 == 0 else (0,))]
    return syms


def in_window(b, W):
    return abs(b.i) <= W if type(b) is Axis else b.n <= W


class Echelon:
    """Row space kept as ``{pivot: row}`` with reduced rows."""

    def __init__(self, order):
        self.order = {b: k for k, b in enumerate(order)}
        self.rows = {}

    def reduce(self, v):
        v = {b: c % P for b, c in v.items() if c % P}
        for piv, row in self.rows.items():
            c = v.get(piv)
            if c:
                for b, d in row.items():
                    v[b] = (v.get(b, 0) - c * d) % P
                v = {b: x for b, x in v.items() if x}
        return v

    def add(self, v):
        v = self.reduce(v)
        if not v:
            return False
        piv = min(v, key=self.order.__getitem__)
        inv = pow(v[piv], P - 2, P)
        v = {b: c * inv % P for b, c in v.items()}
        for p2, row in list(self.rows.items()):
            c = row.get(piv)
            if c:
                new = dict(row)
                for b, d in v.items():
                    new[b] = (new.get(b, 0) - c * d) % P
                self.rows[p2] = {b: x for b, x in new.items() if x}
        self.rows[piv] = v
        return True

    @property
    def rank(self):
        return len(self.rows)


def times(x, b):
    out = {}
    for b1, c in x.items():
        for b2, d in mul_basis(b1, b).items():
            out[b2] = (out.get(b2, 0) + c * d) % P
    return {k: v for k, v in out.items() if v}


def ideal_dim(gens, W):
    """Windowed ideal by the literal rule: keep a product only when its whole
    support lies inside the window.  Returns ``(rank, window size)``."""
    syms = window_symbols(W)
    ech = Echelon(syms)
    for g in gens:
        ech.add(g)
    while True:
        before = ech.rank
        for x, b in cartesian(list(ech.rows.values()), syms):
            y = times(x, b)
            if all(in_window(k, W) for k in y):
                ech.add(y)
        if ech.rank == before:
            break
    return ech.rank, len(syms)


def terms(elem):
    return dict(elem.items())


# ---------------------------------------------------------------------------
# literal transcription of the seven defining rules, case by case


def _sym(r, n):
    """Canonical symbol key, or None for the zero level."""
    if n == 0:
        return None
    if n % 3:
        return Sigma(0, n)
    return Sigma(r % 3, n)


def _acc(out, c, key):
    if key is not None:
        out[key] = (out.get(key, 0) + c) % P


def _clean(out):
    return {k: v for k, v in out.items() if v}


def literal_product(b1, b2):
    out = {}
    if type(b1) is Axis and type(b2) is Axis:
        i, j = b1.i, b2.i
        _acc(out, -2, Axis(i))
        _acc(out, -2, Axis(j))
        _acc(out, 1, _sym(i, abs(i - j)))
        return _clean(out)
    if type(b1) is Sigma and type(b2) is Axis:
        b1, b2 = b2, b1
    if type(b1) is Axis:
        i, r, j = b1.i, b2.r, b2.n
        _acc(out, -2, Axis(i))
        _acc(out, 1, Axis(i - j))
        _acc(out, 1, Axis(i + j))
        _acc(out, -1, _sym(r, j))
        if (i - r) % 3 != 0:
            k = {1: -1, 2: 1}[(i - r) % 3]  # (-1) * (i - r)
            _acc(out, k, _sym(r + 1, j))
            _acc(out, -k, _sym(r - 1, j))
        return _clean(out)
    (r, i), (t, j) = (b1.r, b1.n), (b2.r, b2.n)
    d, e = abs(i - j), i + j
    if i % 3 or j % 3:
        _acc(out, 2, _sym(r, i))
        _acc(out, 2, _sym(t, j))
        for n in (d, e):
            for c in range(3):
                _acc(out, -2, _sym(c, n))
        return _clean(out)
    h, k = i // 3, j // 3
    if r == t:
        # written for class 0; the other diagonal classes by the shift r -> r+1
        for n, c in ((3 * h, 2), (3 * k, 2), (3 * abs(h - k), -1), (3 * (h + k), -1)):
            _acc(out, c, _sym(r, n))
        return _clean(out)
    pair = (r, t) if r < t else (t, r)
    if r > t:
        h, k = k, h
    signs = {(0, 1): (1, 1, -1), (0, 2): (1, -1, 1), (1, 2): (-1, 1, 1)}[pair]
    for n, c in ((3 * h, 2), (3 * k, 2), (3 * abs(h - k), -1), (3 * (h + k), -1)):
        for cls in range(3):
            _acc(out, c * signs[cls], _sym(cls, n))
    return _clean(out)
