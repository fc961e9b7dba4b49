"""Scalars of GF(5), canonical basis symbols and sparse elements.

Elements are finitely supported linear combinations of the basis
symbols ``a[i]`` (axes, ``i`` any integer) and ``s[r,n]`` (``r`` a
residue mod 3, ``n >= 1``).  For ``n`` not divisible by 3 the three
classes ``s[0,n] = s[1,n] = s[2,n]`` coincide and are stored as
``s[0,n]``; ``s[r,0]`` is the zero element.

Coefficients are stored as plain ints in ``{1, 2, 3, 4}``.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, NamedTuple, Union

P = 5
_INV = (None, 1, 3, 2, 4)


class Scalar:
    """An element of the prime field with five elements."""

    __slots__ = ("value",)

    def __init__(self, value: int = 0):
        object.__setattr__(self, "value", int(value) % P)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Scalar(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Scalar(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Scalar(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Scalar(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.value)

    def inv(self) -> "Scalar":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in GF(5)")
        return Scalar(_INV[self.value])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * Scalar(o).inv()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value == o % P

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Scalar({self.value})"


def inv(c: int) -> int:
    c %= P
    if c == 0:
        raise ZeroDivisionError("0 has no inverse in GF(5)")
    return _INV[c]


class Axis(NamedTuple):
    i: int

    def __str__(self):
        return f"a[{self.i}]"


class Sigma(NamedTuple):
    r: int
    n: int

    def __str__(self):
        return f"s[{self.r},{self.n}]"


BasisSymbol = Union[Axis, Sigma]


def canon_symbol(r: int, n: int) -> Sigma | None:
    """Canonical form of ``s[r,n]``; ``None`` stands for the zero element."""
    if n < 0:
        raise ValueError(f"level must be nonnegative, got {n}")
    if n == 0:
        return None
    if n % 3:
        return Sigma(0, n)
    return Sigma(r % 3, n)


def sort_key(b: BasisSymbol):
    """Axes by index, then sigma symbols by (level, class)."""
    if type(b) is Axis:
        return (0, b.i, 0)
    return (1, b.n, b.r)


class Element:
    """Immutable sparse vector of Ĥ over GF(5).

    Supports ``+``, ``-``, scalar ``*`` with ints or :class:`Scalar`,
    and algebra ``*`` with another element (delegated to
    :func:`hhat.product.mul`).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[BasisSymbol, int] | None = None):
        clean = {}
        if terms:
            for b, c in terms.items():
                c = int(c) % P
                if c:
                    clean[b] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, terms: dict) -> "Element":
        # terms already reduced, nonzero, canonical
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def coeff(self, b: BasisSymbol) -> int:
        return self._terms.get(b, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self._terms == other._terms
        if isinstance(other, int) and other % P == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other):
        if not isinstance(other, Element):
            if isinstance(other, int) and other % P == 0:
                return self
            return NotImplemented
        return add(self, other)

    def __radd__(self, other):
        # allows sum(...)
        if isinstance(other, int) and other % P == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return scale(-1, self)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return combine(((1, self), (-1, other)))

    def __mul__(self, other):
        if isinstance(other, Element):
            from . import product

            return product.mul(self, other)
        if isinstance(other, (int, Scalar)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return scale(other, self)
        return NotImplemented

    def __str__(self):
        return print_element(self)

    def __repr__(self):
        return f"Element({print_element(self)!r})"


ZERO = Element()


def a(i: int) -> Element:
    return Element._trusted({Axis(i): 1})


def s(r: int, n: int) -> Element:
    b = canon_symbol(r, n)
    return ZERO if b is None else Element._trusted({b: 1})


def basis_element(b: BasisSymbol) -> Element:
    return Element._trusted({b: 1})


def add(x: Element, y: Element) -> Element:
    if not x._terms:
        return y
    if not y._terms:
        return x
    out = dict(x._terms)
    for b, c in y._terms.items():
        v = (out.get(b, 0) + c) % P
        if v:
            out[b] = v
        else:
            out.pop(b, None)
    return Element._trusted(out)


def scale(c, x: Element) -> Element:
    c = int(c) % P
    if c == 0:
        return ZERO
    if c == 1:
        return x
    return Element._trusted({b: v * c % P for b, v in x._terms.items()})


def combine(pairs: Iterable[tuple[int, Element]]) -> Element:
    """Linear combination ``sum(c * x for c, x in pairs)``."""
    out: dict = {}
    for c, x in pairs:
        c %= P
        if not c:
            continue
        for b, v in x._terms.items():
            out[b] = out.get(b, 0) + c * v
    return Element._trusted({b: v % P for b, v in out.items() if v % P})


def accumulate(terms: Iterable[tuple[int, int | None, int]]) -> Element:
    """Build an element from raw ``(coeff, r, n)`` sigma and axis triples.

    A triple with ``r is None`` denotes the axis ``a[n]``; otherwise it
    denotes ``s[r,n]``, canonicalized (so collapses and the zero level
    are absorbed here).
    """
    out: dict = {}
    for c, r, n in terms:
        if r is None:
            b = Axis(n)
        else:
            b = canon_symbol(r, n)
            if b is None:
                continue
        out[b] = out.get(b, 0) + c
    return Element._trusted({b: v % P for b, v in out.items() if v % P})


# ---------------------------------------------------------------------------
# text format


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, text: str = ""):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos
        self.text = text


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<a>a\[\s*(?P<ai>[+-]?\d+)\s*\])"
    r"|(?P<s>s\[\s*(?P<sr>[+-]?\d+)\s*,\s*(?P<sn>\+?\d+)\s*\])"
    r"|(?P<num>\d+)"
    r"|(?P<op>[-+*])"
    r")"
)


def _tokenize(text: str):
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].isspace():
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            if text.startswith(("a[", "s["), start):
                raise ParseError("malformed basis symbol", start, text)
            raise ParseError(f"unexpected character {text[start]!r}", start, text)
        start = m.start(m.lastgroup)
        if m.lastgroup == "a":
            yield ("basis", Axis(int(m.group("ai"))), start)
        elif m.lastgroup == "s":
            yield ("basis", (int(m.group("sr")), int(m.group("sn"))), start)
        elif m.lastgroup == "num":
            yield ("num", int(m.group("num")), start)
        else:
            yield ("op", m.group("op"), start)
        pos = m.end()
    yield ("end", None, n)


def parse_element(text: str) -> Element:
    """Parse the element grammar, e.g. ``"3*a[5] + 2*s[0,7] - s[1,3]"``.

    Coefficients may carry a sign (``"a[0] + -2*a[1]"``).  The literal
    ``"0"`` denotes the zero element.
    """
    if text.strip() == "0":
        return ZERO
    toks = list(_tokenize(text))
    k = 0
    out: dict = {}

    def term(sign: int):
        nonlocal k
        kind, val, pos = toks[k]
        if kind == "op" and val in "+-":
            sign = -sign if val == "-" else sign
            k += 1
            kind, val, pos = toks[k]
        coeff = 1
        if kind == "num":
            coeff = val
            k += 1
            kind, val, pos = toks[k]
            if kind != "op" or val != "*":
                raise ParseError("expected '*' after coefficient", pos, text)
            k += 1
            kind, val, pos = toks[k]
        if kind != "basis":
            raise ParseError("expected a[...] or s[...]", pos, text)
        k += 1
        if isinstance(val, Axis):
            b = val
        else:
            b = canon_symbol(*val)
            if b is None:
                return
        out[b] = out.get(b, 0) + sign * coeff

    term(1)
    while True:
        kind, val, pos = toks[k]
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            k += 1
            term(1 if val == "+" else -1)
        else:
            raise ParseError("expected '+' or '-'", pos, text)
    return Element(out)


def _fmt_coeff(c: int, signed: bool) -> tuple[str, str]:
    if signed and c > 2:
        return "-", "" if c == 4 else "2*"
    return "+", "" if c == 1 else f"{c}*"


def print_element(x: Element, signed: bool = False) -> str:
    """Canonical text of ``x``.

    With ``signed=True`` the coefficients 3 and 4 are rendered as -2 and
    -1, e.g. ``"a[-1] - a[1]"``.
    """
    if not x._terms:
        return "0"
    parts = []
    for b in sorted(x._terms, key=sort_key):
        sign, co = _fmt_coeff(x._terms[b], signed)
        parts.append((sign, f"{co}{b}"))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
