import csv
import io
import json
import random

import numpy as np
import pytest

from hhat.core import ZERO, a, basis_element, s
from hhat.product import mul
from hhat.quotient import (
    Window, WindowError, highwater_generators, ideal_closure, preset_6a2,
    preset_highwater, quotient_product, row_reduce, sixa2_generators,
    subalgebra_closure, x_hat,
)
from hhat.symmetry import F, apply
from oracles import ideal_dim, terms, window_symbols


def test_window_basis():
    for W in range(1, 20):
        win = Window(W)
        assert win.size == (2 * W + 1) + W + 2 * (W // 3) == len(win.basis)
        assert list(win.basis) == window_symbols(W)
    with pytest.raises(ValueError):
        Window(0)


def test_vector_roundtrip():
    win = Window(4)
    x = a(-4) + 3 * s(0, 4) + 2 * s(2, 3)
    assert win.from_vector(win.to_vector(x)) == x
    with pytest.raises(WindowError):
        win.to_vector(a(5))


@pytest.mark.parametrize("gens, rank", [
    ([a(1) - a(-1), a(-1) - a(1)], 1),
    ([], 0),
    ([s(0, 3) - s(1, 3), s(1, 3) - s(2, 3), s(0, 3) - s(2, 3)], 2),
])
def test_row_reduce_examples(gens, rank):
    assert row_reduce(gens, 3).rank == rank


def test_rref_invariants():
    span = row_reduce([a(1) + 2 * a(2), 3 * a(2) + s(0, 1), a(-3)], 3)
    R = span.rows
    assert all(R.any(axis=1))
    assert span.pivots == sorted(set(span.pivots))
    for k, p in enumerate(span.pivots):
        assert R[k, p] == 1
        assert np.count_nonzero(R[:, p]) == 1


def test_ideal_closure_examples():
    span, loss = ideal_closure([ZERO], 5)
    assert span.rank == 0
    span, loss = ideal_closure(highwater_generators(9), 9)
    assert span.rank == 6 and loss
    assert span.same_span(row_reduce(highwater_generators(9), 9))
    span, loss = ideal_closure([a(0)], 3)
    assert span.rank == Window(3).size


@pytest.mark.parametrize("W, dim", [(9, 28), (3, 10), (2, Window(2).size), (12, 37)])
def test_highwater_dims(W, dim):
    span, qd = preset_highwater(W)
    assert qd == dim
    assert span.rank == 2 * (W // 3)


@pytest.mark.parametrize("W", [3, 9, 12])
def test_highwater_oracle(W):
    rank, size = ideal_dim([terms(g) for g in highwater_generators(W)], W)
    assert (rank, size - rank) == (preset_highwater(W)[0].rank, preset_highwater(W)[1])


@pytest.mark.parametrize("W", [6, 9, 12, 15])
def test_sixa2_oracle(W):
    # independent elimination with the literal in-window product rule
    rank, size = ideal_dim([terms(g) for g in sixa2_generators(W)], W)
    assert size - rank == 8
    assert preset_6a2(W)[1] == 8


def test_sixa2_stable():
    for W in range(12, 25):
        assert preset_6a2(W)[1] == 8


def test_sixa2_small_window_rejected():
    with pytest.raises(ValueError):
        preset_6a2(5)


def test_sixa2_axes_from_regression():
    for W in (12, 18):
        full, _ = preset_6a2(W)
        restricted, _ = preset_6a2(W, axes_from=3)
        assert full.same_span(restricted)


def test_x_hat():
    assert str(x_hat()) == "a[-2] + a[-1] + 3*a[0] + a[1] + a[2] + 3*a[3] + 4*s[0,1] + 4*s[0,2] + s[0,3]"


def test_generator_order_irrelevant():
    gens = sixa2_generators(12)
    rng = random.Random(7)
    base, _ = ideal_closure(gens, 12)
    for _ in range(3):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert ideal_closure(shuffled, 12)[0].same_span(base)


def test_highwater_monotone():
    ranks = [preset_highwater(W)[0].rank for W in range(1, 19)]
    assert ranks == sorted(ranks)


@pytest.mark.parametrize("W", [9, 12, 15, 18])
def test_highwater_ideal_and_f_invariant(W):
    span, _ = preset_highwater(W)
    win = span.window
    for x in span.elements():
        assert span.contains(apply(F, x))
        for b in win.basis:
            y = mul(x, basis_element(b))
            if win.contains(y):
                assert span.contains(y)


def test_quotient_reduce_examples():
    hw, _ = preset_highwater(9)
    assert hw.reduce(s(1, 3) - s(0, 3)) == ZERO
    six, _ = preset_6a2(12)
    assert six.reduce(a(6) - a(0)) == ZERO
    for span in (hw, six):
        assert quotient_product(span, a(0), a(0)) == span.reduce(a(0))


def test_restrict():
    hw, _ = preset_highwater(12)
    r = hw.restrict(6)
    assert r.window == Window(6) and r.rank == 4
    six, _ = preset_6a2(12)
    small = six.restrict(6)
    assert all(six.contains(x) for x in small.elements())
    with pytest.raises(WindowError):
        hw.restrict(13)


def test_quotient_product_well_defined():
    big, _ = preset_6a2(12)
    ideal6 = big.restrict(6).elements()
    basis = Window(6).basis
    rng = random.Random(11)

    def rand_elem():
        return sum((rng.randrange(1, 5) * basis_element(b) for b in rng.sample(basis, 3)), ZERO)

    def rand_ideal():
        return sum((rng.randrange(5) * v for v in ideal6), ZERO)

    for _ in range(40):
        x, y = rand_elem(), rand_elem()
        assert quotient_product(big, x, y) == quotient_product(big, x + rand_ideal(), y + rand_ideal())


def test_quotient_product_window_errors():
    span, _ = preset_highwater(3)
    with pytest.raises(WindowError):
        quotient_product(span, a(4), a(0))
    with pytest.raises(WindowError):
        quotient_product(span, a(3), a(-3))


def test_subalgebra_closure_full():
    for W in (3, 8):
        assert subalgebra_closure([a(0), a(1)], W).rank == Window(W).size


def test_export_formats():
    span, _ = preset_highwater(6)
    d = json.loads(span.to_json())
    assert set(d) == {"window", "basis", "rows", "rank", "quotientDim", "truncationLoss"}
    assert d["rank"] == 4 and d["quotientDim"] == Window(6).size - 4
    rows = list(csv.reader(io.StringIO(span.to_csv())))
    assert rows[1] == [str(b) for b in Window(6).basis]
    assert len(rows) == 2 + span.rank
    assert span.to_json() == preset_highwater(6)[0].to_json()
