"""Identity catalogue checks.

Some catalogued identities are false in Ĥ on part of their range and
only hold after the three classes at levels in 3Z are identified.  The
tests below pin down exactly where, so that any change to the product
(or to the checkers) shows up as a changed failure pattern.
"""

import json

import pytest

from hhat.core import ZERO, Axis, a, s
from hhat.eigen import c2_vec, c_vec, sum_classes, u2_vec, u_vec, ubar_vec, v2_vec, v_vec
from hhat.product import mul
from hhat.verify import (
    check_all, check_generation, check_products_uv, check_section3,
    check_transition, check_usefulformula, highwater_collapse, run_set,
)

N = 10


def test_highwater_collapse():
    assert highwater_collapse(s(1, 3) - s(2, 3)) == ZERO
    assert highwater_collapse(a(2) + s(2, 6)) == a(2) + s(0, 6)


def test_transition_parts():
    rep = check_transition(12)
    failed = {k for k, v in rep.parts.items() if v["failed"]}
    assert failed == {"(7)", "(7')"}
    assert rep.holds_modulo_highwater
    assert rep.first_failure["params"] == {"i": 1, "j": 3, "r": 1}


def test_transition_seven_failure_pattern():
    # c_i s[r,j] = c_{i,j} fails exactly when i is off 3Z, j on 3Z and r != 0
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            for r in range(3):
                lhs, rhs = mul(c_vec(i), s(r, j)), c2_vec(i, j)
                expected = not (i % 3 and j % 3 == 0 and r)
                assert (lhs == rhs) is expected, (i, j, r)
                assert highwater_collapse(lhs - rhs) == ZERO


def test_usefulformula_failure_pattern():
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            d, e = abs(i - j), i + j
            lhs = mul(s(0, i), sum_classes(j))
            rhs = s(0, i) + s(0, j) + 2 * (s(0, d) + s(0, e))
            assert (lhs == rhs) is (i % 3 == 0 or i == j), (i, j)
            diff = lhs - rhs
            # the defect is a combination of 2 s[0,n] - s[1,n] - s[2,n]
            for b, c in diff.items():
                assert b.n % 3 == 0
                assert diff.coeff(type(b)(0, b.n)) == (-2 * diff.coeff(type(b)(1, b.n))) % 5
    assert check_usefulformula(N).parts["(2)"]["failed"] == 0


def test_products_uv_parts():
    rep = check_products_uv(N)
    fails = {k: v["failed"] for k, v in rep.parts.items()}
    assert fails == {"(1)": 9, "(2)": 0, "(3)": 9, "(4)": 63, "(5)": 0}
    assert rep.holds_modulo_highwater


def test_products_uv_on_3z_levels():
    # items (1), (3) fail only for i, j both in 3Z, where the gap terms drop
    for i in range(3, N + 1, 3):
        for j in range(3, N + 1, 3):
            assert mul(u_vec(i), u_vec(j)) == -u2_vec(i, j)
            assert mul(v_vec(i), v_vec(j)) == -2 * u2_vec(i, j)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            good = mul(u_vec(i), ubar_vec(j)) == -u2_vec(i, j)
            assert good is (i % 3 == 0 or i == j)
            assert mul(u_vec(i), v_vec(j)) == v2_vec(i, j)


def test_section3_and_generation_pass():
    assert check_section3(8).passed
    rep = check_generation(8)
    assert rep.passed and rep.checked == 3


def test_m2_example():
    r, j, k = 1, 3, 2
    l = r + j * k
    assert mul(a(l), s(r, j)) == -2 * a(l) + a(r + j * (k - 1)) + a(r + j * (k + 1)) - s(r, j)


def test_m2_printed_class_disagrees():
    # with s[0,j] in place of s[r,j] the same instance is false
    r, j, k = 1, 3, 2
    l = r + j * k
    assert mul(a(l), s(r, j)) != -2 * a(l) + a(r + j * (k - 1)) + a(r + j * (k + 1)) - s(0, j)


def test_check_all_smallest_range():
    reports = check_all(1)
    assert [r.name for r in reports] == ["transition", "usefulformula", "products_uv", "section3", "generation"]
    assert all(r.passed for r in reports)


def test_mutation_hook(monkeypatch):
    import hhat.product as product

    real = product.mul_basis

    def corrupted(b1, b2):
        out = real(b1, b2)
        if type(b1) is Axis and type(b2) is Axis and b1 != b2:
            out = out + a(b1.i)
        return out

    monkeypatch.setattr(product, "mul_basis", corrupted)
    assert not all(r.passed for r in check_all(1))


def test_report_json_deterministic():
    d1 = [r.to_dict() for r in run_set("uv", 4)]
    d2 = [r.to_dict() for r in run_set("uv", 4)]
    assert json.dumps(d1) == json.dumps(d2)
    assert set(d1[0]) == {"identity", "range", "pass", "checked", "firstFailure", "parts",
                          "holdsModuloHighwater"}


def test_run_set_unknown():
    with pytest.raises(ValueError):
        run_set("nope")
