import os
import sys
from fractions import Fraction

import pytest

if "TAMEKERNEL_PYTHONPATH" in os.environ:
    sys.path.insert(0, os.environ["TAMEKERNEL_PYTHONPATH"])

tk = pytest.importorskip("tamekernel")


def bernoulli2_l(f):
    # -B_{2,chi}/2 straight from the definition
    b2 = Fraction(0)
    for a in range(1, f + 1):
        x = Fraction(a, f)
        b2 += tk.kronecker(f, a) * (x * x - x + Fraction(1, 6))
    return -b2 * f / 2


def test_l_values():
    assert tk.l_value(12) == -2
    assert tk.l_value(5) == Fraction(-2, 5)
    assert tk.l_value(28860) == -240480
    for f in (8, 13, 24, 40, 65, 1105):
        assert tk.l_value(f) == bernoulli2_l(f)


def test_imprimitive_routes_agree():
    assert tk.l_imprimitive(5, 65) == Fraction(-28, 5)
    assert tk.l_imprimitive(5, 65, route="euler") == Fraction(-28, 5)
    with pytest.raises(ValueError):
        tk.l_imprimitive(7, 65)


def test_identity_and_classification():
    r = tk.verify_identity(28860)
    assert r["equal"] and r["lhs"] == r["rhs"]
    assert tk.verify_identity(28860, [60, 481])["equal"]
    tag = tk.classify(28860)
    assert tag == {"kind": "Mod83-Case2c", "n": 4, "labeling": [3, 5, 13, 37]}


def test_ranks_and_forms():
    assert tk.form_class_group(-420) == [2, 2, 2]
    assert tk.narrow_ranks(28860)["r4_narrow"] == "0"
    assert tk.r2_k2(28860) == 4


def test_k2():
    assert tk.k2_order(28860) == 480960
    s = tk.k2_structure(28860)
    assert s["structure"] == [2, 2, 2, 8]
    assert s["delta"] == 3
    with pytest.raises(tk.DomainError):
        tk.k2_order(8)


def test_scan():
    rows = tk.scan("thm1-n4", 4 * 26455)
    assert [r["D_over_4"] for r in rows] == [7215, 26455]
    assert rows[1]["neg_L"] == 1997920
