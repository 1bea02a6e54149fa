from fractions import Fraction

import pytest

from fpsoft import (
    FPSoftMapping,
    FPSoftSet,
    classify,
    image,
    make_context,
    preimage,
)
from fpsoft.model import Context

SRC = Context(("x1", "x2", "x3"), ("e1", "e2"))
TGT = Context(("y1", "y2", "y3"), ("k1", "k2"))

M = FPSoftMapping.of(
    SRC, TGT,
    u={"x1": "y2", "x2": "y1", "x3": "y3"},
    p={"e1": "k2", "e2": "k1"},
)

G_S = FPSoftSet.of(TGT, {"k1": ("2/10", ["y1", "y2"]),
                         "k2": ("3/10", ["y1", "y3"])})
F_A = FPSoftSet.of(SRC, {"e1": ("3/10", ["x2", "x3"]),
                         "e2": ("2/10", ["x1", "x2"])})


def test_preimage_pinned_value():
    assert preimage(M, G_S) == F_A


def test_image_pinned_value():
    img = image(M, F_A)
    # p sends e1 to k2 and e2 to k1; u relabels the crisp parts
    assert img == FPSoftSet.of(TGT, {"k1": ("2/10", ["y1", "y2"]),
                                     "k2": ("3/10", ["y1", "y3"])})


def test_image_empty_fiber():
    narrow_src = Context(("x1",), ("e1",))
    m = FPSoftMapping.of(narrow_src, TGT, u={"x1": "y1"}, p={"e1": "k1"})
    fa = FPSoftSet.of(narrow_src, {"e1": ("9/10", ["x1"])})
    img = image(m, fa)
    assert img.grade("k2") == 0 and img.crisp("k2") == frozenset()
    assert img.grade("k1") == Fraction(9, 10)
    assert img.crisp("k1") == frozenset({"y1"})


def test_classify():
    kind = classify(M)
    assert kind.injective and kind.surjective and not kind.constant
    const = FPSoftMapping.of(
        SRC, TGT,
        u={"x1": "y2", "x2": "y2", "x3": "y2"},
        p={"e1": "k1", "e2": "k1"},
    )
    kind = classify(const)
    assert kind.constant and not kind.injective and not kind.surjective


def test_mapping_validation():
    with pytest.raises(ValueError):
        FPSoftMapping.of(SRC, TGT, u={"x1": "y1"}, p={"e1": "k1", "e2": "k1"})
    with pytest.raises(ValueError):
        FPSoftMapping.of(SRC, TGT,
                         u={"x1": "y1", "x2": "y1", "x3": "bogus"},
                         p={"e1": "k1", "e2": "k1"})


def test_context_guard():
    other = make_context(2, 2)
    fa = FPSoftSet.of(other, {"e1": (0, []), "e2": (0, [])})
    with pytest.raises(ValueError):
        image(M, fa)
