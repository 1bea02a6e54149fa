from fractions import Fraction

import pytest

from fpsoft import (
    FPSoftPoint,
    FPSoftSet,
    a_universal_set,
    alpha_universal_set,
    complement,
    decompose_points,
    empty_set,
    equals,
    intersect_family,
    is_normalized,
    is_subset,
    make_context,
    make_special,
    normalize,
    point_belongs,
    point_qcoincident,
    qcoincident,
    union_family,
    universal_set,
)

CTX = make_context(4, 3)


def fps(pairs):
    return FPSoftSet.of(CTX, pairs)


F_A1 = fps({"e1": ("2/10", ["x1", "x3"]),
            "e2": ("3/10", ["x1", "x4"]),
            "e3": ("4/10", ["x2"])})
F_A2 = fps({"e1": ("2/10", ["x1", "x2", "x3"]),
            "e2": ("5/10", ["x1", "x4"]),
            "e3": ("4/10", ["x1", "x2"])})
F_A3 = fps({"e1": ("7/10", ["x1", "x3"]),
            "e2": ("3/10", ["x1", "x2", "x3", "x4"]),
            "e3": ("9/10", ["x2", "x3"])})


def test_union_and_intersection_pinned_values():
    merged = union_family([F_A2, F_A3])
    assert merged == fps({"e1": ("7/10", ["x1", "x2", "x3"]),
                          "e2": ("5/10", ["x1", "x2", "x3", "x4"]),
                          "e3": ("9/10", ["x1", "x2", "x3"])})
    assert intersect_family([F_A2, F_A3]) == F_A1


def test_complement_is_involutive():
    c = complement(F_A1)
    assert c.grade("e1") == Fraction(8, 10)
    assert c.crisp("e1") == frozenset({"x2", "x4"})
    assert complement(c) == F_A1


def test_subset_and_equality():
    assert is_subset(F_A1, F_A2)
    assert not is_subset(F_A2, F_A1)
    assert is_subset(empty_set(CTX), F_A1)
    assert is_subset(F_A1, universal_set(CTX))
    assert equals(F_A1, fps({"e1": ((2, 10), ["x3", "x1"]),
                             "e2": ((3, 10), ["x4", "x1"]),
                             "e3": ((4, 10), ["x2"])}))


def test_special_sets():
    assert make_special(CTX, "empty") == empty_set(CTX)
    assert make_special(CTX, "universal") == universal_set(CTX)
    au = a_universal_set(CTX, ["e1"])
    assert au.grade("e1") == 1 and au.crisp("e2") == frozenset()
    half = alpha_universal_set(CTX, "1/2")
    assert half.grade("e3") == Fraction(1, 2)
    assert half.crisp("e3") == frozenset(CTX.universe)
    with pytest.raises(ValueError):
        alpha_universal_set(CTX, 0)


def test_normalization_is_a_side_condition():
    odd = fps({"e1": (0, ["x1"]), "e2": (0, []), "e3": (0, [])})
    assert not is_normalized(odd)
    assert normalize(odd) == empty_set(CTX)
    # complement does not preserve the side condition
    saturated = fps({"e1": (1, []), "e2": (1, []), "e3": (1, [])})
    assert is_normalized(saturated)
    assert not is_normalized(complement(saturated))


def test_quasi_coincidence():
    assert qcoincident(F_A2, F_A3)  # crisp parts meet at e1
    low = fps({"e1": ("1/10", []), "e2": (0, []), "e3": (0, [])})
    assert not qcoincident(low, low)
    assert not qcoincident(F_A1, complement(F_A1))


def test_points():
    pt = FPSoftPoint.of(CTX, "e3", "7/10", ["x2"])
    assert point_belongs(pt, F_A3)
    assert not point_belongs(pt, F_A1)  # 7/10 > 4/10
    assert point_qcoincident(pt, F_A3)  # 7/10 + 9/10 > 1
    assert pt.as_set().grade("e3") == Fraction(7, 10)


def test_decompose_points_round_trip():
    pts = decompose_points(F_A1)
    rebuilt = union_family([p.as_set() for p in pts])
    assert rebuilt == F_A1
    with pytest.raises(ValueError):
        decompose_points(empty_set(CTX))
