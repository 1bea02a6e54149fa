from fractions import Fraction

import pytest

from fpsoft.model import (
    Context,
    ContextMismatchError,
    FuzzyParamSet,
    fuzzy_complement,
    fuzzy_image,
    fuzzy_inf_family,
    fuzzy_preimage,
    fuzzy_sup_family,
    grade,
    same_context,
)

CTX = Context(("x1", "x2", "x3"), ("e1", "e2"))


def test_grade_coercion():
    assert grade("2/10") == Fraction(1, 5)
    assert grade(1) == 1
    assert grade((3, 10)) == Fraction(3, 10)
    assert grade(Fraction(1, 2)) == Fraction(1, 2)


@pytest.mark.parametrize("bad", ["3/2", -1, (7, 5), "x"])
def test_grade_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        grade(bad)


def test_context_validation():
    with pytest.raises(ValueError):
        Context(("x1", "x1"), ("e1",))
    with pytest.raises(ValueError):
        Context(("x1",), ())


def test_masks_round_trip():
    mask = CTX.mask_of(["x3", "x1"])
    assert CTX.symbols_of(mask) == ("x1", "x3")
    assert CTX.full_mask == 0b111
    with pytest.raises(ValueError):
        CTX.mask_of(["x9"])


def test_same_context_mismatch():
    other = Context(("x1",), ("e1",))
    a = FuzzyParamSet.constant(CTX.parameters, 0)
    with pytest.raises(ContextMismatchError):
        same_context(
            type("S", (), {"context": CTX})(),
            type("S", (), {"context": other})(),
        )


def test_fuzzy_lattice_ops():
    a = FuzzyParamSet.of(CTX.parameters, {"e1": "2/10", "e2": "5/10"})
    b = FuzzyParamSet.of(CTX.parameters, {"e1": "7/10", "e2": "3/10"})
    assert fuzzy_sup_family([a, b])("e1") == Fraction(7, 10)
    assert fuzzy_inf_family([a, b])("e2") == Fraction(3, 10)
    assert fuzzy_complement(a)("e1") == Fraction(8, 10)


def test_fuzzy_image_and_preimage():
    source = ("e1", "e2")
    target = ("k1", "k2")
    p = {"e1": "k2", "e2": "k2"}
    a = FuzzyParamSet.of(source, {"e1": "2/10", "e2": "6/10"})
    img = fuzzy_image(a, p, target)
    # k1 has an empty fiber, k2 takes the supremum over its fiber
    assert img("k1") == 0
    assert img("k2") == Fraction(6, 10)
    back = fuzzy_preimage(img, p, source)
    assert back("e1") == Fraction(6, 10)
    assert back("e2") == Fraction(6, 10)
