from fractions import Fraction

import pytest

from fpsoft import (
    CarrierBoundError,
    LatticeSpec,
    empty_set,
    indiscrete_topology,
    make_context,
    universal_set,
    validate_topology,
)


def test_carrier_counts_match_formula():
    assert LatticeSpec(make_context(1, 1), 1).carrier_size == 4
    assert LatticeSpec(make_context(2, 1), 1).carrier_size == 8
    assert LatticeSpec(make_context(2, 2), 2).carrier_size == 144
    for spec in (LatticeSpec(make_context(1, 1), 1),
                 LatticeSpec(make_context(2, 2), 2)):
        sets = list(spec.enumerate_sets())
        assert len(sets) == spec.carrier_size
        assert len(set(sets)) == spec.carrier_size


def test_enumeration_order_is_grade_major():
    spec = LatticeSpec(make_context(1, 1), 1)
    sets = list(spec.enumerate_sets())
    shapes = [(f.grade("e1"), f.crisp("e1")) for f in sets]
    assert shapes == [
        (Fraction(0), frozenset()),
        (Fraction(0), frozenset({"x1"})),
        (Fraction(1), frozenset()),
        (Fraction(1), frozenset({"x1"})),
    ]


def test_enumerate_points():
    spec = LatticeSpec(make_context(1, 1), 2)
    pts = list(spec.enumerate_points())
    # grades 1/2 and 1, two crisp parts, one parameter
    assert len(pts) == 4
    assert all(pt.alpha > 0 for pt in pts)


def test_enumerate_topologies():
    ctx = make_context(1, 1)
    spec = LatticeSpec(ctx, 1)
    topologies = list(spec.enumerate_topologies())
    # regression count for the 4-set carrier
    assert len(topologies) == 4
    opens = {t.opens for t in topologies}
    assert indiscrete_topology(ctx).opens in opens
    discrete = validate_topology(ctx, spec.enumerate_sets())
    assert discrete.opens in opens
    assert all(empty_set(ctx) in t.opens and universal_set(ctx) in t.opens
               for t in topologies)


def test_carrier_bound():
    with pytest.raises(CarrierBoundError):
        LatticeSpec(make_context(8, 4), 9)
    with pytest.raises(ValueError):
        LatticeSpec(make_context(1, 1), 0)
