import pytest

from fpsoft import (
    FPSoftMapping,
    FPSoftPoint,
    FPSoftSet,
    OperatorTable,
    alpha_universal_set,
    TopologyAxiomError,
    check_axioms,
    closed_family,
    closure,
    closure_operator_of,
    complement,
    empty_set,
    enriched_for,
    indiscrete_topology,
    induce_from_closure_operator,
    induce_from_interior_operator,
    interior,
    interior_operator_of,
    is_base,
    is_continuous,
    is_qnbd,
    make_context,
    universal_set,
    validate_topology,
)
from fpsoft.topology import OperatorAxiomError, discontinuity_witness


def test_flawed_fixture_fails_union_axiom(example_doc):
    doc = example_doc
    v = check_axioms(doc.context, doc.topology_sets("tau_flawed"))
    assert v is not None
    assert v.axiom == "T3"
    assert v.members == (doc.sets["F_A2"], doc.sets["F_A3"])
    assert v.param == "e3"
    assert v.result == doc.sets["F_A4c"]


def test_corrected_fixture_is_valid(example_doc):
    t = validate_topology(example_doc.context,
                          example_doc.topology_sets("tau_corrected"))
    assert len(t.opens) == 6


def test_missing_special_sets_violate_t1(example_doc):
    v = check_axioms(example_doc.context, [example_doc.sets["F_A1"]])
    assert v is not None and v.axiom == "T1"
    with pytest.raises(TopologyAxiomError):
        validate_topology(example_doc.context, [example_doc.sets["F_A1"]])


@pytest.fixture()
def corrected(example_doc):
    return validate_topology(example_doc.context,
                             example_doc.topology_sets("tau_corrected"))


def test_closure_and_interior_pinned_values(example_doc, corrected):
    fa1 = example_doc.sets["F_A1"]
    assert closure(corrected, fa1) == example_doc.sets["F_univ"]
    assert interior(corrected, complement(fa1)) == example_doc.sets["F_empty"]
    # closed sets are exactly the complements of opens
    assert set(closed_family(corrected)) == {complement(o)
                                             for o in corrected.opens}


def test_qnbd(example_doc, corrected):
    pt = FPSoftPoint.of(example_doc.context, "e3", "7/10", ["x2"])
    assert is_qnbd(corrected, example_doc.sets["F_A3"], pt)
    assert not is_qnbd(corrected, example_doc.sets["F_empty"], pt)


def test_base(example_doc, corrected):
    doc = example_doc
    base = [doc.sets[n] for n in ("F_empty", "F_A1", "F_A2", "F_A3", "F_univ")]
    assert is_base(corrected, base)
    assert not is_base(corrected, [doc.sets["F_empty"]])
    assert is_base(corrected, corrected.opens)
    with pytest.raises(ValueError):
        is_base(corrected, [doc.sets["F_A4"]])  # the flawed variant F_A4 is not open


def test_operator_round_trips():
    ctx = make_context(1, 1)
    identity = OperatorTable.from_function(ctx, 1, lambda f: f)
    discrete = induce_from_closure_operator(identity)
    assert len(discrete.opens) == 4
    assert induce_from_interior_operator(identity) == discrete

    empty, full = empty_set(ctx), universal_set(ctx)
    blunt = OperatorTable.from_function(
        ctx, 1, lambda f: empty if f == empty else full)
    assert induce_from_closure_operator(blunt) == indiscrete_topology(ctx)

    sharp = OperatorTable.from_function(
        ctx, 1, lambda f: full if f == full else empty)
    assert induce_from_interior_operator(sharp) == indiscrete_topology(ctx)

    t = indiscrete_topology(ctx)
    assert induce_from_closure_operator(closure_operator_of(t, 1)) == t
    assert induce_from_interior_operator(interior_operator_of(t, 1)) == t


def test_operator_axiom_violation_is_reported():
    ctx = make_context(1, 1)
    empty, full = empty_set(ctx), universal_set(ctx)
    # sends the universal set below itself, breaking extensiveness
    shrink = OperatorTable.from_function(ctx, 1, lambda f: empty)
    with pytest.raises(OperatorAxiomError):
        induce_from_closure_operator(shrink)


def _smallest_enriched(ctx, q):
    opens = [empty_set(ctx), universal_set(ctx)]
    for num in range(1, q + 1):
        half = alpha_universal_set(ctx, (num, q))
        opens += [half, complement(half)]
    return validate_topology(ctx, opens)


def test_enriched_for():
    ctx = make_context(1, 1)
    # at q=1 enrichment degenerates to the two special sets
    assert enriched_for(indiscrete_topology(ctx), 1)
    assert not enriched_for(indiscrete_topology(ctx), 2)
    assert enriched_for(_smallest_enriched(ctx, 2), 2)


def test_constant_map_needs_representable_preimages():
    """A constant mapping out of an enriched space can still miss: a target
    open with empty crisp part and grade 1 pulls back to a set no
    enrichment supplies."""
    src = make_context(1, 1)
    tgt = make_context(1, 1, "y", "k")
    m = FPSoftMapping.of(src, tgt, u={"x1": "y1"}, p={"e1": "k1"})
    t1 = _smallest_enriched(src, 2)
    assert enriched_for(t1, 2)
    g = FPSoftSet.of(tgt, {"k1": (1, [])})
    t2 = validate_topology(tgt, [empty_set(tgt), g, universal_set(tgt)])
    assert not is_continuous(m, t1, t2)
    assert discontinuity_witness(m, t1, t2) == g
