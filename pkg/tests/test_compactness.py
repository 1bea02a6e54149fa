import pytest

from fpsoft import (
    CoverFamily,
    FamilySizeError,
    LatticeSpec,
    check_compactness,
    complement,
    empty_set,
    greedy_subcover,
    has_fip,
    is_cover,
    make_context,
    minimal_subcover,
    universal_set,
    validate_topology,
)


def test_cover_detection(example_doc):
    doc = example_doc
    assert is_cover(doc.cover_of("opens_cover"))
    assert not is_cover(doc.cover_of("short_cover"))


def test_minimal_subcover_is_exact(example_doc):
    doc = example_doc
    sub = minimal_subcover(doc.cover_of("opens_cover"))
    assert sub == (doc.sets["F_univ"],)
    assert minimal_subcover(doc.cover_of("short_cover")) is None
    greedy = greedy_subcover(doc.cover_of("opens_cover"))
    assert greedy is not None and is_cover(CoverFamily.of(greedy))


def test_minimal_subcover_against_smaller_target(example_doc):
    doc = example_doc
    # F_A1 = F_A2 intersect F_A3, so either member covers it alone
    c = CoverFamily.of([doc.sets["F_A2"], doc.sets["F_A3"]], doc.sets["F_A1"])
    assert minimal_subcover(c) == (doc.sets["F_A2"],)


def test_fip(example_doc):
    doc = example_doc
    ca1, ca2 = complement(doc.sets["F_A1"]), complement(doc.sets["F_A2"])
    assert has_fip([ca1, ca2])
    assert not has_fip([empty_set(doc.context)])
    with pytest.raises(ValueError):
        has_fip([])


def test_check_compactness_on_fixture(example_doc):
    t = validate_topology(example_doc.context,
                          example_doc.topology_sets("tau_corrected"))
    report = check_compactness(t)
    assert report.compact
    assert report.fip_equivalence_verified
    assert report.covers_enumerated > 0
    assert "finite" in report.justification


def test_check_compactness_over_all_tiny_topologies():
    spec = LatticeSpec(make_context(1, 1), 1)
    topologies = list(spec.enumerate_topologies())
    assert topologies
    for t in topologies:
        report = check_compactness(t)
        assert report.compact and report.fip_equivalence_verified


def test_cap_guard():
    ctx = make_context(1, 1)
    full = universal_set(ctx)
    with pytest.raises(FamilySizeError):
        has_fip([full] * 21)
