from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpsoft import make_context
from fpsoft.docio import (
    Document,
    ParseError,
    format_document,
    format_fraction,
    format_set,
    parse_document,
)
from fpsoft.sets import FPSoftSet

MINIMAL = """
context { universe: x1 x2 ; parameters: e1 }
set S { e1: 2/10 { x1 } }
"""


def test_parse_minimal():
    doc = parse_document(MINIMAL)
    s = doc.sets["S"]
    assert s.grade("e1") == Fraction(1, 5)
    assert s.crisp("e1") == frozenset({"x1"})


def test_unreduced_fractions_are_accepted_and_printed_reduced():
    doc = parse_document(MINIMAL)
    assert "1/5" in format_set("S", doc.sets["S"])
    assert format_fraction(Fraction(0)) == "0/1"


@pytest.mark.parametrize("text, fragment", [
    ("", "context required"),
    ("set S { e1: 1/1 { } }", "context required"),
    ("context { universe: x1 ; parameters: e1 }\n"
     "set S { e1: 2/10 { x9 } }", "not in universe"),
    ("context { universe: x1 ; parameters: e1 }\n"
     "set S { e1: 3/2 { } }", "grade"),
    ("context { universe: x1 ; parameters: e1 }\n"
     "set S { e1: 1/1 { } ; e1: 0/1 { } }", "e1"),
    ("context { universe: x1 ; parameters: e1 }\n"
     "set S { e1: 1/1 { } }\nset S { e1: 0/1 { } }", "duplicate"),
    ("context { universe: x1 ; parameters: e1 }\n"
     "topology T { nosuch }", "nosuch"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_document(text)
    assert fragment in str(err.value)


def test_parse_error_carries_line_number():
    text = "context { universe: x1 ; parameters: e1 }\nset S { e1: 2/10 { x9 } }"
    with pytest.raises(ParseError) as err:
        parse_document(text)
    assert str(err.value).startswith("line 2:")


def test_round_trip_fixture(example_doc):
    text = format_document(example_doc)
    doc2 = parse_document(text)
    assert doc2.sets == example_doc.sets
    assert doc2.topologies == example_doc.topologies
    assert doc2.covers == example_doc.covers


def test_round_trip_mapping_fixture(continuity_first_doc):
    doc = continuity_first_doc
    doc2 = parse_document(format_document(doc))
    assert doc2.mappings == doc.mappings
    assert doc2.sets == doc.sets


CTX = make_context(3, 2)
grades = st.fractions(min_value=0, max_value=1, max_denominator=12)
masks = st.integers(min_value=0, max_value=CTX.full_mask)


@st.composite
def fp_sets(draw):
    pairs = {e: (draw(grades), CTX.symbols_of(draw(masks)))
             for e in CTX.parameters}
    return FPSoftSet.of(CTX, pairs)


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.sampled_from(["A", "B", "C"]), fp_sets(),
                       min_size=1))
def test_round_trip_random_documents(named):
    doc = Document(context=CTX, sets=named)
    doc2 = parse_document(format_document(doc))
    assert doc2.sets == doc.sets
    assert parse_document(format_document(doc2)).sets == doc2.sets
