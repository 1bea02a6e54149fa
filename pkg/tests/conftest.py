import pathlib

import pytest

from fpsoft import parse_document

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def example_doc():
    return parse_document((FIXTURES / "example_to.fps").read_text())


@pytest.fixture(scope="session")
def continuity_first_doc():
    return parse_document((FIXTURES / "continuity_first.fps").read_text())


@pytest.fixture(scope="session")
def continuity_second_doc():
    return parse_document((FIXTURES / "continuity_second.fps").read_text())
