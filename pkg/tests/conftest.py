"""Shared fixtures and the shape list used across the suites."""

from fractions import Fraction

import pytest

from walab.brst import WAlgebra
from walab.pyramid import parse_shape

SUITE_SHAPES = [
    "q=3;l=1",
    "q=2,1;l=2,1",
    "q=3,1;l=1,1",
    "q=4,2;l=1,1",
    "q=2;l=2",
]


@pytest.fixture(scope="session")
def principal3():
    """Single-column height-3 context at a fixed rational level."""
    return WAlgebra(parse_shape("q=3;l=1").specialize(Fraction(7, 3)))


@pytest.fixture(scope="session")
def staircase():
    """Two-block shape (2,1|2,1) with symbolic level."""
    return WAlgebra(parse_shape("q=2,1;l=2,1"))
