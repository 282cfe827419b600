from fractions import Fraction

import pytest

from conftest import SUITE_SHAPES
from walab.pyramid import (PyramidShape, block_convention_search,
                           jordan_type_bruteforce, parse_shape)


def test_parse_and_invariants():
    sh = parse_shape("q=2,1;l=2,1;k=7/3")
    assert sh.q == (2, 1) and sh.l == (2, 1) and sh.k == Fraction(7, 3)
    assert sh.N == 5 and sh.ncols == 3
    with pytest.raises(ValueError):
        parse_shape("q=1,2;l=1,1")
    with pytest.raises(ValueError):
        parse_shape("l=1,1")


def test_encode_decode_roundtrip():
    for text in SUITE_SHAPES:
        sh = parse_shape(text)
        for i in range(1, sh.N + 1):
            assert sh.encode(sh.decode(i)) == i


def test_index_example_walk():
    sh = parse_shape("q=2,1;l=2,1")
    cell = sh.decode(3)
    assert (cell.col, cell.row) == (2, 1)
    assert sh.tilde(3) == 1
    assert sh.hat(3) is None
    assert sh.hat(1) == 3 and sh.tilde(1) is None


def test_block_membership_and_split():
    sh = parse_shape("q=4,1;l=1,1")
    assert [sh.block_of_row(r) for r in range(1, 5)] == [1, 1, 1, 2]
    assert [sh.split_row(r) for r in range(1, 5)] == [0, 0, 0, 3]


def test_zeta_gamma_epsilon():
    sh = parse_shape("q=4,1;l=1,1")
    assert sh.zeta(1) == sh.k + 1
    assert sh.zeta(2) == sh.k + 4
    assert sh.gamma(sh.ncols) == 0
    assert sh.gamma(1) == sh.zeta(2)
    # (eps_z + q_z hbar)/hbar = k + N pins the parameter
    assert (sh.epsilon_for(1) + sh.q[0]) == sh.k + sh.N


def test_jordan_type_matches_rank_oracle():
    for text in SUITE_SHAPES + ["q=4,1;l=1,1", "q=5,2;l=1,1"]:
        sh = parse_shape(text)
        assert sh.jordan_type() == jordan_type_bruteforce(sh), text


def test_block_convention_search_selects_lower_open():
    res = block_convention_search(parse_shape("q=2,1;l=2,1"))
    assert res == {"lower-open": True, "upper-open": False}


def test_specialize_keeps_structure():
    sh = parse_shape("q=3;l=1").specialize(Fraction(7, 3))
    assert sh.k == Fraction(7, 3)
    assert isinstance(sh, PyramidShape) and sh.N == 3
