from fractions import Fraction

import pytest

from walab.pyramid import parse_shape
from walab.yangian import (cartan, check_factorization, obstruction_suite,
                           verify_relations)


def test_cartan_matrix_cyclic():
    n = 4
    for i in range(n):
        assert cartan(n, i, i) == 2
        assert cartan(n, i, (i + 1) % n) == -1
        assert cartan(n, i, (i + 2) % n) == 0


def test_relation_suite_small_rational():
    shape = parse_shape("q=3;l=1").specialize(Fraction(7, 3))
    report = verify_relations(shape, 1, 3)
    assert report["status"] == "pass"
    assert report["failures"] == 0
    assert report["corrections"]


def test_corrections_are_load_bearing():
    # the uncorrected literal reading cannot even be built: its leading
    # index leaves the row window at the top node
    shape = parse_shape("q=3;l=1").specialize(Fraction(7, 3))
    with pytest.raises(ValueError):
        verify_relations(shape, 1, 3, corrections=False, stop_on_fail=True)


def test_factorization_report_fields():
    report = check_factorization(
        parse_shape("q=4,1;l=1,1").specialize(Fraction(7, 3)), 1, 2)
    assert report["status"] == "pass"
    assert report["level_shift"] == 1
    assert report["corrections"]


def test_obstruction_requires_wide_window():
    with pytest.raises(ValueError):
        obstruction_suite(4, 2, 3)


def test_obstruction_witness_shape():
    report = obstruction_suite(5, 2, 3)
    assert report["status"] == "pass"
    assert report["witness"]["probe"]
    assert report["witness"]["image"]
    assert report["stability"]["cutoff+1"]
    assert all(report["stability"]["k_resamples"])
