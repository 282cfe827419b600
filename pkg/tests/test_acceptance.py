"""End-to-end acceptance suite.

Each test exercises one headline guarantee of the package at full
scope, so this file is slower than the per-module tests.  Expected
total runtime is on the order of fifteen minutes.
"""

import random
from fractions import Fraction

from walab.brst import WAlgebra
from walab.finite import check_cores, finite_relation_suite, w_embedding_iota
from walab.pyramid import parse_shape
from walab.qaffine import (check_phi_fixes_h1, check_relations, eval_rep,
                           verify_li)
from walab.vertex import axiom_suite, oracle_suite
from walab.yangian import (check_factorization, obstruction_suite,
                           verify_relations)

from conftest import SUITE_SHAPES


def _walg(text):
    return WAlgebra(parse_shape(text))


def _random_levels(seed, count=3):
    rng = random.Random(seed)
    levels = []
    while len(levels) < count:
        k = Fraction(rng.randint(2, 40), rng.choice([3, 7, 11]))
        if k not in levels:
            levels.append(k)
    return levels


def test_criterion_1_kernel_membership_and_negative_control():
    for text in SUITE_SHAPES:
        walg = _walg(text)
        entries = walg.check_kernel()
        assert entries, text
        assert all(e["status"] == "pass" for e in entries), text
    # negative control: the inadmissible mirror generator is not killed,
    # and its differential is exactly one odd letter mode
    walg = _walg("q=2,1;l=2,1")
    img = walg.d0(walg._w1_raw(2, 1))
    assert img == walg.va.gen(walg.alg.psi(5, 3))


def test_criterion_2_cancellation_traces():
    for text in SUITE_SHAPES:
        walg = _walg(text)
        for p, q in walg.admissible_pairs():
            tr = walg.proof_trace(p, q)
            assert tr["cancellations"], (text, p, q)
            assert all(tr["cancellations"].values()), (text, p, q)


def test_criterion_3_zero_mode_identities():
    for text in SUITE_SHAPES:
        entries = _walg(text).check_tho1()
        assert entries, text
        assert all(e["status"] == "pass" for e in entries), text


def test_criterion_4_current_relations():
    for text in ("q=3;l=1", "q=4,1;l=1,1"):
        shape = parse_shape(text)
        report = verify_relations(shape, 1, 3)
        assert report["status"] == "pass", (text, report["failures"])
        for k in _random_levels(20260823):
            spec = shape.specialize(k)
            report = verify_relations(spec, 1, 4)
            assert report["status"] == "pass", (text, k, report["failures"])


def test_criterion_5_truncation_factorization():
    report = check_factorization(parse_shape("q=4,1;l=1,1"), 1, 3)
    assert report["status"] == "pass"
    assert report["level_shift"] == 1


def test_criterion_6_obstruction_witness():
    report = obstruction_suite(5, 2, 4)
    assert report["status"] == "pass"
    assert report["witness"]["probe"] and report["witness"]["image"]
    assert report["stability"]["cutoff+1"]
    assert all(report["stability"]["k_resamples"])


def test_criterion_7_finite_suites():
    for n in (3, 4):
        report = finite_relation_suite(n)
        assert report["status"] == "pass", n
        assert report["rtt_failures"] == []
    cores = check_cores(parse_shape("q=3;l=1"), 1)
    assert cores["status"] == "pass"
    transport = w_embedding_iota(2)
    assert transport["status"] == "pass"


def test_criterion_8_quantum_affine_embeddings():
    for n in (3, 4, 5):
        images = eval_rep(n, 1)
        assert all(r["status"] == "pass" for r in check_relations(images, n, None))
    for r in range(3):
        for eps in (1, -1):
            report = verify_li(3, r, eps, None, (1, 2))
            assert report["status"] == "pass", (r, eps)
    report = verify_li(4, 0, -1, None, (1, 2))
    assert report["status"] == "pass"
    report = check_phi_fixes_h1(3)
    assert report["status"] == "pass"


def test_criterion_9_vertex_axioms_and_oracle():
    for i, text in enumerate(SUITE_SHAPES):
        shape = parse_shape(text).specialize(Fraction(7, 3))
        report = axiom_suite(shape, instances=500, seed=100 + i)
        assert report["status"] == "pass", (text, report["failures"])
        report = oracle_suite(shape, instances=40, seed=200 + i)
        assert report["status"] == "pass", (text, report["failures"])
