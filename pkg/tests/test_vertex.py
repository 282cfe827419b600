from fractions import Fraction

from walab.pyramid import parse_shape
from walab.vertex import axiom_suite, oracle_suite


def test_fixed_product_against_oracle(principal3):
    va, alg = principal3.va, principal3.alg
    a = va.word([(1, alg.e(2, 1)), (1, alg.e(3, 2))])
    b = va.gen(alg.e(1, 1), m=2)
    for n in range(-2, 5):
        assert va.nth_product(a, n, b) == va.nth_product_oracle(a, n, b)


def test_translation_covariance_instance(principal3):
    va, alg = principal3.va, principal3.alg
    a = va.gen(alg.e(3, 1))
    b = va.word([(1, alg.e(2, 1)), (1, alg.e(1, 1))])
    for n in range(-1, 4):
        lhs = va.nth_product(va.translate(a), n, b)
        assert lhs == va.nth_product(a, n - 1, b).scale(-n)


def test_vacuum_is_unit(principal3):
    va, alg = principal3.va, principal3.alg
    from walab.vertex import vacuum_state
    b = va.gen(alg.e(2, 1))
    assert va.nth_product(vacuum_state(), -1, b) == b
    assert va.nth_product(vacuum_state(), 0, b).is_zero()
    assert va.nth_product(b, -1, vacuum_state()) == b


def test_axiom_suite_smoke():
    shape = parse_shape("q=2,1;l=2,1").specialize(Fraction(7, 3))
    report = axiom_suite(shape, instances=80, seed=11)
    assert report["status"] == "pass", report["failures"]
    assert sum(report["counts"].values()) == 80


def test_oracle_suite_smoke():
    shape = parse_shape("q=2;l=2").specialize(Fraction(7, 3))
    report = oracle_suite(shape, instances=40, seed=11)
    assert report["status"] == "pass", report["failures"]
