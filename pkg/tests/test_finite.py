from fractions import Fraction

import pytest

from walab.finite import (Mat, atom_degree, check_cores, finite_relation_suite,
                          gl_yangian_images, iota_hbar, psi_f, psi_tilde_f,
                          rtt_check, w_embedding_iota, zhu_product, ZhuElement)
from walab.pyramid import parse_shape


def test_matrix_basics():
    a = Mat.unit(3, 1, 2)
    b = Mat.unit(3, 2, 3)
    assert a * b == Mat.unit(3, 1, 3)
    assert (b * a).is_zero()
    assert a.commutator(b) == Mat.unit(3, 1, 3)
    assert a.kron(Mat.identity(2)).size == 6


def test_evaluation_realization_sign():
    imgs = gl_yangian_images(3)
    assert imgs[(1, 1, 2)] == Mat.unit(3, 2, 1).scale(Fraction(-1))
    assert rtt_check(3) == []


def test_rtt_on_tensor_square():
    assert rtt_check(3, factors=2) == []


def test_relation_suite_small():
    report = finite_relation_suite(3)
    assert report["status"] == "pass"
    assert report["rtt_failures"] == []


def test_degree_one_images_exist_only_where_defined():
    assert iota_hbar("h", 1, 0, 1) is not None
    assert iota_hbar("h", 1, 1, 1) is not None
    with pytest.raises(ValueError):
        iota_hbar("x+", 2, 2, 1)
    with pytest.raises(ValueError):
        iota_hbar("h", 1, 0, 0)


def test_label_inclusions():
    assert psi_f(3, 4, ("X+", 1, 0)) == ("X+", 1, 0)
    with pytest.raises(ValueError):
        psi_f(3, 4, ("H", 3, 0))
    assert psi_tilde_f(3, 4, (1, 1, 1)) == (1, 1, 1)
    with pytest.raises(ValueError):
        psi_tilde_f(3, 4, (1, 4, 1))


def test_zhu_reduction_degrees(principal3):
    from walab.modes import ModeAtom
    sh = principal3.shape
    # a degree-1 current mode at power 0 has reduction degree 0
    atom = ModeAtom(principal3.w1(1, 2), 0)
    assert atom_degree(atom) == 0
    atom = ModeAtom(principal3.w1(1, 2), 1)
    assert atom_degree(atom) == 1


def test_zhu_commutator_reproduces_cartan(principal3):
    va = principal3.va
    from walab.modes import ModeWord, probe_states
    probes = probe_states(va, 2)
    xp = ZhuElement(va, ModeWord.atom(principal3.w1(1, 2), 0))
    xm = ZhuElement(va, ModeWord.atom(principal3.w1(2, 1), 0))
    h = ZhuElement(va, ModeWord.atom(principal3.w1(1, 1), 0)
                   - ModeWord.atom(principal3.w1(2, 2), 0))
    assert xp.commutator(xm).equals(h, probes, 4)


def test_cores_equality():
    report = check_cores(parse_shape("q=3;l=1"), 1)
    assert report["status"] == "pass"
    assert report["hbar"] == 1


def test_embedding_transport():
    report = w_embedding_iota(2)
    assert report["status"] == "pass"
