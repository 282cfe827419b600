import pytest

from walab.brst import WAlgebra
from walab.pyramid import parse_shape


def test_kernel_membership_small(principal3):
    report = principal3.check_kernel()
    assert report and all(e["status"] == "pass" for e in report)


def test_negative_control_mirror(staircase):
    # the inadmissible mirror of a degree-1 generator is not killed:
    # its differential is exactly one odd letter mode
    img = staircase.d0(staircase._w1_raw(2, 1))
    expected = staircase.va.gen(staircase.alg.psi(5, 3))
    assert img == expected
    with pytest.raises(ValueError):
        staircase.w1(2, 1)


def test_admissibility(staircase):
    assert staircase.admissible(1, 2)
    assert not staircase.admissible(2, 1)
    assert set(staircase.admissible_pairs()) == {(1, 1), (1, 2), (2, 2)}


def test_proof_trace_cancellations(staircase):
    for p, q in staircase.admissible_pairs():
        tr = staircase.proof_trace(p, q)
        assert all(tr["cancellations"].values()), (p, q)


def test_tho1_identities(principal3):
    report = principal3.check_tho1()
    assert report and all(e["status"] == "pass" for e in report)


def test_differential_rejects_odd_letters(staircase):
    with pytest.raises(ValueError):
        staircase.d0_of_generator(staircase.alg.psi(3, 1))


def test_block_relative_alias(staircase):
    # block 2 of (2,1|2,1) has window offset q_1 - q_2 = 1
    assert staircase.w_tilde(1, 2, 1, 1) == staircase.w1(2, 2)
    assert staircase.w_tilde(1, 1, 1, 1) == staircase.w1(1, 1)


def test_miura_projection(staircase):
    va, alg = staircase.va, staircase.alg
    diag = va.gen(alg.e(2, 1))      # cells 2,1 share column 1
    lower = va.gen(alg.e(5, 1))     # column 3 to column 1
    st = diag + lower.scale(3)
    assert staircase.miura(st) == diag
    mixed = va.word([(1, alg.e(2, 1)), (1, alg.e(5, 1))])
    assert staircase.miura(mixed).is_zero()


def test_w2_split_override_stays_in_kernel():
    walg = WAlgebra(parse_shape("q=4,1;l=1,1"))
    # either boundary of the row's own window gives a kernel element;
    # a boundary of a different window does not
    for split in (0, 3):
        assert walg.d0(walg.w2(3, 3, split=split)).is_zero()
    for split in (3, 4):
        assert walg.d0(walg.w2(4, 4, split=split)).is_zero()
    assert not walg.d0(walg.w2(4, 4, split=0)).is_zero()
