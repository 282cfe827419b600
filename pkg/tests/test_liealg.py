import random

import pytest

from walab.liealg import SuperAlgebra
from walab.pyramid import parse_shape


@pytest.fixture(scope="module")
def alg():
    return SuperAlgebra(parse_shape("q=2,1;l=2,1"))


def _ad(alg, x, y):
    return alg.bracket(x, y)


def test_basis_membership(alg):
    sh = alg.shape
    for el in alg.basis:
        if el.kind == "e":
            assert sh.col(el.i) >= sh.col(el.j)
        else:
            assert sh.col(el.i) > sh.col(el.j)
    with pytest.raises(ValueError):
        alg.e(1, 3)   # col 1 < col 2: a raising unit
    with pytest.raises(ValueError):
        alg.psi(1, 2)  # same column


def test_matrix_unit_bracket(alg):
    # [e_{3,1}, e_{1,2}] = e_{3,2}; [e_{1,2}, e_{3,1}] = -e_{3,2}
    a, b = alg.e(3, 1), alg.e(1, 2)
    assert alg.bracket(a, b) == {alg.e(3, 2): 1}
    assert alg.bracket(b, a) == {alg.e(3, 2): -1}


def test_even_odd_bracket(alg):
    # no delta match on either index: bracket vanishes
    assert alg.bracket(alg.e(2, 2), alg.psi(3, 1)) == {}
    assert alg.bracket(alg.e(1, 1), alg.psi(3, 1)) == {alg.psi(3, 1): -1}
    assert alg.bracket(alg.psi(3, 1), alg.e(1, 1)) == {alg.psi(3, 1): 1}
    assert alg.bracket(alg.psi(3, 1), alg.psi(4, 2)) == {}


def test_jacobi_sample(alg):
    rng = random.Random(7)
    evens = [el for el in alg.basis if not el.parity]

    def bracket_state(d, y):
        out = {}
        for el, c in d.items():
            for z, cz in alg.bracket(el, y).items():
                out[z] = out.get(z, 0) + c * cz
        return {z: c for z, c in out.items() if c}

    for _ in range(60):
        x, y, z = (rng.choice(evens) for _ in range(3))
        xy_z = bracket_state(alg.bracket(x, y), z)
        x_yz = {}
        for el, c in alg.bracket(y, z).items():
            for w2, cw in alg.bracket(x, el).items():
                x_yz[w2] = x_yz.get(w2, 0) + c * cw
        y_xz = {}
        for el, c in alg.bracket(x, z).items():
            for w2, cw in alg.bracket(y, el).items():
                y_xz[w2] = y_xz.get(w2, 0) + c * cw
        total = dict(xy_z)
        for el, c in x_yz.items():
            total[el] = total.get(el, 0) - c
        for el, c in y_xz.items():
            total[el] = total.get(el, 0) + c
        assert all(c == 0 for c in total.values())


def test_forms(alg):
    sh = alg.shape
    e11 = alg.e(1, 1)
    e12 = alg.e(1, 2)
    e21 = alg.e(2, 1)
    assert alg.kappa(e12, e21) == sh.zeta(1)
    assert alg.kappa(e11, e11) == sh.zeta(1) + 1
    assert alg.gl_form(e12, e21) == sh.k
    assert alg.kappa_tilde(alg.psi(3, 1), e12) == 0
