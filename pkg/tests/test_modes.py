from fractions import Fraction

from walab.modes import (ModeAtom, ModeWord, TailSum, act, expand_tail,
                         lie_bracket, ops_equal, probe_states)


def _word(atom):
    return ModeWord([(Fraction(1), (atom,))])


def test_bracket_matches_operator_commutator(principal3):
    va = principal3.va
    probes = probe_states(va, 2)
    pairs = [((2, 1), 0), ((1, 2), 0), ((1, 1), 1), ((3, 1), -1)]
    for (pa, pwa) in pairs:
        for (pb, pwb) in pairs:
            a = ModeAtom(principal3.w1(*pa), pwa)
            b = ModeAtom(principal3.w1(*pb), pwb)
            lb = lie_bracket(va, a, b)
            direct = _word(a) * _word(b) - _word(b) * _word(a)
            assert ops_equal(va, lb, direct, 4, probes)


def test_tail_expansion_identity(principal3):
    va = principal3.va
    probes = probe_states(va, 2)
    for c in (0, 1):
        t = TailSum(principal3.w1(1, 2), principal3.w1(2, 1), c)
        assert ops_equal(va, _word(t), expand_tail(va, t), 4, probes)


def test_action_windowing_is_exact(principal3):
    va = principal3.va
    word = ModeWord.tail(principal3.w1(1, 2), principal3.w1(2, 1), 1)
    word = word * ModeWord.atom(principal3.w1(2, 1), 0)
    for v in probe_states(va, 2):
        wide = act(va, word, v, 6)
        assert act(va, word, v, 3) == wide.truncate(3)


def test_vacuum_mode_normalization(principal3):
    from walab.vertex import vacuum_state
    unit = ModeWord.atom(vacuum_state(), -1)
    assert unit.terms == ModeWord.unit().terms
    assert ModeWord.atom(vacuum_state(), 2).terms == []


def test_probe_family_is_weight_slice(principal3):
    probes = probe_states(principal3.va, 2)
    assert any(not p.d for p in probes) is False
    weights = {p.max_weight() for p in probes}
    assert weights <= {0, 1, 2}
    # vacuum plus every nonzero word of weight one and two
    assert len(probes) > 10
