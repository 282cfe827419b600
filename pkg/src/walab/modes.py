"""Mode algebra over the vacuum module: atoms u t^a, tail sums, words in
the enveloping algebra, the mode Lie bracket, and exact evaluation of
words as operators on the weight-truncated module.

A ModeWord is a linear combination of finite sequences of atoms.  An atom
is either a single mode (state, power) or a TailSum(A, B, c) standing for
sum_{y>=0} A t^{-y-c} B t^{y+c} with c in {0, 1}.  Words act on states by
applying atoms right to left, u t^a acting as the a-th product; the
action is windowed exactly by tracking each atom's weight shift, so
widening the cutoff never changes a truncated result.
"""

from fractions import Fraction

from .scalars import is_zero
from .vertex import State, _gbinom


class ModeAtom:
    """A single mode (state) t^power."""

    __slots__ = ("state", "power")

    def __init__(self, state, power):
        self.state = state
        self.power = power

    def weight_shifts(self):
        """Possible weight changes of the action, one per homogeneous part."""
        return [wt - 1 - self.power for wt in self.state.weights()] or [0]

    def __repr__(self):
        return f"({self.state!r})t^{self.power}"


class TailSum:
    """sum_{y>=0} A t^{-y-c} B t^{y+c}, c in {0, 1}; never expanded eagerly."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        if c not in (0, 1):
            raise ValueError("tail offset must be 0 or 1")
        self.a = a
        self.b = b
        self.c = c

    def weight_shifts(self):
        # each summand shifts weight by wt(A) + wt(B) - 2, independent of y
        wa = list(self.a.weights()) or [0]
        wb = list(self.b.weights()) or [0]
        return [x + y - 2 for x in wa for y in wb]

    def __repr__(self):
        return f"Tail[{self.a!r}; {self.b!r}; c={self.c}]"


class ModeWord:
    """Linear combination of atom sequences; the empty sequence is the unit."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = list(terms) if terms is not None else []

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def unit(cls, coeff=1):
        return cls([(coeff, ())])

    @classmethod
    def atom(cls, state, power, coeff=1):
        """Single-atom word, with the vacuum part of the state normalized:
        |0> t^{-1} is the unit and |0> t^{m} vanishes for m != -1."""
        vac = state.d.get((), None)
        rest = State({w: c for w, c in state.d.items() if w})
        terms = []
        if vac is not None and power == -1 and not is_zero(coeff * vac):
            terms.append((coeff * vac, ()))
        if not rest.is_zero():
            terms.append((coeff, (ModeAtom(rest, power),)))
        return cls(terms)

    @classmethod
    def tail(cls, a, b, c, coeff=1):
        return cls([(coeff, (TailSum(a, b, c),))])

    def __add__(self, other):
        return ModeWord(self.terms + other.terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if is_zero(c):
            return ModeWord()
        return ModeWord([(c * coeff, atoms) for coeff, atoms in self.terms])

    def __mul__(self, other):
        out = []
        for ca, aa in self.terms:
            for cb, ab in other.terms:
                out.append((ca * cb, aa + ab))
        return ModeWord(out)

    def commutator(self, other):
        return self * other - other * self

    def anticommutator(self, other):
        return self * other + other * self

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*" + ("*".join(map(repr, atoms)) or "1")
                          for c, atoms in self.terms)


def _wt_dict(state):
    return {wt: st for wt, st in state.weights().items()}


def lie_bracket(va, a, b):
    """[u t^x, v t^y] = sum_{r>=0} C(x, r) (u_(r) v) t^{x+y-r}.

    The r-th products vanish once r reaches the weight bound, so the sum
    is finite; vacuum components are normalized away by ModeWord.atom.
    """
    out = ModeWord()
    bound = a.state.max_weight() + b.state.max_weight()
    for r in range(0, bound + 1):
        coeff = _gbinom(a.power, r)
        if coeff == 0:
            continue
        prod = va.nth_product(a.state, r, b.state)
        if prod.is_zero():
            continue
        out = out + ModeWord.atom(prod, a.power + b.power - r, coeff)
    return out


def expand_tail(va, atom):
    """Rewrite a tail sum through the (-1)-st product at power one.

    sum_{y>=0} A t^{-y-1} B t^{y+1} + sum_{y>=0} B t^{-y} A t^{y}
    equals (A_(-1) B) t^1, so a c=1 tail is the normally ordered mode
    minus the opposite c=0 tail, and symmetrically for c=0.
    """
    if atom.c == 1:
        prod = va.nth_product(atom.a, -1, atom.b)
        return ModeWord.atom(prod, 1) - ModeWord.tail(atom.b, atom.a, 0)
    prod = va.nth_product(atom.b, -1, atom.a)
    return ModeWord.atom(prod, 1) - ModeWord.tail(atom.b, atom.a, 1)


def _apply_atom(va, atom, st, bound):
    """Apply one atom to a state, truncating exactly at the given weight."""
    if isinstance(atom, ModeAtom):
        return va.nth_product(atom.state, atom.power, st).truncate(bound)
    out = State()
    max_b = atom.b.max_weight()
    y = 0
    while y + atom.c < max_b + st.max_weight():
        inner = va.nth_product(atom.b, y + atom.c, st)
        if not inner.is_zero():
            out = out + va.nth_product(atom.a, -y - atom.c, inner)
        y += 1
    return out.truncate(bound)


def act(va, word, v, K):
    """Evaluate a ModeWord on a state, exactly windowed at weight K.

    Atoms are applied right to left.  An intermediate component of weight
    w can only reach final weight w + (sum of remaining shifts), so the
    intermediate cutoff K - min(remaining shifts) loses nothing.
    """
    out = State()
    for coeff, atoms in word.terms:
        if is_zero(coeff):
            continue
        # minimal weight shift of everything strictly to the left of idx
        pref = [0] * (len(atoms) + 1)
        for idx in range(len(atoms)):
            pref[idx + 1] = pref[idx] + min(atoms[idx].weight_shifts())
        cur = v.truncate(K - pref[len(atoms)])
        ok = True
        for idx in range(len(atoms) - 1, -1, -1):
            bound = K - pref[idx]
            cur = _apply_atom(va, atoms[idx], cur, bound)
            if cur.is_zero():
                ok = False
                break
        if ok:
            out = out + cur.scale(coeff)
    return out.truncate(K)


def basis_states(alg, max_weight):
    """All normal-form words of weight up to the bound, as word tuples."""
    letters = sorted(((m, el) for el in alg.basis
                      for m in range(1, max_weight + 1)),
                     key=lambda t: (-t[0], t[1].order))
    out = []

    def rec(start, remaining, cur):
        out.append(tuple(cur))
        for idx in range(start, len(letters)):
            m, el = letters[idx]
            if m > remaining:
                continue
            if cur and cur[-1] == (m, el) and el.parity:
                continue
            cur.append((m, el))
            rec(idx, remaining - m, cur)
            cur.pop()

    rec(0, max_weight, [])
    return out


def probe_states(va, probe_weight=2, heavy_weight=0, heavy_count=0, seed=0):
    """Probe family for operator comparison: the full slice of weight up
    to probe_weight, optionally extended by a seeded sample of heavier
    basis words."""
    words = [w for w in basis_states(va.alg, probe_weight)]
    probes = [State({w: Fraction(1)}) for w in words]
    if heavy_weight > probe_weight and heavy_count > 0:
        import random
        rng = random.Random(seed)
        heavy = [w for w in basis_states(va.alg, heavy_weight)
                 if sum(m for m, _ in w) > probe_weight]
        for w in rng.sample(heavy, min(heavy_count, len(heavy))):
            probes.append(State({w: Fraction(1)}))
    return probes


def op_residual(va, word, K, probes):
    """First probe on which the word acts nontrivially, or None."""
    for v in probes:
        img = act(va, word, v, K)
        if not img.is_zero():
            return v, img
    return None


def ops_equal(va, w1, w2, K, probes):
    return op_residual(va, w1 - w2, K, probes) is None
