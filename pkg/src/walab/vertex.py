"""The vacuum-module vertex superalgebra: PBW normal forms, mode actions,
exact n-th products (memoized primary recursion plus a slow independent
oracle), translation and weight grading.

A word is a tuple of letters (m, el) standing for el[-m], m >= 1, kept in
normal form: sorted by (greater mode depth first, then interned basis
order), with an odd letter repeated at the same mode collapsing the word
to zero.  A State maps words to exact scalars.
"""

from fractions import Fraction
from math import comb, factorial

from .scalars import is_zero

VACUUM = ()


def _gbinom(p, j):
    """Binomial coefficient with an arbitrary integer upper argument."""
    num = 1
    for t in range(j):
        num *= p - t
    return Fraction(num, factorial(j))


def _letter_key(m, el):
    return (-m, el.order)


class State:
    """Exact linear combination of PBW words; immutable by convention."""

    __slots__ = ("d",)

    def __init__(self, d=None):
        self.d = d if d is not None else {}

    def is_zero(self):
        return not self.d

    def __add__(self, other):
        out = dict(self.d)
        for w, c in other.d.items():
            c2 = out.get(w, 0) + c
            if is_zero(c2):
                out.pop(w, None)
            else:
                out[w] = c2
        return State(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if is_zero(c):
            return State()
        return State({w: c * v for w, v in self.d.items()})

    def __eq__(self, other):
        return isinstance(other, State) and (self - other).is_zero()

    def __hash__(self):
        raise TypeError("States are not hashable; compare with ==")

    def weights(self):
        """Decomposition into homogeneous components, weight -> State."""
        out = {}
        for w, c in self.d.items():
            wt = sum(m for m, _ in w)
            out.setdefault(wt, {})[w] = c
        return {wt: State(d) for wt, d in sorted(out.items())}

    def max_weight(self):
        return max((sum(m for m, _ in w) for w in self.d), default=0)

    def truncate(self, K):
        return State({w: c for w, c in self.d.items()
                      if sum(m for m, _ in w) <= K})

    def terms(self):
        return sorted(self.d.items(), key=lambda t: (len(t[0]), t[0] and
                      [(m, el.order) for m, el in t[0]]))

    def __repr__(self):
        if not self.d:
            return "0"
        parts = []
        for w, c in self.terms():
            word = "*".join(f"{el}[-{m}]" for m, el in w) or "vac"
            parts.append(f"({c})*{word}")
        return " + ".join(parts)

    def map_scalars(self, f):
        out = {}
        for w, c in self.d.items():
            c2 = f(c)
            if not is_zero(c2):
                out[w] = c2
        return State(out)


def vacuum_state():
    return State({VACUUM: Fraction(1)})


class VertexAlgebra:
    """Vacuum module over the current superalgebra, with exact products."""

    def __init__(self, alg):
        self.alg = alg
        self.shape = alg.shape
        self._memo = {}

    # -- constructors ------------------------------------------------------

    def gen(self, el, m=1):
        """The state el[-m]|0>."""
        return State({((m, el),): Fraction(1)})

    def word(self, letters):
        """Normal-order an arbitrary product of creation letters."""
        st = vacuum_state()
        for m, el in reversed(list(letters)):
            st = self.prepend(m, el, st)
        return st

    # -- normal ordering ---------------------------------------------------

    def prepend(self, m, x, state):
        """Left-multiply by the creation operator x[-m] and renormalize."""
        out = State()
        for w, c in state.d.items():
            out = out + self._prepend_word(m, x, w).scale(c)
        return out

    def _prepend_word(self, m, x, w):
        if not w or _letter_key(m, x) < _letter_key(*w[0]):
            return State({((m, x),) + w: Fraction(1)})
        n, y = w[0]
        if (m, x) == (n, y) and x.parity:
            return State()
        if _letter_key(m, x) == _letter_key(n, y):
            return State({((m, x),) + w: Fraction(1)})
        rest = w[1:]
        sign = -1 if (x.parity and y.parity) else 1
        moved = self._prepend_word(m, x, rest)
        out = self.prepend(n, y, moved).scale(sign)
        for z, cz in self.alg.bracket(x, y).items():
            out = out + self._prepend_word(m + n, z, rest).scale(cz)
        return out

    # -- mode action -------------------------------------------------------

    def apply_mode(self, x, m, state):
        """Act by x t^m; creation for m < 0, annihilation push for m >= 0."""
        if m < 0:
            return self.prepend(-m, x, state)
        out = State()
        for w, c in state.d.items():
            out = out + self._apply_word(x, m, w).scale(c)
        return out

    def _apply_word(self, x, m, w):
        if not w:
            return State()
        n, y = w[0]
        rest = w[1:]
        sign = -1 if (x.parity and y.parity) else 1
        out = self.prepend(n, y, self._apply_word(x, m, rest)).scale(sign)
        for z, cz in self.alg.bracket(x, y).items():
            out = out + self.apply_mode(z, m - n, State({rest: Fraction(1)})).scale(cz)
        if m == n and m != 0:
            out = out + State({rest: Fraction(1)}).scale(m * self.alg.kappa_tilde(x, y))
        return out

    # -- n-th products -----------------------------------------------------

    def nth_product(self, a, n, b):
        """Exact n-th product of two States (primary memoized recursion)."""
        out = State()
        for wa, ca in a.d.items():
            for wb, cb in b.d.items():
                out = out + self._nth_word(wa, n, wb).scale(ca * cb)
        return out

    def _nth_word(self, wa, n, wb):
        key = (wa, n, wb)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        wt_a = sum(m for m, _ in wa)
        wt_b = sum(m for m, _ in wb)
        if wa and n >= wt_a + wt_b:
            res = State()
            self._memo[key] = res
            return res
        if not wa:
            res = State({wb: Fraction(1)}) if n == -1 else State()
            self._memo[key] = res
            return res
        m, u = wa[0]
        c = wa[1:]
        pc = sum(el.parity for _, el in c) & 1
        sign2 = -1 if (m % 2 == 0) else 1          # -(-1)^m
        if u.parity and pc:
            sign2 = -sign2
        b_state = State({wb: Fraction(1)})
        res = State()
        # first tail: u_{(-m-j)} ( c_{(n+j)} b )
        j = 0
        while n + j < (sum(mm for mm, _ in c) + wt_b):
            inner = self._nth_word(c, n + j, wb)
            if not inner.is_zero():
                res = res + self.apply_mode(u, -m - j, inner).scale(comb(m + j - 1, j))
            j += 1
        # second tail: c_{(-m+n-j)} ( u_{(j)} b )
        j = 0
        while j <= wt_b:
            inner = self.apply_mode(u, j, b_state)
            if not inner.is_zero():
                part = State()
                for wi, ci in inner.d.items():
                    part = part + self._nth_word(c, -m + n - j, wi).scale(ci)
                res = res + part.scale(sign2 * comb(m + j - 1, j))
            j += 1
        self._memo[key] = res
        return res

    def nth_product_oracle(self, a, n, b):
        """Independent slow expansion through field composition.

        The field of u[-m]c is the normally ordered product of the
        (m-1)-st divided-power derivative of the generator field of u
        with the field of c; its n-th Laurent mode is expanded
        literally, recursing only on the strictly shorter word c.
        No memoization; shares only apply_mode with the primary.
        """
        out = State()
        for wa, ca in a.d.items():
            for wb, cb in b.d.items():
                st = self._oracle_word(wa, n, State({wb: Fraction(1)}))
                out = out + st.scale(ca * cb)
        return out

    def _oracle_word(self, wa, n, b):
        if not wa:
            return b if n == -1 else State()
        m, u = wa[0]
        c_word = wa[1:]
        pc = sum(el.parity for _, el in c_word) & 1
        sgn = -1 if (u.parity and pc) else 1
        wt_c = sum(mm for mm, _ in c_word)
        wt_b = max((sum(mm for mm, _ in w) for w in b.d), default=0)

        def a_mode(p, st):
            # mode p of the divided-power derivative field of u
            coeff = _gbinom(p, m - 1)
            if coeff == 0:
                return State()
            if (m - 1) % 2:
                coeff = -coeff
            return self.apply_mode(u, p - m + 1, st).scale(coeff)

        res = State()
        for p in range(n - wt_c - wt_b, 0):
            inner = self._oracle_word(c_word, n - 1 - p, b)
            if not inner.is_zero():
                res = res + a_mode(p, inner)
        for p in range(0, wt_b + m):
            inner = a_mode(p, b)
            if not inner.is_zero():
                res = res + self._oracle_word(c_word, n - 1 - p, inner).scale(sgn)
        return res

    # -- translation and weights ------------------------------------------

    def translate(self, a):
        """The canonical derivation: el[-m] -> m el[-m-1], Leibniz over words."""
        out = State()
        for w, c in a.d.items():
            for pos in range(len(w)):
                m, el = w[pos]
                deeper = self.word(w[:pos] + ((m + 1, el),) + w[pos + 1:])
                out = out + deeper.scale(m * c)
        return out

    def clear_cache(self):
        self._memo.clear()


# -- randomized structural self-tests ---------------------------------------

def _random_states(rng, words_by_parity, combo_chance=4):
    """A homogeneous-parity random state: one or two basis words with
    random small rational coefficients."""
    parity = rng.randrange(2) if words_by_parity[1] else 0
    pool = words_by_parity[parity]
    coeff = Fraction(rng.randint(1, 5), rng.randint(1, 5))
    d = {pool[rng.randrange(len(pool))]: coeff}
    if rng.randrange(combo_chance) == 0 and len(pool) > 1:
        w2 = pool[rng.randrange(len(pool))]
        if w2 not in d:
            d[w2] = Fraction(rng.randint(1, 5), rng.randint(1, 5))
    return State(d), parity


def _word_pools(alg, max_weight):
    from .modes import basis_states
    pools = {0: [], 1: []}
    for w in basis_states(alg, max_weight):
        if not w:
            continue
        pools[sum(el.parity for _, el in w) & 1].append(w)
    return pools


def axiom_suite(shape, instances=500, seed=0, max_weight=3):
    """Randomized checks of four structural identities of the products:
    skew-symmetry, the iterate (composition) identity, the weight-graded
    locality bound, and covariance under the translation derivation.
    Instances cycle through the four properties; any failure is returned
    with its inputs."""
    import random
    from .liealg import SuperAlgebra

    rng = random.Random(seed)
    alg = SuperAlgebra(shape)
    va = VertexAlgebra(alg)
    pools = _word_pools(alg, max_weight)
    failures = []
    counts = {"skew": 0, "iterate": 0, "locality": 0, "translation": 0}

    def tpow(st, j):
        out = st
        for _ in range(j):
            out = va.translate(out)
        return out.scale(Fraction(1, factorial(j)))

    for step in range(instances):
        a, pa = _random_states(rng, pools)
        b, pb = _random_states(rng, pools)
        wa, wb = a.max_weight(), b.max_weight()
        prop = ("skew", "iterate", "locality", "translation")[step % 4]
        counts[prop] += 1
        if prop == "skew":
            n = rng.randint(-2, wa + wb)
            lhs = va.nth_product(a, n, b)
            rhs = State()
            sgn = -1 if (pa and pb) else 1
            for j in range(0, wa + wb - n):
                term = va.nth_product(b, n + j, a)
                if term.is_zero():
                    continue
                s = sgn * (-1 if (n + j + 1) % 2 else 1)
                rhs = rhs + tpow(term, j).scale(s)
            ok = lhs == rhs
        elif prop == "iterate":
            c, _ = _random_states(rng, pools)
            wc = c.max_weight()
            m = rng.randint(-2, 3)
            n = rng.randint(-2, 3)
            lhs = va.nth_product(va.nth_product(a, m, b), n, c)
            rhs = State()
            sab = -1 if (pa and pb) else 1
            for j in range(0, max(wb + wc - n, 0)):
                coeff = _gbinom(m, j) * (-1 if j % 2 else 1)
                if coeff == 0:
                    continue
                inner = va.nth_product(b, n + j, c)
                if not inner.is_zero():
                    rhs = rhs + va.nth_product(a, m - j, inner).scale(coeff)
            for j in range(0, wa + wc + 1):
                coeff = _gbinom(m, j) * (-1 if j % 2 else 1)
                if coeff == 0:
                    continue
                inner = va.nth_product(a, j, c)
                if not inner.is_zero():
                    s = sab * (-1 if m % 2 else 1)
                    rhs = rhs - va.nth_product(b, m + n - j, inner).scale(coeff * s)
            ok = lhs == rhs
        elif prop == "locality":
            extra = rng.randint(0, 2)
            ok = va.nth_product(a, wa + wb + extra, b).is_zero()
        else:
            n = rng.randint(-2, wa + wb)
            lhs = va.nth_product(va.translate(a), n, b)
            rhs = va.nth_product(a, n - 1, b).scale(-n)
            ok = lhs == rhs
        if not ok:
            failures.append({"property": prop, "a": repr(a), "b": repr(b)})
    return {"check": "vertex-axioms",
            "shape": {"q": list(shape.q), "l": list(shape.l)},
            "k": str(shape.k), "instances": instances, "seed": seed,
            "counts": counts, "failures": failures,
            "status": "pass" if not failures else "fail"}


def oracle_suite(shape, instances=200, seed=0, max_weight=3):
    """Randomized agreement of the memoized product recursion with the
    independent field-composition expansion."""
    import random
    from .liealg import SuperAlgebra

    rng = random.Random(seed)
    alg = SuperAlgebra(shape)
    va = VertexAlgebra(alg)
    pools = _word_pools(alg, max_weight)
    failures = []
    for _ in range(instances):
        a, _ = _random_states(rng, pools)
        b, _ = _random_states(rng, pools)
        n = rng.randint(-2, a.max_weight() + b.max_weight())
        fast = va.nth_product(a, n, b)
        slow = va.nth_product_oracle(a, n, b)
        if fast != slow:
            failures.append({"a": repr(a), "n": n, "b": repr(b)})
    return {"check": "product-oracle-agreement",
            "shape": {"q": list(shape.q), "l": list(shape.l)},
            "k": str(shape.k), "instances": instances, "seed": seed,
            "failures": failures,
            "status": "pass" if not failures else "fail"}
