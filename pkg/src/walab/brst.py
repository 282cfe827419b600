"""The odd differential, the degree-1 and degree-2 generators, kernel and
OPE verification, the proof-trace decomposition, and the block-diagonal
projection.
"""

from fractions import Fraction

from .liealg import SuperAlgebra
from .vertex import State, VertexAlgebra, vacuum_state


class WAlgebra:
    """Per-shape context bundling the superalgebra, the vertex algebra,
    the differential and the generators."""

    def __init__(self, shape):
        self.shape = shape
        self.alg = SuperAlgebra(shape)
        self.va = VertexAlgebra(self.alg)
        self._d0_gen = {}

    # -- the differential --------------------------------------------------

    def d0_of_generator(self, el):
        """The differential of el[-1], from the displayed generator formula.

        Terms whose hat or tilde index does not exist are dropped.
        """
        if el.parity:
            raise ValueError("the differential is not defined on odd letters")
        cached = self._d0_gen.get(el)
        if cached is not None:
            return cached
        sh, alg, va = self.shape, self.alg, self.va
        i, j = el.i, el.j
        ci, cj = sh.col(i), sh.col(j)
        out = State()
        for r in range(1, sh.N + 1):
            cr = sh.col(r)
            if ci > cr >= cj:
                out = out + va.word([(1, alg.e(r, j)), (1, alg.psi(i, r))])
            if cj < cr <= ci:
                out = out - va.word([(1, alg.psi(r, j)), (1, alg.e(i, r))])
        if ci > cj:
            out = out + va.gen(alg.psi(i, j), m=2).scale(sh.zeta(ci))
        hi = sh.hat(i)
        if hi is not None:
            out = out + va.gen(alg.psi(hi, j))
        tj = sh.tilde(j)
        if tj is not None:
            out = out - va.gen(alg.psi(i, tj))
        self._d0_gen[el] = out
        return out

    def d0(self, state):
        """Odd super-derivation extension; commutes with translation."""
        out = State()
        for w, c in state.d.items():
            out = out + self._d0_word(w).scale(c)
        return out

    def _d0_word(self, w):
        if not w:
            return State()
        m, x = w[0]
        if x.parity:
            raise ValueError("the differential is not defined on odd letters")
        rest = State({w[1:]: Fraction(1)})
        # x[-m] acts as the (-m)-th mode of x[-1]|0>, so the derivation
        # contributes the (-m)-th product of the differential of x[-1]|0>
        out = self.va.nth_product(self.d0_of_generator(x), -m, rest)
        inner = self._d0_word(w[1:])
        if not inner.is_zero():
            out = out + self.va.apply_mode(x, -m, inner)
        return out

    # -- generators --------------------------------------------------------

    def admissible(self, p, q):
        return self.shape.block_of_row(p) <= self.shape.block_of_row(q)

    def admissible_pairs(self):
        q1 = self.shape.q[0]
        return [(p, q) for p in range(1, q1 + 1) for q in range(1, q1 + 1)
                if self.admissible(p, q)]

    def _require_admissible(self, p, q):
        if not self.admissible(p, q):
            bp = self.shape.block_of_row(p)
            bq = self.shape.block_of_row(q)
            raise ValueError(f"(p,q)=({p},{q}) inadmissible: "
                             f"block({p})={bp} > block({q})={bq}")

    def w1(self, p, q):
        """Degree-1 generator: sum of e_{i,j}[-1] over same-column cells
        with row(i)=p, row(j)=q."""
        self._require_admissible(p, q)
        return self._w1_raw(p, q)

    def _w1_raw(self, p, q):
        sh, va, alg = self.shape, self.va, self.alg
        out = State()
        for c in range(1, sh.ncols + 1):
            if sh.cell_exists(c, p) and sh.cell_exists(c, q):
                i = sh.encode((c, p))
                j = sh.encode((c, q))
                out = out + va.gen(alg.e(i, j))
        return out

    def w2(self, p, q, split=None):
        """Degree-2 generator: the four-sum display, with the quadratic
        split read from the closed row-window of q (overridable; the OPE
        identities need the same split on both sides of an equation).

        Any split at either boundary of the closed row-window of q still
        gives a kernel element (candidates differ by a product of
        degree-1 generators);
        the closed-window value is the one under which the zero-mode
        identities and the relation suites close, and is the default.
        """
        if split is None:
            self._require_admissible(p, q)
            split = self.shape.split_row(q)
        sh, va, alg = self.shape, self.va, self.alg
        out = State()
        by_row = {}
        for idx in range(1, sh.N + 1):
            by_row.setdefault(sh.row(idx), []).append(idx)
        for i in by_row.get(p, []):
            for j in by_row.get(q, []):
                ci, cj = sh.col(i), sh.col(j)
                if ci == cj + 1:
                    out = out + va.gen(alg.e(i, j))
                if ci == cj:
                    out = out - va.gen(alg.e(i, j), m=2).scale(sh.gamma(ci))
        # quadratic sums: u and v share a row value, col(u)=col(j), col(v)=col(i)
        for i in by_row.get(p, []):
            for j in by_row.get(q, []):
                ci, cj = sh.col(i), sh.col(j)
                for rho in range(1, sh.q[0] + 1):
                    if not (sh.cell_exists(cj, rho) and sh.cell_exists(ci, rho)):
                        continue
                    u = sh.encode((cj, rho))
                    v = sh.encode((ci, rho))
                    if cj < ci and rho > split:
                        out = out + self.va.word([(1, alg.e(u, j)), (1, alg.e(i, v))])
                    if cj >= ci and rho <= split:
                        out = out - self.va.word([(1, alg.e(u, j)), (1, alg.e(i, v))])
        return out

    def w_tilde(self, r, a, i, j):
        """Block-relative alias: indices shifted into block a's row window."""
        off = self.shape.q[0] - self.shape.q_at(a)
        gen = self.w1 if r == 1 else self.w2
        return gen(i + off, j + off)

    def w_hat(self, i, j):
        """Reversed alias in the last block."""
        qs = self.shape.q[self.shape.s - 1]
        return self.w_tilde(1, self.shape.s, qs - i, qs - j)

    # -- verification suites ----------------------------------------------

    def check_kernel(self):
        """Kernel membership of both generators at every admissible pair."""
        report = []
        for p, q in self.admissible_pairs():
            for r, gen in ((1, self.w1), (2, self.w2)):
                img = self.d0(gen(p, q))
                report.append({
                    "check": "kernel", "r": r, "p": p, "q": q,
                    "status": "pass" if img.is_zero() else "fail",
                    "witness": None if img.is_zero() else repr(img),
                })
        return report

    def proof_trace(self, p, q):
        """The six intermediate sums in the degree-2 kernel computation and
        their three displayed group cancellations, plus the telescoping
        vanishing of the hat/tilde group."""
        sh, va, alg = self.shape, self.va, self.alg
        self._require_admissible(p, q)
        split = sh.split_row(q)
        by_row = {}
        for idx in range(1, sh.N + 1):
            by_row.setdefault(sh.row(idx), []).append(idx)

        t1 = State(); t2 = State(); t3 = State(); t4 = State()
        for i in by_row.get(p, []):
            for j in by_row.get(q, []):
                ci, cj = sh.col(i), sh.col(j)
                if ci != cj + 1:
                    continue
                for r in range(1, sh.N + 1):
                    if sh.col(r) == cj:
                        t1 = t1 + va.word([(1, alg.e(r, j)), (1, alg.psi(i, r))])
                    if sh.col(r) == ci:
                        t2 = t2 - va.word([(1, alg.psi(r, j)), (1, alg.e(i, r))])
                t3 = t3 + va.gen(alg.psi(i, j), m=2).scale(sh.zeta(ci))
                hi = sh.hat(i)
                if hi is not None:
                    t4 = t4 + va.gen(alg.psi(hi, j))
                tj = sh.tilde(j)
                if tj is not None:
                    t4 = t4 - va.gen(alg.psi(i, tj))

        e6 = State()
        for i in by_row.get(p, []):
            for j in by_row.get(q, []):
                if sh.col(i) != sh.col(j):
                    continue
                hi, tj = sh.hat(i), sh.tilde(j)
                coeff = sh.gamma(sh.col(i))
                if hi is not None:
                    e6 = e6 - va.gen(alg.psi(hi, j), m=2).scale(coeff)
                if tj is not None:
                    e6 = e6 + va.gen(alg.psi(i, tj), m=2).scale(coeff)

        e7 = State(); e8 = State(); e9 = State(); e10 = State()
        for i in by_row.get(p, []):
            for j in by_row.get(q, []):
                ci, cj = sh.col(i), sh.col(j)
                for rho in range(1, sh.q[0] + 1):
                    if not (sh.cell_exists(cj, rho) and sh.cell_exists(ci, rho)):
                        continue
                    u = sh.encode((cj, rho))
                    v = sh.encode((ci, rho))
                    if cj < ci and rho > split:
                        d_uj = self.d0_of_generator(alg.e(u, j))
                        e7 = e7 + va.nth_product(d_uj, -1, va.gen(alg.e(i, v)))
                        d_iv = self.d0_of_generator(alg.e(i, v))
                        e8 = e8 + va.apply_mode(alg.e(u, j), -1, d_iv)
                    if cj >= ci and rho <= split:
                        d_uj = self.d0_of_generator(alg.e(u, j))
                        e9 = e9 - va.nth_product(d_uj, -1, va.gen(alg.e(i, v)))
                        d_iv = self.d0_of_generator(alg.e(i, v))
                        e10 = e10 - va.apply_mode(alg.e(u, j), -1, d_iv)

        return {
            "groups": {"t1": t1, "t2": t2, "t3": t3, "t4": t4,
                       "e6": e6, "e7": e7, "e8": e8, "e9": e9, "e10": e10},
            "cancellations": {
                "t1+e8+e10": (t1 + e8 + e10).is_zero(),
                "t2+e7+e9": (t2 + e7 + e9).is_zero(),
                "t3+e6": (t3 + e6).is_zero(),
                "t4": t4.is_zero(),
            },
        }

    def check_tho1(self):
        """The zero-mode action identities on both generator families.

        In the second identity, every degree-2 generator (the argument and
        both right-hand occurrences) is built with the quadratic split of
        the argument's q index, and the correction-term condition reads
        its bound from that same split; mixing splits, or reading the
        bound from another index, breaks the identity (validated by this
        suite).
        """
        sh = self.shape
        report = []
        pairs = self.admissible_pairs()
        w1 = {pq: self.w1(*pq) for pq in pairs}
        for (i, j) in pairs:
            for (p, q) in pairs:
                lhs = self.va.nth_product(w1[(i, j)], 0, w1[(p, q)])
                rhs = State()
                if j == p:
                    rhs = rhs + w1[(i, q)]
                if i == q:
                    rhs = rhs - w1[(p, j)]
                ok1 = lhs == rhs
                report.append({"check": "tho1.1", "indices": (i, j, p, q),
                               "status": "pass" if ok1 else "fail",
                               "witness": None if ok1 else repr(lhs - rhs)})

                thr = sh.split_row(q)
                lhs2 = self.va.nth_product(w1[(i, j)], 0, self.w2(p, q, split=thr))
                rhs2 = State()
                if j == p:
                    rhs2 = rhs2 + self.w2(i, q, split=thr)
                if i == q:
                    rhs2 = rhs2 - self.w2(p, j, split=thr)
                if j > thr >= i:
                    rhs2 = rhs2 + self.va.nth_product(w1[(i, q)], -1, w1[(p, j)])
                ok2 = lhs2 == rhs2
                report.append({"check": "tho1.2", "indices": (i, j, p, q),
                               "status": "pass" if ok2 else "fail",
                               "witness": None if ok2 else repr(lhs2 - rhs2)})
        return report

    def first_product_table(self):
        """Central terms of the first products of degree-1 generators,
        recorded as data (not displayed in the source)."""
        out = {}
        pairs = self.admissible_pairs()
        for (i, j) in pairs:
            for (p, q) in pairs:
                prod = self.va.nth_product(self.w1(i, j), 1, self.w1(p, q))
                c = prod.d.get((), None)
                if c is not None:
                    out[(i, j, p, q)] = c
        return out

    # -- block-diagonal projection ----------------------------------------

    def miura(self, state):
        """Keep words whose letters all satisfy col(i)=col(j); any word with
        a strictly column-lowering letter maps to zero."""
        sh = self.shape
        out = {}
        for w, c in state.d.items():
            keep = True
            for m, el in w:
                if el.parity:
                    raise ValueError("projection expects inputs without odd letters")
                if sh.col(el.i) != sh.col(el.j):
                    keep = False
                    break
            if keep:
                out[w] = c
        return State(out)
