"""The Lie superalgebra spanned by non-raising matrix units e_{i,j} and odd
elements psi_{i,j}, with its bracket and invariant bilinear forms.

Even part: e_{i,j} with col(i) >= col(j) (the non-positive-degree part of
gl(N) under the column grading).  Odd part: psi_{i,j} with col(i) > col(j).
The bracket is the matrix-unit bracket on the even part,
[e_{i,j}, psi_{p,q}] = delta_{j,p} psi_{i,q} - delta_{i,q} psi_{p,j},
and odd-odd brackets vanish.
"""


class BasisElement:
    """Interned basis element; compare/hash by (kind, i, j)."""

    __slots__ = ("kind", "i", "j", "parity", "order", "_h")

    def __init__(self, kind, i, j, order):
        self.kind = kind          # "e" or "psi"
        self.i = i
        self.j = j
        self.parity = 0 if kind == "e" else 1
        self.order = order        # position in the fixed total order
        self._h = hash((kind, i, j))

    def __hash__(self):
        return self._h

    def __eq__(self, other):
        return self is other or (isinstance(other, BasisElement)
                                 and self.kind == other.kind
                                 and self.i == other.i and self.j == other.j)

    def __repr__(self):
        return f"{self.kind}[{self.i},{self.j}]"


class SuperAlgebra:
    """Per-shape context: interned basis, bracket, and the forms."""

    def __init__(self, shape):
        self.shape = shape
        n = shape.N
        cols = [None] + [shape.col(i) for i in range(1, n + 1)]
        rows = [None] + [shape.row(i) for i in range(1, n + 1)]
        self._cols = cols
        # fixed total order: even before odd, then lex in (col i, row i, col j, row j)
        keys = []
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if cols[i] >= cols[j]:
                    keys.append((0, cols[i], rows[i], cols[j], rows[j], "e", i, j))
                if cols[i] > cols[j]:
                    keys.append((1, cols[i], rows[i], cols[j], rows[j], "psi", i, j))
        keys.sort()
        self._elems = {}
        self.basis = []
        for pos, key in enumerate(keys):
            kind, i, j = key[5], key[6], key[7]
            el = BasisElement(kind, i, j, pos)
            self._elems[(kind, i, j)] = el
            self.basis.append(el)

    def e(self, i, j):
        el = self._elems.get(("e", i, j))
        if el is None:
            raise ValueError(f"e[{i},{j}] is not in the non-raising subalgebra "
                             f"(col {self._cols[i]} < col {self._cols[j]})")
        return el

    def psi(self, i, j):
        el = self._elems.get(("psi", i, j))
        if el is None:
            raise ValueError(f"psi[{i},{j}] requires col({i}) > col({j})")
        return el

    def bracket(self, x, y):
        """Super bracket as a dict {BasisElement: int coefficient}."""
        if x.parity and y.parity:
            return {}
        if x.parity:  # [psi, e] = -[e, psi]
            return {el: -c for el, c in self.bracket(y, x).items()}
        out = {}
        # [e_{i,j}, y_{p,q}] = delta_{j,p} y_{i,q} - delta_{i,q} y_{p,j}
        mk = self.e if y.parity == 0 else self.psi
        if x.j == y.i:
            self._acc(out, mk, x.i, y.j, 1)
        if x.i == y.j:
            self._acc(out, mk, y.i, x.j, -1)
        return {el: c for el, c in out.items() if c}

    def _acc(self, out, mk, i, j, c):
        # closure check: the bracket of valid elements must stay in the algebra
        try:
            el = mk(i, j)
        except ValueError as exc:
            raise AssertionError(f"bracket left the algebra at ({i},{j})") from exc
        out[el] = out.get(el, 0) + c

    def kappa(self, x, y):
        """The level-shifted form on the even part."""
        if x.parity or y.parity:
            raise ValueError("kappa is defined on the even part only")
        val = self.shape.k * 0
        if x.i == y.j and y.i == x.j:
            val = val + self.shape.zeta(self._cols[x.i])
        if x.i == x.j and y.i == y.j:
            val = val + 1
        return val

    def kappa_tilde(self, x, y):
        """Extension of kappa by zero on anything involving an odd element."""
        if x.parity or y.parity:
            return self.shape.k * 0
        return self.kappa(x, y)

    def gl_form(self, x, y):
        """(e_{i,j} | e_{p,q}) = k delta_{i,q} delta_{p,j} + delta_{i,j} delta_{p,q}."""
        if x.parity or y.parity:
            raise ValueError("the gl form is defined on matrix units only")
        val = self.shape.k * 0
        if x.i == y.j and y.i == x.j:
            val = val + self.shape.k
        if x.i == x.j and y.i == y.j:
            val = val + 1
        return val
