"""Shape data: column heights, the index/cell bijection, shift maps and constants.

A shape is the datum (q_1 > ... > q_s > q_{s+1} = 0; l_1, ..., l_s; k; hbar).
Block u contributes l_u columns of height q_u; columns are numbered left to
right, and a column of height h occupies the row band [q_1 - h + 1, q_1].
Cells are enumerated block by block, column by column, giving the index
range [1, N] with N = sum l_u q_u.
"""

from collections import namedtuple
from fractions import Fraction

from .scalars import RatFunc

Cell = namedtuple("Cell", ["col", "row"])


class PyramidShape:
    """Immutable shape datum plus all derived index maps and constants."""

    def __init__(self, q, l, k=None, hbar=1):
        q = tuple(int(x) for x in q)
        l = tuple(int(x) for x in l)
        if len(q) != len(l) or not q:
            raise ValueError("q and l must be nonempty and of equal length")
        if any(x <= 0 for x in q) or any(x <= 0 for x in l):
            raise ValueError("q and l entries must be positive")
        if any(q[i] <= q[i + 1] for i in range(len(q) - 1)):
            raise ValueError("q must be strictly decreasing")
        self.s = len(q)
        self.q = q
        self.l = l
        self.k = RatFunc.variable("k") if k is None else k
        self.hbar = hbar
        self.N = sum(lu * qu for lu, qu in zip(l, q))
        self.ncols = sum(l)
        # cumulative column counts and index counts per block
        self._colpre = [0]
        self._idxpre = [0]
        for u in range(self.s):
            self._colpre.append(self._colpre[-1] + l[u])
            self._idxpre.append(self._idxpre[-1] + l[u] * q[u])
        self._col_block = {}
        for u in range(1, self.s + 1):
            for c in range(self._colpre[u - 1] + 1, self._colpre[u] + 1):
                self._col_block[c] = u

    def q_at(self, u):
        """q_u with the convention q_{s+1} = 0."""
        return self.q[u - 1] if u <= self.s else 0

    def block_of_column(self, c):
        if not 1 <= c <= self.ncols:
            raise ValueError(f"column {c} out of range [1,{self.ncols}]")
        return self._col_block[c]

    def height(self, c):
        return self.q[self.block_of_column(c) - 1]

    def block_of_row(self, row):
        """The block u with q_1 - q_u < row <= q_1 - q_{u+1}.

        Row values in this band occur exactly in the columns of blocks
        1..u.  The half-open windows in the source use the opposite
        closure; this one is the convention under which every generator
        in the admissible range is closed under the differential (see
        block_convention_search).
        """
        if not 1 <= row <= self.q[0]:
            raise ValueError(f"row {row} out of range [1,{self.q[0]}]")
        for u in range(1, self.s + 1):
            if self.q[0] - self.q_at(u) < row <= self.q[0] - self.q_at(u + 1):
                return u
        raise AssertionError("unreachable: row bands partition [1,q_1]")

    def split_row(self, row):
        """The quadratic-split threshold for a generator index: the lower
        boundary q_1 - q_u of the row band containing the row.

        Both band boundaries yield elements killed by the differential
        and both satisfy the quadratic commutation identities, but only
        the lower boundary makes the degree-one generator images close
        the full relation suite; on a single-column shape it reduces the
        quadratic part of the weight-two generators to zero, which is
        the correct degeneration there.
        """
        u = self.block_of_row(row)
        return self.q[0] - self.q_at(u)

    def cells(self):
        return [self.decode(i) for i in range(1, self.N + 1)]

    def cell_exists(self, col, row):
        if not 1 <= col <= self.ncols:
            return False
        return self.q[0] - self.height(col) + 1 <= row <= self.q[0]

    def decode(self, i):
        if not 1 <= i <= self.N:
            raise ValueError(f"index {i} out of range [1,{self.N}]")
        u = 1
        while i > self._idxpre[u]:
            u += 1
        off = i - self._idxpre[u - 1] - 1
        qu = self.q[u - 1]
        col = self._colpre[u - 1] + 1 + off // qu
        row = self.q[0] - qu + 1 + off % qu
        return Cell(col, row)

    def encode(self, cell):
        col, row = cell
        if not self.cell_exists(col, row):
            raise ValueError(f"no cell at (col={col}, row={row})")
        u = self.block_of_column(col)
        qu = self.q[u - 1]
        return (self._idxpre[u - 1]
                + (col - self._colpre[u - 1] - 1) * qu
                + (row - self.q[0] + qu))

    def col(self, i):
        return self.decode(i).col

    def row(self, i):
        return self.decode(i).row

    def hat(self, i):
        """Index one column to the right in the same row, or None."""
        c = self.decode(i)
        if self.cell_exists(c.col + 1, c.row):
            return self.encode(Cell(c.col + 1, c.row))
        return None

    def tilde(self, i):
        """Index one column to the left in the same row, or None.

        Defined exactly on {q_1 + 1, ..., N}: heights weakly decrease, so
        the left neighbour always exists once col >= 2.
        """
        c = self.decode(i)
        if c.col == 1:
            return None
        return self.encode(Cell(c.col - 1, c.row))

    def zeta(self, g):
        """zeta_g = k + N - q_u for column g in block u."""
        u = self.block_of_column(g)
        return self.k + (self.N - self.q[u - 1])

    def gamma(self, c):
        """gamma_c = sum of zeta_b over columns b > c (zero for the last column)."""
        if not 1 <= c <= self.ncols:
            raise ValueError(f"column {c} out of range [1,{self.ncols}]")
        out = self.k * 0
        for b in range(c + 1, self.ncols + 1):
            out = out + self.zeta(b)
        return out

    def epsilon_for(self, z):
        """The parameter value pinned by (eps_z + q_z*hbar)/hbar = k + N."""
        if not 1 <= z <= self.s:
            raise ValueError(f"block {z} out of range [1,{self.s}]")
        return self.hbar * (self.k + self.N) - self.q[z - 1] * self.hbar

    def nilpotent_f(self):
        """The pairs (hat(j), j) over the full hat domain."""
        return [(self.hat(j), j) for j in range(1, self.N + 1)
                if self.hat(j) is not None]

    def jordan_type(self):
        """Jordan type of f from the shape: part L_u with multiplicity q_u - q_{u+1}."""
        parts = []
        for u in range(1, self.s + 1):
            mult = self.q_at(u) - self.q_at(u + 1)
            parts.extend([self._colpre[u]] * mult)
        return tuple(sorted(parts, reverse=True))

    def degree(self, i, j):
        """Grading degree of the matrix unit with row index i, column index j."""
        return self.col(j) - self.col(i)

    def specialize(self, k_value):
        """Copy of the shape with the level fixed to an exact rational."""
        return PyramidShape(self.q, self.l, k=Fraction(k_value), hbar=self.hbar)

    def __repr__(self):
        return f"PyramidShape(q={list(self.q)}, l={list(self.l)}, k={self.k})"


def jordan_type_bruteforce(shape):
    """Jordan type of f computed from ranks of matrix powers, as an oracle."""
    n = shape.N
    mat = [[Fraction(0)] * n for _ in range(n)]
    for i, j in shape.nilpotent_f():
        mat[i - 1][j - 1] = Fraction(1)

    def rank(m):
        m = [row[:] for row in m]
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            for i in range(n):
                if i != r and m[i][c] != 0:
                    f = m[i][c] / m[r][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            r += 1
        return r

    def matmul(a, b):
        return [[sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)]

    ranks = [n]
    power = [row[:] for row in mat]
    while True:
        r = rank(power)
        ranks.append(r)
        if r == 0:
            break
        power = matmul(power, mat)
    # number of Jordan blocks of size >= m is rank(f^{m-1}) - rank(f^m)
    parts = []
    for m in range(1, len(ranks)):
        count = (ranks[m - 1] - ranks[m]) - (ranks[m] - ranks[m + 1] if m + 1 < len(ranks) else 0)
        parts.extend([m] * count)
    return tuple(sorted(parts, reverse=True))


def parse_shape(text, hbar=1):
    """Parse a shape literal like "q=2,1;l=2,1;k=7/3" (k optional, default symbolic)."""
    q = l = None
    k = None
    for field in text.split(";"):
        field = field.strip()
        if not field:
            continue
        name, _, val = field.partition("=")
        name = name.strip()
        if name == "q":
            q = [int(x) for x in val.split(",")]
        elif name == "l":
            l = [int(x) for x in val.split(",")]
        elif name == "k":
            k = Fraction(val.strip())
        else:
            raise ValueError(f"unknown shape field {name!r}")
    if q is None or l is None:
        raise ValueError("shape literal must set q and l")
    return PyramidShape(q, l, k=k, hbar=hbar)


def block_convention_search(shape):
    """Try both closures of the row-block windows; return, per convention,
    whether every generator in the resulting admissible range is killed by
    the differential.  Used once to fix the convention; kept as a utility.
    """
    from .brst import WAlgebra

    w = WAlgebra(shape)
    results = {}
    for name, block_fn in [("lower-open", shape.block_of_row),
                           ("upper-open", lambda r: _upper_open_block(shape, r))]:
        ok = True
        for p in range(1, shape.q[0] + 1):
            for qq in range(1, shape.q[0] + 1):
                try:
                    if block_fn(p) > block_fn(qq):
                        continue
                except ValueError:
                    # the convention fails to assign a block inside its
                    # own row range; it cannot be the intended reading
                    ok = False
                    continue
                if not w.d0(w._w1_raw(p, qq)).is_zero():
                    ok = False
                if not w.d0(w.w2(p, qq, split=shape.split_row(qq))).is_zero():
                    ok = False
        results[name] = ok
    return results


def _upper_open_block(shape, row):
    for u in range(1, shape.s + 1):
        if shape.q[0] - shape.q_at(u) <= row < shape.q[0] - shape.q_at(u + 1):
            return u
    raise ValueError(f"row {row} has no block under the upper-open convention")
