"""Loop-Yangian presentations and their realizations inside the mode
algebra of the W-algebra: the finite presentation, the generator image
tables per column-height window, the rank-raising embedding, relation
verification, the factorization through the block-diagonal projection,
and the degree-one extension obstruction.
"""

from fractions import Fraction

from .brst import WAlgebra
from .modes import (ModeAtom, ModeWord, TailSum, act, lie_bracket,
                    op_residual, probe_states)
from .pyramid import PyramidShape


def cartan(n, i, j):
    """Cyclic Cartan matrix entry on Z/nZ (n >= 3)."""
    i %= n
    j %= n
    if i == j:
        return 2
    if (i - j) % n in (1, n - 1):
        return -1
    return 0


def infinite_presentation_data(n):
    """The full presentation with generators X^pm_{i,r}, H_{i,r} for all
    r >= 0, recorded as data only: the plus/minus series convention of
    the mixed-degree relations is not pinned down here, so nothing from
    this table is machine-verified."""
    return {
        "generators": f"X^+_{{i,r}}, X^-_{{i,r}}, H_{{i,r}}, 0<=i<={n-1}, r>=0",
        "relations": [
            "[H_{i,r}, H_{j,s}] = 0",
            "[X^+_{i,r}, X^-_{j,s}] = delta_{i,j} H_{i,r+s}",
            "[H_{i,0}, X^pm_{j,r}] = pm a_{i,j} X^pm_{j,r}",
            "[H^pm_{i,r+1}, X^pm_{j,s}] - [H^pm_{i,r}, X^pm_{j,s+1}] "
            "= pm a_{i,j} (hbar/2) {H^pm_{i,r}, X^pm_{j,s}}  (untwisted pairs)",
            "twisted variants at (0,n-1), (n-1,0) with the extra "
            "(eps + n hbar/2) commutator term",
            "[X^pm_{i,r+1}, X^pm_{j,s}] - [X^pm_{i,r}, X^pm_{j,s+1}] "
            "= pm a_{i,j} (hbar/2) {X^pm_{i,r}, X^pm_{j,s}}  (untwisted pairs)",
            "Serre: sum over permutations of (ad X^pm_{i,r_sigma}) applied "
            "1 - a_{i,j} times to X^pm_{j,s} = 0 for i != j",
        ],
        "verified": False,
    }


class FinitePresentation:
    """The finite presentation: generators X^pm_{i,r}, H_{i,r} with
    r in {0,1}, and the relation instances eq2.1-eq2.10, with
    Htilde_{i,1} = H_{i,1} - (hbar/2) H_{i,0}^2."""

    def __init__(self, n, hbar, eps):
        if n < 3:
            raise ValueError("the presentation needs n >= 3")
        self.n = n
        self.hbar = hbar
        self.eps = eps

    def a(self, i, j):
        return cartan(self.n, i, j)

    def relation_instances(self):
        """List of (label, builder); builder(images) returns the ModeWord
        that must vanish, where images maps (kind, i, r) to a ModeWord."""
        n, hbar = self.n, self.hbar
        half = Fraction(1, 2) * hbar
        twist = self.eps + Fraction(n, 2) * hbar
        out = []

        def g(images, kind, i, r):
            return images[(kind, i % n, r)]

        def htilde(images, i):
            h0 = g(images, "H", i, 0)
            return g(images, "H", i, 1) - (h0 * h0).scale(half)

        # eq2.1: Cartan elements commute
        hs = [("H", i, r) for i in range(n) for r in (0, 1)]
        for x in range(len(hs)):
            for y in range(x + 1, len(hs)):
                (_, i, r), (_, j, s) = hs[x], hs[y]
                out.append((f"eq2.1[H{i},{r};H{j},{s}]",
                            lambda im, i=i, r=r, j=j, s=s:
                            g(im, "H", i, r).commutator(g(im, "H", j, s))))
        # eq2.2 / eq2.3: raising against lowering
        for i in range(n):
            for j in range(n):
                d = 1 if i == j else 0
                out.append((f"eq2.2[{i},{j}]",
                            lambda im, i=i, j=j, d=d:
                            g(im, "X+", i, 0).commutator(g(im, "X-", j, 0))
                            - g(im, "H", i, 0).scale(d)))
                out.append((f"eq2.3a[{i},{j}]",
                            lambda im, i=i, j=j, d=d:
                            g(im, "X+", i, 1).commutator(g(im, "X-", j, 0))
                            - g(im, "H", i, 1).scale(d)))
                out.append((f"eq2.3b[{i},{j}]",
                            lambda im, i=i, j=j, d=d:
                            g(im, "X+", i, 0).commutator(g(im, "X-", j, 1))
                            - g(im, "H", i, 1).scale(d)))
        # eq2.4: weights under the Cartan zero modes
        for i in range(n):
            for j in range(n):
                for r in (0, 1):
                    for kind, sgn in (("X+", 1), ("X-", -1)):
                        out.append((f"eq2.4[{i};{kind}{j},{r}]",
                                    lambda im, i=i, j=j, r=r, kind=kind, sgn=sgn:
                                    g(im, "H", i, 0).commutator(g(im, kind, j, r))
                                    - g(im, kind, j, r).scale(sgn * self.a(i, j))))
        # eq2.5-2.7: degree-one Cartan action
        for i in range(n):
            for j in range(n):
                for kind, sgn in (("X+", 1), ("X-", -1)):
                    if (i, j) == (0, n - 1):
                        out.append((f"eq2.6[{kind}]",
                                    lambda im, kind=kind, sgn=sgn:
                                    htilde(im, 0).commutator(g(im, kind, n - 1, 0))
                                    + (g(im, kind, n - 1, 1)
                                       + g(im, kind, n - 1, 0).scale(twist)).scale(sgn)))
                    elif (i, j) == (n - 1, 0):
                        out.append((f"eq2.7[{kind}]",
                                    lambda im, kind=kind, sgn=sgn:
                                    htilde(im, n - 1).commutator(g(im, kind, 0, 0))
                                    + (g(im, kind, 0, 1)
                                       - g(im, kind, 0, 0).scale(twist)).scale(sgn)))
                    else:
                        out.append((f"eq2.5[{i};{kind}{j}]",
                                    lambda im, i=i, j=j, kind=kind, sgn=sgn:
                                    htilde(im, i).commutator(g(im, kind, j, 0))
                                    - g(im, kind, j, 1).scale(sgn * self.a(i, j))))
        # eq2.8 / eq2.9: degree mixing among same-sign generators
        for i in range(n):
            for j in range(n):
                for kind, sgn in (("X+", 1), ("X-", -1)):
                    if (i, j) == (0, n - 1):
                        out.append((f"eq2.9[{kind}]",
                                    lambda im, kind=kind, sgn=sgn:
                                    g(im, kind, 0, 1).commutator(g(im, kind, n - 1, 0))
                                    - g(im, kind, 0, 0).commutator(g(im, kind, n - 1, 1))
                                    + g(im, kind, 0, 0).anticommutator(
                                        g(im, kind, n - 1, 0)).scale(sgn * half)
                                    - g(im, kind, 0, 0).commutator(
                                        g(im, kind, n - 1, 0)).scale(twist)))
                    elif (i, j) == (n - 1, 0):
                        continue  # the transpose of eq2.9, not displayed
                    else:
                        out.append((f"eq2.8[{kind};{i},{j}]",
                                    lambda im, i=i, j=j, kind=kind, sgn=sgn:
                                    g(im, kind, i, 1).commutator(g(im, kind, j, 0))
                                    - g(im, kind, i, 0).commutator(g(im, kind, j, 1))
                                    - g(im, kind, i, 0).anticommutator(
                                        g(im, kind, j, 0)).scale(sgn * half * self.a(i, j))))
        # eq2.10: Serre relations on zero modes
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for kind in ("X+", "X-"):
                    folds = 1 + abs(self.a(i, j))
                    out.append((f"eq2.10[{kind};{i},{j}]",
                                lambda im, i=i, j=j, kind=kind, folds=folds:
                                self._ad_power(g(im, kind, i, 0), folds,
                                               g(im, kind, j, 0))))
        return out

    @staticmethod
    def _ad_power(x, folds, y):
        for _ in range(folds):
            y = x.commutator(y)
        return y


class PhiMap:
    """Generator images inside the mode algebra of a W-algebra, for the
    window of rows carried by the first z column blocks.

    With n = q_z - q_{z+1} and off = q_1 - q_z, window index i labels row
    off + i; every pair in the window is admissible, and the zero-node
    images are loop-twisted by t^{pm 1}.
    """

    def __init__(self, walg, z, corrections=True):
        shape = walg.shape
        self.walg = walg
        self.va = walg.va
        self.z = z
        self.n = shape.q_at(z) - shape.q_at(z + 1)
        if self.n < 3:
            raise ValueError(f"window height q_{z}-q_{z+1} = {self.n} < 3")
        self.off = shape.q[0] - shape.q_at(z)
        self.hbar = shape.hbar
        self.eps = shape.epsilon_for(z)
        self.corrections = corrections
        self.corrections_applied = []
        self._w1 = {}
        self._w2 = {}
        self.images = {}
        self._build()

    def w1(self, i, j):
        key = (i, j)
        if key not in self._w1:
            self._w1[key] = self.walg.w1(self.off + i, self.off + j)
        return self._w1[key]

    def w2(self, i, j):
        key = (i, j)
        if key not in self._w2:
            self._w2[key] = self.walg.w2(self.off + i, self.off + j)
        return self._w2[key]

    def e_atom(self, i, j, power, coeff=1):
        """Image of the current E_{i,j} t^power of the window."""
        return ModeWord.atom(self.w1(i, j), power, coeff)

    def _build(self):
        n, hbar = self.n, self.hbar
        img = self.images
        for i in range(n):
            if i == 0:
                img[("X+", 0, 0)] = self.e_atom(n, 1, 1)
                img[("X-", 0, 0)] = self.e_atom(1, n, -1)
            else:
                img[("X+", i, 0)] = self.e_atom(i, i + 1, 0)
                img[("X-", i, 0)] = self.e_atom(i + 1, i, 0)
            ap = img[("X+", i, 0)].terms[0][1][0]
            am = img[("X-", i, 0)].terms[0][1][0]
            img[("H", i, 0)] = lie_bracket(self.va, ap, am)
        for i in range(1, n):
            img[("H", i, 1)] = self._h1(i)
            img[("X+", i, 1)] = self._x1(i, +1)
            img[("X-", i, 1)] = self._x1(i, -1)
        # zero-node degree-one images are not displayed; they are pinned
        # by the degree-one Cartan action at the adjacent node (a_{1,0} = -1)
        # and by the mixed-degree pairing, and recorded as derived.
        htilde1 = (img[("H", 1, 1)]
                   - (img[("H", 1, 0)] * img[("H", 1, 0)]).scale(Fraction(1, 2) * hbar))
        img[("X+", 0, 1)] = htilde1.commutator(img[("X+", 0, 0)]).scale(-1)
        img[("X-", 0, 1)] = htilde1.commutator(img[("X-", 0, 0)])
        img[("H", 0, 1)] = img[("X+", 0, 1)].commutator(img[("X-", 0, 0)])

    def _h1(self, i):
        n, hbar = self.n, self.hbar
        # the quadratic diagonal term carries a minus sign: subtracting
        # (hbar/2) H_{i,0}^2 from it must leave only the two squares
        # -(hbar/2)(W1_{i,i})^2 - (hbar/2)(W1_{i+1,i+1})^2 seen in the
        # companion display of the degree-one Cartan images
        out = (ModeWord.atom(self.w2(i, i), 1, -hbar)
               + ModeWord.atom(self.w2(i + 1, i + 1), 1, hbar)
               + self.images[("H", i, 0)].scale(-Fraction(i, 2) * hbar)
               + (self.e_atom(i, i, 0) * self.e_atom(i + 1, i + 1, 0)).scale(-hbar))
        for u in range(1, i + 1):
            out = out + ModeWord.tail(self.w1(i, u), self.w1(u, i), 0, hbar)
            out = out - ModeWord.tail(self.w1(i + 1, u), self.w1(u, i + 1), 0, hbar)
        for u in range(i + 1, n + 1):
            out = out + ModeWord.tail(self.w1(i, u), self.w1(u, i), 1, hbar)
            out = out - ModeWord.tail(self.w1(i + 1, u), self.w1(u, i + 1), 1, hbar)
        return out

    def _x1(self, i, sign):
        n, hbar = self.n, self.hbar
        if sign > 0:
            row_a, row_b = i, i + 1
        else:
            row_a, row_b = i + 1, i
        if sign < 0 and not self.corrections:
            # the literal text reads the leading term with second index i+2
            if i + 2 > n:
                raise ValueError(
                    "literal leading index i+2 leaves the window at the "
                    "top node; rerun with corrections enabled")
            head_cols = (i + 1, i + 2)
        else:
            head_cols = (row_a, row_b)
            if sign < 0:
                self._log("X-_{i,1} leading term read as the transpose "
                          "of the X+ head (second index i, not i+2)")
        kind = ("X+", "X-")[sign < 0]
        out = (ModeWord.atom(self.w2(*head_cols), 1, -hbar)
               + self.images[(kind, i, 0)].scale(-Fraction(i, 2) * hbar))
        for u in range(1, i + 1):
            out = out + ModeWord.tail(self.w1(row_a, u), self.w1(u, row_b), 0, hbar)
        for u in range(i + 1, n + 1):
            out = out + ModeWord.tail(self.w1(row_a, u), self.w1(u, row_b), 1, hbar)
        return out

    def _log(self, note):
        if note not in self.corrections_applied:
            self.corrections_applied.append(note)

    def presentation(self):
        return FinitePresentation(self.n, self.hbar, self.eps)


def verify_relations(shape, z, K, probe_weight=2, corrections=True,
                     stop_on_fail=False):
    """Evaluate every finite-presentation relation instance on the probe
    slice of the truncated vacuum module; returns a report."""
    walg = WAlgebra(shape)
    phi = PhiMap(walg, z, corrections=corrections)
    pres = phi.presentation()
    probes = probe_states(walg.va, probe_weight)
    results = []
    for label, builder in pres.relation_instances():
        word = builder(phi.images)
        res = op_residual(walg.va, word, K, probes)
        ok = res is None
        results.append({"relation": label,
                        "status": "pass" if ok else "fail",
                        "witness": None if ok else repr(res[1])})
        if not ok and stop_on_fail:
            break
    failed = [r for r in results if r["status"] == "fail"]
    return {
        "check": "yangian-relations",
        "shape": {"q": list(shape.q), "l": list(shape.l)},
        "z": z, "n": phi.n, "K": K, "probe_weight": probe_weight,
        "k": str(shape.k), "epsilon": str(phi.eps),
        "corrections": phi.corrections_applied,
        "instances": len(results), "failures": len(failed),
        "status": "pass" if not failed else "fail",
        "results": results,
    }


# -- rank-raising embedding and factorization ------------------------------

def psi_through(phi, n, gen):
    """Image of a rank-n finite-presentation generator under the
    rank-raising embedding into rank m = window height of phi, realized
    directly inside phi's mode algebra (currents E_{i,j}t^y become the
    degree-1 generator modes of the window)."""
    m, hbar = phi.n, phi.hbar
    if not 3 <= n < m:
        raise ValueError("need 3 <= n < m")
    kind, i, r = gen
    if r == 0:
        if kind == "H":
            if i == 0:
                out = phi.images[("H", 0, 0)]
                for u in range(n, m):
                    out = out + phi.images[("H", u, 0)]
                return out
            return phi.images[("H", i, 0)]
        if i == 0:
            return (phi.e_atom(n, 1, 1) if kind == "X+"
                    else phi.e_atom(1, n, -1))
        return (phi.e_atom(i, i + 1, 0) if kind == "X+"
                else phi.e_atom(i + 1, i, 0))
    if i == 0:
        raise ValueError("zero-node degree-one images are derived, not mapped")
    if kind == "H":
        out = phi.images[("H", i, 1)]
        for u in range(n + 1, m + 1):
            out = out - ModeWord.tail(phi.w1(i, u), phi.w1(u, i), 1, hbar)
            out = out + ModeWord.tail(phi.w1(i + 1, u), phi.w1(u, i + 1), 1, hbar)
        return out
    if kind == "X+":
        out = phi.images[("X+", i, 1)]
        for u in range(n + 1, m + 1):
            out = out - ModeWord.tail(phi.w1(i, u), phi.w1(u, i + 1), 1, hbar)
        return out
    out = phi.images[("X-", i, 1)]
    for u in range(n + 1, m + 1):
        out = out - ModeWord.tail(phi.w1(i + 1, u), phi.w1(u, i), 1, hbar)
    return out


def _map_word_states(word, f):
    terms = []
    for coeff, atoms in word.terms:
        mapped = []
        for atom in atoms:
            if isinstance(atom, ModeAtom):
                mapped.append(ModeAtom(f(atom.state), atom.power))
            else:
                mapped.append(TailSum(f(atom.a), f(atom.b), atom.c))
        terms.append((coeff, tuple(mapped)))
    return ModeWord(terms)


def sigma_state(src_shape, dst_alg, dst_shape, state):
    """Relabel a block-diagonal state of a leading-blocks truncation into
    the full shape: cells keep their (col, row) coordinates."""
    from .vertex import State
    out = {}
    for w, c in state.d.items():
        letters = []
        for m, el in w:
            ci = src_shape.decode(el.i)
            cj = src_shape.decode(el.j)
            letters.append((m, dst_alg.e(dst_shape.encode(ci),
                                         dst_shape.encode(cj))))
        out[tuple(letters)] = c
    return State(out)


def check_factorization(shape, z, K, probe_weight=2):
    """The block-diagonal projection of the window images equals the
    composite through the truncated shape: project both sides into the
    column-diagonal subalgebra and compare as operators.

    Left side: project each image of the z-window map.  Right side: map
    the rank (q_z - q_{z+1}) generators through the rank-raising
    embedding into the q_z-window map of the truncated shape (first z
    blocks, level raised by the dropped columns), project there, and
    relabel into the full shape.

    The weight-two generator carries an additive normalization freedom:
    adding a constant multiple of the derivative of the weight-one
    generator keeps it in the kernel, and each shape pins the constant
    by making the derivative-term coefficient vanish on its own last
    column.  The two shapes here pin it differently, so the relabeling
    must restore the full shape's normalization on the degree-one
    images: each gains the dropped columns' zeta-sum times the
    derivative of its own degree-zero current at t^1.  Without this the
    two sides differ by exactly that multiple on every degree-one
    generator (verified by exact linear fit).
    """
    walg = WAlgebra(shape)
    phi = PhiMap(walg, z)
    n = phi.n
    shift = sum(shape.l[v] * shape.q[v] for v in range(z, shape.s))
    trunc = PyramidShape(shape.q[:z], shape.l[:z], k=shape.k + shift,
                         hbar=shape.hbar)
    twalg = WAlgebra(trunc)
    tphi = PhiMap(twalg, z)

    probes = probe_states(walg.va, probe_weight)
    gens = ([("X+", i, 0) for i in range(n)] + [("X-", i, 0) for i in range(n)]
            + [("H", i, 0) for i in range(n)]
            + [(kind, i, 1) for kind in ("H", "X+", "X-") for i in range(1, n)])
    results = []
    for gen in gens:
        lhs = _map_word_states(phi.images[gen], walg.miura)
        rhs_t = _map_word_states(psi_through(tphi, n, gen), twalg.miura)
        rhs = _map_word_states(
            rhs_t, lambda st: sigma_state(trunc, walg.alg, shape, st))
        if gen[2] == 1:
            kind, i, _ = gen
            zsum = shape.k * 0
            for b in range(trunc.ncols + 1, shape.ncols + 1):
                zsum = zsum + shape.zeta(b)
            if kind == "H":
                cur = phi.w1(i, i) - phi.w1(i + 1, i + 1)
            elif kind == "X+":
                cur = phi.w1(i, i + 1)
            else:
                cur = phi.w1(i + 1, i)
            rhs = rhs + ModeWord.atom(walg.va.translate(cur), 1, zsum)
        res = op_residual(walg.va, lhs - rhs, K, probes)
        ok = res is None
        results.append({"generator": list(gen),
                        "status": "pass" if ok else "fail",
                        "witness": None if ok else repr(res[1])})
    failed = [r for r in results if r["status"] == "fail"]
    return {
        "check": "factorization",
        "shape": {"q": list(shape.q), "l": list(shape.l)}, "z": z, "K": K,
        "k": str(shape.k), "level_shift": shift,
        "corrections": ["degree-one images on the truncated side are "
                        "renormalized by the dropped columns' zeta-sum "
                        "times the derivative of their degree-zero "
                        "current (weight-two generator normalization "
                        "differs between the two shapes)"],
        "note": "zero-node degree-one generators are derived by identical "
                "commutator formulas on both sides and agree by construction",
        "instances": len(results), "failures": len(failed),
        "status": "pass" if not failed else "fail",
        "results": results,
    }


# -- degree-one extension obstruction --------------------------------------

def _unit_bracket(a, b):
    """Matrix-unit bracket on index pairs: [E_a, E_b] as {pair: coeff}."""
    (i, j), (p, q) = a, b
    out = {}
    if j == p:
        out[(i, q)] = out.get((i, q), 0) + 1
    if i == q:
        out[(p, j)] = out.get((p, j), 0) - 1
    return {pr: c for pr, c in out.items() if c}


def _tails_bracket_zero_mode(tails, c_pair):
    """Commutator of a sum of current tails with a zero-power current.

    tails maps (A, B) to a coefficient and stands for
    sum_{y>=0} E_A t^{-y-1} E_B t^{y+1}; bracketing with E_C t^0 acts
    factorwise and never produces central terms (the zero power keeps
    every summand's powers strictly nonzero), so the result is again a
    sum of the same kind of tails.
    """
    out = {}
    for (a, b), coeff in tails.items():
        for b2, c2 in _unit_bracket(b, c_pair).items():
            key = (a, b2)
            out[key] = out.get(key, 0) + coeff * c2
        for a2, c2 in _unit_bracket(a, c_pair).items():
            key = (a2, b)
            out[key] = out.get(key, 0) + coeff * c2
    return {k: c for k, c in out.items() if c}


def _check_current_commutators(m, n):
    """The two current-level commutator identities behind the extension
    obstruction, verified exactly as formal tail sums.

    The degree-one Cartan images of both embeddings into the rank-m
    window differ from the abstract generators by current tails; the
    commutator of those tails with the extra zero-mode raising current
    must reproduce the displayed tail sums.  The abstract leading term
    (the delta multiple of the degree-one raising generator) cancels
    identically on both sides and is carried formally, so the check
    needs no Yangian generators at all.
    """
    mn = m - n
    xp = (mn, mn + 1)
    results = []

    # first family: the window of the first mn rows, tails over the
    # trailing n columns
    for i in range(1, mn):
        lhs_tails = {}
        for u in range(mn + 1, m + 1):
            lhs_tails[((i, u), (u, i))] = lhs_tails.get(((i, u), (u, i)), 0) - 1
            lhs_tails[((i + 1, u), (u, i + 1))] = \
                lhs_tails.get(((i + 1, u), (u, i + 1)), 0) + 1
        lhs = _tails_bracket_zero_mode(lhs_tails, xp)
        rhs = {((i, mn + 1), (mn, i)): 1,
               ((i + 1, mn + 1), (mn, i + 1)): -1}
        if i == mn - 1:
            for u in range(mn + 1, m + 1):
                key = ((mn, u), (u, mn + 1))
                rhs[key] = rhs.get(key, 0) + 1
        rhs = {k: c for k, c in rhs.items() if c}
        results.append({"identity": f"current-tails-1[i={i}]",
                        "status": "pass" if lhs == rhs else "fail",
                        "witness": None if lhs == rhs
                        else repr({k: c for k, c in lhs.items()
                                   if rhs.get(k) != c})})

    # second family: the window of the trailing n rows, tails over the
    # leading mn columns
    for i in range(1, n):
        lhs_tails = {}
        for u in range(1, mn + 1):
            lhs_tails[((u, mn + i), (mn + i, u))] = \
                lhs_tails.get(((u, mn + i), (mn + i, u)), 0) + 1
            lhs_tails[((u, mn + i + 1), (mn + i + 1, u))] = \
                lhs_tails.get(((u, mn + i + 1), (mn + i + 1, u)), 0) - 1
        lhs = _tails_bracket_zero_mode(lhs_tails, xp)
        rhs = {((mn, mn + i), (mn + i, mn + 1)): 1,
               ((mn, mn + i + 1), (mn + i + 1, mn + 1)): -1}
        if i == 1:
            for u in range(1, mn + 1):
                key = ((u, mn + 1), (mn, u))
                rhs[key] = rhs.get(key, 0) - 1
        rhs = {k: c for k, c in rhs.items() if c}
        results.append({"identity": f"current-tails-2[i={i}]",
                        "status": "pass" if lhs == rhs else "fail",
                        "witness": None if lhs == rhs
                        else repr({k: c for k, c in lhs.items()
                                   if rhs.get(k) != c})})
    return results


class _ObstructionContext:
    """Shared builders for the two candidate families on a two-column
    shape (q = (m, n), l = (1, 1))."""

    def __init__(self, walg, m, n):
        self.walg = walg
        self.m = m
        self.n = n
        self.mn = m - n
        self.hbar = walg.shape.hbar
        self.dropped = []
        self.corrections = []

    def _log_drop(self, label):
        if label not in self.dropped:
            self.dropped.append(label)

    def _log_corr(self, note):
        if note not in self.corrections:
            self.corrections.append(note)

    def w1(self, p, q):
        """Degree-1 generator at global row indices, or None when a row
        index falls outside the shape (the overflowing window cells of
        the second family's quadratic sums)."""
        if p > self.m or q > self.m:
            self._log_drop(f"W1[{p},{q}]")
            return None
        return self.walg.w1(p, q)

    def w2(self, p, q):
        if p > self.m or q > self.m:
            self._log_drop(f"W2[{p},{q}]")
            return None
        return self.walg.w2(p, q)

    def atom(self, state, power, coeff=1):
        if state is None:
            return ModeWord.zero()
        return ModeWord.atom(state, power, coeff)

    def tail(self, a, b, c, coeff=1):
        if a is None or b is None:
            return ModeWord.zero()
        return ModeWord.tail(a, b, c, coeff)

    def x_plus(self):
        return self.atom(self.w1(self.mn, self.mn + 1), 0)

    def phi_htilde(self, fam, i):
        """The degree-one Cartan image of family fam (1: leading window,
        2: trailing window), built exactly from its displayed formula;
        window cells that do not exist in the shape are dropped and
        logged."""
        hbar, mn = self.hbar, self.mn
        off = 0 if fam == 1 else mn

        def g1(a, b):
            return self.w1(a + off, b + off)

        def g2(a, b):
            return self.w2(a + off, b + off)

        half = Fraction(1, 2) * hbar
        out = (self.atom(g2(i, i), 1, -hbar)
               + self.atom(g2(i + 1, i + 1), 1, hbar))
        h0 = self.atom(g1(i, i), 0) - self.atom(g1(i + 1, i + 1), 0)
        out = out + h0.scale(-Fraction(i, 2) * hbar)
        sq_a = self.atom(g1(i, i), 0)
        sq_b = self.atom(g1(i + 1, i + 1), 0)
        out = out - (sq_a * sq_a).scale(half) - (sq_b * sq_b).scale(half)
        for u in range(1, i + 1):
            out = out + self.tail(g1(i, u), g1(u, i), 0, hbar)
            out = out - self.tail(g1(i + 1, u), g1(u, i + 1), 0, hbar)
        for u in range(i + 1, mn + 1):
            out = out + self.tail(g1(i, u), g1(u, i), 1, hbar)
            out = out - self.tail(g1(i + 1, u), g1(u, i + 1), 1, hbar)
        return out

    def displayed_bracket(self, fam, i):
        """The displayed right-hand side of the commutator of the
        family-fam degree-one Cartan image with the extra raising
        generator, with the recorded typo corrections applied."""
        hbar, mn, m = self.hbar, self.mn, self.m
        half = Fraction(1, 2) * hbar
        if fam == 1:
            self._log_corr("bare degree-1 products read as zero-mode "
                           "commutators (the one-sided product adds a "
                           "finite piece the left-hand side never "
                           "produces)")
            out = self.atom(self.w1(mn, i), 0, hbar).commutator(
                self.atom(self.w1(i, mn + 1), 0))
            out = out + self.tail(self.w1(i, mn + 1), self.w1(mn, i), 1, hbar)
            out = out - self.atom(self.w1(mn, i + 1), 0, hbar).commutator(
                self.atom(self.w1(i + 1, mn + 1), 0))
            out = out - self.tail(self.w1(i + 1, mn + 1),
                                  self.w1(mn, i + 1), 1, hbar)
            if i == mn - 1:
                self._log_corr("first display: the degree-2 generator "
                               "carries the quadratic split of the leading "
                               "window's block (the block of the bracket "
                               "argument), not of its own index")
                out = out + ModeWord.atom(
                    self.walg.w2(mn, mn + 1,
                                 split=self.walg.shape.split_row(mn)),
                    1, hbar)
                out = out + self.atom(self.w1(mn, mn + 1), 0,
                                      Fraction(mn - 1, 2) * hbar)
                self._log_corr("anticommutator delta condition read as "
                               "i = (window height) - 1, matching every "
                               "other delta in the same display")
                anti = self.atom(self.w1(mn, mn), 0).anticommutator(
                    self.atom(self.w1(mn, mn + 1), 0))
                out = out - anti.scale(half)
                for u in range(1, i + 1):
                    out = out - self.tail(self.w1(mn, u),
                                          self.w1(u, mn + 1), 0, hbar)
                for u in range(i + 1, mn + 1):
                    out = out - self.tail(self.w1(mn, u),
                                          self.w1(u, mn + 1), 1, hbar)
            return out
        out = self.tail(self.w1(mn, mn + i), self.w1(mn + i, mn + 1), 1, hbar)
        out = out - self.tail(self.w1(mn, mn + i + 1),
                              self.w1(mn + i + 1, mn + 1), 1, hbar)
        if i == 1:
            out = out + self.atom(self.w2(mn, mn + 1), 1, hbar)
            out = out + self.atom(self.w1(mn, mn + 1), 0, half)
            self._log_corr("second display: bracket argument read as the "
                           "raising generator (its transpose never pairs "
                           "nontrivially); the anticommutator partner read "
                           "as the degree-1 diagonal of the trailing window "
                           "and its sign as +; the second quadratic sum "
                           "read with offset-1 powers like every other "
                           "above-window sum in the section")
            anti = self.atom(self.w1(mn + 1, mn + 1), 0).anticommutator(
                self.atom(self.w1(mn, mn + 1), 0))
            out = out + anti.scale(half)
            for u in range(1, i + 1):
                out = out - self.tail(self.w1(mn, mn + u),
                                      self.w1(mn + u, mn + 1), 0, hbar)
            for u in range(i + 1, mn + 1):
                out = out - self.tail(self.w1(mn, mn + u),
                                      self.w1(mn + u, mn + 1), 1, hbar)
        return out

    def ee_tails_image(self, fam, i):
        """The current tails of the two commutator identities, mapped
        into the mode algebra by sending each current to the matching
        degree-1 generator mode."""
        hbar, mn, m = self.hbar, self.mn, self.m
        if fam == 1:
            out = self.tail(self.w1(i, mn + 1), self.w1(mn, i), 1, hbar)
            out = out - self.tail(self.w1(i + 1, mn + 1),
                                  self.w1(mn, i + 1), 1, hbar)
            if i == mn - 1:
                for u in range(mn + 1, m + 1):
                    out = out + self.tail(self.w1(mn, u),
                                          self.w1(u, mn + 1), 1, hbar)
            return out
        out = self.tail(self.w1(mn, mn + i), self.w1(mn + i, mn + 1), 1, hbar)
        out = out - self.tail(self.w1(mn, mn + i + 1),
                              self.w1(mn + i + 1, mn + 1), 1, hbar)
        if i == 1:
            for u in range(1, mn + 1):
                out = out - self.tail(self.w1(u, mn + 1),
                                      self.w1(mn, u), 1, hbar)
        return out

    def candidate(self, fam):
        """The degree-one raising image forced by the commutator identity
        of the given family, assuming the extension existed."""
        i = self.mn - 1 if fam == 1 else 1
        lhs = self.phi_htilde(fam, i).commutator(self.x_plus())
        return self.ee_tails_image(fam, i) - lhs


def obstruction_suite(m, n, K, probe_weight=1, heavy_count=12, seed=0,
                      k_values=None):
    """The extension-obstruction suite on the two-column shape
    (q = (m, n), l = (1, 1)).

    (a) checks the two current-level commutator identities exactly as
    formal tail sums; (b) recomputes the two displayed mode-algebra
    brackets from the degree-one Cartan images and compares them with
    the displayed right-hand sides as operators; (c) forms the two
    candidates for the degree-one raising image that the two identities
    would force, and certifies that their difference is a nonzero
    operator, stable under widening the cutoff and resampling the level.
    """
    if m - n < 3:
        raise ValueError("the leading window needs height m - n >= 3")
    import random
    rng = random.Random(seed)
    if k_values is None:
        k_values = [Fraction(rng.randint(2, 40), rng.randint(1, 7))
                    for _ in range(3)]

    report = {
        "check": "obstruction", "m": m, "n": n, "K": K,
        "probe_weight": probe_weight, "heavy_count": heavy_count,
        "seed": seed, "k_values": [str(k) for k in k_values],
        "current_level": _check_current_commutators(m, n),
        "brackets": [], "dropped_cells": [], "corrections": [],
        "witness": None, "stability": {},
    }

    first = True
    for kv in k_values:
        shape = PyramidShape((m, n), (1, 1), k=kv)
        walg = WAlgebra(shape)
        ctx = _ObstructionContext(walg, m, n)
        probes = probe_states(walg.va, probe_weight,
                              heavy_weight=probe_weight + 1,
                              heavy_count=heavy_count, seed=seed)
        if first:
            # (b) the displayed brackets, at the first sampled level
            xp = ctx.x_plus()
            for fam, top in ((1, m - n), (2, n)):
                for i in range(1, top):
                    lhs = ctx.phi_htilde(fam, i).commutator(xp)
                    rhs = ctx.displayed_bracket(fam, i)
                    res = op_residual(walg.va, lhs - rhs, K, probes)
                    ok = res is None
                    report["brackets"].append(
                        {"family": fam, "i": i,
                         "status": "pass" if ok else "fail",
                         "witness": None if ok else repr(res[1])})
        # (c) the candidate difference must be visibly nonzero
        diff = ctx.candidate(1) - ctx.candidate(2)
        res = op_residual(walg.va, diff, K, probes)
        entry = None if res is None else {
            "k": str(kv), "probe": repr(res[0]), "image": repr(res[1])}
        if first:
            report["witness"] = entry
            report["dropped_cells"] = ctx.dropped
            report["corrections"] = ctx.corrections
            # stability under widening the cutoff
            res_up = op_residual(walg.va, diff, K + 1, probes)
            report["stability"]["cutoff+1"] = res_up is not None
            first = False
        report["stability"].setdefault("k_resamples", []).append(
            entry is not None)

    ok = (all(r["status"] == "pass" for r in report["current_level"])
          and all(r["status"] == "pass" for r in report["brackets"])
          and report["witness"] is not None
          and report["stability"]["cutoff+1"]
          and all(report["stability"]["k_resamples"]))
    report["status"] = "pass" if ok else "fail"
    return report


def shifted_generator_set(beta, m):
    """Generator index bounds of the shifted presentation for an
    anti-dominant weight, as data only."""
    beta = list(beta)
    if len(beta) != m:
        raise ValueError("need one weight value per node")
    if any(b > 0 for b in beta):
        raise ValueError("the weight must be anti-dominant (values <= 0)")
    return {
        f"node {i}": {"x_plus_min_r": 0,
                      "x_minus_min_r": -beta[i],
                      "h_min_r": -beta[i]}
        for i in range(m)
    }
