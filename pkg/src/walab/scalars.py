"""Exact scalar arithmetic: rationals and univariate rational functions.

Coefficients throughout the engine are either plain `fractions.Fraction`
values (specialized level) or `RatFunc` values, univariate rational
functions in a named indeterminate with Fraction coefficients (generic
level).  Zero testing is exact in both modes.

A hand-rolled dense representation is used instead of a general CAS:
the hot loops of the normal-ordering core only ever need +, *, negation
and zero tests on low-degree polynomials, and the overhead of a generic
expression tree is what dominates otherwise.
"""

from fractions import Fraction


def _strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense univariate polynomial over Fraction; coeffs[i] is the x^i coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = _strip([Fraction(c) for c in coeffs])

    @staticmethod
    def const(c):
        return Poly([c])

    @staticmethod
    def x():
        return Poly([0, 1])

    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree()
        lead = other.coeffs[-1]
        if len(rem) - 1 < d:
            return Poly(()), Poly(rem)
        quot = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                q = c / lead
                quot[i - d] = q
                for j in range(d + 1):
                    rem[i - d + j] -= q * other.coeffs[j]
        return Poly(quot), Poly(rem)

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly([c / lead for c in self.coeffs])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def eval(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(parts)


_ZERO = Poly(())
_ONE = Poly((1,))


class RatFunc:
    """Rational function num/den in one indeterminate, kept in lowest terms.

    The variable name is carried only for printing; arithmetic never mixes
    two different variables in one computation.
    """

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=None, var="k"):
        if not isinstance(num, Poly):
            num = Poly.const(num) if not isinstance(num, (list, tuple)) else Poly(num)
        if den is None:
            den = _ONE
        elif not isinstance(den, Poly):
            den = Poly.const(den) if not isinstance(den, (list, tuple)) else Poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = num.gcd(den)
        if g.degree() > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.coeffs[-1]
        if lead != 1:
            num = Poly([c / lead for c in num.coeffs])
            den = den.monic()
        self.num = num
        self.den = den
        self.var = var

    @staticmethod
    def variable(name="k"):
        return RatFunc(Poly.x(), var=name)

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly.const(other), var=self.var)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(Poly.const(other), var=self.var)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == _ONE and self.num.degree() <= 0:
            return hash(self.num.eval(Fraction(0)))
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den, var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, var=self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den, var=self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num, var=self.var)

    def __rtruediv__(self, other):
        return RatFunc(Poly.const(other), var=self.var) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(self.den, self.num, var=self.var) ** (-n)
        out = RatFunc(1, var=self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eval(self, x):
        """Specialize the variable to an exact rational value."""
        x = Fraction(x)
        den = self.den.eval(x)
        if den == 0:
            raise ZeroDivisionError(f"pole at {self.var}={x}")
        return self.num.eval(x) / den

    def as_fraction(self):
        """Return the constant value if this is a constant, else None."""
        if self.den == _ONE and self.num.degree() <= 0:
            return self.num.eval(Fraction(0))
        return None

    def __repr__(self):
        num = repr(self.num).replace("x", self.var)
        if self.den == _ONE:
            return num
        den = repr(self.den).replace("x", self.var)
        return f"({num})/({den})"


def is_zero(c):
    """Exact zero test for any scalar the engine uses."""
    if isinstance(c, RatFunc):
        return c.is_zero()
    return c == 0


def scalar_str(c):
    return repr(c) if isinstance(c, RatFunc) else str(c)
