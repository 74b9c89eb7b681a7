"""Exact integer helpers and the Q(sqrt 2) number type.

Classes
-------
QSqrt2
    exact numbers a + b*sqrt(2) with rational a, b

Functions
---------
binom(n, k)
    Binomial coefficient, zero outside 0 <= k <= n.
gcd_list(xs)
    Nonnegative gcd of a list that is not all zero.
bezout_coeffs(xs)
    Coefficients expressing the gcd of a list as a combination of its entries.
unimodular_completion(row)
    Square integer matrix of determinant +-1 whose first row is the given row.
two_adic_split(x)
    Split x into 2**v * odd.
"""

from fractions import Fraction

import sympy
from sympy.core.intfunc import igcdex


def binom(n, k):
    """Binomial coefficient C(n, k), zero when k < 0 or k > n.

    Examples
    --------
    >>> binom(4, 2)
    6
    >>> binom(3, 5)
    0
    """

    if n < 0:
        raise RuntimeError(f"binom needs n >= 0, got n = {n}.")
    if k < 0 or k > n:
        return 0
    return int(sympy.binomial(n, k))


def gcd_list(xs):
    """Nonnegative gcd of a list of integers that is not all zero."""

    xs = [int(x) for x in xs]
    if len(xs) == 0 or all(x == 0 for x in xs):
        raise RuntimeError(f"gcd is undefined for {xs}.")
    if len(xs) == 1:
        return abs(xs[0])
    return int(sympy.igcd(*xs))


def bezout_coeffs(xs):
    """Coefficients expressing the gcd of a list as a combination of its entries.

    The list is folded from the left: with g the gcd of the prefix and
    x*g + y*r = gcd(g, r), every earlier coefficient is scaled by x and the new
    one is y. When g already divides the next entry its coefficient is 0.

    Parameters
    ----------
    xs : list of int, not all zero

    Returns
    -------
    (g, coeffs) with g = gcd_list(xs) and sum(c*x) = g. Whenever two or more
    entries are nonzero the coefficient vector has gcd 1, so it can be
    completed to a unimodular matrix.

    Examples
    --------
    >>> bezout_coeffs([128, 640, 3072])
    (128, [1, 0, 0])
    """

    xs = [int(x) for x in xs]
    g = gcd_list(xs)

    coeffs = []
    running = 0
    for x in xs:
        if running == 0:
            # nothing nonzero seen yet
            coeffs = [0] * len(coeffs) + [1 if x > 0 else -1 if x < 0 else 0]
            running = abs(x)
        elif x % running == 0:
            coeffs.append(0)
        else:
            a, b, new_gcd = (int(v) for v in igcdex(running, x))
            coeffs = [a * coeff for coeff in coeffs] + [b]
            running = new_gcd

    try:
        assert running == g
        assert sum(c * x for c, x in zip(coeffs, xs)) == g
        assert gcd_list(coeffs) == 1
    except AssertionError:
        raise RuntimeError(f"Bezout fold failed on {xs}: coefficients {coeffs}.")

    return g, coeffs


def _as_row(row):
    row = [int(x) for x in row]
    if len(row) == 0:
        raise RuntimeError("Cannot complete an empty row.")
    return row


def unimodular_completion(row):
    """Square integer matrix of determinant +-1 whose first row is the given row.

    Works from the right end of the row, as in the pairwise-gcd argument for
    three entries, folded inductively. Write the row as (d*a, r) with
    d = gcd of all entries but the last and a primitive. If M' completes a and
    d*x + r*t = 1, then

        [ d*a   r ]
        [ M'[1:] 0 ]
        [ -t*a  x ]

    has determinant +-1 (its rows are obtained from those of M' and the
    identity by a single 2x2 unimodular move).

    Parameters
    ----------
    row : list of int with gcd 1

    Returns
    -------
    list of lists of int

    Examples
    --------
    >>> unimodular_completion([2, 3])
    [[2, 3], [-1, -1]]
    """

    row = _as_row(row)
    if gcd_list(row) != 1:
        raise RuntimeError(f"Row {row} has gcd {gcd_list(row)}, not 1.")

    size = len(row)
    if size == 1:
        return [[row[0]]]

    prefix, last = row[:-1], row[-1]

    if all(x == 0 for x in prefix):
        # last = +-1: a signed permutation does it
        completion = [list(row)]
        for i in range(size - 1):
            completion.append([1 if j == i else 0 for j in range(size)])
        return completion

    d = gcd_list(prefix)
    primitive = [x // d for x in prefix]
    inner = unimodular_completion(primitive)
    x, t, g = (int(v) for v in igcdex(d, last))

    try:
        assert g == 1
    except AssertionError:
        raise RuntimeError(f"gcd({d}, {last}) = {g}; row {row} is not primitive.")

    completion = [list(row)]
    for inner_row in inner[1:]:
        completion.append(list(inner_row) + [0])
    completion.append([-t * a for a in primitive] + [x])

    return completion


def two_adic_split(x):
    """Split a nonzero integer into 2**v * odd; return (v, odd)."""

    x = int(x)
    if x == 0:
        raise RuntimeError("0 has no 2-adic valuation.")
    v = int(sympy.multiplicity(2, abs(x)))
    return v, x // 2**v


class QSqrt2:
    """Exact numbers a + b*sqrt(2) with rational a and b.

    Supports +, -, *, / with other QSqrt2 values, ints and Fractions.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, QSqrt2):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise RuntimeError(f"Cannot interpret {value!r} as an element of Q(sqrt 2).")

    @classmethod
    def sqrt2(cls):
        return cls(0, 1)

    @classmethod
    def inv_sqrt2(cls):
        return cls(0, Fraction(1, 2))

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def is_rational(self):
        return self.b == 0

    def conjugate(self):
        return QSqrt2(self.a, -self.b)

    def norm(self):
        """Rational norm a**2 - 2*b**2, zero only for zero."""
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self):
        if self.is_zero():
            raise RuntimeError("Division by zero in Q(sqrt 2).")
        norm = self.norm()
        return QSqrt2(self.a / norm, -self.b / norm)

    def __add__(self, other):
        other = QSqrt2.coerce(other)
        return QSqrt2(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-QSqrt2.coerce(other))

    def __rsub__(self, other):
        return QSqrt2.coerce(other) - self

    def __mul__(self, other):
        other = QSqrt2.coerce(other)
        return QSqrt2(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * QSqrt2.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QSqrt2.coerce(other) * self.inverse()

    def __eq__(self, other):
        try:
            other = QSqrt2.coerce(other)
        except RuntimeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"QSqrt2({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt2"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt2"
