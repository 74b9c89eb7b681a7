"""Case parameters, the quotient ring B and the restriction map images.

The four parity cases are named after the parity of m and the class of s
modulo 4:

    OddZero   m odd,  s = 0 mod 4
    EvenZero  m even, s = 0 mod 4
    OddTwo    m odd,  s = 2 mod 4
    EvenTwo   m even, s = 2 mod 4

Classes
-------
CaseParams
    the derived integers of one (m, s) pair
BAlgebra
    the finite rank ring B with integer structure constants
BElement
    an element of B in coordinates
ChangeOfGenerators
    the substitutions P_i -> U_l -> V_l on the free generators

Functions
---------
build_case(m, s)
    Validate (m, s) and compute the case parameters.
build_B(params)
    The ring B of the case.
res_delta(params, algebra=None)
    Image of the spin generator in B.
res_pi_in_RH(params, i)
    Image of Pi_i as a combination of the Pi-bar classes.
pi_bar_in_B(params, j, algebra=None)
    Value of Pi-bar_j in B.
pi_prime_in_B(params, i, algebra=None)
    Value of Pi'_i in B by the recursive formula.
pi_prime_from_generating_function(params, i, algebra=None)
    Value of Pi'_i in B by expanding (1 + 2ty)^(s/2) Pi-bar[t].
change_of_generators(params, algebra=None)
    The substitutions producing V_1 with image b0*y and V_l with image 0.
simplification_identities(algebra, max_power=6)
    CheckRecords for the power identities of y and theta = 1 + y.
line_bundle_class(params, algebra=None)
    The class theta = y + 1 in B.
verify_repring(params)
    CheckRecords for B, the identities, Pi' and the change of generators.
"""

import itertools

from kflip.exact_core.exact_core import binom, bezout_coeffs, two_adic_split, unimodular_completion
from kflip.utilities import CheckRecord, ParameterError, exact_quotient, format_terms


CASES = ("OddZero", "EvenZero", "OddTwo", "EvenTwo")

GENERATOR_NAMES = ("y", "delta_c", "delta_plus")


class CaseParams:
    """The derived integers of one (m, s) pair. Built by build_case.

    Attributes
    ----------
    m, s, n, c : int
        m = 2n or 2n + 1, m - 2s = 2c or 2c + 1
    case : str
        one of CASES
    is_even : bool
        m even
    sigma : int
        +1 for s = 0 mod 4, -1 for s = 2 mod 4
    top : int
        n - 1 for m odd, n - 2 for m even
    indices : list of int
        the free index range c+1, ..., top; empty for m even with s = 2
    r : list of int
        binom(s/2 + i - 1, i) * 2**(2i - 1) for i in indices
    b0 : int or None
        gcd of r; None when indices is empty, and then alpha, e and beta are None too
    betas : list of int
        Bezout coefficients with sum(betas[k] * r[k]) = b0
    bound : int
        n for m odd, n - 1 for m even
    alpha : int
        2**alpha = gcd(2**bound, b0)
    e, beta : int
        2**(bound - alpha) and b0 / 2**alpha
    has_u4 : bool
        alpha < bound
    A, C : int
        coefficients of the spin image sigma*(A(y+2)delta_c + Cy)
    """

    def __init__(self, m, s):
        self.m = m
        self.s = s
        self.n = m // 2
        self.c = (m - 2 * s) // 2
        self.is_even = m % 2 == 0
        self.sigma = 1 if s % 4 == 0 else -1
        self.case = ("Even" if self.is_even else "Odd") + ("Zero" if self.sigma == 1 else "Two")

        self.top = self.n - 2 if self.is_even else self.n - 1
        self.indices = list(range(self.c + 1, self.top + 1))
        self.r = [binom(s // 2 + i - 1, i) * 2**(2 * i - 1) for i in self.indices]
        self.bound = self.n - 1 if self.is_even else self.n

        if len(self.indices) == 0:
            # b0 and everything derived from it are undefined
            self.b0, self.betas = None, []
            self.alpha = self.e = self.beta = None
            self.has_u4 = False
        else:
            self.b0, self.betas = bezout_coeffs(self.r)
            self.alpha = min(two_adic_split(self.b0)[0], self.bound)
            self.e = 2**(self.bound - self.alpha)
            self.beta = self.b0 // 2**self.alpha
            self.has_u4 = self.alpha < self.bound

        shift = 2 if self.is_even else 1
        self.A = 2**(s - shift)
        self.C = 2**(self.n - shift)

    @property
    def has_b0(self):
        """False for the partial cases (m even, s = 2), whose index range is empty."""
        return self.b0 is not None

    @property
    def t_count(self):
        """Number of exterior classes t_i contributed by the trivially acting generators."""
        return self.s - 2

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "b0": self.b0,
            "c": self.c,
            "case": self.case,
            "m": self.m,
            "n": self.n,
            "s": self.s,
        }

    def __eq__(self, other):
        return isinstance(other, CaseParams) and (self.m, self.s) == (other.m, other.s)

    def __hash__(self):
        return hash((self.m, self.s))

    def __repr__(self):
        return f"CaseParams(m={self.m}, s={self.s}, case={self.case})"


def build_case(m, s, partial=False):
    """Validate (m, s) and compute the case parameters.

    Parameters
    ----------
    m : int
        dimension of the ambient space
    s : int
        half the number of frame vectors
    partial : bool, default False
        accept m even with s = 2; the result has b0 = None, so only the ring
        B and the restriction images are available

    Returns
    -------
    CaseParams

    Raises
    ------
    ParameterError
        for s odd, s < 2, 2s > m, c = 0, or m even with s = 2 unless partial

    Examples
    --------
    >>> p = build_case(13, 4)
    >>> (p.n, p.c, p.case, p.b0, p.alpha)
    (6, 2, 'OddZero', 128, 6)
    """

    if not isinstance(m, int) or not isinstance(s, int):
        raise ParameterError(f"m and s must be integers, got m = {m!r}, s = {s!r}.")
    if s % 2 != 0:
        raise ParameterError(f"s = {s} is odd; only even s is supported.")
    if s < 2:
        raise ParameterError(f"s must be at least 2, got s = {s}.")
    if 2 * s > m:
        raise ParameterError(f"Need 2s <= m, got m = {m}, s = {s}.")
    if (m - 2 * s) // 2 < 1:
        raise ParameterError(f"(m, s) = ({m}, {s}) has c = 0, which is degenerate.")
    if m % 2 == 0 and s == 2 and not partial:
        raise ParameterError(f"(m, s) = ({m}, {s}) has an empty index range for b0.")

    return CaseParams(m, s)


class BElement:
    """An element of B given by integer coordinates in algebra.basis."""

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(int(x) for x in coords)

        try:
            assert len(self.coords) == algebra.rank
        except AssertionError:
            raise RuntimeError(f"B has rank {algebra.rank}, got {len(self.coords)} coordinates.")

    def _coerce(self, other):
        if isinstance(other, BElement):
            if other.algebra is not self.algebra and other.algebra.params != self.algebra.params:
                raise RuntimeError("Cannot combine elements of different rings B.")
            return other
        if isinstance(other, int):
            return self.algebra.scalar(other)
        raise RuntimeError(f"Cannot interpret {other!r} as an element of B.")

    def __add__(self, other):
        other = self._coerce(other)
        return BElement(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return BElement(self.algebra, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return BElement(self.algebra, [other * a for a in self.coords])
        return self.algebra.multiply(self, self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = self.algebra.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except RuntimeError:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return all(x == 0 for x in self.coords)

    def terms(self):
        """Nonzero (coefficient, monomial) pairs, highest basis element first."""
        return [(x, self.algebra.monomial(k))
                for k, x in reversed(list(enumerate(self.coords))) if x != 0]

    def to_dict(self):
        return {name: x for name, x in zip(self.algebra.basis_names, self.coords) if x != 0}

    def __repr__(self):
        return f"BElement({self})"

    def __str__(self):
        return format_terms(self.terms())


class BAlgebra:
    """The ring B = Z[y, delta_c(, delta_plus)] / I of one case.

    Basis monomials are exponent triples (a, b, d) for y**a delta_c**b
    delta_plus**d with every exponent at most 1, sorted by total degree and
    then by (d, b, a). The reduction rules are

        y**2          = -2y
        delta_c**2    = -2**(c+1) delta_c + K y
        delta_plus**2 = delta_c delta_plus + 2**(c-1) delta_c - L y    (m even)

    with K = 2**(2c-1) (1 - sigma binom(s/2+c, c)) and
    L = 2**(2c-3) (1 - sigma binom(s/2+c-1, c-1)).
    """

    def __init__(self, params):
        self.params = params
        c, s, sigma = params.c, params.s, params.sigma

        self.K = 2**(2 * c - 1) * (1 - sigma * binom(s // 2 + c, c))
        if params.is_even:
            self.L = exact_quotient(
                2**(2 * c) * (1 - sigma * binom(s // 2 + c - 1, c - 1)), 8, "delta_plus constant"
            )
        else:
            self.L = 0

        max_d = 1 if params.is_even else 0
        monomials = [(a, b, d) for d in range(max_d + 1) for b in range(2) for a in range(2)]
        self.basis = sorted(monomials, key=lambda t: (sum(t), t[2], t[1], t[0]))
        self.rank = len(self.basis)
        self._index = {mono: k for k, mono in enumerate(self.basis)}
        self.basis_names = [self._name(mono) for mono in self.basis]

        self.mult_table = [
            [self._reduce({tuple(x + y for x, y in zip(p, q)): 1}) for q in self.basis]
            for p in self.basis
        ]

    def _name(self, mono):
        name = "*".join(g for g, e in zip(GENERATOR_NAMES, mono) if e > 0)
        return name or "1"

    def monomial(self, k):
        return [(g, e) for g, e in zip(GENERATOR_NAMES, self.basis[k]) if e > 0]

    def _reduce(self, terms):
        """Rewrite a dict of exponent triples into basis coordinates."""

        c = self.params.c
        coords = [0] * self.rank
        pending = dict(terms)
        while pending:
            (a, b, d), coeff = pending.popitem()
            if coeff == 0:
                continue
            rewrites = None
            if d >= 2:
                if not self.params.is_even:
                    raise RuntimeError("delta_plus does not exist for odd m.")
                rewrites = [((a, b + 1, d - 1), 1), ((a, b + 1, d - 2), 2**(c - 1)),
                            ((a + 1, b, d - 2), -self.L)]
            elif b >= 2:
                rewrites = [((a, b - 1, d), -2**(c + 1)), ((a + 1, b - 2, d), self.K)]
            elif a >= 2:
                rewrites = [((a - 1, b, d), -2)]

            if rewrites is None:
                coords[self._index[(a, b, d)]] += coeff
            else:
                for mono, factor in rewrites:
                    pending[mono] = pending.get(mono, 0) + factor * coeff
        return coords

    def element(self, coords):
        return BElement(self, coords)

    def from_terms(self, terms):
        """Element from a dict mapping exponent triples (or pairs) to integers."""
        padded = {tuple(mono) + (0,) * (3 - len(mono)): x for mono, x in terms.items()}
        return BElement(self, self._reduce(padded))

    def scalar(self, value):
        return BElement(self, [value] + [0] * (self.rank - 1))

    def one(self):
        return self.scalar(1)

    def gen(self, name):
        mono = tuple(1 if g == name else 0 for g in GENERATOR_NAMES)
        if mono not in self._index:
            raise RuntimeError(f"{name} is not a generator of B for {self.params.case}.")
        return self.from_terms({mono: 1})

    @property
    def y(self):
        return self.gen("y")

    @property
    def delta_c(self):
        return self.gen("delta_c")

    @property
    def delta_plus(self):
        return self.gen("delta_plus")

    @property
    def theta(self):
        return self.y + 1

    def basis_element(self, k):
        return BElement(self, [1 if j == k else 0 for j in range(self.rank)])

    def multiply(self, p, q):
        coords = [0] * self.rank
        for i, x in enumerate(p.coords):
            if x == 0:
                continue
            for j, z in enumerate(q.coords):
                if z == 0:
                    continue
                for k, t in enumerate(self.mult_table[i][j]):
                    coords[k] += x * z * t
        return BElement(self, coords)

    def mul_matrix(self, element):
        """Matrix of multiplication by element; column j is element * basis[j]."""

        columns = [self.multiply(element, self.basis_element(j)).coords for j in range(self.rank)]
        return [[columns[j][i] for j in range(self.rank)] for i in range(self.rank)]

    def check_axioms(self):
        """Basis pairs or triples violating commutativity, associativity or the unit law."""

        failures = []
        basis = [self.basis_element(k) for k in range(self.rank)]
        one = self.one()
        for p in basis:
            if one * p != p:
                failures.append(("unit", str(p)))
        for p, q in itertools.combinations(basis, 2):
            if p * q != q * p:
                failures.append(("commutative", str(p), str(q)))
        for p, q, t in itertools.product(basis, repeat=3):
            if (p * q) * t != p * (q * t):
                failures.append(("associative", str(p), str(q), str(t)))
        return failures

    def __repr__(self):
        return f"BAlgebra({self.params.case}, basis={self.basis_names})"


def build_B(params):
    """The ring B of the case.

    Examples
    --------
    >>> B = build_B(build_case(13, 4))
    >>> str(B.delta_c * B.delta_c)
    '-8delta_c - 40y'
    """
    return BAlgebra(params)


def res_delta(params, algebra=None):
    """Image of the spin generator (delta_n, or delta_n^+ for m even) in B.

    sigma * (A (y + 2) delta_c + C y) with A = 2**(s-1), C = 2**(n-1) for m odd
    and A = 2**(s-2), C = 2**(n-2) for m even.
    """

    B = algebra or build_B(params)
    return params.sigma * (params.A * (B.y + 2) * B.delta_c + params.C * B.y)


def res_pi_in_RH(params, i):
    """Image of Pi_i as a combination of the classes Pi-bar_j.

    Returns
    -------
    dict mapping j to (a, b), meaning (a + b*y) Pi-bar_j. The j = i term
    (present when i <= c) is (1, 0); every lower term is
    (0, binom(s/2, i-j) (-1)**(i-j-1) 2**(2(i-j)-1)).

    Examples
    --------
    >>> res_pi_in_RH(build_case(13, 4), 1)
    {0: (0, 4), 1: (1, 0)}
    """

    top = params.top
    if i < 1 or i > top:
        raise RuntimeError(f"Pi_{i} is outside 1..{top} for {params.case} (m, s) = ({params.m}, {params.s}).")

    half = params.s // 2
    terms = {}
    for j in range(0, min(i, params.c) + 1):
        k = i - j
        if k == 0:
            terms[j] = (1, 0)
            continue
        coeff = binom(half, k) * (-1)**(k - 1) * 2**(2 * k - 1)
        if coeff != 0:
            terms[j] = (0, coeff)
    return terms


def pi_bar_in_B(params, j, algebra=None):
    """Pi-bar_j in B: 1 for j = 0, -binom(s/2+j-1, j) 2**(2j-1) y for 1 <= j <= c."""

    B = algebra or build_B(params)
    if j < 0 or j > params.c:
        raise RuntimeError(f"Pi-bar_{j} is outside 0..{params.c}.")
    if j == 0:
        return B.one()
    return -binom(params.s // 2 + j - 1, j) * 2**(2 * j - 1) * B.y


def pi_prime_in_B(params, i, algebra=None):
    """Pi'_i in B for c+1 <= i <= top, unfolded from

        Pi'_i = r_i y - sum_{j=c+1}^{i-1} binom(s/2+i-j-1, i-j) 4**(i-j) Pi'_j.
    """

    B = algebra or build_B(params)
    if i not in params.indices:
        raise RuntimeError(f"Pi'_{i} is only free for {params.c + 1} <= i <= {params.top}.")

    half = params.s // 2
    values = {}
    for k in params.indices[:params.indices.index(i) + 1]:
        value = params.r[params.indices.index(k)] * B.y
        for j in range(params.c + 1, k):
            value = value - binom(half + k - j - 1, k - j) * 4**(k - j) * values[j]
        values[k] = value
    return values[i]


def pi_prime_from_generating_function(params, i, algebra=None):
    """Coefficient of t**i in (1 + 2ty)**(s/2) Pi-bar[t], evaluated in B."""

    B = algebra or build_B(params)
    half = params.s // 2
    value = B.scalar(0)
    for j in range(0, min(i, params.c) + 1):
        k = i - j
        value = value + binom(half, k) * (2 * B.y)**k * pi_bar_in_B(params, j, B)
    return value


class ChangeOfGenerators:
    """The substitutions P_i -> U_l -> V_l on the free generators.

    Attributes
    ----------
    p_matrix : list of lists of int
        row i expresses P_{c+1+i} in Pi'_{c+1}, ..., Pi'_top (unitriangular)
    res_p : list of BElement
        images of the P_i
    E : list of lists of int
        unimodular matrix with first row betas; U_l = sum_j E[l][j] P_{c+1+j}
    a : list of int
        a_l with Res(U_l) = a_l b0 y (a[0] = 1)
    v_matrix : list of lists of int
        row l expresses V_{l+1} in the P_i
    res_v : list of BElement
        images of V_1, V_2, ...
    """

    def __init__(self, p_matrix, res_p, E, a, v_matrix, res_v):
        self.p_matrix = p_matrix
        self.res_p = res_p
        self.E = E
        self.a = a
        self.v_matrix = v_matrix
        self.res_v = res_v

    def to_dict(self):
        return {
            "E": self.E,
            "a": self.a,
            "p_matrix": self.p_matrix,
            "res_v": [str(x) for x in self.res_v],
            "v_matrix": self.v_matrix,
        }


def change_of_generators(params, algebra=None):
    """The substitutions producing V_1 with image b0*y and V_l (l >= 2) with image 0.

    Examples
    --------
    >>> cog = change_of_generators(build_case(13, 4))
    >>> [str(x) for x in cog.res_v]
    ['128y', '0', '0']
    """

    if not params.has_b0:
        raise ParameterError(f"(m, s) = ({params.m}, {params.s}) has no free generators, so b0 is undefined.")

    B = algebra or build_B(params)
    half = params.s // 2
    indices = params.indices
    size = len(indices)

    p_matrix = []
    for row, i in enumerate(indices):
        p_matrix.append([
            1 if col == row else
            binom(half + i - j - 1, i - j) * 4**(i - j) if col < row else 0
            for col, j in enumerate(indices)
        ])

    pi_prime = [pi_prime_in_B(params, i, B) for i in indices]
    res_p = []
    for row in p_matrix:
        value = B.scalar(0)
        for coeff, x in zip(row, pi_prime):
            value = value + coeff * x
        res_p.append(value)

    E = unimodular_completion(params.betas)
    a = [exact_quotient(sum(e * r for e, r in zip(E[l], params.r)), params.b0, "Res(U_l)")
         for l in range(size)]

    v_matrix = [list(E[0])]
    for l in range(1, size):
        v_matrix.append([x - a[l] * x0 for x, x0 in zip(E[l], E[0])])

    res_v = []
    for row in v_matrix:
        value = B.scalar(0)
        for coeff, x in zip(row, res_p):
            value = value + coeff * x
        res_v.append(value)

    return ChangeOfGenerators(p_matrix, res_p, E, a, v_matrix, res_v)


def simplification_identities(algebra, max_power=6):
    """Check the power identities of y and theta = 1 + y in B.

    theta(theta + 1) = theta + 1, and for 1 <= j <= max_power
    y**j = (-2)**(j-1) y, (1 + theta)**j = 2**(j-1) (1 + theta),
    (1 + t)**j = 2**(j-1) (1 + t) and (1 + t theta)**j = 2**(j-1) (1 + t theta)
    for t = 1 and t = -1.
    """

    y, theta, one = algebra.y, algebra.theta, algebra.one()

    checks = {"theta_times_theta_plus_one": [(theta * (theta + 1), theta + 1)]}
    checks["y_powers"] = [(y**j, (-2)**(j - 1) * y) for j in range(1, max_power + 1)]
    checks["one_plus_theta_powers"] = [
        ((1 + theta)**j, 2**(j - 1) * (1 + theta)) for j in range(1, max_power + 1)
    ]
    checks["one_plus_t_powers"] = [
        ((one + t)**j, 2**(j - 1) * (one + t)) for t in (1, -1) for j in range(1, max_power + 1)
    ]
    checks["one_plus_t_theta_powers"] = [
        ((1 + t * theta)**j, 2**(j - 1) * (1 + t * theta))
        for t in (1, -1) for j in range(1, max_power + 1)
    ]

    records = []
    for name, pairs in checks.items():
        bad = [f"{lhs} != {rhs}" for lhs, rhs in pairs if lhs != rhs]
        records.append(CheckRecord(
            f"repring.identities.{name}", "pass" if len(bad) == 0 else "fail", bad or None
        ))
    return records


def line_bundle_class(params, algebra=None):
    """The class theta = y + 1 of the complexified canonical line bundle, in B."""
    B = algebra or build_B(params)
    return B.theta


def verify_repring(params, algebra=None):
    """CheckRecords for the ring axioms of B, the power identities, the two
    evaluations of Pi'_i and the change of generators."""

    B = algebra or build_B(params)
    records = []

    failures = B.check_axioms()
    records.append(CheckRecord(
        "repring.B_axioms", "pass" if len(failures) == 0 else "fail",
        [list(f) for f in failures[:5]] or None,
    ))

    records += simplification_identities(B)

    mismatches = []
    for i in range(1, params.top + 1):
        forward = pi_prime_from_generating_function(params, i, B)
        expected = pi_prime_in_B(params, i, B) if i in params.indices else B.scalar(0)
        if forward != expected:
            mismatches.append({"i": i, "generating_function": str(forward), "recursive": str(expected)})
    records.append(CheckRecord(
        "repring.pi_prime", "pass" if len(mismatches) == 0 else "fail", mismatches or None
    ))

    if not params.has_b0:
        records.append(CheckRecord(
            "repring.change_of_generators", "skip", "no free generators, so b0 is undefined", gating=False
        ))
        return records

    cog = change_of_generators(params, B)
    bad = []
    for r, value in zip(params.r, cog.res_p):
        if value != r * B.y:
            bad.append(f"Res(P) = {value}, expected {r * B.y}")
    if cog.res_v[0] != params.b0 * B.y:
        bad.append(f"Res(V_1) = {cog.res_v[0]}")
    bad += [f"Res(V_{l + 1}) = {value}" for l, value in enumerate(cog.res_v) if l > 0 and not value.is_zero()]
    records.append(CheckRecord(
        "repring.change_of_generators", "pass" if len(bad) == 0 else "fail", bad or None
    ))

    return records
