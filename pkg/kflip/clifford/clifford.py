"""Exact arithmetic in the real Clifford algebra C_m.

Generators e_1, ..., e_m satisfy e_i**2 = -1 and e_i*e_j = -e_j*e_i. Elements
carry coefficients in Q(sqrt 2), enough for the unit vectors
(e_{2i-1} +- e_{2i})/sqrt(2) that build omega and the conjugate torus.

Classes
-------
CliffordElement
    an element of C_m stored as a map from basis blades to coefficients

Functions
---------
scalar(m, value)
    The scalar value in C_m.
blade(m, indices, coeff=1)
    coeff * e_{i1} e_{i2} ... for increasing indices.
vector(m, coords)
    The grade-1 element sum coords[j] e_{j+1}.
cl_multiply(a, b)
    Product in C_m.
cl_invert(u, method="auto")
    Inverse of a unit.
reverse(x), grade_involution(x), clifford_conjugate(x)
    The three standard involutions.
omega(s, m=None)
    omega_1 ... omega_s with omega_i = (e_{2i-1} - e_{2i}) / sqrt(2).
twisted_projection(x)
    Matrix of v -> grade_involution(x) v x**-1 on the grade-1 part.
conjugating_element(s, m=None)
    h = h_1 ... h_{s/2} carrying omega into the standard torus.
conjugate_by(h, x)
    h x h**-1.
in_standard_torus(x)
    Whether x is supported on products of the blocks e_{2i-1}e_{2i}.
torus_element(thetas, variant="standard", s=None, m=None)
    Element of the standard torus or of the conjugate torus containing omega.
verify_clifford(s, m)
    CheckRecords for omega**2, p(omega), h omega h**-1 and the conjugate torus.
"""

import sympy

from kflip.exact_core.exact_core import QSqrt2
from kflip.utilities import CheckRecord


CLIFFORD_MAX_DIM = 16
DENSE_INVERSE_MAX_DIM = 8


def _popcount(x):
    return bin(x).count("1")


def _blade_product_sign(a, b):
    """Sign of e_A e_B = sign * e_{A xor B} for bitmask blades A, B."""

    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += _popcount(shifted & b)
        shifted >>= 1
    sign = -1 if swaps % 2 else 1
    # every shared generator contributes e_i**2 = -1
    if _popcount(a & b) % 2:
        sign = -sign
    return sign


def _indices(mask):
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _mask(indices):
    mask = 0
    for i in indices:
        mask ^= 1 << (i - 1)
    return mask


def _check_dim(m):
    if m < 1 or m > CLIFFORD_MAX_DIM:
        raise RuntimeError(
            f"Clifford dimension must be between 1 and {CLIFFORD_MAX_DIM}, got {m}."
        )


class CliffordElement:
    """An element of C_m.

    Attributes
    ----------
    m : int
        number of generators
    terms : dict
        bitmask blade (bit i-1 set for e_i) -> nonzero QSqrt2 coefficient
    """

    def __init__(self, m, terms=None):
        _check_dim(m)
        self.m = m
        self.terms = {}
        for mask, coeff in (terms or {}).items():
            if mask >> m:
                raise RuntimeError(f"Blade {_indices(mask)} does not live in C_{m}.")
            coeff = QSqrt2.coerce(coeff)
            if not coeff.is_zero():
                self.terms[mask] = coeff

    def _same_algebra(self, other):
        if not isinstance(other, CliffordElement):
            return scalar(self.m, other)
        if other.m != self.m:
            raise RuntimeError(f"Cannot combine elements of C_{self.m} and C_{other.m}.")
        return other

    def __add__(self, other):
        other = self._same_algebra(other)
        terms = dict(self.terms)
        for mask, coeff in other.terms.items():
            terms[mask] = terms.get(mask, QSqrt2()) + coeff
        return CliffordElement(self.m, terms)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.m, {mask: -coeff for mask, coeff in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._same_algebra(other))

    def __rsub__(self, other):
        return self._same_algebra(other) - self

    def __mul__(self, other):
        return cl_multiply(self, self._same_algebra(other))

    def __rmul__(self, other):
        return cl_multiply(self._same_algebra(other), self)

    def __eq__(self, other):
        try:
            other = self._same_algebra(other)
        except RuntimeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def is_zero(self):
        return len(self.terms) == 0

    def is_scalar(self):
        return all(mask == 0 for mask in self.terms)

    def scalar_part(self):
        return self.terms.get(0, QSqrt2())

    def grades(self):
        return sorted({_popcount(mask) for mask in self.terms})

    def grade_part(self, k):
        return CliffordElement(
            self.m, {mask: c for mask, c in self.terms.items() if _popcount(mask) == k}
        )

    def support(self):
        """Blades with nonzero coefficient, as sorted index tuples."""
        return sorted((_indices(mask) for mask in self.terms), key=lambda t: (len(t), t))

    def coefficient(self, indices):
        return self.terms.get(_mask(indices), QSqrt2())

    def __repr__(self):
        return f"CliffordElement({self.m}, {self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        pieces = []
        for indices in self.support():
            coeff = self.coefficient(indices)
            name = "*".join(f"e{i}" for i in indices)
            if name == "":
                pieces.append(f"({coeff})")
            else:
                pieces.append(f"({coeff})*{name}")
        return " + ".join(pieces)


def scalar(m, value):
    return CliffordElement(m, {0: QSqrt2.coerce(value)})


def blade(m, indices, coeff=1):
    """coeff * e_{i1} ... e_{ik} for strictly increasing indices in 1..m."""

    indices = list(indices)
    if sorted(set(indices)) != indices or any(i < 1 or i > m for i in indices):
        raise RuntimeError(f"Blade indices must increase within 1..{m}, got {indices}.")
    return CliffordElement(m, {_mask(indices): coeff})


def vector(m, coords):
    return CliffordElement(m, {1 << j: c for j, c in enumerate(coords)})


def cl_multiply(a, b):
    """Product of two elements of the same C_m.

    Examples
    --------
    >>> e1 = blade(2, [1])
    >>> cl_multiply(e1, e1) == -1
    True
    """

    if a.m != b.m:
        raise RuntimeError(f"Cannot multiply elements of C_{a.m} and C_{b.m}.")

    terms = {}
    for mask_a, coeff_a in a.terms.items():
        for mask_b, coeff_b in b.terms.items():
            mask = mask_a ^ mask_b
            term = coeff_a * coeff_b
            if _blade_product_sign(mask_a, mask_b) < 0:
                term = -term
            terms[mask] = terms.get(mask, QSqrt2()) + term

    return CliffordElement(a.m, terms)


def _sign_by_grade(x, sign_of_grade):
    return CliffordElement(
        x.m,
        {mask: (c if sign_of_grade(_popcount(mask)) > 0 else -c)
         for mask, c in x.terms.items()},
    )


def reverse(x):
    """Reverse the order of generators in every blade."""
    return _sign_by_grade(x, lambda k: -1 if (k * (k - 1) // 2) % 2 else 1)


def grade_involution(x):
    """The canonical automorphism: negate odd-grade components."""
    return _sign_by_grade(x, lambda k: -1 if k % 2 else 1)


def clifford_conjugate(x):
    return reverse(grade_involution(x))


def _solve_dense(matrix, rhs):
    """Gauss-Jordan elimination over Q(sqrt 2); None when singular."""

    size = len(matrix)
    rows = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]

    for col in range(size):
        pivot = next((r for r in range(col, size) if not rows[r][col].is_zero()), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inverse = rows[col][col].inverse()
        rows[col] = [x * inverse for x in rows[col]]
        for r in range(size):
            factor = rows[r][col]
            if r != col and not factor.is_zero():
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]

    return [row[-1] for row in rows]


def _dense_inverse(u):
    if u.m > DENSE_INVERSE_MAX_DIM:
        raise RuntimeError(
            f"Dense inversion is limited to m <= {DENSE_INVERSE_MAX_DIM}; "
            f"{u} has no scalar-norm inverse."
        )

    size = 2**u.m
    # column j is u * (blade j)
    columns = []
    for mask in range(size):
        product = cl_multiply(u, CliffordElement(u.m, {mask: 1}))
        columns.append([product.terms.get(k, QSqrt2()) for k in range(size)])
    matrix = [[columns[j][i] for j in range(size)] for i in range(size)]
    rhs = [QSqrt2(1)] + [QSqrt2()] * (size - 1)

    solution = _solve_dense(matrix, rhs)
    if solution is None:
        raise RuntimeError(f"{u} is not a unit in C_{u.m}.")
    return CliffordElement(u.m, dict(enumerate(solution)))


def cl_invert(u, method="auto"):
    """Inverse of a unit of C_m.

    With method "auto" the inverse is read off from u * reverse(u) or
    u * clifford_conjugate(u) when either is a nonzero scalar; otherwise the
    linear system for left multiplication by u is solved (m <= 8 only).
    Method "dense" always solves the linear system.

    Examples
    --------
    >>> cl_invert(blade(1, [1])) == blade(1, [1], -1)
    True
    """

    try:
        assert method in ("auto", "dense")
    except AssertionError:
        raise RuntimeError(f"method must be 'auto' or 'dense', not {method!r}.")

    if u.is_zero():
        raise RuntimeError("0 is not a unit.")

    if method == "auto":
        for partner in (reverse(u), clifford_conjugate(u)):
            norm = cl_multiply(u, partner)
            if norm.is_scalar() and not norm.is_zero():
                inverse_norm = norm.scalar_part().inverse()
                return CliffordElement(
                    u.m, {mask: c * inverse_norm for mask, c in partner.terms.items()}
                )

    return _dense_inverse(u)


def _unit_vector(m, i, sign):
    # (e_{2i-1} + sign*e_{2i}) / sqrt(2)
    half_root = QSqrt2.inv_sqrt2()
    return CliffordElement(m, {_mask([2 * i - 1]): half_root, _mask([2 * i]): sign * half_root})


def omega_factor(i, m):
    """omega_i = (e_{2i-1} - e_{2i}) / sqrt(2)."""
    return _unit_vector(m, i, -1)


def v_factor(i, m):
    """v_i = (e_{2i-1} + e_{2i}) / sqrt(2)."""
    return _unit_vector(m, i, 1)


def _check_even_s(s, m):
    if s < 2 or s % 2 != 0:
        raise RuntimeError(f"s must be even and positive, got s = {s}.")
    if 2 * s > m:
        raise RuntimeError(f"Need 2s <= m, got s = {s} and m = {m}.")


def omega(s, m=None):
    """The element omega_1 ... omega_s of C_m (m defaults to 2s).

    Examples
    --------
    >>> w = omega(2)
    >>> cl_multiply(w, w) == -1
    True
    """

    m = 2 * s if m is None else m
    _check_even_s(s, m)

    result = scalar(m, 1)
    for i in range(1, s + 1):
        result = cl_multiply(result, omega_factor(i, m))
    return result


def twisted_projection(x):
    """Matrix of v -> grade_involution(x) v x**-1 in the basis e_1..e_m.

    Entry [i][j] is the coefficient of e_{i+1} in the image of e_{j+1}; entries
    are QSqrt2. Raises RuntimeError when some image leaves the grade-1 part,
    i.e. when x is not in the Clifford group.
    """

    m = x.m
    twisted = grade_involution(x)
    inverse = cl_invert(x)

    columns = []
    for j in range(1, m + 1):
        image = cl_multiply(cl_multiply(twisted, blade(m, [j])), inverse)
        if any(_popcount(mask) != 1 for mask in image.terms):
            raise RuntimeError(f"Image of e{j} under {x} is not a vector: {image}.")
        columns.append([image.coefficient([i]) for i in range(1, m + 1)])

    return [[columns[j][i] for j in range(m)] for i in range(m)]


def conjugating_element(s, m=None):
    """h = h_1 ... h_{s/2} with h_i = 1 + e_{4i-3}e_{4i} - e_{4i-2}e_{4i} + e_{4i-1}e_{4i}.

    h is not unit-normed: h * reverse(h) = 4**(s/2).
    """

    m = 2 * s if m is None else m
    _check_even_s(s, m)

    h = scalar(m, 1)
    for i in range(1, s // 2 + 1):
        a, b, c, d = 4 * i - 3, 4 * i - 2, 4 * i - 1, 4 * i
        h_i = scalar(m, 1) + blade(m, [a, d]) - blade(m, [b, d]) + blade(m, [c, d])
        h = cl_multiply(h, h_i)
    return h


def conjugate_by(h, x):
    return cl_multiply(cl_multiply(h, x), cl_invert(h))


def in_standard_torus(x):
    """Whether every blade of x is a union of blocks {2i-1, 2i}."""

    for mask in x.terms:
        for i in range(0, x.m, 2):
            pair = (mask >> i) & 3
            if pair not in (0, 3):
                return False
    return True


def _exact_cos_sin(theta):
    theta = sympy.sympify(theta)
    cos, sin = sympy.cos(theta), sympy.sin(theta)
    if not (cos.is_Integer and sin.is_Integer):
        raise RuntimeError(f"Angle {theta} is not a multiple of pi/2.")
    return int(cos), int(sin)


def _torus_bivector(i, variant, s, m):
    if variant == "standard" or i > s:
        return blade(m, [2 * i - 1, 2 * i])
    if i % 2 == 1:
        return cl_multiply(v_factor(i, m), v_factor(i + 1, m))
    return -cl_multiply(omega_factor(i - 1, m), omega_factor(i, m))


def torus_element(thetas, variant="standard", s=None, m=None):
    """Element of a maximal torus for angles that are multiples of pi/2.

    Factor i is cos(theta_i) + B_i sin(theta_i). For the standard torus
    B_i = e_{2i-1}e_{2i}. For the conjugate variant (which needs s) the first s
    factors alternate B = v_i v_{i+1} (i odd) and B = -omega_{i-1} omega_i
    (i even); the remaining ones are standard.

    Parameters
    ----------
    thetas : list of sympy expressions or numbers
        at most m // 2 angles, e.g. sympy.pi / 2
    variant : str, "standard" or "conjugate"
    s : int, required for the conjugate variant
    m : int, default 2 * len(thetas) (or 2s when larger)

    Examples
    --------
    >>> torus_element([sympy.pi]) == -1
    True
    """

    try:
        assert variant in ("standard", "conjugate")
    except AssertionError:
        raise RuntimeError(f"variant must be 'standard' or 'conjugate', not {variant!r}.")

    if m is None:
        m = max(2 * len(thetas), 2 * (s or 0), 2)
    if variant == "conjugate":
        if s is None:
            raise RuntimeError("The conjugate torus needs s.")
        _check_even_s(s, m)
    if len(thetas) > m // 2:
        raise RuntimeError(f"C_{m} has a torus of rank {m // 2}, got {len(thetas)} angles.")

    result = scalar(m, 1)
    for i, theta in enumerate(thetas, start=1):
        cos, sin = _exact_cos_sin(theta)
        factor = scalar(m, cos) + sin * _torus_bivector(i, variant, s, m)
        result = cl_multiply(result, factor)
    return result


def _block_matrix_f(s, m):
    # diag(f, ..., f) on the first 2s coordinates, identity after
    matrix = [[QSqrt2(1 if i == j else 0) for j in range(m)] for i in range(m)]
    for i in range(0, 2 * s, 2):
        matrix[i][i], matrix[i + 1][i + 1] = QSqrt2(), QSqrt2()
        matrix[i][i + 1], matrix[i + 1][i] = QSqrt2(1), QSqrt2(1)
    return matrix


def verify_clifford(s, m):
    """Check the Clifford-algebra inputs for the pair (m, s).

    Returns a list of CheckRecords: the sign of omega**2, p(omega) = F,
    h omega h**-1 in the standard torus, and h carrying each factor of the
    conjugate torus into the standard torus. Everything is skipped when m
    exceeds CLIFFORD_MAX_DIM.
    """

    names = ["clifford.omega_square", "clifford.projection_of_omega",
             "clifford.conjugated_omega", "clifford.conjugate_torus"]
    if m > CLIFFORD_MAX_DIM:
        reason = f"m = {m} exceeds CLIFFORD_MAX_DIM = {CLIFFORD_MAX_DIM}"
        return [CheckRecord(name, "skip", reason) for name in names]

    records = []
    w = omega(s, m)

    square = cl_multiply(w, w)
    expected = 1 if s % 4 == 0 else -1
    records.append(CheckRecord(
        names[0], "pass" if square == expected else "fail", str(square)
    ))

    projection = twisted_projection(w)
    records.append(CheckRecord(
        names[1],
        "pass" if projection == _block_matrix_f(s, m) else "fail",
        None if projection == _block_matrix_f(s, m) else [[str(x) for x in row] for row in projection],
    ))

    h = conjugating_element(s, m)
    conjugated = conjugate_by(h, w)
    records.append(CheckRecord(
        names[2], "pass" if in_standard_torus(conjugated) else "fail", str(conjugated)
    ))

    outside = []
    quarter = sympy.pi / 2
    for i in range(1, m // 2 + 1):
        thetas = [0] * (i - 1) + [quarter]
        element = torus_element(thetas, variant="conjugate", s=s, m=m)
        if not in_standard_torus(conjugate_by(h, element)):
            outside.append(i)
    records.append(CheckRecord(
        names[3], "pass" if len(outside) == 0 else "fail",
        None if len(outside) == 0 else {"factors_outside": outside},
    ))

    return records
