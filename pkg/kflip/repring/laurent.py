"""Independent recomputation of the restriction images from Laurent polynomials.

The representation ring of the maximal torus of Spin(m) is a ring of Laurent
polynomials in z_1, ..., z_n. Restricting to the subgroup generated by
omega-tilde and the torus on the last c coordinates substitutes

    z_k -> 1       k <= s, k odd
    z_k -> -phi    k <= s, k even
    z_k -> z_k     k > s

with phi**4 = 1 and theta = phi**2. Elements here are therefore Laurent
polynomials in the c remaining variables with coefficients in Z[phi]/(phi**4 - 1).

The images of Pi_i are decomposed over the classes
Pi-bar_j = e_j((z_k - 1/z_k)**2, k > s). The image of the spin class is
q(theta) Delta_c (times phi when s = 2 mod 4), and it is rank normalized by
subtracting its augmentation before being compared with res_delta.

Functions
---------
laurent_res_pi(params, i)
    Image of Pi_i as {j: (a, b)}, comparable with res_pi_in_RH.
laurent_res_delta(params, algebra=None)
    Image of the rank-zero spin class as an element of B.
laurent_oracle_res(params, which, algebra=None)
    Dispatch to one of the two images above.
verify_laurent(params, algebra=None)
    CheckRecords comparing both images with the closed forms.
"""

from kflip.repring.repring import build_B, res_delta, res_pi_in_RH
from kflip.utilities import CheckRecord


class LaurentElement:
    """Laurent polynomial in nvars variables with coefficients in Z[phi]/(phi**4 - 1).

    terms maps (exponent tuple, phi power mod 4) to a nonzero integer.
    """

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        for (exps, p), x in (terms or {}).items():
            key = (tuple(exps), p % 4)
            self.terms[key] = self.terms.get(key, 0) + int(x)
        self.terms = {key: x for key, x in self.terms.items() if x != 0}

    @classmethod
    def constant(cls, nvars, value=1):
        return cls(nvars, {((0,) * nvars, 0): value})

    @classmethod
    def variable(cls, nvars, k, power=1):
        """z_{s+1+k} raised to power (k counts from 0)."""
        exps = tuple(power if j == k else 0 for j in range(nvars))
        return cls(nvars, {(exps, 0): 1})

    @classmethod
    def phi(cls, nvars, power=1, sign=1):
        return cls(nvars, {((0,) * nvars, power): sign})

    def _coerce(self, other):
        if isinstance(other, LaurentElement):
            if other.nvars != self.nvars:
                raise RuntimeError(f"Cannot combine Laurent polynomials in {self.nvars} and {other.nvars} variables.")
            return other
        if isinstance(other, int):
            return LaurentElement.constant(self.nvars, other)
        raise RuntimeError(f"Cannot interpret {other!r} as a Laurent polynomial.")

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for key, x in other.terms.items():
            terms[key] = terms.get(key, 0) + x
        return LaurentElement(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElement(self.nvars, {key: -x for key, x in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        terms = {}
        for (e1, p1), x in self.terms.items():
            for (e2, p2), z in other.terms.items():
                key = (tuple(a + b for a, b in zip(e1, e2)), (p1 + p2) % 4)
                terms[key] = terms.get(key, 0) + x * z
        return LaurentElement(self.nvars, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except RuntimeError:
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self):
        return len(self.terms) == 0

    def phi_coefficients(self, exps):
        """Coefficient of the monomial with these exponents, as [c0, c1, c2, c3] in powers of phi."""
        coeffs = [0, 0, 0, 0]
        for (e, p), x in self.terms.items():
            if e == tuple(exps):
                coeffs[p] += x
        return coeffs

    def __repr__(self):
        return f"LaurentElement({self.nvars}, {self.terms})"


def _theta_pair(coeffs, shift=0):
    """Read [c0, c1, c2, c3] * phi**(-shift) as a + b*theta; raise if odd powers survive."""

    rotated = [coeffs[(p + shift) % 4] for p in range(4)]
    if rotated[1] != 0 or rotated[3] != 0:
        raise RuntimeError(f"Coefficient {rotated} in powers of phi does not lie in Z[theta].")
    return rotated[0], rotated[2]


def restriction_unit(params, k):
    """The image of z_k (1 <= k <= s) as (sign, phi power)."""

    if k < 1 or k > params.s:
        raise RuntimeError(f"z_{k} is not among the first s = {params.s} variables.")
    return (1, 0) if k % 2 == 1 else (-1, 1)


def _restricted_pair(params, k, sign):
    """The images of z_k and sign/z_k in the c remaining variables."""

    c = params.c
    if k <= params.s:
        unit_sign, power = restriction_unit(params, k)
        return (LaurentElement.phi(c, power, unit_sign),
                LaurentElement.phi(c, -power, sign * unit_sign))
    return (LaurentElement.variable(c, k - params.s - 1),
            sign * LaurentElement.variable(c, k - params.s - 1, -1))


def _truncated_product(factors, degree, nvars):
    """Coefficients of t**0..t**degree in the product of (1 + t*x) over x in factors."""

    coeffs = [LaurentElement.constant(nvars, 1)] + [LaurentElement(nvars) for _ in range(degree)]
    for x in factors:
        for d in range(degree, 0, -1):
            coeffs[d] = coeffs[d] + coeffs[d - 1] * x
    return coeffs


def _squared_differences(params, variables):
    squares = []
    for k in variables:
        z, minus_inverse = _restricted_pair(params, k, -1)
        squares.append((z + minus_inverse) * (z + minus_inverse))
    return squares


def restricted_pi(params, i):
    """Image of Pi_i = e_i((z_k - 1/z_k)**2, k = 1..n)."""
    return _truncated_product(_squared_differences(params, range(1, params.n + 1)), i, params.c)[i]


def pi_bars(params, degree):
    """Pi-bar_0, ..., Pi-bar_degree, with Pi-bar_j = e_j((z_k - 1/z_k)**2, k = s+1..n)."""
    squares = _squared_differences(params, range(params.s + 1, params.n + 1))
    return _truncated_product(squares, degree, params.c)


def decompose_over_pi_bar(params, element, top_degree):
    """Write a symmetric element as sum_j (a_j + b_j y) Pi-bar_j.

    Works from j = top_degree down, reading the coefficient of the leading
    monomial z_{s+1}**2 ... z_{s+j}**2 of Pi-bar_j.

    Returns
    -------
    dict mapping j to (a, b); entries with a = b = 0 are omitted

    Raises
    ------
    RuntimeError
        if a coefficient leaves Z[theta] or a nonzero remainder is left
    """

    c = params.c
    remainder = element
    bars = pi_bars(params, min(top_degree, c))
    result = {}
    for j in range(min(top_degree, c), -1, -1):
        exps = [2] * j + [0] * (c - j)
        a, b = _theta_pair(remainder.phi_coefficients(exps))
        if a == 0 and b == 0:
            continue
        coefficient = LaurentElement.constant(c, a) + LaurentElement.phi(c, 2, b)
        remainder = remainder - coefficient * bars[j]
        # a + b*theta = (a + b) + b*y
        result[j] = (a + b, b)

    if not remainder.is_zero():
        raise RuntimeError(f"Pi-bar decomposition left a remainder with {len(remainder.terms)} terms.")
    return dict(sorted(result.items()))


def laurent_res_pi(params, i):
    """Image of Pi_i as {j: (a, b)}, computed from Laurent polynomials."""

    if i < 1 or i > params.top:
        raise RuntimeError(f"Pi_{i} is outside 1..{params.top}.")
    return decompose_over_pi_bar(params, restricted_pi(params, i), i)


def _restricted_sums(params, variables, sign):
    """Product of (z_k + sign/z_k), split into parts with an even and an odd number of inverses."""

    nvars = params.c
    even, odd = LaurentElement.constant(nvars, 1), LaurentElement(nvars)
    for k in variables:
        z, inverse = _restricted_pair(params, k, sign)
        even, odd = even * z + odd * inverse, even * inverse + odd * z
    return even, odd


def restricted_delta(params):
    """Image of Delta_n (m odd) or Delta_n^+ (m even)."""

    even, odd = _restricted_sums(params, range(1, params.n + 1), 1)
    return even if params.is_even else even + odd


def restricted_euler(params):
    """Image of Delta_n^+ - Delta_n^- = prod (z_k - 1/z_k); vanishes since z_1 -> 1."""

    even, odd = _restricted_sums(params, range(1, params.n + 1), -1)
    return even + odd


def laurent_res_delta(params, algebra=None):
    """Image of the rank-zero spin class in B.

    The image of the spin class is q(theta) Delta-bar_c with
    Delta-bar_c = phi**eps prod_{k>s} (z_k + 1/z_k) (eps = 1 iff s = 2 mod 4).
    With delta_c = Delta-bar_c - 2**c and the augmentation theta -> 1 removed,

        q delta_c + 2**c (q - q(1)) = (a + b) delta_c + b delta_c y + 2**c b y

    for q = a + b*theta.
    """

    B = algebra or build_B(params)
    c = params.c
    shift = 0 if params.sigma == 1 else 1

    image = restricted_delta(params)
    a, b = _theta_pair(image.phi_coefficients([1] * c), shift)

    even, odd = _restricted_sums(params, range(params.s + 1, params.n + 1), 1)
    delta_bar = LaurentElement.phi(c, shift) * (even + odd)
    q = LaurentElement.constant(c, a) + LaurentElement.phi(c, 2, b)
    if image != q * delta_bar:
        raise RuntimeError("Image of the spin class is not a Z[theta] multiple of Delta-bar_c.")

    return B.from_terms({(0, 1, 0): a + b, (1, 1, 0): b, (1, 0, 0): 2**c * b})


def laurent_oracle_res(params, which, algebra=None):
    """Laurent image of Pi_which for an integer index, or of the spin class for "delta"."""

    if which == "delta":
        return laurent_res_delta(params, algebra)
    if isinstance(which, int):
        return laurent_res_pi(params, which)
    raise RuntimeError(f"which must be an index or \"delta\", not {which!r}.")


def verify_laurent(params, algebra=None):
    """CheckRecords comparing the Laurent images with res_pi_in_RH and res_delta."""

    B = algebra or build_B(params)
    records = []

    mismatches = []
    for i in range(1, params.top + 1):
        computed = laurent_res_pi(params, i)
        expected = res_pi_in_RH(params, i)
        if computed != expected:
            mismatches.append({"i": i, "laurent": str(computed), "closed_form": str(expected)})
    records.append(CheckRecord(
        "laurent.res_pi", "pass" if len(mismatches) == 0 else "fail", mismatches or None
    ))

    computed = laurent_res_delta(params, B)
    expected = res_delta(params, B)
    records.append(CheckRecord(
        "laurent.res_delta", "pass" if computed == expected else "fail",
        None if computed == expected else {"laurent": str(computed), "closed_form": str(expected)},
    ))

    if params.is_even:
        euler = restricted_euler(params)
        records.append(CheckRecord(
            "laurent.euler_class", "pass" if euler.is_zero() else "fail",
            None if euler.is_zero() else f"{len(euler.terms)} surviving terms",
        ))

    return records

