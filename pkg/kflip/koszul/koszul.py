"""The two-generator Koszul complex over B and its homology.

The complex is

    0 -> B(x1^x2) --D2--> Bx1 + Bx2 --D1--> B -> 0

with d1(x1) = Res(V_1) = b0*y, d1(x2) = Res(delta) and
d2(x1^x2) = d1(x1) x2 - d1(x2) x1. Vectors of the middle term hold the x1
block first and the x2 block second, each in the coordinates of B.

Classes
-------
KoszulData
    the algebra, the two differentials and their matrices
ModuleVector
    an element of B, of Bx1 + Bx2 or of B(x1^x2) in coordinates
GeneratorSet
    named middle degree vectors with their leading terms

Functions
---------
build_koszul(params, algebra=None)
    Assemble the complex and check D1*D2 = 0.
homology_h0(kd)
    Cokernel of D1 as an abelian group.
homology_h2(kd)
    Kernel of D2 and its generator.
standard_kernel_generators(params, kd=None)
    The generators u1, u2, u3 (and u4 when alpha is below its bound).
verify_h1(kd, gens)
    Kernel membership, spanning and the quotient Ker(D1)/Im(D2).
wedge_multiply(kd, a, b)
    Product of two cycles in B(x1^x2).
module_order(kd)
    Middle degree coordinates listed from the highest monomial down.
leading_term(kd, vector)
    Position and label of the leading monomial of a middle degree vector.
verify_koszul(params, kd=None)
    CheckRecords for the complex, H0, H1 and H2.
"""

from kflip.intlinalg.intlinalg import (
    AbelianPresentation,
    columns,
    from_columns,
    kernel_basis,
    lattice_contains,
    lattice_equal,
    mat_mul,
    mat_vec,
    quotient_presentation,
    solve_integer,
)
from kflip.repring.repring import build_B, change_of_generators, res_delta
from kflip.utilities import CheckRecord, exact_quotient


class ModuleVector:
    """Integer coordinates of an element in one degree of the complex.

    degree is 0 for B, 1 for Bx1 + Bx2 and 2 for B(x1^x2).
    """

    def __init__(self, algebra, degree, coords):
        self.algebra = algebra
        self.degree = degree
        self.coords = tuple(int(x) for x in coords)

        size = 2 * algebra.rank if degree == 1 else algebra.rank
        try:
            assert degree in (0, 1, 2) and len(self.coords) == size
        except AssertionError:
            raise RuntimeError(
                f"A degree {degree} vector over a rank {algebra.rank} ring needs {size} coordinates, "
                f"got {len(self.coords)}."
            )

    @classmethod
    def from_pair(cls, p, q):
        """The middle degree vector p*x1 + q*x2 for BElements p and q."""
        return cls(p.algebra, 1, p.coords + q.coords)

    @classmethod
    def from_coefficient(cls, b, degree=2):
        return cls(b.algebra, degree, b.coords)

    @property
    def x1(self):
        self._require_middle()
        return self.algebra.element(self.coords[:self.algebra.rank])

    @property
    def x2(self):
        self._require_middle()
        return self.algebra.element(self.coords[self.algebra.rank:])

    @property
    def coefficient(self):
        if self.degree == 1:
            raise RuntimeError("A middle degree vector has two coefficients, use x1 and x2.")
        return self.algebra.element(self.coords)

    def _require_middle(self):
        if self.degree != 1:
            raise RuntimeError(f"Only middle degree vectors have x1 and x2 parts, not degree {self.degree}.")

    def scale(self, b):
        """Multiply by the ring element (or integer) b."""

        if self.degree == 1:
            return ModuleVector.from_pair(b * self.x1, b * self.x2)
        return ModuleVector.from_coefficient(b * self.coefficient, self.degree)

    def __add__(self, other):
        if not isinstance(other, ModuleVector) or other.degree != self.degree:
            raise RuntimeError("Can only add vectors of the same degree.")
        return ModuleVector(self.algebra, self.degree, [a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return ModuleVector(self.algebra, self.degree, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.degree == other.degree and self.coords == other.coords

    def __hash__(self):
        return hash((self.degree, self.coords))

    def is_zero(self):
        return all(x == 0 for x in self.coords)

    def __str__(self):
        if self.degree == 0:
            return str(self.coefficient)
        if self.degree == 2:
            return f"({self.coefficient})x1^x2"
        return f"({self.x1})x1 + ({self.x2})x2"

    def __repr__(self):
        return f"ModuleVector({self})"


class KoszulData:
    """The Koszul complex of one case. Built by build_koszul.

    Attributes
    ----------
    params : CaseParams
    algebra : BAlgebra
    d1_x1, d1_x2 : BElement
        the images of x1 and x2
    D1 : list of lists of int
        rank x 2*rank, the multiplication operators of d1_x1 and d1_x2 side by side
    D2 : list of lists of int
        2*rank x rank; column j is (-b_j d1_x2, b_j d1_x1)
    """

    def __init__(self, params, algebra, d1_x1, d1_x2):
        self.params = params
        self.algebra = algebra
        self.d1_x1 = d1_x1
        self.d1_x2 = d1_x2

        M1 = algebra.mul_matrix(d1_x1)
        M2 = algebra.mul_matrix(d1_x2)
        self.D1 = [row1 + row2 for row1, row2 in zip(M1, M2)]
        self.D2 = [[-x for x in row] for row in M2] + [list(row) for row in M1]

        product = mat_mul(self.D1, self.D2)
        if any(x != 0 for row in product for x in row):
            raise RuntimeError(f"D1*D2 is not zero for {params.case} (m, s) = ({params.m}, {params.s}).")

    @property
    def rank(self):
        return self.algebra.rank

    def d1(self, vector):
        return ModuleVector(self.algebra, 0, mat_vec(self.D1, vector.coords))

    def d2(self, vector):
        return ModuleVector(self.algebra, 1, mat_vec(self.D2, vector.coords))

    def image_d2(self):
        """Columns spanning Im(D2) as a Z-lattice."""
        return self.D2

    def kernel_d1(self):
        return kernel_basis(self.D1)

    def __repr__(self):
        return f"KoszulData({self.params.case}, m={self.params.m}, s={self.params.s})"


def build_koszul(params, algebra=None):
    """Assemble the Koszul complex of the case.

    d1(x1) is taken from the change of generators (Res(V_1) = b0*y) and
    d1(x2) from res_delta.

    Raises
    ------
    RuntimeError
        if D1*D2 is not zero

    Examples
    --------
    >>> from kflip.repring.repring import build_case
    >>> kd = build_koszul(build_case(13, 4))
    >>> str(kd.d1_x1), str(kd.d1_x2)
    ('128y', '8y*delta_c + 16delta_c + 32y')
    """

    B = algebra or build_B(params)
    d1_x1 = change_of_generators(params, B).res_v[0]
    return KoszulData(params, B, d1_x1, res_delta(params, B))


def homology_h0(kd):
    """H0 = B / (d1(x1), d1(x2)) as an abelian group on the basis monomials of B."""
    return AbelianPresentation(kd.algebra.basis_names, kd.D1)


def _standard_v(kd):
    """(2 + y)(2**(c+1) + delta_c) as a coefficient on x1^x2."""
    B = kd.algebra
    return (B.y + 2) * (B.delta_c + 2**(kd.params.c + 1))


def homology_h2(kd):
    """H2 = Ker(D2), a free abelian group.

    Returns
    -------
    (AbelianPresentation, list of ModuleVector)
        the group (no relations) and the HNF-reduced kernel basis
    """

    basis = kernel_basis(kd.D2)
    vectors = [ModuleVector(kd.algebra, 2, col) for col in columns(basis)]
    labels = [f"v{k + 1}" for k in range(len(vectors))]
    return AbelianPresentation(labels, [[] for _ in labels]), vectors


def standard_kernel_generators(params, kd=None):
    """The generators of Ker(d1) modulo Im(d2).

    With e = 2**(bound - alpha), beta = b0 / 2**alpha and sigma the case sign,

        u1 = (y + 2) x1
        u2 = (y + 2)(delta_c + 2**(c+1)) x2
        u3 = e x1 + sigma beta y x2
        u4 = (e/2) delta_c x1 - sigma beta (delta_c + 2**c (y + 2)) x2

    u4 is only returned when alpha < bound, so that e/2 is an integer.

    Returns
    -------
    GeneratorSet
    """

    kd = kd or build_koszul(params)
    B = kd.algebra
    y, delta, zero = B.y, B.delta_c, B.scalar(0)
    sigma, beta, e, c = params.sigma, params.beta, params.e, params.c

    vectors = {
        "u1": ModuleVector.from_pair(y + 2, zero),
        "u2": ModuleVector.from_pair(zero, _standard_v(kd)),
        "u3": ModuleVector.from_pair(B.scalar(e), sigma * beta * y),
    }
    if params.has_u4:
        half_e = exact_quotient(e, 2, "u4 coefficient")
        vectors["u4"] = ModuleVector.from_pair(
            half_e * delta, -sigma * beta * (delta + 2**c * (y + 2))
        )
    return GeneratorSet(kd, vectors)


def module_order(kd):
    """Middle degree coordinate positions from the highest monomial down.

    The order is position over term with x1 above x2; inside a block the
    monomials follow the basis order of B, which is graded with
    delta_plus > delta_c > y. For rank 4 this reads

        x2 < yx2 < delta_c x2 < delta_c y x2 < x1 < yx1 < delta_c x1 < delta_c y x1
    """

    return _descending(kd.rank)


def _descending(rank):
    # x1 block (positions 0..rank-1) above the x2 block, higher basis index above lower
    return [k for k in reversed(range(rank))] + [rank + k for k in reversed(range(rank))]


def monomial_label(kd, position):
    """Label such as "y*delta_c*x2" for a middle degree coordinate."""

    rank = kd.rank
    block, k = ("x1", position) if position < rank else ("x2", position - rank)
    name = kd.algebra.basis_names[k]
    return block if name == "1" else f"{name}*{block}"


def leading_term(kd, vector):
    """(position, coefficient, label) of the leading monomial, or None for zero."""

    coords = vector.coords if isinstance(vector, ModuleVector) else tuple(vector)
    for position in _descending(kd.rank):
        if coords[position] != 0:
            return position, coords[position], monomial_label(kd, position)
    return None


class GeneratorSet:
    """Named middle degree vectors with their leading terms.

    Attributes
    ----------
    names : list of str
    vectors : list of ModuleVector
    leading_terms : list of str
        labels of the leading monomials under module_order
    """

    def __init__(self, kd, vectors):
        self.kd = kd
        self.names = list(vectors)
        self.vectors = [vectors[name] for name in self.names]
        self.leading_terms = []
        for vector in self.vectors:
            lead = leading_term(kd, vector)
            self.leading_terms.append(None if lead is None else lead[2])

    def __getitem__(self, name):
        try:
            return self.vectors[self.names.index(name)]
        except ValueError:
            raise RuntimeError(f"No generator named {name!r}; have {self.names}.")

    def __contains__(self, name):
        return name in self.names

    def __len__(self):
        return len(self.names)

    def module_span(self):
        """Columns spanning the B-submodule generated by the vectors, as a Z-lattice."""

        B = self.kd.algebra
        cols = []
        for vector in self.vectors:
            for k in range(B.rank):
                cols.append(list(vector.scale(B.basis_element(k)).coords))
        return cols

    def to_dict(self):
        return {
            name: {"leading_term": lead, "x1": str(vector.x1), "x2": str(vector.x2)}
            for name, vector, lead in zip(self.names, self.vectors, self.leading_terms)
        }

    def __repr__(self):
        return f"GeneratorSet({dict(zip(self.names, self.leading_terms))})"


def _in_kernel_d1(kd, vector):
    return all(x == 0 for x in mat_vec(kd.D1, vector.coords))


def in_image_d2(kd, vector):
    """Whether a middle degree vector is a boundary."""
    return lattice_contains(kd.D2, list(vector.coords))


def verify_h1(kd, gens):
    """Check the H1 generators and compute H1 = Ker(D1) / Im(D2).

    Returns
    -------
    (AbelianPresentation, list of CheckRecord)
        the presentation is on the HNF basis of Ker(D1); the records are
        koszul.h1.kernel_membership, koszul.h1.span and koszul.h1.generator_orders
    """

    records = []
    outside = [name for name, vector in zip(gens.names, gens.vectors) if not _in_kernel_d1(kd, vector)]
    records.append(CheckRecord(
        "koszul.h1.kernel_membership", "pass" if len(outside) == 0 else "fail", outside or None
    ))

    kernel = kd.kernel_d1()
    n = 2 * kd.rank
    spanned = from_columns(gens.module_span() + columns(kd.D2), n)
    spans = lattice_equal(spanned, kernel)
    records.append(CheckRecord(
        "koszul.h1.span", "pass" if spans else "fail",
        None if spans else "span(gens) + Im(D2) differs from Ker(D1)",
    ))

    labels = [f"k{j + 1}" for j in range(len(kernel[0]) if len(kernel) > 0 else 0)]
    presentation = quotient_presentation(kernel, kd.D2, labels)

    orders = {}
    for name, vector in zip(gens.names, gens.vectors):
        coords = solve_integer(kernel, list(vector.coords)) if name not in outside else None
        orders[name] = None if coords is None else presentation.order_of(coords)
    records.append(CheckRecord(
        "koszul.h1.generator_orders", "pass" if None not in orders.values() else "fail", orders,
        gating=False,
    ))

    return presentation, records


def wedge_multiply(kd, a, b):
    """Product of two cycles of degree 1 in B(x1^x2).

    (p1 x1 + q1 x2)(p2 x1 + q2 x2) = (p1 q2 - q1 p2) x1^x2

    Raises
    ------
    RuntimeError
        if either factor is not a middle degree cycle
    """

    for name, vector in (("first", a), ("second", b)):
        if vector.degree != 1 or not _in_kernel_d1(kd, vector):
            raise RuntimeError(f"The {name} factor {vector} is not a cycle of degree 1.")

    return ModuleVector.from_coefficient(a.x1 * b.x2 - a.x2 * b.x1)


def verify_koszul(params, kd=None):
    """CheckRecords for the complex and its homology.

    koszul.complex, koszul.h0.order_of_y, koszul.h0.augmentation,
    koszul.h2.rank, koszul.h2.generator and the three koszul.h1 records.
    """

    kd = kd or build_koszul(params)
    B = kd.algebra
    records = []

    product = mat_mul(kd.D1, kd.D2)
    zero = all(x == 0 for row in product for x in row)
    records.append(CheckRecord("koszul.complex", "pass" if zero else "fail"))

    h0 = homology_h0(kd)
    order = h0.order_of(list(B.y.coords))
    records.append(CheckRecord(
        "koszul.h0.order_of_y", "pass" if order == 2**params.alpha else "fail",
        {"order": order, "expected": 2**params.alpha},
    ))
    one_order = h0.order_of(list(B.one().coords))
    records.append(CheckRecord(
        "koszul.h0.augmentation", "pass" if one_order == 0 else "fail", {"order_of_one": one_order}
    ))

    _, basis = homology_h2(kd)
    expected_rank = 2 if params.is_even else 1
    records.append(CheckRecord(
        "koszul.h2.rank", "pass" if len(basis) == expected_rank else "fail",
        {"rank": len(basis), "expected": expected_rank},
    ))
    v = _standard_v(kd)
    multiples = [list((v * B.basis_element(k)).coords) for k in range(B.rank)]
    found = [list(vector.coords) for vector in basis]
    same = lattice_equal(from_columns(multiples, B.rank), from_columns(found, B.rank))
    records.append(CheckRecord(
        "koszul.h2.generator", "pass" if same else "fail",
        None if same else {"kernel_basis": [str(vector) for vector in basis], "v": str(v)},
    ))

    records += verify_h1(kd, standard_kernel_generators(params, kd))[1]
    return records
