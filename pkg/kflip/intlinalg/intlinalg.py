"""Exact integer matrix algorithms for homology computations.

Matrices are lists of rows of Python ints. A matrix with no columns keeps its
rows as empty lists, so the row count survives.

Classes
-------
AbelianPresentation
    a finitely generated abelian group given by generators and relations

Functions
---------
identity(n)
    The n x n identity matrix.
transpose(M, nrows=None)
    Transpose, keeping the shape of matrices without columns.
mat_mul(A, B)
    Exact product of integer matrices.
hermite_normal_form(M)
    Row-style Hermite normal form H and unimodular U with U*M = H.
smith_normal_form(M)
    Smith normal form S and unimodular U, V with U*M*V = S.
kernel_basis(M, ncols=None)
    Columns forming a Z-basis of {x : M*x = 0}.
solve_integer(M, b)
    An integer solution of M*x = b, or None.
element_order(relations, vector)
    Additive order of a vector modulo the column lattice of relations.
quotient_presentation(sub_gens, ambient_rels=None, labels=None)
    Presentation of span(sub_gens) / span(ambient_rels).
lattice_equal(A, B)
    Whether two matrices have the same column lattice.
lattice_contains(A, vector)
    Whether a vector lies in the column lattice of A.
"""

import numpy as np
import sympy
from sympy.core.intfunc import igcdex
from sympy.polys.matrices import DomainMatrix


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _ncols(M, default=0):
    return len(M[0]) if len(M) > 0 else default


def transpose(M, nrows=None):
    """Transpose M. nrows is the column count of M, needed when M has no rows."""

    if len(M) == 0:
        return [[] for _ in range(nrows or 0)]
    return [list(col) for col in zip(*M)] if len(M[0]) > 0 else []


def mat_mul(A, B):
    """Exact product of integer matrices (object dtype keeps Python ints)."""

    if len(A) == 0:
        return []
    inner = _ncols(A)
    if inner == 0:
        return [[0] * _ncols(B) for _ in A]
    product = np.array(A, dtype=object).dot(np.array(B, dtype=object))
    return [[int(x) for x in row] for row in product.tolist()]


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def columns(M):
    return transpose(M)


def from_columns(cols, nrows):
    """Matrix whose columns are the given vectors of length nrows."""

    return [[col[i] for col in cols] for i in range(nrows)]


def determinant(M):
    """Exact determinant of a square integer matrix."""

    if len(M) == 0:
        return 1
    return int(DomainMatrix.from_list(M, sympy.ZZ).det())


def _combine_rows(M, i, j, a, b, c, d):
    # row_i <- a*row_i + b*row_j and row_j <- c*row_i + d*row_j, simultaneously
    row_i, row_j = M[i], M[j]
    M[i] = [a * x + b * y for x, y in zip(row_i, row_j)]
    M[j] = [c * x + d * y for x, y in zip(row_i, row_j)]


def _combine_cols(M, i, j, a, b, c, d):
    for row in M:
        x, y = row[i], row[j]
        row[i] = a * x + b * y
        row[j] = c * x + d * y


def hermite_normal_form(M):
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular and U*M = H. H is in row echelon form,
    every pivot is positive and every entry above a pivot lies in [0, pivot).
    Zero rows come last.

    Examples
    --------
    >>> hermite_normal_form([[2, 4], [0, 3]])[0]
    [[2, 1], [0, 3]]
    """

    H = [[int(x) for x in row] for row in M]
    nrows = len(H)
    ncols = _ncols(H)
    U = identity(nrows)

    pivot_row = 0
    for col in range(ncols):
        if pivot_row == nrows:
            break

        for i in range(pivot_row + 1, nrows):
            b = H[i][col]
            if b == 0:
                continue
            a = H[pivot_row][col]
            x, y, g = (int(v) for v in igcdex(a, b))
            # [[x, y], [-b/g, a/g]] has determinant 1
            for mat in (H, U):
                _combine_rows(mat, pivot_row, i, x, y, -(b // g), a // g)

        pivot = H[pivot_row][col]
        if pivot == 0:
            continue
        if pivot < 0:
            H[pivot_row] = [-x for x in H[pivot_row]]
            U[pivot_row] = [-x for x in U[pivot_row]]
            pivot = -pivot

        for k in range(pivot_row):
            q = H[k][col] // pivot
            if q != 0:
                H[k] = [x - q * y for x, y in zip(H[k], H[pivot_row])]
                U[k] = [x - q * y for x, y in zip(U[k], U[pivot_row])]

        pivot_row += 1

    return H, U


def _smallest_entry(S, t):
    best = None
    for i in range(t, len(S)):
        for j in range(t, len(S[i])):
            if S[i][j] != 0 and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                best = (i, j)
    return best


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(M):
    """Smith normal form with transforms.

    Returns (S, U, V) with U, V unimodular and U*M*V = S, where S is diagonal
    and each diagonal entry divides the next (zeros last).

    Examples
    --------
    >>> smith_normal_form([[6, 0], [0, 4]])[0]
    [[2, 0], [0, 12]]
    """

    S = [[int(x) for x in row] for row in M]
    nrows = len(S)
    ncols = _ncols(S)
    U = identity(nrows)
    V = identity(ncols)

    for t in range(min(nrows, ncols)):
        position = _smallest_entry(S, t)
        if position is None:
            break
        _swap_rows(S, t, position[0])
        _swap_rows(U, t, position[0])
        _swap_cols(S, t, position[1])
        _swap_cols(V, t, position[1])

        while True:
            pivot = S[t][t]
            for i in range(t + 1, nrows):
                q = S[i][t] // pivot
                if q != 0:
                    S[i] = [x - q * y for x, y in zip(S[i], S[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
            for j in range(t + 1, ncols):
                q = S[t][j] // pivot
                if q != 0:
                    _combine_cols(S, j, t, 1, -q, 0, 1)
                    _combine_cols(V, j, t, 1, -q, 0, 1)

            # remainders left in row t or column t are smaller than the pivot
            leftovers = [(i, t) for i in range(t + 1, nrows) if S[i][t] != 0]
            leftovers += [(t, j) for j in range(t + 1, ncols) if S[t][j] != 0]
            if len(leftovers) > 0:
                i, j = min(leftovers, key=lambda p: abs(S[p[0]][p[1]]))
                if i != t:
                    _swap_rows(S, t, i)
                    _swap_rows(U, t, i)
                else:
                    _swap_cols(S, t, j)
                    _swap_cols(V, t, j)
                continue

            bad_row = next(
                (i for i in range(t + 1, nrows)
                 if any(S[i][j] % pivot != 0 for j in range(t + 1, ncols))),
                None,
            )
            if bad_row is None:
                break
            S[t] = [x + y for x, y in zip(S[t], S[bad_row])]
            U[t] = [x + y for x, y in zip(U[t], U[bad_row])]

        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]

    return S, U, V


def smith_diagonal(M):
    S = smith_normal_form(M)[0]
    return [S[i][i] for i in range(min(len(S), _ncols(S)))]


def kernel_basis(M, ncols=None):
    """Columns forming a Z-basis of {x : M*x = 0}.

    The basis is HNF-reduced so the output is deterministic. The result is a
    matrix with one row per column of M; it has no columns when the kernel
    is trivial.

    Parameters
    ----------
    M : list of lists of int
    ncols : int, default None
        column count of M; required only when M has no rows

    Examples
    --------
    >>> kernel_basis([[1, 1]])
    [[1], [-1]]
    """

    n = _ncols(M, ncols or 0) if len(M) > 0 else (ncols or 0)
    H, U = hermite_normal_form(transpose(M, nrows=n))
    kernel_rows = [U[i] for i in range(n) if all(x == 0 for x in H[i])]

    if len(kernel_rows) > 0:
        reduced = hermite_normal_form(kernel_rows)[0]
        kernel_rows = [row for row in reduced if any(x != 0 for x in row)]

    return from_columns(kernel_rows, n)


def solve_integer(M, b):
    """An integer solution x of M*x = b, or None when none exists."""

    b = [int(x) for x in b]
    nrows = len(M)
    ncols = _ncols(M)
    if nrows == 0:
        return []
    if ncols == 0:
        return [] if all(x == 0 for x in b) else None

    S, U, V = smith_normal_form(M)
    rhs = mat_vec(U, b)
    y = [0] * ncols
    for i in range(nrows):
        d = S[i][i] if i < ncols else 0
        if d == 0:
            if rhs[i] != 0:
                return None
        elif rhs[i] % d != 0:
            return None
        else:
            y[i] = rhs[i] // d

    return mat_vec(V, y)


def lattice_contains(A, vector):
    """Whether vector lies in the column lattice of A."""

    if len(A) == 0 or _ncols(A) == 0:
        return all(x == 0 for x in vector)
    return solve_integer(A, vector) is not None


def _row_lattice_hnf(A):
    H = hermite_normal_form(transpose(A))[0]
    return [row for row in H if any(x != 0 for x in row)]


def lattice_equal(A, B):
    """Whether A and B (same number of rows) span the same column lattice.

    Examples
    --------
    >>> lattice_equal([[2, 1], [1, 1]], identity(2))
    True
    >>> lattice_equal([[1], [0]], [[2], [0]])
    False
    """

    if len(A) != len(B):
        raise RuntimeError(f"Ambient dimensions differ: {len(A)} and {len(B)}.")
    return _row_lattice_hnf(A) == _row_lattice_hnf(B)


def element_order(relations, vector):
    """Additive order of vector modulo the column lattice of relations.

    Returns 0 when the class has infinite order.
    """

    n = len(vector)
    rel_cols = columns(relations) if len(relations) > 0 else []
    augmented = from_columns(rel_cols + [[-x for x in vector]], n)
    kernel = kernel_basis(augmented, ncols=len(rel_cols) + 1)
    # last coordinates of kernel vectors generate the ideal of annihilating multiples
    multipliers = [x for x in kernel[-1] if x != 0]
    if len(multipliers) == 0:
        return 0
    return int(sympy.igcd(*multipliers)) if len(multipliers) > 1 else abs(multipliers[0])


class AbelianPresentation:
    """A finitely generated abelian group given by generators and relations.

    Generators are the standard basis of Z**g (labelled by generator_labels),
    relations are the columns of relation_matrix. The canonical form is the
    list of invariant factors with 1s dropped; a 0 stands for a copy of Z.
    """

    def __init__(self, generator_labels, relation_matrix):
        self.generator_labels = list(generator_labels)
        self.relation_matrix = [list(row) for row in relation_matrix]

        try:
            assert len(self.relation_matrix) == len(self.generator_labels)
        except AssertionError:
            raise RuntimeError(
                f"{len(self.generator_labels)} generators but "
                f"{len(self.relation_matrix)} relation rows."
            )

        ngens = len(self.generator_labels)
        diagonal = smith_diagonal(self.relation_matrix) if ngens > 0 else []
        factors = diagonal + [0] * (ngens - len(diagonal))
        torsion = sorted(d for d in factors if d not in (0, 1))
        self.invariant_factors = torsion + [0] * factors.count(0)

    @property
    def free_rank(self):
        return self.invariant_factors.count(0)

    @property
    def torsion(self):
        return [d for d in self.invariant_factors if d != 0]

    def order(self):
        """Order of the group, or 0 when it is infinite."""
        if self.free_rank > 0:
            return 0
        total = 1
        for d in self.torsion:
            total *= d
        return total

    def order_of(self, coords):
        """Additive order of the class with the given generator coordinates."""
        return element_order(self.relation_matrix, coords)

    def describe(self):
        pieces = [f"Z/{d}" for d in self.torsion]
        if self.free_rank == 1:
            pieces.append("Z")
        elif self.free_rank > 1:
            pieces.append(f"Z^{self.free_rank}")
        return " + ".join(pieces) if len(pieces) > 0 else "0"

    def to_dict(self):
        return {
            "generators": self.generator_labels,
            "invariant_factors": self.invariant_factors,
            "group": self.describe(),
        }

    def __repr__(self):
        return f"AbelianPresentation({self.describe()})"


def quotient_presentation(sub_gens, ambient_rels=None, labels=None):
    """Presentation of span(sub_gens) / span(ambient_rels).

    Relations are the coordinates of each ambient relation in the generators,
    together with the integer dependencies among the generators themselves.

    Parameters
    ----------
    sub_gens : n x g matrix whose columns generate the numerator lattice
    ambient_rels : n x k matrix, or None for no relations
    labels : list of g generator names, default "g1", "g2", ...

    Returns
    -------
    AbelianPresentation

    Examples
    --------
    >>> quotient_presentation(identity(2), [[2, 0], [0, 3]]).invariant_factors
    [6]
    """

    n = len(sub_gens)
    gens = columns(sub_gens) if n > 0 else []
    if labels is None:
        labels = [f"g{i + 1}" for i in range(len(gens))]

    rel_columns = []
    if ambient_rels is not None and len(ambient_rels) > 0:
        for rel in columns(ambient_rels):
            coords = solve_integer(sub_gens, rel) if len(gens) > 0 else None
            if coords is None and any(x != 0 for x in rel):
                raise RuntimeError(f"Relation {rel} is not in the span of the generators.")
            rel_columns.append(coords if coords is not None else [0] * len(gens))

    if len(gens) > 0:
        dependencies = columns(kernel_basis(sub_gens))
        rel_columns += [col for col in dependencies]

    relation_matrix = from_columns(rel_columns, len(gens))
    return AbelianPresentation(labels, relation_matrix)
