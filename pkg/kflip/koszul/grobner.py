"""Selection of kernel generators by leading terms.

Under the position over term order of koszul.module_order, the HNF of
Ker(D1) written in descending monomial coordinates has one row per leading
monomial that occurs, and its pivot is the smallest positive leading
coefficient among kernel elements with that leading monomial. Those rows are
the candidates; a candidate is redundant when its monomial is delta_c times
the monomial of another candidate in the same block and its coefficient is
divisible by that candidate's coefficient.

Functions
---------
grobner_candidates(kd)
    One kernel element per occurring leading monomial.
grobner_select(kd)
    The candidates left after removing redundant ones.
leading_profile(kd, cols)
    Leading monomial positions and pivots of a lattice.
verify_grobner(kd, selection=None)
    CheckRecords comparing the selection with Ker(D1) and with u1, ..., u4.
"""

import warnings

from kflip.intlinalg.intlinalg import columns, hermite_normal_form
from kflip.koszul.koszul import GeneratorSet, ModuleVector, module_order, monomial_label, standard_kernel_generators
from kflip.utilities import CheckRecord


def _permute(kd, coords):
    return [coords[position] for position in module_order(kd)]


def _unpermute(kd, permuted):
    coords = [0] * (2 * kd.rank)
    for j, position in enumerate(module_order(kd)):
        coords[position] = permuted[j]
    return coords


def _echelon(kd, cols):
    """Nonzero HNF rows of the lattice spanned by cols, in descending coordinates."""

    rows = [_permute(kd, list(col)) for col in cols]
    if len(rows) == 0:
        return []
    H = hermite_normal_form(rows)[0]
    return [row for row in H if any(x != 0 for x in row)]


def leading_profile(kd, cols):
    """{position: pivot} for the lattice spanned by the middle degree vectors cols."""

    order = module_order(kd)
    profile = {}
    for row in _echelon(kd, cols):
        j = next(k for k, x in enumerate(row) if x != 0)
        profile[order[j]] = row[j]
    return profile


def grobner_candidates(kd):
    """Kernel elements with minimal leading coefficient, one per leading monomial.

    Returns
    -------
    list of (label, coefficient, ModuleVector), highest leading monomial first
    """

    if kd.rank != 4:
        warnings.warn(
            f"The monomial order for a rank {kd.rank} ring extends the rank 4 order; "
            "the selection is exploratory.",
            UserWarning,
        )

    order = module_order(kd)
    candidates = []
    for row in _echelon(kd, columns(kd.kernel_d1())):
        j = next(k for k, x in enumerate(row) if x != 0)
        vector = ModuleVector(kd.algebra, 1, _unpermute(kd, row))
        candidates.append((monomial_label(kd, order[j]), row[j], vector))
    return candidates


def _times_delta(label):
    """The label of delta_c times a monomial label, or None when it leaves the basis."""

    *factors, block = label.split("*")
    if "delta_c" in factors:
        return None
    names = ["y", "delta_c", "delta_plus"]
    factors = sorted(factors + ["delta_c"], key=names.index)
    return "*".join(factors + [block])


def grobner_select(kd):
    """Drop redundant candidates and return the rest.

    Returns
    -------
    GeneratorSet
        named g1, g2, ... from the highest leading monomial down
    """

    candidates = grobner_candidates(kd)
    coefficients = {label: coeff for label, coeff, _ in candidates}

    kept = {}
    for label, coeff, vector in candidates:
        redundant = any(
            _times_delta(other) == label and coeff % other_coeff == 0
            for other, other_coeff in coefficients.items() if other != label
        )
        if not redundant:
            kept[f"g{len(kept) + 1}"] = vector
    return GeneratorSet(kd, kept)


def verify_grobner(kd, selection=None):
    """CheckRecords for the selection.

    koszul.grobner.leading_module compares the leading profile of the B-span of
    the selection with that of Ker(D1); koszul.grobner.generators compares the
    selected leading monomials with those of u1, ..., u4. Both are gating for
    rank 4 only; for rank 8 the generators comparison is recorded as skip.
    """

    if selection is None:
        selection = grobner_select(kd)
    gating = kd.rank == 4

    span = selection.module_span()
    expected = leading_profile(kd, columns(kd.kernel_d1()))
    found = leading_profile(kd, span)
    records = [CheckRecord(
        "koszul.grobner.leading_module", "pass" if found == expected else "fail",
        None if found == expected else {
            "kernel": {monomial_label(kd, k): x for k, x in sorted(expected.items())},
            "selection": {monomial_label(kd, k): x for k, x in sorted(found.items())},
        },
        gating=gating,
    )]

    standard = standard_kernel_generators(kd.params, kd)
    same = sorted(selection.leading_terms, key=str) == sorted(standard.leading_terms, key=str)
    if gating:
        status = "pass" if same else "fail"
    else:
        # rank 8: reported only
        status = "skip"
    records.append(CheckRecord(
        "koszul.grobner.generators", status,
        {"selected": selection.leading_terms, "generators": standard.leading_terms, "same": same},
        gating=gating,
    ))
    return records
