"""Relation tables of the four cases and their evaluation in the homology.

Each table row is a polynomial in y, delta_c, delta_plus and the exterior
classes u1, ..., u4, v, written with the case parameters alpha, n, s, c and
b0 as symbols. Row ids name the homology level the relation lives in:

    B/k   a relation of the ring B itself
    H0/k  zero in H0 = B / Im(D1)
    H1/k  a boundary in Bx1 + Bx2
    H2/k  zero in B(x1^x2) after multiplying the classes

Rows involving u4 are dropped when alpha reaches its bound.

Classes
-------
Relation
    one instantiated row with integer coefficients

Functions
---------
load_ledger()
    The erratum ledger as a dict keyed by entry id.
relations_for_case(params)
    Instantiate the table of the case.
evaluate_relation(relation, kd, gens)
    Whether the relation holds, with the residual.
verify_relations(params, kd=None, ledger=None)
    CheckRecords for every row and for the summary list variants.
"""

import json
import os
import warnings

import sympy
from sympy.parsing.sympy_parser import parse_expr

from kflip.intlinalg.intlinalg import lattice_contains
from kflip.koszul.koszul import build_koszul, in_image_d2, standard_kernel_generators, wedge_multiply
from kflip.utilities import CheckRecord, format_terms


RELATION_GENERATORS = ("y", "delta_c", "delta_plus", "u1", "u2", "u3", "u4", "v")

LEDGER_PATH = os.path.join(os.path.dirname(__file__), "erratum_ledger.json")

_B_ROWS = {
    "Zero": [
        ("B/1", "y**2 + 2*y"),
        ("B/2", "delta_c**2 + 2**(c+1)*delta_c - 2**(2*c-1)*y*(1 - binomial(s/2+c, c))"),
    ],
    "Two": [
        ("B/1", "y**2 + 2*y"),
        ("B/2", "delta_c**2 + 2**(c+1)*delta_c - 2**(2*c-1)*y*(1 + binomial(s/2+c, c))"),
    ],
}

_DELTA_PLUS_ROWS = {
    "Zero": ("B/3", "delta_c*delta_plus + 2**(c-1)*delta_c - 2**(2*c-3)*y*(1 - binomial(s/2+c-1, c-1)) "
                    "- delta_plus**2"),
    "Two": ("B/3", "delta_c*delta_plus + 2**(c-1)*delta_c - 2**(2*c-3)*y*(1 + binomial(s/2+c-1, c-1)) "
                   "- delta_plus**2"),
}

_SHARED_ROWS = [
    ("H1/3a", "y*u1"),
    ("H1/3b", "y*u2"),
    ("H1/3c", "delta_c*u2"),
    ("H2/1a", "u2*u4"),
    ("H2/1b", "u1*u3"),
    ("H2/1c", "delta_c*u1*u4"),
]

_CASE_ROWS = {
    "OddZero": [
        ("H0/1", "2**alpha*y"),
        ("H0/2", "2**(s-1)*(2+y)*delta_c + 2**(n-1)*y"),
        ("H1/1", "2**alpha*u3 - (2**(s-1)*delta_c + 2**(n-1))*u1"),
        ("H1/2", "(y+2)*u3 - 2**(n-alpha)*u1"),
        ("H1/4", "(y+2)*u4 - (2**(n-1-alpha)*delta_c*u1 - 2**(-alpha)*b0*u2)"),
        ("H1/5", "(y+2)*(2**c*delta_c+1)*u3 + (y+2)*delta_c*u4 - 2**(n-alpha)*u1"),
        ("H1/6", "2**(c-alpha+1)*b0*u2 + (y+2)*(2**(c+1)+delta_c)*u4"),
        ("H1/7", "2**(c-alpha-1)*b0*u2 + (2**(c-1)*delta_c + 2**(2*c-2)*y*(1 - binomial(s/2+c, c)) "
                 "+ 2**(c-1)*delta_c*y)*u3 + (2**c+delta_c+2**c*y+delta_c*y)*u4"),
        ("H2/2", "2**(n-alpha)*b0*u1*u2 + 2**n*u1*u4 + b0*u2*u3"),
        ("H2/3", "2**(n-2*alpha)*b0*u1*u2 + 2**(-alpha)*b0*u2*u3 + 2*u3*u4"),
        ("H2/4", "-2**(n-alpha+1)*u1*u4 + 2**(-alpha)*b0*u2*u3 + 2*u3*u4"),
        ("H2/5", "2**(n-2*alpha)*b0*u1*u2 + 2**(n-alpha)*u1*u4 + 2*u3*u4"),
    ],
    "OddTwo": [
        ("H0/1", "2**alpha*y"),
        ("H0/2", "2**(s-1)*(2+y)*delta_c + 2**(n-1)*y"),
        ("H1/1", "-2**alpha*u3 + (2**(s-1)*delta_c + 2**(n-1))*u1"),
        ("H1/2", "(y+2)*u3 - 2**(n-alpha)*u1"),
        ("H1/4", "(y+2)*u4 - 2**(n-1-alpha)*delta_c*u1 - 2**(-alpha)*b0*u2"),
        ("H1/5", "(y+2)*(2**c*delta_c+1)*u3 + (y+2)*delta_c*u4 - 2**(n-alpha)*u1"),
        ("H1/6", "2**(c-alpha+1)*b0*u2 - (y+2)*(2**(c+1)+delta_c)*u4"),
        ("H1/7", "-2**(c-alpha-1)*b0*u2 + (2**(c-1)*delta_c + 2**(2*c-2)*y*(1 + binomial(s/2+c, c)) "
                 "+ 2**(c-1)*delta_c*y)*u3 + (2**c+delta_c+2**c*y+delta_c*y)*u4"),
        ("H2/2", "2**(n-alpha)*b0*u1*u2 - 2**n*u1*u4 + b0*u2*u3"),
        ("H2/3", "2**(n-2*alpha)*b0*u1*u2 + 2**(-alpha)*b0*u2*u3 - 2*u3*u4"),
        ("H2/4", "-2**(n-alpha+1)*u1*u4 - 2**(-alpha)*b0*u2*u3 + 2*u3*u4"),
        ("H2/5", "2**(n-2*alpha)*b0*u1*u2 - 2**(n-alpha)*u1*u4 - 2*u3*u4"),
    ],
    "EvenZero": [
        ("H0/1", "2**alpha*y"),
        ("H0/2", "2**(s-2)*(2+y)*delta_c + 2**(n-2)*y"),
        ("H1/1", "2**alpha*u3 - (2**(s-2)*delta_c + 2**(n-2))*u1"),
        ("H1/2", "(y+2)*u3 - 2**(n-alpha-1)*u1"),
        ("H1/4", "(y+2)*u4 - (2**(n-2-alpha)*delta_c*u1 - 2**(-alpha)*b0*u2)"),
        ("H1/5", "(y+2)*(2**c*delta_c+1)*u3 + (y+2)*delta_c*u4 - 2**(n-alpha-1)*u1"),
        ("H1/6", "2**(c-alpha+1)*b0*u2 + (y+2)*(2**(c+1)+delta_c)*u4"),
        ("H1/7", "2**(c-alpha-1)*b0*u2 + (2**(c-1)*delta_c + 2**(2*c-2)*y*(1 - binomial(s/2+c, c)) "
                 "+ 2**(c-1)*delta_c*y)*u3 + (2**c+delta_c+2**c*y+delta_c*y)*u4"),
        ("H2/2", "2**(n-alpha-2)*b0*u1*u2 + 2**n*u1*u4 - b0*u2*u3"),
        ("H2/3", "2**(n-2*alpha-1)*b0*u1*u2 + 2**(-alpha)*b0*u2*u3 + 2*u3*u4"),
        ("H2/4", "-2**(n-alpha)*u1*u4 + 2**(-alpha)*b0*u2*u3 + 2*u3*u4"),
        ("H2/5", "2**(n-2*alpha-1)*b0*u1*u2 + 2**(n-alpha-1)*u1*u4 + 2*u3*u4"),
    ],
    "EvenTwo": [
        ("H0/1", "2**alpha*y"),
        ("H0/2", "2**(s-2)*(2+y)*delta_c + 2**(n-2)*y"),
        ("H1/1", "-2**alpha*u3 + (2**(s-2)*delta_c + 2**(n-2))*u1"),
        ("H1/2", "(y+2)*u3 - 2**(n-alpha-1)*u1"),
        ("H1/4", "(y+2)*u4 - 2**(n-2-alpha)*delta_c*u1 - 2**(-alpha)*b0*u2"),
        ("H1/5", "(y+2)*(2**c*delta_c+1)*u3 - (y+2)*delta_c*u4 - 2**(n-alpha-1)*u1"),
        ("H1/6", "2**(c-alpha+1)*b0*u2 - (y+2)*(2**(c+1)+delta_c)*u4"),
        ("H1/7", "-2**(c-alpha-1)*b0*u2 + (2**(c-1)*delta_c + 2**(2*c-2)*y*(1 + binomial(s/2+c, c)) "
                 "+ 2**(c-1)*delta_c*y)*u3 + (2**c+delta_c+2**c*y+delta_c*y)*u4"),
        ("H2/2", "2**(n-alpha-2)*b0*u1*u2 - 2**n*u1*u4 - b0*u2*u3"),
        ("H2/3", "2**(n-2*alpha-1)*b0*u1*u2 + 2**(-alpha)*b0*u2*u3 - 2*u3*u4"),
        ("H2/4", "-2**(n-alpha)*u1*u4 - 2**(-alpha)*b0*u2*u3 + 2*u3*u4"),
        ("H2/5", "2**(n-2*alpha-1)*b0*u1*u2 - 2**(n-alpha-1)*u1*u4 - 2*u3*u4"),
    ],
}

# Printed variants in the summary relation lists that disagree with the tables.
SUMMARY_VARIANTS = {
    "OddZero": [("H1/4", "(y+2)*u4 - 2**(n-1-alpha)*delta_c*u1 - 2**(-alpha)*b0*u2")],
    "EvenZero": [("H1/4", "(y+2)*u4 - 2**(n-2-alpha)*delta_c*u1 - 2**(-alpha)*b0*u2")],
}


def table_rows(case):
    """(row id, text) pairs of the case in presentation order."""

    parity = "Two" if case.endswith("Two") else "Zero"
    rows = list(_B_ROWS[parity])
    if case.startswith("Even"):
        rows.append(_DELTA_PLUS_ROWS[parity])

    specific = _CASE_ROWS[case]
    rows += [row for row in specific if row[0].startswith("H0")]
    rows += [row for row in specific if row[0] in ("H1/1", "H1/2")]
    rows += [row for row in _SHARED_ROWS if row[0].startswith("H1")]
    rows += [row for row in specific if row[0].startswith("H1/") and row[0] not in ("H1/1", "H1/2")]
    rows += [row for row in _SHARED_ROWS if row[0].startswith("H2")]
    rows += [row for row in specific if row[0].startswith("H2")]
    rows.append(("H2/6", "u1*u2 - 2*v"))
    return rows


def _sort_key(exps):
    return (sum(exps), tuple(reversed(exps)))


class Relation:
    """One table row instantiated for a case.

    Attributes
    ----------
    source : str
        row id such as "H1/2"
    level : str
        "B", "H0", "H1" or "H2"
    terms : list of (int, tuple of int)
        coefficients with exponents over RELATION_GENERATORS, highest first
    """

    def __init__(self, source, terms):
        self.source = source
        self.level = source.split("/")[0]
        self.terms = sorted(terms, key=lambda term: _sort_key(term[1]), reverse=True)

    def monomial(self, exps):
        return [(name, e) for name, e in zip(RELATION_GENERATORS, exps) if e > 0]

    @property
    def text(self):
        return format_terms([(coeff, self.monomial(exps)) for coeff, exps in self.terms])

    def involves(self, name):
        k = RELATION_GENERATORS.index(name)
        return any(exps[k] > 0 for _, exps in self.terms)

    def to_dict(self):
        return {
            "lhs_terms": [
                {"coeff": coeff, "monomial": [[name, e] for name, e in self.monomial(exps)]}
                for coeff, exps in self.terms
            ],
            "source": self.source,
            "text": self.text,
        }

    def __repr__(self):
        return f"Relation({self.source}: {self.text})"


def _case_symbols(params):
    symbols = {name: sympy.Symbol(name) for name in RELATION_GENERATORS}
    symbols.update({
        "alpha": sympy.Integer(params.alpha),
        "b0": sympy.Integer(params.b0),
        "c": sympy.Integer(params.c),
        "n": sympy.Integer(params.n),
        "s": sympy.Integer(params.s),
        "binomial": sympy.binomial,
    })
    return symbols


def instantiate(source, text, params):
    """Substitute the case parameters into a row and expand it.

    Raises
    ------
    RuntimeError
        if a coefficient is not an integer
    """

    symbols = _case_symbols(params)
    gens = [symbols[name] for name in RELATION_GENERATORS]
    poly = sympy.Poly(sympy.expand(parse_expr(text, local_dict=symbols)), *gens)

    terms = []
    for exps, coeff in poly.terms():
        if not coeff.is_integer:
            raise RuntimeError(f"Row {source} has the non-integral coefficient {coeff} for {params!r}.")
        if coeff != 0:
            terms.append((int(coeff), tuple(exps)))
    return Relation(source, terms)


def relations_for_case(params):
    """The instantiated relation table of the case.

    Rows involving u4 are dropped, with a UserWarning, when alpha reaches its bound.
    """

    rows = table_rows(params.case)
    if not params.has_u4:
        kept = [(source, text) for source, text in rows if "u4" not in text]
        warnings.warn(
            f"alpha = {params.alpha} reaches its bound, so u4 does not exist; "
            f"dropped {len(rows) - len(kept)} relations involving u4.",
            UserWarning,
        )
        rows = kept
    return [instantiate(source, text, params) for source, text in rows]


def load_ledger(path=LEDGER_PATH):
    """The erratum ledger as a dict keyed by entry id."""

    with open(path, "r") as f:
        entries = json.load(f)["entries"]
    return {entry["id"]: entry for entry in entries}


def _ring_part(B, exps):
    return B.from_terms({tuple(exps[:3]): 1})


def _exterior_part(exps):
    return [name for name, e in zip(RELATION_GENERATORS[3:], exps[3:]) for _ in range(e)]


def evaluate_relation(relation, kd, gens):
    """Evaluate a relation in the homology of kd.

    Returns
    -------
    (bool, str)
        whether the relation holds and the residual that was tested
    """

    B = kd.algebra
    products = {}

    if relation.level in ("B", "H0"):
        value = B.scalar(0)
        for coeff, exps in relation.terms:
            if len(_exterior_part(exps)) != 0:
                raise RuntimeError(f"Row {relation.source} has exterior classes at level {relation.level}.")
            value = value + coeff * _ring_part(B, exps)
        if relation.level == "B":
            return value.is_zero(), str(value)
        return lattice_contains(kd.D1, list(value.coords)), str(value)

    if relation.level == "H1":
        vector = None
        for coeff, exps in relation.terms:
            names = _exterior_part(exps)
            if len(names) != 1 or names[0] == "v":
                raise RuntimeError(f"Row {relation.source} has {names} at level H1.")
            term = gens[names[0]].scale(coeff * _ring_part(B, exps))
            vector = term if vector is None else vector + term
        return in_image_d2(kd, vector), str(vector)

    value = B.scalar(0)
    for coeff, exps in relation.terms:
        names = _exterior_part(exps)
        if names == ["v"]:
            product = (B.y + 2) * (B.delta_c + 2**(kd.params.c + 1))
        elif len(names) == 2 and "v" not in names:
            key = tuple(names)
            if key not in products:
                products[key] = wedge_multiply(kd, gens[names[0]], gens[names[1]]).coefficient
            product = products[key]
        else:
            raise RuntimeError(f"Row {relation.source} has {names} at level H2.")
        value = value + coeff * _ring_part(B, exps) * product
    return value.is_zero(), str(value)


def _record(name, holds, residual, ledger, ledger_id, gating=True):
    if holds:
        return CheckRecord(name, "pass", gating=gating)
    if ledger_id in ledger:
        return CheckRecord(name, "erratum", residual, gating=gating, ledger_id=ledger_id)
    return CheckRecord(name, "fail", residual, gating=gating)


def verify_relations(params, kd=None, ledger=None):
    """Evaluate every row of the case table.

    A row that fails is marked "erratum" when the ledger has an entry
    "relations/<case>/<row id>", otherwise "fail". The summary list variants
    are checked as well, without gating.

    Returns
    -------
    list of CheckRecord
    """

    kd = kd or build_koszul(params)
    ledger = load_ledger() if ledger is None else ledger
    gens = standard_kernel_generators(params, kd)

    records = []
    for relation in relations_for_case(params):
        holds, residual = evaluate_relation(relation, kd, gens)
        ledger_id = f"relations/{params.case}/{relation.source}"
        records.append(_record(f"relations.{relation.source}", holds, residual, ledger, ledger_id))

    if params.has_u4:
        for source, text in SUMMARY_VARIANTS.get(params.case, []):
            holds, residual = evaluate_relation(instantiate(source, text, params), kd, gens)
            ledger_id = f"intro/{params.case}/{source}"
            records.append(_record(f"relations.summary.{source}", holds, residual, ledger, ledger_id, gating=False))

    return records
