"""Assembly of the K-ring presentation and of the verification report.

Classes
-------
KRingPresentation
    generators and instantiated relations of one case
VerificationReport
    the CheckRecords of one case together with the ledger entries they cite

Functions
---------
assemble_presentation(params)
    The presentation of the case from the canonical relation table.
tangent_class(params)
    Coefficient of [y] in the Chern class of the tangent bundle.
cross_check(params, deep=False)
    Run every verification of the pipeline on one case.
serialize(obj, format="json")
    Deterministic bytes for a presentation or a report.
report_to_dataframe(report)
    The records of a report as a pandas DataFrame.
grid_summary(cases, deep=False)
    One row per case with counts of statuses.
valid_cases(m_max, s_max)
    All supported (m, s) pairs up to the bounds, and the count of rejected ones.
"""

import json

import pandas as pd

from kflip.clifford.clifford import verify_clifford
from kflip.koszul.grobner import verify_grobner
from kflip.koszul.koszul import build_koszul, verify_koszul
from kflip.koszul.relations import load_ledger, relations_for_case, verify_relations
from kflip.koszul.solution_tables import verify_solution_tables
from kflip.repring.laurent import verify_laurent
from kflip.repring.repring import build_B, build_case, verify_repring
from kflip.utilities import CheckRecord, ParameterError, gating_failures, records_to_dataframe


DEFAULT_GRID = [(7, 2), (9, 2), (11, 2), (13, 2), (15, 2),
                (11, 4), (13, 4), (15, 4), (10, 4), (12, 4), (14, 4), (16, 4),
                (14, 6), (15, 6), (16, 6)]

FORMATS = ("text", "json")


class KRingPresentation:
    """K*(FV_{m,2s}) as an exterior algebra over Z[y, delta_c(, delta_plus)]/I.

    Attributes
    ----------
    params : CaseParams
    exterior_generators : list of str
        t1, ..., then u1, u2, u3, u4 when it exists, and v
    polynomial_generators : list of str
    relations : list of Relation
        in table order; each carries its row id as source
    """

    def __init__(self, params, relations):
        self.params = params
        self.relations = relations

        us = ["u1", "u2", "u3"] + (["u4"] if params.has_u4 else [])
        self.exterior_generators = [f"t{k}" for k in range(1, params.t_count + 1)] + us + ["v"]
        self.polynomial_generators = ["y", "delta_c"] + (["delta_plus"] if params.is_even else [])

    @property
    def provenance(self):
        return {relation.text: relation.source for relation in self.relations}

    def to_dict(self):
        return {
            "case": self.params.to_dict(),
            "generators": {
                "exterior": self.exterior_generators,
                "polynomial": self.polynomial_generators,
            },
            "relations": [relation.to_dict() for relation in self.relations],
            "tangent_class": tangent_class(self.params),
        }

    def to_text(self):
        p = self.params
        lines = [
            f"K-ring of FV_{{{p.m},{2 * p.s}}} ({p.case}, n = {p.n}, c = {p.c}, alpha = {p.alpha}, b0 = {p.b0})",
            f"Exterior generators: {', '.join(self.exterior_generators)}",
            f"Polynomial generators: {', '.join(self.polynomial_generators)}",
            "Relations:",
        ]
        lines += [f"  [{relation.source}] {relation.text} = 0" for relation in self.relations]
        lines.append(f"Tangent bundle: c(T) = {tangent_class(p)}[y]")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"KRingPresentation({self.params.case}, m={self.params.m}, s={self.params.s})"


class VerificationReport:
    """The CheckRecords of one case.

    Attributes
    ----------
    params : CaseParams
    records : list of CheckRecord
    errata : list of dict
        ledger entries cited by records with status "erratum"
    """

    def __init__(self, params, records, ledger=None):
        self.params = params
        self.records = records

        ledger = load_ledger() if ledger is None else ledger
        cited = sorted({record.ledger_id for record in records if record.ledger_id is not None})
        self.errata = [ledger[ledger_id] for ledger_id in cited if ledger_id in ledger]

    @property
    def failures(self):
        return gating_failures(self.records)

    @property
    def passed(self):
        return len(self.failures) == 0

    def to_dict(self):
        return {
            "case": self.params.to_dict(),
            "checks": [record.to_dict() for record in self.records],
            "errata": self.errata,
            "passed": self.passed,
        }

    def to_text(self):
        p = self.params
        df = report_to_dataframe(self)
        lines = [
            f"Verification of (m, s) = ({p.m}, {p.s}), {p.case}: {'PASS' if self.passed else 'FAIL'}",
            df[["check", "status", "gating", "ledger"]].to_string(index=False),
        ]
        if len(self.failures) > 0:
            lines.append("Gating failures: " + ", ".join(record.name for record in self.failures))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"VerificationReport({self.params.case}, {len(self.records)} checks, passed={self.passed})"


def assemble_presentation(params):
    """The presentation of the case.

    Examples
    --------
    >>> pres = assemble_presentation(build_case(13, 4))
    >>> pres.exterior_generators
    ['t1', 't2', 'u1', 'u2', 'u3', 'v']
    """
    if not params.has_b0:
        raise ParameterError(f"(m, s) = ({params.m}, {params.s}) has no presentation: b0 is undefined.")
    return KRingPresentation(params, relations_for_case(params))


def tangent_class(params):
    """s(m - s - 1), the coefficient of [y] in c(T FV_{m,2s})."""
    return params.s * (params.m - params.s - 1)


def cross_check(params, deep=False):
    """Run every verification on one case.

    A partial case (no b0) runs the ring and restriction checks only and
    records the Koszul, relation, Groebner and table checks as skipped.

    Parameters
    ----------
    params : CaseParams
    deep : bool, default False
        also run the Clifford algebra checks and the Laurent recomputation of
        the restriction images; both are recorded as skipped otherwise

    Returns
    -------
    VerificationReport
        the solution table records are report-only here; the tables command
        gates on them
    """

    B = build_B(params)
    ledger = load_ledger()

    records = []
    if deep:
        records += verify_clifford(params.s, params.m)
        records += verify_laurent(params, B)
    else:
        records += [
            CheckRecord("clifford", "skip", "run with deep=True", gating=False),
            CheckRecord("laurent", "skip", "run with deep=True", gating=False),
        ]

    records += verify_repring(params, B)
    if not params.has_b0:
        reason = "b0 is undefined for m even with s = 2"
        records += [CheckRecord(name, "skip", reason, gating=False)
                    for name in ("koszul", "relations", "koszul.grobner", "tables")]
        return VerificationReport(params, records, ledger)

    kd = build_koszul(params, B)
    records += verify_koszul(params, kd)
    records += verify_relations(params, kd, ledger)
    records += verify_grobner(kd)
    records += verify_solution_tables(params, kd, ledger, gating=False)

    return VerificationReport(params, records, ledger)


def serialize(obj, format="json"):
    """Deterministic bytes for a KRingPresentation or a VerificationReport.

    json output uses sorted keys and a two space indent; text output renders
    relations with caret exponents.
    """

    try:
        assert format in FORMATS
    except AssertionError:
        raise RuntimeError(f"format must be one of {FORMATS}, not {format!r}.")

    if format == "json":
        text = json.dumps(obj.to_dict(), indent=2, sort_keys=True) + "\n"
    else:
        text = obj.to_text()
    return text.encode("utf-8")


def report_to_dataframe(report):
    """The records of a report as a pandas DataFrame with the case in front."""

    df = records_to_dataframe(report.records)
    df.insert(0, "s", report.params.s)
    df.insert(0, "m", report.params.m)

    return df


def valid_cases(m_max, s_max):
    """Supported (m, s) pairs with m <= m_max and s <= s_max.

    Returns
    -------
    (list of (int, int), int)
        the pairs in increasing (s, m) order and the number of rejected pairs
        the pairs include the partial cases, m even with s = 2
    """

    cases = []
    rejected = 0
    for s in range(1, s_max + 1):
        for m in range(1, m_max + 1):
            try:
                build_case(m, s, partial=True)
            except ParameterError:
                rejected += 1
                continue
            cases.append((m, s))
    return cases, rejected


def grid_summary(cases, deep=False):
    """Cross-check every case and count the statuses.

    Returns
    -------
    pandas DataFrame
        one row per case with columns m, s, case, alpha, u4, pass, fail,
        erratum, skip and passed
    """

    rows = []
    for m, s in cases:
        params = build_case(m, s, partial=True)
        report = cross_check(params, deep=deep)
        statuses = [record.status for record in report.records]
        rows.append({
            "m": m,
            "s": s,
            "case": params.case,
            "alpha": params.alpha,
            "u4": params.has_u4,
            "pass": statuses.count("pass"),
            "fail": statuses.count("fail"),
            "erratum": statuses.count("erratum"),
            "skip": statuses.count("skip"),
            "passed": report.passed,
        })

    return pd.DataFrame(rows, columns=["m", "s", "case", "alpha", "u4", "pass", "fail",
                                       "erratum", "skip", "passed"])
