"""Shared helpers for every kflip subpackage.

Classes
-------
ParameterError
    raised for (m, s) pairs outside the supported parameter domain
CheckRecord
    one entry of a verification report

Functions
---------
exact_quotient(numerator, denominator, what="value")
    Divide integers, raising an error unless the division is exact.
format_terms(terms)
    Render (coefficient, monomial) pairs with caret exponents.
records_to_dataframe(records)
    Collect CheckRecords into a pandas DataFrame.
gating_failures(records)
    Return the gating records whose status is "fail".
"""

import pandas as pd


STATUSES = ("pass", "fail", "skip", "erratum")


class ParameterError(RuntimeError):
    """An (m, s) pair that the pipeline does not cover."""


class CheckRecord:
    """For use in every verify_* function and in cross_check."""

    def __init__(self, name, status, witness=None, gating=True, ledger_id=None):
        """
        Initialize a record of one verification check.

        name : str
            dotted check name, e.g. "koszul.complex"
        status : str
            one of "pass", "fail", "skip", "erratum"
        witness : str, int, list or dict, default None
            residual, counterexample or reason; must be JSON serializable
        gating : bool, default True
            whether a failure of this check fails the whole report
        ledger_id : str, default None
            erratum ledger entry that explains a failure
        """

        try:
            assert status in STATUSES
        except AssertionError:
            raise RuntimeError(f"Check status must be one of {STATUSES}, not {status!r}.")

        self.name = name
        self.status = status
        self.witness = witness
        self.gating = gating
        self.ledger_id = ledger_id

    @property
    def failed(self):
        return self.gating and self.status == "fail"

    def to_dict(self):
        return {
            "gating": self.gating,
            "ledger_id": self.ledger_id,
            "name": self.name,
            "status": self.status,
            "witness": self.witness,
        }

    def __repr__(self):
        return f"CheckRecord({self.name!r}, {self.status!r})"


def exact_quotient(numerator, denominator, what="value"):
    """Divide integers, raising an error unless the division is exact."""

    if denominator == 0 or numerator % denominator != 0:
        raise RuntimeError(f"{what} {numerator} is not divisible by {denominator}.")
    return numerator // denominator


def _format_monomial(monomial):
    factors = []
    for name, exponent in monomial:
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors)


def format_terms(terms):
    """Render (coefficient, monomial) pairs with caret exponents.

    Parameters
    ----------
    terms : list of (int, list of (str, int))
        coefficients with monomials given as (generator name, exponent) pairs,
        in display order

    Returns
    -------
    str, "0" for an empty list

    Examples
    --------
    >>> format_terms([(1, [("y", 2)]), (2, [("y", 1)])])
    'y^2 + 2y'
    """

    if len(terms) == 0:
        return "0"

    pieces = []
    for i, (coeff, monomial) in enumerate(terms):
        body = _format_monomial(monomial)
        magnitude = abs(coeff)
        if body == "":
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}{body}"

        if i == 0:
            pieces.append(text if coeff > 0 else f"-{text}")
        else:
            pieces.append(f" + {text}" if coeff > 0 else f" - {text}")

    return "".join(pieces)


def records_to_dataframe(records):
    """Collect CheckRecords into a pandas DataFrame.

    Columns are "check", "status", "gating", "ledger" and "witness"; witnesses
    are rendered with str() so the frame prints compactly.
    """

    df = pd.DataFrame(
        data={
            "check": [record.name for record in records],
            "status": [record.status for record in records],
            "gating": [record.gating for record in records],
            "ledger": [record.ledger_id or "" for record in records],
            "witness": ["" if record.witness is None else str(record.witness)
                        for record in records],
        }
    )

    return df


def gating_failures(records):
    """Return the gating records whose status is "fail"."""

    return [record for record in records if record.failed]
