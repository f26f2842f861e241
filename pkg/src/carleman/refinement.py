"""Inequality refinement weights and a finite-sequence demonstration.

Truncating the expansion

    (1 + 1/x)**x = e * (1 - sum_{k>=1} c_k / (x+1)**k)

after m terms gives the weight W_m(x) = 1 - sum_{k<=m} c_k/(x+1)**k.
Because every dropped term is positive, e*W_m(x) always overshoots
(1+1/x)**x, and replacing the bare constant e by e*W_m(n) strengthens the
classical bound on sums of running geometric means.  This module computes
the weights (exactly when x is rational), the overshoot and its tail
bound, and runs the strengthened comparison on finite sequences.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .coefficients import CoefficientTable
from .rational import Rational, as_rational, is_exact

E = math.e

#: Every demonstration report carries this caveat; both sums are cut at
#: the sequence length, so the run illustrates the inequality rather than
#: proving anything about infinite series.
DEMO_NOTE = "finite truncation of both sums; a demonstration, not a proof"


@dataclass(frozen=True)
class RefinementFactor:
    """The truncated weight W_m(x), with an exact view when x is rational.

    float_value always lies strictly between 0 and 1: the subtracted sum
    is positive and smaller than the full series, whose value at any
    x > 0 stays below 1.
    """

    x: object
    terms: int
    float_value: float
    exact_value: Optional[object] = None

    def __post_init__(self):
        if not 0.0 < self.float_value < 1.0:
            raise ValueError(f"weight {self.float_value!r} outside (0, 1)")


def refinement_factor(x, terms: int, table: CoefficientTable) -> RefinementFactor:
    """W_m(x) = 1 - sum_{k=1}^{terms} c_k/(x+1)**k.

    When x arrives as an int or exact rational the weight is computed in
    exact arithmetic and both views are filled; a float x gets only the
    float view (via a Horner pass over 1/(x+1)).
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    if terms > table.max_n:
        raise IndexError(f"terms={terms} exceeds table range 1..{table.max_n}")
    if not x > 0:
        raise ValueError("x must be positive")
    if is_exact(x):
        u = Rational(1) / (as_rational(x) + 1)
        acc = Rational(0)
        for k in range(terms, 0, -1):
            acc = (acc + table.value(k)) * u
        exact = 1 - acc
        return RefinementFactor(x=x, terms=terms, float_value=float(exact), exact_value=exact)
    u = 1.0 / (float(x) + 1.0)
    acc = 0.0
    for k in range(terms, 0, -1):
        acc = (acc + float(table.value(k))) * u
    return RefinementFactor(x=x, terms=terms, float_value=1.0 - acc, exact_value=None)


def truncation_gap(x, terms: int, table: CoefficientTable) -> float:
    """Overshoot e*W_m(x) - (1+1/x)**x; positive for every x > 0, m >= 1.

    The power is evaluated as exp(x*log1p(1/x)).  Near the gap's floor
    (large x and m together) the subtraction is at the mercy of double
    rounding, so callers should compare against tail_bound rather than
    expect sign resolution below ~1e-15.
    """
    factor = refinement_factor(x, terms, table)
    xf = float(x)
    return E * factor.float_value - math.exp(xf * math.log1p(1.0 / xf))


def tail_bound(x, terms: int) -> float:
    """Upper bound e * sum_{k>m} 1/(k(k+1)(x+1)**k) on the overshoot.

    Summed directly (the ratio 1/(x+1) is below 1); the loop stops once
    the analytic remainder u**k/k is negligible and that remainder is
    folded in, so the returned value never undershoots the true sum.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    if not x > 0:
        raise ValueError("x must be positive")
    u = 1.0 / (float(x) + 1.0)
    k = terms + 1
    power = u**k
    total = 0.0
    while k <= terms + 100000:
        total += power / (k * (k + 1))
        power *= u
        k += 1
        remainder = power / k
        if remainder <= 1e-18 * total or remainder < 1e-300:
            total += remainder
            break
    return E * total


@dataclass(frozen=True)
class DemoReport:
    """Outcome of one finite strengthened-inequality run."""

    length: int
    terms: int
    lhs: float
    rhs: float
    ratio: float
    holds: bool
    note: str = DEMO_NOTE

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "terms": self.terms,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ratio": self.ratio,
            "holds": self.holds,
            "note": self.note,
        }


def carleman_demo(seq: Sequence[float], terms: int, table: CoefficientTable) -> DemoReport:
    """Compare sum of geometric means against the weighted right side.

    LHS is sum_{n<=N} (a_1...a_n)**(1/n), computed in log space; once a
    zero entry appears every later geometric mean contains that factor
    and is zero outright, so the log path is skipped from there on.  RHS
    is e * sum_{n<=N} W_m(n)*a_n.  Both sums stop at N = len(seq).
    """
    if not seq:
        raise ValueError("sequence is empty")
    values = [float(a) for a in seq]
    if any(a < 0 for a in values):
        raise ValueError("sequence entries must be nonnegative")
    if all(a == 0 for a in values):
        raise ValueError("sequence must not be all zero")
    lhs = 0.0
    log_sum = 0.0
    zero_seen = False
    for n, a in enumerate(values, start=1):
        if a == 0.0:
            zero_seen = True
        if not zero_seen:
            log_sum += math.log(a)
            lhs += math.exp(log_sum / n)
    rhs = E * sum(
        refinement_factor(n, terms, table).float_value * a
        for n, a in enumerate(values, start=1)
    )
    return DemoReport(
        length=len(values),
        terms=terms,
        lhs=lhs,
        rhs=rhs,
        ratio=lhs / rhs,
        holds=lhs < rhs,
    )


def load_sequence_csv(path) -> list[float]:
    """Read a demo sequence: one nonnegative decimal per line, no header.

    Blank lines are skipped.  Extra columns, unparsable numbers, negative
    or non-finite entries, and files with no data at all are rejected
    with the offending line number in the message.
    """
    values = []
    with open(path, newline="") as handle:
        for lineno, row in enumerate(csv.reader(handle), start=1):
            if not row:
                continue
            if len(row) != 1:
                raise ValueError(f"line {lineno}: expected a single column, got {len(row)}")
            text = row[0].strip()
            if not text:
                continue
            try:
                value = float(text)
            except ValueError:
                raise ValueError(f"line {lineno}: not a number: {text!r}") from None
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"line {lineno}: entries must be finite and nonnegative")
            values.append(value)
    if not values:
        raise ValueError(f"no data in {path}")
    return values
