"""Exact expansion coefficients of (1+1/x)**x about 1/(x+1).

The sequence is defined by

    (1 + 1/x)**x = e * (1 - sum_{n>=1} c_n / (x+1)**n),   x > 0,

equivalently by the recurrence

    c_1 = 1/2,
    c_n = (1/n) * (1/(n+1) - sum_{k=0}^{n-2} c_{n-k-1} / (k+2)),

and independently as the Taylor coefficients of 1 - exp(-sum_k t**k/(k(k+1)))
(substitute t = 1/(x+1) and expand (1 - 1/t)*log(1-t)).  Both routes are
implemented here in exact rational arithmetic and must agree bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .rational import Rational, is_reduced
from .report import Check, FAIL, PASS

RECURRENCE = "recurrence"
SERIES_ORACLE = "series-oracle"

CLAIM_RECURRENCE = "Eq. (1.1)"
CLAIM_ORACLE = "Eq. (3.5)"
CLAIM_BOUND = "Eq. (3.2)"
CLAIM_DECREASE = "Eq. (3.3)"
CLAIM_RATIO_LIMIT = "Eq. (3.4)"


def bound_at(n: int) -> "Rational":
    """Upper bound 1/(n(n+1)); attained only at n = 1."""
    return Rational(1, n * (n + 1))


@dataclass(frozen=True)
class CoefficientTable:
    """Immutable table of exact coefficients c_1 .. c_max_n.

    Entries are reduced rationals indexed from 1.  `source` records which
    construction produced the table; a finished table is safe to share
    across threads.
    """

    values: tuple
    source: str

    @property
    def max_n(self) -> int:
        return len(self.values)

    def value(self, n: int) -> "Rational":
        if not 1 <= n <= self.max_n:
            raise IndexError(f"n={n} outside table range 1..{self.max_n}")
        return self.values[n - 1]

    def __iter__(self) -> Iterator[tuple]:
        return ((n, v) for n, v in enumerate(self.values, start=1))

    def partial_sum(self, upto: int) -> "Rational":
        """Exact sum of the first `upto` coefficients."""
        if not 1 <= upto <= self.max_n:
            raise IndexError(f"N={upto} outside table range 1..{self.max_n}")
        return sum(self.values[:upto], Rational(0))

    def floats(self) -> list[float]:
        return [float(v) for v in self.values]

    @classmethod
    def from_recurrence(cls, max_n: int) -> "CoefficientTable":
        """Build c_1..c_max_n by the defining recurrence, exactly."""
        if max_n < 1:
            raise ValueError("max_n must be >= 1")
        values = [Rational(1, 2)]
        for n in range(2, max_n + 1):
            # sum_{k=0}^{n-2} c_{n-k-1}/(k+2) rewritten over j = n-k-1;
            # empty for n < 2.
            acc = sum(values[j - 1] / (n - j + 1) for j in range(1, n))
            values.append((Rational(1, n + 1) - acc) / n)
        return cls(values=tuple(values), source=RECURRENCE)

    @classmethod
    def from_series_oracle(cls, max_n: int) -> "CoefficientTable":
        """Build the same coefficients via the truncated-series exponential.

        With E(t) = exp(-sum_{k>=1} t**k/(k(k+1))) the coefficients are
        c_n = -[t**n] E(t).  E is computed by the standard convolution
        recurrence for exp of a series with zero constant term:
        n*E_n = sum_{k=1}^n (k*a_k)*E_{n-k}, here k*a_k = -1/(k+1).
        """
        if max_n < 1:
            raise ValueError("max_n must be >= 1")
        exp_coeffs = [Rational(1)] + [Rational(0)] * max_n
        for n in range(1, max_n + 1):
            acc = sum(exp_coeffs[n - k] / (k + 1) for k in range(1, n + 1))
            exp_coeffs[n] = -acc / n
        return cls(values=tuple(-c for c in exp_coeffs[1:]), source=SERIES_ORACLE)


def bound_check(table: CoefficientTable) -> Check:
    """Exact check of 0 < c_n <= 1/(n(n+1)) over the whole table.

    Reports every index where the bound is attained with equality (the
    expected answer is n = 1 only).
    """
    if table.max_n < 1:
        raise ValueError("table is empty")
    violations = []
    equalities = []
    for n, v in table:
        cap = bound_at(n)
        if not (0 < v <= cap):
            violations.append(n)
        elif v == cap:
            equalities.append(n)
    ok = not violations and equalities == [1]
    detail = (
        f"0 < c_n <= 1/(n(n+1)) for n <= {table.max_n}; equality at {equalities}"
        if ok
        else f"violations at n={violations}, equality at n={equalities}"
    )
    return Check(
        name="coefficient-bound",
        claim_ref=CLAIM_BOUND,
        status=PASS if ok else FAIL,
        detail=detail,
        values={"max_n": table.max_n, "equality_at": equalities, "violations": violations},
    )


def monotonicity_check(table: CoefficientTable) -> Check:
    """Exact strict-decrease check over all adjacent pairs."""
    if table.max_n < 2:
        raise ValueError("need at least two coefficients")
    bad = [n for n in range(1, table.max_n) if not table.value(n + 1) < table.value(n)]
    ok = not bad
    return Check(
        name="coefficient-decrease",
        claim_ref=CLAIM_DECREASE,
        status=PASS if ok else FAIL,
        detail=(
            f"c_{{n+1}} < c_n for all n < {table.max_n}"
            if ok
            else f"non-decreasing pairs start at n={bad[:10]}"
        ),
        values={"max_n": table.max_n, "failures": bad[:50]},
    )


def oracle_equivalence_check(table: CoefficientTable, oracle: CoefficientTable) -> Check:
    """Element-wise exact equality of the two construction routes."""
    upto = min(table.max_n, oracle.max_n)
    mismatches = [n for n in range(1, upto + 1) if table.value(n) != oracle.value(n)]
    ok = not mismatches
    return Check(
        name="oracle-equivalence",
        claim_ref=CLAIM_ORACLE,
        status=PASS if ok else FAIL,
        detail=(
            f"recurrence and series oracle identical for n <= {upto}"
            if ok
            else f"first mismatches at n={mismatches[:10]}"
        ),
        values={"compared_n": upto, "mismatches": mismatches[:50]},
    )


def adjacent_ratios(table: CoefficientTable, ns: Sequence[int]) -> list[float]:
    """Float ratios c_{n+1}/c_n for the requested indices.

    All ratios are below 1 (strict decrease) and the sequence climbs
    toward 1; each requested n needs n and n+1 in the table.
    """
    out = []
    for n in ns:
        if not 1 <= n < table.max_n:
            raise IndexError(f"ratio at n={n} needs entries n and n+1 in 1..{table.max_n}")
        out.append(float(table.value(n + 1) / table.value(n)))
    return out


def ratio_trend_check(table: CoefficientTable, start: int = 2) -> Check:
    """Exact check that ratios stay below 1 and increase from `start` on.

    Increase of c_{n+1}/c_n is tested as log-convexity,
    c_n * c_{n+2} > c_{n+1}**2, which avoids rational division.
    """
    if table.max_n < start + 2:
        raise ValueError("table too short for a ratio trend")
    below_one = all(table.value(n + 1) < table.value(n) for n in range(start, table.max_n))
    not_increasing = [
        n
        for n in range(start, table.max_n - 1)
        if not table.value(n) * table.value(n + 2) > table.value(n + 1) ** 2
    ]
    ok = below_one and not not_increasing
    last_ratio = float(table.value(table.max_n) / table.value(table.max_n - 1))
    return Check(
        name="ratio-trend",
        claim_ref=CLAIM_RATIO_LIMIT,
        status=PASS if ok else FAIL,
        detail=(
            f"ratios < 1 and strictly increasing for n in [{start}, {table.max_n - 1}]; "
            f"last ratio {last_ratio:.12f}"
            if ok
            else f"below_one={below_one}, non-increasing at n={not_increasing[:10]}"
        ),
        values={"start": start, "upto": table.max_n - 1, "last_ratio": last_ratio},
    )


def table_invariants_ok(table: CoefficientTable) -> bool:
    """Cheap structural sanity: reduced entries and the exact c_1 anchor."""
    return table.value(1) == Rational(1, 2) and all(is_reduced(v) for v in table.values)
