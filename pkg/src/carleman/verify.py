"""One-shot verification sweep over all the quantitative claims.

The sweep runs every check the package knows how to perform: exact table
properties (two independent constructions agree; positivity and the
1/(n(n+1)) cap; strict decrease; the climbing-ratio trend), quadrature
recovery of the coefficients from their integral representations, the
closed-form density integrals, agreement of the two faces of the scaled
defect function, the partial-sum sandwich under 1 - 1/e, and the reported
endpoint-moment limit.

Check names and the `claim_ref` anchor strings (e.g. "Eq. (3.2)") are
frozen wire format; downstream consumers key on them.  The sweep never
stops early: a full report with a failure inside is more useful than a
fast exception.
"""

from __future__ import annotations

import math

from .coefficients import (
    CoefficientTable,
    bound_check,
    monotonicity_check,
    oracle_equivalence_check,
    ratio_trend_check,
)
from .integrands import scaled_defect, scaled_defect_by_quadrature
from .moments import (
    CLAIM_ENDPOINT_LIMIT,
    CLAIM_MOMENT_REP,
    CLAIM_MOMENT_REP_SHIFTED,
    CLAIM_PARTS_REP,
    coefficient_by_moment,
    coefficient_by_parts,
    density_identity_checks,
    scaled_derivative_moment,
)
from .quadrature import QuadratureConfig
from .report import Check, FAIL, PASS, REPORTED, VerificationReport

CLAIM_GAP_FUNCTION = "Eq. (2.2)"
CLAIM_PARTIAL_SUM = "Remark"

#: Sample points for the closed-form vs. integral-form defect comparison.
GAP_SAMPLE_XS = (0.1, 0.5, 1.0, 2.0, 10.0, 100.0)

#: Partial-sum lengths for the sandwich under 1 - 1/e.
PARTIAL_SUM_NS = (10, 50, 200)

#: Orders at which the endpoint-moment limit diagnostic is evaluated.
LIMIT_NS = (10, 50, 200)

#: Floor below which strict float inequalities are not trusted.
FLOAT_GUARD = 1e-12


def engine_config(tol: float) -> QuadratureConfig:
    """Engine tolerance two decades below the check tolerance.

    Clamped at 1e-15, about the best level-difference the engine can
    reach in double precision on these integrands.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    return QuadratureConfig(target_abs_tol=max(tol / 100.0, 1e-15))


def corrupted_table(table: CoefficientTable, n: int) -> CoefficientTable:
    """Copy of the table with entry n overwritten by entry n-1.

    The duplicate breaks the strict-decrease claim, so a sweep over the
    result must fail; this is the fault-injection hook for exercising
    the failure paths end to end.
    """
    if not 2 <= n <= table.max_n:
        raise ValueError(f"n must lie in 2..{table.max_n}")
    values = list(table.values)
    values[n - 1] = values[n - 2]
    return CoefficientTable(values=tuple(values), source=table.source)


def _worst_diff(pairs):
    worst = -1.0
    worst_n = None
    for n, diff in pairs:
        if diff > worst:
            worst, worst_n = diff, n
    return worst, worst_n


def moment_sweep_check(
    table: CoefficientTable, quad_max: int, tol: float, config: QuadratureConfig
) -> Check:
    """Quadrature recovery c_n = (1/e) int density * s**(n-2) vs. exact."""
    diffs = []
    all_converged = True
    for n in range(2, quad_max + 1):
        result = coefficient_by_moment(n, config)
        all_converged = all_converged and result.converged
        diffs.append((n, abs(result.value - float(table.value(n)))))
    worst, worst_n = _worst_diff(diffs)
    ok = all_converged and worst <= tol
    return Check(
        name="moment-representation",
        claim_ref=CLAIM_MOMENT_REP,
        status=PASS if ok else FAIL,
        detail=(
            f"max |quadrature - exact| = {worst:.3e} at n={worst_n} "
            f"over n in [2, {quad_max}], tolerance {tol:.1e}"
        ),
        values={
            "quad_max": quad_max,
            "max_abs_diff": worst,
            "worst_n": worst_n,
            "tolerance": tol,
            "all_converged": all_converged,
        },
    )


def mirror_sweep_check(quad_max: int, tol: float, config: QuadratureConfig) -> Check:
    """Agreement of the s**(n-2) and (1-s)**(n-2) moment integrals."""
    diffs = []
    all_converged = True
    for n in range(2, quad_max + 1):
        plain = coefficient_by_moment(n, config)
        mirrored = coefficient_by_moment(n, config, mirror=True)
        all_converged = all_converged and plain.converged and mirrored.converged
        diffs.append((n, abs(plain.value - mirrored.value)))
    worst, worst_n = _worst_diff(diffs)
    ok = all_converged and worst <= tol
    return Check(
        name="moment-mirror-agreement",
        claim_ref=CLAIM_MOMENT_REP_SHIFTED,
        status=PASS if ok else FAIL,
        detail=(
            f"max |plain - mirrored| = {worst:.3e} at n={worst_n} "
            f"over n in [2, {quad_max}], tolerance {tol:.1e}"
        ),
        values={
            "quad_max": quad_max,
            "max_abs_diff": worst,
            "worst_n": worst_n,
            "tolerance": tol,
            "all_converged": all_converged,
        },
    )


def parts_sweep_check(
    table: CoefficientTable, quad_max: int, tol: float, config: QuadratureConfig
) -> Check:
    """Quadrature recovery through the integrated-by-parts form."""
    diffs = []
    all_converged = True
    for n in range(2, quad_max + 1):
        result = coefficient_by_parts(n, config)
        all_converged = all_converged and result.converged
        diffs.append((n, abs(result.value - float(table.value(n)))))
    worst, worst_n = _worst_diff(diffs)
    ok = all_converged and worst <= tol
    return Check(
        name="parts-representation",
        claim_ref=CLAIM_PARTS_REP,
        status=PASS if ok else FAIL,
        detail=(
            f"max |quadrature - exact| = {worst:.3e} at n={worst_n} "
            f"over n in [2, {quad_max}], tolerance {tol:.1e}"
        ),
        values={
            "quad_max": quad_max,
            "max_abs_diff": worst,
            "worst_n": worst_n,
            "tolerance": tol,
            "all_converged": all_converged,
        },
    )


def gap_function_check(tol: float, config: QuadratureConfig) -> Check:
    """Closed form vs. integral form of (x+1)(e - (1+1/x)**x)."""
    diffs = []
    all_converged = True
    for x in GAP_SAMPLE_XS:
        by_quad = scaled_defect_by_quadrature(x, config)
        all_converged = all_converged and by_quad.converged
        diffs.append((x, abs(scaled_defect(x) - by_quad.value)))
    worst, worst_x = _worst_diff(diffs)
    ok = all_converged and worst <= tol
    return Check(
        name="gap-function-agreement",
        claim_ref=CLAIM_GAP_FUNCTION,
        status=PASS if ok else FAIL,
        detail=(
            f"max |closed - integral| = {worst:.3e} at x={worst_x} "
            f"over x in {list(GAP_SAMPLE_XS)}, tolerance {tol:.1e}"
        ),
        values={
            "sample_xs": list(GAP_SAMPLE_XS),
            "max_abs_diff": worst,
            "worst_x": worst_x,
            "tolerance": tol,
            "all_converged": all_converged,
        },
    )


def partial_sum_check(table: CoefficientTable, ns=PARTIAL_SUM_NS) -> Check:
    """Sandwich 0 < (1 - 1/e) - sum_{n<=N} c_n < 1/(N+1) at each N.

    Partial sums are exact; the comparison is float with a 1e-12 guard
    on the lower side.
    """
    target = 1.0 - 1.0 / math.e
    usable = [n for n in ns if n <= table.max_n] or [table.max_n]
    gaps = {}
    ok = True
    for n in usable:
        gap = target - float(table.partial_sum(n))
        gaps[n] = gap
        ok = ok and FLOAT_GUARD < gap < 1.0 / (n + 1)
    return Check(
        name="partial-sum-sandwich",
        claim_ref=CLAIM_PARTIAL_SUM,
        status=PASS if ok else FAIL,
        detail=(
            "gap to 1 - 1/e at N in "
            + str(usable)
            + ": "
            + ", ".join(f"{gaps[n]:.6e} (cap {1.0 / (n + 1):.3e})" for n in usable)
        ),
        values={"ns": usable, "gaps": [gaps[n] for n in usable]},
    )


def endpoint_limit_check(config: QuadratureConfig, ns=LIMIT_NS) -> Check:
    """Reported drift of L(n) = n * int s**n * density'(s) ds toward -1.

    No convergence rate is claimed anywhere, so this check never fails;
    it records the sampled values and whether |L(n) + 1| shrank across
    the sample.
    """
    values = [scaled_derivative_moment(n, config).value for n in ns]
    distances = [abs(v + 1.0) for v in values]
    shrinking = all(b < a for a, b in zip(distances, distances[1:]))
    return Check(
        name="endpoint-moment-limit",
        claim_ref=CLAIM_ENDPOINT_LIMIT,
        status=REPORTED,
        detail=(
            "L(n) at n in "
            + str(list(ns))
            + ": "
            + ", ".join(f"{v:.9f}" for v in values)
            + f"; |L+1| strictly shrinking: {shrinking}"
        ),
        values={"ns": list(ns), "L": values, "distance_to_limit": distances},
    )


def run_verification(
    max_n: int = 200,
    quad_max: int = 20,
    tol: float = 1e-10,
    table: CoefficientTable = None,
) -> VerificationReport:
    """Run the whole sweep and assemble the report.

    A prebuilt (possibly deliberately corrupted) table may be passed in;
    its length then overrides max_n.  The independent series-oracle table
    is always built fresh.
    """
    if table is not None:
        max_n = table.max_n
    if max_n < 4:
        raise ValueError("max_n must be >= 4")
    if not 2 <= quad_max <= max_n:
        raise ValueError("need 2 <= quad_max <= max_n")
    if tol <= 0:
        raise ValueError("tol must be positive")
    config = engine_config(tol)
    if table is None:
        table = CoefficientTable.from_recurrence(max_n)
    oracle = CoefficientTable.from_series_oracle(max_n)
    checks = (
        oracle_equivalence_check(table, oracle),
        bound_check(table),
        monotonicity_check(table),
        ratio_trend_check(table),
        moment_sweep_check(table, quad_max, tol, config),
        mirror_sweep_check(quad_max, tol / 10.0, config),
        parts_sweep_check(table, quad_max, 10.0 * tol, config),
        *density_identity_checks(config, tol, 10.0 * tol),
        gap_function_check(10.0 * tol, config),
        partial_sum_check(table),
        endpoint_limit_check(config),
    )
    return VerificationReport(checks=checks)
