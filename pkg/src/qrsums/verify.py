"""Range verification: every identity, both exact routes, one report.

For each prime p = 3 (mod 4) in range the full exact invariant suite runs
(residue statistics, the six T routes, C, both class number routes, the
interval and parity laws, the strict bounds).  With floats enabled the
defining trigonometric expressions are re-evaluated in double precision
for primes up to a cap, including the vanishing checks at p = 1 (mod 4)
and the exponential sums for small p.

Independently of the range, the three published-form discrepancies are
re-derived at p = 7 and p = 11 and the corrected forms confirmed; the
p = 7 (mod 8) branch misprint can only show itself at p = 7 of the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

from . import analytic
from .arith import OddPrime, primes_in_range
from .classnum import h_from_forms, h_from_residues
from .residues import residue_profile
from .sums import ERRATA, sum_record, t_exact, t_from_m

ERRATA_PRIMES = (7, 11)

# exponential sums are O(p^2) per prime; cap them independently of float_cap
GAUSS_CAP = 500


class Failure(NamedTuple):
    p: int
    check: str
    expected: Any
    actual: Any


@dataclass(frozen=True)
class ErratumConfirmation:
    identity: str
    prime: int
    published_value: int
    corrected_value: int
    exact_value: int
    discrepant: bool


@dataclass
class VerifyReport:
    range: tuple[int, int]
    primes_checked: int
    checks_run: int
    failures: list[Failure]
    errata_confirmations: list[ErratumConfirmation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class _Recorder:
    def __init__(self) -> None:
        self.checks = 0
        self.failures: list[Failure] = []

    def expect(self, p: int, check: str, expected: Any, actual: Any) -> None:
        self.checks += 1
        if expected != actual:
            self.failures.append(Failure(p, check, expected, actual))

    def expect_true(self, p: int, check: str, ok: bool, detail: Any = "") -> None:
        self.checks += 1
        if not ok:
            self.failures.append(Failure(p, check, "holds", detail or "violated"))


def _check_exact(p: OddPrime, rec: _Recorder) -> None:
    pv = p.value
    prof = residue_profile(p)
    sums = sum_record(p, prof)
    t = sums.t_value
    c = sums.c_value
    half = (pv - 1) // 2

    # table and count sanity
    rec.expect(pv, "residue_count", half, prof.q_o + prof.q_e)
    rec.expect_true(pv, "residue_count_odd", (prof.q_o + prof.q_e) % 2 == 1)
    table = prof.qr_table
    rec.expect(pv, "table_count", half, sum(table))
    rec.expect_true(
        pv,
        "table_negation",
        not any(table[k] and table[pv - k] for k in range(1, half + 1)),
    )

    # parity gap and its sign law
    gap = prof.q_o - prof.q_e
    rec.expect_true(pv, "gap_odd", gap % 2 == 1, gap)
    rec.expect_true(
        pv, "gap_sign", (gap > 0) == (p.class_mod8 == 3), (gap, p.class_mod8)
    )
    if p.class_mod8 == 3 and pv > 3:
        rec.expect(pv, "gap_divisible_3", 0, gap % 3)

    # signed sums
    rec.expect_true(pv, "half_sum_positive", prof.half_sum > 0, prof.half_sum)
    rec.expect_true(pv, "m_negative", prof.m_sum < 0, prof.m_sum)
    rec.expect(pv, "a_vs_half_sum", -prof.chi(2) * prof.half_sum, prof.a_sum)

    # interval law: one side vanishes, the other is positive
    if p.class_mod8 == 3:
        rec.expect(pv, "interval_low_zero", 0, prof.s_low)
        rec.expect_true(pv, "interval_high_positive", prof.s_high > 0, prof.s_high)
    else:
        rec.expect(pv, "interval_high_zero", 0, prof.s_high)
        rec.expect_true(pv, "interval_low_positive", prof.s_low > 0, prof.s_low)

    # even residue counts: closed forms and the split
    rec.expect(
        pv, "even_split", prof.q_e, prof.even_below_half + prof.even_above_half
    )
    if p.class_mod8 == 3:
        rec.expect(pv, "even_below_closed_form", (pv - 3) // 8, prof.even_below_half)
    else:
        rec.expect(pv, "even_above_closed_form", (pv + 1) // 8, prof.even_above_half)

    # the even/odd numerator identity over [1, (p-1)/2]
    chi2 = prof.chi(2)
    odd_part = 2 * sum(table[1 : half + 1 : 2]) - (half + 1) // 2
    even_part = 2 * sum(table[2 : half + 1 : 2]) - half // 2
    rec.expect(
        pv,
        "numerator_identity",
        (1 + chi2) * odd_part,
        (1 - chi2) * even_part,
    )

    # six routes to T
    rec.expect(pv, "t_route_alternating_full", t, sums.t_expr[0])
    rec.expect(pv, "t_route_alternating_half", t, sums.t_expr[1])
    rec.expect(pv, "t_route_odd_index", t, sums.t_expr[2])
    rec.expect(pv, "t_route_half_sum", t, sums.t_expr[3])
    rec.expect(pv, "t_route_interval", t, sums.t_expr[4])
    rec.expect(pv, "t_route_weighted", t, t_from_m(p, prof))

    # T shape: odd multiple of p, exactly one factor of p, sign by class
    rec.expect(pv, "t_multiple_of_p", 0, t % pv)
    rec.expect_true(pv, "t_quotient_odd", (t // pv) % 2 != 0, t)
    rec.expect_true(pv, "t_quotient_coprime_p", (t // pv) % pv != 0, t)
    rec.expect_true(pv, "t_sign", (t > 0) == (p.class_mod8 == 3), t)

    # C shape and the class number chain
    rec.expect_true(pv, "c_positive_odd", c > 0 and c % 2 == 1, c)
    if pv > 3:
        rec.expect(pv, "c_multiple_of_p", 0, c % pv)
        rec.expect_true(pv, "c_single_factor_p", (c // pv) % pv != 0, c)
    hf = h_from_forms(p)
    hr = h_from_residues(p, prof)
    rec.expect(pv, "h_routes_agree", hf, hr)
    rec.expect_true(pv, "h_positive_odd", hf > 0 and hf % 2 == 1, hf)
    # the discriminant -3 field has six units, so the p=3 relation carries 3
    rec.expect(pv, "c_vs_h", pv * hf, c * (3 if pv == 3 else 1))
    t_from_h = -pv * hf if p.class_mod8 == 7 else 3 * pv * hf
    if pv == 3:
        t_from_h //= 3
    rec.expect(pv, "t_vs_h", t_from_h, t)

    # strict bounds
    hb = analytic.bound_harmonic(p, prof)
    rec.expect_true(pv, hb.name, hb.passed, (hb.reference, hb.computed))
    pvb = analytic.bound_pv(p, prof)
    rec.expect_true(pv, pvb.name, pvb.passed, (pvb.reference, pvb.computed))


def _float_detail(r: analytic.FloatCheckResult) -> tuple:
    return (r.computed, r.reference, r.residual, r.tolerance)


def _check_float_class3(p: OddPrime, rec: _Recorder) -> None:
    prof = residue_profile(p)
    tf = analytic.t_float(p, prof)
    rec.expect_true(p.value, tf.name, tf.passed, _float_detail(tf))
    gap = prof.q_o - prof.q_e
    rec.expect(p.value, "tangent_sum_rounds", gap, round(tf.computed / p.value))
    leb = analytic.lebesgue_float(p, prof)
    for r in (
        analytic.c_float(p, prof),
        analytic.whiteman_sum(p, prof),
        leb,
        analytic.berndt_m_float(p, prof),
    ):
        rec.expect_true(p.value, r.name, r.passed, _float_detail(r))
    rec.expect(p.value, "lebesgue_rounds_to_h", h_from_forms(p), round(leb.computed))
    if p.value <= GAUSS_CAP:
        for g in analytic.gauss_sum_checks(p):
            rec.expect_true(p.value, g.name, g.passed, _float_detail(g))


def _check_float_class1(p: OddPrime, rec: _Recorder) -> None:
    for r in (analytic.t_float(p), analytic.c_float(p)):
        rec.expect_true(p.value, "vanishing_" + r.name, r.passed, _float_detail(r))


def confirm_errata(rec: _Recorder | None = None) -> list[ErratumConfirmation]:
    """Re-derive the published-form discrepancies at p = 7 and p = 11.

    The corrected form must equal t_exact everywhere; the published form
    must differ exactly where the misprinted branch applies.
    """
    out = []
    for e in ERRATA:
        for pv in ERRATA_PRIMES:
            p = OddPrime(pv)
            published = e.published(p)
            corrected = e.corrected(p)
            exact = t_exact(p)
            conf = ErratumConfirmation(
                identity=e.identity,
                prime=pv,
                published_value=published,
                corrected_value=corrected,
                exact_value=exact,
                discrepant=published != exact,
            )
            if rec is not None:
                rec.expect(pv, f"errata_corrected[{e.identity}]", exact, corrected)
                rec.expect(
                    pv,
                    f"errata_published[{e.identity}]",
                    e.applies(p),
                    conf.discrepant,
                )
            out.append(conf)
    return out


def run_verify(
    lo: int, hi: int, with_float: bool = False, float_cap: int = 10_000
) -> VerifyReport:
    rec = _Recorder()
    primes3 = primes_in_range(max(lo, 3), hi, mod4=3)
    for p in primes3:
        _check_exact(p, rec)
        if with_float and p.value <= float_cap:
            _check_float_class3(p, rec)
    if with_float and min(hi, float_cap) >= lo:
        for p in primes_in_range(max(lo, 3), min(hi, float_cap), mod4=1):
            _check_float_class1(p, rec)
    errata = confirm_errata(rec)
    return VerifyReport(
        range=(lo, hi),
        primes_checked=len(primes3),
        checks_run=rec.checks,
        failures=rec.failures,
        errata_confirmations=errata,
    )
