"""The a -> 1 limit of the lifting defect and its Alexander factorization.

Dividing the defect by (a - a^-1) and setting a = 1 produces an exact
Laurent polynomial in q that factors as [p]^2 times the degree-p scaled
Alexander polynomial times a framing correction.  The correction polynomial
comes from the hook-shaped colors of weight p and lives in Z[z^2] for prime
p.  Hook-colored invariants themselves collapse to scalings of the Alexander
polynomial in the same limit, which is checked here exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import HookShape, character_table, hook_shapes, partitions_of, z_mu
from .exactring import (
    LaurentQA,
    NonExactDivision,
    RingFraction,
    divide_out_abracket,
    qnum,
)
from .hecke import lifting_defect
from .torus import alexander, power_sum_invariant, unknot_schur_value
from .zbasis import CongruenceFragment, ZAPoly, congruence_verdict, divide_by_qnum_sq, to_z2


@dataclass(frozen=True)
class LimitValue:
    """The exact value of lim_{a -> 1} f / (a - a^-1), a Laurent polynomial in q."""

    value: LaurentQA


def limit_ratio(f: LaurentQA) -> LimitValue:
    """Divide by (a - a^-1) exactly, then set a = 1.

    Raises NotDivisible when f does not vanish at a = +-1, in which case the
    limit does not exist in the polynomial sense.
    """
    return LimitValue(divide_out_abracket(f).substitute_a(1))


def limit_ratio_via_derivative(f: LaurentQA) -> LimitValue:
    """The same limit computed as f'_a(1) / 2, an independent route."""
    return LimitValue(f.a_derivative_at_1() * Fraction(1, 2))


def _limit_fraction(rf: RingFraction) -> RingFraction:
    """limit_ratio applied to a fraction with a q-only denominator."""
    return RingFraction(limit_ratio(rf.num).value, rf.den)


def framing_correction(p: int, tau: int) -> ZAPoly:
    """The weight-p hook trace divided by [p]^2, as a polynomial in z^2.

    The trace is sum over hooks of weight p of q^(kappa * tau) minus
    p * (-1)^((p-1) tau); for prime p the quotient is integral, and
    framing_correction(p, 0) == 0.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    bracket: dict = {}
    for hook in hook_shapes(p):
        e = hook.kappa * tau
        bracket[(e, 0)] = bracket.get((e, 0), 0) + 1
    const = p if ((p - 1) * tau) % 2 == 0 else -p
    bracket[(0, 0)] = bracket.get((0, 0), 0) - const
    trace = LaurentQA(bracket)
    quotient, exact, remainder = divide_by_qnum_sq(to_z2(trace), p)
    if not exact:
        raise NonExactDivision(
            f"hook trace for p={p}, tau={tau} is not divisible by [p]^2",
            remainder=remainder.to_laurent(),
        )
    return quotient


def limit_identity_check(K, p: int) -> bool:
    """lim defect/(a - a^-1) == [p]^2 * A(K; q^p) * correction, exactly."""
    lhs = limit_ratio(lifting_defect(K, p)).value
    alex_p = alexander(K).to_laurent().adams(p)
    corr = framing_correction(p, K.framing).to_laurent()
    return lhs == qnum(p) * qnum(p) * alex_p * corr


@dataclass(frozen=True)
class LimitMembership:
    """Verdict for the limit lying in [p]^2 * Z[z^2]."""

    passed: bool
    value: LaurentQA
    fragment: CongruenceFragment


def limit_membership_verdict(K, p: int) -> LimitMembership:
    """Check the a -> 1 limit of the defect against [p]^2 Z[z^2] membership."""
    lim = limit_ratio(lifting_defect(K, p)).value
    frag = congruence_verdict(lim, p)
    return LimitMembership(
        passed=frag.z2_member and frag.p2_divisible, value=lim, fragment=frag
    )


@dataclass(frozen=True)
class HookAlexanderReport:
    """Outcome of one hook-colored Alexander comparison."""

    passed: bool
    hook: HookShape
    colored: LaurentQA | None
    expected: LaurentQA


def hook_alexander_check(K, hook: HookShape) -> HookAlexanderReport:
    """Hook-colored Alexander value equals the weight-scaled Alexander.

    Computes A_hook(K) = lim (framing-normalized hook invariant of K) over
    (the same for the unknot) and compares with A(K; q^weight) exactly.
    """
    w = hook.weight
    lam = hook.partition()
    tau = K.framing
    table = character_table(w).values
    colored_sum: RingFraction | None = None
    for mu in partitions_of(w):
        ch = table[(lam, mu)]
        if ch == 0:
            continue
        piece = power_sum_invariant(K, mu) * Fraction(ch, z_mu(mu))
        colored_sum = piece if colored_sum is None else colored_sum + piece
    assert colored_sum is not None
    normalized_num = colored_sum.num.shift(
        qexp=-hook.kappa * tau, aexp=-w * tau
    )
    lim_knot = RingFraction(limit_ratio(normalized_num).value, colored_sum.den)
    lim_unknot = _limit_fraction(unknot_schur_value(lam))
    ratio = RingFraction(
        lim_knot.num * lim_unknot.den, lim_knot.den * lim_unknot.num
    )
    expected = alexander(K).to_laurent().adams(w)
    passed = ratio == RingFraction.from_laurent(expected)
    try:
        colored = ratio.resolve()
    except NonExactDivision:
        colored = None
    return HookAlexanderReport(
        passed=passed, hook=hook, colored=colored, expected=expected
    )
