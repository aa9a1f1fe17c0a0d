import random
from fractions import Fraction

import pytest

from conftest import random_laurent
from heckelift.alexlimit import (
    framing_correction,
    hook_alexander_check,
    limit_identity_check,
    limit_membership_verdict,
    limit_ratio,
    limit_ratio_via_derivative,
)
from heckelift.combinatorics import HookShape, hook_shapes
from heckelift.exactring import LaurentQA, NotDivisible, abracket, qnum
from heckelift.hecke import lifting_defect
from heckelift.torus import FramedUnknot, TorusKnot, alexander


def test_framing_correction_pinned_values():
    assert framing_correction(2, 1).to_json_dict() == {"0": ["1"]}
    assert framing_correction(2, -1).to_json_dict() == {"0": ["1"]}
    assert framing_correction(3, 1).to_json_dict() == {"0": ["0", "1"]}
    assert framing_correction(2, 6).to_json_dict() == {
        "0": ["0", "9", "24", "22", "8", "1"]
    }
    for p in (2, 3, 5, 7):
        assert framing_correction(p, 0).is_zero()


def test_framing_correction_integrality():
    for p in (2, 3, 5, 7):
        for tau in range(-3, 4):
            poly = framing_correction(p, tau)
            assert poly.is_integral, (p, tau)


def test_framing_correction_trace_identity():
    """[p]^2 alpha recovers the hook trace minus its constant term."""
    for p in (2, 3, 5):
        for tau in (-2, 1, 3):
            trace = LaurentQA.zero()
            for hook in hook_shapes(p):
                trace = trace + LaurentQA.monomial(1, qexp=hook.kappa * tau)
            trace = trace - LaurentQA.monomial(p * (-1) ** ((p - 1) * tau))
            assert qnum(p) * qnum(p) * framing_correction(p, tau).to_laurent() == trace


def test_limit_ratio_two_routes_agree():
    rng = random.Random(77)
    for _ in range(20):
        f = random_laurent(rng)
        h = abracket(1) * f
        left = limit_ratio(h).value
        right = limit_ratio_via_derivative(h).value
        assert left == right
        assert left == f.substitute_a(1)
    with pytest.raises(NotDivisible):
        limit_ratio(LaurentQA.one())


def test_limit_ratio_on_defect():
    g = lifting_defect(TorusKnot(2, 3), 2)
    assert limit_ratio(g).value == limit_ratio_via_derivative(g).value


def test_limit_identity_small_grid():
    for knot in (TorusKnot(2, 3), TorusKnot(1, 2), TorusKnot(3, 2), FramedUnknot(1)):
        for p in (2, 3):
            assert limit_identity_check(knot, p), (knot, p)


def test_limit_membership():
    verdict = limit_membership_verdict(TorusKnot(2, 3), 2)
    assert verdict.passed
    assert verdict.fragment.z2_member and verdict.fragment.p2_divisible
    assert verdict.value == limit_ratio(lifting_defect(TorusKnot(2, 3), 2)).value
    assert limit_membership_verdict(FramedUnknot(-1), 3).passed


def test_hook_alexander_trefoil():
    report = hook_alexander_check(TorusKnot(2, 3), HookShape(1, 1))
    assert report.passed
    expected = LaurentQA({(6, 0): 1, (0, 0): -1, (-6, 0): 1})
    assert report.colored == expected
    assert report.expected == expected
    assert report.hook == HookShape(1, 1)


def test_hook_alexander_weight_one_is_plain_alexander():
    for knot in (TorusKnot(2, 3), TorusKnot(3, 2), FramedUnknot(2)):
        report = hook_alexander_check(knot, HookShape(0, 0))
        assert report.passed
        assert report.colored == alexander(knot).to_laurent()


def test_hook_alexander_matches_adams_of_alexander():
    for knot in (TorusKnot(2, 3), TorusKnot(1, 3)):
        for hook in hook_shapes(2) + hook_shapes(3):
            report = hook_alexander_check(knot, hook)
            assert report.passed, (knot, hook)
            assert report.expected == alexander(knot).to_laurent().adams(hook.weight)
