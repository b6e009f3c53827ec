"""Realization checks: admissible cycle templates, acceptance verdicts, witnesses."""

import math
import random

import pytest

from spliceops.errors import StructuralError
from spliceops.perm import SignedCycleType
from spliceops.realize import (
    ActionParams,
    RULE_TEXT,
    admissible_cycles,
    build_witness,
    check_representation,
    enumerate_admissible,
    feasible_k,
)


class TestParams:
    def test_validation(self):
        with pytest.raises(StructuralError):
            ActionParams(0, 2, 5)
        with pytest.raises(StructuralError):
            ActionParams(10, 2, 4)

    def test_role_swap(self):
        a = ActionParams(10, 5, 2, swap_roles=True)
        assert a.role_p == 2 and a.role_q == 5


class TestAdmissible:
    def test_trivial_group(self):
        assert admissible_cycles(ActionParams(1, 2, 5)) == frozenset({(1, 1, 1)})

    def test_cyclic_order_ten(self):
        got = admissible_cycles(ActionParams(10, 2, 5))
        assert (5, -1, 4) in got  # gcd(p, n) = 2
        assert got == {(10, 1, 1), (2, 1, 2), (1, 1, 5), (5, 1, 3), (5, -1, 4)}

    def test_cyclic_order_six(self):
        for a in (ActionParams(6, 3, 2), ActionParams(6, 3, 2, swap_roles=True)):
            got = admissible_cycles(a)
            assert (6, 1, 1) in got
            assert (1, 1, 5) in got

    def test_at_most_five(self):
        rnd = random.Random(0)
        for _ in range(300):
            n = rnd.randint(1, 24)
            while True:
                p, q = rnd.randint(-8, 8), rnd.randint(-8, 8)
                if math.gcd(p, q) == 1:
                    break
            got = admissible_cycles(ActionParams(n, p, q))
            assert len(got) <= 5
            for length, sign, rule in got:
                assert rule in RULE_TEXT
                assert length >= 1 and n % length == 0


class TestFeasibleK:
    def test_zero(self):
        assert feasible_k(ActionParams(10, 2, 5), 0, fixed_component=False)

    def test_sakuma_count(self):
        assert feasible_k(ActionParams(10, 2, 5), 5, fixed_component=False)

    def test_fixed_component_count(self):
        assert feasible_k(ActionParams(6, 3, 2), 7, fixed_component=True)

    def test_infeasible(self):
        a = ActionParams(10, 3, 7)  # both gcds trivial: only multiples of 10
        assert not feasible_k(a, 5, fixed_component=False)
        assert feasible_k(a, 20, fixed_component=False)


class TestCheckRepresentation:
    def test_sakuma_accepted(self):
        a = ActionParams(10, 2, 5)
        v = check_representation(a, SignedCycleType.parse("(5)-"))
        assert v.accepted
        assert v.assignment == ((5, -1, 4),)

    def test_sakuma_display_order_with_swap(self):
        a = ActionParams(10, 5, 2, swap_roles=True)
        assert check_representation(a, SignedCycleType.parse("(5)-")).accepted

    def test_sakuma_rejected_without_swap(self):
        a = ActionParams(10, 5, 2)
        assert not check_representation(a, SignedCycleType.parse("(5)-")).accepted

    def test_order_six_fixed_component(self):
        for a in (ActionParams(6, 3, 2), ActionParams(6, 3, 2, swap_roles=True)):
            v = check_representation(a, SignedCycleType.parse("(6)+ (1)+"), require_fixed=True)
            assert v.accepted
            assert (1, 1, 5) in v.assignment

    def test_exclusivity_rejection(self):
        a = ActionParams(10, 2, 5)
        t = SignedCycleType.of([(2, 1)] * 5 + [(1, 1)])
        v = check_representation(a, t)
        assert not v.accepted
        assert any("exclusive" in r for r in v.reasons)

    def test_unmatched_cycle_rejected(self):
        a = ActionParams(10, 2, 5)
        v = check_representation(a, SignedCycleType.of([(3, 1)]))
        assert not v.accepted
        assert "matches no admissible type" in v.reasons[0]

    def test_rule5_at_most_once(self):
        a = ActionParams(6, 3, 2)
        t = SignedCycleType.of([(1, 1), (1, 1), (6, 1)])
        assert not check_representation(a, t, require_fixed=True).accepted

    def test_accepted_implies_feasible(self):
        rnd = random.Random(1)
        for _ in range(300):
            n = rnd.randint(1, 12)
            while True:
                p, q = rnd.randint(-6, 6), rnd.randint(-6, 6)
                if math.gcd(p, q) == 1:
                    break
            a = ActionParams(n, p, q)
            templates = sorted(admissible_cycles(a))
            cycles = [rnd.choice(templates)[:2] for _ in range(rnd.randint(1, 4))]
            t = SignedCycleType.of(cycles)
            v = check_representation(a, t)
            if v.accepted:
                used5 = any(rule == 5 for _, _, rule in v.assignment)
                assert feasible_k(a, t.total, fixed_component=used5)


class TestWitness:
    def test_witness_matches_type(self):
        t = SignedCycleType.parse("(5)- (2)+ (1)+")
        w = build_witness(t)
        assert w.signed_cycle_type() == t

    def test_exhaustive_up_to_twelve(self):
        params = [(2, 5), (3, 2), (5, 2), (3, 4), (1, 0)]
        for n in range(1, 13):
            for p, q in params:
                if math.gcd(p, q) != 1:
                    continue
                a = ActionParams(n, p, q)
                for fixed in (False, True):
                    for t in enumerate_admissible(a, k=min(n + 1, 8), require_fixed=fixed):
                        w = build_witness(t)
                        assert w.signed_cycle_type() == t
                        assert n % w.order() == 0  # order divides the group order

    def test_enumeration_accepts_its_own_output(self):
        a = ActionParams(10, 2, 5)
        out = enumerate_admissible(a, 5)
        assert SignedCycleType.parse("(5)-") in out
        for t in out:
            assert check_representation(a, t).accepted
