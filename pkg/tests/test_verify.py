import random

import pytest

from conftest import L, scalar
from rosenlin.constructors import (RecurrenceBasis, build_block_kronecker_rev, build_comrade_rev, build_frobenius,
                                   build_frobenius_rev)
from rosenlin.exactalg import UniPoly
from rosenlin.families import (GENERATORS, corrupt_state, corrupt_target, gen_cork_degenerate, gen_frobenius,
                               scale_transfer)
from rosenlin.verify import (FAMILIES, reversed_partition, run_family_suite, trial_seed, verify_linearization,
                             verify_strong_direct, verify_strong_local)

P_SQ = scalar(UniPoly((-1, 0, 1)))


def test_frobenius_linearization_report():
    rep = verify_linearization(build_frobenius(P_SQ), P_SQ)
    assert rep.passed
    assert set(rep.checks) >= {"state_unimodular", "transfer_matches", "witnesses_exact", "smith_padding"}


def test_wrong_target_detected():
    rep = verify_linearization(build_frobenius(P_SQ), scalar(UniPoly((1, 0, 1))))
    assert not rep.passed and "transfer_matches" in rep.failures()


def test_strong_direct_and_reversed_partition():
    sm = build_frobenius(P_SQ)
    assert verify_strong_direct(build_frobenius_rev(P_SQ), P_SQ, 2).passed
    assert reversed_partition(sm).S == build_frobenius_rev(P_SQ).S
    rep = verify_strong_direct(build_frobenius_rev(P_SQ), P_SQ, 1)
    assert not rep.passed


def test_strong_local_comrade():
    cheb = RecurrenceBasis.chebyshev(3)
    rev = build_comrade_rev([[[0]], [[0]], [[1]]], cheb)
    rep = verify_strong_local(rev, scalar(UniPoly((-1, 0, 2))), 2)
    assert rep.passed and "strong_linearization" not in rep.claims


@pytest.mark.parametrize("family", FAMILIES)
def test_small_suites(family):
    s = run_family_suite(family, 8, 3, smith=False)
    assert s.failed == 0 and s.passed == 8


def test_suite_is_deterministic():
    a = run_family_suite("frobenius", 5, 11, smith=False).to_dict()
    b = run_family_suite("frobenius", 5, 11, smith=False).to_dict()
    assert a == b
    assert trial_seed(2, 3) != trial_seed(3, 2)


def test_degenerate_cork_counts_as_rejection():
    s = run_family_suite("cork", 5, 1, generator=gen_cork_degenerate)
    assert s.rejected == 5 and s.failed == 0
    assert {r["hypothesis"] for r in s.rejections} <= {"rank Y = k-1", "deg p_(k-1) = k-1"}


def test_corruptions_detected():
    rng = random.Random(8)
    for _ in range(5):
        inst = gen_frobenius(rng)
        assert "transfer_matches" in verify_linearization(inst.forward, corrupt_target(rng, inst.P)).failures()
        assert "state_unimodular" in verify_linearization(corrupt_state(inst.forward), inst.P).failures()
        assert "transfer_matches" in verify_linearization(scale_transfer(inst.forward), inst.P).failures()


def test_zero_trials_rejected():
    with pytest.raises(ValueError):
        run_family_suite("frobenius", 0, 1)


def test_generators_registry():
    assert set(GENERATORS) == set(FAMILIES)
