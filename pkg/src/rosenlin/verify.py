"""Instance-level certificates that a system matrix linearizes a given P."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .canon import local_orders_at, smith_form
from .constructors import PreconditionError
from .exactalg import ONE
from .polymat import PolyMatrix, pm_det, pm_reversal
from .rosenbrock import SystemMatrix, block_diag, transfer_function, unimodular_witnesses


@dataclass
class Report:
    kind: str
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    claims: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def record(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks[name] = bool(ok)
        if detail:
            self.details[name] = detail
        return ok

    def failures(self) -> list:
        return [name for name, ok in self.checks.items() if not ok]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "passed": self.passed, "checks": dict(self.checks), "failures": self.failures(),
                "details": dict(self.details), "claims": dict(self.claims)}

    def summary(self) -> str:
        lines = [f"{self.kind}: {'PASS' if self.passed else 'FAIL'}"]
        for name, ok in self.checks.items():
            extra = f"  ({self.details[name]})" if name in self.details else ""
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}{extra}")
        return "\n".join(lines)


def _as_rat(P: PolyMatrix):
    return P.to_ratmatrix()


def verify_linearization(sm: SystemMatrix, P: PolyMatrix, smith: bool = True) -> Report:
    """Unimodular state, exact transfer, explicit witnesses, optional Smith padding."""
    rep = Report("linearization")
    rep.record("is_pencil", sm.is_pencil(), f"degree {sm.S.degree()}")
    det = sm.state_det
    unimod = rep.record("state_unimodular", det.degree == 0, f"det A = {det}")
    if sm.S.shape != (P.rows + sm.n, P.cols + sm.n):
        rep.record("dimensions", False, f"S is {sm.S.shape}, expected {(P.rows + sm.n, P.cols + sm.n)}")
        return rep
    G = transfer_function(sm).G
    same = G == _as_rat(P)
    rep.record("transfer_matches", same, "" if same else f"transfer {G} differs from {P}")
    if unimod:
        U, V = unimodular_witnesses(sm)
        du, dv = pm_det(U), pm_det(V)
        rep.record("witnesses_unimodular", du.degree == 0 and dv.degree == 0, f"det U = {du}, det V = {dv}")
        target = block_diag(P, PolyMatrix.identity(sm.n))
        rep.record("witnesses_exact", U @ sm.S @ V == target,
                   "U S V equals diag(P, I_n)" if same else "U S V differs from diag(P, I_n)")
    if smith:
        fs = smith_form(sm.S).invariant_factors
        fp = (ONE,) * sm.n + smith_form(P).invariant_factors
        rep.record("smith_padding", fs == fp,
                   "" if fs == fp else f"S factors {[str(f) for f in fs]} vs padded {[str(f) for f in fp]}")
    return rep


def reversed_partition(sm: SystemMatrix) -> SystemMatrix:
    """rev_1 S with the state in the bottom-right n x n corner.

    This is the reversed partition used by every polynomial family here.
    """
    return SystemMatrix.from_layout(pm_reversal(sm.S, 1), sm.n, "state_bottom_right")


def verify_strong_direct(sm_rev: SystemMatrix, P: PolyMatrix, ell: int) -> Report:
    """Reversed partition with unimodular state and transfer exactly rev_ell P."""
    rep = Report("strong_direct")
    det = sm_rev.state_det
    rep.record("state_unimodular", det.degree == 0, f"det A_r = {det}")
    if ell < P.degree():
        rep.record("transfer_is_reversal", False, f"ell = {ell} is below deg P = {P.degree()}")
        return rep
    target = pm_reversal(P, ell)
    G = transfer_function(sm_rev).G
    same = G == _as_rat(target)
    rep.record("transfer_is_reversal", same, "" if same else f"transfer {G} differs from rev_{ell} P = {target}")
    return rep


def verify_strong_local(sm_rev: SystemMatrix, P: PolyMatrix, ell: int,
                        linearization: Optional[Report] = None) -> Report:
    """State invertible at 0 and transfer equivalent at 0 to rev_ell P.

    Strong linearization is only claimed when a passing ``linearization``
    report for the forward pencil is supplied.
    """
    rep = Report("strong_local")
    d0 = sm_rev.state_det(0)
    rep.record("state_invertible_at_0", d0 != 0, f"det A_r(0) = {d0}")
    if ell < P.degree():
        rep.record("equivalent_at_0", False, f"ell = {ell} is below deg P = {P.degree()}")
        return rep
    G = transfer_function(sm_rev).G
    target = pm_reversal(P, ell)
    if G.shape != target.shape:
        rep.record("equivalent_at_0", False, f"dimension mismatch {G.shape} vs {target.shape}")
        return rep
    og, ot = local_orders_at(G, 0).orders, local_orders_at(target, 0).orders
    rep.record("equivalent_at_0", og == ot, f"orders at 0: transfer {list(og)}, rev_{ell} P {list(ot)}")
    if linearization is not None:
        rep.claims["strong_linearization"] = rep.passed and linearization.passed
    return rep


# ---------------------------------------------------------------------------
# randomized harness
# ---------------------------------------------------------------------------
FAMILIES = ("frobenius", "comrade", "cork", "blockkron", "extblockkron")


@dataclass
class SuiteSummary:
    family: str
    trials: int
    seed: int
    passed: int = 0
    failed: int = 0
    rejected: int = 0
    failures: list = field(default_factory=list)
    rejections: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {"family": self.family, "trials": self.trials, "seed": self.seed, "passed": self.passed,
                "failed": self.failed, "rejected": self.rejected, "failures": self.failures,
                "rejections": self.rejections}


def trial_seed(seed: int, t: int) -> int:
    return seed * 1_000_003 + t


def check_instance(inst, smith: bool = False) -> tuple:
    """Forward linearization report plus the family's strong report."""
    lin = verify_linearization(inst.forward, inst.P, smith=smith)
    if inst.strong_mode == "direct":
        strong = verify_strong_direct(inst.reverse, inst.P, inst.ell)
    else:
        strong = verify_strong_local(inst.reverse, inst.P, inst.ell, linearization=lin)
    return lin, strong


def run_family_suite(family: str, trials: int, seed: int, generator: Optional[Callable] = None,
                     smith: bool = True) -> SuiteSummary:
    """Seeded random instances through the forward and strong checks.

    ``generator(rng)`` must return a family instance; a
    :class:`PreconditionError` it raises counts as a rejection.
    """
    from .families import GENERATORS

    if trials < 1:
        raise ValueError("trials must be >= 1")
    gen = generator or GENERATORS[family]
    out = SuiteSummary(family, trials, seed)
    for t in range(trials):
        ts = trial_seed(seed, t)
        try:
            inst = gen(random.Random(ts))
        except PreconditionError as exc:
            out.rejected += 1
            out.rejections.append({"trial_seed": ts, "hypothesis": exc.hypothesis})
            continue
        lin, strong = check_instance(inst, smith=smith)
        if lin.passed and strong.passed:
            out.passed += 1
        else:
            out.failed += 1
            out.failures.append({"trial_seed": ts, "linearization": lin.failures(), "strong": strong.failures()})
    return out
