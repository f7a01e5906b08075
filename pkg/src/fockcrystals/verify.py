"""Self-check suites aggregating the property laws of the library.

Two suites are exposed: ``identities`` exercises the symmetric-function
layer (boson commutators, transition matrices), ``crystals`` the
combinatorial layer (abacus roundtrips, duality, crystal operator laws).
Each check runs at a caller-chosen size bound; bound 0 yields an empty,
trivially passing report.  Randomized checks draw from a seeded generator
so reports are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import abacus as ab
from . import core, heisenberg, kashiwara, symfun


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    bound: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def counts(self) -> tuple[int, int]:
        good = sum(1 for r in self.results if r.passed)
        return good, len(self.results) - good

    def add(self, name: str, passed: bool, detail: str = ""):
        self.results.append(CheckResult(name, passed, detail))


def random_multipartition(
    rng: random.Random, e: int, level: int, max_boxes: int, charge_span: int = 3
) -> core.ChargedMultipartition:
    comps = []
    budget = rng.randint(0, max_boxes)
    for _ in range(level):
        take = rng.randint(0, budget)
        lam = []
        while take > 0:
            p = rng.randint(1, take)
            lam.append(p)
            take -= p
        comps.append(tuple(sorted(lam, reverse=True)))
        budget -= sum(comps[-1])
    charges = tuple(rng.randint(-charge_span, charge_span) for _ in range(level))
    return core.ChargedMultipartition(tuple(comps), charges, e)


def random_partition(rng: random.Random, max_size: int) -> core.Partition:
    take = rng.randint(0, max_size)
    lam = []
    while take > 0:
        p = rng.randint(1, take)
        lam.append(p)
        take -= p
    return tuple(sorted(lam, reverse=True))


def identity_suite(bound: int, seed: int = 20) -> SuiteReport:
    """Symmetric-function identities at degree/size ``bound``."""
    report = SuiteReport("identities", bound)
    if bound <= 0:
        return report
    rng = random.Random(seed)
    deg = min(bound, 6)

    report.add(
        "complete-in-power-sums",
        all(symfun.power_sum_in_complete(m) for m in range(1, deg + 1)),
        f"H_m = sum P_pi / z_pi for m <= {deg}",
    )
    schur = symfun.verify_complete_schur(deg)
    report.add(
        "complete-in-schur",
        all(ok for _, ok in schur),
        f"{len(schur)} expansions checked to degree {deg}",
    )

    unitri = True
    for n in range(min(bound, 8) + 1):
        for s in core.partitions_of(n):
            for p in core.partitions_of(n):
                k = symfun.kostka(s, p)
                if s == p and k != 1:
                    unitri = False
                if k and not symfun._dominates(s, p):
                    unitri = False
    report.add("kostka-unitriangular", unitri, f"degrees <= {min(bound, 8)}")

    inv_ok = True
    for n in range(min(bound, 8) + 1):
        parts = core.partitions_of(n)
        for s in parts:
            for t in parts:
                total = sum(
                    symfun.kostka(s, p) * symfun.inverse_kostka(p, t) for p in parts
                )
                if total != (1 if s == t else 0):
                    inv_ok = False
    report.add("kostka-inverse", inv_ok, f"block identity, degrees <= {min(bound, 8)}")

    comm_ok = True
    trials = max(4, 4 * bound)
    for _ in range(trials):
        e = rng.choice((2, 3))
        l = rng.choice((2, 3))
        m = rng.choice((1, 2))
        charge = rng.randint(-3, 3)
        v = symfun.WedgeVector.basis(random_partition(rng, 6), charge)
        lhs = symfun.p_action(m, symfun.p_action(-m, v, e, l), e, l) - symfun.p_action(
            -m, symfun.p_action(m, v, e, l), e, l
        )
        if lhs != Fraction(m * e * l) * v:
            comm_ok = False
        mp = rng.choice((1, 2))
        if m + mp != 0:
            zero = symfun.p_action(
                m, symfun.p_action(mp, v, e, l), e, l
            ) - symfun.p_action(mp, symfun.p_action(m, v, e, l), e, l)
            if zero:
                comm_ok = False
    report.add("boson-commutators", comm_ok, f"{trials} randomized wedges")

    integral_ok = True
    for _ in range(max(2, bound)):
        e = rng.choice((2, 3))
        l = rng.choice((2, 3))
        v = symfun.WedgeVector.basis(random_partition(rng, 5), rng.randint(-2, 2))
        sig = random_partition(rng, 3)
        try:
            symfun.s_sigma(sig, v, e, l)
        except ArithmeticError:
            integral_ok = False
    report.add("schur-operator-integral", integral_ok, "integer output coefficients")
    return report


def crystal_suite(bound: int, seed: int = 21) -> SuiteReport:
    """Crystal and abacus laws on randomized instances of size ``bound``."""
    report = SuiteReport("crystals", bound)
    if bound <= 0:
        return report
    rng = random.Random(seed)
    boxes = max(2, bound)
    trials = max(5, 5 * bound)

    ok = True
    for _ in range(trials):
        x = random_multipartition(rng, rng.choice((2, 3, 4)), rng.choice((2, 3, 4)), boxes)
        if ab.from_abacus(ab.to_abacus(x), x.e) != x:
            ok = False
    report.add("abacus-roundtrip", ok, f"{trials} instances")

    ok = all(
        ab.tau_inverse_position(*ab.tau_position(c, e, l), e, l) == c
        for e in (2, 3, 4, 5)
        for l in (2, 3, 4, 5)
        for c in range(-100, 101)
    ) and all(
        ab.taudot_inverse_position(*ab.taudot_position(c, e), e) == c
        for e in (2, 3, 4, 5)
        for c in range(-100, 101)
    )
    report.add("runner-bijections", ok, "positions -100..100")

    ok = True
    for _ in range(trials):
        x = random_multipartition(rng, rng.choice((2, 3)), rng.choice((2, 3)), boxes)
        if ab.level_rank_dual_inverse(ab.level_rank_dual(x)) != x:
            ok = False
        if core.conjugate_charged(core.conjugate_charged(x)) != x:
            ok = False
        a = ab.to_abacus(x)
        if ab.from_abacus(ab.rotate_conjugate(a), x.e) != core.conjugate_charged(x):
            ok = False
    report.add("duality-and-conjugation", ok, f"{trials} instances")

    ok = True
    for _ in range(trials):
        x = random_multipartition(rng, rng.choice((2, 3)), rng.choice((2, 3)), boxes)
        for i in range(x.e):
            y = kashiwara.f_tilde(x, i)
            if y is not None and kashiwara.e_tilde(y, i) != x:
                ok = False
            z = kashiwara.e_tilde(x, i)
            if z is not None and kashiwara.f_tilde(z, i) != x:
                ok = False
    report.add("kashiwara-inverse-pairs", ok, f"{trials} instances, all residues")

    ok = True
    for _ in range(trials):
        x = random_multipartition(rng, rng.choice((2, 3)), rng.choice((2, 3)), min(boxes, 6))
        i = rng.randrange(x.e)
        j = rng.randrange(x.level)
        a = kashiwara.f_tilde(x, i)
        b = kashiwara.dual_f_tilde(x, j)
        lhs = None if a is None else kashiwara.dual_f_tilde(a, j)
        rhs = None if b is None else kashiwara.f_tilde(b, i)
        if lhs != rhs:
            ok = False
    report.add("crystal-commutation", ok, f"{trials} mixed operator pairs")

    ok = True
    small = max(3, trials // 2)
    for _ in range(small):
        x = random_multipartition(rng, rng.choice((2, 3)), rng.choice((2, 3)), min(boxes, 6))
        sigma = random_partition(rng, 3)
        direct = heisenberg.tc(x, sigma)
        routed = heisenberg.b_sigma_via_periods(x, sigma)
        if direct != routed:
            ok = False
        if heisenberg.b_minus(direct, sigma) != x:
            ok = False
    report.add("strip-vs-period-route", ok, f"{small} instances with inverse law")

    ok = True
    for _ in range(small):
        x = random_multipartition(rng, rng.choice((2, 3)), rng.choice((2, 3)), min(boxes, 5))
        sigma = random_partition(rng, 2)
        i = rng.randrange(x.e)
        fx = kashiwara.f_tilde(x, i)
        if fx is not None and heisenberg.tc(fx, sigma) != kashiwara.f_tilde(
            heisenberg.tc(x, sigma), i
        ):
            ok = False
    report.add("tc-commutes-with-kashiwara", ok, f"{small} instances")
    return report


SUITES: dict[str, Callable[[int], SuiteReport]] = {
    "identities": identity_suite,
    "crystals": crystal_suite,
}


def run_suites(which: str, bound: int) -> list[SuiteReport]:
    if which == "all":
        return [identity_suite(bound), crystal_suite(bound)]
    if which in SUITES:
        return [SUITES[which](bound)]
    raise ValueError(f"unknown suite {which!r}")
