"""Abacus models of charged multipartitions and the runner bijections.

A charged multipartition ``|lambda, s>`` is encoded on ``l`` horizontal
runners by placing a bead on runner ``j`` at every integer position
``lambda^j_k + s_j - k + 1`` for ``k = 1, 2, ...``.  Each runner is full far
to the left and empty far to the right, so an abacus is stored as a finite
set of beads above a *tail bound* below which every position on every
runner is implicitly occupied.

Two position bijections relate a 1-runner abacus to a multi-runner one:

* ``tau``: the twisted quotient depending on both ``e`` and ``l``.  An
  integer ``n`` decomposes uniquely as ``n = -z*e*l + (y-1)*e + (x-1)``
  with ``1 <= x <= e`` and ``1 <= y <= l``; the bead at 1-runner position
  ``c`` lands on runner ``y(-c)`` at position ``-(x(-c)-1) + e*z(-c)``.
  Concretely the 1-runner axis is cut into blocks of length ``e*l``, each
  block is folded into an ``e x l`` rectangle whose columns are read right
  to left, and the rectangles are laid out side by side.
* ``taudot``: the classical ``e``-quotient/``e``-core folding.  It only
  depends on ``e``.

Composing ``taudot``, conjugation and the inverse of ``tau`` yields the
twisted level-rank duality that exchanges the roles of ``e`` and ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import ChargedMultipartition, Partition, as_partition, conjugate_charged

Bead = tuple[int, int]  # (runner index 1..runners, integer position)


@dataclass(frozen=True)
class Abacus:
    """Normalized bead configuration on ``runners`` horizontal runners.

    ``beads`` lists exactly the beads at positions ``>= tail_bound``;
    every position strictly below ``tail_bound`` on every runner holds an
    implicit bead.  ``tail_bound`` is canonical: it is the largest integer
    with that property, so equal configurations compare equal.
    """

    runners: int
    beads: frozenset[Bead]
    tail_bound: int

    def has_bead(self, j: int, d: int) -> bool:
        if not 1 <= j <= self.runners:
            raise ValueError(f"runner index {j} out of range 1..{self.runners}")
        return d < self.tail_bound or (j, d) in self.beads

    def runner_positions(self, j: int) -> list[int]:
        """Explicit bead positions on runner ``j``, decreasing."""
        return sorted((d for (jj, d) in self.beads if jj == j), reverse=True)

    @property
    def max_position(self) -> int:
        """Largest explicit bead position, or ``tail_bound - 1`` if none."""
        return max((d for (_, d) in self.beads), default=self.tail_bound - 1)


def make_abacus(runners: int, beads: Iterable[Bead], tail_bound: int) -> Abacus:
    """Build a normalized abacus from explicit beads at positions >= tail_bound.

    Beads listed below ``tail_bound`` are redundant (those positions are
    already full) and are dropped.  Runner indices outside ``1..runners``
    are rejected.
    """
    if runners < 1:
        raise ValueError("an abacus needs at least one runner")
    bead_set = set()
    for (j, d) in beads:
        if not 1 <= j <= runners:
            raise ValueError(f"bead {(j, d)} has runner index outside 1..{runners}")
        if d >= tail_bound:
            bead_set.add((int(j), int(d)))
    # Raise the tail bound as long as the next full row of positions is present.
    t = tail_bound
    while all((j, t) in bead_set for j in range(1, runners + 1)):
        for j in range(1, runners + 1):
            bead_set.discard((j, t))
        t += 1
    return Abacus(runners, frozenset(bead_set), t)


def _runner_beads(lam: Partition, charge: int, low: int) -> list[int]:
    """Positions ``lam_k + charge - k + 1`` down to ``low`` (exclusive below)."""
    out = []
    k = 1
    while True:
        part = lam[k - 1] if k <= len(lam) else 0
        pos = part + charge - k + 1
        if pos < low:
            return out
        out.append(pos)
        k += 1


def to_abacus(cmp: ChargedMultipartition) -> Abacus:
    """Bead set ``{(j, lambda^j_k + s_j - k + 1)}`` of a charged multipartition."""
    low = min(
        charge - len(lam) for lam, charge in zip(cmp.components, cmp.charges)
    )
    beads = [
        (j, d)
        for j, (lam, charge) in enumerate(zip(cmp.components, cmp.charges), start=1)
        for d in _runner_beads(lam, charge, low)
    ]
    return make_abacus(cmp.level, beads, low)


def _read_runner(positions: list[int], tail_bound: int) -> tuple[Partition, int]:
    """Recover (partition, charge) from explicit positions over a full tail.

    The charge is the number of beads at positions ``>= t`` plus ``t - 1``,
    independently of the threshold ``t <= tail_bound``; here ``t = tail_bound``.
    """
    positions = sorted(positions, reverse=True)
    charge = len(positions) + tail_bound - 1
    lam = []
    for k, pos in enumerate(positions, start=1):
        part = pos - charge + k - 1
        if part < 0:
            raise ValueError("bead positions do not describe a partition")
        if part == 0:
            break
        lam.append(part)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("bead positions do not describe a partition")
    return tuple(lam), charge


def from_abacus(a: Abacus, e: int) -> ChargedMultipartition:
    """Inverse of :func:`to_abacus`; ``e`` re-attaches the ambient modulus."""
    comps = []
    charges = []
    for j in range(1, a.runners + 1):
        lam, charge = _read_runner(a.runner_positions(j), a.tail_bound)
        comps.append(lam)
        charges.append(charge)
    return ChargedMultipartition(tuple(comps), tuple(charges), e)


def read_level_one(a: Abacus) -> tuple[Partition, int]:
    """Read a 1-runner abacus as a charged partition (partition, charge)."""
    if a.runners != 1:
        raise ValueError("read_level_one expects a single runner")
    return _read_runner(a.runner_positions(1), a.tail_bound)


def level_one_abacus(lam: Partition, charge: int) -> Abacus:
    """1-runner abacus of a charged partition."""
    lam = as_partition(lam)
    low = charge - len(lam)
    return make_abacus(1, [(1, d) for d in _runner_beads(lam, charge, low)], low)


# ---------------------------------------------------------------------------
# position bijections


def _euclid(n: int, e: int, l: int) -> tuple[int, int, int]:
    """Unique (x, y, z) with ``n = -z*e*l + (y-1)*e + (x-1)``, x in 1..e, y in 1..l."""
    return n % e + 1, (n // e) % l + 1, -(n // (e * l))


def tau_position(c: int, e: int, l: int) -> Bead:
    """Runner and position of the image of 1-runner position ``c`` under tau."""
    if e < 2 or l < 2:
        raise ValueError("tau needs e >= 2 and l >= 2")
    x, y, z = _euclid(-c, e, l)
    return (y, -(x - 1) + e * z)


def tau_inverse_position(j: int, d: int, e: int, l: int) -> int:
    """1-runner position mapping to runner ``j`` position ``d`` under tau.

    Closed form ``e*(1-j) + l*d + (l-1)*((-d) % e)``.
    """
    if e < 2 or l < 2:
        raise ValueError("tau needs e >= 2 and l >= 2")
    rho = (-d) % e
    z = (d + rho) // e
    return z * e * l - e * (j - 1) - rho


def taudot_position(c: int, e: int, l: Optional[int] = None) -> Bead:
    """Classical e-quotient folding; the ``l`` argument is accepted and ignored."""
    if e < 2:
        raise ValueError("taudot needs e >= 2")
    return ((-c) % e + 1, -((-c) // e))


def taudot_inverse_position(j: int, d: int, e: int, l: Optional[int] = None) -> int:
    if e < 2:
        raise ValueError("taudot needs e >= 2")
    return -(j - 1) + e * d


# ---------------------------------------------------------------------------
# bead-set maps
#
# Each map below transports a whole abacus through a position bijection.
# The image is assembled runner by runner from a membership predicate; the
# scan windows rely on the bijections moving positions approximately
# linearly, so a fixed margin around the affine image of the source window
# is enough, and the normalization in make_abacus trims the slack.


def tau_map(a1: Abacus, e: int, l: int) -> Abacus:
    """Transport a 1-runner abacus to the ``l``-runner picture through tau."""
    if a1.runners != 1:
        raise ValueError("tau_map expects a 1-runner abacus")
    lo, hi = a1.tail_bound, a1.max_position
    margin = e * l + e + l
    d_low = (lo - (l - 1) * (e - 1)) // l - margin
    d_high = hi // l + margin
    beads = []
    for j in range(1, l + 1):
        for d in range(d_low, d_high + 1):
            if a1.has_bead(1, tau_inverse_position(j, d, e, l)):
                beads.append((j, d))
    return make_abacus(l, beads, d_low)


def tau_inverse_map(a: Abacus, e: int, l: int) -> Abacus:
    """Transport an ``l``-runner abacus back to a single runner through tau."""
    if a.runners != l:
        raise ValueError(f"expected an abacus with {l} runners")
    lo, hi = a.tail_bound, a.max_position
    margin = e * l + e + l
    c_low = l * lo - margin
    c_high = l * hi + margin
    beads = []
    for c in range(c_low, c_high + 1):
        j, d = tau_position(c, e, l)
        if a.has_bead(j, d):
            beads.append((1, c))
    return make_abacus(1, beads, c_low)


def taudot_map(a1: Abacus, e: int) -> Abacus:
    """Transport a 1-runner abacus to the ``e``-runner picture through taudot."""
    if a1.runners != 1:
        raise ValueError("taudot_map expects a 1-runner abacus")
    lo, hi = a1.tail_bound, a1.max_position
    margin = e + 2
    d_low = lo // e - margin
    d_high = hi // e + margin
    beads = []
    for j in range(1, e + 1):
        for d in range(d_low, d_high + 1):
            if a1.has_bead(1, taudot_inverse_position(j, d, e)):
                beads.append((j, d))
    return make_abacus(e, beads, d_low)


def taudot_inverse_map(a: Abacus, e: int) -> Abacus:
    """Transport an ``e``-runner abacus back to a single runner through taudot."""
    if a.runners != e:
        raise ValueError(f"expected an abacus with {e} runners")
    lo, hi = a.tail_bound, a.max_position
    margin = e + 2
    c_low = e * lo - e * margin
    c_high = e * hi + e * margin
    beads = []
    for c in range(c_low, c_high + 1):
        j, d = taudot_position(c, e)
        if a.has_bead(j, d):
            beads.append((1, c))
    return make_abacus(1, beads, c_low)


def rotate_conjugate(a: Abacus) -> Abacus:
    """Rotate the abacus 180 degrees and swap beads with holes.

    Bead (j, d) of the result sits where the input has *no* bead at
    ``(runners + 1 - j, 1 - d)``.  Through to_abacus/from_abacus this is
    exactly conjugation of the charged multipartition.
    """
    lo, hi = a.tail_bound, a.max_position
    new_low = -hi  # input empty above hi -> output full below 1 - hi
    beads = []
    for j in range(1, a.runners + 1):
        for d in range(new_low, 1 - lo + 1):
            if not a.has_bead(a.runners + 1 - j, 1 - d):
                beads.append((j, d))
    return make_abacus(a.runners, beads, new_low)


# ---------------------------------------------------------------------------
# level-rank duality


def level_rank_dual(cmp: ChargedMultipartition) -> ChargedMultipartition:
    """Twisted level-rank dual: ``taudot . conjugate . tau^{-1}``.

    Sends an ``l``-component multipartition with modulus ``e`` to an
    ``e``-component one with modulus ``l``; the total charge is negated.
    """
    e, l = cmp.e, cmp.level
    a1 = tau_inverse_map(to_abacus(cmp), e, l)
    dual_ab = taudot_map(rotate_conjugate(a1), e)
    return from_abacus(dual_ab, l)


def level_rank_dual_inverse(cmp: ChargedMultipartition) -> ChargedMultipartition:
    """Inverse duality; equals :func:`level_rank_dual` with e and l swapped."""
    return level_rank_dual(cmp)
