"""Charged multipartitions and the underlying partition calculus.

A charged multipartition pairs an ``l``-tuple of partitions with an
``l``-tuple of integer charges.  Boxes of the Young diagrams carry a
*content* ``col - row + charge``, and a total order on boxes (higher content
first, ties broken by smaller component index) drives both the Kashiwara
crystal rule and the vertical-strip machinery built on top of this module.

Partitions are plain tuples of positive integers in weakly decreasing
order, with no trailing zeros.  Everything in this package is immutable
and hashable, so values can be shared freely.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a partition tuple, dropping zero parts.

    Raises ``ValueError`` if the sequence contains a negative entry or is
    not weakly decreasing once zeros are removed.
    """
    out = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {parts!r}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts!r}")
    return out


def conjugate_partition(lam: Partition) -> Partition:
    """Transpose the Young diagram (swap rows and columns)."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def add_partitions(lam: Partition, mu: Partition) -> Partition:
    """Multiset union of the parts, reordered decreasingly.

    This is the column-wise addition: it corresponds to the ordinary sum
    of the conjugate partitions.
    """
    return tuple(sorted(lam + mu, reverse=True))


def scale_partition(k: int, lam: Partition) -> Partition:
    """Repeat every part of ``lam`` exactly ``k`` times."""
    if k < 0:
        raise ValueError("scale factor must be nonnegative")
    return tuple(p for p in lam for _ in range(k))


def contains_cell(lam: Partition, row: int, col: int) -> bool:
    """Whether the diagram of ``lam`` contains the cell (row, col), 1-based."""
    return 1 <= row <= len(lam) and 1 <= col <= lam[row - 1]


def addable_cells(lam: Partition) -> list[tuple[int, int]]:
    """Cells (row, col) whose addition keeps ``lam`` a partition, top to bottom."""
    cells = [(1, (lam[0] if lam else 0) + 1)]
    for a in range(2, len(lam) + 1):
        if lam[a - 2] > lam[a - 1]:
            cells.append((a, lam[a - 1] + 1))
    if lam:
        cells.append((len(lam) + 1, 1))
    return cells


def removable_cells(lam: Partition) -> list[tuple[int, int]]:
    """Cells (row, col) whose removal keeps ``lam`` a partition, top to bottom."""
    cells = []
    for a in range(1, len(lam) + 1):
        nxt = lam[a] if a < len(lam) else 0
        if lam[a - 1] > nxt:
            cells.append((a, lam[a - 1]))
    return cells


def add_cell(lam: Partition, row: int) -> Partition:
    """Add one box at the end of ``row`` (1-based); the result must be a partition."""
    parts = list(lam) + [0] * (row - len(lam))
    parts[row - 1] += 1
    out = tuple(p for p in parts if p)
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"adding a box in row {row} of {lam} breaks the shape")
    return out


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, in reverse lexicographic order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)

    def gen(rest: int, bound: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


class Box(NamedTuple):
    """A box (row, col) in component ``comp`` of a multipartition, all 1-based.

    A box may lie inside or outside the actual diagram.
    """

    row: int
    col: int
    comp: int


@dataclass(frozen=True)
class ChargedMultipartition:
    """An ``l``-tuple of partitions with an ``l``-tuple of integer charges.

    ``e`` is the modulus attached to the ambient space (it does not affect
    the data itself, but residues, strips and crystal operators depend on
    it, so it travels with the object).  Both ``e`` and the level ``l``
    must be at least 2.
    """

    components: tuple[Partition, ...]
    charges: tuple[int, ...]
    e: int

    def __post_init__(self):
        if self.e < 2:
            raise ValueError("modulus e must be >= 2")
        if len(self.components) < 2:
            raise ValueError("level l must be >= 2")
        if len(self.components) != len(self.charges):
            raise ValueError("components and charges must have equal length")
        for lam in self.components:
            as_partition(lam)

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        """Total number of boxes across all components."""
        return sum(sum(lam) for lam in self.components)

    @property
    def charge_total(self) -> int:
        return sum(self.charges)

    def with_components(self, components: Sequence[Partition]) -> "ChargedMultipartition":
        return ChargedMultipartition(tuple(components), self.charges, self.e)


def make_charged(
    components: Sequence[Sequence[int]], charges: Sequence[int], e: int
) -> ChargedMultipartition:
    """Convenience constructor normalizing each component."""
    return ChargedMultipartition(
        tuple(as_partition(c) for c in components), tuple(int(s) for s in charges), e
    )


def content(box: Box, cmp: ChargedMultipartition) -> int:
    """Content ``col - row + charge`` of a box in its component."""
    if not 1 <= box.comp <= cmp.level:
        raise ValueError(f"component index {box.comp} out of range 1..{cmp.level}")
    return box.col - box.row + cmp.charges[box.comp - 1]


def box_key(box: Box, cmp: ChargedMultipartition) -> tuple[int, int]:
    """Sort key under which ascending order is *decreasing* box order."""
    return (-content(box, cmp), box.comp)


def compare_boxes(a: Box, b: Box, cmp: ChargedMultipartition) -> int:
    """Total preorder on boxes: higher content wins, then smaller component.

    Returns 1 if ``a`` is the greater box, -1 if ``b`` is, and 0 when the
    (content, component) pairs coincide.
    """
    ka, kb = box_key(a, cmp), box_key(b, cmp)
    return (ka < kb) - (ka > kb)


def conjugate_charged(cmp: ChargedMultipartition) -> ChargedMultipartition:
    """Conjugate: transpose every component, reverse their order, negate and
    reverse the charges.  An involution sending total charge to its negative."""
    comps = tuple(conjugate_partition(lam) for lam in reversed(cmp.components))
    charges = tuple(-s for s in reversed(cmp.charges))
    return ChargedMultipartition(comps, charges, cmp.e)


def is_asymptotic(cmp: ChargedMultipartition) -> Optional[int]:
    """Smallest component index ``j0`` with ``|s_j - s_j0| >= |lambda|`` for
    every other ``j``, or ``None`` when no such index exists."""
    n = cmp.size
    for j0 in range(1, cmp.level + 1):
        s0 = cmp.charges[j0 - 1]
        if all(
            abs(cmp.charges[j - 1] - s0) >= n
            for j in range(1, cmp.level + 1)
            if j != j0
        ):
            return j0
    return None


def e_regular_decompose(lam: Partition, e: int) -> tuple[Partition, Partition]:
    """Split ``lam = tilde + e*pi`` with no part of ``tilde`` repeated ``e``
    or more times.

    Working down from the largest part value, runs of ``e`` equal parts are
    extracted into ``pi`` until every multiplicity drops below ``e``; this
    amounts to a Euclidean division of each multiplicity by ``e``, so the
    decomposition is unique.
    """
    if e < 2:
        raise ValueError("modulus e must be >= 2")
    counts = Counter(lam)
    tilde: list[int] = []
    pi: list[int] = []
    for value in sorted(counts, reverse=True):
        reps, rem = divmod(counts[value], e)
        tilde.extend([value] * rem)
        pi.extend([value] * reps)
    return tuple(sorted(tilde, reverse=True)), tuple(sorted(pi, reverse=True))
