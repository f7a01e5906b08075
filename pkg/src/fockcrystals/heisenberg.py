"""The Heisenberg crystal: vertical strips, good strips, and period shifts.

A vertical ``e``-strip of a charged multipartition is a sequence of ``e``
frontier boxes whose contents decrease by one at each step and whose
component indices weakly decrease.  Ordering strips lexicographically by
the box order singles out, greedily and disjointly, the *good* strips.
Adding good strips according to the parts of a partition ``sigma`` is the
raising half of the Heisenberg crystal; the lowering half moves abacus
periods leftwards at a doubly highest weight vertex and is transported
everywhere else by commutation with the two Kashiwara crystal families.

``kappa`` measures the depth of a vertex inside its Heisenberg component:
every component is a copy of the Young graph, rooted at the unique vertex
with empty ``kappa``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .abacus import (
    from_abacus,
    level_rank_dual,
    level_rank_dual_inverse,
    make_abacus,
    to_abacus,
)
from .core import (
    Box,
    ChargedMultipartition,
    Partition,
    add_cell,
    addable_cells,
    as_partition,
    box_key,
    content,
    partitions_of,
    removable_cells,
)
from .kashiwara import _raise_fully, lower_along

VerticalStrip = tuple[Box, ...]


class CrystalConsistencyError(RuntimeError):
    """A structural guarantee of the crystal theory failed; this signals a
    bug in the implementation, never bad input data."""


def frontier(cmp: ChargedMultipartition, row_bound: int) -> list[Box]:
    """The boxes directly to the right of each component, one per row.

    Rows run from 1 to ``row_bound``; rows below the diagram contribute
    their first-column box.
    """
    if row_bound < 1:
        raise ValueError("row_bound must be >= 1")
    boxes = []
    for j, lam in enumerate(cmp.components, start=1):
        for a in range(1, row_bound + 1):
            part = lam[a - 1] if a <= len(lam) else 0
            boxes.append(Box(a, part + 1, j))
    return boxes


def is_admissible_strip(strip: Iterable[Box], cmp: ChargedMultipartition) -> bool:
    """Check the vertical-strip conditions: ``e`` boxes, consecutive
    decreasing contents, weakly decreasing components, no repeated row
    within a component."""
    boxes = tuple(strip)
    if len(boxes) != cmp.e:
        return False
    if len({(b.row, b.comp) for b in boxes}) != len(boxes):
        return False
    for i in range(len(boxes) - 1):
        if content(boxes[i], cmp) != content(boxes[i + 1], cmp) + 1:
            return False
        if boxes[i].comp < boxes[i + 1].comp:
            return False
    return True


def admissible_strips(cmp: ChargedMultipartition, row_bound: int) -> list[VerticalStrip]:
    """All vertical ``e``-strips inside the frontier with rows <= row_bound,
    sorted strictly decreasingly (greatest strip first)."""
    by_content: dict[int, list[Box]] = {}
    for box in frontier(cmp, row_bound):
        by_content.setdefault(content(box, cmp), []).append(box)

    e = cmp.e
    strips: list[VerticalStrip] = []

    def extend(chain: list[Box], c: int):
        if len(chain) == e:
            strips.append(tuple(chain))
            return
        for box in by_content.get(c, ()):
            if box.comp <= chain[-1].comp:
                chain.append(box)
                extend(chain, c - 1)
                chain.pop()

    for c in by_content:
        for box in by_content[c]:
            extend([box], c - 1)

    strips.sort(key=lambda st: [box_key(b, cmp) for b in st])
    return strips


def _greedy_chain(strips: list[VerticalStrip], k: int) -> list[VerticalStrip]:
    """First ``k`` strips of the greedy disjoint chain (may return fewer)."""
    chain: list[VerticalStrip] = []
    used: set[Box] = set()
    for strip in strips:
        if len(chain) == k:
            break
        if used.isdisjoint(strip):
            chain.append(strip)
            used.update(strip)
    return chain


def good_strips(cmp: ChargedMultipartition, k: int) -> list[VerticalStrip]:
    """The first ``k`` good vertical strips of ``cmp``.

    The n-th good strip is the greatest admissible strip below the previous
    one that shares no box with any earlier good strip.  The admissible set
    is infinite, so the row bound is deepened iteratively until the selected
    prefix is stable across a doubling.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    rows = max((len(lam) for lam in cmp.components), default=0)
    bound = max(rows + cmp.e * k, cmp.e * k, 2)
    previous: Optional[list[VerticalStrip]] = None
    while True:
        chain = _greedy_chain(admissible_strips(cmp, bound), k)
        if previous is not None and chain == previous and len(chain) == k:
            return chain
        previous = chain
        bound *= 2


def strip_is_addable(strip: VerticalStrip, cmp: ChargedMultipartition) -> bool:
    """Whether adding every box of the strip leaves a valid multipartition."""
    try:
        add_strip(strip, cmp)
    except ValueError:
        return False
    return True


def add_strip(strip: VerticalStrip, cmp: ChargedMultipartition) -> ChargedMultipartition:
    """Add all boxes of a frontier strip at once; raises if the shape breaks."""
    comps = list(cmp.components)
    for j in {b.comp for b in strip}:
        rows = sorted(b.row for b in strip if b.comp == j)
        parts = list(comps[j - 1])
        parts += [0] * (max(rows) - len(parts))
        for a in rows:
            lam = comps[j - 1]
            expected = (lam[a - 1] if a <= len(lam) else 0) + 1
            if parts[a - 1] + 1 != expected:
                raise ValueError("strip is not on the frontier")
            parts[a - 1] += 1
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("adding the strip breaks a partition shape")
        comps[j - 1] = tuple(p for p in parts if p)
    return cmp.with_components(comps)


def tc(cmp: ChargedMultipartition, sigma: Iterable[int]) -> ChargedMultipartition:
    """Heisenberg crystal raising operator for the partition ``sigma``.

    For k = 1, 2, ... the k-th good vertical strip of the *current*
    multipartition is added ``sigma_k`` times, strips being recomputed
    after every single addition.  The strip added is addable at each step;
    a failure of that guarantee is an internal error.
    """
    sigma = as_partition(sigma)
    current = cmp
    for k, mult in enumerate(sigma, start=1):
        for _ in range(mult):
            strip = good_strips(current, k)[k - 1]
            try:
                current = add_strip(strip, current)
            except ValueError as exc:  # pragma: no cover - theory guarantee
                raise CrystalConsistencyError(
                    f"good strip {k} of {current} is not addable"
                ) from exc
    return current


# ---------------------------------------------------------------------------
# periods, kappa, and the lowering operators


@dataclass(frozen=True)
class KappaResult:
    """Depth data of a vertex in its Heisenberg component.

    ``ue_lowering`` and ``ul_lowering`` replay the recorded Kashiwara paths:
    starting from ``doubly_hw`` apply the dual family along ``ul_lowering``,
    then the primal family along ``ue_lowering``, to recover the input.
    """

    kappa: Partition
    doubly_hw: ChargedMultipartition
    ue_lowering: tuple[int, ...]
    ul_lowering: tuple[int, ...]

    def replay(self, vertex: ChargedMultipartition) -> ChargedMultipartition:
        """Replay the recorded lowering paths starting from ``vertex``."""
        out = lower_along(vertex, self.ul_lowering, "ul")
        return lower_along(out, self.ue_lowering, "ue")


Period = tuple[tuple[int, int], ...]  # beads (runner, position)


def _periods(cmp: ChargedMultipartition, count: int) -> list[tuple[int, Period]]:
    """First ``count`` abacus periods of a doubly highest weight vertex.

    The k-th period consists of the beads matching the k-th good vertical
    strip; all of them must encode one common part size, which is returned
    alongside the bead positions.
    """
    out = []
    for strip in good_strips(cmp, count):
        parts = {b.col - 1 for b in strip}
        if len(parts) != 1:
            raise CrystalConsistencyError(
                "period beads encode different part sizes at a doubly highest "
                f"weight vertex: {strip}"
            )
        out.append((parts.pop(), tuple((b.comp, content(b, cmp)) for b in strip)))
    return out


def kappa(cmp: ChargedMultipartition) -> KappaResult:
    """Raise to the doubly highest weight vertex and read off ``kappa``.

    The primal family is exhausted first, then the dual one; the k-th part
    of ``kappa`` is the part size encoded by the k-th period, the list
    stopping at the first period of part size zero.
    """
    ue_hw, ue_raise = _raise_fully(cmp)
    dual_hw, ul_raise = _raise_fully(level_rank_dual(ue_hw))
    doubly = level_rank_dual_inverse(dual_hw)
    parts: list[int] = []
    for part, _ in _periods(doubly, doubly.size // doubly.e + 1):
        if part == 0:
            break
        parts.append(part)
    else:  # pragma: no cover - |kappa| <= size/e forces a zero period in range
        raise CrystalConsistencyError("no terminating period of part size zero")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise CrystalConsistencyError(f"kappa parts not decreasing: {parts}")
    return KappaResult(
        kappa=tuple(parts),
        doubly_hw=doubly,
        ue_lowering=tuple(reversed(ue_raise)),
        ul_lowering=tuple(reversed(ul_raise)),
    )


def _shift_periods(
    vertex: ChargedMultipartition, sigma: Partition, direction: int
) -> Optional[ChargedMultipartition]:
    """Shift the k-th period of a doubly highest weight vertex by sigma_k
    steps right (direction=+1) or left (direction=-1).

    All beads of a period move simultaneously, one step at a time; a step is
    blocked when a target position holds a bead outside the moving period.
    Left shifts are processed from the innermost period outwards and may be
    blocked (returning ``None``); right shifts are processed outermost first
    and always succeed at a doubly highest weight vertex.
    """
    if not sigma:
        return vertex
    periods = [list(beads) for _, beads in _periods(vertex, len(sigma))]
    ab = to_abacus(vertex)
    floor = min(d for per in periods for (_, d) in per) - max(sigma) - vertex.e - 2
    beads = {
        (j, d)
        for j in range(1, ab.runners + 1)
        for d in range(floor, ab.max_position + 1)
        if ab.has_bead(j, d)
    }
    order = range(len(sigma)) if direction > 0 else reversed(range(len(sigma)))
    for k in order:
        period = set(periods[k])
        for _ in range(sigma[k]):
            targets = {(j, d + direction) for (j, d) in period}
            if any(t in beads and t not in period for t in targets):
                return None
            beads -= period
            beads |= targets
            period = targets
    return from_abacus(make_abacus(ab.runners, beads, floor), vertex.e)


def _b_minus_from(kr: KappaResult, sigma: Partition) -> Optional[ChargedMultipartition]:
    shifted = _shift_periods(kr.doubly_hw, sigma, direction=-1)
    if shifted is None:
        return None
    return kr.replay(shifted)


def b_minus(
    cmp: ChargedMultipartition, sigma: Iterable[int]
) -> Optional[ChargedMultipartition]:
    """Heisenberg lowering operator; ``None`` encodes annihilation.

    Routed through the doubly highest weight vertex: shift the k-th period
    ``sigma_k`` steps left (``None`` if any step is blocked), then replay
    the recorded Kashiwara lowerings.
    """
    sigma = as_partition(sigma)
    if not sigma:
        return cmp
    return _b_minus_from(kappa(cmp), sigma)


def b_sigma_via_periods(
    cmp: ChargedMultipartition, sigma: Iterable[int]
) -> ChargedMultipartition:
    """Reference route for the raising operator: shift periods right at the
    doubly highest weight vertex and replay.  Agrees with :func:`tc`."""
    sigma = as_partition(sigma)
    if not sigma:
        return cmp
    kr = kappa(cmp)
    shifted = _shift_periods(kr.doubly_hw, sigma, direction=+1)
    if shifted is None:  # pragma: no cover - theory guarantee
        raise CrystalConsistencyError("right period shift blocked")
    return kr.replay(shifted)


def is_h_hw(cmp: ChargedMultipartition) -> bool:
    """Highest weight for the Heisenberg crystal: empty ``kappa``."""
    return kappa(cmp).kappa == ()


def b_one(cmp: ChargedMultipartition, c: int) -> Optional[ChargedMultipartition]:
    """Single-strip Heisenberg operator adding a box of content ``c`` to kappa.

    ``None`` when ``kappa`` has no addable box of content ``c``; otherwise
    equals the full removal of kappa followed by re-adding ``kappa`` plus
    that box.
    """
    kr = kappa(cmp)
    rows = [a for (a, b) in addable_cells(kr.kappa) if b - a == c]
    if not rows:
        return None
    eta = add_cell(kr.kappa, rows[0])
    base = _b_minus_from(kr, kr.kappa)
    if base is None:  # pragma: no cover - full removal is always possible
        raise CrystalConsistencyError("removing kappa was blocked")
    return tc(base, eta)


def b_minus_one(cmp: ChargedMultipartition, d: int) -> Optional[ChargedMultipartition]:
    """Inverse single-strip operator removing the kappa box of content ``d``."""
    kr = kappa(cmp)
    rows = [a for (a, b) in removable_cells(kr.kappa) if b - a == d]
    if not rows:
        return None
    theta = list(kr.kappa)
    theta[rows[0] - 1] -= 1
    base = _b_minus_from(kr, kr.kappa)
    if base is None:  # pragma: no cover - full removal is always possible
        raise CrystalConsistencyError("removing kappa was blocked")
    return tc(base, as_partition(theta))


# ---------------------------------------------------------------------------
# the Heisenberg crystal graph


@dataclass
class HCrystalGraph:
    """Component of the Heisenberg crystal below a highest weight vertex.

    Nodes appear rank by rank (rank n lists the images of the partitions of
    n in reverse lexicographic order); edges carry the content of the box
    added to the indexing partition, so the graph is a decorated copy of
    the Young graph truncated at the requested depth.
    """

    seed: ChargedMultipartition
    depth: int
    by_sigma: dict[Partition, ChargedMultipartition] = field(default_factory=dict)
    nodes: list[ChargedMultipartition] = field(default_factory=list)
    edges: list[tuple[ChargedMultipartition, ChargedMultipartition, int]] = field(
        default_factory=list
    )


def h_crystal_component(seed: ChargedMultipartition, depth: int) -> HCrystalGraph:
    """Generate the component of an H-highest-weight vertex to ``depth``."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if not is_h_hw(seed):
        raise ValueError(
            "seed is not a Heisenberg highest weight vertex; apply kappa to "
            "find its depth and the root of its component"
        )
    graph = HCrystalGraph(seed=seed, depth=depth)
    for n in range(depth + 1):
        for sigma in partitions_of(n):
            graph.by_sigma[sigma] = tc(seed, sigma)
            graph.nodes.append(graph.by_sigma[sigma])
    for n in range(depth):
        for sigma in partitions_of(n):
            source = graph.by_sigma[sigma]
            for (a, b) in addable_cells(sigma):
                eta = add_cell(sigma, a)
                graph.edges.append((source, graph.by_sigma[eta], b - a))
    return graph
