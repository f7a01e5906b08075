"""Crystal operators on charged multipartitions via the good-box rule.

For a residue ``i`` modulo ``e``, the addable and removable boxes of
residue ``i`` are listed in decreasing box order (higher content first,
ties to the smaller component index).  Adjacent pairs consisting of an
addable box immediately followed by a removable one cancel; after all
cancellations the word reads as removable entries followed by addable
ones.  The lowering operator adds the greatest surviving addable box, the
raising operator removes the least surviving removable box.

The dual family of operators acts through level-rank duality: transport to
the ``e``-component picture, apply the same rule with modulus ``l``, and
transport back.  Both families commute, and both leave the multicharge
untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, NamedTuple, Optional

from .abacus import level_rank_dual, level_rank_dual_inverse
from .core import (
    Box,
    ChargedMultipartition,
    add_cell,
    addable_cells,
    box_key,
    content,
    partitions_of,
    removable_cells,
)

ADDABLE = "addable"
REMOVABLE = "removable"

Algebra = Literal["ue", "ul"]


class SignatureEntry(NamedTuple):
    box: Box
    kind: str  # ADDABLE or REMOVABLE


def residue(box: Box, cmp: ChargedMultipartition, modulus: int) -> int:
    """Content of the box reduced modulo ``modulus`` into 0..modulus-1."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    return content(box, cmp) % modulus


def signature(
    cmp: ChargedMultipartition, i: int, modulus: Optional[int] = None
) -> tuple[SignatureEntry, ...]:
    """All addable/removable boxes of residue ``i`` in decreasing box order."""
    modulus = cmp.e if modulus is None else modulus
    if not 0 <= i < modulus:
        raise ValueError(f"residue {i} out of range 0..{modulus - 1}")
    entries = []
    for j, lam in enumerate(cmp.components, start=1):
        for (a, b) in addable_cells(lam):
            box = Box(a, b, j)
            if residue(box, cmp, modulus) == i:
                entries.append(SignatureEntry(box, ADDABLE))
        for (a, b) in removable_cells(lam):
            box = Box(a, b, j)
            if residue(box, cmp, modulus) == i:
                entries.append(SignatureEntry(box, REMOVABLE))
    entries.sort(key=lambda entry: box_key(entry.box, cmp))
    return tuple(entries)


def reduce_signature(
    word: Iterable[SignatureEntry],
) -> tuple[SignatureEntry, ...]:
    """Cancel adjacent (addable, removable) pairs until none remain.

    The survivors always read as removable entries followed by addable ones.
    """
    stack: list[SignatureEntry] = []
    for entry in word:
        if entry.kind == REMOVABLE and stack and stack[-1].kind == ADDABLE:
            stack.pop()
        else:
            stack.append(entry)
    return tuple(stack)


def _apply_box(cmp: ChargedMultipartition, box: Box, add: bool) -> ChargedMultipartition:
    comps = list(cmp.components)
    lam = list(comps[box.comp - 1])
    if add:
        comps[box.comp - 1] = add_cell(tuple(lam), box.row)
    else:
        if not (len(lam) >= box.row and lam[box.row - 1] == box.col):
            raise ValueError(f"{box} is not the outer box of its row")
        lam[box.row - 1] -= 1
        comps[box.comp - 1] = tuple(p for p in lam if p)
    return cmp.with_components(comps)


def f_tilde(
    cmp: ChargedMultipartition, i: int, modulus: Optional[int] = None
) -> Optional[ChargedMultipartition]:
    """Add the good box of residue ``i``; ``None`` when no addable box survives."""
    word = reduce_signature(signature(cmp, i, modulus))
    for entry in word:
        if entry.kind == ADDABLE:
            return _apply_box(cmp, entry.box, add=True)
    return None


def e_tilde(
    cmp: ChargedMultipartition, i: int, modulus: Optional[int] = None
) -> Optional[ChargedMultipartition]:
    """Remove the good box of residue ``i``; ``None`` when none survives."""
    word = reduce_signature(signature(cmp, i, modulus))
    last_removable = None
    for entry in word:
        if entry.kind == REMOVABLE:
            last_removable = entry.box
    if last_removable is None:
        return None
    return _apply_box(cmp, last_removable, add=False)


def dual_f_tilde(cmp: ChargedMultipartition, j: int) -> Optional[ChargedMultipartition]:
    """Lowering operator of the dual family, residue ``j`` modulo the level."""
    dual = level_rank_dual(cmp)
    out = f_tilde(dual, j)
    return None if out is None else level_rank_dual_inverse(out)


def dual_e_tilde(cmp: ChargedMultipartition, j: int) -> Optional[ChargedMultipartition]:
    """Raising operator of the dual family, residue ``j`` modulo the level."""
    dual = level_rank_dual(cmp)
    out = e_tilde(dual, j)
    return None if out is None else level_rank_dual_inverse(out)


def _modulus_for(cmp: ChargedMultipartition, algebra: Algebra) -> int:
    if algebra not in ("ue", "ul"):
        raise ValueError(f"unknown algebra {algebra!r}")
    return cmp.e if algebra == "ue" else cmp.level


def is_hw(cmp: ChargedMultipartition, algebra: Algebra) -> bool:
    """Whether every raising operator of the family is undefined."""
    if algebra == "ue":
        return all(e_tilde(cmp, i) is None for i in range(cmp.e))
    if algebra == "ul":
        dual = level_rank_dual(cmp)
        return all(e_tilde(dual, j) is None for j in range(dual.e))
    raise ValueError(f"unknown algebra {algebra!r}")


def _raise_fully(
    cmp: ChargedMultipartition,
) -> tuple[ChargedMultipartition, tuple[int, ...]]:
    """Apply raising operators (smallest residue first) until none applies.

    Returns the terminal vertex and the residues in order of application.
    """
    path = []
    current = cmp
    while True:
        for i in range(current.e):
            nxt = e_tilde(current, i)
            if nxt is not None:
                path.append(i)
                current = nxt
                break
        else:
            return current, tuple(path)


def hw_path(
    cmp: ChargedMultipartition, algebra: Algebra
) -> tuple[ChargedMultipartition, tuple[int, ...]]:
    """Greedy path to the highest weight vertex of the chosen family.

    Returns the vertex and the residue sequence in the order the raising
    operators were applied; replaying the lowering operators in reverse
    order reconstructs the input.
    """
    if algebra == "ue":
        return _raise_fully(cmp)
    if algebra == "ul":
        dual_hw, path = _raise_fully(level_rank_dual(cmp))
        return level_rank_dual_inverse(dual_hw), path
    raise ValueError(f"unknown algebra {algebra!r}")


def lower_along(
    cmp: ChargedMultipartition, residues: Iterable[int], algebra: Algebra = "ue"
) -> ChargedMultipartition:
    """Apply lowering operators for ``residues`` in order; fails on undefined."""
    if algebra == "ue":
        current = cmp
        for i in residues:
            nxt = f_tilde(current, i)
            if nxt is None:
                raise ValueError(f"lowering operator {i} undefined along replay")
            current = nxt
        return current
    if algebra == "ul":
        dual = level_rank_dual(cmp)
        dual = lower_along(dual, residues, "ue")
        return level_rank_dual_inverse(dual)
    raise ValueError(f"unknown algebra {algebra!r}")


# ---------------------------------------------------------------------------
# crystal graphs


@dataclass(frozen=True)
class CrystalEdge:
    source: ChargedMultipartition
    target: ChargedMultipartition
    label: int
    algebra: str


@dataclass
class CrystalGraph:
    """Rooted portion of a crystal graph with residue-labeled edges.

    ``nodes`` is in deterministic breadth-first order (children explored by
    ascending residue); ``ranks[k]`` lists the nodes at distance ``k`` from
    the seed layer.
    """

    algebra: str
    nodes: list[ChargedMultipartition] = field(default_factory=list)
    edges: list[CrystalEdge] = field(default_factory=list)
    ranks: list[list[ChargedMultipartition]] = field(default_factory=list)


def _lowering(algebra: Algebra):
    return f_tilde if algebra == "ue" else dual_f_tilde


def crystal_graph(
    seed: ChargedMultipartition, algebra: Algebra, depth: int
) -> CrystalGraph:
    """Breadth-first closure of the lowering operators up to ``depth`` steps."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    modulus = _modulus_for(seed, algebra)
    lower = _lowering(algebra)
    graph = CrystalGraph(algebra=algebra)
    seen = {seed}
    graph.nodes.append(seed)
    frontier = [seed]
    graph.ranks.append(list(frontier))
    for _ in range(depth):
        nxt: list[ChargedMultipartition] = []
        for node in frontier:
            for i in range(modulus):
                child = lower(node, i)
                if child is None:
                    continue
                graph.edges.append(CrystalEdge(node, child, i, algebra))
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
                    graph.nodes.append(child)
        if not nxt:
            break
        graph.ranks.append(nxt)
        frontier = nxt
    return graph


def crystal_slice(
    charges: Iterable[int], e: int, depth: int, algebra: Algebra = "ue"
) -> CrystalGraph:
    """Full crystal of a charge block restricted to at most ``depth`` boxes.

    Unlike :func:`crystal_graph` this enumerates *all* multipartitions of
    each rank, so highest weight vertices that are not reachable from the
    empty one appear as extra sources.
    """
    charges = tuple(charges)
    level = len(charges)
    graph = CrystalGraph(algebra=algebra)
    modulus = e if algebra == "ue" else level
    lower = _lowering(algebra)
    by_rank: list[list[ChargedMultipartition]] = []
    for n in range(depth + 1):
        layer = []
        for split in _compositions(n, level):
            for comps in _component_choices(split):
                layer.append(ChargedMultipartition(comps, charges, e))
        by_rank.append(layer)
        graph.nodes.extend(layer)
    graph.ranks = by_rank
    for layer in by_rank[:-1]:
        for node in layer:
            for i in range(modulus):
                child = lower(node, i)
                if child is not None:
                    graph.edges.append(CrystalEdge(node, child, i, algebra))
    return graph


def _compositions(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _component_choices(split: tuple[int, ...]):
    if not split:
        yield ()
        return
    for lam in partitions_of(split[0]):
        for rest in _component_choices(split[1:]):
            yield (lam,) + rest
