"""Reduced-offset machinery in difference-indicator form.

For a chosen on-minterm P, each off-cube Z reduces to the cube keeping
exactly the literals of Z that oppose P.  A single n-bit vector per
reduced cube suffices: bit i set means variable i appears there (with
the complement of p_i), bit i clear means the position is a don't care.
``generate_sdm`` folds a whole off-set into the absorption-minimal set
of such difference indicators without ever materialising the unreduced
offset.

Polarity runs opposite to cube size: more 1-bits means more literals and
a smaller cube, so vector s absorbs vector d exactly when the ones of s
are a subset of the ones of d.

``reduce_off_cube``, ``derive_rc`` and ``minimize_sr`` form a slower
reference path over explicit cubes, kept for cross-validation of the
vector path.
"""

from __future__ import annotations

import bisect
import logging
from dataclasses import dataclass, field

from .bitcube import BitVec, Cube, cube_contains, minterm_to_cube
from .errors import EmptyOffset, InconsistentFunction

log = logging.getLogger(__name__)

DiffIndicator = BitVec


@dataclass
class DiSet:
    """Absorption-minimal difference indicators plus fold statistics.

    Elements are kept sorted ascending by value; the fold below scans in
    that order, which fixes the comparison counts deterministically.
    """

    elements: list[BitVec] = field(default_factory=list)
    comparisons: int = 0
    absorptions: int = 0

    def __post_init__(self) -> None:
        self.elements = sorted(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def width(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no width")
        return self.elements[0].width

    def as_set(self) -> frozenset[BitVec]:
        return frozenset(self.elements)


def _as_cube(z: Cube | BitVec) -> Cube:
    return minterm_to_cube(z) if isinstance(z, BitVec) else z


def generate_di(P: BitVec, Z: Cube | BitVec) -> BitVec:
    """Difference indicator of the off-cube ``Z`` with respect to minterm ``P``.

    Bit i is set when variable i is specified in Z with a value different
    from p_i.  For a minterm Z this degenerates to plain XOR.  A zero
    result means P lies inside Z, which contradicts P being an on-minterm.
    """
    Z = _as_cube(Z)
    if Z.empty:
        raise ValueError("difference indicator of an empty cube")
    if P.width != Z.width:
        raise ValueError(f"width mismatch: {P.width} vs {Z.width}")
    d = (P.value ^ Z.right.value) & Z.specified_mask
    if d == 0:
        raise InconsistentFunction(
            f"minterm {P} is contained in off-cube {Z}"
        )
    return BitVec(P.width, d)


def reform_sdm(S: DiSet, D: BitVec) -> DiSet:
    """Fold one difference indicator into the minimal set, in place.

    If some element absorbs ``D`` the set is unchanged; otherwise every
    element absorbed by ``D`` is removed and ``D`` is inserted.  Each
    element examined counts as one comparison; every vector dropped
    (including ``D`` itself) counts as one absorption.
    """
    if D.value == 0:
        raise ValueError("zero difference indicator")
    if S.elements and S.elements[0].width != D.width:
        raise ValueError(f"width mismatch: {S.elements[0].width} vs {D.width}")
    dv = D.value
    removed: list[int] = []
    for idx, s in enumerate(S.elements):
        S.comparisons += 1
        a = s.value & dv
        if a == s.value:
            S.absorptions += 1
            return S
        if a == dv:
            removed.append(idx)
    for idx in reversed(removed):
        del S.elements[idx]
    S.absorptions += len(removed)
    bisect.insort(S.elements, D)
    return S


@dataclass(frozen=True)
class SdmStep:
    """One fold step, recorded when tracing."""

    index: int
    off_cube: Cube
    di: BitVec
    comparisons: int
    absorbed: int
    elements: tuple[BitVec, ...]


def generate_sdm(
    P: BitVec,
    off_cubes: "list[Cube | BitVec] | tuple[Cube | BitVec, ...]",
    *,
    trace: list[SdmStep] | None = None,
) -> DiSet:
    """Minimal difference-indicator set of ``P`` against the whole off-set.

    Seeds the all-ones sentinel, then folds one indicator per off-cube.
    Raises ``EmptyOffset`` for an empty off-set (the caller maps that to
    the universal cube) and propagates ``InconsistentFunction`` when P
    lies inside some off-cube.
    """
    off = [_as_cube(z) for z in off_cubes]
    if not off:
        raise EmptyOffset("off-set is empty; every point is coverable by the universal cube")
    S = DiSet([BitVec.ones(P.width)])
    for j, Z in enumerate(off, start=1):
        D = generate_di(P, Z)
        before = (S.comparisons, S.absorptions)
        reform_sdm(S, D)
        if trace is not None:
            trace.append(
                SdmStep(
                    index=j,
                    off_cube=Z,
                    di=D,
                    comparisons=S.comparisons - before[0],
                    absorbed=S.absorptions - before[1],
                    elements=tuple(S.elements),
                )
            )
    log.debug(
        "di set width %d for %d inputs (empirical bound 2.5n = %.1f)",
        len(S.elements),
        P.width,
        2.5 * P.width,
    )
    return S


def reduce_off_cube(P: BitVec, Z: Cube | BitVec) -> Cube:
    """Reference path: reduce one off-cube against ``P`` positionwise.

    Keeps z_i exactly where it is specified and opposes p_i; every other
    position becomes a don't care.  A fully-x result is legal here; the
    vector path rejects it instead.
    """
    Z = _as_cube(Z)
    if Z.empty:
        raise ValueError("cannot reduce an empty cube")
    if P.width != Z.width:
        raise ValueError(f"width mismatch: {P.width} vs {Z.width}")
    full = (1 << P.width) - 1
    kept = (P.value ^ Z.right.value) & Z.specified_mask
    drop = ~kept & full
    return Cube(
        BitVec(P.width, Z.left.value | drop),
        BitVec(P.width, Z.right.value | drop),
    )


def derive_rc(P: BitVec, D: BitVec) -> Cube:
    """Reference path: expand a difference indicator back into its reduced cube."""
    if P.width != D.width:
        raise ValueError(f"width mismatch: {P.width} vs {D.width}")
    inv = ~D
    return Cube(P | inv, ~P | inv)


def minimize_sr(cubes: "list[Cube] | tuple[Cube, ...]") -> list[Cube]:
    """Drop every cube contained in another one; duplicates keep the first."""
    seq = list(cubes)
    kept: list[Cube] = []
    for i, c in enumerate(seq):
        redundant = False
        for j, other in enumerate(seq):
            if j == i:
                continue
            if other == c:
                if j < i:
                    redundant = True
                    break
                continue
            if cube_contains(other, c):
                redundant = True
                break
        if not redundant:
            kept.append(c)
    return kept
