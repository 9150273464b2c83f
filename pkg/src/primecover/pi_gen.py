"""Prime implicants covering one minterm, from its difference indicators.

Each minimal difference indicator is a clause: the disjunction of the
variables at its 1-positions.  Multiplying the clauses out and absorbing
redundant products yields one literal-position vector per prime
implicant; fixing the literal values from the minterm turns each vector
into the cube itself.  Absorption runs after every clause so the working
set stays small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitcube import BitVec, Cube, cube_text
from .errors import EmptyOffset
from .reduced_offset import DiSet, generate_sdm


def generate_m(D: BitVec) -> list[BitVec]:
    """Split an indicator into its one-hot projections, lowest bit first."""
    if D.value == 0:
        raise ValueError("zero difference indicator has no clause")
    out: list[BitVec] = []
    v = D.value
    while v:
        rest = v & (v - 1)
        out.append(BitVec(D.width, v ^ rest))
        v = rest
    return out


def minimize_n(vectors: Sequence[BitVec]) -> list[BitVec]:
    """Remove strict supersets (by ones) and later duplicates."""
    kept: list[BitVec] = []
    for i, v in enumerate(vectors):
        redundant = False
        for j, u in enumerate(vectors):
            if j == i:
                continue
            if u.value == v.value:
                if j < i:
                    redundant = True
                    break
                continue
            if u.value & v.value == u.value:
                redundant = True
                break
        if not redundant:
            kept.append(v)
    return kept


def cross_or(n_vectors: Sequence[BitVec], m_vectors: Sequence[BitVec]) -> list[BitVec]:
    """All pairwise ORs of the two sets, minimized; one expansion step."""
    if not n_vectors:
        raise ValueError("vector set must be seeded with the all-zeros vector")
    if not m_vectors:
        raise ValueError("clause set must be nonempty")
    products = [e | v for e in n_vectors for v in m_vectors]
    return minimize_n(products)


@dataclass(frozen=True)
class NStep:
    """One clause expansion, recorded when tracing."""

    di: BitVec
    clauses: tuple[BitVec, ...]
    vectors: tuple[BitVec, ...]


def generate_n(
    dis: Iterable[BitVec] | DiSet,
    *,
    trace: list[NStep] | None = None,
) -> list[BitVec]:
    """Fold every indicator's clause into the literal-position vectors."""
    seq = list(dis)
    if not seq:
        raise ValueError("need at least one difference indicator")
    if any(d.value == 0 for d in seq):
        raise ValueError("zero difference indicator")
    n_vectors = [BitVec.zeros(seq[0].width)]
    for d in seq:
        clauses = generate_m(d)
        n_vectors = cross_or(n_vectors, clauses)
        if trace is not None:
            trace.append(NStep(di=d, clauses=tuple(clauses), vectors=tuple(n_vectors)))
    return n_vectors


def vectors_to_pis(P: BitVec, vectors: Sequence[BitVec]) -> list[Cube]:
    """Materialise one cube per literal-position vector, values taken from P."""
    out: list[Cube] = []
    for e in vectors:
        inv = ~e
        out.append(Cube((~P) | inv, P | inv))
    return out


def generate_spi(
    P: BitVec,
    off_cubes: Sequence[Cube | BitVec],
    *,
    trace: list | None = None,
) -> list[Cube]:
    """All prime implicants covering ``P``, sorted by cube text.

    The function minimized is the complement of the off-set; an empty
    off-set therefore yields the single universal cube.
    """
    try:
        sdm = generate_sdm(P, list(off_cubes), trace=trace)
    except EmptyOffset:
        return [Cube.universal(P.width)]
    vectors = generate_n(sdm.elements)
    return sorted(vectors_to_pis(P, vectors), key=cube_text)
