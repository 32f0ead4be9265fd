"""Ordinal sums and the archimedean decomposition of locally unital chains.

Arguments are always listed bottom to top.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import ZERO, Chain, chain_from_dict, make_chain
from .errors import NotLocallyUnital, TrivialChain
from .structure import local_units, non_local_unit_idempotent, scale, up_set_chain

__all__ = ["Decomposition", "ordinal_sum", "decompose", "up_set_chain"]


@dataclass(frozen=True)
class Decomposition:
    components: tuple[Chain, ...]
    boundaries: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"components": [c.to_dict() for c in self.components],
                "boundaries": list(self.boundaries)}


def decomposition_from_dict(doc: dict) -> Decomposition:
    return Decomposition(tuple(chain_from_dict(c) for c in doc["components"]),
                         tuple(doc["boundaries"]))


def ordinal_sum(components: Sequence[Chain]) -> Chain:
    """Stack the non-unit parts of the components and share one top.

    Within a component the product is the component's own; across
    components the element of the lower component wins.  One-element
    components are neutral and dropped.
    """
    parts = [c for c in components if c.size > 1]
    if not parts:
        return ZERO
    # global index -> (component, local index); the shared top is appended last
    where: list[tuple[int, int]] = []
    for k, c in enumerate(parts):
        where.extend((k, x) for x in range(c.size - 1))
    offsets, acc = [], 0
    for c in parts:
        offsets.append(acc)
        acc += c.size - 1
    n = acc + 1
    top = n - 1

    def glob(k: int, x: int) -> int:
        return top if x == parts[k].top else offsets[k] + x

    table = [[0] * n for _ in range(n)]
    for g in range(n):
        for h in range(n):
            if g == top:
                table[g][h] = h
            elif h == top:
                table[g][h] = g
            else:
                (kg, xg), (kh, xh) = where[g], where[h]
                if kg == kh:
                    table[g][h] = glob(kg, parts[kg].mul(xg, xh))
                else:
                    table[g][h] = g if kg < kh else h
    return make_chain(n, table)


def decompose(c: Chain) -> Decomposition:
    """Peel archimedean pieces off the top, largest non-unit local unit first."""
    if c.size < 2:
        raise TrivialChain("cannot decompose the one-element chain")
    bad = non_local_unit_idempotent(c)
    if bad is not None:
        raise NotLocallyUnital(f"idempotent {bad} is not a local unit", {"e": bad})
    boundaries = tuple(local_units(c))
    pieces: list[Chain] = []
    cur = c
    while True:
        units = local_units(cur)
        if len(units) == 1:
            pieces.append(cur)
            break
        e = units[-2]
        pieces.append(up_set_chain(cur, e))
        cur = scale(cur, e)
    return Decomposition(tuple(reversed(pieces)), boundaries)
