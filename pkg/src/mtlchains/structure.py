"""Structural analysis of a chain: idempotents, local units, filters,
quotients and idempotent scaling."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Chain, make_chain
from .errors import NotAFilter, NotIdempotent, OutOfRange, TrivialChain


@dataclass(frozen=True)
class Filter:
    """The up-set ``[least, top]`` of ``parent``; ``least`` is idempotent."""

    parent: Chain
    least: int

    @property
    def elements(self) -> range:
        return range(self.least, self.parent.size)

    @property
    def proper(self) -> bool:
        return self.least != 0

    def __contains__(self, x: int) -> bool:
        return x >= self.least


@dataclass(frozen=True)
class ArchStatus:
    archimedean: bool
    simple: bool
    idempotents_trivial: bool

    @property
    def consistent(self) -> bool:
        return self.archimedean == self.simple == self.idempotents_trivial


@dataclass(frozen=True)
class Quotient:
    algebra: Chain
    projection: tuple[int, ...]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.algebra.size)]
        for x, q in enumerate(self.projection):
            out[q].append(x)
        return out


def _check_index(c: Chain, x: int) -> None:
    if not 0 <= x < c.size:
        raise OutOfRange(f"index {x} outside 0..{c.size - 1}")


def idempotents(c: Chain) -> list[int]:
    return [a for a in range(c.size) if c.mul(a, a) == a]


def local_units(c: Chain) -> list[int]:
    return [e for e in idempotents(c)
            if e != 0 and all(c.mul(e, x) == x for x in range(e + 1))]


def is_locally_unital(c: Chain) -> bool:
    # the (LU) quasi-identity, evaluated directly
    for e in range(c.size):
        if c.mul(e, e) != e:
            continue
        for x in range(e + 1):
            if c.mul(e, x) != x:
                return False
    return True


def non_local_unit_idempotent(c: Chain):
    """Least nonzero idempotent that is not a local unit, or None."""
    lu = set(local_units(c))
    for e in idempotents(c):
        if e != 0 and e not in lu:
            return e
    return None


def is_upset_filter(c: Chain, least: int) -> bool:
    """Whether the up-set of ``least`` is closed under the product."""
    return all(c.mul(x, y) >= least
               for x in range(least, c.size) for y in range(x, c.size))


def _is_archimedean(c: Chain) -> bool:
    for y in range(c.size - 1):
        for x in range(y + 1):
            p = y
            for _ in range(c.size):
                if p <= x:
                    break
                p = c.mul(p, y)
            if p > x:
                return False
    return True


def archimedean_status(c: Chain) -> ArchStatus:
    if c.size < 2:
        raise TrivialChain("archimedean status needs at least two elements")
    simple = not any(is_upset_filter(c, a) for a in range(1, c.size - 1))
    trivial = idempotents(c) == [0, c.top]
    return ArchStatus(_is_archimedean(c), simple, trivial)


def make_filter(c: Chain, least: int) -> Filter:
    _check_index(c, least)
    if c.mul(least, least) != least:
        raise NotAFilter(f"up-set of {least} is not closed under product",
                         {"least": least})
    return Filter(c, least)


def generated_filter(c: Chain, x: int) -> Filter:
    _check_index(c, x)
    p = x
    while True:
        q = c.mul(p, x)
        if q == p:
            return Filter(c, p)
        p = q


def all_filters(c: Chain) -> list[Filter]:
    return [Filter(c, e) for e in reversed(idempotents(c))]


def is_prime(c: Chain, f: Filter) -> bool:
    if 0 in f:
        return False
    return all(x in f or y in f
               for x in range(c.size) for y in range(c.size) if c.join(x, y) in f)


def quotient(c: Chain, f: Filter) -> Quotient:
    """Quotient by the congruence a ~ b iff a->b and b->a lie in ``f``.

    Classes are convex on a chain and are numbered by their minimum.
    """
    n = c.size
    rep = [-1] * n
    for a in range(n):
        if rep[a] >= 0:
            continue
        for b in range(a, n):
            if c.imp(a, b) in f and c.imp(b, a) in f:
                rep[b] = a
    mins = sorted(set(rep))
    index = {m: k for k, m in enumerate(mins)}
    proj = tuple(index[rep[a]] for a in range(n))
    for a in range(1, n):
        if proj[a] < proj[a - 1]:
            raise AssertionError("congruence classes are not convex")
    table = [[proj[c.mul(a, b)] for b in mins] for a in mins]
    return Quotient(make_chain(len(mins), table), proj)


def scale(c: Chain, e: int) -> Chain:
    """The chain eM = {e*x} with unit e, re-indexed ascending."""
    _check_index(c, e)
    if c.mul(e, e) != e:
        raise NotIdempotent(f"{e} is not idempotent", {"e": e})
    carrier = sorted({c.mul(e, x) for x in range(c.size)})
    index = {v: k for k, v in enumerate(carrier)}
    return make_chain(len(carrier),
                      [[index[c.mul(a, b)] for b in carrier] for a in carrier])


def up_set_chain(c: Chain, e: int) -> Chain:
    """The filter ``[e, top]`` as a chain in its own right (a subalgebra of
    the semihoop reduct); ``e`` becomes index 0."""
    _check_index(c, e)
    if not is_upset_filter(c, e):
        raise NotAFilter(f"up-set of {e} is not closed under product", {"least": e})
    carrier = range(e, c.size)
    return make_chain(len(carrier), [[c.mul(a, b) - e for b in carrier] for a in carrier])


def analysis_report(c: Chain) -> dict:
    doc = {
        "idempotents": idempotents(c),
        "local_units": local_units(c),
        "locally_unital": is_locally_unital(c),
        "archimedean": None,
        "simple": None,
        "filters": [f.least for f in all_filters(c)],
    }
    if c.size >= 2:
        st = archimedean_status(c)
        doc["archimedean"] = st.archimedean
        doc["simple"] = st.simple
    return doc
