"""Homomorphisms of chains and split short exact sequences

    0 -> F --j--> E --p--> A -> 0,   s: A -> E,  p.s = id

in the category of semihoops, where the zero object is the one-element
algebra {1}.  Exactness is checked concretely: ``image(j) == p^-1(1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import Chain, chain_from_dict
from .errors import NotExact, OutOfRange
from .structure import Filter, quotient, up_set_chain

HOM_ITEMS = ("in_range", "unit", "product", "residuum", "bottom", "meet", "join", "order")


@dataclass(frozen=True)
class Hom:
    source: Chain
    target: Chain
    mapping: tuple[int, ...]
    preserve_bottom: bool = False

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image(self) -> set[int]:
        return set(self.mapping)


def hom(source: Chain, target: Chain, mapping: Sequence[int], preserve_bottom: bool = False) -> Hom:
    return Hom(source, target, tuple(mapping), preserve_bottom)


@dataclass
class HomReport:
    in_range: bool = True
    unit: bool = True
    product: bool = True
    residuum: bool = True
    bottom: bool = True
    meet: bool = True
    join: bool = True
    order: bool = True
    witnesses: dict[str, list[int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(getattr(self, k) for k in HOM_ITEMS)

    def to_dict(self) -> dict:
        doc = {k: getattr(self, k) for k in HOM_ITEMS}
        doc["ok"] = self.ok
        doc["witnesses"] = dict(self.witnesses)
        return doc


def check_hom(h: Hom) -> HomReport:
    src, tgt, m = h.source, h.target, h.mapping
    rep = HomReport()

    def fail(name, witness):
        if getattr(rep, name):
            setattr(rep, name, False)
            rep.witnesses[name] = list(witness)

    if len(m) != src.size or any(not 0 <= v < tgt.size for v in m):
        fail("in_range", [len(m), src.size])
        for k in HOM_ITEMS[1:]:
            setattr(rep, k, False)
        return rep
    if m[src.top] != tgt.top:
        fail("unit", [src.top])
    if h.preserve_bottom and m[0] != 0:
        fail("bottom", [0])
    for x in range(src.size):
        for y in range(src.size):
            if m[src.mul(x, y)] != tgt.mul(m[x], m[y]):
                fail("product", (x, y))
            if m[src.imp(x, y)] != tgt.imp(m[x], m[y]):
                fail("residuum", (x, y))
            if m[src.meet(x, y)] != tgt.meet(m[x], m[y]):
                fail("meet", (x, y))
            if m[src.join(x, y)] != tgt.join(m[x], m[y]):
                fail("join", (x, y))
            if x <= y and m[x] > m[y]:
                fail("order", (x, y))
    return rep


@dataclass(frozen=True)
class SplitSequence:
    F: Chain
    E: Chain
    A: Chain
    j: tuple[int, ...]
    p: tuple[int, ...]
    s: tuple[int, ...]

    def homs(self) -> tuple[Hom, Hom, Hom]:
        return (Hom(self.F, self.E, self.j), Hom(self.E, self.A, self.p),
                Hom(self.A, self.E, self.s))

    def to_dict(self) -> dict:
        return {"F": self.F.to_dict(), "E": self.E.to_dict(), "A": self.A.to_dict(),
                "j": list(self.j), "p": list(self.p), "s": list(self.s)}


def sequence_from_dict(doc: dict) -> SplitSequence:
    try:
        return SplitSequence(chain_from_dict(doc["F"]), chain_from_dict(doc["E"]),
                             chain_from_dict(doc["A"]), tuple(doc["j"]), tuple(doc["p"]),
                             tuple(doc["s"]))
    except (KeyError, TypeError) as exc:
        raise OutOfRange(f"malformed sequence document: {exc}") from None


@dataclass
class ExactnessReport:
    j_injective_hom: bool
    p_surjective_hom: bool
    kernel: bool
    section: bool
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.j_injective_hom and self.p_surjective_hom and self.kernel and self.section

    def to_dict(self) -> dict:
        return {"j_injective_hom": self.j_injective_hom,
                "p_surjective_hom": self.p_surjective_hom,
                "kernel": self.kernel, "section": self.section, "ok": self.ok,
                "details": self.details}


def check_split_exact(seq: SplitSequence) -> ExactnessReport:
    hj, hp, hs = seq.homs()
    rj, rp, rs = check_hom(hj), check_hom(hp), check_hom(hs)
    details = {"j": rj.to_dict(), "p": rp.to_dict(), "s": rs.to_dict()}
    j_ok = rj.ok and len(set(seq.j)) == len(seq.j)
    p_ok = rp.ok and set(seq.p) == set(range(seq.A.size))
    kernel = False
    if rj.in_range and rp.in_range:
        kernel = set(seq.j) == {x for x in range(seq.E.size) if seq.p[x] == seq.A.top}
    section = rs.ok and rp.in_range and all(seq.p[seq.s[a]] == a for a in range(seq.A.size))
    return ExactnessReport(j_ok, p_ok, kernel, section, details)


def ordinal_extension_test(seq: SplitSequence) -> bool:
    """Whether E is covered by the images of j and s, meeting only in 1."""
    rep = check_split_exact(seq)
    if not rep.ok:
        raise NotExact("sequence is not split exact", rep.to_dict())
    jk, sc = set(seq.j), set(seq.s)
    return jk | sc == set(range(seq.E.size)) and jk & sc == {seq.E.top}


def minimum_section(q_projection: Sequence[int], a_size: int, e_top: int) -> tuple[int, ...]:
    """Each class goes to its minimum, except the unit class, which goes to 1."""
    s = [-1] * a_size
    for x, cls in enumerate(q_projection):
        if s[cls] < 0:
            s[cls] = x
    s[a_size - 1] = e_top
    return tuple(s)


def canonical_sequence(E: Chain, f: Filter) -> SplitSequence:
    """The sequence F -> E -> E/F with inclusion, quotient map and the
    minimum section."""
    q = quotient(E, f)
    F = up_set_chain(E, f.least)
    j = tuple(range(f.least, E.size))
    s = minimum_section(q.projection, q.algebra.size, E.top)
    return SplitSequence(F, E, q.algebra, j, q.projection, s)
