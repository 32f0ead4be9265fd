"""Finite MTL-chains as product tables.

A chain of size ``n`` lives on the indices ``0..n-1`` in their natural
order: 0 is the bottom, ``n-1`` the top and monoid unit.  Only the product
is stored; the residuum, meet and join are derived from it.

On a finite chain residuation is equivalent to monotonicity of the
product (the residuum ``x -> y`` is then ``max{z : x*z <= y}``), and
prelinearity holds automatically, so the axioms to check reduce to unit,
bottom, commutativity, associativity and monotonicity.  Checking is
exhaustive and costs O(n^3).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .errors import AxiomViolation, OutOfRange

Table = tuple[tuple[int, ...], ...]

AXIOMS = ("unit", "bottom", "commutative", "associative", "monotone")


@dataclass
class AxiomReport:
    """Itemized axiom check.  ``witnesses`` holds the first failing
    pair/triple (in lexicographic scan order) for each failed axiom."""

    unit: bool = True
    bottom: bool = True
    commutative: bool = True
    associative: bool = True
    monotone: bool = True
    witnesses: dict[str, list[int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(getattr(self, name) for name in AXIOMS)

    def failures(self) -> list[str]:
        return [name for name in AXIOMS if not getattr(self, name)]

    def to_dict(self) -> dict:
        doc = {name: getattr(self, name) for name in AXIOMS}
        doc["ok"] = self.ok
        doc["witnesses"] = dict(self.witnesses)
        return doc


def _normalize(n: int, table) -> Table:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise OutOfRange(f"size must be a positive integer, got {n!r}")
    try:
        rows = [list(row) for row in table]
    except TypeError:
        raise OutOfRange("table must be a list of rows") from None
    if len(rows) != n or any(len(row) != n for row in rows):
        raise OutOfRange(f"table must be {n}x{n}")
    for a, row in enumerate(rows):
        for b, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise OutOfRange(f"entry ({a},{b}) = {v!r} not in 0..{n - 1}",
                                 {"cell": [a, b]})
    return tuple(tuple(row) for row in rows)


def check_axioms(n: int, table) -> AxiomReport:
    t = _normalize(n, table)
    top = n - 1
    rep = AxiomReport()

    def fail(name, witness):
        if getattr(rep, name):
            setattr(rep, name, False)
            rep.witnesses[name] = list(witness)

    for a in range(n):
        if t[top][a] != a or t[a][top] != a:
            fail("unit", (top, a) if t[top][a] != a else (a, top))
        if t[0][a] != 0 or t[a][0] != 0:
            fail("bottom", (0, a) if t[0][a] != 0 else (a, 0))
    for a in range(n):
        for b in range(a + 1, n):
            if t[a][b] != t[b][a]:
                fail("commutative", (a, b))
    # adjacent comparisons suffice for monotonicity on a chain
    for a in range(n - 1):
        for b in range(n):
            if t[a][b] > t[a + 1][b]:
                fail("monotone", (a, a + 1, b))
            if t[b][a] > t[b][a + 1]:
                fail("monotone", (b, a, a + 1))
    for a in range(n):
        row_a = t[a]
        for b in range(n):
            ab = row_a[b]
            row_b = t[b]
            for c in range(n):
                if t[ab][c] != row_a[row_b[c]]:
                    fail("associative", (a, b, c))
                    break
            if not rep.associative:
                break
        if not rep.associative:
            break
    return rep


@dataclass(frozen=True, eq=True)
class Chain:
    """A validated finite MTL-chain.  Build with :func:`make_chain`."""

    size: int
    product: Table

    @property
    def top(self) -> int:
        return self.size - 1

    def mul(self, x: int, y: int) -> int:
        return self.product[x][y]

    @cached_property
    def residuum_table(self) -> Table:
        n = self.size
        rows = []
        for x in range(n):
            row_x = self.product[x]
            rows.append(tuple(max(z for z in range(n) if row_x[z] <= y) for y in range(n)))
        return tuple(rows)

    def imp(self, x: int, y: int) -> int:
        return self.residuum_table[x][y]

    @staticmethod
    def meet(x: int, y: int) -> int:
        return min(x, y)

    @staticmethod
    def join(x: int, y: int) -> int:
        return max(x, y)

    def power(self, x: int, k: int) -> int:
        r = self.top
        for _ in range(k):
            r = self.product[r][x]
        return r

    def to_dict(self) -> dict:
        return {"size": self.size, "product": [list(row) for row in self.product]}

    def __repr__(self) -> str:
        return f"Chain({self.size}, {[list(r) for r in self.product]})"


def make_chain(n: int, table) -> Chain:
    t = _normalize(n, table)
    report = check_axioms(n, t)
    if not report.ok:
        raise AxiomViolation(report)
    return Chain(n, t)


def residuum(c: Chain, x: int, y: int) -> int:
    if not (0 <= x < c.size and 0 <= y < c.size):
        raise OutOfRange(f"({x},{y}) outside 0..{c.size - 1}")
    return c.imp(x, y)


def isomorphism(a: Chain, b: Chain) -> Optional[list[int]]:
    """The only order bijection between chains of equal size is the
    identity on indices; return it if it is multiplicative."""
    if a.size != b.size or a.product != b.product:
        return None
    return list(range(a.size))


def are_isomorphic(a: Chain, b: Chain) -> bool:
    return isomorphism(a, b) is not None


def chain_from_dict(doc: dict) -> Chain:
    if not isinstance(doc, dict) or "size" not in doc or "product" not in doc:
        raise OutOfRange("chain document needs 'size' and 'product'")
    return make_chain(doc["size"], doc["product"])


def chain_from_json(text: str) -> Chain:
    return chain_from_dict(json.loads(text))


def chain_to_json(c: Chain) -> str:
    return json.dumps(c.to_dict())


def min_chain(n: int) -> Chain:
    """Minimum t-norm (Goedel chain) on n elements."""
    return make_chain(n, [[min(a, b) for b in range(n)] for a in range(n)])


def lukasiewicz_chain(n: int) -> Chain:
    """Lukasiewicz t-norm max(0, x+y-1) on {0, 1/(n-1), ..., 1}."""
    return make_chain(n, [[max(0, a + b - (n - 1)) for b in range(n)] for a in range(n)])


def format_table(c: Chain, which: str = "product") -> str:
    """Aligned text rendering of the product or residuum table."""
    table = c.product if which == "product" else c.residuum_table
    sym = "*" if which == "product" else "->"
    w = max(len(str(c.size - 1)), len(sym))
    lines = [f"{sym:>{w}} | " + " ".join(f"{b:>{w}}" for b in range(c.size))]
    lines.append("-" * len(lines[0]))
    for a, row in enumerate(table):
        lines.append(f"{a:>{w}} | " + " ".join(f"{v:>{w}}" for v in row))
    return "\n".join(lines)


ZERO = make_chain(1, [[0]])
TWO = make_chain(2, [[0, 0], [0, 1]])

