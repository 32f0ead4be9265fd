"""Exhaustive generation of finite MTL-chains and machine checks of the
structural claims over the enumerated universe.

The carrier order is rigid (the only order automorphism of a finite chain
is the identity), so distinct tables are pairwise non-isomorphic and no
canonical-form deduplication is needed.

Search: the free cells are ``(a, b)`` with ``1 <= a <= b <= n-2``, filled
row by row in increasing value order, which yields tables in row-major
lexicographic order.  A value is bounded below by its left and upper
neighbours (monotonicity) and above by ``a`` (integrality); associativity
is checked on every triple that becomes fully determined.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Optional

from .core import Chain
from .structure import archimedean_status, idempotents, is_locally_unital

TAGS = ("archimedean", "simple", "trivial_idempotents", "locally_unital", "idempotent_product")


def _cells(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(1, n - 1) for b in range(a, n - 1)]


def _initial(n: int) -> list[list[int]]:
    t = [[-1] * n for _ in range(n)]
    for a in range(n):
        t[0][a] = t[a][0] = 0
        t[n - 1][a] = t[a][n - 1] = a
    return t


def _assoc_ok(t: list[list[int]], n: int, a: int, b: int) -> bool:
    """Check every now-determined triple that uses the product a*b."""

    def triple(x, y, z):
        xy = t[x][y]
        if xy < 0:
            return True
        left = t[xy][z]
        yz = t[y][z]
        if left < 0 or yz < 0:
            return True
        right = t[x][yz]
        return right < 0 or left == right

    v = t[a][b]
    for z in range(n):
        if not (triple(a, b, z) and triple(b, a, z) and triple(z, a, b) and triple(z, b, a)):
            return False
    # triples where a*b (or its factors) feed the outer product
    for x in range(n):
        row = t[x]
        for y in range(n):
            xy = row[y]
            if xy == a or xy == b or xy == v:
                for z in (a, b, v):
                    if not triple(x, y, z):
                        return False
    return True


def _search(n: int, t: list[list[int]], cells, pos: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    if pos == len(cells):
        yield tuple(tuple(row) for row in t)
        return
    a, b = cells[pos]
    lo = max(t[a][b - 1], t[a - 1][b])
    hi = a
    for v in range(lo, hi + 1):
        t[a][b] = t[b][a] = v
        if _assoc_ok(t, n, a, b):
            yield from _search(n, t, cells, pos + 1)
    t[a][b] = t[b][a] = -1


def _tables(n: int, prefix: Optional[tuple[int, ...]] = None):
    if n <= 2:
        yield tuple(tuple(row) for row in _initial(n))
        return
    cells = _cells(n)
    t = _initial(n)
    start = 0
    if prefix is not None:
        for (a, b), v in zip(cells, prefix):
            t[a][b] = t[b][a] = v
        start = len(prefix)
    yield from _search(n, t, cells, start)


def _row_prefixes(n: int) -> list[tuple[int, ...]]:
    """All consistent assignments of the first free row, in search order."""
    cells = _cells(n)
    width = n - 2
    t = _initial(n)
    out = []

    def rec(pos):
        if pos == width:
            out.append(tuple(t[1][b] for b in range(1, n - 1)))
            return
        a, b = cells[pos]
        for v in range(max(t[a][b - 1], t[a - 1][b]), a + 1):
            t[a][b] = t[b][a] = v
            if _assoc_ok(t, n, a, b):
                rec(pos + 1)
        t[a][b] = t[b][a] = -1

    rec(0)
    return out


def _collect(args):
    n, prefix = args
    return list(_tables(n, prefix))


def enumerate_chains(n: int, workers: int = 1) -> Iterator[Chain]:
    """Every MTL-chain of size ``n`` exactly once, lexicographic in the table.

    With ``workers > 1`` the search is split by the first free row and the
    parts are merged back in prefix order, so the output is identical.
    """
    if n < 1:
        raise ValueError("size must be >= 1")
    if workers <= 1 or n <= 3:
        for t in _tables(n):
            yield Chain(n, t)
        return
    prefixes = _row_prefixes(n)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_collect, [(n, p) for p in prefixes]):
            for t in part:
                yield Chain(n, t)


def classify(c: Chain) -> set[str]:
    tags = set()
    if c.size >= 2:
        st = archimedean_status(c)
        if st.archimedean:
            tags.add("archimedean")
        if st.simple:
            tags.add("simple")
        if st.idempotents_trivial:
            tags.add("trivial_idempotents")
    if is_locally_unital(c):
        tags.add("locally_unital")
    if len(idempotents(c)) == c.size:
        tags.add("idempotent_product")
    return tags
