"""Generalized chain products.

A spec consists of an index chain ``A``, a top chain ``F``, one block
(a bare finite chain, given by its size) per index of ``A`` with the block
at the top index carrying ``F``, and block-local multiplication tables
``mu[(i, j)]: C_i x C_j -> C_{i*j}``.  Block-local index 0 is the block
minimum.  Assembly stacks the blocks in the order of ``A``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import Chain, chain_from_dict, check_axioms, make_chain, min_chain
from .errors import (AssembledNotMTL, ComponentTooSmall, ConditionsFailed, EmptyFamily,
                     MalformedSpec, NotAFilter)
from .homs import SplitSequence
from .structure import Filter, quotient, up_set_chain

MuTable = tuple[tuple[int, ...], ...]

CONDITIONS = ("blocks_wellformed", "monotone", "zero_annihilation", "jointly_associative",
              "jointly_commutative", "global_unit")


@dataclass(frozen=True)
class GcpSpec:
    index_algebra: Chain
    filter: Chain
    blocks: tuple[int, ...]
    mu: dict[tuple[int, int], MuTable] = field(hash=False, compare=True)

    @property
    def top_index(self) -> int:
        return self.index_algebra.top

    def offsets(self) -> list[int]:
        return list(itertools.accumulate((0,) + self.blocks[:-1]))

    def to_dict(self) -> dict:
        return {
            "index_algebra": self.index_algebra.to_dict(),
            "filter": self.filter.to_dict(),
            "blocks": list(self.blocks),
            "mu": {f"{i},{j}": [list(r) for r in t] for (i, j), t in sorted(self.mu.items())},
        }


def gcp_from_dict(doc: dict) -> GcpSpec:
    try:
        mu = {}
        for key, table in doc["mu"].items():
            i, j = (int(s) for s in key.split(","))
            mu[(i, j)] = tuple(tuple(row) for row in table)
        return GcpSpec(chain_from_dict(doc["index_algebra"]), chain_from_dict(doc["filter"]),
                       tuple(doc["blocks"]), mu)
    except (KeyError, ValueError, TypeError, AttributeError) as exc:
        raise MalformedSpec(f"malformed GCP document: {exc}") from None


@dataclass
class ConditionReport:
    blocks_wellformed: bool = True
    monotone: bool = True
    zero_annihilation: bool = True
    zero_annihilation_weak: bool = True
    jointly_associative: bool = True
    jointly_commutative: bool = True
    global_unit: bool = True
    assembled_mtl: Optional[bool] = None
    witnesses: dict[str, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Conditions (i)-(v) with strict zero annihilation."""
        return all(getattr(self, k) for k in CONDITIONS)

    def failures(self) -> list[str]:
        out = [k for k in CONDITIONS if not getattr(self, k)]
        if not self.zero_annihilation_weak:
            out.append("zero_annihilation_weak")
        if self.assembled_mtl is False:
            out.append("assembled_mtl")
        return out

    def to_dict(self) -> dict:
        doc = {k: getattr(self, k) for k in CONDITIONS}
        doc["zero_annihilation_weak"] = self.zero_annihilation_weak
        doc["assembled_mtl"] = self.assembled_mtl
        doc["ok"] = self.ok
        doc["witnesses"] = dict(self.witnesses)
        return doc


def _structural_check(spec: GcpSpec) -> None:
    A, sizes = spec.index_algebra, spec.blocks
    if len(sizes) != A.size:
        raise MalformedSpec(f"need {A.size} blocks, got {len(sizes)}")
    if any(not isinstance(s, int) or s < 1 for s in sizes):
        raise MalformedSpec("block sizes must be positive integers")
    for i in range(A.size):
        for j in range(A.size):
            t = spec.mu.get((i, j))
            if t is None:
                raise MalformedSpec(f"missing mu table for ({i},{j})")
            if len(t) != sizes[i] or any(len(row) != sizes[j] for row in t):
                raise MalformedSpec(f"mu[{i},{j}] must be {sizes[i]}x{sizes[j]}")
            bound = sizes[A.mul(i, j)]
            if any(not 0 <= v < bound for row in t for v in row):
                raise MalformedSpec(f"mu[{i},{j}] has entries outside block {A.mul(i, j)}")


def _assembled_table(spec: GcpSpec) -> list[list[int]]:
    off = spec.offsets()
    A = spec.index_algebra
    where = [(i, k) for i in range(A.size) for k in range(spec.blocks[i])]
    n = len(where)
    table = [[0] * n for _ in range(n)]
    for g, (i, a) in enumerate(where):
        for h, (j, b) in enumerate(where):
            table[g][h] = off[A.mul(i, j)] + spec.mu[(i, j)][a][b]
    return table


def validate_gcp(spec: GcpSpec, check_assembled: bool = True) -> ConditionReport:
    """Check conditions (i)-(v) exhaustively, each independently.

    Zero annihilation is reported in two readings: strict (every
    ``mu_ij(0_i, k) = mu_ij(k, 0_j) = 0_ij``) and weak (only
    ``mu_{1,i}(0_1, k) = 0_i``).
    """
    _structural_check(spec)
    A, F, sizes, mu = spec.index_algebra, spec.filter, spec.blocks, spec.mu
    top = A.top
    rep = ConditionReport()

    def fail(name, witness):
        if getattr(rep, name):
            setattr(rep, name, False)
            rep.witnesses[name] = list(witness)

    if sizes[top] != F.size:
        fail("blocks_wellformed", ["top_block_size", sizes[top], F.size])
    elif mu[(top, top)] != F.product:
        fail("blocks_wellformed", ["top_block_product", top, top])

    idx = range(A.size)
    for i in idx:
        for j in idx:
            t = mu[(i, j)]
            # (i) monotone in each coordinate
            for a in range(sizes[i]):
                for b in range(sizes[j]):
                    if a + 1 < sizes[i] and t[a][b] > t[a + 1][b]:
                        fail("monotone", [i, j, a, b, "left"])
                    if b + 1 < sizes[j] and t[a][b] > t[a][b + 1]:
                        fail("monotone", [i, j, a, b, "right"])
            # (ii) strict
            for b in range(sizes[j]):
                if t[0][b] != 0:
                    fail("zero_annihilation", [i, j, 0, b])
            for a in range(sizes[i]):
                if t[a][0] != 0:
                    fail("zero_annihilation", [i, j, a, 0])
            # (iv)
            for a in range(sizes[i]):
                for b in range(sizes[j]):
                    if t[a][b] != mu[(j, i)][b][a]:
                        fail("jointly_commutative", [i, j, a, b])
        # (ii) weak
        for k in range(sizes[i]):
            if mu[(top, i)][0][k] != 0:
                fail("zero_annihilation_weak", [top, i, 0, k])
        # (v)
        for k in range(sizes[i]):
            if mu[(top, i)][F.top][k] != k:
                fail("global_unit", [i, k])
    # (iii)
    for i, j, k in itertools.product(idx, repeat=3):
        ij, jk = A.mul(i, j), A.mul(j, k)
        t_ij, t_jk = mu[(i, j)], mu[(j, k)]
        t_left, t_right = mu[(ij, k)], mu[(i, jk)]
        for a in range(sizes[i]):
            for b in range(sizes[j]):
                ab = t_ij[a][b]
                for c in range(sizes[k]):
                    if t_left[ab][c] != t_right[a][t_jk[b][c]]:
                        fail("jointly_associative", [i, j, k, a, b, c])
                        break
                if not rep.jointly_associative:
                    break
            if not rep.jointly_associative:
                break
        if not rep.jointly_associative:
            break
    if check_assembled:
        table = _assembled_table(spec)
        ax = check_axioms(len(table), table)
        rep.assembled_mtl = ax.ok
        if not ax.ok:
            rep.witnesses["assembled_mtl"] = [ax.failures(), ax.witnesses]
    return rep


@dataclass(frozen=True)
class Assembly:
    chain: Chain
    block_map: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {"chain": self.chain.to_dict(), "blocks": [list(p) for p in self.block_map]}


def assemble(spec: GcpSpec) -> Assembly:
    rep = validate_gcp(spec, check_assembled=False)
    if not rep.ok:
        raise ConditionsFailed(f"conditions failed: {', '.join(rep.failures())}",
                               rep.to_dict())
    table = _assembled_table(spec)
    ax = check_axioms(len(table), table)
    if not ax.ok:
        raise AssembledNotMTL(f"assembled table violates {', '.join(ax.failures())}",
                              ax.to_dict())
    block_map = tuple((i, k) for i in range(spec.index_algebra.size)
                      for k in range(spec.blocks[i]))
    return Assembly(make_chain(len(table), table), block_map)


def gcp_sequence(spec: GcpSpec, asm: Assembly) -> SplitSequence:
    """F -> E -> A with block inclusion, block projection and the section
    sending 1_A to 1_F and every other index to its block minimum."""
    off = spec.offsets()
    top = spec.top_index
    j = tuple(off[top] + k for k in range(spec.blocks[top]))
    p = tuple(i for i, _ in asm.block_map)
    s = tuple(asm.chain.top if i == top else off[i] for i in range(spec.index_algebra.size))
    return SplitSequence(spec.filter, asm.chain, spec.index_algebra, j, p, s)


def gcp_from_extension(E: Chain, f: Filter) -> GcpSpec:
    if f.parent != E or E.mul(f.least, f.least) != f.least:
        raise NotAFilter("not a filter of the given chain", {"least": f.least})
    q = quotient(E, f)
    classes = q.classes()
    local = {}
    for cls in classes:
        for k, x in enumerate(cls):
            local[x] = k
    A = q.algebra
    mu = {}
    for i in range(A.size):
        for j in range(A.size):
            mu[(i, j)] = tuple(tuple(local[E.mul(x, y)] for y in classes[j]) for x in classes[i])
    return GcpSpec(A, up_set_chain(E, f.least), tuple(len(c) for c in classes), mu)


def gcp_from_ordinal_sum(family: Sequence[Chain]) -> GcpSpec:
    """Index chain with minimum product; non-top blocks drop their unit;
    mu is the component product on the diagonal and otherwise returns the
    argument from the lower index.  Not validated here."""
    if not family:
        raise EmptyFamily("family must be non-empty")
    for pos, c in enumerate(family):
        if c.size < 2:
            raise ComponentTooSmall(f"component {pos} has size {c.size}", {"position": pos})
    m = len(family)
    top = m - 1
    sizes = tuple(c.size if i == top else c.size - 1 for i, c in enumerate(family))
    mu = {}
    for i in range(m):
        for j in range(m):
            if i == j:
                t = tuple(tuple(family[i].mul(a, b) for b in range(sizes[j]))
                          for a in range(sizes[i]))
            elif i < j:
                t = tuple(tuple(a for _ in range(sizes[j])) for a in range(sizes[i]))
            else:
                t = tuple(tuple(range(sizes[j])) for _ in range(sizes[i]))
            mu[(i, j)] = t
    return GcpSpec(min_chain(m), family[top], sizes, mu)


def _candidate_tables(rows: int, cols: int, target: int, symmetric: bool,
                      unit_row: Optional[int]):
    """Monotone tables with strict zero annihilation; ``unit_row`` fixes
    that row to the identity (the global unit condition)."""
    cells = [(a, b) for a in range(1, rows) for b in range(1, cols) if not symmetric or a <= b]
    for vals in itertools.product(range(target), repeat=len(cells)):
        t = [[0] * cols for _ in range(rows)]
        for (a, b), v in zip(cells, vals):
            t[a][b] = v
            if symmetric:
                t[b][a] = v
        if unit_row is not None and t[unit_row] != list(range(cols)):
            continue
        if all(t[a][b] <= t[a + 1][b] for a in range(rows - 1) for b in range(cols)) and \
                all(t[a][b] <= t[a][b + 1] for a in range(rows) for b in range(cols - 1)):
            yield tuple(tuple(r) for r in t)


def small_specs(A: Chain, F: Chain, sizes: Sequence[int]):
    """Every spec on the given index chain, top chain and block sizes whose
    tables are individually monotone, zero-annihilating, commutative and
    unital.  Joint associativity is left to :func:`validate_gcp`."""
    m, top = A.size, A.top
    sizes = tuple(sizes)
    pairs = [(i, j) for i in range(m) for j in range(i, m) if (i, j) != (top, top)]
    options = []
    for i, j in pairs:
        opts = list(_candidate_tables(sizes[i], sizes[j], sizes[A.mul(i, j)], i == j, None))
        if j == top:
            # mu_{i,1} is the transpose of mu_{1,i}; 1_F must act as identity
            opts = [t for t in opts if [row[F.top] for row in t] == list(range(sizes[i]))]
        options.append(opts)
    for combo in itertools.product(*options):
        mu = {(top, top): F.product}
        for (i, j), t in zip(pairs, combo):
            mu[(i, j)] = t
            mu[(j, i)] = tuple(tuple(r) for r in zip(*t))
        yield GcpSpec(A, F, sizes, mu)


def monotonicity_probe(max_total: int) -> dict:
    """Exhaustively search specs with at most ``max_total`` elements that
    satisfy (i)-(v) but assemble to a table that is not an MTL-chain."""
    from .enumeration import enumerate_chains

    tally = {"specs_checked": 0, "conditions_pass": 0, "assembled_not_mtl": 0}
    witnesses = []
    for na in range(2, max_total + 1):
        for A in enumerate_chains(na):
            for nf in range(1, max_total - na + 2):
                for F in enumerate_chains(nf):
                    for low in itertools.product(range(1, max_total), repeat=na - 1):
                        sizes = tuple(low) + (nf,)
                        if sum(sizes) > max_total:
                            continue
                        for spec in small_specs(A, F, sizes):
                            tally["specs_checked"] += 1
                            rep = validate_gcp(spec)
                            if not rep.ok:
                                continue
                            tally["conditions_pass"] += 1
                            if not rep.assembled_mtl:
                                tally["assembled_not_mtl"] += 1
                                if len(witnesses) < 3:
                                    witnesses.append({"spec": spec.to_dict(),
                                                      "axioms": rep.witnesses["assembled_mtl"]})
    return {"max_total": max_total, **tally, "witnesses": witnesses}
