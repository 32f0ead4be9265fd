"""Claim registry and verification harness.

Each claim is a pair ``(cases, check)``: ``cases(max_size, workers)``
yields JSON-ready witness documents, and ``check(witness)`` rebuilds
everything from the witness through the public operations and returns a
failure description or ``None``.  Replaying a counterexample is therefore
just calling ``check`` again.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .core import Chain, are_isomorphic, chain_from_dict
from .enumeration import enumerate_chains
from .errors import AssembledNotMTL, ConditionsFailed, NotExact, UnknownClaim
from .gcp import (assemble, gcp_from_extension, gcp_from_ordinal_sum, gcp_sequence,
                  validate_gcp)
from .homs import canonical_sequence, check_split_exact, ordinal_extension_test
from .structure import (Filter, all_filters, archimedean_status, generated_filter,
                        idempotents, is_locally_unital, is_prime, local_units, make_filter,
                        quotient, scale, up_set_chain)
from .sums import decompose, ordinal_sum

PASS = "pass"
VIOLATIONS = "violations recorded"


@dataclass
class ClaimReport:
    claim_id: str
    sizes: list[int]
    instances: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return PASS if not self.counterexamples else VIOLATIONS

    def to_dict(self) -> dict:
        return {"claim_id": self.claim_id, "sizes": self.sizes, "instances": self.instances,
                "verdict": self.verdict, "counterexamples": self.counterexamples,
                "info": self.info}


@lru_cache(maxsize=None)
def universe(n: int, workers: int = 1) -> tuple[Chain, ...]:
    return tuple(enumerate_chains(n, workers))


def _chains(lo: int, hi: int, workers: int) -> Iterator[Chain]:
    for n in range(lo, hi + 1):
        yield from universe(n, workers)


def _c(doc) -> Chain:
    return chain_from_dict(doc)


def osum_size(family) -> int:
    return sum(c.size - 1 for c in family) + 1


def families(max_size: int, pool: list[Chain]) -> list[tuple[Chain, ...]]:
    """All non-empty ordered families from ``pool`` (sizes >= 2) whose
    ordinal sum has at most ``max_size`` elements, smallest first."""
    out = []

    def rec(prefix, budget):
        if prefix:
            out.append(tuple(prefix))
        for c in pool:
            if c.size - 1 <= budget:
                prefix.append(c)
                rec(prefix, budget - (c.size - 1))
                prefix.pop()

    rec([], max_size - 1)
    out.sort(key=lambda fam: (osum_size(fam), len(fam), [c.product for c in fam]))
    return out


# prop-arch-equiv

def _arch_cases(max_size, workers):
    for c in _chains(2, max_size, workers):
        yield {"chain": c.to_dict()}


def _arch_check(w):
    st = archimedean_status(_c(w["chain"]))
    if not st.consistent:
        return {"archimedean": st.archimedean, "simple": st.simple,
                "idempotents_trivial": st.idempotents_trivial}
    return None


# filter-idempotent

def _fi_cases(max_size, workers):
    for c in _chains(1, max_size, workers):
        for a in range(c.size):
            yield {"chain": c.to_dict(), "a": a}


def _fi_check(w):
    c, a = _c(w["chain"]), w["a"]
    g = generated_filter(c, a)
    idem = a in idempotents(c)
    if (g.least == a) != idem or c.mul(g.least, g.least) != g.least:
        return {"generated_least": g.least, "idempotent": idem}
    return None


# remark-lu-split

def _lu_split_cases(max_size, workers):
    for c in _chains(1, max_size, workers):
        for e in local_units(c):
            yield {"chain": c.to_dict(), "e": e}


def _lu_split_check(w):
    c, e = _c(w["chain"]), w["e"]
    eM, up = scale(c, e), up_set_chain(c, e)
    bad = {}
    if not are_isomorphic(c, ordinal_sum([eM, up])):
        bad["ordinal_sum"] = False
    if not are_isomorphic(quotient(c, make_filter(c, e)).algebra, eM):
        bad["quotient_is_scale"] = False
    try:
        if not ordinal_extension_test(canonical_sequence(c, make_filter(c, e))):
            bad["extension_test"] = False
    except NotExact:
        bad["split_exact"] = False
    return bad or None


def _lu_split_info(max_size, workers):
    """Behaviour of the same statements at idempotents that are not local units."""
    tally = Counter()
    witnesses = []
    for c in _chains(2, max_size, workers):
        lu = set(local_units(c))
        for e in idempotents(c):
            if e == 0 or e in lu:
                continue
            tally["non_local_unit_idempotents"] += 1
            eM = scale(c, e)
            if are_isomorphic(quotient(c, make_filter(c, e)).algebra, eM):
                tally["quotient_is_scale"] += 1
            elif len(witnesses) < 5:
                witnesses.append({"chain": c.to_dict(), "e": e})
            if are_isomorphic(c, ordinal_sum([eM, up_set_chain(c, e)])):
                tally["ordinal_split"] += 1
    return {"non_local_unit_idempotents": dict(tally), "quotient_not_scale_witnesses": witnesses}


# lemma-decompose

def _dec_cases(max_size, workers):
    for c in _chains(2, max_size, workers):
        if is_locally_unital(c):
            yield {"chain": c.to_dict()}


def _dec_check(w):
    c = _c(w["chain"])
    d = decompose(c)
    bad = {}
    statuses = [archimedean_status(p) for p in d.components]
    if not all(s.archimedean and s.simple and s.idempotents_trivial for s in statuses):
        bad["components_archimedean"] = False
    if len(d.components) != len(local_units(c)):
        bad["component_count"] = [len(d.components), len(local_units(c))]
    if not are_isomorphic(ordinal_sum(d.components), c):
        bad["round_trip"] = False
    return bad or None


# lemma22-roundtrip

def _l22_cases(max_size, workers):
    pool = list(_chains(2, max_size, workers))
    for lower in pool:
        for upper in pool:
            if lower.size + upper.size - 1 <= max_size:
                yield {"kind": "osum", "lower": lower.to_dict(), "upper": upper.to_dict()}
    for c in _chains(1, max_size, workers):
        for f in all_filters(c):
            yield {"kind": "sequence", "chain": c.to_dict(), "least": f.least}


def _l22_check(w):
    if w["kind"] == "osum":
        lower, upper = _c(w["lower"]), _c(w["upper"])
        E = ordinal_sum([lower, upper])
        seq = canonical_sequence(E, make_filter(E, lower.size - 1))
        if not check_split_exact(seq).ok:
            return {"split_exact": False}
        if not ordinal_extension_test(seq):
            return {"extension_test": False}
        if not (are_isomorphic(seq.A, lower) and are_isomorphic(seq.F, upper)
                and are_isomorphic(E, ordinal_sum([seq.A, seq.F]))):
            return {"isomorphism": False}
        return None
    E = _c(w["chain"])
    seq = canonical_sequence(E, make_filter(E, w["least"]))
    try:
        passed = ordinal_extension_test(seq)
    except NotExact:
        return None
    if passed and not are_isomorphic(E, ordinal_sum([seq.A, seq.F])):
        return {"isomorphism": False}
    return None


def _l22_info(max_size, workers):
    tally = Counter()
    for c in _chains(1, max_size, workers):
        lu = set(local_units(c))
        for f in all_filters(c):
            seq = canonical_sequence(c, f)
            if not check_split_exact(seq).ok:
                tally["not_split_exact"] += 1
                continue
            passed = ordinal_extension_test(seq)
            tally["passing" if passed else "failing"] += 1
            # the test passes exactly at local units (and at the improper filter)
            if passed != (f.least in lu or f.least == 0):
                tally["passing_not_local_unit"] += 1
    return {"canonical_sequences": dict(tally)}


# gcp-extension / gcp-roundtrip

def _ext_cases(max_size, workers):
    for c in _chains(1, max_size, workers):
        for f in all_filters(c):
            yield {"chain": c.to_dict(), "least": f.least}


def _gcp_ext_cases(max_size, workers):
    yield from _ext_cases(max_size, workers)
    lu_pool = [c for c in _chains(2, max_size, workers) if is_locally_unital(c)]
    for fam in families(max_size, lu_pool):
        yield {"family": [c.to_dict() for c in fam]}


def _spec_of(w):
    if "family" in w:
        return gcp_from_ordinal_sum([_c(d) for d in w["family"]])
    E = _c(w["chain"])
    return gcp_from_extension(E, make_filter(E, w["least"]))


def _gcp_ext_check(w):
    spec = _spec_of(w)
    try:
        asm = assemble(spec)
    except (ConditionsFailed, AssembledNotMTL):
        # only specs passing validation and assembly are in scope
        return None
    bad = {}
    rep = check_split_exact(gcp_sequence(spec, asm))
    if not rep.ok:
        bad["split_exact"] = rep.to_dict()
        bad["split_exact"].pop("details")
        bad["failing_maps"] = {k: v["witnesses"] for k, v in rep.details.items()
                               if not v["ok"]}
    top_least = spec.offsets()[spec.top_index]
    q = quotient(asm.chain, make_filter(asm.chain, top_least))
    if not are_isomorphic(q.algebra, spec.index_algebra):
        bad["quotient_is_index_algebra"] = False
    if list(q.projection) != [i for i, _ in asm.block_map]:
        bad["classes_are_blocks"] = False
    return bad or None


def _gcp_rt_check(w):
    E = _c(w["chain"])
    f = make_filter(E, w["least"])
    spec = gcp_from_extension(E, f)
    rep = validate_gcp(spec)
    bad = {}
    if not rep.ok or rep.assembled_mtl is False:
        bad["conditions"] = rep.failures()
        return bad
    asm = assemble(spec)
    if not are_isomorphic(asm.chain, E):
        bad["round_trip_a"] = False
    # block minima are e*c
    q = quotient(E, f)
    for cls in q.classes():
        if cls[0] != E.mul(f.least, cls[-1]):
            bad["block_minimum"] = cls
            break
    spec2 = gcp_from_extension(asm.chain, make_filter(asm.chain, spec.offsets()[spec.top_index]))
    if spec2.blocks != spec.blocks or spec2.mu != spec.mu:
        bad["round_trip_b"] = False
    return bad or None


# coro-osum-gcp

def _coro_cases(max_size, workers):
    pool = [c for c in _chains(2, max_size, workers) if is_locally_unital(c)]
    for fam in families(max_size, pool):
        yield {"family": [c.to_dict() for c in fam]}


def _coro_check(w):
    fam = [_c(d) for d in w["family"]]
    spec = gcp_from_ordinal_sum(fam)
    rep = validate_gcp(spec)
    if rep.ok and rep.assembled_mtl:
        if not are_isomorphic(assemble(spec).chain, ordinal_sum(fam)):
            return {"assembled_is_ordinal_sum": False}
        return None
    return {"failures": rep.failures(),
            "strict_zero_annihilation": rep.zero_annihilation,
            "weak_zero_annihilation": rep.zero_annihilation_weak,
            "witnesses": rep.witnesses}


def _coro_info(max_size, workers):
    pool = [c for c in _chains(2, max_size, workers) if is_locally_unital(c)]
    tally = Counter()
    for fam in families(max_size, pool):
        rep = validate_gcp(gcp_from_ordinal_sum(fam))
        tally["families"] += 1
        tally["strict_ii_fail"] += not rep.zero_annihilation
        tally["weak_ii_fail"] += not rep.zero_annihilation_weak
        tally["other_condition_fail"] += any(k != "zero_annihilation" for k in rep.failures()
                                             if k not in ("zero_annihilation_weak",))
        big_lower = any(c.size >= 3 for c in fam[:-1])
        tally["strict_ii_fail_iff_lower_component_size_ge_3"] += (
            (not rep.zero_annihilation) == big_lower)
        if all(c.size == 2 for c in fam):
            tally["all_two_chain_families"] += 1
            tally["all_two_chain_passing"] += rep.ok and bool(rep.assembled_mtl)
    return {"families": dict(tally)}


# filters-prime

def _prime_cases(max_size, workers):
    for c in _chains(1, max_size, workers):
        for f in all_filters(c):
            yield {"chain": c.to_dict(), "least": f.least}


def _prime_check(w):
    c = _c(w["chain"])
    f = Filter(c, w["least"])
    if is_prime(c, f) != f.proper:
        return {"prime": is_prime(c, f), "proper": f.proper}
    return None


@dataclass(frozen=True)
class Claim:
    cases: Callable
    check: Callable[[dict], Optional[dict]]
    min_size: int = 1
    info: Optional[Callable] = None


CLAIMS: dict[str, Claim] = {
    "prop-arch-equiv": Claim(_arch_cases, _arch_check, 2),
    "filter-idempotent": Claim(_fi_cases, _fi_check),
    "remark-lu-split": Claim(_lu_split_cases, _lu_split_check, info=_lu_split_info),
    "lemma-decompose": Claim(_dec_cases, _dec_check, 2),
    "lemma22-roundtrip": Claim(_l22_cases, _l22_check, info=_l22_info),
    "gcp-extension": Claim(_gcp_ext_cases, _gcp_ext_check),
    "gcp-roundtrip": Claim(_ext_cases, _gcp_rt_check),
    "coro-osum-gcp": Claim(_coro_cases, _coro_check, 2, info=_coro_info),
    "filters-prime": Claim(_prime_cases, _prime_check),
}


def _get(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r}",
                           {"known": sorted(CLAIMS)}) from None


def verify_claim(claim_id: str, max_size: int, workers: int = 1) -> ClaimReport:
    claim = _get(claim_id)
    report = ClaimReport(claim_id, list(range(claim.min_size, max_size + 1)))
    for w in claim.cases(max_size, workers):
        report.instances += 1
        failure = claim.check(w)
        if failure is not None:
            report.counterexamples.append({"witness": w, "failure": failure})
    if claim.info is not None:
        report.info = claim.info(max_size, workers)
    if report.counterexamples:
        report.info["minimal_witness"] = report.counterexamples[0]["witness"]
    return report


def replay(claim_id: str, counterexample: dict) -> bool:
    """True if the witness still reproduces a failure."""
    return _get(claim_id).check(counterexample["witness"]) is not None
