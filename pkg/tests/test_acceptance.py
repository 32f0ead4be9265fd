"""Acceptance criteria.  Each test is one criterion; a PASS/FAIL line per
criterion is printed in the terminal summary (see conftest.py).

Run alone with ``pytest tests/test_acceptance.py``.
"""
import random
import time

import pytest

from mtlchains import (Filter, all_filters, are_isomorphic, assemble, canonical_sequence,
                       check_axioms, check_split_exact, classify, decompose, enumerate_chains,
                       gcp_from_extension, idempotents, is_locally_unital, local_units,
                       make_chain, ordinal_extension_test, ordinal_sum, quotient,
                       validate_gcp)
from mtlchains.claims import PASS, VIOLATIONS, replay, verify_claim
from mtlchains.errors import NotLocallyUnital
from mtlchains.gcp import gcp_sequence
from mtlchains.homs import SplitSequence

from conftest import T1_TABLE
from oracles import naive_chains

pytestmark = pytest.mark.acceptance


def test_criterion_1_table1_fixture_suite(TWO):
    T1 = make_chain(4, T1_TABLE)
    assert idempotents(T1) == [0, 2, 3]
    assert local_units(T1) == [3]
    assert not is_locally_unital(T1)
    q = quotient(T1, Filter(T1, 2))
    assert are_isomorphic(q.algebra, TWO)
    assert q.classes() == [[0, 1], [2, 3]]
    seq = SplitSequence(TWO, T1, TWO, (2, 3), (0, 0, 1, 1), (0, 3))
    assert check_split_exact(seq).ok
    assert ordinal_extension_test(seq) is False
    with pytest.raises(NotLocallyUnital) as info:
        decompose(T1)
    assert info.value.witness == {"e": 2}


def test_criterion_2_enumeration_census():
    for n, count in [(1, 1), (2, 1), (3, 2), (4, 6)]:
        got = [c.product for c in enumerate_chains(n)]
        want = sorted(c.product for c in naive_chains(n))
        assert len(got) == count and got == want
    size4 = list(enumerate_chains(4))
    assert sum("archimedean" in classify(c) for c in size4) == 2
    assert sum("locally_unital" in classify(c) for c in size4) == 5
    assert [c for c in size4 if not is_locally_unital(c)] == [make_chain(4, T1_TABLE)]
    for n in (5, 6):
        start = time.perf_counter()
        accepted = [c.product for c in enumerate_chains(n)]
        elapsed = time.perf_counter() - start
        if n == 6:
            assert elapsed < 60.0
        rng = random.Random(2024 + n)
        acc = set(accepted)
        for t in rng.sample(accepted, min(100, len(accepted))):
            assert check_axioms(n, t).ok
        rejected = 0
        while rejected < 100:
            t = [[0] * n for _ in range(n)]
            for a in range(n):
                t[n - 1][a] = t[a][n - 1] = a
            for a in range(1, n - 1):
                for b in range(1, n - 1):
                    t[a][b] = rng.randint(0, n - 1)
            ok = check_axioms(n, t).ok
            assert ok == (tuple(map(tuple, t)) in acc)
            rejected += not ok


def _claim(claim_id):
    rep = verify_claim(claim_id, 6)
    assert rep.instances > 0
    assert rep.counterexamples == [], rep.counterexamples[:3]
    assert rep.verdict == PASS
    return rep


def test_criterion_3_archimedean_equivalence():
    rep = _claim("prop-arch-equiv")
    assert rep.sizes == [2, 3, 4, 5, 6]


def test_criterion_4_filters_and_idempotents():
    _claim("filter-idempotent")


def test_criterion_5_decomposition_round_trip():
    _claim("lemma-decompose")


def test_criterion_6_local_unit_split():
    rep = _claim("remark-lu-split")
    info = rep.info["non_local_unit_idempotents"]
    assert info["non_local_unit_idempotents"] > 0
    assert "quotient_is_scale" in info


def test_criterion_7_gcp_lemmas():
    failures = {"round_trip": [], "conditions": [], "split_exact": [], "quotient": []}
    for n in range(1, 7):
        for E in enumerate_chains(n):
            for f in all_filters(E):
                spec = gcp_from_extension(E, f)
                rep = validate_gcp(spec)
                if not (rep.ok and rep.assembled_mtl):
                    failures["conditions"].append((E, f.least))
                    continue
                asm = assemble(spec)
                if not are_isomorphic(asm.chain, E):
                    failures["round_trip"].append((E, f.least))
                if not check_split_exact(gcp_sequence(spec, asm)).ok:
                    failures["split_exact"].append((E, f.least))
                top = Filter(asm.chain, spec.offsets()[spec.top_index])
                if not are_isomorphic(quotient(asm.chain, top).algebra, spec.index_algebra):
                    failures["quotient"].append((E, f.least))
    counts = {k: len(v) for k, v in failures.items()}
    assert counts == {"round_trip": 0, "conditions": 0, "split_exact": 0, "quotient": 0}, (
        f"counterexample counts {counts}; first split_exact witness "
        f"{failures['split_exact'][:1]}")


def test_criterion_8_corollary_probe(L3, TWO):
    rep = verify_claim("coro-osum-gcp", 6)
    assert rep.verdict == VIOLATIONS and rep.counterexamples
    fams = rep.info["families"]
    assert fams["all_two_chain_families"] > 0
    assert fams["all_two_chain_passing"] == fams["all_two_chain_families"]
    for ce in rep.counterexamples:
        assert "strict_zero_annihilation" in ce["failure"]
        assert "weak_zero_annihilation" in ce["failure"]
        assert replay("coro-osum-gcp", ce)
    l3l3 = [ce for ce in rep.counterexamples
            if ce["witness"]["family"] == [L3.to_dict(), L3.to_dict()]]
    assert l3l3 and l3l3[0]["failure"]["strict_zero_annihilation"] is False
    assert rep.info["minimal_witness"]["family"] == [L3.to_dict(), L3.to_dict()], (
        f"minimal witness is {rep.info['minimal_witness']['family']}")


def test_criterion_9_split_extension_lemma():
    _claim("lemma22-roundtrip")
    # both directions, directly
    pool = [c for n in range(2, 6) for c in enumerate_chains(n)]
    for C in pool:
        for K in pool:
            if C.size + K.size - 1 > 6:
                continue
            E = ordinal_sum([C, K])
            seq = canonical_sequence(E, Filter(E, C.size - 1))
            assert ordinal_extension_test(seq)
            assert are_isomorphic(E, ordinal_sum([seq.A, seq.F]))
    for n in range(1, 7):
        for E in enumerate_chains(n):
            for f in all_filters(E):
                seq = canonical_sequence(E, f)
                if check_split_exact(seq).ok and ordinal_extension_test(seq):
                    assert are_isomorphic(E, ordinal_sum([seq.A, seq.F]))
