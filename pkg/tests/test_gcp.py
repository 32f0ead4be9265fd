import pytest

from mtlchains import (Filter, GcpSpec, all_filters, are_isomorphic, assemble,
                       check_split_exact, gcp_from_extension, gcp_from_ordinal_sum, make_chain,
                       ordinal_sum, quotient, validate_gcp)
from mtlchains.enumeration import enumerate_chains
from mtlchains.errors import (AssembledNotMTL, ComponentTooSmall, ConditionsFailed,
                              EmptyFamily, MalformedSpec, NotAFilter)
from mtlchains.gcp import gcp_from_dict, gcp_sequence, monotonicity_probe

UNIVERSE = [c for n in range(1, 6) for c in enumerate_chains(n)]

# Table 1 restricted to the classes {0, x} and {e, 1}, computed by hand
T1_MU = {
    (0, 0): ((0, 0), (0, 0)),
    (0, 1): ((0, 0), (0, 1)),
    (1, 0): ((0, 0), (0, 1)),
    (1, 1): ((0, 0), (0, 1)),
}


def test_extension_spec_of_table1(T1, TWO):
    spec = gcp_from_extension(T1, Filter(T1, 2))
    assert spec.index_algebra == TWO
    assert spec.filter == TWO
    assert spec.blocks == (2, 2)
    assert spec.mu == T1_MU
    rep = validate_gcp(spec)
    assert rep.ok and rep.zero_annihilation_weak and rep.assembled_mtl
    assert are_isomorphic(assemble(spec).chain, T1)


def test_extension_spec_of_g3(G3, TWO):
    spec = gcp_from_extension(G3, Filter(G3, 1))
    assert spec.index_algebra == TWO and spec.blocks == (1, 2)


def test_extension_by_trivial_filter(L4, ZERO):
    spec = gcp_from_extension(L4, Filter(L4, 3))
    assert spec.index_algebra == L4
    assert spec.blocks == (1, 1, 1, 1)
    assert spec.filter == ZERO


def test_extension_requires_filter(T1):
    with pytest.raises(NotAFilter):
        gcp_from_extension(T1, Filter(T1, 1))


def test_corollary_l3_l3_fails_strict_zero_annihilation(L3):
    rep = validate_gcp(gcp_from_ordinal_sum([L3, L3]))
    assert not rep.zero_annihilation
    # mu_{bottom,top}(a, 0_top) = a
    assert rep.witnesses["zero_annihilation"] == [0, 1, 1, 0]
    assert not rep.zero_annihilation_weak
    with pytest.raises(ConditionsFailed):
        assemble(gcp_from_ordinal_sum([L3, L3]))


def test_corollary_two_two(TWO, G3):
    spec = gcp_from_ordinal_sum([TWO, TWO])
    assert validate_gcp(spec).ok
    assert assemble(spec).chain == G3


def test_single_block_specs(L3, ZERO):
    spec = gcp_from_ordinal_sum([L3])
    assert spec.index_algebra == ZERO and spec.blocks == (3,)
    assert assemble(spec).chain == L3
    manual = GcpSpec(ZERO, L3, (3,), {(0, 0): L3.product})
    asm = assemble(manual)
    assert asm.chain == L3 and asm.block_map == ((0, 0), (0, 1), (0, 2))


def test_corollary_errors(TWO, ZERO):
    with pytest.raises(EmptyFamily):
        gcp_from_ordinal_sum([])
    with pytest.raises(ComponentTooSmall):
        gcp_from_ordinal_sum([TWO, ZERO])


def test_malformed_specs(TWO):
    with pytest.raises(MalformedSpec):
        validate_gcp(GcpSpec(TWO, TWO, (2,), {}))
    with pytest.raises(MalformedSpec):
        validate_gcp(GcpSpec(TWO, TWO, (1, 2), {(0, 0): ((0,),), (0, 1): ((0, 0),),
                                                (1, 0): ((0,), (0,))}))
    bad = dict(T1_MU)
    bad[(0, 0)] = ((0, 0), (0, 2))
    with pytest.raises(MalformedSpec):
        validate_gcp(GcpSpec(TWO, TWO, (2, 2), bad))
    with pytest.raises(MalformedSpec):
        gcp_from_dict({"blocks": []})


def test_each_condition_detected_independently(TWO):
    base = dict(T1_MU)
    cases = {
        "jointly_commutative": {(0, 1): ((0, 0), (0, 1)), (1, 0): ((0, 0), (0, 0))},
        "global_unit": {(1, 0): ((0, 0), (0, 0)), (0, 1): ((0, 0), (0, 0))},
        "monotone": {(0, 0): ((0, 1), (0, 0))},
        "blocks_wellformed": {(1, 1): ((0, 0), (0, 0))},
    }
    for name, patch in cases.items():
        mu = {**base, **patch}
        rep = validate_gcp(GcpSpec(TWO, TWO, (2, 2), mu))
        assert not getattr(rep, name), name
        assert name in rep.witnesses


def test_assembled_not_mtl_is_surfaced(TWO):
    mu = {(0, 0): ((0, 0), (0, 1)), (0, 1): ((0, 0), (0, 1)), (1, 0): ((0, 0), (0, 1)),
          (1, 1): ((0, 0), (0, 1))}
    spec = GcpSpec(TWO, TWO, (2, 2), mu)
    rep = validate_gcp(spec)
    assert rep.ok
    assert rep.assembled_mtl is False
    with pytest.raises(AssembledNotMTL) as info:
        assemble(spec)
    assert info.value.witness["monotone"] is False


def test_monotonicity_probe_finds_gap():
    res = monotonicity_probe(4)
    assert res["conditions_pass"] == 16
    assert res["assembled_not_mtl"] == 1
    assert res["witnesses"][0]["axioms"][0] == ["monotone"]


def test_gcp_json_round_trip(T1):
    spec = gcp_from_extension(T1, Filter(T1, 2))
    doc = spec.to_dict()
    assert set(doc["mu"]) == {"0,0", "0,1", "1,0", "1,1"}
    assert gcp_from_dict(doc) == spec


@pytest.mark.parametrize("E", UNIVERSE, ids=lambda c: str(c.product))
def test_extension_round_trips(E):
    for f in all_filters(E):
        spec = gcp_from_extension(E, f)
        rep = validate_gcp(spec)
        assert rep.ok and rep.assembled_mtl
        asm = assemble(spec)
        assert are_isomorphic(asm.chain, E)
        q = quotient(asm.chain, Filter(asm.chain, spec.offsets()[-1]))
        assert are_isomorphic(q.algebra, spec.index_algebra)
        assert list(q.projection) == [i for i, _ in asm.block_map]
        seq = gcp_sequence(spec, asm)
        rep = check_split_exact(seq)
        assert rep.j_injective_hom and rep.p_surjective_hom and rep.kernel
        # the section is always a monoid map; residuum preservation can fail
        assert rep.details["s"]["product"] and rep.details["s"]["unit"]
        again = gcp_from_extension(asm.chain, Filter(asm.chain, spec.offsets()[-1]))
        assert again == spec


def test_corollary_specs_assemble_to_ordinal_sums():
    pool = [c for n in (2, 3) for c in enumerate_chains(n)]
    for a in pool:
        for b in pool:
            fam = [a, b]
            spec = gcp_from_ordinal_sum(fam)
            rep = validate_gcp(spec)
            assert rep.ok == (a.size == 2)
            if rep.ok:
                assert assemble(spec).chain == ordinal_sum(fam)


def test_section_residuum_gap():
    E = make_chain(5, [[0, 0, 0, 0, 0], [0, 0, 0, 0, 1], [0, 0, 2, 2, 2], [0, 0, 2, 3, 3],
                       [0, 1, 2, 3, 4]])
    spec = gcp_from_extension(E, Filter(E, 3))
    rep = check_split_exact(gcp_sequence(spec, assemble(spec)))
    assert not rep.section
    assert rep.details["s"]["witnesses"]["residuum"] == [1, 0]


def test_failing_extensions_mostly_admit_no_section_at_all():
    import itertools

    from mtlchains.claims import verify_claim
    from mtlchains.homs import Hom, check_hom

    rep = verify_claim("gcp-extension", 6)
    none_exists = 0
    for ce in rep.counterexamples:
        E = make_chain(ce["witness"]["chain"]["size"], ce["witness"]["chain"]["product"])
        spec = gcp_from_extension(E, Filter(E, ce["witness"]["least"]))
        seq = gcp_sequence(spec, assemble(spec))
        classes = [[x for x in range(seq.E.size) if seq.p[x] == a] for a in range(seq.A.size)]
        if not any(check_hom(Hom(seq.A, seq.E, s)).ok for s in itertools.product(*classes)):
            none_exists += 1
    assert (len(rep.counterexamples), none_exists) == (24, 14)
