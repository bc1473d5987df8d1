import json
import random

import pytest

from polyspace import (
    GeneticCode,
    classify,
    dominance_leq,
    enumerate_genetic_codes,
    genetic_code,
    realizable,
    subgees,
)


def test_dominance_examples():
    assert dominance_leq({1, 3}, {2, 3})
    assert not dominance_leq({2, 5}, {1, 6})
    assert dominance_leq(set(), {4, 7})
    assert dominance_leq(set(), set())


def test_dominance_is_a_partial_order():
    rng = random.Random(3)
    universe = list(range(1, 8))
    sets = [frozenset(rng.sample(universe, rng.randint(0, 4))) for _ in range(40)]
    for a in sets:
        assert dominance_leq(a, a)
        for b in sets:
            for c in sets:
                if dominance_leq(a, b) and dominance_leq(b, c):
                    assert dominance_leq(a, c)


def test_code_construction_canonical_and_antichain():
    code = GeneticCode(8, [(3, 4, 8), (1, 2, 4, 8)])
    assert code.genes == ((1, 2, 4, 8), (3, 4, 8))
    assert code.gees == ((1, 2, 4), (3, 4))
    assert code.sizes == (4, 3)
    with pytest.raises(ValueError):
        GeneticCode(6, [(2, 6), (3, 6)])  # comparable pair
    with pytest.raises(ValueError):
        GeneticCode(6, [(2, 3)])  # missing n


def test_subgees_examples():
    # single pair gene {a, n}: empty set and singletons up to a
    fam = subgees(GeneticCode(7, [(3, 7)]))
    assert fam.members == ((), (1,), (2,), (3,))
    # <{n}>: only the empty support
    assert subgees(GeneticCode(6, [(6,)])).members == ((),)
    # <{a, a+b, n}>: singletons up to a+b, pairs {i<j<=a} and {i<=a<j<=a+b}
    a, b = 2, 2
    fam = subgees(GeneticCode(7, [(a, a + b, 7)]))
    singles = {s for s in fam if len(s) == 1}
    pairs = {s for s in fam if len(s) == 2}
    assert singles == {(i,) for i in range(1, a + b + 1)}
    assert pairs == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)}


def test_subgees_down_closed(enum6):
    for entry in enum6:
        fam = subgees(entry.code)
        for s in fam:
            for t in fam:
                if dominance_leq(t, s):
                    assert t in fam


def test_realizable_examples():
    ok, witness = realizable(GeneticCode(5, [(4, 5)]))
    assert ok and genetic_code(witness).genes == ((4, 5),)
    for n in (5, 6, 7):
        ok, witness = realizable(GeneticCode(n, [(n,)]))
        assert ok and genetic_code(witness).genes == ((n,),)
    # the all-but-one long candidate <{1,n}> with huge gap is fine too
    ok, _ = realizable(GeneticCode(6, [(1, 6)]))
    assert ok


def test_unrealizable_candidate():
    # {2,4,6} can never be short: entrywise it dominates its complement {1,3,5}
    ok, witness = realizable(GeneticCode(6, [(2, 4, 6)]))
    assert not ok and witness is None
    ok, witness = realizable(GeneticCode(6, [(1, 2, 6), (3, 6)]))
    assert ok and genetic_code(witness).gees == ((1, 2), (3,))


def test_enumerate_counts_small(enum5, enum6):
    assert len(enum5) == 6
    assert len(enum6) == 20
    sizes5 = [e.signature.sizes for e in enum5]
    assert sizes5.count((2,)) == 4
    sizes6 = [e.signature.sizes for e in enum6]
    assert sizes6.count((2,)) == 5
    assert sizes6.count((3,)) == 5
    assert sum(1 for s in sizes6 if len(s) >= 2 and 2 in s) == 8


def test_enumerate_round_trip(enum6):
    for entry in enum6:
        assert genetic_code(entry.witness) == entry.code


def test_enumerate_codes_are_antichains(enum7):
    for entry in enum7:
        # construction enforces the antichain property; re-run explicitly
        gees = entry.code.gees
        for i, g in enumerate(gees):
            for h in gees[i + 1:]:
                assert not dominance_leq(g, h) and not dominance_leq(h, g)


def test_enumerate_range_check():
    with pytest.raises(ValueError):
        enumerate_genetic_codes(3)
    with pytest.raises(ValueError):
        enumerate_genetic_codes(10)


def test_classify_templates():
    sig = classify(GeneticCode(7, [(3, 7)]))
    assert sig.monogenic_pair == 3 and sig.sizes == (2,)
    sig = classify(GeneticCode(8, [(2, 5, 8)]))
    assert sig.monogenic_triple == (2, 3)
    sig = classify(GeneticCode(8, [(1, 3, 4, 8)]))
    assert sig.monogenic_quad == (1, 2, 1)
    # two triples <{a+b, a+b+c, n}, {a, a+b+c+d, n}> with a=1,b=1,c=1,d=1
    sig = classify(GeneticCode(8, [(2, 3, 8), (1, 4, 8)]))
    assert sig.two_triples == (1, 1, 1, 1)
    # Type 1 template <{1,1+b,1+b+c,n},{1,1+b+c+d,n}>
    sig = classify(GeneticCode(9, [(1, 2, 4, 9), (1, 6, 9)]))
    assert sig.type1 and sig.type1_template == (1, 2, 2)


def test_classify_type2_example(enum7):
    code = GeneticCode(7, [(1, 2, 4, 7), (3, 4, 7), (2, 5, 7), (1, 6, 7)])
    sig = classify(code)
    assert sig.type2 and not sig.type1
    assert sig.sizes == (4, 3, 3, 3)
    # the same gees lifted to n=8 stay Type 2
    lifted = GeneticCode(8, [(1, 2, 4, 8), (3, 4, 8), (2, 5, 8), (1, 6, 8)])
    assert classify(lifted).type2


def test_classify_invariant_under_recanonicalization():
    a = GeneticCode(7, [(3, 4, 7), (2, 5, 7)])
    b = GeneticCode(7, [(2, 5, 7), (3, 4, 7)])
    assert a == b and classify(a) == classify(b)


def test_cache_round_trip(tmp_path, enum5):
    first = enumerate_genetic_codes(5, cache_dir=tmp_path)
    assert (tmp_path / "codes_n5.json").exists()
    data = json.loads((tmp_path / "codes_n5.json").read_text())
    assert data["n"] == 5 and len(data["codes"]) == len(enum5)
    second = enumerate_genetic_codes(5, cache_dir=tmp_path)
    assert [e.code for e in second] == [e.code for e in first]
    assert [e.witness for e in second] == [e.witness for e in first]
