import random
from math import comb

import pytest

from polyspace import (
    GeneticCode,
    build_ring,
    cup_length,
    ls_category,
    phi_S,
    verify_poincare_pairing,
)
from polyspace.cohomology import MonomialType, RingConstructionError


def test_truncated_algebra_for_singleton_gene():
    for n in range(4, 9):
        ring = build_ring(GeneticCode(n, [(n,)]))
        m = n - 3
        assert ring.dims == tuple(1 for _ in range(m + 1))
        r = ring.R()
        assert not (r ** m).is_zero
        assert (r ** (m + 1)).is_zero
        for i in range(1, n):
            assert ring.V(i).is_zero


def test_pair_gene_dimensions():
    # <{a,n}>: a+1 in every middle degree
    for n, a in [(6, 2), (7, 2), (7, 4), (8, 3)]:
        ring = build_ring(GeneticCode(n, [(a, n)]))
        m = n - 3
        for d in range(1, n - 3):
            assert ring.dim(d) == a + 1
        assert ring.dim(0) == ring.dim(m) == 1
        assert ring.dim(m + 1) == 0


def test_equilateral_pentagon_dimensions():
    ring = build_ring(GeneticCode(5, [(4, 5)]))
    assert ring.dims == (1, 5, 1)


def test_empty_code_rejected():
    with pytest.raises(RingConstructionError):
        build_ring(GeneticCode(6, []))


def test_vsquare_rewrites_to_r_v():
    ring = build_ring(GeneticCode(7, [(2, 4, 7)]))
    v1 = ring.V(1)
    assert v1 * v1 == ring.R() * v1
    # {2,4} is a subgee of the gee {2,4}; {3,4} is not
    assert not (ring.V(2) * ring.V(4)).is_zero
    assert (ring.V(3) * ring.V(4)).is_zero


def test_multiply_commutative_associative_random():
    ring = build_ring(GeneticCode(7, [(1, 2, 4, 7), (3, 4, 7)]))
    rng = random.Random(2)
    pool = [cls for d in (1, 2) for cls in ring.basis(d)]
    for _ in range(120):
        x, y, z = (rng.choice(pool) for _ in range(3))
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)


def test_phi_monogenic_triple_values():
    # phi on <{a, a+b, n}>: pair classes 1, singletons a-1 / a+b, empty formula
    for n, a, b in [(7, 2, 2), (8, 1, 3), (8, 3, 1), (9, 2, 3)]:
        code = GeneticCode(n, [(a, a + b, n)])
        ok_pairs = [(i, j) for i in range(1, a + 1) for j in range(i + 1, a + b + 1)]
        ring = build_ring(code)
        for pair in ok_pairs:
            assert ring.phi_S(pair) == 1
        assert ring.phi_S((1,)) == (a + b) % 2
        assert ring.phi_S((a + 1,)) == (a - 1) % 2
        assert ring.phi_S(()) == ((a - 1) * b + comb(a - 1, 2)) % 2


def test_phi_requires_top_degree():
    ring = build_ring(GeneticCode(6, [(3, 6)]))
    with pytest.raises(ValueError):
        ring.phi(ring.R())


def test_phi_S_rejects_non_subgee():
    with pytest.raises(ValueError):
        phi_S(GeneticCode(6, [(3, 6)]), (1, 2))


def test_poincare_pairing_nondegenerate(enum6):
    for entry in enum6:
        ring = build_ring(entry.code)
        assert verify_poincare_pairing(ring), entry.code.label()


def test_cup_length_and_category():
    ring = build_ring(GeneticCode(5, [(5,)]))
    length, (r_exp, support) = cup_length(ring)
    assert length == 2 and (r_exp, support) == (2, ())
    assert ls_category(ring) == 3

    ring = build_ring(GeneticCode(5, [(4, 5)]))
    length, witness = cup_length(ring)
    assert length == 2
    assert ls_category(ring) == 3

    for n, cat in [(4, 2), (6, 4), (8, 6)]:
        ring = build_ring(GeneticCode(n, [(n,)]))
        assert ls_category(ring) == cat


def test_class_serialization_round_trip():
    ring = build_ring(GeneticCode(7, [(2, 4, 7)]))
    cls = ring.monomial(3, (2, 4)) + ring.monomial(3, ())
    data = cls.to_json()
    assert data["degree"] == 3
    rebuilt = ring.zero(3)
    for r_exp, support in data["support"]:
        rebuilt = rebuilt + ring.monomial(r_exp + len(support), support)
    assert rebuilt == cls


def test_monomial_type_blocks():
    t = MonomialType.of((1, 3, 6), cuts=(2, 5))
    assert t.pattern == (1, 2, 3)
    assert t.counts == (1, 1, 1)
    t = MonomialType.of((1, 2, 4), cuts=(3, 5))
    assert t.pattern == (1, 1, 2) and t.counts == (2, 1, 0)
