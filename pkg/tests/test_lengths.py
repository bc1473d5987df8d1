import random
from itertools import combinations

import pytest

from polyspace import (
    GeneticCode,
    LengthVector,
    NonGenericError,
    genetic_code,
    is_generic,
    is_short,
    short_sets_with_n,
)
from polyspace.lengths import zero_signed_sum


def brute_generic(entries):
    """Oracle: all 2^n signed sums, directly."""
    n = len(entries)
    for mask in range(1 << n):
        s = sum(e if (mask >> i) & 1 else -e for i, e in enumerate(entries))
        if s == 0:
            return False
    return True


def brute_code(entries):
    """Oracle: maximal short sets containing n straight from the definitions."""
    entries = tuple(sorted(entries))
    n = len(entries)
    total = sum(entries)
    short = []
    for size in range(n):
        for rest in combinations(range(1, n), size):
            J = tuple(sorted(rest + (n,)))
            if 2 * sum(entries[i - 1] for i in J) < total:
                short.append(J)

    def leq(I, J):
        if len(I) > len(J):
            return False
        top = sorted(J)[len(J) - len(I):]
        return all(a <= b for a, b in zip(sorted(I), top))

    return tuple(sorted(J for J in short if not any(K != J and leq(J, K) for K in short)))


def test_construction_sorts_and_validates():
    v = LengthVector([3, 1, 2])
    assert v.entries == (1, 2, 3)
    assert v.n == 3 and v.perimeter == 6
    with pytest.raises(ValueError):
        LengthVector([1, 0, 2])
    with pytest.raises(ValueError):
        LengthVector([])


@pytest.mark.parametrize(
    "entries,expected",
    [
        ((1, 1, 1, 1, 1), True),   # odd perimeter
        ((1, 1, 1, 3), False),     # {1,1,1} is half of 6
        ((1, 1, 1, 1, 1, 4), brute_generic((1, 1, 1, 1, 1, 4))),
        ((2, 2, 3, 3), brute_generic((2, 2, 3, 3))),
    ],
)
def test_is_generic_examples(entries, expected):
    assert is_generic(entries) is expected


def test_is_generic_matches_oracle_random():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(3, 7)
        entries = tuple(rng.randint(1, 9) for _ in range(n))
        assert is_generic(entries) == brute_generic(entries), entries


def test_zero_signed_sum_witness():
    witness = zero_signed_sum((1, 1, 1, 3))
    assert witness is not None
    v = LengthVector((1, 1, 1, 3))
    assert 2 * v.subset_sum(witness) == v.perimeter


def test_is_short_examples():
    assert is_short({5}, (1, 1, 1, 1, 1))
    assert not is_short({3, 4, 5}, (1, 1, 1, 1, 1))
    assert is_short({6}, (1, 1, 1, 1, 1, 4))  # 4 < 5


def test_is_short_rejects_non_generic():
    with pytest.raises(NonGenericError):
        is_short({1}, (1, 1, 1, 3))


def test_short_iff_complement_long():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(4, 8)
        entries = tuple(rng.randint(1, 9) for _ in range(n))
        if not is_generic(entries):
            continue
        for mask in range(1 << n):
            inside = [i + 1 for i in range(n) if (mask >> i) & 1]
            outside = [i + 1 for i in range(n) if not (mask >> i) & 1]
            assert is_short(inside, entries) != is_short(outside, entries)


def test_genetic_code_examples():
    assert genetic_code((1, 1, 1, 1, 1)).genes == ((4, 5),)
    for n in range(4, 9):
        assert genetic_code([1] * (n - 1) + [n - 2]).genes == ((n,),)
    assert genetic_code((1, 1, 1, 1, 1, 4)).genes == ((6,),)


def test_genetic_code_matches_oracle_random():
    rng = random.Random(23)
    checked = 0
    while checked < 120:
        n = rng.randint(4, 8)
        entries = tuple(rng.randint(1, 12) for _ in range(n))
        if not is_generic(entries):
            continue
        assert genetic_code(entries).genes == brute_code(entries), entries
        checked += 1


def test_genetic_code_scale_and_permutation_invariant():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(4, 8)
        entries = [rng.randint(1, 10) for _ in range(n)]
        if not is_generic(entries):
            continue
        code = genetic_code(entries)
        assert genetic_code([3 * e for e in entries]) == code
        shuffled = entries[:]
        rng.shuffle(shuffled)
        assert genetic_code(shuffled) == code


def test_short_family_is_down_closed():
    from polyspace import dominance_leq

    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(4, 8)
        entries = tuple(rng.randint(1, 9) for _ in range(n))
        if not is_generic(entries):
            continue
        fam = short_sets_with_n(entries)
        sets = fam.sets()
        for J in sets:
            for K in sets:
                if dominance_leq(J, K):
                    assert J in fam


def test_empty_code_for_impossible_polygon():
    code = genetic_code((1, 1, 1, 10))
    assert code == GeneticCode(4, [])
    assert code.is_empty
