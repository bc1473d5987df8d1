"""Genetic codes of length vectors and their combinatorics.

A genetic code is an antichain of subsets of [n] containing n, ordered by
dominance: I <= J when the largest |I| elements of J dominate I elementwise.
Realizable codes biject with the chambers of the subset-sum hyperplane
arrangement inside the sorted cone alpha_1 <= ... <= alpha_n, so enumeration
walks the chamber adjacency graph, crossing one wall at a time and certifying
each step with an exact linear-feasibility check plus an integer witness.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .feasible import feasible_point
from .lengths import LengthVector, genetic_code as _genetic_code_of

_ENUM_MIN_N, _ENUM_MAX_N = 4, 9
_TYPE2_SIZES = {(4, 3), (3, 3, 3), (4, 3, 3), (4, 3, 3, 3)}


def dominance_leq(smaller: Iterable[int], larger: Iterable[int]) -> bool:
    """Dominance order on finite sets of positive integers.

    I <= J iff |I| <= |J| and, with both written increasingly, the top |I|
    elements of J dominate I elementwise.
    """
    a = sorted(smaller)
    b = sorted(larger)
    if len(a) > len(b):
        return False
    top = b[len(b) - len(a):]
    return all(x <= y for x, y in zip(a, top))


def _mask_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _mask_of(indices: Iterable[int]) -> int:
    return sum(1 << (i - 1) for i in indices)


@lru_cache(maxsize=None)
def _mask_dominance_table(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Strict dominance among gee masks (subsets of [n-1]).

    Returns (above, below): above[g] has bit h set iff g < h, below[g] has
    bit h set iff h < g.
    """
    if n > 11:
        raise ValueError("dominance table limited to n <= 11")
    size = 1 << (n - 1)
    elems = [_mask_indices(m) for m in range(size)]
    above = [0] * size
    below = [0] * size
    for g in range(size):
        for h in range(size):
            if g != h and dominance_leq(elems[g], elems[h]):
                above[g] |= 1 << h
                below[h] |= 1 << g
    return tuple(above), tuple(below)


def maximal_gee_masks(n: int, gee_masks: Sequence[int]) -> list[int]:
    """Masks in the family with no strict dominator inside the family."""
    if n <= 11:
        above, _ = _mask_dominance_table(n)
        in_family = 0
        for g in gee_masks:
            in_family |= 1 << g
        return [g for g in gee_masks if not above[g] & in_family]
    elems = {g: _mask_indices(g) for g in gee_masks}
    return [
        g for g in gee_masks
        if not any(h != g and dominance_leq(elems[g], elems[h]) for h in gee_masks)
    ]


@dataclass(frozen=True)
class GeneticCode:
    """Canonical antichain of genes (each gene a sorted tuple containing n)."""

    n: int
    genes: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, genes: Iterable[Iterable[int]]):
        n = int(n)
        if n < 1:
            raise ValueError("n must be positive")
        canon = tuple(sorted(tuple(sorted(set(int(i) for i in g))) for g in genes))
        for g in canon:
            if n not in g:
                raise ValueError(f"gene {g} does not contain n={n}")
            if any(i < 1 or i > n for i in g):
                raise ValueError(f"gene {g} has elements outside 1..{n}")
        for i, g in enumerate(canon):
            for h in canon[i + 1:]:
                if dominance_leq(g, h) or dominance_leq(h, g):
                    raise ValueError(f"genes {g} and {h} are dominance-comparable")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "genes", canon)

    @classmethod
    def from_gees(cls, n: int, gees: Iterable[Iterable[int]]) -> "GeneticCode":
        return cls(n, [tuple(g) + (n,) for g in gees])

    @property
    def gees(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(i for i in g if i != self.n) for g in self.genes)

    @property
    def gee_masks(self) -> tuple[int, ...]:
        return tuple(_mask_of(g) for g in self.gees)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted((len(g) for g in self.genes), reverse=True))

    @property
    def is_empty(self) -> bool:
        return not self.genes

    @property
    def dimension(self) -> int:
        return self.n - 3

    def label(self) -> str:
        if self.is_empty:
            return "<>"
        return "<" + ",".join("{" + ",".join(map(str, g)) + "}" for g in self.genes) + ">"

    def to_json(self) -> dict:
        return {"n": self.n, "genes": [list(g) for g in self.genes]}

    @classmethod
    def from_json(cls, data: dict) -> "GeneticCode":
        return cls(data["n"], data["genes"])


@dataclass(frozen=True)
class SubgeeFamily:
    """Subsets of [n-1] that, joined with n, are dominated by some gene.

    These are exactly the admissible supports of V-monomials in the
    cohomology ring; the family is closed downward under dominance.
    """

    n: int
    members: tuple[tuple[int, ...], ...]
    member_set: frozenset = field(repr=False)

    def __contains__(self, subset: Iterable[int]) -> bool:
        return tuple(sorted(subset)) in self.member_set

    def by_size(self, size: int) -> tuple[tuple[int, ...], ...]:
        return tuple(s for s in self.members if len(s) == size)

    @property
    def max_size(self) -> int:
        return max((len(s) for s in self.members), default=0)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _subgee_sort_key(s: tuple[int, ...]) -> tuple:
    return (len(s), tuple(reversed(s)))  # graded colex


def subgees(code: GeneticCode) -> SubgeeFamily:
    """Enumerate the subgee family of a code, graded by size."""
    gees = code.gees
    maxlen = max((len(g) for g in gees), default=0)
    members: list[tuple[int, ...]] = []
    from itertools import combinations

    for size in range(maxlen + 1):
        for s in combinations(range(1, code.n), size):
            if size == 0 or any(dominance_leq(s, g) for g in gees):
                members.append(s)
    members.sort(key=_subgee_sort_key)
    return SubgeeFamily(code.n, tuple(members), frozenset(members))


def _down_set_bitmap(n: int, gene_gee_masks: Sequence[int]) -> int:
    _, below = _mask_dominance_table(n)
    bitmap = 0
    for g in gene_gee_masks:
        bitmap |= below[g] | (1 << g)
    return bitmap


def _minimal_long_masks(n: int, down_bitmap: int) -> list[int]:
    _, below = _mask_dominance_table(n)
    size = 1 << (n - 1)
    longs = ~down_bitmap & ((1 << size) - 1)
    out = []
    mm = longs
    while mm:
        g = (mm & -mm).bit_length() - 1
        if not below[g] & longs:
            out.append(g)
        mm &= mm - 1
    return out


def _realize_masks(n: int, gene_gee_masks: Sequence[int]) -> LengthVector | None:
    """Integer witness for the chamber where exactly the down-set of the given
    genes is short, or None when the chamber is empty."""
    down = _down_set_bitmap(n, gene_gee_masks)
    minlong = _minimal_long_masks(n, down)
    constraints: list[tuple[list[int], int]] = []
    row = [0] * n
    row[0] = 1
    constraints.append((row, 1))
    for i in range(n - 1):
        row = [0] * n
        row[i] = -1
        row[i + 1] = 1
        constraints.append((row, 0))
    for g in gene_gee_masks:
        row = [1] * n
        row[n - 1] = -1
        mm = g
        while mm:
            j = (mm & -mm).bit_length() - 1
            row[j] = -1
            mm &= mm - 1
        constraints.append((row, 1))
    for g in minlong:
        row = [-1] * n
        row[n - 1] = 1
        mm = g
        while mm:
            j = (mm & -mm).bit_length() - 1
            row[j] = 1
            mm &= mm - 1
        constraints.append((row, 1))
    point = feasible_point(n, constraints)
    if point is None:
        return None
    scale = 1
    for v in point:
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    witness = LengthVector(int(v * scale) for v in point)
    if not _chamber_matches(n, witness, down):
        raise RuntimeError("feasibility witness does not match its chamber")
    return witness


def _chamber_matches(n: int, witness: LengthVector, down_bitmap: int) -> bool:
    ent = witness.entries
    total = witness.perimeter
    for g in range(1 << (n - 1)):
        s = ent[n - 1]
        mm = g
        while mm:
            j = (mm & -mm).bit_length() - 1
            s += ent[j]
            mm &= mm - 1
        if 2 * s == total:
            return False
        if (2 * s < total) != bool((down_bitmap >> g) & 1):
            return False
    return True


def realizable(candidate: GeneticCode) -> tuple[bool, LengthVector | None]:
    """Decide whether some length vector has exactly this genetic code.

    Exact test: the genes must be short, every set containing n that none of
    them dominates must be long, and the sorted-cone inequalities must hold.
    """
    witness = _realize_masks(candidate.n, candidate.gee_masks)
    if witness is None:
        return False, None
    return True, witness


@lru_cache(maxsize=None)
def _enumerate_raw(n: int) -> tuple[tuple[GeneticCode, LengthVector], ...]:
    """All nonempty realizable codes for n, found by walking chamber adjacency."""
    from collections import deque

    start_alpha = LengthVector([1] * (n - 1) + [n - 2])
    start = _genetic_code_of(start_alpha)
    seen = {start.gee_masks: start_alpha}
    queue = deque([start])
    tested: set[int] = set()
    order = [(start, start_alpha)]
    while queue:
        code = queue.popleft()
        down = _down_set_bitmap(n, code.gee_masks)
        flips = [(g, False) for g in code.gee_masks]
        flips += [(g, True) for g in _minimal_long_masks(n, down)]
        for gmask, to_short in flips:
            new_down = down | (1 << gmask) if to_short else down & ~(1 << gmask)
            if new_down in tested:
                continue
            tested.add(new_down)
            if not new_down:
                continue  # no short sets: empty moduli space
            members = []
            mm = new_down
            while mm:
                members.append((mm & -mm).bit_length() - 1)
                mm &= mm - 1
            new_genes = tuple(maximal_gee_masks(n, members))
            neighbor = GeneticCode.from_gees(n, [_mask_indices(g) for g in new_genes])
            if neighbor.gee_masks in seen:
                continue
            witness = _realize_masks(n, neighbor.gee_masks)
            if witness is None:
                continue
            seen[neighbor.gee_masks] = witness
            queue.append(neighbor)
            order.append((neighbor, witness))
    order.sort(key=lambda cw: (len(cw[0].genes), cw[0].genes))
    return tuple(order)


@lru_cache(maxsize=None)
def _n7_gee_families() -> frozenset[frozenset[tuple[int, ...]]]:
    return frozenset(frozenset(code.gees) for code, _ in _enumerate_raw(7))


@dataclass(frozen=True)
class CodeSignature:
    """Shape classification of a genetic code.

    Template parameters are present only when the code matches the
    corresponding shape exactly; sizes are listed largest first.
    """

    sizes: tuple[int, ...]
    type1: bool
    type2: bool
    monogenic_pair: int | None = None
    monogenic_triple: tuple[int, int] | None = None
    monogenic_quad: tuple[int, int, int] | None = None
    two_triples: tuple[int, int, int, int] | None = None
    type1_template: tuple[int, int, int] | None = None
    contains_pair: int | None = None

    def to_json(self) -> dict:
        return {
            "sizes": list(self.sizes),
            "type1": self.type1,
            "type2": self.type2,
            "monogenic_pair": self.monogenic_pair,
            "monogenic_triple": list(self.monogenic_triple) if self.monogenic_triple else None,
            "monogenic_quad": list(self.monogenic_quad) if self.monogenic_quad else None,
            "two_triples": list(self.two_triples) if self.two_triples else None,
            "type1_template": list(self.type1_template) if self.type1_template else None,
            "contains_pair": self.contains_pair,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CodeSignature":
        def tup(x):
            return tuple(x) if x is not None else None

        return cls(
            sizes=tuple(data["sizes"]),
            type1=data["type1"],
            type2=data["type2"],
            monogenic_pair=data.get("monogenic_pair"),
            monogenic_triple=tup(data.get("monogenic_triple")),
            monogenic_quad=tup(data.get("monogenic_quad")),
            two_triples=tup(data.get("two_triples")),
            type1_template=tup(data.get("type1_template")),
            contains_pair=data.get("contains_pair"),
        )


def classify(code: GeneticCode) -> CodeSignature:
    """Gene-size signature, Type 1 / Type 2 tests, and template parameters."""
    genes = code.genes
    n = code.n
    sizes = code.sizes
    type1 = len(genes) == 2 and all(1 in g for g in genes)
    type2 = False
    if sizes in _TYPE2_SIZES and not type1 and n >= 7:
        gees = code.gees
        if all(max(g) <= 6 for g in gees):
            type2 = frozenset(gees) in _n7_gee_families()

    monogenic_pair = monogenic_triple = monogenic_quad = None
    two_triples = type1_template = None
    if len(genes) == 1:
        gee = code.gees[0]
        if len(gee) == 1:
            monogenic_pair = gee[0]
        elif len(gee) == 2:
            monogenic_triple = (gee[0], gee[1] - gee[0])
        elif len(gee) == 3:
            monogenic_quad = (gee[0], gee[1] - gee[0], gee[2] - gee[1])
    elif len(genes) == 2 and sizes == (3, 3):
        (x1, y1), (x2, y2) = sorted(code.gees)
        # template <{a+b, a+b+c, n}, {a, a+b+c+d, n}>: x1 < x2 < y2 < y1
        if x1 < x2 < y2 < y1:
            two_triples = (x1, x2 - x1, y2 - x2, y1 - y2)
    elif type1 and sizes == (4, 3):
        quad = next(g for g in code.gees if len(g) == 3)
        tri = next(g for g in code.gees if len(g) == 2)
        if quad[0] == 1 and tri[0] == 1 and tri[1] > quad[2]:
            # template <{1, 1+b, 1+b+c, n}, {1, 1+b+c+d, n}>
            type1_template = (quad[1] - 1, quad[2] - quad[1], tri[1] - quad[2])
    contains_pair = next((g[0] for g in code.gees if len(g) == 1), None)
    return CodeSignature(
        sizes=sizes,
        type1=type1,
        type2=type2,
        monogenic_pair=monogenic_pair,
        monogenic_triple=monogenic_triple,
        monogenic_quad=monogenic_quad,
        two_triples=two_triples,
        type1_template=type1_template,
        contains_pair=contains_pair,
    )


@dataclass(frozen=True)
class EnumeratedCode:
    code: GeneticCode
    witness: LengthVector
    signature: CodeSignature

    def to_json(self) -> dict:
        return {
            "genes": [list(g) for g in self.code.genes],
            "witness": list(self.witness.entries),
            "signature": self.signature.to_json(),
        }


def enumerate_genetic_codes(n: int, cache_dir: str | Path | None = None) -> list[EnumeratedCode]:
    """All realizable nonempty genetic codes for n, in canonical order.

    Results are cached per n as JSON when cache_dir is given.
    """
    if not _ENUM_MIN_N <= n <= _ENUM_MAX_N:
        raise ValueError(f"enumeration supported for {_ENUM_MIN_N} <= n <= {_ENUM_MAX_N}")
    cache_file = None
    if cache_dir is not None:
        cache_file = Path(cache_dir) / f"codes_n{n}.json"
        if cache_file.exists():
            data = json.loads(cache_file.read_text())
            if data.get("n") == n:
                return [
                    EnumeratedCode(
                        GeneticCode(n, entry["genes"]),
                        LengthVector(entry["witness"]),
                        CodeSignature.from_json(entry["signature"]),
                    )
                    for entry in data["codes"]
                ]
    out = [
        EnumeratedCode(code, witness, classify(code))
        for code, witness in _enumerate_raw(n)
    ]
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(
            json.dumps({"n": n, "codes": [e.to_json() for e in out]}, indent=1)
        )
    return out
