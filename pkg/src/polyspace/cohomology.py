"""The mod-2 cohomology ring of a planar polygon space, from its genetic code.

The ring is generated in degree one by R and V_1 ... V_{n-1}.  V-squares
rewrite as V_i^2 = R V_i, monomials with non-subgee support vanish, and for
every subgee S of size >= n-d-2 the degree-d sum of R^{d-|T|} V_T over subgees
T disjoint from S (including T empty) is a relation.  Monomials R^{d-|S|} V_S
over subgees S therefore span each degree, and a fixed graded-colex order
plus GF(2) row reduction gives canonical coordinates.

The space is a closed connected (n-3)-manifold, so construction verifies
H^0 and H^top are one-dimensional and everything above the top degree dies;
a failure means the code is not realizable or the caller's data is corrupt.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import linsys
from .genetics import GeneticCode, SubgeeFamily, subgees

Monomial = tuple[int, tuple[int, ...]]  # (R-exponent, V-support)


class RingConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class CohoClass:
    """Element of one graded piece, in normal form.

    coords is a bit vector over the degree's monomial list, already reduced
    modulo the relation span.
    """

    ring: "RingPresentation"
    degree: int
    coords: int

    @property
    def is_zero(self) -> bool:
        return self.coords == 0

    def __add__(self, other: "CohoClass") -> "CohoClass":
        if other.ring is not self.ring or other.degree != self.degree:
            raise ValueError("can only add classes of equal degree in the same ring")
        return CohoClass(self.ring, self.degree, self.coords ^ other.coords)

    def __mul__(self, other: "CohoClass") -> "CohoClass":
        return self.ring.multiply(self, other)

    def __pow__(self, e: int) -> "CohoClass":
        if e < 0:
            raise ValueError("negative powers undefined")
        out = self.ring.one()
        for _ in range(e):
            out = self.ring.multiply(out, self)
        return out

    def support(self) -> list[Monomial]:
        """Monomials with coefficient 1, as (R-exponent, V-support) pairs."""
        if self.degree > self.ring.top_degree:
            return []
        mons = self.ring.monomials(self.degree)
        return [mons[i] for i in range(len(mons)) if (self.coords >> i) & 1]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "support": [[r, list(s)] for r, s in self.support()],
        }

    def __repr__(self) -> str:
        if self.is_zero:
            return f"CohoClass(0, degree={self.degree})"
        terms = []
        for r, s in self.support():
            factors = ([f"R^{r}"] if r > 1 else ["R"] if r == 1 else [])
            factors += [f"V{i}" for i in s]
            terms.append("*".join(factors) or "1")
        return "CohoClass(" + " + ".join(terms) + f", degree={self.degree})"


class RingPresentation:
    """Per-degree bases and reduction maps for one genetic code."""

    def __init__(self, code: GeneticCode):
        if code.is_empty:
            raise RingConstructionError("empty genetic code: the moduli space is empty")
        if code.n < 4:
            raise RingConstructionError("cohomology engine needs n >= 4")
        self.code = code
        self.n = code.n
        self.m = code.n - 3
        self.subgee_family: SubgeeFamily = subgees(code)
        if self.subgee_family.max_size > self.m:
            raise RingConstructionError("gee larger than the manifold dimension")
        self._mons: dict[int, tuple[tuple[int, ...], ...]] = {}
        self._monidx: dict[int, dict[tuple[int, ...], int]] = {}
        self._rows: dict[int, tuple[int, ...]] = {}
        self._pivots: dict[int, tuple[int, ...]] = {}
        self._basis_cols: dict[int, tuple[int, ...]] = {}
        self._basis_idx: dict[int, dict[int, int]] = {}
        for d in range(self.m + 2):
            self._build_degree(d)
        if self.dim(self.m + 1) != 0:
            raise RingConstructionError(
                "relations do not annihilate degree m+1; inconsistent code"
            )
        if self.dim(0) != 1 or self.dim(self.m) != 1:
            raise RingConstructionError("H^0 or H^top is not one-dimensional")
        self._mult_cache: dict[tuple[int, int, int, int], tuple[int, ...]] = {}

    def _build_degree(self, d: int) -> None:
        mons = tuple(s for s in self.subgee_family if len(s) <= d)
        monidx = {s: i for i, s in enumerate(mons)}
        raw = []
        for s in self.subgee_family:
            if len(s) >= self.n - d - 2:
                row = 0
                sset = set(s)
                for t in mons:
                    if not sset.intersection(t):
                        row |= 1 << monidx[t]
                raw.append(row)
        reduced, pivots, _ = linsys.rref(linsys.BitMatrix(tuple(raw), len(mons)))
        self._mons[d] = mons
        self._monidx[d] = monidx
        self._rows[d] = reduced.rows
        self._pivots[d] = pivots
        pivot_set = set(pivots)
        cols = tuple(i for i in range(len(mons)) if i not in pivot_set)
        self._basis_cols[d] = cols
        self._basis_idx[d] = {c: i for i, c in enumerate(cols)}

    # -- structure ---------------------------------------------------------

    @property
    def top_degree(self) -> int:
        return self.m + 1

    def dim(self, d: int) -> int:
        if d < 0 or d > self.m + 1:
            return 0
        return len(self._basis_cols[d])

    @property
    def dims(self) -> tuple[int, ...]:
        """dim H^d for d = 0 .. m."""
        return tuple(self.dim(d) for d in range(self.m + 1))

    def monomials(self, d: int) -> list[Monomial]:
        return [(d - len(s), s) for s in self._mons[d]]

    def relation_rows(self, d: int) -> tuple[int, ...]:
        """Echelonized relation span of degree d (over the monomial columns)."""
        return self._rows[d]

    def reduce(self, d: int, vec: int) -> int:
        for row, p in zip(self._rows[d], self._pivots[d]):
            if (vec >> p) & 1:
                vec ^= row
        return vec

    def monomial_index(self, d: int, support: Iterable[int]) -> int | None:
        return self._monidx[d].get(tuple(sorted(support)))

    # -- classes -----------------------------------------------------------

    def zero(self, d: int = 0) -> CohoClass:
        return CohoClass(self, d, 0)

    def one(self) -> CohoClass:
        return self.monomial(0, ())

    def monomial(self, d: int, support: Iterable[int]) -> CohoClass:
        """Normal form of R^(d-|S|) V_S; zero when S is not a subgee."""
        s = tuple(sorted(support))
        if d > self.m:
            return CohoClass(self, d, 0)
        idx = self._monidx[d].get(s)
        if idx is None:
            return CohoClass(self, d, 0)
        return CohoClass(self, d, self.reduce(d, 1 << idx))

    def R(self) -> CohoClass:
        return self.monomial(1, ())

    def V(self, i: int) -> CohoClass:
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"V index {i} outside 1..{self.n - 1}")
        return self.monomial(1, (i,))

    def generator(self, name: str) -> CohoClass:
        """Degree-1 generator by name: 'R' or 'V<i>'."""
        if name == "R":
            return self.R()
        if name.startswith("V"):
            return self.V(int(name[1:]))
        raise ValueError(f"unknown generator {name!r}")

    def degree_one_generators(self) -> list[tuple[str, CohoClass]]:
        gens = [("R", self.R())]
        gens += [(f"V{i}", self.V(i)) for i in range(1, self.n)]
        return gens

    def basis(self, d: int) -> list[CohoClass]:
        return [CohoClass(self, d, 1 << c) for c in self._basis_cols[d]]

    def basis_monomial(self, d: int, index: int) -> Monomial:
        s = self._mons[d][self._basis_cols[d][index]]
        return (d - len(s), s)

    def basis_column(self, d: int, index: int) -> int:
        """Monomial column backing the given quotient-basis element."""
        return self._basis_cols[d][index]

    def raw_relation_rows(self, d: int) -> list[tuple[tuple[int, ...], int]]:
        """Unreduced relation rows of degree d, one per qualifying subgee."""
        out = []
        mons = self._mons[d]
        monidx = self._monidx[d]
        for s in self.subgee_family:
            if len(s) >= self.n - d - 2:
                row = 0
                sset = set(s)
                for t in mons:
                    if not sset.intersection(t):
                        row |= 1 << monidx[t]
                out.append((s, row))
        return out

    def coords_to_basis(self, d: int, coords: int) -> tuple[int, ...]:
        idx = self._basis_idx[d]
        out = []
        while coords:
            c = (coords & -coords).bit_length() - 1
            out.append(idx[c])
            coords &= coords - 1
        return tuple(sorted(out))

    def class_from_basis(self, d: int, indices: Iterable[int]) -> CohoClass:
        coords = 0
        for i in indices:
            coords ^= 1 << self._basis_cols[d][i]
        return CohoClass(self, d, coords)

    # -- operations --------------------------------------------------------

    def multiply(self, x: CohoClass, y: CohoClass) -> CohoClass:
        if x.ring is not self or y.ring is not self:
            raise ValueError("classes from a different ring")
        d = x.degree + y.degree
        if d > self.m:
            return CohoClass(self, d, 0)
        out = 0
        xc = x.coords
        while xc:
            i = (xc & -xc).bit_length() - 1
            xc &= xc - 1
            s = self._mons[x.degree][i]
            sset = set(s)
            yc = y.coords
            while yc:
                j = (yc & -yc).bit_length() - 1
                yc &= yc - 1
                t = self._mons[y.degree][j]
                union = tuple(sorted(sset.union(t)))
                idx = self._monidx[d].get(union)
                if idx is not None:
                    out ^= 1 << idx
        return CohoClass(self, d, self.reduce(d, out))

    def mult_basis(self, d1: int, i1: int, d2: int, i2: int) -> tuple[int, ...]:
        """Product of quotient-basis elements, as basis indices in degree d1+d2."""
        key = (d1, i1, d2, i2)
        cached = self._mult_cache.get(key)
        if cached is not None:
            return cached
        d = d1 + d2
        if d > self.m:
            res: tuple[int, ...] = ()
        else:
            s = self._mons[d1][self._basis_cols[d1][i1]]
            t = self._mons[d2][self._basis_cols[d2][i2]]
            union = tuple(sorted(set(s).union(t)))
            idx = self._monidx[d].get(union)
            if idx is None:
                res = ()
            else:
                res = self.coords_to_basis(d, self.reduce(d, 1 << idx))
        self._mult_cache[key] = res
        return res

    def phi(self, x: CohoClass) -> int:
        """Top-degree coordinate under the Poincare duality identification."""
        if x.degree != self.m:
            raise ValueError(f"phi needs degree {self.m}, got {x.degree}")
        col = self._basis_cols[self.m][0]
        return (x.coords >> col) & 1

    def phi_S(self, support: Iterable[int]) -> int:
        """phi of the monomial R^(m-|S|) V_S for a subgee S."""
        s = tuple(sorted(support))
        if s not in self.subgee_family:
            raise ValueError(f"{s} is not a subgee of {self.code.label()}")
        return self.phi(self.monomial(self.m, s))

    def __repr__(self) -> str:
        return f"RingPresentation({self.code.label()}, dims={self.dims})"


@lru_cache(maxsize=256)
def build_ring(code: GeneticCode) -> RingPresentation:
    """Construct and verify the ring presentation for a genetic code."""
    return RingPresentation(code)


def multiply(x: CohoClass, y: CohoClass) -> CohoClass:
    return x.ring.multiply(x, y)


def phi(x: CohoClass) -> int:
    return x.ring.phi(x)


def phi_S(code_or_ring: "GeneticCode | RingPresentation", support: Iterable[int]) -> int:
    ring = code_or_ring if isinstance(code_or_ring, RingPresentation) else build_ring(code_or_ring)
    return ring.phi_S(support)


def cup_length(ring: RingPresentation) -> tuple[int, Monomial]:
    """Longest nonzero product of positive-degree classes, with a witness.

    Products of more than m degree-one classes land above the top degree and
    vanish, while H^top is spanned by monomials that factor into exactly m
    generators, so the answer is always m; the witness is a monomial with
    nonzero top coordinate.
    """
    m = ring.m
    for s in ring.subgee_family:
        if len(s) <= m and ring.phi_S(s):
            return m, (m - len(s), s)
    raise RingConstructionError("no nonzero top monomial; ring is corrupt")


def ls_category(ring: RingPresentation) -> int:
    """Exact Lusternik-Schnirelmann category: cup length + 1 = m + 1.

    The cup-length lower bound meets the dimensional upper bound, so this is
    not merely a bound.
    """
    length, _ = cup_length(ring)
    return length + 1


def verify_poincare_pairing(ring: RingPresentation) -> bool:
    """Check the pairing H^d x H^(m-d) -> H^m is perfect in all degrees."""
    m = ring.m
    for d in range(m + 1):
        a = ring.basis(d)
        b = ring.basis(m - d)
        if len(a) != len(b):
            return False
        rows = []
        for x in a:
            row = 0
            for j, y in enumerate(b):
                if ring.phi(ring.multiply(x, y)):
                    row |= 1 << j
            rows.append(row)
        _, _, rank = linsys.rref(linsys.BitMatrix(tuple(rows), len(b)))
        if rank != len(a):
            return False
    return True


@dataclass(frozen=True)
class MonomialType:
    """Interval-block shape of a V-support relative to template cut points.

    pattern lists the (1-based) block of each support element; counts[i] is
    the number of elements in block i+1.
    """

    pattern: tuple[int, ...]
    counts: tuple[int, ...]

    @classmethod
    def of(cls, support: Iterable[int], cuts: tuple[int, ...]) -> "MonomialType":
        pattern = []
        for i in sorted(support):
            block = 1
            for c in cuts:
                if i <= c:
                    break
                block += 1
            pattern.append(block)
        nblocks = len(cuts) + 1
        counts = tuple(pattern.count(b) for b in range(1, nblocks + 1))
        return cls(tuple(pattern), counts)
