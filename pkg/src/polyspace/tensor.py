"""Exact arithmetic in tensor powers of the cohomology ring.

Classes of the k-fold tensor power are stored sparsely as sets of keys, one
key per elementary tensor of quotient-basis elements; a key records (degree,
basis index) for each of the k positions.  Multiplication works factorwise
through cached basis multiplication tables and drops any key whose factor
degree exceeds the manifold dimension, which keeps certificate products small.

Certificates are symbolic products of zero-divisor factors (differences of
the same degree-one generator placed at two or more positions).  Evaluating a
certificate is an exact computation; a nonzero result is a machine-checkable
lower-bound witness for the zero-divisor cup length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _iterproduct

from .cohomology import CohoClass, RingPresentation, build_ring
from .genetics import GeneticCode

Key = tuple[tuple[int, int], ...]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class TensorClass:
    ring: RingPresentation
    k: int
    keys: frozenset[Key]

    @property
    def is_zero(self) -> bool:
        return not self.keys

    def __add__(self, other: "TensorClass") -> "TensorClass":
        if other.ring is not self.ring or other.k != self.k:
            raise ValueError("mismatched tensor powers")
        return TensorClass(self.ring, self.k, self.keys ^ other.keys)

    def __mul__(self, other: "TensorClass") -> "TensorClass":
        return tensor_multiply(self, other)

    def multidegrees(self) -> set[tuple[int, ...]]:
        return {tuple(d for d, _ in key) for key in self.keys}

    def component(self, multidegree: tuple[int, ...]) -> "TensorClass":
        keys = frozenset(
            key for key in self.keys if tuple(d for d, _ in key) == multidegree
        )
        return TensorClass(self.ring, self.k, keys)

    def __repr__(self) -> str:
        return f"TensorClass(k={self.k}, {len(self.keys)} keys)"


def unit(ring: RingPresentation, k: int) -> TensorClass:
    if k < 1:
        raise ValueError("tensor power k must be >= 1")
    return TensorClass(ring, k, frozenset({tuple((0, 0) for _ in range(k))}))


def zero(ring: RingPresentation, k: int) -> TensorClass:
    return TensorClass(ring, k, frozenset())


def embed(position: int, x: CohoClass, k: int) -> TensorClass:
    """x placed in the given factor (1-based), identity elsewhere."""
    if not 1 <= position <= k:
        raise ValueError(f"position {position} outside 1..{k}")
    ring = x.ring
    keys = set()
    for idx in ring.coords_to_basis(x.degree, x.coords):
        keys.add(tuple(
            (x.degree, idx) if p == position else (0, 0) for p in range(1, k + 1)
        ))
    return TensorClass(ring, k, frozenset(keys))


def position_sum(positions: tuple[int, ...], g: CohoClass, k: int) -> TensorClass:
    """Sum of embeddings of one class at several positions; a zero divisor
    whenever the number of positions is even."""
    if len(set(positions)) != len(positions) or not positions:
        raise ValueError("positions must be distinct and nonempty")
    out = zero(g.ring, k)
    for p in positions:
        out = out + embed(p, g, k)
    return out


def bar(position: int, g: CohoClass, k: int) -> TensorClass:
    """embed(position, g) + embed(position - 1, g); lies in ker of the
    diagonal pullback."""
    if position < 2:
        raise ValueError("bar needs position >= 2")
    return position_sum((position - 1, position), g, k)


def tensor_multiply(x: TensorClass, y: TensorClass, max_keys: int | None = None) -> TensorClass:
    if y.ring is not x.ring or y.k != x.k:
        raise ValueError("mismatched tensor powers")
    ring = x.ring
    m = ring.m
    out: set[Key] = set()
    for ka in x.keys:
        for kb in y.keys:
            parts = []
            dead = False
            for (d1, i1), (d2, i2) in zip(ka, kb):
                if d1 + d2 > m:
                    dead = True
                    break
                res = ring.mult_basis(d1, i1, d2, i2)
                if not res:
                    dead = True
                    break
                parts.append([(d1 + d2, j) for j in res])
            if dead:
                continue
            for combo in _iterproduct(*parts):
                key = tuple(combo)
                if key in out:
                    out.remove(key)
                else:
                    out.add(key)
            if max_keys is not None and len(out) > max_keys:
                raise BudgetExceeded(f"tensor product exceeded {max_keys} keys")
    return TensorClass(ring, x.k, frozenset(out))


def is_zero(x: TensorClass) -> bool:
    return x.is_zero


def diagonal_pullback(x: TensorClass) -> CohoClass:
    """Image under the k-fold diagonal: multiply the factors out in the ring."""
    ring = x.ring
    total = {sum(d for d, _ in key) for key in x.keys} or {0}
    if len(total) > 1:
        raise ValueError("mixed total degree")
    deg = total.pop()
    acc = ring.zero(deg)
    for key in x.keys:
        term = ring.one()
        for d, i in key:
            term = ring.multiply(term, ring.class_from_basis(d, (i,)))
        acc = acc + term
    return acc


# -- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class Factor:
    """One symbolic zero-divisor factor of a certificate.

    kind 'bar' places gen at pos and pos-1; 'sum' at an explicit position
    tuple; 'embed' is a plain projection pullback (not itself a zero divisor,
    only used inside verified products).
    """

    kind: str
    gen: str
    exp: int
    pos: int | None = None
    positions: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("bar", "embed", "sum"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.kind in ("bar", "embed") and self.pos is None:
            raise ValueError(f"{self.kind} factor needs pos")
        if self.kind == "sum" and not self.positions:
            raise ValueError("sum factor needs positions")
        if self.exp < 1:
            raise ValueError("exponent must be positive")

    def build(self, ring: RingPresentation, k: int) -> TensorClass:
        g = ring.generator(self.gen)
        if self.kind == "embed":
            return embed(self.pos, g, k)
        if self.kind == "bar":
            return bar(self.pos, g, k)
        return position_sum(tuple(self.positions), g, k)

    def to_json(self) -> dict:
        data = {"kind": self.kind, "gen": self.gen, "exp": self.exp}
        if self.pos is not None:
            data["pos"] = self.pos
        if self.positions is not None:
            data["positions"] = list(self.positions)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "Factor":
        return cls(
            kind=data["kind"],
            gen=data["gen"],
            exp=data["exp"],
            pos=data.get("pos"),
            positions=tuple(data["positions"]) if data.get("positions") else None,
        )


@dataclass(frozen=True)
class Certificate:
    """Symbolic zero-divisor product with its claimed length."""

    code: GeneticCode
    k: int
    factors: tuple[Factor, ...]
    label: str = ""

    @property
    def length(self) -> int:
        return sum(f.exp for f in self.factors)

    def to_json(self) -> dict:
        return {
            "code": self.code.to_json(),
            "k": self.k,
            "factors": [f.to_json() for f in self.factors],
            "length": self.length,
            "label": self.label,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        cert = cls(
            code=GeneticCode.from_json(data["code"]),
            k=data["k"],
            factors=tuple(Factor.from_json(f) for f in data["factors"]),
            label=data.get("label", ""),
        )
        if "length" in data and data["length"] != cert.length:
            raise ValueError("stored length disagrees with factor exponents")
        return cert


@dataclass(frozen=True)
class CertificateResult:
    nonzero: bool
    length: int
    witness_multidegree: tuple[int, ...] | None
    keys: int = 0


def evaluate_certificate(
    cert: Certificate,
    ring: RingPresentation | None = None,
    max_keys: int | None = None,
) -> CertificateResult:
    """Exact evaluation of a certificate product.

    Returns nonzero=True with one surviving multidegree as witness, or
    nonzero=False when the product vanishes.
    """
    if ring is None:
        ring = build_ring(cert.code)
    elif ring.code != cert.code:
        raise ValueError("certificate was issued for a different genetic code")
    k = cert.k
    if k < 2:
        raise ValueError("certificates need k >= 2")
    for f in cert.factors:
        for p in (f.positions or (f.pos,)):
            if not 1 <= p <= k:
                raise ValueError(f"factor position {p} outside 1..{k}")
    acc = unit(ring, k)
    for f in cert.factors:
        base = f.build(ring, k)
        for _ in range(f.exp):
            acc = tensor_multiply(acc, base, max_keys=max_keys)
            if acc.is_zero:
                return CertificateResult(False, cert.length, None)
    witness = min(acc.multidegrees())
    return CertificateResult(True, cert.length, witness, len(acc.keys))


# -- zero-divisor cup length search -----------------------------------------


@dataclass(frozen=True)
class ZclSearchResult:
    length: int
    certificate: Certificate | None
    exhaustive: bool
    nodes: int


def _distinct_degree_one(ring: RingPresentation) -> list[tuple[str, CohoClass]]:
    seen: dict[int, str] = {}
    out = []
    for name, cls in ring.degree_one_generators():
        if cls.is_zero or cls.coords in seen:
            continue
        seen[cls.coords] = name
        out.append((name, cls))
    return out


def zcl_lower_bound(ring: RingPresentation, k: int, budget: int = 20000) -> ZclSearchResult:
    """Best zero-divisor product found within a node budget.

    The pool holds degree-one kernel factors: position differences of each
    distinct generator.  When H^1 is one-dimensional the pool covers every
    degree-one zero divisor and all positive-degree classes, so the search is
    a complete computation of zcl_k; otherwise the result is only a certified
    lower bound (never a claim of optimality).
    """
    if k < 2:
        raise ValueError("zcl search needs k >= 2")
    gens = _distinct_degree_one(ring)
    exhaustive = len(gens) == 1
    pool: list[tuple[tuple[int, ...], str]] = []
    if exhaustive:
        name = gens[0][0]
        for mask in range(1, 1 << k):
            if bin(mask).count("1") % 2 == 0:
                pool.append((tuple(p + 1 for p in range(k) if (mask >> p) & 1), name))
    else:
        for name, _ in gens:
            for j in range(2, k + 1):
                pool.append(((j - 1, j), name))
            for j in range(3, k + 1):
                pool.append(((1, j), name))
    built = [position_sum(pos, ring.generator(name), k) for pos, name in pool]

    best_len = 0
    best_stack: list[int] = []
    nodes = 0
    max_len = k * ring.m

    def dfs(current: TensorClass, start: int, stack: list[int]) -> bool:
        nonlocal best_len, best_stack, nodes
        if len(stack) > best_len:
            best_len = len(stack)
            best_stack = stack[:]
        if len(stack) >= max_len:
            return True
        for i in range(start, len(pool)):
            nodes += 1
            if nodes > budget:
                return False
            nxt = tensor_multiply(current, built[i])
            if nxt.is_zero:
                continue
            stack.append(i)
            done = dfs(nxt, i, stack)
            stack.pop()
            if not done:
                return False
        return True

    completed = dfs(unit(ring, k), 0, [])
    cert = None
    if best_stack:
        factors = []
        counts: dict[int, int] = {}
        for i in best_stack:
            counts[i] = counts.get(i, 0) + 1
        for i, e in sorted(counts.items()):
            pos, name = pool[i]
            factors.append(Factor(kind="sum", gen=name, exp=e, positions=pos))
        cert = Certificate(ring.code, k, tuple(factors), label="zcl-search")
    return ZclSearchResult(best_len, cert, exhaustive and completed, nodes)
