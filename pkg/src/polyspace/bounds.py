"""Sequential topological-complexity bounds assembled from the ring engine.

For each code shape the dispatcher knows a lower-bound rule, its arithmetic
hypotheses (parity and two-power conditions), and a zero-divisor certificate
construction; the dimensional upper bound k*m + 1 always applies.  Claimed
lower bounds can be re-verified by evaluating the certificates exactly in the
tensor engine, so nothing rests on trusting the dispatch logic.

The parity lemmas below characterize when the top power of R survives.  Two
of them are stated here in a corrected form: the published case lists
contradict the closed-form top-coordinate formulas (and the ring itself) on
part of the parameter range, so the conditions equivalent to the verified
formulas are used instead; see the repository's decision notes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Hashable, Iterable

from . import linsys
from .cohomology import CohoClass, RingPresentation, build_ring
from .genetics import CodeSignature, GeneticCode, classify
from .tensor import (
    BudgetExceeded,
    Certificate,
    CertificateResult,
    Factor,
    TensorClass,
    bar,
    evaluate_certificate,
    tensor_multiply,
    unit,
)

_27TH_GEES = frozenset({(1, 6), (2, 5), (3, 4)})


def _is_power_of_two(x: int) -> bool:
    return x >= 1 and x & (x - 1) == 0


def _ceil_pow2_exponent(m: int) -> int:
    """Smallest t with m <= 2^t."""
    return (m - 1).bit_length()


def lucas_binom_mod2(n: int, k: int) -> int:
    """Parity of C(n, k): odd iff the binary digits of k are dominated by n's."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return int(k & ~n == 0)


def lemma_size3(a: int, b: int) -> bool:
    """Whether R^m is nonzero for the monogenic code <{a, a+b, n}>."""
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    if a % 4 == 3:
        return True
    if a % 4 == 0 and b % 2 == 0:
        return True
    return a % 4 == 2 and b % 2 == 1


def lemma_size4(a: int, b: int, c: int) -> bool:
    """Whether R^m is nonzero for the monogenic code <{a, a+b, a+b+c, n}>.

    Equivalent to the parity of C(a,2)(a+b+c-1) + (a-1)(C(b,2)+(b-1)(c-1)).
    """
    if a < 1 or b < 1 or c < 1:
        raise ValueError("need a, b, c >= 1")
    if (b + c) % 2 == 0:
        if a % 2:
            return False
        if b % 2 == 0:
            return (a + b) % 4 == 0
        return (a % 4 == 2) != (b % 4 == 3)
    return a % 4 == 3 or (a % 2 == 0 and b % 4 in (2, 3))


def lemma_two3genes(a: int, b: int, c: int, d: int) -> bool:
    """Whether R^m is nonzero for <{a+b, a+b+c, n}, {a, a+b+c+d, n}>.

    The top coordinate splits as
    [C(a-1,2) + C(b,2) + bc + (a-1)(b+c)] + [(a+1)d];
    it is odd exactly when the two parts have opposite parity.
    """
    if min(a, b, c, d) < 1:
        raise ValueError("need a, b, c, d >= 1")
    first = comb(a - 1, 2) + comb(b, 2) + b * c + (a - 1) * (b + c)
    second = (a + 1) * d
    return first % 2 != second % 2


# -- uniform functionals on H^(m-1) ------------------------------------------


@dataclass(frozen=True)
class PsiTemplate:
    """Constraints defining a candidate functional on degree m-1.

    orbit_of maps each monomial support to its uniformity class (None skips
    uniformity); pins force values on individual supports.
    """

    label: str
    orbit_of: Callable[[tuple[int, ...]], Hashable] | None = None
    pins: tuple[tuple[tuple[int, ...], int], ...] = ()


@dataclass(frozen=True)
class PhiPsiTarget:
    """Requires (phi tensor psi) of the (m, m-1)-bidegree part of a k=2
    product to take the given value."""

    product: TensorClass
    expected: int = 1
    label: str = ""


@dataclass(frozen=True)
class FunctionalTarget:
    """Requires sum of psi over the listed supports (with parities) to take
    the given value."""

    coefficients: tuple[tuple[tuple[int, ...], int], ...]
    expected: int
    label: str = ""


@dataclass(frozen=True)
class PsiSolution:
    code: GeneticCode
    template: str
    values: dict[tuple[int, ...], int]
    orbit_values: dict | None
    targets: tuple[str, ...]

    def value(self, support: Iterable[int]) -> int:
        return self.values.get(tuple(sorted(support)), 0)


def _phi_contract(ring: RingPresentation, product: TensorClass) -> int:
    """Bit vector over degree-(m-1) monomial columns: phi applied to the first
    factor of the (m, m-1)-bidegree component."""
    m = ring.m
    row = 0
    for key in product.keys:
        (d1, _i1), (d2, i2) = key
        if d1 == m and d2 == m - 1:
            # dim H^m == 1, so phi of any top basis element is 1
            row ^= 1 << ring.basis_column(m - 1, i2)
    return row


def solve_psi(
    code_or_ring: GeneticCode | RingPresentation,
    template: PsiTemplate,
    targets: Iterable[PhiPsiTarget | FunctionalTarget] = (),
) -> PsiSolution | None:
    """Find a functional on H^(m-1) meeting the template and targets.

    The functional must kill every degree-(m-1) relation (so it is
    well-defined on cohomology), be constant on the template's uniformity
    orbits, honor the pins, and satisfy each target equation.  Returns None
    when the combined linear system is inconsistent.
    """
    ring = code_or_ring if isinstance(code_or_ring, RingPresentation) else build_ring(code_or_ring)
    d = ring.m - 1
    if d < 0:
        return None
    supports = [s for _, s in ring.monomials(d)]
    index = {s: i for i, s in enumerate(supports)}
    rows: list[int] = []
    rhs: list[int] = []
    for row in ring.relation_rows(d):
        rows.append(row)
        rhs.append(0)
    if template.orbit_of is not None:
        groups: dict[Hashable, list[int]] = {}
        for s, i in index.items():
            groups.setdefault(template.orbit_of(s), []).append(i)
        for members in groups.values():
            for i, j in zip(members, members[1:]):
                rows.append((1 << i) | (1 << j))
                rhs.append(0)
    for support, value in template.pins:
        s = tuple(sorted(support))
        if s not in index:
            if value:  # pinned nonzero on a vanishing monomial
                return None
            continue
        rows.append(1 << index[s])
        rhs.append(value & 1)
    target_labels = []
    for t in targets:
        if isinstance(t, PhiPsiTarget):
            if t.product.ring is not ring or t.product.k != 2:
                raise ValueError("phi/psi targets need a k=2 product over the same ring")
            rows.append(_phi_contract(ring, t.product))
            rhs.append(t.expected & 1)
        else:
            row = 0
            for support, coeff in t.coefficients:
                if coeff % 2 == 0:
                    continue
                s = tuple(sorted(support))
                if s in index:
                    row ^= 1 << index[s]
            rows.append(row)
            rhs.append(t.expected & 1)
        target_labels.append(t.label or "target")
    solution = linsys.solve(linsys.BitMatrix(tuple(rows), len(supports)), rhs)
    if solution is linsys.INCONSISTENT:
        return None
    values = {s: (solution >> i) & 1 for s, i in index.items()}
    orbit_values = None
    if template.orbit_of is not None:
        orbit_values = {}
        for s, v in values.items():
            orbit_values[template.orbit_of(s)] = v
    return PsiSolution(ring.code, template.label, values, orbit_values, tuple(target_labels))


def block_orbit(cuts: tuple[int, ...]) -> Callable[[tuple[int, ...]], tuple[int, ...]]:
    """Uniformity classes for interval-block templates: two supports are
    equivalent when they occupy the same blocks with the same multiplicities."""

    def orbit(support: tuple[int, ...]) -> tuple[int, ...]:
        pattern = []
        for i in support:
            block = 1
            for cutoff in cuts:
                if i <= cutoff:
                    break
                block += 1
            pattern.append(block)
        return tuple(sorted(pattern))

    return orbit


def monogenic_triple_psi_inputs(
    ring: RingPresentation, a: int, b: int
) -> tuple[PsiTemplate, list[PhiPsiTarget]]:
    """Uniform-functional problem certifying the monogenic size-3 products."""
    m = ring.m
    t = _ceil_pow2_exponent(m)
    template = PsiTemplate(label=f"blocks({a},{a + b})", orbit_of=block_orbit((a, a + b)))
    w = ring.V(1)
    x = ring.V(a + b)
    r = ring.R()
    if a % 2 == 0:
        prod = _bar_power_product(ring, [(w, 2 * m - 1 - (1 << t)), (x, 1), (r, (1 << t) - 1)])
    elif t >= 1 and m == (1 << (t - 1)) + 1:
        prod = _bar_power_product(ring, [(w, m), (x, m - 1)])
    else:
        prod = _bar_power_product(ring, [(w, m - 1), (x, 2), (r, m - 2)])
    return template, [PhiPsiTarget(prod, 1, label="size3-expansion")]


def type2_psi_inputs(
    ring: RingPresentation,
) -> tuple[PsiTemplate, list[PhiPsiTarget]]:
    """Pinned-functional problem reproducing the reported Type-2 solutions."""
    is27 = frozenset(ring.code.gees) == _27TH_GEES
    if is27:
        pins = tuple(
            (s, 1 if s in ((1,), (1, 6)) else 0)
            for _, s in ring.monomials(ring.m - 1)
        )
        label = "type2-final"
    else:
        pins = (((1,), 1), ((2, 3), 0), ((1, 2, 3), 0))
        label = "type2"
    m = ring.m
    prod = _bar_power_product(
        ring, [(ring.V(1), m - 1), (ring.V(2), 2), (ring.V(3), 1), (ring.R(), m - 3)]
    )
    return PsiTemplate(label=label, pins=pins), [PhiPsiTarget(prod, 1, label="type2-expansion")]


def _bar_power_product(ring: RingPresentation, powers: list[tuple[CohoClass, int]]) -> TensorClass:
    out = unit(ring, 2)
    for cls, exp in powers:
        if exp == 0:
            continue
        factor = bar(2, cls, 2)
        for _ in range(exp):
            out = tensor_multiply(out, factor)
    return out


# -- certificate constructions ------------------------------------------------


def _bars(pos: int, gen: str, exp: int) -> list[Factor]:
    return [Factor(kind="bar", gen=gen, exp=exp, pos=pos)] if exp > 0 else []


def _cert(code: GeneticCode, k: int, factors: list[Factor], label: str) -> Certificate:
    return Certificate(code, k, tuple(factors), label=label)


def cert_monogenic_pair(code: GeneticCode, k: int, sharp: bool) -> Certificate:
    """Alternating-bar products for <{a,n}>; the sharp variant appends the
    odd-position cross sums that push the length to km-1."""
    m = code.dimension
    l = k // 2
    factors: list[Factor] = []
    for j in range(1, l + 1):
        factors += _bars(2 * j, "V1", m)
        factors += _bars(2 * j, "R", m - 1)
    if sharp:
        for j in range(1, l):
            factors.append(Factor(kind="sum", gen="V1", exp=1, positions=(2 * j - 1, 2 * j + 1)))
    if k % 2:
        factors += _bars(k, "V1", 1)
        factors += _bars(k, "R", m - 1)
    label = "monogenic-pair-sharp" if sharp else "monogenic-pair"
    return _cert(code, k, factors, label)


def cert_r_power(code: GeneticCode, k: int, label: str) -> Certificate:
    """Products of R-bars of length km-1, usable whenever R^m is nonzero."""
    m = code.dimension
    l = k // 2
    factors: list[Factor] = []
    for j in range(1, l + 1):
        factors += _bars(2 * j, "R", 2 * m - 1)
    for j in range(1, l):
        factors.append(Factor(kind="sum", gen="R", exp=1, positions=(2 * j - 1, 2 * j + 1)))
    if k % 2:
        factors += _bars(k, "R", m)
    return _cert(code, k, factors, label)


def top_witness_support(ring: RingPresentation) -> tuple[int, ...]:
    """Smallest nonempty subgee whose top monomial has nonzero phi."""
    candidates = [s for s in ring.subgee_family if s and len(s) <= ring.m]
    for s in sorted(candidates, key=lambda s: (len(s), tuple(reversed(s)))):
        if ring.phi_S(s):
            return s
    raise ValueError("no nonempty top witness; gee family is degenerate")


def cert_pair_gene(code: GeneticCode, k: int, witness_support: tuple[int, ...]) -> Certificate:
    """Certificate for codes containing a size-2 gene, built on a top-degree
    witness monomial V_T with phi = 1."""
    m = code.dimension
    t = len(witness_support)
    l = k // 2
    factors: list[Factor] = []
    for j in range(1, l + 1):
        factors += _bars(2 * j, f"V{witness_support[0]}", m + 1 - t)
        for i in witness_support[1:]:
            factors += _bars(2 * j, f"V{i}", 1)
        factors += _bars(2 * j, "R", m - 1)
    if k % 2:
        for i in witness_support:
            factors += _bars(k, f"V{i}", 1)
        factors += _bars(k, "R", m - t)
    return _cert(code, k, factors, "pair-gene")


def cert_monogenic_triple(code: GeneticCode, k: int, a: int, b: int) -> Certificate:
    m = code.dimension
    t = _ceil_pow2_exponent(m)
    x = f"V{a + b}"
    l = k // 2
    factors: list[Factor] = []
    if a % 2 == 0:
        per = [("V1", 2 * m - 1 - (1 << t)), (x, 1), ("R", (1 << t) - 1)]
        odd = [(x, 1), ("R", m - 1)]
    elif m != (1 << (t - 1)) + 1:
        per = [("V1", m - 1), (x, 2), ("R", m - 2)]
        odd = [("V1", 1), (x, 1), ("R", m - 2)]
    else:
        per = [("V1", m), (x, m - 1)]
        odd = [("V1", 1), (x, 1), ("R", m - 2)]
    for j in range(1, l + 1):
        for gen, exp in per:
            factors += _bars(2 * j, gen, exp)
    if k % 2:
        for gen, exp in odd:
            factors += _bars(k, gen, exp)
    return _cert(code, k, factors, "monogenic-triple")


def cert_type2(code: GeneticCode, k: int) -> Certificate:
    m = code.dimension
    is27 = frozenset(code.gees) == _27TH_GEES
    l = k // 2
    if not _is_power_of_two(m - 1) or is27:
        per = [("V1", m - 1), ("V2", 2), ("V3", 1), ("R", m - 3)]
    else:
        per = [("V1", m), ("V2", 2), ("V3", 1), ("R", m - 4)]
    odd = (
        [("V1", 1), ("V2", 2), ("R", m - 3)]
        if is27
        else [("V1", 1), ("V2", 1), ("V3", 1), ("R", m - 3)]
    )
    factors: list[Factor] = []
    for j in range(1, l + 1):
        for gen, exp in per:
            factors += _bars(2 * j, gen, exp)
    if k % 2:
        for gen, exp in odd:
            factors += _bars(k, gen, exp)
    return _cert(code, k, factors, "type2")


def cert_monogenic_quad(
    code: GeneticCode, k: int, a: int, b: int, c: int, situation: int
) -> Certificate:
    m = code.dimension
    x = f"V{a + b}"
    y = f"V{a + b + c}"
    two_power = _is_power_of_two(m - 2)
    if situation == 1:
        if two_power:
            per = [("V1", m - 1), (x, 2), (y, 3), ("R", m - 5)]
        else:
            per = [("V1", m - 2), (x, 2), (y, 3), ("R", m - 4)]
        odd = [("V1", 1), (x, 2), (y, 1), ("R", m - 4)]
    else:
        if two_power:
            per = [("V1", 2), (x, 2), (y, m - 1), ("R", m - 4)]
        else:
            per = [("V1", 2), (x, 2), (y, m - 2), ("R", m - 3)]
        odd = [(x, 2), (y, 1), ("R", m - 3)]
    l = k // 2
    factors: list[Factor] = []
    for j in range(1, l + 1):
        for gen, exp in per:
            factors += _bars(2 * j, gen, exp)
    if k % 2:
        for gen, exp in odd:
            factors += _bars(k, gen, exp)
    return _cert(code, k, factors, "monogenic-quad")


def _two_triples_split(m: int) -> tuple[int, int] | None:
    """m = 2^t + m' with t >= 1 and 2 <= m' <= 2^t + 1, when possible."""
    t = 1
    best = None
    while (1 << t) + 2 <= m:
        mp = m - (1 << t)
        if 2 <= mp <= (1 << t) + 1:
            best = (t, mp)
        t += 1
    return best


def cert_two_triples(code: GeneticCode, k: int, a: int, b: int, c: int) -> Certificate | None:
    m = code.dimension
    split = _two_triples_split(m)
    if split is None:
        return None
    t, mp = split
    x = f"V{a + b}"
    y = f"V{a + b + c}"
    per = [("V1", 2 * mp - 3), (x, 2), (y, 1), ("R", (1 << (t + 1)) - 1)]
    odd = [("V1", 1), (x, 1), ("R", m - 2)]
    l = k // 2
    factors: list[Factor] = []
    for j in range(1, l + 1):
        for gen, exp in per:
            factors += _bars(2 * j, gen, exp)
    if k % 2:
        for gen, exp in odd:
            factors += _bars(k, gen, exp)
    return _cert(code, k, factors, "two-triples")


def cert_type1_template(code: GeneticCode, k: int, b: int, c: int) -> Certificate:
    m = code.dimension
    x = f"V{1 + b}"
    y = f"V{1 + b + c}"
    per = [("V1", m - 1), (x, 2), (y, 1), ("R", m - 3)]
    odd = [("V1", 1), (x, 1), (y, 1), ("R", m - 3)]
    l = k // 2
    factors: list[Factor] = []
    for j in range(1, l + 1):
        for gen, exp in per:
            factors += _bars(2 * j, gen, exp)
    if k % 2:
        for gen, exp in odd:
            factors += _bars(k, gen, exp)
    return _cert(code, k, factors, "type1-template")


# -- dispatch ------------------------------------------------------------------


@dataclass(frozen=True)
class MethodBound:
    tag: str
    lower: int
    hypothesis: str
    certificate: Certificate | None = None
    result: CertificateResult | None = None
    verified: bool | None = None

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "lower": self.lower,
            "hypothesis": self.hypothesis,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "verified": self.verified,
            "witness_multidegree": (
                list(self.result.witness_multidegree)
                if self.result and self.result.witness_multidegree
                else None
            ),
        }


@dataclass(frozen=True)
class TCBoundReport:
    code: GeneticCode
    k: int
    m: int
    lower: int
    upper: int
    winner: str
    methods: tuple[MethodBound, ...]
    caveats: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "code": self.code.to_json(),
            "k": self.k,
            "m": self.m,
            "lower": self.lower,
            "upper": self.upper,
            "winner": self.winner,
            "methods": [m.to_json() for m in self.methods],
            "caveats": list(self.caveats),
        }


def tc_bounds(
    code: GeneticCode,
    k: int,
    certify: bool = False,
    max_keys: int = 500_000,
    signature: CodeSignature | None = None,
) -> TCBoundReport:
    """Strongest applicable lower bound and the dimensional upper bound.

    With certify=True every method's certificate is evaluated exactly; a
    method whose certificate vanishes is dropped rather than trusted.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    m = code.dimension
    if m < 1:
        raise ValueError("bounds need n >= 4")
    if k == 1:
        return TCBoundReport(
            code, 1, m, 1, 1, "path-connected",
            (MethodBound("path-connected", 1, "one motion rule suffices for k=1"),), (),
        )
    sig = signature or classify(code)
    base = (k - 1) * m + 1
    weak = k * m - k // 2 + 1
    sharp = k * m
    caveats: list[str] = []
    methods: list[MethodBound] = [
        MethodBound(
            "category-sandwich", base,
            f"category of the (k-1)-fold product gives {base}",
        )
    ]
    ring: RingPresentation | None = None

    def need_ring() -> RingPresentation:
        nonlocal ring
        if ring is None:
            ring = build_ring(code)
        return ring

    if sig.monogenic_pair is not None:
        a = sig.monogenic_pair
        methods.append(MethodBound(
            "monogenic-pair", weak, f"single pair gene {{{a},{code.n}}}",
            cert_monogenic_pair(code, k, sharp=False),
        ))
        if _is_power_of_two(m):
            methods.append(MethodBound(
                "monogenic-pair-sharp", sharp,
                f"m={m} is a power of two, so the cross-sum product of length km-1 survives",
                cert_monogenic_pair(code, k, sharp=True),
            ))
        caveats.append(
            "bounds computed for the unoriented quotient space; "
            "the oriented double cover is out of scope"
        )
    elif sig.contains_pair is not None:
        a = sig.contains_pair
        support = top_witness_support(need_ring())
        methods.append(MethodBound(
            "pair-gene", weak,
            f"code contains the pair gene {{{a},{code.n}}}; "
            f"top witness support {support}",
            cert_pair_gene(code, k, support),
        ))
        gees = set(code.gees)
        if len(gees) == 2 and (2, 4) in gees:
            other = next(g for g in gees if g != (2, 4))
            if len(other) == 1 and other[0] >= 5 and other[0] % 2 == 1 and _is_power_of_two(m):
                methods.append(MethodBound(
                    "pair-24-family-sharp", sharp,
                    f"gees {{2,4}} and {{{other[0]}}} with odd {other[0]} >= 5 and "
                    f"m={m} a power of two force R^m nonzero",
                    cert_r_power(code, k, "pair-24-family-sharp"),
                ))

    if sig.monogenic_triple is not None:
        a, b = sig.monogenic_triple
        methods.append(MethodBound(
            "monogenic-triple", weak,
            f"single triple gene, parameters a={a}, b={b}",
            cert_monogenic_triple(code, k, a, b),
        ))
        if _is_power_of_two(m) and lemma_size3(a, b):
            methods.append(MethodBound(
                "monogenic-triple-sharp", sharp,
                f"R^m nonzero (a={a} mod 4 / b parity test) and m={m} a power of two",
                cert_r_power(code, k, "monogenic-triple-sharp"),
            ))

    if sig.type2 and m >= 4:
        methods.append(MethodBound(
            "type2", weak,
            "gee family matches a heptagon code and is not of Type 1",
            cert_type2(code, k),
        ))

    if sig.monogenic_quad is not None:
        a, b, c = sig.monogenic_quad
        situation = 0
        if m > 4 and a % 4 == 1 and b % 4 == 1 and c % 2 == 1:
            situation = 1
        elif m > 3 and a % 4 == 2 and b % 4 == 0 and c % 2 == 1:
            situation = 2
        if situation:
            methods.append(MethodBound(
                "monogenic-quad", weak,
                f"quad gene parameters a={a}, b={b}, c={c} in situation {situation}",
                cert_monogenic_quad(code, k, a, b, c, situation),
            ))
        if _is_power_of_two(m) and lemma_size4(a, b, c):
            methods.append(MethodBound(
                "monogenic-quad-sharp", sharp,
                f"R^m nonzero (size-4 parity test on a={a}, b={b}, c={c}) "
                f"and m={m} a power of two",
                cert_r_power(code, k, "monogenic-quad-sharp"),
            ))
            caveats.append(
                "sharp quad bound stated for the unoriented quotient space"
            )

    if sig.two_triples is not None:
        a, b, c, d = sig.two_triples
        cert = cert_two_triples(code, k, a, b, c)
        if cert is not None:
            t, mp = _two_triples_split(m)
            methods.append(MethodBound(
                "two-triples", weak,
                f"two triple genes, a={a}, b={b}, c={c}, d={d}; m = 2^{t} + {mp}",
                cert,
            ))
        if _is_power_of_two(m) and lemma_two3genes(a, b, c, d):
            methods.append(MethodBound(
                "two-triples-sharp", sharp,
                f"R^m nonzero (split-parity test on a={a}, b={b}, c={c}, d={d}) "
                f"and m={m} a power of two",
                cert_r_power(code, k, "two-triples-sharp"),
            ))

    if sig.type1_template is not None:
        b, c, d = sig.type1_template
        exceptions = []
        if b % 4 == 1 and c % 2 == 1 and d % 2 == 0:
            exceptions.append("b = 1 mod 4 with c odd and d even")
        if _is_power_of_two(m - 1):
            exceptions.append(f"m-1 = {m - 1} is a power of two")
        if _is_power_of_two(m) and b % 4 == 2 and c % 2 == 1 and d % 2 == 0:
            exceptions.append("m a power of two with b = 2 mod 4, c odd, d even")
        if not exceptions:
            methods.append(MethodBound(
                "type1-template", weak,
                f"shared element 1, parameters b={b}, c={c}, d={d}",
                cert_type1_template(code, k, b, c),
            ))
        else:
            caveats.append(
                "type1-template bound not claimed ("
                + "; ".join(exceptions)
                + "); the fallback holds, no refutation implied"
            )

    if certify:
        checked: list[MethodBound] = []
        for mb in methods:
            if mb.certificate is None:
                checked.append(mb)
                continue
            try:
                result = evaluate_certificate(mb.certificate, ring=need_ring(), max_keys=max_keys)
            except BudgetExceeded:
                checked.append(MethodBound(
                    mb.tag, mb.lower, mb.hypothesis + " [certificate skipped: key budget]",
                    mb.certificate, None, None,
                ))
                continue
            if not result.nonzero and mb.tag == "pair-gene":
                # the default top witness can fail; retry the other candidates
                for s in sorted(
                    (s for s in need_ring().subgee_family if s and need_ring().phi_S(s)),
                    key=lambda s: (len(s), tuple(reversed(s))),
                ):
                    retry = cert_pair_gene(code, k, s)
                    result = evaluate_certificate(retry, ring=need_ring(), max_keys=max_keys)
                    if result.nonzero:
                        mb = MethodBound(mb.tag, mb.lower, mb.hypothesis, retry)
                        break
            if result.nonzero:
                checked.append(MethodBound(
                    mb.tag, mb.lower, mb.hypothesis, mb.certificate, result, True
                ))
            else:
                caveats.append(
                    f"{mb.tag}: certificate evaluated to zero; bound dropped"
                )
        methods = checked

    upper = k * m + 1
    best = max(methods, key=lambda mb: (mb.lower, mb.verified is True))
    return TCBoundReport(
        code, k, m, best.lower, upper, best.tag, tuple(methods), tuple(caveats)
    )
