"""Length vectors: genericity, short sets, and extraction of the genetic code.

Side lengths are positive integers.  Any genetic code realized by a rational
vector is realized by an integer one (clear denominators), and integer
arithmetic makes genericity and the short/long dichotomy exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    from .genetics import GeneticCode

_MAX_N = 24  # meet-in-the-middle genericity check is 2^(n/2)


class NonGenericError(ValueError):
    """Raised when an operation needs a generic length vector and got a wall point."""

    def __init__(self, alpha: "LengthVector", subset: tuple[int, ...]):
        self.alpha = alpha
        self.subset = subset
        super().__init__(
            f"length vector {alpha.entries} is not generic: "
            f"indices {subset} sum to half the perimeter"
        )


@dataclass(frozen=True)
class LengthVector:
    """Sorted tuple of positive integer side lengths."""

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        ent = tuple(int(e) for e in entries)
        if not ent:
            raise ValueError("length vector must be nonempty")
        if any(e <= 0 for e in ent):
            raise ValueError("side lengths must be positive")
        if len(ent) > _MAX_N:
            raise ValueError(f"at most {_MAX_N} sides supported")
        object.__setattr__(self, "entries", tuple(sorted(ent)))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def perimeter(self) -> int:
        return sum(self.entries)

    def subset_sum(self, indices: Iterable[int]) -> int:
        """Sum of entries at the given 1-based indices."""
        return sum(self.entries[i - 1] for i in self._check_indices(indices))

    def _check_indices(self, indices: Iterable[int]) -> tuple[int, ...]:
        idx = tuple(indices)
        for i in idx:
            if not 1 <= i <= self.n:
                raise ValueError(f"index {i} out of range 1..{self.n}")
        if len(set(idx)) != len(idx):
            raise ValueError("duplicate indices")
        return idx

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class ShortSetFamily:
    """All short subsets containing n, as bitmasks (bit i-1 = element i)."""

    n: int
    masks: tuple[int, ...]

    def __contains__(self, indices: Iterable[int]) -> bool:
        return _mask_of(indices) in set(self.masks)

    def sets(self) -> list[tuple[int, ...]]:
        return [_indices_of(m) for m in self.masks]


def _mask_of(indices: Iterable[int]) -> int:
    return sum(1 << (i - 1) for i in indices)


def _indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def as_length_vector(alpha: "LengthVector | Sequence[int]") -> LengthVector:
    return alpha if isinstance(alpha, LengthVector) else LengthVector(alpha)


def zero_signed_sum(alpha: "LengthVector | Sequence[int]") -> tuple[int, ...] | None:
    """Indices of a subset summing to half the perimeter, or None if generic.

    Meet in the middle: enumerate subset sums of each half of the index set.
    """
    alpha = as_length_vector(alpha)
    total = alpha.perimeter
    if total % 2:
        return None
    half = total // 2
    ent = alpha.entries
    n = alpha.n
    cut = n // 2
    left: dict[int, int] = {}
    for mask in range(1 << cut):
        s = 0
        mm = mask
        while mm:
            j = (mm & -mm).bit_length() - 1
            s += ent[j]
            mm &= mm - 1
        left.setdefault(s, mask)
    for mask in range(1 << (n - cut)):
        s = 0
        mm = mask
        while mm:
            j = (mm & -mm).bit_length() - 1
            s += ent[cut + j]
            mm &= mm - 1
        rest = half - s
        if rest in left:
            full = left[rest] | (mask << cut)
            return _indices_of(full)
    return None


def is_generic(alpha: "LengthVector | Sequence[int]") -> bool:
    """True iff no signed sum of the entries vanishes."""
    return zero_signed_sum(alpha) is None


def require_generic(alpha: "LengthVector | Sequence[int]") -> LengthVector:
    alpha = as_length_vector(alpha)
    witness = zero_signed_sum(alpha)
    if witness is not None:
        raise NonGenericError(alpha, witness)
    return alpha


def is_short(indices: Iterable[int], alpha: "LengthVector | Sequence[int]") -> bool:
    """True iff the subset's length sum is less than its complement's."""
    alpha = require_generic(alpha)
    s = alpha.subset_sum(indices)
    return 2 * s < alpha.perimeter


def short_sets_with_n(alpha: "LengthVector | Sequence[int]") -> ShortSetFamily:
    """The family of short subsets containing the last index n."""
    alpha = require_generic(alpha)
    n = alpha.n
    ent = alpha.entries
    total = alpha.perimeter
    top = 1 << (n - 1)
    masks = []
    for gmask in range(1 << (n - 1)):
        s = ent[n - 1]
        mm = gmask
        while mm:
            j = (mm & -mm).bit_length() - 1
            s += ent[j]
            mm &= mm - 1
        if 2 * s < total:
            masks.append(gmask | top)
    return ShortSetFamily(n, tuple(masks))


def genetic_code(alpha: "LengthVector | Sequence[int]") -> "GeneticCode":
    """Maximal short sets containing n under the dominance order."""
    from .genetics import GeneticCode, maximal_gee_masks

    family = short_sets_with_n(alpha)
    n = family.n
    top = 1 << (n - 1)
    gee_masks = [m & ~top for m in family.masks]
    maximal = maximal_gee_masks(n, gee_masks)
    return GeneticCode(n, [_indices_of(g | top) for g in maximal])
