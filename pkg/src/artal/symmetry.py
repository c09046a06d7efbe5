"""Affine symmetries of the nine torsion points.

The maps p -> A p + t with A invertible over GF(3) permute the points and
send lines to lines.  There are 48 * 9 = 432 of them, and no other bijection
of the nine points preserves the line structure
(:func:`line_preserving_bijections` checks this by exhaustion).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb

from .torsion import POINTS, PointSubset, TorsionPoint, line_masks

Matrix = tuple[tuple[int, int], tuple[int, int]]


def _det(m: Matrix) -> int:
    return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 3


@dataclass(frozen=True)
class AffineSymmetry:
    linear: Matrix
    translation: TorsionPoint

    def __post_init__(self) -> None:
        if _det(self.linear) == 0:
            raise ValueError(f"singular linear part {self.linear}")

    def __call__(self, p: TorsionPoint) -> TorsionPoint:
        (a, b), (c, d) = self.linear
        return TorsionPoint(
            (a * p.a + b * p.b + self.translation.a) % 3,
            (c * p.a + d * p.b + self.translation.b) % 3,
        )

    def compose(self, other: AffineSymmetry) -> AffineSymmetry:
        """``self`` after ``other``."""
        (a, b), (c, d) = self.linear
        (e, f), (g, h) = other.linear
        lin = (
            ((a * e + b * g) % 3, (a * f + b * h) % 3),
            ((c * e + d * g) % 3, (c * f + d * h) % 3),
        )
        return AffineSymmetry(lin, self(other.translation))

    def __mul__(self, other: AffineSymmetry) -> AffineSymmetry:
        return self.compose(other)

    @property
    def permutation(self) -> tuple[int, ...]:
        """Image index of each point index."""
        return tuple(self(p).index for p in POINTS)

    def apply(self, subset: PointSubset) -> PointSubset:
        return PointSubset(self(p) for p in subset)


IDENTITY = AffineSymmetry(((1, 0), (0, 1)), POINTS[0])


@lru_cache(maxsize=None)
def _group() -> tuple[AffineSymmetry, ...]:
    out = []
    for a, b, c, d in product(range(3), repeat=4):
        lin = ((a, b), (c, d))
        if _det(lin) == 0:
            continue
        for t in POINTS:
            out.append(AffineSymmetry(lin, t))
    return tuple(out)


def symmetry_group() -> list[AffineSymmetry]:
    return list(_group())


@lru_cache(maxsize=None)
def _group_perms() -> tuple[tuple[int, ...], ...]:
    return tuple(g.permutation for g in _group())


def _image_mask(perm: tuple[int, ...], mask: int) -> int:
    out = 0
    for i in range(9):
        if mask >> i & 1:
            out |= 1 << perm[i]
    return out


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(9) if mask >> i & 1)


@lru_cache(maxsize=None)
def canonical_mask(mask: int) -> int:
    return min((_image_mask(p, mask) for p in _group_perms()), key=_lex_key)


def canonical_form(subset: PointSubset) -> PointSubset:
    """Lexicographically least image of ``subset`` under the affine group."""
    return PointSubset.from_mask(canonical_mask(subset.mask))


def orbit_masks(mask: int) -> frozenset[int]:
    return frozenset(_image_mask(p, mask) for p in _group_perms())


def orbit(subset: PointSubset) -> list[PointSubset]:
    """All images of ``subset``, in lexicographic order."""
    return [PointSubset.from_mask(m) for m in sorted(orbit_masks(subset.mask), key=_lex_key)]


def _check_k(k: int) -> None:
    if not isinstance(k, int) or not 0 <= k <= 9:
        raise ValueError(f"subset size k must be an integer in 0..9, got {k!r}")


@lru_cache(maxsize=None)
def _orbit_partition(k: int) -> tuple[tuple[int, int], ...]:
    """(canonical mask, orbit size) for every orbit of k-subsets."""
    sizes: dict[int, int] = {}
    for idx in combinations(range(9), k):
        m = sum(1 << i for i in idx)
        c = canonical_mask(m)
        sizes[c] = sizes.get(c, 0) + 1
    return tuple(sorted(sizes.items(), key=lambda kv: _lex_key(kv[0])))


def orbit_representatives(k: int) -> list[PointSubset]:
    _check_k(k)
    return [PointSubset.from_mask(m) for m, _ in _orbit_partition(k)]


def orbit_sizes(k: int) -> dict[PointSubset, int]:
    _check_k(k)
    out = {PointSubset.from_mask(m): size for m, size in _orbit_partition(k)}
    assert sum(out.values()) == comb(9, k)
    return out


def line_preserving_bijections() -> list[tuple[int, ...]]:
    """Every permutation of the 9 point indices that maps lines onto lines.

    Scans all 9! permutations; independent of the affine description.
    """
    lines = [_lex_key(m) for m in line_masks()]
    line_set = frozenset(line_masks())
    found = []
    for perm in permutations(range(9)):
        for a, b, c in lines:
            if (1 << perm[a]) | (1 << perm[b]) | (1 << perm[c]) not in line_set:
                break
        else:
            found.append(perm)
    return found
