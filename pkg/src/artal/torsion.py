"""The group (Z/3Z)^2 and its twelve collinear triples.

The nine inflection points of a smooth plane cubic, with one of them taken
as the origin, form the 3-torsion subgroup of the elliptic curve.  Three
distinct inflection points are collinear exactly when they sum to the origin.
This module works purely on the group side of that identification.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class TorsionPoint:
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a not in (0, 1, 2) or self.b not in (0, 1, 2):
            raise ValueError(f"torsion coordinates must be residues mod 3, got ({self.a}, {self.b})")

    def __add__(self, other: TorsionPoint) -> TorsionPoint:
        return TorsionPoint((self.a + other.a) % 3, (self.b + other.b) % 3)

    def __neg__(self) -> TorsionPoint:
        return TorsionPoint(-self.a % 3, -self.b % 3)

    def __sub__(self, other: TorsionPoint) -> TorsionPoint:
        return self + (-other)

    @property
    def index(self) -> int:
        """Position 0..8 in the lexicographic order on (a, b)."""
        return 3 * self.a + self.b

    @classmethod
    def from_index(cls, i: int) -> TorsionPoint:
        return POINTS[i]

    @classmethod
    def parse(cls, text: str) -> TorsionPoint:
        parts = text.strip().split(",")
        if len(parts) != 2:
            raise ValueError(f"cannot parse torsion point {text!r}; expected 'a,b'")
        try:
            a, b = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"cannot parse torsion point {text!r}; expected 'a,b'") from None
        return cls(a, b)

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


POINTS: tuple[TorsionPoint, ...] = tuple(TorsionPoint(a, b) for a in range(3) for b in range(3))
ORIGIN = POINTS[0]


def add(p: TorsionPoint, q: TorsionPoint) -> TorsionPoint:
    return p + q


@dataclass(frozen=True, order=True)
class PointSubset:
    """A set of distinct torsion points, stored sorted.

    Iteration, indexing and ``len`` follow the sorted order, which is the
    order the tangent lines of an arrangement are numbered in.
    """

    members: tuple[TorsionPoint, ...]

    def __init__(self, members: Iterable[TorsionPoint] = ()) -> None:
        pts = tuple(members)
        if len(set(pts)) != len(pts):
            raise ValueError("point subset contains duplicate points")
        object.__setattr__(self, "members", tuple(sorted(pts)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[TorsionPoint]:
        return iter(self.members)

    def __getitem__(self, i: int) -> TorsionPoint:
        return self.members[i]

    def __contains__(self, p: object) -> bool:
        return p in self.members

    @property
    def mask(self) -> int:
        m = 0
        for p in self.members:
            m |= 1 << p.index
        return m

    @classmethod
    def from_mask(cls, mask: int) -> PointSubset:
        if not 0 <= mask < 512:
            raise ValueError(f"mask out of range: {mask}")
        return cls(POINTS[i] for i in range(9) if mask >> i & 1)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(p.index for p in self.members)

    @classmethod
    def parse(cls, text: str) -> PointSubset:
        """Parse ``"[0,0 1,0 2,0]"``; brackets are optional."""
        body = text.strip()
        if body.startswith("["):
            if not body.endswith("]"):
                raise ValueError(f"unbalanced brackets in subset {text!r}")
            body = body[1:-1]
        return cls(TorsionPoint.parse(tok) for tok in body.split())

    def __str__(self) -> str:
        return "[" + " ".join(str(p) for p in self.members) + "]"


def is_collinear_triple(p: TorsionPoint, q: TorsionPoint, r: TorsionPoint) -> bool:
    if p == q or q == r or p == r:
        return False
    return p + q + r == ORIGIN


@dataclass(frozen=True)
class TorsionLine:
    points: frozenset[TorsionPoint]

    def __post_init__(self) -> None:
        if len(self.points) != 3 or not is_collinear_triple(*self.points):
            raise ValueError(f"not a collinear triple: {sorted(self.points)}")

    @property
    def sorted_points(self) -> tuple[TorsionPoint, ...]:
        return tuple(sorted(self.points))

    @property
    def mask(self) -> int:
        return PointSubset(self.points).mask


@lru_cache(maxsize=None)
def _lines() -> tuple[TorsionLine, ...]:
    return tuple(
        TorsionLine(frozenset(t)) for t in combinations(POINTS, 3) if is_collinear_triple(*t)
    )


def all_lines() -> list[TorsionLine]:
    """The 12 lines of the Hesse configuration, ordered by their sorted points."""
    return list(_lines())


@lru_cache(maxsize=None)
def line_masks() -> tuple[int, ...]:
    return tuple(line.mask for line in _lines())


def count_collinear_mask(mask: int) -> int:
    return sum(1 for lm in line_masks() if lm & mask == lm)


def collinear_triple_count(subset: PointSubset | Iterable[TorsionPoint]) -> int:
    """Number of collinear 3-element subsets of ``subset``."""
    pts = sorted(set(subset))
    return sum(1 for t in combinations(pts, 3) if is_collinear_triple(*t))


def third_point(p: TorsionPoint, q: TorsionPoint) -> TorsionPoint:
    """The point completing the line through two distinct points."""
    if p == q:
        raise ValueError("third_point needs two distinct points")
    return -(p + q)
