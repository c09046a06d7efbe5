"""Subarrangement invariants of 3-Artal arrangements and their profiles.

For a cubic E plus the tangents at three flexes, each of the four invariants
(existence of a D6-cover, nontrivial Alexander polynomial, splitting number of
E in the cyclic triple cover, size of the linking set of E) depends only on
whether the three flexes are collinear:

    collinear      -> (d6, alex, split, lks) = (1, 1, 3, 1)
    not collinear  -> (d6, alex, split, lks) = (0, 0, 1, 3)

The values here come from that dichotomy, not from computing covers or
fundamental groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .torsion import PointSubset, TorsionPoint, collinear_triple_count, is_collinear_triple

INVARIANT_NAMES = ("d6", "alex", "split", "lks")

# value of each invariant that marks a collinear triple
COLLINEAR_FIBRE = {"d6": 1, "alex": 1, "split": 3, "lks": 1}


@dataclass(frozen=True)
class TripleInvariantValues:
    d6: int
    alex: int
    split: int
    lks: int

    def __post_init__(self) -> None:
        if self.d6 not in (0, 1) or self.alex != self.d6:
            raise ValueError(f"inconsistent d6/alex values {self}")
        if (self.split == 3) != (self.d6 == 1) or (self.lks == 3) != (self.d6 == 0):
            raise ValueError(f"inconsistent split/lks values {self}")
        if self.split * self.lks != 3:
            raise ValueError(f"split * lks must be 3, got {self}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.d6, self.alex, self.split, self.lks)


COLLINEAR_VALUES = TripleInvariantValues(1, 1, 3, 1)
GENERIC_VALUES = TripleInvariantValues(0, 0, 1, 3)


def triple_invariants(triple: PointSubset | tuple[TorsionPoint, ...]) -> TripleInvariantValues:
    pts = tuple(triple)
    if len(pts) != 3 or len(set(pts)) != 3:
        raise ValueError(f"need exactly three distinct points, got {len(pts)}")
    return COLLINEAR_VALUES if is_collinear_triple(*pts) else GENERIC_VALUES


@dataclass(frozen=True)
class InvariantProfile:
    subset: PointSubset
    triple_values: dict[PointSubset, TripleInvariantValues]

    @property
    def k(self) -> int:
        return len(self.subset)

    @property
    def n_collinear(self) -> int:
        return self.fibre_count("d6", 1)

    def fibre_count(self, name: str, value: int) -> int:
        """Number of 3-subarrangements on which invariant ``name`` takes ``value``."""
        if name not in INVARIANT_NAMES:
            raise KeyError(name)
        return sum(1 for v in self.triple_values.values() if getattr(v, name) == value)

    def collinear_fibre_counts(self) -> dict[str, int]:
        return {name: self.fibre_count(name, val) for name, val in COLLINEAR_FIBRE.items()}

    def value_multiset(self) -> tuple[tuple[tuple[int, int, int, int], int], ...]:
        counts: dict[tuple[int, int, int, int], int] = {}
        for v in self.triple_values.values():
            counts[v.as_tuple()] = counts.get(v.as_tuple(), 0) + 1
        return tuple(sorted(counts.items()))

    def to_json(self) -> dict:
        return {
            "subset": str(self.subset),
            "k": self.k,
            "triples": [
                {"triple": [str(p) for p in t], **dict(zip(INVARIANT_NAMES, v.as_tuple()))}
                for t, v in self.triple_values.items()
            ],
            "summary": {
                "n_collinear": self.n_collinear,
                "fibre_counts": self.collinear_fibre_counts(),
            },
        }


def profile(subset: PointSubset) -> InvariantProfile:
    if len(subset) < 3:
        raise ValueError(f"profile needs at least 3 points, got {len(subset)}")
    values = {PointSubset(t): triple_invariants(t) for t in combinations(subset, 3)}
    prof = InvariantProfile(subset, values)
    assert prof.n_collinear == collinear_triple_count(subset)
    return prof
