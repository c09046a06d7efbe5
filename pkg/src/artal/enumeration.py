"""Census of k-subsets of the torsion points by number of collinear triples."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .symmetry import orbit_sizes
from .torsion import POINTS, collinear_triple_count, count_collinear_mask

TABLE_KS = tuple(range(3, 10))


@dataclass(frozen=True)
class CensusRow:
    k: int
    distribution: dict[int, int] = field(hash=False)

    def __post_init__(self) -> None:
        if sum(self.distribution.values()) != comb(9, self.k):
            raise ValueError(f"census for k={self.k} does not cover all C(9,{self.k}) subsets")

    @property
    def possible_n(self) -> list[int]:
        return sorted(n for n, c in self.distribution.items() if c > 0)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "possible_n": self.possible_n,
            "distribution": {str(n): self.distribution[n] for n in sorted(self.distribution)},
        }


def _check_k(k: int) -> None:
    if not isinstance(k, int) or not 0 <= k <= 9:
        raise ValueError(f"subset size k must be an integer in 0..9, got {k!r}")


def census(k: int) -> CensusRow:
    """Exhaustive distribution of n over all k-subsets (9-bit mask scan)."""
    _check_k(k)
    dist: dict[int, int] = {}
    for mask in range(512):
        if mask.bit_count() != k:
            continue
        n = count_collinear_mask(mask)
        dist[n] = dist.get(n, 0) + 1
    return CensusRow(k, dict(sorted(dist.items())))


def census_by_triples(k: int) -> CensusRow:
    """Same census, counting triples directly inside each subset."""
    _check_k(k)
    dist: dict[int, int] = {}
    for pts in combinations(POINTS, k):
        n = collinear_triple_count(pts)
        dist[n] = dist.get(n, 0) + 1
    return CensusRow(k, dict(sorted(dist.items())))


def census_by_orbits(k: int) -> CensusRow:
    """Same census, one representative per symmetry orbit weighted by orbit size."""
    _check_k(k)
    dist: dict[int, int] = {}
    for rep, size in orbit_sizes(k).items():
        n = collinear_triple_count(rep)
        dist[n] = dist.get(n, 0) + size
    return CensusRow(k, dict(sorted(dist.items())))


def proposition_table() -> list[CensusRow]:
    return [census(k) for k in TABLE_KS]


def format_table(rows: list[CensusRow]) -> str:
    """Two-row text table: k across the top, attained n values underneath."""
    heads = ["k"] + [str(r.k) for r in rows]
    vals = ["n"] + [", ".join(str(n) for n in r.possible_n) for r in rows]
    widths = [max(len(h), len(v)) for h, v in zip(heads, vals)]
    top = " | ".join(h.center(w) for h, w in zip(heads, widths))
    rule = "-+-".join("-" * w for w in widths)
    bottom = " | ".join(v.center(w) for v, w in zip(vals, widths))
    return "\n".join([top, rule, bottom])
