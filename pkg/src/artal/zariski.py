"""Type I / Type II classification and Zariski-pair certificates.

Two k-Artal arrangements E + L_J1 and E + L_J2 on the same cubic form a
Zariski pair as soon as

* they have the same combinatorics (checked here by exact realization), and
* the number of 3-subarrangements on which an invariant takes a fixed value
  differs between them (the collinear fibre of each of d6/alex/split/lks).

Homeomorphisms of the pairs must fix the cubic because its degree differs
from that of every line, so the invariant counts are topological.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .cyclotomic import format_rational, parse_rational
from .invariants import profile
from .realization import (
    CombinatorialType,
    CubicCurve,
    check_relabeling,
    combinatorial_type,
    concurrent_collinear_triples,
    concurrent_triples,
    realize,
    relabeling,
    type_from_records,
    types_equal,
)
from .symmetry import canonical_mask
from .torsion import PointSubset, count_collinear_mask

CUBIC_DEGREE = 3
LINE_DEGREE = 1


class Tag(str, Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    OTHER = "Other"


@dataclass(frozen=True)
class ArrangementType:
    k: int
    n: int
    tag: Tag

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "tag": self.tag.value}

    @classmethod
    def from_json(cls, d: dict) -> ArrangementType:
        return cls(int(d["k"]), int(d["n"]), Tag(d["tag"]))


def tag_for(k: int, n: int) -> Tag:
    if n == k - 3:
        return Tag.TYPE_I
    if n == k - 4:
        return Tag.TYPE_II
    return Tag.OTHER


def classify(subset: PointSubset) -> ArrangementType:
    k = len(subset)
    if not 3 <= k <= 9:
        raise ValueError(f"classify needs 3 <= k <= 9, got k={k}")
    n = count_collinear_mask(subset.mask)
    return ArrangementType(k, n, tag_for(k, n))


def default_mus() -> list[Fraction]:
    """Rationals p/q with |p| <= 3, 1 <= q <= 3, skipping the singular mu = 1."""
    vals = {Fraction(p, q) for p in range(-3, 4) for q in range(1, 4)}
    vals.discard(Fraction(1))
    return sorted(vals, key=lambda m: (m.denominator, abs(m), m < 0))


@dataclass(frozen=True)
class ZariskiCertificate:
    mu: Fraction
    k: int
    subset_1: PointSubset
    subset_2: PointSubset
    type_1: ArrangementType
    type_2: ArrangementType
    combinatorics: dict = field(compare=False, hash=False)
    relabeling: tuple[int, ...]
    counts: tuple[int, int]
    invariant_counts: tuple[dict, dict] = field(compare=False, hash=False)

    def swapped(self) -> ZariskiCertificate:
        inverse = [0] * len(self.relabeling)
        for i, j in enumerate(self.relabeling):
            inverse[j] = i
        return ZariskiCertificate(
            self.mu, self.k, self.subset_2, self.subset_1, self.type_2, self.type_1,
            self.combinatorics, tuple(inverse), (self.counts[1], self.counts[0]),
            (self.invariant_counts[1], self.invariant_counts[0]),
        )

    def to_json(self) -> dict:
        return {
            "mu": format_rational(self.mu),
            "k": self.k,
            "subsets": [str(self.subset_1), str(self.subset_2)],
            "types": [self.type_1.to_json(), self.type_2.to_json()],
            "combinatorics": self.combinatorics,
            "counts": {"n1": self.counts[0], "n2": self.counts[1]},
            "invariant_counts": list(self.invariant_counts),
            "relabeling": list(self.relabeling),
            "degrees": {"cubic": CUBIC_DEGREE, "lines": LINE_DEGREE},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, d: dict) -> ZariskiCertificate:
        s1, s2 = (PointSubset.parse(s) for s in d["subsets"])
        t1, t2 = (ArrangementType.from_json(t) for t in d["types"])
        ic = d.get("invariant_counts", [{}, {}])
        return cls(
            parse_rational(d["mu"]),
            int(d["k"]),
            s1,
            s2,
            t1,
            t2,
            d["combinatorics"],
            tuple(int(i) for i in d["relabeling"]),
            (int(d["counts"]["n1"]), int(d["counts"]["n2"])),
            (dict(ic[0]), dict(ic[1])),
        )


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def _fail(reason: str) -> VerificationResult:
    return VerificationResult(False, reason)


def _encoding_type(enc: dict) -> CombinatorialType:
    return type_from_records(int(enc["k"]), ((r["kind"], r["lines"]) for r in enc["records"]))


def verify_certificate(c: ZariskiCertificate) -> VerificationResult:
    """Recompute everything a certificate claims, from scratch."""
    if len(c.subset_1) != c.k or len(c.subset_2) != c.k:
        return _fail("size-mismatch")
    if c.subset_1 == c.subset_2:
        return _fail("identical-subsets")
    cubic = CubicCurve(c.mu)
    if not cubic.is_smooth:
        return _fail("not-smooth")
    if not CUBIC_DEGREE != LINE_DEGREE:
        return _fail("degree-condition")

    arr1, arr2 = realize(c.mu, c.subset_1), realize(c.mu, c.subset_2)
    if not (arr1.validate() and arr2.validate()):
        return _fail("realization-invalid")
    ct1, ct2 = combinatorial_type(arr1), combinatorial_type(arr2)
    if not types_equal(ct1, ct2):
        return _fail("combinatorics-differ")
    try:
        claimed = _encoding_type(c.combinatorics)
    except (KeyError, TypeError, ValueError):
        return _fail("combinatorics-malformed")
    if not types_equal(claimed, ct1):
        return _fail("combinatorics-mismatch")
    if not check_relabeling(ct1, ct2, c.relabeling):
        return _fail("bad-relabeling")

    if classify(c.subset_1) != c.type_1 or classify(c.subset_2) != c.type_2:
        return _fail("type-mismatch")
    counts = []
    for subset, claimed_counts in zip((c.subset_1, c.subset_2), c.invariant_counts):
        fibres = profile(subset).collinear_fibre_counts()
        if len(set(fibres.values())) != 1:
            return _fail("invariant-counts-inconsistent")
        if claimed_counts and claimed_counts != fibres:
            return _fail("invariant-counts-mismatch")
        counts.append(fibres["d6"])
    if tuple(counts) != c.counts:
        return _fail("counts-mismatch")
    if counts[0] == counts[1]:
        return _fail("counts-equal")
    return VerificationResult(True, "ok")


def _make_certificate(
    mu: Fraction, s1: PointSubset, s2: PointSubset, ct1: CombinatorialType, ct2: CombinatorialType
) -> ZariskiCertificate:
    r = relabeling(ct1, ct2)
    assert r is not None
    p1, p2 = profile(s1), profile(s2)
    return ZariskiCertificate(
        mu=mu,
        k=len(s1),
        subset_1=s1,
        subset_2=s2,
        type_1=classify(s1),
        type_2=classify(s2),
        combinatorics=ct1.encoding(),
        relabeling=tuple(r),
        counts=(p1.n_collinear, p2.n_collinear),
        invariant_counts=(p1.collinear_fibre_counts(), p2.collinear_fibre_counts()),
    )


def _lex(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(9) if mask >> i & 1)


def find_zariski_pairs(mu: Fraction | int | str, k: int, full: bool = False) -> list[ZariskiCertificate]:
    """Certificates for pairs of k-subsets with equal combinatorics but different n.

    The subset with more collinear triples is always ``subset_1`` (Type I when
    k is 4, 5 or 6).  By default one certificate is emitted per pair of
    symmetry orbits: the first witness pair in lexicographic order.  With
    ``full`` every qualifying pair of subsets is emitted.
    """
    mu = Fraction(mu)
    if not isinstance(k, int) or not 1 <= k <= 9:
        raise ValueError(f"k must be an integer in 1..9, got {k!r}")
    CubicCurve(mu).require_smooth()
    if k < 3:
        return []

    masks = sorted((m for m in range(512) if m.bit_count() == k), key=_lex)
    n_of = {m: count_collinear_mask(m) for m in masks}
    if len(set(n_of.values())) < 2:
        return []

    types = {m: combinatorial_type(realize(mu, PointSubset.from_mask(m))) for m in masks}
    certs = []
    if full:
        for m1 in masks:
            for m2 in masks:
                if n_of[m1] > n_of[m2] and types_equal(types[m1], types[m2]):
                    s1, s2 = PointSubset.from_mask(m1), PointSubset.from_mask(m2)
                    certs.append(_make_certificate(mu, s1, s2, types[m1], types[m2]))
        return certs

    orbits: dict[int, list[int]] = {}
    for m in masks:
        orbits.setdefault(canonical_mask(m), []).append(m)
    reps = sorted(orbits, key=_lex)
    for o1 in reps:
        for o2 in reps:
            if n_of[o1] <= n_of[o2]:
                continue
            first_by_type: dict = {}
            for m2 in orbits[o2]:
                first_by_type.setdefault(types[m2].canonical, m2)
            for m1 in orbits[o1]:
                m2 = first_by_type.get(types[m1].canonical)
                if m2 is not None:
                    s1, s2 = PointSubset.from_mask(m1), PointSubset.from_mask(m2)
                    certs.append(_make_certificate(mu, s1, s2, types[m1], types[m2]))
                    break
    return certs


@dataclass(frozen=True)
class ScanResult:
    mu: Fraction
    k: int
    concurrent_collinear: tuple[PointSubset, ...]
    concurrent_all: tuple[PointSubset, ...]
    certificates: tuple[ZariskiCertificate, ...]

    def to_json(self) -> dict:
        return {
            "mu": format_rational(self.mu),
            "k": self.k,
            "concurrent_collinear_triples": [str(s) for s in self.concurrent_collinear],
            "concurrent_triples": [str(s) for s in self.concurrent_all],
            "certificates": [c.to_json() for c in self.certificates],
        }


def scan(mus: Iterable[Fraction | int | str], k: int, full: bool = False) -> list[ScanResult]:
    out = []
    for mu in mus:
        mu = Fraction(mu)
        certs = find_zariski_pairs(mu, k, full=full)
        out.append(
            ScanResult(
                mu, k,
                tuple(concurrent_collinear_triples(mu)),
                tuple(concurrent_triples(mu)),
                tuple(certs),
            )
        )
    return out


def certificates_from_document(doc: dict | Sequence) -> list[ZariskiCertificate]:
    """Pull every certificate out of a scan report, a list, or a single certificate."""
    if isinstance(doc, list):
        return [c for item in doc for c in certificates_from_document(item)]
    if "scans" in doc:
        return certificates_from_document(doc["scans"])
    if "certificates" in doc:
        return [ZariskiCertificate.from_json(c) for c in doc["certificates"]]
    return [ZariskiCertificate.from_json(doc)]
