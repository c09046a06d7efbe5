"""Exact realization of k-Artal arrangements on Hesse-pencil cubics.

The cubic is ``x^3 + y^3 + z^3 - 3*mu*x*y*z`` with rational ``mu``.  Every
smooth member has the same nine inflection points, all with coordinates in
Q(w); the tangent lines at them depend on ``mu``.  All computations are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CUBE_ROOTS, ONE, ZERO, CyclotomicNumber, format_rational
from .torsion import ORIGIN, POINTS, PointSubset, TorsionPoint, is_collinear_triple, third_point

Triple = tuple[CyclotomicNumber, CyclotomicNumber, CyclotomicNumber]


class NotSmoothError(ValueError):
    """Raised for a singular member of the Hesse pencil."""


class LabelingError(RuntimeError):
    """No labeling matches torsion collinearity with projective collinearity."""


def _sort_key(coords: Sequence[CyclotomicNumber]) -> tuple:
    return tuple((c.rational_part, c.omega_part) for c in coords)


def _normalize(coords: Iterable) -> Triple:
    cs = tuple(CyclotomicNumber.coerce(c) for c in coords)
    if len(cs) != 3:
        raise ValueError("projective coordinates need exactly 3 entries")
    for c in cs:
        if c:
            inv = c.inverse()
            return tuple(x * inv for x in cs)  # type: ignore[return-value]
    raise ValueError("projective coordinates cannot all be zero")


@dataclass(frozen=True)
class _Projective:
    coords: Triple

    def __init__(self, *coords) -> None:
        if len(coords) == 1 and not isinstance(coords[0], (CyclotomicNumber, int, Fraction)):
            coords = tuple(coords[0])
        object.__setattr__(self, "coords", _normalize(coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> CyclotomicNumber:
        return self.coords[i]

    def sort_key(self) -> tuple:
        return _sort_key(self.coords)

    def to_json(self) -> list[dict[str, str]]:
        return [c.to_json() for c in self.coords]

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


class ProjectivePoint(_Projective):
    """A point of P^2 over Q(w), normalized so the first nonzero coordinate is 1."""


class ProjectiveLine(_Projective):
    """The line a*x + b*y + c*z = 0, stored by its normalized coefficients."""


def dot(u: Iterable[CyclotomicNumber], v: Iterable[CyclotomicNumber]) -> CyclotomicNumber:
    total = ZERO
    for a, b in zip(u, v):
        total = total + a * b
    return total


def cross(u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> Triple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(p: Sequence, q: Sequence, r: Sequence) -> CyclotomicNumber:
    return dot(p, cross(q, r))


def incident(p: ProjectivePoint, line: ProjectiveLine) -> bool:
    return not dot(p, line)


def collinear(p: ProjectivePoint, q: ProjectivePoint, r: ProjectivePoint) -> bool:
    return not det3(p, q, r)


def concurrent(l1: ProjectiveLine, l2: ProjectiveLine, l3: ProjectiveLine) -> bool:
    return not det3(l1, l2, l3)


def line_through(p: ProjectivePoint, q: ProjectivePoint) -> ProjectiveLine:
    if p == q:
        raise ValueError("line_through needs two distinct points")
    return ProjectiveLine(cross(p, q))


def meet(l1: ProjectiveLine, l2: ProjectiveLine) -> ProjectivePoint:
    if l1 == l2:
        raise ValueError("meet needs two distinct lines")
    return ProjectivePoint(cross(l1, l2))


@dataclass(frozen=True)
class CubicCurve:
    """The Hesse-pencil member x^3 + y^3 + z^3 - 3*mu*x*y*z."""

    mu: Fraction

    def __init__(self, mu: Fraction | int | str) -> None:
        object.__setattr__(self, "mu", Fraction(mu))

    @property
    def _m(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.mu)

    def __call__(self, p: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
        x, y, z = p
        return x**3 + y**3 + z**3 - 3 * self._m * x * y * z

    def gradient(self, p: Sequence[CyclotomicNumber]) -> Triple:
        x, y, z = p
        m = self._m
        return (3 * (x * x - m * y * z), 3 * (y * y - m * x * z), 3 * (z * z - m * x * y))

    def hessian(self, p: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
        """Determinant of the matrix of second partials at ``p``."""
        x, y, z = p
        m3 = -3 * self._m
        h = (
            (6 * x, m3 * z, m3 * y),
            (m3 * z, 6 * y, m3 * x),
            (m3 * y, m3 * x, 6 * z),
        )
        return det3(*h)

    def contains(self, p: Sequence[CyclotomicNumber]) -> bool:
        return not self(p)

    def singular_points(self) -> list[ProjectivePoint]:
        """Common zeros of the three partials, found by exhaustive case split.

        If mu = 0 the partials force x = y = z = 0.  Otherwise a zero of one
        coordinate forces all to vanish, so x^3 = y^3 = z^3 = mu*xyz and the
        point is (1 : a : b) with a, b cube roots of unity.
        """
        if self.mu == 0:
            return []
        out = []
        for a, b in product(CUBE_ROOTS, repeat=2):
            p = (ONE, a, b)
            if not any(self.gradient(p)):
                out.append(ProjectivePoint(p))
        return out

    @property
    def is_smooth(self) -> bool:
        return self.mu**3 != 1

    def require_smooth(self) -> None:
        if not _smooth(self.mu):
            raise NotSmoothError(f"cubic with mu={self.mu} is singular (mu^3 = 1)")

    def __str__(self) -> str:
        return f"x^3 + y^3 + z^3 - 3*({self.mu})*x*y*z"


@lru_cache(maxsize=None)
def _smooth(mu: Fraction) -> bool:
    cubic = CubicCurve(mu)
    algebraic = cubic.is_smooth
    geometric = not cubic.singular_points()
    if algebraic != geometric:
        raise AssertionError(f"smoothness tests disagree for mu={mu}")
    return algebraic


def _hesse_base_points() -> list[ProjectivePoint]:
    pts = []
    for w in CUBE_ROOTS:
        pts.append(ProjectivePoint(ZERO, ONE, -w))
        pts.append(ProjectivePoint(ONE, ZERO, -w))
        pts.append(ProjectivePoint(ONE, -w, ZERO))
    return pts


def inflection_points(cubic: CubicCurve) -> list[ProjectivePoint]:
    """The nine flexes, each checked exactly against the cubic and its Hessian."""
    cubic.require_smooth()
    pts = sorted(set(_hesse_base_points()), key=ProjectivePoint.sort_key)
    for p in pts:
        if cubic(p) or cubic.hessian(p):
            raise AssertionError(f"{p} is not a flex of {cubic}")
    if len(pts) != 9:
        raise AssertionError("expected nine distinct inflection points")
    return pts


def _extend_labels(
    flexes: Sequence[ProjectivePoint], seed: dict[TorsionPoint, int]
) -> dict[TorsionPoint, int] | None:
    """Close a partial labeling under 'the third point on a line is -u-v'."""
    labels = dict(seed)
    changed = True
    while changed and len(labels) < 9:
        changed = False
        for u, v in combinations(sorted(labels), 2):
            w = third_point(u, v)
            pu, pv = flexes[labels[u]], flexes[labels[v]]
            hits = [
                i for i in range(len(flexes))
                if i not in (labels[u], labels[v]) and collinear(pu, pv, flexes[i])
            ]
            if len(hits) != 1:
                return None
            if w in labels:
                if labels[w] != hits[0]:
                    return None
            elif hits[0] in labels.values():
                return None
            else:
                labels[w] = hits[0]
                changed = True
    return labels if len(labels) == 9 else None


def validate_labeling(labeling: Mapping[TorsionPoint, ProjectivePoint]) -> bool:
    """Torsion collinearity matches projective collinearity on all 84 triples."""
    if sorted(labeling) != list(POINTS) or len(set(labeling.values())) != 9:
        return False
    return all(
        is_collinear_triple(p, q, r) == collinear(labeling[p], labeling[q], labeling[r])
        for p, q, r in combinations(POINTS, 3)
    )


@lru_cache(maxsize=None)
def _labeling(mu: Fraction) -> tuple[tuple[TorsionPoint, ProjectivePoint], ...]:
    cubic = CubicCurve(mu)
    flexes = inflection_points(cubic)
    o = 0
    for i, j in permutations(range(1, 9), 2):
        if collinear(flexes[o], flexes[i], flexes[j]):
            continue
        seed = {ORIGIN: o, TorsionPoint(1, 0): i, TorsionPoint(0, 1): j}
        idx = _extend_labels(flexes, seed)
        if idx is None:
            continue
        labeling = {t: flexes[idx[t]] for t in POINTS}
        if validate_labeling(labeling):
            return tuple(sorted(labeling.items()))
    raise LabelingError(f"no consistent torsion labeling for mu={mu}")


def assign_labels(cubic: CubicCurve) -> dict[TorsionPoint, ProjectivePoint]:
    """Bijection from (Z/3)^2 to the flexes matching both collinearity notions."""
    cubic.require_smooth()
    return dict(_labeling(cubic.mu))


def tangent_line(cubic: CubicCurve, p: ProjectivePoint) -> ProjectiveLine:
    if not cubic.contains(p):
        raise ValueError(f"{p} is not on {cubic}")
    g = cubic.gradient(p)
    if not any(g):
        raise NotSmoothError(f"{p} is a singular point of {cubic}")
    return ProjectiveLine(g)


def _points_spanning(line: ProjectiveLine) -> tuple[Triple, Triple]:
    """Two independent points on ``line``."""
    a, b, c = line.coords
    basis = [(ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)]
    candidates = [cross(line.coords, e) for e in basis]
    nonzero = [v for v in candidates if any(v)]
    for u, v in combinations(nonzero, 2):
        if any(cross(u, v)):
            return u, v
    raise AssertionError(f"degenerate line {line}")


def restrict_to_line(cubic: CubicCurve, line: ProjectiveLine) -> tuple[CyclotomicNumber, ...]:
    """Coefficients (c3, c2, c1, c0) of F(s*A + t*B) = c3 s^3 + c2 s^2 t + c1 s t^2 + c0 t^3."""
    A, B = _points_spanning(line)

    def f(s, t):
        return cubic(tuple(s * a + t * b for a, b in zip(A, B)))

    c3 = f(ONE, ZERO)
    c0 = f(ZERO, ONE)
    plus = f(ONE, ONE) - c3 - c0  # c2 + c1
    minus = f(ONE, -ONE) - c3 + c0  # c1 - c2
    half = Fraction(1, 2)
    return c3, (plus - minus) * half, (plus + minus) * half, c0


def is_perfect_cube(coeffs: Sequence[CyclotomicNumber]) -> bool:
    """True when the binary cubic is a nonzero scalar times the cube of a linear form."""
    c3, c2, c1, c0 = coeffs
    if c3:
        beta = c2 / (3 * c3)
        return c1 == 3 * c3 * beta * beta and c0 == c3 * beta**3
    return not c2 and not c1 and bool(c0)


def tangency_is_inflectional(cubic: CubicCurve, line: ProjectiveLine) -> bool:
    return is_perfect_cube(restrict_to_line(cubic, line))


@lru_cache(maxsize=None)
def _tangents(mu: Fraction) -> tuple[tuple[TorsionPoint, ProjectiveLine], ...]:
    cubic = CubicCurve(mu)
    labeling = assign_labels(cubic)
    out = []
    for t in POINTS:
        line = tangent_line(cubic, labeling[t])
        if not tangency_is_inflectional(cubic, line):
            raise AssertionError(f"tangent at {labeling[t]} does not meet the cubic with multiplicity 3")
        out.append((t, line))
    return tuple(out)


def all_tangents(cubic: CubicCurve) -> dict[TorsionPoint, ProjectiveLine]:
    cubic.require_smooth()
    return dict(_tangents(cubic.mu))


@dataclass(frozen=True)
class RealizedArrangement:
    cubic: CubicCurve
    labeling: Mapping[TorsionPoint, ProjectivePoint] = field(compare=False, repr=False)
    subset: PointSubset
    tangents: Mapping[TorsionPoint, ProjectiveLine] = field(compare=False, repr=False)

    @property
    def k(self) -> int:
        return len(self.subset)

    @property
    def lines(self) -> list[ProjectiveLine]:
        """Tangent lines numbered 0..k-1 in the subset's sorted order."""
        return [self.tangents[t] for t in self.subset]

    def validate(self) -> bool:
        c = self.cubic
        if not validate_labeling(self.labeling):
            return False
        for t in self.subset:
            p, line = self.labeling[t], self.tangents[t]
            if c(p) or c.hessian(p) or not incident(p, line):
                return False
            if not tangency_is_inflectional(c, line):
                return False
        return True


def realize(mu: Fraction | int | str, subset: PointSubset) -> RealizedArrangement:
    cubic = CubicCurve(mu)
    cubic.require_smooth()
    labeling = assign_labels(cubic)
    tangents = all_tangents(cubic)
    return RealizedArrangement(cubic, labeling, subset, {t: tangents[t] for t in subset})


@dataclass(frozen=True)
class SingularRecord:
    """One singular point of the arrangement.

    ``kind`` is ``"tangency"`` (cubic meets line ``lines[0]``), ``"node"``
    (exactly two lines) or ``"concurrency"`` (three or more lines).
    """

    kind: str
    lines: tuple[int, ...]
    point: ProjectivePoint | None = field(default=None, compare=False)

    def key(self) -> tuple[str, tuple[int, ...]]:
        return (self.kind, self.lines)

    def to_json(self) -> dict:
        d: dict = {"kind": self.kind, "lines": list(self.lines)}
        if self.point is not None:
            d["point"] = self.point.to_json()
        return d


def _kind(m: int) -> str:
    return "node" if m == 2 else "concurrency"


def _refine(colour: tuple[int, ...], multi: Sequence[frozenset[int]]) -> tuple[int, ...]:
    """Colour refinement of lines by the concurrency sets through them.

    New colours are ranks of sorted signatures, so the result depends only
    on the structure, never on how the lines happen to be numbered.
    """
    k = len(colour)
    n_classes = len(set(colour))
    while True:
        sig = [
            (
                colour[i],
                tuple(sorted((len(s), tuple(sorted(colour[j] for j in s if j != i))) for s in multi if i in s)),
            )
            for i in range(k)
        ]
        ranks = {v: r for r, v in enumerate(sorted(set(sig)))}
        colour = tuple(ranks[v] for v in sig)
        if len(ranks) == n_classes:
            return colour
        n_classes = len(ranks)


@lru_cache(maxsize=4096)
def _canonical_labeling(k: int, multi: frozenset[frozenset[int]]) -> tuple[int, ...]:
    """A relabeling of lines 0..k-1 putting the concurrency sets in canonical position.

    Individualization-refinement: split the first non-trivial colour class
    one member at a time, refine, and recurse; each discrete colouring is a
    candidate labeling and the one with the least encoding wins.  Lines on no
    concurrency set are interchangeable, so they are told apart up front.
    """
    sets = sorted(multi, key=sorted)
    touched = set().union(*sets) if sets else set()
    isolated = [i for i in range(k) if i not in touched]
    start = tuple(1 + isolated.index(i) if i in isolated else 0 for i in range(k))

    best: list = [None, tuple(range(k))]

    def search(colour: tuple[int, ...]) -> None:
        colour = _refine(colour, sets)
        if len(set(colour)) == k:
            key = tuple(sorted(tuple(sorted(colour[i] for i in s)) for s in sets))
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, colour
            return
        counts: dict[int, int] = {}
        for c in colour:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, n in counts.items() if n > 1)
        for v in range(k):
            if colour[v] == target:
                search(tuple(2 * c if i == v else 2 * c + 1 for i, c in enumerate(colour)))

    search(start)
    return best[1]


@dataclass(frozen=True)
class CombinatorialType:
    """Incidence data of the arrangement's singular points.

    ``records`` use the arrangement's own line numbering; ``canonical`` is the
    same data after applying ``canonical_perm`` (line i -> canonical_perm[i])
    and is what equality of combinatorics is decided on.
    """

    k: int
    records: tuple[SingularRecord, ...] = field(compare=False)
    canonical: tuple[tuple[str, tuple[int, ...]], ...]
    canonical_perm: tuple[int, ...] = field(compare=False)

    @property
    def concurrency_multiplicities(self) -> list[int]:
        return sorted(len(lines) for kind, lines in self.canonical if kind == "concurrency")

    @property
    def node_count(self) -> int:
        return sum(1 for kind, _ in self.canonical if kind == "node")

    def encoding(self) -> dict:
        return {
            "k": self.k,
            "records": [{"kind": kind, "lines": list(lines)} for kind, lines in self.canonical],
        }


def _canonicalize(k: int, records: Sequence[SingularRecord]) -> CombinatorialType:
    multi = frozenset(frozenset(r.lines) for r in records if r.kind == "concurrency")
    perm = _canonical_labeling(k, multi)
    canon = tuple(
        sorted((r.kind, tuple(sorted(perm[i] for i in r.lines))) for r in records)
    )
    return CombinatorialType(k, tuple(records), canon, perm)


def type_from_records(k: int, records: Iterable[tuple[str, Iterable[int]]]) -> CombinatorialType:
    """Rebuild a type from bare (kind, lines) records, e.g. parsed from JSON."""
    recs = [SingularRecord(kind, tuple(sorted(lines))) for kind, lines in records]
    return _canonicalize(k, recs)


def combinatorial_type(arr: RealizedArrangement) -> CombinatorialType:
    lines = arr.lines
    flexes = [arr.labeling[t] for t in arr.subset]
    records = [SingularRecord("tangency", (i,), flexes[i]) for i in range(arr.k)]
    groups: dict[ProjectivePoint, set[int]] = {}
    for i, j in combinations(range(arr.k), 2):
        p = meet(lines[i], lines[j])
        if arr.cubic.contains(p):
            raise AssertionError(f"lines {i} and {j} meet on the cubic at {p}")
        groups.setdefault(p, set()).update((i, j))
    for p in sorted(groups, key=ProjectivePoint.sort_key):
        through = tuple(sorted(groups[p]))
        records.append(SingularRecord(_kind(len(through)), through, p))
    return _canonicalize(arr.k, records)


def types_equal(t1: CombinatorialType, t2: CombinatorialType) -> bool:
    return t1.k == t2.k and t1.canonical == t2.canonical


def relabeling(t1: CombinatorialType, t2: CombinatorialType) -> list[int] | None:
    """Line map r with r[i] = line of t2 matching line i of t1, or None."""
    if not types_equal(t1, t2):
        return None
    inv2 = {c: i for i, c in enumerate(t2.canonical_perm)}
    return [inv2[c] for c in t1.canonical_perm]


def check_relabeling(t1: CombinatorialType, t2: CombinatorialType, r: Sequence[int]) -> bool:
    """Does ``r`` carry every incidence record of t1 onto one of t2?"""
    if t1.k != t2.k or sorted(r) != list(range(t1.k)):
        return False
    mapped = sorted((rec.kind, tuple(sorted(r[i] for i in rec.lines))) for rec in t1.records)
    return mapped == sorted(rec.key() for rec in t2.records)


def concurrent_collinear_triples(mu: Fraction | int | str) -> list[PointSubset]:
    """Collinear flex triples whose three tangents pass through one point."""
    cubic = CubicCurve(mu)
    tangents = all_tangents(cubic)
    out = []
    for p, q, r in combinations(POINTS, 3):
        if is_collinear_triple(p, q, r) and concurrent(tangents[p], tangents[q], tangents[r]):
            out.append(PointSubset((p, q, r)))
    return out


def concurrent_triples(mu: Fraction | int | str) -> list[PointSubset]:
    """All flex triples (collinear or not) with concurrent tangents."""
    cubic = CubicCurve(mu)
    tangents = all_tangents(cubic)
    return [
        PointSubset(t) for t in combinations(POINTS, 3)
        if concurrent(*(tangents[p] for p in t))
    ]


def arrangement_to_json(arr: RealizedArrangement) -> dict:
    ct = combinatorial_type(arr)
    return {
        "mu": format_rational(arr.cubic.mu),
        "cubic": str(arr.cubic),
        "subset": str(arr.subset),
        "labeling": {str(t): arr.labeling[t].to_json() for t in POINTS},
        "tangents": [
            {"index": i, "point": str(t), "line": arr.tangents[t].to_json()}
            for i, t in enumerate(arr.subset)
        ],
        "records": [r.to_json() for r in ct.records],
        "canonical_type": ct.encoding(),
    }
