"""Exact computations for arrangements of a smooth plane cubic and its inflectional tangents."""

from .enumeration import CensusRow, census, proposition_table
from .invariants import InvariantProfile, TripleInvariantValues, profile, triple_invariants
from .realization import (
    CombinatorialType,
    CubicCurve,
    RealizedArrangement,
    assign_labels,
    combinatorial_type,
    inflection_points,
    realize,
    tangent_line,
    types_equal,
)
from .symmetry import AffineSymmetry, canonical_form, orbit_representatives, symmetry_group
from .torsion import PointSubset, TorsionLine, TorsionPoint, all_lines, collinear_triple_count, is_collinear_triple
from .zariski import ArrangementType, ZariskiCertificate, classify, find_zariski_pairs, verify_certificate

__version__ = "0.1.0"
