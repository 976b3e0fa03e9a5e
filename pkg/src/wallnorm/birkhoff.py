"""Classification of negative Birkhoff cross sections bounded by the lifted walls.

Lattice points of the dual ball congruent to the crossing parity class
correspond one-to-one to isotopy classes of surfaces transverse to the
geodesic flow with the amphithetic lift of the wall system as boundary;
interior points are the ones meeting every orbit, i.e. genuine cross
sections.  No 3-dimensional surface is built: each class is certified by
its lattice point and its topological invariants, which depend only on
the wall system (Euler characteristic -2V, twice the number of curves
many boundary circles).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .homology import Coords, HomologyBasis, gamma_parity
from .normball import DualBall, contains, dual_ball
from .surface_map import WallSystemMap


@dataclass(frozen=True)
class SectionClass:
    """One congruent lattice point with its status and section invariants."""

    point: Coords
    status: str  # "interior" -> cross section, "boundary" -> transverse only, "outside"
    euler_characteristic: int
    boundary_circles: int
    section_genus: int


@dataclass(frozen=True)
class ClassificationReport:
    """All congruent lattice points of the bounding box, classified."""

    map_digest: str
    basis_label: str
    ball: DualBall
    parity: Coords
    entries: tuple[SectionClass, ...]
    interior_count: int
    boundary_count: int
    outside_count: int

    @property
    def section_exists(self) -> bool:
        return self.interior_count > 0


def section_invariants(wmap: WallSystemMap) -> tuple[int, int, int]:
    """(Euler characteristic, boundary circles, genus) of any associated section.

    One rectangle per edge each contributing -1 gives chi = -E = -2V; the
    boundary is the amphithetic lift, two circles per curve; the genus
    follows from the classification of surfaces with boundary.
    """
    v = wmap.vertex_count
    c = len(wmap.curves)
    chi = -2 * v
    circles = 2 * c
    genus = (2 - chi - circles) // 2
    return chi, circles, genus


def classify(
    wmap: WallSystemMap,
    basis: HomologyBasis,
    ball: DualBall | None = None,
) -> ClassificationReport:
    """Classify every congruent lattice point of the extreme-point bounding box."""
    if ball is None:
        ball = dual_ball(wmap, basis)
    parity = gamma_parity(wmap, basis)
    chi, circles, genus = section_invariants(wmap)
    ranges = [range(lo, hi + 1) for lo, hi in ball.bounding_box()]
    entries = []
    counts = {"interior": 0, "boundary": 0, "outside": 0}
    for point in product(*ranges):
        if any((xi - pi) % 2 for xi, pi in zip(point, parity)):
            continue
        status = contains(ball, point)
        counts[status] += 1
        entries.append(SectionClass(point, status, chi, circles, genus))
    return ClassificationReport(
        wmap.digest,
        basis.label,
        ball,
        parity,
        tuple(entries),
        counts["interior"],
        counts["boundary"],
        counts["outside"],
    )
