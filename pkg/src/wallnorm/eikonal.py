"""Constructive realization of a class as an Eulerian coorientation.

A target class n seeds integer values n.h on the lifts of a base face in
the maximal abelian cover.  The highest extension

    f(x) = min over seeds y of  seed(y) + distance(x, y)

is computed on a truncated box; when the seed is admissible (n inside the
dual ball, congruent to the crossing parity class) the extension is
eikonal, changing by exactly one across every wall, and the change
descends to a coorientation of the wall system.

Truncation is handled by doubling the radius until the read-off signs
stabilize across two consecutive radii, then verifying the output
outright (Eulerian plus class check); if verification keeps failing at
the radius cap, the realization falls back to an enumeration lookup.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .coorient import Coorientation, class_of, is_eulerian, iter_eulerian
from .errors import NotRealizable, ResourceLimit
from .homology import Coords, HomologyBasis, gamma_parity
from .normball import contains, dual_ball
from .surface_map import WallSystemMap

State = tuple[int, Coords]


def seed_values(basis: HomologyBasis, n: Sequence[int], radius: int,
                base_face: int = 0) -> dict[Coords, int]:
    """The seed n.h on every lift (base_face, h) with |h_i| <= radius."""
    n = tuple(int(x) for x in n)
    if len(n) != basis.rank:
        raise ValueError(f"target class must have {basis.rank} coordinates")
    out = {}
    for h in product(range(-radius, radius + 1), repeat=basis.rank):
        out[h] = sum(ni * hi for ni, hi in zip(n, h))
    return out


@dataclass(frozen=True)
class EikonalField:
    """Values of the highest extension on the truncated cover box."""

    wmap: WallSystemMap
    basis: HomologyBasis
    target: Coords
    radius: int
    base_face: int
    values: dict[State, int]

    def in_box(self, state: State, radius: int | None = None) -> bool:
        r = self.radius if radius is None else radius
        return all(abs(x) <= r for x in state[1])

    def lifted_pairs(self, edge: int, radius: int) -> Iterator[tuple[State, State]]:
        """All (right lift, left lift) pairs across a wall inside the radius."""
        right, left = self.wmap.dual_graph.ends[edge]
        delta = self.basis.edge_weights[edge]
        for h in product(range(-radius, radius + 1), repeat=self.basis.rank):
            h_left = tuple(a + b for a, b in zip(h, delta))
            if all(abs(x) <= radius for x in h_left):
                yield (right, h), (left, h_left)

    def eikonal_violations(self, radius: int) -> list[tuple[State, State, int | None]]:
        """Wall crossings inside the radius where the step is not exactly one.

        A state the extension never reached counts as a violation (step None).
        """
        out = []
        for e in range(self.wmap.edge_count):
            for right_state, left_state in self.lifted_pairs(e, radius):
                left = self.values.get(left_state)
                right = self.values.get(right_state)
                if left is None or right is None:
                    out.append((right_state, left_state, None))
                elif abs(left - right) != 1:
                    out.append((right_state, left_state, left - right))
        return out

    def equivariance_violations(self, radius: int) -> list[tuple[State, State]]:
        """State pairs (same face) inside the radius breaking f(h+u)-f(h) = n.u."""
        out = []
        box = [h for h in product(range(-radius, radius + 1), repeat=self.basis.rank)]
        for face in range(len(self.wmap.faces)):
            for h1 in box:
                v1 = self.values.get((face, h1))
                for h2 in box:
                    v2 = self.values.get((face, h2))
                    expected = sum(
                        ni * (a - b) for ni, a, b in zip(self.target, h2, h1)
                    )
                    if v1 is None or v2 is None or v2 - v1 != expected:
                        out.append(((face, h1), (face, h2)))
        return out


def extend_highest(
    wmap: WallSystemMap,
    basis: HomologyBasis,
    seed: dict[Coords, int],
    radius: int,
    base_face: int = 0,
    target: Sequence[int] | None = None,
) -> EikonalField:
    """Highest extension of the seed to all cover states inside the box.

    Implemented as a multi-source shortest-path relaxation: every seed lift
    starts at its seed value and every wall crossing costs one.  The target
    class (used by the equivariance check) is read off the seed's unit
    lifts when not passed explicitly.
    """
    rank = basis.rank
    if target is None:
        target = tuple(
            seed.get(tuple(int(i == j) for j in range(rank)), 0) for i in range(rank)
        )
    values: dict[State, int] = {}
    heap: list[tuple[int, State]] = []
    for h, v in seed.items():
        if all(abs(x) <= radius for x in h):
            heapq.heappush(heap, (v, (base_face, h)))
    moves = []
    for e, (right, left) in enumerate(wmap.dual_graph.ends):
        w = basis.edge_weights[e]
        moves.append((right, left, w))
        moves.append((left, right, tuple(-x for x in w)))
    while heap:
        value, state = heapq.heappop(heap)
        if state in values:
            continue
        values[state] = value
        face, h = state
        for f_from, f_to, delta in moves:
            if f_from != face:
                continue
            h_new = tuple(a + b for a, b in zip(h, delta))
            if any(abs(x) > radius for x in h_new):
                continue
            nxt = (f_to, h_new)
            if nxt not in values:
                heapq.heappush(heap, (value + 1, nxt))
    n = tuple(int(x) for x in target)
    return EikonalField(wmap, basis, n, radius, base_face, values)


def read_coorientation(field: EikonalField, safe_radius: int) -> Coorientation | None:
    """Read edge signs from value differences across lifted walls.

    Returns None when some edge has no lifted pair inside the safe box, a
    step other than one, or inconsistent steps between different lifts;
    those all mean the truncation is still too tight.
    """
    signs = []
    for e in range(field.wmap.edge_count):
        step = None
        for right_state, left_state in field.lifted_pairs(e, safe_radius):
            left = field.values.get(left_state)
            right = field.values.get(right_state)
            if left is None or right is None:
                return None
            s = left - right
            if abs(s) != 1 or (step is not None and s != step):
                return None
            step = s
        if step is None:
            return None
        signs.append(step)
    return Coorientation(tuple(signs))


@dataclass(frozen=True)
class RealizationResult:
    """An Eulerian coorientation realizing the target class."""

    coorientation: Coorientation
    target: Coords
    method: str  # "eikonal" or "enumeration-fallback"


def _initial_radius(basis: HomologyBasis, n: Coords) -> int:
    max_weight = max(
        (abs(x) for w in basis.edge_weights for x in w), default=1
    )
    max_target = max((abs(x) for x in n), default=0)
    return max(4, 2 * (max_weight + 1), max_target + 2)


def realize(
    wmap: WallSystemMap,
    basis: HomologyBasis,
    n: Sequence[int],
    method: str = "auto",
    max_doublings: int = 3,
) -> RealizationResult:
    """Produce an Eulerian coorientation of class n, or raise NotRealizable.

    Feasibility is decided first: n must be congruent to the crossing
    parity class mod 2 and lie in the dual ball.  The eikonal construction
    then runs with radius doubling; its output is verified outright, so the
    stopping heuristic can only cost completeness, which the enumeration
    fallback restores.
    """
    n = tuple(int(x) for x in n)
    if len(n) != basis.rank:
        raise ValueError(f"target class must have {basis.rank} coordinates")
    if method not in ("auto", "eikonal", "lookup"):
        raise ValueError(f"unknown method {method!r}")

    parity = gamma_parity(wmap, basis)
    if any((ni - pi) % 2 for ni, pi in zip(n, parity)):
        raise NotRealizable(
            "parity", f"class {n} is not congruent to the parity class {parity} mod 2"
        )
    ball = dual_ball(wmap, basis)
    position = contains(ball, n)
    if position == "outside":
        raise NotRealizable("outside-ball", f"class {n} lies outside the dual ball")

    if method == "lookup":
        return _lookup(wmap, basis, n)

    # boundary targets stabilize slowest; their radius cap is 4x the default
    doublings = max_doublings + (2 if position == "boundary" else 0)
    radius = _initial_radius(basis, n)
    previous: Coorientation | None = None
    for _ in range(doublings + 1):
        field = extend_highest(
            wmap, basis, seed_values(basis, n, radius), radius, target=n
        )
        candidate = read_coorientation(field, max(1, radius // 2))
        if candidate is not None and candidate == previous:
            if is_eulerian(wmap, candidate) and class_of(wmap, candidate, basis) == n:
                return RealizationResult(candidate, n, "eikonal")
        previous = candidate
        radius *= 2
    if method == "eikonal":
        raise ResourceLimit(
            f"eikonal construction did not stabilize for {n} within the radius cap"
        )
    return _lookup(wmap, basis, n)


def _lookup(wmap: WallSystemMap, basis: HomologyBasis, n: Coords) -> RealizationResult:
    for coor in iter_eulerian(wmap):
        if class_of(wmap, coor, basis) == n:
            return RealizationResult(coor, n, "enumeration-fallback")
    raise NotRealizable(
        "outside-ball", f"no Eulerian coorientation has class {n}"
    )
