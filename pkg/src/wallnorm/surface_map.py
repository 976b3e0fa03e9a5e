"""Rotation-system encoding of wall systems on closed oriented surfaces.

A wall system (a self-transverse collection of closed curves with simple
crossings) is stored combinatorially: every double point is a vertex
carrying an ordered quadruple of darts, and every edge pairs a tail dart
with a head dart.  The surface is implicit in the data; faces are orbits
of the face permutation, and validation rejects anything that does not
describe a connected closed oriented surface of genus at least one.

Conventions fixed here and used by every other module:

* ``sigma`` maps a dart to the next dart in its vertex rotation,
* ``alpha`` swaps the two darts of an edge,
* the face permutation is ``phi = sigma o alpha``; the face orbit that
  contains the tail dart of an edge is the *left* face of that edge
  (the reference orientation of the edge runs tail -> head),
* dual-graph links are directed right face -> left face, and all signs
  downstream (coorientations, cocycle weights) refer to that direction.

Maps are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BadDegree, BadEuler, DartMultiplicity, MalformedInput, OpenWalk

# A crossing of a dual link: (edge id, +1) crosses right face -> left face,
# (edge id, -1) the other way.  A walk is a chained sequence of crossings.
Crossing = tuple[int, int]
Walk = tuple[Crossing, ...]


@dataclass(frozen=True)
class Face:
    """A complementary disc, given by the cyclic dart sequence of its boundary."""

    darts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class Curve:
    """One unoriented immersed circle of the wall system.

    ``darts`` is the straight-ahead orbit of the smallest dart on the curve
    (one of the two traversal orientations).  ``support`` holds the darts of
    both orientations, two per edge, so supports partition the dart set.
    """

    darts: tuple[int, ...]
    support: frozenset[int]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class DualGraph:
    """Dual graph of the wall system: one node per face, one link per edge.

    ``ends[e]`` is the pair (right face, left face); the reference direction
    of link ``e`` runs right -> left.  Self-links are allowed.
    """

    node_count: int
    ends: tuple[tuple[int, int], ...]

    @cached_property
    def moves(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """Per node, the directed crossings leaving it: (edge, direction, target)."""
        out: list[list[tuple[int, int, int]]] = [[] for _ in range(self.node_count)]
        for e, (right, left) in enumerate(self.ends):
            out[right].append((e, +1, left))
            out[left].append((e, -1, right))
        return tuple(tuple(sorted(m)) for m in out)

    def degree(self, node: int) -> int:
        return len(self.moves[node])

    def crossing_ends(self, edge: int, direction: int) -> tuple[int, int]:
        right, left = self.ends[edge]
        return (right, left) if direction > 0 else (left, right)

    def walk_faces(self, walk: Sequence[Crossing]) -> tuple[int, ...]:
        """Face sequence visited by a walk; raises OpenWalk if crossings do not chain."""
        if not walk:
            return ()
        faces = []
        here = None
        for k, (edge, direction) in enumerate(walk):
            if not 0 <= edge < len(self.ends) or direction not in (-1, +1):
                raise OpenWalk(f"crossing {k} is not a valid directed link: {(edge, direction)}")
            src, dst = self.crossing_ends(edge, direction)
            if here is None:
                faces.append(src)
            elif src != here:
                raise OpenWalk(f"crossing {k} starts at face {src}, expected {here}")
            here = dst
            faces.append(dst)
        return tuple(faces)

    def check_closed(self, walk: Sequence[Crossing]) -> None:
        faces = self.walk_faces(walk)
        if faces and faces[0] != faces[-1]:
            raise OpenWalk(f"walk ends at face {faces[-1]} but started at face {faces[0]}")

    def is_connected(self) -> bool:
        if self.node_count == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            node = stack.pop()
            for _, _, other in self.moves[node]:
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        return len(seen) == self.node_count

    def shortest_path(self, src: int, dst: int) -> Walk:
        """A shortest walk src -> dst (deterministic BFS, smallest links first)."""
        if src == dst:
            return ()
        parent: dict[int, tuple[int, Crossing]] = {src: (src, (0, 0))}
        frontier = [src]
        while frontier:
            nxt = []
            for node in frontier:
                for edge, direction, other in self.moves[node]:
                    if other not in parent:
                        parent[other] = (node, (edge, direction))
                        if other == dst:
                            crossings = []
                            here = dst
                            while here != src:
                                prev, move = parent[here]
                                crossings.append(move)
                                here = prev
                            return tuple(reversed(crossings))
                        nxt.append(other)
            frontier = nxt
        raise OpenWalk(f"no dual path from face {src} to face {dst}")


def reverse_walk(walk: Sequence[Crossing]) -> Walk:
    return tuple((edge, -direction) for edge, direction in reversed(walk))


def concat_closed_walks(dual: DualGraph, *walks: Sequence[Crossing]) -> Walk:
    """One closed walk whose class is the sum of the given closed walks.

    Walks based at different faces are reached through a shortest connector
    path walked there and back, which contributes nothing to the class.
    """
    pieces: list[Crossing] = []
    base = None
    for walk in walks:
        walk = tuple(walk)
        if not walk:
            continue
        dual.check_closed(walk)
        start = dual.crossing_ends(*walk[0])[0]
        if base is None:
            base = start
        connector = dual.shortest_path(base, start)
        pieces.extend(connector)
        pieces.extend(walk)
        pieces.extend(reverse_walk(connector))
    return tuple(pieces)


class WallSystemMap:
    """Validated combinatorial map of a wall system filling a closed surface."""

    def __init__(
        self,
        vertex_count: int,
        rotations: Iterable[Sequence[int]],
        edges: Iterable[Sequence[int]],
    ):
        rotations = tuple(tuple(r) for r in rotations)
        edges = tuple(tuple(e) for e in edges)
        self.vertex_count = int(vertex_count)
        self.rotations = rotations
        self.edges = edges
        self._validate()

    # -- validation -------------------------------------------------------

    def _validate(self) -> None:
        v = self.vertex_count
        if v < 1:
            raise MalformedInput("a wall system needs at least one vertex (V >= 1)")
        if len(self.rotations) != v:
            raise MalformedInput(f"expected {v} vertex rotations, got {len(self.rotations)}")
        n = 4 * v
        for i, rot in enumerate(self.rotations):
            if len(rot) != 4:
                raise BadDegree(f"vertex {i} lists {len(rot)} darts; every vertex has degree 4")
        seen = [0] * n
        for rot in self.rotations:
            for d in rot:
                if not isinstance(d, int) or not 0 <= d < n:
                    raise MalformedInput(f"dart id {d!r} out of range [0, {n})")
                seen[d] += 1
        bad = [d for d, c in enumerate(seen) if c != 1]
        if bad:
            raise DartMultiplicity(f"rotations do not use each dart exactly once (darts {bad})")
        if len(self.edges) != 2 * v:
            raise MalformedInput(f"expected E = 2V = {2 * v} edges, got {len(self.edges)}")
        seen = [0] * n
        for j, pair in enumerate(self.edges):
            if len(pair) != 2:
                raise MalformedInput(f"edge {j} must pair exactly two darts")
            for d in pair:
                if not isinstance(d, int) or not 0 <= d < n:
                    raise MalformedInput(f"dart id {d!r} out of range [0, {n})")
                seen[d] += 1
        bad = [d for d, c in enumerate(seen) if c != 1]
        if bad:
            raise DartMultiplicity(f"edges do not use each dart exactly once (darts {bad})")
        if not self._is_connected():
            raise MalformedInput("the map is not connected; it does not describe one surface")
        chi = self.euler_characteristic
        if chi % 2 != 0:
            raise BadEuler(f"Euler characteristic {chi} is odd")
        if chi > 0:
            raise BadEuler(f"Euler characteristic {chi} > 0: genus-0 wall systems are not supported")

    def _is_connected(self) -> bool:
        n = 4 * self.vertex_count
        sigma, alpha = self.sigma, self.alpha
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for nd in (sigma[d], alpha[d]):
                if nd not in seen:
                    seen.add(nd)
                    stack.append(nd)
        return len(seen) == n

    # -- permutations and incidences ---------------------------------------

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        """Next dart in the vertex rotation."""
        out = [0] * (4 * self.vertex_count)
        for rot in self.rotations:
            for k in range(4):
                out[rot[k]] = rot[(k + 1) % 4]
        return tuple(out)

    @cached_property
    def alpha(self) -> tuple[int, ...]:
        """The other dart of the same edge."""
        out = [0] * (4 * self.vertex_count)
        for tail, head in self.edges:
            out[tail] = head
            out[head] = tail
        return tuple(out)

    @cached_property
    def dart_vertex(self) -> tuple[int, ...]:
        out = [0] * (4 * self.vertex_count)
        for i, rot in enumerate(self.rotations):
            for d in rot:
                out[d] = i
        return tuple(out)

    @cached_property
    def dart_edge(self) -> tuple[int, ...]:
        out = [0] * (4 * self.vertex_count)
        for j, (tail, head) in enumerate(self.edges):
            out[tail] = j
            out[head] = j
        return tuple(out)

    @cached_property
    def dart_is_tail(self) -> tuple[bool, ...]:
        out = [False] * (4 * self.vertex_count)
        for tail, _ in self.edges:
            out[tail] = True
        return tuple(out)

    def kappa(self, dart: int) -> int:
        """+1 for tail darts, -1 for head darts (vertex boundary convention)."""
        return 1 if self.dart_is_tail[dart] else -1

    # -- counts -------------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return 2 * self.vertex_count

    @property
    def dart_count(self) -> int:
        return 4 * self.vertex_count

    @cached_property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + len(self.faces)

    @cached_property
    def genus(self) -> int:
        chi = self.euler_characteristic
        g2 = 2 - chi
        if g2 % 2 != 0 or g2 < 0:
            raise BadEuler(f"Euler characteristic {chi} gives no nonnegative integer genus")
        return g2 // 2

    # -- orbits -------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """Orbits of phi = sigma o alpha, each listed from its smallest dart."""
        sigma, alpha = self.sigma, self.alpha
        seen = [False] * self.dart_count
        out = []
        for start in range(self.dart_count):
            if seen[start]:
                continue
            orbit = []
            d = start
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = sigma[alpha[d]]
            out.append(Face(tuple(orbit)))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        out = [0] * self.dart_count
        for i, face in enumerate(self.faces):
            for d in face.darts:
                out[d] = i
        return tuple(out)

    @cached_property
    def curves(self) -> tuple[Curve, ...]:
        """Unoriented constituent curves: paired orbits of d -> sigma^2(alpha(d))."""
        sigma, alpha = self.sigma, self.alpha

        def ahead(d: int) -> int:
            return sigma[sigma[alpha[d]]]

        orbit_of = [-1] * self.dart_count
        orbits: list[list[int]] = []
        for start in range(self.dart_count):
            if orbit_of[start] >= 0:
                continue
            orbit = []
            d = start
            while orbit_of[d] < 0:
                orbit_of[d] = len(orbits)
                orbit.append(d)
                d = ahead(d)
            orbits.append(orbit)

        out = []
        used = set()
        for i, orbit in enumerate(orbits):
            if i in used:
                continue
            j = orbit_of[alpha[orbit[0]]]
            # The reversal of an orbit is the orbit of the partner darts; a
            # 4-valent rotation system never folds an orbit onto its own
            # reversal, which the pairing below relies on.
            if j == i:
                raise MalformedInput("straight-ahead orbit equals its own reversal")
            used.add(i)
            used.add(j)
            support = frozenset(orbit) | frozenset(orbits[j])
            edges = tuple(sorted({self.dart_edge[d] for d in support}))
            out.append(Curve(tuple(orbit), support, edges))
        return tuple(out)

    @cached_property
    def dual_graph(self) -> DualGraph:
        face_of = self.face_of_dart
        ends = []
        for tail, head in self.edges:
            left = face_of[tail]
            right = face_of[head]
            ends.append((right, left))
        return DualGraph(len(self.faces), tuple(ends))

    def face_left(self, edge: int) -> int:
        return self.dual_graph.ends[edge][1]

    def face_right(self, edge: int) -> int:
        return self.dual_graph.ends[edge][0]

    # -- serialization -------------------------------------------------------

    @cached_property
    def canonical_text(self) -> str:
        lines = [f"vertices {self.vertex_count}"]
        for i, rot in enumerate(self.rotations):
            lines.append(f"vertex {i}: {rot[0]} {rot[1]} {rot[2]} {rot[3]}")
        for j, (tail, head) in enumerate(self.edges):
            lines.append(f"edge {j}: {tail} {head}")
        return "\n".join(lines) + "\n"

    @cached_property
    def digest(self) -> str:
        return hashlib.sha256(self.canonical_text.encode()).hexdigest()[:12]

    # -- equality -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WallSystemMap):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self.rotations == other.rotations
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.rotations, self.edges))

    def __repr__(self) -> str:
        return (
            f"WallSystemMap(V={self.vertex_count}, E={self.edge_count}, "
            f"F={len(self.faces)}, genus={self.genus})"
        )


def parse_wall_system(text: str) -> WallSystemMap:
    """Parse the line-oriented wall-system format (see the module docstring).

    Grammar, with '#' comments and blank lines ignored::

        vertices <V>
        vertex <i>: <d0> <d1> <d2> <d3>
        edge <j>: <dTail> <dHead>
    """
    vertex_count = None
    rotations: dict[int, tuple[int, ...]] = {}
    edges: dict[int, tuple[int, ...]] = {}

    def ints(tokens: list[str], where: str) -> list[int]:
        try:
            return [int(t) for t in tokens]
        except ValueError:
            raise MalformedInput(f"non-integer token in {where}: {' '.join(tokens)!r}") from None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "vertices":
            if vertex_count is not None:
                raise MalformedInput(f"line {lineno}: repeated 'vertices' line")
            (vertex_count,) = ints(rest.split(), f"line {lineno}")
        elif head in ("vertex", "edge"):
            if ":" not in rest:
                raise MalformedInput(f"line {lineno}: missing ':' in {head} line")
            index_part, _, darts_part = rest.partition(":")
            (index,) = ints(index_part.split(), f"line {lineno}")
            darts = ints(darts_part.split(), f"line {lineno}")
            store = rotations if head == "vertex" else edges
            if index in store:
                raise MalformedInput(f"line {lineno}: repeated {head} {index}")
            if head == "vertex" and len(darts) != 4:
                raise BadDegree(f"line {lineno}: vertex {index} lists {len(darts)} darts")
            if head == "edge" and len(darts) != 2:
                raise MalformedInput(f"line {lineno}: edge {index} must list two darts")
            store[index] = tuple(darts)
        else:
            raise MalformedInput(f"line {lineno}: unknown directive {head!r}")

    if vertex_count is None:
        raise MalformedInput("missing 'vertices <V>' line")
    if sorted(rotations) != list(range(vertex_count)):
        raise MalformedInput(f"vertex indices must be exactly 0..{vertex_count - 1}")
    if sorted(edges) != list(range(2 * vertex_count)):
        raise MalformedInput(f"edge indices must be exactly 0..{2 * vertex_count - 1}")

    return WallSystemMap(
        vertex_count,
        [rotations[i] for i in range(vertex_count)],
        [edges[j] for j in range(2 * vertex_count)],
    )
