import random

import pytest

from wallnorm import (
    BadDegree,
    BadEuler,
    DartMultiplicity,
    MalformedInput,
    parse_wall_system,
)
from wallnorm.fixtures import grid_map, grid_text, random_wall_system


def test_parse_g11(g11):
    assert g11.vertex_count == 1
    assert g11.edge_count == 2
    assert g11.genus == 1


def test_parse_g22(g22):
    assert g22.vertex_count == 4
    assert g22.edge_count == 8


def test_bad_degree_rejected():
    text = "vertices 1\nvertex 0: 0 1 2\nedge 0: 0 2\nedge 1: 1 3\n"
    with pytest.raises(BadDegree):
        parse_wall_system(text)


def test_dart_repeated_rejected():
    text = "vertices 1\nvertex 0: 0 1 2 2\nedge 0: 0 2\nedge 1: 1 3\n"
    with pytest.raises(DartMultiplicity):
        parse_wall_system(text)


def test_dart_out_of_range_rejected():
    text = "vertices 1\nvertex 0: 0 1 2 9\nedge 0: 0 2\nedge 1: 1 3\n"
    with pytest.raises(MalformedInput):
        parse_wall_system(text)


def test_sphere_rejected():
    # figure eight with adjacent petals: one vertex, three faces, chi = 2
    text = "vertices 1\nvertex 0: 0 1 2 3\nedge 0: 0 1\nedge 1: 2 3\n"
    with pytest.raises(BadEuler):
        parse_wall_system(text)


def test_garbage_rejected():
    with pytest.raises(MalformedInput):
        parse_wall_system("verts 1\n")
    with pytest.raises(MalformedInput):
        parse_wall_system("vertices 1\nvertex 0: a b c d\n")
    with pytest.raises(MalformedInput):
        parse_wall_system("vertices 1\nvertex 0: 0 1 2 3\nedge 0: 0 2\n")


def test_disconnected_rejected():
    # two disjoint copies of G(1,1)
    text = (
        "vertices 2\n"
        "vertex 0: 0 1 2 3\nvertex 1: 4 5 6 7\n"
        "edge 0: 0 2\nedge 1: 1 3\nedge 2: 4 6\nedge 3: 5 7\n"
    )
    with pytest.raises(MalformedInput):
        parse_wall_system(text)


def test_faces_g11(g11):
    assert len(g11.faces) == 1
    # four darts in total, so the single disc face has a 4-dart boundary orbit
    assert len(g11.faces[0]) == 4


def test_faces_g22(g22):
    assert len(g22.faces) == 4
    assert all(len(f) == 4 for f in g22.faces)


@pytest.mark.parametrize("m,n", [(2, 3), (3, 2), (3, 3), (1, 2)])
def test_faces_grid_count_oracle(m, n):
    # oracle: the grid decomposes the torus into m*n square cells
    assert len(grid_map(m, n).faces) == m * n


@pytest.mark.parametrize("m,n", [(1, 1), (2, 2), (3, 3)])
def test_grid_genus_one(m, n):
    assert grid_map(m, n).genus == 1


def test_curves_counts(g11, g22):
    assert len(g11.curves) == 2
    assert len(g22.curves) == 4


def test_one_curve_fixture_by_orbit_trace(one_curve):
    """Oracle: re-trace straight-ahead orbits directly from sigma and alpha."""
    wmap = one_curve
    sigma, alpha = wmap.sigma, wmap.alpha
    succ = {d: sigma[sigma[alpha[d]]] for d in range(wmap.dart_count)}
    seen = set()
    orbits = []
    for d in range(wmap.dart_count):
        if d in seen:
            continue
        orbit = []
        x = d
        while x not in seen:
            seen.add(x)
            orbit.append(x)
            x = succ[x]
        orbits.append(frozenset(orbit))
    # orbits pair up under reversal into unoriented curves
    curves = set()
    for orbit in orbits:
        partner = next(o for o in orbits if alpha[min(orbit)] in o)
        curves.add(frozenset(orbit | partner))
    assert len(curves) == 1
    assert len(wmap.curves) == 1
    assert wmap.curves[0].support == next(iter(curves))


def test_dual_graph_g11(g11):
    dual = g11.dual_graph
    assert dual.node_count == 1
    assert all(right == left == 0 for right, left in dual.ends)
    assert len(dual.ends) == 2


def test_dual_graph_g22(g22):
    dual = g22.dual_graph
    assert dual.node_count == 4
    assert len(dual.ends) == 8
    assert all(dual.degree(v) == 4 for v in range(4))
    assert dual.is_connected()


def test_permutation_invariants(g22, genus2, random_maps):
    for wmap in [g22, genus2] + random_maps:
        n = wmap.dart_count
        sigma, alpha = wmap.sigma, wmap.alpha
        for d in range(n):
            assert alpha[alpha[d]] == d
            x = d
            for _ in range(4):
                x = sigma[x]
            assert x == d
            assert sigma[sigma[d]] != d


def test_orbits_partition_darts(g22, genus2, one_curve, random_maps):
    for wmap in [g22, genus2, one_curve] + random_maps:
        darts = set(range(wmap.dart_count))
        face_darts = [d for f in wmap.faces for d in f.darts]
        assert sorted(face_darts) == sorted(darts)
        curve_darts = [d for c in wmap.curves for d in c.support]
        assert sorted(curve_darts) == sorted(darts)
        assert all(len(c.support) % 2 == 0 for c in wmap.curves)


def test_euler_relation(random_maps):
    for wmap in random_maps:
        assert wmap.edge_count == 2 * wmap.vertex_count
        chi = wmap.vertex_count - wmap.edge_count + len(wmap.faces)
        assert chi == 2 - 2 * wmap.genus
        assert chi <= 0 and chi % 2 == 0


def test_serialization_round_trip(g11, g22, g23, genus2, random_maps):
    for wmap in [g11, g22, g23, genus2] + random_maps:
        text = wmap.canonical_text
        again = parse_wall_system(text)
        assert again == wmap
        assert again.canonical_text == text


def test_comments_and_blank_lines_ignored():
    text = grid_text(2, 2)
    noisy = "# header\n\n" + text.replace("edge 0:", "edge 0:") + "# trailing\n"
    assert parse_wall_system(noisy) == parse_wall_system(text)


def test_random_generator_is_deterministic():
    a = random_wall_system(3, random.Random(5))
    b = random_wall_system(3, random.Random(5))
    assert a == b
