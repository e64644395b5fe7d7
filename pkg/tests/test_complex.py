import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from digitopo.complex import (
    CollapseError,
    ComplexImage,
    Face,
    SharedFaceAdjacency,
    build_cubical,
    build_cubical_from_binary,
    build_simplicial,
    build_simplicial_from_off,
    elementary_collapse,
    euler_characteristic,
    is_free_pair,
)
from digitopo.io import mesh_from_image, off_dumps, off_loads
from digitopo.synthetic import grid_mesh, octahedron_mesh, torus_mesh

from conftest import random_complex_image


def test_single_triangle_counts():
    cx = build_simplicial([(0, 1, 2)])
    assert cx.counts() == [3, 3, 1]
    assert cx.euler_characteristic() == 1
    assert cx.check_incidence()


def test_two_triangles_share_an_edge():
    cx = build_simplicial([(0, 1, 2), (1, 2, 3)])
    assert cx.counts() == [4, 5, 2]
    shared = cx.keys[1].index((1, 2))
    assert len(cx.coboundary(Face(1, shared))) == 2
    assert sorted(cx.boundary(Face(2, 0))) == cx.boundary(Face(2, 0))


@pytest.mark.parametrize(
    "shape, counts",
    [((1, 1), [4, 4, 1]), ((1, 2), [6, 7, 2]), ((2, 2), [9, 12, 4])],
)
def test_cubical_counts(shape, counts):
    cx = build_cubical_from_binary(np.ones(shape, dtype=bool))
    assert cx.counts() == counts
    assert cx.euler_characteristic() == 1
    assert cx.check_incidence()


def test_keys_sorted_and_boundaries_consistent():
    cx = build_simplicial_from_off(*torus_mesh(5, 4))
    for level in cx.keys:
        assert level == sorted(level)
    assert cx.check_incidence()
    assert cx.euler_characteristic() == 0


@pytest.mark.parametrize(
    "simplices",
    [[()], [(0, 0, 1)], [(0, 1, 2), (2, 1, 0)], [(0, 1, -1)]],
)
def test_bad_simplices_rejected(simplices):
    with pytest.raises(ValueError):
        build_simplicial(simplices)


def test_vertex_out_of_range_rejected():
    with pytest.raises(ValueError):
        build_simplicial([(0, 1, 5)], n_vertices=4)


@pytest.fixture
def squares():
    """Three squares in an L plus a dangling edge hanging off a corner of f1.

    f1 | f2
         f3      e1 = top edge of f1, e3 = edge shared by f2 and f3,
                 e2 = dangling edge, v its free end.
    """
    cells = [(1, 1), (1, 3), (3, 3), (-1, 0)]
    cx = build_cubical(cells)
    ids = {k: {key: i for i, key in enumerate(level)} for k, level in enumerate(cx.keys)}
    named = {
        "f1": Face(2, ids[2][(1, 1)]),
        "f2": Face(2, ids[2][(1, 3)]),
        "f3": Face(2, ids[2][(3, 3)]),
        "e1": Face(1, ids[1][(0, 1)]),
        "e2": Face(1, ids[1][(-1, 0)]),
        "e3": Face(1, ids[1][(2, 3)]),
        "v": Face(0, ids[0][(-2, 0)]),
    }
    return ComplexImage.full(cx), named


def test_free_pairs_on_squares(squares):
    img, n = squares
    assert is_free_pair(n["e1"], n["f1"], img)
    assert not is_free_pair(n["e3"], n["f2"], img)
    assert is_free_pair(n["v"], n["e2"], img)
    # not incident
    assert not is_free_pair(n["e1"], n["f2"], img)


def test_collapse_on_squares(squares):
    img, n = squares
    chi = img.euler_characteristic()
    elementary_collapse(n["e1"], n["f1"], img)
    elementary_collapse(n["v"], n["e2"], img)
    assert img.euler_characteristic() == chi
    assert not img[n["f1"]] and not img[n["e2"]]
    with pytest.raises(CollapseError):
        elementary_collapse(n["e3"], n["f2"], img)
    with pytest.raises(CollapseError):
        elementary_collapse(n["e1"], n["f1"], img)


def test_lone_edge_and_interior_edge():
    cx = build_simplicial([(0, 1, 2), (1, 2, 3)])
    img = ComplexImage.full(cx)
    inner = Face(1, cx.keys[1].index((1, 2)))
    outer = Face(1, cx.keys[1].index((0, 1)))
    assert not is_free_pair(inner, Face(2, 0), img)
    assert is_free_pair(outer, Face(2, 0), img)

    edge = ComplexImage.full(build_simplicial([(0, 1)]))
    assert is_free_pair(Face(0, 0), Face(1, 0), edge)
    assert is_free_pair(Face(0, 1), Face(1, 0), edge)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_collapses_preserve_euler(seed):
    rng = np.random.default_rng(seed)
    img = random_complex_image(rng)
    chi = img.euler_characteristic()
    cx = img.complex
    for _ in range(20):
        pairs = [
            (f, g)
            for k in (1, 2)
            for g in img.true_faces(k)
            for f in cx.boundary(g)
            if is_free_pair(f, g, img)
        ]
        if not pairs:
            break
        f, g = pairs[int(rng.integers(len(pairs)))]
        elementary_collapse(f, g, img)
        assert img.euler_characteristic() == chi


def test_euler_examples():
    assert euler_characteristic(ComplexImage.full(build_simplicial([(0,)]))) == 1
    circle = build_simplicial([(0, 1), (1, 2), (0, 2)])
    assert euler_characteristic(ComplexImage.full(circle)) == 0
    disk = build_simplicial_from_off(*grid_mesh(3, 3))
    assert ComplexImage.full(disk).euler_characteristic() == 1
    sphere = build_simplicial_from_off(*octahedron_mesh())
    assert sphere.euler_characteristic() == 2


def test_shared_face_adjacency_symmetric():
    cx = build_simplicial_from_off(*grid_mesh(3, 2))
    for via in (0, 1):
        nbh = SharedFaceAdjacency(cx, 2, via_dim=via)
        for t in cx.faces(2):
            assert t not in nbh.sites(t)
            for s in nbh.sites(t):
                assert t in nbh.sites(s)
    # edge neighbors are a subset of vertex neighbors
    by_edge = SharedFaceAdjacency(cx, 2)
    by_vertex = SharedFaceAdjacency(cx, 2, via_dim=0)
    for t in cx.faces(2):
        assert set(by_edge.sites(t)) <= set(by_vertex.sites(t))
        assert len(by_edge.sites(t)) <= 3
    with pytest.raises(ValueError):
        SharedFaceAdjacency(cx, 1, via_dim=1)


def test_with_primary_dim_shares_values():
    cx = build_simplicial([(0, 1, 2)])
    img = ComplexImage.full(cx)
    edges = img.with_primary_dim(1)
    assert edges.domain() == cx.faces(1)
    edges[Face(2, 0)] = False
    assert not img[Face(2, 0)]
    assert img.domain() == []
    with pytest.raises(ValueError):
        img.with_primary_dim(3)


def test_from_faces_is_closed_and_pure():
    cx = build_simplicial([(0, 1, 2), (1, 2, 3)])
    img = ComplexImage.from_faces(cx, [Face(2, 1)])
    assert img.count() == [3, 3, 1]
    assert img.is_pure()
    img[Face(0, cx.keys[0].index((0,)))] = True
    assert not img.is_pure()


def test_copy_and_flags():
    cx = build_simplicial([(0, 1, 2)])
    img = ComplexImage.full(cx)
    dup = img.copy()
    dup[Face(2, 0)] = False
    assert img[Face(2, 0)]
    assert img.flags().count() == [0, 0, 0]


def test_off_round_trip_through_complex():
    verts, tris = torus_mesh(6, 4)
    cx = build_simplicial_from_off(verts, tris)
    mesh = mesh_from_image(ComplexImage.full(cx))
    again = off_loads(off_dumps(mesh))
    assert np.array_equal(again.vertices, verts)
    cx2 = build_simplicial_from_off(again.vertices, again.triangles)
    assert cx2.keys == cx.keys
