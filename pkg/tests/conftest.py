import numpy as np
import pytest

from digitopo.core import BinaryGridImage


def random_binary(rng, max_side=12, ndim=2, density=None):
    shape = tuple(int(s) for s in rng.integers(1, max_side + 1, ndim))
    p = rng.uniform(0.2, 0.9) if density is None else density
    return rng.random(shape) < p


def image(arr):
    return BinaryGridImage.from_numpy(np.asarray(arr, dtype=bool))


def parse(rows):
    """Image from strings of '#' (foreground) and '.' (background)."""
    return image([[c == "#" for c in row] for row in rows])


@pytest.fixture
def rng():
    return np.random.default_rng(20260418)


def random_complex_image(rng, max_triangles=50):
    """Random 2D simplicial image: a subset of a small triangulated grid."""
    from digitopo.complex import ComplexImage, build_simplicial_from_off
    from digitopo.synthetic import grid_mesh

    nx, ny = (int(v) for v in rng.integers(1, 6, 2))
    verts, tris = grid_mesh(nx, ny)
    cx = build_simplicial_from_off(verts, tris)
    k = int(rng.integers(1, min(max_triangles, cx.n_faces(2)) + 1))
    chosen = rng.choice(cx.n_faces(2), size=k, replace=False)
    return ComplexImage.from_faces(cx, [(2, int(i)) for i in chosen])
