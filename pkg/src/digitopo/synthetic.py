"""Deterministic synthetic inputs: shapes, volumes and triangulated patches."""

import numpy as np


def blob_image(shape=(254, 321), seed=0):
    """Filled ellipses and bars with a few holes; a stand-in for a scanned drawing."""
    rng = np.random.default_rng(seed)
    h, w = shape
    yy, xx = np.mgrid[0:h, 0:w]
    img = np.zeros(shape, dtype=bool)
    for _ in range(8):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        ry, rx = rng.uniform(h / 12, h / 4), rng.uniform(w / 12, w / 4)
        img |= ((yy - cy) / ry) ** 2 + ((xx - cx) / rx) ** 2 <= 1
    for _ in range(4):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        r = rng.uniform(3, min(h, w) / 16)
        img &= (yy - cy) ** 2 + (xx - cx) ** 2 > r * r
    for _ in range(3):
        y0 = int(rng.integers(0, h - 6))
        img[y0 : y0 + 5, int(w * 0.1) : int(w * 0.9)] = True
    return img


def ball_volume(n=41, hollow=True):
    """A ball with a cavity and a drilled tunnel, ``n`` voxels a side."""
    c = (n - 1) / 2
    zz, yy, xx = np.mgrid[0:n, 0:n, 0:n]
    r2 = (zz - c) ** 2 + (yy - c) ** 2 + (xx - c) ** 2
    vol = r2 <= (0.45 * n) ** 2
    if hollow:
        vol &= r2 > (0.12 * n) ** 2
        tunnel = ((yy - c) ** 2 + (xx - c - 0.28 * n) ** 2) <= (0.07 * n) ** 2
        vol &= ~tunnel
    return vol


def grid_mesh(nx, ny):
    """Triangulated ``nx`` x ``ny`` rectangle: 2*nx*ny triangles, a disk."""
    ys, xs = np.mgrid[0 : ny + 1, 0 : nx + 1]
    vertices = np.stack([xs.ravel(), ys.ravel(), np.zeros(xs.size)], axis=1).astype(float)
    vid = np.arange((nx + 1) * (ny + 1)).reshape(ny + 1, nx + 1)
    a = vid[:-1, :-1].ravel()
    b = vid[:-1, 1:].ravel()
    c = vid[1:, :-1].ravel()
    d = vid[1:, 1:].ravel()
    tris = np.concatenate([np.stack([a, b, d], 1), np.stack([a, d, c], 1)])
    return vertices, tris


def torus_mesh(nu, nv, R=3.0, r=1.0):
    """Closed triangulated torus (chi = 0)."""
    u = np.arange(nu) * 2 * np.pi / nu
    v = np.arange(nv) * 2 * np.pi / nv
    uu, vv = np.meshgrid(u, v, indexing="ij")
    vertices = np.stack(
        [(R + r * np.cos(vv)) * np.cos(uu), (R + r * np.cos(vv)) * np.sin(uu), r * np.sin(vv)], -1
    ).reshape(-1, 3)
    idx = lambda i, j: (i % nu) * nv + (j % nv)
    tris = []
    for i in range(nu):
        for j in range(nv):
            tris.append((idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)))
            tris.append((idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)))
    return vertices, np.array(tris)


def octahedron_mesh():
    """Closed triangulated sphere (chi = 2)."""
    vertices = np.array(
        [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]], dtype=float
    )
    tris = np.array(
        [[0, 2, 4], [2, 1, 4], [1, 3, 4], [3, 0, 4], [2, 0, 5], [1, 2, 5], [3, 1, 5], [0, 3, 5]]
    )
    return vertices, tris


def holed_patch(nx, ny, holes=6, seed=0):
    """Grid patch with square holes punched out; drops unused vertices."""
    rng = np.random.default_rng(seed)
    vertices, tris = grid_mesh(nx, ny)
    keep = np.ones((ny, nx), dtype=bool)
    for _ in range(holes):
        s = int(rng.integers(2, max(3, min(nx, ny) // 6)))
        y0 = int(rng.integers(2, ny - s - 2))
        x0 = int(rng.integers(2, nx - s - 2))
        keep[y0 : y0 + s, x0 : x0 + s] = False
    keep_tris = np.concatenate([keep.ravel(), keep.ravel()])
    tris = tris[keep_tris]
    used = np.unique(tris)
    remap = np.full(len(vertices), -1)
    remap[used] = np.arange(len(used))
    return vertices[used], remap[tris]
