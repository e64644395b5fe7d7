"""Cell complexes, images over their faces, free pairs and collapses.

Faces are addressed as ``Face(dim, id)`` with dense ids per dimension.
Within a dimension ids follow the lexicographic order of the face keys
(sorted vertex tuples for simplices, doubled-grid coordinates for cubes), and
every boundary/coboundary list is in ascending id order, which fixes all
tie-breaks downstream.
"""

from itertools import combinations
from typing import NamedTuple

import numpy as np
from scipy import ndimage


class Face(NamedTuple):
    dim: int
    id: int

    def __repr__(self):
        return f"Face({self.dim}, {self.id})"


class CollapseError(ValueError):
    """Raised when a collapse or detach is applied to a pair that is not free."""


class CellComplex:
    """Dimension-graded faces with boundary and coboundary incidence.

    ``keys[k][i]`` identifies face ``(k, i)``; ``boundary_ids[k][i]`` lists
    the ids of its (k-1)-faces. Coboundaries are derived.
    """

    def __init__(self, kind, keys, boundary_ids, vertex_coords=None):
        self.kind = kind
        self.keys = [list(k) for k in keys]
        self.dim = len(self.keys) - 1
        self._bnd = [()] + [list(map(tuple, b)) for b in boundary_ids[1:]]
        self._cob = []
        for k in range(self.dim):
            up = [[] for _ in range(len(self.keys[k]))]
            for j, faces in enumerate(self._bnd[k + 1]):
                for i in faces:
                    up[i].append(j)
            self._cob.append([tuple(u) for u in up])
        self._cob.append([()] * len(self.keys[self.dim]))
        self._bnd[0] = [()] * len(self.keys[0])
        self.vertex_coords = vertex_coords
        self.oriented_triangles = None

    def n_faces(self, k):
        if 0 <= k <= self.dim:
            return len(self.keys[k])
        return 0

    def counts(self):
        return [len(k) for k in self.keys]

    def faces(self, k):
        return [Face(k, i) for i in range(self.n_faces(k))]

    def boundary_ids(self, k, i):
        return self._bnd[k][i]

    def coboundary_ids(self, k, i):
        return self._cob[k][i]

    def boundary(self, f):
        k = f[0]
        return [Face(k - 1, i) for i in self._bnd[k][f[1]]]

    def coboundary(self, f):
        k = f[0]
        return [Face(k + 1, j) for j in self._cob[k][f[1]]]

    def closure(self, f):
        """All faces below ``f``, ``f`` included, sorted by (dim, id)."""
        out = {Face(*f)}
        layer = {f[1]}
        for k in range(f[0], 0, -1):
            layer = {i for j in layer for i in self._bnd[k][j]}
            out.update(Face(k - 1, i) for i in layer)
        return sorted(out)

    def euler_characteristic(self):
        return sum((-1) ** k * n for k, n in enumerate(self.counts()))

    def check_incidence(self):
        """Assert boundary/coboundary symmetry and face arity everywhere."""
        for k in range(1, self.dim + 1):
            for j, faces in enumerate(self._bnd[k]):
                if self.kind == "simplicial":
                    assert len(faces) == k + 1, (k, j, faces)
                elif self.kind == "cubical":
                    assert len(faces) == 2 * k, (k, j, faces)
                for i in faces:
                    assert j in self._cob[k - 1][i], (k, j, i)
        for k in range(self.dim):
            for i, ups in enumerate(self._cob[k]):
                for j in ups:
                    assert i in self._bnd[k + 1][j], (k, i, j)
        return True

    def __repr__(self):
        return f"CellComplex({self.kind}, counts={self.counts()})"


def build_simplicial(simplices, n_vertices=None, vertex_coords=None, dim=None):
    """Simplicial complex spanned by ``simplices`` (vertex-index tuples) and their faces.

    ``dim`` forces the top dimension (empty levels are allowed).
    """
    simplices = [tuple(int(v) for v in s) for s in simplices]
    if n_vertices is None:
        n_vertices = len(vertex_coords) if vertex_coords is not None else (
            1 + max((max(s) for s in simplices if s), default=-1)
        )
    seen = set()
    for s in simplices:
        if not s:
            raise ValueError("empty simplex")
        if len(set(s)) != len(s):
            raise ValueError(f"degenerate simplex {s}")
        if min(s) < 0 or max(s) >= n_vertices:
            raise ValueError(f"vertex index out of range in {s} (n_vertices={n_vertices})")
        key = tuple(sorted(s))
        if key in seen:
            raise ValueError(f"duplicate simplex {s}")
        seen.add(key)
    top = max((len(s) - 1 for s in simplices), default=0)
    if dim is not None:
        if dim < top:
            raise ValueError(f"simplices of dimension {top} exceed dim={dim}")
        top = dim
    levels = [set() for _ in range(top + 1)]
    levels[0] = {(v,) for v in range(n_vertices)}
    for key in seen:
        for k in range(1, len(key)):
            levels[k].update(combinations(key, k + 1))
    keys = [sorted(level) for level in levels]
    index = [{key: i for i, key in enumerate(level)} for level in keys]
    boundary = [None]
    for k in range(1, top + 1):
        lower = index[k - 1]
        boundary.append(
            [sorted(lower[key[:m] + key[m + 1 :]] for m in range(k + 1)) for key in keys[k]]
        )
    cx = CellComplex("simplicial", keys, boundary, vertex_coords)
    if top >= 2:
        tri_index = index[2]
        oriented = [None] * len(keys[2])
        for s in simplices:
            if len(s) == 3:
                oriented[tri_index[tuple(sorted(s))]] = s
        cx.oriented_triangles = [o if o is not None else keys[2][i] for i, o in enumerate(oriented)]
    return cx


def build_simplicial_from_off(vertices, triangles):
    """Simplicial 2-complex of a triangle mesh (all vertices kept, even unused)."""
    vertices = np.asarray(vertices, dtype=float).reshape(-1, 3)
    triangles = np.asarray(triangles, dtype=np.int64).reshape(-1, 3)
    return build_simplicial(triangles.tolist(), len(vertices), vertices, dim=2)


def khalimsky_closure(arr):
    """Doubled-grid mask of every cell of the unit cubes on the true sites."""
    arr = np.asarray(arr, dtype=bool)
    k = np.zeros(tuple(2 * s + 1 for s in arr.shape), dtype=bool)
    k[(slice(1, None, 2),) * arr.ndim] = arr
    return ndimage.binary_dilation(k, structure=np.ones((3,) * arr.ndim, dtype=bool))


def build_cubical(cells):
    """Cubical complex spanned by doubled-grid cells and all their faces.

    A cell key has one odd coordinate per axis it extends along; site ``p``
    of a grid image is the top-dimensional cell ``2p + 1``.
    """
    cells = {tuple(int(v) for v in c) for c in cells}
    if not cells:
        raise ValueError("no cells")
    ndim = len(next(iter(cells)))
    closed = set()
    stack = list(cells)
    while stack:
        c = stack.pop()
        if c in closed:
            continue
        closed.add(c)
        for axis, v in enumerate(c):
            if v % 2:
                for d in (-1, 1):
                    stack.append(c[:axis] + (v + d,) + c[axis + 1 :])
    return _cubical_from_closed(closed, ndim)


def _cubical_from_closed(closed, ndim):
    keys = [[] for _ in range(ndim + 1)]
    for c in sorted(closed):
        keys[sum(v % 2 for v in c)].append(c)
    index = [{key: i for i, key in enumerate(level)} for level in keys]
    boundary = [None]
    for k in range(1, ndim + 1):
        rows = []
        for key in keys[k]:
            ids = []
            for axis, c in enumerate(key):
                if c % 2:
                    for d in (-1, 1):
                        ids.append(index[k - 1][key[:axis] + (c + d,) + key[axis + 1 :]])
            rows.append(sorted(ids))
        boundary.append(rows)
    return CellComplex("cubical", keys, boundary)


def build_cubical_from_binary(X):
    """Cubical complex spanned by one closed unit cube per foreground site."""
    from .core import GridImage

    if isinstance(X, GridImage):
        arr, lo = X.array.astype(bool), X.domain_box.lo
    else:
        arr = np.asarray(X, dtype=bool)
        lo = (0,) * arr.ndim
    cells = np.argwhere(khalimsky_closure(arr)) + 2 * np.asarray(lo, dtype=np.int64)
    return _cubical_from_closed(map(tuple, cells.tolist()), arr.ndim)


class ComplexImage:
    """Boolean values on every face of a complex.

    Only faces of ``primary_dim`` form the iteration domain, but values at
    all dimensions stay readable and writable.
    """

    def __init__(self, complex, primary_dim=None, values=None):
        self.complex = complex
        self.primary_dim = complex.dim if primary_dim is None else primary_dim
        if not 0 <= self.primary_dim <= complex.dim:
            raise ValueError(f"primary dimension {self.primary_dim} outside 0..{complex.dim}")
        if values is None:
            values = [bytearray(complex.n_faces(k)) for k in range(complex.dim + 1)]
        self.values = values

    @classmethod
    def full(cls, complex, primary_dim=None):
        values = [bytearray(b"\x01" * complex.n_faces(k)) for k in range(complex.dim + 1)]
        return cls(complex, primary_dim, values)

    @classmethod
    def from_faces(cls, complex, faces, primary_dim=None):
        """Image true on the closure of ``faces``."""
        img = cls(complex, primary_dim)
        for f in faces:
            for g in complex.closure(f):
                img.values[g[0]][g[1]] = 1
        return img

    def get(self, f):
        return self.values[f[0]][f[1]] != 0

    __getitem__ = get

    def __setitem__(self, f, v):
        self.values[f[0]][f[1]] = 1 if v else 0

    def domain(self):
        n = self.primary_dim
        vals = self.values[n]
        return [Face(n, i) for i in range(len(vals)) if vals[i]]

    def true_faces(self, k):
        vals = self.values[k]
        return [Face(k, i) for i in range(len(vals)) if vals[i]]

    def count(self, k=None):
        if k is None:
            return [v.count(1) for v in self.values]
        return self.values[k].count(1)

    def copy(self):
        return ComplexImage(self.complex, self.primary_dim, [bytearray(v) for v in self.values])

    def flags(self):
        return ComplexImage(self.complex, self.primary_dim)

    def with_primary_dim(self, n):
        """Same values (shared, not copied), different iteration dimension."""
        return ComplexImage(self.complex, n, self.values)

    def true_cofaces(self, f):
        k, i = f
        if k >= self.complex.dim:
            return []
        vals = self.values[k + 1]
        return [Face(k + 1, j) for j in self.complex._cob[k][i] if vals[j]]

    def euler_characteristic(self):
        return euler_characteristic(self)

    def is_pure(self):
        """Every true face lies in the closure of a true primary-dim face."""
        cx = self.complex
        covered = [bytearray(len(v)) for v in self.values]
        n = self.primary_dim
        for f in self.domain():
            for g in cx.closure(f):
                covered[g[0]][g[1]] = 1
        for k in range(n + 1):
            vals = self.values[k]
            for i in range(len(vals)):
                if vals[i] and not covered[k][i]:
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, ComplexImage)
            and self.complex is other.complex
            and self.values == other.values
        )

    def __repr__(self):
        return f"ComplexImage(dim={self.primary_dim}, true={self.count()})"


class SharedFaceAdjacency:
    """Neighborhood over ``dim``-faces: faces sharing a common ``via_dim``-face.

    ``via_dim`` defaults to ``dim - 1`` (triangles through an edge, edges
    through a vertex). The relation is purely structural; callers intersect
    with the object being thinned.
    """

    def __init__(self, complex, dim, via_dim=None):
        if via_dim is None:
            via_dim = dim - 1
        if not 0 <= via_dim < dim <= complex.dim:
            raise ValueError(f"bad adjacency dims: {via_dim} -> {dim}")
        self.complex = complex
        self.dim = dim
        self.via_dim = via_dim
        self._cache = {}

    def sites(self, t):
        i = t[1]
        out = self._cache.get(i)
        if out is None:
            cx = self.complex
            lower = {i}
            for k in range(self.dim, self.via_dim, -1):
                lower = {b for j in lower for b in cx._bnd[k][j]}
            upper = lower
            for k in range(self.via_dim, self.dim):
                upper = {c for j in upper for c in cx._cob[k][j]}
            upper.discard(i)
            out = self._cache[i] = [Face(self.dim, j) for j in sorted(upper)]
        return out


def is_free_pair(f, g, img):
    if g[0] != f[0] + 1 or not img.get(f) or not img.get(g):
        return False
    k, i = f
    if i not in img.complex._bnd[g[0]][g[1]]:
        return False
    vals = img.values[k + 1]
    for j in img.complex._cob[k][i]:
        if vals[j] and j != g[1]:
            return False
    return True


def elementary_collapse(f, g, img):
    """Remove the free pair ``(f, g)`` from ``img`` in place."""
    if not is_free_pair(f, g, img):
        raise CollapseError(f"({f}, {g}) is not a free pair")
    img[f] = False
    img[g] = False


def euler_characteristic(img):
    return sum((-1) ** k * v.count(1) for k, v in enumerate(img.values))
