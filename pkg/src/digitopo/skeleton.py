"""Collapse-based simple cells and the mesh skeleton drivers.

Two notions of "simple site" on a complex-based binary image:

* a cell whose *private closure* can be emptied by elementary collapses
  (thick skeletons);
* a cell belonging to a free pair with one of its boundary faces
  (ultimate n-collapses, thin skeletons).
"""

from .complex import CollapseError, Face, SharedFaceAdjacency, is_free_pair
from .thinning import breadth_first_thinning


def private_closure(t, img):
    """``t`` plus the true faces below it whose true cofaces all stay private.

    Returned sorted by (dim, id).
    """
    cx = img.complex
    values = img.values
    private = {Face(*t)}
    layer = {t[1]}
    for k in range(t[0], 0, -1):
        layer = {i for j in layer for i in cx._bnd[k][j] if values[k - 1][i]}
        up = values[k]
        for i in sorted(layer):
            if all(not up[j] or Face(k, j) in private for j in cx._cob[k - 1][i]):
                private.add(Face(k - 1, i))
    return sorted(private)


def _collapse_sequence(t, img):
    """Greedy collapse of the private closure of ``t``.

    Returns ``(pairs, leftover)``; the cell is simple iff nothing is left.
    Pairs are chosen highest dimension first, then by ascending ids.
    """
    cx = img.complex
    alive = set(private_closure(t, img))
    pairs = []
    progress = True
    while alive and progress:
        progress = False
        for g in sorted(alive, key=lambda f: (-f[0], f[1])):
            if g[0] == 0:
                continue
            for i in cx._bnd[g[0]][g[1]]:
                f = Face(g[0] - 1, i)
                if f not in alive:
                    continue
                # f is private: its live cofaces are exactly those still alive
                cofaces = [j for j in cx._cob[f[0]][i] if Face(g[0], j) in alive]
                if cofaces == [g[1]]:
                    pairs.append((f, g))
                    alive.discard(f)
                    alive.discard(g)
                    progress = True
                    break
            if progress:
                break
    return pairs, sorted(alive)


def is_simple_cell(t, img):
    if t[0] != img.primary_dim or not img.get(t):
        return False
    return not _collapse_sequence(t, img)[1]


def detach_cell(t, img):
    """Remove ``t`` and its private closure through the collapse sequence found."""
    if not img.get(t):
        raise CollapseError(f"{t} is not in the object")
    pairs, leftover = _collapse_sequence(t, img)
    if leftover:
        raise CollapseError(f"{t} cannot be detached by collapse; {len(leftover)} faces left")
    for f, g in pairs:
        img[f] = False
        img[g] = False


def free_boundary_face(t, img):
    """Lowest-id boundary face forming a free pair with ``t``, or None."""
    k = t[0]
    if k == 0 or not img.get(t):
        return None
    for i in img.complex._bnd[k][t[1]]:
        f = Face(k - 1, i)
        if is_free_pair(f, t, img):
            return f
    return None


def is_cell_in_simple_pair(t, img):
    return t[0] == img.primary_dim and free_boundary_face(t, img) is not None


def detach_cell_in_simple_pair(t, img):
    f = free_boundary_face(t, img)
    if f is None:
        raise CollapseError(f"{t} belongs to no free pair")
    img[f] = False
    img[t] = False


def thick_skeleton(img, constraint=None):
    """Thin primary-dimension cells by full collapse of their private closures.

    The queue neighborhood joins cells sharing any vertex: removing a cell
    can make a vertex private to a cell that only touches it there.
    """
    nbh = SharedFaceAdjacency(img.complex, img.primary_dim, via_dim=0) if img.primary_dim > 0 else _NoNeighbors()
    return breadth_first_thinning(img, nbh, is_simple_cell, detach_cell, constraint)


def ultimate_n_collapse(img, constraint=None):
    """Remove free ((n-1), n) pairs, n = ``img.primary_dim``, until none remains."""
    n = img.primary_dim
    if n < 1:
        raise ValueError("an n-collapse needs n >= 1")
    nbh = SharedFaceAdjacency(img.complex, n)
    return breadth_first_thinning(img, nbh, is_cell_in_simple_pair, detach_cell_in_simple_pair, constraint)


def ultimate_collapse(img, down_to=1, constraint=None):
    """Successive ultimate n-collapses from ``img.primary_dim`` down to ``down_to``."""
    out = img
    for n in range(img.primary_dim, down_to - 1, -1):
        out = ultimate_n_collapse(out.with_primary_dim(n), constraint)
    return out.with_primary_dim(down_to)


class _NoNeighbors:
    def sites(self, p):
        return []
