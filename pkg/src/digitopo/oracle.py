"""Brute-force global topology checks used to validate the local predicates.

Nothing here is fast; everything is meant for desk-scale images (a dozen
pixels a side, or 6x6x6 volumes).
"""

import numpy as np
from scipy import ndimage

from .complex import khalimsky_closure
from .core import GridImage

_RANK = {(2, 4): 1, (2, 8): 2, (3, 6): 1, (3, 18): 2, (3, 26): 3}
_DUAL = {4: 8, 8: 4, 26: 6, 6: 26}


def _as_array(X):
    if isinstance(X, GridImage):
        return X.array.astype(bool)
    return np.asarray(X, dtype=bool)


def structure(ndim, conn):
    try:
        rank = _RANK[(ndim, conn)]
    except KeyError:
        raise ValueError(f"{conn}-adjacency is not defined in {ndim}D") from None
    return ndimage.generate_binary_structure(ndim, rank)


def label_components(X, conn):
    """Label the ``conn``-connected components of the true sites.

    Returns ``(labels, count)``; labels are 1..count, 0 on background.
    """
    arr = _as_array(X)
    labels, count = ndimage.label(arr, structure=structure(arr.ndim, conn))
    return labels, int(count)


def count_components(X, conn):
    return label_components(X, conn)[1]


def count_background_components(X, conn):
    """Components of the complement, with the outside counted as background."""
    arr = np.pad(_as_array(X), 1, constant_values=False)
    return count_components(~arr, conn)


def cubical_euler_characteristic(X):
    """Euler characteristic of the union of closed unit cubes on true sites.

    Works on the doubled (Khalimsky) grid: a cell is present iff one of the
    cubes it bounds is, and contributes ``(-1)^dim`` with ``dim`` the number
    of odd coordinates.
    """
    arr = _as_array(X)
    if not arr.any():
        return 0
    k = khalimsky_closure(arr)
    sign = np.ones(k.shape, dtype=np.int64)
    for axis in range(arr.ndim):
        idx = [np.newaxis] * arr.ndim
        idx[axis] = slice(None)
        odd = (np.arange(k.shape[axis]) % 2 == 1)[tuple(idx)]
        sign = np.where(odd, -sign, sign)
    return int(sign[k].sum())


def topology_2d(X, fg_conn=4):
    """(foreground components, background components) under a dual pair."""
    return count_components(X, fg_conn), count_background_components(X, _DUAL[fg_conn])


def topology_3d(X):
    """(26-components, background 6-components, cubical Euler characteristic)."""
    return (
        count_components(X, 26),
        count_background_components(X, 6),
        cubical_euler_characteristic(X),
    )


def _without(X, p):
    arr = _as_array(X).copy()
    if isinstance(X, GridImage):
        p = tuple(v - lo for v, lo in zip(p, X.domain_box.lo))
    if not arr[p]:
        raise ValueError(f"site {p} is not in the foreground")
    arr[p] = False
    return arr


def oracle_is_simple_2d(p, X, fg_conn=4):
    """Deleting ``p`` keeps both component counts unchanged."""
    after = _without(X, p)
    return topology_2d(X, fg_conn) == topology_2d(after, fg_conn)


def oracle_is_simple_3d(p, X):
    after = _without(X, p)
    return topology_3d(X) == topology_3d(after)


def oracle_attachment_simple(p, X):
    """Simplicity from the attachment set of the site's closed unit cell.

    With closed cells the foreground adjacency is 8 in 2D and 26 in 3D
    (background 4 and 6). ``p`` is simple iff its closed cell meets the
    cells of the other foreground sites in a contractible set. That set
    lies on the boundary sphere of the cell, where contractible means
    non-empty, connected and of Euler characteristic 1. Unlike the
    component/Euler triple, this also catches 3D deletions that trade one
    tunnel for another.
    """
    arr = np.pad(_as_array(X), 1)
    if isinstance(X, GridImage):
        p = tuple(v - lo for v, lo in zip(p, X.domain_box.lo))
    c = tuple(v + 1 for v in p)
    if not arr[c]:
        raise ValueError(f"site {p} is not in the foreground")
    ndim = arr.ndim
    patch = arr[tuple(slice(v - 1, v + 2) for v in c)].copy()
    patch[(1,) * ndim] = False
    k = khalimsky_closure(patch)
    shell = np.zeros(k.shape, dtype=bool)
    shell[(slice(2, -2),) * ndim] = True
    shell[(3,) * ndim] = False
    attach = k & shell
    if not attach.any():
        return False
    if count_components(attach, 3**ndim - 1) != 1:
        return False
    dims = sum(i % 2 for i in np.indices(attach.shape))
    return int(np.where(dims % 2, -1, 1)[attach].sum()) == 1


def embed_config_2d(mask, frame=5):
    """The 3x3 patch of an 8-bit configuration centered in a background frame."""
    from .core import C8

    arr = np.zeros((frame, frame), dtype=bool)
    c = frame // 2
    arr[c, c] = True
    for bit, (d0, d1) in enumerate(C8.offsets):
        if mask >> bit & 1:
            arr[c + d0, c + d1] = True
    return arr, (c, c)


def embed_config_3d(mask, frame=5):
    from .core import C26

    arr = np.zeros((frame,) * 3, dtype=bool)
    c = frame // 2
    arr[c, c, c] = True
    for bit, (d0, d1, d2) in enumerate(C26.offsets):
        if mask >> bit & 1:
            arr[c + d0, c + d1, c + d2] = True
    return arr, (c, c, c)
