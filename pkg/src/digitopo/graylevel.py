"""Gray-level thinning: lowering destructible points.

Connectivity convention is (4, 8), as for binary 2D thinning. A point is
destructible when it is a (4, 8)-simple point of the cross-section at its own
level; lowering it to the highest neighbor value below it then leaves every
cross-section's topology unchanged.
"""

import numpy as np

from .core import C8, BinaryGridImage, Box, GridImage
from .simple2d import simple_lut_2d
from .thinning import breadth_first_thinning, no_constraint


class GrayGridImage2(GridImage):
    """2D image of levels 0..255; reads outside the domain give 0."""

    def __init__(self, domain, values=None):
        super().__init__(domain, values)
        if self.ndim != 2:
            raise ValueError("gray-level images are 2D")

    def _coerce(self, arr):
        arr = super()._coerce(arr)
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("gray levels must lie in 0..255")
        return arr.astype(np.uint8)

    @classmethod
    def from_numpy(cls, arr):
        arr = np.asarray(arr)
        return cls(Box.from_shape(arr.shape), arr)

    def to_numpy(self):
        return self.array.copy()


def cross_section(F, t):
    """Binary image of the sites at level ``t`` or above."""
    return BinaryGridImage(F.domain_box, F.array >= t)


def _config(p, F):
    v = F.get(p)
    vals = F.window_values(p, C8)
    mask = 0
    for bit, w in enumerate(vals):
        if w >= v:
            mask |= 1 << bit
    return v, vals, mask


class IsDestructible:
    def __init__(self):
        self._flags = simple_lut_2d(4).as_list()

    def __call__(self, p, F):
        v, vals, mask = _config(p, F)
        # a simple configuration always has a lower (background) neighbor
        return v > 0 and self._flags[mask] and min(vals) < v


def is_destructible(p, F):
    return IsDestructible()(p, F)


def lower(p, F):
    """Lower ``p`` to the highest 8-neighbor level strictly below its own.

    Neighbors outside the domain count as level 0.
    """
    v, vals, mask = _config(p, F)
    below = [w for w in vals if w < v]
    if not below or not simple_lut_2d(4)[mask]:
        raise ValueError(f"{p} is not destructible")
    F[p] = max(below)


def gray_thinning(F):
    return breadth_first_thinning(F, C8, IsDestructible(), lower, no_constraint())
