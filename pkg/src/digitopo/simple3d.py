"""3D (26, 6) simple voxels from local connectivity numbers.

A configuration is a 26-bit mask over the C26 neighbors in lexicographic
offset order. Internally it is spread onto a 27-bit grid with index
``9*d0 + 3*d1 + d2`` (offsets shifted to 0..2), center at bit 13, so that
flood fills become a handful of shifts and masks.
"""

from .core import C6, C26

_FULL27 = (1 << 27) - 1
_CENTER = 1 << 13


def _grid_index(d0, d1, d2):
    return 9 * (d0 + 1) + 3 * (d1 + 1) + (d2 + 1)


def _plane_mask(axis, value):
    m = 0
    for i in range(27):
        coords = (i // 9, (i // 3) % 3, i % 3)
        if coords[axis] == value:
            m |= 1 << i
    return m


_X0, _X2 = _plane_mask(2, 0), _plane_mask(2, 2)
_Y0, _Y2 = _plane_mask(1, 0), _plane_mask(1, 2)
_NOT_X0, _NOT_X2 = _FULL27 & ~_X0, _FULL27 & ~_X2
_NOT_Y0, _NOT_Y2 = _FULL27 & ~_Y0, _FULL27 & ~_Y2

_N6 = sum(1 << _grid_index(*o) for o in C6.offsets)
_N18 = sum(1 << _grid_index(*o) for o in C26.offsets if sum(map(abs, o)) <= 2)


def _sx(v):
    return ((v << 1) & _NOT_X0) | ((v >> 1) & _NOT_X2)


def _sy(v):
    return ((v << 3) & _NOT_Y0) | ((v >> 3) & _NOT_Y2)


def _sz(v):
    return ((v << 9) & _FULL27) | (v >> 9)


def _dilate6(v):
    return v | _sx(v) | _sy(v) | _sz(v)


def _dilate26(v):
    v |= _sx(v)
    v |= _sy(v)
    return v | _sz(v)


def _grow(seed, bits, dilate):
    comp = seed
    while True:
        grown = dilate(comp) & bits
        if grown == comp:
            return comp
        comp = grown


def _count(bits, dilate, touch):
    n = 0
    while bits:
        comp = _grow(bits & -bits, bits, dilate)
        if comp & touch:
            n += 1
        bits &= ~comp
    return n


def _to_grid(mask):
    return (mask & 0x1FFF) | ((mask >> 13) << 14)


def connectivity_numbers_3d(mask):
    """Return ``(t26, t6)`` for a 26-bit configuration.

    ``t26`` counts 26-components of the foreground neighbors; ``t6`` counts
    6-components of the background within the 18-neighborhood that contain a
    6-neighbor of the center.
    """
    if not 0 <= mask < 1 << 26:
        raise ValueError(f"mask out of range: {mask}")
    fg = _to_grid(mask)
    bg = _N18 & ~fg
    return _count(fg, _dilate26, _FULL27), _count(bg, _dilate6, _N6)


def is_simple_config_3d(mask):
    """Short-circuit form of ``connectivity_numbers_3d(mask) == (1, 1)``."""
    fg = _to_grid(mask)
    if not fg:
        return False
    if _grow(fg & -fg, fg, _dilate26) != fg:
        return False
    bg = _N18 & ~fg
    near = bg & _N6
    if not near:
        return False
    comp = _grow(near & -near, bg, _dilate6)
    return near & ~comp == 0


class SimpleLut3D:
    """Memoized verdicts for all 2**26 configurations.

    Two 8 MiB bit planes: one says whether the verdict is known, the other
    holds it. Entries are filled on first use, so the table is only as
    complete as the configurations seen so far.
    """

    SIZE = 1 << 26

    def __init__(self):
        self.known = bytearray(self.SIZE >> 3)
        self.value = bytearray(self.SIZE >> 3)

    def __getitem__(self, mask):
        byte, bit = mask >> 3, 1 << (mask & 7)
        if self.known[byte] & bit:
            return bool(self.value[byte] & bit)
        simple = is_simple_config_3d(mask)
        self.known[byte] |= bit
        if simple:
            self.value[byte] |= bit
        return simple

    def filled(self):
        return sum(bin(b).count("1") for b in self.known)

    def nbytes(self):
        return len(self.known) + len(self.value)


class IsSimplePoint3D:
    """(26, 6) simple-voxel predicate; ``use_lut`` switches on the memo table."""

    def __init__(self, fg_nbh=C26, bg_nbh=C6, use_lut=False, lut=None):
        if (len(fg_nbh), len(bg_nbh)) != (26, 6):
            raise ValueError("only the (26, 6) pair is supported in 3D")
        self.use_lut = use_lut or lut is not None
        self.lut = (lut or SimpleLut3D()) if self.use_lut else None

    def __call__(self, p, X):
        if not X.get(p):
            return False
        mask = X.window_mask(p, C26)
        if self.lut is not None:
            return self.lut[mask]
        return is_simple_config_3d(mask)


def is_simple_point3d(p, X, use_lut=False):
    return IsSimplePoint3D(use_lut=use_lut)(p, X)


def thin3d(X, use_lut=False, lut=None):
    """(26, 6) breadth-first thinning without constraint."""
    from .simple2d import detach_point
    from .thinning import breadth_first_thinning

    pred = IsSimplePoint3D(use_lut=use_lut, lut=lut)
    return breadth_first_thinning(X, C26, pred, detach_point)
