"""2D simple points: connectivity numbers, the 256-entry table, end points.

A configuration is an 8-bit mask over the C8 neighbors of a pixel, taken in
lexicographic offset order::

    bit 0 (-1,-1)   bit 1 (-1, 0)   bit 2 (-1, 1)
    bit 3 ( 0,-1)       center      bit 4 ( 0, 1)
    bit 5 ( 1,-1)   bit 6 ( 1, 0)   bit 7 ( 1, 1)

Components inside the 3x3 patch are counted with bit-parallel flood fills
on a 9-bit grid (index ``3*row + col``, center at bit 4).
"""

from dataclasses import dataclass

from .core import C4, C8

_FULL9 = 0x1FF
_CENTER9 = 1 << 4
_COL0 = 0b001001001
_COL2 = 0b100100100
_NEAR4 = (1 << 1) | (1 << 3) | (1 << 5) | (1 << 7)


def _to_grid(mask):
    return (mask & 0x0F) | ((mask & 0xF0) << 1)


def _shift_cols(v):
    return ((v << 1) & ~_COL0) | ((v >> 1) & ~_COL2)


def _shift_rows(v):
    return ((v << 3) | (v >> 3)) & _FULL9


def _dilate4(v):
    return (v | _shift_cols(v) | _shift_rows(v)) & _FULL9


def _dilate8(v):
    v = (v | _shift_cols(v)) & _FULL9
    return v | _shift_rows(v)


_DILATE = {4: _dilate4, 8: _dilate8}


def _count(bits, dilate, touch):
    n = 0
    while bits:
        comp = bits & -bits
        while True:
            grown = dilate(comp) & bits
            if grown == comp:
                break
            comp = grown
        if comp & touch:
            n += 1
        bits &= ~comp
    return n


def _check_conn(fg_conn):
    if fg_conn not in (4, 8):
        raise ValueError(f"foreground connectivity must be 4 or 8, got {fg_conn}")
    return 12 - fg_conn


def connectivity_numbers_2d(mask, fg_conn=4):
    """Return ``(t_fg, t_bg)`` for an 8-neighbor configuration.

    ``t_fg`` counts ``fg_conn``-components of the foreground neighbors that
    are ``fg_conn``-adjacent to the center; ``t_bg`` does the same for the
    background neighbors under the dual connectivity.
    """
    bg_conn = _check_conn(fg_conn)
    if not 0 <= mask <= 0xFF:
        raise ValueError(f"mask out of range: {mask}")
    fg = _to_grid(mask)
    bg = _FULL9 & ~fg & ~_CENTER9
    touch = {4: _NEAR4, 8: _FULL9}
    t_fg = _count(fg, _DILATE[fg_conn], touch[fg_conn])
    t_bg = _count(bg, _DILATE[bg_conn], touch[bg_conn])
    return t_fg, t_bg


@dataclass(frozen=True)
class SimpleLut2D:
    """Simplicity verdict for all 256 configurations, packed in 32 bytes.

    Bit ``k`` of byte ``j`` holds the verdict for mask ``8*j + k``.
    """

    bits: bytes
    fg_conn: int = 4

    @property
    def bg_conn(self):
        return 12 - self.fg_conn

    def __getitem__(self, mask):
        return (self.bits[mask >> 3] >> (mask & 7)) & 1 == 1

    def __len__(self):
        return 256

    def count(self):
        return sum(bin(b).count("1") for b in self.bits)

    def to_bytes(self):
        return bytes(self.bits)

    def as_list(self):
        return [self[m] for m in range(256)]


def build_simple_lut_2d(fg_conn=4):
    _check_conn(fg_conn)
    packed = bytearray(32)
    for m in range(256):
        if connectivity_numbers_2d(m, fg_conn) == (1, 1):
            packed[m >> 3] |= 1 << (m & 7)
    return SimpleLut2D(bytes(packed), fg_conn)


_LUTS = {}


def simple_lut_2d(fg_conn=4):
    """Shared, lazily built table for ``fg_conn``."""
    lut = _LUTS.get(fg_conn)
    if lut is None:
        lut = _LUTS[fg_conn] = build_simple_lut_2d(fg_conn)
    return lut


def is_simple_point2d(p, X, lut=None):
    if lut is None:
        lut = simple_lut_2d(4)
    if not X.get(p):
        return False
    return lut[X.window_mask(p, C8)]


class IsSimplePoint2D:
    """Simple-pixel predicate for a (fg, bg) pair, e.g. ``IsSimplePoint2D(C4, C8)``."""

    def __init__(self, fg_nbh=C4, bg_nbh=C8):
        if {len(fg_nbh), len(bg_nbh)} != {4, 8}:
            raise ValueError("2D simple points need the (4, 8) or (8, 4) pair")
        self.lut = simple_lut_2d(len(fg_nbh))
        self._flags = self.lut.as_list()

    def __call__(self, p, X):
        if not X.get(p):
            return False
        return self._flags[X.window_mask(p, C8)]


def detach_point(p, X):
    X[p] = False


class IsNotEndPoint:
    """False exactly on the end points of ``ref``: one neighbor under ``nbh``.

    ``ref`` is copied, so the predicate keeps referring to the initial image
    while thinning modifies its own working copy.
    """

    def __init__(self, nbh, ref):
        self.nbh = nbh
        self.ref = ref.copy()

    def __call__(self, p):
        ref = self.ref
        n = 0
        for q in self.nbh.sites(p):
            if ref.get(q):
                n += 1
                if n > 1:
                    return True
        return n != 1


def is_not_end_point(p, nbh, ref):
    return IsNotEndPoint(nbh, ref)(p)


def thin2d(X, end_points=False):
    """(4, 8) breadth-first thinning, optionally keeping the input's end points."""
    from .thinning import breadth_first_thinning, no_constraint

    constraint = IsNotEndPoint(C4, X) if end_points else no_constraint()
    return breadth_first_thinning(X, C4, IsSimplePoint2D(C4, C8), detach_point, constraint)
