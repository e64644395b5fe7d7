"""Sites, boxes, neighborhoods and grid images.

Every algorithm in the package is written against a small set of duck-typed
concepts:

* an *image* exposes ``domain()`` (iterable of sites), ``get(p)`` (clamped
  read), ``__setitem__``, ``copy()`` and ``flags()`` (an all-false boolean
  image over the same domain, used as scratch marks);
* a *neighborhood* exposes ``sites(p)``, a deterministic sequence of sites
  that never contains ``p`` and is not filtered by any domain;
* a *site predicate* is any callable ``site -> bool``.

Grid sites are plain tuples of ints, so they hash, compare lexicographically
and print naturally.
"""

from itertools import product

import numpy as np

Point = tuple


class Box:
    """Inclusive hyperrectangle ``lo..hi`` on the integer grid."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo, hi = tuple(int(v) for v in lo), tuple(int(v) for v in hi)
        if len(lo) != len(hi):
            raise ValueError("box corners have different dimensions")
        if any(a > b for a, b in zip(lo, hi)):
            raise ValueError(f"empty box {lo}..{hi}")
        self.lo = lo
        self.hi = hi

    @classmethod
    def from_shape(cls, shape):
        return cls((0,) * len(shape), tuple(s - 1 for s in shape))

    @property
    def ndim(self):
        return len(self.lo)

    @property
    def shape(self):
        return tuple(b - a + 1 for a, b in zip(self.lo, self.hi))

    def contains(self, p):
        lo, hi = self.lo, self.hi
        if len(lo) == 2:
            return lo[0] <= p[0] <= hi[0] and lo[1] <= p[1] <= hi[1]
        if len(lo) == 3:
            return lo[0] <= p[0] <= hi[0] and lo[1] <= p[1] <= hi[1] and lo[2] <= p[2] <= hi[2]
        return all(a <= v <= b for a, v, b in zip(lo, p, hi))

    __contains__ = contains

    def __len__(self):
        return int(np.prod(self.shape))

    def __iter__(self):
        # row-major, last axis fastest
        return product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))

    def __eq__(self, other):
        return isinstance(other, Box) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"Box({self.lo}, {self.hi})"


def box_iterate(box):
    return iter(box)


class Window:
    """Neighborhood given by a fixed list of offsets.

    Offsets are kept in lexicographic order; ``sites(p)`` returns ``p + o``
    for each offset in that order.
    """

    def __init__(self, offsets, name=None):
        offsets = sorted(set(tuple(o) for o in offsets))
        if any(not any(o) for o in offsets):
            raise ValueError("a neighborhood cannot contain the null offset")
        if {tuple(-v for v in o) for o in offsets} != set(offsets):
            raise ValueError("neighborhood offsets must be symmetric")
        self.offsets = tuple(offsets)
        self.ndim = len(offsets[0])
        self.name = name or f"window{len(offsets)}"

    def __len__(self):
        return len(self.offsets)

    def __iter__(self):
        return iter(self.offsets)

    def sites(self, p):
        if self.ndim == 2:
            p0, p1 = p
            return [(p0 + a, p1 + b) for a, b in self.offsets]
        if self.ndim == 3:
            p0, p1, p2 = p
            return [(p0 + a, p1 + b, p2 + c) for a, b, c in self.offsets]
        return [tuple(x + d for x, d in zip(p, o)) for o in self.offsets]

    def __repr__(self):
        return self.name


def _offsets(ndim, max_nonzero):
    return [
        o
        for o in product((-1, 0, 1), repeat=ndim)
        if 0 < sum(1 for v in o if v) <= max_nonzero
    ]


C4 = Window(_offsets(2, 1), "c4")
C8 = Window(_offsets(2, 2), "c8")
C6 = Window(_offsets(3, 1), "c6")
C18 = Window(_offsets(3, 2), "c18")
C26 = Window(_offsets(3, 3), "c26")

WINDOWS = {4: C4, 8: C8, 6: C6, 18: C18, 26: C26}


def c4():
    return C4


def c8():
    return C8


def c6():
    return C6


def c18():
    return C18


def c26():
    return C26


def neighborhood_sites(nbh, p):
    return nbh.sites(p)


class GridImage:
    """Small-integer image on a box, stored one byte per site.

    Storage carries a one-site ring of zeros around the domain so that
    window reads around any in-domain site never need bounds checks.
    """

    def __init__(self, domain, values=None):
        if not isinstance(domain, Box):
            domain = Box.from_shape(domain)
        self.domain_box = domain
        shape = domain.shape
        self._pshape = tuple(s + 2 for s in shape)
        self._buf = bytearray(int(np.prod(self._pshape)))
        strides = []
        acc = 1
        for s in reversed(self._pshape):
            strides.append(acc)
            acc *= s
        self._strides = tuple(reversed(strides))
        # flat index of p is sum(p[i] * stride[i]) + _base
        self._base = sum((1 - lo) * st for lo, st in zip(domain.lo, self._strides))
        self._offset_cache = {}
        if values is not None:
            self.array[...] = self._coerce(np.asarray(values))

    def _coerce(self, arr):
        if arr.shape != self.domain_box.shape:
            raise ValueError(f"value array shape {arr.shape} != domain shape {self.domain_box.shape}")
        return arr

    @property
    def padded(self):
        return np.frombuffer(self._buf, dtype=np.uint8).reshape(self._pshape)

    @property
    def array(self):
        """Writable uint8 view of the in-domain values."""
        return self.padded[(slice(1, -1),) * self.ndim]

    @property
    def ndim(self):
        return self.domain_box.ndim

    @property
    def shape(self):
        return self.domain_box.shape

    def domain(self):
        return iter(self.domain_box)

    def index(self, p):
        st = self._strides
        if len(st) == 2:
            return self._base + p[0] * st[0] + p[1]
        if len(st) == 3:
            return self._base + p[0] * st[0] + p[1] * st[1] + p[2]
        return self._base + sum(v * s for v, s in zip(p, st))

    def _check(self, p):
        if not self.domain_box.contains(p):
            raise IndexError(f"site {p} outside {self.domain_box}")

    def __getitem__(self, p):
        self._check(p)
        return self._buf[self.index(p)]

    def __setitem__(self, p, v):
        self._check(p)
        self._buf[self.index(p)] = v

    def get(self, p):
        """Clamped read: 0 outside the domain."""
        if self.domain_box.contains(p):
            return self._buf[self.index(p)]
        return 0

    def flat_offsets(self, nbh):
        key = nbh.offsets
        offs = self._offset_cache.get(key)
        if offs is None:
            offs = tuple(sum(d * s for d, s in zip(o, self._strides)) for o in nbh.offsets)
            self._offset_cache[key] = offs
        return offs

    def window_values(self, p, nbh):
        """Clamped values of ``nbh.sites(p)``, in neighborhood order."""
        if self.domain_box.contains(p):
            buf = self._buf
            i = self.index(p)
            return [buf[i + o] for o in self.flat_offsets(nbh)]
        return [self.get(q) for q in nbh.sites(p)]

    def copy(self):
        out = self.__class__.__new__(self.__class__)
        out.__dict__.update(self.__dict__)
        out._buf = bytearray(self._buf)
        out._offset_cache = self._offset_cache
        return out

    def flags(self):
        return BinaryGridImage(self.domain_box)

    def __eq__(self, other):
        return (
            isinstance(other, GridImage)
            and self.domain_box == other.domain_box
            and self._buf == other._buf
        )

    def __repr__(self):
        return f"{type(self).__name__}({self.domain_box})"


class BinaryGridImage(GridImage):
    """Boolean image on a 2D or 3D box; the foreground set is the true sites."""

    def _coerce(self, arr):
        return super()._coerce(arr).astype(bool)

    def __getitem__(self, p):
        if not self.domain_box.contains(p):
            raise IndexError(f"site {p} outside {self.domain_box}")
        return self._buf[self.index(p)] != 0

    def __setitem__(self, p, v):
        if not self.domain_box.contains(p):
            raise IndexError(f"site {p} outside {self.domain_box}")
        self._buf[self.index(p)] = 1 if v else 0

    def get(self, p):
        if self.domain_box.contains(p):
            return self._buf[self.index(p)] != 0
        return False

    def to_numpy(self):
        return self.array.astype(bool)

    @classmethod
    def from_numpy(cls, arr, lo=None):
        arr = np.asarray(arr, dtype=bool)
        domain = Box.from_shape(arr.shape) if lo is None else Box(lo, tuple(a + s - 1 for a, s in zip(lo, arr.shape)))
        return cls(domain, arr)

    def count(self):
        return int(np.count_nonzero(self.array))

    def foreground(self):
        return [p for p in self.domain() if self[p]]

    def window_mask(self, p, nbh):
        """Bit ``i`` set iff the ``i``-th neighbor of ``p`` is foreground."""
        if self.domain_box.contains(p):
            buf = self._buf
            i = self.index(p)
            mask = 0
            bit = 1
            for o in self.flat_offsets(nbh):
                if buf[i + o]:
                    mask |= bit
                bit <<= 1
            return mask
        mask = 0
        for k, q in enumerate(nbh.sites(p)):
            if self.get(q):
                mask |= 1 << k
        return mask


def count_neighbors(p, nbh, image):
    return sum(1 for q in nbh.sites(p) if image.get(q))
