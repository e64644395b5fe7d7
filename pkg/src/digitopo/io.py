"""Readers and writers for PBM, PGM, VOL, OFF and edge-list files.

PBM: 1 is black is foreground. VOL is a minimal 3D binary format::

    D3 <nx> <ny> <nz>\\n
    nx*ny*nz bytes, each 0 or 1, z slowest and x fastest

so a volume of shape ``(nz, ny, nx)`` is stored in C order. Readers take
bytes (``*_loads``) or a path (``read_*``); malformed content raises
``FormatError``, file system problems raise ``OSError``.
"""

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import BinaryGridImage, Box
from .graylevel import GrayGridImage2

MAX_SITES = 1 << 31


class FormatError(ValueError):
    """Malformed or unsupported file content."""


class _Header:
    """Tokenizer for the whitespace/comment-separated Netpbm headers."""

    _token = re.compile(rb"\s*(?:#[^\n]*\n\s*)*([^\s#]+)")

    def __init__(self, data):
        self.data = data
        self.pos = 0

    def token(self):
        m = self._token.match(self.data, self.pos)
        if not m:
            raise FormatError("truncated header")
        self.pos = m.end()
        return m.group(1)

    def integer(self, what):
        tok = self.token()
        if not tok.isdigit():
            raise FormatError(f"bad {what}: {tok!r}")
        return int(tok)

    def raster_start(self):
        # exactly one whitespace byte separates the header from raw data
        if self.pos >= len(self.data) or not self.data[self.pos : self.pos + 1].isspace():
            raise FormatError("missing whitespace after header")
        return self.pos + 1


def _dims(header, ndim=2):
    dims = [header.integer("dimension") for _ in range(ndim)]
    if any(d <= 0 for d in dims):
        raise FormatError(f"non-positive dimension in {dims}")
    if int(np.prod(dims, dtype=object)) > MAX_SITES:
        raise FormatError(f"dimensions {dims} too large")
    return dims


def pbm_loads(data):
    header = _Header(data)
    magic = header.token()
    if magic not in (b"P1", b"P4"):
        raise FormatError(f"not a PBM file (magic {magic[:2]!r})")
    width, height = _dims(header)
    if magic == b"P1":
        bits = re.sub(rb"\s+", b"", data[header.pos :])
        if len(bits) < width * height:
            raise FormatError("truncated PBM raster")
        raster = np.frombuffer(bits[: width * height], dtype=np.uint8) - ord("0")
        if (raster > 1).any():
            raise FormatError("PBM raster must contain only 0 and 1")
        arr = raster.reshape(height, width).astype(bool)
    else:
        start = header.raster_start()
        row = (width + 7) // 8
        raw = data[start : start + row * height]
        if len(raw) < row * height:
            raise FormatError("truncated PBM raster")
        packed = np.frombuffer(raw, dtype=np.uint8).reshape(height, row)
        arr = np.unpackbits(packed, axis=1)[:, :width].astype(bool)
    return BinaryGridImage(Box.from_shape((height, width)), arr)


def pbm_dumps(img, plain=False):
    arr = _binary_array(img, 2)
    height, width = arr.shape
    if plain:
        lines = [f"P1\n{width} {height}"]
        lines += [" ".join("1" if v else "0" for v in row) for row in arr]
        return ("\n".join(lines) + "\n").encode()
    head = f"P4\n{width} {height}\n".encode()
    return head + np.packbits(arr, axis=1).tobytes()


def pgm_loads(data):
    header = _Header(data)
    magic = header.token()
    if magic not in (b"P2", b"P5"):
        raise FormatError(f"not a PGM file (magic {magic[:2]!r})")
    width, height = _dims(header)
    maxval = header.integer("maxval")
    if not 0 < maxval <= 255:
        raise FormatError(f"maxval {maxval} not in 1..255")
    n = width * height
    if magic == b"P2":
        toks = data[header.pos :].split()
        if len(toks) < n:
            raise FormatError("truncated PGM raster")
        try:
            raster = np.array([int(t) for t in toks[:n]], dtype=np.int64)
        except ValueError:
            raise FormatError("non-integer PGM sample") from None
    else:
        start = header.raster_start()
        raw = data[start : start + n]
        if len(raw) < n:
            raise FormatError("truncated PGM raster")
        raster = np.frombuffer(raw, dtype=np.uint8).astype(np.int64)
    if (raster > maxval).any():
        raise FormatError("sample exceeds maxval")
    return GrayGridImage2(Box.from_shape((height, width)), raster.reshape(height, width))


def pgm_dumps(img, plain=False, maxval=255):
    arr = img.array if hasattr(img, "array") else np.asarray(img, dtype=np.uint8)
    height, width = arr.shape
    if plain:
        lines = [f"P2\n{width} {height}\n{maxval}"]
        lines += [" ".join(str(int(v)) for v in row) for row in arr]
        return ("\n".join(lines) + "\n").encode()
    return f"P5\n{width} {height}\n{maxval}\n".encode() + np.ascontiguousarray(arr, dtype=np.uint8).tobytes()


def vol_loads(data):
    nl = data.find(b"\n")
    if nl < 0:
        raise FormatError("missing VOL header line")
    fields = data[:nl].split()
    if len(fields) != 4 or fields[0] != b"D3":
        raise FormatError(f"bad VOL header {data[:nl][:40]!r}")
    header = _Header(b" ".join(fields[1:]))
    nx, ny, nz = _dims(header, 3)
    n = nx * ny * nz
    payload = data[nl + 1 :]
    if len(payload) < n:
        raise FormatError(f"truncated VOL payload: {len(payload)} of {n} bytes")
    if len(payload) > n:
        raise FormatError(f"trailing bytes after VOL payload: {len(payload) - n}")
    raster = np.frombuffer(payload, dtype=np.uint8)
    if (raster > 1).any():
        raise FormatError("VOL payload bytes must be 0 or 1")
    return BinaryGridImage(Box.from_shape((nz, ny, nx)), raster.reshape(nz, ny, nx).astype(bool))


def vol_dumps(img):
    arr = _binary_array(img, 3)
    nz, ny, nx = arr.shape
    return f"D3 {nx} {ny} {nz}\n".encode() + arr.astype(np.uint8).tobytes()


def _binary_array(img, ndim):
    arr = img.to_numpy() if hasattr(img, "to_numpy") else np.asarray(img, dtype=bool)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}D binary image, got {arr.ndim}D")
    return arr


@dataclass
class Mesh:
    vertices: np.ndarray
    triangles: np.ndarray

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        self.triangles = np.asarray(self.triangles, dtype=np.int64).reshape(-1, 3)


def _data_lines(text):
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            yield line


def off_loads(data):
    text = data.decode("ascii", errors="replace") if isinstance(data, bytes) else data
    lines = list(_data_lines(text))
    if not lines or not lines[0].startswith("OFF"):
        raise FormatError("missing OFF keyword")
    first = lines[0][3:].split()
    rest = lines[1:]
    if not first:
        if not rest:
            raise FormatError("missing OFF counts line")
        first, rest = rest[0].split(), rest[1:]
    try:
        nv, nf = int(first[0]), int(first[1])
    except (ValueError, IndexError):
        raise FormatError(f"bad OFF counts line {' '.join(first)!r}") from None
    if nv < 0 or nf < 0:
        raise FormatError("negative OFF counts")
    if len(rest) != nv + nf:
        raise FormatError(f"OFF header announces {nv} vertices and {nf} faces, body has {len(rest)} lines")
    coords = []
    for ln in rest[:nv]:
        toks = ln.split()
        try:
            coords.append([float(x) for x in toks[:3]])
        except ValueError:
            raise FormatError(f"bad OFF vertex line {ln!r}") from None
        if len(toks) < 3:
            raise FormatError(f"OFF vertex line needs 3 coordinates: {ln!r}")
    vertices = np.array(coords, dtype=float).reshape(-1, 3)
    triangles = []
    for ln in rest[nv:]:
        toks = ln.split()
        try:
            arity = int(toks[0])
            idx = [int(t) for t in toks[1 : 1 + arity]]
        except ValueError:
            raise FormatError(f"bad OFF face line {ln!r}") from None
        if arity != 3:
            raise FormatError(f"only triangles are supported, got a {arity}-gon")
        if len(idx) != 3:
            raise FormatError(f"truncated OFF face line {ln!r}")
        if min(idx) < 0 or max(idx) >= nv:
            raise FormatError(f"vertex index out of range in {ln!r}")
        triangles.append(idx)
    return Mesh(vertices, np.array(triangles, dtype=np.int64).reshape(-1, 3))


def off_dumps(mesh):
    out = ["OFF", f"{len(mesh.vertices)} {len(mesh.triangles)} 0"]
    out += [" ".join(repr(float(c)) for c in v) for v in mesh.vertices]
    out += [f"3 {a} {b} {c}" for a, b, c in mesh.triangles.tolist()]
    return ("\n".join(out) + "\n").encode()


def mesh_from_image(img):
    """Mesh of the true triangles of a complex image (all vertices kept)."""
    cx = img.complex
    coords = cx.vertex_coords
    if coords is None:
        coords = np.zeros((cx.n_faces(0), 3))
    oriented = cx.oriented_triangles or cx.keys[2]
    tris = [oriented[f.id] for f in img.true_faces(2)] if cx.dim >= 2 else []
    return Mesh(coords, np.array(tris, dtype=np.int64).reshape(-1, 3))


def edges_dumps(img):
    """One ``i j`` line per true edge, then one ``i`` line per true vertex on no true edge."""
    cx = img.complex
    lines = []
    covered = set()
    if cx.dim >= 1:
        for f in img.true_faces(1):
            a, b = cx.keys[1][f.id]
            lines.append(f"{a} {b}")
            covered.update((a, b))
    for f in img.true_faces(0):
        (v,) = cx.keys[0][f.id]
        if v not in covered:
            lines.append(f"{v}")
    return ("\n".join(lines) + "\n" if lines else "").encode()


def edges_loads(data):
    edges, isolated = [], []
    for ln in _data_lines(data.decode("ascii", errors="replace")):
        toks = ln.split()
        try:
            ids = [int(t) for t in toks]
        except ValueError:
            raise FormatError(f"bad edge-list line {ln!r}") from None
        if len(ids) == 2:
            edges.append(tuple(ids))
        elif len(ids) == 1:
            isolated.append(ids[0])
        else:
            raise FormatError(f"edge-list lines hold one or two ids: {ln!r}")
    return edges, isolated


def _reader(loads):
    def read(path):
        return loads(Path(path).read_bytes())

    read.__name__ = "read_" + loads.__name__.replace("_loads", "")
    return read


def _writer(dumps):
    def write(path, obj, **kw):
        Path(path).write_bytes(dumps(obj, **kw))

    write.__name__ = "write_" + dumps.__name__.replace("_dumps", "")
    return write


read_pbm, write_pbm = _reader(pbm_loads), _writer(pbm_dumps)
read_pgm, write_pgm = _reader(pgm_loads), _writer(pgm_dumps)
read_vol, write_vol = _reader(vol_loads), _writer(vol_dumps)
read_off, write_off = _reader(off_loads), _writer(off_dumps)
read_edges = _reader(edges_loads)
write_edges = _writer(edges_dumps)
