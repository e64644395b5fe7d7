"""Command-line driver: one subcommand per thinning experiment.

Exit codes: 0 success, 1 usage, 2 I/O error, 3 malformed input.
Thinning subcommands report the time spent in the thinning call alone as
``thinning: <seconds> s`` on stderr.
"""

import argparse
import sys
import time

from . import io
from .complex import ComplexImage, build_simplicial_from_off
from .graylevel import gray_thinning
from .simple2d import build_simple_lut_2d, thin2d
from .simple3d import thin3d
from .skeleton import thick_skeleton, ultimate_collapse

EXIT_USAGE, EXIT_IO, EXIT_FORMAT = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _timed(fn, *args, **kw):
    start = time.perf_counter()
    out = fn(*args, **kw)
    print(f"thinning: {time.perf_counter() - start:.2f} s", file=sys.stderr)
    return out


def cmd_thin2d(args):
    X = io.read_pbm(args.input)
    Y = _timed(thin2d, X, end_points=args.end_points)
    io.write_pbm(args.output, Y, plain=args.plain)


def cmd_thin3d(args):
    X = io.read_vol(args.input)
    Y = _timed(thin3d, X, use_lut=args.lut)
    io.write_vol(args.output, Y)


def _mesh_image(path):
    mesh = io.read_off(path)
    try:
        cx = build_simplicial_from_off(mesh.vertices, mesh.triangles)
    except ValueError as e:
        raise io.FormatError(str(e)) from None
    return ComplexImage.full(cx, 2)


def _write_complex(path, img):
    if str(path).lower().endswith(".off"):
        io.write_off(path, io.mesh_from_image(img))
    else:
        io.write_edges(path, img)


def cmd_mesh_skel(args):
    img = _mesh_image(args.input)
    out = _timed(thick_skeleton, img)
    _write_complex(args.output, out)


def cmd_mesh_collapse(args):
    img = _mesh_image(args.input)
    out = _timed(ultimate_collapse, img, down_to=args.dim)
    _write_complex(args.output, out)


def cmd_gray_thin(args):
    F = io.read_pgm(args.input)
    G = _timed(gray_thinning, F)
    io.write_pgm(args.output, G, plain=args.plain)


def cmd_lut_dump(args):
    data = build_simple_lut_2d(args.conn).to_bytes()
    if args.output:
        with open(args.output, "wb") as f:
            f.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def build_parser():
    parser = _Parser(prog="digitopo", description="Homotopic thinning of images and meshes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("thin2d", help="(4,8) thinning of a PBM image")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--end-points", action="store_true", help="keep the end points of the input")
    p.add_argument("--plain", action="store_true", help="write ASCII P1 instead of raw P4")
    p.set_defaults(func=cmd_thin2d)

    p = sub.add_parser("thin3d", help="(26,6) thinning of a VOL volume")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--lut", action="store_true", help="memoize simple-point verdicts in a 2^26-bit table")
    p.set_defaults(func=cmd_thin3d)

    p = sub.add_parser("mesh-skel", help="thick skeleton of an OFF triangle mesh")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help=".off keeps triangles; anything else writes an edge list")
    p.set_defaults(func=cmd_mesh_skel)

    p = sub.add_parser("mesh-collapse", help="ultimate 2-collapse, then 1-collapse if --dim 1")
    p.add_argument("--input", required=True)
    p.add_argument("--dim", type=int, choices=(2, 1), required=True)
    p.add_argument("--output", required=True, help=".off keeps triangles; anything else writes an edge list")
    p.set_defaults(func=cmd_mesh_collapse)

    p = sub.add_parser("gray-thin", help="gray-level thinning of a PGM image")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--plain", action="store_true", help="write ASCII P2 instead of raw P5")
    p.set_defaults(func=cmd_gray_thin)

    p = sub.add_parser("lut", help="simple-point table utilities")
    lut = p.add_subparsers(dest="lut_command", required=True, parser_class=_Parser)
    d = lut.add_parser("dump", help="write the 32-byte 2D table to stdout")
    d.add_argument("--conn", type=int, choices=(4, 8), default=4, help="foreground connectivity")
    d.add_argument("--output", help="file instead of stdout")
    d.set_defaults(func=cmd_lut_dump)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except io.FormatError as e:
        print(f"digitopo: malformed input: {e}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as e:
        print(f"digitopo: {e}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
