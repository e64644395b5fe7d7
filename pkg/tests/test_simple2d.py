import numpy as np
import pytest

from digitopo.core import C4, C8, BinaryGridImage, Box
from digitopo.oracle import count_components, embed_config_2d, label_components, oracle_is_simple_2d
from digitopo.simple2d import (
    IsNotEndPoint,
    IsSimplePoint2D,
    build_simple_lut_2d,
    connectivity_numbers_2d,
    detach_point,
    is_not_end_point,
    is_simple_point2d,
    thin2d,
)
from digitopo.thinning import breadth_first_thinning, unstable_sites

from conftest import image, parse

# frozen from the global oracle's verdicts (not from the table itself)
GOLDEN_LUT = {
    4: bytes.fromhex("ccbbf380ccbbf3803300000033bb0080ccbbf380ccbbf3803300f38033bbf37b"),
    8: bytes.fromhex("decfddcc01cf00cc01cfdd3301cfdd330100ddcc000000cc01cfdd3301cfdd33"),
}


def _patch_counts(mask, fg_conn):
    """Brute-force connectivity numbers by labeling the 3x3 ring on its own."""
    arr, (c, _) = embed_config_2d(mask, frame=3)
    fg = arr.copy()
    fg[c, c] = False
    bg = ~arr
    bg_conn = 12 - fg_conn
    near = {4: [(0, 1), (1, 0), (1, 2), (2, 1)], 8: [(i, j) for i in range(3) for j in range(3) if (i, j) != (1, 1)]}
    out = []
    for X, conn in ((fg, fg_conn), (bg, bg_conn)):
        labels, _ = label_components(X, conn)
        out.append(len({labels[q] for q in near[conn] if labels[q]}))
    return tuple(out)


def test_numbers_empty_and_full():
    assert connectivity_numbers_2d(0, 4) == (0, 1)
    assert connectivity_numbers_2d(255, 4) == (1, 0)


@pytest.mark.parametrize("bit", [1, 3, 4, 6])
def test_single_4_neighbor(bit):
    assert connectivity_numbers_2d(1 << bit, 4) == (1, 1)
    assert _patch_counts(1 << bit, 4) == (1, 1)


@pytest.mark.parametrize("fg_conn", [4, 8])
def test_numbers_match_patch_labeling(fg_conn):
    for m in range(256):
        assert connectivity_numbers_2d(m, fg_conn) == _patch_counts(m, fg_conn), m


def test_duality():
    # the 4-foreground of m is the 4-background of ~m seen with an 8-foreground
    for m in range(256):
        t4_fg, t8_bg = connectivity_numbers_2d(m, 4)
        t8_fg, t4_bg = connectivity_numbers_2d(~m & 0xFF, 8)
        assert (t4_fg, t8_bg) == (t4_bg, t8_fg)


def test_bad_connectivity():
    with pytest.raises(ValueError):
        connectivity_numbers_2d(0, 6)


@pytest.mark.parametrize("fg_conn", [4, 8])
def test_lut_matches_golden_bytes(fg_conn):
    lut = build_simple_lut_2d(fg_conn)
    assert len(lut.to_bytes()) == 32
    assert lut.to_bytes() == GOLDEN_LUT[fg_conn]
    assert lut.count() == 116


def test_lut_trivial_entries():
    lut = build_simple_lut_2d(4)
    assert not lut[0]
    assert not lut[255]


def test_lut_bit_layout():
    lut = build_simple_lut_2d(4)
    raw = lut.to_bytes()
    for m in range(256):
        assert lut[m] == bool(raw[m // 8] >> (m % 8) & 1)


@pytest.mark.parametrize("fg_conn", [4, 8])
def test_lut_against_oracle(fg_conn):
    lut = build_simple_lut_2d(fg_conn)
    for m in range(256):
        arr, p = embed_config_2d(m)
        assert lut[m] == oracle_is_simple_2d(p, arr, fg_conn)


def test_predicate_on_images():
    line = parse(["#####"])
    assert is_simple_point2d((0, 0), line)
    assert is_simple_point2d((0, 4), line)
    assert not is_simple_point2d((0, 2), line)
    h_bridge = parse(["#.#", "###", "#.#"])
    assert not is_simple_point2d((1, 1), h_bridge)
    assert not oracle_is_simple_2d((1, 1), h_bridge)
    dot = parse(["...", ".#.", "..."])
    assert not is_simple_point2d((1, 1), dot)


def test_predicate_background_query_is_false():
    assert not IsSimplePoint2D()((0, 0), parse(["."]))


def test_predicate_rejects_bad_pair():
    with pytest.raises(ValueError):
        IsSimplePoint2D(C4, C4)


def test_detach_point():
    X = BinaryGridImage(Box.from_shape((5, 5)), np.ones((5, 5), bool))
    detach_point((3, 3), X)
    assert not X[(3, 3)]
    detach_point((3, 3), X)
    assert not X[(3, 3)]
    expect = np.ones((5, 5), bool)
    expect[3, 3] = False
    assert (X.to_numpy() == expect).all()


def test_end_points():
    X = parse(["....", ".###", "....", "#..."])
    assert not is_not_end_point((1, 1), C4, X)
    assert is_not_end_point((1, 2), C4, X)
    assert is_not_end_point((3, 0), C4, X)


def test_end_point_predicate_keeps_initial_reference():
    X = parse(["###"])
    pred = IsNotEndPoint(C4, X)
    X[(0, 1)] = False
    assert not pred((0, 0))


def test_thin_line_to_single_pixel():
    out = thin2d(image(np.ones((1, 10), bool)))
    assert out.count() == 1
    assert count_components(out.to_numpy(), 4) == 1


def test_thin_line_with_end_points_unchanged():
    X = image(np.ones((1, 10), bool))
    assert thin2d(X, end_points=True) == X


def test_border_touching_image(rng):
    X = image(np.ones((7, 9), bool))
    out = thin2d(X)
    assert out.count() == 1


def test_end_points_survive(rng):
    pred = IsSimplePoint2D()
    for _ in range(50):
        arr = rng.random(tuple(rng.integers(2, 13, 2))) < 0.5
        X = image(arr)
        ends = [p for p in X.foreground() if not is_not_end_point(p, C4, X)]
        out = thin2d(X, end_points=True)
        assert all(out[p] for p in ends)
        assert not unstable_sites(out, pred, IsNotEndPoint(C4, X))


def test_eight_four_thinning_preserves_topology(rng):
    from digitopo.oracle import topology_2d

    pred = IsSimplePoint2D(C8, C4)
    for _ in range(100):
        arr = rng.random(tuple(rng.integers(1, 11, 2))) < 0.6
        out = breadth_first_thinning(image(arr), C8, pred, detach_point)
        assert topology_2d(arr, 8) == topology_2d(out.to_numpy(), 8)
