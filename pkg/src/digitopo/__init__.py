"""Generic homotopic thinning for grid images, gray-level images and cell complexes."""

from .complex import (
    CellComplex,
    CollapseError,
    ComplexImage,
    Face,
    SharedFaceAdjacency,
    build_cubical,
    build_cubical_from_binary,
    build_simplicial,
    build_simplicial_from_off,
    elementary_collapse,
    euler_characteristic,
    is_free_pair,
)
from .core import C4, C6, C8, C18, C26, BinaryGridImage, Box, GridImage, Window
from .graylevel import GrayGridImage2, cross_section, gray_thinning, is_destructible, lower
from .simple2d import (
    IsNotEndPoint,
    IsSimplePoint2D,
    SimpleLut2D,
    build_simple_lut_2d,
    connectivity_numbers_2d,
    detach_point,
    is_not_end_point,
    is_simple_point2d,
    thin2d,
)
from .simple3d import IsSimplePoint3D, SimpleLut3D, connectivity_numbers_3d, is_simple_point3d, thin3d
from .skeleton import (
    detach_cell,
    detach_cell_in_simple_pair,
    is_cell_in_simple_pair,
    is_simple_cell,
    thick_skeleton,
    ultimate_collapse,
    ultimate_n_collapse,
)
from .thinning import breadth_first_thinning, no_constraint, preserve_set

__version__ = "0.1.0"
