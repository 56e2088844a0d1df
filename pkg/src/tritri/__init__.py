"""Robust triangle-triangle intersection in 3D.

The kernel reduces the 3D problem to 2D: one triangle's plane becomes the
working plane, the other triangle's edge crossings with it become a
segment, and the segment is clipped against the first triangle's 2D image
using region codes.  Coplanar pairs are resolved by polygon clipping.

Public entry points are :func:`intersect` and :func:`classify_only`; the
2D machinery (region codes, segment clipping, coplanar contours) is also
exported for direct use.
"""

from .core import (
    DEFAULT_TOLERANCE,
    Plane,
    PlaneRelation,
    Point3,
    Tolerance,
    Triangle3,
    classify_planes,
    plane_from_triangle,
    signed_distance,
)
from .clip2d import (
    ClipKind,
    ClipResult2,
    Triangle2,
    clip_segment_to_triangle,
    point_in_triangle,
    region_code,
)
from .coplanar import ContourKind, ContourResult, intersect_coplanar
from .errors import (
    DegenerateTriangle,
    EmptyMesh,
    GeometryError,
    NonFiniteInput,
    ParseError,
)
from .frame import PlaneFrame, Point2, build_frame, from_plane, to_plane
from .intersect import (
    CaseLabel,
    EmptyReason,
    IntersectionResult,
    ResultKind,
    classify_only,
    intersect,
)

__version__ = "0.1.0"

__all__ = [
    "CaseLabel",
    "ClipKind",
    "ClipResult2",
    "ContourKind",
    "ContourResult",
    "DEFAULT_TOLERANCE",
    "DegenerateTriangle",
    "EmptyMesh",
    "EmptyReason",
    "GeometryError",
    "IntersectionResult",
    "NonFiniteInput",
    "ParseError",
    "Plane",
    "PlaneFrame",
    "PlaneRelation",
    "Point2",
    "Point3",
    "ResultKind",
    "Tolerance",
    "Triangle2",
    "Triangle3",
    "build_frame",
    "classify_only",
    "classify_planes",
    "clip_segment_to_triangle",
    "from_plane",
    "intersect",
    "intersect_coplanar",
    "plane_from_triangle",
    "point_in_triangle",
    "region_code",
    "signed_distance",
    "to_plane",
]
