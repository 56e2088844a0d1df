"""Orthonormal 2D coordinate frames embedded in a 3D plane.

The frame maps its anchor point to the 2D origin and preserves distances
both ways, so clipping done in frame coordinates lifts back isometrically.
"""

import math
from typing import NamedTuple

from .core import DEFAULT_TOLERANCE, Plane, Point3, Tolerance, Vec3, signed_distance, vcross, vdot, vsub
from .errors import AnchorOffPlane, PointOffPlane


class Point2(NamedTuple):
    u: float
    v: float


class PlaneFrame(NamedTuple):
    origin: Point3
    u_axis: Vec3
    v_axis: Vec3
    n_axis: Vec3


def build_frame(pl: Plane, anchor, tol: Tolerance = DEFAULT_TOLERANCE) -> PlaneFrame:
    """Right-handed orthonormal frame (u, v, n) with u x v = n.

    The u axis is seeded from the global axis least aligned with the
    normal and Gram-Schmidt projected into the plane.
    """
    if abs(signed_distance(anchor, pl)) > tol.eps_dist:
        raise AnchorOffPlane("anchor does not lie on the plane")
    n = (pl.q, pl.w, pl.u)
    comps = (abs(n[0]), abs(n[1]), abs(n[2]))
    k = comps.index(min(comps))
    seed = [0.0, 0.0, 0.0]
    seed[k] = 1.0
    d = vdot(seed, n)
    u = (seed[0] - d * n[0], seed[1] - d * n[1], seed[2] - d * n[2])
    un = math.sqrt(vdot(u, u))
    u = (u[0] / un, u[1] / un, u[2] / un)
    v = vcross(n, u)
    return PlaneFrame(Point3(*anchor), u, v, n)


def to_plane(f: PlaneFrame, p, tol: Tolerance = DEFAULT_TOLERANCE) -> Point2:
    """Frame coordinates of a 3D point lying on the frame's plane."""
    rel = vsub(p, f.origin)
    if abs(vdot(rel, f.n_axis)) > tol.eps_dist:
        raise PointOffPlane("point does not lie on the frame plane")
    return Point2(vdot(rel, f.u_axis), vdot(rel, f.v_axis))


def from_plane(f: PlaneFrame, q) -> Point3:
    """Lift frame coordinates back to 3D."""
    u, v = q
    o, ua, va = f.origin, f.u_axis, f.v_axis
    return Point3(
        o[0] + u * ua[0] + v * va[0],
        o[1] + u * ua[1] + v * va[1],
        o[2] + u * ua[2] + v * va[2],
    )
