"""Exception types raised by the geometry kernel and the batch front end."""


class GeometryError(ValueError):
    """Base class for geometric contract violations."""


class DegenerateTriangle(GeometryError):
    """Triangle vertices are collinear (area below tolerance)."""


class NonFiniteInput(GeometryError):
    """An input coordinate is NaN or infinite."""


class ZeroLengthSegment(GeometryError):
    """Segment endpoints coincide within tolerance."""


class ParallelToPlane(GeometryError):
    """Line direction is perpendicular to the plane normal; no unique parameter."""


class AnchorOffPlane(GeometryError):
    """Frame anchor does not lie on the plane within tolerance."""


class PointOffPlane(GeometryError):
    """Point handed to a plane frame does not lie on its plane."""


class CoplanarEdges(GeometryError):
    """Triangle edges lie in the query plane; the coplanar path must be used."""


class MalformedLoops(GeometryError):
    """Vertex loops are internally inconsistent (broken twin links or traversal)."""


class ParseError(ValueError):
    """Input file is malformed. Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyMesh(ValueError):
    """Mesh file parsed but contains no triangles."""
