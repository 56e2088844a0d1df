"""Input parsing for the batch CLI: pair files and ASCII OFF meshes."""

import math
import sys
from pathlib import Path
from typing import Iterable, NamedTuple, TextIO

from .core import Point3, Triangle3
from .errors import EmptyMesh, ParseError


class PairRecord(NamedTuple):
    """One input line: a sequence id and the two triangles it encodes."""

    id: int
    t1: Triangle3
    t2: Triangle3


def _strip_comment(line: str) -> str:
    hash_pos = line.find("#")
    if hash_pos >= 0:
        line = line[:hash_pos]
    return line.strip()


def _floats(tokens: list[str], lineno: int) -> list[float]:
    values = []
    for tok in tokens:
        try:
            value = float(tok)
        except ValueError:
            raise ParseError(f"not a number: {tok!r}", line=lineno) from None
        if not math.isfinite(value):
            raise ParseError(f"non-finite value: {tok!r}", line=lineno)
        values.append(value)
    return values


def _triangle(values: list[float]) -> Triangle3:
    return Triangle3(
        Point3(*values[0:3]),
        Point3(*values[3:6]),
        Point3(*values[6:9]),
    )


def iter_pairs(lines: Iterable[str]) -> Iterable[PairRecord]:
    """Parse a pair stream: one pair per line, 18 numbers, # comments.

    Record ids count parsed pairs from 0; comment and blank lines do not
    consume ids.  Raises ParseError carrying the 1-based line number.
    """
    rid = 0
    for lineno, raw in enumerate(lines, start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 18:
            raise ParseError(f"expected 18 numbers, got {len(tokens)}", line=lineno)
        values = _floats(tokens, lineno)
        yield PairRecord(rid, _triangle(values[0:9]), _triangle(values[9:18]))
        rid += 1


def read_pairs(source: str | Path | TextIO) -> list[PairRecord]:
    """Read pair records from a path, '-' for stdin, or an open stream."""
    if hasattr(source, "read"):
        return list(iter_pairs(source))
    if str(source) == "-":
        return list(iter_pairs(sys.stdin))
    with open(source, "r", encoding="utf-8") as handle:
        return list(iter_pairs(handle))


def read_off(source: str | Path | TextIO) -> list[Triangle3]:
    """Read an ASCII OFF triangle soup.

    Only 3-vertex faces are accepted; anything else is a ParseError.
    Raises EmptyMesh when the file holds no faces.
    """
    if hasattr(source, "read"):
        lines = source.readlines()
    else:
        with open(source, "r", encoding="utf-8") as handle:
            lines = handle.readlines()

    # materialize the non-empty payload lines with their original numbers
    payload: list[tuple[int, str]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = _strip_comment(raw)
        if line:
            payload.append((lineno, line))

    cursor = 0

    def next_line() -> tuple[int, str]:
        nonlocal cursor
        if cursor >= len(payload):
            raise ParseError("unexpected end of file")
        item = payload[cursor]
        cursor += 1
        return item

    lineno, header = next_line()
    if header.upper() != "OFF":
        raise ParseError(f"expected OFF header, got {header!r}", line=lineno)

    lineno, counts_line = next_line()
    counts = counts_line.split()
    if len(counts) < 2:
        raise ParseError("expected vertex and face counts", line=lineno)
    try:
        n_vertices, n_faces = int(counts[0]), int(counts[1])
    except ValueError:
        raise ParseError(f"bad counts line: {counts_line!r}", line=lineno) from None
    if n_vertices < 0 or n_faces < 0:
        raise ParseError("negative counts", line=lineno)

    vertices: list[Point3] = []
    for _ in range(n_vertices):
        lineno, line = next_line()
        tokens = line.split()
        if len(tokens) < 3:
            raise ParseError("vertex needs 3 coordinates", line=lineno)
        values = _floats(tokens[:3], lineno)
        vertices.append(Point3(*values))

    faces: list[Triangle3] = []
    for _ in range(n_faces):
        lineno, line = next_line()
        tokens = line.split()
        try:
            arity = int(tokens[0])
        except (IndexError, ValueError):
            raise ParseError("face needs a leading vertex count", line=lineno) from None
        if arity != 3:
            raise ParseError(f"only triangular faces supported, got {arity}", line=lineno)
        if len(tokens) < 4:
            raise ParseError("face needs 3 vertex indices", line=lineno)
        try:
            idx = [int(tok) for tok in tokens[1:4]]
        except ValueError:
            raise ParseError("bad vertex index", line=lineno) from None
        for i in idx:
            if not 0 <= i < len(vertices):
                raise ParseError(f"vertex index {i} out of range", line=lineno)
        faces.append(Triangle3(vertices[idx[0]], vertices[idx[1]], vertices[idx[2]]))

    if not faces:
        raise EmptyMesh("mesh has no faces")
    return faces
