"""Batch command-line driver.

Two modes: ``tritri pair`` reads triangle pairs (18 numbers per line) and
emits one JSON record per pair; ``tritri mesh`` reads two OFF triangle
soups, tests all cross pairs, and emits records for contacting pairs.

Records go to --output (stdout by default), one JSON object per line; a
summary JSON object goes to stderr.  Output is deterministic: the record
stream is byte-identical across runs and --jobs settings.  Per-record
timing (the ``us`` field) is therefore opt-in via --timing.

Exit codes: 0 success, 1 I/O or parse failure, 2 all records degenerate.
"""

import argparse
import functools
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import DEFAULT_TOLERANCE, Tolerance, Triangle3
from .errors import DegenerateTriangle, EmptyMesh, ParseError
from .fileio import PairRecord, read_off, read_pairs
from .intersect import intersect

CONTACT_CASES = frozenset({"touch_point", "crossing_segment", "coplanar_contour"})


@dataclass(frozen=True)
class ResultRecord:
    id: object  # int for pair mode, (i, j) for mesh mode
    case: str | None  # None marks a skipped (degenerate) record
    points: tuple
    us: int | None = None


def _tolerance(eps: float) -> Tolerance:
    return Tolerance(eps_dist=eps, eps_param=eps)


def _evaluate(task, tol: Tolerance, timing: bool) -> ResultRecord:
    rid, t1, t2 = task
    start = time.perf_counter() if timing else 0.0
    try:
        label, result = intersect(Triangle3(*t1), Triangle3(*t2), tol)
    except DegenerateTriangle:
        return ResultRecord(rid, None, ())
    us = round((time.perf_counter() - start) * 1e6) if timing else None
    points = tuple(tuple(p) for p in result.points)
    return ResultRecord(rid, label.value, points, us)


def _evaluate_all(tasks, tol, jobs, timing) -> list[ResultRecord]:
    worker = functools.partial(_evaluate, tol=tol, timing=timing)
    if jobs <= 1 or len(tasks) < 2:
        return [worker(task) for task in tasks]
    chunk = max(1, len(tasks) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks, chunksize=chunk))


def _summarize(results: Sequence[ResultRecord], emitted: int, elapsed: float) -> dict:
    cases: dict[str, int] = {}
    skipped = 0
    for rec in results:
        if rec.case is None:
            skipped += 1
        else:
            cases[rec.case] = cases.get(rec.case, 0) + 1
    return {
        "pairs": len(results),
        "emitted": emitted,
        "skipped": skipped,
        "cases": dict(sorted(cases.items())),
        "elapsed_us": round(elapsed * 1e6),
        "pairs_per_s": round(len(results) / elapsed) if elapsed > 0 else None,
    }


def run_pairs(records: Iterable[PairRecord], tol: Tolerance, jobs: int = 1,
              timing: bool = False) -> tuple[list[ResultRecord], dict]:
    """Intersect every pair record; results keep input order."""
    tasks = [(rec.id, rec.t1, rec.t2) for rec in records]
    start = time.perf_counter()
    results = _evaluate_all(tasks, tol, jobs, timing)
    summary = _summarize(results, emitted=sum(r.case is not None for r in results),
                         elapsed=time.perf_counter() - start)
    return results, summary


def run_meshes(faces_a: Sequence[Triangle3], faces_b: Sequence[Triangle3],
               tol: Tolerance, jobs: int = 1, timing: bool = False,
               same_mesh: bool = False) -> tuple[list[ResultRecord], dict]:
    """All-pairs mesh test; only contacting pairs are emitted downstream.

    For a mesh against itself, diagonal pairs are excluded and symmetric
    pairs tested once (i < j).  Order is lexicographic by (i, j).
    """
    if same_mesh:
        tasks = [((i, j), faces_a[i], faces_b[j])
                 for i in range(len(faces_a))
                 for j in range(i + 1, len(faces_b))]
    else:
        tasks = [((i, j), faces_a[i], faces_b[j])
                 for i in range(len(faces_a))
                 for j in range(len(faces_b))]
    start = time.perf_counter()
    results = _evaluate_all(tasks, tol, jobs, timing)
    contacts = sum(r.case in CONTACT_CASES for r in results)
    summary = _summarize(results, emitted=contacts,
                         elapsed=time.perf_counter() - start)
    return results, summary


def _record_json(rec: ResultRecord) -> str:
    payload: dict = {
        "id": list(rec.id) if isinstance(rec.id, tuple) else rec.id,
        "case": rec.case,
        "points": [list(p) for p in rec.points],
    }
    if rec.us is not None:
        payload["us"] = rec.us
    return json.dumps(payload, separators=(",", ":"))


def _emit(records: Iterable[ResultRecord], stream) -> None:
    for rec in records:
        stream.write(_record_json(rec) + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tritri",
                                     description="triangle-triangle intersection batch driver")
    sub = parser.add_subparsers(dest="mode", required=True)

    def common(p):
        p.add_argument("--eps", type=float, default=DEFAULT_TOLERANCE.eps_dist,
                       help="distance tolerance (default %(default)g)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument("--output", default="-", help="record stream (default stdout)")
        p.add_argument("--timing", action="store_true",
                       help="add per-record microsecond timing (breaks byte-identical output)")

    pair = sub.add_parser("pair", help="intersect triangle pairs from a pair file")
    pair.add_argument("--input", default="-", help="pair file, one pair per line (default stdin)")
    common(pair)

    mesh = sub.add_parser("mesh", help="all-pairs intersection of two OFF meshes")
    mesh.add_argument("mesh_a")
    mesh.add_argument("mesh_b")
    mesh.add_argument("--contacts-only", action="store_true",
                      help="emit only contacting pairs (already the default for mesh mode)")
    common(mesh)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.eps <= 0:
        print("error: --eps must be positive", file=sys.stderr)
        return 1
    tol = _tolerance(args.eps)
    jobs = max(1, args.jobs)

    try:
        if args.mode == "pair":
            records = read_pairs(args.input)
            results, summary = run_pairs(records, tol, jobs=jobs, timing=args.timing)
            emitted = [r for r in results if r.case is not None]
        else:
            faces_a = read_off(args.mesh_a)
            faces_b = read_off(args.mesh_b)
            same = os.path.realpath(args.mesh_a) == os.path.realpath(args.mesh_b)
            results, summary = run_meshes(faces_a, faces_b, tol, jobs=jobs,
                                          timing=args.timing, same_mesh=same)
            emitted = [r for r in results if r.case in CONTACT_CASES]
    except (ParseError, EmptyMesh, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.output == "-":
        _emit(emitted, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            _emit(emitted, handle)
    print(json.dumps(summary, separators=(",", ":")), file=sys.stderr)

    if results and all(r.case is None for r in results):
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
