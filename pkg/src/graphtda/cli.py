"""Command-line surface: build, persist, distance, plot.

Exit codes: 0 success, 1 usage or configuration error, 2 input parse error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import serialize, svg
from .complexes import (
    clique_complex,
    enclaveless_complex,
    independent_complex,
    neighborhood_complex,
)
from .filtrations import (
    extended_pair,
    filter_clique,
    filter_enclaveless,
    filter_neighborhood,
)
from .graphs import GraphParseError, WeightedGraph, parse_graph
from .persistence import ExtendedPersistence, PersistenceDiagram, reduce


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


_FILTERED = {
    "clique": filter_clique,
    "neighborhood": filter_neighborhood,
    "enclaveless": filter_enclaveless,
}
_COMPLEX_ONLY = {
    "clique": clique_complex,
    "neighborhood": neighborhood_complex,
    "enclaveless": enclaveless_complex,
    "independent": independent_complex,
}
CONSTRUCTIONS = tuple(sorted(_COMPLEX_ONLY))


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str) -> WeightedGraph:
    try:
        g = parse_graph(_read_text(path))
    except GraphParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    if not g.vertices:
        raise InputError(f"{path}: empty graph (no vertices declared)")
    return g


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def sample_coordinates(values: tuple[float, ...]) -> list[float]:
    """Deterministic query lattice: criticals, midpoints, one step past each end."""
    finite = sorted({v for v in values if math.isfinite(v)})
    if not finite:
        return [0.0, 1.0]
    coords = [finite[0] - 1.0]
    for a, b in zip(finite, finite[1:]):
        coords.extend([a, (a + b) / 2.0])
    coords.extend([finite[-1], finite[-1] + 1.0])
    return coords


def cmd_build(args) -> int:
    g = _load_graph(args.input)
    if args.extended:
        if args.construction not in ("clique", "independent"):
            raise UsageError(
                "extended mode pairs cliques with independent sets; "
                f"--construction {args.construction} does not apply"
            )
        pair = extended_pair(g, args.max_dim)
        doc = {
            "ascending": serialize.filtered_to_doc(pair.ascending),
            "descending": serialize.filtered_to_doc(pair.descending),
        }
    elif args.construction == "independent":
        doc = serialize.complex_to_doc(independent_complex(g, args.max_dim))
    else:
        fc = _FILTERED[args.construction](g, args.max_dim)
        doc = serialize.complex_to_doc(fc.complex)
        doc["simplices"] = serialize.filtered_to_doc(fc)["simplices"]
    if args.format != "json":
        raise UsageError(f"build emits JSON only, not {args.format}")
    _write_output(serialize.dumps(doc), args.output)
    return 0


def cmd_persist(args) -> int:
    g = _load_graph(args.input)
    if args.extended:
        if args.construction not in ("clique", "independent"):
            raise UsageError(
                "extended mode pairs cliques with independent sets; "
                f"--construction {args.construction} does not apply"
            )
        if args.format != "json":
            raise UsageError("extended output carries PBN grids and is JSON only")
        # One extra dimension in the complexes keeps every emitted degree exact.
        pair = extended_pair(g, args.max_dim + 1)
        ext = ExtendedPersistence(pair, args.max_dim)
        coords = sample_coordinates(
            pair.ascending.critical_values()
            + tuple(-v for v in pair.descending.critical_values())
        )
        doc = {
            "ascending": [serialize.diagram_to_doc(d) for d in ext.ascending],
            "descending": [serialize.diagram_to_doc(d) for d in ext.descending],
            "grids": [
                {
                    "dimension": r,
                    "coordinates": coords,
                    "values": [[ext.pbn(r, u, v) for v in coords] for u in coords],
                }
                for r in range(args.max_dim + 1)
            ],
        }
        _write_output(serialize.dumps(doc), args.output)
        return 0
    if args.construction == "independent":
        raise UsageError(
            "independent sets reverse inclusion and admit no weight filtration; "
            "use 'build', or --extended for the complement pairing"
        )
    fc = _FILTERED[args.construction](g, args.max_dim + 1)
    diagrams = reduce(fc, args.max_dim)
    if args.format == "csv":
        _write_output(serialize.diagrams_to_csv(diagrams), args.output)
    else:
        _write_output(
            serialize.dumps([serialize.diagram_to_doc(d) for d in diagrams]),
            args.output,
        )
    return 0


def _load_diagrams(path: str) -> list[PersistenceDiagram]:
    text = _read_text(path)
    stripped = text.lstrip()
    try:
        if stripped.startswith("{") or stripped.startswith("["):
            doc = json.loads(text)
            if isinstance(doc, dict):
                doc = [doc]
            return [serialize.diagram_from_doc(d) for d in doc]
        return serialize.diagrams_from_csv(text)
    except (json.JSONDecodeError, serialize.DocumentError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _select_diagram(diagrams: list[PersistenceDiagram], dimension: int | None, path: str):
    if dimension is None:
        if len(diagrams) == 1:
            return diagrams[0]
        raise UsageError(
            f"{path} holds {len(diagrams)} diagrams; pick one with --dimension"
        )
    for d in diagrams:
        if d.dimension == dimension:
            return d
    return PersistenceDiagram(dimension)


def cmd_distance(args) -> int:
    from .metrics import bottleneck

    d1 = _select_diagram(_load_diagrams(args.first), args.dimension, args.first)
    d2 = _select_diagram(_load_diagrams(args.second), args.dimension, args.second)
    if d1.dimension != d2.dimension:
        raise UsageError(
            f"homology degrees differ: {d1.dimension} vs {d2.dimension}"
        )
    print(bottleneck(d1, d2))
    return 0


def cmd_plot(args) -> int:
    if args.format != "svg":
        raise UsageError(f"plot emits SVG only, not {args.format}")
    text = _read_text(args.input)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        try:
            doc = [serialize.diagram_to_doc(d) for d in serialize.diagrams_from_csv(text)]
        except serialize.DocumentError as exc:
            raise InputError(f"{args.input}: {exc}") from None
    if isinstance(doc, dict) and "grids" in doc:
        grids = [g for g in doc["grids"] if g.get("dimension") == (args.dimension or 0)]
        if not grids:
            raise UsageError(f"no grid of degree {args.dimension or 0} in {args.input}")
        rendered = svg.render_extended_grid(grids[0])
    else:
        if isinstance(doc, dict):
            doc = [doc]
        if not isinstance(doc, list):
            raise InputError(f"{args.input}: expected diagrams or an extended document")
        if args.dimension is not None:
            doc = [d for d in doc if d.get("dimension") == args.dimension]
        rendered = svg.render_diagrams(doc)
    _write_output(rendered, args.output)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphtda", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_construction=True):
        if needs_construction:
            p.add_argument("--construction", choices=CONSTRUCTIONS, default="clique")
            p.add_argument("--max-dim", dest="max_dim", type=int, default=3)
            p.add_argument("--extended", action="store_true")
        p.add_argument("--output", default=None)

    b = sub.add_parser("build", help="construct a complex (with filtration values)")
    b.add_argument("input")
    common(b)
    b.add_argument("--format", choices=("json",), default="json")
    b.set_defaults(fn=cmd_build)

    p = sub.add_parser("persist", help="compute persistence diagrams")
    p.add_argument("input")
    common(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_persist)

    d = sub.add_parser("distance", help="bottleneck distance between two diagrams")
    d.add_argument("first")
    d.add_argument("second")
    d.add_argument("--dimension", type=int, default=None)
    d.set_defaults(fn=cmd_distance)

    pl = sub.add_parser("plot", help="render diagrams or an extended grid to SVG")
    pl.add_argument("input")
    pl.add_argument("--dimension", type=int, default=None)
    pl.add_argument("--output", default=None)
    pl.add_argument("--format", choices=("svg",), default="svg")
    pl.set_defaults(fn=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "max_dim", 0) < 0:
            raise UsageError("--max-dim must be nonnegative")
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - internal invariant violations
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
