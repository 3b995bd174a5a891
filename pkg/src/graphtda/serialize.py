"""External document formats: complex JSON, filtered-complex JSON, diagram JSON/CSV.

All emitters are deterministic (fixed key order, sorted content), so repeated
runs on the same input are byte-identical. The infinity sentinels travel as
the strings "inf" and "-inf".
"""

from __future__ import annotations

import json
import math
from typing import Iterable

from .complexes import SimplicialComplex
from .filtrations import FilteredComplex
from .persistence import PersistenceDiagram


class DocumentError(ValueError):
    """Raised when a serialized document does not match its schema."""


def encode_value(x: float) -> float | str:
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    return float(x)


def decode_value(v) -> float:
    if isinstance(v, str):
        if v == "inf":
            return math.inf
        if v == "-inf":
            return -math.inf
        raise DocumentError(f"bad value string {v!r}; only 'inf' and '-inf' are allowed")
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise DocumentError(f"bad value {v!r}; expected a number or 'inf'/'-inf'")
    x = float(v)
    if math.isnan(x):
        raise DocumentError("NaN is not a valid value")
    return x


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def complex_to_doc(k: SimplicialComplex) -> dict:
    return {
        "vertices": list(k.vertices),
        "facets": [list(f) for f in k.facets],
    }


def complex_from_doc(doc) -> SimplicialComplex:
    if not isinstance(doc, dict) or "vertices" not in doc or "facets" not in doc:
        raise DocumentError("complex document needs 'vertices' and 'facets'")
    try:
        k = SimplicialComplex.from_facets(doc["facets"])
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad facet list: {exc}") from None
    declared = tuple(sorted(doc["vertices"]))
    if declared != k.vertices:
        raise DocumentError("vertex list does not match the facets")
    return k


def filtered_to_doc(fc: FilteredComplex) -> dict:
    return {
        "simplices": [
            {"vertices": list(s), "value": encode_value(fc.value[s])}
            for s in fc.sorted_simplices()
        ]
    }


def filtered_from_doc(doc) -> FilteredComplex:
    if not isinstance(doc, dict) or "simplices" not in doc:
        raise DocumentError("filtered-complex document needs 'simplices'")
    values = {}
    for entry in doc["simplices"]:
        if not isinstance(entry, dict) or "vertices" not in entry or "value" not in entry:
            raise DocumentError("each simplex entry needs 'vertices' and 'value'")
        values[tuple(sorted(entry["vertices"]))] = decode_value(entry["value"])
    try:
        return FilteredComplex(SimplicialComplex(values.keys()), values)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad filtered complex: {exc}") from None


def diagram_to_doc(d: PersistenceDiagram) -> dict:
    return {
        "dimension": d.dimension,
        "points": [
            {
                "birth": encode_value(p.birth),
                "death": encode_value(p.death),
                "multiplicity": p.multiplicity,
            }
            for p in d.points
        ],
        "essential": [
            {"birth": encode_value(e.birth), "multiplicity": e.multiplicity}
            for e in d.essential
        ],
    }


def diagram_from_doc(doc) -> PersistenceDiagram:
    if not isinstance(doc, dict) or "dimension" not in doc:
        raise DocumentError("diagram document needs 'dimension'")
    try:
        points = [
            (decode_value(p["birth"]), decode_value(p["death"]), int(p.get("multiplicity", 1)))
            for p in doc.get("points", ())
        ]
        essential = [
            (decode_value(e["birth"]), int(e.get("multiplicity", 1)))
            for e in doc.get("essential", ())
        ]
        from .persistence import DiagramPoint, EssentialPoint

        return PersistenceDiagram(
            int(doc["dimension"]),
            [DiagramPoint(b, d, m) for b, d, m in points],
            [EssentialPoint(b, m) for b, m in essential],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad diagram document: {exc}") from None


def diagrams_to_csv(diagrams: Iterable[PersistenceDiagram]) -> str:
    """Rows "r,birth,death,multiplicity"; essential points carry death inf.

    Proper points with an infinite death cannot be told apart from essential
    ones in this format and are refused; use JSON for such diagrams.
    """
    lines = []
    for d in diagrams:
        for p in d.points:
            if math.isinf(p.death):
                raise ValueError(
                    "CSV cannot represent a proper point with infinite death; use JSON"
                )
            lines.append(
                f"{d.dimension},{_csv_value(p.birth)},{_csv_value(p.death)},{p.multiplicity}"
            )
        for e in d.essential:
            lines.append(f"{d.dimension},{_csv_value(e.birth)},inf,{e.multiplicity}")
    return "\n".join(lines) + ("\n" if lines else "")


def _csv_value(x: float) -> str:
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    return repr(x)


def diagrams_from_csv(text: str) -> list[PersistenceDiagram]:
    """Parse CSV rows back into one diagram per homology degree present."""
    points: dict[int, list] = {}
    essential: dict[int, list] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 4:
            raise DocumentError(f"CSV line {lineno}: expected 4 fields, got {len(parts)}")
        try:
            r = int(parts[0])
            birth = decode_value(_csv_number(parts[1]))
            death = decode_value(_csv_number(parts[2]))
            mult = int(parts[3])
        except (DocumentError, ValueError) as exc:
            raise DocumentError(f"CSV line {lineno}: {exc}") from None
        if death == math.inf:
            essential.setdefault(r, []).extend([birth] * mult)
        else:
            points.setdefault(r, []).extend([(birth, death)] * mult)
    degrees = sorted(set(points) | set(essential))
    return [
        PersistenceDiagram(r, points.get(r, ()), essential.get(r, ()))
        for r in degrees
    ]


def _csv_number(tok: str):
    tok = tok.strip()
    if tok in ("inf", "-inf"):
        return tok
    return float(tok)
