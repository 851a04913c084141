"""Graph text format and JSON report schema.

Text format, one directive per line:

    # comment (ignored, as are blank lines)
    n <vertex count>          (exactly once, before any edge)
    e <u> <v>                 (one edge; u == v is a loop; repeat for
                               parallel edges; edge ids follow file order)
"""

from __future__ import annotations

import json

from .errors import InvalidInput
from .multigraph import Factorization, Multigraph

REPORT_SCHEMA = {
    "type": "object",
    "required": ["k", "factors", "audit"],
    "additionalProperties": False,
    "properties": {
        "k": {"type": "integer", "minimum": 1},
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["edges"],
                "additionalProperties": False,
                "properties": {
                    "edges": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 0},
                    }
                },
            },
        },
        "audit": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["bound", "measured", "pass"],
                "additionalProperties": False,
                "properties": {
                    "bound": {"type": "number"},
                    "measured": {"type": "number"},
                    "pass": {"type": "boolean"},
                },
            },
        },
    },
}


def parse_graph(text: str) -> Multigraph:
    """Parse the text format; errors carry 1-based line numbers."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise InvalidInput(f"line {lineno}: duplicate vertex count")
            if len(parts) != 2:
                raise InvalidInput(f"line {lineno}: expected 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise InvalidInput(f"line {lineno}: vertex count is not an integer") from None
            if n < 0:
                raise InvalidInput(f"line {lineno}: vertex count must be >= 0")
        elif parts[0] == "e":
            if n is None:
                raise InvalidInput(f"line {lineno}: edge before vertex count")
            if len(parts) != 3:
                raise InvalidInput(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise InvalidInput(f"line {lineno}: edge endpoints are not integers") from None
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"line {lineno}: endpoint outside [0, {n})")
            edges.append((u, v))
        else:
            raise InvalidInput(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise InvalidInput("missing vertex count line 'n <count>'")
    return Multigraph(n, edges)


def serialize_graph(g: Multigraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def factorization_report(fz: Factorization, audit=None) -> dict:
    """Build the report object matching REPORT_SCHEMA."""
    return {
        "k": fz.k,
        "factors": [{"edges": fz.factor_edges(i)} for i in range(1, fz.k + 1)],
        "audit": {
            claim: {"bound": float(bound), "measured": float(measured), "pass": bool(ok)}
            for claim, bound, measured, ok in (audit or [])
        },
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
