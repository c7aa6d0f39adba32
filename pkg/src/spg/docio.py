"""Graph document schema: JSON parsing and canonical serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import SchemaError


@dataclass(frozen=True)
class GraphDocument:
    directed: bool
    n: int
    edges: tuple[tuple[int, int, int], ...]
    s: int
    t: int
    labels: tuple[str, ...] | None = None

    def as_dict(self) -> dict:
        doc = {
            "directed": self.directed,
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "s": self.s,
            "t": self.t,
        }
        if self.labels is not None:
            doc["labels"] = list(self.labels)
        return doc


def parse_document(text: str) -> GraphDocument:
    """Parse and schema-check a graph document; messages name the field."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SchemaError("document root must be an object")

    for field in ("directed", "n", "edges", "s", "t"):
        if field not in raw:
            raise SchemaError(f"missing field '{field}'")
    extra = set(raw) - {"directed", "n", "edges", "s", "t", "labels"}
    if extra:
        raise SchemaError(f"unknown field(s): {', '.join(sorted(extra))}")
    if not isinstance(raw["directed"], bool):
        raise SchemaError("field 'directed' must be a boolean")
    n = raw["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise SchemaError("field 'n' must be a positive integer")
    for name in ("s", "t"):
        v = raw[name]
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
            raise SchemaError(f"field '{name}' must be a vertex index below n")
    if not isinstance(raw["edges"], list):
        raise SchemaError("field 'edges' must be a list")
    edges = []
    for i, item in enumerate(raw["edges"]):
        if (not isinstance(item, list) or len(item) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise SchemaError(f"edges[{i}] must be [u, v, cost] with integers")
        u, v, c = item
        if not (0 <= u < n and 0 <= v < n):
            raise SchemaError(f"edges[{i}] has a vertex index out of range")
        edges.append((u, v, c))
    labels = raw.get("labels")
    if labels is not None:
        if (not isinstance(labels, list) or len(labels) != n
                or not all(isinstance(x, str) for x in labels)):
            raise SchemaError("field 'labels' must list one string per vertex")
        labels = tuple(labels)
    return GraphDocument(directed=raw["directed"], n=n, edges=tuple(edges),
                         s=raw["s"], t=raw["t"], labels=labels)


def serialize_document(doc: GraphDocument) -> str:
    """Canonical JSON: fixed key order, no whitespace variance."""
    return json.dumps(doc.as_dict(), indent=2, sort_keys=False)


def document_from_graph(g) -> GraphDocument:
    return GraphDocument(
        directed=g.directed,
        n=g.n,
        edges=tuple((e.u, e.v, e.cost) for e in g.edges),
        s=g.s,
        t=g.t,
        labels=g.labels,
    )
