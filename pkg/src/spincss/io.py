"""Model documents: the JSON surface for hypergraphs and spin models.

A document carries a vertex count, an edge list, and optionally one
coupling per edge and an inverse temperature.  Parsing canonicalizes:
every edge is sorted, the edge list is sorted lexicographically with
couplings permuted in tandem, and serialization emits a fixed field order
with shortest-round-trip floats, so parse -> serialize is byte-stable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .errors import ModelFormatError
from .hypergraph import Hypergraph
from .spins import SpinModel

FORMAT_VERSION = 1


@dataclass(frozen=True)
class ModelDocument:
    """Canonicalized file content; convert with to_hypergraph / to_spin_model."""

    k: int
    edges: tuple[tuple[int, ...], ...]
    couplings: tuple[float, ...] | None = None
    beta: float | None = None
    format_version: int = FORMAT_VERSION


def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ModelFormatError(f"{what} must be an integer, got {value!r}")
    return value


def _require_real(value: Any, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ModelFormatError(f"{what} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ModelFormatError(f"{what} must be finite, got {value!r}")
    return value


def document_from_parts(
    k: int,
    edges,
    couplings=None,
    beta: float | None = None,
) -> ModelDocument:
    """Validate and canonicalize raw parts into a ModelDocument."""
    k = _require_int(k, "k")
    if k < 0:
        raise ModelFormatError(f"k must be nonnegative, got {k}")
    if not isinstance(edges, (list, tuple)):
        raise ModelFormatError("edges must be a list of integer lists")
    clean_edges = []
    for i, edge in enumerate(edges):
        if not isinstance(edge, (list, tuple)):
            raise ModelFormatError(f"edge {i} must be an integer list")
        members = [_require_int(v, f"edge {i} entry") for v in edge]
        if not members:
            raise ModelFormatError(f"edge {i} is empty")
        for v in members:
            if not 0 <= v < k:
                raise ModelFormatError(f"edge {i}: vertex {v} out of range for k={k}")
        if len(set(members)) != len(members):
            raise ModelFormatError(f"edge {i} lists a vertex twice")
        clean_edges.append(tuple(sorted(members)))

    clean_couplings = None
    if couplings is not None:
        if not isinstance(couplings, (list, tuple)):
            raise ModelFormatError("couplings must be a list of numbers")
        if len(couplings) != len(clean_edges):
            raise ModelFormatError(
                f"{len(couplings)} couplings for {len(clean_edges)} edges"
            )
        clean_couplings = [_require_real(j, f"coupling {i}") for i, j in enumerate(couplings)]

    clean_beta = None
    if beta is not None:
        clean_beta = _require_real(beta, "beta")
        if clean_beta < 0:
            raise ModelFormatError(f"beta must be >= 0, got {clean_beta}")

    # canonical edge order, couplings riding along (stable: equal edges keep
    # their coupling order)
    order = sorted(range(len(clean_edges)), key=lambda i: clean_edges[i])
    edges_sorted = tuple(clean_edges[i] for i in order)
    couplings_sorted = (
        tuple(clean_couplings[i] for i in order) if clean_couplings is not None else None
    )
    return ModelDocument(
        k=k, edges=edges_sorted, couplings=couplings_sorted, beta=clean_beta
    )


def parse_model(text: str) -> ModelDocument:
    """Parse and canonicalize a model document from JSON text."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(raw, dict):
        raise ModelFormatError("top level must be an object")
    known = {"format_version", "k", "edges", "couplings", "beta"}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ModelFormatError(f"unknown fields: {', '.join(unknown)}")
    for required in ("format_version", "k", "edges"):
        if required not in raw:
            raise ModelFormatError(f"missing required field {required!r}")
    version = _require_int(raw["format_version"], "format_version")
    if version != FORMAT_VERSION:
        raise ModelFormatError(f"unsupported format_version {version}")
    return document_from_parts(
        raw["k"], raw["edges"], raw.get("couplings"), raw.get("beta")
    )


def serialize_model(doc: ModelDocument) -> str:
    """Canonical JSON text for a document, newline-terminated."""
    payload: dict[str, Any] = {
        "format_version": doc.format_version,
        "k": doc.k,
        "edges": [list(e) for e in doc.edges],
    }
    if doc.couplings is not None:
        payload["couplings"] = list(doc.couplings)
    if doc.beta is not None:
        payload["beta"] = doc.beta
    return json.dumps(payload, separators=(",", ":")) + "\n"


def to_hypergraph(doc: ModelDocument) -> Hypergraph:
    return Hypergraph(doc.k, doc.edges)


def to_spin_model(doc: ModelDocument) -> SpinModel:
    """Document with couplings and beta as a SpinModel; error when either is missing."""
    if doc.couplings is None:
        raise ModelFormatError("document has no couplings (provide them or pass --J)")
    if doc.beta is None:
        raise ModelFormatError("document has no beta (provide it or pass --beta)")
    return SpinModel(to_hypergraph(doc), doc.couplings, doc.beta)


def document_from_hypergraph(
    h: Hypergraph, couplings=None, beta: float | None = None
) -> ModelDocument:
    return document_from_parts(h.num_vertices, h.edges, couplings, beta)
