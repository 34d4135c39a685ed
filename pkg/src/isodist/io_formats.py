"""Versioned JSON formats, graph6 decoding, and DOT emission.

All documents carry {"format": "isodist/1"}; other versions are rejected.
"""

from __future__ import annotations

import json

from .abelian import DivisorChain
from .category import FinCat, Invariant, Morphism
from .errors import InputError
from .graphs import SimpleGraph, graph
from .poset import CoverGraph, PartialOrder, Preorder, build_preorder

FORMAT = "isodist/1"


def _check_format(doc: dict, kind: str) -> dict:
    if not isinstance(doc, dict):
        raise InputError(f"{kind} document must be a JSON object")
    version = doc.get("format", FORMAT)
    if version != FORMAT:
        raise InputError(f"unsupported format {version!r} (expected {FORMAT!r})")
    return doc


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


# ---------------------------------------------------------------------------
# orders

def order_from_json(doc: dict) -> Preorder:
    doc = _check_format(doc, "order")
    try:
        elements = doc["elements"]
        edges = [tuple(e) for e in doc.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad order document: {exc}") from None
    return build_preorder(elements, edges)


def partial_order_to_json(po: PartialOrder) -> dict:
    classes = sorted(po.classes, key=str)
    return {
        "format": FORMAT,
        "classes": [
            {"id": str(c), "members": sorted(str(x) for x in po.members[c])}
            for c in classes
        ],
        "leq": sorted(
            [str(a), str(b)] for a, b in po.leq_pairs if a != b
        ),
    }


def emit_dot(cg: CoverGraph, members=None) -> str:
    """Undirected DOT for a cover graph; vertex labels list class members
    when a membership map is given."""
    lines = ["graph cover {"]
    for v in sorted(cg.vertices, key=str):
        if members and v in members:
            label = f"{v} {{{','.join(sorted(str(m) for m in members[v]))}}}"
        else:
            label = str(v)
        lines.append(f'  "{v}" [label="{label}"];')
    for p, q in sorted(cg.edges, key=lambda e: (str(e[0]), str(e[1]))):
        lines.append(f'  "{p}" -- "{q}";')
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# graphs

def graph_from_json(doc: dict) -> SimpleGraph:
    doc = _check_format(doc, "graph")
    try:
        n = int(doc["n"])
        edges = [tuple(int(x) for x in e) for e in doc.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad graph document: {exc}") from None
    return graph(n, edges)


def graph_from_graph6(text: str) -> SimpleGraph:
    """Decode a graph6 string (n < 63 supported)."""
    s = text.strip()
    if not s:
        raise InputError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise InputError(f"invalid graph6 string {text!r}")
    n = data[0]
    if n == 63:
        raise InputError("graph6 strings with n >= 63 are not supported")
    bits = []
    for b in data[1:]:
        bits.extend((b >> k) & 1 for k in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise InputError("graph6 string too short")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return graph(n, edges)


def read_graph(text: str) -> SimpleGraph:
    """Accept either a JSON graph document or a graph6 line."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return graph_from_json(loads(stripped))
    return graph_from_graph6(stripped)


# ---------------------------------------------------------------------------
# chains

def chain_from_json(doc: dict) -> DivisorChain:
    doc = _check_format(doc, "chain")
    try:
        return DivisorChain(tuple(int(d) for d in doc["chain"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad chain document: {exc}") from None


def chain_to_json(c: DivisorChain) -> dict:
    return {"format": FORMAT, "chain": list(c.parts)}


# ---------------------------------------------------------------------------
# categories

def category_from_json(doc: dict) -> FinCat:
    doc = _check_format(doc, "category")
    try:
        objects = {}
        for obj in doc["objects"]:
            if isinstance(obj, str):
                objects[obj] = None
            else:
                objects[obj["id"]] = obj.get("card")
        morphisms = {}
        for m in doc.get("morphisms", []):
            morphisms[m["id"]] = Morphism(
                id=m["id"],
                src=m["src"],
                dst=m["dst"],
                tags=frozenset(m.get("tags", [])),
            )
        identities = dict(doc.get("identities", {}))
        compose = None
        if "compose" in doc:
            compose = {(g, f): gf for g, f, gf in doc["compose"]}
        iso_pairs = frozenset(
            frozenset(pair) for pair in doc.get("iso_pairs", [])
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad category document: {exc}") from None
    if not identities:
        # synthesize identities when absent: id_<obj>, added as morphisms
        for obj in objects:
            mid = f"id_{obj}"
            if mid not in morphisms:
                morphisms[mid] = Morphism(id=mid, src=obj, dst=obj)
            identities[obj] = mid
    return FinCat(
        objects=objects,
        morphisms=morphisms,
        identities=identities,
        compose=compose,
        iso_pairs=iso_pairs,
        iso_declared="iso_pairs" in doc,
    )


def invariant_from_json(doc: dict) -> Invariant:
    doc = _check_format(doc, "invariant")
    labels = {k: v for k, v in doc.items() if k != "format"}
    if "labels" in doc and isinstance(doc["labels"], dict):
        labels = doc["labels"]
    return Invariant(labels={str(k): _hashable(v) for k, v in labels.items()})


def _hashable(v):
    if isinstance(v, list):
        return tuple(_hashable(x) for x in v)
    if isinstance(v, dict):
        raise InputError("invariant labels must be scalars or arrays")
    return v
