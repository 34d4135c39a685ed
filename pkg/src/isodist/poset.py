"""Finite pre-orders, condensation to partial orders, cover graphs, and the
shortest-path distance on cover graphs.

Element ids are arbitrary hashable values; they are compared only for
equality, with deterministic tie-breaking done on their string form.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

from .errors import ComputationLimitError, InputError
from .extnat import INFINITY, ExtendedNat

DEFAULT_MAX_ELEMENTS = 1000


def max_elements() -> int:
    return int(os.environ.get("ISODIST_MAX_ELEMENTS", DEFAULT_MAX_ELEMENTS))


@dataclass(frozen=True)
class Preorder:
    """A reflexive-transitive relation stored as a full reachability table."""

    elements: frozenset
    reach: frozenset  # pairs (a, b) with a reachable-to b

    def leq(self, a, b) -> bool:
        return (a, b) in self.reach


@dataclass(frozen=True)
class PartialOrder:
    """Condensation of a preorder: classes named by their least member."""

    classes: frozenset
    members: Mapping[Hashable, frozenset]
    leq_pairs: frozenset  # reflexive

    def leq(self, a, b) -> bool:
        return (a, b) in self.leq_pairs

    def lt(self, a, b) -> bool:
        return a != b and (a, b) in self.leq_pairs

    def class_of(self, element):
        for cid, mem in self.members.items():
            if element in mem:
                return cid
        raise InputError(f"element {element!r} not in any class")


@dataclass(frozen=True)
class CoverGraph:
    """Undirected Hasse diagram.  Edges are stored as (p, q) with q covering p."""

    vertices: frozenset
    edges: frozenset  # directed pairs (p, q), q covers p

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for p, q in self.edges:
            adj[p].add(q)
            adj[q].add(p)
        return adj


def _sort_key(x):
    return (str(type(x)), str(x))


def build_preorder(elements: Iterable, edges: Iterable) -> Preorder:
    """Reflexive-transitive closure of a set of generating edges."""
    elems = frozenset(elements)
    if len(elems) > max_elements():
        raise ComputationLimitError(
            f"{len(elems)} elements exceeds cap {max_elements()} "
            "(set ISODIST_MAX_ELEMENTS to raise it)"
        )
    succ = {e: set() for e in elems}
    for a, b in edges:
        if a not in elems or b not in elems:
            raise InputError(f"edge ({a!r}, {b!r}) has an endpoint outside the element set")
        succ[a].add(b)
    reach = set()
    for start in elems:
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        reach.update((start, y) for y in seen)
    return Preorder(elements=elems, reach=frozenset(reach))


def condense(pre: Preorder) -> PartialOrder:
    """Collapse mutually reachable elements into classes; the induced order
    on classes is antisymmetric."""
    remaining = set(pre.elements)
    members = {}
    rep_of = {}
    for e in sorted(pre.elements, key=_sort_key):
        if e not in remaining:
            continue
        cls = frozenset(
            x for x in remaining if pre.leq(e, x) and pre.leq(x, e)
        )
        rep = min(cls, key=_sort_key)
        members[rep] = cls
        for x in cls:
            rep_of[x] = rep
        remaining -= cls
    leq = frozenset(
        (rep_of[a], rep_of[b]) for (a, b) in pre.reach
    )
    return PartialOrder(
        classes=frozenset(members), members=members, leq_pairs=leq
    )


def cover_graph(po: PartialOrder) -> CoverGraph:
    """Covering pairs by brute force: q covers p iff p<q with nothing between."""
    edges = set()
    for p in po.classes:
        for q in po.classes:
            if not po.lt(p, q):
                continue
            if any(po.lt(p, r) and po.lt(r, q) for r in po.classes):
                continue
            edges.add((p, q))
    return CoverGraph(vertices=po.classes, edges=frozenset(edges))


def graph_distance(cg: CoverGraph, p, q) -> ExtendedNat:
    """Shortest undirected path length in the cover graph; infinity when the
    endpoints lie in different components."""
    if p not in cg.vertices:
        raise InputError(f"unknown vertex {p!r}")
    if q not in cg.vertices:
        raise InputError(f"unknown vertex {q!r}")
    if p == q:
        return ExtendedNat(0)
    adj = cg.adjacency()
    dist = {p: 0}
    queue = deque([p])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == q:
                    return ExtendedNat(dist[y])
                queue.append(y)
    return INFINITY


def all_distances(cg: CoverGraph, p) -> dict:
    """BFS distances from p to every vertex (infinity for unreachable)."""
    if p not in cg.vertices:
        raise InputError(f"unknown vertex {p!r}")
    adj = cg.adjacency()
    dist = {p: 0}
    queue = deque([p])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return {
        v: (ExtendedNat(dist[v]) if v in dist else INFINITY) for v in cg.vertices
    }


@dataclass(frozen=True)
class MetricViolation:
    kind: str  # "identity" | "symmetry" | "triangle"
    points: tuple

    def __str__(self):
        return f"{self.kind} violated at {self.points}"


def check_pseudometric(points: Iterable, d: Mapping) -> list[MetricViolation]:
    """Report every failure of the pseudo-metric axioms for the table d.

    d maps ordered pairs to nonnegative ints or ExtendedNat values.
    """
    pts = sorted(set(points), key=_sort_key)

    def dist(x, y) -> ExtendedNat:
        try:
            v = d[(x, y)]
        except KeyError:
            raise InputError(f"distance table missing entry ({x!r}, {y!r})") from None
        return v if isinstance(v, ExtendedNat) else ExtendedNat(v)

    violations = []
    for x in pts:
        if dist(x, x) != 0:
            violations.append(MetricViolation("identity", (x,)))
    for x in pts:
        for y in pts:
            if dist(x, y) != dist(y, x):
                if _sort_key(x) < _sort_key(y):
                    violations.append(MetricViolation("symmetry", (x, y)))
    for x in pts:
        for z in pts:
            for y in pts:
                if dist(x, y) > dist(x, z) + dist(z, y):
                    violations.append(MetricViolation("triangle", (x, z, y)))
    return violations
