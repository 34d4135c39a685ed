"""Finite presented categories with invariant labellings.

A presentation lists objects (with optional cardinalities), morphisms, and
optionally a full composition table.  Without a table, morphism kinds
(mono/epi/iso) must be declared via tags or iso pairs; they are never
guessed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Optional

import networkx as nx

from .errors import CapabilityError, InputError
from .extnat import ExtendedNat
from .poset import (
    PartialOrder,
    all_distances,
    build_preorder,
    check_pseudometric,
    condense,
    cover_graph,
)

DEFAULT_CYCLE_CAP = 8


@dataclass(frozen=True)
class Morphism:
    id: str
    src: str
    dst: str
    tags: frozenset = frozenset()


@dataclass(frozen=True)
class FinCat:
    """Finite category presentation."""

    objects: Mapping[str, Optional[int]]  # object id -> optional cardinality
    morphisms: Mapping[str, Morphism]
    identities: Mapping[str, str]  # object id -> morphism id
    compose: Optional[Mapping[tuple, str]] = None  # (g, f) -> g after f
    iso_pairs: frozenset = frozenset()  # frozensets of declared-isomorphic objects
    iso_declared: bool = False  # iso_pairs are authoritative even when empty

    def hom(self, x: str, y: str) -> list[Morphism]:
        return [m for m in self.morphisms.values() if m.src == x and m.dst == y]

    def is_identity(self, mid: str) -> bool:
        return mid in set(self.identities.values())


@dataclass(frozen=True)
class Invariant:
    """A total labelling of objects by opaque comparable values."""

    labels: Mapping[str, Hashable]
    target: Optional[frozenset] = None

    def label(self, obj: str):
        try:
            return self.labels[obj]
        except KeyError:
            raise InputError(f"object {obj!r} carries no invariant label") from None

    def image(self) -> frozenset:
        return frozenset(self.labels.values())


@dataclass(frozen=True)
class CyclicWitness:
    kind: str  # "plain" | "virtual"
    morphisms: tuple  # morphism ids in cyclic order
    objects: tuple  # for plain: objects visited; for virtual: labels visited
    trivial: Optional[bool]  # None when isomorphism data is unavailable


@dataclass(frozen=True)
class CycleReport:
    cycles: tuple
    truncated: bool


def validate_category(cat: FinCat) -> list[str]:
    """Report structural violations; an empty list means the presentation
    is well formed."""
    problems = []
    for m in cat.morphisms.values():
        if m.src not in cat.objects:
            problems.append(f"morphism {m.id}: unknown src {m.src!r}")
        if m.dst not in cat.objects:
            problems.append(f"morphism {m.id}: unknown dst {m.dst!r}")
    for obj in cat.objects:
        mid = cat.identities.get(obj)
        if mid is None:
            problems.append(f"object {obj!r}: missing identity")
            continue
        m = cat.morphisms.get(mid)
        if m is None:
            problems.append(f"object {obj!r}: identity {mid!r} not a morphism")
        elif m.src != obj or m.dst != obj:
            problems.append(f"object {obj!r}: identity {mid!r} is not an endomorphism")
    if cat.compose is not None:
        problems.extend(_validate_table(cat))
    return problems


def _validate_table(cat: FinCat) -> list[str]:
    problems = []
    comp = cat.compose
    morphs = cat.morphisms
    for (g, f), gf in comp.items():
        if g not in morphs or f not in morphs or gf not in morphs:
            problems.append(f"composition ({g},{f})->{gf}: unknown morphism id")
            continue
        if morphs[f].dst != morphs[g].src:
            problems.append(f"composition ({g},{f}): not composable")
        elif morphs[gf].src != morphs[f].src or morphs[gf].dst != morphs[g].dst:
            problems.append(f"composition ({g},{f})->{gf}: wrong endpoints")
    for g in morphs.values():
        for f in morphs.values():
            if f.dst == g.src and (g.id, f.id) not in comp:
                problems.append(f"composition table missing entry ({g.id},{f.id})")
    # unitality
    for obj, i in cat.identities.items():
        for m in morphs.values():
            if m.src == obj and comp.get((m.id, i)) not in (None, m.id):
                problems.append(f"identity law fails: {m.id} o {i} != {m.id}")
            if m.dst == obj and comp.get((i, m.id)) not in (None, m.id):
                problems.append(f"identity law fails: {i} o {m.id} != {m.id}")
    # associativity
    for h in morphs.values():
        for g in morphs.values():
            if g.dst != h.src:
                continue
            hg = comp.get((h.id, g.id))
            for f in morphs.values():
                if f.dst != g.src:
                    continue
                gf = comp.get((g.id, f.id))
                if hg is None or gf is None:
                    continue
                left = comp.get((hg, f.id))
                right = comp.get((h.id, gf))
                if left != right:
                    problems.append(
                        f"associativity fails on ({h.id},{g.id},{f.id})"
                    )
    return problems


@dataclass(frozen=True)
class MorphismKind:
    mono: bool
    epi: bool
    iso: bool


def classify_morphism(cat: FinCat, mid: str) -> MorphismKind:
    """Exhaustive mono/epi/iso test against the composition table."""
    if cat.compose is None:
        raise CapabilityError("classify_morphism needs a composition table")
    if mid not in cat.morphisms:
        raise InputError(f"unknown morphism {mid!r}")
    f = cat.morphisms[mid]
    comp = cat.compose
    into = [m for m in cat.morphisms.values() if m.dst == f.src]
    outof = [m for m in cat.morphisms.values() if m.src == f.dst]
    mono = all(
        not (g.src == h.src and comp[(mid, g.id)] == comp[(mid, h.id)] and g.id != h.id)
        for g in into
        for h in into
    )
    epi = all(
        not (g.dst == h.dst and comp[(g.id, mid)] == comp[(h.id, mid)] and g.id != h.id)
        for g in outof
        for h in outof
    )
    iso = any(
        comp[(g.id, mid)] == cat.identities[f.src]
        and comp[(mid, g.id)] == cat.identities[f.dst]
        for g in cat.morphisms.values()
        if g.src == f.dst and g.dst == f.src
    )
    return MorphismKind(mono=mono, epi=epi, iso=iso)


def objects_isomorphic(cat: FinCat, x: str, y: str) -> bool:
    """Declared iso pairs take precedence; otherwise derive from the table."""
    if x == y:
        return True
    if cat.iso_pairs or cat.iso_declared:
        if frozenset((x, y)) in cat.iso_pairs:
            return True
        # declared data present but pair absent: only trust it exclusively
        # when no table exists
        if cat.compose is None:
            return False
    if cat.compose is not None:
        return any(
            classify_morphism(cat, m.id).iso for m in cat.hom(x, y)
        )
    raise CapabilityError(
        "isomorphism test needs a composition table or declared iso pairs"
    )


def _morphism_has_kind(cat: FinCat, mid: str, kind: str, use_table: bool) -> bool:
    m = cat.morphisms[mid]
    if use_table:
        k = classify_morphism(cat, mid)
        derived = k.mono if kind == "mono" else k.epi if kind == "epi" else None
        if derived is None:
            raise InputError(f"unknown morphism kind {kind!r}")
        if m.tags and kind in ("mono", "epi"):
            declared = kind in m.tags
            if declared != derived:
                raise InputError(
                    f"declared tag on {mid!r} disagrees with the composition table"
                )
        return derived
    return kind in m.tags


def restrict(cat: FinCat, kind: str) -> FinCat:
    """Subcategory with all objects and only the morphisms of the given kind.

    kind is "mono"/"epi" (computed from the table when present, otherwise
    read from declared tags) or any declared tag string.
    """
    use_table = cat.compose is not None and kind in ("mono", "epi")
    keep = set(cat.identities.values())
    for mid in cat.morphisms:
        if _morphism_has_kind(cat, mid, kind, use_table):
            keep.add(mid)
    new_compose = None
    if cat.compose is not None:
        new_compose = {
            (g, f): gf
            for (g, f), gf in cat.compose.items()
            if g in keep and f in keep and gf in keep
        }
    return FinCat(
        objects=dict(cat.objects),
        morphisms={mid: m for mid, m in cat.morphisms.items() if mid in keep},
        identities=dict(cat.identities),
        compose=new_compose,
        iso_pairs=cat.iso_pairs,
    )


def _check_invariant(cat: FinCat, inv: Invariant):
    for obj in cat.objects:
        inv.label(obj)
    if inv.target is not None and inv.image() != frozenset(inv.target):
        raise InputError("invariant is not surjective onto its declared target")


def universal_order(cat: FinCat, inv: Invariant):
    """The partial order on invariant values generated by morphism chains.

    Returns (PartialOrder on label values, provenance) where provenance maps
    each generating edge (label_src, label_dst) to the contributing morphism
    ids.
    """
    _check_invariant(cat, inv)
    values = set(inv.labels[o] for o in cat.objects)
    if inv.target is not None:
        values |= set(inv.target)
    provenance: dict[tuple, list[str]] = {}
    edges = set()
    for m in cat.morphisms.values():
        a, b = inv.label(m.src), inv.label(m.dst)
        edges.add((a, b))
        provenance.setdefault((a, b), []).append(m.id)
    pre = build_preorder(values, edges)
    po = condense(pre)
    return po, {k: sorted(v) for k, v in provenance.items()}


def check_universal_factorization(cat: FinCat, inv: Invariant, relation, kmap=None):
    """Verify the universal property against a thin target.

    relation: a pre-order on label values, given as a set of ordered pairs.
    kmap: functor data, morphism id -> pair of label values; defaults to the
    map induced by the invariant.  Returns (True, factoring map) or
    (False, failing pair).
    """
    _check_invariant(cat, inv)
    rel = set(relation)
    values = set(inv.labels[o] for o in cat.objects)
    if inv.target is not None:
        values |= set(inv.target)
    for v in values:
        if (v, v) not in rel:
            raise InputError(f"target relation is not reflexive at {v!r}")
    for (a, b) in rel:
        for (c, d) in rel:
            if b == c and (a, d) not in rel:
                raise InputError(
                    f"target relation is not transitive: missing ({a!r}, {d!r})"
                )
    if kmap is None:
        kmap = {
            m.id: (inv.label(m.src), inv.label(m.dst))
            for m in cat.morphisms.values()
        }
    for m in cat.morphisms.values():
        pair = kmap.get(m.id)
        if pair != (inv.label(m.src), inv.label(m.dst)):
            raise InputError(f"K disagrees with the invariant on morphism {m.id!r}")
        if pair not in rel:
            raise InputError(
                f"K is not a functor into the target: relation {pair!r} is absent"
            )
    po, _ = universal_order(cat, inv)
    factoring = {}
    for (a, b) in po.leq_pairs:
        # lift the class relation back to representative labels
        for la in po.members[a]:
            for lb in po.members[b]:
                if (la, lb) not in rel:
                    return False, (la, lb)
                factoring[(la, lb)] = (la, lb)
    return True, factoring


def induced_pseudometric(cat: FinCat, inv: Invariant) -> dict:
    """Distance table on objects: cover-graph distance between the
    condensation classes of their labels."""
    po, _ = universal_order(cat, inv)
    cg = cover_graph(po)
    cls = {o: po.class_of(inv.label(o)) for o in cat.objects}
    dist_from = {c: all_distances(cg, c) for c in set(cls.values())}
    return {
        (x, y): dist_from[cls[x]][cls[y]]
        for x in cat.objects
        for y in cat.objects
    }


def characteristic_metric(inv: Invariant, x: str, y: str) -> int:
    return 0 if inv.label(x) == inv.label(y) else 1


def metric_invariant(d: Mapping, x) -> dict:
    """The distance profile z -> d(x, z); requires d to be a pseudo-metric."""
    points = sorted({p for pair in d for p in pair}, key=str)
    violations = check_pseudometric(points, d)
    if violations:
        raise InputError(
            "distance table violates pseudo-metric axioms: "
            + "; ".join(str(v) for v in violations[:3])
        )
    if x not in points:
        raise InputError(f"unknown point {x!r}")
    return {
        z: (v if isinstance(v, ExtendedNat) else ExtendedNat(v))
        for z, v in ((z, d[(x, z)]) for z in points)
    }


def _object_digraph(cat: FinCat) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(cat.objects)
    for m in cat.morphisms.values():
        if cat.is_identity(m.id):
            continue
        g.add_edge(m.src, m.dst)
    return g


def _least_morphism(cat: FinCat, pred) -> str:
    return min((m.id for m in cat.morphisms.values() if pred(m)), default=None)


def find_cycles(cat: FinCat, max_len: int = DEFAULT_CYCLE_CAP) -> CycleReport:
    """Simple directed cycles (length >= 2) in the object graph, one witness
    per cycle up to rotation."""
    g = _object_digraph(cat)
    witnesses = []
    truncated = False
    for nodes in nx.simple_cycles(g, length_bound=max_len):
        if len(nodes) < 2:
            continue
        start = nodes.index(min(nodes))
        nodes = nodes[start:] + nodes[:start]
        morphs = []
        for i, x in enumerate(nodes):
            y = nodes[(i + 1) % len(nodes)]
            morphs.append(
                _least_morphism(
                    cat,
                    lambda m, x=x, y=y: m.src == x
                    and m.dst == y
                    and not cat.is_identity(m.id),
                )
            )
        try:
            trivial = all(
                objects_isomorphic(cat, nodes[0], z) for z in nodes[1:]
            )
        except CapabilityError:
            trivial = None
        witnesses.append(
            CyclicWitness(
                kind="plain",
                morphisms=tuple(morphs),
                objects=tuple(nodes),
                trivial=trivial,
            )
        )
    truncated = _may_exceed_cap(g, max_len)
    witnesses.sort(key=lambda w: (len(w.objects), w.objects))
    return CycleReport(cycles=tuple(witnesses), truncated=truncated)


def _may_exceed_cap(g: nx.DiGraph, max_len: int) -> bool:
    # conservative: a simple cycle longer than the cap needs a strongly
    # connected component with more than max_len nodes
    return any(len(c) > max_len for c in nx.strongly_connected_components(g))


def find_virtual_cycles(
    cat: FinCat, inv: Invariant, max_len: int = DEFAULT_CYCLE_CAP
) -> CycleReport:
    """Morphism sequences whose labels chain cyclically.

    Nontrivial witnesses come from simple cycles of the label graph (nodes:
    label values, one arc per morphism with distinct endpoint labels); a
    trivial witness is emitted per label that carries a label-preserving
    morphism.
    """
    _check_invariant(cat, inv)
    lg = nx.DiGraph()
    lg.add_nodes_from(set(inv.labels[o] for o in cat.objects))
    loops = {}
    for m in cat.morphisms.values():
        a, b = inv.label(m.src), inv.label(m.dst)
        if a == b:
            if not cat.is_identity(m.id):
                loops.setdefault(a, m.id)
            continue
        lg.add_edge(a, b)
    witnesses = []
    for label, mid in sorted(loops.items(), key=lambda kv: str(kv[0])):
        witnesses.append(
            CyclicWitness(
                kind="virtual",
                morphisms=(mid, mid),
                objects=(label, label),
                trivial=True,
            )
        )
    truncated = False
    for nodes in nx.simple_cycles(lg, length_bound=max_len):
        if len(nodes) < 2:
            continue
        start = nodes.index(min(nodes, key=str))
        nodes = nodes[start:] + nodes[:start]
        morphs = []
        for i, a in enumerate(nodes):
            b = nodes[(i + 1) % len(nodes)]
            morphs.append(
                _least_morphism(
                    cat,
                    lambda m, a=a, b=b: inv.label(m.src) == a and inv.label(m.dst) == b,
                )
            )
        witnesses.append(
            CyclicWitness(
                kind="virtual",
                morphisms=tuple(morphs),
                objects=tuple(nodes),
                trivial=False,
            )
        )
    truncated = _may_exceed_cap(lg, max_len)
    return CycleReport(cycles=tuple(witnesses), truncated=truncated)


def union_invariant(i1: Invariant, gmap: Mapping[str, str], i2: Invariant) -> Invariant:
    """Pair labelling x -> (I1[x], I2[G(x)]) for a functor object map G."""
    labels = {}
    for x, l1 in i1.labels.items():
        gx = gmap.get(x)
        if gx is None:
            raise InputError(f"object map is not total: missing {x!r}")
        if gx not in i2.labels:
            raise InputError(f"image {gx!r} carries no label under the second invariant")
        labels[x] = (l1, i2.labels[gx])
    return Invariant(labels=labels)


def _kind_hom_exists(cat: FinCat, x: str, y: str, kind: str) -> bool:
    use_table = cat.compose is not None
    return any(
        not cat.is_identity(m.id)
        and _morphism_has_kind(cat, m.id, kind, use_table)
        for m in cat.hom(x, y)
    )


def check_csb(cat: FinCat, kind: str):
    """Cantor-Schroeder-Bernstein check: kind-morphisms both ways must force
    isomorphism.  Returns (True, None) or (False, counterexample pair)."""
    if kind not in ("mono", "epi"):
        raise InputError(f"kind must be 'mono' or 'epi', got {kind!r}")
    if cat.compose is None and not any(m.tags for m in cat.morphisms.values()):
        raise CapabilityError("check_csb needs a composition table or declared tags")
    objs = sorted(cat.objects)
    for x, y in itertools.combinations(objs, 2):
        if _kind_hom_exists(cat, x, y, kind) and _kind_hom_exists(cat, y, x, kind):
            if not objects_isomorphic(cat, x, y):
                return False, (x, y)
    return True, None


def check_cycle_triviality(cat: FinCat, kind: str, max_len: int = DEFAULT_CYCLE_CAP):
    """All cycles in the kind-restricted subcategory should be trivial when
    the CSB property holds; returns the list of nontrivial cycles found."""
    sub = restrict(cat, kind)
    report = find_cycles(sub, max_len=max_len)
    violations = tuple(w for w in report.cycles if w.trivial is False)
    return CycleReport(cycles=violations, truncated=report.truncated)


@dataclass(frozen=True)
class PigeonholeReport:
    precondition_failures: tuple  # morphism ids between equal-card objects, not iso
    nontrivial_virtual_cycles: tuple

    @property
    def ok(self) -> bool:
        return not self.precondition_failures and not self.nontrivial_virtual_cycles


def check_pigeonhole_virtual(cat: FinCat, inv: Invariant) -> PigeonholeReport:
    """Pigeonhole property plus triviality of all virtual cycles for the
    invariant paired with cardinality."""
    for obj, card in cat.objects.items():
        if card is None:
            raise InputError(f"object {obj!r} has no cardinality")
    failures = []
    for m in cat.morphisms.values():
        if cat.objects[m.src] == cat.objects[m.dst]:
            if cat.compose is not None:
                iso = classify_morphism(cat, m.id).iso
            elif cat.iso_pairs or cat.iso_declared or m.tags:
                iso = "iso" in m.tags or frozenset((m.src, m.dst)) in cat.iso_pairs
            else:
                raise CapabilityError("pigeonhole check needs iso data")
            if not iso:
                failures.append(m.id)
    if failures:
        return PigeonholeReport(tuple(sorted(failures)), ())
    card_inv = Invariant(labels={o: c for o, c in cat.objects.items()})
    union = union_invariant(inv, {o: o for o in cat.objects}, card_inv)
    report = find_virtual_cycles(cat, union)
    bad = tuple(w for w in report.cycles if w.trivial is False)
    return PigeonholeReport((), bad)
