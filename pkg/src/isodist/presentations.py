"""Builders for small concrete category presentations used in demos and
tests: fragments of finite sets, finite-dimensional vector spaces over a
prime field, and a few declared (table-free) toy categories."""

from __future__ import annotations

import itertools

from .category import FinCat, Invariant, Morphism
from .errors import InputError


def _close_concrete(objects, arrows):
    """Build a FinCat from concrete arrows.

    objects: dict obj_id -> (carrier tuple, cardinality)
    arrows: dict morphism id -> (src, dst, mapping dict on carriers)
    Composition is function composition; the arrow set must be closed.
    """
    by_data = {}
    for mid, (src, dst, mapping) in arrows.items():
        key = (src, dst, tuple(mapping[x] for x in objects[src][0]))
        by_data[key] = mid
    identities = {}
    for oid, (carrier, _) in objects.items():
        key = (oid, oid, tuple(carrier))
        if key not in by_data:
            raise InputError(f"identity arrow missing for {oid!r}")
        identities[oid] = by_data[key]
    compose = {}
    for gid, (gsrc, gdst, gmap) in arrows.items():
        for fid, (fsrc, fdst, fmap) in arrows.items():
            if fdst != gsrc:
                continue
            comp_map = tuple(gmap[fmap[x]] for x in objects[fsrc][0])
            gf = by_data.get((fsrc, gdst, comp_map))
            if gf is None:
                raise InputError(f"arrow set not closed under composition: {gid} o {fid}")
            compose[(gid, fid)] = gf
    return FinCat(
        objects={oid: card for oid, (_, card) in objects.items()},
        morphisms={
            mid: Morphism(id=mid, src=src, dst=dst)
            for mid, (src, dst, _) in arrows.items()
        },
        identities=identities,
        compose=compose,
    )


def finset_fragment(sizes: list[int]) -> FinCat:
    """All functions between finite sets of the given sizes.

    Objects are named S0, S1, ... with carriers range(size).
    """
    if not sizes or any(s < 1 for s in sizes):
        raise InputError("sizes must be positive")
    objects = {
        f"S{i}": (tuple(range(s)), s) for i, s in enumerate(sizes)
    }
    arrows = {}
    for (a, (ca, _)), (b, (cb, _)) in itertools.product(objects.items(), repeat=2):
        for images in itertools.product(cb, repeat=len(ca)):
            mid = f"f_{a}_{b}_" + "".join(str(v) for v in images)
            arrows[mid] = (a, b, dict(zip(ca, images)))
    return _close_concrete(objects, arrows)


def _linear_maps(p, m, n):
    """All m -> n linear maps over F_p as tuples of columns."""
    # a map is determined by the images of the m basis vectors in F_p^n
    vectors = list(itertools.product(range(p), repeat=n))
    return itertools.product(vectors, repeat=m)


def _apply_linear(cols, vec, p, n):
    out = [0] * n
    for c, col in zip(vec, cols):
        for i in range(n):
            out[i] = (out[i] + c * col[i]) % p
    return tuple(out)


def vect_fragment(dims: list[int], p: int = 2) -> FinCat:
    """All linear maps between F_p^d for the given dimensions (with a full
    composition table; keep dims small)."""
    if any(d < 0 for d in dims):
        raise InputError("dimensions must be nonnegative")
    objects = {
        f"V{d}": (tuple(itertools.product(range(p), repeat=d)), p**d)
        for d in dims
    }
    arrows = {}
    for da, db in itertools.product(dims, repeat=2):
        a, b = f"V{da}", f"V{db}"
        ca = objects[a][0]
        for cols in _linear_maps(p, da, db):
            mapping = {v: _apply_linear(cols, v, p, db) for v in ca}
            mid = f"L_{a}_{b}_" + "_".join(
                "".join(str(x) for x in col) for col in cols
            )
            if da == 0:
                mid = f"L_{a}_{b}_z"
            arrows[mid] = (a, b, mapping)
    return _close_concrete(objects, arrows)


def dim_invariant(cat: FinCat) -> Invariant:
    """Dimension labels for vect-style objects named V<d>."""
    return Invariant(labels={o: int(o[1:]) for o in cat.objects})


def toy_vect_presentation(max_dim: int = 3, restricted: bool = False) -> FinCat:
    """Table-free presentation of vector spaces of dims 0..max_dim.

    Unrestricted: one morphism for every ordered pair of objects (every
    hom-set of Vect is nonempty).  Restricted: only the injections, i.e.
    morphisms d1 -> d2 with d1 <= d2, tagged "mono".
    """
    dims = range(max_dim + 1)
    objects = {f"V{d}": None for d in dims}
    morphisms = {}
    identities = {}
    for d in dims:
        mid = f"id_V{d}"
        morphisms[mid] = Morphism(
            id=mid, src=f"V{d}", dst=f"V{d}", tags=frozenset({"mono", "epi"})
        )
        identities[f"V{d}"] = mid
    for d1, d2 in itertools.product(dims, repeat=2):
        if d1 == d2:
            continue
        if restricted and d1 > d2:
            continue
        tags = {"mono"} if d1 < d2 else set()
        mid = f"m_V{d1}_V{d2}"
        morphisms[mid] = Morphism(
            id=mid, src=f"V{d1}", dst=f"V{d2}", tags=frozenset(tags)
        )
    return FinCat(
        objects=objects, morphisms=morphisms, identities=identities, compose=None
    )


def spaces_pi1_presentation():
    """The line -> circle -> point chain of pointed spaces, with fundamental
    group and dimension labellings."""
    objects = {"R1": None, "S1": None, "pt": None}
    morphisms = {
        "id_R1": Morphism("id_R1", "R1", "R1"),
        "id_S1": Morphism("id_S1", "S1", "S1"),
        "id_pt": Morphism("id_pt", "pt", "pt"),
        "wrap": Morphism("wrap", "R1", "S1"),
        "collapse": Morphism("collapse", "S1", "pt"),
    }
    identities = {"R1": "id_R1", "S1": "id_S1", "pt": "id_pt"}
    cat = FinCat(objects=objects, morphisms=morphisms, identities=identities)
    pi1 = Invariant(labels={"R1": "1", "S1": "Z", "pt": "1"})
    dim = Invariant(labels={"R1": 1, "S1": 1, "pt": 0})
    return cat, pi1, dim


def free_group_mono_presentation(n: int = 3) -> FinCat:
    """Declared monomorphisms both ways between the free groups F2 and Fn,
    with no isomorphism: a non-CSB presentation."""
    objects = {"F2": None, f"F{n}": None}
    morphisms = {
        "id_F2": Morphism("id_F2", "F2", "F2", frozenset({"mono"})),
        f"id_F{n}": Morphism(f"id_F{n}", f"F{n}", f"F{n}", frozenset({"mono"})),
        "incl": Morphism("incl", "F2", f"F{n}", frozenset({"mono"})),
        "dehn": Morphism("dehn", f"F{n}", "F2", frozenset({"mono"})),
    }
    identities = {"F2": "id_F2", f"F{n}": f"id_F{n}"}
    return FinCat(
        objects=objects,
        morphisms=morphisms,
        identities=identities,
        iso_pairs=frozenset(),
        iso_declared=True,
    )


def abelian_zero_cycle_presentation() -> FinCat:
    """0 -> Z -> 0 in abelian groups: the textbook nontrivial cycle."""
    objects = {"0": None, "Z": None}
    morphisms = {
        "id_0": Morphism("id_0", "0", "0"),
        "id_Z": Morphism("id_Z", "Z", "Z"),
        "into": Morphism("into", "0", "Z"),
        "onto": Morphism("onto", "Z", "0"),
    }
    identities = {"0": "id_0", "Z": "id_Z"}
    return FinCat(
        objects=objects,
        morphisms=morphisms,
        identities=identities,
        iso_pairs=frozenset(),
        iso_declared=True,
    )
