import itertools

import pytest

from isodist.errors import CapabilityError, InputError
from isodist.extnat import INFINITY
from isodist.category import (
    FinCat,
    Invariant,
    Morphism,
    characteristic_metric,
    check_csb,
    check_cycle_triviality,
    check_pigeonhole_virtual,
    check_universal_factorization,
    classify_morphism,
    find_cycles,
    find_virtual_cycles,
    induced_pseudometric,
    metric_invariant,
    objects_isomorphic,
    restrict,
    union_invariant,
    universal_order,
    validate_category,
)
from isodist.presentations import (
    abelian_zero_cycle_presentation,
    dim_invariant,
    finset_fragment,
    free_group_mono_presentation,
    spaces_pi1_presentation,
    toy_vect_presentation,
    vect_fragment,
)


@pytest.fixture(scope="module")
def finset3():
    return finset_fragment([1, 2, 3])


@pytest.fixture(scope="module")
def vect2():
    return vect_fragment([0, 1, 2], p=2)


def test_finset_fragment_is_valid(finset3):
    assert validate_category(finset3) == []
    # hom(S_a, S_b) has |S_b| ^ |S_a| elements
    assert len(finset3.hom("S0", "S2")) == 3
    assert len(finset3.hom("S2", "S1")) == 8
    assert len(finset3.morphisms) == sum(
        b ** a for a in (1, 2, 3) for b in (1, 2, 3)
    )


def test_vect_fragment_is_valid(vect2):
    assert validate_category(vect2) == []
    assert len(vect2.hom("V1", "V2")) == 4
    assert vect2.objects == {"V0": 1, "V1": 2, "V2": 4}


def test_validate_reports_problems():
    bad = FinCat(
        objects={"a": None},
        morphisms={"f": Morphism("f", "a", "ghost")},
        identities={},
    )
    problems = validate_category(bad)
    assert any("unknown dst" in p for p in problems)
    assert any("missing identity" in p for p in problems)


def test_validate_broken_identity_law():
    # two parallel endomorphisms with a deliberately wrong table entry
    cat = FinCat(
        objects={"a": None},
        morphisms={
            "i": Morphism("i", "a", "a"),
            "f": Morphism("f", "a", "a"),
        },
        identities={"a": "i"},
        compose={
            ("i", "i"): "i", ("i", "f"): "f", ("f", "i"): "f",
            ("f", "f"): "i",
        },
    )
    assert validate_category(cat) == []
    worse = FinCat(
        objects=cat.objects,
        morphisms=cat.morphisms,
        identities=cat.identities,
        compose={**cat.compose, ("f", "i"): "i"},
    )
    assert any("identity law" in p for p in validate_category(worse))


def test_classify_morphism_finset(finset3):
    # the injection 0 -> 0 from S0 into S1 is mono, not epi
    k = classify_morphism(finset3, "f_S0_S1_0")
    assert k.mono and not k.epi and not k.iso
    # the fold S2 -> S0 is epi, not mono
    k = classify_morphism(finset3, "f_S2_S0_000")
    assert k.epi and not k.mono
    # a permutation of S2 is an isomorphism
    k = classify_morphism(finset3, "f_S1_S1_10")
    assert k.mono and k.epi and k.iso


def test_classify_morphism_vect(vect2):
    # V1 -> V2, x -> (x, 0): mono not epi
    k = classify_morphism(vect2, "L_V1_V2_10")
    assert k.mono and not k.epi and not k.iso
    # projection V2 -> V1 onto the first coordinate: epi not mono
    k = classify_morphism(vect2, "L_V2_V1_1_0")
    assert k.epi and not k.mono


def test_classify_needs_table():
    cat = toy_vect_presentation()
    with pytest.raises(CapabilityError):
        classify_morphism(cat, "m_V0_V1")


def test_objects_isomorphic(finset3):
    assert objects_isomorphic(finset3, "S1", "S1")
    assert not objects_isomorphic(finset3, "S0", "S1")
    doubled = finset_fragment([2, 2])
    assert objects_isomorphic(doubled, "S0", "S1")


def test_restrict_mono_keeps_only_injections(finset3):
    sub = restrict(finset3, "mono")
    assert validate_category(sub) == []
    assert all(
        classify_morphism(finset3, mid).mono for mid in sub.morphisms
    )
    # no morphism from a bigger set to a smaller one survives
    assert sub.hom("S2", "S1") == []
    assert len(sub.hom("S1", "S2")) == 6  # injections of 2 points into 3


def test_restrict_by_tag():
    cat = toy_vect_presentation()
    sub = restrict(cat, "mono")
    assert "m_V1_V2" in sub.morphisms
    assert "m_V2_V1" not in sub.morphisms


def test_restrict_tag_table_conflict(finset3):
    tagged = FinCat(
        objects=dict(finset3.objects),
        morphisms={
            **finset3.morphisms,
            "f_S2_S0_000": Morphism("f_S2_S0_000", "S2", "S0", frozenset({"mono"})),
        },
        identities=dict(finset3.identities),
        compose=finset3.compose,
    )
    with pytest.raises(InputError):
        restrict(tagged, "mono")


def test_universal_order_unrestricted_collapses():
    cat = toy_vect_presentation()
    inv = dim_invariant(cat)
    po, provenance = universal_order(cat, inv)
    assert po.classes == frozenset({0})
    assert po.members[0] == frozenset({0, 1, 2, 3})
    assert provenance[(0, 1)] == ["m_V0_V1"]


def test_universal_order_mono_restricted_is_chain():
    cat = toy_vect_presentation(restricted=True)
    inv = dim_invariant(cat)
    po, _ = universal_order(cat, inv)
    assert po.classes == frozenset({0, 1, 2, 3})
    for a, b in itertools.combinations(range(4), 2):
        assert po.leq(a, b) and not po.leq(b, a)


def test_universal_order_rejects_partial_labelling():
    cat = toy_vect_presentation()
    with pytest.raises(InputError):
        universal_order(cat, Invariant(labels={"V0": 0}))


def test_universal_order_surjectivity_check():
    cat = toy_vect_presentation()
    inv = Invariant(
        labels={f"V{d}": d for d in range(4)}, target=frozenset({0, 1, 2, 3, 99})
    )
    with pytest.raises(InputError):
        universal_order(cat, inv)


def test_check_universal_factorization_holds():
    cat = toy_vect_presentation(restricted=True)
    inv = dim_invariant(cat)
    rel = {(a, b) for a in range(4) for b in range(4) if a <= b}
    ok, factoring = check_universal_factorization(cat, inv, rel)
    assert ok
    assert (0, 3) in factoring


def test_check_universal_factorization_fails_on_coarser_target():
    # the unrestricted toy category forces 0 ~ 3, so a genuine order on
    # labels cannot receive the condensation
    cat = toy_vect_presentation()
    inv = dim_invariant(cat)
    rel = {(a, b) for a in range(4) for b in range(4)}
    ok, _ = check_universal_factorization(cat, inv, rel)
    assert ok  # the total relation receives everything
    chain = {(a, b) for a in range(4) for b in range(4) if a <= b}
    with pytest.raises(InputError):
        # m_V1_V0 maps under K to (1, 0) which the chain lacks
        check_universal_factorization(cat, inv, chain)


def test_check_universal_factorization_validates_relation():
    cat = toy_vect_presentation(restricted=True)
    inv = dim_invariant(cat)
    with pytest.raises(InputError):
        check_universal_factorization(cat, inv, {(0, 1)})  # not reflexive


def test_induced_pseudometric_chain():
    cat = toy_vect_presentation(restricted=True)
    inv = dim_invariant(cat)
    d = induced_pseudometric(cat, inv)
    assert int(d[("V1", "V3")]) == 2
    assert int(d[("V0", "V3")]) == 3
    assert int(d[("V2", "V2")]) == 0
    assert d[("V1", "V3")] == d[("V3", "V1")]


def test_induced_pseudometric_collapse_gives_zero():
    cat = toy_vect_presentation()
    d = induced_pseudometric(cat, dim_invariant(cat))
    assert all(int(v) == 0 for v in d.values())


def test_characteristic_metric():
    inv = Invariant(labels={"a": 1, "b": 1, "c": 2})
    assert characteristic_metric(inv, "a", "b") == 0
    assert characteristic_metric(inv, "a", "c") == 1


def test_metric_invariant_profiles():
    cat = toy_vect_presentation(restricted=True)
    d = induced_pseudometric(cat, dim_invariant(cat))
    profile = metric_invariant(d, "V0")
    assert {z: int(v) for z, v in profile.items()} == {
        "V0": 0, "V1": 1, "V2": 2, "V3": 3
    }
    with pytest.raises(InputError):
        metric_invariant({("a", "a"): 1}, "a")


def test_find_cycles_zero_object():
    cat = abelian_zero_cycle_presentation()
    report = find_cycles(cat)
    assert not report.truncated
    assert len(report.cycles) == 1
    w = report.cycles[0]
    assert w.objects == ("0", "Z")
    assert w.morphisms == ("into", "onto")
    assert w.trivial is False  # declared: 0 and Z are not isomorphic


def test_find_cycles_without_iso_data_reports_unknown():
    cat, _, _ = spaces_pi1_presentation()
    with_back = FinCat(
        objects=dict(cat.objects),
        morphisms={
            **cat.morphisms,
            "back": Morphism("back", "pt", "R1"),
        },
        identities=dict(cat.identities),
    )
    report = find_cycles(with_back)
    assert len(report.cycles) == 1
    assert report.cycles[0].trivial is None


def test_find_cycles_trivial_in_finset():
    doubled = finset_fragment([2, 2])
    report = find_cycles(doubled)
    assert report.cycles
    assert all(w.trivial is True for w in report.cycles)


def test_find_virtual_cycles_pi1():
    cat, pi1, dim = spaces_pi1_presentation()
    report = find_virtual_cycles(cat, pi1)
    # R1 -> S1 -> pt chains labels 1 -> Z -> 1
    nontrivial = [w for w in report.cycles if w.trivial is False]
    assert len(nontrivial) == 1
    assert nontrivial[0].objects == ("1", "Z")
    assert nontrivial[0].morphisms == ("wrap", "collapse")


def test_union_invariant_breaks_pi1_cycle():
    cat, pi1, dim = spaces_pi1_presentation()
    union = union_invariant(pi1, {o: o for o in cat.objects}, dim)
    assert union.labels == {
        "R1": ("1", 1), "S1": ("Z", 1), "pt": ("1", 0)
    }
    report = find_virtual_cycles(cat, union)
    assert all(w.trivial is not False for w in report.cycles)


def test_union_invariant_requires_total_map():
    i1 = Invariant(labels={"a": 1})
    i2 = Invariant(labels={"b": 2})
    with pytest.raises(InputError):
        union_invariant(i1, {}, i2)


def test_check_csb_finset_and_vect(finset3, vect2):
    assert check_csb(finset3, "mono") == (True, None)
    assert check_csb(finset3, "epi") == (True, None)
    assert check_csb(vect2, "mono") == (True, None)


def test_check_csb_free_groups_fails():
    cat = free_group_mono_presentation(3)
    ok, pair = check_csb(cat, "mono")
    assert not ok
    assert set(pair) == {"F2", "F3"}


def test_check_csb_needs_data():
    cat, _, _ = spaces_pi1_presentation()
    with pytest.raises(CapabilityError):
        check_csb(cat, "mono")


def test_cycle_triviality_in_restrictions(finset3):
    for kind in ("mono", "epi"):
        report = check_cycle_triviality(finset3, kind)
        assert report.cycles == ()
        assert not report.truncated


def test_pigeonhole_requires_cardinalities():
    cat = toy_vect_presentation()
    with pytest.raises(InputError):
        check_pigeonhole_virtual(cat, dim_invariant(cat))


def test_pigeonhole_full_fragment_fails_precondition(finset3):
    # non-bijective maps between equal-size sets break the precondition
    doubled = finset_fragment([2, 2])
    inv = Invariant(labels={o: c for o, c in doubled.objects.items()})
    report = check_pigeonhole_virtual(doubled, inv)
    assert not report.ok
    assert report.precondition_failures


def test_pigeonhole_mono_and_epi_fragments(finset3):
    inv = Invariant(labels={o: c for o, c in finset3.objects.items()})
    for kind in ("mono", "epi"):
        sub = restrict(finset3, kind)
        report = check_pigeonhole_virtual(sub, inv)
        assert report.ok, (kind, report)


def test_induced_pseudometric_disconnected_labels():
    cat = FinCat(
        objects={"a": None, "b": None},
        morphisms={
            "id_a": Morphism("id_a", "a", "a"),
            "id_b": Morphism("id_b", "b", "b"),
        },
        identities={"a": "id_a", "b": "id_b"},
    )
    inv = Invariant(labels={"a": 0, "b": 1})
    d = induced_pseudometric(cat, inv)
    assert d[("a", "b")] == INFINITY
    assert int(d[("a", "a")]) == 0
