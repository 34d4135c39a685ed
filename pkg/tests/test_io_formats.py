import pytest

from isodist import io_formats
from isodist.abelian import chain
from isodist.category import validate_category
from isodist.errors import InputError
from isodist.graphs import graph
from isodist.poset import condense, cover_graph


def test_loads_rejects_bad_json():
    with pytest.raises(InputError):
        io_formats.loads("{not json")


def test_format_version_enforced():
    with pytest.raises(InputError):
        io_formats.order_from_json({"format": "isodist/99", "elements": []})
    # documents without a format field are accepted as the current version
    pre = io_formats.order_from_json({"elements": ["a"], "edges": []})
    assert pre.elements == frozenset({"a"})


def test_order_round_trip():
    doc = {
        "format": io_formats.FORMAT,
        "elements": ["a", "b", "c"],
        "edges": [["a", "b"], ["b", "a"], ["b", "c"]],
    }
    po = condense(io_formats.order_from_json(doc))
    out = io_formats.partial_order_to_json(po)
    assert out["classes"] == [
        {"id": "a", "members": ["a", "b"]},
        {"id": "c", "members": ["c"]},
    ]
    assert out["leq"] == [["a", "c"]]


def test_emit_dot_deterministic():
    doc = {"elements": [1, 2, 3, 6], "edges": [[1, 2], [1, 3], [2, 6], [3, 6]]}
    po = condense(io_formats.order_from_json(doc))
    dot = io_formats.emit_dot(cover_graph(po), po.members)
    assert dot.splitlines()[0] == "graph cover {"
    assert '  "1" -- "2";' in dot
    assert dot == io_formats.emit_dot(cover_graph(po), po.members)


def test_graph_json():
    g = io_formats.graph_from_json({"n": 3, "edges": [[0, 1], [1, 2]]})
    assert g == graph(3, [(0, 1), (1, 2)])
    with pytest.raises(InputError):
        io_formats.graph_from_json({"edges": []})


def test_graph6_known_strings():
    # "Cl" is the 4-cycle, "C~" the complete graph on 4 vertices
    c4 = io_formats.graph_from_graph6("Cl")
    assert c4 == graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    k4 = io_formats.graph_from_graph6("C~")
    assert len(k4.edges) == 6
    with pytest.raises(InputError):
        io_formats.graph_from_graph6("")
    with pytest.raises(InputError):
        io_formats.graph_from_graph6("C")


def test_read_graph_accepts_both():
    assert io_formats.read_graph('{"n": 2, "edges": [[0, 1]]}') == graph(2, [(0, 1)])
    assert io_formats.read_graph("Cl") == graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_chain_round_trip():
    c = chain([2, 2, 4])
    assert io_formats.chain_from_json(io_formats.chain_to_json(c)) == c
    with pytest.raises(InputError):
        io_formats.chain_from_json({"chain": [3, 2]})


def test_category_from_json_minimal():
    doc = {
        "objects": ["a", "b"],
        "morphisms": [{"id": "f", "src": "a", "dst": "b"}],
    }
    cat = io_formats.category_from_json(doc)
    assert validate_category(cat) == []
    assert cat.identities == {"a": "id_a", "b": "id_b"}
    assert not cat.iso_declared


def test_category_from_json_with_iso_pairs():
    doc = {
        "objects": [{"id": "a", "card": 2}, {"id": "b", "card": 2}],
        "morphisms": [],
        "iso_pairs": [["a", "b"]],
    }
    cat = io_formats.category_from_json(doc)
    assert cat.iso_declared
    assert frozenset({"a", "b"}) in cat.iso_pairs
    assert cat.objects == {"a": 2, "b": 2}


def test_invariant_from_json_forms():
    inv = io_formats.invariant_from_json({"a": 1, "b": [1, 2]})
    assert inv.labels == {"a": 1, "b": (1, 2)}
    inv2 = io_formats.invariant_from_json({"labels": {"a": "x"}})
    assert inv2.labels == {"a": "x"}
    with pytest.raises(InputError):
        io_formats.invariant_from_json({"a": {"no": "dicts"}})
