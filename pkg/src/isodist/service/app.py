"""FastAPI service wrapping the core engines.

Every endpoint is a pure function of its request body; errors map to
HTTP 422 (invalid input) and 413 (computation limits).
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import abelian, category, forms, graphs, io_formats, orders, poset
from ..errors import ComputationLimitError, InputError
from ..extnat import ExtendedNat
from . import models

app = FastAPI(title="isodist", version="0.1.0")


@app.exception_handler(InputError)
async def _input_error(request, exc):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ComputationLimitError)
async def _limit_error(request, exc):
    return JSONResponse(status_code=413, content={"detail": str(exc)})


def _dist(value: ExtendedNat) -> models.DistanceResponse:
    return models.DistanceResponse(distance=None if value.is_infinite else int(value))


@app.get("/health", response_model=models.HealthResponse)
def health():
    return models.HealthResponse(status="ok", format=io_formats.FORMAT)


# ---------------------------------------------------------------------------
# poset

def _condense(req: models.OrderRequest):
    pre = poset.build_preorder(req.elements, req.edges)
    return poset.condense(pre)


def _po_response(po) -> models.PartialOrderResponse:
    cg = poset.cover_graph(po)
    return models.PartialOrderResponse(
        classes=[
            models.OrderClass(
                id=str(c), members=sorted(str(m) for m in po.members[c])
            )
            for c in sorted(po.classes, key=str)
        ],
        leq=sorted((str(a), str(b)) for a, b in po.leq_pairs if a != b),
        cover_edges=sorted((str(p), str(q)) for p, q in cg.edges),
    )


@app.post("/poset/condense", response_model=models.PartialOrderResponse)
def poset_condense(req: models.OrderRequest):
    return _po_response(_condense(req))


@app.post("/poset/distance", response_model=models.DistanceResponse)
def poset_distance(req: models.OrderDistanceRequest):
    po = _condense(req)
    cg = poset.cover_graph(po)
    return _dist(poset.graph_distance(cg, po.class_of(req.p), po.class_of(req.q)))


# ---------------------------------------------------------------------------
# graphs

def _graph(g: models.GraphModel) -> graphs.SimpleGraph:
    return graphs.graph(g.n, g.edges)


@app.post("/graph/chromatic-number", response_model=models.ChromaticNumberResponse)
def graph_chromatic(req: models.GraphModel):
    return models.ChromaticNumberResponse(chromatic_number=graphs.chromatic_number(_graph(req)))


@app.post("/graph/chromatic-polynomial", response_model=models.ChromaticPolynomialResponse)
def graph_poly(req: models.GraphModel):
    chi = graphs.chromatic_polynomial(_graph(req))
    return models.ChromaticPolynomialResponse(coeffs=list(chi.coeffs), text=str(chi))


@app.post("/graph/distance", response_model=models.DistanceResponse)
def graph_distance(req: models.GraphPairRequest):
    g1, g2 = _graph(req.g1), _graph(req.g2)
    if req.metric == "chi":
        return models.DistanceResponse(distance=graphs.chromatic_distance(g1, g2))
    if req.metric == "poly":
        return models.DistanceResponse(distance=graphs.chrompoly_distance(g1, g2))
    raise InputError(f"unknown metric {req.metric!r}")


@app.post("/graph/embeds", response_model=models.EmbedsResponse)
def graph_embeds(req: models.GraphPairRequest):
    ok, mapping = graphs.embeds(_graph(req.g1), _graph(req.g2))
    return models.EmbedsResponse(embeds=ok, mapping=mapping)


# ---------------------------------------------------------------------------
# abelian

@app.post("/abelian/canonical", response_model=models.ChainModel)
def abelian_canonical(req: models.CanonicalChainRequest):
    return models.ChainModel(chain=list(abelian.canonical_chain(req.moduli).parts))


@app.post("/abelian/distance", response_model=models.DistanceResponse)
def abelian_distance(req: models.ChainPairRequest):
    a = abelian.chain(req.a.chain)
    b = abelian.chain(req.b.chain)
    return models.DistanceResponse(distance=abelian.chain_distance(a, b))


@app.post("/abelian/leq", response_model=models.ChainLeqResponse)
def abelian_leq(req: models.ChainPairRequest):
    return models.ChainLeqResponse(
        leq=abelian.chain_leq(abelian.chain(req.a.chain), abelian.chain(req.b.chain))
    )


@app.post("/abelian/neighbors", response_model=models.ChainNeighborsResponse)
def abelian_neighbors(req: models.ChainNeighborsRequest):
    c = abelian.chain(req.chain)
    primes = set(req.primes) if req.primes else None
    above, below = abelian.chain_neighbors(c, primes)
    return models.ChainNeighborsResponse(
        covers_above=sorted(list(x.parts) for x in above),
        covered_below=sorted(list(x.parts) for x in below),
    )


# ---------------------------------------------------------------------------
# integer orders

@app.post("/order/distance", response_model=models.DistanceResponse)
def order_distance(req: models.IntPairRequest):
    return models.DistanceResponse(distance=orders.order_distance(req.m, req.n))


@app.post("/order/neighbors", response_model=models.IntNeighborsResponse)
def order_neighbors(req: models.IntNeighborsRequest):
    above, below = orders.divisor_cover_neighbors(req.n, req.primes)
    return models.IntNeighborsResponse(above=sorted(above), below=sorted(below))


# ---------------------------------------------------------------------------
# categories

def _category(model: models.CategoryModel) -> category.FinCat:
    doc = {
        "format": io_formats.FORMAT,
        "objects": [{"id": o.id, "card": o.card} for o in model.objects],
        "morphisms": [
            {"id": m.id, "src": m.src, "dst": m.dst, "tags": m.tags}
            for m in model.morphisms
        ],
        "identities": model.identities,
    }
    if model.compose is not None:
        doc["compose"] = [list(t) for t in model.compose]
    if model.iso_pairs is not None:
        doc["iso_pairs"] = [list(t) for t in model.iso_pairs]
    cat = io_formats.category_from_json(doc)
    problems = category.validate_category(cat)
    if problems:
        raise InputError("invalid category: " + "; ".join(problems[:5]))
    return cat


@app.post("/category/universal-order", response_model=models.PartialOrderResponse)
def category_order(req: models.CategoryOrderRequest):
    cat = _category(req.category)
    if req.restrict:
        cat = category.restrict(cat, req.restrict)
    inv = category.Invariant(labels=dict(req.labels))
    po, _ = category.universal_order(cat, inv)
    return _po_response(po)


@app.post("/category/distance", response_model=models.DistanceResponse)
def category_distance(req: models.CategoryDistanceRequest):
    cat = _category(req.category)
    if req.restrict:
        cat = category.restrict(cat, req.restrict)
    inv = category.Invariant(labels=dict(req.labels))
    table = category.induced_pseudometric(cat, inv)
    if (req.x, req.y) not in table:
        raise InputError(f"unknown objects ({req.x!r}, {req.y!r})")
    return _dist(table[(req.x, req.y)])


# ---------------------------------------------------------------------------
# forms

@app.post("/forms/minors", response_model=models.MinorsResponse)
def forms_minors(req: models.MinorsRequest):
    f = forms.parse_poly(req.f)
    sc = forms.heisenberg_algebra(f, req.p)
    M = forms.linear_form_matrix(sc)
    mins = forms.minors(M, req.r)
    span = forms.quadratic_span_dim(mins, req.p, sc.n) if req.r == 2 else None
    return models.MinorsResponse(
        n=sc.n, m=sc.m, minors=[str(x) for x in mins], span_dim=span
    )
