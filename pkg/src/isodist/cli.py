"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 computation limit
exceeded.  Output is deterministic: identical inputs give byte-identical
output.
"""

from __future__ import annotations

import json
import sys

import click

from . import abelian, category, forms, graphs, io_formats, orders, poset
from .errors import ComputationLimitError, InputError


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _echo_json(obj):
    click.echo(json.dumps(obj, indent=2, sort_keys=True))


@click.group()
def cli():
    """Partial orders and distances from isomorphism invariants."""


# ---------------------------------------------------------------------------
# poset

@cli.group("poset")
def poset_group():
    """Finite pre-orders, condensation, cover graphs."""


def _load_order(path: str):
    pre = io_formats.order_from_json(io_formats.loads(_read(path)))
    return poset.condense(pre)


@poset_group.command("condense")
@click.argument("path")
@click.option("--output", type=click.Choice(["json", "dot", "text"]), default="json")
def poset_condense(path, output):
    po = _load_order(path)
    if output == "json":
        _echo_json(io_formats.partial_order_to_json(po))
    elif output == "dot":
        click.echo(io_formats.emit_dot(poset.cover_graph(po), po.members))
    else:
        for c in sorted(po.classes, key=str):
            click.echo(f"{c}: {{{','.join(sorted(str(m) for m in po.members[c]))}}}")


@poset_group.command("cover")
@click.argument("path")
@click.option("--output", type=click.Choice(["json", "dot"]), default="dot")
def poset_cover(path, output):
    po = _load_order(path)
    cg = poset.cover_graph(po)
    if output == "dot":
        click.echo(io_formats.emit_dot(cg, po.members))
    else:
        _echo_json(
            {
                "format": io_formats.FORMAT,
                "vertices": sorted(str(v) for v in cg.vertices),
                "edges": sorted([str(p), str(q)] for p, q in cg.edges),
            }
        )


def _find_element(po, name: str):
    # CLI arguments are strings; match elements by their string form
    for members in po.members.values():
        for x in members:
            if str(x) == name:
                return x
    raise InputError(f"element {name!r} not in the order")


@poset_group.command("dist")
@click.argument("path")
@click.argument("p")
@click.argument("q")
def poset_dist(path, p, q):
    po = _load_order(path)
    cg = poset.cover_graph(po)
    a = po.class_of(_find_element(po, p))
    b = po.class_of(_find_element(po, q))
    click.echo(str(poset.graph_distance(cg, a, b)))


# ---------------------------------------------------------------------------
# category

@cli.group("category")
def category_group():
    """Finite presented categories with invariant labels."""


def _load_cat_inv(cat_path, inv_path):
    cat = io_formats.category_from_json(io_formats.loads(_read(cat_path)))
    problems = category.validate_category(cat)
    if problems:
        raise InputError("invalid category: " + "; ".join(problems[:5]))
    inv = io_formats.invariant_from_json(io_formats.loads(_read(inv_path)))
    return cat, inv


@category_group.command("order")
@click.argument("cat_path")
@click.argument("inv_path")
@click.option("--output", type=click.Choice(["json", "dot"]), default="json")
@click.option("--restrict", "kind", type=str, default=None,
              help="restrict to morphisms of this kind (mono/epi/tag) first")
def category_order(cat_path, inv_path, output, kind):
    cat, inv = _load_cat_inv(cat_path, inv_path)
    if kind:
        cat = category.restrict(cat, kind)
    po, _ = category.universal_order(cat, inv)
    if output == "json":
        _echo_json(io_formats.partial_order_to_json(po))
    else:
        click.echo(io_formats.emit_dot(poset.cover_graph(po), po.members))


@category_group.command("dist")
@click.argument("cat_path")
@click.argument("inv_path")
@click.argument("x")
@click.argument("y")
@click.option("--restrict", "kind", type=str, default=None)
def category_dist(cat_path, inv_path, x, y, kind):
    cat, inv = _load_cat_inv(cat_path, inv_path)
    if kind:
        cat = category.restrict(cat, kind)
    d = category.induced_pseudometric(cat, inv)
    if (x, y) not in d:
        raise InputError(f"unknown objects ({x!r}, {y!r})")
    click.echo(str(d[(x, y)]))


@category_group.command("cycles")
@click.argument("cat_path")
@click.option("--max-len", type=int, default=category.DEFAULT_CYCLE_CAP)
@click.option("--invariant", "inv_path", default=None,
              help="report virtual cycles for this invariant instead")
def category_cycles(cat_path, max_len, inv_path):
    cat = io_formats.category_from_json(io_formats.loads(_read(cat_path)))
    if inv_path:
        inv = io_formats.invariant_from_json(io_formats.loads(_read(inv_path)))
        report = category.find_virtual_cycles(cat, inv, max_len=max_len)
    else:
        report = category.find_cycles(cat, max_len=max_len)
    _echo_json(
        {
            "format": io_formats.FORMAT,
            "truncated": report.truncated,
            "cycles": [
                {
                    "kind": w.kind,
                    "through": [str(o) for o in w.objects],
                    "morphisms": [str(m) for m in w.morphisms],
                    "trivial": w.trivial,
                }
                for w in report.cycles
            ],
        }
    )


# ---------------------------------------------------------------------------
# graph

@cli.group("graph")
def graph_group():
    """Chromatic invariants on finite simple graphs."""


@graph_group.command("chromatic")
@click.argument("path")
def graph_chromatic(path):
    g = io_formats.read_graph(_read(path))
    click.echo(str(graphs.chromatic_number(g)))


@graph_group.command("poly")
@click.argument("path")
@click.option("--output", type=click.Choice(["text", "json"]), default="text")
def graph_poly(path, output):
    g = io_formats.read_graph(_read(path))
    chi = graphs.chromatic_polynomial(g)
    if output == "text":
        click.echo(str(chi))
    else:
        _echo_json({"format": io_formats.FORMAT, "coeffs": list(chi.coeffs)})


@graph_group.command("dist")
@click.argument("path1")
@click.argument("path2")
@click.option("--metric", type=click.Choice(["chi", "poly"]), default="chi")
def graph_dist(path1, path2, metric):
    g1 = io_formats.read_graph(_read(path1))
    g2 = io_formats.read_graph(_read(path2))
    if metric == "chi":
        click.echo(str(graphs.chromatic_distance(g1, g2)))
    else:
        click.echo(str(graphs.chrompoly_distance(g1, g2)))


@graph_group.command("embeds")
@click.argument("path1")
@click.argument("path2")
@click.option("--cap", type=int, default=graphs.DEFAULT_EMBED_CAP)
def graph_embeds(path1, path2, cap):
    g1 = io_formats.read_graph(_read(path1))
    g2 = io_formats.read_graph(_read(path2))
    ok, mapping = graphs.embeds(g1, g2, cap=cap)
    _echo_json(
        {
            "format": io_formats.FORMAT,
            "embeds": ok,
            "mapping": mapping if ok else None,
        }
    )


# ---------------------------------------------------------------------------
# abelian

@cli.group("abelian")
def abelian_group():
    """Divisor-chain order and distances for finite abelian groups."""


@abelian_group.command("canon")
@click.argument("moduli")
def abelian_canon(moduli):
    parsed = [int(m) for m in moduli.split(",") if m.strip()]
    click.echo(str(abelian.canonical_chain(parsed)))


@abelian_group.command("dist")
@click.argument("chain1")
@click.argument("chain2")
def abelian_dist(chain1, chain2):
    a = abelian.parse_chain(chain1)
    b = abelian.parse_chain(chain2)
    click.echo(str(abelian.chain_distance(a, b)))


@abelian_group.command("leq")
@click.argument("chain1")
@click.argument("chain2")
def abelian_leq(chain1, chain2):
    a = abelian.parse_chain(chain1)
    b = abelian.parse_chain(chain2)
    click.echo("true" if abelian.chain_leq(a, b) else "false")


@abelian_group.command("neighbors")
@click.argument("chain_text", metavar="CHAIN")
@click.option("--primes", default=None, help="comma-separated primes for downward moves")
def abelian_neighbors(chain_text, primes):
    c = abelian.parse_chain(chain_text)
    prime_set = None
    if primes:
        prime_set = {int(p) for p in primes.split(",") if p.strip()}
    above, below = abelian.chain_neighbors(c, prime_set)
    _echo_json(
        {
            "format": io_formats.FORMAT,
            "covers_above": sorted([list(x.parts) for x in above]),
            "covered_below": sorted([list(x.parts) for x in below]),
        }
    )


# ---------------------------------------------------------------------------
# order

@cli.group("order")
def order_group():
    """Divisibility order on positive integers (group-order invariant)."""


@order_group.command("dist")
@click.argument("m", type=int)
@click.argument("n", type=int)
def order_dist(m, n):
    click.echo(str(orders.order_distance(m, n)))


@order_group.command("neighbors")
@click.argument("n", type=int)
@click.option("--primes", required=True, help="comma-separated primes")
def order_neighbors(n, primes):
    prime_set = {int(p) for p in primes.split(",") if p.strip()}
    above, below = orders.divisor_cover_neighbors(n, prime_set)
    _echo_json(
        {
            "format": io_formats.FORMAT,
            "above": sorted(above),
            "below": sorted(below),
        }
    )


# ---------------------------------------------------------------------------
# forms

@cli.group("forms")
def forms_group():
    """Heisenberg-type algebras over F_p and minors of the form matrix."""


@forms_group.command("minors")
@click.option("--p", "prime", type=int, required=True)
@click.option("--f", "poly_text", required=True, help='defining polynomial, e.g. "t^2-1"')
@click.option("--r", "r", type=int, required=True)
def forms_minors(prime, poly_text, r):
    f = forms.parse_poly(poly_text)
    sc = forms.heisenberg_algebra(f, prime)
    M = forms.linear_form_matrix(sc)
    for m in forms.minors(M, r):
        click.echo(str(m))


@forms_group.command("matrix")
@click.option("--p", "prime", type=int, required=True)
@click.option("--f", "poly_text", required=True)
def forms_matrix(prime, poly_text):
    f = forms.parse_poly(poly_text)
    sc = forms.heisenberg_algebra(f, prime)
    M = forms.linear_form_matrix(sc)
    _echo_json(
        {
            "format": io_formats.FORMAT,
            "p": M.p,
            "nvars": M.nvars,
            "rows": [[list(form) for form in row] for row in M.rows],
        }
    )


# ---------------------------------------------------------------------------
# service

@cli.command("serve")
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Abort:
        sys.exit(1)
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(1)
    except ComputationLimitError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    sys.exit(0)


if __name__ == "__main__":
    main()
