"""Chromatic number and chromatic polynomial invariants on finite simple
graphs, the induced order on chromatic-shaped polynomials, and the
coefficient distance."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ComputationLimitError, InputError

DEFAULT_EMBED_CAP = 10


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset  # pairs (u, v) with u < v

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise InputError(f"bad edge {e!r} for n={self.n}")

    def adjacency(self) -> list[set]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def graph(n: int, edges) -> SimpleGraph:
    norm = set()
    for u, v in edges:
        if u == v:
            raise InputError(f"loop at vertex {u}")
        norm.add((min(u, v), max(u, v)))
    return SimpleGraph(n=n, edges=frozenset(norm))


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ascending by degree, trimmed."""

    coeffs: tuple

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise InputError("trailing zero coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        return _trim([a + b for a, b in itertools.zip_longest(
            self.coeffs, other.coeffs, fillvalue=0)])

    def __sub__(self, other):
        return _trim([a - b for a, b in itertools.zip_longest(
            self.coeffs, other.coeffs, fillvalue=0)])

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return _trim(out)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            mag = "" if abs(c) == 1 and k > 0 else str(abs(c))
            var = "" if k == 0 else "t" if k == 1 else f"t^{k}"
            sign = "-" if c < 0 else ("+" if terms else "")
            terms.append(f"{sign}{mag}{var}" if terms else
                         ("-" if c < 0 else "") + f"{mag}{var}")
        return "".join(terms)


def _trim(coeffs) -> IntPolynomial:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return IntPolynomial(tuple(cs))


def poly(coeffs) -> IntPolynomial:
    return _trim(coeffs)


def _monomial(k: int) -> IntPolynomial:
    return IntPolynomial((0,) * k + (1,))


def _greedy_clique(adj, n) -> list[int]:
    order = sorted(range(n), key=lambda v: -len(adj[v]))
    clique = []
    for v in order:
        if all(u in adj[v] for u in clique):
            clique.append(v)
    return clique


def _k_colorable(adj, n, k) -> bool:
    colors = [-1] * n
    # DSATUR-style ordering computed on the fly
    def pick():
        best, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v] != -1:
                continue
            sat = len({colors[u] for u in adj[v] if colors[u] != -1})
            key = (sat, len(adj[v]))
            if key > best_key:
                best, best_key = v, key
        return best

    def assign(count):
        if count == n:
            return True
        v = pick()
        used = {colors[u] for u in adj[v] if colors[u] != -1}
        seen_fresh = False
        for c in range(k):
            if c in used:
                continue
            if c not in set(colors):  # fresh color: trying one suffices
                if seen_fresh:
                    break
                seen_fresh = True
            colors[v] = c
            if assign(count + 1):
                return True
            colors[v] = -1
        return False

    return assign(0)


def chromatic_number(g: SimpleGraph) -> int:
    """Least k with a proper k-coloring, by exact search bracketed between a
    clique lower bound and a greedy upper bound."""
    if g.n == 0:
        raise InputError("chromatic number of the empty graph is undefined here")
    adj = g.adjacency()
    lower = max(1, len(_greedy_clique(adj, g.n)))
    # greedy upper bound, largest-degree-first
    order = sorted(range(g.n), key=lambda v: -len(adj[v]))
    coloring = {}
    for v in order:
        used = {coloring[u] for u in adj[v] if u in coloring}
        c = 0
        while c in used:
            c += 1
        coloring[v] = c
    upper = max(coloring.values()) + 1
    for k in range(lower, upper):
        if _k_colorable(adj, g.n, k):
            return k
    return upper


def chromatic_distance(g1: SimpleGraph, g2: SimpleGraph) -> int:
    return abs(chromatic_number(g1) - chromatic_number(g2))


def _contract(n, edges: frozenset, e) -> tuple:
    u, v = e  # u < v; merge v into u, relabel to keep vertices dense
    relabel = {}
    for w in range(n):
        if w == v:
            relabel[w] = u if u < v else u - 1
        else:
            relabel[w] = w if w < v else w - 1
    new_edges = set()
    for a, b in edges:
        a2, b2 = relabel[a], relabel[b]
        if a2 == b2:
            continue
        new_edges.add((min(a2, b2), max(a2, b2)))
    return n - 1, frozenset(new_edges)


def _pick_edge(edges: frozenset, adj_sets):
    # prefer an edge closing a triangle; exact either way
    best, best_common = None, -1
    for u, v in edges:
        common = len(adj_sets[u] & adj_sets[v])
        if common > best_common:
            best, best_common = (u, v), common
            if common > 0:
                break
    return best


def _chrompoly_connected(n, edges: frozenset, memo: dict) -> IntPolynomial:
    key = (n, edges)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if not edges:
        result = _monomial(n)
    else:
        adj = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        e = _pick_edge(edges, adj)
        deleted = _chrompoly_connected(n, edges - {e}, memo)
        cn, ce = _contract(n, edges, e)
        contracted = _chrompoly_connected(cn, ce, memo)
        result = deleted - contracted
    memo[key] = result
    return result


def _components(g: SimpleGraph):
    adj = g.adjacency()
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        yield sorted(comp)


def chromatic_polynomial(g: SimpleGraph, max_edges: int = 64) -> IntPolynomial:
    """Deletion-contraction, multiplicative over connected components."""
    if len(g.edges) > max_edges:
        raise ComputationLimitError(
            f"{len(g.edges)} edges exceeds the deletion-contraction cap {max_edges}"
        )
    memo: dict = {}
    result = IntPolynomial((1,))
    for comp in _components(g):
        index = {v: i for i, v in enumerate(comp)}
        sub_edges = frozenset(
            (min(index[u], index[v]), max(index[u], index[v]))
            for u, v in g.edges
            if u in index and v in index
        )
        result = result * _chrompoly_connected(len(comp), sub_edges, memo)
    return result


def is_chromatic_shaped(f: IntPolynomial) -> bool:
    """Monic with coefficient signs alternating from the top degree down."""
    if not f.coeffs or f.coeffs[-1] != 1:
        return False
    n = f.degree
    return all(
        f.coeff(k) == 0 or (f.coeff(k) > 0) == ((n - k) % 2 == 0)
        for k in range(n + 1)
    )


def chrompoly_leq(f: IntPolynomial, g: IntPolynomial) -> bool:
    """The order on chromatic-shaped polynomials: lower degree first, equal
    degrees compared coefficientwise in absolute value."""
    for h in (f, g):
        if not is_chromatic_shaped(h):
            raise InputError(f"not a chromatic-shaped polynomial: {h}")
    if f.degree != g.degree:
        return f.degree < g.degree
    return all(abs(f.coeff(k)) <= abs(g.coeff(k)) for k in range(f.degree + 1))


def _top_down_abs(f: IntPolynomial) -> list[int]:
    return [abs(f.coeff(f.degree - k)) for k in range(f.degree + 1)]


def chrompoly_distance(g1: SimpleGraph, g2: SimpleGraph) -> int:
    """|n1 - n2| plus the L1 distance between the top-aligned absolute
    coefficient sequences of the two chromatic polynomials."""
    f1 = chromatic_polynomial(g1)
    f2 = chromatic_polynomial(g2)
    b1, b2 = _top_down_abs(f1), _top_down_abs(f2)
    length = max(len(b1), len(b2))
    b1 += [0] * (length - len(b1))
    b2 += [0] * (length - len(b2))
    return abs(g1.n - g2.n) + sum(abs(a - b) for a, b in zip(b1, b2))


def embeds(g1: SimpleGraph, g2: SimpleGraph, cap: int = DEFAULT_EMBED_CAP):
    """Injective vertex map carrying edges of g1 to edges of g2.

    Returns (True, mapping) or (False, None).
    """
    if g1.n > cap:
        raise ComputationLimitError(
            f"embedding search capped at {cap} source vertices"
        )
    if g1.n > g2.n or len(g1.edges) > len(g2.edges):
        return False, None
    adj1 = g1.adjacency()
    adj2 = g2.adjacency()
    order = sorted(range(g1.n), key=lambda v: -len(adj1[v]))
    mapping: dict[int, int] = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in range(g2.n):
            if w in used:
                continue
            if len(adj1[v]) > len(adj2[w]):
                continue
            if any(u in mapping and mapping[u] not in adj2[w] for u in adj1[v]):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if extend(0):
        return True, dict(sorted(mapping.items()))
    return False, None
