"""Class-2 algebra pipeline over prime fields: Heisenberg-type structure
constants from F_p[t]/(f), the matrix of linear forms, r x r minors, and
linear-span comparison of quadratic generators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import sympy

from .errors import InputError


def _check_prime(p: int):
    if not sympy.isprime(p) or p <= 2:
        raise InputError(f"p must be a prime > 2, got {p}")


def parse_poly(text: str) -> tuple:
    """Parse a univariate integer polynomial in t, e.g. "t^2-1", into an
    ascending coefficient tuple."""
    t = sympy.Symbol("t")
    try:
        expr = sympy.sympify(text.replace("^", "**"))
        poly = sympy.Poly(expr, t)
    except (sympy.SympifyError, sympy.PolynomialError) as exc:
        raise InputError(f"cannot parse polynomial {text!r}: {exc}") from None
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# arithmetic in F_p[t]/(f)

def _poly_mul_mod(a: tuple, b: tuple, f: tuple, p: int) -> tuple:
    d = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    # reduce mod monic f
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for i in range(d + 1):
                prod[k - d + i] = (prod[k - d + i] - c * f[i]) % p
    return tuple(prod[:d]) + (0,) * (d - min(d, len(prod)))


# ---------------------------------------------------------------------------
# structure constants and the matrix of linear forms

@dataclass(frozen=True)
class StructureConstants:
    p: int
    n: int  # dim of the abelianization part
    m: int  # dim of the derived part
    lam: tuple  # lam[i][j] = tuple of m coefficients of [e_i, e_j]

    def bracket(self, i: int, j: int) -> tuple:
        return self.lam[i][j]


def structure_constants(p: int, n: int, m: int, lam) -> StructureConstants:
    lam = tuple(tuple(tuple(c % p for c in lam[i][j]) for j in range(n)) for i in range(n))
    sc = StructureConstants(p=p, n=n, m=m, lam=lam)
    for i in range(n):
        for j in range(n):
            if len(lam[i][j]) != m:
                raise InputError("structure constant vectors must have length m")
            if any((lam[i][j][k] + lam[j][i][k]) % p != 0 for k in range(m)):
                raise InputError(f"structure constants not antisymmetric at ({i},{j})")
    return sc


def heisenberg_algebra(f: tuple, p: int) -> StructureConstants:
    """Structure constants of the graded Lie algebra of the unitriangular
    group over F_p[t]/(f): basis a-coordinates then b-coordinates, bracket
    [(a1,b1),(a2,b2)] = a1*b2 - a2*b1 in the quotient ring."""
    _check_prime(p)
    f = tuple(c % p for c in f)
    if len(f) < 2 or f[-1] != 1:
        raise InputError("f must be monic of degree >= 1")
    d = len(f) - 1
    n, m = 2 * d, d

    def basis_vec(i):
        return tuple(1 if k == i else 0 for k in range(d))

    lam = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            ai, bi = (basis_vec(i), None) if i < d else (None, basis_vec(i - d))
            aj, bj = (basis_vec(j), None) if j < d else (None, basis_vec(j - d))
            if ai is not None and bj is not None:
                lam[i][j] = _poly_mul_mod(ai, bj, f, p)
            elif bi is not None and aj is not None:
                prod = _poly_mul_mod(aj, bi, f, p)
                lam[i][j] = tuple((-c) % p for c in prod)
            else:
                lam[i][j] = (0,) * m
    return structure_constants(p, n, m, lam)


@dataclass(frozen=True)
class LinearFormMatrix:
    """m x n matrix whose entries are linear forms in x_1..x_nvars over F_p,
    each stored as its coefficient vector."""

    p: int
    nvars: int
    rows: tuple  # rows[i][j] = coefficient tuple of length nvars

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0


def linear_form_matrix(sc: StructureConstants) -> LinearFormMatrix:
    """Entry (i, j) is the form sum_l lam[l][j][i] * x_l."""
    rows = tuple(
        tuple(
            tuple(sc.lam[l][j][i] % sc.p for l in range(sc.n))
            for j in range(sc.n)
        )
        for i in range(sc.m)
    )
    return LinearFormMatrix(p=sc.p, nvars=sc.n, rows=rows)


def matrix_from_entries(p: int, nvars: int, rows) -> LinearFormMatrix:
    rows = tuple(tuple(tuple(c % p for c in form) for form in row) for row in rows)
    for row in rows:
        for form in row:
            if len(form) != nvars:
                raise InputError("every entry must be a form in all variables")
    return LinearFormMatrix(p=p, nvars=nvars, rows=rows)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over F_p

@dataclass(frozen=True)
class FpMultiPoly:
    p: int
    nvars: int
    terms: tuple  # sorted ((exponent tuple, coeff), ...), coeffs in 1..p-1

    def is_zero(self) -> bool:
        return not self.terms

    def total_degrees(self) -> set:
        return {sum(e) for e, _ in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.terms:
            mono = "*".join(
                f"x{i+1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            else:
                chunks.append(f"{c}*{mono}")
        return " + ".join(chunks)


def _mk(p, nvars, mapping) -> FpMultiPoly:
    terms = tuple(
        (e, c % p) for e, c in sorted(mapping.items()) if c % p
    )
    return FpMultiPoly(p=p, nvars=nvars, terms=terms)


def mp_from_linear_form(form: tuple, p: int) -> FpMultiPoly:
    nvars = len(form)
    mapping = {}
    for i, c in enumerate(form):
        if c % p:
            exps = tuple(1 if k == i else 0 for k in range(nvars))
            mapping[exps] = c
    return _mk(p, nvars, mapping)


def mp_add(a: FpMultiPoly, b: FpMultiPoly) -> FpMultiPoly:
    mapping = dict(a.terms)
    for e, c in b.terms:
        mapping[e] = mapping.get(e, 0) + c
    return _mk(a.p, a.nvars, mapping)


def mp_scale(a: FpMultiPoly, k: int) -> FpMultiPoly:
    return _mk(a.p, a.nvars, {e: c * k for e, c in a.terms})


def mp_mul(a: FpMultiPoly, b: FpMultiPoly) -> FpMultiPoly:
    mapping: dict = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            e = tuple(x + y for x, y in zip(ea, eb))
            mapping[e] = mapping.get(e, 0) + ca * cb
    return _mk(a.p, a.nvars, mapping)


def mp_normalized(a: FpMultiPoly) -> FpMultiPoly:
    """Scale so the leading (lexicographically least) monomial has
    coefficient 1; used to compare polynomials up to scalar."""
    if a.is_zero():
        return a
    lead = a.terms[0][1]
    return mp_scale(a, pow(lead, -1, a.p))


# ---------------------------------------------------------------------------
# minors

def _det(entries, p, nvars) -> FpMultiPoly:
    """Laplace expansion along the first row of a square matrix of
    FpMultiPoly entries."""
    size = len(entries)
    if size == 1:
        return entries[0][0]
    acc = _mk(p, nvars, {})
    for j in range(size):
        piv = entries[0][j]
        if piv.is_zero():
            continue
        minor = [
            [entries[r][c] for c in range(size) if c != j]
            for r in range(1, size)
        ]
        term = mp_mul(piv, _det(minor, p, nvars))
        if j % 2:
            term = mp_scale(term, -1)
        acc = mp_add(acc, term)
    return acc


def minors(M: LinearFormMatrix, r: int) -> tuple:
    """All nonzero r x r minors, deduplicated up to scalar multiples."""
    mrows, ncols = M.shape
    if r < 1 or r > min(mrows, ncols):
        raise InputError(f"r={r} out of range for a {mrows}x{ncols} matrix")
    polys = [[mp_from_linear_form(form, M.p) for form in row] for row in M.rows]
    out = {}
    for rows in itertools.combinations(range(mrows), r):
        for cols in itertools.combinations(range(ncols), r):
            sub = [[polys[i][j] for j in cols] for i in rows]
            det = _det(sub, M.p, M.nvars)
            if not det.is_zero():
                norm = mp_normalized(det)
                out[norm.terms] = norm
    return tuple(out[k] for k in sorted(out))


def basis_change(M: LinearFormMatrix, phi, gamma) -> LinearFormMatrix:
    """Transform the matrix by invertible matrices acting as
    gamma^T . M(phi x) . phi."""
    p, nvars = M.p, M.nvars
    mrows, ncols = M.shape
    phi = [[c % p for c in row] for row in phi]
    gamma = [[c % p for c in row] for row in gamma]
    if len(phi) != nvars or any(len(r) != nvars for r in phi):
        raise InputError("phi must be nvars x nvars")
    if len(gamma) != mrows or any(len(r) != mrows for r in gamma):
        raise InputError("gamma must be m x m")
    # substitute x -> phi x in every form: coefficient vector v becomes phi^T v
    def subst(form):
        return tuple(
            sum(phi[l][k] * form[l] for l in range(nvars)) % p for k in range(nvars)
        )
    substituted = [[subst(form) for form in row] for row in M.rows]
    # gamma^T on the left, phi on the right (entrywise linear combinations)
    out = [[None] * ncols for _ in range(mrows)]
    for i in range(mrows):
        for j in range(ncols):
            vec = [0] * nvars
            for a in range(mrows):
                for b in range(ncols):
                    coeff = (gamma[a][i] * phi[b][j]) % p
                    if coeff:
                        for k in range(nvars):
                            vec[k] = (vec[k] + coeff * substituted[a][b][k]) % p
            out[i][j] = tuple(vec)
    return LinearFormMatrix(p=p, nvars=nvars, rows=tuple(tuple(r) for r in out))


# ---------------------------------------------------------------------------
# quadratic spans

def _quadratic_monomials(nvars: int):
    out = []
    for i in range(nvars):
        for j in range(i, nvars):
            e = [0] * nvars
            e[i] += 1
            e[j] += 1
            out.append(tuple(e))
    return out


def _rref(rows, p):
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                factor = rows[r][col]
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return tuple(tuple(r) for r in rows[:rank])


def _span_rows(gens, p, nvars):
    basis = _quadratic_monomials(nvars)
    index = {e: k for k, e in enumerate(basis)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        if g.total_degrees() != {2}:
            raise InputError(f"generator {g} is not a homogeneous quadratic")
        row = [0] * len(basis)
        for e, c in g.terms:
            row[index[e]] = c
        rows.append(row)
    return _rref(rows, p)


def quadratic_span_dim(gens, p: int, nvars: int) -> int:
    return len(_span_rows(gens, p, nvars))


def quadratic_span_equal(gens1, gens2, p: int, nvars: int) -> bool:
    """Do two sets of homogeneous quadratics span the same F_p-subspace?
    Sound as an ideal-equality test when both ideals are generated in
    degree 2."""
    return _span_rows(gens1, p, nvars) == _span_rows(gens2, p, nvars)
