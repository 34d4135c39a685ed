"""Divisor-chain invariant of finite abelian groups: the surjection order,
cover-neighbor generation, distances, and a brute-force surjection oracle.

A chain (d1, ..., dn) with d1 | ... | dn stands for Z/d1 + ... + Z/dn.
Internally each chain is a family of per-prime exponent partitions; covers
in the order are single-box moves on one of those partitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm, prod

import sympy

from .errors import ComputationLimitError, InputError

DEFAULT_SURJECTION_CAP = 4096


@dataclass(frozen=True)
class DivisorChain:
    parts: tuple  # ascending, each >= 2, d_i | d_{i+1}

    def __post_init__(self):
        for d in self.parts:
            if not isinstance(d, int) or d < 2:
                raise InputError(f"chain part {d!r} must be an integer >= 2")
        for a, b in zip(self.parts, self.parts[1:]):
            if b % a != 0:
                raise InputError(f"not a divisor chain: {a} does not divide {b}")

    @property
    def order(self) -> int:
        return prod(self.parts)

    def __str__(self):
        return "(" + ",".join(str(d) for d in self.parts) + ")"


def chain(parts) -> DivisorChain:
    return DivisorChain(tuple(parts))


def parse_chain(text: str) -> DivisorChain:
    text = text.strip()
    if text in ("", "()", "-"):
        return DivisorChain(())
    text = text.strip("()")
    try:
        return DivisorChain(tuple(int(t) for t in text.split(",") if t.strip()))
    except ValueError:
        raise InputError(f"cannot parse chain {text!r}") from None


def prime_partitions(c: DivisorChain) -> dict:
    """Per-prime exponent partitions, descending (largest part first)."""
    out: dict[int, list[int]] = {}
    for d in reversed(c.parts):
        for p, e in sympy.factorint(d).items():
            out.setdefault(p, []).append(e)
    return {p: tuple(v) for p, v in out.items()}


def from_prime_partitions(partitions: dict) -> DivisorChain:
    """Rebuild the chain from descending per-prime partitions, top-aligned."""
    cleaned = {
        p: tuple(sorted((e for e in part if e > 0), reverse=True))
        for p, part in partitions.items()
    }
    cleaned = {p: part for p, part in cleaned.items() if part}
    n = max((len(part) for part in cleaned.values()), default=0)
    parts = []
    for t in range(n):  # t-th largest invariant factor
        d = prod(p ** part[t] for p, part in cleaned.items() if t < len(part))
        parts.append(d)
    return DivisorChain(tuple(reversed(parts)))


def canonical_chain(moduli) -> DivisorChain:
    """Invariant factors of Z/m1 + ... + Z/mk (moduli equal to 1 dropped)."""
    exps: dict[int, list[int]] = {}
    for m in moduli:
        if not isinstance(m, int) or m < 1:
            raise InputError(f"modulus {m!r} must be a positive integer")
        for p, e in sympy.factorint(m).items():
            exps.setdefault(p, []).append(e)
    return from_prime_partitions({p: tuple(v) for p, v in exps.items()})


def chain_leq(c: DivisorChain, e: DivisorChain) -> bool:
    """c <= e iff the group of c surjects onto the group of e: e must be no
    longer than c and divide it factorwise from the top."""
    n, m = len(c.parts), len(e.parts)
    if m > n:
        return False
    return all(c.parts[n - m + i] % e.parts[i] == 0 for i in range(m))


def _box_moves(part: tuple, delta: int):
    """Distinct partitions obtained by changing one part by +-1 (descending
    representation; new unit parts allowed, zero parts dropped)."""
    results = set()
    parts = list(part)
    for i in range(len(parts)):
        new = parts[:i] + [parts[i] + delta] + parts[i + 1:]
        results.add(tuple(sorted((x for x in new if x > 0), reverse=True)))
    if delta > 0:
        results.add(tuple(sorted(parts + [1], reverse=True)))
    return results


def chain_neighbors(c: DivisorChain, primes=None):
    """(covers_above, covered_below): neighbors in the cover graph.

    Chains above (smaller groups) delete one box from one per-prime
    partition; chains below (larger groups) add one box for a prime in the
    given set (default: the primes of c).
    """
    parts = prime_partitions(c)
    if primes is None:
        primes = set(parts)
    primes = set(primes)
    for p in primes:
        if not sympy.isprime(p):
            raise InputError(f"{p} is not prime")
    above = set()
    for p, part in parts.items():
        for new in _box_moves(part, -1):
            moved = dict(parts)
            moved[p] = new
            above.add(from_prime_partitions(moved))
    below = set()
    for p in primes:
        part = parts.get(p, ())
        for new in _box_moves(part, +1):
            moved = dict(parts)
            moved[p] = new
            below.add(from_prime_partitions(moved))
    return frozenset(above), frozenset(below)


def chain_distance(a: DivisorChain, b: DivisorChain) -> int:
    """Shortest cover-graph path length.

    The order is the product over primes of box orders on partitions, so
    the distance is the per-prime L1 distance between top-aligned exponent
    partitions (verified against a BFS oracle in the test suite).
    """
    pa, pb = prime_partitions(a), prime_partitions(b)
    total = 0
    for p in set(pa) | set(pb):
        x = pa.get(p, ())
        y = pb.get(p, ())
        length = max(len(x), len(y))
        x = x + (0,) * (length - len(x))
        y = y + (0,) * (length - len(y))
        total += sum(abs(u - v) for u, v in zip(x, y))
    return total


def _p_part(m: int, p: int) -> int:
    out = 1
    while m % p == 0:
        out *= p
        m //= p
    return out


def _element_order(vec, moduli) -> int:
    return reduce(lcm, (m // gcd(x, m) for x, m in zip(vec, moduli)), 1)


def _p_group_surjection(a_orders, b_moduli) -> bool:
    """Existence of a surjection (+) Z/a_i ->> (+) Z/b_j for p-groups, by a
    memoized search over generator images tracking the generated subgroup."""
    b_moduli = [m for m in b_moduli if m > 1]
    if not b_moduli:
        return True
    size_b = prod(b_moduli)
    elements = list(itertools.product(*(range(m) for m in b_moduli)))
    zero = tuple(0 for _ in b_moduli)
    a_orders = sorted((a for a in a_orders if a > 1), reverse=True)
    if prod(a_orders) < size_b:
        return False
    candidates = {
        a: [y for y in elements if all((a * x) % m == 0 for x, m in zip(y, b_moduli))]
        for a in set(a_orders)
    }
    seen = set()

    def grow(subgroup: frozenset, y) -> frozenset:
        k = _element_order(y, b_moduli)
        return frozenset(
            tuple((s[i] + j * y[i]) % b_moduli[i] for i in range(len(b_moduli)))
            for s in subgroup
            for j in range(k)
        )

    def search(i, subgroup: frozenset) -> bool:
        if len(subgroup) == size_b:
            return True
        if i == len(a_orders):
            return False
        if len(subgroup) * prod(a_orders[i:]) < size_b:
            return False
        key = (i, subgroup)
        if key in seen:
            return False
        seen.add(key)
        for y in candidates[a_orders[i]]:
            if search(i + 1, grow(subgroup, y)):
                return True
        return False

    return search(0, frozenset([zero]))


def surjection_exists(a_moduli, b_moduli, cap: int = DEFAULT_SURJECTION_CAP) -> bool:
    """Brute-force oracle: does a surjective homomorphism from the group of
    a_moduli onto the group of b_moduli exist?  Splits per prime."""
    a_moduli = [m for m in a_moduli if m != 1]
    b_moduli = [m for m in b_moduli if m != 1]
    for m in a_moduli + b_moduli:
        if not isinstance(m, int) or m < 1:
            raise InputError(f"modulus {m!r} must be a positive integer")
    if prod(a_moduli) > cap:
        raise ComputationLimitError(f"source group larger than cap {cap}")
    primes = set()
    for m in a_moduli + b_moduli:
        primes.update(sympy.factorint(m))
    for p in primes:
        a_p = [_p_part(m, p) for m in a_moduli]
        b_p = [_p_part(m, p) for m in b_moduli]
        if not _p_group_surjection(a_p, b_p):
            return False
    return True
