import itertools
import random
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isodist.errors import ComputationLimitError, InputError
from isodist.abelian import (
    canonical_chain,
    chain,
    chain_distance,
    chain_leq,
    chain_neighbors,
    from_prime_partitions,
    parse_chain,
    prime_partitions,
    surjection_exists,
)


def test_chain_validation():
    with pytest.raises(InputError):
        chain([2, 3])
    with pytest.raises(InputError):
        chain([1, 2])
    assert chain([2, 2, 4]).order == 16
    assert str(chain([2, 2, 4])) == "(2,2,4)"
    assert str(chain([])) == "()"


def test_parse_chain():
    assert parse_chain("(2,2,4)") == chain([2, 2, 4])
    assert parse_chain("8") == chain([8])
    assert parse_chain("()") == chain([])
    assert parse_chain("-") == chain([])
    with pytest.raises(InputError):
        parse_chain("(2,x)")


def test_prime_partitions_round_trip():
    c = chain([2, 6, 12])
    parts = prime_partitions(c)
    assert parts == {2: (2, 1, 1), 3: (1, 1)}
    assert from_prime_partitions(parts) == c


def test_canonical_chain():
    # Z/6 + Z/4 = Z/2 + Z/12 by CRT
    assert canonical_chain([6, 4]) == chain([2, 12])
    assert canonical_chain([1, 1]) == chain([])
    assert canonical_chain([2, 3]) == chain([6])
    assert canonical_chain([4, 4, 2]) == chain([2, 4, 4])
    with pytest.raises(InputError):
        canonical_chain([0])


def test_chain_leq_basics():
    # c <= e iff the group of c surjects onto the group of e
    assert chain_leq(chain([2, 2, 4]), chain([2, 4]))
    assert chain_leq(chain([2, 2, 4]), chain([]))
    assert not chain_leq(chain([8]), chain([2, 2]))
    assert not chain_leq(chain([2, 2]), chain([4]))
    assert chain_leq(chain([4, 8]), chain([2, 8]))


def test_chain_neighbors_of_2_2_4():
    above, below = chain_neighbors(chain([2, 2, 4]))
    assert above == frozenset({chain([2, 4]), chain([2, 2, 2])})
    assert below == frozenset({chain([2, 2, 8]), chain([2, 4, 4]), chain([2, 2, 2, 4])})


def test_chain_neighbors_prime_set_controls_growth():
    above, below = chain_neighbors(chain([2]), primes={2, 3})
    assert above == frozenset({chain([])})
    # the new 3-box lands in the top invariant factor: 2 becomes 6
    assert below == frozenset({chain([4]), chain([2, 2]), chain([6])})
    with pytest.raises(InputError):
        chain_neighbors(chain([2]), primes={4})


def test_chain_distance_pinned_values():
    assert chain_distance(chain([2, 2, 4]), chain([2, 2, 2])) == 1
    assert chain_distance(chain([2, 2, 4]), chain([8])) == 3
    assert chain_distance(chain([2, 2, 2]), chain([8])) == 4
    assert chain_distance(chain([6]), chain([6])) == 0
    assert chain_distance(chain([]), chain([30])) == 3


def bfs_chain_distance(a, b, primes, max_depth, cap=60000):
    """Oracle: breadth-first search over the cover graph, truncated at
    max_depth.  Complete for any pair at distance <= max_depth."""
    if a == b:
        return 0
    dist = {a: 0}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if dist[x] >= max_depth:
            continue
        if len(dist) > cap:
            raise RuntimeError("BFS oracle cap exceeded")
        above, below = chain_neighbors(x, primes)
        for y in above | below:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == b:
                    return dist[y]
                queue.append(y)
    return None


def random_chain(rng, primes=(2, 3), max_len=3, max_exp=3):
    parts = {}
    for p in primes:
        exps = sorted(
            (rng.randint(0, max_exp) for _ in range(rng.randint(0, max_len))),
            reverse=True,
        )
        parts[p] = tuple(e for e in exps if e > 0)
    return from_prime_partitions(parts)


def test_chain_distance_matches_bfs_oracle():
    # walk a few cover moves away from a random start, then check the
    # closed-form distance against an exhaustive truncated BFS
    rng = random.Random(41)
    primes = {2, 3}
    for _ in range(30):
        a = random_chain(rng, max_len=2, max_exp=2)
        b = a
        for _ in range(rng.randint(0, 4)):
            above, below = chain_neighbors(b, primes)
            options = sorted(above | below, key=str)
            b = options[rng.randrange(len(options))]
        d = chain_distance(a, b)
        assert d <= 4
        assert bfs_chain_distance(a, b, primes, max_depth=d) == d


def test_neighbors_are_at_distance_one_and_comparable():
    rng = random.Random(43)
    for _ in range(40):
        c = random_chain(rng)
        above, below = chain_neighbors(c, primes={2, 3})
        for x in above:
            assert chain_distance(c, x) == 1
            assert chain_leq(c, x) and not chain_leq(x, c)
        for x in below:
            assert chain_distance(c, x) == 1
            assert chain_leq(x, c) and not chain_leq(c, x)


def test_surjection_oracle_small_cases():
    assert surjection_exists([2, 4], [2, 2])
    assert surjection_exists([2, 4], [4])
    assert not surjection_exists([2, 2], [4])
    assert surjection_exists([12], [6])
    assert not surjection_exists([2, 3], [2, 2])
    assert surjection_exists([4], [])
    with pytest.raises(ComputationLimitError):
        surjection_exists([64, 64, 64], [2], cap=4096)


def all_chains_of_order_at_most(limit):
    out = [chain([])]
    for n in range(2, limit + 1):
        for c in _chains_of_order(n):
            out.append(c)
    return out


def _chains_of_order(n, smallest=2):
    if n == 1:
        yield chain([])
        return
    for d in range(smallest, n + 1):
        if n % d == 0:
            for rest in _chains_of_order(n // d, d):
                candidate = (d,) + tuple(x for x in rest.parts)
                try:
                    yield chain(candidate)
                except InputError:
                    continue


def test_chain_leq_iff_surjection_exists():
    chains = [c for c in all_chains_of_order_at_most(64)]
    assert chain([2, 2, 4]) in chains and chain([8]) in chains
    for a, b in itertools.product(chains, repeat=2):
        assert chain_leq(a, b) == surjection_exists(a.parts, b.parts), (a, b)


@st.composite
def chain_strategy(draw):
    parts = {}
    for p in (2, 3, 5):
        exps = draw(st.lists(st.integers(1, 4), max_size=3))
        parts[p] = tuple(sorted(exps, reverse=True))
    return from_prime_partitions(parts)


@given(chain_strategy(), chain_strategy(), chain_strategy())
@settings(max_examples=200, deadline=None)
def test_chain_distance_pseudometric_axioms(a, b, c):
    assert chain_distance(a, a) == 0
    assert chain_distance(a, b) == chain_distance(b, a)
    assert chain_distance(a, c) <= chain_distance(a, b) + chain_distance(b, c)


@given(chain_strategy(), chain_strategy())
@settings(max_examples=200, deadline=None)
def test_chain_order_is_a_partial_order(a, b):
    assert chain_leq(a, a)
    if chain_leq(a, b) and chain_leq(b, a):
        assert a == b
    if chain_leq(a, b):
        # comparable chains are separated by at least the size difference
        assert a.order % max(b.order, 1) == 0
        assert chain_distance(a, b) >= 1 or a == b


@given(chain_strategy(), chain_strategy(), chain_strategy())
@settings(max_examples=150, deadline=None)
def test_chain_order_transitive(a, b, c):
    if chain_leq(a, b) and chain_leq(b, c):
        assert chain_leq(a, c)
