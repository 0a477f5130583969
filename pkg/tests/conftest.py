"""Shared fixtures and instance generators for the test suite."""

import itertools
import random

import pytest

from dbribe import (
    ATOMIC_OPERATIONS,
    BriberyInstance,
    BriberyScript,
    Election,
    Graph,
    Operation,
    Rule,
    RX3CInstance,
    VOTE_OPERATIONS,
)


@pytest.fixture
def e1() -> Election:
    """The worked three-candidate election used throughout the unit tests."""
    return Election(3, [{0, 1}, {0}, {1, 2}])


def random_election(rng: random.Random, m_max=5, n_max=6, m_min=1, n_min=1) -> Election:
    m = rng.randint(m_min, m_max)
    n = rng.randint(n_min, n_max)
    votes = tuple(frozenset(c for c in range(m) if rng.getrandbits(1)) for _ in range(n))
    return Election(m, votes)


def random_distinguished(rng: random.Random, m: int, proper=False) -> frozenset[int]:
    limit = m - 1 if proper else m
    while True:
        J = frozenset(c for c in range(m) if rng.getrandbits(1))
        if J and len(J) <= limit:
            return J


def random_instance(
    rng: random.Random,
    *,
    rules=tuple(Rule),
    ops=tuple(Operation),
    m_max=5,
    n_max=6,
    k_max=3,
    ell_max=3,
    r_max=3,
) -> BriberyInstance:
    e = random_election(rng, m_max, n_max)
    rule = rng.choice(list(rules))
    op = rng.choice(list(ops))
    J = random_distinguished(rng, e.m)
    k = rng.randint(1, min(k_max, e.m))
    budget = rng.randint(0, ell_max)
    distance = rng.randint(0, r_max) if op in VOTE_OPERATIONS else 0
    return BriberyInstance(e, rule, op, J, k, budget, distance)


def all_scripts(inst: BriberyInstance):
    """Every legal script of an instance, via blunt per-vote products.

    Independent of the package's enumeration order; only usable on tiny
    instances.
    """
    e = inst.election
    per_vote = []
    for v in e.votes:
        options = [(None, 0)]
        for bits in range(2**e.m):
            ballot = frozenset(c for c in range(e.m) if bits >> c & 1)
            if inst.op in (Operation.APPADD, Operation.VAC):
                if not ballot > v:
                    continue
            elif inst.op in (Operation.APPDEL, Operation.VDC):
                if not ballot < v:
                    continue
            elif ballot == v:
                continue
            if inst.op in VOTE_OPERATIONS:
                if len(ballot ^ v) > inst.distance:
                    continue
                cost = 1
            else:
                cost = len(ballot ^ v)
            options.append((ballot, cost))
        per_vote.append(options)
    for combo in itertools.product(*per_vote):
        if sum(cost for _, cost in combo) > inst.budget:
            continue
        edits = tuple((i, ballot) for i, (ballot, _) in enumerate(combo) if ballot is not None)
        yield BriberyScript(edits)


# --- fixed graphs -----------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need >= 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def cube_graph() -> Graph:
    edges = [
        (u, u ^ (1 << bit))
        for u in range(8)
        for bit in range(3)
        if u < u ^ (1 << bit)
    ]
    return Graph(8, tuple(edges))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


# --- fixed exact-cover inputs ----------------------------------------------


def rx3c_forced() -> RX3CInstance:
    """kappa = 1: all three triples equal the whole universe."""
    return RX3CInstance(1, (frozenset({0, 1, 2}),) * 3)


def rx3c_blocks(kappa: int) -> RX3CInstance:
    """kappa disjoint triples, each listed three times; always coverable."""
    triples = []
    for i in range(kappa):
        triples.extend([frozenset({3 * i, 3 * i + 1, 3 * i + 2})] * 3)
    return RX3CInstance(kappa, tuple(triples))


def rx3c_no_cover() -> RX3CInstance:
    """A kappa = 2 input with no exact cover (checked exhaustively)."""
    triples = (
        frozenset({0, 1, 4}),
        frozenset({2, 3, 4}),
        frozenset({2, 4, 5}),
        frozenset({0, 3, 5}),
        frozenset({1, 3, 5}),
        frozenset({0, 1, 2}),
    )
    return RX3CInstance(2, triples)
