"""Exhaustive decision oracle: ground truth for every rule and operation.

Scripts are enumerated depth-first, touching votes in ascending index order
with replacement ballots in ascending sorted-tuple order; the first success in
that order is the reported witness, so answers are reproducible.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable, Sequence

from .bribery import (
    ATOMIC_OPERATIONS,
    BriberyInstance,
    BriberyScript,
    Decision,
    Operation,
)
from .elections import DEFAULT_ENUMERATION_CAP, _excluded_votes
from .errors import CapExceeded

DEFAULT_SCRIPT_CAP = 10**7

ALGORITHM_NAME = "oracle"


def _replacement_count(m: int, vote: frozenset[int], op: Operation, r: int) -> int:
    if op is Operation.VC:
        return sum(math.comb(m, d) for d in range(1, min(r, m) + 1))
    if op is Operation.VAC:
        free = m - len(vote)
        return sum(math.comb(free, d) for d in range(1, min(r, free) + 1))
    if op is Operation.VDC:
        return sum(math.comb(len(vote), d) for d in range(1, min(r, len(vote)) + 1))
    raise ValueError(f"not a vote-level operation: {op!r}")


def estimate_search_space(inst: BriberyInstance) -> int:
    """Exact count of scripts the brute-force search will evaluate."""
    e = inst.election
    if inst.op in ATOMIC_OPERATIONS:
        # ways[b] = number of per-vote final-ballot assignments of total cost b
        ways = [0] * (inst.budget + 1)
        ways[0] = 1
        for vote in e.votes:
            slots = (e.m - len(vote)) if inst.op is Operation.APPADD else len(vote)
            if slots == 0:
                continue
            nxt = ways[:]
            for d in range(1, min(inst.budget, slots) + 1):
                cnt = math.comb(slots, d)
                for b in range(d, inst.budget + 1):
                    nxt[b] += ways[b - d] * cnt
            ways = nxt
        return sum(ways)
    counts = [_replacement_count(e.m, v, inst.op, inst.distance) for v in e.votes]
    limit = min(inst.budget, e.n)
    sums = [0] * (limit + 1)
    sums[0] = 1
    for c in counts:
        for t in range(limit, 0, -1):
            sums[t] += sums[t - 1] * c
    return sum(sums)


def _sorted_ballots(ballots) -> list[frozenset[int]]:
    return sorted(ballots, key=lambda b: tuple(sorted(b)))


def _replacements(m: int, vote: frozenset[int], op: Operation, r: int, budget: int) -> list[tuple[frozenset[int], int]]:
    """(ballot, cost) options for one vote, in ascending sorted-tuple order."""
    out: list[frozenset[int]] = []
    if op is Operation.APPADD:
        pool = sorted(set(range(m)) - vote)
        for d in range(1, min(budget, len(pool)) + 1):
            out.extend(vote | frozenset(extra) for extra in itertools.combinations(pool, d))
        return [(b, len(b) - len(vote)) for b in _sorted_ballots(out)]
    if op is Operation.APPDEL:
        pool = sorted(vote)
        for d in range(1, min(budget, len(pool)) + 1):
            out.extend(vote - frozenset(gone) for gone in itertools.combinations(pool, d))
        return [(b, len(vote) - len(b)) for b in _sorted_ballots(out)]
    if op is Operation.VC:
        for d in range(1, min(r, m) + 1):
            out.extend(vote ^ frozenset(flip) for flip in itertools.combinations(range(m), d))
    elif op is Operation.VAC:
        pool = sorted(set(range(m)) - vote)
        for d in range(1, min(r, len(pool)) + 1):
            out.extend(vote | frozenset(extra) for extra in itertools.combinations(pool, d))
    elif op is Operation.VDC:
        pool = sorted(vote)
        for d in range(1, min(r, len(pool)) + 1):
            out.extend(vote - frozenset(gone) for gone in itertools.combinations(pool, d))
    else:
        raise ValueError(f"unknown operation {op!r}")
    return [(b, 1) for b in _sorted_ballots(out)]


def solve_bruteforce(
    inst: BriberyInstance,
    *,
    script_cap: int = DEFAULT_SCRIPT_CAP,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> Decision:
    """Try every legal script within the budget; answer yes on the first that works.

    The search space is counted before searching and the call fails with
    CapExceeded if it is larger than ``script_cap``; a partial search never
    answers "no".
    """
    estimate = estimate_search_space(inst)
    if estimate > script_cap:
        raise CapExceeded("brute-force script enumeration", estimate, script_cap)
    e = inst.election
    votes: list[frozenset[int]] = list(e.votes)
    atomic = inst.op in ATOMIC_OPERATIONS
    options: list[list[tuple[frozenset[int], int]]] = [
        _replacements(e.m, v, inst.op, inst.distance, inst.budget) for v in e.votes
    ]
    J = inst.distinguished
    checked = 0

    def excluded_now() -> bool:
        return _excluded_votes(e.m, votes, inst.rule, inst.k, J, enumeration_cap)

    edits: dict[int, frozenset[int]] = {}
    witness: BriberyScript | None = None

    def search(start: int, remaining: int) -> bool:
        nonlocal checked, witness
        checked += 1
        if excluded_now():
            witness = BriberyScript(tuple(edits.items()))
            return True
        if remaining <= 0:
            return False
        for i in range(start, e.n):
            original = votes[i]
            for ballot, cost in options[i]:
                if cost > remaining:
                    continue
                votes[i] = ballot
                edits[i] = ballot
                if search(i + 1, remaining - cost):
                    return True
                del edits[i]
            votes[i] = original
        return False

    budget = inst.budget if atomic else min(inst.budget, e.n)
    found = search(0, budget)
    stats = {"scripts_checked": checked, "search_space": estimate}
    return Decision(found, witness, ALGORITHM_NAME, stats)
