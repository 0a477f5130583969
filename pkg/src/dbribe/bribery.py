"""Bribery problem instances, modification scripts, and script checking.

A script is a witness in canonical form: for each touched vote only the final
ballot is stored, so a run of atomic edits on one vote collapses into a single
entry whose cost is the symmetric difference.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Mapping

from .elections import DEFAULT_ENUMERATION_CAP, Election, Rule, is_excluded


class Operation(str, Enum):
    """The five modification operations."""

    APPADD = "appadd"
    APPDEL = "appdel"
    VC = "vc"
    VAC = "vac"
    VDC = "vdc"


#: Operations counted per single candidate added/removed.
ATOMIC_OPERATIONS = frozenset({Operation.APPADD, Operation.APPDEL})
#: Operations counted per touched vote, subject to the distance bound.
VOTE_OPERATIONS = frozenset({Operation.VC, Operation.VAC, Operation.VDC})


@dataclass(frozen=True)
class BriberyInstance:
    """One decision problem: can the distinguished candidates be excluded?

    ``budget`` is the number of allowed operations (atomic edits for
    appadd/appdel, touched votes otherwise).  ``distance`` is the per-vote
    Hamming bound; it is stored but ignored for the atomic operations.
    """

    election: Election
    rule: Rule
    op: Operation
    distinguished: frozenset[int]
    k: int
    budget: int
    distance: int = 0

    def __post_init__(self):
        J = frozenset(self.distinguished)
        object.__setattr__(self, "distinguished", J)
        e = self.election
        if not J:
            raise ValueError("distinguished set must be nonempty")
        for c in J:
            if not 0 <= c < e.m:
                raise ValueError(f"distinguished set contains unknown candidate {c!r}")
        if not 1 <= self.k <= e.m:
            raise ValueError(f"committee size k must be between 1 and {e.m}, got {self.k}")
        if self.budget < 0:
            raise ValueError("budget must be non-negative")
        if self.distance < 0:
            raise ValueError("distance bound must be non-negative")


@dataclass(frozen=True)
class BriberyScript:
    """Per-vote replacement ballots, keyed by vote index (each index once)."""

    edits: tuple[tuple[int, frozenset[int]], ...] = ()

    def __post_init__(self):
        seen = set()
        norm = []
        for i, ballot in self.edits:
            i = int(i)
            if i in seen:
                raise ValueError(f"vote {i} edited twice")
            seen.add(i)
            norm.append((i, frozenset(ballot)))
        norm.sort()
        object.__setattr__(self, "edits", tuple(norm))

    @classmethod
    def from_mapping(cls, edits: Mapping[int, Iterable[int]]) -> "BriberyScript":
        return cls(tuple((i, frozenset(b)) for i, b in edits.items()))

    def as_mapping(self) -> dict[int, frozenset[int]]:
        return dict(self.edits)

    def __len__(self) -> int:
        return len(self.edits)


EMPTY_SCRIPT = BriberyScript(())


@dataclass(frozen=True)
class Violation:
    """Why a script is illegal: the offending vote (None for global) and a reason."""

    vote: int | None
    reason: str

    def __str__(self) -> str:
        where = "script" if self.vote is None else f"edit of vote {self.vote}"
        return f"{where}: {self.reason}"


@dataclass
class Decision:
    """A solver's answer, with an optional witness script and run counters."""

    answer: bool
    witness: BriberyScript | None
    algorithm: str
    stats: dict[str, int] = field(default_factory=dict)


def hamming(a: Iterable[int], b: Iterable[int]) -> int:
    """Hamming distance between two ballots: |a \\ b| + |b \\ a|."""
    return len(frozenset(a) ^ frozenset(b))


def script_cost(inst: BriberyInstance, script: BriberyScript) -> int:
    """Atomic ops: total symmetric difference; vote-level ops: touched votes."""
    votes = inst.election.votes
    for i, _ in script.edits:
        if not 0 <= i < len(votes):
            raise ValueError(f"script touches invalid vote index {i}")
    if inst.op in ATOMIC_OPERATIONS:
        return sum(len(votes[i] ^ ballot) for i, ballot in script.edits)
    return len(script.edits)


def validate_script(inst: BriberyInstance, script: BriberyScript) -> Violation | None:
    """None when the script is legal, otherwise the first violation.

    Checks, in order: vote indices and ballot contents, the direction
    constraint of the operation (strict superset for appadd/vac, strict
    subset for appdel/vdc, plain difference for vc), the per-edit distance
    bound for vote-level operations, and finally the budget.
    """
    e = inst.election
    op = inst.op
    for i, ballot in script.edits:
        if not 0 <= i < e.n:
            return Violation(i, "vote index out of range")
        if any(not 0 <= c < e.m for c in ballot):
            return Violation(i, "replacement ballot approves an unknown candidate")
        original = e.votes[i]
        if op in (Operation.APPADD, Operation.VAC):
            if not ballot > original:
                return Violation(i, "replacement must be a strict superset (additions only)")
        elif op in (Operation.APPDEL, Operation.VDC):
            if not ballot < original:
                return Violation(i, "replacement must be a strict subset (deletions only)")
        elif ballot == original:
            return Violation(i, "replacement must differ from the original ballot")
        if op in VOTE_OPERATIONS:
            dist = len(original ^ ballot)
            if dist > inst.distance:
                return Violation(i, f"edit distance {dist} exceeds bound {inst.distance}")
    cost = script_cost(inst, script)
    if cost > inst.budget:
        return Violation(None, f"cost {cost} exceeds budget {inst.budget}")
    return None


def apply_script(e: Election, script: BriberyScript) -> Election:
    """New election with the touched ballots replaced; vote order preserved."""
    votes = list(e.votes)
    for i, ballot in script.edits:
        if not 0 <= i < len(votes):
            raise ValueError(f"script touches invalid vote index {i}")
        votes[i] = ballot
    return Election(e.m, tuple(votes))


def check_solution(
    inst: BriberyInstance, script: BriberyScript, *, enumeration_cap: int = DEFAULT_ENUMERATION_CAP
) -> bool:
    """True iff the script is legal and excludes every distinguished candidate."""
    if validate_script(inst, script) is not None:
        return False
    bribed = apply_script(inst.election, script)
    return is_excluded(bribed, inst.rule, inst.k, inst.distinguished, enumeration_cap=enumeration_cap)


def with_budget(inst: BriberyInstance, budget: int) -> BriberyInstance:
    return replace(inst, budget=budget)


def script_to_json(op: Operation, script: BriberyScript) -> dict:
    """Wire form: {"operation": ..., "edits": [{"vote": i, "ballot": [...]}]}."""
    return {
        "operation": op.value,
        "edits": [{"vote": i, "ballot": sorted(ballot)} for i, ballot in script.edits],
    }


def script_from_json(obj: object) -> tuple[Operation, BriberyScript]:
    if not isinstance(obj, dict):
        raise ValueError("script JSON must be an object")
    try:
        op = Operation(obj["operation"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"script JSON has a missing or unknown operation: {exc}") from None
    edits = obj.get("edits", [])
    if not isinstance(edits, list):
        raise ValueError("script JSON field 'edits' must be a list")
    pairs = []
    for entry in edits:
        if not isinstance(entry, dict) or "vote" not in entry or "ballot" not in entry:
            raise ValueError("each edit needs 'vote' and 'ballot' fields")
        pairs.append((int(entry["vote"]), frozenset(int(c) for c in entry["ballot"])))
    return op, BriberyScript(tuple(pairs))


def dump_script(op: Operation, script: BriberyScript) -> str:
    return json.dumps(script_to_json(op, script), sort_keys=True, indent=2) + "\n"


def load_script(text: str) -> tuple[Operation, BriberyScript]:
    return script_from_json(json.loads(text))
