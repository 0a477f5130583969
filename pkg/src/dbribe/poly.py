"""Polynomial-time exact solvers for approval voting (AV).

Four cases admit direct algorithms: the two atomic operations, vote-level
addition with k = 1, and vote-level deletion with distance bound 1.  Wherever
the underlying argument allows an arbitrary choice of vote or candidate, the
lowest index is taken so witnesses are reproducible.
"""

from __future__ import annotations

from .bribery import BriberyInstance, BriberyScript, Decision, EMPTY_SCRIPT, Operation
from .elections import Rule
from .matching import max_bipartite_matching


def _require(inst: BriberyInstance, op: Operation, **conds: int) -> None:
    if inst.rule is not Rule.AV:
        raise ValueError(f"this solver handles AV only, got rule {inst.rule.value}")
    if inst.op is not op:
        raise ValueError(f"this solver handles {op.value} only, got {inst.op.value}")
    for name, wanted in conds.items():
        actual = getattr(inst, name)
        if actual != wanted:
            raise ValueError(f"this solver requires {name} == {wanted}, got {actual}")


def _av_counts(inst: BriberyInstance) -> list[int]:
    scores = [0] * inst.election.m
    for vote in inst.election.votes:
        for c in vote:
            scores[c] += 1
    return scores


def solve_appadd_av(inst: BriberyInstance) -> Decision:
    """Greedy exact algorithm for approval additions under AV.

    Additions never lower anyone's score, so it suffices to raise the k
    cheapest non-distinguished candidates strictly above the strongest
    distinguished one; each candidate c needs exactly
    max(0, top + 1 - score(c)) additions, all into votes not approving c.
    """
    _require(inst, Operation.APPADD)
    e = inst.election
    J = inst.distinguished
    scores = _av_counts(inst)
    name = "appadd-av"
    if any(scores[c] == e.n for c in J):
        # Some distinguished candidate is approved everywhere and can never
        # be overtaken by additions alone.
        return Decision(False, None, name, {})
    top = max(scores[c] for c in J)
    others = [c for c in range(e.m) if c not in J]
    already = [c for c in others if scores[c] > top]
    if len(already) >= inst.k:
        return Decision(True, EMPTY_SCRIPT, name, {"additions": 0})
    needed = inst.k - len(already)
    pool = sorted((c for c in others if scores[c] <= top), key=lambda c: (top + 1 - scores[c], c))
    if len(pool) < needed:
        return Decision(False, None, name, {})
    chosen = pool[:needed]
    total = sum(top + 1 - scores[c] for c in chosen)
    if total > inst.budget:
        return Decision(False, None, name, {})
    additions: dict[int, set[int]] = {}
    for c in chosen:
        missing = top + 1 - scores[c]
        for i, vote in enumerate(e.votes):
            if missing == 0:
                break
            if c not in vote:
                additions.setdefault(i, set()).add(c)
                missing -= 1
    script = BriberyScript(tuple((i, e.votes[i] | extra) for i, extra in additions.items()))
    return Decision(True, script, name, {"additions": total})


def solve_appdel_av(inst: BriberyInstance) -> Decision:
    """Iterated reduction for approval deletions under AV.

    While fewer than k non-distinguished candidates sit strictly above the
    currently strongest distinguished candidate, delete one of that
    candidate's approvals (lowest approving vote).  Succeeds iff the loop
    reaches the exclusion condition within budget; if the strongest
    distinguished candidate hits score 0 first, no deletions can ever help.
    """
    _require(inst, Operation.APPDEL)
    e = inst.election
    J = inst.distinguished
    name = "appdel-av"
    scores = _av_counts(inst)
    others = [c for c in range(e.m) if c not in J]
    if sum(1 for c in others if scores[c] >= 1) < inst.k:
        return Decision(False, None, name, {})
    votes = list(e.votes)
    deletions = 0
    iterations = 0
    while True:
        iterations += 1
        top_candidate = min(J, key=lambda c: (-scores[c], c))
        target = scores[top_candidate]
        above = sum(1 for c in others if scores[c] >= target + 1)
        if above >= inst.k:
            break
        if target == 0:
            return Decision(False, None, name, {"iterations": iterations})
        for i, vote in enumerate(votes):
            if top_candidate in vote:
                votes[i] = vote - {top_candidate}
                break
        scores[top_candidate] -= 1
        deletions += 1
    if deletions > inst.budget:
        return Decision(False, None, name, {"iterations": iterations, "deletions": deletions})
    edits = tuple((i, votes[i]) for i in range(e.n) if votes[i] != e.votes[i])
    return Decision(True, BriberyScript(edits), name, {"iterations": iterations, "deletions": deletions})


def solve_vac_av_k1(inst: BriberyInstance) -> Decision:
    """Vote-level additions under AV for a single winner (k = 1).

    Only the strongest non-distinguished candidate matters: it can gain one
    approval per touched vote, so the answer is yes iff its score plus
    min(budget, #non-approving votes) beats every distinguished score.
    """
    _require(inst, Operation.VAC, k=1)
    e = inst.election
    J = inst.distinguished
    name = "vac-av-k1"
    scores = _av_counts(inst)
    top = max(scores[c] for c in J)
    others = [c for c in range(e.m) if c not in J]
    if not others:
        return Decision(False, None, name, {})
    if inst.distance == 0:
        excluded = any(scores[c] > top for c in others)
        return Decision(excluded, EMPTY_SCRIPT if excluded else None, name, {})
    best = min(others, key=lambda c: (-scores[c], c))
    if scores[best] >= top + 1:
        return Decision(True, EMPTY_SCRIPT, name, {"additions": 0})
    gain = min(inst.budget, e.n - scores[best])
    if scores[best] + gain < top + 1:
        return Decision(False, None, name, {})
    missing = top + 1 - scores[best]
    edits = []
    for i, vote in enumerate(e.votes):
        if missing == 0:
            break
        if best not in vote:
            edits.append((i, vote | {best}))
            missing -= 1
    return Decision(True, BriberyScript(tuple(edits)), name, {"additions": len(edits)})


def solve_vdc_av_r1(inst: BriberyInstance) -> Decision:
    """Vote-level deletions under AV with distance bound 1, via matching.

    With one deletion per touched vote, every distinguished candidate scoring
    at least the k-th best non-distinguished score s must lose enough distinct
    approving votes to drop to s - 1.  That demand is satisfiable iff a
    bipartite matching saturates score(c) - s + 1 copies of each such
    candidate against its approving votes.
    """
    _require(inst, Operation.VDC, distance=1)
    e = inst.election
    J = inst.distinguished
    name = "vdc-av-r1"
    scores = _av_counts(inst)
    others = [c for c in range(e.m) if c not in J]
    if len(others) < inst.k:
        return Decision(False, None, name, {})
    threshold = sorted((scores[c] for c in others), reverse=True)[inst.k - 1]
    if threshold == 0:
        # Scores cannot drop below zero, so nobody can fall under the bar.
        return Decision(False, None, name, {})
    over = [c for c in sorted(J) if scores[c] >= threshold]
    if not over:
        return Decision(True, EMPTY_SCRIPT, name, {"deletions": 0})
    deficit = sum(scores[c] - threshold + 1 for c in over)
    if deficit > inst.budget:
        return Decision(False, None, name, {})
    over_set = frozenset(over)
    vote_ids = [i for i, vote in enumerate(e.votes) if vote & over_set]
    copies: list[int] = []  # candidate of each left vertex
    for c in over:
        copies.extend([c] * (scores[c] - threshold + 1))
    edges = [
        (left, pos)
        for left, c in enumerate(copies)
        for pos, i in enumerate(vote_ids)
        if c in e.votes[i]
    ]
    matching = max_bipartite_matching(len(copies), len(vote_ids), edges)
    stats = {"deletions": deficit, "matched": len(matching)}
    if len(matching) < len(copies):
        return Decision(False, None, name, stats)
    edits = []
    for left, pos in sorted(matching.items()):
        i = vote_ids[pos]
        edits.append((i, e.votes[i] - {copies[left]}))
    return Decision(True, BriberyScript(tuple(edits)), name, stats)
