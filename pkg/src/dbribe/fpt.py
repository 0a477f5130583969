"""Exact solvers that stay fast when one quantity is small.

* solve_fpt_m: any rule, any operation.  Guesses a committee W disjoint from
  the distinguished set, then asks an integer program whether W can be pushed
  strictly above every committee containing a distinguished candidate, with
  votes grouped by identical ballots.  Sound and complete: the distinguished
  candidates are excluded iff some such W strictly dominates all of them.
* solve_vdc_av_fpt_J: AV vote-level deletions, grouping votes by their
  distinguished-candidate pattern (integer program in the pattern space).
* solve_vdc_av_flow: AV vote-level deletions, guessing the touched votes and
  checking each guess with a max-flow saturation test.
* solve_vc_vac_av_enum: AV vote-level change/addition with the distance bound
  wide open (r = 2m), guessing the touched votes and rewriting each optimally.

Scores enter the integer programs multiplied by scale(m), so strict
domination becomes ">= 1" exactly.
"""

from __future__ import annotations

import itertools
import math

from .bribery import (
    ATOMIC_OPERATIONS,
    BriberyInstance,
    BriberyScript,
    Decision,
    EMPTY_SCRIPT,
    Operation,
)
from .elections import Rule, scaled_ballot_score, _separable_excluded_scaled
from .errors import CapExceeded
from .flow import FlowNetwork, max_flow
from .ilp import DEFAULT_NODE_CAP, GE, LE, IntegerProgram, solve_ip_feasibility
from .oracle import _replacements

DEFAULT_VAR_CAP = 100_000
DEFAULT_SUBSET_CAP = 10**6


def _fmt(ballot: frozenset[int]) -> str:
    return "{" + ",".join(map(str, sorted(ballot))) + "}"


def _ballot_groups(votes) -> list[tuple[frozenset[int], list[int]]]:
    groups: dict[frozenset[int], list[int]] = {}
    for i, v in enumerate(votes):
        groups.setdefault(v, []).append(i)
    return list(groups.items())


def build_ilp_m(
    inst: BriberyInstance, committee: frozenset[int], *, var_cap: int = DEFAULT_VAR_CAP
) -> IntegerProgram:
    """Feasibility program: can `committee` strictly outscore every committee
    that contains a distinguished candidate, within the operation and budget?

    One variable per (present ballot A, admissible replacement B) counts how
    many A-votes are rewritten to B.  Constraints: per-group capacity, the
    budget (per touched vote, or per atomic edit weighted by Hamming
    distance), and one strict-domination row per distinguished-hitting
    committee.
    """
    e = inst.election
    m = e.m
    W = frozenset(committee)
    if len(W) != inst.k:
        raise ValueError(f"guessed committee must have size {inst.k}")
    if W & inst.distinguished:
        raise ValueError("guessed committee must avoid the distinguished candidates")
    groups = _ballot_groups(e.votes)
    atomic = inst.op in ATOMIC_OPERATIONS
    prog = IntegerProgram()
    per_group_vars: list[list[int]] = []
    budget_coeffs: dict[int, int] = {}
    for gi, (ballot, idxs) in enumerate(groups):
        vars_here: list[int] = []
        for replacement, cost in _replacements(m, ballot, inst.op, inst.distance, inst.budget):
            upper = min(len(idxs), inst.budget // cost)
            if upper == 0:
                continue
            vi = prog.add_variable(
                f"x[{_fmt(ballot)}->{_fmt(replacement)}]", upper, meta=(gi, ballot, replacement)
            )
            if len(prog.variables) > var_cap:
                raise CapExceeded("ILP variable count", len(prog.variables), var_cap)
            vars_here.append(vi)
            budget_coeffs[vi] = cost
        per_group_vars.append(vars_here)
    for gi, vars_here in enumerate(per_group_vars):
        if vars_here:
            prog.add_constraint({vi: 1 for vi in vars_here}, LE, len(groups[gi][1]))
    if budget_coeffs:
        prog.add_constraint(budget_coeffs, LE, inst.budget)

    cache: dict[tuple[frozenset[int], frozenset[int]], int] = {}

    def sbs(ballot: frozenset[int], w: frozenset[int]) -> int:
        key = (ballot, w)
        val = cache.get(key)
        if val is None:
            val = cache[key] = scaled_ballot_score(m, inst.rule, ballot, w)
        return val

    for combo in itertools.combinations(range(m), inst.k):
        rival = frozenset(combo)
        if rival.isdisjoint(inst.distinguished):
            continue
        base = sum(len(idxs) * (sbs(ballot, rival) - sbs(ballot, W)) for ballot, idxs in groups)
        coeffs: dict[int, int] = {}
        for vi, var in enumerate(prog.variables):
            _, ballot, replacement = var.meta
            delta = (sbs(replacement, W) - sbs(ballot, W)) - (sbs(replacement, rival) - sbs(ballot, rival))
            if delta:
                coeffs[vi] = delta
        prog.add_constraint(coeffs, GE, 1 + base)
    return prog


def _witness_from_groups(
    e, groups: list[tuple[frozenset[int], list[int]]], picks: list[tuple[int, frozenset[int], int]]
) -> BriberyScript:
    """Turn per-group rewrite counts into concrete edits, lowest indices first.

    `picks` holds (group index, new ballot, count) in variable order.
    """
    cursors = [0] * len(groups)
    edits = []
    for gi, new_ballot, count in picks:
        idxs = groups[gi][1]
        for _ in range(count):
            edits.append((idxs[cursors[gi]], new_ballot))
            cursors[gi] += 1
    return BriberyScript(tuple(edits))


def solve_fpt_m(
    inst: BriberyInstance,
    *,
    var_cap: int = DEFAULT_VAR_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
) -> Decision:
    """Any rule, any operation: guess a distinguished-free committee, then ILP.

    Committees are guessed in lexicographic order and the first feasible guess
    provides the witness, reconstructed by assigning rewrites to the
    lowest-index votes of each ballot group.
    """
    name = "ilp-m"
    e = inst.election
    others = sorted(set(range(e.m)) - inst.distinguished)
    guesses = 0
    nodes = 0
    if len(others) >= inst.k:
        groups = _ballot_groups(e.votes)
        for combo in itertools.combinations(others, inst.k):
            guesses += 1
            prog = build_ilp_m(inst, frozenset(combo), var_cap=var_cap)
            res = solve_ip_feasibility(prog, node_cap=node_cap)
            nodes += res.nodes
            if res.feasible:
                picks = [
                    (var.meta[0], var.meta[2], count)
                    for var, count in zip(prog.variables, res.assignment)
                    if count
                ]
                witness = _witness_from_groups(e, groups, picks)
                return Decision(True, witness, name, {"guesses": guesses, "ip_nodes": nodes})
    return Decision(False, None, name, {"guesses": guesses, "ip_nodes": nodes})


def _require_av(inst: BriberyInstance, op: Operation) -> None:
    if inst.rule is not Rule.AV:
        raise ValueError(f"this solver handles AV only, got rule {inst.rule.value}")
    if inst.op is not op:
        raise ValueError(f"this solver handles {op.value} only, got {inst.op.value}")


def _deletion_targets(inst: BriberyInstance):
    """Shared AV-deletion analysis: threshold score and over-threshold set.

    Returns (scores, threshold, over) where `over` lists the distinguished
    candidates that must drop below the k-th best non-distinguished score, or
    None when the instance is decided outright (see callers).
    """
    e = inst.election
    scores = [0] * e.m
    for vote in e.votes:
        for c in vote:
            scores[c] += 1
    others = [c for c in range(e.m) if c not in inst.distinguished]
    if len(others) < inst.k:
        return scores, None, None
    threshold = sorted((scores[c] for c in others), reverse=True)[inst.k - 1]
    if threshold == 0:
        return scores, 0, None
    over = [c for c in sorted(inst.distinguished) if scores[c] >= threshold]
    return scores, threshold, over


def solve_vdc_av_fpt_J(inst: BriberyInstance, *, node_cap: int = DEFAULT_NODE_CAP) -> Decision:
    """AV vote-level deletions via an ILP over distinguished-candidate patterns.

    Votes are grouped by their intersection with the distinguished set; a
    variable x[A, B] counts votes of pattern A whose approvals B (a nonempty
    subset of A, |B| <= r) get removed.  Feasible iff every over-threshold
    distinguished candidate can lose enough approvals within the budget.
    """
    _require_av(inst, Operation.VDC)
    name = "ilp-j"
    e = inst.election
    scores, threshold, over = _deletion_targets(inst)
    if threshold is None or threshold == 0:
        return Decision(False, None, name, {"ip_nodes": 0})
    if not over:
        return Decision(True, EMPTY_SCRIPT, name, {"ip_nodes": 0})
    patterns: dict[frozenset[int], list[int]] = {}
    for i, vote in enumerate(e.votes):
        patterns.setdefault(vote & inst.distinguished, []).append(i)
    groups = list(patterns.items())
    prog = IntegerProgram()
    per_group_vars: list[list[int]] = []
    removes_candidate: dict[int, list[int]] = {c: [] for c in over}
    for gi, (pattern, idxs) in enumerate(groups):
        vars_here: list[int] = []
        pool = sorted(pattern)
        removals = [
            frozenset(combo)
            for size in range(1, min(inst.distance, len(pool)) + 1)
            for combo in itertools.combinations(pool, size)
        ]
        removals.sort(key=lambda b: tuple(sorted(b)))
        for removed in removals:
            vi = prog.add_variable(
                f"x[{_fmt(pattern)}-{_fmt(removed)}]",
                min(len(idxs), inst.budget),
                meta=(gi, removed),
            )
            vars_here.append(vi)
            for c in removed:
                if c in removes_candidate:
                    removes_candidate[c].append(vi)
        per_group_vars.append(vars_here)
    all_vars = [vi for vars_here in per_group_vars for vi in vars_here]
    if all_vars:
        prog.add_constraint({vi: 1 for vi in all_vars}, LE, inst.budget)
    for gi, vars_here in enumerate(per_group_vars):
        if vars_here:
            prog.add_constraint({vi: 1 for vi in vars_here}, LE, len(groups[gi][1]))
    for c in over:
        deficit = scores[c] - threshold + 1
        prog.add_constraint({vi: 1 for vi in removes_candidate[c]}, GE, deficit)
    res = solve_ip_feasibility(prog, node_cap=node_cap)
    stats = {"ip_nodes": res.nodes}
    if not res.feasible:
        return Decision(False, None, name, stats)
    cursors = [0] * len(groups)
    edits = []
    for var, count in zip(prog.variables, res.assignment):
        if not count:
            continue
        gi, removed = var.meta
        idxs = groups[gi][1]
        for _ in range(count):
            i = idxs[cursors[gi]]
            cursors[gi] += 1
            edits.append((i, e.votes[i] - removed))
    return Decision(True, BriberyScript(tuple(edits)), name, stats)


def _subset_count(n: int, limit: int) -> int:
    return sum(math.comb(n, t) for t in range(0, limit + 1))


def solve_vdc_av_flow(inst: BriberyInstance, *, subset_cap: int = DEFAULT_SUBSET_CAP) -> Decision:
    """AV vote-level deletions by guessing the touched votes, then max flow.

    For each subset of at most `budget` votes that approve an over-threshold
    distinguished candidate, a network routes one unit per deleted approval:
    source -> vote (capacity min(r, overlap)), vote -> candidate (capacity 1),
    candidate -> sink (capacity equal to its required score drop).  The guess
    works iff the max flow meets the total demand.
    """
    _require_av(inst, Operation.VDC)
    name = "flow"
    e = inst.election
    scores, threshold, over = _deletion_targets(inst)
    if threshold is None or threshold == 0:
        return Decision(False, None, name, {"subsets_tried": 0})
    if not over:
        return Decision(True, EMPTY_SCRIPT, name, {"subsets_tried": 0})
    over_set = frozenset(over)
    deficits = {c: scores[c] - threshold + 1 for c in over}
    demand = sum(deficits.values())
    vote_ids = [i for i, vote in enumerate(e.votes) if vote & over_set]
    limit = min(inst.budget, len(vote_ids))
    count = _subset_count(len(vote_ids), limit)
    if count > subset_cap:
        raise CapExceeded("vote-subset enumeration", count, subset_cap)
    tried = 0
    for t in range(0, limit + 1):
        for subset in itertools.combinations(vote_ids, t):
            tried += 1
            num_nodes = 2 + t + len(over)
            source, sink = 0, num_nodes - 1
            net = FlowNetwork(num_nodes, source, sink)
            cand_node = {c: 1 + t + pos for pos, c in enumerate(over)}
            unit_arcs: list[tuple[int, int, int]] = []  # (vote id, candidate, arc id)
            for pos, i in enumerate(subset):
                vote = e.votes[i]
                net.add_arc(source, 1 + pos, min(inst.distance, len(vote & over_set)))
                for c in over:
                    if c in vote:
                        unit_arcs.append((i, c, net.add_arc(1 + pos, cand_node[c], 1)))
            for c in over:
                net.add_arc(cand_node[c], sink, deficits[c])
            value, flows = max_flow(net)
            if value != demand:
                continue
            removed: dict[int, set[int]] = {}
            for i, c, arc in unit_arcs:
                if flows[arc]:
                    removed.setdefault(i, set()).add(c)
            edits = tuple((i, e.votes[i] - frozenset(gone)) for i, gone in removed.items())
            return Decision(True, BriberyScript(edits), name, {"subsets_tried": tried})
    return Decision(False, None, name, {"subsets_tried": tried})


def solve_vc_vac_av_enum(inst: BriberyInstance, *, subset_cap: int = DEFAULT_SUBSET_CAP) -> Decision:
    """AV vote change/addition with the distance restriction switched off.

    Guesses the touched votes; each touched vote is rewritten optimally (for
    vc: approve exactly the non-distinguished candidates; for vac: add all of
    them), which requires the full Hamming allowance r = 2m.
    """
    if inst.rule is not Rule.AV:
        raise ValueError(f"this solver handles AV only, got rule {inst.rule.value}")
    if inst.op not in (Operation.VC, Operation.VAC):
        raise ValueError(f"this solver handles vc/vac only, got {inst.op.value}")
    if inst.distance != 2 * inst.election.m:
        raise ValueError(f"this solver requires distance == 2m == {2 * inst.election.m}, got {inst.distance}")
    name = "enum"
    e = inst.election
    others = frozenset(range(e.m)) - inst.distinguished
    limit = min(inst.budget, e.n)
    count = _subset_count(e.n, limit)
    if count > subset_cap:
        raise CapExceeded("vote-subset enumeration", count, subset_cap)
    tried = 0
    for t in range(0, limit + 1):
        for subset in itertools.combinations(range(e.n), t):
            tried += 1
            votes = list(e.votes)
            edits = []
            for i in subset:
                new_ballot = others if inst.op is Operation.VC else e.votes[i] | others
                if new_ballot != e.votes[i]:
                    votes[i] = new_ballot
                    edits.append((i, new_ballot))
            if _separable_excluded_scaled(e.m, votes, Rule.AV, inst.k, inst.distinguished):
                return Decision(True, BriberyScript(tuple(edits)), name, {"subsets_tried": tried})
    return Decision(False, None, name, {"subsets_tried": tried})
