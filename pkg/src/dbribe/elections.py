"""Approval elections and exact committee scoring under five rules.

All scores are exact.  Internally every rule's per-ballot contribution is an
integer once multiplied by ``scale(m)`` (the lcm of 1..m, a common denominator
for every rule), and the public scoring functions expose values as
``fractions.Fraction``.  Floating point is never used.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapExceeded

DEFAULT_ENUMERATION_CAP = 10**7


class Rule(str, Enum):
    """The five committee scoring rules."""

    AV = "av"
    SAV = "sav"
    NSAV = "nsav"
    CCAV = "ccav"
    PAV = "pav"


#: Rules whose committee score is the sum of the members' individual scores.
SEPARABLE_RULES = frozenset({Rule.AV, Rule.SAV, Rule.NSAV})


@dataclass(frozen=True)
class Election:
    """A set of candidates 0..m-1 and an ordered sequence of approval ballots.

    Ballots are arbitrary subsets of the candidates; empty and full ballots
    are allowed.  Instances are immutable and hashable.
    """

    m: int
    votes: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("an election needs at least one candidate")
        votes = tuple(frozenset(v) for v in self.votes)
        object.__setattr__(self, "votes", votes)
        for i, vote in enumerate(votes):
            for c in vote:
                if not 0 <= c < self.m:
                    raise ValueError(f"vote {i} approves unknown candidate {c!r}")

    @property
    def n(self) -> int:
        return len(self.votes)


def scale(m: int) -> int:
    """lcm(1..m): one common denominator for every rule's ballot contribution."""
    return math.lcm(*range(1, m + 1))


def scaled_ballot_score(m: int, rule: Rule, ballot: frozenset[int], committee: frozenset[int]) -> int:
    """One ballot's contribution to a committee's score, times ``scale(m)``.

    Always an integer: every denominator a rule can produce divides some
    i <= m and therefore divides scale(m).
    """
    s = scale(m)
    inter = len(ballot & committee)
    if rule is Rule.AV:
        return inter * s
    if rule is Rule.CCAV:
        return s if inter else 0
    if rule is Rule.PAV:
        return sum(s // i for i in range(1, inter + 1))
    if rule is Rule.SAV:
        return inter * (s // len(ballot)) if ballot else 0
    if rule is Rule.NSAV:
        pos = inter * (s // len(ballot)) if ballot else 0
        neg = 0
        if len(ballot) < m:
            neg = (len(committee) - inter) * (s // (m - len(ballot)))
        return pos - neg
    raise ValueError(f"unknown rule {rule!r}")


def _scaled_committee_score(m: int, votes: Sequence[frozenset[int]], rule: Rule, committee: frozenset[int]) -> int:
    s = scale(m)
    total = 0
    if rule is Rule.AV:
        for v in votes:
            total += len(v & committee)
        return total * s
    if rule is Rule.CCAV:
        for v in votes:
            if not committee.isdisjoint(v):
                total += 1
        return total * s
    if rule is Rule.PAV:
        harmonic = [0] * (m + 1)
        for i in range(1, m + 1):
            harmonic[i] = harmonic[i - 1] + s // i
        for v in votes:
            total += harmonic[len(v & committee)]
        return total
    if rule is Rule.SAV:
        for v in votes:
            if v:
                total += len(v & committee) * (s // len(v))
        return total
    if rule is Rule.NSAV:
        size = len(committee)
        for v in votes:
            lv = len(v)
            inter = len(v & committee)
            if lv:
                total += inter * (s // lv)
            if lv < m:
                total -= (size - inter) * (s // (m - lv))
        return total
    raise ValueError(f"unknown rule {rule!r}")


def _scaled_candidate_scores(m: int, votes: Sequence[frozenset[int]], rule: Rule) -> list[int]:
    """Per-candidate singleton scores, times scale(m).  One pass over the votes."""
    s = scale(m)
    scores = [0] * m
    if rule in (Rule.AV, Rule.CCAV, Rule.PAV):
        # All three agree on singletons: the number of approving votes.
        for v in votes:
            for c in v:
                scores[c] += 1
        return [x * s for x in scores]
    if rule is Rule.SAV:
        for v in votes:
            if v:
                share = s // len(v)
                for c in v:
                    scores[c] += share
        return scores
    if rule is Rule.NSAV:
        shift = 0
        for v in votes:
            lv = len(v)
            if lv:
                share = s // lv
                for c in v:
                    scores[c] += share
            if lv < m:
                penalty = s // (m - lv)
                shift -= penalty
                for c in v:
                    scores[c] += penalty
        return [x + shift for x in scores]
    raise ValueError(f"unknown rule {rule!r}")


def _check_committee(e: Election, committee: frozenset[int]) -> frozenset[int]:
    w = frozenset(committee)
    if not 1 <= len(w) <= e.m:
        raise ValueError(f"committee size must be between 1 and {e.m}, got {len(w)}")
    for c in w:
        if not 0 <= c < e.m:
            raise ValueError(f"committee contains unknown candidate {c!r}")
    return w


def _check_k(e: Election, k: int) -> None:
    if not 1 <= k <= e.m:
        raise ValueError(f"committee size k must be between 1 and {e.m}, got {k}")


def _check_distinguished(e: Election, distinguished: Iterable[int]) -> frozenset[int]:
    J = frozenset(distinguished)
    if not J:
        raise ValueError("distinguished set must be nonempty")
    for c in J:
        if not 0 <= c < e.m:
            raise ValueError(f"distinguished set contains unknown candidate {c!r}")
    return J


def score_committee(e: Election, rule: Rule, committee: Iterable[int]) -> Fraction:
    """Exact total score of a committee under the given rule."""
    w = _check_committee(e, frozenset(committee))
    return Fraction(_scaled_committee_score(e.m, e.votes, rule, w), scale(e.m))


def score_candidate(e: Election, rule: Rule, c: int) -> Fraction:
    """Exact score of a single candidate; equals the singleton committee score."""
    if not 0 <= c < e.m:
        raise ValueError(f"unknown candidate {c!r}")
    return Fraction(_scaled_candidate_scores(e.m, e.votes, rule)[c], scale(e.m))


def candidate_scores(e: Election, rule: Rule) -> list[Fraction]:
    """Exact scores of all candidates, in candidate order."""
    s = scale(e.m)
    return [Fraction(x, s) for x in _scaled_candidate_scores(e.m, e.votes, rule)]


def winning_committees(
    e: Election, rule: Rule, k: int, *, enumeration_cap: int = DEFAULT_ENUMERATION_CAP
) -> list[frozenset[int]]:
    """All maximum-score k-committees, with no tie-breaking.

    Enumerates every one of the C(m, k) committees and returns all that attain
    the maximum score, in lexicographic order of their sorted members.  Raises
    CapExceeded when C(m, k) exceeds the enumeration cap.
    """
    _check_k(e, k)
    total = math.comb(e.m, k)
    if total > enumeration_cap:
        raise CapExceeded("committee enumeration", total, enumeration_cap)
    best: int | None = None
    winners: list[frozenset[int]] = []
    for combo in itertools.combinations(range(e.m), k):
        w = frozenset(combo)
        sc = _scaled_committee_score(e.m, e.votes, rule, w)
        if best is None or sc > best:
            best = sc
            winners = [w]
        elif sc == best:
            winners.append(w)
    return winners


def _separable_excluded_scaled(
    m: int, votes: Sequence[frozenset[int]], rule: Rule, k: int, distinguished: frozenset[int]
) -> bool:
    scores = _scaled_candidate_scores(m, votes, rule)
    top = max(scores[c] for c in distinguished)
    above = 0
    for x in scores:
        if x > top:
            above += 1
            if above >= k:
                return True
    return False


def separable_excluded(e: Election, rule: Rule, k: int, distinguished: Iterable[int]) -> bool:
    """Exclusion test for the separable rules (AV, SAV, NSAV) without enumeration.

    For separable rules the winning k-committees are exactly the k-subsets of
    top-scoring candidates, so a candidate sits in no winning committee iff at
    least k candidates score strictly higher.
    """
    if rule not in SEPARABLE_RULES:
        raise ValueError(f"rule {rule.value} is not candidate-separable")
    J = _check_distinguished(e, distinguished)
    _check_k(e, k)
    return _separable_excluded_scaled(e.m, e.votes, rule, k, J)


def _excluded_votes(
    m: int,
    votes: Sequence[frozenset[int]],
    rule: Rule,
    k: int,
    distinguished: frozenset[int],
    enumeration_cap: int,
) -> bool:
    """Exclusion check on raw votes; fast path for separable rules."""
    if rule in SEPARABLE_RULES:
        return _separable_excluded_scaled(m, votes, rule, k, distinguished)
    total = math.comb(m, k)
    if total > enumeration_cap:
        raise CapExceeded("committee enumeration", total, enumeration_cap)
    best: int | None = None
    best_hits_distinguished = True
    for combo in itertools.combinations(range(m), k):
        w = frozenset(combo)
        sc = _scaled_committee_score(m, votes, rule, w)
        if best is None or sc > best:
            best = sc
            best_hits_distinguished = not w.isdisjoint(distinguished)
        elif sc == best and not best_hits_distinguished:
            best_hits_distinguished = not w.isdisjoint(distinguished)
    return not best_hits_distinguished


def is_excluded(
    e: Election,
    rule: Rule,
    k: int,
    distinguished: Iterable[int],
    *,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    method: str = "auto",
) -> bool:
    """True iff no winning k-committee contains a distinguished candidate.

    ``method`` may be "auto" (separable fast path where available, otherwise
    exhaustive enumeration), "separable", or "enumeration".  Both paths agree
    wherever both apply.
    """
    J = _check_distinguished(e, distinguished)
    _check_k(e, k)
    if method not in ("auto", "separable", "enumeration"):
        raise ValueError(f"unknown method {method!r}")
    if method == "separable" or (method == "auto" and rule in SEPARABLE_RULES):
        return separable_excluded(e, rule, k, J)
    return all(w.isdisjoint(J) for w in winning_committees(e, rule, k, enumeration_cap=enumeration_cap))
