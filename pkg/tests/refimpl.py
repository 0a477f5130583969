"""Independent reference implementations used as test oracles.

Straight transcriptions of the scoring table into Fraction arithmetic, plus
exhaustive winner/exclusion checks built on them.  Deliberately naive and
kept separate from the package code paths they verify.
"""

from fractions import Fraction
from itertools import combinations

from dbribe import Election, Rule


def ref_committee_score(e: Election, rule: Rule, committee) -> Fraction:
    w = frozenset(committee)
    everyone = frozenset(range(e.m))
    total = Fraction(0)
    for v in e.votes:
        overlap = len(v & w)
        if rule is Rule.AV:
            total += overlap
        elif rule is Rule.SAV:
            if v:
                total += Fraction(overlap, len(v))
        elif rule is Rule.NSAV:
            if v:
                total += Fraction(overlap, len(v))
            if v != everyone:
                total -= Fraction(len(w - v), e.m - len(v))
        elif rule is Rule.CCAV:
            if overlap:
                total += 1
        elif rule is Rule.PAV:
            total += sum(Fraction(1, i) for i in range(1, overlap + 1))
        else:
            raise AssertionError(rule)
    return total


def ref_candidate_score(e: Election, rule: Rule, c: int) -> Fraction:
    return ref_committee_score(e, rule, {c})


def ref_winning_committees(e: Election, rule: Rule, k: int) -> list[frozenset[int]]:
    scored = [
        (ref_committee_score(e, rule, frozenset(combo)), frozenset(combo))
        for combo in combinations(range(e.m), k)
    ]
    best = max(score for score, _ in scored)
    return [w for score, w in scored if score == best]


def ref_excluded(e: Election, rule: Rule, k: int, distinguished) -> bool:
    J = frozenset(distinguished)
    return all(w.isdisjoint(J) for w in ref_winning_committees(e, rule, k))
