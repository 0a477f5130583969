"""Structured test-instance builders with plantable witnesses.

Each generator reduces a combinatorial source problem (exact 3-cover,
independent set, clique) to a bribery instance whose answer is controlled by
the source instance; when the source has a solution, `plant_witness` produces
the prescribed bribery script so solvers can be exercised against known-yes
instances.  Brute-force solvers for the source problems are included.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .bribery import BriberyInstance, BriberyScript, EMPTY_SCRIPT, Operation
from .elections import Election, Rule
from .errors import CapExceeded

DEFAULT_SOURCE_CAP = 10**7

GADGET_KINDS = (
    "nwd-ccav",
    "nwd-pav",
    "appadd-sav-rx3c",
    "vc-av-rx3c",
    "vdc-av-rx3c",
    "vc-av-clique",
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus normalized edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def regular_degree(self) -> int:
        """The common vertex degree; raises if the graph is not regular."""
        degrees = self.degrees()
        if not degrees:
            raise ValueError("graph has no vertices")
        d = degrees[0]
        if any(x != d for x in degrees):
            raise ValueError("graph is not regular")
        return d

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)


@dataclass(frozen=True)
class RX3CInstance:
    """Exact-cover-by-3-sets input in its regular form.

    Universe 0..3*kappa-1; exactly 3*kappa triples; every universe element
    occurs in exactly three triples.  A solution is a subcollection of kappa
    pairwise-disjoint triples covering the universe.
    """

    kappa: int
    triples: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.kappa < 1:
            raise ValueError("kappa must be positive")
        triples = tuple(frozenset(t) for t in self.triples)
        object.__setattr__(self, "triples", triples)
        size = 3 * self.kappa
        if len(triples) != size:
            raise ValueError(f"need exactly {size} triples, got {len(triples)}")
        occurrences = [0] * size
        for t in triples:
            if len(t) != 3:
                raise ValueError(f"triple {sorted(t)} does not have exactly 3 elements")
            for x in t:
                if not 0 <= x < size:
                    raise ValueError(f"universe element {x} out of range")
                occurrences[x] += 1
        bad = [x for x, cnt in enumerate(occurrences) if cnt != 3]
        if bad:
            raise ValueError(f"elements {bad} do not appear in exactly three triples of the collection")

    @property
    def universe_size(self) -> int:
        return 3 * self.kappa


def rx3c_bruteforce(inst: RX3CInstance, *, cap: int = DEFAULT_SOURCE_CAP) -> tuple[int, ...] | None:
    """First (in lexicographic index order) exact cover of kappa triples, or None."""
    total = math.comb(len(inst.triples), inst.kappa)
    if total > cap:
        raise CapExceeded("exact-cover enumeration", total, cap)
    universe = frozenset(range(inst.universe_size))
    for combo in itertools.combinations(range(len(inst.triples)), inst.kappa):
        union = set()
        count = 0
        for idx in combo:
            union |= inst.triples[idx]
            count += 3
        if count == len(union) and union == universe:
            return combo
    return None


def _vertex_subset_search(g: Graph, kappa: int, want_edges: bool, cap: int) -> frozenset[int] | None:
    if kappa < 0:
        raise ValueError("kappa must be non-negative")
    if kappa > g.n:
        return None
    total = math.comb(g.n, kappa)
    if total > cap:
        raise CapExceeded("vertex-subset enumeration", total, cap)
    edge_set = set(g.edges)
    for combo in itertools.combinations(range(g.n), kappa):
        pairs = itertools.combinations(combo, 2)
        if want_edges:
            if all(p in edge_set for p in pairs):
                return frozenset(combo)
        elif not any(p in edge_set for p in pairs):
            return frozenset(combo)
    return None


def independent_set_bruteforce(g: Graph, kappa: int, *, cap: int = DEFAULT_SOURCE_CAP) -> frozenset[int] | None:
    """First independent set of the given size in lexicographic order, or None."""
    return _vertex_subset_search(g, kappa, want_edges=False, cap=cap)


def clique_bruteforce(g: Graph, kappa: int, *, cap: int = DEFAULT_SOURCE_CAP) -> frozenset[int] | None:
    """First clique of the given size in lexicographic order, or None."""
    return _vertex_subset_search(g, kappa, want_edges=True, cap=cap)


@dataclass(frozen=True)
class GadgetInstance:
    """A generated bribery instance plus the bookkeeping `plant_witness` needs."""

    kind: str
    instance: BriberyInstance
    kappa: int
    source: object
    triple_votes: tuple[int, ...] = ()
    edge_votes: tuple[int, ...] = ()


def gen_nwd_ccav(g: Graph, kappa: int) -> GadgetInstance:
    """CCAV instance (budget 0) where the extra candidate is excluded iff the
    graph has an independent set of the given size.

    One candidate per vertex plus one distinguished candidate p; one ballot
    per edge approving its two endpoints; d-1 ballots approving only p.
    """
    d = g.regular_degree()
    if d < 1:
        raise ValueError("graph must be regular of degree >= 1")
    p = g.n
    votes = [frozenset(edge) for edge in g.edges]
    edge_votes = tuple(range(len(votes)))
    votes.extend([frozenset({p})] * (d - 1))
    election = Election(g.n + 1, tuple(votes))
    inst = BriberyInstance(election, Rule.CCAV, Operation.VC, frozenset({p}), kappa, 0, 0)
    return GadgetInstance("nwd-ccav", inst, kappa, g, edge_votes=edge_votes)


def gen_nwd_pav(g: Graph, kappa: int) -> GadgetInstance:
    """PAV twin of gen_nwd_ccav: two ballots per edge and 2d-1 ballots for p."""
    d = g.regular_degree()
    if d < 1:
        raise ValueError("graph must be regular of degree >= 1")
    p = g.n
    votes: list[frozenset[int]] = []
    edge_votes = []
    for edge in g.edges:
        edge_votes.append(len(votes))
        votes.append(frozenset(edge))
        votes.append(frozenset(edge))
    votes.extend([frozenset({p})] * (2 * d - 1))
    election = Election(g.n + 1, tuple(votes))
    inst = BriberyInstance(election, Rule.PAV, Operation.VC, frozenset({p}), kappa, 0, 0)
    return GadgetInstance("nwd-pav", inst, kappa, g, edge_votes=tuple(edge_votes))


def gen_appadd_sav_rx3c(x: RX3CInstance) -> GadgetInstance:
    """SAV approval-addition instance solvable iff the exact cover exists.

    Requires kappa even and > 4.  Universe elements are the distinguished
    candidates; p starts at SAV score 0 while every element candidate scores
    kappa/4, and an exact cover is exactly a way to lift p strictly above all
    of them with kappa additions.
    """
    kappa = x.kappa
    if kappa <= 4 or kappa % 2:
        raise ValueError("this construction needs kappa even and greater than 4")
    size = x.universe_size
    p = size
    blanket = frozenset(range(size))
    votes = [blanket] * (3 * kappa * kappa // 4 - 3 * kappa)
    triple_votes = tuple(range(len(votes), len(votes) + len(x.triples)))
    votes.extend(x.triples)
    election = Election(size + 1, tuple(votes))
    inst = BriberyInstance(
        election, Rule.SAV, Operation.APPADD, frozenset(range(size)), 1, kappa, 0
    )
    return GadgetInstance("appadd-sav-rx3c", inst, kappa, x, triple_votes=triple_votes)


def gen_vc_av_rx3c(x: RX3CInstance, r: int = 4) -> GadgetInstance:
    """AV vote-change instance solvable iff the exact cover exists (r >= 4).

    kappa-3 singleton ballots per element plus one ballot per triple; every
    element candidate scores kappa while p scores 0.
    """
    kappa = x.kappa
    if kappa < 4:
        raise ValueError("this construction needs kappa >= 4")
    if r < 4:
        raise ValueError("this construction needs distance bound r >= 4")
    size = x.universe_size
    votes: list[frozenset[int]] = []
    for element in range(size):
        votes.extend([frozenset({element})] * (kappa - 3))
    triple_votes = tuple(range(len(votes), len(votes) + len(x.triples)))
    votes.extend(x.triples)
    election = Election(size + 1, tuple(votes))
    inst = BriberyInstance(election, Rule.AV, Operation.VC, frozenset(range(size)), 1, kappa, r)
    return GadgetInstance("vc-av-rx3c", inst, kappa, x, triple_votes=triple_votes)


def gen_vdc_av_rx3c(x: RX3CInstance, r: int = 3) -> GadgetInstance:
    """AV vote-deletion instance solvable iff the exact cover exists (r >= 3).

    Three ballots approve only p; one ballot per triple; every candidate
    scores exactly 3.
    """
    if r < 3:
        raise ValueError("this construction needs distance bound r >= 3")
    kappa = x.kappa
    size = x.universe_size
    p = size
    votes = [frozenset({p})] * 3
    triple_votes = tuple(range(len(votes), len(votes) + len(x.triples)))
    votes = votes + list(x.triples)
    election = Election(size + 1, tuple(votes))
    inst = BriberyInstance(election, Rule.AV, Operation.VDC, frozenset(range(size)), 1, kappa, r)
    return GadgetInstance("vdc-av-rx3c", inst, kappa, x, triple_votes=triple_votes)


def gen_vc_av_clique(
    g: Graph, kappa: int, r: int = 3, *, allow_small_degree: bool = False
) -> GadgetInstance:
    """AV vote-change instance solvable iff the graph has a kappa-clique.

    One ballot per edge approving everyone except its endpoints, plus
    d+1-(kappa-1)(kappa+2)/2 ballots approving everyone except p.  The
    argument needs degree d > kappa^3; pass allow_small_degree=True to build
    desk-scale instances anyway (a warning is emitted and the instance may
    not faithfully encode the clique question).
    """
    d = g.regular_degree()
    if kappa < 2:
        raise ValueError("this construction needs kappa >= 2")
    if r < 3:
        raise ValueError("this construction needs distance bound r >= 3")
    if d <= kappa**3:
        if not allow_small_degree:
            raise ValueError(
                f"degree {d} must exceed kappa^3 = {kappa ** 3}; "
                "pass allow_small_degree=True for smoke-test instances"
            )
        warnings.warn(
            f"degree {d} <= kappa^3 = {kappa ** 3}: instance may not encode the clique question",
            stacklevel=2,
        )
    extra = d + 1 - (kappa - 1) * (kappa + 2) // 2
    if extra <= 0:
        raise ValueError(f"nonpositive count of all-but-p votes ({extra})")
    p = g.n
    everyone = frozenset(range(g.n + 1))
    votes = [everyone - {u, v} for u, v in g.edges]
    edge_votes = tuple(range(len(votes)))
    votes.extend([frozenset(range(g.n))] * extra)
    election = Election(g.n + 1, tuple(votes))
    inst = BriberyInstance(
        election, Rule.AV, Operation.VC, frozenset({p}), kappa, kappa * (kappa - 1) // 2, r
    )
    return GadgetInstance("vc-av-clique", inst, kappa, g, edge_votes=edge_votes)


def _check_cover(x: RX3CInstance, cover: Sequence[int]) -> tuple[int, ...]:
    cover = tuple(cover)
    if len(cover) != x.kappa:
        raise ValueError(f"cover must pick exactly {x.kappa} triples")
    union: set[int] = set()
    for idx in cover:
        if not 0 <= idx < len(x.triples):
            raise ValueError(f"triple index {idx} out of range")
        union |= x.triples[idx]
    if len(union) != x.universe_size:
        raise ValueError("selected triples do not form an exact cover")
    return cover


def _check_clique(g: Graph, vertices: Iterable[int], kappa: int) -> frozenset[int]:
    chosen = frozenset(vertices)
    if len(chosen) != kappa:
        raise ValueError(f"clique witness must have exactly {kappa} vertices")
    edge_set = set(g.edges)
    for pair in itertools.combinations(sorted(chosen), 2):
        if pair not in edge_set:
            raise ValueError(f"vertices {pair} are not adjacent")
    return chosen


def _check_independent(g: Graph, vertices: Iterable[int], kappa: int) -> frozenset[int]:
    chosen = frozenset(vertices)
    if len(chosen) != kappa:
        raise ValueError(f"independent-set witness must have exactly {kappa} vertices")
    edge_set = set(g.edges)
    for pair in itertools.combinations(sorted(chosen), 2):
        if pair in edge_set:
            raise ValueError(f"vertices {pair} are adjacent")
    return chosen


def plant_witness(gadget: GadgetInstance, source_witness) -> BriberyScript:
    """The bribery script a source-problem solution prescribes for a gadget.

    The witness is validated against the source instance first.  For the
    budget-0 non-winner gadgets the script is empty (the instance is already
    a yes-instance when an independent set exists).
    """
    inst = gadget.instance
    e = inst.election
    if gadget.kind in ("nwd-ccav", "nwd-pav"):
        _check_independent(gadget.source, source_witness, gadget.kappa)
        return EMPTY_SCRIPT
    if gadget.kind == "appadd-sav-rx3c":
        cover = _check_cover(gadget.source, source_witness)
        p = e.m - 1
        return BriberyScript(tuple((gadget.triple_votes[idx], e.votes[gadget.triple_votes[idx]] | {p}) for idx in cover))
    if gadget.kind == "vc-av-rx3c":
        cover = _check_cover(gadget.source, source_witness)
        p = e.m - 1
        return BriberyScript(tuple((gadget.triple_votes[idx], frozenset({p})) for idx in cover))
    if gadget.kind == "vdc-av-rx3c":
        cover = _check_cover(gadget.source, source_witness)
        return BriberyScript(tuple((gadget.triple_votes[idx], frozenset()) for idx in cover))
    if gadget.kind == "vc-av-clique":
        clique = _check_clique(gadget.source, source_witness, gadget.kappa)
        rewrite = frozenset(range(e.m - 1))  # everyone except p
        edits = []
        for pos, (u, v) in enumerate(gadget.source.edges):
            if u in clique and v in clique:
                edits.append((gadget.edge_votes[pos], rewrite))
        return BriberyScript(tuple(edits))
    raise ValueError(f"unknown gadget kind {gadget.kind!r}")


def solve_source_bruteforce(gadget: GadgetInstance, *, cap: int = DEFAULT_SOURCE_CAP):
    """Run the matching source-problem brute force for a gadget; None if unsolvable."""
    if gadget.kind in ("nwd-ccav", "nwd-pav"):
        return independent_set_bruteforce(gadget.source, gadget.kappa, cap=cap)
    if gadget.kind == "vc-av-clique":
        return clique_bruteforce(gadget.source, gadget.kappa, cap=cap)
    return rx3c_bruteforce(gadget.source, cap=cap)


def pad_with_dummies(e: Election, count: int | None = None) -> Election:
    """Append never-approved candidates (default n*m^2 of them).

    With that many dummies the order of the original candidates' NSAV scores
    in the padded election matches the order of their SAV scores in the
    original one.
    """
    if count is None:
        count = e.n * e.m * e.m
    if count < 0:
        raise ValueError("dummy count must be non-negative")
    return Election(e.m + count, e.votes)


def nsav_variant(inst: BriberyInstance, count: int | None = None) -> BriberyInstance:
    """SAV -> NSAV transfer of an instance by dummy-candidate padding."""
    if inst.rule is not Rule.SAV:
        raise ValueError("padding transfer is defined for SAV instances")
    return replace(inst, election=pad_with_dummies(inst.election, count), rule=Rule.NSAV)
