"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.  All randomness is seeded, all comparisons exact.
"""

import itertools
import json
import random
from fractions import Fraction

from conftest import (
    complete_bipartite,
    complete_graph,
    cube_graph,
    cycle_graph,
    petersen_graph,
    random_distinguished,
    random_election,
    random_instance,
    rx3c_blocks,
)

from dbribe import (
    BriberyInstance,
    Election,
    Operation,
    Rule,
    candidate_scores,
    check_solution,
    clique_bruteforce,
    gen_appadd_sav_rx3c,
    gen_nwd_ccav,
    gen_nwd_pav,
    gen_vc_av_clique,
    gen_vc_av_rx3c,
    gen_vdc_av_rx3c,
    independent_set_bruteforce,
    is_excluded,
    pad_with_dummies,
    plant_witness,
    rx3c_bruteforce,
    score_committee,
    separable_excluded,
    solve_appadd_av,
    solve_appdel_av,
    solve_bruteforce,
    solve_fpt_m,
    solve_vac_av_k1,
    solve_vc_vac_av_enum,
    solve_vdc_av_flow,
    solve_vdc_av_fpt_J,
    solve_vdc_av_r1,
    script_cost,
    validate_script,
    winning_committees,
)
from dbribe.bench import run_suite, rows_to_csv
from dbribe.dispatch import Caps


def _passed(number: int, text: str) -> None:
    print(f"ACCEPTANCE PASS [{number}] {text}")


def test_criterion_1_rule_scoring():
    e = Election(3, [{0, 1}, {0}, {1, 2}])
    assert candidate_scores(e, Rule.AV) == [2, 2, 1]
    assert candidate_scores(e, Rule.SAV) == [Fraction(3, 2), 1, Fraction(1, 2)]
    assert candidate_scores(e, Rule.NSAV) == [Fraction(1, 2), Fraction(1, 2), -1]
    assert score_committee(e, Rule.PAV, {0, 1}) == Fraction(7, 2)
    assert score_committee(e, Rule.CCAV, {0}) == 2
    _passed(1, "candidate and committee scores on the worked election are exact")


def test_criterion_2_separable_fast_path():
    rng = random.Random(2201)
    elections = 0
    checks = 0
    while elections < 200:
        e = random_election(rng, m_max=6, n_max=8)
        elections += 1
        for rule in (Rule.AV, Rule.SAV, Rule.NSAV):
            for k in range(1, min(3, e.m) + 1):
                winners = winning_committees(e, rule, k)
                for size in range(1, e.m + 1):
                    for J in itertools.combinations(range(e.m), size):
                        J = frozenset(J)
                        by_enumeration = all(w.isdisjoint(J) for w in winners)
                        assert separable_excluded(e, rule, k, J) == by_enumeration
                        checks += 1
    _passed(2, f"separable fast path == enumeration on {elections} elections ({checks} checks)")


def test_criterion_3_sav_nsav_order_transfer():
    rng = random.Random(2301)
    for _ in range(100):
        e = random_election(rng, m_max=5, n_max=6, m_min=2)
        padded = pad_with_dummies(e)  # exactly n * m^2 dummies
        assert padded.m == e.m + e.n * e.m * e.m
        sav = candidate_scores(e, Rule.SAV)
        nsav = candidate_scores(padded, Rule.NSAV)
        # dummy penalties are each below 1/(m(m-1)), so any strict SAV gap
        # survives padding; SAV ties may drift but only inside that bound
        penalty_bound = Fraction(1, e.m * (e.m - 1))
        for a in range(e.m):
            for b in range(e.m):
                if sav[a] > sav[b]:
                    assert nsav[a] > nsav[b]
                elif sav[a] == sav[b]:
                    assert abs(nsav[a] - nsav[b]) < penalty_bound
    _passed(3, "strict SAV order transfers to NSAV after n*m^2 dummy padding (100 elections)")


POLY_SOLVERS = {
    Operation.APPADD: solve_appadd_av,
    Operation.APPDEL: solve_appdel_av,
    Operation.VAC: solve_vac_av_k1,
    Operation.VDC: solve_vdc_av_r1,
}


def _check_poly(inst: BriberyInstance) -> None:
    mine = POLY_SOLVERS[inst.op](inst)
    truth = solve_bruteforce(inst)
    assert mine.answer == truth.answer, inst
    if mine.answer:
        assert check_solution(inst, mine.witness), inst


def test_criterion_4_poly_solvers_vs_oracle():
    ballots = [frozenset(b) for size in range(4) for b in itertools.combinations(range(3), size)]
    assert len(ballots) == 8
    grid_runs = 0
    for votes in itertools.product(ballots, repeat=3):
        e = Election(3, votes)
        for size in (1, 2, 3):
            for J in itertools.combinations(range(3), size):
                J = frozenset(J)
                for k in (1, 2):
                    for budget in (0, 1, 2):
                        _check_poly(BriberyInstance(e, Rule.AV, Operation.APPADD, J, k, budget, 0))
                        _check_poly(BriberyInstance(e, Rule.AV, Operation.APPDEL, J, k, budget, 0))
                        _check_poly(BriberyInstance(e, Rule.AV, Operation.VDC, J, k, budget, 1))
                        grid_runs += 3
                        if k == 1:
                            for r in (0, 1, 2):
                                _check_poly(BriberyInstance(e, Rule.AV, Operation.VAC, J, 1, budget, r))
                                grid_runs += 1
    rng = random.Random(2401)
    random_runs = 0
    for op in (Operation.APPADD, Operation.APPDEL, Operation.VAC, Operation.VDC):
        done = 0
        while done < 125:
            inst = random_instance(
                rng, rules=(Rule.AV,), ops=(op,), m_max=5, n_max=6, ell_max=3, r_max=3
            )
            if op is Operation.VAC and inst.k != 1:
                continue
            if op is Operation.VDC and inst.distance != 1:
                continue
            _check_poly(inst)
            done += 1
            random_runs += 1
    _passed(4, f"four polynomial solvers == oracle on {grid_runs} grid + {random_runs} random instances")


def test_criterion_5_fpt_solvers_vs_oracle():
    rng = random.Random(2501)
    pair_runs = 0
    for rule in Rule:
        for op in Operation:
            for _ in range(50):
                inst = random_instance(
                    rng, rules=(rule,), ops=(op,), m_max=4, n_max=5, k_max=4, ell_max=2, r_max=2
                )
                mine = solve_fpt_m(inst)
                truth = solve_bruteforce(inst)
                assert mine.answer == truth.answer, inst
                if mine.answer:
                    assert check_solution(inst, mine.witness), inst
                pair_runs += 1
    vdc_runs = 0
    for _ in range(300):
        inst = random_instance(
            rng, rules=(Rule.AV,), ops=(Operation.VDC,), m_max=5, n_max=6, k_max=5, ell_max=3, r_max=3
        )
        truth = solve_bruteforce(inst).answer
        ilp = solve_vdc_av_fpt_J(inst)
        flw = solve_vdc_av_flow(inst)
        assert ilp.answer == flw.answer == truth, inst
        if inst.distance == 1:
            assert solve_vdc_av_r1(inst).answer == truth, inst
        for decision in (ilp, flw):
            if decision.answer:
                assert check_solution(inst, decision.witness), inst
        vdc_runs += 1
    enum_runs = 0
    for _ in range(300):
        base = random_instance(
            rng, rules=(Rule.AV,), ops=(Operation.VC, Operation.VAC), m_max=4, n_max=5, k_max=4, ell_max=2
        )
        inst = BriberyInstance(
            base.election, base.rule, base.op, base.distinguished, base.k, base.budget,
            2 * base.election.m,
        )
        mine = solve_vc_vac_av_enum(inst)
        assert mine.answer == solve_bruteforce(inst).answer, inst
        if mine.answer:
            assert check_solution(inst, mine.witness), inst
        enum_runs += 1
    _passed(
        5,
        f"ilp-m == oracle on {pair_runs} runs over all 25 rule/operation pairs; "
        f"ilp-j == flow == oracle on {vdc_runs} deletion instances; "
        f"enum == oracle on {enum_runs} unrestricted-distance instances",
    )


NWD_GRAPHS = [
    ("C3", cycle_graph(3)),
    ("C4", cycle_graph(4)),
    ("C5", cycle_graph(5)),
    ("C6", cycle_graph(6)),
    ("C7", cycle_graph(7)),
    ("C8", cycle_graph(8)),
    ("K3", complete_graph(3)),
    ("K4", complete_graph(4)),
    ("K5", complete_graph(5)),
    ("K33", complete_bipartite(3, 3)),
    ("Q3", cube_graph()),
    ("Petersen", petersen_graph()),
]


def test_criterion_6_nwd_gadget_equivalence():
    checked = 0
    for name, graph in NWD_GRAPHS:
        for kappa in (2, 3):
            has_independent_set = independent_set_bruteforce(graph, kappa) is not None
            for generator in (gen_nwd_ccav, gen_nwd_pav):
                inst = generator(graph, kappa).instance
                excluded = is_excluded(inst.election, inst.rule, inst.k, inst.distinguished)
                assert excluded == has_independent_set, (name, kappa, generator.__name__)
                checked += 1
    c5 = gen_nwd_ccav(cycle_graph(5), 2).instance
    assert is_excluded(c5.election, c5.rule, c5.k, c5.distinguished)
    k3 = gen_nwd_ccav(complete_graph(3), 2).instance
    assert not is_excluded(k3.election, k3.rule, k3.k, k3.distinguished)
    _passed(6, f"independent-set existence == exclusion on {checked} generated instances")


def test_criterion_7_gadget_score_values():
    gadget = gen_appadd_sav_rx3c(rx3c_blocks(6))
    e = gadget.instance.election
    sav = candidate_scores(e, Rule.SAV)
    assert sav[e.m - 1] == 0
    assert all(sav[c] == Fraction(3, 2) for c in range(e.m - 1))

    for graph, kappa in ((complete_graph(10), 2), (complete_graph(29), 3)):
        gadget = gen_vc_av_clique(graph, kappa)
        e = gadget.instance.election
        av = candidate_scores(e, Rule.AV)
        edge_count = len(graph.edges)
        assert av[e.m - 1] == edge_count
        expected = 1 + edge_count - (kappa - 1) * (kappa + 2) // 2
        assert all(av[u] == expected for u in range(graph.n))
    _passed(7, "generated instances reproduce the prescribed exact scores")


def test_criterion_8_planted_witness_soundness():
    cases = []
    for generator, kappa in ((gen_nwd_ccav, 2), (gen_nwd_pav, 2)):
        gadget = generator(cycle_graph(5), kappa)
        witness = independent_set_bruteforce(gadget.source, kappa)
        assert witness is not None
        cases.append((gadget, witness, 0))
    for gadget in (gen_appadd_sav_rx3c(rx3c_blocks(6)), gen_vc_av_rx3c(rx3c_blocks(6)), gen_vdc_av_rx3c(rx3c_blocks(6))):
        cover = rx3c_bruteforce(gadget.source)
        assert cover is not None
        cases.append((gadget, cover, gadget.kappa))
    for graph, kappa in ((complete_graph(10), 2), (complete_graph(29), 3)):
        gadget = gen_vc_av_clique(graph, kappa)
        clique = clique_bruteforce(gadget.source, kappa)
        assert clique is not None
        cases.append((gadget, clique, kappa * (kappa - 1) // 2))
    for gadget, witness, expected_cost in cases:
        script = plant_witness(gadget, witness)
        assert validate_script(gadget.instance, script) is None, gadget.kind
        assert script_cost(gadget.instance, script) == expected_cost, gadget.kind
        assert check_solution(gadget.instance, script), gadget.kind
    _passed(8, f"planted witnesses validate at the prescribed cost and exclude ({len(cases)} gadgets)")


def test_criterion_9_bench_determinism(tmp_path):
    suite = {
        "algorithms": ["oracle", "ilp-m"],
        "random": {"count": 20, "m_max": 3, "n_max": 3, "k_max": 2, "ell_max": 1, "r_max": 2},
    }
    path = tmp_path / "suite.json"
    path.write_text(json.dumps(suite))
    first_rows, _ = run_suite(path, seed=99, caps=Caps())
    second_rows, _ = run_suite(path, seed=99, caps=Caps())
    first_csv = rows_to_csv(first_rows)
    second_csv = rows_to_csv(second_rows)
    assert first_csv.encode() == second_csv.encode()
    assert all(row["agreement"] == "true" for row in first_rows)
    _passed(9, "bench suite output is byte-identical under a fixed seed")
