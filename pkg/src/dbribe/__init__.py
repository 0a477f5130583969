"""Exact solvers for destructive bribery in approval-based committee voting.

Decide whether a set of distinguished candidates can be excluded from every
winning k-committee under AV, SAV, NSAV, CCAV, or PAV by at most a budget of
ballot modifications (single approval additions/deletions, or whole-vote
changes bounded in Hamming distance).
"""

from .bribery import (
    ATOMIC_OPERATIONS,
    BriberyInstance,
    BriberyScript,
    Decision,
    EMPTY_SCRIPT,
    Operation,
    VOTE_OPERATIONS,
    Violation,
    apply_script,
    check_solution,
    hamming,
    script_cost,
    script_from_json,
    script_to_json,
    validate_script,
)
from .dispatch import ALGORITHMS, Caps, choose_auto, run_algorithm
from .elections import (
    DEFAULT_ENUMERATION_CAP,
    Election,
    Rule,
    SEPARABLE_RULES,
    candidate_scores,
    is_excluded,
    scale,
    scaled_ballot_score,
    score_candidate,
    score_committee,
    separable_excluded,
    winning_committees,
)
from .errors import CapExceeded, FormatError
from .flow import FlowNetwork, max_flow
from .fpt import (
    build_ilp_m,
    solve_fpt_m,
    solve_vc_vac_av_enum,
    solve_vdc_av_flow,
    solve_vdc_av_fpt_J,
)
from .gadgets import (
    GadgetInstance,
    Graph,
    RX3CInstance,
    clique_bruteforce,
    gen_appadd_sav_rx3c,
    gen_nwd_ccav,
    gen_nwd_pav,
    gen_vc_av_clique,
    gen_vc_av_rx3c,
    gen_vdc_av_rx3c,
    independent_set_bruteforce,
    nsav_variant,
    pad_with_dummies,
    plant_witness,
    rx3c_bruteforce,
    solve_source_bruteforce,
)
from .ilp import Constraint, IntegerProgram, IPFeasibility, Variable, solve_ip_feasibility
from .io import (
    fraction_str,
    instance_digest,
    parse_election,
    parse_graph,
    parse_rx3c,
    write_election,
    write_graph,
    write_rx3c,
)
from .matching import max_bipartite_matching
from .oracle import estimate_search_space, solve_bruteforce
from .poly import solve_appadd_av, solve_appdel_av, solve_vac_av_k1, solve_vdc_av_r1

__version__ = "0.1.0"
