"""Algorithm registry, applicability rules, and the fixed auto-selection policy."""

from __future__ import annotations

from dataclasses import dataclass

from .bribery import BriberyInstance, Decision, Operation
from .elections import DEFAULT_ENUMERATION_CAP, Rule
from .fpt import (
    DEFAULT_SUBSET_CAP,
    DEFAULT_VAR_CAP,
    solve_fpt_m,
    solve_vc_vac_av_enum,
    solve_vdc_av_flow,
    solve_vdc_av_fpt_J,
)
from .ilp import DEFAULT_NODE_CAP
from .oracle import DEFAULT_SCRIPT_CAP, solve_bruteforce
from .poly import solve_appadd_av, solve_appdel_av, solve_vac_av_k1, solve_vdc_av_r1

ALGORITHMS = ("auto", "oracle", "poly", "ilp-m", "ilp-j", "flow", "enum")


@dataclass(frozen=True)
class Caps:
    """Resource caps threaded through all solvers."""

    committees: int = DEFAULT_ENUMERATION_CAP
    scripts: int = DEFAULT_SCRIPT_CAP
    ip_nodes: int = DEFAULT_NODE_CAP
    ip_variables: int = DEFAULT_VAR_CAP
    subsets: int = DEFAULT_SUBSET_CAP


def _poly_solver(inst: BriberyInstance):
    if inst.rule is not Rule.AV:
        return None
    if inst.op is Operation.APPADD:
        return solve_appadd_av
    if inst.op is Operation.APPDEL:
        return solve_appdel_av
    if inst.op is Operation.VAC and inst.k == 1:
        return solve_vac_av_k1
    if inst.op is Operation.VDC and inst.distance == 1:
        return solve_vdc_av_r1
    return None


def inapplicable_reason(name: str, inst: BriberyInstance) -> str | None:
    """None when the named algorithm can decide this instance, else why not."""
    if name in ("auto", "oracle", "ilp-m"):
        return None
    if name == "poly":
        if _poly_solver(inst) is None:
            return (
                "no polynomial-time solver for this rule/operation combination "
                f"({inst.rule.value} {inst.op.value}, k={inst.k}, r={inst.distance})"
            )
        return None
    if name in ("ilp-j", "flow"):
        if inst.rule is not Rule.AV or inst.op is not Operation.VDC:
            return f"{name} handles AV vote-deletion instances only"
        return None
    if name == "enum":
        if inst.rule is not Rule.AV or inst.op not in (Operation.VC, Operation.VAC):
            return "enum handles AV vote-change/vote-addition instances only"
        if inst.distance != 2 * inst.election.m:
            return f"enum requires an unrestricted distance bound r = 2m = {2 * inst.election.m}"
        return None
    return f"unknown algorithm {name!r}"


def choose_auto(inst: BriberyInstance) -> str:
    """Fixed policy: poly, then flow/ilp-j/enum specializations, then ilp-m, then oracle."""
    for name in ("poly", "ilp-j", "enum", "ilp-m", "oracle"):
        if inapplicable_reason(name, inst) is None:
            return name
    raise AssertionError("unreachable: ilp-m is always applicable")


def run_algorithm(name: str, inst: BriberyInstance, caps: Caps = Caps()) -> Decision:
    """Run one algorithm (or the auto choice) on an instance."""
    if name == "auto":
        name = choose_auto(inst)
    reason = inapplicable_reason(name, inst)
    if reason is not None:
        raise ValueError(reason)
    if name == "oracle":
        return solve_bruteforce(inst, script_cap=caps.scripts, enumeration_cap=caps.committees)
    if name == "poly":
        return _poly_solver(inst)(inst)
    if name == "ilp-m":
        return solve_fpt_m(inst, var_cap=caps.ip_variables, node_cap=caps.ip_nodes)
    if name == "ilp-j":
        return solve_vdc_av_fpt_J(inst, node_cap=caps.ip_nodes)
    if name == "flow":
        return solve_vdc_av_flow(inst, subset_cap=caps.subsets)
    if name == "enum":
        return solve_vc_vac_av_enum(inst, subset_cap=caps.subsets)
    raise ValueError(f"unknown algorithm {name!r}")
