"""Command-line interface.

Subcommands: solve (decide one instance), winners (winning committees),
verify (check a script), gadget (generate structured instances), bench (run
a suite to CSV, optionally with a figure).  Exit codes for solve: 0 = yes,
1 = no, 2 = error; verify: 0 = script works, 1 = it does not, 2 = error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .bench import run_bench
from .bribery import (
    BriberyInstance,
    Operation,
    VOTE_OPERATIONS,
    apply_script,
    dump_script,
    load_script,
    script_to_json,
    validate_script,
)
from .dispatch import ALGORITHMS, Caps, run_algorithm
from .elections import Rule, is_excluded, score_committee, winning_committees
from .errors import CapExceeded, FormatError
from .gadgets import (
    GADGET_KINDS,
    gen_appadd_sav_rx3c,
    gen_nwd_ccav,
    gen_nwd_pav,
    gen_vc_av_clique,
    gen_vc_av_rx3c,
    gen_vdc_av_rx3c,
    plant_witness,
    solve_source_bruteforce,
)
from .io import (
    fraction_str,
    instance_digest,
    instance_params,
    parse_election,
    parse_graph,
    parse_rx3c,
    write_election,
)


def _add_cap_args(parser: argparse.ArgumentParser) -> None:
    caps = Caps()
    parser.add_argument("--cap-committees", type=int, default=caps.committees, metavar="N")
    parser.add_argument("--cap-scripts", type=int, default=caps.scripts, metavar="N")
    parser.add_argument("--cap-ip-nodes", type=int, default=caps.ip_nodes, metavar="N")
    parser.add_argument("--cap-ip-variables", type=int, default=caps.ip_variables, metavar="N")
    parser.add_argument("--cap-subsets", type=int, default=caps.subsets, metavar="N")


def _caps_from_args(args: argparse.Namespace) -> Caps:
    return Caps(
        committees=args.cap_committees,
        scripts=args.cap_scripts,
        ip_nodes=args.cap_ip_nodes,
        ip_variables=args.cap_ip_variables,
        subsets=args.cap_subsets,
    )


def _add_instance_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--instance", required=True, metavar="FILE", help="election file")
    parser.add_argument("--rule", required=True, choices=[r.value for r in Rule])
    parser.add_argument("--op", required=True, choices=[o.value for o in Operation])
    parser.add_argument("--k", required=True, type=int, help="committee size")
    parser.add_argument("--ell", required=True, type=int, help="operation budget")
    parser.add_argument("--r", type=int, default=None, help="Hamming bound (vote-level ops)")
    parser.add_argument(
        "--distinguished", required=True, metavar="CSV", help="comma-separated candidate indices"
    )


def _instance_from_args(args: argparse.Namespace) -> BriberyInstance:
    election = parse_election(Path(args.instance).read_text())
    op = Operation(args.op)
    try:
        distinguished = frozenset(int(part) for part in args.distinguished.split(",") if part.strip() != "")
    except ValueError:
        raise ValueError(f"--distinguished must be comma-separated integers, got {args.distinguished!r}") from None
    if op in VOTE_OPERATIONS and args.r is None:
        raise ValueError(f"--r is required for the vote-level operation {op.value}")
    return BriberyInstance(
        election,
        Rule(args.rule),
        op,
        distinguished,
        args.k,
        args.ell,
        args.r if args.r is not None else 0,
    )


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _instance_from_args(args)
    started = time.perf_counter()
    decision = run_algorithm(args.algorithm, inst, _caps_from_args(args))
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    _emit(
        {
            "answer": decision.answer,
            "witness": script_to_json(inst.op, decision.witness)
            if decision.witness is not None
            else None,
            "algorithm": decision.algorithm,
            "stats": decision.stats,
            "time_ms": round(elapsed_ms, 3),
            "digest": instance_digest(inst),
        }
    )
    return 0 if decision.answer else 1


def cmd_winners(args: argparse.Namespace) -> int:
    election = parse_election(Path(args.instance).read_text())
    rule = Rule(args.rule)
    committees = winning_committees(election, rule, args.k, enumeration_cap=args.cap_committees)
    score = score_committee(election, rule, committees[0])
    _emit({"committees": [sorted(w) for w in committees], "score": fraction_str(score)})
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    inst = _instance_from_args(args)
    op, script = load_script(Path(args.script).read_text())
    if op is not inst.op:
        raise ValueError(f"script operation {op.value!r} does not match --op {inst.op.value!r}")
    violation = validate_script(inst, script)
    if violation is not None:
        _emit({"ok": False, "violation": str(violation)})
        return 1
    bribed = apply_script(inst.election, script)
    if is_excluded(bribed, inst.rule, inst.k, inst.distinguished, enumeration_cap=args.cap_committees):
        _emit({"ok": True})
        return 0
    winners = winning_committees(bribed, inst.rule, inst.k, enumeration_cap=args.cap_committees)
    _emit(
        {
            "ok": False,
            "winning_committees": [sorted(w) for w in winners],
            "distinguished_winners": [sorted(w) for w in winners if w & inst.distinguished],
        }
    )
    return 1


def cmd_gadget(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in ("nwd-ccav", "nwd-pav", "vc-av-clique"):
        if args.graph is None or args.kappa is None:
            raise ValueError(f"--graph and --kappa are required for kind {kind}")
        graph = parse_graph(Path(args.graph).read_text())
        if kind == "nwd-ccav":
            gadget = gen_nwd_ccav(graph, args.kappa)
        elif kind == "nwd-pav":
            gadget = gen_nwd_pav(graph, args.kappa)
        else:
            gadget = gen_vc_av_clique(
                graph,
                args.kappa,
                r=args.r if args.r is not None else 3,
                allow_small_degree=args.allow_small_degree,
            )
    else:
        if args.rx3c is None:
            raise ValueError(f"--rx3c is required for kind {kind}")
        cover_input = parse_rx3c(Path(args.rx3c).read_text())
        if kind == "appadd-sav-rx3c":
            gadget = gen_appadd_sav_rx3c(cover_input)
        elif kind == "vc-av-rx3c":
            gadget = gen_vc_av_rx3c(cover_input, r=args.r if args.r is not None else 4)
        else:
            gadget = gen_vdc_av_rx3c(cover_input, r=args.r if args.r is not None else 3)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    inst = gadget.instance
    election_path = outdir / "instance.elec"
    election_path.write_text(write_election(inst.election))
    params = instance_params(inst)
    params.update(
        {
            "kind": kind,
            "kappa": gadget.kappa,
            "m": inst.election.m,
            "n": inst.election.n,
            "digest": instance_digest(inst),
        }
    )
    params_path = outdir / "instance.json"
    params_path.write_text(json.dumps(params, sort_keys=True, indent=2) + "\n")
    written = [str(election_path), str(params_path)]
    witness = solve_source_bruteforce(gadget)
    if witness is not None:
        script = plant_witness(gadget, witness)
        script_path = outdir / "planted.json"
        script_path.write_text(dump_script(inst.op, script))
        written.append(str(script_path))
    _emit({"written": written, "source_witness_found": witness is not None})
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    text = run_bench(
        Path(args.suite),
        seed=args.seed,
        out=Path(args.output) if args.output else None,
        plot=Path(args.plot) if args.plot else None,
        caps=_caps_from_args(args),
    )
    if not args.output:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dbribe",
        description="Exclude distinguished candidates from approval-based committees: "
        "exact solvers, verification, and instance generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide one bribery instance")
    _add_instance_args(p_solve)
    p_solve.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    _add_cap_args(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_winners = sub.add_parser("winners", help="list the winning committees")
    p_winners.add_argument("--instance", required=True, metavar="FILE")
    p_winners.add_argument("--rule", required=True, choices=[r.value for r in Rule])
    p_winners.add_argument("--k", required=True, type=int)
    p_winners.add_argument("--cap-committees", type=int, default=Caps().committees, metavar="N")
    p_winners.set_defaults(func=cmd_winners)

    p_verify = sub.add_parser("verify", help="check a bribery script against an instance")
    _add_instance_args(p_verify)
    p_verify.add_argument("--script", required=True, metavar="FILE", help="script JSON file")
    p_verify.add_argument("--cap-committees", type=int, default=Caps().committees, metavar="N")
    p_verify.set_defaults(func=cmd_verify)

    p_gadget = sub.add_parser("gadget", help="generate a structured test instance")
    p_gadget.add_argument("--kind", required=True, choices=GADGET_KINDS)
    p_gadget.add_argument("--graph", metavar="FILE")
    p_gadget.add_argument("--rx3c", metavar="FILE")
    p_gadget.add_argument("--kappa", type=int)
    p_gadget.add_argument("--r", type=int, default=None)
    p_gadget.add_argument("--allow-small-degree", action="store_true")
    p_gadget.add_argument("-o", "--output", required=True, metavar="DIR")
    p_gadget.set_defaults(func=cmd_gadget)

    p_bench = sub.add_parser("bench", help="run a suite of instances to CSV")
    p_bench.add_argument("--suite", required=True, metavar="FILE", help="suite JSON file")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("-o", "--output", metavar="FILE", help="CSV output (default stdout)")
    p_bench.add_argument("--plot", metavar="FILE", help="also render a runtime/answer figure")
    _add_cap_args(p_bench)
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, FormatError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
