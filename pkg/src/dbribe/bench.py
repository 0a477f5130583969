"""Benchmark harness: run suites of instances across algorithms, emit CSV.

The CSV contains only deterministic fields (answers, costs, agreement), so a
fixed seed reproduces it byte for byte; wall-clock timings feed the optional
figure instead.
"""

from __future__ import annotations

import csv
import io as _io
import json
import random
import time
from pathlib import Path

from .bribery import BriberyInstance, Operation, VOTE_OPERATIONS, script_cost
from .dispatch import ALGORITHMS, Caps, run_algorithm
from .elections import Election, Rule
from .errors import CapExceeded
from .io import instance_digest, parse_election

CSV_FIELDS = (
    "index",
    "instance",
    "digest",
    "rule",
    "op",
    "k",
    "ell",
    "r",
    "distinguished",
    "algorithm",
    "status",
    "answer",
    "witness_cost",
    "agreement",
)


def random_election(rng: random.Random, m_max: int, n_max: int) -> Election:
    m = rng.randint(1, m_max)
    n = rng.randint(1, n_max)
    votes = tuple(frozenset(c for c in range(m) if rng.getrandbits(1)) for _ in range(n))
    return Election(m, votes)


def random_instance(
    rng: random.Random,
    *,
    rules: list[Rule],
    ops: list[Operation],
    m_max: int = 3,
    n_max: int = 4,
    k_max: int = 2,
    ell_max: int = 2,
    r_max: int = 2,
) -> BriberyInstance:
    e = random_election(rng, m_max, n_max)
    rule = rng.choice(rules)
    op = rng.choice(ops)
    while True:
        distinguished = frozenset(c for c in range(e.m) if rng.getrandbits(1))
        if distinguished:
            break
    k = rng.randint(1, min(k_max, e.m))
    budget = rng.randint(0, ell_max)
    distance = rng.randint(0, r_max) if op in VOTE_OPERATIONS else 0
    return BriberyInstance(e, rule, op, distinguished, k, budget, distance)


def _instance_from_entry(entry: dict, base: Path) -> BriberyInstance:
    election = parse_election((base / entry["election"]).read_text())
    op = Operation(entry["op"])
    return BriberyInstance(
        election,
        Rule(entry["rule"]),
        op,
        frozenset(int(c) for c in entry["distinguished"]),
        int(entry["k"]),
        int(entry["ell"]),
        int(entry.get("r", 0)),
    )


def load_suite(path: Path, seed: int) -> tuple[list[str], list[tuple[str, BriberyInstance]]]:
    """Read a suite JSON file; random instances are drawn from the given seed."""
    config = json.loads(path.read_text())
    algorithms = config.get("algorithms", ["auto"])
    for name in algorithms:
        if name not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {name!r} in suite")
    labeled: list[tuple[str, BriberyInstance]] = []
    for entry in config.get("instances", []):
        labeled.append((entry["election"], _instance_from_entry(entry, path.parent)))
    rnd = config.get("random")
    if rnd:
        rng = random.Random(seed)
        rules = [Rule(x) for x in rnd.get("rules", [r.value for r in Rule])]
        ops = [Operation(x) for x in rnd.get("ops", [o.value for o in Operation])]
        kwargs = {
            key: int(rnd[key])
            for key in ("m_max", "n_max", "k_max", "ell_max", "r_max")
            if key in rnd
        }
        for i in range(int(rnd.get("count", 0))):
            labeled.append((f"random-{i}", random_instance(rng, rules=rules, ops=ops, **kwargs)))
    return list(algorithms), labeled


def run_suite(
    path: Path, *, seed: int = 0, caps: Caps = Caps()
) -> tuple[list[dict], dict[str, list[float]]]:
    """All rows of the suite plus per-algorithm wall times (for plotting only)."""
    algorithms, labeled = load_suite(path, seed)
    rows: list[dict] = []
    timings: dict[str, list[float]] = {name: [] for name in algorithms}
    for index, (label, inst) in enumerate(labeled):
        answers = []
        group: list[dict] = []
        for name in algorithms:
            row = {
                "index": index,
                "instance": label,
                "digest": instance_digest(inst),
                "rule": inst.rule.value,
                "op": inst.op.value,
                "k": inst.k,
                "ell": inst.budget,
                "r": inst.distance,
                "distinguished": ";".join(map(str, sorted(inst.distinguished))),
                "algorithm": name,
            }
            started = time.perf_counter()
            try:
                decision = run_algorithm(name, inst, caps)
            except (CapExceeded, ValueError) as exc:
                row["status"] = f"error: {exc}"
                row["answer"] = ""
                row["witness_cost"] = ""
            else:
                timings[name].append(time.perf_counter() - started)
                row["status"] = "ok"
                row["answer"] = "yes" if decision.answer else "no"
                row["witness_cost"] = (
                    script_cost(inst, decision.witness) if decision.witness is not None else ""
                )
                answers.append(decision.answer)
            group.append(row)
        agreement = "true" if not answers or all(a == answers[0] for a in answers[1:]) else "false"
        for row in group:
            row["agreement"] = agreement
        rows.extend(group)
    return rows, timings


def rows_to_csv(rows: list[dict]) -> str:
    buffer = _io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def render_figure(timings: dict[str, list[float]], rows: list[dict], path: Path) -> None:
    """Mean runtime per algorithm plus the answer mix, rendered to an image file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = list(timings)
    means = [1000.0 * (sum(ts) / len(ts)) if ts else 0.0 for ts in timings.values()]
    yes_counts = [
        sum(1 for row in rows if row["algorithm"] == name and row["answer"] == "yes")
        for name in names
    ]
    no_counts = [
        sum(1 for row in rows if row["algorithm"] == name and row["answer"] == "no")
        for name in names
    ]
    fig, (ax_time, ax_mix) = plt.subplots(1, 2, figsize=(9, 4))
    ax_time.bar(names, means, color="#4878d0")
    ax_time.set_ylabel("mean wall time (ms)")
    ax_time.set_title("runtime by algorithm")
    ax_time.tick_params(axis="x", rotation=30)
    ax_mix.bar(names, yes_counts, label="yes", color="#6acc64")
    ax_mix.bar(names, no_counts, bottom=yes_counts, label="no", color="#d65f5f")
    ax_mix.set_ylabel("instances")
    ax_mix.set_title("answer mix")
    ax_mix.tick_params(axis="x", rotation=30)
    ax_mix.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def run_bench(
    suite: Path,
    *,
    seed: int = 0,
    out: Path | None = None,
    plot: Path | None = None,
    caps: Caps = Caps(),
) -> str:
    rows, timings = run_suite(suite, seed=seed, caps=caps)
    text = rows_to_csv(rows)
    if out is not None:
        out.write_text(text)
    if plot is not None:
        render_figure(timings, rows, plot)
    return text
