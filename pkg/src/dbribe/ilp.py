"""Bounded integer feasibility by depth-first search with bound pruning.

Variables are non-negative integers with finite upper bounds; constraints are
linear inequalities with integer coefficients.  The search assigns variables
in declaration order, values ascending, and prunes a prefix as soon as some
constraint can no longer be met by any completion (using precomputed suffix
contribution bounds).  This decides feasibility exactly; no optimality and no
polyhedral machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import CapExceeded

DEFAULT_NODE_CAP = 10**7

LE = "<="
GE = ">="


@dataclass(frozen=True)
class Variable:
    """A non-negative integer variable with an inclusive upper bound."""

    name: str
    upper: int
    meta: object = None

    def __post_init__(self):
        if self.upper < 0:
            raise ValueError(f"variable {self.name}: upper bound must be >= 0")


@dataclass(frozen=True)
class Constraint:
    """sum(coeffs[i] * x_i) <= rhs or >= rhs; coeffs keyed by variable index."""

    coeffs: tuple[tuple[int, int], ...]
    sense: str
    rhs: int

    def __post_init__(self):
        if self.sense not in (LE, GE):
            raise ValueError(f"constraint sense must be {LE!r} or {GE!r}")


@dataclass
class IntegerProgram:
    variables: list[Variable] = field(default_factory=list)
    constraints: list[Constraint] = field(default_factory=list)

    def add_variable(self, name: str, upper: int, meta: object = None) -> int:
        self.variables.append(Variable(name, upper, meta))
        return len(self.variables) - 1

    def add_constraint(self, coeffs: dict[int, int] | Sequence[tuple[int, int]], sense: str, rhs: int) -> None:
        pairs = tuple(sorted(coeffs.items() if isinstance(coeffs, dict) else coeffs))
        for idx, _ in pairs:
            if not 0 <= idx < len(self.variables):
                raise ValueError(f"constraint references unknown variable {idx}")
        self.constraints.append(Constraint(pairs, sense, rhs))


@dataclass
class IPFeasibility:
    """Outcome of a feasibility search: an assignment (or None) plus node count."""

    assignment: list[int] | None
    nodes: int

    @property
    def feasible(self) -> bool:
        return self.assignment is not None


def solve_ip_feasibility(program: IntegerProgram, *, node_cap: int = DEFAULT_NODE_CAP) -> IPFeasibility:
    """First feasible point in (declaration-order, ascending-value) order, or None.

    Raises CapExceeded if the search would visit more than ``node_cap`` nodes
    without finishing; a capped search never reports infeasibility.
    """
    nvars = len(program.variables)
    ncons = len(program.constraints)
    uppers = [v.upper for v in program.variables]

    # coefficient of each constraint on each variable, and per-variable incidence
    coeff: list[dict[int, int]] = [dict(c.coeffs) for c in program.constraints]
    touching: list[list[int]] = [[] for _ in range(nvars)]
    for ci, c in enumerate(program.constraints):
        for vi, _ in c.coeffs:
            touching[vi].append(ci)

    # rest_min[ci][j] / rest_max[ci][j]: bounds on the contribution of
    # variables j.. to constraint ci over the whole box.
    rest_min = [[0] * (nvars + 1) for _ in range(ncons)]
    rest_max = [[0] * (nvars + 1) for _ in range(ncons)]
    for ci in range(ncons):
        lo = hi = 0
        for j in range(nvars - 1, -1, -1):
            a = coeff[ci].get(j, 0)
            if a > 0:
                hi += a * uppers[j]
            elif a < 0:
                lo += a * uppers[j]
            rest_min[ci][j] = lo
            rest_max[ci][j] = hi

    senses = [c.sense for c in program.constraints]
    rhs = [c.rhs for c in program.constraints]

    def viable(lhs: list[int], j: int) -> bool:
        for ci in range(ncons):
            if senses[ci] == LE:
                if lhs[ci] + rest_min[ci][j] > rhs[ci]:
                    return False
            elif lhs[ci] + rest_max[ci][j] < rhs[ci]:
                return False
        return True

    UNSET = -1
    values = [UNSET] * nvars
    lhs = [0] * ncons
    nodes = 0

    if not viable(lhs, 0):
        return IPFeasibility(None, 0)
    j = 0
    while True:
        if j == nvars:
            return IPFeasibility(values[:], nodes)
        val = values[j] + 1
        if val > uppers[j]:
            # exhausted this variable: undo its contribution and backtrack
            if values[j] > 0:
                for ci in touching[j]:
                    lhs[ci] -= coeff[ci][j] * values[j]
            values[j] = UNSET
            j -= 1
            if j < 0:
                return IPFeasibility(None, nodes)
            continue
        nodes += 1
        if nodes > node_cap:
            raise CapExceeded("integer feasibility search", nodes, node_cap)
        values[j] = val
        if val:
            for ci in touching[j]:
                lhs[ci] += coeff[ci][j]
        if viable(lhs, j + 1):
            j += 1
