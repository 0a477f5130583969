"""Text file formats: elections, graphs, exact-cover inputs, digests.

Election format: optional '#' comment lines anywhere, a header "m n", then n
ballot lines of space-separated candidate indices ("-" for an empty ballot).
Writing always emits canonical form (indices ascending, no comments), so
write(parse(text)) normalizes and parse(write(e)) is the identity.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .bribery import BriberyInstance
from .elections import Election
from .errors import FormatError
from .gadgets import Graph, RX3CInstance


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for ln, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((ln, stripped))
    return out


def _parse_fields(ln: int, line: str, want: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != want:
        raise FormatError(ln, f"expected {want} {what}, got {len(parts)}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(ln, f"non-integer {what} in {line!r}") from None


def parse_election(text: str) -> Election:
    lines = _content_lines(text)
    if not lines:
        raise FormatError(1, "empty election file")
    ln, header = lines[0]
    m, n = _parse_fields(ln, header, 2, "header fields (m n)")
    if m < 1:
        raise FormatError(ln, f"candidate count must be >= 1, got {m}")
    if n < 0:
        raise FormatError(ln, f"vote count must be >= 0, got {n}")
    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] if body else ln)
        raise FormatError(where, f"expected {n} ballot lines, got {len(body)}")
    votes = []
    for ln, line in body:
        if line == "-":
            votes.append(frozenset())
            continue
        seen: set[int] = set()
        for part in line.split():
            try:
                c = int(part)
            except ValueError:
                raise FormatError(ln, f"non-integer candidate index {part!r}") from None
            if not 0 <= c < m:
                raise FormatError(ln, f"candidate index {c} out of range 0..{m - 1}")
            if c in seen:
                raise FormatError(ln, f"duplicate candidate index {c}")
            seen.add(c)
        votes.append(frozenset(seen))
    return Election(m, tuple(votes))


def write_election(e: Election) -> str:
    lines = [f"{e.m} {e.n}"]
    for vote in e.votes:
        lines.append(" ".join(map(str, sorted(vote))) if vote else "-")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Header "n m" then m edge lines "u v" (0-based)."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError(1, "empty graph file")
    ln, header = lines[0]
    n, m = _parse_fields(ln, header, 2, "header fields (n m)")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(ln, f"expected {m} edge lines, got {len(body)}")
    edges = []
    for ln, line in body:
        u, v = _parse_fields(ln, line, 2, "edge endpoints")
        edges.append((u, v))
    try:
        return Graph(n, tuple(edges))
    except ValueError as exc:
        raise FormatError(lines[0][0], str(exc)) from None


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_rx3c(text: str) -> RX3CInstance:
    """Header "kappa" then 3*kappa triple lines of three element indices."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError(1, "empty exact-cover file")
    ln, header = lines[0]
    (kappa,) = _parse_fields(ln, header, 1, "header field (kappa)")
    body = lines[1:]
    if len(body) != 3 * kappa:
        raise FormatError(ln, f"expected {3 * kappa} triple lines, got {len(body)}")
    triples = []
    for ln, line in body:
        triples.append(frozenset(_parse_fields(ln, line, 3, "triple elements")))
    try:
        return RX3CInstance(kappa, tuple(triples))
    except ValueError as exc:
        raise FormatError(lines[0][0], str(exc)) from None


def write_rx3c(x: RX3CInstance) -> str:
    lines = [str(x.kappa)]
    lines.extend(" ".join(map(str, sorted(t))) for t in x.triples)
    return "\n".join(lines) + "\n"


def fraction_str(value: Fraction) -> str:
    """Exact wire form "p/q" (denominator kept even when it is 1)."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def instance_params(inst: BriberyInstance) -> dict:
    return {
        "rule": inst.rule.value,
        "op": inst.op.value,
        "k": inst.k,
        "ell": inst.budget,
        "r": inst.distance,
        "distinguished": sorted(inst.distinguished),
    }


def instance_digest(inst: BriberyInstance) -> str:
    """Stable hash of the canonical serialization of an instance."""
    canonical = write_election(inst.election) + json.dumps(instance_params(inst), sort_keys=True)
    return hashlib.sha256(canonical.encode()).hexdigest()[:16]
