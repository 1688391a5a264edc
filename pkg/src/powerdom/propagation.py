"""Fixed-point monitoring processes and candidate-set classification.

Two chains share one forcing rule: a monitored vertex with exactly one
unmonitored neighbor forces that neighbor.  The power-domination chain
starts from the closed neighborhood of the candidate set (domination step);
the zero-forcing chain starts from the candidate set itself.  Updates are
simultaneous per step, so traces are comparable across implementations
using the same convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, VertexSet, closed_neighborhood

POWER_DOMINATION = "power-domination"
ZERO_FORCING = "zero-forcing"


def _force_round(adj: Sequence[int], cur: int) -> int:
    """One simultaneous forcing round; returns the bits newly forced."""
    add = 0
    bits = cur
    while bits:
        low = bits & -bits
        bits ^= low
        out = adj[low.bit_length() - 1] & ~cur
        if out and not (out & (out - 1)):
            add |= out
    return add


def run_chain_bits(adj: Sequence[int], start: int) -> list[int]:
    """Full chain of monitored-set masks, up to the first repeat (exclusive)."""
    steps = [start]
    cur = start
    while True:
        add = _force_round(adj, cur)
        if not add:
            return steps
        cur |= add
        steps.append(cur)


def fixpoint_bits(adj: Sequence[int], start: int) -> int:
    """Final mask of the chain, without recording intermediate steps."""
    cur = start
    while True:
        add = _force_round(adj, cur)
        if not add:
            return cur
        cur |= add


@dataclass(frozen=True)
class PropagationTrace:
    """The monotone chain step 0 <= step 1 <= ... up to its fixed point."""

    kind: str
    steps: tuple[VertexSet, ...]
    stabilized_at: int

    @property
    def fixed_point(self) -> VertexSet:
        return self.steps[-1]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "steps": [s.members() for s in self.steps],
            "stabilized_at": self.stabilized_at,
        }


@dataclass(frozen=True)
class Classification:
    """Verdicts for one (graph, candidate set) pair."""

    is_pds: bool
    is_fpds: bool
    is_spds: bool
    properly_stalled: bool
    maximally_stalled: bool
    monitored: VertexSet

    def to_json_dict(self) -> dict:
        return {
            "is_pds": self.is_pds,
            "is_fpds": self.is_fpds,
            "is_spds": self.is_spds,
            "properly_stalled": self.properly_stalled,
            "maximally_stalled": self.maximally_stalled,
            "monitored": self.monitored.members(),
        }


def _trace(g: Graph, kind: str, start_bits: int) -> PropagationTrace:
    raw = run_chain_bits(g.adjacency_masks(), start_bits)
    steps = tuple(VertexSet(g.n, bits) for bits in raw)
    return PropagationTrace(kind=kind, steps=steps, stabilized_at=len(steps) - 1)


def monitored_fixpoint(g: Graph, s: VertexSet) -> PropagationTrace:
    """Power-domination chain: step 0 is the closed neighborhood of s."""
    return _trace(g, POWER_DOMINATION, closed_neighborhood(g, s).bits)


def zero_forcing_fixpoint(g: Graph, s: VertexSet) -> PropagationTrace:
    """Zero-forcing chain: step 0 is s itself (no domination step)."""
    return _trace(g, ZERO_FORCING, s.bits)


def is_pds(g: Graph, s: VertexSet) -> bool:
    adj = g.adjacency_masks()
    start = closed_neighborhood(g, s).bits
    return fixpoint_bits(adj, start) == (1 << g.n) - 1


def classify(g: Graph, s: VertexSet) -> Classification:
    """Full verdict set for s, including the n - |s| extra propagations
    needed to decide maximal stalling (only evaluated when s is stalled)."""
    adj = g.adjacency_masks()
    full = (1 << g.n) - 1
    step0 = closed_neighborhood(g, s).bits
    monitored = fixpoint_bits(adj, step0)
    pds = monitored == full
    spds = monitored == step0
    properly = spds and monitored != full
    maximal = False
    if spds:
        maximal = True
        rest = full & ~s.bits
        while rest:
            low = rest & -rest
            rest ^= low
            aug = s.bits | low
            start = aug
            bits = aug
            while bits:
                b = bits & -bits
                start |= adj[b.bit_length() - 1]
                bits ^= b
            if fixpoint_bits(adj, start) != full:
                maximal = False
                break
    return Classification(
        is_pds=pds,
        is_fpds=not pds,
        is_spds=spds,
        properly_stalled=properly,
        maximally_stalled=maximal,
        monitored=VertexSet(g.n, monitored),
    )
