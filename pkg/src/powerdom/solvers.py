"""Exact parameter solvers built on pruned subset enumeration.

All minimization solvers ascend subset sizes and stop at the first hit.
The failed-parameter solvers also ascend: the families of failed sets are
downward closed (a subset of a failed set is failed, by monotonicity of the
fixed point), so "no failed set of size k" certifies that k - 1 is the
answer.  Subsets are enumerated in colexicographic order, which for fixed
cardinality coincides with numeric order of the bitmasks; witnesses are
therefore the colexicographically smallest hit and reproducible across
worker counts.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional

from .errors import BudgetExceeded
from .graphs import Graph, VertexSet
from .propagation import fixpoint_bits

DEFAULT_BUDGET = 10**8


@dataclass
class SolverResult:
    parameter: str
    value: int
    witness: Optional[VertexSet]
    propagation_calls: int
    budget_exhausted: bool = False

    def to_json_dict(self) -> dict:
        return {
            "parameter": self.parameter,
            "value": self.value,
            "witness": None if self.witness is None else self.witness.members(),
            "calls": self.propagation_calls,
        }


def colex_masks(n: int, k: int) -> Iterator[int]:
    """All k-subset bitmasks of {0..n-1} in colexicographic order."""
    if k == 0:
        yield 0
        return
    for top in range(k - 1, n):
        high = 1 << top
        for rest in colex_masks(top, k - 1):
            yield rest | high


# -- subset predicates (picklable, keyed by name for worker dispatch) --------


def _closed_nbhd_bits(adj, smask: int) -> int:
    acc = smask
    bits = smask
    while bits:
        low = bits & -bits
        acc |= adj[low.bit_length() - 1]
        bits ^= low
    return acc


def _pred_pds(adj, full: int, smask: int) -> bool:
    return fixpoint_bits(adj, _closed_nbhd_bits(adj, smask)) == full


def _pred_zfs(adj, full: int, smask: int) -> bool:
    return fixpoint_bits(adj, smask) == full


def _pred_dominating(adj, full: int, smask: int) -> bool:
    return _closed_nbhd_bits(adj, smask) == full


def _pred_independent(adj, full: int, smask: int) -> bool:
    bits = smask
    while bits:
        low = bits & -bits
        if adj[low.bit_length() - 1] & smask:
            return False
        bits ^= low
    return True


_PREDICATES = {
    "pds": _pred_pds,
    "zfs": _pred_zfs,
    "dominating": _pred_dominating,
    "independent": _pred_independent,
}


def _scan_job(adj, full, k, tops, pred_name, want, cap):
    """Scan the stratum slice with leading (largest) elements in `tops`.

    Returns (first matching mask or None, evaluations spent).  Slices are
    scanned in ascending colex order, so the returned mask is the colex
    minimum within the slice.
    """
    pred = _PREDICATES[pred_name]
    calls = 0
    if k == 0:
        calls = 1
        if calls > cap:
            raise BudgetExceeded(calls, cap)
        return (0 if pred(adj, full, 0) == want else None), calls
    for top in tops:
        high = 1 << top
        for rest in colex_masks(top, k - 1):
            calls += 1
            if calls > cap:
                raise BudgetExceeded(calls, cap)
            smask = rest | high
            if pred(adj, full, smask) == want:
                return smask, calls
    return None, calls


@dataclass
class _Search:
    """Bookkeeping for one solver run: budget and work counting."""

    g: Graph
    budget: int
    workers: int
    calls: int = 0
    _adj: tuple = field(init=False)
    _full: int = field(init=False)

    def __post_init__(self):
        self._adj = self.g.adjacency_masks()
        self._full = (1 << self.g.n) - 1

    def find_in_stratum(self, k: int, pred_name: str, want: bool) -> Optional[int]:
        """Colex-smallest k-subset mask with pred == want, or None."""
        remaining = self.budget - self.calls
        if remaining <= 0:
            raise BudgetExceeded(self.calls, self.budget)
        n = self.g.n
        if self.workers <= 1 or k == 0 or comb(n, k) < 4 * self.workers:
            try:
                hit, spent = _scan_job(
                    self._adj, self._full, k, range(max(k - 1, 0), n),
                    pred_name, want, remaining,
                )
            except BudgetExceeded as exc:
                raise BudgetExceeded(self.calls + exc.calls, self.budget) from None
            self.calls += spent
            return hit
        tops = list(range(k - 1, n))
        slices = [tops[i :: self.workers] for i in range(self.workers)]
        slices = [s for s in slices if s]
        with concurrent.futures.ProcessPoolExecutor(max_workers=len(slices)) as pool:
            futures = [
                pool.submit(_scan_job, self._adj, self._full, k, s, pred_name, want, remaining)
                for s in slices
            ]
            hits = []
            for fut in futures:
                hit, spent = fut.result()
                self.calls += spent
                if hit is not None:
                    hits.append(hit)
        if self.calls > self.budget:
            raise BudgetExceeded(self.calls, self.budget)
        return min(hits) if hits else None


def _ascend_min(g, pred_name, parameter, budget, workers) -> SolverResult:
    """Smallest k with a k-subset satisfying the predicate."""
    search = _Search(g, budget, workers)
    for k in range(g.n + 1):
        hit = search.find_in_stratum(k, pred_name, want=True)
        if hit is not None:
            return SolverResult(parameter, k, VertexSet(g.n, hit), search.calls)
    raise AssertionError(f"no {parameter} witness exists, even the full vertex set")


def _ascend_max_failed(g, pred_name, parameter, budget, workers) -> SolverResult:
    """Largest k with a k-subset failing the predicate.

    Valid because failed sets form a downward-closed family: once every
    k-subset satisfies the predicate, so does every larger subset.
    """
    search = _Search(g, budget, workers)
    witness = None
    for k in range(g.n + 1):
        hit = search.find_in_stratum(k, pred_name, want=False)
        if hit is None:
            return SolverResult(parameter, k - 1, witness, search.calls)
        witness = VertexSet(g.n, hit)
    # the full vertex set always dominates/forces itself, so we never get here
    raise AssertionError("full vertex set failed the predicate")


def _require_nonempty(g: Graph) -> None:
    if g.n < 1:
        raise ValueError("solvers require at least one vertex")


def gamma_p(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1,
            canonical: bool = False) -> SolverResult:
    """Power domination number: smallest PDS cardinality."""
    _require_nonempty(g)
    return _ascend_min(g, "pds", "gamma_p", budget, workers)


def gamma_bar_p(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1,
                canonical: bool = False) -> SolverResult:
    """Failed power domination number: largest FPDS cardinality.

    The empty set is an FPDS of any nonempty graph, so the value is >= 0,
    and 0 means every nonempty vertex set is a PDS.
    """
    _require_nonempty(g)
    return _ascend_max_failed(g, "pds", "gamma_bar_p", budget, workers)


def zero_forcing_number(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1,
                        canonical: bool = False) -> SolverResult:
    _require_nonempty(g)
    return _ascend_min(g, "zfs", "zero_forcing_number", budget, workers)


def failed_zero_forcing_number(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1,
                               canonical: bool = False) -> SolverResult:
    _require_nonempty(g)
    return _ascend_max_failed(g, "zfs", "failed_zero_forcing_number", budget, workers)


def domination_number(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1,
                      canonical: bool = False) -> SolverResult:
    _require_nonempty(g)
    return _ascend_min(g, "dominating", "domination_number", budget, workers)


def max_independent_set(g: Graph, budget: int = DEFAULT_BUDGET, workers: int = 1,
                        canonical: bool = False) -> SolverResult:
    """Independence number by descending-size exhaustive search."""
    _require_nonempty(g)
    search = _Search(g, budget, workers)
    for k in range(g.n, -1, -1):
        hit = search.find_in_stratum(k, "independent", want=True)
        if hit is not None:
            return SolverResult(
                "max_independent_set", k, VertexSet(g.n, hit), search.calls
            )
    raise AssertionError("the empty set is always independent")
