"""Classical Max-Cut baselines: exhaustive search and a greedy heuristic."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import ResourceLimitError
from .graph import CutAssignment, Graph, cut_value, labels_from_index


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one classical solver run, with its own wall-clock time."""

    assignment: CutAssignment
    elapsed: float
    algorithm_tag: str

    def __post_init__(self):
        if self.algorithm_tag not in ("brute_force", "greedy"):
            raise ValueError(f"unknown algorithm tag {self.algorithm_tag!r}")
        if self.elapsed < 0:
            raise ValueError("elapsed time cannot be negative")


def brute_force_maxcut(g: Graph, cap: int = 24) -> SolveResult:
    """Exact maximum cut by exhaustive enumeration.

    Evaluates every partition with vertex 0 fixed to ``+1`` (the global
    sign flip maps the other half onto these, so nothing is lost) and
    returns the best.  Ties resolve to the smallest basis index among
    the enumerated labelings, which makes the result fully
    deterministic.  Cost is ``O(2**(n-1) * m)``; graphs with more than
    ``cap`` vertices are refused with :class:`ResourceLimitError`.
    """
    if g.n > cap:
        raise ResourceLimitError(
            f"brute force on n={g.n} exceeds cap {cap} (2**{g.n} partitions)"
        )
    t0 = time.perf_counter()
    best_value = -1
    best_index = 0
    for k in range(1 << (g.n - 1)):
        index = k << 1  # vertex 0 sits in bit 0; keep it at label +1
        value = cut_value(g, labels_from_index(g.n, index))
        if value > best_value:
            best_value = value
            best_index = index
    assignment = CutAssignment(
        labels=labels_from_index(g.n, best_index), cut_value=best_value
    )
    return SolveResult(
        assignment=assignment,
        elapsed=time.perf_counter() - t0,
        algorithm_tag="brute_force",
    )


def greedy_maxcut(g: Graph) -> SolveResult:
    """Greedy heuristic: place each vertex opposite most of its neighbors.

    Vertices are visited in index order; vertex 0 gets ``+1``.  Each
    subsequent vertex counts its already-labeled neighbors on each side
    and takes the side with fewer of them (ties go to ``+1``), cutting
    at least half of the edges considered at every step.  The final cut
    therefore has value at least ``ceil(m / 2)``.  Runs in ``O(n + m)``.
    """
    t0 = time.perf_counter()
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    labels = [0] * g.n
    labels[0] = 1
    for v in range(1, g.n):
        plus = sum(1 for w in adj[v] if labels[w] == 1)
        minus = sum(1 for w in adj[v] if labels[w] == -1)
        labels[v] = 1 if minus >= plus else -1
    assignment = CutAssignment.from_labels(g, labels)
    return SolveResult(
        assignment=assignment,
        elapsed=time.perf_counter() - t0,
        algorithm_tag="greedy",
    )
