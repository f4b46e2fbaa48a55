"""Undirected simple graphs for Max-Cut, plus generation and serialization.

Conventions used throughout the package:

* Vertices are integers ``0 .. n-1``.
* Edges are unordered pairs, stored canonically as ``(u, v)`` with
  ``u < v``, sorted lexicographically.  Self-loops and duplicate edges
  are rejected.
* A cut assignment labels every vertex ``+1`` or ``-1``; its value is
  the number of edges whose endpoints carry different labels.
* Computational-basis index ``b`` encodes vertex ``i`` in bit ``i``
  (least significant bit first): bit ``0`` means label ``+1``, bit
  ``1`` means label ``-1``.

Random-graph generation is deterministic and byte-stable across
platforms and library versions.  It does not touch any global RNG.
The algorithm, fixed for reproducibility:

1. A SplitMix64 stream is seeded with ``seed`` (taken modulo 2**64).
2. Uniform integers below a bound are drawn by rejection sampling, so
   every residue is equally likely.
3. ``m`` distinct pair indices in ``[0, n*(n-1)/2)`` are chosen by a
   partial Fisher-Yates shuffle over the virtual array of all pair
   indices, then each index is unranked to the edge ``(u, v)`` in
   lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EdgeListParseError

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.  Edges are canonicalized on construction."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive int, got {self.n!r}")
        canon = []
        seen = set()
        for pair in self.edges:
            u, v = pair
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u and v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            canon.append((u, v))
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_edges(self) -> int:
        return self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class CutAssignment:
    """A +1/-1 vertex labeling together with its (cached) cut value."""

    labels: tuple[int, ...]
    cut_value: int

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        if any(x not in (1, -1) for x in labels):
            raise ValueError("labels must be +1 or -1")
        if self.cut_value < 0:
            raise ValueError(f"cut value must be non-negative, got {self.cut_value}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_labels(cls, g: Graph, labels) -> "CutAssignment":
        labels = tuple(int(x) for x in labels)
        return cls(labels=labels, cut_value=cut_value(g, labels))


def cut_value(g: Graph, labels) -> int:
    """Number of edges of ``g`` crossing the partition given by ``labels``."""
    if len(labels) != g.n:
        raise ValueError(f"expected {g.n} labels, got {len(labels)}")
    return sum(1 for u, v in g.edges if labels[u] != labels[v])


def labels_from_index(n: int, index: int) -> tuple[int, ...]:
    """Decode basis index ``index`` into labels (bit i: 0 -> +1, 1 -> -1)."""
    if not (0 <= index < (1 << n)):
        raise ValueError(f"index {index} out of range for n={n}")
    return tuple(1 - 2 * ((index >> i) & 1) for i in range(n))


def cut_values_by_basis(g: Graph) -> np.ndarray:
    """Cut value of every computational-basis state, as an int32 array.

    Entry ``b`` is the cut value of the labeling encoded by basis index
    ``b``; the array has ``2**n`` entries.  An edge crosses the cut
    exactly when the endpoint bits of ``b`` differ.
    """
    idx = np.arange(1 << g.n, dtype=np.uint32)
    out = np.zeros(idx.shape, dtype=np.int32)
    for u, v in g.edges:
        out += (((idx >> u) ^ (idx >> v)) & 1).astype(np.int32)
    return out


class _SplitMix64:
    """Minimal SplitMix64 stream with unbiased bounded draws."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % bound


def _unrank_pair(n: int, k: int) -> tuple[int, int]:
    # Lexicographic rank k over pairs (0,1),(0,2),...,(n-2,n-1).
    u = 0
    row = n - 1
    while k >= row:
        k -= row
        u += 1
        row -= 1
    return u, u + 1 + k


def generate_random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform random simple graph with exactly ``m`` edges.

    Edges are drawn without replacement from the ``n*(n-1)/2`` possible
    pairs.  Identical ``(n, m, seed)`` always produce an identical graph
    (see the module docstring for the fixed algorithm).  Connectivity is
    not guaranteed.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    total = n * (n - 1) // 2
    if not (0 <= m <= total):
        raise ValueError(f"edge count {m} outside [0, {total}] for n={n}")
    rng = _SplitMix64(seed)
    swapped: dict[int, int] = {}
    edges = []
    for i in range(m):
        j = i + rng.next_below(total - i)
        edges.append(_unrank_pair(n, swapped.get(j, j)))
        swapped[j] = swapped.get(i, i)
    return Graph(n=n, edges=tuple(edges))


def _parse_int_pair(raw: str, lineno: int) -> tuple[int, int]:
    # Exactly two base-10 integers separated by a single space, no other
    # whitespace: blank lines, comments, tabs, and padding are all malformed.
    fields = raw.split(" ")
    if len(fields) != 2 or raw != " ".join(raw.split()):
        raise EdgeListParseError(
            f"expected two integers separated by one space, got {raw!r}", lineno
        )
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise EdgeListParseError(
            f"expected two integers separated by one space, got {raw!r}", lineno
        ) from None


def parse_edge_list(text: str) -> Graph:
    """Parse the strict edge-list format into a :class:`Graph`.

    Line 1 is ``n m``; exactly ``m`` lines ``u v`` follow, then the
    trailing newline ends the file.  No comments, blank lines, or extra
    whitespace.  Malformed input raises :class:`EdgeListParseError`
    naming the 1-based line number.
    """
    if not text:
        raise EdgeListParseError("empty input: missing 'n m' header line")
    if not text.endswith("\n"):
        raise EdgeListParseError("missing trailing newline")
    lines = text.split("\n")[:-1]
    n, m = _parse_int_pair(lines[0], 1)
    if n < 1:
        raise EdgeListParseError(f"vertex count must be positive, got {n}", 1)
    if m < 0 or m > n * (n - 1) // 2:
        raise EdgeListParseError(
            f"edge count {m} outside [0, {n * (n - 1) // 2}] for n={n}", 1
        )
    if len(lines) < m + 1:
        raise EdgeListParseError(
            f"header declared {m} edges but only {len(lines) - 1} lines follow"
        )
    if len(lines) > m + 1:
        raise EdgeListParseError(
            f"unexpected extra line; header declared {m} edges", m + 2
        )
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        a, b = _parse_int_pair(raw, lineno)
        if a == b:
            raise EdgeListParseError(f"self-loop at vertex {a}", lineno)
        u, v = (a, b) if a < b else (b, a)
        if not (0 <= u and v < n):
            raise EdgeListParseError(f"edge ({a}, {b}) out of range for n={n}", lineno)
        if (u, v) in seen:
            raise EdgeListParseError(f"duplicate edge ({a}, {b})", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n=n, edges=tuple(edges))


def write_edge_list(g: Graph) -> str:
    """Serialize ``g`` to the canonical edge-list format (LF endings).

    Round-trips through :func:`parse_edge_list`: edges come out sorted
    with ``u < v``, one per line, no comments.
    """
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
