"""The difference graph of a chain and its structural invariants.

For a chain G_1 c ... c G_r the difference graph lives on the index set
{1..r} and joins i < j exactly when the edge set G_j minus G_i is a
clique. Two facts about this graph are machine-checked here rather than
trusted:

  * the "abcd" closure: for a < b < c < d, if (a, c) and (b, d) are edges
    then so is (b, c), because the difference c-minus-b is the nonempty
    intersection of two cliques;
  * the "123" cap: no three consecutive indices can all have three or
    more neighbors on each side. Otherwise the closure forces both
    single-step differences around the middle index to be cliques, and
    their edge-disjoint union would have to be a clique as well, which
    is impossible.

A consequence of the same argument is that difference graphs of chains
are triangle-free; find_triangle exists to watch that invariant.

Both verifiers accept arbitrary adjacency data, so hand-built graphs that
no chain produces can and should make them return a violation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .chains import GraphChain
from .graphs import _clique_support_mask

DGRAPH_FORMAT = "chaincliq-dgraph-v1"

ABCD_SCAN_LIMIT = 200


@dataclass(frozen=True)
class DifferenceGraph:
    """Symmetric, irreflexive adjacency over indices 1..r with cached side counts.

    adj[i] is a bitmask over 0-based indices; left/right counts tally the
    neighbors below and above each index. Build via build_difference_graph
    or difference_graph_from_edges.
    """

    r: int
    adj: tuple[int, ...]
    left_counts: tuple[int, ...]
    right_counts: tuple[int, ...]

    def has_edge(self, i: int, j: int) -> bool:
        self._check_index(i)
        self._check_index(j)
        return bool(self.adj[i - 1] >> (j - 1) & 1)

    def degree(self, i: int) -> int:
        self._check_index(i)
        return self.adj[i - 1].bit_count()

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        """All edges as 1-based (i, j) pairs with i < j, lexicographically sorted."""
        out = []
        for i in range(self.r):
            upper = self.adj[i] >> (i + 1)
            j = i + 1
            while upper:
                if upper & 1:
                    out.append((i + 1, j + 1))
                upper >>= 1
                j += 1
        return tuple(out)

    def _check_index(self, i: int) -> None:
        if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= self.r:
            raise ValueError(f"index {i!r} out of range [1, {self.r}]")


@dataclass(frozen=True)
class LemmaViolation:
    """A witnessing index tuple for a failed structural check."""

    kind: str  # "abcd" or "consecutive-123"
    indices: tuple[int, ...]


def _difference_adjacency(n: int, masks: Sequence[int]) -> list[int]:
    r = len(masks)
    adj = [0] * r
    for j in range(1, r):
        mj = masks[j]
        for i in range(j):
            if _clique_support_mask(n, mj & ~masks[i]) is not None:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _finish(r: int, adj: Sequence[int]) -> DifferenceGraph:
    left = tuple((adj[i] & ((1 << i) - 1)).bit_count() for i in range(r))
    right = tuple(adj[i].bit_count() - left[i] for i in range(r))
    return DifferenceGraph(r, tuple(adj), left, right)


def build_difference_graph(c: GraphChain) -> DifferenceGraph:
    """Run the clique test on all r*(r-1)/2 index pairs of a chain."""
    return _finish(c.r, _difference_adjacency(c.n, [g.mask for g in c.graphs]))


def difference_graph_from_edges(r: int, edges: Iterable[tuple[int, int]]) -> DifferenceGraph:
    """Assemble a DifferenceGraph from explicit index pairs (mainly for tests and IO)."""
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ValueError(f"index count must be a positive integer, got {r!r}")
    adj = [0] * r
    for i, j in edges:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j)):
            raise ValueError(f"index pair ({i!r}, {j!r}) must be integers")
        if not (1 <= i < j <= r):
            raise ValueError(f"index pair ({i}, {j}) must satisfy 1 <= i < j <= {r}")
        if adj[i - 1] >> (j - 1) & 1:
            raise ValueError(f"duplicate index pair ({i}, {j})")
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    return _finish(r, adj)


def neighbor_counts(dg: DifferenceGraph, i: int) -> tuple[int, int]:
    """(left, right) neighbor tallies of index i."""
    dg._check_index(i)
    return dg.left_counts[i - 1], dg.right_counts[i - 1]


def verify_lemma_abcd(dg: DifferenceGraph, max_r: int = ABCD_SCAN_LIMIT) -> LemmaViolation | None:
    """Scan all a < b < c < d for edges (a, c), (b, d) without the edge (b, c).

    Returns None when the closure holds everywhere (always, for graphs
    built from chains), else the lexicographically first violating tuple.
    The existence scan is quadratic; the quartic walk only runs to name
    the first witness once a violation is known to exist. The max_r guard
    exists because the witness walk is O(r^4).
    """
    r = dg.r
    if r > max_r:
        raise ValueError(f"r={r} exceeds the abcd scan limit {max_r}")
    adj = dg.adj
    found = False
    for c0 in range(2, r):
        below_c = adj[c0] & ((1 << c0) - 1)
        if not below_c:
            continue
        for b0 in range(1, c0):
            if adj[c0] >> b0 & 1:
                continue
            if not below_c & ((1 << b0) - 1):
                continue
            if adj[b0] >> (c0 + 1):
                found = True
                break
        if found:
            break
    if not found:
        return None
    for a0 in range(r):
        for b0 in range(a0 + 1, r):
            for c0 in range(b0 + 1, r):
                if not adj[a0] >> c0 & 1 or adj[b0] >> c0 & 1:
                    continue
                upper = adj[b0] >> (c0 + 1)
                if upper:
                    d0 = c0 + 1 + (upper & -upper).bit_length() - 1
                    return LemmaViolation("abcd", (a0 + 1, b0 + 1, c0 + 1, d0 + 1))
    raise AssertionError("abcd existence scan and witness walk disagree")


def verify_lemma_123(dg: DifferenceGraph) -> LemmaViolation | None:
    """Find three consecutive indices that all have >= 3 neighbors per side.

    Returns None when no such run exists (always, for graphs built from
    chains), else the first run as (y, y+1, y+2). Any such run needs
    y >= 4 and y + 2 <= r - 3, so r <= 8 is vacuously clean.
    """
    bad = [
        dg.left_counts[i] >= 3 and dg.right_counts[i] >= 3 for i in range(dg.r)
    ]
    for y0 in range(dg.r - 2):
        if bad[y0] and bad[y0 + 1] and bad[y0 + 2]:
            return LemmaViolation("consecutive-123", (y0 + 1, y0 + 2, y0 + 3))
    return None


def find_triangle(dg: DifferenceGraph) -> tuple[int, int, int] | None:
    """First triangle in index order, or None; chain-built graphs have none."""
    for i in range(dg.r):
        upper = dg.adj[i] >> (i + 1)
        j = i + 1
        while upper:
            if upper & 1:
                common = dg.adj[i] & dg.adj[j] & ~((1 << (j + 1)) - 1)
                if common:
                    k = (common & -common).bit_length() - 1
                    return (i + 1, j + 1, k + 1)
            upper >>= 1
            j += 1
    return None


def write_difference_graph(dg: DifferenceGraph) -> str:
    """Canonical one-line JSON encoding of a difference graph."""
    doc = {
        "format": DGRAPH_FORMAT,
        "r": dg.r,
        "edges": [list(e) for e in dg.edge_pairs()],
    }
    return json.dumps(doc)


def read_difference_graph(text: str) -> DifferenceGraph:
    """Parse and validate a difference-graph document; inverse of write_difference_graph."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("difference-graph document must be a JSON object")
    fmt = doc.get("format")
    if fmt != DGRAPH_FORMAT:
        raise ValueError(f"unsupported format tag {fmt!r} (expected {DGRAPH_FORMAT!r})")
    r = doc.get("r")
    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise ValueError("field 'edges' must be a list")
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise ValueError(f"edge {e!r} must be a two-element integer array")
        pairs.append((e[0], e[1]))
    return difference_graph_from_edges(r, pairs)
