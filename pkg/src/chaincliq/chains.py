"""Strictly nested chains of graphs on a common vertex set.

A chain is a sequence G_1, ..., G_r of distinct graphs on {1..n} where
each graph's edge set is a strict subset of the next, so r can be at most
C(n, 2) + 1. Chains here start anywhere and end anywhere; the seeded
generators happen to start from the empty graph, while the exhaustive
enumerator covers every starting point.

Serialization is a single canonical JSON document per chain, byte-stable
across runs so that seeded experiments can be diffed directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .graphs import Graph, _bits, _check_vertex_count, _slot_index, _slot_pairs, make_graph
from .rng import SplitMix64

CHAIN_FORMAT = "chaincliq-chain-v1"

_TWO64 = 1 << 64


@dataclass(frozen=True)
class StepDistribution:
    """Step-size policy for random chain growth.

    kind "single" adds exactly one edge per step. kind "geometric" adds
    1 + Geometric(p) edges, where p is the per-trial success probability;
    batches are clamped so the chain always reaches its target length.
    """

    kind: str
    p: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in ("single", "geometric"):
            raise ValueError(f"unknown step distribution kind {self.kind!r}")
        if not 0.0 < self.p <= 1.0:
            raise ValueError(f"step probability must be in (0, 1], got {self.p!r}")


SINGLE_STEP = StepDistribution("single")


@dataclass(frozen=True)
class GraphChain:
    """A strictly nested sequence of graphs; build via validate_chain or a generator."""

    n: int
    graphs: tuple[Graph, ...]

    @property
    def r(self) -> int:
        return len(self.graphs)


def validate_chain(n: int, graphs: Sequence[Graph]) -> GraphChain:
    """Check nesting, distinctness and vertex counts; return the chain.

    Strictness between consecutive graphs is what bounds the length by
    C(n, 2) + 1, so no separate length check is needed.
    """
    if not graphs:
        raise ValueError("chain must contain at least one graph")
    for g in graphs:
        if g.n != n:
            raise ValueError(f"mismatched vertex counts: chain has n={n}, graph has n={g.n}")
    for k in range(len(graphs) - 1):
        a, b = graphs[k], graphs[k + 1]
        if a.mask == b.mask:
            raise ValueError(f"graphs {k + 1} and {k + 2} are equal (distinctness violation)")
        if a.mask & ~b.mask:
            raise ValueError(f"graphs {k + 1} and {k + 2} are not nested")
    return GraphChain(n, tuple(graphs))


def _check_length(n: int, r: int) -> int:
    m = comb(n, 2)
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ValueError(f"chain length must be a positive integer, got {r!r}")
    if r > m + 1:
        raise ValueError(f"r exceeds C(n,2)+1 (r={r}, n={n}, max {m + 1})")
    return m


def random_chain(n: int, r: int, dist: StepDistribution, seed: int) -> GraphChain:
    """Seeded random chain of length exactly r, a pure function of its arguments.

    Growth starts from the empty graph and adds a fresh batch of edges per
    step, batch sizes drawn per `dist`. Geometric batches are clamped so
    that at least one fresh edge remains for each later step.
    """
    _check_vertex_count(n)
    m = _check_length(n, r)
    rng = SplitMix64(seed)
    threshold = int(dist.p * _TWO64)
    free = list(range(m))
    masks = [0]
    while len(masks) < r:
        steps_after = r - len(masks) - 1
        if dist.kind == "single":
            batch = 1
        else:
            cap = len(free) - steps_after
            fails = 0
            while fails < cap - 1 and rng.next_u64() >= threshold:
                fails += 1
            batch = 1 + fails
        mask = masks[-1]
        for _ in range(batch):
            slot = free.pop(rng.below(len(free)))
            mask |= 1 << slot
        masks.append(mask)
    return validate_chain(n, [Graph(n, mk) for mk in masks])


def enumerate_chains(
    n: int, r: int, shard: tuple[int, int] | None = None
) -> Iterator[GraphChain]:
    """Every chain of length exactly r on {1..n}, each once, in canonical order.

    Canonical order is lexicographic on the sequence of edge-bitmask
    values. Cost is exponential in C(n, 2); intended for n <= 4. With
    shard=(index, count), yields only chains whose first graph's bitmask
    is congruent to index mod count, still in canonical order, so the
    sorted union over all shards equals the unsharded stream.
    """
    _check_vertex_count(n)
    m = _check_length(n, r)
    if shard is not None:
        index, count = shard
        if count < 1 or not 0 <= index < count:
            raise ValueError(f"invalid shard {shard!r}")
    full = (1 << m) - 1

    def extend(prefix: list[int]) -> Iterator[GraphChain]:
        if len(prefix) == r:
            yield GraphChain(n, tuple(Graph(n, mk) for mk in prefix))
            return
        last = prefix[-1]
        if r - len(prefix) > m - last.bit_count():
            return
        comp = full & ~last
        y = 0
        while True:
            y = (y - comp) & comp
            if y == 0:
                return
            prefix.append(last | y)
            yield from extend(prefix)
            prefix.pop()

    for first in range(full + 1):
        if shard is not None and first % shard[1] != shard[0]:
            continue
        yield from extend([first])


def reverse_chain(c: GraphChain) -> GraphChain:
    """The mirror chain H with H_i = E(G_r) minus E(G_{r+1-i}).

    Valid by construction since complements of a descending nest ascend
    strictly. For i < j, H_{r+1-i} minus H_{r+1-j} equals G_j minus G_i,
    so the mirror's difference graph is the index-reversal of the
    original's. Chains that start empty are fixed points of the double
    reversal.
    """
    top = c.graphs[-1].mask
    masks = [top & ~c.graphs[c.r - 1 - i].mask for i in range(c.r)]
    return validate_chain(c.n, [Graph(c.n, mk) for mk in masks])


def relabel_chain(c: GraphChain, perm: Sequence[int]) -> GraphChain:
    """Apply a vertex permutation (perm[u-1] is the image of u) to every graph."""
    if sorted(perm) != list(range(1, c.n + 1)):
        raise ValueError(f"perm must be a permutation of 1..{c.n}")
    masks = _relabel_masks(c.n, [g.mask for g in c.graphs], perm)
    return validate_chain(c.n, [Graph(c.n, mk) for mk in masks])


def _relabel_masks(n: int, masks: Sequence[int], perm: Sequence[int]) -> list[int]:
    pairs = _slot_pairs(n)
    index = _slot_index(n)
    slot_map = []
    for u, v in pairs:
        pu, pv = perm[u - 1], perm[v - 1]
        if pu > pv:
            pu, pv = pv, pu
        slot_map.append(index[(pu, pv)])
    out = []
    for mask in masks:
        new = 0
        for b in _bits(mask):
            new |= 1 << slot_map[b]
        out.append(new)
    return out


def _chain_doc(c: GraphChain) -> dict:
    return {
        "format": CHAIN_FORMAT,
        "n": c.n,
        "graphs": [[list(e) for e in g.sorted_edges()] for g in c.graphs],
    }


def _chain_from_doc(doc: object) -> GraphChain:
    if not isinstance(doc, dict):
        raise ValueError("chain document must be a JSON object")
    fmt = doc.get("format")
    if fmt != CHAIN_FORMAT:
        raise ValueError(f"unsupported format tag {fmt!r} (expected {CHAIN_FORMAT!r})")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("field 'n' must be an integer")
    entries = doc.get("graphs")
    if not isinstance(entries, list) or not entries:
        raise ValueError("field 'graphs' must be a nonempty list")
    graphs = []
    for gi, entry in enumerate(entries, 1):
        if not isinstance(entry, list):
            raise ValueError(f"graph {gi}: must be a list of edges")
        pairs = []
        for e in entry:
            if (
                not isinstance(e, list)
                or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
            ):
                raise ValueError(f"graph {gi}: edge {e!r} must be a two-element integer array")
            u, v = e
            if u >= v:
                raise ValueError(f"graph {gi}: edge [{u}, {v}] must satisfy u < v")
            pairs.append((u, v))
        try:
            graphs.append(make_graph(n, pairs))
        except ValueError as exc:
            raise ValueError(f"graph {gi}: {exc}") from None
    return validate_chain(n, graphs)


def write_chain(c: GraphChain) -> str:
    """Canonical one-line JSON encoding of a chain."""
    return json.dumps(_chain_doc(c))


def read_chain(text: str) -> GraphChain:
    """Parse and fully validate a chain document; inverse of write_chain."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from None
    return _chain_from_doc(doc)
