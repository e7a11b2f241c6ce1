"""Exact exhaustive ground truth for independence and clique-pair questions.

Everything in this module is deliberately brute force at desk scale:

  * max_independent_set. Bitset branch and bound, exact for any adjacency
    up to the configured cutoff; used to compare witnesses against true
    optima and as the engine behind the extremal search objective.
  * naive_max_independent_set. Full 2^r subset sweep whose only job is to
    cross-check the branch and bound. The two must always agree.
  * verify_theorem_exhaustive. Runs every chain of a given (n, r), builds
    each difference graph, checks both structural lemmas, both witness
    floors, and records the smallest exact independence number seen.
  * clique-pair families. A pair G strictly inside H with H minus G a
    clique is the forbidden configuration; max_cliquepair_free_family
    finds the largest family of graphs on {1..n} avoiding it by solving
    maximum independent set on the conflict graph over all 2^C(n,2)
    graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .chains import GraphChain, _chain_doc, enumerate_chains
from .derived import DifferenceGraph, build_difference_graph, verify_lemma_123, verify_lemma_abcd
from .graphs import Graph, _bits, _check_vertex_count, _clique_support_mask
from .witness import alon_guarantee, alon_witness, greedy_good_witness

ORACLE_FORMAT = "chaincliq-oracle-v1"
THEOREM_FORMAT = "chaincliq-theorem-v1"
FAMILY_FORMAT = "chaincliq-family-v1"

MIS_CUTOFF = 64
NAIVE_CUTOFF = 20
FAMILY_CUTOFF = 4


@dataclass(frozen=True)
class OracleReport:
    """Exact independence number, one optimum set, and the search effort spent."""

    alpha: int
    optimum: frozenset[int]
    nodes_explored: int


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of an exhaustive sweep over all chains of one (n, r)."""

    n: int
    r: int
    chains_checked: int
    min_alpha: int
    argmin_chain: GraphChain
    bound_ok: bool


@dataclass(frozen=True)
class FamilyReport:
    """A family of graphs on {1..n} and its clique-pair status."""

    n: int
    family: frozenset[Graph]
    pair: tuple[Graph, Graph] | None
    max_free_size: int


def _greedy_cover_bound(adj: Sequence[int], rem: int) -> int:
    """Greedy clique cover of the remaining vertices; its size bounds alpha."""
    count = 0
    while rem:
        v = (rem & -rem).bit_length() - 1
        clique = 1 << v
        cand = adj[v] & rem
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= adj[u]
        rem &= ~clique
        count += 1
    return count


def _mis_bitset(adj: Sequence[int]) -> tuple[int, int, int]:
    """Exact maximum independent set on bitmask adjacency.

    Returns (alpha, best_mask, nodes_explored). Vertices of restricted
    degree at most one are always taken outright; otherwise the branch
    vertex is one of maximum restricted degree, and subtrees are cut by
    both the remaining-vertex count and a greedy clique cover.
    """
    size = len(adj)
    full = (1 << size) - 1
    best_mask = 0
    blocked = 0
    for v in sorted(range(size), key=lambda v: (adj[v].bit_count(), v)):
        if not blocked >> v & 1:
            best_mask |= 1 << v
            blocked |= adj[v] | (1 << v)
    best = best_mask.bit_count()
    nodes = 0

    def dfs(rem: int, chosen: int, count: int) -> None:
        nonlocal best, best_mask, nodes
        nodes += 1
        while True:
            m = rem
            grabbed = False
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                dv = adj[v] & rem
                if dv == 0 or dv & (dv - 1) == 0:
                    chosen |= low
                    count += 1
                    rem &= ~(adj[v] | low)
                    grabbed = True
                    break
            if not grabbed:
                break
        if rem == 0:
            if count > best:
                best = count
                best_mask = chosen
            return
        if count + rem.bit_count() <= best:
            return
        if count + _greedy_cover_bound(adj, rem) <= best:
            return
        pivot = -1
        pivot_deg = -1
        m = rem
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            deg = (adj[v] & rem).bit_count()
            if deg > pivot_deg:
                pivot, pivot_deg = v, deg
        bit = 1 << pivot
        dfs(rem & ~(adj[pivot] | bit), chosen | bit, count + 1)
        dfs(rem & ~bit, chosen, count)

    dfs(full, 0, 0)
    return best, best_mask, nodes


def max_independent_set(dg: DifferenceGraph, cutoff: int = MIS_CUTOFF) -> OracleReport:
    """Exact alpha of a difference graph by branch and bound."""
    if dg.r > cutoff:
        raise ValueError(f"r={dg.r} exceeds the exact-search cutoff {cutoff}")
    alpha, mask, nodes = _mis_bitset(dg.adj)
    return OracleReport(alpha, frozenset(i + 1 for i in _bits(mask)), nodes)


def naive_max_independent_set(dg: DifferenceGraph, cutoff: int = NAIVE_CUTOFF) -> OracleReport:
    """Exact alpha by sweeping all 2^r subsets; exists to validate the solver.

    A subset is independent iff dropping its lowest index leaves an
    independent set and that index has no neighbor inside the subset.
    nodes_explored counts the 2^r subsets swept.
    """
    r = dg.r
    if r > cutoff:
        raise ValueError(f"r={r} exceeds the naive-enumeration cutoff {cutoff}")
    adj = dg.adj
    total = 1 << r
    ok = bytearray(total)
    ok[0] = 1
    best = 0
    best_mask = 0
    for s in range(1, total):
        low = s & -s
        rest = s ^ low
        if ok[rest] and not adj[low.bit_length() - 1] & rest:
            ok[s] = 1
            size = s.bit_count()
            if size > best:
                best, best_mask = size, s
    return OracleReport(best, frozenset(i + 1 for i in _bits(best_mask)), total)


def verify_theorem_exhaustive(n: int, r: int, shards: int = 1) -> TheoremReport:
    """Check every chain of length r on {1..n} against lemmas, floors and exact alpha.

    Intended for n <= 3 over full length ranges, n = 4 only with small r.
    The enumeration may be split into shards (processed here one after
    another); the combined report is identical for every shard count
    because partial results merge by sum, min, and smallest canonical
    key.
    """
    if shards < 1:
        raise ValueError("shards must be >= 1")
    checked = 0
    best: tuple[int, tuple[int, ...], GraphChain] | None = None
    for k in range(shards):
        shard = None if shards == 1 else (k, shards)
        for chain in enumerate_chains(n, r, shard=shard):
            dg = build_difference_graph(chain)
            violation = verify_lemma_abcd(dg) or verify_lemma_123(dg)
            if violation is not None:
                raise ValueError(f"structural check failed on an enumerated chain: {violation}")
            greedy = greedy_good_witness(dg)
            triples = alon_witness(dg)
            report = max_independent_set(dg)
            if report.alpha < max(len(greedy.indices), len(triples.indices)):
                raise ValueError("a witness exceeded the exact optimum; solver bug")
            checked += 1
            key = (report.alpha, tuple(g.mask for g in chain.graphs))
            if best is None or key < best[:2]:
                best = (key[0], key[1], chain)
    assert best is not None  # r >= 1 always yields at least one chain
    min_alpha = best[0]
    return TheoremReport(
        n=n,
        r=r,
        chains_checked=checked,
        min_alpha=min_alpha,
        argmin_chain=best[2],
        bound_ok=min_alpha >= alon_guarantee(r),
    )


def family_has_clique_pair(n: int, family: Iterable[Graph]) -> tuple[Graph, Graph] | None:
    """First pair (G, H) in the family with G strictly inside H and H minus G a clique.

    Pairs are scanned in ascending (mask of G, mask of H) order; None
    means the family is clique-pair free.
    """
    members = sorted(family, key=lambda g: g.mask)
    for g in members:
        if g.n != n:
            raise ValueError(f"mismatched vertex counts: family has n={n}, graph has n={g.n}")
    for g in members:
        for h in members:
            if g.mask == h.mask or g.mask & ~h.mask:
                continue
            if _clique_support_mask(n, h.mask & ~g.mask) is not None:
                return (g, h)
    return None


def max_cliquepair_free_family(n: int) -> FamilyReport:
    """Largest clique-pair-free family among all 2^C(n,2) graphs on {1..n}.

    Builds the conflict graph whose vertices are all graphs and whose
    edges are the clique pairs (kept undirected: nesting orients each
    conflict, but independence only needs the symmetric relation), then
    solves maximum independent set on it exactly.
    """
    _check_vertex_count(n)
    if n > FAMILY_CUTOFF:
        raise ValueError(f"n={n} exceeds the family-search cutoff {FAMILY_CUTOFF}")
    m = comb(n, 2)
    count = 1 << m
    adj = [0] * count
    for x in range(count):
        for y in range(x + 1, count):
            if x & ~y:
                continue
            if _clique_support_mask(n, y & ~x) is not None:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    alpha, mask, _nodes = _mis_bitset(adj)
    family = frozenset(Graph(n, x) for x in _bits(mask))
    return FamilyReport(n=n, family=family, pair=None, max_free_size=alpha)


def write_oracle_report(report: OracleReport) -> str:
    doc = {
        "format": ORACLE_FORMAT,
        "alpha": report.alpha,
        "optimum": sorted(report.optimum),
        "nodes_explored": report.nodes_explored,
    }
    return json.dumps(doc)


def write_theorem_report(report: TheoremReport) -> str:
    doc = {
        "format": THEOREM_FORMAT,
        "n": report.n,
        "r": report.r,
        "chains_checked": report.chains_checked,
        "min_alpha": report.min_alpha,
        "argmin_chain": _chain_doc(report.argmin_chain),
        "bound_ok": report.bound_ok,
    }
    return json.dumps(doc)


def write_family_report(report: FamilyReport) -> str:
    members = sorted(report.family, key=lambda g: g.mask)
    doc = {
        "format": FAMILY_FORMAT,
        "n": report.n,
        "max_free_size": report.max_free_size,
        "family": [[list(e) for e in g.sorted_edges()] for g in members],
        "pair": None
        if report.pair is None
        else [[list(e) for e in g.sorted_edges()] for g in report.pair],
    }
    return json.dumps(doc)
