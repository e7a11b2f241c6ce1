"""Constructive independent-set extraction from difference graphs.

Two algorithms, each coming with a size floor that is proven to hold on
every difference graph built from a chain:

  * greedy_good_witness. Call an index good when it has at most two
    neighbors on at least one side. Because no three consecutive indices
    can all be bad (the "123" cap in `derived`), at least floor(r/3)
    indices are good, so the larger of the two side classes holds at
    least half of them. Scanning that class toward its bounded side and
    greedily keeping non-adjacent indices loses at most two candidates
    per kept index, which yields at least ceil((r-2)/18) indices.

  * alon_witness. Split the indices into triples (3i-2, 3i-1, 3i). In
    every complete triple at least one of three edge-existence conditions
    fails: either 3i-2 has no neighbor past 3i-1, or 3i-1 lacks a
    neighbor on one of its sides, or 3i has no neighbor before 3i-1
    (were all three to hold, the closure lemma would force a forbidden
    consecutive-bad run). Selecting one violating owner per triple and
    orienting all edges from lower to higher index leaves every selected
    index with restricted indegree or outdegree zero, so the larger of
    the sink and source classes is independent and has size at least
    ceil(floor(r/3)/2).

Every witness is certified against the source graph before it is
returned; both floors are also enforced at construction, so feeding a
graph that no chain can produce fails loudly instead of returning an
undersized set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .derived import DifferenceGraph

WITNESS_FORMAT = "chaincliq-witness-v1"

METHODS = ("greedy-good", "alon-triples", "singleton-fallback")


@dataclass(frozen=True)
class WitnessSet:
    """An independent index set with provenance and its proven size floor."""

    indices: frozenset[int]
    method: str
    guarantee: Fraction


@dataclass(frozen=True)
class TripleChoice:
    """One selected index per triple, plus which condition it violates.

    bullet 1 belongs to index 3i-2 (no edge to any j > 3i-1), bullet 2 to
    3i-1 (a missing side, recorded as "no-k" for the right side or "no-l"
    for the left; "no-k" when both are missing), bullet 3 to 3i (no edge
    from any m < 3i-1).
    """

    triple: int
    chosen: int
    bullet: int
    side: str | None = None


@dataclass(frozen=True)
class TripleSelection:
    choices: tuple[TripleChoice, ...]

    def indices(self) -> tuple[int, ...]:
        return tuple(ch.chosen for ch in self.choices)


def greedy_guarantee(r: int) -> Fraction:
    """Size floor of the greedy witness: max(1, ceil((r-2)/18))."""
    return Fraction(max(1, -((2 - r) // 18)))


def alon_guarantee(r: int) -> Fraction:
    """Size floor of the triple witness: max(1, ceil(floor(r/3)/2))."""
    return Fraction(max(1, (r // 3 + 1) // 2))


def check_independent(dg: DifferenceGraph, indices: Iterable[int]) -> bool:
    """True iff no two of the given indices are adjacent in dg."""
    mask = 0
    for i in indices:
        dg._check_index(i)
        mask |= 1 << (i - 1)
    i0 = 0
    m = mask
    while m:
        low = m & -m
        i0 = low.bit_length() - 1
        if dg.adj[i0] & mask:
            return False
        m ^= low
    return True


def _certified(dg: DifferenceGraph, indices: frozenset[int], method: str,
               guarantee: Fraction) -> WitnessSet:
    if not check_independent(dg, indices):
        raise ValueError(f"{method} witness failed independence certification")
    if len(indices) < guarantee:
        raise ValueError(
            f"{method} witness has {len(indices)} indices, below the floor "
            f"{guarantee}; the input graph cannot come from a chain"
        )
    return WitnessSet(indices, method, guarantee)


def greedy_good_witness(dg: DifferenceGraph) -> WitnessSet:
    """Greedy scan over the larger class of side-bounded indices.

    The side is chosen by comparing how many indices have right count
    <= 2 against how many have left count <= 2 (an index may qualify for
    both); ties go to the right side. The scan then runs toward the
    bounded side: left to right for the right class, right to left for
    the left class.
    """
    r = dg.r
    right_ok = [i for i in range(r) if dg.right_counts[i] <= 2]
    left_ok = [i for i in range(r) if dg.left_counts[i] <= 2]
    order = right_ok if len(right_ok) >= len(left_ok) else list(reversed(left_ok))
    chosen_mask = 0
    chosen: list[int] = []
    for i in order:
        if not dg.adj[i] & chosen_mask:
            chosen.append(i)
            chosen_mask |= 1 << i
    if not chosen:  # unreachable: indices 1..3 always have left count <= 2
        return _certified(dg, frozenset({1}), "singleton-fallback", greedy_guarantee(r))
    return _certified(
        dg, frozenset(i + 1 for i in chosen), "greedy-good", greedy_guarantee(r)
    )


def select_triples(dg: DifferenceGraph) -> TripleSelection:
    """Pick one violating owner per complete triple, smallest owner first.

    Raises when some triple violates nothing, which is impossible for a
    chain-built graph and therefore flags either a bug or an adjacency
    that was fabricated by hand.
    """
    choices = []
    for t in range(dg.r // 3):
        a, b, c = 3 * t, 3 * t + 1, 3 * t + 2
        if not dg.adj[a] >> c:
            choices.append(TripleChoice(t + 1, a + 1, 1))
            continue
        has_k = bool(dg.adj[b] >> (b + 1))
        has_l = bool(dg.adj[b] & ((1 << b) - 1))
        if not (has_k and has_l):
            side = "no-k" if not has_k else "no-l"
            choices.append(TripleChoice(t + 1, b + 1, 2, side))
            continue
        if not dg.adj[c] & ((1 << b) - 1):
            choices.append(TripleChoice(t + 1, c + 1, 3))
            continue
        raise ValueError(
            f"triple {t + 1}: all three edge conditions hold, so this graph "
            "is not the difference graph of any chain"
        )
    return TripleSelection(tuple(choices))


def triple_choice_violated(dg: DifferenceGraph, choice: TripleChoice) -> bool:
    """Re-evaluate the recorded condition of one choice; True means still violated."""
    t = choice.triple - 1
    a, b, c = 3 * t, 3 * t + 1, 3 * t + 2
    if choice.bullet == 1:
        return choice.chosen == a + 1 and not dg.adj[a] >> c
    if choice.bullet == 2:
        if choice.chosen != b + 1:
            return False
        if choice.side == "no-k":
            return not dg.adj[b] >> (b + 1)
        if choice.side == "no-l":
            return not dg.adj[b] & ((1 << b) - 1)
        return False
    if choice.bullet == 3:
        return choice.chosen == c + 1 and not dg.adj[c] & ((1 << b) - 1)
    return False


def alon_witness(dg: DifferenceGraph) -> WitnessSet:
    """The larger of the sink and source classes of the selected triple owners."""
    r = dg.r
    guarantee = alon_guarantee(r)
    if r < 3:
        return _certified(dg, frozenset({1}), "singleton-fallback", guarantee)
    selection = select_triples(dg)
    chosen0 = [ch.chosen - 1 for ch in selection.choices]
    smask = 0
    for u in chosen0:
        smask |= 1 << u
    sinks = []
    sources = []
    for u in chosen0:
        within = dg.adj[u] & smask
        out = within >> (u + 1)
        into = within & ((1 << u) - 1)
        if out and into:
            raise ValueError(
                f"selected index {u + 1} has oriented neighbors on both sides; "
                "triple selection is broken"
            )
        if not out:
            sinks.append(u)
        if not into:
            sources.append(u)
    pick = sinks if len(sinks) >= len(sources) else sources
    return _certified(dg, frozenset(u + 1 for u in pick), "alon-triples", guarantee)


def best_witness(dg: DifferenceGraph) -> WitnessSet:
    """Run both extractors, return the larger witness; ties go to the triple one."""
    greedy = greedy_good_witness(dg)
    triples = alon_witness(dg)
    return triples if len(triples.indices) >= len(greedy.indices) else greedy


def write_witness(ws: WitnessSet) -> str:
    """Canonical one-line JSON encoding of a witness."""
    doc = {
        "format": WITNESS_FORMAT,
        "method": ws.method,
        "indices": sorted(ws.indices),
        "guarantee": str(ws.guarantee),
    }
    return json.dumps(doc)


def read_witness(text: str) -> WitnessSet:
    """Parse a witness document; independence must be re-checked against its graph."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("witness document must be a JSON object")
    fmt = doc.get("format")
    if fmt != WITNESS_FORMAT:
        raise ValueError(f"unsupported format tag {fmt!r} (expected {WITNESS_FORMAT!r})")
    method = doc.get("method")
    if method not in METHODS:
        raise ValueError(f"unknown witness method {method!r}")
    raw = doc.get("indices")
    if (
        not isinstance(raw, list)
        or not raw
        or not all(isinstance(i, int) and not isinstance(i, bool) and i >= 1 for i in raw)
    ):
        raise ValueError("field 'indices' must be a nonempty list of positive integers")
    indices = frozenset(raw)
    if len(indices) != len(raw):
        raise ValueError("field 'indices' contains duplicates")
    try:
        guarantee = Fraction(doc.get("guarantee"))
    except (TypeError, ValueError):
        raise ValueError("field 'guarantee' must be an exact rational string") from None
    return WitnessSet(indices, method, guarantee)
