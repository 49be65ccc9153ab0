"""Pattern matching over the augmented heap, plus the naive scan oracle.

The matcher first splits the pattern into maximal represented segments:
walk from the root consuming the longest represented prefix of what is
left, repeatedly.  If at some point not even one letter can be consumed,
that letter does not occur in the text at all and there is nothing to
report.

With one segment, the pattern is a node u: every position stored in u's
subtree matches, and a position i at a proper ancestor of u matches iff
u is an ancestor-or-self of i's maximal-reach node.

With several segments, a candidate start q for the tail beginning at
segment j must be stored on the root-to-u_j path with its maximal reach
exactly u_j (a longer reach would contradict the segment's maximality
against the text), and q + len_j must match from segment j+1.  Segments
are processed last to first, keeping the survivor set of each stage;
stage sets are bounded by twice the segment length, path scans by the
segment length, and subtree reporting by the output, which gives
O(m + occ) work overall.
"""

from __future__ import annotations

from dataclasses import dataclass

from .augmented import AugmentedHeap
from .heap import to_bytes


@dataclass
class SegmentDecomposition:
    """Pattern split into maximal represented prefixes."""

    segments: list[tuple[int, int]]  # (node, length) per segment
    complete: bool                   # False: some letter absent from the text

    @property
    def first_len(self) -> int:
        return self.segments[0][1] if self.segments else 0


@dataclass
class SearchStats:
    """Step counter for the work-bound property test."""

    steps: int = 0


def decompose(aug: AugmentedHeap, pattern) -> SegmentDecomposition:
    """Split the pattern into maximal represented segments."""
    pattern = to_bytes(pattern)
    if not pattern:
        raise ValueError("empty pattern")
    heap = aug.heap
    child = heap.child
    segments = []
    pos = 0
    m = len(pattern)
    while pos < m:
        cur = 0
        length = 0
        while pos < m:
            nxt = child(cur, pattern[pos])
            if nxt is None:
                break
            cur = nxt
            pos += 1
            length += 1
        if length == 0:
            return SegmentDecomposition(segments, False)
        segments.append((cur, length))
    return SegmentDecomposition(segments, True)


def find_all(aug: AugmentedHeap, pattern, stats: SearchStats | None = None) -> list[int]:
    """All start positions of the pattern in the indexed text, sorted."""
    pattern = to_bytes(pattern)
    if not pattern:
        raise ValueError("empty pattern")
    d = decompose(aug, pattern)
    if stats is not None:
        stats.steps += len(pattern)
    if not d.complete:
        return []
    segs = d.segments
    k = len(segs)
    heap = aug.heap
    mrp = aug._mrp
    disc = aug.disc
    fin = aug.fin
    n = aug.n
    secondary = heap._secondary

    if k == 1:
        u, length = segs[0]
        out = []
        for v in aug.subtree_nodes(u):
            out.append(v)  # primary position == node id
            q = secondary.get(v)
            if q is not None:
                out.append(q)
        if stats is not None:
            stats.steps += len(out) + length
        # positions at proper ancestors match iff their reach passes u
        du, fu = disc[u], fin[u]
        parent = heap._materialize()[0]
        v = parent[u]
        while v > 0:
            for q in (v, secondary.get(v)):
                if q is not None:
                    w = mrp[q]
                    if du <= disc[w] and fin[w] <= fu:
                        out.append(q)
            if stats is not None:
                stats.steps += 1
            v = parent[v]
        out.sort()
        return out

    # several segments: filter candidates from the last stage backwards
    parent = heap._materialize()[0]
    survivors: set[int] = set()
    for j in range(k - 2, -1, -1):
        u, length = segs[j]
        last_stage = j == k - 2
        if last_stage:
            uk = segs[k - 1][0]
            duk, fuk = disc[uk], fin[uk]
        stage: set[int] = set()
        v = u
        while v > 0:
            for q in (v, secondary.get(v)):
                if q is None or mrp[q] != u:
                    continue
                nq = q + length
                if nq > n:
                    continue
                if last_stage:
                    w = mrp[nq]
                    if duk <= disc[w] and fin[w] <= fuk:
                        stage.add(q)
                elif nq in survivors:
                    stage.add(q)
            if stats is not None:
                stats.steps += 1
            v = parent[v]
        survivors = stage
    out = sorted(survivors)
    if stats is not None:
        stats.steps += len(out)
    # a pattern that is not fully represented cannot occur more often
    # than the length of its first segment
    if len(out) > segs[0][1]:
        raise AssertionError(
            f"occurrence bound violated: {len(out)} > {segs[0][1]}"
        )
    return out


def count(aug: AugmentedHeap, pattern) -> int:
    """Number of occurrences."""
    return len(find_all(aug, pattern))


def find_all_naive(text, pattern) -> list[int]:
    """Independent oracle: sliding comparison over the raw text."""
    text = to_bytes(text)
    pattern = to_bytes(pattern)
    if not pattern:
        raise ValueError("empty pattern")
    out = []
    at = text.find(pattern)
    while at != -1:
        out.append(at + 1)
        at = text.find(pattern, at + 1)
    return out
