"""Augmented position heap: the query-side structures.

On top of a finalized heap this adds, in one linear pass each:

* ``node_of``: position -> node holding it (primary or secondary slot);
* discovery/finishing times from one DFS, giving O(1) ancestor tests by
  interval containment, plus the balanced-parenthesis encoding of the
  same traversal as an alternative ancestor structure;
* maximal-reach targets: for every position i, the node of the longest
  prefix of T[i..n] that is represented in the heap.  Computed with a
  single read head that never moves backwards: extend the current match
  while an edge exists, record the node, follow its suffix link, repeat.
  Each inner step advances the read head, so the whole pass is O(n).

``MrpBits`` packs the reach depths into exactly 2n bits: writing m_1 and
then the deltas m_i - m_{i-1} + 1 in unary, each value followed by a 0.
The chain never drops by more than one per position, so every delta is
nonnegative, and the depths sum so that the vector holds exactly n ones.
Depth recovery is rank1(select0(i)) - i + 1.
"""

from __future__ import annotations

from array import array

from .bitvec import BitVector, ParenSequence
from .heap import PositionHeap


class AugmentedHeap:
    """Read-only query structures over a finalized PositionHeap."""

    def __init__(self, heap: PositionHeap):
        if not heap.finalized:
            raise ValueError("augment requires a finalized heap")
        self.heap = heap
        self.n = heap.n
        self._build_node_of()
        self._dfs()
        self._compute_mrp()

    # ------------------------------------------------------------------

    def _build_node_of(self):
        n = self.n
        node_of = array("i", bytes(4 * (n + 1)))
        for v in range(1, self.heap.node_count()):
            node_of[v] = v  # primary position == node id
        for v, pos in self.heap._secondary.items():
            node_of[pos] = v
        # every position must be covered exactly once
        if n and any(node_of[i] == 0 for i in range(1, n + 1)):
            raise AssertionError("position->node map has holes")
        self._node_of = node_of

    def _dfs(self):
        heap = self.heap
        n_nodes = heap.node_count()
        kids = heap.children_lists()
        disc = array("i", bytes(4 * n_nodes))
        fin = array("i", bytes(4 * n_nodes))
        pre = array("i", bytes(4 * n_nodes))
        by_pre = array("i", bytes(4 * n_nodes))
        bits = bytearray()
        open_of = array("i", bytes(4 * n_nodes))
        clock = 0
        counter = 0
        stack = [(0, 0)]
        clock += 1
        disc[0] = clock
        pre[0] = 0
        by_pre[0] = 0
        bits.append(1)
        open_of[0] = 1
        while stack:
            v, idx = stack[-1]
            if idx < len(kids[v]):
                stack[-1] = (v, idx + 1)
                w = kids[v][idx][1]
                clock += 1
                disc[w] = clock
                counter += 1
                pre[w] = counter
                by_pre[counter] = w
                bits.append(1)
                open_of[w] = len(bits)
                stack.append((w, 0))
            else:
                clock += 1
                fin[v] = clock
                bits.append(0)
                stack.pop()
        self.disc = disc
        self.fin = fin
        self._pre = pre
        self._by_pre = by_pre
        self.parens = ParenSequence(BitVector(bits), open_of)

    def _compute_mrp(self):
        heap = self.heap
        n = self.n
        data = heap.text_bytes()
        suffix = heap._suffix
        mrp = array("i", bytes(4 * (n + 1)))
        cur = 0
        rh = 1  # read head, 1-based; never reset
        if heap._flat:
            l1, l2, l3 = heap._l1, heap._l2, heap._l3
            deep = heap._deep
            dep = 0
            for i in range(1, n + 1):
                while rh <= n:
                    c = data[rh - 1]
                    if dep > 2:
                        nxt = deep[c].get(cur, 0)
                    elif dep == 2:
                        nxt = l3[(data[rh - 3] << 16) | (data[rh - 2] << 8) | c]
                    elif dep == 1:
                        nxt = l2[(data[rh - 2] << 8) | c]
                    else:
                        nxt = l1[c]
                    if not nxt:
                        break
                    cur = nxt
                    dep += 1
                    rh += 1
                mrp[i] = cur
                cur = suffix[cur]
                dep -= 1
        else:
            edge = heap._edge
            get = edge.get
            for i in range(1, n + 1):
                while rh <= n:
                    nxt = get((cur << 8) | data[rh - 1])
                    if nxt is None:
                        break
                    cur = nxt
                    rh += 1
                mrp[i] = cur
                cur = suffix[cur]
        self._mrp = mrp

    # ------------------------------------------------------------------
    # queries

    def node_of(self, i: int) -> int:
        """Node storing position i (as primary or secondary)."""
        self._check_pos(i)
        return self._node_of[i]

    def mrp_node(self, i: int) -> int:
        """Node of the longest represented prefix of T[i..n]."""
        self._check_pos(i)
        return self._mrp[i]

    def longest_rep_prefix(self, i: int) -> tuple[int, int]:
        """(node, length) of the longest represented prefix of T[i..n]."""
        self._check_pos(i)
        v = self._mrp[i]
        return v, self.heap.depth(v)

    def is_ancestor(self, u: int, v: int) -> bool:
        """Ancestor-or-self test by DFS interval containment; O(1)."""
        return self.disc[u] <= self.disc[v] and self.fin[v] <= self.fin[u]

    def subtree_nodes(self, v: int):
        """All nodes in v's subtree (preorder slice; O(size))."""
        size = (self.fin[v] - self.disc[v] + 1) // 2
        start = self._pre[v]
        return self._by_pre[start:start + size]

    def encode_mrp(self) -> "MrpBits":
        return MrpBits.from_depths(self.mrp_depths())

    def mrp_depths(self) -> array:
        depth = self.heap._materialize()[2]
        mrp = self._mrp
        return array("i", (depth[mrp[i]] for i in range(1, self.n + 1)))

    def _check_pos(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"position out of range: {i}")


class MrpBits:
    """2n-bit unary encoding of the maximal-reach depths."""

    __slots__ = ("bits", "n")

    def __init__(self, bits: BitVector, n: int):
        self.bits = bits
        self.n = n

    @classmethod
    def from_depths(cls, depths) -> "MrpBits":
        n = len(depths)
        out = bytearray()
        prev = None
        for m in depths:
            d = m if prev is None else m - prev + 1
            if d < 0:
                raise ValueError(
                    f"maximal-reach chain dropped by more than one ({prev} -> {m})"
                )
            out.extend(b"\x01" * d)
            out.append(0)
            prev = m
        bits = BitVector(out)
        if bits.nbits != 2 * n:
            raise AssertionError(
                f"encoding is {bits.nbits} bits for n={n}; depth sum must equal n"
            )
        return cls(bits, n)

    @classmethod
    def from_values(cls, values) -> "MrpBits":
        """Encode an explicit (m1, delta2, ..., deltan) vector; for tests."""
        out = bytearray()
        for d in values:
            if d < 0:
                raise ValueError("unary encoding needs nonnegative values")
            out.extend(b"\x01" * d)
            out.append(0)
        return cls(BitVector(out), len(values))

    def mrp_depth(self, i: int) -> int:
        """Depth of the maximal-reach node of position i, from bits alone."""
        if not 1 <= i <= self.n:
            raise ValueError(f"position out of range: {i}")
        return self.bits.rank1(self.bits.select0(i)) - i + 1


def augment(heap: PositionHeap) -> AugmentedHeap:
    """Build all query structures for a finalized heap."""
    return AugmentedHeap(heap)


def naive_mrp_nodes(heap: PositionHeap) -> list[int]:
    """Per-position maximal reach by independent root walks; quadratic oracle."""
    data = heap.text_bytes()
    n = len(data)
    out = [0] * (n + 1)
    for i in range(1, n + 1):
        cur = 0
        for j in range(i - 1, n):
            nxt = heap.child(cur, data[j])
            if nxt is None:
                break
            cur = nxt
        out[i] = cur
    return out
