"""Position heap construction.

The position heap of a text T[1..n] is the sequence hash tree of the
suffixes of T inserted in descending length order: each suffix adds one
node at its shortest unrepresented prefix, or, when the whole suffix is
already represented, attaches its starting position as a *secondary*
position of the existing node.  Every node therefore stores one primary
position and at most one secondary position ("double nodes").

``build`` runs the on-line left-to-right construction: it keeps an
active node / active position cursor and per-node suffix links (the
link from the node of a*w to the node of w), creating exactly one node
per inner loop pass, which gives linear total work.  ``oracle_build``
is the quadratic definitional construction used as an independent
reference in tests and ``posheap verify``.

Positions are 1-based everywhere in the public API.  Letters are bytes
(ints 0..255).  Node ids are dense ints with 0 reserved for the root;
nodes are created in increasing primary-position order, so the primary
position of a non-root node equals its id.  That coincidence is an
implementation property of this module: callers should use
``primary()`` rather than relying on it.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

# Batch construction switches to flat child tables for parents of depth
# <= 2 once the text is at least this long; below it a single packed
# dict is faster and far lighter per heap.
_FLAT_THRESHOLD = 1 << 18

_MAX_TEXT = 2**31 - 2  # node ids are stored in int32 arrays


def to_bytes(text) -> bytes:
    """Coerce str/bytes/bytearray input to bytes, one letter per byte.

    Strings are encoded latin-1 so that one character maps to exactly
    one letter; code points above 255 are rejected by the codec.
    """
    if isinstance(text, bytes):
        return text
    if isinstance(text, (bytearray, memoryview)):
        return bytes(text)
    if isinstance(text, str):
        return text.encode("latin-1")
    raise TypeError(f"expected str or bytes-like text, got {type(text).__name__}")


@dataclass(frozen=True)
class NodeView:
    """Snapshot of one node, for inspection and serialization."""

    id: int
    parent: int | None
    in_letter: int | None
    suffix_link: int | None
    depth: int
    primary: int | None
    secondary: int | None
    children: dict[int, int]


class PositionHeap:
    """Trie over the positions of a byte text, built on-line.

    The builder is single-writer: no queries should run concurrently
    with ``append``/``extend``/``finalize``.  After ``finalize`` the
    structure is immutable and safe for any number of readers.
    """

    def __init__(self):
        self._text = bytearray()
        self._suffix = [-1]          # suffix_link per node; -1 = virtual bottom
        self._secondary = {}         # node -> secondary position, set by finalize
        self._active = 0
        self._finalized = False
        # small mode: one dict keyed (node << 8) | letter
        self._edge = {}
        # large mode tables (allocated on migration)
        self._flat = False
        self._l1 = None              # children of the root, by letter
        self._l2 = None              # children of depth-1 nodes, by (letter, letter)
        self._l3 = None              # children of depth-2 nodes, int32, by 3-byte code
        self._deep = None            # per-letter {parent: child} for depth >= 3
        # lazily materialized parent/letter/depth arrays
        self._mat = None
        self._mat_nodes = -1

    # ------------------------------------------------------------------
    # basic accessors

    @property
    def n(self) -> int:
        """Length of the text appended so far."""
        return len(self._text)

    @property
    def finalized(self) -> bool:
        return self._finalized

    @property
    def active_node(self) -> int:
        return self._active

    @property
    def active_position(self) -> int:
        # positions [1..s-1] are primary, [s..n] secondary; one node per
        # primary position plus the root makes s equal the node count
        return len(self._suffix)

    @property
    def creations(self) -> int:
        """Total nodes created, which equals the inner-loop pass count."""
        return len(self._suffix) - 1

    def node_count(self) -> int:
        return len(self._suffix)

    def text_bytes(self) -> bytes:
        return bytes(self._text)

    def __len__(self) -> int:
        return len(self._suffix)

    # ------------------------------------------------------------------
    # construction

    def append(self, letter: int) -> None:
        """Process one more letter of the text (on-line step)."""
        if self._finalized:
            raise ValueError("heap is finalized; cannot append")
        if not 0 <= letter <= 255:
            raise ValueError(f"letter out of byte range: {letter!r}")
        if len(self._text) >= _MAX_TEXT:
            raise ValueError("text too long for this index")
        if self._flat:
            self._step_flat(letter)
        else:
            self._step_small(letter)
            if len(self._text) >= _FLAT_THRESHOLD:
                self._migrate_to_flat()

    def extend(self, data) -> None:
        """Process a chunk of text; equivalent to appending each byte."""
        if self._finalized:
            raise ValueError("heap is finalized; cannot extend")
        data = to_bytes(data)
        if len(self._text) + len(data) > _MAX_TEXT:
            raise ValueError("text too long for this index")
        if not self._flat and len(self._text) + len(data) >= _FLAT_THRESHOLD:
            self._migrate_to_flat()
        if self._flat:
            self._extend_flat(data)
        else:
            self._extend_small(data)

    def finalize(self) -> None:
        """Recover secondary positions and freeze the heap.

        Walks the suffix-link chain from the active node, handing out
        positions s, s+1, ..., n one per visited node (the root gets
        none).  Idempotent.
        """
        if self._finalized:
            return
        v = self._active
        pos = self.active_position
        suffix = self._suffix
        sec = self._secondary
        while v != 0:
            sec[v] = pos
            pos += 1
            v = suffix[v]
        if pos != len(self._text) + 1:
            raise AssertionError("suffix chain length disagrees with text length")
        self._finalized = True

    # ------------------------------------------------------------------
    # small-mode steps: one packed dict

    def _step_small(self, c: int) -> None:
        edge = self._edge
        suffix = self._suffix
        cur = self._active
        n_nodes = len(suffix)
        self._text.append(c)
        prev = -1
        while True:
            if cur < 0:
                # virtual bottom: has an edge to the root for every letter
                nxt = 0
                break
            nxt = edge.setdefault((cur << 8) | c, n_nodes)
            if nxt != n_nodes:
                break
            suffix.append(0)
            if prev >= 0:
                suffix[prev] = n_nodes
            prev = n_nodes
            n_nodes += 1
            cur = suffix[cur]
        if prev >= 0:
            suffix[prev] = nxt
        self._active = nxt

    def _extend_small(self, data: bytes) -> None:
        edge = self._edge
        suffix = self._suffix
        setd = edge.setdefault
        sapp = suffix.append
        cur = self._active
        n_nodes = len(suffix)
        self._text.extend(data)
        for c in data:
            prev = -1
            while True:
                if cur < 0:
                    nxt = 0
                    break
                nxt = setd((cur << 8) | c, n_nodes)
                if nxt != n_nodes:
                    break
                sapp(0)
                if prev >= 0:
                    suffix[prev] = n_nodes
                prev = n_nodes
                n_nodes += 1
                cur = suffix[cur]
            if prev >= 0:
                suffix[prev] = nxt
            cur = nxt
        self._active = cur

    # ------------------------------------------------------------------
    # large-mode steps: flat tables for shallow parents
    #
    # Every node probed along the suffix-link chain stores the pending
    # secondary position p, so its path label is literally T[p..k], a
    # suffix of the text read so far.  A probe at a depth-d node for the
    # next letter c can therefore be keyed by the last d text bytes plus
    # c, which turns the busiest lookups (depths 0..2) into flat array
    # reads instead of dict probes.

    def _migrate_to_flat(self) -> None:
        l1 = [0] * 256
        l2 = [0] * 65536
        # int32 view over a zeroed buffer: cheap to allocate, fast to index
        l3 = memoryview(bytearray(4 << 24)).cast("i")
        deep = [{} for _ in range(256)]
        if self._edge:
            parent, letter, depth = self._materialize()
            for key, w in self._edge.items():
                v = key >> 8
                c = key & 0xFF
                d = depth[v]
                if d == 0:
                    l1[c] = w
                elif d == 1:
                    l2[(letter[v] << 8) | c] = w
                elif d == 2:
                    l3[(letter[parent[v]] << 16) | (letter[v] << 8) | c] = w
                else:
                    deep[c][v] = w
        self._edge = None
        self._l1, self._l2, self._l3, self._deep = l1, l2, l3, deep
        self._flat = True
        self._mat_nodes = -1

    def _step_flat(self, c: int) -> None:
        suffix = self._suffix
        l1, l2, l3, deep = self._l1, self._l2, self._l3, self._deep
        text = self._text
        cur = self._active
        n_nodes = len(suffix)
        dep = len(text) + 1 - n_nodes
        b1 = text[-1] if len(text) >= 1 else 0
        b2 = text[-2] if len(text) >= 2 else 0
        text.append(c)
        prev = -1
        while True:
            if dep > 2:
                nxt = deep[c].setdefault(cur, n_nodes)
                if nxt != n_nodes:
                    break
            elif dep == 2:
                i3 = (b2 << 16) | (b1 << 8) | c
                nxt = l3[i3]
                if nxt:
                    break
                l3[i3] = n_nodes
            elif dep == 1:
                i2 = (b1 << 8) | c
                nxt = l2[i2]
                if nxt:
                    break
                l2[i2] = n_nodes
            elif dep == 0:
                nxt = l1[c]
                if nxt:
                    break
                l1[c] = n_nodes
            else:
                nxt = 0
                break
            suffix.append(0)
            if prev >= 0:
                suffix[prev] = n_nodes
            prev = n_nodes
            n_nodes += 1
            cur = suffix[cur]
            dep -= 1
        if prev >= 0:
            suffix[prev] = nxt
        self._active = nxt

    def _extend_flat(self, data: bytes) -> None:
        suffix = self._suffix
        l1, l2, l3, deep = self._l1, self._l2, self._l3, self._deep
        setds = [d.setdefault for d in deep]
        cur = self._active
        n_nodes = len(suffix)
        text = self._text
        # depth of the active node is k+1-s with s the active position
        dep = len(text) + 1 - n_nodes
        b1 = text[-1] if len(text) >= 1 else 0
        b2 = text[-2] if len(text) >= 2 else 0
        text.extend(data)
        # at most dep + len(data) + 1 creations in this call
        suffix += [0] * (dep + len(data) + 1)
        for c in data:
            sd = None
            prev = -1
            while True:
                if dep > 2:
                    if sd is None:
                        sd = setds[c]
                    nxt = sd(cur, n_nodes)
                    if nxt != n_nodes:
                        break
                elif dep == 2:
                    i3 = (b2 << 16) | (b1 << 8) | c
                    nxt = l3[i3]
                    if nxt:
                        break
                    l3[i3] = n_nodes
                elif dep == 1:
                    i2 = (b1 << 8) | c
                    nxt = l2[i2]
                    if nxt:
                        break
                    l2[i2] = n_nodes
                elif dep == 0:
                    nxt = l1[c]
                    if nxt:
                        break
                    l1[c] = n_nodes
                else:
                    nxt = 0
                    break
                if prev >= 0:
                    suffix[prev] = n_nodes
                prev = n_nodes
                n_nodes += 1
                cur = suffix[cur]
                dep -= 1
            if prev >= 0:
                suffix[prev] = nxt
            cur = nxt
            dep += 1
            b2 = b1
            b1 = c
        del suffix[n_nodes:]
        self._active = cur

    # ------------------------------------------------------------------
    # derived arrays and queries

    def _iter_edges(self):
        """Yield (parent, letter, child) for every tree edge."""
        if not self._flat:
            for key, w in self._edge.items():
                yield key >> 8, key & 0xFF, w
            return
        l1, l2, l3, deep = self._l1, self._l2, self._l3, self._deep
        for c in range(256):
            w = l1[c]
            if w:
                yield 0, c, w
        for i2 in range(65536):
            w = l2[i2]
            if w:
                yield l1[i2 >> 8], i2 & 0xFF, w
        # the level-3 table is huge and usually sparse: skip all-zero
        # chunks of the backing buffer at C speed
        buf = l3.obj
        step = 1 << 18  # bytes per chunk, 64k slots
        for base in range(0, len(buf), step):
            seg = buf[base:base + step]
            if seg.count(0) == len(seg):
                continue
            lo = base >> 2
            for i3 in range(lo, lo + (len(seg) >> 2)):
                w = l3[i3]
                if w:
                    yield l2[i3 >> 8], i3 & 0xFF, w
        for c, d in enumerate(deep):
            for v, w in d.items():
                yield v, c, w

    def _materialize(self):
        """Build (parent, letter, depth) arrays, cached per node count."""
        n_nodes = len(self._suffix)
        if self._mat_nodes == n_nodes:
            return self._mat
        parent = array("i", bytes(4 * n_nodes))
        letter = bytearray(n_nodes)
        depth = array("i", bytes(4 * n_nodes))
        parent[0] = -1
        for v, c, w in self._iter_edges():
            parent[w] = v
            letter[w] = c
        for w in range(1, n_nodes):
            depth[w] = depth[parent[w]] + 1
        self._mat = (parent, letter, depth)
        self._mat_nodes = n_nodes
        return self._mat

    def child(self, v: int, letter: int) -> int | None:
        """Target of the letter-edge out of v, or None."""
        self._check_node(v)
        if not 0 <= letter <= 255:
            raise ValueError(f"letter out of byte range: {letter!r}")
        if not self._flat:
            return self._edge.get((v << 8) | letter)
        parent, lett, depth = self._materialize()
        d = depth[v]
        if d == 0:
            w = self._l1[letter]
        elif d == 1:
            w = self._l2[(lett[v] << 8) | letter]
        elif d == 2:
            w = self._l3[(lett[parent[v]] << 16) | (lett[v] << 8) | letter]
        else:
            w = self._deep[letter].get(v, 0)
        return w or None

    def children_of(self, v: int) -> list[tuple[int, int]]:
        """(letter, child) pairs of v in increasing letter order."""
        self._check_node(v)
        return self.children_lists()[v]

    def children_lists(self) -> list[list[tuple[int, int]]]:
        """Letter-sorted adjacency for all nodes; built per call."""
        kids: list[list[tuple[int, int]]] = [[] for _ in range(len(self._suffix))]
        for v, c, w in self._iter_edges():
            kids[v].append((c, w))
        for lst in kids:
            if len(lst) > 1:
                lst.sort()
        return kids

    def parent(self, v: int) -> int | None:
        self._check_node(v)
        if v == 0:
            return None
        return self._materialize()[0][v]

    def in_letter(self, v: int) -> int | None:
        self._check_node(v)
        if v == 0:
            return None
        return self._materialize()[1][v]

    def suffix_link(self, v: int) -> int | None:
        """f(v); None for the root, whose link goes to the virtual bottom."""
        self._check_node(v)
        if v == 0:
            return None
        return self._suffix[v]

    def depth(self, v: int) -> int:
        self._check_node(v)
        return self._materialize()[2][v]

    def tree_depth(self) -> int:
        depth = self._materialize()[2]
        return max(depth) if len(depth) else 0

    def primary(self, v: int) -> int | None:
        """Primary position stored at v (None for the root)."""
        self._check_node(v)
        return v if v else None

    def secondary(self, v: int) -> int | None:
        self._check_node(v)
        return self._secondary.get(v)

    def path_label(self, v: int) -> bytes:
        """Concatenated edge letters from the root down to v."""
        self._check_node(v)
        parent, letter, _ = self._materialize()
        out = bytearray()
        while v != 0:
            out.append(letter[v])
            v = parent[v]
        out.reverse()
        return bytes(out)

    def node(self, v: int) -> NodeView:
        self._check_node(v)
        return NodeView(
            id=v,
            parent=self.parent(v),
            in_letter=self.in_letter(v),
            suffix_link=self.suffix_link(v),
            depth=self.depth(v),
            primary=self.primary(v),
            secondary=self.secondary(v),
            children=dict((c, w) for c, w in self.children_of(v)),
        )

    def copy(self) -> "PositionHeap":
        """Deep snapshot; used to test prefix consistency of the builder."""
        h = PositionHeap()
        h._text = bytearray(self._text)
        h._suffix = list(self._suffix)
        h._secondary = dict(self._secondary)
        h._active = self._active
        h._finalized = self._finalized
        h._flat = self._flat
        if self._flat:
            h._edge = None
            h._l1 = list(self._l1)
            h._l2 = list(self._l2)
            h._l3 = memoryview(bytearray(self._l3.obj)).cast("i")
            h._deep = [dict(d) for d in self._deep]
        else:
            h._edge = dict(self._edge)
        return h

    def _check_node(self, v: int) -> None:
        if not 0 <= v < len(self._suffix):
            raise ValueError(f"no such node: {v}")


def build(text) -> PositionHeap:
    """On-line construction over the whole text; not finalized."""
    h = PositionHeap()
    h.extend(to_bytes(text))
    return h


def index(text) -> PositionHeap:
    """build + finalize in one go."""
    h = build(text)
    h.finalize()
    return h


# ----------------------------------------------------------------------
# definitional oracle and brute-force helpers


def oracle_build(text) -> PositionHeap:
    """Definitional construction: insert suffixes longest-first.

    For each suffix, walk from the root as far as represented; if the
    whole suffix is represented the start position becomes a secondary
    position of the reached node, otherwise one child is created for
    the shortest unrepresented prefix.  Quadratic, independent of the
    on-line builder, and returns a finalized heap (suffix links are
    filled definitionally by walking labels).
    """
    data = to_bytes(text)
    n = len(data)
    h = PositionHeap()
    h._text = bytearray(data)
    edge = h._edge
    suffix = h._suffix
    first_secondary = n + 1
    active = 0
    for i in range(1, n + 1):
        cur = 0
        j = i - 1
        while j < n:
            nxt = edge.get((cur << 8) | data[j])
            if nxt is None:
                break
            cur = nxt
            j += 1
        if j == n:
            # whole suffix already represented
            if cur == 0 or cur in h._secondary:
                raise AssertionError("oracle: secondary slot conflict")
            h._secondary[cur] = i
            if i < first_secondary:
                first_secondary = i
                active = cur
        else:
            w = len(suffix)
            if w != i:
                raise AssertionError("oracle: creation order broke primary==id")
            edge[(cur << 8) | data[j]] = w
            suffix.append(0)
    # definitional suffix links: node of a*w maps to node of w
    for v in range(1, len(suffix)):
        label = h.path_label(v)
        cur = 0
        for c in label[1:]:
            cur = edge[(cur << 8) | c]
        suffix[v] = cur
    h._active = active
    h._finalized = True
    return h


def h_oracle(text) -> int:
    """Brute-force h(T): the longest |w| with at least |w| (possibly
    overlapping) occurrences of some substring w.  0 for empty text."""
    data = to_bytes(text)
    n = len(data)
    best = 0
    for length in range(1, n + 1):
        seen = set()
        ok = False
        for start in range(0, n - length + 1):
            w = data[start:start + length]
            if w in seen:
                continue
            seen.add(w)
            count = 0
            at = data.find(w)
            while at != -1:
                count += 1
                if count >= length:
                    break
                at = data.find(w, at + 1)
            if count >= length:
                ok = True
                break
        if ok:
            best = length
        else:
            break
    return best


def is_ancestor_walk(heap: PositionHeap, u: int, v: int) -> bool:
    """Parent-chain ancestor-or-self test; the slow reference."""
    parent, _, depth = heap._materialize()
    while depth[v] > depth[u]:
        v = parent[v]
    return u == v


def recover_text(heap: PositionHeap) -> bytes:
    """Reconstruct the text from a finalized heap.

    T[i] is the first letter on the root path of the node storing
    position i; every position is stored somewhere once the heap is
    finalized, so the whole text is recoverable.
    """
    if not heap.finalized:
        raise ValueError("heap must be finalized to recover the text")
    parent, letter, _ = heap._materialize()
    n_nodes = heap.node_count()
    top = array("i", bytes(4 * n_nodes))  # depth-1 ancestor
    for w in range(1, n_nodes):
        p = parent[w]
        top[w] = w if p == 0 else top[p]
    n = heap.n
    out = bytearray(n)
    for v in range(1, n_nodes):
        out[v - 1] = letter[top[v]]
    for v, pos in heap._secondary.items():
        out[pos - 1] = letter[top[v]]
    return bytes(out)


def structurally_equal(a: PositionHeap, b: PositionHeap) -> str | None:
    """Compare two heaps node by node; returns a diff string or None.

    Suffix links are deliberately excluded: the oracle assigns them by
    definition, the on-line builder by chaining, and their soundness is
    checked against path labels elsewhere.
    """
    if a.text_bytes() != b.text_bytes():
        return "texts differ"
    if a.node_count() != b.node_count():
        return f"node counts differ: {a.node_count()} vs {b.node_count()}"
    if a.active_position != b.active_position:
        return f"active positions differ: {a.active_position} vs {b.active_position}"
    if a.finalized and b.finalized and a._active != b._active:
        return f"active nodes differ: {a._active} vs {b._active}"
    pa, la, _ = a._materialize()
    pb, lb, _ = b._materialize()
    for v in range(1, a.node_count()):
        if pa[v] != pb[v]:
            return f"node {v}: parents differ ({pa[v]} vs {pb[v]})"
        if la[v] != lb[v]:
            return f"node {v}: letters differ ({la[v]} vs {lb[v]})"
    if a._secondary != b._secondary:
        return f"secondary maps differ: {sorted(a._secondary.items())} vs {sorted(b._secondary.items())}"
    return None
