"""The generalized Petersen graph P(n,k) and its element universe.

P(n,k) has outer cycle v_0..v_{n-1}, inner vertices u_0..u_{n-1} joined by
inner edges u_i u_{i+k mod n}, and spokes v_i u_i. The model requires
n >= 3 and strictly 1 <= k < n/2: at n = 2k the inner edges collapse into
duplicate pairs, the graph stops being cubic and the 5n element count
breaks, so that boundary is rejected rather than special-cased.

Every element of a valid instance has a closed mixed neighborhood of
exactly 7 elements (itself plus 6 adjacent or incident ones); the whole
package leans on that uniformity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elements import Element, ElementKind, ElementSet
from .errors import InvalidFactor, InvalidSpec, UnknownElement

NEIGHBORHOOD_SIZE = 7
KINDS_PER_COLUMN = 5


@dataclass(frozen=True)
class GraphSpec:
    """Parameters of a P(n,k) instance: outer cycle length n, inner skip k."""

    n: int
    k: int

    def validate(self) -> None:
        if self.n < 3:
            raise InvalidSpec(f"n must be >= 3, got {self.n}")
        if self.k < 1:
            raise InvalidSpec(f"k must be >= 1, got {self.k}")
        if 2 * self.k >= self.n:
            raise InvalidSpec(
                f"need k < n/2 (P({self.n},{self.k}) degenerates: duplicate inner edges)"
            )


def _neighbor_table(n: int, k: int) -> np.ndarray:
    """(5n, 7) table of closed mixed neighborhoods, rows sorted ascending."""
    i = np.arange(n)
    ip, im = (i + 1) % n, (i - 1) % n
    ik, imk = (i + k) % n, (i - k) % n
    V, U, OE, SP, IE = (kind * n for kind in range(5))

    tbl = np.empty((5 * n, NEIGHBORHOOD_SIZE), dtype=np.int32)
    tbl[V + i] = np.stack([V + i, V + im, V + ip, U + i, OE + im, OE + i, SP + i], axis=1)
    tbl[U + i] = np.stack([U + i, U + imk, U + ik, V + i, IE + imk, IE + i, SP + i], axis=1)
    tbl[OE + i] = np.stack([OE + i, V + i, V + ip, OE + im, OE + ip, SP + i, SP + ip], axis=1)
    tbl[SP + i] = np.stack([SP + i, V + i, U + i, OE + im, OE + i, IE + imk, IE + i], axis=1)
    tbl[IE + i] = np.stack([IE + i, U + i, U + ik, IE + imk, IE + ik, SP + i, SP + ik], axis=1)
    tbl.sort(axis=1)
    return tbl


class PetersenGraph:
    """Immutable P(n,k) instance with precomputed mixed neighborhoods."""

    def __init__(self, spec: GraphSpec):
        spec.validate()
        self.spec = spec
        self.n = spec.n
        self.k = spec.k
        self.nbrs = _neighbor_table(spec.n, spec.k)
        self.nbrs.setflags(write=False)

    @property
    def num_vertices(self) -> int:
        return 2 * self.n

    @property
    def num_edges(self) -> int:
        return 3 * self.n

    @property
    def num_elements(self) -> int:
        return 5 * self.n

    def element_id(self, item) -> int:
        if isinstance(item, Element):
            return item.id(self.n)
        eid = int(item)
        if not 0 <= eid < self.num_elements:
            raise UnknownElement(f"element id {eid} outside [0, {self.num_elements})")
        return eid

    def mixed_neighborhood(self, item) -> ElementSet:
        """Closed mixed neighborhood: the element plus everything adjacent or incident."""
        eid = self.element_id(item)
        return ElementSet(self.n, self.nbrs[eid])

    def edge_endpoints(self, item) -> tuple[int, int]:
        """Vertex ids of an edge element's two endpoints."""
        eid = self.element_id(item)
        n, k = self.n, self.k
        kind, i = divmod(eid, n)
        if kind == ElementKind.OUTER_EDGE:
            return i, (i + 1) % n
        if kind == ElementKind.SPOKE:
            return i, n + i
        if kind == ElementKind.INNER_EDGE:
            return n + i, n + (i + k) % n
        raise UnknownElement(f"element id {eid} is a vertex, not an edge")

    def label(self, item) -> str:
        """Human-readable name: v3, u5, v3v4, v3u3, u3u5."""
        eid = self.element_id(item)
        n, k = self.n, self.k
        kind, i = divmod(eid, n)
        if kind == ElementKind.OUTER_VERTEX:
            return f"v{i}"
        if kind == ElementKind.INNER_VERTEX:
            return f"u{i}"
        if kind == ElementKind.OUTER_EDGE:
            return f"v{i}v{(i + 1) % n}"
        if kind == ElementKind.SPOKE:
            return f"v{i}u{i}"
        return f"u{i}u{(i + k) % n}"

    def universe(self) -> ElementSet:
        return ElementSet.from_mask(self.n, np.ones(self.num_elements, dtype=bool))

    def __repr__(self) -> str:
        return f"PetersenGraph(n={self.n}, k={self.k})"


def build_graph(spec: GraphSpec) -> PetersenGraph:
    """Construct P(n,k). Raises InvalidSpec for n < 3 or k outside [1, n/2)."""
    return PetersenGraph(spec)


def build(n: int, k: int) -> PetersenGraph:
    return build_graph(GraphSpec(n, k))


@dataclass(frozen=True)
class Block:
    """One block of a column decomposition.

    ``vertices`` holds the at most 2t vertices of t consecutive columns,
    ``internal_edges`` the edges with both endpoints inside the block, and
    ``cross_edges`` the edges leaving the block forward (toward higher
    columns, wrapping around). For t >= k every cross edge lands in the
    next block, which is the usual between-consecutive-blocks reading.
    """

    index: int
    vertices: ElementSet
    internal_edges: ElementSet
    cross_edges: ElementSet


@dataclass(frozen=True)
class BlockDecomposition:
    t: int
    n: int
    blocks: tuple[Block, ...]

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def remainder_columns(self) -> int:
        return self.n % self.t


def decompose(graph: PetersenGraph, t: int) -> BlockDecomposition:
    """Split P(n,k) into ceil(n/t) blocks of t consecutive columns.

    The last block keeps the n mod t leftover columns when t does not
    divide n. Vertex sets partition V; each edge is assigned to exactly
    one block's internal or cross set.
    """
    n, k = graph.n, graph.k
    if not 1 <= t <= n:
        raise InvalidFactor(f"partitioning factor must be in [1, {n}], got {t}")

    num_blocks = -(-n // t)
    block_of = np.arange(n) // t

    verts = [[] for _ in range(num_blocks)]
    internal = [[] for _ in range(num_blocks)]
    cross = [[] for _ in range(num_blocks)]
    for i in range(n):
        b = block_of[i]
        verts[b].append(i)
        verts[b].append(n + i)
        # spoke: both endpoints in column i
        internal[b].append(3 * n + i)
        # outer edge i -> columns i, i+1
        b2 = block_of[(i + 1) % n]
        (internal if b2 == b else cross)[b].append(2 * n + i)
        # inner edge i -> columns i, i+k
        b2 = block_of[(i + k) % n]
        (internal if b2 == b else cross)[b].append(4 * n + i)

    blocks = tuple(
        Block(
            index=b,
            vertices=ElementSet(n, verts[b]),
            internal_edges=ElementSet(n, internal[b]),
            cross_edges=ElementSet(n, cross[b]),
        )
        for b in range(num_blocks)
    )
    return BlockDecomposition(t=t, n=n, blocks=blocks)


def to_dot(graph: PetersenGraph, highlight: ElementSet | None = None) -> str:
    """Render the graph in DOT, drawing highlighted elements bold/filled."""
    n = graph.n
    hl = highlight.mask if highlight is not None else np.zeros(graph.num_elements, dtype=bool)
    lines = [f'graph "P({n},{graph.k})" {{']
    for i in range(n):
        style = " [style=filled, fillcolor=black, fontcolor=white]" if hl[i] else ""
        lines.append(f"  v{i}{style};")
    for i in range(n):
        style = " [style=filled, fillcolor=black, fontcolor=white]" if hl[n + i] else ""
        lines.append(f"  u{i}{style};")
    for kind in (ElementKind.OUTER_EDGE, ElementKind.SPOKE, ElementKind.INNER_EDGE):
        for i in range(n):
            eid = int(kind) * n + i
            a, b = graph.edge_endpoints(eid)
            na = f"v{a}" if a < n else f"u{a - n}"
            nb = f"v{b}" if b < n else f"u{b - n}"
            style = " [style=bold, penwidth=3]" if hl[eid] else ""
            lines.append(f"  {na} -- {nb}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
