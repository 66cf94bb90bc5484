"""Core graph containers, validation and edge-list file I/O.

Vertex indices are 0-based and contiguous.  Bipartite graphs keep separate
index spaces for the two sides; when a bipartite graph is viewed as a plain
graph (``to_graph``) the right side is shifted by ``n_left``.  Adjacency
lists are stored sorted; parallel edges (``multi=True``) are represented by
repeated entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class GraphInputError(ValueError):
    """Semantically invalid input (bad index, degree mismatch, ...)."""


class GraphFormatError(ValueError):
    """Malformed graph file."""


def _build_adjacency(n, endpoints):
    adj = [[] for _ in range(n)]
    for u, v in endpoints:
        adj[u].append(v)
    for lst in adj:
        lst.sort()
    return adj


class Graph:
    """Undirected graph given by an edge list.

    Self-loops are forbidden when ``multi=False``; a loop counts twice
    toward the degree of its vertex when ``multi=True``.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], multi: bool = False):
        edges = [(min(u, v), max(u, v)) for u, v in edges]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
        if not multi:
            if any(u == v for u, v in edges):
                raise GraphInputError("self-loop in simple graph")
            if len(set(edges)) != len(edges):
                raise GraphInputError("duplicate edge in simple graph")
        self.n = n
        self.multi = multi
        self._edges = sorted(edges)
        pairs = []
        for u, v in self._edges:
            pairs.append((u, v))
            if u != v:
                pairs.append((v, u))
            else:
                pairs.append((u, v))
        self.adj = _build_adjacency(n, pairs)

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u <= v, lexicographic order."""
        return list(self._edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adj], dtype=np.int64)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self._edges:
            if u == v:
                a[u, u] += 2
            else:
                a[u, v] += 1
                a[v, u] += 1
        return a

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        import bisect

        i = bisect.bisect_left(self._edges, (u, v))
        return i < len(self._edges) and self._edges[i] == (u, v)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.multi == other.multi
            and self._edges == other._edges
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, multi={self.multi})"


class BipartiteGraph:
    """Bipartite graph with ``n_left`` + ``n_right`` vertices.

    Edges are (left_index, right_index) pairs in the per-side index spaces.
    ``adj_left[u]`` lists right neighbors of left vertex ``u``; ``adj_right``
    is the derived inverse adjacency.
    """

    def __init__(
        self,
        n_left: int,
        n_right: int,
        edges: Iterable[tuple[int, int]],
        multi: bool = False,
    ):
        edges = [(int(u), int(v)) for u, v in edges]
        for u, v in edges:
            if not (0 <= u < n_left and 0 <= v < n_right):
                raise GraphInputError(
                    f"edge ({u},{v}) out of range for sides ({n_left},{n_right})"
                )
        if not multi and len(set(edges)) != len(edges):
            raise GraphInputError("duplicate edge in simple bipartite graph")
        self.n_left = n_left
        self.n_right = n_right
        self.multi = multi
        self._edges = sorted(edges)
        self.adj_left = _build_adjacency(n_left, self._edges)
        self.adj_right = _build_adjacency(n_right, [(v, u) for u, v in self._edges])

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> list[tuple[int, int]]:
        return list(self._edges)

    def degrees_left(self) -> np.ndarray:
        return np.array([len(a) for a in self.adj_left], dtype=np.int64)

    def degrees_right(self) -> np.ndarray:
        return np.array([len(a) for a in self.adj_right], dtype=np.int64)

    def biadjacency(self) -> np.ndarray:
        """Left-by-right matrix of edge multiplicities."""
        b = np.zeros((self.n_left, self.n_right), dtype=np.int64)
        for u, v in self._edges:
            b[u, v] += 1
        return b

    def to_graph(self) -> Graph:
        """Combined graph on n_left + n_right vertices (right side shifted)."""
        return Graph(
            self.n_left + self.n_right,
            [(u, self.n_left + v) for u, v in self._edges],
            multi=self.multi,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BipartiteGraph)
            and self.n_left == other.n_left
            and self.n_right == other.n_right
            and self.multi == other.multi
            and self._edges == other._edges
        )

    def __repr__(self) -> str:
        return (
            f"BipartiteGraph(n_left={self.n_left}, n_right={self.n_right}, "
            f"m={self.m}, multi={self.multi})"
        )


@dataclass
class TripartiteBase:
    """Two bipartite graphs sharing the middle part, with neighbor orderings.

    ``g1`` lives on L (left) and M (right side of g1); ``g2`` lives on M
    (left side of g2) and R.  ``order_left[v]`` / ``order_right[v]`` give,
    for each middle vertex ``v``, an explicit ordering of its L-neighbors
    and R-neighbors.  Default orderings are ascending.
    """

    g1: BipartiteGraph
    g2: BipartiteGraph
    order_left: list[list[int]] = field(default=None)
    order_right: list[list[int]] = field(default=None)

    def __post_init__(self):
        if self.g1.n_right != self.g2.n_left:
            raise GraphInputError(
                f"middle-part mismatch: g1 has {self.g1.n_right} right vertices, "
                f"g2 has {self.g2.n_left} left vertices"
            )
        if self.order_left is None:
            self.order_left = [list(a) for a in self.g1.adj_right]
        if self.order_right is None:
            self.order_right = [list(a) for a in self.g2.adj_left]
        for v in range(self.n_middle):
            if sorted(self.order_left[v]) != list(self.g1.adj_right[v]):
                raise GraphInputError(f"order_left[{v}] is not a permutation of the L-neighbors")
            if sorted(self.order_right[v]) != list(self.g2.adj_left[v]):
                raise GraphInputError(f"order_right[{v}] is not a permutation of the R-neighbors")

    @property
    def n_left(self) -> int:
        return self.g1.n_left

    @property
    def n_middle(self) -> int:
        return self.g1.n_right

    @property
    def n_right(self) -> int:
        return self.g2.n_right


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices on one side of a graph.

    ``side`` is ``"left"``, ``"right"`` or ``"whole"``.  For bipartite graphs
    ``"whole"`` members use the combined index space (right side shifted by
    ``n_left``); plain graphs only use ``"whole"``.
    """

    side: str
    members: tuple[int, ...]

    def __post_init__(self):
        if self.side not in ("left", "right", "whole"):
            raise GraphInputError(f"bad side {self.side!r}")
        members = tuple(sorted(int(v) for v in self.members))
        if len(set(members)) != len(members):
            raise GraphInputError("duplicate members in vertex set")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)


def validate_biregular(g: BipartiteGraph, d1: int, d2: int) -> bool:
    """True iff every left vertex has degree d1 and every right vertex d2."""
    return bool(
        np.all(g.degrees_left() == d1) and np.all(g.degrees_right() == d2)
    )


def _combined_members(g, s: VertexSet) -> list[int]:
    if isinstance(g, Graph):
        if s.side != "whole":
            raise GraphInputError("plain graphs only support side='whole'")
        if s.members and s.members[-1] >= g.n:
            raise GraphInputError("vertex index out of range")
        return list(s.members)
    if s.side == "left":
        if s.members and s.members[-1] >= g.n_left:
            raise GraphInputError("left vertex index out of range")
        return list(s.members)
    if s.side == "right":
        if s.members and s.members[-1] >= g.n_right:
            raise GraphInputError("right vertex index out of range")
        return [g.n_left + v for v in s.members]
    if s.members and s.members[-1] >= g.n_left + g.n_right:
        raise GraphInputError("vertex index out of range")
    return list(s.members)


def induced_subgraph(g: Graph | BipartiteGraph, s: VertexSet) -> tuple[Graph, list[int]]:
    """Induced subgraph G[S], relabeled 0..|S|-1, plus the new->old map.

    For bipartite inputs the subgraph is taken in the combined vertex space.
    """
    members = _combined_members(g, s)
    base = g if isinstance(g, Graph) else g.to_graph()
    pos = {old: new for new, old in enumerate(members)}
    sub_edges = [
        (pos[u], pos[v]) for u, v in base.edges() if u in pos and v in pos
    ]
    return Graph(len(members), sub_edges, multi=base.multi), members


# ---------------------------------------------------------------------------
# File I/O.
#
# Line 1 is a header:  `graph <n> <m>`, `bipartite <nL> <nR> <m>` or
# `tripartite <nL> <nM> <nR> <m1> <m2>`, optionally followed by the token
# `multi`.  Then one edge per line `u v`; tripartite files separate the two
# edge lists with `#E1` / `#E2` section markers.  `#` starts a comment.
# ---------------------------------------------------------------------------


def _parse_int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"bad {what}: {tok!r}") from None


def _read_lines(path) -> list[str]:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read().splitlines()


def read_graph(path) -> Graph | BipartiteGraph | TripartiteBase:
    """Parse a graph file; the header decides the returned type."""
    lines = _read_lines(path)
    header = None
    body: list[str] = []
    for ln in lines:
        stripped = ln.strip()
        if not stripped:
            continue
        if header is None:
            header = stripped
        else:
            body.append(stripped)
    if header is None:
        raise GraphFormatError("empty file")
    toks = header.split()
    multi = False
    if toks and toks[-1] == "multi":
        multi = True
        toks = toks[:-1]
    kind = toks[0] if toks else ""

    def parse_edges(lines_):
        out = []
        for ln in lines_:
            if ln.startswith("#"):
                continue
            parts = ln.split()
            if len(parts) != 2:
                raise GraphFormatError(f"bad edge line: {ln!r}")
            out.append((_parse_int(parts[0], "vertex"), _parse_int(parts[1], "vertex")))
        return out

    if kind == "graph":
        if len(toks) != 3:
            raise GraphFormatError(f"malformed header: {header!r}")
        n, m = _parse_int(toks[1], "n"), _parse_int(toks[2], "m")
        edges = parse_edges(body)
        if len(edges) != m:
            raise GraphFormatError(f"edge count mismatch: header says {m}, found {len(edges)}")
        try:
            return Graph(n, edges, multi=multi)
        except GraphInputError as e:
            raise GraphFormatError(str(e)) from None
    if kind == "bipartite":
        if len(toks) != 4:
            raise GraphFormatError(f"malformed header: {header!r}")
        nl, nr, m = (_parse_int(t, "count") for t in toks[1:4])
        edges = parse_edges(body)
        if len(edges) != m:
            raise GraphFormatError(f"edge count mismatch: header says {m}, found {len(edges)}")
        try:
            return BipartiteGraph(nl, nr, edges, multi=multi)
        except GraphInputError as e:
            raise GraphFormatError(str(e)) from None
    if kind == "tripartite":
        if len(toks) != 6:
            raise GraphFormatError(f"malformed header: {header!r}")
        nl, nm, nr, m1, m2 = (_parse_int(t, "count") for t in toks[1:6])
        section = None
        e1_lines, e2_lines = [], []
        for ln in body:
            if ln == "#E1":
                section = 1
                continue
            if ln == "#E2":
                section = 2
                continue
            if ln.startswith("#"):
                continue
            if section == 1:
                e1_lines.append(ln)
            elif section == 2:
                e2_lines.append(ln)
            else:
                raise GraphFormatError("edge line before #E1/#E2 section marker")
        e1 = parse_edges(e1_lines)
        e2 = parse_edges(e2_lines)
        if len(e1) != m1 or len(e2) != m2:
            raise GraphFormatError(
                f"edge count mismatch: header says {m1}+{m2}, found {len(e1)}+{len(e2)}"
            )
        try:
            return TripartiteBase(
                BipartiteGraph(nl, nm, e1, multi=multi),
                BipartiteGraph(nm, nr, e2, multi=multi),
            )
        except GraphInputError as e:
            raise GraphFormatError(str(e)) from None
    raise GraphFormatError(f"malformed header: {header!r}")


def write_graph(g: Graph | BipartiteGraph | TripartiteBase, path) -> None:
    """Write in the canonical text format (sorted edges, LF endings)."""
    lines = []
    if isinstance(g, Graph):
        head = f"graph {g.n} {g.m}"
        if g.multi:
            head += " multi"
        lines.append(head)
        lines.extend(f"{u} {v}" for u, v in g.edges())
    elif isinstance(g, BipartiteGraph):
        head = f"bipartite {g.n_left} {g.n_right} {g.m}"
        if g.multi:
            head += " multi"
        lines.append(head)
        lines.extend(f"{u} {v}" for u, v in g.edges())
    elif isinstance(g, TripartiteBase):
        head = (
            f"tripartite {g.n_left} {g.n_middle} {g.n_right} {g.g1.m} {g.g2.m}"
        )
        if g.g1.multi or g.g2.multi:
            head += " multi"
        lines.append(head)
        lines.append("#E1")
        lines.extend(f"{u} {v}" for u, v in g.g1.edges())
        lines.append("#E2")
        lines.extend(f"{u} {v}" for u, v in g.g2.edges())
    else:
        raise GraphInputError(f"cannot write object of type {type(g).__name__}")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
