"""Undirected simple graphs with string labels and dense integer ids.

Graphs are immutable after construction and safe to share across workers.
Connectivity runs on per-vertex adjacency bitmasks; the minimum vertex cut
uses vertex-split maximum flow, independent of the brute-force search in
`dcnconn.search` that cross-validates it.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Iterator


class Graph:
    """Immutable undirected simple graph."""

    __slots__ = ("_labels", "_index", "_adj", "_masks")

    def __init__(self, labels: Sequence[str], id_edges: Iterable[tuple[int, int]]):
        self._labels: tuple[str, ...] = tuple(labels)
        if len(set(self._labels)) != len(self._labels):
            seen: set[str] = set()
            for lab in self._labels:
                if lab in seen:
                    raise ValueError(f"duplicate label: {lab!r}")
                seen.add(lab)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        n = len(self._labels)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in id_edges:
            if u == v:
                raise ValueError(f"self-loop at {self._labels[u]!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint id out of range: ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        masks = []
        for s in self._adj:
            m = 0
            for v in s:
                m |= 1 << v
            masks.append(m)
        self._masks: tuple[int, ...] = tuple(masks)

    @property
    def vertex_count(self) -> int:
        return len(self._labels)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._masks

    def id_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown vertex: {label!r}") from None

    def label_of(self, vid: int) -> str:
        return self._labels[vid]

    def has_vertex(self, label: str) -> bool:
        return label in self._index

    def has_edge(self, u: str, v: str) -> bool:
        return self.id_of(v) in self._adj[self.id_of(u)]

    def neighbor_ids(self, vid: int) -> frozenset[int]:
        return self._adj[vid]

    def neighbors(self, label: str) -> tuple[str, ...]:
        return tuple(self._labels[i] for i in sorted(self._adj[self.id_of(label)]))

    def degree(self, label: str) -> int:
        return len(self._adj[self.id_of(label)])

    def edges(self) -> Iterator[tuple[str, str]]:
        """Edges as label pairs, ordered by (id of u, id of v) with u < v."""
        for u in range(len(self._labels)):
            for v in sorted(self._adj[u]):
                if v > u:
                    yield (self._labels[u], self._labels[v])

    def edge_label_set(self) -> set[frozenset[str]]:
        return {frozenset(e) for e in self.edges()}

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(|V|={self.vertex_count}, |E|={self.edge_count})"


def build_graph(labels: Sequence[str], edges: Iterable[tuple[str, str]]) -> Graph:
    """Build a graph from labels and label-pair edges, deduplicating edges.

    Rejects duplicate labels, unknown endpoints, and self-loops, naming the
    offending item.
    """
    g_labels = tuple(labels)
    index: dict[str, int] = {}
    for lab in g_labels:
        if lab in index:
            raise ValueError(f"duplicate label: {lab!r}")
        index[lab] = len(index)
    id_edges = []
    for u, v in edges:
        if u not in index:
            raise ValueError(f"unknown endpoint: {u!r}")
        if v not in index:
            raise ValueError(f"unknown endpoint: {v!r}")
        if u == v:
            raise ValueError(f"self-loop at {u!r}")
        id_edges.append((index[u], index[v]))
    return Graph(g_labels, id_edges)


def flood_mask(masks: Sequence[int], alive: int, seed: int) -> int:
    """Bitmask BFS: the component of `seed` (single-bit mask) within `alive`."""
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= masks[b.bit_length() - 1]
            f ^= b
        frontier = nxt & alive & ~comp
        comp |= frontier
    return comp


def _component_masks(g: Graph) -> list[int]:
    n = g.vertex_count
    alive = (1 << n) - 1
    masks = g.adjacency_masks
    out = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = flood_mask(masks, rest, seed)
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[set[str]]:
    """Connected components as label sets, ordered by smallest member id."""
    out = []
    for comp in _component_masks(g):
        labs = set()
        m = comp
        while m:
            b = m & -m
            labs.add(g.label_of(b.bit_length() - 1))
            m ^= b
        out.append(labs)
    return out


def is_connected(g: Graph) -> bool:
    """True when g has at most one component (empty graph counts as connected)."""
    return len(_component_masks(g)) <= 1


def delete_vertices(g: Graph, labels: Iterable[str]) -> Graph:
    """The graph induced on V(g) minus the given vertices."""
    drop = {g.id_of(lab) for lab in labels}
    keep = [i for i in range(g.vertex_count) if i not in drop]
    remap = {old: new for new, old in enumerate(keep)}
    new_labels = [g.label_of(i) for i in keep]
    id_edges = []
    for old in keep:
        for nb in g.neighbor_ids(old):
            if nb > old and nb in remap:
                id_edges.append((remap[old], remap[nb]))
    return Graph(new_labels, id_edges)


def line_graph(g: Graph) -> Graph:
    """Line graph of g.

    One vertex per edge, labeled "a|b" with the lexicographically smaller
    endpoint label first; vertices adjacent iff the underlying edges share
    an endpoint.
    """
    edge_ids: list[tuple[int, int]] = []
    for u in range(g.vertex_count):
        for v in sorted(g.neighbor_ids(u)):
            if v > u:
                edge_ids.append((u, v))
    labels = []
    for u, v in edge_ids:
        lu, lv = g.label_of(u), g.label_of(v)
        if lv < lu:
            lu, lv = lv, lu
        labels.append(f"{lu}|{lv}")
    pos = {e: i for i, e in enumerate(edge_ids)}
    incident: dict[int, list[int]] = {v: [] for v in range(g.vertex_count)}
    for e, i in pos.items():
        incident[e[0]].append(i)
        incident[e[1]].append(i)
    lg_edges = set()
    for ids in incident.values():
        ids.sort()
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                lg_edges.add((ids[a], ids[b]))
    return Graph(labels, sorted(lg_edges))


def min_vertex_cut(g: Graph) -> int:
    """κ(g): minimum vertices whose removal disconnects g or leaves one vertex.

    Vertex-split maximum flow over non-adjacent pairs (Even-Tarjan candidate
    set). Complete graphs return n-1 by convention.
    """
    n = g.vertex_count
    if n < 2:
        raise ValueError("min_vertex_cut requires at least two vertices")
    if not is_connected(g):
        raise ValueError("min_vertex_cut requires a connected graph")
    if all(len(g.neighbor_ids(v)) == n - 1 for v in range(n)):
        return n - 1

    # Flow network: v_in = 2v, v_out = 2v+1; unit capacity on (v_in, v_out),
    # "infinite" (= n) on both directions of every edge.
    node_count = 2 * n
    arc_to: list[int] = []
    arc_cap0: list[int] = []
    arc_adj: list[list[int]] = [[] for _ in range(node_count)]

    def add_arc(u: int, w: int, c: int) -> None:
        arc_adj[u].append(len(arc_to))
        arc_to.append(w)
        arc_cap0.append(c)
        arc_adj[w].append(len(arc_to))
        arc_to.append(u)
        arc_cap0.append(0)

    for v in range(n):
        add_arc(2 * v, 2 * v + 1, 1)
    for u in range(n):
        for v in sorted(g.neighbor_ids(u)):
            if v > u:
                add_arc(2 * u + 1, 2 * v, n)
                add_arc(2 * v + 1, 2 * u, n)

    def max_flow(s: int, t: int, limit: int) -> int:
        cap = arc_cap0.copy()
        flow = 0
        while flow < limit:
            parent = [-1] * node_count
            parent[s] = -2
            queue = [s]
            qi = 0
            found = False
            while qi < len(queue) and not found:
                x = queue[qi]
                qi += 1
                for a in arc_adj[x]:
                    if cap[a] > 0 and parent[arc_to[a]] == -1:
                        parent[arc_to[a]] = a
                        if arc_to[a] == t:
                            found = True
                            break
                        queue.append(arc_to[a])
            if not found:
                break
            x = t
            while x != s:
                a = parent[x]
                cap[a] -= 1
                cap[a ^ 1] += 1
                x = arc_to[a ^ 1]
            flow += 1
        return flow

    v0 = min(range(n), key=lambda v: len(g.neighbor_ids(v)))
    best = n - 1
    sources = [v0] + sorted(g.neighbor_ids(v0))
    for s in sources:
        closed = g.neighbor_ids(s) | {s}
        for t in range(n):
            if t in closed:
                continue
            best = min(best, max_flow(2 * s + 1, 2 * t, best))
            if best == 0:  # pragma: no cover - connected graphs never hit 0
                return 0
    return best
