"""Fault shapes (stars, paths, cycles, cliques, singletons) over a host graph.

A cut member is an ordered vertex list claiming a shape: stars list the
center first, paths and cycles list traversal order, cliques any order.
`is_shape` validates a member in structure mode (the list realizes exactly
the shape) or substructure mode (the list realizes a connected subgraph of
the shape). `enumerate_shape_copies` streams every accepted member once, in
a canonical deterministic order, which the exhaustive oracle relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import ParameterError
from .graph import Graph

STRUCTURE = "structure"
SUBSTRUCTURE = "substructure"
MODES = (STRUCTURE, SUBSTRUCTURE)


@dataclass(frozen=True)
class ShapeSpec:
    """One of Star(t), Path(k), Cycle(k), Clique(s), Single."""

    kind: str
    size: int

    def __post_init__(self) -> None:
        bounds = {"star": 1, "path": 1, "cycle": 3, "clique": 1, "single": 1}
        if self.kind not in bounds:
            raise ParameterError(f"unknown shape kind: {self.kind!r}")
        if self.size < bounds[self.kind]:
            raise ParameterError(
                f"{self.kind} parameter must be >= {bounds[self.kind]}, got {self.size}"
            )

    @staticmethod
    def star(t: int) -> "ShapeSpec":
        return ShapeSpec("star", t)

    @staticmethod
    def path(k: int) -> "ShapeSpec":
        return ShapeSpec("path", k)

    @staticmethod
    def cycle(k: int) -> "ShapeSpec":
        return ShapeSpec("cycle", k)

    @staticmethod
    def clique(s: int) -> "ShapeSpec":
        return ShapeSpec("clique", s)

    @staticmethod
    def single() -> "ShapeSpec":
        return ShapeSpec("single", 1)

    @property
    def tag(self) -> str:
        if self.kind == "single":
            return "K1"
        if self.kind == "star":
            return f"K1_{self.size}"
        if self.kind == "path":
            return f"P{self.size}"
        if self.kind == "cycle":
            return f"C{self.size}"
        return f"K{self.size}"

    @property
    def vertex_count(self) -> int:
        """Vertices of the full shape (star K_{1,t} has t+1)."""
        return self.size + 1 if self.kind == "star" else self.size


@dataclass(frozen=True)
class CutMember:
    shape: ShapeSpec
    vertices: tuple[str, ...]


@dataclass(frozen=True)
class StructureCut:
    members: tuple[CutMember, ...]
    mode: str

    def vertex_union(self) -> set[str]:
        out: set[str] = set()
        for m in self.members:
            out.update(m.vertices)
        return out


def _ids(g: Graph, member: CutMember) -> list[int]:
    ids = [g.id_of(v) for v in member.vertices]
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate vertex in member: {member.vertices}")
    if not ids:
        raise ValueError("empty member")
    return ids


def _is_path_ids(g: Graph, ids: list[int]) -> bool:
    return all(ids[i + 1] in g.neighbor_ids(ids[i]) for i in range(len(ids) - 1))


def _is_star_ids(g: Graph, ids: list[int]) -> bool:
    center = ids[0]
    return all(leaf in g.neighbor_ids(center) for leaf in ids[1:])


def is_shape(g: Graph, member: CutMember, mode: str) -> bool:
    """Whether the member's vertex list realizes its claimed shape in g."""
    if mode not in MODES:
        raise ParameterError(f"unknown mode: {mode!r}")
    ids = _ids(g, member)
    shape = member.shape
    k = len(ids)

    if shape.kind == "single":
        return k == 1

    if mode == STRUCTURE:
        if shape.kind == "star":
            return k == shape.size + 1 and _is_star_ids(g, ids)
        if shape.kind == "path":
            return k == shape.size and _is_path_ids(g, ids)
        if shape.kind == "cycle":
            return (
                k == shape.size
                and _is_path_ids(g, ids)
                and ids[0] in g.neighbor_ids(ids[-1])
            )
        # clique
        return k == shape.size and all(
            b in g.neighbor_ids(a) for a, b in combinations(ids, 2)
        )

    # substructure: any connected subgraph of the shape
    if shape.kind == "star":
        if k == 1:
            return True
        return k <= shape.size + 1 and _is_star_ids(g, ids)
    if shape.kind == "path":
        return k <= shape.size and _is_path_ids(g, ids)
    if shape.kind == "cycle":
        if k == shape.size and _is_path_ids(g, ids) and ids[0] in g.neighbor_ids(ids[-1]):
            return True
        return k <= shape.size and _is_path_ids(g, ids)
    # clique: any connected subgraph on <= s vertices embeds into K_s iff the
    # vertex set is connected in g
    if k > shape.size:
        return False
    id_set = set(ids)
    seen = {ids[0]}
    stack = [ids[0]]
    while stack:
        x = stack.pop()
        for nb in g.neighbor_ids(x):
            if nb in id_set and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == k


def _single_ids(g: Graph) -> Iterator[tuple[int, ...]]:
    for v in range(g.vertex_count):
        yield (v,)


def _edge_ids(g: Graph) -> Iterator[tuple[int, ...]]:
    for u in range(g.vertex_count):
        for v in sorted(g.neighbor_ids(u)):
            if v > u:
                yield (u, v)


def _star_ids(g: Graph, t: int) -> Iterator[tuple[int, ...]]:
    # K_{1,1} is symmetric: canonical center = smaller endpoint (one copy per
    # edge); for t >= 2 the center is structurally distinguished.
    if t == 1:
        yield from _edge_ids(g)
        return
    for c in range(g.vertex_count):
        nbrs = sorted(g.neighbor_ids(c))
        if len(nbrs) >= t:
            for leaves in combinations(nbrs, t):
                yield (c, *leaves)


def _clique_ids(g: Graph, s: int) -> Iterator[tuple[int, ...]]:
    if s == 1:
        yield from _single_ids(g)
        return
    if s == 2:
        yield from _edge_ids(g)
        return

    def extend(base: tuple[int, ...], common: frozenset[int]) -> Iterator[tuple[int, ...]]:
        for w in sorted(common):
            nxt = base + (w,)
            if len(nxt) == s:
                yield nxt
            else:
                yield from extend(nxt, frozenset(x for x in common & g.neighbor_ids(w) if x > w))

    for v in range(g.vertex_count):
        yield from extend((v,), frozenset(x for x in g.neighbor_ids(v) if x > v))


def _path_ids(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield from _single_ids(g)
        return
    if k == 2:
        yield from _edge_ids(g)
        return

    def extend(path: list[int], used: set[int]) -> Iterator[tuple[int, ...]]:
        if len(path) == k:
            if path[0] < path[-1]:
                yield tuple(path)
            return
        for nb in sorted(g.neighbor_ids(path[-1])):
            if nb not in used:
                path.append(nb)
                used.add(nb)
                yield from extend(path, used)
                used.discard(nb)
                path.pop()

    for start in range(g.vertex_count):
        yield from extend([start], {start})


def _cycle_ids(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    # Canonical form: rotation starts at the minimum id, direction toward the
    # smaller second id; every vertex after the start exceeds the start.
    def extend(path: list[int], used: set[int]) -> Iterator[tuple[int, ...]]:
        if len(path) == k:
            if path[0] in g.neighbor_ids(path[-1]) and path[1] < path[-1]:
                yield tuple(path)
            return
        for nb in sorted(g.neighbor_ids(path[-1])):
            if nb > path[0] and nb not in used:
                path.append(nb)
                used.add(nb)
                yield from extend(path, used)
                used.discard(nb)
                path.pop()

    for start in range(g.vertex_count):
        yield from extend([start], {start})


def _connected_set_ids(g: Graph, smax: int) -> Iterator[tuple[int, ...]]:
    """Connected vertex sets of size 1..smax, each exactly once, sorted ids."""

    def extend(sub: tuple[int, ...], ext: list[int], root: int) -> Iterator[tuple[int, ...]]:
        yield tuple(sorted(sub))
        if len(sub) == smax:
            return
        ext = list(ext)
        while ext:
            w = ext.pop(0)
            fresh = [
                x
                for x in sorted(g.neighbor_ids(w))
                if x > root and x not in sub and x not in ext and not any(
                    x in g.neighbor_ids(y) for y in sub
                )
            ]
            yield from extend(sub + (w,), ext + fresh, root)

    for v in range(g.vertex_count):
        yield from extend((v,), [x for x in sorted(g.neighbor_ids(v)) if x > v], v)


def enumerate_shape_copies(g: Graph, shape: ShapeSpec, mode: str) -> Iterator[CutMember]:
    """Stream every member accepted by `is_shape`, canonicalized, no duplicates.

    Canonical forms: star = center then sorted leaf ids (K_{1,1}: smaller
    endpoint is the center); path = smaller endpoint first; cycle = rotation
    from the minimum id toward the smaller second id; clique = sorted ids.
    Order is deterministic and stable across runs.
    """
    if mode not in MODES:
        raise ParameterError(f"unknown mode: {mode!r}")

    def emit(ids_iter: Iterator[tuple[int, ...]]) -> Iterator[CutMember]:
        for ids in ids_iter:
            yield CutMember(shape, tuple(g.label_of(i) for i in ids))

    if shape.kind == "single":
        yield from emit(_single_ids(g))
        return

    if mode == STRUCTURE:
        if shape.kind == "star":
            yield from emit(_star_ids(g, shape.size))
        elif shape.kind == "path":
            yield from emit(_path_ids(g, shape.size))
        elif shape.kind == "cycle":
            yield from emit(_cycle_ids(g, shape.size))
        else:
            yield from emit(_clique_ids(g, shape.size))
        return

    # substructure mode
    if shape.kind == "star":
        yield from emit(_single_ids(g))
        for tp in range(1, shape.size + 1):
            yield from emit(_star_ids(g, tp))
    elif shape.kind == "path":
        for j in range(1, shape.size + 1):
            yield from emit(_path_ids(g, j))
    elif shape.kind == "cycle":
        # every connected subgraph of C_k is a path P_j (j <= k) or C_k itself,
        # and each canonical C_k tuple already appears among the P_k tuples
        for j in range(1, shape.size + 1):
            yield from emit(_path_ids(g, j))
    else:
        yield from emit(_connected_set_ids(g, shape.size))
