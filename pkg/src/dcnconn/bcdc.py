"""Crossed cubes CQ_n and the BCDC graph B_n (line graph of CQ_n).

CQ_n vertices are n-bit strings b_{n-1}...b_0 (most significant first).
B_n vertices are adjacent CQ_n pairs, stored smaller-endpoint-first and
rendered "a|b". B_n is generated both by the recursive definition (two
prefixed copies of B_{n-1} plus the independent set of cross edges) and via
the generic line graph; the two must agree label for label.
"""

from __future__ import annotations

from .errors import BuildBudgetError, ParameterError
from .graph import Graph, line_graph

DEFAULT_MAX_VERTICES = 100_000

# x ~ y on 2-bit blocks; the relation is a bijection, so the image is a map.
_PAIR_MAP = {"00": "00", "10": "10", "01": "11", "11": "01"}
_PAIR_SET = {("00", "00"), ("10", "10"), ("01", "11"), ("11", "01")}


def pair_related(x: str, y: str) -> bool:
    """The 2-bit relation {(00,00),(10,10),(01,11),(11,01)}."""
    for s in (x, y):
        if len(s) != 2 or any(c not in "01" for c in s):
            raise ParameterError(f"pair_related needs 2-bit strings, got {s!r}")
    return (x, y) in _PAIR_SET


def _check_bits(u: str, n: int | None = None) -> int:
    if not u or any(c not in "01" for c in u):
        raise ParameterError(f"not a bit string: {u!r}")
    if n is not None and len(u) != n:
        raise ParameterError(f"bit string {u!r} must have length {n}")
    return len(u)


def _bit(u: str, d: int) -> str:
    return u[len(u) - 1 - d]


def dim_neighbor(u: str, d: int) -> str:
    """The d-dimensional neighbor u^d: equal above d, bit d flipped, bit d-1
    kept when d is odd, pair-related 2-bit blocks below."""
    n = _check_bits(u)
    if not 0 <= d <= n - 1:
        raise ParameterError(f"dimension {d} outside [0, {n - 1}]")
    bits = list(u)
    pos = n - 1 - d
    bits[pos] = "0" if bits[pos] == "1" else "1"
    for i in range(d // 2):
        hi = n - 1 - (2 * i + 1)
        block = u[hi] + u[hi + 1]
        mapped = _PAIR_MAP[block]
        bits[hi] = mapped[0]
        bits[hi + 1] = mapped[1]
    return "".join(bits)


def _cross_partner(u: str, k: int) -> str:
    """For u in CQ^0_{k-1}: the unique v with 0u ~ 1v in CQ_k."""
    bits = list(u)  # length k-1
    for i in range((k - 1) // 2):
        hi = (k - 1) - 1 - (2 * i + 1)
        block = u[hi] + u[hi + 1]
        mapped = _PAIR_MAP[block]
        bits[hi] = mapped[0]
        bits[hi + 1] = mapped[1]
    # k even: bit k-2 is outside every block and stays equal
    return "".join(bits)


def build_crossed_cube(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """CQ_n by the recursion: CQ_1 = K_2, then two prefixed halves joined by
    the pair-related cross edges."""
    if n < 1:
        raise ParameterError(f"crossed cube needs n >= 1, got {n}")
    if 2**n > max_vertices:
        raise BuildBudgetError(
            f"CQ_{n} requires {2**n} vertices, budget is {max_vertices}"
        )
    verts = ["0", "1"]
    edges = [("0", "1")]
    for k in range(2, n + 1):
        prev_verts = verts
        prev_edges = edges
        verts = ["0" + v for v in prev_verts] + ["1" + v for v in prev_verts]
        edges = [("0" + a, "0" + b) for a, b in prev_edges]
        edges += [("1" + a, "1" + b) for a, b in prev_edges]
        edges += [("0" + u, "1" + _cross_partner(u, k)) for u in prev_verts]
    verts.sort()
    index = {v: i for i, v in enumerate(verts)}
    return Graph(verts, [(index[a], index[b]) for a, b in edges])


def bn_label(a: str, b: str) -> str:
    """BCDC vertex label for the CQ edge {a, b}, smaller endpoint first."""
    return f"{a}|{b}" if a < b else f"{b}|{a}"


def parse_bn_label(label: str) -> tuple[str, str]:
    a, _, b = label.partition("|")
    if not b:
        raise ParameterError(f"not a BCDC vertex label: {label!r}")
    _check_bits(a)
    _check_bits(b, len(a))
    return a, b


def build_bcdc(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """B_n per the recursive definition.

    B_2 is the 4-cycle on [00,01],[00,10],[01,11],[10,11]. B_n consists of
    the 0- and 1-prefixed copies of B_{n-1} plus the independent set S_n of
    CQ_n cross edges, a cross vertex [c,d] joining every copy vertex that
    contains c (0 side) or d (1 side).
    """
    if n < 2:
        raise ParameterError(f"BCDC needs n >= 2, got {n}")
    if n * 2 ** (n - 1) > max_vertices:
        raise BuildBudgetError(
            f"B_{n} requires {n * 2 ** (n - 1)} vertices, budget is {max_vertices}"
        )
    verts: list[tuple[str, str]] = [("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")]
    edges: list[tuple[tuple[str, str], tuple[str, str]]] = []
    for i, p in enumerate(verts):
        for q in verts[i + 1 :]:
            if p[0] in q or p[1] in q:
                edges.append((p, q))

    for k in range(3, n + 1):
        half0 = [("0" + a, "0" + b) for a, b in verts]
        half1 = [("1" + a, "1" + b) for a, b in verts]
        cross = [("0" + u, "1" + _cross_partner(u, k)) for u in _all_bits(k - 1)]
        new_edges = [(("0" + a, "0" + b), ("0" + c, "0" + d)) for (a, b), (c, d) in edges]
        new_edges += [(("1" + a, "1" + b), ("1" + c, "1" + d)) for (a, b), (c, d) in edges]
        incident0: dict[str, list[tuple[str, str]]] = {}
        incident1: dict[str, list[tuple[str, str]]] = {}
        for p in half0:
            incident0.setdefault(p[0], []).append(p)
            incident0.setdefault(p[1], []).append(p)
        for p in half1:
            incident1.setdefault(p[0], []).append(p)
            incident1.setdefault(p[1], []).append(p)
        for s in cross:
            c, d = s
            for p in incident0.get(c, []):
                new_edges.append((s, p))
            for p in incident1.get(d, []):
                new_edges.append((s, p))
        verts = half0 + half1 + cross
        edges = new_edges

    labels = sorted(bn_label(a, b) for a, b in verts)
    index = {lab: i for i, lab in enumerate(labels)}
    id_edges = [
        (index[bn_label(*p)], index[bn_label(*q)]) for p, q in edges
    ]
    return Graph(labels, id_edges)


def _all_bits(k: int) -> list[str]:
    return [format(i, f"0{k}b") for i in range(2**k)]


def build_bcdc_via_line_graph(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """line_graph(CQ_n); must be label-for-label identical to build_bcdc(n)."""
    if n < 2:
        raise ParameterError(f"BCDC needs n >= 2, got {n}")
    return line_graph(build_crossed_cube(n, max_vertices=max_vertices))


def cq_neighbors(u: str) -> list[str]:
    """N(u) in CQ_n via the dimension rule, ascending dimension order."""
    n = _check_bits(u)
    return [dim_neighbor(u, d) for d in range(n)]


def reindexed_dims(v: str, partner: str) -> list[int]:
    """Dimensions of v's neighbors other than `partner`, ascending.

    The notation [v, v^i] for a B_n vertex u = [v, partner] skips the one
    dimension that leads back to partner and re-indexes the remaining n-1
    dimensions in increasing order; element i of this list is that dimension.
    """
    n = _check_bits(v)
    _check_bits(partner, n)
    dims = [d for d in range(n) if dim_neighbor(v, d) != partner]
    if len(dims) != n - 1:
        raise ParameterError(f"{v!r} and {partner!r} are not CQ neighbors")
    return dims


def neighborhood_decomposition(g: Graph, u: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """N(u) split into its two (n-1)-cliques {[v,v^i]} and {[w,w^i]}."""
    if not g.has_vertex(u):
        raise ParameterError(f"vertex {u!r} not in graph")
    v, w = parse_bn_label(u)
    clique_v = tuple(bn_label(v, dim_neighbor(v, d)) for d in reindexed_dims(v, w))
    clique_w = tuple(bn_label(w, dim_neighbor(w, d)) for d in reindexed_dims(w, v))
    return clique_v, clique_w


def bn_vertex_neighbors(u: str) -> list[str]:
    """N_{B_n}([a,b]) from the definition alone: edges at a plus edges at b."""
    a, b = parse_bn_label(u)
    out = [bn_label(a, x) for x in cq_neighbors(a) if x != b]
    out += [bn_label(b, y) for y in cq_neighbors(b) if y != a]
    return sorted(out)
