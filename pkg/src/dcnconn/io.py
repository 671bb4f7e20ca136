"""File formats: edge lists, DOT, cut files, verification CSV rows.

Edge-list format: first line `# graph <family> <params>`, then one
`u<TAB>v` line per edge in deterministic order; degree-0 vertices (never
produced by these families) appear as `# isolated u` lines. Cut files carry
one member per line, `<shape-tag>: v1,v2,...`, star center first, path and
cycle members in traversal order.
"""

from __future__ import annotations

from .cuts import VerificationReport
from .graph import Graph
from .shapes import CutMember, ShapeSpec, StructureCut

CSV_HEADER = (
    "family,params,shape,mode,predicted,members,"
    "vertices_removed,components,min_component,pass"
)


def params_str(params: dict[str, int]) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def render_edgelist(g: Graph, family: str, params: dict[str, int]) -> str:
    lines = [f"# graph {family} {params_str(params)}"]
    isolated = [lab for lab in g.labels if g.degree(lab) == 0]
    lines += [f"{u}\t{v}" for u, v in g.edges()]
    lines += [f"# isolated {lab}" for lab in isolated]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> tuple[str, dict[str, int], list[str], list[tuple[str, str]]]:
    """Returns (family, params, labels, edges). Labels keep first-seen order."""
    family = ""
    params: dict[str, int] = {}
    labels: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []

    def note(lab: str) -> None:
        if lab not in seen:
            seen.add(lab)
            labels.append(lab)

    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("# graph "):
            rest = line[len("# graph "):].split()
            family = rest[0]
            for kv in rest[1:]:
                k, _, v = kv.partition("=")
                params[k] = int(v)
        elif line.startswith("# isolated "):
            note(line[len("# isolated "):].strip())
        elif line.startswith("#"):
            continue
        else:
            u, _, v = line.partition("\t")
            note(u)
            note(v)
            edges.append((u, v))
    return family, params, labels, edges


def render_dot(g: Graph, name: str) -> str:
    safe = name.replace("-", "_").replace(".", "_").replace("=", "_").replace(" ", "_")
    lines = [f"graph {safe} {{"]
    lines += [f'  "{lab}";' for lab in g.labels if g.degree(lab) == 0]
    lines += [f'  "{u}" -- "{v}";' for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_cut(
    cut: StructureCut, family: str, params: dict[str, int], shape: ShapeSpec
) -> str:
    lines = [f"# cut {family} {params_str(params)} shape={shape.tag} mode={cut.mode}"]
    for member in cut.members:
        lines.append(f"{member.shape.tag}: " + ",".join(member.vertices))
    return "\n".join(lines) + "\n"


def parse_cut(text: str) -> StructureCut:
    from .shapes import STRUCTURE

    mode = STRUCTURE
    members: list[CutMember] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("# cut "):
            for token in line.split():
                if token.startswith("mode="):
                    mode = token[len("mode="):]
            continue
        if line.startswith("#"):
            continue
        tag, _, verts = line.partition(":")
        members.append(CutMember(_shape_from_tag(tag.strip()), tuple(verts.strip().split(","))))
    return StructureCut(tuple(members), mode)


def _shape_from_tag(tag: str) -> ShapeSpec:
    if tag == "K1":
        return ShapeSpec.single()
    if tag.startswith("K1_"):
        return ShapeSpec.star(int(tag[3:]))
    if tag.startswith("P"):
        return ShapeSpec.path(int(tag[1:]))
    if tag.startswith("C"):
        return ShapeSpec.cycle(int(tag[1:]))
    if tag.startswith("K"):
        return ShapeSpec.clique(int(tag[1:]))
    raise ValueError(f"unknown shape tag: {tag!r}")


def report_csv_row(
    family: str,
    params: dict[str, int],
    shape: ShapeSpec,
    mode: str,
    predicted: int | None,
    report: VerificationReport,
) -> str:
    min_comp = report.component_sizes[0] if report.component_sizes else 0
    return ",".join(
        str(x)
        for x in (
            family,
            params_str(params),
            shape.tag,
            mode,
            "" if predicted is None else predicted,
            report.member_count,
            report.removed_vertices,
            report.component_count,
            min_comp,
            "pass" if report.passed else "fail",
        )
    )
