from dcnconn import ShapeSpec, star_cut_dcell, verify_cut
from dcnconn.dcell import build_dcell
from dcnconn.io import (
    CSV_HEADER,
    parse_cut,
    parse_edgelist,
    render_cut,
    render_dot,
    render_edgelist,
    report_csv_row,
)
from dcnconn.shapes import STRUCTURE


def test_edgelist_roundtrip(d14):
    text = render_edgelist(d14, "dcell", {"m": 1, "n": 4})
    assert text.startswith("# graph dcell m=1 n=4\n")
    family, params, labels, edges = parse_edgelist(text)
    assert family == "dcell"
    assert params == {"m": 1, "n": 4}
    assert set(labels) == set(d14.labels)
    assert {frozenset(e) for e in edges} == d14.edge_label_set()


def test_edgelist_tab_separated(d14):
    line = render_edgelist(d14, "dcell", {"m": 1, "n": 4}).splitlines()[1]
    assert "\t" in line


def test_isolated_vertices_listed():
    from dcnconn import build_graph

    g = build_graph(["a", "b", "c"], [("a", "b")])
    text = render_edgelist(g, "custom", {})
    assert "# isolated c" in text
    _, _, labels, edges = parse_edgelist(text)
    assert set(labels) == {"a", "b", "c"} and len(edges) == 1


def test_dot_output(d14):
    dot = render_dot(d14, "dcell m=1 n=4")
    assert dot.startswith("graph dcell_m_1_n_4 {")
    assert '"0.0" -- "0.1";' in dot
    assert dot.rstrip().endswith("}")


def test_cut_file_roundtrip(d14):
    cut = star_cut_dcell(1, 4, 1)
    text = render_cut(cut, "dcell", {"m": 1, "n": 4}, ShapeSpec.star(1))
    assert text.splitlines()[0] == "# cut dcell m=1 n=4 shape=K1_1 mode=structure"
    assert text.splitlines()[1].startswith("K1_1: ")
    back = parse_cut(text)
    assert back.mode == "structure"
    assert back.members == cut.members


def test_csv_row(d14):
    cut = star_cut_dcell(1, 4, 1)
    report = verify_cut(d14, cut, ShapeSpec.star(1), STRUCTURE)
    row = report_csv_row("dcell", {"m": 1, "n": 4}, ShapeSpec.star(1), STRUCTURE, 3, report)
    assert row == "dcell,m=1 n=4,K1_1,structure,3,3,5,2,1,pass"
    assert len(row.split(",")) == len(CSV_HEADER.split(","))
