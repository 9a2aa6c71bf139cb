import pytest
from hypothesis import given
from hypothesis import strategies as st

from mixedcages import labels
from mixedcages.labels import (
    INF_LINE_LABEL,
    INF_POINT_LABEL,
    class_line,
    class_point,
    line,
    line_copy,
    plain,
    point,
    point_copy,
    tree_node,
)


def test_total_order_by_kind_then_payload():
    ordered = [
        point(0, 0), point(0, 1), point(2, 0),
        line(0, 0), line(1, 3),
        point_copy(0, 0), line_copy(0, 0),
        class_point(0), class_point(2),
        class_line(1),
        INF_POINT_LABEL, INF_LINE_LABEL,
        plain(0), plain(10),
        tree_node((0,)), tree_node((0, 1)), tree_node((1,)),
    ]
    assert sorted(reversed(ordered), key=lambda l: l.sort_key()) == ordered
    assert point(1, 2) < line(0, 0)
    assert plain(2) < tree_node(())


def test_rendering_uses_bracket_notation():
    assert labels.render(point(0, 3), 5) == "(0,3)"
    assert labels.render(line(2, 1), 5) == "[2,1]"
    assert labels.render(point_copy(1, 4), 5) == "(1',4')"
    assert labels.render(line_copy(2, 0), 5) == "[2',0']"
    assert labels.render(class_point(3), 5) == "P_3"
    assert labels.render(class_line(0), 5) == "L_0"
    assert labels.render(INF_POINT_LABEL) == "P_inf"
    assert labels.render(INF_LINE_LABEL) == "L_inf"
    assert labels.render(plain(12)) == "n12"
    assert labels.render(tree_node((3, 0, 2))) == "t3.0.2"


def test_gf4_values_render_as_powers_of_the_generator():
    assert labels.render(point(2, 3), 4) == "(a,a2)"
    assert labels.render(line(0, 1), 4) == "[0,1]"
    assert labels.render(class_point(2), 4) == "P_a"
    assert labels.parse("(a,a2)", 4) == point(2, 3)
    assert labels.parse("L_a2", 4) == class_line(3)


ALL_LABELS = st.one_of(
    st.builds(point, st.integers(0, 10), st.integers(0, 10)),
    st.builds(line, st.integers(0, 10), st.integers(0, 10)),
    st.builds(point_copy, st.integers(0, 10), st.integers(0, 10)),
    st.builds(line_copy, st.integers(0, 10), st.integers(0, 10)),
    st.builds(class_point, st.integers(0, 10)),
    st.builds(class_line, st.integers(0, 10)),
    st.just(INF_POINT_LABEL),
    st.just(INF_LINE_LABEL),
    st.builds(plain, st.integers(0, 1000)),
    st.builds(tree_node, st.lists(st.integers(0, 30), max_size=5)),
)


@given(ALL_LABELS)
def test_parse_inverts_render(label):
    assert labels.parse(labels.render(label, 11), 11) == label


@given(ALL_LABELS)
def test_parse_inverts_render_gf4(label):
    if any(v > 3 for v in label.data) and labels.is_field_label(label):
        return
    assert labels.parse(labels.render(label, 4), 4) == label


def test_parse_rejects_malformed_strings():
    for bad in ("", "x", "(1,2", "(1',2)", "[1,2)", "P_", "n1x", "t1.x", "(b,1)"):
        with pytest.raises(ValueError):
            labels.parse(bad, 5)
    with pytest.raises(ValueError):
        labels.parse("(7,1)", 4)  # 7 is not a GF(4) element name
