"""Structured vertex labels.

Every graph in this package labels its vertices with a small set of
structured tags: affine points ``(x,y)`` and lines ``[m,b]``, their primed
copies, class points/lines ``P_i``/``L_i``, the two infinity elements,
plain integer labels, and tree nodes addressed by a path of child indices.
Field-valued payloads are stored as plain integers in ``[0, q)``; the
owning graph records ``q`` and gives them meaning.

Labels carry a total order (kind rank, then payload), so vertex sets,
edge lists and serialized documents always come out in one canonical
sequence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

POINT = "point"
LINE = "line"
POINT_COPY = "point_copy"
LINE_COPY = "line_copy"
CLASS_POINT = "class_point"
CLASS_LINE = "class_line"
INF_POINT = "inf_point"
INF_LINE = "inf_line"
PLAIN = "plain"
TREE = "tree"

_KIND_RANK = {
    POINT: 0,
    LINE: 1,
    POINT_COPY: 2,
    LINE_COPY: 3,
    CLASS_POINT: 4,
    CLASS_LINE: 5,
    INF_POINT: 6,
    INF_LINE: 7,
    PLAIN: 8,
    TREE: 9,
}

# Kinds whose payload values live in the graph's field F_q.
FIELD_KINDS = frozenset(
    (POINT, LINE, POINT_COPY, LINE_COPY, CLASS_POINT, CLASS_LINE)
)


@dataclass(frozen=True)
class Label:
    kind: str
    data: tuple[int, ...] = ()

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (_KIND_RANK[self.kind], self.data)

    def __lt__(self, other: "Label") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"Label({render(self)})"


def point(x: int, y: int) -> Label:
    return Label(POINT, (x, y))


def line(m: int, b: int) -> Label:
    return Label(LINE, (m, b))


def point_copy(x: int, y: int) -> Label:
    return Label(POINT_COPY, (x, y))


def line_copy(m: int, b: int) -> Label:
    return Label(LINE_COPY, (m, b))


def class_point(i: int) -> Label:
    return Label(CLASS_POINT, (i,))


def class_line(i: int) -> Label:
    return Label(CLASS_LINE, (i,))


INF_POINT_LABEL = Label(INF_POINT)
INF_LINE_LABEL = Label(INF_LINE)


def plain(index: int) -> Label:
    return Label(PLAIN, (index,))


def tree_node(path) -> Label:
    return Label(TREE, tuple(path))


def is_field_label(label: Label) -> bool:
    return label.kind in FIELD_KINDS


def _render_value(v: int, field_order: int | None) -> str:
    # GF(4) elements print as 0, 1, a, a2 (a = generator, a2 = a + 1).
    if field_order == 4:
        return ("0", "1", "a", "a2")[v]
    return str(v)


def _parse_value(s: str, field_order: int | None) -> int:
    if field_order == 4:
        table = {"0": 0, "1": 1, "a": 2, "a2": 3}
        if s not in table:
            raise ValueError(f"bad GF(4) element {s!r}")
        return table[s]
    if not s.isdigit():
        raise ValueError(f"bad field value {s!r}")
    return int(s)


def render(label: Label, field_order: int | None = None) -> str:
    """Canonical ASCII string form of a label."""
    kind, data = label.kind, label.data
    if kind == POINT:
        x, y = (_render_value(v, field_order) for v in data)
        return f"({x},{y})"
    if kind == LINE:
        m, b = (_render_value(v, field_order) for v in data)
        return f"[{m},{b}]"
    if kind == POINT_COPY:
        x, y = (_render_value(v, field_order) for v in data)
        return f"({x}',{y}')"
    if kind == LINE_COPY:
        m, b = (_render_value(v, field_order) for v in data)
        return f"[{m}',{b}']"
    if kind == CLASS_POINT:
        return f"P_{_render_value(data[0], field_order)}"
    if kind == CLASS_LINE:
        return f"L_{_render_value(data[0], field_order)}"
    if kind == INF_POINT:
        return "P_inf"
    if kind == INF_LINE:
        return "L_inf"
    if kind == PLAIN:
        return f"n{data[0]}"
    if kind == TREE:
        return "t" + ".".join(str(v) for v in data)
    raise ValueError(f"unknown label kind {kind!r}")


_POINT_RE = re.compile(r"^\((\w+)('?),(\w+)('?)\)$")
_LINE_RE = re.compile(r"^\[(\w+)('?),(\w+)('?)\]$")


def parse(text: str, field_order: int | None = None) -> Label:
    """Inverse of :func:`render`. Raises ValueError on malformed input."""
    if text == "P_inf":
        return INF_POINT_LABEL
    if text == "L_inf":
        return INF_LINE_LABEL
    m = _POINT_RE.match(text)
    if m:
        a, p1, b, p2 = m.groups()
        if p1 != p2:
            raise ValueError(f"mismatched primes in {text!r}")
        build = point_copy if p1 else point
        return build(_parse_value(a, field_order), _parse_value(b, field_order))
    m = _LINE_RE.match(text)
    if m:
        a, p1, b, p2 = m.groups()
        if p1 != p2:
            raise ValueError(f"mismatched primes in {text!r}")
        build = line_copy if p1 else line
        return build(_parse_value(a, field_order), _parse_value(b, field_order))
    if text.startswith("P_"):
        return class_point(_parse_value(text[2:], field_order))
    if text.startswith("L_"):
        return class_line(_parse_value(text[2:], field_order))
    if text.startswith("n") and text[1:].isdigit():
        return plain(int(text[1:]))
    if text.startswith("t"):
        body = text[1:]
        if body == "":
            return tree_node(())
        parts = body.split(".")
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"bad tree label {text!r}")
        return tree_node(int(p) for p in parts)
    raise ValueError(f"unparseable label {text!r}")
