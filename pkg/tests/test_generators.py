import pytest

from mixedcages import generators
from mixedcages.generators import (
    CAGE_136_STEPS,
    FamilyParams,
    SurgeryKind,
    SurgeryStep,
    apply_surgery,
)
from mixedcages.graph import GraphError, MixedGraph
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
)


def test_projective_incidence_orders_and_degrees():
    for q in (2, 3, 4, 5):
        g = generators.projective_incidence(q)
        assert g.order == 2 * q * q + 2 * q + 2
        assert set(g.degree_profile().values()) == {(0, 0, q + 1)}
        assert len(g.arcs) == 0
    with pytest.raises(ValueError):
        generators.projective_incidence(6)


def test_biaffine_orders_and_degrees():
    for q in (2, 3, 5, 7):
        g = generators.biaffine(q)
        assert g.order == 2 * q * q
        assert set(g.degree_profile().values()) == {(0, 0, q)}


def test_biaffine_equals_projective_minus_infinity_rows():
    for q in (2, 3, 4, 5, 7, 11, 13):
        g = generators.projective_incidence(q)
        doomed = [INF_LINE_LABEL, INF_POINT_LABEL]
        doomed += [class_point(i) for i in range(q)]
        doomed += [class_line(i) for i in range(q)]
        assert g.delete_vertices(doomed) == generators.biaffine(q)


def test_circulant():
    g = generators.circulant(11, (1, 2))
    assert g.order == 11
    assert set(g.degree_profile().values()) == {(2, 2, 0)}
    assert g.has_arc(plain(10), plain(0)) and g.has_arc(plain(10), plain(1))
    assert generators.circulant(6, (1,)).order == 6


def test_circulant_rejects_bad_jumps():
    for jumps in ((), (0,), (5,), (6,), (1, 1)):
        with pytest.raises(ValueError):
            generators.circulant(5, jumps)
    with pytest.raises(ValueError):
        generators.circulant(1, (1,))


def test_family_params():
    expected = {3: (1, 1), 5: (2, 1), 7: (3, 2), 11: (5, 3), 13: (6, 3)}
    for q, (p, z) in expected.items():
        params = FamilyParams.from_q(q)
        assert (params.p, params.z, params.r) == (p, z, q)
        assert 2 * q == 4 * params.p + 2 or params.p % 2 == 0
        assert 2 * params.p + 1 == q
    for bad in (2, 4, 9, 15, -3):
        with pytest.raises(ValueError):
            FamilyParams.from_q(bad)


def test_default_jump_sets_by_parity():
    assert FamilyParams.from_q(11).to_copy_jumps == (0, 1, 2)
    assert FamilyParams.from_q(11).to_orig_jumps == (1, 2, 3)
    assert FamilyParams.from_q(3).to_copy_jumps == (0,)
    assert FamilyParams.from_q(3).to_orig_jumps == (1,)
    assert FamilyParams.from_q(5).to_copy_jumps == (0,)
    assert FamilyParams.from_q(5).to_orig_jumps == (1,)
    assert FamilyParams.from_q(13).to_copy_jumps == (0, 1, 2)
    assert FamilyParams.from_q(13).to_orig_jumps == (1, 2, 3)


def test_bipartite_circulant_structure():
    g = generators.bipartite_circulant(11)
    assert g.order == 22
    assert set(g.degree_profile().values()) == {(3, 3, 0)}
    # All arcs cross between the original row and the copy row.
    for u, v in g.arcs:
        assert {u.kind, v.kind} == {"line", "line_copy"}


def test_bipartite_circulant_q3_is_a_single_directed_six_cycle():
    g = generators.bipartite_circulant(3)
    expected = set()
    for b in range(3):
        expected.add((line(0, b), line_copy(0, b)))
        expected.add((line_copy(0, b), line(0, (b + 1) % 3)))
    assert set(g.arcs) == expected


def test_bipartite_circulant_point_side_and_index():
    g = generators.bipartite_circulant(7, side="point", index=2)
    assert g.order == 14
    assert g.has_arc(point(2, 0), point_copy(2, 1))
    assert g.has_arc(point_copy(2, 0), point(2, 2))
    with pytest.raises(ValueError):
        generators.bipartite_circulant(7, side="diagonal")
    with pytest.raises(ValueError):
        generators.bipartite_circulant(7, index=7)


def test_bipartite_circulant_jump_validation():
    with pytest.raises(ValueError):
        generators.bipartite_circulant(7, to_orig_jumps=(0,))
    with pytest.raises(ValueError):
        generators.bipartite_circulant(7, to_copy_jumps=(7,))
    with pytest.raises(ValueError):
        generators.bipartite_circulant(7, to_copy_jumps=(1, 1))


def test_family_orders_and_regularity():
    for q in (3, 5, 7):
        params = FamilyParams.from_q(q)
        g = generators.family(q)
        assert g.order == 4 * q * q
        assert set(g.degree_profile().values()) == {(params.z, params.z, q)}
    with pytest.raises(ValueError):
        generators.family(4)
    with pytest.raises(ValueError):
        generators.family(2)


def test_family_rows_match_bipartite_circulants():
    q = 7
    g = generators.family(q)
    for index in (0, 3):
        row = generators.bipartite_circulant(q, side="line", index=index)
        assert set(row.arcs) <= set(g.arcs)
        row = generators.bipartite_circulant(q, side="point", index=index)
        assert set(row.arcs) <= set(g.arcs)
    # Every arc belongs to some row circulant: same-side labels, same row.
    for u, v in g.arcs:
        assert u.data[0] == v.data[0]
        assert {u.kind, v.kind} in ({"line", "line_copy"}, {"point", "point_copy"})


def test_family_q3_arc_structure():
    # For q = 3 the arcs are exactly b -> b' and b' -> b+1 on every row.
    g = generators.family(3)
    expected = set()
    for i in range(3):
        for b in range(3):
            expected.add((line(i, b), line_copy(i, b)))
            expected.add((line_copy(i, b), line(i, (b + 1) % 3)))
            expected.add((point(i, b), point_copy(i, b)))
            expected.add((point_copy(i, b), point(i, (b + 1) % 3)))
    assert set(g.arcs) == expected
    assert g.order == 36


def test_family_jump_override():
    g = generators.family(7, to_copy_jumps=(0,), to_orig_jumps=(1,))
    assert set(g.degree_profile().values()) == {(1, 1, 7)}


def test_named_constructions_have_no_antiparallel_arcs():
    constructions = [
        generators.projective_incidence(4),
        generators.biaffine(5),
        generators.circulant(11, (1, 2)),
        generators.circulant(6, (1,)),
        generators.bipartite_circulant(3),
        generators.bipartite_circulant(11),
        generators.family(3),
        generators.family(7),
        generators.cage_136(),
        generators.moore_tree(5, 6),
        generators.lower_bound_witness(2, 5, 6),
    ]
    for g in constructions:
        arcset = set(g.arcs)
        assert not any((v, u) in arcset for u, v in arcset)


def test_cage_order_and_degrees():
    g = generators.cage_136()
    assert g.order == 30
    assert set(g.degree_profile().values()) == {(1, 1, 3)}


def test_cage_script_operands_are_checked():
    g = generators.cage_136()
    # Re-running the script must fail: its operands are no longer present.
    with pytest.raises(GraphError, match="surgery step"):
        apply_surgery(g, CAGE_136_STEPS)


def test_surgery_step_errors():
    g = MixedGraph.build([plain(0), plain(1)], [(plain(0), plain(1))], [])
    with pytest.raises(GraphError, match="step 0"):
        apply_surgery(g, [SurgeryStep(SurgeryKind.DIRECT_EDGE, (plain(0), plain(9)))])
    with pytest.raises(GraphError, match="step 0"):
        apply_surgery(g, [SurgeryStep(SurgeryKind.REMOVE_EDGE, (plain(0), plain(0)))])


def test_moore_tree_counts():
    assert generators.moore_tree(5, 6).order == 66
    assert generators.moore_tree(3, 6).order == 30
    for r in range(2, 7):
        assert generators.moore_tree(r, 4).order == 4 + 2 * r


def test_moore_tree_is_a_tree_plus_directed_path():
    for r, g in ((3, 6), (5, 6), (4, 7)):
        tree = generators.moore_tree(r, g)
        assert len(tree.arcs) == g - 1
        assert len(tree.edges) + len(tree.arcs) == tree.order - 1
        for i in range(g - 1):
            assert tree.has_arc(plain(i), plain(i + 1))


def test_witness_contains_circulant_and_trees():
    g = generators.lower_bound_witness(2, 5, 6)
    assert g.order == 11 + 66 - 6
    base = generators.circulant(11, (1, 2))
    assert set(base.arcs) == set(g.arcs)
    tree = generators.moore_tree(5, 6)
    assert set(tree.edges) == set(g.edges)
    assert generators.lower_bound_witness(1, 3, 6).order == 6 + 30 - 6


def test_generator_parameter_validation():
    with pytest.raises(ValueError):
        generators.moore_tree(0, 6)
    with pytest.raises(ValueError):
        generators.moore_tree(3, 2)
    with pytest.raises(ValueError):
        generators.lower_bound_witness(0, 3, 6)
