import pytest

from knotpair.classify import jones_equal
from knotpair.diagram import (
    braid_closure_pd,
    checkerboard,
    pd_from_rep,
    tait_graph,
)
from knotpair.girth import (
    BudgetError,
    TaitDecomposition,
    decompose,
    decompositions_of_girth,
    diagram_girth,
    rep_from_decomposition,
    spanning_trees,
    tree_count,
)
from knotpair.laurent import jones_from_bracket
from knotpair.oracle import bracket_state_sum, components, writhe
from knotpair.reps import (
    Girth1Rep,
    Girth2Rep,
    Girth3Rep,
    TreePairRep,
    canonicalize,
    parse_rep,
)
from knotpair.tables import ROLFSEN_TABLE, TABLE_ERRATA, crossing_number


def jones(pd):
    return jones_from_bracket(bracket_state_sum(pd), writhe(pd))


def test_spanning_tree_enumeration_matches_matrix_tree_count():
    for rep in (Girth2Rep(3, -2), Girth1Rep(4), Girth3Rep((1, 2, 0), (0, -1, 2))):
        pd = pd_from_rep(rep)
        for shading in checkerboard(pd):
            g = tait_graph(pd, shading)
            assert sum(1 for _ in spanning_trees(g)) == tree_count(g)


def test_decompose_rejects_non_spanning_sets():
    pd = pd_from_rep(Girth2Rep(2, -2))
    with pytest.raises(ValueError):
        decompose(pd, 0, (0,))


def test_decompose_invariants():
    pd = pd_from_rep(Girth2Rep(3, -2))
    shades = checkerboard(pd)
    for si in (0, 1):
        g = tait_graph(pd, shades[si])
        for tree in spanning_trees(g):
            d = decompose(pd, si, tree)
            # |T| + |T'| equals the crossing count
            assert len(d.tree) + len(d.dual_tree) == pd.n()
            # both sides count the same girth (asserted inside, re-check)
            assert d.girth >= 2
            assert len(d.blocks) == d.girth


def test_diagram_girth_examples():
    g, _ = diagram_girth(pd_from_rep(Girth2Rep(2, -2)))
    assert g == 2
    g, _ = diagram_girth(pd_from_rep(Girth1Rep(3)))
    assert g == 2  # single twist is a girth-2 degenerate
    g, w = diagram_girth(pd_from_rep(Girth2Rep(0, 0)))
    assert g == 2 and w is None  # crossing-free circle, labels (0,0)


def test_diagram_girth_budget_refusal():
    pd = pd_from_rep(Girth2Rep(9, 9))
    with pytest.raises(BudgetError) as err:
        diagram_girth(pd, budget=16)
    assert "decompositions" in str(err.value)


def test_figure2_girth_three():
    rep = Girth3Rep((0, 2, 2), (0, -1, -1))
    g, witness = diagram_girth(pd_from_rep(rep))
    assert g == 3
    assert isinstance(witness, TaitDecomposition)
    rec = rep_from_decomposition(witness)
    assert isinstance(rec, Girth3Rep)


def test_rep_recovery_girth2_grid():
    for p in range(-4, 5):
        for q in range(-4, 5):
            if abs(p) < 2 or abs(q) < 2:
                continue
            rep = Girth2Rep(p, q)
            pd = pd_from_rep(rep)
            _, witness = diagram_girth(pd)
            rec = rep_from_decomposition(witness)
            assert jones(pd_from_rep(rec)) == jones(pd), (p, q)


def test_round_trip_jones_on_table_entries():
    # every decomposition of girth <= 3 on small table diagrams recovers a
    # representation with the same oriented Jones polynomial
    checked = 0
    for name, rep_text in ROLFSEN_TABLE:
        if rep_text is None or crossing_number(name) > 6:
            continue
        rep_text = TABLE_ERRATA.get(name, rep_text)
        rep = parse_rep(rep_text)
        pd = pd_from_rep(rep)
        if pd.n() > 8:
            continue
        g, witness = diagram_girth(pd)
        rec = rep_from_decomposition(witness)
        if isinstance(rec, TreePairRep):
            continue
        multi = components(pd) > 1
        assert jones_equal(jones(pd_from_rep(rec)), jones(pd), unit_shift=multi), name
        checked += 1
    assert checked >= 10


def test_table_representations_realize_their_girth():
    for name, rep_text in ROLFSEN_TABLE:
        if rep_text is None or crossing_number(name) > 8:
            continue
        rep_text = TABLE_ERRATA.get(name, rep_text)
        rep = parse_rep(rep_text)
        pd = pd_from_rep(rep)
        if pd.n() < 2:
            continue
        g, _ = diagram_girth(pd)
        assert g <= max(rep.girth(), 2), name


def test_eight_eighteen_exploration():
    # the braid-closure diagram of the knot without a table entry: record
    # the per-diagram minimum over all spanning-tree decompositions
    pd = braid_closure_pd([1, -2] * 4, 3)
    g, witness = diagram_girth(pd)
    assert g >= 3  # its standard diagram admits no girth-2 splitting
    assert witness.girth == g
    print(f"8_18 standard diagram: minimal decomposition girth {g}")


def test_mixed_sign_merges_flagged():
    # a twist region merged from oppositely signed crossings is flagged
    rep = Girth3Rep((2, -2, 2), (1, 1, 0))
    pd = pd_from_rep(rep)
    flags = [d.mixed_signs for d in decompositions_of_girth(pd, diagram_girth(pd)[0])]
    assert flags  # at least one decomposition exists; flags are booleans


def test_pipeline_on_independent_reference_diagrams():
    # decompositions of externally sourced diagrams (arbitrary PD
    # conventions) still recover representations of the same knot
    from knotpair.census import _fixture_pd

    for name in ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_4", "7_6"]:
        pd = _fixture_pd(name, None)
        g, witness = diagram_girth(pd)
        rec = rep_from_decomposition(witness)
        assert not isinstance(rec, TreePairRep), name
        assert jones_equal(
            jones(pd_from_rep(rec)),
            jones(pd),
            unit_shift=components(pd) > 1,
            mirror_ok=True,
        ), name
    # the figure-eight reference diagram recovers the table entry itself
    pd = _fixture_pd("4_1", None)
    _, witness = diagram_girth(pd)
    assert canonicalize(rep_from_decomposition(witness)).key == canonicalize(
        parse_rep("(2,-2)")
    ).key
