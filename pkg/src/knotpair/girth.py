"""Heegaard decompositions of a knot diagram over spanning trees.

Given a checkerboard shading and a spanning tree T of the Tait graph, the
diagram splits into a neighborhood of T and its complement, which carries
the complementary spanning tree T' of the dual graph.  Walking the ribbon
boundary of T groups the non-tree edge ends ("dashed lines") into sectors
between consecutive tree-edge ends; the girth of the decomposition is the
number of nonempty sectors, counted identically from either side.

The walk also yields the interleaving of the two trees' dash classes
around the boundary circle, which is what lets a girth-3 decomposition be
read back as a label wheel (p a q b r c).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .diagram import PDCode, TaitGraph, checkerboard, tait_graph
from .oracle import _bareiss_det
from .reps import Girth2Rep, Girth3Rep, PlaneTree, TreePairRep

# Sign giving twist-region labels from raw Tait signs; the white side is
# automatically opposite on alternating pieces.  Frozen by the round-trip
# calibration (template -> decompose -> same representation).
LABEL_SIGN_BLACK = -1
LABEL_SIGN_WHITE = -1

# Which white corner a contour traversal faces: (corner_from + FLANK) % 4.
# FLANK together with the label signs is frozen by the round-trip and
# block-alignment calibration (exact Jones round trips, wheel recovery).
FLANK = 3

TREE_BUDGET_CROSSINGS = 16


class BudgetError(ValueError):
    pass


# ---------------------------------------------------------------------------
# spanning trees


def _is_spanning_tree(n_vertices: int, endpoints: list[tuple[int, int]]) -> bool:
    parent = list(range(n_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merges = 0
    for u, v in endpoints:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
        merges += 1
    return merges == n_vertices - 1


def spanning_trees(tait: TaitGraph):
    """All spanning trees as sorted tuples of edge indices, lexicographic."""
    v = tait.n_vertices
    edge_ids = [
        ei for ei, e in enumerate(tait.edges) if e.v1 != e.v2
    ]
    if v == 1:
        yield ()
        return
    for combo in itertools.combinations(edge_ids, v - 1):
        endpoints = [tait.endpoints(ei) for ei in combo]
        if _is_spanning_tree(v, endpoints):
            yield combo


def tree_count(tait: TaitGraph) -> int:
    """Number of spanning trees, by the matrix-tree theorem."""
    v = tait.n_vertices
    if v <= 1:
        return 1
    lap = [[0] * v for _ in range(v)]
    for e in tait.edges:
        if e.v1 == e.v2:
            continue
        lap[e.v1][e.v1] += 1
        lap[e.v2][e.v2] += 1
        lap[e.v1][e.v2] -= 1
        lap[e.v2][e.v1] -= 1
    minor = [row[1:] for row in lap[1:]]
    return _bareiss_det(minor)


# ---------------------------------------------------------------------------
# tree contour


@dataclass(frozen=True)
class Sector:
    vertex: int
    dashes: tuple[tuple[int, int], ...]  # non-tree (edge, end) items, in order
    entered_by: tuple[int, int]  # tree (edge, end) whose traversal precedes


@dataclass(frozen=True)
class Traversal:
    edge: int
    from_vertex: int
    faced_corner: int  # absolute corner index at the crossing


@dataclass(frozen=True)
class Contour:
    """Ribbon boundary of a tree: alternating sectors and edge traversals."""

    sectors: tuple[Sector, ...]
    traversals: tuple[tuple[Traversal, ...], ...]  # gap after sectors[i]

    def girth(self) -> int:
        return sum(1 for s in self.sectors if s.dashes)


def tree_contour(tait: TaitGraph, tree: tuple[int, ...]) -> Contour:
    tree_set = set(tree)
    if not tree_set:
        raise ValueError("contour of an edgeless tree is undefined")
    rot = tait.rotation
    tree_pos: dict[int, list[int]] = {}
    for v in range(tait.n_vertices):
        tree_pos[v] = [
            i for i, (ei, _end) in enumerate(rot[v]) if ei in tree_set
        ]
        if not tree_pos[v]:
            raise ValueError(f"edge set does not span vertex {v}")

    def corner_of(ei: int, end: int) -> int:
        e = tait.edges[ei]
        return e.k0 if end == 0 else (e.k0 + 2) % 4

    def other_end(ei: int, v: int, end: int) -> tuple[int, int]:
        e = tait.edges[ei]
        if end == 0:
            return e.v2, 1
        return e.v1, 0

    # start: first tree edge, traversed from its v1 side
    start_edge = min(tree_set)
    e0 = tait.edges[start_edge]
    state = (e0.v2, start_edge, 1)  # arrived at v2 via end 1
    start_state = state
    sectors: list[Sector] = []
    gaps: list[list[Traversal]] = []
    current_gap = [
        Traversal(start_edge, e0.v1, (corner_of(start_edge, 0) + FLANK) % 4)
    ]
    guard = 0
    while True:
        guard += 1
        if guard > 8 * (len(tait.edges) + 1) * 4:
            raise RuntimeError("contour walk failed to close")
        v, ei, end = state
        entries = rot[v]
        npos = len(entries)
        arrival_pos = entries.index((ei, end))
        # sweep the sector counterclockwise until the next tree end
        dashes = []
        pos = (arrival_pos + 1) % npos
        while entries[pos][0] not in tree_set:
            dashes.append(entries[pos])
            pos = (pos + 1) % npos
        sectors.append(
            Sector(vertex=v, dashes=tuple(dashes), entered_by=(ei, end))
        )
        gaps.append(current_gap)
        # depart along the tree end at pos
        dep_edge, dep_end = entries[pos]
        faced = (corner_of(dep_edge, dep_end) + FLANK) % 4
        current_gap = [Traversal(dep_edge, v, faced)]
        state = other_end(dep_edge, v, dep_end)
        state = (state[0], dep_edge, state[1])
        if state == start_state:
            break
    # each gap of separating traversals precedes the sector it leads into;
    # re-associate so traversals[i] follows sectors[i]
    gap_after = gaps[1:] + [current_gap]
    return Contour(tuple(sectors), tuple(tuple(g) for g in gap_after))


def contour_girth(tait: TaitGraph, tree: tuple[int, ...]) -> int:
    return tree_contour(tait, tree).girth()


# ---------------------------------------------------------------------------
# reduced trees


@dataclass(frozen=True)
class ReducedEdge:
    label: int
    crossings: tuple[int, ...]  # merged tait edge ids (= crossing ids)
    v1: int
    v2: int
    mixed_signs: bool


@dataclass(frozen=True)
class ReducedTree:
    vertices: tuple[int, ...]  # kept tait vertex ids
    edges: tuple[ReducedEdge, ...]
    rotation: dict  # kept vertex -> cyclic tuple of (reduced_edge_idx, end)

    def leaves(self) -> list[int]:
        count: dict[int, int] = {}
        for e in self.edges:
            count[e.v1] = count.get(e.v1, 0) + 1
            count[e.v2] = count.get(e.v2, 0) + 1
        return [v for v in self.vertices if count.get(v, 0) == 1]


def reduce_tree(
    tait: TaitGraph, tree: tuple[int, ...], label_sign: int
) -> ReducedTree:
    """Suppress dash-free valence-2 vertices, merging labels algebraically."""
    tree_set = set(tree)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(tait.n_vertices)}
    dashes_at = {v: 0 for v in range(tait.n_vertices)}
    for v in range(tait.n_vertices):
        for ei, end in tait.rotation[v]:
            if ei in tree_set:
                if (ei, end) not in adj[v]:
                    adj[v].append((ei, end))
            else:
                dashes_at[v] += 1

    suppressible = {
        v
        for v in range(tait.n_vertices)
        if len(adj[v]) == 2 and dashes_at[v] == 0
    }
    kept = [v for v in range(tait.n_vertices) if v not in suppressible]
    if not kept:
        # a cycle-free chain must keep at least its two end vertices
        raise ValueError("tree reduced to nothing; diagram is not reduced")

    edge_sign = {ei: label_sign * tait.edges[ei].sign for ei in tree_set}
    visited_dir: set[tuple[int, int]] = set()
    reduced_edges: list[ReducedEdge] = []
    edge_slot: dict[tuple[int, int], tuple[int, int]] = {}
    for v in kept:
        for ei, end in adj[v]:
            if (ei, end) in visited_dir:
                continue
            # walk through suppressed vertices
            chain = [ei]
            visited_dir.add((ei, end))
            cur_v, cur_end = _other(tait, ei, end)
            while cur_v in suppressible:
                (e2, end2) = next(
                    (x, xe) for (x, xe) in adj[cur_v] if x != chain[-1]
                )
                chain.append(e2)
                cur_v, cur_end = _other(tait, e2, end2)
            visited_dir.add((chain[-1], cur_end))
            signs = [edge_sign[e2] for e2 in chain]
            redge = ReducedEdge(
                label=sum(signs),
                crossings=tuple(chain),
                v1=v,
                v2=cur_v,
                mixed_signs=len({s > 0 for s in signs}) > 1,
            )
            idx = len(reduced_edges)
            reduced_edges.append(redge)
            edge_slot[(chain[0], _port_end(tait, chain[0], v))] = (idx, 0)
            edge_slot[(chain[-1], _port_end(tait, chain[-1], cur_v))] = (idx, 1)

    rotation = {}
    for v in kept:
        items = []
        for ei, end in tait.rotation[v]:
            if ei in tree_set and (ei, end) in edge_slot:
                items.append(edge_slot[(ei, end)])
        rotation[v] = tuple(items)
    return ReducedTree(tuple(kept), tuple(reduced_edges), rotation)


def _other(tait: TaitGraph, ei: int, end: int) -> tuple[int, int]:
    e = tait.edges[ei]
    return (e.v2, 1) if end == 0 else (e.v1, 0)


def _port_end(tait: TaitGraph, ei: int, v: int) -> int:
    e = tait.edges[ei]
    if e.v1 == v:
        return 0
    if e.v2 == v:
        return 1
    raise ValueError("edge not incident to vertex")


# ---------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True)
class TaitDecomposition:
    """One Heegaard decomposition of a diagram.

    ``tree`` lists the crossings inside the tree neighborhood; the
    complementary crossings form the dual spanning tree.  Both reduced
    trees, the boundary block structure (alternating dash classes), and
    the girth are recorded.
    """

    pd: PDCode
    shading_index: int  # 0 or 1, into checkerboard(pd)
    tree: tuple[int, ...]
    dual_tree: tuple[int, ...]
    reduced_black: ReducedTree
    reduced_white: ReducedTree
    girth: int
    blocks: tuple  # cyclic ((('A', class), ('B', class)) ...) dash id lists
    black_class_edges: tuple  # per A-class: (reduced edge idx or None)
    white_class_edges: tuple  # per A-class: aligned white reduced edge idx
    mixed_signs: bool

    def summary(self) -> dict:
        return {
            "shading": self.shading_index,
            "tree_crossings": list(self.tree),
            "dual_tree_crossings": list(self.dual_tree),
            "girth": self.girth,
            "black_labels": [e.label for e in self.reduced_black.edges],
            "white_labels": [e.label for e in self.reduced_white.edges],
            "blocks": [
                {
                    "A_dashes": [list(d) for d in a_block[1]],
                    "B_class": b_block[1],
                }
                for a_block, b_block in self.blocks
            ],
            "mixed_sign_merges": self.mixed_signs,
        }

    def to_json(self) -> str:
        return json.dumps(self.summary())


def decompose(pd: PDCode, shading_index: int, tree: tuple[int, ...]) -> TaitDecomposition:
    """Build the decomposition for a spanning tree of the chosen shading."""
    if pd.free_loops:
        raise ValueError("decompositions need a crossing diagram (no free loops)")
    shades = checkerboard(pd)
    black = tait_graph(pd, shades[shading_index])
    white = tait_graph(pd, shades[1 - shading_index])
    _reject_unreduced(black, white)
    tree = tuple(sorted(tree))
    if not _is_spanning_tree(
        black.n_vertices, [black.endpoints(ei) for ei in tree]
    ) or len(tree) != black.n_vertices - 1:
        raise ValueError("edge set is not a spanning tree of the Tait graph")
    dual_tree = tuple(ei for ei in range(len(white.edges)) if ei not in set(tree))

    c_black = tree_contour(black, tree)
    c_white = tree_contour(white, dual_tree)
    g_black = c_black.girth()
    g_white = c_white.girth()
    if g_black != g_white:
        raise AssertionError(
            f"girth mismatch between the two sides: {g_black} vs {g_white}"
        )

    red_black = reduce_tree(black, tree, LABEL_SIGN_BLACK)
    red_white = reduce_tree(white, dual_tree, LABEL_SIGN_WHITE)

    # boundary block structure: A classes in contour order, each followed by
    # the dual class faced by the first traversal of the following gap
    a_sectors = []
    b_classes = []
    sectors = list(c_black.sectors)
    gaps = list(c_black.traversals)
    white_class_of = _dual_class_lookup(white, dual_tree, c_white)
    order = [i for i, s in enumerate(sectors) if s.dashes]
    for i in order:
        a_sectors.append(sectors[i])
        # gather traversals from this sector up to the next nonempty one
        trav: list[Traversal] = list(gaps[i])
        k = i
        while not sectors[(k + 1) % len(sectors)].dashes:
            k = (k + 1) % len(sectors)
            trav.extend(gaps[k])
            if k == i:
                break
        first = trav[0]
        b_classes.append(white_class_of[(first.edge, first.faced_corner)])

    blocks = tuple(
        (("A", tuple(s.dashes)), ("B", b_classes[i]))
        for i, s in enumerate(a_sectors)
    )
    black_edges = tuple(
        _class_edge(red_black, s.vertex, s) for s in a_sectors
    )
    white_edges = tuple(
        _class_edge_by_index(red_white, c_white, bc) for bc in b_classes
    )
    mixed = any(e.mixed_signs for e in red_black.edges) or any(
        e.mixed_signs for e in red_white.edges
    )
    return TaitDecomposition(
        pd=pd,
        shading_index=shading_index,
        tree=tree,
        dual_tree=dual_tree,
        reduced_black=red_black,
        reduced_white=red_white,
        girth=g_black,
        blocks=blocks,
        black_class_edges=black_edges,
        white_class_edges=white_edges,
        mixed_signs=mixed,
    )


def _reject_unreduced(black: TaitGraph, white: TaitGraph) -> None:
    for g, name in ((black, "black"), (white, "white")):
        val = [0] * g.n_vertices
        for e in g.edges:
            if e.v1 == e.v2:
                val[e.v1] += 2
            else:
                val[e.v1] += 1
                val[e.v2] += 1
        if any(v == 1 for v in val):
            raise ValueError(
                f"diagram is not reduced: {name} graph has a valence-1 vertex "
                "(nugatory crossing)"
            )


def _dual_class_lookup(
    white: TaitGraph, dual_tree: tuple[int, ...], c_white: Contour
) -> dict[tuple[int, int], int]:
    """Map (crossing, absolute white corner) -> index of the dual dash class."""
    lookup: dict[tuple[int, int], int] = {}
    classes = [s for s in c_white.sectors if s.dashes]
    for cls_idx, s in enumerate(classes):
        for ei, end in s.dashes:
            e = white.edges[ei]
            corner = e.k0 if end == 0 else (e.k0 + 2) % 4
            lookup[(e.crossing, corner)] = cls_idx
    return lookup


def _class_edge(red: ReducedTree, vertex: int, sector: Sector):
    """Reduced edge index whose leaf hosts this class, or None (pad with 0)."""
    rot = red.rotation.get(vertex, ())
    if len(rot) == 1:
        return rot[0][0]
    return None


def _class_edge_by_index(red: ReducedTree, c_white: Contour, class_index: int):
    classes = [s for s in c_white.sectors if s.dashes]
    return _class_edge(red, classes[class_index].vertex, classes[class_index])


def diagram_girth(pd: PDCode, budget: int = TREE_BUDGET_CROSSINGS):
    """Minimum girth over both shadings and all spanning trees.

    Returns (girth, witness decomposition); the witness is the
    lexicographically least (shading, tree) attaining the minimum.
    """
    if pd.n() == 0:
        return 2, None  # degenerate circle: girth-2 report with labels (0,0)
    if pd.n() > budget:
        shades = checkerboard(pd)
        est = tree_count(tait_graph(pd, shades[0])) + tree_count(
            tait_graph(pd, shades[1])
        )
        raise BudgetError(
            f"{pd.n()} crossings exceeds the spanning-tree budget of {budget} "
            f"(about {est} decompositions)"
        )
    best: tuple[int, int, tuple[int, ...]] | None = None
    shades = checkerboard(pd)
    for si in (0, 1):
        g = tait_graph(pd, shades[si])
        for tree in spanning_trees(g):
            girth = _quick_girth(pd, si, tree, shades)
            cand = (girth, si, tree)
            if best is None or cand < best:
                best = cand
    assert best is not None
    girth, si, tree = best
    return girth, decompose(pd, si, tree)


def decompositions_of_girth(pd: PDCode, target: int):
    """Yield every decomposition attaining the target girth."""
    shades = checkerboard(pd)
    for si in (0, 1):
        g = tait_graph(pd, shades[si])
        for tree in spanning_trees(g):
            if _quick_girth(pd, si, tree, shades) == target:
                yield decompose(pd, si, tree)


def _quick_girth(pd, shading_index, tree, shades) -> int:
    black = tait_graph(pd, shades[shading_index])
    if len(tree) == 0:
        raise ValueError("single-vertex Tait graph: diagram is not reduced")
    return contour_girth(black, tuple(tree))


# ---------------------------------------------------------------------------
# representation extraction


def rep_from_decomposition(d: TaitDecomposition):
    """Read a representation off a decomposition.

    Girth 2 gives K(P,Q); girth 3 assembles the label wheel from the block
    structure (classes without a leaf edge become 0-labeled pad edges);
    anything higher is returned as a general tree pair.
    """
    if d.girth == 2:
        p = _single_label(d.reduced_black)
        q = _single_label(d.reduced_white)
        return Girth2Rep(p, q)
    if d.girth == 3:
        top = tuple(
            0 if ei is None else d.reduced_black.edges[ei].label
            for ei in d.black_class_edges
        )
        bottom = tuple(
            0 if ei is None else d.reduced_white.edges[ei].label
            for ei in d.white_class_edges
        )
        return Girth3Rep(top, bottom)
    return TreePairRep(
        _as_plane_tree(d.reduced_black),
        _as_plane_tree(d.reduced_white),
        d.girth,
    )


def _single_label(red: ReducedTree) -> int:
    if len(red.edges) != 1:
        raise ValueError(
            f"girth-2 decomposition should reduce to a single edge, got "
            f"{len(red.edges)}"
        )
    return red.edges[0].label


def _as_plane_tree(red: ReducedTree) -> PlaneTree:
    vmap = {v: i for i, v in enumerate(red.vertices)}
    edges = tuple((vmap[e.v1], vmap[e.v2], e.label) for e in red.edges)
    rotation = tuple(
        tuple(red.rotation[v]) for v in red.vertices
    )
    return PlaneTree(edges, rotation)
