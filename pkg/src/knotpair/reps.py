"""Tree-pair knot representations: parsing, symmetries, canonical keys.

Three specialized families are supported directly:

* ``Girth1Rep`` K(p), a single closed twist region;
* ``Girth2Rep`` K(p,q), the double twist family;
* ``Girth3Rep`` K(p q r / a b c), the pair of Y-shaped trees.

A general labeled plane-tree pair (``TreePairRep``) carries decompositions
of girth >= 4 coming out of the girth module.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

Rep = "Girth1Rep | Girth2Rep | Girth3Rep"


@dataclass(frozen=True)
class Girth1Rep:
    p: int

    def girth(self) -> int:
        return 1

    def __str__(self) -> str:
        return f"({self.p})"


@dataclass(frozen=True)
class Girth2Rep:
    p: int
    q: int

    def girth(self) -> int:
        return 2

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class Girth3Rep:
    top: tuple[int, int, int]
    bottom: tuple[int, int, int]

    def girth(self) -> int:
        return 3

    def __str__(self) -> str:
        t = " ".join(str(x) for x in self.top)
        b = " ".join(str(x) for x in self.bottom)
        return f"[{t} / {b}]"


@dataclass(frozen=True)
class PlaneTree:
    """A labeled tree with a rotation system.

    ``edges[i] = (u, v, label)``; ``rotation[v]`` lists, in cyclic order
    around vertex v, the pairs ``(edge_index, end)`` incident to it, where
    ``end`` is 0 for the u-side and 1 for the v-side of the edge.
    """

    edges: tuple[tuple[int, int, int], ...]
    rotation: tuple[tuple[tuple[int, int], ...], ...]

    def n_vertices(self) -> int:
        return len(self.rotation)

    def valence(self, v: int) -> int:
        return len(self.rotation[v])

    def leaves(self) -> list[int]:
        return [v for v in range(self.n_vertices()) if self.valence(v) == 1]


@dataclass(frozen=True)
class TreePairRep:
    inside: PlaneTree
    outside: PlaneTree
    girth_value: int

    def girth(self) -> int:
        return self.girth_value


_G1_RE = re.compile(r"^\(\s*(-?\d+)\s*\)$")
_G2_RE = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")
_G3_RE = re.compile(
    r"^\[\s*(-?\d+)\s+(-?\d+)\s+(-?\d+)\s*/\s*(-?\d+)\s+(-?\d+)\s+(-?\d+)\s*\]$"
)


def parse_rep(text: str):
    """Parse "(3)", "(2,-2)" or "[0 2 2 / 0 -1 -1]" notation."""
    s = text.strip()
    m = _G1_RE.match(s)
    if m:
        return Girth1Rep(int(m.group(1)))
    m = _G2_RE.match(s)
    if m:
        return Girth2Rep(int(m.group(1)), int(m.group(2)))
    m = _G3_RE.match(s)
    if m:
        g = [int(m.group(i)) for i in range(1, 7)]
        return Girth3Rep((g[0], g[1], g[2]), (g[3], g[4], g[5]))
    raise ValueError(
        f"cannot parse representation {text!r} "
        "(expected (p), (p,q) or [p q r / a b c])"
    )


def rep_to_json(rep) -> str:
    if isinstance(rep, Girth1Rep):
        return json.dumps({"girth": 1, "labels": [rep.p]})
    if isinstance(rep, Girth2Rep):
        return json.dumps({"girth": 2, "labels": [rep.p, rep.q]})
    if isinstance(rep, Girth3Rep):
        return json.dumps({"girth": 3, "top": list(rep.top), "bottom": list(rep.bottom)})
    raise TypeError(f"not a serializable representation: {rep!r}")


def rep_from_json(text: str):
    obj = json.loads(text)
    g = obj["girth"]
    if g == 1:
        return Girth1Rep(obj["labels"][0])
    if g == 2:
        return Girth2Rep(*obj["labels"])
    if g == 3:
        return Girth3Rep(tuple(obj["top"]), tuple(obj["bottom"]))
    raise ValueError(f"unsupported girth {g}")


def mirror(rep):
    """Mirror image: negate every label."""
    if isinstance(rep, Girth1Rep):
        return Girth1Rep(-rep.p)
    if isinstance(rep, Girth2Rep):
        return Girth2Rep(-rep.p, -rep.q)
    if isinstance(rep, Girth3Rep):
        return Girth3Rep(
            tuple(-x for x in rep.top), tuple(-x for x in rep.bottom)
        )
    raise TypeError(f"cannot mirror {rep!r}")


# ---------------------------------------------------------------------------
# symmetries of the girth-3 wheel
#
# In the glued diagram the six twist regions interleave around the boundary
# circle as p a q b r c.  The symmetries below are exactly the relabelings
# that preserve this wheel (rotations, a reflection, and turning the inner
# ring out).  The reflection and ring swap differ from the sloppy forms in
# which they are often quoted: a plain row transposition does not preserve
# the wheel and genuinely changes the knot (testable on invariants).


def rotate_g3(r: Girth3Rep) -> Girth3Rep:
    (p, q, rr), (a, b, c) = r.top, r.bottom
    return Girth3Rep((q, rr, p), (b, c, a))


def reflect_g3(r: Girth3Rep) -> Girth3Rep:
    (p, q, rr), (a, b, c) = r.top, r.bottom
    return Girth3Rep((p, rr, q), (c, b, a))


def swap_rings_g3(r: Girth3Rep) -> Girth3Rep:
    (p, q, rr), (a, b, c) = r.top, r.bottom
    return Girth3Rep((a, c, b), (p, rr, q))


def d3_orbit(r: Girth3Rep) -> set[Girth3Rep]:
    """Closure of r under the wheel symmetries; size always divides 12."""
    seen = {r}
    frontier = [r]
    while frontier:
        cur = frontier.pop()
        for image in (rotate_g3(cur), reflect_g3(cur), swap_rings_g3(cur)):
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    assert 12 % len(seen) == 0
    return seen


@dataclass(frozen=True)
class CanonicalRep:
    rep: object
    key: tuple
    degenerate: bool = False


def _g3_key(r: Girth3Rep) -> tuple:
    return ("g3",) + min(x.top + x.bottom for x in d3_orbit(r))


def canonicalize(rep) -> CanonicalRep:
    """Canonical form under the paper-level symmetries.

    Girth 2 pairs are sorted and have +-1 labels absorbed into the other
    twist region (repeatedly); a pair that collapses to a single region is
    returned as a Girth1Rep carrying a ``degenerate`` marker rather than
    being silently merged with the genuine single-twist family.
    Girth 3 keys are the lexicographic minimum over the symmetry orbit.
    """
    if isinstance(rep, Girth1Rep):
        return CanonicalRep(rep, ("g1", rep.p), degenerate=abs(rep.p) <= 1)
    if isinstance(rep, Girth2Rep):
        p, q = sorted((rep.p, rep.q))
        if abs(q) == 1:
            merged = p - q
            return CanonicalRep(Girth1Rep(merged), ("g1", merged), degenerate=True)
        if abs(p) == 1:
            merged = q - p
            return CanonicalRep(Girth1Rep(merged), ("g1", merged), degenerate=True)
        return CanonicalRep(Girth2Rep(p, q), ("g2", p, q))
    if isinstance(rep, Girth3Rep):
        key = _g3_key(rep)
        canon = Girth3Rep(tuple(key[1:4]), tuple(key[4:7]))
        return CanonicalRep(canon, key)
    raise TypeError(f"cannot canonicalize {rep!r}")


# ---------------------------------------------------------------------------
# zero-labeled exterior edges on general tree pairs


def strip_zero_exterior(tree: PlaneTree) -> PlaneTree:
    """Remove exterior (leaf) edges labeled zero, repeatedly."""
    edges: list = [tuple(e) for e in tree.edges]
    rotation = [list(r) for r in tree.rotation]
    changed = True
    while changed:
        changed = False
        for idx, entry in enumerate(edges):
            if entry is None or entry[2] != 0:
                continue
            u, v, _label = entry
            for leaf, other in ((u, v), (v, u)):
                live = [x for x in rotation[leaf] if x is not None]
                if len(live) == 1 and live[0][0] == idx:
                    rotation[leaf] = []
                    rotation[other] = [
                        None if (x is not None and x[0] == idx) else x
                        for x in rotation[other]
                    ]
                    edges[idx] = None
                    changed = True
                    break
            if changed:
                break
    keep = [i for i, e in enumerate(edges) if e is not None]
    remap = {old: new for new, old in enumerate(keep)}
    vert_keep = [
        v for v in range(len(rotation)) if any(x is not None for x in rotation[v])
    ]
    if not vert_keep:
        vert_keep = [0]
    vmap = {old: new for new, old in enumerate(vert_keep)}
    new_edges = tuple(
        (vmap[edges[i][0]], vmap[edges[i][1]], edges[i][2]) for i in keep
    )
    new_rotation = tuple(
        tuple(
            (remap[ei], end)
            for (ei, end) in [x for x in rotation[v] if x is not None]
        )
        for v in vert_keep
    )
    return PlaneTree(new_edges, new_rotation)


def pad_to_girth(tree: PlaneTree, girth: int) -> PlaneTree:
    """Add zero-labeled exterior edges until the leaf count equals girth."""
    edges = [tuple(e) for e in tree.edges]
    rotation = [list(r) for r in tree.rotation]
    while sum(1 for v in range(len(rotation)) if len(rotation[v]) == 1) < girth:
        # attach a fresh leaf at the first vertex of valence 2
        target = next(
            (v for v in range(len(rotation)) if len(rotation[v]) == 2), None
        )
        if target is None:
            target = 0
        new_edge = len(edges)
        new_vertex = len(rotation)
        edges.append((target, new_vertex, 0))
        rotation[target].append((new_edge, 0))
        rotation.append([(new_edge, 1)])
    return PlaneTree(tuple(edges), tuple(tuple(r) for r in rotation))
