"""Decision procedures: symmetry detection vs invariant separation.

A verdict never claims knot equivalence from invariant equality alone;
``Unresolved`` is a first-class outcome.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import closedform as cf
from . import oracle
from .diagram import pd_from_rep, orient
from .laurent import LaurentPoly, jones_from_bracket, poly_to_text
from .reps import (
    Girth1Rep,
    Girth2Rep,
    Girth3Rep,
    canonicalize,
    d3_orbit,
    mirror,
)

EQUAL_BY_SYMMETRY = "EqualBySymmetry"
DISTINCT_BY_CONWAY = "DistinctByConway"
DISTINCT_BY_JONES = "DistinctByJones"
NECESSARY_CONDITION_FAILS = "NecessaryConditionFails"
UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class Verdict:
    tag: str
    evidence: LaurentPoly | None = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.tag in (DISTINCT_BY_CONWAY, DISTINCT_BY_JONES):
            if self.evidence is None or self.evidence.is_zero():
                raise ValueError("distinctness verdicts need nonzero evidence")

    def to_json_dict(self) -> dict:
        out: dict = {"verdict": self.tag}
        if self.evidence is not None:
            out["evidence"] = poly_to_text(self.evidence)
        if self.note:
            out["note"] = self.note
        return out


def _require_even(labels, positive: bool = False) -> None:
    if any(x % 2 for x in labels):
        raise ValueError(f"labels must be even: {labels}")
    if positive and any(x <= 0 for x in labels):
        raise ValueError(f"labels must be positive: {labels}")


def classify_girth2_even(p: int, q: int, a: int, b: int) -> Verdict:
    """Equality test for even positive double twist knots.

    Equal exactly when {p,q} = {a,b}; otherwise the Conway coefficient
    pq/4 or the Jones span p+q separates them.
    """
    _require_even((p, q, a, b), positive=True)
    if sorted((p, q)) == sorted((a, b)):
        return Verdict(EQUAL_BY_SYMMETRY, note="{p,q} = {a,b}")
    if p * q != a * b:
        diff = cf.conway_double_twist(p, q) - cf.conway_double_twist(a, b)
        return Verdict(DISTINCT_BY_CONWAY, evidence=diff)
    if p + q != a + b:
        diff = cf.bracket_double_twist(p, q) - cf.bracket_double_twist(a, b)
        return Verdict(
            DISTINCT_BY_JONES,
            evidence=diff,
            note=f"spans {p + q} vs {a + b}",
        )
    raise AssertionError("equal sum and product force equal multisets")


def transposition_test(rep: Girth3Rep, tau: str) -> Verdict:
    """Conway comparison against a transposed bottom row (even positive)."""
    _require_even(rep.top + rep.bottom, positive=True)
    if tau not in ("swap_ab", "swap_bc", "swap_ac"):
        raise ValueError(f"not a transposition: {tau!r}")
    diff = cf.conway_diff(rep, tau)
    permuted = cf.permute_bottom(rep, tau)
    if diff.is_zero():
        assert permuted in d3_orbit(rep), "zero difference must come from symmetry"
        return Verdict(EQUAL_BY_SYMMETRY, note=f"{tau} image lies in the D3 orbit")
    assert permuted not in d3_orbit(rep)
    return Verdict(DISTINCT_BY_CONWAY, evidence=diff)


def cycle_obstruction(rep: Girth3Rep, cycle: str) -> Verdict:
    """Conway and bracket determinant obstructions for a bottom 3-cycle."""
    _require_even(rep.top + rep.bottom)
    if cycle not in ("cycle_cab", "cycle_bca"):
        raise ValueError(f"not a 3-cycle: {cycle!r}")
    int_det = cf.int_cycle_det(rep, cycle)
    if int_det != 0 and all(x > 0 for x in rep.top + rep.bottom):
        return Verdict(DISTINCT_BY_CONWAY, evidence=cf.conway_diff(rep, cycle))
    s_det = cf.shat_cycle_det(rep, cycle)
    if not s_det.is_zero():
        diff = cf.bracket_diff(rep, cycle)
        return Verdict(DISTINCT_BY_JONES, evidence=diff, note="S-determinant nonzero")
    return Verdict(
        UNRESOLVED,
        note="both determinant obstructions vanish (necessity only)",
    )


def row_swap_test(rep: Girth3Rep) -> Verdict:
    """Necessary condition for K(p q r/a b c) = K(a q r/p b c), all even."""
    _require_even(rep.top + rep.bottom)
    (p, q, r), (a, b, c) = rep.top, rep.bottom
    if p == a:
        return Verdict(EQUAL_BY_SYMMETRY, note="p = a: the swap is trivial")
    cond1 = q == c == 0
    cond2 = q == c and b == r
    diff = cf.bracket_diff(rep, "swap_pa")
    if not (cond1 or cond2):
        if diff.is_zero():
            raise AssertionError(
                "bracket difference vanished although the necessary condition fails"
            )
        return Verdict(NECESSARY_CONDITION_FAILS, evidence=diff)
    if diff.is_zero():
        return Verdict(
            UNRESOLVED, note="necessary condition holds and brackets agree"
        )
    return Verdict(DISTINCT_BY_JONES, evidence=diff)


# ---------------------------------------------------------------------------
# general comparison


@dataclass(frozen=True)
class RepInvariants:
    components: int
    conway: LaurentPoly | None
    jones: LaurentPoly
    writhe: int


def rep_invariants(rep, oracle_cap: int = oracle.CONWAY_CAP) -> RepInvariants:
    """Exact invariants of a representation, closed forms where available."""
    pd = pd_from_rep(rep)
    ori = orient(pd)
    comps = ori.n_components
    bracket = closed_bracket(rep)
    jones = jones_from_bracket(bracket, ori.writhe)
    conway: LaurentPoly | None = None
    if isinstance(rep, Girth1Rep):
        if rep.p % 2 != 0:
            conway = cf.conway_single_twist(rep.p)
    elif isinstance(rep, Girth2Rep):
        if comps == 1:
            conway = cf.conway_double_twist(rep.p, rep.q)
    elif isinstance(rep, Girth3Rep):
        labels = rep.top + rep.bottom
        if all(x % 2 == 0 and x >= 0 for x in labels):
            conway = cf.conway_girth3_even(rep)
        elif comps == 1 and pd.n() <= oracle_cap:
            conway = oracle.conway_fox(pd)
    return RepInvariants(comps, conway, jones, ori.writhe)


def closed_bracket(rep) -> LaurentPoly:
    """Closed-form Kauffman bracket for any girth <= 3 representation."""
    if isinstance(rep, Girth1Rep):
        return bracket_single_twist(rep.p)
    if isinstance(rep, Girth2Rep):
        return cf.bracket_double_twist(rep.p, rep.q)
    if isinstance(rep, Girth3Rep):
        return cf.bracket_girth3(rep)
    raise TypeError(f"no closed bracket for {rep!r}")


def bracket_single_twist(p: int) -> LaurentPoly:
    """Bracket of the closed twist region, by the one-crossing expansion.

    Smoothing the last crossing either shortens the chain or plat-closes
    it into a fully kinked circle: <K(p)> = A^-1 <K(p-1)> + A (-A^3)^(p-1)
    for p > 0, with <K(0)> = delta; mirrored for p < 0.  Verified against
    the state-sum oracle.
    """
    if p < 0:
        return bracket_single_twist(-p).invert_variable()
    value = cf.loop_value()  # two split circles
    a = LaurentPoly.monomial(1, 1, "A")
    for k in range(1, p + 1):
        kink = LaurentPoly.monomial((-1) ** (k - 1), 3 * (k - 1), "A")
        value = a.invert_variable() * value + a * kink
    return value


def jones_equal(
    j1: LaurentPoly,
    j2: LaurentPoly,
    unit_shift: bool = False,
    mirror_ok: bool = False,
) -> bool:
    """Jones equality, optionally up to t^(3k) units and mirror image.

    The unit shifts arise from re-orienting components of a link: the
    writhe moves by multiples of 4, so the normalized polynomial slides by
    t^(3k) (12 quarter-units).
    """
    candidates = [j2]
    if mirror_ok:
        candidates.append(j2.invert_variable())
    for cand in candidates:
        if j1 == cand:
            return True
        if unit_shift and not j1.is_zero() and not cand.is_zero():
            shift = j1.min_exp() - cand.min_exp()
            if shift % 12 == 0 and cand.shift(shift) == j1:
                return True
    return False


def compare(r1, r2, mirror_ok: bool = False, oracle_cap: int = oracle.CONWAY_CAP) -> Verdict:
    """Full comparison: symmetry, then Conway, then Jones, else Unresolved."""
    c1, c2 = canonicalize(r1), canonicalize(r2)
    if c1.key == c2.key:
        return Verdict(EQUAL_BY_SYMMETRY, note="identical canonical keys")
    if mirror_ok and canonicalize(mirror(r1)).key == c2.key:
        return Verdict(EQUAL_BY_SYMMETRY, note="mirror images")
    inv1 = rep_invariants(r1, oracle_cap)
    inv2 = rep_invariants(r2, oracle_cap)
    if inv1.components != inv2.components:
        return Verdict(
            UNRESOLVED,
            note=f"component counts differ ({inv1.components} vs {inv2.components}): "
            "distinct links, but outside the polynomial verdicts",
        )
    if inv1.conway is not None and inv2.conway is not None:
        diff = inv1.conway - inv2.conway
        if mirror_ok:
            # Conway of a knot is mirror-invariant, so no adjustment needed
            pass
        if not diff.is_zero():
            return Verdict(DISTINCT_BY_CONWAY, evidence=diff)
    if not jones_equal(
        inv1.jones,
        inv2.jones,
        unit_shift=inv1.components > 1,
        mirror_ok=mirror_ok,
    ):
        return Verdict(DISTINCT_BY_JONES, evidence=inv1.jones - inv2.jones)
    return Verdict(UNRESOLVED, note="all computed invariants agree")
