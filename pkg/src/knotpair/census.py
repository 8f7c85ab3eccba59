"""Census enumeration, invariant records, deduplication, table verification."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import classify, oracle
from .diagram import pd_from_json, pd_from_rep, orient
from .laurent import (
    LaurentPoly,
    jones_from_bracket,
    jones_span_inclusive,
    jones_to_text,
    poly_to_text,
)
from .reps import Girth1Rep, Girth2Rep, Girth3Rep, canonicalize, parse_rep
from .tables import (
    ROLFSEN_TABLE,
    TABLE_ERRATA,
    crossing_number,
    fixture_filename,
)

G2_BUDGET = 12
G3_BUDGET = 6


@dataclass(frozen=True)
class InvariantRecord:
    rep: object
    components: int
    conway: LaurentPoly | None
    bracket: LaurentPoly
    jones: LaurentPoly
    span: Fraction
    source: str  # 'closed_form' or 'oracle'
    conway_note: str = ""

    def class_key(self) -> tuple:
        return (
            self.components,
            poly_to_text(self.conway) if self.conway is not None else "",
            jones_to_text(self.jones),
        )


def build_record(rep, oracle_cap: int = oracle.CONWAY_CAP) -> InvariantRecord:
    """Exact invariants of one representation, closed forms where they exist."""
    pd = pd_from_rep(rep)
    ori = orient(pd)
    bracket = classify.closed_bracket(rep)
    jones = jones_from_bracket(bracket, ori.writhe)
    span = jones_span_inclusive(jones)
    inv = classify.rep_invariants(rep, oracle_cap)
    note = ""
    if inv.conway is not None and inv.components > 1:
        note = "link value; orientation with parallel strands in the odd regions"
    if inv.conway is not None and inv.components == 1:
        assert inv.conway.coeff(0) == 1
    source = "closed_form"
    if (
        inv.conway is not None
        and isinstance(rep, Girth3Rep)
        and not all(x % 2 == 0 and x >= 0 for x in rep.top + rep.bottom)
    ):
        source = "oracle"  # Conway came from Fox calculus on the template
    return InvariantRecord(
        rep=rep,
        components=inv.components,
        conway=inv.conway,
        bracket=bracket,
        jones=jones,
        span=span,
        source=source,
        conway_note=note,
    )


def census_enumerate(
    girth: int,
    max_abs_label: int,
    even_only: bool = False,
    positive_only: bool = False,
) -> list:
    """Canonical representatives with labels bounded by max_abs_label.

    Exactly one representative per canonical key, in key order.  Girth-2
    pairs whose canonical form collapses to a single twist region are
    reported through their Girth1Rep canonical form.
    """
    if girth == 2 and max_abs_label > G2_BUDGET:
        raise ValueError(f"girth-2 label budget is {G2_BUDGET}")
    if girth == 3 and max_abs_label > G3_BUDGET:
        raise ValueError(f"girth-3 label budget is {G3_BUDGET}")
    values = _label_range(max_abs_label, even_only, positive_only)
    seen: dict[tuple, object] = {}
    if girth == 2:
        for p in values:
            for q in values:
                canon = canonicalize(Girth2Rep(p, q))
                seen.setdefault(canon.key, canon.rep)
    elif girth == 3:
        for p in values:
            for q in values:
                for r in values:
                    for a in values:
                        for b in values:
                            for c in values:
                                canon = canonicalize(
                                    Girth3Rep((p, q, r), (a, b, c))
                                )
                                seen.setdefault(canon.key, canon.rep)
    else:
        raise ValueError("census enumerates girth 2 or 3")
    return [seen[k] for k in sorted(seen)]


def _label_range(max_abs: int, even_only: bool, positive_only: bool) -> list[int]:
    lo = 1 if positive_only else -max_abs
    values = [v for v in range(lo, max_abs + 1)]
    if even_only:
        values = [v for v in values if v % 2 == 0 and (v != 0 or not positive_only)]
    if positive_only:
        values = [v for v in values if v > 0]
    return values


@dataclass(frozen=True)
class CensusClass:
    class_id: str
    key: tuple
    members: tuple
    verdicts: tuple  # classify verdict tag per non-representative member


def dedup_census(reps: list, oracle_cap: int = oracle.CONWAY_CAP):
    """Group representations by (components, Conway, Jones).

    Classes with two or more members are adjudicated pairwise against the
    class representative via classify.compare.
    """
    records = [build_record(r, oracle_cap) for r in reps]
    groups: dict[tuple, list[InvariantRecord]] = {}
    for rec in records:
        groups.setdefault(rec.class_key(), []).append(rec)
    classes = []
    for idx, key in enumerate(sorted(groups)):
        members = groups[key]
        verdicts = tuple(
            classify.compare(members[0].rep, m.rep).tag for m in members[1:]
        )
        classes.append(
            CensusClass(
                class_id=f"c{idx:04d}",
                key=key,
                members=tuple(members),
                verdicts=verdicts,
            )
        )
    return classes


def census_jsonl(classes) -> str:
    """JSON-lines form of the census, one record per line."""
    lines = []
    for cls in classes:
        for i, rec in enumerate(cls.members):
            lines.append(
                json.dumps(
                    {
                        "rep": str(rec.rep),
                        "girth": rec.rep.girth(),
                        "components": rec.components,
                        "conway": poly_to_text(rec.conway)
                        if rec.conway is not None
                        else None,
                        "jones": jones_to_text(rec.jones),
                        "span": str(rec.span),
                        "class_id": cls.class_id,
                        "verdict": None if i == 0 else cls.verdicts[i - 1],
                        "source": rec.source,
                    }
                )
            )
    return "\n".join(lines) + "\n"


def census_csv(classes) -> str:
    """Deterministic CSV: rep, girth, components, conway, jones, span, class, verdict."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["rep", "girth", "components", "conway", "jones", "span", "class_id", "verdict"]
    )
    for cls in classes:
        for i, rec in enumerate(cls.members):
            verdict = "" if i == 0 else cls.verdicts[i - 1]
            writer.writerow(
                [
                    str(rec.rep),
                    rec.rep.girth(),
                    rec.components,
                    poly_to_text(rec.conway) if rec.conway is not None else "",
                    jones_to_text(rec.jones),
                    str(rec.span),
                    cls.class_id,
                    verdict,
                ]
            )
    return out.getvalue()


# ---------------------------------------------------------------------------
# Rolfsen table verification


@dataclass(frozen=True)
class TableResult:
    name: str
    rep_text: str | None
    status: str  # PASS / FAIL / SKIP / ABSENT
    detail: str = ""


def _fixture_pd(name: str, fixtures_dir: str | None):
    fname = fixture_filename(name)
    if fixtures_dir is not None:
        path = os.path.join(fixtures_dir, fname)
        if not os.path.exists(path):
            return None
        with open(path) as f:
            return pd_from_json(f.read())
    ref = (
        resources.files("knotpair").joinpath("fixtures").joinpath("rolfsen").joinpath(fname)
    )
    if not ref.is_file():
        return None
    return pd_from_json(ref.read_text())


def verify_table(
    fixtures_dir: str | None = None,
    max_crossings: int | None = None,
    apply_errata: bool = False,
) -> list[TableResult]:
    """Check table representations against independently sourced diagrams.

    For every entry with a reference PD fixture, the Jones polynomial of
    the representation's template diagram must match the fixture's Jones
    up to mirror (and up to orientation units t^(3k) for links).  Entries
    without a fixture are skipped with a notice.
    """
    results = []
    for name, rep_text in ROLFSEN_TABLE:
        if max_crossings is not None and crossing_number(name) > max_crossings:
            continue
        if rep_text is None:
            results.append(
                TableResult(name, None, "ABSENT", "no representation in the table")
            )
            continue
        note = ""
        if apply_errata and name in TABLE_ERRATA:
            rep_text = TABLE_ERRATA[name]
            note = "erratum applied; "

        ref = _fixture_pd(name, fixtures_dir)
        if ref is None:
            results.append(
                TableResult(name, rep_text, "SKIP", "no reference fixture shipped")
            )
            continue
        rep = parse_rep(rep_text)
        pd = pd_from_rep(rep)
        j_rep = jones_from_bracket(
            oracle.bracket_state_sum(pd), oracle.writhe(pd)
        )
        j_ref = jones_from_bracket(
            oracle.bracket_state_sum(ref), oracle.writhe(ref)
        )
        comps_rep = oracle.components(pd)
        comps_ref = oracle.components(ref)
        if comps_rep != comps_ref:
            results.append(
                TableResult(
                    name,
                    rep_text,
                    "FAIL",
                    f"component counts differ: {comps_rep} vs {comps_ref}",
                )
            )
            continue
        ok = classify.jones_equal(
            j_rep, j_ref, unit_shift=comps_rep > 1, mirror_ok=True
        )
        if ok:
            results.append(TableResult(name, rep_text, "PASS", note.rstrip("; ")))
        else:
            results.append(
                TableResult(
                    name,
                    rep_text,
                    "FAIL",
                    note + f"rep jones {jones_to_text(j_rep)} vs reference "
                    f"{jones_to_text(j_ref)}",
                )
            )
    return results


def table_report(results: list[TableResult]) -> str:
    lines = []
    for r in results:
        lines.append(f"{r.name:8s} {r.status:6s} {r.rep_text or '?':24s} {r.detail}")
    counts = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    lines.append(summary)
    return "\n".join(lines)


def table_results_json(results: list[TableResult]) -> str:
    return json.dumps(
        [
            {"name": r.name, "rep": r.rep_text, "status": r.status, "detail": r.detail}
            for r in results
        ]
    )
