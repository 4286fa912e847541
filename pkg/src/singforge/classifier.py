"""End-to-end classification of 3-fold Brieskorn types by exceptionality.

A type is run through the surface model and the complement screens; what
the screens cannot close is looked up in the verdict ledger, whose numeric
checks are re-evaluated before the verdict is accepted.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import complement as cp
from .blowup import is_plt_weight
from .errors import InvariantError, NotInScope, UsageError
from .lattice import fmt_rat, parse_rat
from .newton import SupportSet
from .tables import TABLE1, TABLE2
from .wps import BrieskornType, SurfaceModel, cone_presentation, star_indices, surface_model

LEDGER_ENV = "SINGFORGE_LEDGER"


@dataclass(frozen=True)
class EnumerationBounds:
    """Least gaps ``1 - sum_{i<=k} 1/a_i`` over integers with a positive gap."""

    delta1: Fraction = Fraction(1, 2)
    delta2: Fraction = Fraction(1, 6)
    delta3: Fraction = Fraction(1, 42)

    def exponent_limits(self) -> tuple[int, int, int, int]:
        # sorted exponents with sum 1/a_i > 1 force (4 - k)/a_{k+1} > delta_k
        deltas = (Fraction(1), self.delta1, self.delta2, self.delta3)
        out = []
        for k, d in enumerate(deltas):
            bound = Fraction(4 - k) / d
            out.append(int(bound) - 1 if bound.denominator == 1 else int(bound))
        return tuple(out)


BOUNDS = EnumerationBounds()


def prefilter(t: BrieskornType) -> None:
    """Raise NotInScope unless t is canonical with a non-lc hyperplane section."""
    a = t.a
    total = t.sum_inverse
    if total <= 1:
        rel = "=" if total == 1 else "<"
        raise NotInScope(f"{t}: sum 1/a_i = {fmt_rat(total)} {rel} 1, so the singularity is not canonical")
    head = sum(Fraction(1, x) for x in a[:3])
    if head >= 1:
        raise NotInScope(
            f"{t}: 1/a1 + 1/a2 + 1/a3 = {fmt_rat(head)} >= 1, so {{x4 = 0}} gives an lc divisor "
            "and the singularity is not exceptional; the classification does not cover it"
        )


def enumerate_types(bounds: EnumerationBounds = BOUNDS) -> list[BrieskornType]:
    l1, l2, l3, l4 = bounds.exponent_limits()
    out = []
    for a1 in range(2, l1 + 1):
        for a2 in range(a1, l2 + 1):
            for a3 in range(a2, l3 + 1):
                if Fraction(1, a1) + Fraction(1, a2) + Fraction(1, a3) >= 1:
                    continue
                for a4 in range(a3, l4 + 1):
                    t = BrieskornType((a1, a2, a3, a4))
                    if t.sum_inverse > 1:
                        out.append(t)
    return sorted(out)


# Ledger


@dataclass(frozen=True)
class LedgerEntry:
    type: BrieskornType
    verdict: str  # "exceptional" | "non_exceptional"
    citation: dict
    numeric_checks: tuple[dict, ...]
    witness: str | None = None

    @classmethod
    def from_json(cls, data: dict) -> "LedgerEntry":
        try:
            t = BrieskornType(tuple(data["type"]))
            verdict = data["verdict"]
            citation = data["citation"]
            checks = tuple(data.get("numeric_checks", ()))
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed ledger entry: {data!r}") from exc
        if verdict not in ("exceptional", "non_exceptional"):
            raise UsageError(f"{t}: unknown verdict {verdict!r}")
        if not citation.get("case"):
            raise UsageError(f"{t}: ledger entry has no case citation")
        witness = data.get("witness")
        if verdict == "non_exceptional" and not witness:
            raise UsageError(f"{t}: non-exceptional entry without a witness")
        return cls(t, verdict, dict(citation), checks, witness)

    def to_json(self) -> dict:
        out = {
            "type": list(self.type.a),
            "verdict": self.verdict,
            "citation": self.citation,
            "numeric_checks": list(self.numeric_checks),
        }
        if self.witness:
            out["witness"] = self.witness
        return out


def load_ledger(path: str | os.PathLike | None = None) -> dict[BrieskornType, LedgerEntry]:
    path = path or os.environ.get(LEDGER_ENV)
    if path:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read ledger {path}: {exc}") from exc
    else:
        text = resources.files("singforge").joinpath("data/ledger.json").read_text()
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"ledger is not valid JSON: {exc}") from exc
    entries = [LedgerEntry.from_json(r) for r in rows]
    ledger = {e.type: e for e in entries}
    if len(ledger) != len(entries):
        raise UsageError("ledger lists a type twice")
    return ledger


def _dominating_permutation(src: SurfaceModel, dst: SurfaceModel):
    """A coordinate permutation carrying src's model onto dst's with Diff(dst) >= Diff(src)."""
    for perm in itertools.permutations(range(4)):
        if all(src.model.pbar[perm[i]] == dst.model.pbar[i] for i in range(4)) and all(
            dst.diff[i] >= src.diff[perm[i]] for i in range(4)
        ):
            return perm
    return None


def run_check(model: SurfaceModel, check: dict, resolve) -> dict:
    """Evaluate one ledger check against the model; returns a result record."""
    kind = check.get("kind")
    h2, pbar = model.h2, model.model.pbar
    budget = cp.degree_budget(model)
    if kind == "budget":
        got = budget
        ok = got == parse_rat(check["expect"])
    elif kind == "gamma_dot":
        got = budget * pbar[check["gamma"] - 1] * h2
        ok = got == parse_rat(check["expect"])
    elif kind == "singular_points":
        pair = tuple(check["pair"])
        pts = [s for s in model.sing if s.pair == pair]
        got = [(s.order, s.count) for s in pts]
        ok = got == [(check["order"], check["count"])]
    elif kind == "plt_inequality":
        deg = check["degree"]
        orders = []
        for pair in check["through"]:
            for s in model.sing:
                if s.pair == tuple(pair):
                    orders += [s.order] * s.count
        selfint = (model.degK + deg) * deg * h2
        got = {"selfint": fmt_rat(selfint), "orders": orders}
        ok = selfint == parse_rat(check["expect_selfint"]) and cp.plt_inequality(selfint, orders) is check["expect"]
        ok = ok and bool(orders)
    elif kind == "can_term_condition":
        got = cp.can_term_condition([parse_rat(c) for c in check["coeffs"]])
        ok = got is check["expect"]
    elif kind == "candidate":
        cand = cp.ComplementCandidate(check["n"], tuple(check["fixed"]), tuple(sorted(tuple(x) for x in check["mobile"])))
        got = cand.boundary(model).render() if len(cand.fixed) == 4 else None
        ok = got is not None and cand in cp.enumerate_candidates(model, cand.n)
    elif kind == "single_monomial_degree":
        got = cp.monomial_count(pbar, check["degree"])
        ok = got == 1
    elif kind == "blowup_discrepancy":
        d = check["order"]
        if d > 1 and not any(s.order == d and s.q == 1 for s in model.sing):
            got, ok = None, False
        else:
            got = -1 + Fraction(2, d) - sum(parse_rat(c) * k for c, k in check["branches"]) / d
            ok = got <= parse_rat(check["expect_at_most"])
    elif kind == "reduces_to":
        target = BrieskornType(tuple(check["target"]))
        tm = surface_model(target)
        perm = _dominating_permutation(tm, model)
        verdict = resolve(target)
        got = {"permutation": None if perm is None else [i + 1 for i in perm], "target": verdict.outcome}
        ok = perm is not None and verdict.outcome == "exceptional"
    else:
        raise UsageError(f"unknown ledger check kind {kind!r}")
    if not isinstance(got, (str, int, bool, list, dict, type(None))):
        got = fmt_rat(got)
    return {"check": check, "value": got, "ok": bool(ok)}


# Verdicts


@dataclass(frozen=True)
class Verdict:
    type: BrieskornType
    outcome: str  # "exceptional" | "non_exceptional"
    proof: str  # "bump_obstruction" | "all_candidates_klt_by_screen" | "ledger"
    trace: list = field(default_factory=list, compare=False)
    witness: str | None = None
    source: str | None = None  # for non-exceptional verdicts

    @property
    def exceptional(self) -> bool:
        return self.outcome == "exceptional"

    def to_json(self) -> dict:
        out = {"type": list(self.type.a), "outcome": self.outcome, "proof": self.proof}
        if self.witness:
            out["witness"] = self.witness
        if self.source:
            out["source"] = self.source
        out["trace"] = self.trace
        return out


class Classifier:
    """Classifies Brieskorn types, memoizing results for reductions."""

    def __init__(self, ledger: dict[BrieskornType, LedgerEntry] | None = None):
        self.ledger = load_ledger() if ledger is None else ledger
        self._done: dict[BrieskornType, Verdict] = {}
        self._active: set[BrieskornType] = set()

    def classify(self, t: BrieskornType) -> Verdict:
        if t in self._done:
            return self._done[t]
        if t in self._active:
            raise InvariantError(f"{t}: ledger reductions form a cycle")
        self._active.add(t)
        try:
            v = self._classify(t)
        finally:
            self._active.discard(t)
        self._done[t] = v
        return v

    def _classify(self, t: BrieskornType) -> Verdict:
        prefilter(t)
        trace = []
        f = SupportSet.brieskorn(t.a)
        m = surface_model(t)
        if not is_plt_weight(f, m.p):
            raise InvariantError(f"{t}: the weight {m.p} is not a plt weight")
        trace.append({"step": "weights", "w": m.w, "p": list(m.p), "plt_weight": True})
        trace.append({
            "step": "normalize",
            "abar": list(m.model.abar),
            "pbar": list(m.model.pbar),
            "wbar": m.model.wbar,
        })
        trace.append({"step": "different", "diff": [fmt_rat(c) for c in m.diff]})
        trace.append({"step": "star", "indices": star_indices(t), "k": m.star})
        trace.append({"step": "intersection", "h2": fmt_rat(m.h2), "degK": m.degK, "budget": fmt_rat(cp.degree_budget(m))})
        entry = self.ledger.get(t)

        bump = cp.bump_obstruction(m)
        w = cp.bumped_degrees(m)
        trace.append({"step": "bump_obstruction", **w.to_json(), "holds": bump is not None})
        if bump is not None:
            if any(cp.enumerate_candidates(m, n) for n in cp.REGULAR):
                raise InvariantError(f"{t}: bump obstruction holds but candidates exist")
            return self._machine(t, "bump_obstruction", trace, entry)

        cands = cp.all_candidates(m)
        tags = [cp.klt_screen(m, c) for c in cands]
        open_cands = [c for c, tag in zip(cands, tags) if tag is cp.Screen.NEEDS_LEDGER]
        trace.append({
            "step": "candidates",
            "total": len(cands),
            "by_n": {str(n): sum(c.n == n for c in cands) for n in cp.REGULAR},
            "needs_ledger": len(open_cands),
        })
        if not cands:
            trace.append({"step": "note", "text": "no regular complement at all; the screen holds vacuously"})
        if not open_cands:
            return self._machine(t, "all_candidates_klt_by_screen", trace, entry)

        trace.append({"step": "open_candidates", "items": [c.to_json(m, str(t)) for c in open_cands[:20]]})
        if entry is None:
            raise InvariantError(f"{t}: {len(open_cands)} candidates need the ledger but it has no entry")
        results = [run_check(m, chk, self.classify) for chk in entry.numeric_checks]
        trace.append({"step": "ledger", "citation": entry.citation, "checks": results})
        failed = [r for r in results if not r["ok"]]
        if failed:
            raise InvariantError(f"{t}: ledger checks failed: {failed}")
        if entry.verdict == "exceptional":
            return Verdict(t, "exceptional", "ledger", trace)
        return Verdict(t, "non_exceptional", "ledger", trace, witness=entry.witness, source="ledger")

    def _machine(self, t, proof, trace, entry) -> Verdict:
        if entry is not None and entry.verdict != "exceptional":
            raise InvariantError(f"{t}: machine proof {proof} contradicts the ledger verdict {entry.verdict}")
        return Verdict(t, "exceptional", proof, trace)

    def classify_all(self) -> list[Verdict]:
        return [self.classify(t) for t in enumerate_types()]


def classify(t: BrieskornType, ledger=None) -> Verdict:
    return Classifier(ledger).classify(t)


# Tables


def table_presentation(m: SurfaceModel):
    """Cone presentation used for display.

    Among the coprime indices, prefer the one whose weights put the smallest
    weight in the middle and the largest first; remaining ties go to the
    largest index.
    """
    ks = star_indices(m.type)
    pres = [cone_presentation(m, k) for k in ks]
    return min(pres, key=lambda c: (c.q[1], -c.q[0], -c.k))


def _diff_text(diff: dict) -> str:
    return " + ".join(f"{fmt_rat(c)} {lab}" for lab, c in diff.items()) or "0"


def _table_rows(verdicts):
    t1, t2 = [], []
    for v in verdicts:
        if not v.exceptional:
            continue
        m = surface_model(v.type)
        if m.star is not None:
            c = table_presentation(m)
            diff = dict(sorted(c.diff.items(), key=lambda kv: (kv[0][0] != "C", kv[0])))
            t1.append({"type": list(v.type.a), "S": c.ambient, "q": list(c.q), "k": c.k, "diff": {k: fmt_rat(x) for k, x in diff.items()}, "_text": _diff_text(diff)})
        else:
            pbar = m.model.pbar
            amb = "P3" if pbar == (1, 1, 1, 1) else "P(" + ",".join(map(str, pbar)) + ")"
            diff = {f"Gamma{i + 1}": c for i, c in enumerate(m.diff) if c}
            t2.append({"type": list(v.type.a), "S": amb, "pbar": list(pbar), "abar": list(m.model.abar), "diff": {k: fmt_rat(x) for k, x in diff.items()}, "_text": _diff_text(diff)})
    for i, r in enumerate(t1 + t2, start=1):
        r["no"] = i
    return t1, t2


def emit_tables(fmt: str = "markdown", classifier: Classifier | None = None) -> str:
    clf = classifier or Classifier()
    t1, t2 = _table_rows(clf.classify_all())
    if fmt == "json":
        strip = lambda rows: [{k: v for k, v in r.items() if not k.startswith("_")} for r in rows]
        return json.dumps({"table1": strip(t1), "table2": strip(t2)}, indent=2, sort_keys=True) + "\n"
    if fmt != "markdown":
        raise UsageError(f"unknown table format {fmt!r}")
    lines = ["## Pic(S) = Z", "", "| No. | a1 | a2 | a3 | a4 | S | Diff |", "|---|---|---|---|---|---|---|"]
    for r in t1:
        lines.append(f"| {r['no']} | " + " | ".join(map(str, r["type"])) + f" | {r['S']} | {r['_text']} |")
    lines += ["", "## rho(S) > 1", "", "| No. | a1 | a2 | a3 | a4 | S | exponents | Diff |", "|---|---|---|---|---|---|---|---|"]
    for r in t2:
        lines.append(
            f"| {r['no']} | " + " | ".join(map(str, r["type"])) + f" | {r['S']} | ({','.join(map(str, r['abar']))}) | {r['_text']} |"
        )
    return "\n".join(lines) + "\n"


@dataclass
class TableCheck:
    total: int
    matched: int
    mismatches: list

    @property
    def ok(self) -> bool:
        return self.matched == self.total and not self.mismatches

    def render(self) -> str:
        return f"{self.matched}/{self.total} rows match embedded fixtures"


def _verdict_problems(clf: Classifier, t: BrieskornType) -> list[str]:
    try:
        v = clf.classify(t)
    except InvariantError as exc:
        return [f"classification failed: {exc}"]
    return [] if v.exceptional else ["not classified exceptional"]


def verify_tables(classifier: Classifier | None = None) -> TableCheck:
    """Compare computed models and verdicts with every transcribed table row."""
    clf = classifier or Classifier()
    mismatches = []
    matched = 0
    for row in TABLE1:
        t = BrieskornType(row.type)
        m = surface_model(t)
        problems = []
        if m.star is None:
            problems.append("star condition fails")
        else:
            ok = [k for k in star_indices(t) if (lambda c: c.q == row.q and c.diff == row.diff)(cone_presentation(m, k))]
            if not ok:
                problems.append("no cone presentation reproduces the row")
        problems += _verdict_problems(clf, t)
        if problems:
            mismatches.append({"type": list(row.type), "table": 1, "problems": problems})
        else:
            matched += 1
    for row in TABLE2:
        t = BrieskornType(row.type)
        m = surface_model(t)
        problems = []
        if m.star is not None:
            problems.append("star condition holds")
        if m.model.pbar != row.pbar:
            problems.append(f"pbar {m.model.pbar} != {row.pbar}")
        if m.model.abar != row.abar:
            problems.append(f"abar {m.model.abar} != {row.abar}")
        diff = {i + 1: c for i, c in enumerate(m.diff) if c}
        if diff != row.diff:
            problems.append("different does not match")
        problems += _verdict_problems(clf, t)
        if problems:
            mismatches.append({"type": list(row.type), "table": 2, "problems": problems})
        else:
            matched += 1
    fixture_types = {BrieskornType(r.type) for r in TABLE1 + TABLE2}
    exceptional = set()
    for t in enumerate_types():
        if not _verdict_problems(clf, t):
            exceptional.add(t)
    for t in sorted(exceptional - fixture_types):
        mismatches.append({"type": list(t.a), "table": None, "problems": ["exceptional but missing from the tables"]})
    return TableCheck(len(TABLE1) + len(TABLE2), matched, mismatches)
