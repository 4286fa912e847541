"""Command-line front end.

Every subcommand prints either plain text or, with ``--json``, a single
JSON envelope ``{"schema_version", "command", "args", "exit_code", "result"}``.
Exit codes: 0 success, 2 usage error, 3 precondition violation, 4 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import blowup, classifier, complement, newton
from .errors import InvariantError, PreconditionError, SingforgeError, UsageError
from .lattice import Weight, fmt_rat
from .newton import Membership, SupportSet
from .wps import BrieskornType, surface_model

SCHEMA_VERSION = 1

MEMBERSHIP_TEXT = {
    Membership.INTERIOR: "canonical (interior)",
    Membership.BOUNDARY: "log-canonical (boundary)",
    Membership.OUTSIDE: "not log-canonical (outside)",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace("[", "").replace("]", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _support(args) -> SupportSet:
    if args.type and args.input:
        raise UsageError("give either --type or --input, not both")
    if args.type:
        return SupportSet.brieskorn(args.type)
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from exc
        try:
            return SupportSet.from_json(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.input} is not valid JSON: {exc}") from exc
    raise UsageError("a support is required: use --type a1,a2,... or --input file.json")


def _brieskorn(args) -> BrieskornType:
    if not args.type:
        raise UsageError("--type a1,a2,a3,a4 is required")
    return BrieskornType(args.type)


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


# Commands return (payload, text).


def cmd_newton_check(args):
    f = _support(args)
    poly = newton.facet_enumeration(f)
    pos = poly.locate((1,) * f.n)
    lp_pos = newton.lp_locate(f, (1,) * f.n)
    if lp_pos is not pos:
        raise InvariantError(f"facet test says {pos.value}, LP says {lp_pos.value}")
    payload = {
        "n": f.n,
        "membership": pos.value,
        "verdict": MEMBERSHIP_TEXT[pos],
        "facets": [{"normal": list(fc.normal), "offset": fc.offset} for fc in poly.facets],
    }
    return payload, MEMBERSHIP_TEXT[pos]


def cmd_leading(args):
    f = _support(args)
    p = Weight(_need(args.weight, "--weight"))
    lead = newton.leading_support(f, p)
    payload = {"weight": list(p), "p_of_f": newton.weight_value(f, p), "support": [list(m) for m in lead]}
    text = f"p(f) = {payload['p_of_f']}\n" + "\n".join(" ".join(map(str, m)) for m in lead)
    return payload, text


def cmd_plt_weight(args):
    f = _support(args)
    p = newton.find_plt_weight(f)
    if p is None:
        raise InvariantError("no compact face has a canonical leading form")
    payload = {"weight": list(p), "leading_support": [list(m) for m in newton.leading_support(f, p)]}
    return payload, ",".join(map(str, p))


def cmd_discrepancy(args):
    f = _support(args)
    p = Weight(_need(args.weight, "--weight"))
    q = _need(args.q, "--q")
    ctx = blowup.BlowupContext(f, p)
    a = blowup.alpha(ctx, q)
    payload = {
        "weight": list(p),
        "q": list(q),
        "alpha": fmt_rat(a),
        "proper_transform": fmt_rat(blowup.discrepancy_over_proper_transform(ctx, q)),
        "base": fmt_rat(blowup.discrepancy_over_base(f, q)),
        "cone_indices": [i + 1 for i in ctx.cone_indices(q)],
    }
    text = "\n".join(f"{k}: {payload[k]}" for k in ("alpha", "proper_transform", "base"))
    return payload, text


def cmd_wps_model(args):
    m = surface_model(_brieskorn(args))
    payload = m.to_json()
    payload["budget"] = fmt_rat(complement.degree_budget(m))
    lines = [
        f"type {m.type}: w = {m.w}, p = {m.p}",
        f"abar = {m.model.abar}, pbar = {m.model.pbar}, wbar = {m.model.wbar}",
        "diff = " + ", ".join(fmt_rat(c) for c in m.diff),
        f"H^2 = {fmt_rat(m.h2)}, deg K = {m.degK}",
    ]
    if m.star is not None:
        c = payload["cone"]
        lines.append(f"cone: {c['ambient']}, k = {c['k']}, labels = {', '.join(c['labels'])}")
    for s in m.sing:
        lines.append(f"sing: {s.count} x {s.label} on Gamma{s.pair[0]} & Gamma{s.pair[1]}")
    return payload, "\n".join(lines)


def _classifier(args):
    return classifier.Classifier(classifier.load_ledger(args.ledger))


def cmd_classify(args):
    t = _brieskorn(args)
    v = _classifier(args).classify(t)
    text = f"{t}: {v.outcome.replace('_', '-')} ({v.proof.replace('_', ' ')})"
    for step in v.trace:
        if step["step"] == "bump_obstruction" and step["holds"]:
            text += f"\nbumped degree {step['inequality']}"
    if v.witness:
        text += f"\nwitness: {v.witness}"
    return v.to_json(), text


def cmd_enumerate(args):
    types = classifier.enumerate_types()
    if args.verdicts:
        clf = _classifier(args)
        rows = [{"type": list(t.a), "outcome": (v := clf.classify(t)).outcome, "proof": v.proof} for t in types]
        text = "\n".join(f"{BrieskornType(tuple(r['type']))} {r['outcome']} {r['proof']}" for r in rows)
    else:
        rows = [list(t.a) for t in types]
        text = "\n".join(str(t) for t in types)
    return {"count": len(types), "types": rows}, text + f"\n{len(types)} types"


def cmd_tables(args):
    clf = _classifier(args)
    if args.json:
        return json.loads(classifier.emit_tables("json", clf)), None
    return None, classifier.emit_tables("markdown", clf).rstrip("\n")


def cmd_verify_tables(args):
    report = classifier.verify_tables(_classifier(args))
    payload = {"total": report.total, "matched": report.matched, "mismatches": report.mismatches}
    if not report.ok:
        lines = [report.render()] + [f"  {m['type']}: {'; '.join(m['problems'])}" for m in report.mismatches]
        raise _Mismatch(payload, "\n".join(lines))
    return payload, report.render()


class _Mismatch(InvariantError):
    def __init__(self, payload, text):
        super().__init__(text)
        self.payload = payload


COMMANDS = {
    "newton-check": (cmd_newton_check, "locate the all-ones point against the Newton polyhedron"),
    "leading": (cmd_leading, "leading support for a weight"),
    "plt-weight": (cmd_plt_weight, "find a weight whose blow-up is plt"),
    "discrepancy": (cmd_discrepancy, "discrepancy of a toric divisor over a weighted blow-up"),
    "wps-model": (cmd_wps_model, "weighted projective model of the exceptional surface"),
    "classify": (cmd_classify, "exceptional or not, with a derivation trace"),
    "enumerate": (cmd_enumerate, "all candidate Brieskorn types"),
    "tables": (cmd_tables, "render the classification tables"),
    "verify-tables": (cmd_verify_tables, "compare computed rows with the embedded fixtures"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="singforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        out = sp.add_mutually_exclusive_group()
        out.add_argument("--json", action="store_true", help="emit a JSON envelope")
        out.add_argument("--markdown", action="store_true", help="plain/markdown output (default)")
        sp.add_argument("--type", type=_int_list, help="Brieskorn exponents a1,a2,...")
        if name in ("newton-check", "leading", "plt-weight", "discrepancy"):
            sp.add_argument("--input", help='support JSON file {"n": .., "support": [[..], ..]}')
        if name in ("leading", "discrepancy"):
            sp.add_argument("--weight", type=_int_list, help="weight p1,p2,...")
        if name == "discrepancy":
            sp.add_argument("--q", type=_int_list, help="toric divisor q1,q2,...")
        if name == "enumerate":
            sp.add_argument("--verdicts", action="store_true", help="also classify every type")
        if name in ("classify", "enumerate", "tables", "verify-tables"):
            sp.add_argument("--ledger", help="verdict ledger JSON (default: embedded, or $SINGFORGE_LEDGER)")
    return parser


def _envelope(command, args, code, result=None, error=None) -> str:
    env = {"schema_version": SCHEMA_VERSION, "command": command, "args": args, "exit_code": code}
    if error is not None:
        env["error"] = error
    if result is not None:
        env["result"] = result
    return json.dumps(env, indent=2, sort_keys=True, ensure_ascii=False)


def _echo(ns) -> dict:
    out = {}
    for k, v in sorted(vars(ns).items()):
        if k in ("command", "json", "markdown") or v is None or v is False:
            continue
        out[k] = list(v) if isinstance(v, tuple) else v
    return out


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        ns = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail(want_json, None, {}, exc, stdout, stderr)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    func = COMMANDS[ns.command][0]
    echo = _echo(ns)
    try:
        payload, text = func(ns)
    except _Mismatch as exc:
        if ns.json:
            print(_envelope(ns.command, echo, 4, exc.payload, str(exc)), file=stdout)
        else:
            print(str(exc), file=stdout)
        return 4
    except SingforgeError as exc:
        return _fail(ns.json, ns.command, echo, exc, stdout, stderr)
    if ns.json:
        print(_envelope(ns.command, echo, 0, payload), file=stdout)
    else:
        print(text if text is not None else json.dumps(payload, indent=2, sort_keys=True), file=stdout)
    return 0


def _fail(want_json, command, echo, exc, stdout, stderr) -> int:
    code = exc.exit_code
    kind = {2: "usage", 3: "precondition", 4: "invariant"}.get(code, "error")
    if want_json:
        print(_envelope(command, echo, code, error=f"{kind}: {exc}"), file=stdout)
    else:
        print(f"singforge: {kind} error: {exc}", file=stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
