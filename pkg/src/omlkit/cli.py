"""Command line front end.

Every subcommand builds one report: the command echo, a verdict per
check, optional witnesses, and command-specific data.  Text output is a
short fixed-format listing; --json emits the same report as JSON
(validating against report_schema.json).  Exit status is 0 when all
checks pass, 1 when some check fails, 2 for unusable input.

Targets are resolved in order: an existing file path, a builtin corpus
name (plus "o6", the non-orthomodular demonstration hexagon), then a
file under $OMLKIT_CORPUS_DIR.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import corpus, states, structfile, suite, terms
from .errors import (
    CustomPlusInvalid,
    CycleError,
    InvalidState,
    MalformedTable,
    NoBoundsError,
    NotAnRlse,
    NotLatticeOrdered,
    ParseError,
    UnknownLabel,
    UnknownName,
    ValidationError,
)
from .lattice import check_oml
from .rlse import (
    RlseTables,
    check_correspondence,
    check_derived_identities,
    check_r4_orthogonal_form,
    check_rlse,
    derived_lattice,
    is_boolean_ring,
    rlse_from_oml,
)

__all__ = ["main"]

_EMIT_COMMANDS = {"derive", "construct", "states-find"}


class _Usage(Exception):
    """Input that cannot be processed at all; maps to exit status 2."""


@dataclass
class _Target:
    kind: str
    name: str
    poset: object = None
    comp: dict | None = None
    ring: RlseTables | None = None
    events: states.NumericalEventSet | None = None
    states: tuple = ()


def _load_target(arg: str) -> _Target:
    path = Path(arg)
    text = None
    name = arg
    if path.is_file():
        text = path.read_text()
        name = path.name
    elif arg in corpus.RLSE_NAMES:
        return _Target("rlse", arg, ring=corpus.builtin(arg))
    elif arg in corpus.OML_NAMES:
        oml = corpus.builtin(arg)
        comp = {lab: oml.elements[oml.comp[i]] for i, lab in enumerate(oml.elements)}
        return _Target("oml", arg, poset=oml.poset, comp=comp)
    elif arg == "o6":
        poset, comp = corpus.o6_candidate()
        return _Target("oml", arg, poset=poset, comp=comp)
    else:
        base = os.environ.get("OMLKIT_CORPUS_DIR")
        if base:
            for cand in (Path(base) / arg, Path(base) / (arg + ".txt")):
                if cand.is_file():
                    text = cand.read_text()
                    break
    if text is None:
        raise _Usage(f"no such file or builtin structure: {arg}")
    sf = structfile.parse_structure(text)
    if sf.kind == "oml":
        poset, comp = structfile.to_oml_input(sf)
        return _Target("oml", name, poset=poset, comp=comp, states=sf.states)
    if sf.kind == "rlse":
        return _Target("rlse", name, ring=structfile.to_rlse(sf))
    return _Target("events", name, events=structfile.to_events(sf))


def _expect(target: _Target, kind: str, command: str) -> _Target:
    if target.kind != kind:
        raise _Usage(f"{command} needs an {kind} structure, got {target.kind}")
    return target


# ---------------------------------------------------------------------------
# Report assembly
# ---------------------------------------------------------------------------


def _witness(raw) -> dict | None:
    if not raw:
        return None
    out = {}
    for k, v in raw.items():
        out[str(k)] = v if isinstance(v, int) else str(v)
    return out


def _check(name, passed, detail=None, witness=None):
    return {"name": name, "passed": bool(passed), "detail": detail,
            "witness": _witness(witness)}


def _report(command, target, checks, data=None):
    return {
        "command": command,
        "target": target,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
        "data": data,
    }


def _oml_entries(report) -> list:
    entries = [_check(law, True) for law in report.passed_laws]
    if not report.passed:
        entries.append(_check(report.failed_law, False, witness=report.witness))
    return entries


def _axiom_entries(report) -> list:
    out = []
    for axiom in report.checked:
        failure = report.failure_for(axiom)
        if failure is None:
            out.append(_check(axiom, True))
        else:
            out.append(_check(axiom, False, str(failure),
                              witness=failure.assignment()))
    return out


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_check_oml(args):
    target = _expect(_load_target(args.file), "oml", "check-oml")
    report = check_oml(target.poset, target.comp)
    return _report("check-oml", target.name, _oml_entries(report))


def _cmd_check_rlse(args):
    target = _expect(_load_target(args.file), "rlse", "check-rlse")
    r = target.ring
    axioms = check_rlse(r)
    entries = _axiom_entries(axioms)
    if axioms.passed:
        derived = check_derived_identities(r)
        entries += _axiom_entries(derived)
        forms = check_r4_orthogonal_form(r)
        entries.append(_check(
            "orthogonal-addition-form", forms.agree and forms.r4_holds,
            None if forms.agree else "the two R4 readings disagree",
            witness=forms.orthogonal_failure.assignment()
            if forms.orthogonal_failure else None))
    both = check_correspondence(r)
    a, b = both.verdicts
    entries.append(_check("correspondence-verdicts-agree", a == b,
                          f"ring axioms {a}, lattice side {b}"))
    return _report("check-rlse", target.name, entries)


def _cmd_derive(args):
    target = _expect(_load_target(args.file), "rlse", "derive")
    try:
        oml = derived_lattice(target.ring)
    except NotAnRlse as exc:
        return _report("derive", target.name, _axiom_entries(exc.report))
    text = structfile.serialize_structure(structfile.from_oml(oml))
    return _report("derive", target.name, [_check("is-valid-ring", True)],
                   {"structure": text})


def _valid_oml(target: _Target):
    """check_oml on the target; (oml, None) or (None, failure report)."""
    report = check_oml(target.poset, target.comp)
    if not report.passed:
        return None, report
    return report.oml, None


def _cmd_construct(args):
    target = _expect(_load_target(args.file), "oml", "construct")
    oml, bad = _valid_oml(target)
    if oml is None:
        return _report("construct", target.name, _oml_entries(bad))
    plus = args.plus
    if plus.startswith("custom="):
        sf = structfile.parse_structure(Path(plus[7:]).read_text())
        if sf.kind != "rlse":
            raise _Usage("custom addition must come from an rlse file")
        plus = sf.oplus
    elif plus not in ("t1", "t2"):
        raise _Usage(f"--plus must be t1, t2 or custom=FILE, got {plus!r}")
    try:
        ring = rlse_from_oml(oml, plus)
    except CustomPlusInvalid as exc:
        f = exc.failure
        return _report("construct", target.name,
                       [_check(f.axiom, False, str(f), witness=f.assignment())])
    text = structfile.serialize_structure(structfile.from_rlse(ring))
    return _report("construct", target.name,
                   [_check("addition-is-valid", True)], {"structure": text})


def _cmd_terms_enumerate(args):
    ts = terms.enumerate_canonical_terms()
    sets = terms.canonical_index_sets()
    data = {"terms": [
        {"index": i, "index_set": sorted(s), "term": terms.format_term(t)}
        for i, (s, t) in enumerate(zip(sets, ts))
    ]}
    return _report("terms-enumerate", None,
                   [_check("canonical-terms", len(ts) == 96, f"{len(ts)} terms")],
                   data)


def _filter_corpus(names):
    omls = []
    for name in names:
        if name not in corpus.OML_NAMES:
            raise _Usage(f"not a builtin lattice: {name}")
        omls.append(corpus.builtin(name))
    return tuple(omls)


def _cmd_terms_filter(args):
    names = tuple(args.corpus.split(","))
    omls = _filter_corpus(names)
    result = terms.filter_symmetric_difference_terms(omls)
    classes = [{
        "index_sets": [sorted(s) for s in cls.index_sets],
        "representative": terms.format_term(cls.terms[0]),
    } for cls in result.survivors]
    eliminated = [{
        "index_set": sorted(e.index_set),
        "condition": e.condition,
        "corpus_member": names[e.corpus_position],
        "witness": _witness(e.witness),
    } for e in result.eliminated]
    data = {"classes": classes, "eliminated": eliminated,
            "corpus": list(names)}
    entry = _check("classification", True,
                   f"{len(classes)} surviving classes, "
                   f"{len(eliminated)} candidates eliminated")
    return _report("terms-filter", ",".join(names), [entry], data)


def _cmd_states_find(args):
    target = _expect(_load_target(args.file), "oml", "states-find")
    oml, bad = _valid_oml(target)
    if oml is None:
        return _report("states-find", target.name, _oml_entries(bad))
    result = states.find_full_state_set(oml)
    if not result.ok:
        entry = _check("full-state-set", False,
                       "no state separates the witness pair",
                       witness={"x": result.failure.x, "y": result.failure.y})
        return _report("states-find", target.name, [entry])
    text = structfile.serialize_structure(structfile.from_oml(oml, result.states))
    entry = _check("full-state-set", True, f"{len(result.states)} states")
    return _report("states-find", target.name, [entry],
                   {"structure": text, "count": len(result.states)})


def _cmd_states_check_full(args):
    target = _expect(_load_target(args.file), "oml", "states-check-full")
    oml, bad = _valid_oml(target)
    if oml is None:
        return _report("states-check-full", target.name, _oml_entries(bad))
    if not target.states:
        raise _Usage("the target has no STATES section")
    try:
        report = states.check_full(oml, target.states)
    except InvalidState as exc:
        entry = _check("states-valid", False,
                       f"state {exc.position} fails {exc.failure}")
        return _report("states-check-full", target.name, [entry])
    entries = [_check("states-valid", True, f"{len(target.states)} states")]
    entries.append(_check("order-determining", report.passed,
                          None if report.passed else "order not recovered",
                          witness=report.witness))
    return _report("states-check-full", target.name, entries)


def _ring_test_entries(r: RlseTables) -> list:
    axioms = check_rlse(r)
    if not axioms.passed:
        return _axiom_entries(axioms)
    report = is_boolean_ring(r)
    entries = [_check("valid-ring", True)]
    for label, route in (("identity-route", report.identity_route),
                         ("ring-route", report.ring_route)):
        failure = route.failures[0] if route.failures else None
        entries.append(_check(label, route.passed,
                              str(failure) if failure else None,
                              witness=failure.assignment() if failure else None))
    w = report.witness
    entries.append(_check("boolean-ring", report.is_boolean_ring,
                          str(w) if w else None,
                          witness=w.assignment() if w else None))
    return entries


def _event_test_entries(ev: states.NumericalEventSet) -> list:
    try:
        report = states.boolean_test(ev)
    except NotLatticeOrdered as exc:
        return [_check("lattice-ordered", False, str(exc))]
    if report.is_boolean:
        return [_check("ring-inequality", True,
                       "p+q-2(p^q) never exceeds 1; addition matches "
                       "the symmetric difference")]
    w = report.witness
    detail = (f"p+q-2(p^q) reaches {w['value']} at p={w['p']}, q={w['q']} "
              f"in state {w['state']}")
    return [_check("ring-inequality", False, detail, witness=w)]


def _cmd_boolean_test(args):
    target = _load_target(args.file)
    if target.kind == "rlse":
        return _report("boolean-test", target.name,
                       _ring_test_entries(target.ring))
    if target.kind == "events":
        return _report("boolean-test", target.name,
                       _event_test_entries(target.events))
    oml, bad = _valid_oml(target)
    if oml is None:
        return _report("boolean-test", target.name, _oml_entries(bad))
    result = states.find_full_state_set(oml)
    if not result.ok:
        entry = _check("full-state-set", False,
                       "no state separates the witness pair",
                       witness={"x": result.failure.x, "y": result.failure.y})
        return _report("boolean-test", target.name, [entry])
    ev = states.events_from_states(oml, result.states)
    entries = [_check("full-state-set", True, f"{len(result.states)} states")]
    entries += _event_test_entries(ev)
    return _report("boolean-test", target.name, entries,
                   {"states": len(result.states)})


def _cmd_verify_all(args):
    entries = []
    for r in suite.run_all():
        entries.append(_check(f"criterion-{r.number}", r.passed,
                              f"{r.title}: {r.detail}"))
    return _report("verify-all", None, entries)


_COMMANDS = {
    "check-oml": _cmd_check_oml,
    "check-rlse": _cmd_check_rlse,
    "derive": _cmd_derive,
    "construct": _cmd_construct,
    "terms-enumerate": _cmd_terms_enumerate,
    "terms-filter": _cmd_terms_filter,
    "states-find": _cmd_states_find,
    "states-check-full": _cmd_states_check_full,
    "boolean-test": _cmd_boolean_test,
    "verify-all": _cmd_verify_all,
}


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _strip_witnesses(report):
    for c in report["checks"]:
        c["witness"] = None
    data = report.get("data")
    if data and "eliminated" in data:
        for row in data["eliminated"]:
            row["witness"] = None


def _render_text(report) -> str:
    lines = []
    data = report.get("data") or {}
    emit = report["command"] in _EMIT_COMMANDS and report["passed"]
    if not emit:
        head = report["command"]
        if report["target"]:
            head += " " + report["target"]
        lines.append(f"{head}: {'PASS' if report['passed'] else 'FAIL'}")
        for c in report["checks"]:
            mark = "ok" if c["passed"] else "FAIL"
            line = f"  [{mark}] {c['name']}"
            if c["detail"]:
                line += f": {c['detail']}"
            lines.append(line)
            if c["witness"]:
                pairs = " ".join(f"{k}={v}" for k, v in sorted(c["witness"].items()))
                lines.append(f"       witness: {pairs}")
    if "structure" in data:
        lines.append(data["structure"].rstrip("\n"))
    if "terms" in data:
        for row in data["terms"]:
            labels = ",".join(str(v) for v in row["index_set"]) or "-"
            lines.append(f"{row['index']:>2}  {{{labels}}}  {row['term']}")
    if "classes" in data:
        lines.append(f"surviving classes: {len(data['classes'])}")
        for pos, cls in enumerate(data["classes"], start=1):
            sets = " ".join("{" + ",".join(map(str, s)) + "}"
                            for s in cls["index_sets"])
            lines.append(f"  class {pos}: {sets}")
            lines.append(f"    representative: {cls['representative']}")
        lines.append(f"eliminated candidates: {len(data['eliminated'])}")
        for row in data["eliminated"]:
            if row["witness"] is None:
                continue
            sets = ",".join(map(str, row["index_set"]))
            pairs = " ".join(f"{k}={v}" for k, v in sorted(row["witness"].items()))
            lines.append(f"  {{{sets}}}: {row['condition']} fails on "
                         f"{row['corpus_member']} at {pairs}")
    return "\n".join(lines)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omlkit",
        description="verification toolkit for orthomodular lattices and "
                    "their event rings",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit the report as JSON")
    common.add_argument("--witnesses", action="store_true",
                        help="include counterexample assignments")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, with_file=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if with_file:
            p.add_argument("file", help="structure file or builtin name")
        return p

    add("check-oml", "verify the orthomodular lattice laws")
    add("check-rlse", "verify the ring axioms and their consequences")
    add("derive", "emit the lattice of a valid ring")
    p = add("construct", "equip a lattice with an addition")
    p.add_argument("--plus", default="t1",
                   help="t1, t2 or custom=FILE (default t1)")
    add("terms-enumerate", "list the 96 canonical binary terms", with_file=False)
    p = add("terms-filter", "classify the addition candidates", with_file=False)
    p.add_argument("--corpus", default=",".join(suite.FILTER_CORPUS),
                   help="comma-separated builtin lattice names")
    add("states-find", "search for a full state set")
    add("states-check-full", "check that the listed states recover the order")
    add("boolean-test", "decide Booleanness of a ring, lattice or event set")
    add("verify-all", "run the whole verification suite", with_file=False)
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        report = _COMMANDS[args.command](args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValidationError, UnknownLabel, UnknownName,
            MalformedTable, CycleError, NoBoundsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not args.witnesses:
        _strip_witnesses(report)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(_render_text(report))
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
