"""Plain-text structure files for lattices, event rings and event sets.

The format is line oriented.  '#' starts a comment, blank lines are
skipped, tokens are separated by whitespace (so labels cannot contain
spaces).  A file starts with a KIND line and then sections:

    KIND oml                    KIND rlse               KIND events
    ELEMENTS                    ELEMENTS                ELEMENTS
    0 a a' b b' 1               {} {1} {2} {1,2}        p q r
    COVERS                      ZERO {}                 EVENTS
    0 a                         ONE {1,2}               p 0 0 1
    ...                         OPLUS                   q 1/2 1 0
    COMPLEMENT                  {} {1} {2} {1,2}        ...
    0 1                         ...
    ...                         TIMES
    STATES                      ...
    0 1 0 1 0 1

An oml file gives the order either as COVERS or as LEQ pairs (reflexive
and transitive pairs may be omitted either way), one complement pair per
line, and optionally STATES rows with one rational per element.  An rlse
file lists the operation tables row by row in element order; ZERO and
ONE default to the first and last element.  An events file gives one row
per member: its label followed by its value in each state.  Rationals
are written in Fraction notation (1/2, 3, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, UnknownLabel, ValidationError
from .lattice import FiniteOml, FinitePoset, build_poset
from .rlse import RlseTables
from .states import NumericalEventSet, State

__all__ = [
    "StructureFile",
    "parse_structure",
    "serialize_structure",
    "to_oml_input",
    "to_rlse",
    "to_events",
    "from_oml",
    "from_rlse",
    "from_events",
]

_KINDS = ("oml", "rlse", "events")
_SECTIONS = {
    "oml": {"ELEMENTS", "COVERS", "LEQ", "COMPLEMENT", "STATES"},
    "rlse": {"ELEMENTS", "ZERO", "ONE", "OPLUS", "TIMES"},
    "events": {"ELEMENTS", "EVENTS"},
}


@dataclass
class StructureFile:
    """Parsed but not yet validated file contents."""

    kind: str
    elements: tuple[str, ...] = ()
    covers: tuple[tuple[str, str], ...] = ()
    leq: tuple[tuple[str, str], ...] = ()
    complement: tuple[tuple[str, str], ...] = ()
    zero: str | None = None
    one: str | None = None
    oplus: tuple[tuple[str, ...], ...] = ()
    times: tuple[tuple[str, ...], ...] = ()
    states: tuple[tuple[Fraction, ...], ...] = ()
    events: tuple[tuple[str, tuple[Fraction, ...]], ...] = ()


def _fraction(token: str, lineno: int, col: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {token!r}", lineno, col) from None


def parse_structure(text: str) -> StructureFile:
    """Parse file text; raises ParseError with line and column on errors."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty file", 1, 1)

    lineno, head = lines[0]
    tokens = head.split()
    if tokens[0] != "KIND" or len(tokens) != 2:
        raise ParseError("expected 'KIND oml|rlse|events'", lineno,
                         head.index(tokens[0]) + 1)
    kind = tokens[1]
    if kind not in _KINDS:
        raise ParseError(f"unknown kind {kind!r}", lineno, head.index(kind) + 1)

    sf = StructureFile(kind)
    known = _SECTIONS[kind]
    seen = set()
    section = None
    rows: dict[str, list] = {name: [] for name in known}

    for lineno, body in lines[1:]:
        tokens = body.split()
        first = tokens[0]
        if first in _SECTIONS["oml"] | _SECTIONS["rlse"] | _SECTIONS["events"]:
            if first not in known:
                raise ParseError(f"section {first} not allowed in a {kind} file",
                                 lineno, body.index(first) + 1)
            if first in seen:
                raise ParseError(f"duplicate section {first}", lineno,
                                 body.index(first) + 1)
            seen.add(first)
            if first in ("ZERO", "ONE"):
                if len(tokens) != 2:
                    raise ParseError(f"{first} takes exactly one label", lineno, 1)
                if first == "ZERO":
                    sf.zero = tokens[1]
                else:
                    sf.one = tokens[1]
                section = None
            else:
                section = first
                if len(tokens) > 1:
                    raise ParseError("section header takes no arguments", lineno,
                                     body.index(tokens[1]) + 1)
            continue
        if section is None:
            raise ParseError(f"content before any section: {first!r}", lineno,
                             body.index(first) + 1)
        rows[section].append((lineno, body, tokens))

    def pairs(name):
        out = []
        for lineno, body, tokens in rows[name]:
            if len(tokens) != 2:
                raise ParseError(f"{name} lines need exactly two labels", lineno, 1)
            out.append((tokens[0], tokens[1]))
        return tuple(out)

    sf.elements = tuple(t for _, _, tokens in rows.get("ELEMENTS", ())
                        for t in tokens)
    if not sf.elements:
        raise ParseError("missing ELEMENTS section", lineno, 1)
    if len(set(sf.elements)) != len(sf.elements):
        raise ParseError("duplicate element label", lineno, 1)
    n = len(sf.elements)

    if kind == "oml":
        sf.covers = pairs("COVERS")
        sf.leq = pairs("LEQ")
        sf.complement = pairs("COMPLEMENT")
        if not sf.covers and not sf.leq:
            raise ParseError("an oml file needs a COVERS or LEQ section", lineno, 1)
        if not sf.complement:
            raise ParseError("missing COMPLEMENT section", lineno, 1)
        states = []
        for ln, body, tokens in rows["STATES"]:
            if len(tokens) != n:
                raise ParseError(f"a state row needs {n} values, got {len(tokens)}",
                                 ln, 1)
            states.append(tuple(_fraction(t, ln, body.index(t) + 1) for t in tokens))
        sf.states = tuple(states)
    elif kind == "rlse":
        for name in ("OPLUS", "TIMES"):
            table = []
            for ln, body, tokens in rows[name]:
                if len(tokens) != n:
                    raise ParseError(f"a {name} row needs {n} labels, got {len(tokens)}",
                                     ln, 1)
                table.append(tuple(tokens))
            if len(table) != n:
                raise ParseError(f"{name} needs {n} rows, got {len(table)}", lineno, 1)
            if name == "OPLUS":
                sf.oplus = tuple(table)
            else:
                sf.times = tuple(table)
        if sf.zero is None:
            sf.zero = sf.elements[0]
        if sf.one is None:
            sf.one = sf.elements[-1]
    else:
        out = []
        width = None
        for ln, body, tokens in rows["EVENTS"]:
            if len(tokens) < 2:
                raise ParseError("an EVENTS row needs a label and values", ln, 1)
            if width is None:
                width = len(tokens) - 1
            elif len(tokens) - 1 != width:
                raise ParseError(f"an EVENTS row needs {width} values", ln, 1)
            vals = tuple(_fraction(t, ln, body.index(t) + 1) for t in tokens[1:])
            out.append((tokens[0], vals))
        if len(out) != n:
            raise ParseError(f"EVENTS needs one row per element, got {len(out)}",
                             lineno, 1)
        sf.events = tuple(out)
    return sf


# ---------------------------------------------------------------------------
# Building structures out of parsed files
# ---------------------------------------------------------------------------


def to_oml_input(sf: StructureFile):
    """(poset, complement dict) from an oml file, ready for check_oml."""
    if sf.kind != "oml":
        raise ValidationError(f"expected an oml file, got {sf.kind}")
    poset = build_poset(sf.elements, sf.covers + sf.leq)
    comp = {}
    labels = set(sf.elements)
    for a, b in sf.complement:
        if a not in labels or b not in labels:
            raise ValidationError(f"complement pair ({a}, {b}) uses an unknown label")
        if a in comp and comp[a] != b:
            raise ValidationError(f"conflicting complements for {a}")
        comp[a] = b
        comp.setdefault(b, a)
    return poset, comp


def to_rlse(sf: StructureFile) -> RlseTables:
    if sf.kind != "rlse":
        raise ValidationError(f"expected an rlse file, got {sf.kind}")
    return RlseTables.from_labels(sf.elements, sf.oplus, sf.times, sf.zero, sf.one)


def to_events(sf: StructureFile) -> NumericalEventSet:
    """Rebuild the event set; states are the columns of the value matrix."""
    if sf.kind != "events":
        raise ValidationError(f"expected an events file, got {sf.kind}")
    order = {lab: i for i, (lab, _) in enumerate(sf.events)}
    for lab in sf.elements:
        if lab not in order:
            raise UnknownLabel(f"no EVENTS row for element {lab!r}")
    matrix = dict(sf.events)
    vectors = tuple(matrix[lab] for lab in sf.elements)
    width = len(vectors[0]) if vectors else 0
    cols = tuple(State(tuple(vec[j] for vec in vectors)) for j in range(width))
    return NumericalEventSet(sf.elements, cols, vectors)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _wrap(labels, per_line=12):
    return "\n".join(" ".join(labels[i:i + per_line])
                     for i in range(0, len(labels), per_line))


def _cover_pairs(poset: FinitePoset):
    """Transitive reduction of the strict order."""
    n = len(poset.elements)
    leq = poset.leq
    up = poset.up_masks()
    down = poset.down_masks()
    out = []
    for x in range(n):
        for y in range(n):
            if x == y or not leq[x][y]:
                continue
            between = up[x] & down[y] & ~(1 << x) & ~(1 << y)
            if not between:
                out.append((poset.elements[x], poset.elements[y]))
    return out


def from_oml(oml: FiniteOml, states=()) -> StructureFile:
    sf = StructureFile("oml")
    sf.elements = oml.elements
    sf.covers = tuple(_cover_pairs(oml.poset))
    sf.complement = tuple(
        (lab, oml.elements[oml.comp[i]]) for i, lab in enumerate(oml.elements)
    )
    sf.states = tuple(s.values if isinstance(s, State) else tuple(s) for s in states)
    return sf


def from_rlse(r: RlseTables) -> StructureFile:
    sf = StructureFile("rlse")
    sf.elements = r.elements
    sf.zero = r.elements[r.zero]
    sf.one = r.elements[r.one]
    sf.oplus = tuple(tuple(r.elements[v] for v in row) for row in r.oplus)
    sf.times = tuple(tuple(r.elements[v] for v in row) for row in r.times)
    return sf


def from_events(ev: NumericalEventSet) -> StructureFile:
    sf = StructureFile("events")
    sf.elements = ev.elements
    sf.events = tuple(zip(ev.elements, ev.events))
    return sf


def serialize_structure(sf: StructureFile) -> str:
    lines = [f"KIND {sf.kind}", "ELEMENTS", _wrap(sf.elements)]
    if sf.kind == "oml":
        lines.append("COVERS")
        lines += [f"{a} {b}" for a, b in sf.covers]
        if sf.leq:
            lines.append("LEQ")
            lines += [f"{a} {b}" for a, b in sf.leq]
        lines.append("COMPLEMENT")
        lines += [f"{a} {b}" for a, b in sf.complement]
        if sf.states:
            lines.append("STATES")
            lines += [" ".join(str(v) for v in row) for row in sf.states]
    elif sf.kind == "rlse":
        lines.append(f"ZERO {sf.zero}")
        lines.append(f"ONE {sf.one}")
        lines.append("OPLUS")
        lines += [" ".join(row) for row in sf.oplus]
        lines.append("TIMES")
        lines += [" ".join(row) for row in sf.times]
    else:
        lines.append("EVENTS")
        lines += [f"{lab} " + " ".join(str(v) for v in vec)
                  for lab, vec in sf.events]
    return "\n".join(lines) + "\n"
