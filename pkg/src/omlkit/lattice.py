"""Finite bounded posets and orthomodular lattices, table-based.

Elements are kept as dense indices 0..n-1 with a label per index; the bottom
element sits at index 0 after loading.  All lattice operations are exhaustive
table computations, so every verdict comes with a concrete witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CycleError,
    NoBoundsError,
    OracleMismatch,
    UnknownLabel,
    ValidationError,
)

__all__ = [
    "FinitePoset",
    "FiniteOml",
    "OmlReport",
    "build_poset",
    "check_oml",
    "meet_of",
    "join_of",
    "comp_of",
    "direct_product",
    "lattice_tables",
    "is_distributive",
    "orthomodular_identity_ok",
    "orthomodular_implication_ok",
]


@dataclass(frozen=True)
class FinitePoset:
    """A validated finite bounded poset.

    leq is the full reflexive-transitive boolean relation, row-major:
    leq[i][j] is True iff element i is below element j.
    """

    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise UnknownLabel(label) from None

    def up_masks(self) -> list[int]:
        """Per element, the bitmask of everything above it (rows)."""
        return [_row_mask(row) for row in self.leq]

    def down_masks(self) -> list[int]:
        """Per element, the bitmask of everything below it (columns)."""
        n = self.n
        masks = [0] * n
        for i, row in enumerate(self.leq):
            bit = 1 << i
            for j in range(n):
                if row[j]:
                    masks[j] |= bit
        return masks


def _row_mask(row) -> int:
    m = 0
    for j, v in enumerate(row):
        if v:
            m |= 1 << j
    return m


def _validate_poset(elements, rows) -> tuple[int, int]:
    """Check reflexivity, antisymmetry, transitivity, unique bounds.

    rows is a list of int bitmasks (row i = everything above i).
    Returns (bottom, top) indices.
    """
    n = len(elements)
    full = (1 << n) - 1
    for i in range(n):
        if not rows[i] & (1 << i):
            raise ValidationError(f"order not reflexive at {elements[i]!r}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i] & (1 << j) and rows[j] & (1 << i):
                raise CycleError((elements[i], elements[j]))
    for i in range(n):
        m = rows[i]
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            if rows[j] & ~rows[i]:
                raise ValidationError(
                    f"order not transitive through {elements[i]!r} <= {elements[j]!r}"
                )
    bottoms = [i for i in range(n) if rows[i] == full]
    cols = [0] * n
    for i in range(n):
        m = rows[i]
        while m:
            low = m & -m
            cols[low.bit_length() - 1] |= 1 << i
            m ^= low
    tops = [j for j in range(n) if cols[j] == full]
    if len(bottoms) != 1:
        raise NoBoundsError(f"poset has {len(bottoms)} minimum elements, wants 1")
    if len(tops) != 1:
        raise NoBoundsError(f"poset has {len(tops)} maximum elements, wants 1")
    if bottoms[0] == tops[0]:
        raise NoBoundsError("bottom equals top; the two-element chain is the smallest structure")
    return bottoms[0], tops[0]


def _poset_from_masks(elements, rows) -> FinitePoset:
    bottom, top = _validate_poset(elements, rows)
    n = len(elements)
    leq = tuple(
        tuple(bool(rows[i] & (1 << j)) for j in range(n)) for i in range(n)
    )
    return FinitePoset(tuple(elements), leq, bottom, top)


def build_poset(labels, pairs) -> FinitePoset:
    """Build a poset from labels and order pairs (covers or any leq pairs).

    The reflexive-transitive closure is taken, then antisymmetry and the
    existence of unique bounds are verified.  The element order is kept
    except that the bottom element is moved to index 0.
    """
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise ValidationError("duplicate element labels")
    pos = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    rows = [1 << i for i in range(n)]
    for a, b in pairs:
        if a not in pos:
            raise UnknownLabel(a)
        if b not in pos:
            raise UnknownLabel(b)
        rows[pos[a]] |= 1 << pos[b]
    # Transitive closure: grow each row by the rows it can see, to a fixpoint.
    changed = True
    while changed:
        changed = False
        for i in range(n):
            m = rows[i]
            acc = m
            mm = m
            while mm:
                low = mm & -mm
                acc |= rows[low.bit_length() - 1]
                mm ^= low
            if acc != m:
                rows[i] = acc
                changed = True

    bottom, _ = _validate_poset(labels, rows)
    if bottom != 0:
        order = [bottom] + [i for i in range(n) if i != bottom]
        labels = [labels[i] for i in order]
        old_rows = rows
        rows = []
        for i in order:
            m = 0
            for new_j, old_j in enumerate(order):
                if old_rows[i] & (1 << old_j):
                    m |= 1 << new_j
            rows.append(m)
    return _poset_from_masks(labels, rows)


# ---------------------------------------------------------------------------
# Lattice tables and the orthomodular checks
# ---------------------------------------------------------------------------


def lattice_tables(poset: FinitePoset):
    """Compute meet and join tables from the order, or report a failure.

    Returns (meet, join, None) on success, where the tables are index-valued
    and row-major, or (None, None, (kind, (x_label, y_label))) naming the
    first pair without an infimum or supremum.
    """
    n = poset.n
    down = poset.down_masks()
    up = poset.up_masks()
    meet: list[list[int]] = [[0] * n for _ in range(n)]
    join: list[list[int]] = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            s = down[x] & down[y]
            z = _max_of(s, down)
            if z < 0:
                return None, None, ("meet", (poset.elements[x], poset.elements[y]))
            meet[x][y] = meet[y][x] = z
            s = up[x] & up[y]
            z = _min_of(s, up)
            if z < 0:
                return None, None, ("join", (poset.elements[x], poset.elements[y]))
            join[x][y] = join[y][x] = z
    return (
        tuple(tuple(r) for r in meet),
        tuple(tuple(r) for r in join),
        None,
    )


def _max_of(s: int, down: list[int]) -> int:
    """Greatest element of the bitmask set s, or -1 if there is none."""
    m = s
    while m:
        low = m & -m
        z = low.bit_length() - 1
        m ^= low
        if down[z] & s == s:
            return z
    return -1


def _min_of(s: int, up: list[int]) -> int:
    m = s
    while m:
        low = m & -m
        z = low.bit_length() - 1
        m ^= low
        if up[z] & s == s:
            return z
    return -1


@dataclass(frozen=True)
class FiniteOml:
    """A validated finite orthomodular lattice with precomputed tables.

    meet/join are n x n index tables, comp is an index vector.  Instances
    are produced by check_oml and compare equal iff all tables agree.
    """

    poset: FinitePoset
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    comp: tuple[int, ...]

    @property
    def elements(self) -> tuple[str, ...]:
        return self.poset.elements

    @property
    def n(self) -> int:
        return self.poset.n

    def index(self, label: str) -> int:
        return self.poset.index(label)

    def leq(self, x: int, y: int) -> bool:
        return self.poset.leq[x][y]

    def orthogonal(self, x: int, y: int) -> bool:
        """x is below the complement of y."""
        return self.poset.leq[x][self.comp[y]]


@dataclass(frozen=True)
class OmlReport:
    """Outcome of check_oml: the validated lattice or the first failure."""

    oml: FiniteOml | None
    failed_law: str | None = None
    witness: dict[str, str] | None = None
    passed_laws: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.oml is not None


#: Laws verified by check_oml, in checking order.
OML_LAWS = (
    "meet-exists",
    "join-exists",
    "involution",
    "antitone",
    "complement-law",
    "orthomodular-law",
)


def check_oml(poset: FinitePoset, comp: dict) -> OmlReport:
    """Verify that (poset, comp) is an orthomodular lattice.

    comp maps labels to labels.  Laws are checked in OML_LAWS order and the
    first failure is reported with its witness pair; on success the report
    carries the fully tabulated lattice.
    """
    n = poset.n
    els = poset.elements
    cvec = []
    for lab in els:
        if lab not in comp:
            raise UnknownLabel(lab)
        cvec.append(poset.index(comp[lab]))
    extra = set(comp) - set(els)
    if extra:
        raise UnknownLabel(sorted(extra)[0])

    passed: list[str] = []

    meet, join, fail = lattice_tables(poset)
    if fail is not None:
        kind, pair = fail
        if kind == "join":
            passed.append("meet-exists")
        law = "meet-exists" if kind == "meet" else "join-exists"
        return OmlReport(None, law, {"x": pair[0], "y": pair[1]}, tuple(passed))
    passed += ["meet-exists", "join-exists"]

    for x in range(n):
        if cvec[cvec[x]] != x:
            return OmlReport(None, "involution", {"x": els[x]}, tuple(passed))
    passed.append("involution")

    leq = poset.leq
    for x in range(n):
        for y in range(n):
            if leq[x][y] and not leq[cvec[y]][cvec[x]]:
                return OmlReport(
                    None, "antitone", {"x": els[x], "y": els[y]}, tuple(passed)
                )
    passed.append("antitone")

    for x in range(n):
        if meet[x][cvec[x]] != poset.bottom or join[x][cvec[x]] != poset.top:
            return OmlReport(None, "complement-law", {"x": els[x]}, tuple(passed))
    passed.append("complement-law")

    ok, witness = orthomodular_identity_ok(meet, join, cvec)
    if not ok:
        x, y = witness
        return OmlReport(
            None, "orthomodular-law", {"x": els[x], "y": els[y]}, tuple(passed)
        )
    passed.append("orthomodular-law")

    return OmlReport(FiniteOml(poset, meet, join, tuple(cvec)), None, None, tuple(passed))


def orthomodular_identity_ok(meet, join, comp):
    """Brute-force the identity ((x^y) v x') ^ x = x^y over all pairs."""
    n = len(comp)
    for x in range(n):
        mx = meet[x]
        for y in range(n):
            xy = mx[y]
            if meet[join[xy][comp[x]]][x] != xy:
                return False, (x, y)
    return True, None


def orthomodular_implication_ok(leq, meet, join, comp):
    """Brute-force the conditional form: x <= y implies y = x v (x' ^ y)."""
    n = len(comp)
    for x in range(n):
        for y in range(n):
            if leq[x][y] and join[x][meet[comp[x]][y]] != y:
                return False, (x, y)
    return True, None


# ---------------------------------------------------------------------------
# Label-level operations
# ---------------------------------------------------------------------------


def meet_of(oml: FiniteOml, x: str, y: str) -> str:
    return oml.elements[oml.meet[oml.index(x)][oml.index(y)]]


def join_of(oml: FiniteOml, x: str, y: str) -> str:
    return oml.elements[oml.join[oml.index(x)][oml.index(y)]]


def comp_of(oml: FiniteOml, x: str) -> str:
    return oml.elements[oml.comp[oml.index(x)]]


def direct_product(a: FiniteOml, b: FiniteOml) -> FiniteOml:
    """Componentwise product of two lattices, revalidated from scratch."""
    na, nb = a.n, b.n
    labels = [
        f"({la},{lb})" for la in a.elements for lb in b.elements
    ]
    aleq, bleq = a.poset.leq, b.poset.leq
    rows = []
    for xa in range(na):
        ra = aleq[xa]
        for xb in range(nb):
            rb = bleq[xb]
            m = 0
            k = 0
            for ya in range(na):
                if ra[ya]:
                    for yb in range(nb):
                        if rb[yb]:
                            m |= 1 << (k + yb)
                k += nb
            rows.append(m)
    poset = _poset_from_masks(labels, rows)
    comp = {
        labels[xa * nb + xb]: labels[a.comp[xa] * nb + b.comp[xb]]
        for xa in range(na)
        for xb in range(nb)
    }
    report = check_oml(poset, comp)
    if not report.passed:
        raise OracleMismatch(
            f"product of valid lattices failed {report.failed_law} at {report.witness}"
        )
    return report.oml


def is_distributive(oml: FiniteOml):
    """Exhaustive distributivity test; returns (verdict, witness_labels)."""
    n = oml.n
    meet, join = oml.meet, oml.join
    for x in range(n):
        mx = meet[x]
        for y in range(n):
            jy = join[y]
            lhs = [mx[v] for v in jy]
            ja = join[mx[y]]
            rhs = [ja[v] for v in mx]
            if lhs != rhs:
                z = next(i for i in range(n) if lhs[i] != rhs[i])
                els = oml.elements
                return False, (els[x], els[y], els[z])
    return True, None
