"""Multigraded and graded Betti tables, t_a, and the m2-style printer."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .core import MonomialIdeal, SqfMonomial, monomial_names
from .errors import OutOfRange, ParseError
from .homology import (
    DEFAULT_FACE_CAP,
    FieldSpec,
    RATIONALS,
    reduced_homology_ranks,
    taylor_faces_below,
)
from .lattice import DEFAULT_LATTICE_CAP, build_lattice


class BettiTable:
    """Betti numbers of S/I over a fixed field.

    multigraded maps (i, m) to a positive rank; graded aggregates by
    total degree, graded[(i, j)] = sum of multigraded[(i, m)] over
    deg m = j.  t maps a in 1..pd to max{j : graded[(a, j)] > 0}.
    """

    __slots__ = ("ideal", "field", "multigraded", "graded", "pd", "t")

    def __init__(
        self,
        ideal: MonomialIdeal,
        field: FieldSpec,
        multigraded: dict[tuple[int, SqfMonomial], int],
        graded: dict[tuple[int, int], int],
        pd: int,
        t: dict[int, int],
    ):
        self.ideal = ideal
        self.field = field
        self.multigraded = multigraded
        self.graded = graded
        self.pd = pd
        self.t = t

    def totals(self) -> tuple[int, ...]:
        """(beta_0, beta_1, ..., beta_pd)."""
        out = [0] * (self.pd + 1)
        for (i, _), rank in self.graded.items():
            out[i] += rank
        return tuple(out)

    def __repr__(self) -> str:
        return (
            f"BettiTable(pd={self.pd}, totals={self.totals()}, "
            f"field={self.field.label})"
        )


def multigraded_betti(
    I: MonomialIdeal,
    i: int,
    m: SqfMonomial,
    field: FieldSpec = RATIONALS,
    face_cap: int = DEFAULT_FACE_CAP,
) -> int:
    """beta_{i,m}(S/I): reduced homology of the Taylor faces below m.

    Zero whenever m is not a join of generators (equivalently, not an
    lcm-lattice element): only those multidegrees carry Betti numbers,
    and the homology formula reads off the rest.  i = 0 is the free rank
    of S/I itself: 1 at multidegree 1.
    """
    if i < 0:
        raise OutOfRange(f"homological degree {i} is negative")
    if i == 0:
        return 1 if m.is_one else 0
    dividing = 0
    for g in I.gens:
        if g.divides(m):
            dividing |= g.mask
    if dividing != m.mask:
        return 0
    faces = taylor_faces_below(I, m, cap=face_cap)
    return reduced_homology_ranks(faces, field).h(i - 2)


def betti_table(
    I: MonomialIdeal,
    field: FieldSpec = RATIONALS,
    threads: int = 1,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    face_cap: int = DEFAULT_FACE_CAP,
) -> BettiTable:
    """The full Betti table, iterating multidegrees over LCM(I).

    Only lattice elements can carry nonzero multigraded ranks, so the
    iteration is over LCM(I) rather than all 2^n square-free monomials.
    Per-multidegree homology runs are independent; with threads > 1 they
    are farmed out to a pool and reassembled in lattice order, so the
    result does not depend on scheduling.
    """
    lat = build_lattice(I, cap=lattice_cap)
    q = len(I.gens)

    def ranks_for(m: SqfMonomial) -> list[int]:
        faces = taylor_faces_below(I, m, cap=face_cap)
        ranks = reduced_homology_ranks(faces, field)
        return [ranks.h(i - 2) for i in range(1, q + 1)]

    work = [m for m in lat.elements if not m.is_one]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            computed = list(pool.map(ranks_for, work))
    else:
        computed = [ranks_for(m) for m in work]

    multigraded: dict[tuple[int, SqfMonomial], int] = {}
    multigraded[(0, SqfMonomial.one())] = 1
    for m, hs in zip(work, computed):
        for i, rank in enumerate(hs, start=1):
            if rank:
                multigraded[(i, m)] = rank
    graded: dict[tuple[int, int], int] = {}
    for (i, m), rank in multigraded.items():
        key = (i, m.degree)
        graded[key] = graded.get(key, 0) + rank
    pd = max(i for i, _ in graded)
    t = {}
    for a in range(1, pd + 1):
        degs = [j for (i, j) in graded if i == a]
        if degs:
            t[a] = max(degs)
    return BettiTable(I, field, multigraded, graded, pd, t)


def t_max(table: BettiTable, a: int) -> int:
    """t_a = max{j : beta_{a,j}(S/I) != 0}."""
    if not 1 <= a <= table.pd:
        raise OutOfRange(f"a={a} outside 1..pd={table.pd}")
    return table.t[a]


def format_betti_m2(table: BettiTable) -> str:
    """The standard computer-algebra table layout.

    Columns are homological degrees, rows are j - i, zero entries print
    as a dot.  Right-aligned columns with single-space separators.
    """
    cols = list(range(table.pd + 1))
    rows_lo = min(j - i for (i, j) in table.graded)
    rows_hi = max(j - i for (i, j) in table.graded)
    rows = list(range(rows_lo, rows_hi + 1))

    def cell(i: int, k: int) -> str:
        rank = table.graded.get((i, k + i), 0)
        return str(rank) if rank else "."

    totals = table.totals()
    grid = [[str(i) for i in cols]]
    grid.append([str(totals[i]) for i in cols])
    for k in rows:
        grid.append([cell(i, k) for i in cols])
    widths = [max(len(r[c]) for r in grid) for c in range(len(cols))]
    labels = ["", "total:"] + [f"{k}:" for k in rows]
    lw = max(len(s) for s in labels)
    lines = []
    for label, row in zip(labels, grid):
        cells = " ".join(s.rjust(w) for s, w in zip(row, widths))
        lines.append(f"{label.rjust(lw)} {cells}")
    return "\n".join(lines)


def parse_betti_m2(text: str) -> dict[tuple[int, int], int]:
    """Parse the m2 layout back to the graded map (inverse of the printer).

    Only graded data lives in the layout, so that is what comes back;
    the totals row is cross-checked.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ParseError("not an m2 betti table")
    cols = [int(tok) for tok in lines[0].split()]
    totals_line = lines[1].split()
    if totals_line[0] != "total:":
        raise ParseError("missing total: row")
    totals = [int(tok) for tok in totals_line[1:]]
    graded: dict[tuple[int, int], int] = {}
    for ln in lines[2:]:
        label, *cells = ln.split()
        if not label.endswith(":"):
            raise ParseError(f"bad row label {label!r}")
        k = int(label[:-1])
        if len(cells) != len(cols):
            raise ParseError("row width mismatch")
        for i, tok in zip(cols, cells):
            if tok != ".":
                graded[(i, k + i)] = int(tok)
    for i in cols:
        got = sum(rank for (a, _), rank in graded.items() if a == i)
        if got != totals[i - cols[0]]:
            raise ParseError(f"totals row disagrees at column {i}")
    return graded


def format_betti_json(table: BettiTable) -> dict:
    vars = table.ideal.vars
    multi = [
        {"i": i, "monomial": monomial_names(m, vars), "rank": rank}
        for (i, m), rank in sorted(
            table.multigraded.items(), key=lambda kv: (kv[0][0], kv[0][1].sort_key())
        )
    ]
    graded = [
        {"i": i, "j": j, "rank": rank}
        for (i, j), rank in sorted(table.graded.items())
    ]
    return {
        "field": table.field.label,
        "variables": list(vars.names),
        "pd": table.pd,
        "t": {str(a): v for a, v in sorted(table.t.items())},
        "totals": list(table.totals()),
        "graded": graded,
        "multigraded": multi,
    }
