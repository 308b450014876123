"""Subadditivity verification and complement witness search.

Everything here is evidence collection over an exactly computed Betti
table: violations of t_{a+b} <= t_a + t_b are read off the table, and
witness pairs are lattice complements whose multigraded Betti numbers
are nonzero in the split homological degrees.
"""

from __future__ import annotations

from .betti import BettiTable, betti_table, t_max
from .core import MonomialIdeal, SqfMonomial
from .errors import OutOfRange
from .homology import RATIONALS, FieldSpec
from .lattice import LcmLattice, build_lattice, is_lattice_complement


class SubadditivityReport:
    """Exact subadditivity audit of one ideal over one field.

    violations lists every (a, b) with a <= b, a + b <= pd, and
    t_{a+b} > t_a + t_b; witnesses, when requested, maps (i, a, b) to
    complement pairs certifying the inequality's degree bound.
    """

    __slots__ = ("ideal", "field", "pd", "t", "violations", "witnesses")

    def __init__(
        self,
        ideal: MonomialIdeal,
        field: FieldSpec,
        pd: int,
        t: dict[int, int],
        violations: list[tuple[int, int]],
        witnesses: dict[tuple[int, int, int], list[tuple[SqfMonomial, SqfMonomial]]],
    ):
        self.ideal = ideal
        self.field = field
        self.pd = pd
        self.t = t
        self.violations = violations
        self.witnesses = witnesses

    @property
    def holds(self) -> bool:
        return not self.violations

    def __repr__(self) -> str:
        verdict = "holds" if self.holds else f"violated at {self.violations}"
        return f"SubadditivityReport(pd={self.pd}, {verdict})"


def verify_subadditivity(
    I: MonomialIdeal,
    field: FieldSpec = RATIONALS,
    table: BettiTable | None = None,
    with_witnesses: bool = False,
) -> SubadditivityReport:
    """Check t_{a+b} <= t_a + t_b for all a, b > 0 with a + b <= pd.

    with_witnesses additionally records, for every such pair, the first
    complement witness pair found (an empty list when none exists).
    """
    if table is None:
        table = betti_table(I, field=field)
    pd = table.pd
    violations = []
    pairs = [
        (a, b) for a in range(1, pd) for b in range(a, pd) if a + b <= pd
    ]
    for a, b in pairs:
        if table.t[a + b] > table.t[a] + table.t[b]:
            violations.append((a, b))
    witnesses: dict = {}
    if with_witnesses:
        lattice = build_lattice(I)
        for a, b in pairs:
            witnesses[(a + b, a, b)] = search_complement_witnesses(
                I, a + b, a, b, field=field, table=table, lattice=lattice
            )
    return SubadditivityReport(I, field, pd, dict(table.t), violations, witnesses)


def search_complement_witnesses(
    I: MonomialIdeal,
    i: int,
    a: int,
    b: int,
    field: FieldSpec = RATIONALS,
    all_pairs: bool = False,
    table: BettiTable | None = None,
    lattice: LcmLattice | None = None,
) -> list[tuple[SqfMonomial, SqfMonomial]]:
    """Complement pairs (m, m2) with beta_{a,m} >= 1 and beta_{b,m2} >= 1.

    The scan is exhaustive over the lcm lattice, ordered by increasing
    degree then support of m (then of m2), and stops at the first hit
    unless all_pairs is set.
    """
    if a + b != i:
        raise OutOfRange(f"need a + b = i, got {a} + {b} != {i}")
    if a < 1 or b < 1:
        raise OutOfRange("witness degrees must be positive")
    if lattice is None:
        lattice = build_lattice(I)
    if table is None:
        table = betti_table(I, field=field)
    full = I.vars.full_mask
    out = []
    for m in lattice.elements:
        if not table.multigraded.get((a, m), 0):
            continue
        for m2 in lattice.elements:
            if m.mask | m2.mask != full or I.contains(m.gcd(m2)):
                continue
            if not table.multigraded.get((b, m2), 0):
                continue
            assert is_lattice_complement(I, m, m2, lattice=lattice)
            out.append((m, m2))
            if not all_pairs:
                return out
    return out


class TopDegreeCheck:
    """t_a + t_b >= r evaluated where the top multidegree survives.

    Inapplicable (and vacuously holding) when beta_{i,top} = 0 or when a
    or b exceeds the projective dimension.
    """

    __slots__ = (
        "i",
        "a",
        "b",
        "r",
        "applicable",
        "holds",
        "t_a",
        "t_b",
        "witnesses",
    )

    def __init__(
        self,
        i: int,
        a: int,
        b: int,
        r: int,
        applicable: bool,
        holds: bool,
        t_a: int | None,
        t_b: int | None,
        witnesses: list[tuple[SqfMonomial, SqfMonomial]],
    ):
        self.i = i
        self.a = a
        self.b = b
        self.r = r
        self.applicable = applicable
        self.holds = holds
        self.t_a = t_a
        self.t_b = t_b
        self.witnesses = witnesses

    def __repr__(self) -> str:
        if not self.applicable:
            return f"TopDegreeCheck(i={self.i}, inapplicable)"
        return (
            f"TopDegreeCheck(t_{self.a}+t_{self.b}={self.t_a}+{self.t_b} "
            f">= r={self.r}: {self.holds})"
        )


def top_degree_check(
    I: MonomialIdeal,
    i: int,
    a: int,
    b: int,
    field: FieldSpec = RATIONALS,
    table: BettiTable | None = None,
) -> TopDegreeCheck:
    """Evaluate t_a + t_b >= r = deg lcm(generators) when it applies.

    Applicability needs beta_{i, top} nonzero (so that t_i = r) and both
    a, b within the projective dimension; otherwise the statement is
    vacuous and flagged inapplicable.
    """
    if a + b != i:
        raise OutOfRange(f"need a + b = i, got {a} + {b} != {i}")
    if a < 1 or b < 1:
        raise OutOfRange("split degrees must be positive")
    if table is None:
        table = betti_table(I, field=field)
    top = I.top()
    r = top.degree
    applicable = (
        1 <= a <= table.pd
        and 1 <= b <= table.pd
        and table.multigraded.get((i, top), 0) >= 1
    )
    if not applicable:
        return TopDegreeCheck(i, a, b, r, False, True, None, None, [])
    t_a = t_max(table, a)
    t_b = t_max(table, b)
    holds = t_a + t_b >= r
    witnesses = search_complement_witnesses(I, i, a, b, field=field, table=table)
    return TopDegreeCheck(i, a, b, r, applicable, holds, t_a, t_b, witnesses)
