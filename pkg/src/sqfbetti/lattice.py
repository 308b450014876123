"""The lcm lattice of an ideal and lattice complementation."""

from __future__ import annotations

from typing import Sequence

from .core import MonomialIdeal, SqfMonomial
from .errors import NotInLattice, SizeLimitExceeded

DEFAULT_LATTICE_CAP = 2**20


class LcmLattice:
    """All lcms of generator subsets, ordered by divisibility.

    ``elements`` is sorted by (degree, index tuple) with bottom 1 first
    and the top lcm last.  ``witness`` maps each element's mask to one
    generator subset realizing it, kept for diagnostics.
    """

    __slots__ = ("ideal", "elements", "witness", "_masks")

    def __init__(
        self,
        ideal: MonomialIdeal,
        elements: Sequence[SqfMonomial],
        witness: dict[int, tuple[int, ...]],
    ):
        self.ideal = ideal
        self.elements = tuple(elements)
        self.witness = witness
        self._masks = {m.mask for m in elements}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m: SqfMonomial) -> bool:
        return m.mask in self._masks

    def bottom(self) -> SqfMonomial:
        return self.elements[0]

    def top(self) -> SqfMonomial:
        return self.elements[-1]


def build_lattice(I: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> LcmLattice:
    """Saturate {1} u gens under pairwise lcm.

    Joining with single generators suffices for closure, since every
    element is an lcm of generators.  Raises SizeLimitExceeded (with the
    elements found so far attached) if the lattice would exceed cap.
    """
    witness: dict[int, tuple[int, ...]] = {0: ()}
    gen_masks = [g.mask for g in I.gens]
    frontier = [0]
    while frontier:
        fresh = []
        for m in frontier:
            for gi, gmask in enumerate(gen_masks):
                j = m | gmask
                if j not in witness:
                    witness[j] = tuple(sorted(set(witness[m]) | {gi}))
                    fresh.append(j)
                    if len(witness) > cap:
                        partial = sorted(
                            (SqfMonomial(k) for k in witness),
                            key=SqfMonomial.sort_key,
                        )
                        raise SizeLimitExceeded(
                            f"lcm lattice exceeds cap {cap}", partial=partial
                        )
        frontier = fresh
    elements = sorted((SqfMonomial(m) for m in witness), key=SqfMonomial.sort_key)
    return LcmLattice(I, elements, witness)


def is_lattice_complement(
    I: MonomialIdeal,
    m: SqfMonomial,
    m2: SqfMonomial,
    lattice: LcmLattice | None = None,
) -> bool:
    """lcm(m, m2) = x_1...x_n and gcd(m, m2) not in I.

    Both monomials must be lattice elements.  Membership of the gcd in I
    is divisibility against the generators, per the definition.
    """
    if lattice is None:
        lattice = build_lattice(I)
    for x in (m, m2):
        if x not in lattice:
            raise NotInLattice(f"{x!r} is not in LCM(I)")
    if m.mask | m2.mask != I.vars.full_mask:
        return False
    gcd = m.gcd(m2)
    return not I.contains(gcd)


def enumerate_complements(
    I: MonomialIdeal,
    m: SqfMonomial,
    lattice: LcmLattice | None = None,
) -> list[SqfMonomial]:
    """All lattice complements of m, in (degree, index tuple) order."""
    if lattice is None:
        lattice = build_lattice(I)
    if m not in lattice:
        raise NotInLattice(f"{m!r} is not in LCM(I)")
    full = I.vars.full_mask
    out = []
    for m2 in lattice.elements:
        if m.mask | m2.mask == full and not I.contains(m.gcd(m2)):
            out.append(m2)
    return out


def hasse_pairs(lattice: LcmLattice) -> list[tuple[int, int]]:
    """Cover relations as (lower, upper) element indices.

    Quadratic-with-a-filter; provided for inspection only, nothing in the
    certification pipeline needs it.
    """
    els = lattice.elements
    n = len(els)
    below: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and els[i].divides(els[j]):
                below[j].append(i)
    pairs = []
    for j in range(n):
        for i in below[j]:
            # i is covered by j unless something sits strictly between
            if not any(
                k != i and els[i].divides(els[k]) for k in below[j] if k != j
            ):
                pairs.append((i, j))
    return pairs
