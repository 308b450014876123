"""Simplicial bouquets and strongly disjoint sets of them.

A bouquet is a subcollection of facets with a nonempty common
intersection (its root) in which every facet keeps a free vertex.  A
strongly disjoint set of bouquets has pairwise disjoint vertex sets and
admits one representative facet per bouquet, pairwise 3-disjoint in the
ambient complex.  When such a family also spans all vertices and every
outside facet interacts with the family only by swallowing whole
non-root wings, its facets line up into well ordered covers, one per
permutation of the bouquets.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .betti import BettiTable, betti_table, multigraded_betti, t_max
from .core import (
    MonomialIdeal,
    SimplicialComplex,
    SqfMonomial,
    facet_ideal,
    format_monomial,
)
from .errors import (
    InvalidBouquetSet,
    InvalidPartition,
    SameFacet,
    SizeLimitExceeded,
)
from .homology import RATIONALS, FieldSpec

DEFAULT_SEARCH_BUDGET = 10**6
EXHAUSTIVE_THRESHOLD = 16


class Bouquet:
    """Facets sharing a nonempty root, each with a free vertex inside.

    free_vertex_witness is aligned with facets and records one vertex
    per facet that no other facet of the bouquet touches.  vertex_mask
    is the union of the facet supports (the monomial of V(B)).
    """

    __slots__ = ("facets", "root", "free_vertex_witness", "vertex_mask")

    def __init__(
        self,
        facets: tuple[int, ...],
        root: SqfMonomial,
        free_vertex_witness: tuple[int, ...],
        vertex_mask: int,
    ):
        self.facets = facets
        self.root = root
        self.free_vertex_witness = free_vertex_witness
        self.vertex_mask = vertex_mask

    def __len__(self) -> int:
        return len(self.facets)

    def __eq__(self, other) -> bool:
        return isinstance(other, Bouquet) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return f"Bouquet(facets={list(self.facets)})"


class BouquetCheck:
    """Outcome of the bouquet decision: truthy iff accepted."""

    __slots__ = ("ok", "bouquet", "reason")

    def __init__(
        self, ok: bool, bouquet: Bouquet | None = None, reason: str | None = None
    ):
        self.ok = ok
        self.bouquet = bouquet
        self.reason = reason

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"BouquetCheck(ok={self.ok}" + (
            ")" if self.ok else f", reason={self.reason!r})"
        )


class BouquetSet:
    """A strongly disjoint family with its chosen representatives.

    spans_delta and outside_condition_ok record the two containment
    clauses; both must hold before the family yields well ordered
    covers.
    """

    __slots__ = (
        "complex",
        "bouquets",
        "representatives",
        "spans_delta",
        "outside_condition_ok",
    )

    def __init__(
        self,
        complex: SimplicialComplex,
        bouquets: tuple[Bouquet, ...],
        representatives: tuple[int, ...],
        spans_delta: bool,
        outside_condition_ok: bool,
    ):
        self.complex = complex
        self.bouquets = bouquets
        self.representatives = representatives
        self.spans_delta = spans_delta
        self.outside_condition_ok = outside_condition_ok

    def __len__(self) -> int:
        return len(self.bouquets)

    def __repr__(self) -> str:
        groups = ", ".join(repr(list(b.facets)) for b in self.bouquets)
        return f"BouquetSet({groups}; reps={list(self.representatives)})"


def is_bouquet(delta: SimplicialComplex, facets: Iterable) -> BouquetCheck:
    """Decide whether the given facets form a bouquet, with witnesses."""
    indices = tuple(delta.facet_index(f) for f in facets)
    if not indices:
        return BouquetCheck(False, reason="a bouquet needs at least one facet")
    if len(set(indices)) != len(indices):
        return BouquetCheck(False, reason="repeated facet")
    masks = [delta.facets[i].mask for i in indices]
    root = masks[0]
    union = 0
    for m in masks:
        root &= m
        union |= m
    if not root:
        return BouquetCheck(False, reason="facets have empty common intersection")
    witnesses = []
    for k, m in enumerate(masks):
        others = 0
        for j, o in enumerate(masks):
            if j != k:
                others |= o
        free = m & ~others
        if not free:
            name = format_monomial(delta.facets[indices[k]], delta.vars)
            return BouquetCheck(
                False, reason=f"facet {name} has no free vertex in the bouquet"
            )
        witnesses.append((free & -free).bit_length() - 1)
    bouquet = Bouquet(indices, SqfMonomial(root), tuple(witnesses), union)
    return BouquetCheck(True, bouquet=bouquet)


def facet_distance(delta: SimplicialComplex, f, g) -> int | float:
    """Edge count of a shortest path in the facet intersection graph.

    Adjacency is nonempty intersection; distinct facets in different
    components are at distance infinity.
    """
    i = delta.facet_index(f)
    j = delta.facet_index(g)
    if i == j:
        raise SameFacet("distance is defined for distinct facets")
    masks = [x.mask for x in delta.facets]
    dist = {i: 0}
    frontier = [i]
    while frontier:
        nxt = []
        for u in frontier:
            for v in range(len(masks)):
                if v not in dist and masks[u] & masks[v]:
                    dist[v] = dist[u] + 1
                    if v == j:
                        return dist[v]
                    nxt.append(v)
        frontier = nxt
    return math.inf


class _DistanceCache:
    """Pairwise 3-disjointness queries against one fixed complex."""

    __slots__ = ("delta", "known")

    def __init__(self, delta: SimplicialComplex):
        self.delta = delta
        self.known: dict[tuple[int, int], int | float] = {}

    def three_disjoint(self, i: int, j: int) -> bool:
        key = (i, j) if i < j else (j, i)
        d = self.known.get(key)
        if d is None:
            d = facet_distance(self.delta, key[0], key[1])
            self.known[key] = d
        return d >= 3


def is_strongly_disjoint(
    delta: SimplicialComplex,
    bouquets: Sequence[Bouquet],
    representatives: Sequence[int],
) -> tuple[bool, list[str]]:
    """Vertex disjointness plus 3-disjointness of the representatives.

    Returns (verdict, reasons); reasons list every violated clause.
    """
    reasons = []
    for i in range(len(bouquets)):
        for j in range(i + 1, len(bouquets)):
            if bouquets[i].vertex_mask & bouquets[j].vertex_mask:
                reasons.append(f"bouquets {i} and {j} share a vertex")
    if len(representatives) != len(bouquets):
        reasons.append("need exactly one representative per bouquet")
        return False, reasons
    reps = []
    for k, r in enumerate(representatives):
        r = delta.facet_index(r)
        reps.append(r)
        if r not in bouquets[k].facets:
            reasons.append(f"representative of bouquet {k} is not one of its facets")
    cache = _DistanceCache(delta)
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if reps[i] == reps[j] or not cache.three_disjoint(reps[i], reps[j]):
                reasons.append(
                    f"representatives of bouquets {i} and {j} are not 3-disjoint"
                )
    return not reasons, reasons


def spans_complex(delta: SimplicialComplex, bouquets: Sequence[Bouquet]) -> bool:
    """V(family) covers every vertex of the complex."""
    covered = 0
    for b in bouquets:
        covered |= b.vertex_mask
    return covered == delta.vars.full_mask


def outside_condition(
    delta: SimplicialComplex, bouquets: Sequence[Bouquet]
) -> bool:
    """Outside facets may meet a bouquet facet's non-root wing only whole.

    For F outside the family and G in bouquet B: whenever F touches
    G minus Root(B), all of G minus Root(B) must lie inside F.
    """
    family = set()
    for b in bouquets:
        family.update(b.facets)
    for fi, facet in enumerate(delta.facets):
        if fi in family:
            continue
        fmask = facet.mask
        for b in bouquets:
            for gi in b.facets:
                wing = delta.facets[gi].mask & ~b.root.mask
                if fmask & wing and wing | fmask != fmask:
                    return False
    return True


def representative_systems(
    delta: SimplicialComplex, bouquets: Sequence[Bouquet]
) -> list[tuple[int, ...]]:
    """All pairwise 3-disjoint representative choices, lexicographic."""
    cache = _DistanceCache(delta)
    out: list[tuple[int, ...]] = []

    def extend(k: int, chosen: list[int]) -> None:
        if k == len(bouquets):
            out.append(tuple(chosen))
            return
        for r in sorted(bouquets[k].facets):
            if all(r != c and cache.three_disjoint(r, c) for c in chosen):
                chosen.append(r)
                extend(k + 1, chosen)
                chosen.pop()

    extend(0, [])
    return out


def _first_representative_system(
    delta: SimplicialComplex,
    bouquets: Sequence[Bouquet],
    cache: _DistanceCache,
) -> tuple[int, ...] | None:
    def extend(k: int, chosen: list[int]):
        if k == len(bouquets):
            return tuple(chosen)
        for r in sorted(bouquets[k].facets):
            if all(r != c and cache.three_disjoint(r, c) for c in chosen):
                chosen.append(r)
                hit = extend(k + 1, chosen)
                chosen.pop()
                if hit is not None:
                    return hit
        return None

    return extend(0, [])


def build_bouquet_set(
    delta: SimplicialComplex,
    groups: Sequence[Iterable],
    representatives: Sequence | None = None,
) -> BouquetSet:
    """Assemble and validate a bouquet family from facet groups.

    Each group must be a bouquet and the family must be strongly
    disjoint; representatives default to the lexicographically least
    pairwise 3-disjoint system.  The two containment clauses (spanning,
    outside condition) are recorded as flags, not enforced.
    """
    bouquets = []
    for group in groups:
        check = is_bouquet(delta, group)
        if not check.ok:
            raise InvalidBouquetSet(check.reason or "not a bouquet")
        bouquets.append(check.bouquet)
    if not bouquets:
        raise InvalidBouquetSet("empty bouquet family")
    for i in range(len(bouquets)):
        for j in range(i + 1, len(bouquets)):
            if bouquets[i].vertex_mask & bouquets[j].vertex_mask:
                raise InvalidBouquetSet(f"bouquets {i} and {j} share a vertex")
    cache = _DistanceCache(delta)
    if representatives is None:
        reps = _first_representative_system(delta, bouquets, cache)
        if reps is None:
            raise InvalidBouquetSet("no pairwise 3-disjoint representative system")
    else:
        ok, reasons = is_strongly_disjoint(delta, bouquets, list(representatives))
        if not ok:
            raise InvalidBouquetSet("; ".join(reasons))
        reps = tuple(delta.facet_index(r) for r in representatives)
    return BouquetSet(
        delta,
        tuple(bouquets),
        reps,
        spans_complex(delta, bouquets),
        outside_condition(delta, bouquets),
    )


def _candidate_bouquets(
    delta: SimplicialComplex, spend
) -> list[tuple[tuple[int, ...], int]]:
    """Facet subsets with a nonempty common intersection and free vertices.

    Nonempty intersection is inherited by subsets, so the DFS extends a
    branch only while the running intersection stays nonempty.
    """
    n = len(delta.facets)
    masks = [f.mask for f in delta.facets]
    found: list[tuple[tuple[int, ...], int]] = []

    def has_free_vertices(subset: tuple[int, ...]) -> bool:
        for k in subset:
            others = 0
            for j in subset:
                if j != k:
                    others |= masks[j]
            if not masks[k] & ~others:
                return False
        return True

    def grow(subset: tuple[int, ...], common: int, union: int, start: int) -> None:
        spend()
        if subset and has_free_vertices(subset):
            found.append((subset, union))
        for nxt in range(start, n):
            c = common & masks[nxt]
            if not c:
                continue
            grow(subset + (nxt,), c, union | masks[nxt], nxt + 1)

    grow((), delta.vars.full_mask, 0, 0)
    return found


def _family_search(
    delta: SimplicialComplex,
    candidates: list[tuple[tuple[int, ...], int]],
    spend,
    emit,
) -> None:
    """Cover the vertices with pairwise disjoint candidate bouquets.

    Branches on which candidate covers the lowest uncovered vertex, so
    each family is reached exactly once.
    """
    full = delta.vars.full_mask

    def dfs(chosen: list[tuple[int, ...]], covered: int) -> bool:
        spend()
        if covered == full:
            return emit(tuple(chosen))
        v = (~covered & full) & -(~covered & full)
        for subset, vmask in candidates:
            if vmask & v and not vmask & covered:
                chosen.append(subset)
                stop = dfs(chosen, covered | vmask)
                chosen.pop()
                if stop:
                    return True
        return False

    dfs([], 0)


def _greedy_family(delta: SimplicialComplex) -> list[tuple[int, ...]] | None:
    """One-pass star heuristic: biggest stars first, pruned to free vertices."""
    n = len(delta.vars)
    masks = [f.mask for f in delta.facets]
    star = [
        [i for i, m in enumerate(masks) if m >> v & 1] for v in range(n)
    ]
    order = sorted(range(n), key=lambda v: (-len(star[v]), v))
    covered = 0
    family: list[tuple[int, ...]] = []
    for v in order:
        if covered >> v & 1:
            continue
        subset = [i for i in star[v] if not masks[i] & covered]
        while subset:
            worst = None
            for k in subset:
                others = 0
                for j in subset:
                    if j != k:
                        others |= masks[j]
                if not masks[k] & ~others:
                    worst = k
            if worst is None:
                break
            subset.remove(worst)
        if not subset:
            return None
        family.append(tuple(sorted(subset)))
        for i in subset:
            covered |= masks[i]
    return family if covered == delta.vars.full_mask else None


def contains_strongly_disjoint_set(
    delta: SimplicialComplex,
    first_only: bool = False,
    exhaustive_threshold: int = EXHAUSTIVE_THRESHOLD,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> list[BouquetSet]:
    """Search for spanning strongly disjoint bouquet families.

    Complexes with at most exhaustive_threshold facets are searched
    completely (an empty answer is then a proof of absence); larger ones
    fall back to a star-based heuristic whose empty answer is not.  Every
    returned family spans the vertices, passes the outside condition, and
    carries its lexicographically least representative system.
    """
    results: list[BouquetSet] = []
    cache = _DistanceCache(delta)

    def accept(family: Sequence[tuple[int, ...]]) -> BouquetSet | None:
        bouquets = []
        for subset in sorted(family):
            check = is_bouquet(delta, subset)
            assert check.ok, "search emitted a non-bouquet"
            bouquets.append(check.bouquet)
        if not outside_condition(delta, bouquets):
            return None
        reps = _first_representative_system(delta, bouquets, cache)
        if reps is None:
            return None
        return BouquetSet(delta, tuple(bouquets), reps, True, True)

    if len(delta.facets) > exhaustive_threshold:
        family = _greedy_family(delta)
        if family is None:
            return []
        bset = accept(family)
        return [bset] if bset is not None else []

    states = 0

    def spend() -> None:
        nonlocal states
        states += 1
        if states > budget:
            raise SizeLimitExceeded(
                f"bouquet family search exceeded budget {budget}",
                partial=list(results),
            )

    candidates = _candidate_bouquets(delta, spend)

    def emit(family: tuple[tuple[int, ...], ...]) -> bool:
        bset = accept(family)
        if bset is not None:
            results.append(bset)
            if first_only:
                return True
        return False

    _family_search(delta, candidates, spend, emit)
    results.sort(key=lambda s: (len(s.bouquets), [b.facets for b in s.bouquets]))
    return results


def bouquet_orderings(
    bset: BouquetSet, permutation: Sequence[int] | None = None
) -> tuple[int, ...]:
    """Concatenate bouquet blocks, each one's representative last.

    permutation reorders the bouquets (default: stored order).  Blocks
    list non-representative facets by ascending index, then the
    representative; the result is a sequence of facet indices forming a
    well ordered cover of the facet ideal.
    """
    if not bset.spans_delta:
        raise InvalidBouquetSet("family does not span the vertex set")
    if not bset.outside_condition_ok:
        raise InvalidBouquetSet("family fails the outside facet condition")
    d = len(bset.bouquets)
    if permutation is None:
        permutation = tuple(range(d))
    else:
        permutation = tuple(int(k) for k in permutation)
        if sorted(permutation) != list(range(d)):
            raise InvalidBouquetSet(
                f"permutation must rearrange 0..{d - 1}, got {list(permutation)}"
            )
    seq: list[int] = []
    for k in permutation:
        b = bset.bouquets[k]
        rep = bset.representatives[k]
        seq.extend(i for i in sorted(b.facets) if i != rep)
        seq.append(rep)
    return tuple(seq)


class BouquetSubadditivity:
    """Certificate that a bouquet partition bounds t_b by t_b' + t_b''."""

    __slots__ = (
        "ideal",
        "field",
        "b_left",
        "b_right",
        "b_total",
        "m_left",
        "m_right",
        "complement_ok",
        "beta_left",
        "beta_right",
        "t_left",
        "t_right",
        "t_total",
        "holds",
    )

    def __init__(
        self,
        ideal: MonomialIdeal,
        field: FieldSpec,
        b_left: int,
        b_right: int,
        m_left: SqfMonomial,
        m_right: SqfMonomial,
        complement_ok: bool,
        beta_left: int,
        beta_right: int,
        t_left: int,
        t_right: int,
        t_total: int,
        holds: bool,
    ):
        self.ideal = ideal
        self.field = field
        self.b_left = b_left
        self.b_right = b_right
        self.b_total = b_left + b_right
        self.m_left = m_left
        self.m_right = m_right
        self.complement_ok = complement_ok
        self.beta_left = beta_left
        self.beta_right = beta_right
        self.t_left = t_left
        self.t_right = t_right
        self.t_total = t_total
        self.holds = holds

    def __repr__(self) -> str:
        return (
            f"BouquetSubadditivity(t_{self.b_total}={self.t_total} <= "
            f"t_{self.b_left}+t_{self.b_right}={self.t_left}+{self.t_right})"
        )


def bouquet_subadditivity(
    bset: BouquetSet,
    left: Iterable[int],
    field: FieldSpec = RATIONALS,
    table: BettiTable | None = None,
) -> BouquetSubadditivity:
    """Certify t_b <= t_b' + t_b'' from a partition of the family.

    left selects bouquet positions for the first part; the rest form the
    second.  The two vertex-product monomials are lattice complements
    with nonvanishing Betti numbers in homological degrees b' and b'',
    all of which is theorem-backed and therefore asserted.
    """
    d = len(bset.bouquets)
    left_set = set(int(i) for i in left)
    if any(not 0 <= i < d for i in left_set):
        raise InvalidPartition(f"bouquet positions must lie in 0..{d - 1}")
    if not left_set or len(left_set) == d:
        raise InvalidPartition("both parts of the partition must be nonempty")
    right_set = set(range(d)) - left_set

    I = facet_ideal(bset.complex)
    gen_of = {g.mask: i for i, g in enumerate(I.gens)}
    assert all(f.mask in gen_of for f in bset.complex.facets)

    def part(indices: set[int]) -> tuple[int, SqfMonomial]:
        count = 0
        vmask = 0
        for i in sorted(indices):
            count += len(bset.bouquets[i].facets)
            vmask |= bset.bouquets[i].vertex_mask
        return count, SqfMonomial(vmask)

    b_left, m_left = part(left_set)
    b_right, m_right = part(right_set)
    assert m_left.gcd(m_right).is_one, "partition parts share a vertex"
    complement_ok = (
        m_left.mask | m_right.mask == I.vars.full_mask
        and not I.contains(m_left.gcd(m_right))
    )
    assert complement_ok, "partition monomials failed lattice complementation"

    beta_left = multigraded_betti(I, b_left, m_left, field=field)
    beta_right = multigraded_betti(I, b_right, m_right, field=field)
    assert beta_left >= 1 and beta_right >= 1, "partition Betti numbers vanished"

    if table is None:
        table = betti_table(I, field=field)
    t_left = t_max(table, b_left)
    t_right = t_max(table, b_right)
    t_total = t_max(table, b_left + b_right)
    holds = t_total <= t_left + t_right
    assert holds, "subadditivity failed on a certified bouquet partition"
    return BouquetSubadditivity(
        I,
        field,
        b_left,
        b_right,
        m_left,
        m_right,
        complement_ok,
        beta_left,
        beta_right,
        t_left,
        t_right,
        t_total,
        holds,
    )
