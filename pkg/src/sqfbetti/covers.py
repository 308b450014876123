"""Minimal covers, well ordered covers, splits, and reorderings.

A cover is a set of generators whose supports reach every variable.  An
ordered cover (m_1, ..., m_s) is well ordered when every generator m'
outside it has a witness position j <= s-1 with
m_j | lcm(m', m_{j+1}, ..., m_s).  Well ordered covers certify nonzero
Betti numbers, and splitting one at position a yields lattice
complements whose halves cover induced subideals.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import (
    EMPTY_IDEAL,
    MonomialIdeal,
    SqfMonomial,
    format_monomial,
    induced_subideal,
    restrict_monomial,
)
from .errors import (
    InvalidSplit,
    NotWellOrdered,
    RotationOutOfRange,
    SizeLimitExceeded,
)

DEFAULT_SEARCH_BUDGET = 10**6

CONDITION_INDUCED_EQUALS_PREFIX = "induced_equals_prefix"
CONDITION_COPRIME_PARTS = "coprime_parts"


class Cover:
    """An unordered facet cover: generator indices whose supports span."""

    __slots__ = ("members",)

    def __init__(self, members: Iterable[int]):
        self.members = frozenset(members)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cover) and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __repr__(self) -> str:
        return f"Cover({sorted(self.members)})"


class WellOrderedCover:
    """An ordered minimal cover with per-non-member witnesses.

    witnesses pairs each non-member generator index with the largest
    position j (1-based) certifying the divisibility condition; that
    maximum is the alpha value of the generator.
    """

    __slots__ = ("ideal", "sequence", "witnesses")

    def __init__(
        self,
        ideal: MonomialIdeal,
        sequence: Sequence[int],
        witnesses: Sequence[tuple[int, int]],
    ):
        self.ideal = ideal
        self.sequence = tuple(sequence)
        self.witnesses = tuple(witnesses)

    def __len__(self) -> int:
        return len(self.sequence)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WellOrderedCover)
            and self.ideal == other.ideal
            and self.sequence == other.sequence
        )

    def __hash__(self) -> int:
        return hash((self.ideal, self.sequence))

    def __repr__(self) -> str:
        seq = ", ".join(
            format_monomial(self.ideal.gens[i], self.ideal.vars)
            for i in self.sequence
        )
        return f"WellOrderedCover({seq})"


class WocCheck:
    """Outcome of the well-ordered decision: truthy iff accepted."""

    __slots__ = ("ok", "woc", "reason", "failing")

    def __init__(
        self,
        ok: bool,
        woc: WellOrderedCover | None = None,
        reason: str | None = None,
        failing: int | None = None,
    ):
        self.ok = ok
        self.woc = woc
        self.reason = reason
        self.failing = failing

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"WocCheck(ok={self.ok}" + (
            ")" if self.ok else f", reason={self.reason!r})"
        )


class SplitCertificate:
    """Everything the splitting machinery asserts about one split.

    m and m2 are the prefix and suffix lcms; they are always lattice
    complements and the suffix is always a well ordered cover of the
    induced subideal I_[m2].  condition records which sufficient clause
    (if any) applies to the prefix; when it is None the direct prefix
    check still ran and its outcome is prefix_woc_ok.
    """

    __slots__ = (
        "ideal",
        "sequence",
        "a",
        "m",
        "m2",
        "complement_ok",
        "suffix_woc_ok",
        "prefix_woc_ok",
        "condition",
    )

    def __init__(
        self,
        ideal: MonomialIdeal,
        sequence: tuple[int, ...],
        a: int,
        m: SqfMonomial,
        m2: SqfMonomial,
        complement_ok: bool,
        suffix_woc_ok: bool,
        prefix_woc_ok: bool,
        condition: str | None,
    ):
        self.ideal = ideal
        self.sequence = sequence
        self.a = a
        self.m = m
        self.m2 = m2
        self.complement_ok = complement_ok
        self.suffix_woc_ok = suffix_woc_ok
        self.prefix_woc_ok = prefix_woc_ok
        self.condition = condition

    def __repr__(self) -> str:
        vars = self.ideal.vars
        return (
            f"SplitCertificate(a={self.a}, m={format_monomial(self.m, vars)}, "
            f"m2={format_monomial(self.m2, vars)}, condition={self.condition})"
        )


def _covered_mask(I: MonomialIdeal, members: Iterable[int]) -> int:
    mask = 0
    for i in members:
        mask |= I.gens[i].mask
    return mask


def is_minimal_cover(I: MonomialIdeal, cover) -> bool:
    """Covers every variable, and every member keeps a private variable.

    A cover is inclusion-minimal exactly when each member contains some
    variable no other member reaches.
    """
    members = sorted(cover.members if isinstance(cover, Cover) else set(cover))
    if _covered_mask(I, members) != I.vars.full_mask:
        return False
    for i in members:
        others = _covered_mask(I, (j for j in members if j != i))
        if not I.gens[i].mask & ~others:
            return False
    return True


def is_well_ordered_cover(I: MonomialIdeal, seq: Sequence[int]) -> WocCheck:
    """Decide whether seq is a well ordered cover, with witnesses.

    Witness scan runs from position s-1 downward, so the recorded j for
    each non-member is the maximum one (its alpha value).
    """
    seq = tuple(int(i) for i in seq)
    if len(set(seq)) != len(seq):
        return WocCheck(False, reason="repeated generator in sequence")
    if any(not 0 <= i < len(I.gens) for i in seq):
        return WocCheck(False, reason="generator index out of range")
    if not is_minimal_cover(I, seq):
        return WocCheck(False, reason="not a minimal cover")
    s = len(seq)
    # suffix_mask[j] = lcm of positions j+1..s (1-based j)
    suffix_mask = [0] * (s + 1)
    for j in range(s - 1, 0, -1):
        suffix_mask[j] = suffix_mask[j + 1] | I.gens[seq[j]].mask
    members = set(seq)
    witnesses = []
    for n in range(len(I.gens)):
        if n in members:
            continue
        n_mask = I.gens[n].mask
        hit = None
        for j in range(s - 1, 0, -1):
            allowed = n_mask | suffix_mask[j]
            if I.gens[seq[j - 1]].mask | allowed == allowed:
                hit = j
                break
        if hit is None:
            name = format_monomial(I.gens[n], I.vars)
            return WocCheck(
                False,
                reason=f"no witness position for non-member {name}",
                failing=n,
            )
        witnesses.append((n, hit))
    return WocCheck(True, woc=WellOrderedCover(I, seq, witnesses))


def enumerate_minimal_covers(
    I: MonomialIdeal, budget: int = DEFAULT_SEARCH_BUDGET
) -> list[Cover]:
    """All minimal covers, by branching on the lowest uncovered variable.

    A branch dies as soon as some chosen member loses its last private
    variable, since later additions can never restore privacy.
    """
    q = len(I.gens)
    full = I.vars.full_mask
    found: set[frozenset[int]] = set()
    states = 0

    def dfs(chosen: list[int], covered: int, private: list[int]) -> None:
        nonlocal states
        states += 1
        if states > budget:
            partial = [Cover(c) for c in sorted(found, key=sorted)]
            raise SizeLimitExceeded(
                f"minimal cover enumeration exceeded budget {budget}",
                partial=partial,
            )
        if covered == full:
            found.add(frozenset(chosen))
            return
        v = (~covered & full) & -(~covered & full)  # lowest uncovered bit
        for g in range(q):
            gmask = I.gens[g].mask
            if not gmask & v or g in chosen:
                continue
            new_private = [p & ~gmask for p in private]
            if any(not p for p in new_private):
                continue
            mine = gmask & ~covered
            if not mine:
                continue  # adds nothing new, so it can never own a variable
            chosen.append(g)
            dfs(chosen, covered | gmask, new_private + [mine])
            chosen.pop()

    dfs([], 0, [])
    covers = [Cover(c) for c in found]
    covers.sort(key=lambda c: (len(c.members), sorted(c.members)))
    return covers


def find_well_ordered_covers(
    I: MonomialIdeal,
    size: int | None = None,
    first_only: bool = False,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> list[WellOrderedCover]:
    """Search orderings of every minimal cover for well ordered ones.

    The witness condition is suffix-determined, so the DFS fills the
    sequence from the last position backward; a placement at position
    j <= s-1 can discharge non-members, and states are memoized on the
    (remaining members, undischarged non-members) pair, which captures
    everything the future depends on.  Exceeding the budget raises
    SizeLimitExceeded with the covers found so far attached.
    """
    covers = enumerate_minimal_covers(I, budget=budget)
    results: list[WellOrderedCover] = []
    states = 0

    for cover in covers:
        members = sorted(cover.members)
        if size is not None and len(members) != size:
            continue
        s = len(members)
        non_members = frozenset(
            n for n in range(len(I.gens)) if n not in cover.members
        )
        gens = I.gens

        def spent() -> None:
            nonlocal states
            states += 1
            if states > budget:
                raise SizeLimitExceeded(
                    f"well ordered cover search exceeded budget {budget}",
                    partial=list(results),
                )

        if first_only:
            infeasible: set[tuple[frozenset[int], frozenset[int]]] = set()

            def first(remaining: frozenset[int], unsat: frozenset[int], placed_mask: int):
                spent()
                if not remaining:
                    return () if not unsat else None
                key = (remaining, unsat)
                if key in infeasible:
                    return None
                j = len(remaining)
                for g in sorted(remaining):
                    gmask = gens[g].mask
                    if j <= s - 1:
                        new_unsat = frozenset(
                            n
                            for n in unsat
                            if gmask | gens[n].mask | placed_mask
                            != gens[n].mask | placed_mask
                        )
                    else:
                        new_unsat = unsat
                    tail = first(
                        remaining - {g}, new_unsat, placed_mask | gmask
                    )
                    if tail is not None:
                        return tail + (g,)
                infeasible.add(key)
                return None

            seq = first(frozenset(members), non_members, 0)
            if seq is not None:
                check = is_well_ordered_cover(I, seq)
                assert check.ok, "search emitted a sequence failing the decision"
                return [check.woc]
            continue

        memo: dict[
            tuple[frozenset[int], frozenset[int]], tuple[tuple[int, ...], ...]
        ] = {}

        def complete(
            remaining: frozenset[int], unsat: frozenset[int], placed_mask: int
        ) -> tuple[tuple[int, ...], ...]:
            if not remaining:
                return ((),) if not unsat else ()
            key = (remaining, unsat)
            hit = memo.get(key)
            if hit is not None:
                return hit
            spent()
            j = len(remaining)
            out = []
            for g in sorted(remaining):
                gmask = gens[g].mask
                if j <= s - 1:
                    new_unsat = frozenset(
                        n
                        for n in unsat
                        if gmask | gens[n].mask | placed_mask
                        != gens[n].mask | placed_mask
                    )
                else:
                    new_unsat = unsat
                for head in complete(remaining - {g}, new_unsat, placed_mask | gmask):
                    out.append(head + (g,))
                    spent()
            memo[key] = tuple(out)
            return memo[key]

        for seq in complete(frozenset(members), non_members, 0):
            check = is_well_ordered_cover(I, seq)
            assert check.ok, "search emitted a sequence failing the decision"
            results.append(check.woc)

    return results


def _as_sequence(I: MonomialIdeal, woc) -> tuple[int, ...]:
    """Accept a WellOrderedCover or a raw index sequence; validate."""
    if isinstance(woc, WellOrderedCover):
        return woc.sequence
    check = is_well_ordered_cover(I, tuple(woc))
    if not check.ok:
        raise NotWellOrdered(check.reason or "not a well ordered cover")
    return check.woc.sequence


def split_certificate(I: MonomialIdeal, woc, a: int) -> SplitCertificate:
    """Split an ordered cover after position a and certify both halves.

    The prefix/suffix lcms are lattice complements, and the suffix is a
    well ordered cover of I_[m2]; both facts are theorem-backed, so a
    failure here is an internal error, not a negative answer.  The prefix
    is checked against I_[m] directly, and condition records which
    sufficient clause applies (None when neither does, which is not a
    refutation).
    """
    seq = _as_sequence(I, woc)
    s = len(seq)
    if not 1 <= a <= s - 1:
        raise InvalidSplit(f"split position {a} outside 1..{s - 1}")
    prefix, suffix = seq[:a], seq[a:]
    m = SqfMonomial(_covered_mask(I, prefix))
    m2 = SqfMonomial(_covered_mask(I, suffix))
    # both are lcms of generator subsets, hence lattice elements
    complement_ok = (
        m.mask | m2.mask == I.vars.full_mask and not I.contains(m.gcd(m2))
    )
    assert complement_ok, "split halves failed lattice complementation"

    def translated_check(part: tuple[int, ...], target: SqfMonomial) -> bool:
        sub = induced_subideal(I, target)
        assert sub is not EMPTY_IDEAL
        local = [
            sub.index_of(restrict_monomial(I.gens[i], I.vars, sub.vars))
            for i in part
        ]
        return is_well_ordered_cover(sub, local).ok

    suffix_woc_ok = translated_check(suffix, m2)
    assert suffix_woc_ok, "suffix failed to cover its induced subideal"
    prefix_woc_ok = translated_check(prefix, m)

    retained = {i for i, g in enumerate(I.gens) if g.divides(m)}
    if retained == set(prefix):
        condition = CONDITION_INDUCED_EQUALS_PREFIX
    elif m.gcd(m2).is_one:
        condition = CONDITION_COPRIME_PARTS
    else:
        condition = None
    if condition is not None:
        assert prefix_woc_ok, "sufficient condition held but prefix check failed"
    return SplitCertificate(
        I, seq, a, m, m2, complement_ok, suffix_woc_ok, prefix_woc_ok, condition
    )


def alpha_values(I: MonomialIdeal, woc) -> tuple[tuple[tuple[int, int], ...], int]:
    """Per-non-member alpha values and their minimum ell.

    alpha_k = max{j : m_j | lcm(n_k, m_{j+1}, ..., m_s)}, with the
    non-members n_k enumerated in canonical generator order.  With no
    non-members the minimum is vacuous and ell = s by convention.
    """
    seq = _as_sequence(I, woc)
    s = len(seq)
    suffix_mask = [0] * (s + 1)
    for j in range(s - 1, 0, -1):
        suffix_mask[j] = suffix_mask[j + 1] | I.gens[seq[j]].mask
    members = set(seq)
    alphas = []
    for n in range(len(I.gens)):
        if n in members:
            continue
        n_mask = I.gens[n].mask
        alpha = None
        for j in range(s - 1, 0, -1):
            allowed = n_mask | suffix_mask[j]
            if I.gens[seq[j - 1]].mask | allowed == allowed:
                alpha = j
                break
        assert alpha is not None  # guaranteed: seq passed the decision
        alphas.append((n, alpha))
    ell = min((a for _, a in alphas), default=s)
    return tuple(alphas), ell


def rotate_cover(woc: WellOrderedCover, i: int) -> tuple[int, ...]:
    """Rotate to (m_i, ..., m_s, m_1, ..., m_{i-1}); valid for 2 <= i <= ell.

    Outside that interval the rotation is not certified (and can genuinely
    fail to be well ordered), so it is refused.
    """
    _, ell = alpha_values(woc.ideal, woc)
    if not 2 <= i <= ell:
        raise RotationOutOfRange(f"rotation index {i} outside [2, {ell}]")
    seq = woc.sequence
    return seq[i - 1 :] + seq[: i - 1]
