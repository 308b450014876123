import random

import pytest

from sqfbetti import (
    Cover,
    SqfMonomial,
    alpha_values,
    enumerate_minimal_covers,
    find_well_ordered_covers,
    is_minimal_cover,
    is_well_ordered_cover,
    multigraded_betti,
    rotate_cover,
    split_certificate,
)
from sqfbetti.covers import (
    CONDITION_COPRIME_PARTS,
    CONDITION_INDUCED_EQUALS_PREFIX,
)
from sqfbetti.errors import (
    InvalidSplit,
    NotWellOrdered,
    RotationOutOfRange,
    SizeLimitExceeded,
)

from conftest import mk, random_sqf_ideal


def seq_of(I, *texts):
    """Generator indices for single-character-variable monomial strings."""
    return tuple(
        I.index_of(SqfMonomial.from_names(I.vars, list(t))) for t in texts
    )


def test_minimal_cover_decision(path3):
    xy, yz, zu = 0, 1, 2
    assert is_minimal_cover(path3, [xy, zu])
    # yz has no private variable next to the others
    assert not is_minimal_cover(path3, [xy, yz, zu])
    # misses u
    assert not is_minimal_cover(path3, [xy, yz])


def test_enumerate_minimal_covers_path3(path3):
    covers = enumerate_minimal_covers(path3)
    assert covers == [Cover(frozenset({0, 2}))]


def test_enumerate_minimal_covers_four_triangles(four_triangles):
    covers = enumerate_minimal_covers(four_triangles)
    got = {tuple(sorted(c.members)) for c in covers}
    abz_bcz_xyz = tuple(sorted(seq_of(four_triangles, "abz", "bcz", "xyz")))
    axz_bcz_xyz = tuple(sorted(seq_of(four_triangles, "axz", "bcz", "xyz")))
    assert got == {abz_bcz_xyz, axz_bcz_xyz}
    for c in covers:
        assert is_minimal_cover(four_triangles, c)


def test_minimal_covers_on_randoms_are_minimal():
    rng = random.Random(31)
    for _ in range(25):
        I = random_sqf_ideal(rng, max_vars=6, max_gens=5)
        for c in enumerate_minimal_covers(I):
            assert is_minimal_cover(I, c)
            # dropping any member breaks coverage or was never possible
            for member in c.members:
                smaller = c.members - {member}
                assert not is_minimal_cover(I, smaller) or not smaller


def test_accepted_well_ordered_cover(four_triangles):
    seq = seq_of(four_triangles, "abz", "bcz", "xyz")
    check = is_well_ordered_cover(four_triangles, seq)
    assert check
    assert check.woc.sequence == seq
    axz = seq_of(four_triangles, "axz")[0]
    assert check.woc.witnesses == ((axz, 1),)


def test_rejected_orderings(path3):
    xy, zu = 0, 2
    for seq in ((xy, zu), (zu, xy)):
        check = is_well_ordered_cover(path3, seq)
        assert not check
        assert check.reason


def test_full_search_empty_on_path3(path3):
    assert find_well_ordered_covers(path3) == []
    assert find_well_ordered_covers(path3, first_only=True) == []


def test_search_finds_known_cover(four_triangles):
    found = find_well_ordered_covers(four_triangles)
    sequences = {w.sequence for w in found}
    assert seq_of(four_triangles, "abz", "bcz", "xyz") in sequences
    for w in found:
        assert is_well_ordered_cover(four_triangles, w.sequence)


def test_search_first_only_prefix(four_triangles):
    first = find_well_ordered_covers(four_triangles, first_only=True)
    assert len(first) == 1
    assert is_well_ordered_cover(four_triangles, first[0].sequence)


def test_search_size_filter(four_triangles):
    none = find_well_ordered_covers(four_triangles, size=2)
    assert none == []
    sized = find_well_ordered_covers(four_triangles, size=3)
    assert sized
    assert all(len(w.sequence) == 3 for w in sized)


def test_search_budget(star_cluster):
    with pytest.raises(SizeLimitExceeded) as e:
        find_well_ordered_covers(star_cluster, budget=5)
    assert e.value.partial is not None


def test_non_cover_sequence_rejected(path3):
    check = is_well_ordered_cover(path3, (0, 1))  # xy, yz: u uncovered
    assert not check
    check = is_well_ordered_cover(path3, (0, 0))  # repeated entry
    assert not check


def test_witness_positions_are_maximal(triangle_tail):
    seq = seq_of(triangle_tail, "ab", "xy", "bc", "xz")
    check = is_well_ordered_cover(triangle_tail, seq)
    assert check
    s = len(seq)
    suffix = [SqfMonomial.one()] * (s + 2)
    for j in range(s, 0, -1):
        prev = suffix[j + 1] if j + 1 <= s else SqfMonomial.one()
        suffix[j] = prev.lcm(triangle_tail.gens[seq[j - 1]])
    for n, j in check.woc.witnesses:
        n_m = triangle_tail.gens[n]
        allowed = n_m.lcm(suffix[j + 1]) if j + 1 <= s else n_m
        assert triangle_tail.gens[seq[j - 1]].divides(allowed)
        # nothing later would do
        for j2 in range(j + 1, s):
            allowed2 = n_m.lcm(suffix[j2 + 1])
            assert not triangle_tail.gens[seq[j2 - 1]].divides(allowed2)


def test_alpha_brute_force_agreement():
    rng = random.Random(37)
    checked = 0
    while checked < 12:
        I = random_sqf_ideal(rng, max_vars=6, max_gens=5)
        found = find_well_ordered_covers(I)
        if not found:
            continue
        checked += 1
        for woc in found[:3]:
            seq = woc.sequence
            s = len(seq)
            alphas, ell = alpha_values(I, woc)
            # recompute each alpha as the largest workable discharge spot
            expect = {}
            for n in range(len(I.gens)):
                if n in seq:
                    continue
                best = None
                for j in range(s - 1, 0, -1):
                    lcm = I.gens[n].mask
                    for k in range(j, s):
                        lcm |= I.gens[seq[k]].mask
                    if I.gens[seq[j - 1]].mask | lcm == lcm:
                        best = j
                        break
                assert best is not None
                expect[n] = best
            assert dict(alphas) == expect
            assert ell == (min(expect.values()) if expect else s)


def test_alpha_and_ell_on_paper_cover(star_cluster):
    seq = seq_of(star_cluster, "gy", "gx", "eg", "fg", "bcd", "gh", "gi", "abc")
    assert is_well_ordered_cover(star_cluster, seq)
    alphas, ell = alpha_values(star_cluster, seq)
    named = {
        "".join(sorted(star_cluster.vars.name(v) for v in star_cluster.gens[n].indices())): a
        for n, a in alphas
    }
    assert named == {"cdf": 5, "def": 5, "fi": 4, "hi": 6}
    assert ell == 4


def test_ell_is_s_without_non_members():
    I = mk("xy", "zu")
    alphas, ell = alpha_values(I, (0, 1))
    assert alphas == ()
    assert ell == 2


def test_rotation_reproduces_shifted_cover(star_cluster):
    seq = seq_of(star_cluster, "gy", "gx", "eg", "fg", "bcd", "gh", "gi", "abc")
    rotated = rotate_cover(is_well_ordered_cover(star_cluster, seq).woc, 4)
    expect = seq_of(star_cluster, "fg", "bcd", "gh", "gi", "abc", "gy", "gx", "eg")
    assert rotated == expect
    assert is_well_ordered_cover(star_cluster, rotated)


def test_rotation_range(star_cluster):
    seq = seq_of(star_cluster, "gy", "gx", "eg", "fg", "bcd", "gh", "gi", "abc")
    woc = is_well_ordered_cover(star_cluster, seq).woc
    for i in (1, 5, 6):  # ell = 4
        with pytest.raises(RotationOutOfRange):
            rotate_cover(woc, i)
    # rotating past ell really does break the cover here
    manual = seq[5:] + seq[:5]
    assert not is_well_ordered_cover(star_cluster, manual)


def test_rotations_up_to_ell_stay_well_ordered():
    rng = random.Random(41)
    checked = 0
    while checked < 10:
        I = random_sqf_ideal(rng, max_vars=6, max_gens=5)
        found = find_well_ordered_covers(I)
        if not found:
            continue
        checked += 1
        woc = found[0]
        _, ell = alpha_values(I, woc)
        for i in range(2, ell + 1):
            rotated = rotate_cover(woc, i)
            assert is_well_ordered_cover(I, rotated)


def test_split_certificates_on_triangle_tail(triangle_tail):
    vars = triangle_tail.vars
    seq = seq_of(triangle_tail, "ab", "xy", "bc", "xz")
    cert1 = split_certificate(triangle_tail, seq, 1)
    assert cert1.m == SqfMonomial.from_names(vars, ["a", "b"])
    assert cert1.m2 == SqfMonomial.from_names(vars, ["b", "c", "x", "y", "z"])
    assert cert1.complement_ok
    assert cert1.suffix_woc_ok
    assert cert1.condition == CONDITION_INDUCED_EQUALS_PREFIX
    assert cert1.prefix_woc_ok

    cert2 = split_certificate(triangle_tail, seq, 2)
    assert cert2.m == SqfMonomial.from_names(vars, ["a", "b", "x", "y"])
    assert cert2.m2 == SqfMonomial.from_names(vars, ["b", "c", "x", "z"])
    assert cert2.m.gcd(cert2.m2) == SqfMonomial.from_names(vars, ["b", "x"])
    assert cert2.complement_ok
    assert cert2.suffix_woc_ok
    assert cert2.condition == CONDITION_INDUCED_EQUALS_PREFIX


def test_split_coprime_condition():
    # prefix lcm xyz also absorbs the non-member yz, so the induced
    # subideal is strictly bigger than the prefix; only coprimality applies
    I = mk("xy", "yz", "xz", "uv")
    seq = seq_of(I, "xy", "xz", "uv")
    cert = split_certificate(I, seq, 2)
    assert cert.condition == CONDITION_COPRIME_PARTS
    assert cert.complement_ok
    assert cert.prefix_woc_ok


def test_split_bad_positions(triangle_tail):
    seq = seq_of(triangle_tail, "ab", "xy", "bc", "xz")
    for a in (0, 4, 7):
        with pytest.raises(InvalidSplit):
            split_certificate(triangle_tail, seq, a)


def test_split_requires_well_ordered(path3):
    with pytest.raises(NotWellOrdered):
        split_certificate(path3, (0, 2), 1)


def test_splits_on_random_wocs():
    rng = random.Random(43)
    checked = 0
    while checked < 10:
        I = random_sqf_ideal(rng, max_vars=6, max_gens=5)
        found = find_well_ordered_covers(I)
        if not found:
            continue
        checked += 1
        for woc in found[:2]:
            s = len(woc.sequence)
            for a in range(1, s):
                cert = split_certificate(I, woc, a)
                assert cert.complement_ok
                assert cert.suffix_woc_ok
                if cert.condition is not None:
                    assert cert.prefix_woc_ok


def test_found_covers_certify_betti_numbers(four_triangles):
    # the certification behind the search: a length-s cover forces
    # a nonzero Betti number at its lcm in degree s
    for woc in find_well_ordered_covers(four_triangles):
        s = len(woc.sequence)
        lcm = SqfMonomial.one()
        for k in woc.sequence:
            lcm = lcm.lcm(four_triangles.gens[k])
        assert multigraded_betti(four_triangles, s, lcm) >= 1


def test_cover_container_behavior():
    c = Cover(frozenset({3, 1, 2}))
    assert len(c) == 3
    assert list(c) == [1, 2, 3]
    assert c == Cover(frozenset({1, 2, 3}))
    assert hash(c) == hash(Cover(frozenset({1, 2, 3})))
