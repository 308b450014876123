import random

import pytest

from sqfbetti import (
    SqfMonomial,
    build_lattice,
    enumerate_complements,
    hasse_pairs,
    is_lattice_complement,
)
from sqfbetti.errors import NotInLattice, SizeLimitExceeded

from conftest import mk, random_sqf_ideal


def test_path3_lattice_elements(path3):
    lat = build_lattice(path3)
    assert len(lat) == 7
    assert lat.bottom().is_one
    assert lat.top() == path3.top()
    names = {
        "".join(path3.vars.name(i) for i in m.indices()) for m in lat.elements
    }
    assert names == {"", "xy", "yz", "zu", "xyz", "yzu", "xyzu"}


def test_known_lattice_sizes(triangle_tail, three_brooms, star_cluster):
    assert len(build_lattice(triangle_tail)) == 26
    assert len(build_lattice(three_brooms)) == 180
    assert len(build_lattice(star_cluster)) == 333


def test_elements_sorted_bottom_first_top_last(triangle_tail):
    lat = build_lattice(triangle_tail)
    keys = [m.sort_key() for m in lat.elements]
    assert keys == sorted(keys)
    assert lat.elements[0].is_one
    assert lat.elements[-1] == triangle_tail.top()


def test_witness_realizes_element(three_brooms):
    lat = build_lattice(three_brooms)
    for m in lat.elements:
        w = lat.witness[m.mask]
        joined = 0
        for gi in w:
            joined |= three_brooms.gens[gi].mask
        assert joined == m.mask
    assert lat.witness[0] == ()


def test_lattice_closed_under_joins(four_triangles):
    lat = build_lattice(four_triangles)
    for a in lat.elements:
        for b in lat.elements:
            assert a.lcm(b) in lat


def test_cap_raises_with_partial(three_brooms):
    with pytest.raises(SizeLimitExceeded) as e:
        build_lattice(three_brooms, cap=10)
    partial = e.value.partial
    assert partial is not None
    assert len(partial) > 10


def test_complement_requires_lattice_membership(path3):
    xz = SqfMonomial.from_names(path3.vars, ["x", "z"])
    top = path3.top()
    with pytest.raises(NotInLattice):
        is_lattice_complement(path3, xz, top)


def test_complement_example(triangle_tail):
    vars = triangle_tail.vars
    lat = build_lattice(triangle_tail)
    xyz = SqfMonomial.from_names(vars, ["x", "y", "z"])
    abc = SqfMonomial.from_names(vars, ["a", "b", "c"])
    # union is everything and gcd(xyz, abc) = 1, not in the ideal
    assert is_lattice_complement(triangle_tail, xyz, abc, lat)
    # abxy and bcxz: union is everything, gcd = bx not in I
    abxy = SqfMonomial.from_names(vars, ["a", "b", "x", "y"])
    bcxz = SqfMonomial.from_names(vars, ["b", "c", "x", "z"])
    assert is_lattice_complement(triangle_tail, abxy, bcxz, lat)
    # xyz vs xyzab: union misses c
    xyzab = SqfMonomial.from_names(vars, ["x", "y", "z", "a", "b"])
    assert not is_lattice_complement(triangle_tail, xyz, xyzab, lat)


def test_gcd_in_ideal_is_not_complement(path3):
    lat = build_lattice(path3)
    xyz = SqfMonomial.from_names(path3.vars, ["x", "y", "z"])
    yzu = SqfMonomial.from_names(path3.vars, ["y", "z", "u"])
    # union covers everything but gcd = yz lies in the ideal
    assert not is_lattice_complement(path3, xyz, yzu, lat)


def test_enumerate_complements_ordering(triangle_tail):
    vars = triangle_tail.vars
    lat = build_lattice(triangle_tail)
    xyz = SqfMonomial.from_names(vars, ["x", "y", "z"])
    comps = enumerate_complements(triangle_tail, xyz, lat)
    assert comps
    keys = [c.sort_key() for c in comps]
    assert keys == sorted(keys)
    for c in comps:
        assert is_lattice_complement(triangle_tail, xyz, c, lat)


def test_complement_symmetry_on_randoms():
    rng = random.Random(7)
    for _ in range(25):
        I = random_sqf_ideal(rng)
        lat = build_lattice(I)
        els = lat.elements
        for _ in range(10):
            m = rng.choice(els)
            m2 = rng.choice(els)
            a = is_lattice_complement(I, m, m2, lat)
            b = is_lattice_complement(I, m2, m, lat)
            assert a == b


def test_hasse_pairs_path3(path3):
    lat = build_lattice(path3)
    pairs = hasse_pairs(lat)
    els = lat.elements
    for lo, hi in pairs:
        assert els[lo].divides(els[hi])
        assert els[lo] != els[hi]
        between = [
            k
            for k in range(len(els))
            if k not in (lo, hi)
            and els[lo].divides(els[k])
            and els[k].divides(els[hi])
        ]
        assert not between
    # bottom covers: exactly the generators
    bottom_covers = {hi for lo, hi in pairs if lo == 0}
    gen_positions = {
        i for i, m in enumerate(els) if m in set(path3.gens)
    }
    assert bottom_covers == gen_positions
