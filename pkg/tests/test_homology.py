import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqfbetti import (
    GF_32003,
    RATIONALS,
    FaceSet,
    FieldSpec,
    SqfMonomial,
    boundary_matrix,
    matrix_rank,
    reduced_homology_ranks,
    taylor_faces_below,
)
from sqfbetti.errors import ParseError, SizeLimitExceeded
from sqfbetti.homology import faces_by_dimension

from conftest import mk, random_sqf_ideal


def closure(masks):
    """Downward closure of a set of faces, as a FaceSet."""
    out = set()
    for m in masks:
        sub = m
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    return FaceSet(out)


def test_field_spec_parsing():
    assert FieldSpec.parse("q") == RATIONALS
    assert FieldSpec.parse("p:32003") == GF_32003
    assert RATIONALS.label == "QQ"
    assert GF_32003.label == "GF(32003)"
    assert RATIONALS.kind == "rationals"
    for bad in ("r", "p:", "p:15", "p:abc", "32003"):
        with pytest.raises(ParseError):
            FieldSpec.parse(bad)


def test_void_versus_empty_face():
    void = FaceSet.void()
    assert void.is_void
    ranks = reduced_homology_ranks(void)
    assert ranks.face_counts == {}
    assert ranks.h(-1) == 0 and ranks.h(0) == 0

    point = FaceSet([0])  # just the empty face
    ranks = reduced_homology_ranks(point)
    assert ranks.face_counts == {-1: 1}
    assert ranks.h(-1) == 1


def test_contractible_simplex():
    # full 2-simplex on three vertices: all reduced homology vanishes
    faces = closure([0b111])
    ranks = reduced_homology_ranks(faces)
    assert ranks.face_counts == {-1: 1, 0: 3, 1: 3, 2: 1}
    for d in range(-1, 3):
        assert ranks.h(d) == 0


def test_circle():
    # boundary of a triangle: h_1 = 1, everything else 0
    faces = closure([0b011, 0b101, 0b110])
    ranks = reduced_homology_ranks(faces)
    assert ranks.h(1) == 1
    assert ranks.h(0) == 0
    assert ranks.h(-1) == 0


def test_two_points():
    faces = closure([0b01, 0b10])
    ranks = reduced_homology_ranks(faces)
    assert ranks.h(0) == 1  # two components, reduced
    assert ranks.h(-1) == 0


def test_sphere_octahedron():
    # boundary of the 3-simplex: a 2-sphere, h_2 = 1
    full = 0b1111
    faces = closure([full ^ (1 << k) for k in range(4)])
    ranks = reduced_homology_ranks(faces)
    assert ranks.h(2) == 1
    assert ranks.h(1) == 0
    assert ranks.h(0) == 0


def test_taylor_faces_below_excludes_covers(path3):
    m = path3.top()  # xyzu
    faces = taylor_faces_below(path3, m)
    # {xy, zu} has lcm xyzu = m, so it is not below m
    assert (0b001 | 0b100) not in faces.faces
    assert 0 in faces.faces
    for f in faces.faces:
        lcm = 0
        for i in range(len(path3.gens)):
            if f >> i & 1:
                lcm |= path3.gens[i].mask
        assert lcm != m.mask
        assert SqfMonomial(lcm).divides(m)


def test_taylor_faces_below_ignores_non_dividing_gens(triangle_tail):
    vars = triangle_tail.vars
    m = SqfMonomial.from_names(vars, ["x", "y", "z"])
    faces = taylor_faces_below(triangle_tail, m)
    dividing = {i for i, g in enumerate(triangle_tail.gens) if g.divides(m)}
    for f in faces.faces:
        used = {i for i in range(len(triangle_tail.gens)) if f >> i & 1}
        assert used <= dividing


def test_taylor_faces_below_one_is_void(path3):
    # even the empty face has lcm 1, which is not strictly below m = 1
    faces = taylor_faces_below(path3, SqfMonomial.one())
    assert faces.is_void


def test_face_cap(three_brooms):
    with pytest.raises(SizeLimitExceeded):
        taylor_faces_below(three_brooms, three_brooms.top(), cap=5)


def test_boundary_squared_is_zero_on_randoms():
    rng = random.Random(11)
    for _ in range(30):
        I = random_sqf_ideal(rng, max_vars=6, max_gens=5)
        lat_top = I.top()
        faces = taylor_faces_below(I, lat_top)
        if faces.is_void:
            continue
        groups = faces_by_dimension(faces)
        top = max(groups)
        for d in range(1, top + 1):
            A = boundary_matrix(groups[d - 2] if d - 2 in groups else [], groups[d - 1])
            B = boundary_matrix(groups[d - 1], groups[d])
            if A.size and B.size:
                assert not (A @ B).any()


def test_euler_characteristic_identity():
    # sum of (-1)^d c_d equals sum of (-1)^d h_d, including d = -1
    rng = random.Random(13)
    for _ in range(40):
        I = random_sqf_ideal(rng, max_vars=6, max_gens=5)
        m = rng.choice([I.top(), rng.choice(I.gens).lcm(rng.choice(I.gens))])
        faces = taylor_faces_below(I, m)
        ranks = reduced_homology_ranks(faces)
        chi_faces = sum((-1) ** d * c for d, c in ranks.face_counts.items())
        chi_hom = sum((-1) ** d * h for d, h in ranks.homology_ranks.items())
        assert chi_faces == chi_hom


def test_downward_closed(path3):
    faces = taylor_faces_below(path3, path3.top())
    assert faces.is_downward_closed()


def test_matrix_rank_small_cases():
    assert matrix_rank(np.zeros((0, 0), dtype=np.int64)) == 0
    assert matrix_rank(np.zeros((3, 2), dtype=np.int64)) == 0
    assert matrix_rank(np.eye(4, dtype=np.int64)) == 4
    M = np.array([[1, 2], [2, 4]], dtype=np.int64)
    assert matrix_rank(M) == 1
    assert matrix_rank([[1, 2], [3, 4]]) == 2


def test_matrix_rank_exact_where_floats_fail():
    # a Hilbert-like integer matrix with huge condition number
    n = 10
    M = [[1 * (i + j + 1) ** 3 + (1 if i == j else 0) for j in range(n)] for i in range(n)]
    r_qq = matrix_rank(M, RATIONALS)
    r_gf = matrix_rank(M, GF_32003)
    assert r_qq == n
    assert r_gf <= r_qq


def test_matrix_rank_bigint_fallback():
    # entries past the int64-safe bound force the bigint path
    big = 2**40
    M = [[big, 0], [0, big]]
    assert matrix_rank(M, RATIONALS) == 2
    M2 = [[big, big], [big, big]]
    assert matrix_rank(M2, RATIONALS) == 1


def test_rank_agreement_random_matrices():
    rng = random.Random(17)
    for _ in range(30):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        M = np.array(
            [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)],
            dtype=np.int64,
        )
        r_qq = matrix_rank(M, RATIONALS)
        r_np = np.linalg.matrix_rank(M.astype(float))
        assert r_qq == int(r_np)
        assert matrix_rank(M, GF_32003) == r_qq  # entries tiny, no char-p drop


@settings(max_examples=50)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=1, max_size=5), min_size=1, max_size=5))
def test_rank_bounds(rows):
    width = len(rows[0])
    rows = [r[:width] + [0] * (width - len(r)) for r in rows]
    r = matrix_rank(rows, RATIONALS)
    assert 0 <= r <= min(len(rows), width)


def test_homology_field_agreement_on_taylor_complexes():
    rng = random.Random(19)
    for _ in range(20):
        I = random_sqf_ideal(rng, max_vars=6, max_gens=5)
        faces = taylor_faces_below(I, I.top())
        a = reduced_homology_ranks(faces, RATIONALS)
        b = reduced_homology_ranks(faces, GF_32003)
        assert a.homology_ranks == b.homology_ranks
