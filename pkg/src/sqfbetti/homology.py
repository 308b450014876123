"""Taylor subcomplexes below a multidegree and exact reduced homology.

The chain complexes here are tiny by numerical-linear-algebra standards
but must be exact, so ranks are computed by fraction-free (Bareiss)
elimination over the rationals, with an automatic big-integer restart if
intermediate minors leave the int64-safe range, or by modular elimination
over a prime field.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .core import MonomialIdeal, SqfMonomial, _indices_of
from .errors import ParseError, SizeLimitExceeded

DEFAULT_FACE_CAP = 2**20

# Bareiss intermediates are minors of the input; products of two entries
# below this bound stay inside int64.
_INT64_SAFE = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """Coefficient field: the rationals, or GF(p) for a prime p < 2^31."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if not 2 <= p < _INT64_SAFE:
                raise ParseError(f"prime must be in [2, 2^31), got {p}")
            if not _is_prime(p):
                raise ParseError(f"{p} is not prime")
        self.p = p

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """'q' for the rationals, 'p:<prime>' for a prime field."""
        if text == "q":
            return cls(None)
        if text.startswith("p:"):
            try:
                return cls(int(text[2:]))
            except ValueError as e:
                if isinstance(e, ParseError):
                    raise
                raise ParseError(f"bad field spec {text!r}") from None
        raise ParseError(f"bad field spec {text!r} (expected 'q' or 'p:<prime>')")

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime"

    @property
    def label(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self) -> int:
        return hash(self.p)

    def __repr__(self) -> str:
        return f"FieldSpec({self.label})"


RATIONALS = FieldSpec.rationals()
GF_32003 = FieldSpec.prime(32003)


class FaceSet:
    """Faces of a subcomplex of the Taylor complex, as generator masks.

    A face is a subset of generator indices, stored as a bit mask.  The
    empty iterable builds the distinguished Void complex (no faces at
    all), which is not the same thing as the complex {empty face}.
    """

    __slots__ = ("faces",)

    def __init__(self, faces: Iterable[int]):
        self.faces = frozenset(faces)

    @classmethod
    def void(cls) -> "FaceSet":
        return cls(())

    @property
    def is_void(self) -> bool:
        return not self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def __eq__(self, other) -> bool:
        return isinstance(other, FaceSet) and self.faces == other.faces

    def __hash__(self) -> int:
        return hash(self.faces)

    def __repr__(self) -> str:
        if self.is_void:
            return "FaceSet.void()"
        return f"FaceSet({len(self.faces)} faces, dim {self.dimension()})"

    def dimension(self) -> int:
        """Max face dimension; -1 for {empty face} only."""
        return max(f.bit_count() for f in self.faces) - 1

    def as_index_sets(self) -> set[frozenset[int]]:
        return {frozenset(_indices_of(f)) for f in self.faces}

    def is_downward_closed(self) -> bool:
        for f in self.faces:
            rest = f
            while rest:
                low = rest & -rest
                if f ^ low not in self.faces:
                    return False
                rest ^= low
        return True


class ChainComplexRanks:
    """Face counts, boundary ranks, and reduced homology per dimension.

    h_i = c_i - r_i - r_{i+1}, with c_{-1} = 1 whenever the face set is
    nonempty; the Void complex has a zero chain complex throughout.
    """

    __slots__ = ("face_counts", "boundary_ranks", "homology_ranks", "field")

    def __init__(
        self,
        face_counts: dict[int, int],
        boundary_ranks: dict[int, int],
        homology_ranks: dict[int, int],
        field: FieldSpec,
    ):
        self.face_counts = face_counts
        self.boundary_ranks = boundary_ranks
        self.homology_ranks = homology_ranks
        self.field = field

    def c(self, d: int) -> int:
        return self.face_counts.get(d, 0)

    def r(self, d: int) -> int:
        return self.boundary_ranks.get(d, 0)

    def h(self, d: int) -> int:
        return self.homology_ranks.get(d, 0)

    def __repr__(self) -> str:
        hs = {d: v for d, v in sorted(self.homology_ranks.items()) if v}
        return f"ChainComplexRanks(h={hs}, field={self.field.label})"


def taylor_faces_below(
    I: MonomialIdeal, m: SqfMonomial, cap: int = DEFAULT_FACE_CAP
) -> FaceSet:
    """Subsets of generators whose lcm strictly divides m.

    Only generators dividing m can appear (anything else already fails
    divisibility), and any subset whose lcm reaches m exactly is pruned
    along with all of its supersets.  m = 1 gives Void.
    """
    if m.is_one:
        return FaceSet.void()
    target = m.mask
    div = [i for i, g in enumerate(I.gens) if g.divides(m)]
    faces = [0]
    layer = [(0, -1, 0)]  # (face mask, last position in div, lcm mask)
    while layer:
        grown = []
        for fmask, last, lc in layer:
            for pos in range(last + 1, len(div)):
                gi = div[pos]
                lc2 = lc | I.gens[gi].mask
                if lc2 == target:
                    continue  # supersets can only stay at m
                nf = fmask | 1 << gi
                faces.append(nf)
                if len(faces) > cap:
                    raise SizeLimitExceeded(
                        f"face count exceeds cap {cap}", partial=None
                    )
                grown.append((nf, pos, lc2))
        layer = grown
    return FaceSet(faces)


def _face_key(mask: int) -> tuple[int, ...]:
    return _indices_of(mask)

def boundary_matrix(
    faces_lower: Sequence[int], faces_upper: Sequence[int]
) -> np.ndarray:
    """Signed incidence matrix from d-faces (columns) to (d-1)-faces (rows).

    Vertices inside a face are taken in ascending generator index; the
    k-th deletion gets sign (-1)^k.
    """
    row_of = {f: i for i, f in enumerate(faces_lower)}
    M = np.zeros((len(faces_lower), len(faces_upper)), dtype=np.int64)
    for col, f in enumerate(faces_upper):
        sign = 1
        for v in _indices_of(f):
            M[row_of[f ^ (1 << v)], col] = sign
            sign = -sign
    return M


def faces_by_dimension(faces: FaceSet) -> dict[int, list[int]]:
    """Faces grouped by dimension, each group sorted by index tuple."""
    groups: dict[int, list[int]] = {}
    for f in faces.faces:
        groups.setdefault(f.bit_count() - 1, []).append(f)
    for d in groups:
        groups[d].sort(key=_face_key)
    return groups


def reduced_homology_ranks(
    faces: FaceSet, field: FieldSpec = RATIONALS
) -> ChainComplexRanks:
    """Exact reduced homology ranks of a downward-closed face set."""
    if faces.is_void:
        return ChainComplexRanks({}, {}, {}, field)
    groups = faces_by_dimension(faces)
    face_counts = {d: len(g) for d, g in groups.items()}
    boundary_ranks: dict[int, int] = {}
    top = max(groups)
    for d in range(0, top + 1):
        M = boundary_matrix(groups[d - 1], groups[d])
        boundary_ranks[d] = matrix_rank(M, field)
    homology = {}
    for d in range(-1, top + 1):
        homology[d] = (
            face_counts.get(d, 0)
            - boundary_ranks.get(d, 0)
            - boundary_ranks.get(d + 1, 0)
        )
    return ChainComplexRanks(face_counts, boundary_ranks, homology, field)


# ---------------------------------------------------------------------------
# exact rank


class _Int64Overflow(Exception):
    pass


def matrix_rank(M, field: FieldSpec = RATIONALS) -> int:
    """Exact rank of an integer matrix over the chosen field."""
    if isinstance(M, np.ndarray) and M.dtype == np.int64 and M.ndim == 2:
        rows = None
        A = M
    else:
        rows = [[int(x) for x in row] for row in M]
        A = None
    if field.p is not None:
        p = field.p
        if A is None:
            A = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
            if A.ndim != 2:
                A = A.reshape(len(rows), 0)
        return _rank_modp(A, p)
    if A is None:
        if not rows or not rows[0]:
            return 0
        if max(abs(x) for row in rows for x in row) >= _INT64_SAFE:
            return _rank_bareiss_bigint(rows)
        A = np.array(rows, dtype=np.int64)
    if A.size == 0:
        return 0
    try:
        return _rank_bareiss_int64(A.copy())
    except _Int64Overflow:
        if rows is None:
            rows = [[int(x) for x in row] for row in A]
        return _rank_bareiss_bigint(rows)


def _rank_bareiss_int64(A: np.ndarray) -> int:
    """Fraction-free elimination in int64; raises on potential overflow."""
    nrows, ncols = A.shape
    r = 0
    prev = np.int64(1)
    for c in range(ncols):
        if r == nrows:
            break
        if np.abs(A[r:]).max(initial=0) >= _INT64_SAFE:
            raise _Int64Overflow
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        piv = A[r, c]
        if r + 1 < nrows:
            col = A[r + 1 :, c].copy()
            A[r + 1 :] *= piv
            A[r + 1 :] -= col[:, None] * A[r]
            # exact in every row: entries remain minors of the input
            A[r + 1 :] //= prev
        prev = piv
        r += 1
    return r


def _rank_bareiss_bigint(M: list[list[int]]) -> int:
    """Pure-python Bareiss with exact big-integer arithmetic."""
    M = [list(row) for row in M]
    nrows, ncols = len(M), len(M[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if M[i][c]), None)
        if pivot_row is None:
            continue
        M[r], M[pivot_row] = M[pivot_row], M[r]
        piv = M[r][c]
        Mr = M[r]
        for i in range(r + 1, nrows):
            Mi = M[i]
            f = Mi[c]
            if f:
                for j in range(ncols):
                    Mi[j] = (piv * Mi[j] - f * Mr[j]) // prev
            elif prev != 1:
                for j in range(ncols):
                    Mi[j] = piv * Mi[j] // prev
            elif piv != 1:
                for j in range(ncols):
                    Mi[j] = piv * Mi[j]
        prev = piv
        r += 1
    return r


def _rank_modp(A: np.ndarray, p: int) -> int:
    """Row elimination mod p; p < 2^31 keeps products inside int64."""
    A = np.mod(A, p)
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        q = r + int(nz[0])
        if q != r:
            A[[r, q]] = A[[q, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = A[r] * inv % p
        if r + 1 < nrows:
            factors = A[r + 1 :, c].copy()
            A[r + 1 :] -= factors[:, None] * A[r]
            np.mod(A[r + 1 :], p, out=A[r + 1 :])
        r += 1
    return r
