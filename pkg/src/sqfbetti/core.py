"""Square-free monomials, ideals, and the facet dictionary.

Variables are interned once into a :class:`VariableTable`; monomials are
bit masks over that table.  A :class:`MonomialIdeal` keeps a minimal,
canonically sorted generating set, and converts back and forth with the
:class:`SimplicialComplex` of its generator supports (the facet ideal /
facet complex dictionary).
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    EmptyInput,
    NotAFacet,
    ParseError,
    TooManyVariables,
    UncoveredVariable,
)

MAX_NARROW_VARS = 64


def _indices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class VariableTable:
    """Interned variable names; order is fixed at construction.

    The order is first-seen input order, and every canonical sort in the
    package refers back to it.  More than 64 variables requires
    ``wide=True`` (nothing changes internally, masks are plain ints; the
    cap just keeps accidental huge inputs from sailing through).
    """

    __slots__ = ("names", "index")

    def __init__(self, names: Iterable[str], wide: bool = False):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ParseError("duplicate variable names")
        if len(names) > MAX_NARROW_VARS and not wide:
            raise TooManyVariables(
                f"{len(names)} variables; pass wide=True to allow more than "
                f"{MAX_NARROW_VARS}"
            )
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableTable) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableTable({list(self.names)!r})"

    def name(self, i: int) -> str:
        return self.names[i]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1

    def mask_of(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            try:
                m |= 1 << self.index[name]
            except KeyError:
                raise ParseError(f"unknown variable {name!r}") from None
        return m


class SqfMonomial:
    """A square-free monomial: a set of variable indices stored as a mask.

    The empty support is the monomial 1.  Divisibility is mask inclusion,
    lcm is union, gcd is intersection.
    """

    __slots__ = ("mask",)

    def __init__(self, mask: int = 0):
        if mask < 0:
            raise ValueError("negative mask")
        self.mask = mask

    @classmethod
    def one(cls) -> "SqfMonomial":
        return cls(0)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "SqfMonomial":
        m = 0
        for i in indices:
            if i < 0:
                raise ValueError(f"negative variable index {i}")
            m |= 1 << i
        return cls(m)

    @classmethod
    def from_names(cls, vars: VariableTable, names: Iterable[str]) -> "SqfMonomial":
        return cls(vars.mask_of(names))

    def indices(self) -> tuple[int, ...]:
        return _indices_of(self.mask)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def is_one(self) -> bool:
        return self.mask == 0

    def divides(self, other: "SqfMonomial") -> bool:
        return self.mask | other.mask == other.mask

    def lcm(self, other: "SqfMonomial") -> "SqfMonomial":
        return SqfMonomial(self.mask | other.mask)

    def gcd(self, other: "SqfMonomial") -> "SqfMonomial":
        return SqfMonomial(self.mask & other.mask)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.degree, self.indices())

    def __eq__(self, other) -> bool:
        return isinstance(other, SqfMonomial) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __lt__(self, other: "SqfMonomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"SqfMonomial({list(self.indices())!r})"


def format_monomial(m: SqfMonomial, vars: VariableTable) -> str:
    if m.is_one:
        return "1"
    return "*".join(vars.names[i] for i in m.indices())


def monomial_names(m: SqfMonomial, vars: VariableTable) -> list[str]:
    return [vars.names[i] for i in m.indices()]


class MonomialIdeal:
    """A square-free monomial ideal with a minimal generating set.

    ``gens`` is canonically sorted by (degree, sorted index tuple); the
    position of a generator here is the facet index used everywhere else
    in the package.  Construct through :func:`normalize_generators` unless
    the invariants are already known to hold.
    """

    __slots__ = ("vars", "gens")

    def __init__(self, vars: VariableTable, gens: Sequence[SqfMonomial]):
        self.vars = vars
        self.gens = tuple(gens)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.vars == other.vars
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.vars, self.gens))

    def __repr__(self) -> str:
        gens = ", ".join(format_monomial(g, self.vars) for g in self.gens)
        return f"MonomialIdeal({gens})"

    def __len__(self) -> int:
        return len(self.gens)

    def top(self) -> SqfMonomial:
        """lcm of all generators, x_1...x_n by the covering invariant."""
        m = 0
        for g in self.gens:
            m |= g.mask
        return SqfMonomial(m)

    def contains(self, m: SqfMonomial) -> bool:
        """Ideal membership: some generator divides m."""
        return any(g.divides(m) for g in self.gens)

    def index_of(self, g: SqfMonomial) -> int:
        for i, h in enumerate(self.gens):
            if h.mask == g.mask:
                return i
        raise ValueError(f"{g!r} is not a generator")


class _EmptyIdeal:
    """Distinguished marker for an induced subideal with no generators.

    Falsy, so ``if induced:`` reads naturally.  A singleton: compare with
    ``is EMPTY_IDEAL``.
    """

    __slots__ = ()
    gens: tuple = ()

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "EMPTY_IDEAL"


EMPTY_IDEAL = _EmptyIdeal()


class SimplicialComplex:
    """Facet list over a variable table; facets are an antichain."""

    __slots__ = ("vars", "facets")

    def __init__(self, vars: VariableTable, facets: Sequence[SqfMonomial]):
        facets = tuple(facets)
        for i, f in enumerate(facets):
            for j, g in enumerate(facets):
                if i != j and f.divides(g):
                    raise ParseError(
                        f"facet {format_monomial(f, vars)} is contained in "
                        f"{format_monomial(g, vars)}"
                    )
        covered = 0
        for f in facets:
            covered |= f.mask
        if covered != vars.full_mask:
            for i in range(len(vars)):
                if not covered >> i & 1:
                    raise UncoveredVariable(vars.names[i])
        self.vars = vars
        self.facets = facets

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.vars == other.vars
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.vars, self.facets))

    def __len__(self) -> int:
        return len(self.facets)

    def __repr__(self) -> str:
        fs = ", ".join(format_monomial(f, self.vars) for f in self.facets)
        return f"SimplicialComplex<{fs}>"

    def facet_index(self, f) -> int:
        """Resolve an int index or a monomial to a facet position."""
        if isinstance(f, SqfMonomial):
            for i, g in enumerate(self.facets):
                if g.mask == f.mask:
                    return i
            raise NotAFacet(f"{format_monomial(f, self.vars)} is not a facet")
        i = int(f)
        if not 0 <= i < len(self.facets):
            raise NotAFacet(f"facet index {i} out of range")
        return i


def normalize_generators(
    raw: Sequence[SqfMonomial], vars: VariableTable
) -> MonomialIdeal:
    """Build a MonomialIdeal from an arbitrary generator list.

    Deduplicates, drops generators divisible by another (keeping the
    divisibility-minimal ones), sorts canonically, and rejects inputs
    that leave some variable of the table uncovered.
    """
    if not raw:
        raise EmptyInput("no generators given")
    full = vars.full_mask
    masks = set()
    for g in raw:
        if g.mask & ~full:
            raise ParseError("generator support outside the variable table")
        masks.add(g.mask)
    if 0 in masks:
        # the unit ideal is out of scope: 1 divides everything
        raise ParseError("the monomial 1 is not allowed as a generator")
    minimal = [
        m
        for m in masks
        if not any(o != m and o | m == m for o in masks)
    ]
    covered = 0
    for m in minimal:
        covered |= m
    if covered != full:
        for i in range(len(vars)):
            if not covered >> i & 1:
                raise UncoveredVariable(vars.names[i])
    gens = sorted((SqfMonomial(m) for m in minimal), key=SqfMonomial.sort_key)
    return MonomialIdeal(vars, gens)


def facet_complex(I: MonomialIdeal) -> SimplicialComplex:
    """The facet complex of I: one facet per generator, same order."""
    return SimplicialComplex(I.vars, I.gens)


def facet_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """The facet ideal of a complex; inverse of :func:`facet_complex`."""
    return normalize_generators(delta.facets, delta.vars)


def induced_subideal(I: MonomialIdeal, m: SqfMonomial):
    """Generators of I dividing m, over the variables they use.

    Returns :data:`EMPTY_IDEAL` when no generator divides m.  For
    m in LCM(I) the restricted variable set equals supp(m); in general it
    is the union of the retained supports, which keeps the covering
    invariant intact.
    """
    retained = [g for g in I.gens if g.divides(m)]
    if not retained:
        return EMPTY_IDEAL
    union = 0
    for g in retained:
        union |= g.mask
    support = _indices_of(union)
    position = {v: p for p, v in enumerate(support)}
    sub_vars = VariableTable(
        [I.vars.names[v] for v in support], wide=len(support) > MAX_NARROW_VARS
    )
    sub_gens = [
        SqfMonomial.from_indices(position[v] for v in g.indices())
        for g in retained
    ]
    # index order is preserved by the restriction, so the canonical sort is too
    return MonomialIdeal(sub_vars, sub_gens)


def restrict_monomial(
    m: SqfMonomial, src: VariableTable, dst: VariableTable
) -> SqfMonomial:
    """Re-express m over dst's indices; dst must contain every name used."""
    return SqfMonomial(dst.mask_of(src.names[i] for i in m.indices()))


def free_vertices(delta: SimplicialComplex, f) -> frozenset[int]:
    """Vertices of facet f lying in no other facet of the complex."""
    i = delta.facet_index(f)
    others = 0
    for j, g in enumerate(delta.facets):
        if j != i:
            others |= g.mask
    return frozenset(_indices_of(delta.facets[i].mask & ~others))


def polarize(raw: Sequence[Mapping[str, int]], wide: bool = False) -> MonomialIdeal:
    """Polarize a monomial ideal given as exponent mappings.

    x^e becomes x * x(1) * ... * x(e-1) over fresh variables, interned in
    first-occurrence order.  Square-free input comes back unchanged.
    """
    if not raw:
        raise EmptyInput("no generators given")
    names: list[str] = []
    seen: dict[str, int] = {}

    def intern(name: str) -> int:
        if name not in seen:
            seen[name] = len(names)
            names.append(name)
        return seen[name]

    gen_indices: list[list[int]] = []
    for gen in raw:
        indices = []
        for base, exp in gen.items():
            if exp < 1:
                raise ParseError(f"exponent of {base!r} must be >= 1")
            indices.append(intern(base))
            for copy in range(1, exp):
                indices.append(intern(f"{base}({copy})"))
        gen_indices.append(indices)
    vars = VariableTable(names, wide=wide or len(names) > MAX_NARROW_VARS)
    gens = [SqfMonomial.from_indices(ix) for ix in gen_indices]
    return normalize_generators(gens, vars)


# ---------------------------------------------------------------------------
# input / output formats


def parse_ideal_text(text: str, wide: bool = False) -> MonomialIdeal:
    """One generator per line; variables split on whitespace or '*'.

    Lines starting with '#' are comments.  Variables are interned in
    first-seen order.
    """
    names: list[str] = []
    seen: dict[str, int] = {}
    raw_gens: list[list[int]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = [t for t in line.replace("*", " ").split() if t]
        indices = []
        for tok in tokens:
            if tok not in seen:
                seen[tok] = len(names)
                names.append(tok)
            indices.append(seen[tok])
        raw_gens.append(indices)
    if not raw_gens:
        raise EmptyInput("no generators in input")
    vars = VariableTable(names, wide=wide)
    gens = [SqfMonomial.from_indices(ix) for ix in raw_gens]
    return normalize_generators(gens, vars)


def format_ideal_text(I: MonomialIdeal) -> str:
    return "\n".join(format_monomial(g, I.vars) for g in I.gens)


def parse_ideal_json(data, wide: bool = False) -> MonomialIdeal:
    """{"variables": [names], "generators": [[names or indices], ...]}"""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e}") from None
    if not isinstance(data, dict):
        raise ParseError("JSON ideal must be an object")
    try:
        names = data["variables"]
        raw = data["generators"]
    except KeyError as e:
        raise ParseError(f"missing key {e}") from None
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise ParseError("'variables' must be a list of strings")
    vars = VariableTable(names, wide=wide)
    gens = []
    for entry in raw:
        if not isinstance(entry, list):
            raise ParseError("each generator must be a list")
        if all(isinstance(v, int) for v in entry):
            if any(not 0 <= v < len(vars) for v in entry):
                raise ParseError("generator index out of range")
            gens.append(SqfMonomial.from_indices(entry))
        else:
            gens.append(SqfMonomial.from_names(vars, entry))
    if not gens:
        raise EmptyInput("no generators in input")
    return normalize_generators(gens, vars)


def format_ideal_json(I: MonomialIdeal) -> dict:
    return {
        "variables": list(I.vars.names),
        "generators": [monomial_names(g, I.vars) for g in I.gens],
    }


def parse_ideal(text: str, wide: bool = False) -> MonomialIdeal:
    """Autodetect JSON vs text format and parse accordingly."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_ideal_json(stripped, wide=wide)
    return parse_ideal_text(text, wide=wide)


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
