"""Square-free monomial ideals and the facet complex dictionary.

Run with:  python3 demos/01_ideals_and_complexes.py
"""

from sqfbetti import (
    SqfMonomial,
    facet_complex,
    facet_ideal,
    format_ideal_text,
    format_monomial,
    free_vertices,
    induced_subideal,
    parse_ideal_text,
    polarize,
    restrict_monomial,
)

print("== parsing and normalization ==")
raw = """
# generators may repeat or be non-minimal; both are cleaned up
x*y
# the next line is x*y again, spelled differently
y x
# x*y*z is divisible by x*y, so it is not minimal
x y z
z u
"""
I = parse_ideal_text(raw)
print("input had 4 lines; minimal basis:")
print(format_ideal_text(I))

print()
print("== the facet complex ==")
delta = facet_complex(I)
print("facets:", [format_monomial(f, delta.vars) for f in delta.facets])
for f in delta.facets:
    free = free_vertices(delta, f)
    names = sorted(delta.vars.name(v) for v in free)
    print(f"  free vertices of {format_monomial(f, delta.vars)}: {names or 'none'}")
J = facet_ideal(delta)
print("round trip facet_ideal(facet_complex(I)) == I:", J == I)

print()
print("== induced subideals ==")
J = parse_ideal_text("x y\ny z\nx z\nz a\na b\nb c")
m = SqfMonomial.from_names(J.vars, ["x", "y", "z"])
sub = induced_subideal(J, m)
print(f"generators of (xy, yz, xz, za, ab, bc) dividing "
      f"{format_monomial(m, J.vars)}:")
print("  " + format_ideal_text(sub).replace("\n", "\n  "))
m_sub = restrict_monomial(m, J.vars, sub.vars)
print("the multidegree re-expressed over the small ring:",
      format_monomial(m_sub, sub.vars))
print("its variables:", list(sub.vars.names))

print()
print("== polarization ==")
K = polarize([{"x": 2, "y": 1}, {"x": 3}])
print("x^2*y and x^3 polarize to:")
print("  " + format_ideal_text(K).replace("\n", "\n  "))
print("over variables", list(K.vars.names))
