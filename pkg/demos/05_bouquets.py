"""Bouquets of simplices and strongly disjoint families.

A bouquet is a set of facets with a common nonempty root where every
facet keeps a free vertex; a strongly disjoint family is vertex-disjoint
with pairwise 3-distant representatives.  Such families, when they span
the complex and satisfy the outside condition, yield well ordered covers
in blocks.

Run with:  python3 demos/05_bouquets.py
"""

from sqfbetti import (
    SqfMonomial,
    bouquet_orderings,
    build_bouquet_set,
    contains_strongly_disjoint_set,
    facet_complex,
    facet_distance,
    format_monomial,
    is_bouquet,
    is_well_ordered_cover,
    parse_ideal_text,
    representative_systems,
)

I = parse_ideal_text("a x\na y\nb z\nb v\nb w\nc u\nc g\ny z\na z")
delta = facet_complex(I)
print("complex with facets", [format_monomial(f, I.vars) for f in delta.facets])


def fid(text):
    return delta.facet_index(SqfMonomial.from_names(I.vars, text.split()))


print()
print("== single bouquets ==")
for group in (("a x", "a y"), ("b z", "b v", "b w"), ("a x", "b z")):
    check = is_bouquet(delta, [fid(t) for t in group])
    label = ", ".join(t.replace(" ", "*") for t in group)
    if check.ok:
        root = format_monomial(check.bouquet.root, I.vars)
        print(f"  {{{label}}} is a bouquet with root {root}")
    else:
        print(f"  {{{label}}} is not a bouquet: {check.reason}")

print()
print("== facet distances ==")
pairs = (("a x", "a y"), ("a x", "b z"), ("a x", "c u"))
for s, t in pairs:
    d = facet_distance(delta, fid(s), fid(t))
    print(f"  d({s.replace(' ', '*')}, {t.replace(' ', '*')}) = {d}")

print()
print("== the strongly disjoint family ==")
groups = [[fid(t) for t in g]
          for g in (("a x", "a y"), ("b z", "b v", "b w"), ("c u", "c g"))]
bset = build_bouquet_set(delta, groups)
print("family:", bset)
print("spans the complex:", bset.spans_delta)
print("outside condition:", bset.outside_condition_ok)
reps = representative_systems(delta, bset.bouquets)
print(f"{len(reps)} valid representative systems; first:",
      [format_monomial(delta.facets[r], I.vars) for r in reps[0]])

print()
print("== search ==")
found = contains_strongly_disjoint_set(delta)
print(f"exhaustive search finds {len(found)} maximal-size families:")
for f in found:
    print("  " + ", ".join(
        "{" + ", ".join(format_monomial(delta.facets[i], I.vars)
                        for i in b.facets) + "}"
        for b in f.bouquets))

print()
print("== block orderings are well ordered covers ==")
for perm in (None, (2, 0, 1)):
    seq = bouquet_orderings(bset, perm)
    names = ", ".join(format_monomial(I.gens[k], I.vars) for k in seq)
    ok = is_well_ordered_cover(I, seq).ok
    order = "identity order" if perm is None else f"block order {perm}"
    print(f"  {order}: ({names})")
    print(f"    accepted: {ok}")
