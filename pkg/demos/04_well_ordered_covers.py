"""Well ordered covers: decisions, search, rotation, splitting.

A well ordered cover of length s certifies beta_{s,m} >= 1 at the lcm m
of its members, and splitting one at any cut point produces a pair of
lattice complements that witness a subadditivity inequality.

Run with:  python3 demos/04_well_ordered_covers.py
"""

from sqfbetti import (
    SqfMonomial,
    alpha_values,
    enumerate_minimal_covers,
    find_well_ordered_covers,
    format_monomial,
    is_well_ordered_cover,
    multigraded_betti,
    parse_ideal_text,
    rotate_cover,
    split_certificate,
)


def show(I, seq):
    return ", ".join(format_monomial(I.gens[k], I.vars) for k in seq)


def gen_of(I, text):
    return I.index_of(SqfMonomial.from_names(I.vars, text.split()))


print("== minimal covers ==")
I = parse_ideal_text("a b z\nb c z\nx y z\na x z")
print("ideal: (abz, bcz, xyz, axz)")
for cover in enumerate_minimal_covers(I):
    print("  minimal cover:", show(I, sorted(cover.members)))

print()
print("== the ordering matters ==")
good = tuple(gen_of(I, t) for t in ("a b z", "b c z", "x y z"))
check = is_well_ordered_cover(I, good)
print(f"({show(I, good)}) accepted: {check.ok}")
for n, j in check.woc.witnesses:
    print(f"  non-member {format_monomial(I.gens[n], I.vars)} "
          f"divides the suffix lcm from position {j} on")

P = parse_ideal_text("x y\ny z\nz u")
for order in ((0, 2), (2, 0)):
    verdict = is_well_ordered_cover(P, order)
    print(f"in (xy, yz, zu): ({show(P, order)}) accepted: {verdict.ok}"
          + ("" if verdict.ok else f"  [{verdict.reason}]"))
print("search over all orderings of all minimal covers:",
      find_well_ordered_covers(P) or "none")

print()
print("== every found cover certifies a Betti number ==")
J = parse_ideal_text("x y\ny z\nx z\nz a\na b\nb c")
found = find_well_ordered_covers(J)
print(f"(xy, yz, xz, za, ab, bc) has {len(found)} well ordered covers; "
      "an example:")
woc = found[0]
m = SqfMonomial.one()
for k in woc.sequence:
    m = m.lcm(J.gens[k])
s = len(woc.sequence)
print(f"  ({show(J, woc.sequence)}), length {s}, lcm "
      f"{format_monomial(m, J.vars)}")
print(f"  beta_({s}, {format_monomial(m, J.vars)}) = "
      f"{multigraded_betti(J, s, m)} >= 1")

print()
print("== alpha values and rotation ==")
K = parse_ideal_text(
    "a b c\nb c d\nc d f\nd e f\ne g\nf g\ng h\nh i\ng i\nf i\ng x\ng y"
)
names = ("g y", "g x", "e g", "f g", "b c d", "g h", "g i", "a b c")
seq = tuple(gen_of(K, t) for t in names)
check = is_well_ordered_cover(K, seq)
print(f"a 12-generator ideal admits ({show(K, seq)})")
alphas, ell = alpha_values(K, check.woc)
for n, a in alphas:
    print(f"  alpha({format_monomial(K.gens[n], K.vars)}) = {a}")
print(f"  ell = min alpha = {ell}")
for i in (2, ell):
    rotated = rotate_cover(check.woc, i)
    ok = is_well_ordered_cover(K, rotated).ok
    print(f"  rotation at {i}: ({show(K, rotated)}) accepted: {ok}")

print()
print("== splitting a cover ==")
for a in range(1, len(woc.sequence)):
    cert = split_certificate(J, woc, a)
    cond = cert.condition or f"direct check, ok: {cert.prefix_woc_ok}"
    print(f"  cut after {a}: m = {format_monomial(cert.m, J.vars):10} "
          f"m2 = {format_monomial(cert.m2, J.vars):12} "
          f"complements: {cert.complement_ok}  prefix via {cond}")
