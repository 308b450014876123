"""Subadditivity of maximal shifts: audits, witnesses, certificates.

t_i is the largest degree with a nonzero Betti number in homological
degree i.  The audit checks every t_{a+b} <= t_a + t_b directly from the
exact table; witness pairs and bouquet partitions then certify
individual inequalities structurally.

Run with:  python3 demos/06_subadditivity_report.py
"""

from sqfbetti import (
    SqfMonomial,
    betti_table,
    bouquet_subadditivity,
    build_bouquet_set,
    facet_complex,
    format_monomial,
    parse_ideal_text,
    search_complement_witnesses,
    top_degree_check,
    verify_subadditivity,
)

I = parse_ideal_text("a x\na y\nb z\nb v\nb w\nc u\nc g\ny z\na z")
print("ideal: (ax, ay, bz, bv, bw, cu, cg, yz, az)")
table = betti_table(I)

print()
print("== the audit ==")
report = verify_subadditivity(I, table=table)
print(f"projective dimension {report.pd}, t = {report.t}")
print("subadditivity holds:", report.holds)

print()
print("== complement witnesses ==")
witnessed = verify_subadditivity(I, table=table, with_witnesses=True)
for (i, a, b), pairs in sorted(witnessed.witnesses.items()):
    if not pairs:
        print(f"  t_{i} <= t_{a} + t_{b}: no complement witness")
        continue
    m, m2 = pairs[0]
    print(f"  t_{i} <= t_{a} + t_{b}: witnessed by "
          f"({format_monomial(m, I.vars)}, {format_monomial(m2, I.vars)})")

print()
print("== one pair in detail ==")
pairs = search_complement_witnesses(I, 7, 2, 5, table=table, all_pairs=True)
print(f"degree split 7 = 2 + 5 has {len(pairs)} complement witness pairs;")
m, m2 = pairs[0]
print(f"first: m = {format_monomial(m, I.vars)}, "
      f"m2 = {format_monomial(m2, I.vars)}")
print(f"  beta_(2, m) = {table.multigraded[(2, m)]}, "
      f"beta_(5, m2) = {table.multigraded[(5, m2)]}")
print(f"  deg m + deg m2 = {m.degree + m2.degree} "
      f">= number of variables = {len(I.vars.names)}")

print()
print("== the top-degree inequality ==")
check = top_degree_check(I, 7, 2, 5, table=table)
print(f"beta_(7, top) >= 1, so t_7 = r = {check.r}; "
      f"t_2 + t_5 = {check.t_a} + {check.t_b} >= {check.r}: {check.holds}")

print()
print("== bouquet certificates ==")
delta = facet_complex(I)


def fid(text):
    return delta.facet_index(SqfMonomial.from_names(I.vars, text.split()))


groups = [[fid(t) for t in g]
          for g in (("a x", "a y"), ("b z", "b v", "b w"), ("c u", "c g"))]
bset = build_bouquet_set(delta, groups)
for left in ([0], [1], [0, 2]):
    cert = bouquet_subadditivity(bset, left, table=table)
    print(f"  split {cert.b_left} + {cert.b_right}: "
          f"t_{cert.b_total} = {cert.t_total} <= "
          f"t_{cert.b_left} + t_{cert.b_right} = "
          f"{cert.t_left} + {cert.t_right}")
    print(f"    complement pair ({format_monomial(cert.m_left, I.vars)}, "
          f"{format_monomial(cert.m_right, I.vars)}), "
          f"beta = {cert.beta_left}, {cert.beta_right}")
