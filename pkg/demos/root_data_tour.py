"""Walk through the root datum tables for one twisted family.

Run:  python3 demos/root_data_tour.py
"""

from silspath.cartan import coroot_pairing, datum, dominant_weight, simple_affine_root

d = datum("A2l2", 2)
print("family %s, rank %d, finite part %s" % (d.type.family, d.l, d.type.finite))
print("affine Cartan matrix:")
for row in d.cartan_affine:
    print("   ", row)

print("\npositive roots of the finite part, with their c-factors:")
for k, g in enumerate(d.positive_roots):
    kind = "short" if d.is_short[k] else "long"
    print("    %-8s %s  c=%d" % (g, kind, d.c_root[k]))

print("\nhighest short root:", d.theta_s)

lam = dominant_weight(d, (1, 1))
print("\npairings <alpha_i^vee, lambda> for lambda with multiplicities (1, 1):")
for i in range(d.l + 1):
    b = simple_affine_root(d, i)
    print("    i=%d  ->  %s" % (i, coroot_pairing(d, b, lam)))
print("(the doubled node i=%d reads off twice the last multiplicity)" % d.l)
