"""Inspect the semi-infinite Bruhat graph near the identity coset.

Shows the Peterson decomposition of a few elements and the labelled
edges leaving the identity translation, then the same picture after
dropping translation data into the finite quantum graph.

Run:  python3 demos/graph_neighbourhood.py
"""

from silspath.cartan import datum, dominant_weight, support_complement
from silspath.qbg import build_qbg, sib_to_qbg
from silspath.sibg import out_edges, translation_state
from silspath.weyl import peterson_decompose, semi_infinite_length, weyl

d = datum("Dlp12", 2)
lam = dominant_weight(d, (1, 0))
J = support_complement(d, lam)
W = weyl(d)
print("shape multiplicities (1, 0) freeze the parabolic J =", sorted(J))

x = translation_state(d, J, (1, 1))
w, z, xi = peterson_decompose(d, J, x)
print("\ntranslation state at xi=(1,1): w-word %s, z-word %s, length %d"
      % (W.canonical_word(w) or "(e)", W.canonical_word(z) or "(e)",
         semi_infinite_length(d, x)))

e = translation_state(d, J, (0, 0))
print("\nedges out of the identity:")
for b, y in out_edges(d, J, e):
    _w, _z, yxi = peterson_decompose(d, J, y)
    kind = "Bruhat" if b.delta_coeff == 0 else "quantum"
    print("    label %-14s -> xi=%s  (%s)" % (b, yxi, kind))

print("\nsame edges pushed down to the finite quantum graph:")
for b, _y in out_edges(d, J, e):
    q = sib_to_qbg(d, J, e, b)
    print("    %s: %s -> %s on root %s"
          % (q.kind, W.canonical_word(q.source) or "(e)",
             W.canonical_word(q.target) or "(e)", q.label))

edges, _adj = build_qbg(d, J)
print("\nthe finite graph itself has %d edges on %d cosets"
      % (len(edges), len(W.min_reps(frozenset(i - 1 for i in J)))))
