"""Enumerate the special translation-labelled paths in a small box and
confirm the integrality characterization against the chain oracle.

Run:  python3 demos/component_census.py
"""

from fractions import Fraction

from silspath.cartan import datum, dominant_weight
from silspath.components import (
    component_orbit_probe,
    jc,
    realize,
    special_elements_in_box,
    sublemma_scan,
    turn_set,
)
from silspath.sibg import ChainSearcher

d = datum("Dlp12", 2)
lam = dominant_weight(d, (2, 0))

print("turn grid for multiplicities (2, 0):",
      sorted(str(a) for a in turn_set(d, lam)))
print("indices that stay integral at a=1/2:",
      sorted(jc(d, lam, Fraction(1, 2))))

specials = special_elements_in_box(d, lam, 1)
print("\nspecial elements with entries in the radius-1 box: %d" % len(specials))
searcher = ChainSearcher(d, lam)
for sp in specials:
    eta = realize(d, lam, sp)
    rep = component_orbit_probe(d, lam, sp, 2, searcher)
    print("    cuts %-18s xis %-22s depth-2 orbit size %d"
          % ([str(c) for c in sp.cuts], list(sp.xis), rep["orbit_size"]))

print("\nfull pair scan at radius 1 (characterization vs oracle):")
rep = sublemma_scan(d, lam, radius=1)
print("    %d cut pairs, %d paths covered, %d witnesses, %d mismatches"
      % (rep["pairs_checked"], rep["paths_covered"],
         rep["witnesses_audited"], len(rep["mismatches"])))
