"""Grow a crystal orbit from the straight path and watch the
projection to finite-direction paths commute with the operators.

Run:  python3 demos/crystal_orbit.py
"""

from silspath.cartan import datum, dominant_weight
from silspath.paths import (
    project_to_ls,
    sils_eps_phi,
    sils_root_operator,
    sils_weight,
    trivial_sils_path,
)

d = datum("A2l2", 1)
lam = dominant_weight(d, (2,))

def _show(wt):
    return "(%s; %s delta)" % (",".join(str(c) for c in wt.omega), wt.delta)


eta = trivial_sils_path(d)
print("start: straight path, weight", _show(sils_weight(d, lam, eta)))

seen = {eta}
frontier = [eta]
for depth in range(1, 4):
    grown = []
    for cur in frontier:
        for i in range(d.l + 1):
            for op in "ef":
                nxt = sils_root_operator(d, lam, cur, i, op)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    grown.append(nxt)
    frontier = grown
    print("depth %d: %d new paths, %d total" % (depth, len(grown), len(seen)))

print("\nthe orbit so far, as (weight, segment count, eps/phi at each node):")
for p in sorted(seen, key=lambda q: (len(q.labels), q.cuts)):
    wt = sils_weight(d, lam, p)
    marks = ["%d/%d" % sils_eps_phi(d, lam, p, i) for i in range(d.l + 1)]
    flat = project_to_ls(d, lam, p)
    print("    wt=%-16s segments=%d  eps/phi=%s  projects to %d directions"
          % (_show(wt), len(p.labels), " ".join(marks), len(flat.labels)))
