"""The semi-infinite Bruhat graph on Peterson representatives.

Vertices are the Peterson coset representatives for a parabolic subset
J; there is an edge x -> s_beta x labelled by a positive real root beta
whenever the target is again a representative and the semi-infinite
length goes up by exactly one.

Out-edge labels at x fall into a short list of candidate classes (one
per positive root outside the parabolic subsystem), which keeps the
graph finitely branching; ``candidate_labels`` enumerates them and the
exhaustive scans in the test suite confirm no edge falls outside the
list.

``ChainSearcher`` grows the graph lazily and answers a-chain queries
(chains all of whose labels pair integrally with the shape weight after
scaling by the cut a), both one pair at a time with an explicit witness
path and in bitset batches over many source states.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import (
    AffineRealRoot,
    RootDatum,
    Weight,
    coroot_pairing,
    is_positive_root,
    is_valid_root,
    support_complement,
)
from .weyl import (
    AffineWeylElement,
    act_on_root,
    aff_inv,
    aff_mul,
    mat_act,
    peterson_contains,
    reflection_element,
    roots_in_parabolic,
    semi_infinite_length,
    z_of,
)


def translation_state(datum: RootDatum, J, xi) -> AffineWeylElement:
    """z_xi t_xi for a J-adjusted xi."""
    return AffineWeylElement(z_of(datum, J, xi), tuple(xi))


def is_sib_edge(datum: RootDatum, J, x: AffineWeylElement, beta: AffineRealRoot) -> bool:
    """Generic edge test x -> s_beta x; assumes x is a Peterson
    representative."""
    if not is_positive_root(datum, beta):
        return False
    y = aff_mul(datum, reflection_element(datum, beta), x)
    if semi_infinite_length(datum, y) != semi_infinite_length(datum, x) + 1:
        return False
    return peterson_contains(datum, J, y)


def label_universe(datum: RootDatum, max_delta: int = None):
    """All shapes an edge label can take: alpha (positive), or the
    minimal-delta quantum forms over negative classical parts."""
    out = []
    for k, g in enumerate(datum.positive_roots):
        out.append(AffineRealRoot(g, 0, 1))
        neg = tuple(-c for c in g)
        if not datum.twisted:
            out.append(AffineRealRoot(neg, 1, 1))
        elif datum.a2l2:
            if datum.is_short[k]:
                out.append(AffineRealRoot(neg, 1, 2))
            else:
                out.append(AffineRealRoot(neg, 1, 1))
        else:
            out.append(AffineRealRoot(neg, datum.c_root[k], 1))
    return out


def positive_real_roots_window(datum: RootDatum, max_delta: int):
    """Every positive real root with delta coefficient at most
    max_delta, for exhaustive scans."""
    out = []
    for k, g in enumerate(datum.positive_roots):
        for sgn in (1, -1):
            gam = g if sgn == 1 else tuple(-c for c in g)
            start = 0 if sgn == 1 else 1
            for m in range(start, max_delta + 1):
                b = AffineRealRoot(gam, m, 1)
                if is_valid_root(datum, b):
                    out.append(b)
                if datum.a2l2:
                    b2 = AffineRealRoot(gam, m, 2)
                    if is_valid_root(datum, b2):
                        out.append(b2)
    return out


def candidate_labels(datum: RootDatum, J, x: AffineWeylElement):
    """Candidate out-edge labels at a Peterson representative x: one per
    positive root outside the parabolic subsystem."""
    j0 = frozenset(int(j) - 1 for j in J)
    out = []
    for k, g in enumerate(datum.positive_roots):
        if all(g[i] == 0 for i in range(datum.l) if i not in j0):
            continue  # supported on J
        img = mat_act(x.w, g)
        if img in datum.root_index:
            out.append(AffineRealRoot(img, 0, 1))
        elif not datum.twisted:
            out.append(AffineRealRoot(img, 1, 1))
        elif datum.a2l2:
            if datum.is_short[k]:
                out.append(AffineRealRoot(img, 1, 2))
            else:
                out.append(AffineRealRoot(img, 1, 1))
        else:
            out.append(AffineRealRoot(img, datum.c_root[k], 1))
    return out


def out_edges(datum: RootDatum, J, x: AffineWeylElement):
    """All edges x -> y, as (label, y) pairs in a deterministic order."""
    lx = semi_infinite_length(datum, x)
    found = []
    for beta in candidate_labels(datum, J, x):
        y = aff_mul(datum, reflection_element(datum, beta), x)
        if semi_infinite_length(datum, y) != lx + 1:
            continue
        if peterson_contains(datum, J, y):
            found.append((beta, y))
    found.sort(key=lambda e: _label_key(e[0]))
    return found


def in_edges(datum: RootDatum, J, x: AffineWeylElement):
    """All edges y -> x, as (label, y) pairs."""
    lx = semi_infinite_length(datum, x)
    found = []
    for beta in label_universe(datum):
        y = aff_mul(datum, reflection_element(datum, beta), x)
        if semi_infinite_length(datum, y) != lx - 1:
            continue
        if peterson_contains(datum, J, y):
            found.append((beta, y))
    found.sort(key=lambda e: _label_key(e[0]))
    return found


def _label_key(b: AffineRealRoot):
    return (b.delta_coeff, b.mult, b.gamma)


def edge_weight_pairing(datum: RootDatum, x: AffineWeylElement, beta: AffineRealRoot,
                        lam: Weight) -> int:
    """<beta^vee, x lambda>, computed on the source side as
    <(x^{-1} beta)^vee, lambda>."""
    pulled = act_on_root(datum, aff_inv(datum, x), beta)
    v = coroot_pairing(datum, pulled, lam)
    assert isinstance(v, int) or v.denominator == 1
    return int(v)


def is_admissible(a: Fraction, v: int) -> bool:
    return (a * v).denominator == 1


def quantum_in_edge_witness(datum: RootDatum, J, i: int, xi):
    """A quantum-class in-edge of z_xi t_xi whose label direction
    projects to alpha_i outside J: returns (beta, source) or None.

    Searched over gamma outside the parabolic subsystem whose
    J-complement part is exactly alpha_i.
    """
    j0 = frozenset(int(j) - 1 for j in J)
    assert (i - 1) not in j0
    x = translation_state(datum, J, xi)
    for k, g in enumerate(datum.positive_roots):
        proj_ok = g[i - 1] == 1 and all(
            g[r] == 0 for r in range(datum.l) if r not in j0 and r != i - 1
        )
        if not proj_ok:
            continue
        neg = tuple(-c for c in g)
        if datum.a2l2:
            beta = (AffineRealRoot(neg, 1, 2) if datum.is_short[k]
                    else AffineRealRoot(neg, 1, 1))
        elif datum.twisted:
            beta = AffineRealRoot(neg, datum.c_root[k], 1)
        else:
            beta = AffineRealRoot(neg, 1, 1)
        y = aff_mul(datum, reflection_element(datum, beta), x)
        if (semi_infinite_length(datum, y) == semi_infinite_length(datum, x) - 1
                and peterson_contains(datum, J, y)):
            return beta, y
    return None


def translation_out_edges_are_simple(datum: RootDatum, J, xi) -> bool:
    """Every out-edge of z_xi t_xi carries a simple-root label alpha_i
    with i outside J."""
    j0 = frozenset(int(j) - 1 for j in J)
    x = translation_state(datum, J, xi)
    for beta, _y in out_edges(datum, J, x):
        if beta.delta_coeff != 0 or beta.mult != 1:
            return False
        if sum(beta.gamma) != 1:
            return False
        i0 = beta.gamma.index(1)
        if i0 in j0:
            return False
    return True


class ChainSearcher:
    """Lazily explored semi-infinite Bruhat graph for one shape weight,
    with a-chain queries."""

    def __init__(self, datum: RootDatum, lam: Weight):
        self.datum = datum
        self.lam = lam
        self.J = support_complement(datum, lam)
        self._ids = {}
        self._elems = []
        self._levels = []
        self._out = []  # id -> list[(label, target_id, pairing)] | None

    def state_id(self, x: AffineWeylElement) -> int:
        if x not in self._ids:
            self._ids[x] = len(self._elems)
            self._elems.append(x)
            self._levels.append(semi_infinite_length(self.datum, x))
            self._out.append(None)
        return self._ids[x]

    def _edges_of(self, u: int):
        if self._out[u] is None:
            x = self._elems[u]
            es = []
            for beta, y in out_edges(self.datum, self.J, x):
                v = edge_weight_pairing(self.datum, x, beta, self.lam)
                es.append((beta, self.state_id(y), v))
            self._out[u] = es
        return self._out[u]

    def find_a_chain(self, a: Fraction, src: AffineWeylElement, dst: AffineWeylElement):
        """A nonzero-length a-chain from src to dst as a list of
        (label, next_element) steps, or None.  Deterministic: breadth
        first with labels in sorted order."""
        s, t = self.state_id(src), self.state_id(dst)
        if s == t:
            return None
        top = self._levels[t]
        if self._levels[s] >= top:
            return None
        parent = {s: None}
        frontier = [s]
        while frontier and t not in parent:
            nxt = []
            for u in frontier:
                for beta, w, v in self._edges_of(u):
                    if self._levels[w] > top or w in parent:
                        continue
                    if not is_admissible(a, v):
                        continue
                    parent[w] = (u, beta)
                    nxt.append(w)
            frontier = nxt
        if t not in parent:
            return None
        steps = []
        cur = t
        while parent[cur] is not None:
            u, beta = parent[cur]
            steps.append((beta, self._elems[cur]))
            cur = u
        steps.reverse()
        return steps

    def chain_exists(self, a: Fraction, src: AffineWeylElement, dst: AffineWeylElement) -> bool:
        return self.find_a_chain(a, src, dst) is not None

    def batch_reach(self, a: Fraction, sources):
        """Bitset propagation: for each explored state reachable from
        the given sources through admissible edges (nonzero length),
        record which sources reach it.

        Returns a dict element -> int bitmask over source positions.
        Exploration is capped at the highest source level, which is the
        relevant window when sources and targets come from one box.
        """
        ids = [self.state_id(x) for x in sources]
        top = max(self._levels[i] for i in ids)
        srcbit = {u: 1 << p for p, u in enumerate(ids)}
        # make sure everything reachable within the window is explored
        seen = set(ids)
        frontier = list(ids)
        while frontier:
            nxt = []
            for u in frontier:
                if self._levels[u] >= top:
                    continue
                for _beta, w, _v in self._edges_of(u):
                    if self._levels[w] <= top and w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        acc = {u: 0 for u in seen}
        for u in sorted(seen, key=lambda q: self._levels[q]):
            if self._levels[u] >= top:
                continue
            push = acc[u] | srcbit.get(u, 0)
            if not push:
                continue
            for _beta, w, v in self._out[u] or ():
                if w in acc and self._levels[w] <= top and is_admissible(a, v):
                    acc[w] |= push
        return {self._elems[u]: acc[u] for u in seen}

    def validate_chain(self, a: Fraction, src: AffineWeylElement, steps) -> bool:
        """Re-check a witness edge by edge with the generic tests."""
        cur = src
        for beta, nxt in steps:
            if not is_sib_edge(self.datum, self.J, cur, beta):
                return False
            if aff_mul(self.datum, reflection_element(self.datum, beta), cur) != nxt:
                return False
            if not is_admissible(a, edge_weight_pairing(self.datum, cur, beta, self.lam)):
                return False
            cur = nxt
        return True
