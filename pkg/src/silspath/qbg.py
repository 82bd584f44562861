"""Parabolic quantum Bruhat graphs, quantum LS paths, and the two-way
correspondence with the semi-infinite graph.

The graph lives on the finite minimal coset representatives W^J.  An
edge w -> floor(w s_gamma) carries a positive-root label gamma outside
the parabolic and is a Bruhat edge (length +1) or a quantum edge
(length drop 2<rho^vee - rho_J^vee, gamma> - 1).  Both ambient-type
variants use the same graph; they differ only in which edges an a-chain
may use:

* dual untwisted ambient: every edge needs a<gamma^vee, lambda> integral;
* doubled-short ambient ("A2l2"): Bruhat edges and long quantum edges
  need integrality, short quantum edges need a<gamma^vee, lambda> even.

``lift_qls`` rebuilds a semi-infinite path over a quantum LS path by
reverse induction, transporting the translation part along each chain
(quantum edges add z^{-1} gamma).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import (
    AffineRealRoot,
    RootDatum,
    Weight,
    coroot_pairing,
    support_complement,
)
from .paths import SilsPath, _check_shape
from .weyl import (
    AffineWeylElement,
    Mat,
    mat_act,
    mat_inv,
    mat_mul,
    peterson_decompose,
    roots_in_parabolic,
    weyl,
    z_of,
)


@dataclass(frozen=True)
class QbgEdge:
    source: Mat
    target: Mat
    label: tuple  # positive root coordinates
    kind: str  # "Bruhat" or "Quantum"


@dataclass(frozen=True)
class QlsPath:
    labels: tuple  # of Mat, minimal coset representatives
    cuts: tuple


def _j0(datum, J):
    j0 = frozenset(int(j) - 1 for j in J)
    assert all(0 <= i < datum.l for i in j0)
    return j0


def rho_j_pairing(datum: RootDatum, J, gamma) -> Fraction:
    """<rho_J^vee, gamma> where rho_J^vee is the half sum of the
    coroots of the parabolic."""
    k = datum.pos_index(tuple(gamma))
    total = 0
    for j in roots_in_parabolic(datum, J):
        total += sum(
            datum.coroot_coords[j][i] * datum.a_col[k][i] for i in range(datum.l)
        )
    return Fraction(total, 2)


def quantum_length_drop(datum: RootDatum, J, gamma) -> int:
    """2<rho^vee - rho_J^vee, gamma>, always a positive integer for
    gamma outside the parabolic."""
    ht = sum(gamma)
    val = 2 * ht - 2 * rho_j_pairing(datum, J, gamma)
    assert val.denominator == 1 and val > 0
    return int(val)


_QBG_CACHE = {}


def build_qbg(datum: RootDatum, J):
    """All edges of the parabolic quantum Bruhat graph, plus an
    adjacency map source -> edge list."""
    key = (datum, frozenset(J))
    if key not in _QBG_CACHE:
        W = weyl(datum)
        j0 = _j0(datum, J)
        par = set(roots_in_parabolic(datum, J))
        edges = []
        for w in W.min_reps(j0):
            lw = W.length(w)
            for k in range(datum.n_pos):
                if k in par:
                    continue
                g = datum.positive_roots[k]
                v = W.floor(mat_mul(w, W.reflection_mat(k)), j0)
                lv = W.length(v)
                if lv == lw + 1:
                    edges.append(QbgEdge(w, v, g, "Bruhat"))
                elif lv == lw + 1 - quantum_length_drop(datum, J, g):
                    edges.append(QbgEdge(w, v, g, "Quantum"))
        adjacency = {}
        for e in edges:
            adjacency.setdefault(e.source, []).append(e)
        _QBG_CACHE[key] = (tuple(edges), adjacency)
    return _QBG_CACHE[key]


def shape_pairing(datum: RootDatum, gamma, lam: Weight) -> int:
    v = coroot_pairing(datum, AffineRealRoot(tuple(gamma), 0, 1), lam)
    v = Fraction(v)
    assert v.denominator == 1
    return int(v)


def _variant(datum, variant):
    if variant is None:
        return "A2l2" if datum.a2l2 else "dual"
    assert variant in ("dual", "A2l2")
    return variant


def edge_admissible(datum: RootDatum, edge: QbgEdge, a: Fraction, lam: Weight,
                    variant=None) -> bool:
    av = a * shape_pairing(datum, edge.label, lam)
    if av.denominator != 1:
        return False
    if (
        _variant(datum, variant) == "A2l2"
        and edge.kind == "Quantum"
        and datum.is_short[datum.pos_index(edge.label)]
    ):
        return int(av) % 2 == 0
    return True


def qbg_a_chain(datum: RootDatum, J, a: Fraction, lam: Weight,
                     src: Mat, dst: Mat, variant=None):
    """A list of admissible edges from src to dst; [] when src == dst;
    None when unreachable."""
    _edges, adjacency = build_qbg(datum, J)
    parent = {src: None}
    frontier = [src]
    while frontier and dst not in parent:
        nxt = []
        for w in frontier:
            for e in adjacency.get(w, ()):
                if e.target in parent:
                    continue
                if not edge_admissible(datum, e, a, lam, variant):
                    continue
                parent[e.target] = e
                nxt.append(e.target)
        frontier = nxt
    if dst not in parent:
        return None
    steps = []
    cur = dst
    while parent[cur] is not None:
        e = parent[cur]
        steps.append(e)
        cur = e.source
    steps.reverse()
    return steps


# ---------------------------------------------------------------------------
# quantum LS paths


def validate_qls_path(datum: RootDatum, lam: Weight, path: QlsPath,
                      variant=None) -> bool:
    try:
        _check_shape(path.labels, path.cuts)
    except AssertionError:
        return False
    J = support_complement(datum, lam)
    W = weyl(datum)
    reps = set(W.min_reps(_j0(datum, J)))
    if not all(w in reps for w in path.labels):
        return False
    s = len(path.labels)
    for m in range(1, s):
        chain = qbg_a_chain(
            datum, J, path.cuts[m], lam, path.labels[m], path.labels[m - 1],
            variant)
        if chain is None or len(chain) == 0:
            return False
    return True


def _cut_pool(datum, J, lam):
    """Every admissible step at cut a needs a times that step's label
    pairing integral, so a lies on the 1/v grid for some pairing v."""
    par = set(roots_in_parabolic(datum, J))
    pool = set()
    for k in range(datum.n_pos):
        if k in par:
            continue
        v = shape_pairing(datum, datum.positive_roots[k], lam)
        for p in range(1, v):
            pool.add(Fraction(p, v))
    return sorted(pool)


def enumerate_qls(datum: RootDatum, lam: Weight, max_segments: int,
                  variant=None):
    """All quantum LS paths of the given shape with at most
    max_segments segments.  Interior cuts are drawn from the finite
    grid that can carry an admissible chain step."""
    J = support_complement(datum, lam)
    W = weyl(datum)
    reps = W.min_reps(_j0(datum, J))
    pool = _cut_pool(datum, J, lam)
    results = []

    def extend(labels, cuts):
        results.append(QlsPath(
            tuple(labels), (Fraction(0),) + tuple(cuts) + (Fraction(1),)))
        if len(labels) >= max_segments:
            return
        amax = cuts[0] if cuts else Fraction(1)
        for a in pool:
            if a >= amax:
                break
            for w in reps:
                if w == labels[0]:
                    continue
                chain = qbg_a_chain(datum, J, a, lam, labels[0], w, variant)
                if chain:
                    extend([w] + labels, [a] + cuts)

    for w in reps:
        extend([w], [])
    results.sort(key=lambda p: (len(p.labels), p.cuts, p.labels))
    return results


# ---------------------------------------------------------------------------
# back and forth to the semi-infinite graph


def sib_to_qbg(datum: RootDatum, J, x: AffineWeylElement,
               beta: AffineRealRoot) -> QbgEdge:
    """Image of a semi-infinite edge x -> s_beta x under dropping the
    translation data."""
    w, _z, _xi = peterson_decompose(datum, J, x)
    gamma = mat_act(mat_inv(w), beta.gamma)
    k = datum.pos_index(gamma)
    assert gamma in datum.root_index and k not in set(roots_in_parabolic(datum, J))
    W = weyl(datum)
    target = W.floor(mat_mul(w, W.reflection_mat(k)), _j0(datum, J))
    kind = "Bruhat" if beta.delta_coeff == 0 else "Quantum"
    edge = QbgEdge(w, target, gamma, kind)
    assert edge in build_qbg(datum, J)[0]
    return edge


def qbg_to_sib(datum: RootDatum, J, edge: QbgEdge, xi):
    """Lift of a quantum Bruhat graph edge at an adjusted translation
    xi: returns (beta, x) with the semi-infinite edge x -> s_beta x."""
    xi = tuple(xi)
    z = z_of(datum, J, xi)
    x = AffineWeylElement(mat_mul(edge.source, z), xi)
    coords = mat_act(edge.source, edge.label)
    if edge.kind == "Bruhat":
        beta = AffineRealRoot(coords, 0, 1)
        assert coords in datum.root_index
    else:
        k = datum.pos_index(edge.label)
        if datum.a2l2:
            beta = AffineRealRoot(coords, 1, 2 if datum.is_short[k] else 1)
        else:
            beta = AffineRealRoot(coords, datum.c_root[k], 1)
    return beta, x


def project_to_qls(datum: RootDatum, lam: Weight, eta: SilsPath) -> QlsPath:
    """Drop the translation data of each label and merge the adjacent
    equal direction parts this can create."""
    J = support_complement(datum, lam)
    parts = [peterson_decompose(datum, J, x)[0] for x in eta.labels]
    labels = [parts[0]]
    cuts = [eta.cuts[0]]
    for m in range(1, len(parts)):
        if parts[m] == labels[-1]:
            continue
        labels.append(parts[m])
        cuts.append(eta.cuts[m])
    cuts.append(eta.cuts[-1])
    return QlsPath(tuple(labels), tuple(cuts))


def lift_qls(datum: RootDatum, lam: Weight, path: QlsPath,
             variant=None) -> SilsPath:
    """Rebuild a semi-infinite path over a quantum LS path: the last
    translation part is zero, and each earlier one is transported
    backwards along an admissible chain, quantum edges adding
    z^{-1} gamma."""
    J = support_complement(datum, lam)
    s = len(path.labels)
    xis = [None] * s
    xis[s - 1] = (0,) * datum.l
    for m in range(s - 2, -1, -1):
        chain = qbg_a_chain(
            datum, J, path.cuts[m + 1], lam, path.labels[m + 1], path.labels[m],
            variant)
        assert chain, "not a quantum LS path"
        zeta = xis[m + 1]
        for e in chain:
            if e.kind == "Quantum":
                z = z_of(datum, J, zeta)
                step = mat_act(mat_inv(z), e.label)
                zeta = tuple(a + b for a, b in zip(zeta, step))
        xis[m] = zeta
    labels = tuple(
        AffineWeylElement(mat_mul(path.labels[m], z_of(datum, J, xis[m])), xis[m])
        for m in range(s)
    )
    return SilsPath(labels, path.cuts)


# ---------------------------------------------------------------------------
# the length condition for quantum edges out of the identity


def quantum_eligible_roots(datum: RootDatum):
    """Positive roots gamma with l(s_gamma) = 2<rho^vee, gamma> - 1;
    exactly these can label quantum edges in the full graph (J empty)."""
    W = weyl(datum)
    out = []
    for k, g in enumerate(datum.positive_roots):
        if W.length(W.reflection_mat(k)) == 2 * sum(g) - 1:
            out.append(g)
    return out
