"""Quantum Bruhat graphs, quantum LS paths, and the correspondence
with the semi-infinite graph."""

from fractions import Fraction

import pytest

from silspath.cartan import datum, dominant_weight, support_complement
from silspath.qbg import (
    QlsPath,
    build_qbg,
    edge_admissible,
    enumerate_qls,
    lift_qls,
    project_to_qls,
    qbg_a_chain,
    qbg_to_sib,
    quantum_eligible_roots,
    quantum_length_drop,
    shape_pairing,
    sib_to_qbg,
    validate_qls_path,
)
from silspath.paths import SilsPath, validate_sils_path
from silspath.sibg import ChainSearcher, is_sib_edge, out_edges
from silspath.weyl import (
    AffineWeylElement,
    adjust_pairing,
    identity_mat,
    is_adjusted,
    mat_act,
    mat_inv,
    mat_mul,
    peterson_contains,
    peterson_decompose,
    peterson_project,
    roots_in_parabolic,
    translation_root_pairing,
    weyl,
    z_of,
)

HALF = Fraction(1, 2)


def fr(a, b=1):
    return Fraction(a, b)


def _box(l, radius):
    vals = range(-radius, radius + 1)
    if l == 1:
        return [(a,) for a in vals]
    return [(a, b) for a in vals for b in vals]


GRAPH_CASES = [
    ("A2l2", 1, ()),
    ("A2l2", 2, ()),
    ("A2l2", 2, (1,)),
    ("Dlp12", 2, ()),
    ("Dlp12", 2, (2,)),
    ("D43", 2, ()),
]


# ---------------------------------------------------------------------------
# frozen small graphs


def test_rank1_graph_frozen():
    d = datum("A2l2", 1)
    edges, adjacency = build_qbg(d, ())
    e = identity_mat(1)
    s1 = weyl(d).simple[0]
    assert len(edges) == 2
    assert edges[0].source == e and edges[0].target == s1
    assert edges[0].label == (1,) and edges[0].kind == "Bruhat"
    assert edges[1].source == s1 and edges[1].target == e
    assert edges[1].label == (1,) and edges[1].kind == "Quantum"
    assert set(adjacency) == {e, s1}


def test_full_parabolic_single_vertex():
    d = datum("Dlp12", 2)
    edges, adjacency = build_qbg(d, (1, 2))
    assert edges == () and adjacency == {}
    assert weyl(d).min_reps(frozenset({0, 1})) == [identity_mat(2)]


def test_b2_simple_labels_appear_in_both_kinds():
    d = datum("Dlp12", 2)
    edges, _ = build_qbg(d, ())
    seen = {(e.label, e.kind) for e in edges}
    for g in ((1, 0), (0, 1)):
        assert (g, "Bruhat") in seen
        assert (g, "Quantum") in seen


def test_quantum_eligible_b2_frozen():
    d = datum("Dlp12", 2)
    assert set(quantum_eligible_roots(d)) == {(1, 0), (0, 1), (1, 1)}
    # the highest root alpha_1 + 2 alpha_2 has a length-3 reflection,
    # not the 2*height - 1 = 5 it would need
    W = weyl(d)
    k = d.pos_index((1, 2))
    assert W.length(W.reflection_mat(k)) == 3


def test_b3_eligible_long_roots_avoid_last_node():
    d = datum("Dlp12", 3)
    for g in quantum_eligible_roots(d):
        if not d.is_short[d.pos_index(g)]:
            assert g[2] == 0


# ---------------------------------------------------------------------------
# edge mechanics re-derived from the ambient group


@pytest.mark.parametrize("fam,l,J", GRAPH_CASES)
def test_bruhat_edges_need_no_floor(fam, l, J):
    d = datum(fam, l)
    W = weyl(d)
    edges, _ = build_qbg(d, J)
    assert edges
    for e in edges:
        if e.kind != "Bruhat":
            continue
        k = d.pos_index(e.label)
        assert mat_mul(e.source, W.reflection_mat(k)) == e.target


@pytest.mark.parametrize("fam,l,J", GRAPH_CASES)
def test_quantum_edges_translate_into_peterson(fam, l, J):
    d = datum(fam, l)
    W = weyl(d)
    edges, _ = build_qbg(d, J)
    count = 0
    for e in edges:
        if e.kind != "Quantum":
            continue
        count += 1
        k = d.pos_index(e.label)
        m = mat_mul(e.source, W.reflection_mat(k))
        assert W.length(m) == W.length(e.source) - 2 * sum(e.label) + 1
        assert peterson_contains(d, J, AffineWeylElement(m, e.label))
    assert count > 0


@pytest.mark.parametrize("fam,l,J", [c for c in GRAPH_CASES if c[2]])
def test_z_length_formula(fam, l, J):
    # l(z_xi) = -2 <rho_J^vee, xi>, re-derived through the bilinear form
    d = datum(fam, l)
    W = weyl(d)
    par = roots_in_parabolic(d, J)
    hits = 0
    for xi in _box(l, 2):
        if not is_adjusted(d, J, xi):
            continue
        hits += 1
        total = Fraction(0)
        for k in par:
            g = d.positive_roots[k]
            v = Fraction(2 * translation_root_pairing(d, xi, g)) / d.bilinear(g, g)
            assert v == adjust_pairing(d, k, xi)
            total += v
        assert W.length(z_of(d, J, xi)) == -total
    assert hits > 2


# ---------------------------------------------------------------------------
# admissibility variants


def test_a2l2_parity_splits_short_quantum_edges():
    d = datum("A2l2", 2)
    lam = dominant_weight(d, (0, 1))
    J = support_complement(d, lam)
    assert J == frozenset({1})
    edges, _ = build_qbg(d, J)
    differing = []
    for e in edges:
        here = edge_admissible(d, e, HALF, lam)
        dual = edge_admissible(d, e, HALF, lam, variant="dual")
        if here != dual:
            differing.append(e)
            assert dual and not here
            assert e.kind == "Quantum" and d.is_short[d.pos_index(e.label)]
            assert (HALF * shape_pairing(d, e.label, lam)).denominator == 1
            assert int(HALF * shape_pairing(d, e.label, lam)) % 2 == 1
    assert differing
    kinds = {e.kind for e in edges if edge_admissible(d, e, HALF, lam)}
    assert "Bruhat" in kinds


def test_rank1_qls_enumeration_frozen():
    d = datum("A2l2", 1)
    lam = dominant_weight(d, (1,))
    e = identity_mat(1)
    s1 = weyl(d).simple[0]
    got = enumerate_qls(d, lam, 3)
    assert got == [
        QlsPath((s1,), (fr(0), fr(1))),
        QlsPath((e,), (fr(0), fr(1))),
        QlsPath((s1, e), (fr(0), HALF, fr(1))),
    ]
    # the reversed two-step direction needs a short quantum edge at an
    # interior cut, which the parity rule forbids at this shape
    bad = QlsPath((e, s1), (fr(0), HALF, fr(1)))
    assert not validate_qls_path(d, lam, bad)
    assert validate_qls_path(d, lam, bad, variant="dual")


def test_rank1_doubled_shape_unlocks_parity():
    d = datum("A2l2", 1)
    lam = dominant_weight(d, (2,))
    e = identity_mat(1)
    s1 = weyl(d).simple[0]
    got = enumerate_qls(d, lam, 3)
    assert len(got) == 8
    assert QlsPath((e, s1), (fr(0), HALF, fr(1))) in got
    assert QlsPath((s1, e), (fr(0), fr(1, 4), fr(1))) in got
    assert QlsPath((s1, e, s1), (fr(0), fr(1, 4), HALF, fr(1))) in got
    assert QlsPath((e, s1, e), (fr(0), HALF, fr(3, 4), fr(1))) in got


def test_qbg_a_chain_endpoints():
    d = datum("A2l2", 1)
    lam = dominant_weight(d, (1,))
    e = identity_mat(1)
    s1 = weyl(d).simple[0]
    assert qbg_a_chain(d, (), HALF, lam, e, e) == []
    chain = qbg_a_chain(d, (), HALF, lam, e, s1)
    assert len(chain) == 1 and chain[0].kind == "Bruhat"
    assert qbg_a_chain(d, (), HALF, lam, s1, e) is None
    assert qbg_a_chain(d, (), fr(1), lam, s1, e) is not None


# ---------------------------------------------------------------------------
# the two-way correspondence with the semi-infinite graph


CORR_CASES = [
    ("A2l2", 1, ()),
    ("A2l2", 2, (1,)),
    ("Dlp12", 2, ()),
    ("Dlp12", 2, (2,)),
    ("D43", 2, ()),
]


def _sample_reps(d, J, radius):
    reps = set()
    for w in weyl(d).elements():
        for xi in _box(d.l, radius):
            reps.add(peterson_project(d, J, AffineWeylElement(w, xi)))
    return sorted(reps, key=lambda x: (x.xi, x.w))


@pytest.mark.parametrize("fam,l,J", CORR_CASES)
def test_sib_edges_project_and_rebuild(fam, l, J):
    d = datum(fam, l)
    quantum_seen = 0
    for x in _sample_reps(d, J, 1):
        _w, z, xi = peterson_decompose(d, J, x)
        for beta, y in out_edges(d, J, x):
            e = sib_to_qbg(d, J, x, beta)
            wy, _zy, xiy = peterson_decompose(d, J, y)
            assert wy == e.target
            if e.kind == "Bruhat":
                assert beta.delta_coeff == 0 and xiy == xi
            else:
                quantum_seen += 1
                step = mat_act(mat_inv(z), e.label)
                assert xiy == tuple(a + b for a, b in zip(xi, step))
            assert qbg_to_sib(d, J, e, xi) == (beta, x)
    assert quantum_seen > 0


@pytest.mark.parametrize("fam,l,J", CORR_CASES)
def test_qbg_edges_lift_at_every_adjusted_point(fam, l, J):
    d = datum(fam, l)
    edges, _ = build_qbg(d, J)
    for xi in _box(l, 1):
        if not is_adjusted(d, J, xi):
            continue
        for e in edges:
            beta, x = qbg_to_sib(d, J, e, xi)
            assert peterson_contains(d, J, x)
            assert is_sib_edge(d, J, x, beta)
            assert sib_to_qbg(d, J, x, beta) == e


# ---------------------------------------------------------------------------
# lifting quantum LS paths


LIFT_CASES = [
    ("A2l2", 1, (1,), 3),
    ("A2l2", 1, (2,), 3),
    ("Dlp12", 2, (1, 0), 2),
    ("A2l2", 2, (0, 1), 2),
]


@pytest.mark.parametrize("fam,l,coeffs,ms", LIFT_CASES)
def test_lift_project_round_trip(fam, l, coeffs, ms):
    d = datum(fam, l)
    lam = dominant_weight(d, coeffs)
    searcher = ChainSearcher(d, lam)
    paths = enumerate_qls(d, lam, ms)
    assert paths
    for q in paths:
        assert validate_qls_path(d, lam, q)
        eta = lift_qls(d, lam, q)
        assert eta.labels[-1].xi == (0,) * l
        assert validate_sils_path(d, lam, eta, searcher)
        assert project_to_qls(d, lam, eta) == q


def test_project_merges_repeated_directions():
    d = datum("A2l2", 1)
    lam = dominant_weight(d, (2,))
    searcher = ChainSearcher(d, lam)
    e = AffineWeylElement(identity_mat(1), (0,))
    t = AffineWeylElement(identity_mat(1), (-1,))
    eta = SilsPath((e, t), (fr(0), HALF, fr(1)))
    assert validate_sils_path(d, lam, eta, searcher)
    q = project_to_qls(d, lam, eta)
    assert q == QlsPath((identity_mat(1),), (fr(0), fr(1)))
    assert validate_qls_path(d, lam, q)


@pytest.mark.parametrize("fam,l,J", GRAPH_CASES)
def test_quantum_drop_positive_outside_parabolic(fam, l, J):
    d = datum(fam, l)
    par = set(roots_in_parabolic(d, J))
    for k, g in enumerate(d.positive_roots):
        if k in par:
            continue
        assert quantum_length_drop(d, J, g) >= 1
