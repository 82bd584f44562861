"""Semi-infinite Bruhat graph: edge classes, witnesses, chain search."""

from fractions import Fraction

import pytest

from silspath.cartan import (
    datum,
    dominant_weight,
    support_complement,
    untwisted_datum,
)
from silspath.sibg import (
    ChainSearcher,
    candidate_labels,
    edge_weight_pairing,
    in_edges,
    is_admissible,
    is_sib_edge,
    label_universe,
    out_edges,
    positive_real_roots_window,
    quantum_in_edge_witness,
    translation_out_edges_are_simple,
    translation_state,
)
from silspath.weyl import (
    AffineWeylElement,
    aff_identity,
    aff_mul,
    adjust_pairing,
    from_translation,
    is_adjusted,
    peterson_contains,
    peterson_project,
    reflection_element,
    semi_infinite_length,
    weyl,
)

A2 = datum("A2l2", 1)
A4 = datum("A2l2", 2)
B2 = datum("Dlp12", 2)
UC2 = untwisted_datum("C", 2)


def box(l, r):
    if l == 1:
        return [(a,) for a in range(-r, r + 1)]
    return [(a, b) for a in range(-r, r + 1) for b in range(-r, r + 1)]


def sample_reps(d, J, r=2):
    seen = []
    for m in weyl(d).elements():
        for xi in box(d.l, r):
            x = peterson_project(d, J, AffineWeylElement(m, xi))
            if x not in seen:
                seen.append(x)
    return seen


def test_rank1_out_and_in_edges_frozen():
    J = frozenset()
    e = aff_identity(A2)
    outs = out_edges(A2, J, e)
    assert len(outs) == 1
    beta, y = outs[0]
    assert beta.gamma == (1,) and beta.delta_coeff == 0 and beta.mult == 1
    assert y.w == weyl(A2).simple[0] and y.xi == (0,)

    ins = in_edges(A2, J, e)
    assert len(ins) == 1
    beta_in, src = ins[0]
    assert beta_in.gamma == (-1,) and beta_in.delta_coeff == 1 and beta_in.mult == 2
    assert src == AffineWeylElement(weyl(A2).simple[0], (-1,))

    lam = dominant_weight(A2, (1,))
    assert edge_weight_pairing(A2, src, beta_in, lam) == 1


@pytest.mark.parametrize("d,J", [
    (B2, frozenset()),
    (B2, {1}),
    (B2, {2}),
    (A4, frozenset()),
    (A4, {1}),
    (A4, {2}),
    (UC2, frozenset()),
    (UC2, {1}),
])
def test_every_edge_label_is_a_candidate(d, J):
    # exhaustive scan: any beta (delta coefficient <= 3) giving an edge
    # out of x must already appear in the candidate list
    labels = positive_real_roots_window(d, 3)
    for x in sample_reps(d, J, 1):
        cands = {(b.gamma, b.delta_coeff, b.mult) for b in candidate_labels(d, J, x)}
        for beta in labels:
            if is_sib_edge(d, J, x, beta):
                assert (beta.gamma, beta.delta_coeff, beta.mult) in cands
        # and the filtered candidate list is exactly the edge set
        outs = {(b.gamma, b.delta_coeff, b.mult) for b, _ in out_edges(d, J, x)}
        scan = {
            (b.gamma, b.delta_coeff, b.mult) for b in labels if is_sib_edge(d, J, x, b)
        }
        assert outs == scan


@pytest.mark.parametrize("d", [B2, A4])
def test_quantum_edges_drift_positively(d):
    for J in (frozenset(), {1}, {2}):
        for x in sample_reps(d, J, 1):
            for beta, y in out_edges(d, J, x):
                drift = tuple(b - a for a, b in zip(x.xi, y.xi))
                if beta.delta_coeff == 0:
                    assert drift == (0,) * d.l
                else:
                    assert drift in d.root_index  # a positive root's coords


@pytest.mark.parametrize("d", [B2, A4, UC2])
def test_translation_out_edges_simple(d):
    for J in (frozenset(), {1}, {2}):
        for xi in box(d.l, 2):
            if not is_adjusted(d, J, xi):
                continue
            assert translation_out_edges_are_simple(d, J, xi)


@pytest.mark.parametrize("d", [B2, A4])
def test_quantum_in_edge_witness_exists(d):
    for J in (frozenset(), {1}, {2}):
        jc = [i for i in range(1, d.l + 1) if i not in J]
        for xi in box(d.l, 2):
            if not is_adjusted(d, J, xi):
                continue
            x = translation_state(d, J, xi)
            for i in jc:
                hit = quantum_in_edge_witness(d, J, i, xi)
                assert hit is not None
                beta, y = hit
                assert beta.delta_coeff > 0
                assert is_sib_edge(d, J, y, beta)
                assert aff_mul(d, reflection_element(d, beta), y) == x


def test_simple_edge_weight_sign_criterion():
    # an alpha_i edge out of x exists iff <alpha_i^vee, x lambda> > 0,
    # and into x iff the pairing is negative
    from silspath.cartan import pairing_simple
    from silspath.weyl import act_on_weight, simple_affine_reflection

    for d, mvec in ((B2, (1, 1)), (A4, (1, 1)), (A4, (1, 0))):
        lam = dominant_weight(d, mvec)
        J = support_complement(d, lam)
        for x in sample_reps(d, J, 1):
            xlam = act_on_weight(d, x, lam)
            for i in range(d.l + 1):
                from silspath.cartan import simple_affine_root

                beta = simple_affine_root(d, i)
                p = pairing_simple(d, i, xlam)
                assert is_sib_edge(d, J, x, beta) == (p > 0)
                y = aff_mul(d, simple_affine_reflection(d, i), x)
                if peterson_contains(d, J, y):
                    assert is_sib_edge(d, J, y, beta) == (p < 0)


def test_rank1_chain_existence_matches_cut():
    lam = dominant_weight(A2, (1,))
    cs = ChainSearcher(A2, lam)
    src = from_translation(A2, (-1,))
    dst = aff_identity(A2)
    chain = cs.find_a_chain(Fraction(1), src, dst)
    assert chain is not None and len(chain) == 2
    assert cs.validate_chain(Fraction(1), src, chain)
    assert cs.find_a_chain(Fraction(1, 2), src, dst) is None
    # with the doubled weight the half cut becomes admissible
    lam2 = dominant_weight(A2, (2,))
    cs2 = ChainSearcher(A2, lam2)
    assert cs2.find_a_chain(Fraction(1, 2), src, dst) is not None


def brute_chain_exists(d, lam, a, src, dst):
    """Independent reachability check built directly on out_edges."""
    J = support_complement(d, lam)
    top = semi_infinite_length(d, dst)
    if semi_infinite_length(d, src) >= top:
        return False
    frontier = {src}
    seen = {src}
    while frontier:
        nxt = set()
        for x in frontier:
            for beta, y in out_edges(d, J, x):
                if semi_infinite_length(d, y) > top or y in seen:
                    continue
                if not is_admissible(a, edge_weight_pairing(d, x, beta, lam)):
                    continue
                if y == dst:
                    return True
                seen.add(y)
                nxt.add(y)
        frontier = nxt
    return False


@pytest.mark.parametrize("d,m", [(B2, (1, 0)), (B2, (1, 1)), (A4, (0, 1)), (A4, (1, 1))])
def test_chain_searcher_matches_brute_force(d, m):
    lam = dominant_weight(d, m)
    J = support_complement(d, lam)
    cs = ChainSearcher(d, lam)
    states = []
    for xi in box(d.l, 1):
        if is_adjusted(d, J, xi):
            states.append(translation_state(d, J, xi))
    cuts = [Fraction(1), Fraction(1, 2), Fraction(1, 3)]
    for a in cuts:
        for src in states:
            for dst in states:
                got = cs.chain_exists(a, src, dst)
                want = brute_chain_exists(d, lam, a, src, dst)
                assert got == want
                chain = cs.find_a_chain(a, src, dst)
                assert (chain is not None) == got
                if chain:
                    assert cs.validate_chain(a, src, chain)
                    dl = semi_infinite_length(d, dst) - semi_infinite_length(d, src)
                    assert len(chain) == dl


def test_batch_reach_agrees_with_single_queries():
    lam = dominant_weight(B2, (1, 1))
    J = support_complement(B2, lam)
    cs = ChainSearcher(B2, lam)
    states = [translation_state(B2, J, xi) for xi in box(2, 1)
              if is_adjusted(B2, J, xi)]
    for a in (Fraction(1), Fraction(1, 2)):
        reach = cs.batch_reach(a, states)
        for p, src in enumerate(states):
            for dst in states:
                got = bool(reach.get(dst, 0) >> p & 1)
                assert got == cs.chain_exists(a, src, dst)


def test_label_universe_counts():
    assert len(label_universe(B2)) == 8
    assert len(label_universe(A2)) == 2
    assert len(label_universe(UC2)) == 8
