"""Translation paths and the connected components of the semi-infinite
LS path set.

A translation path records only lattice data: adjusted vectors
(xi_1, ..., xi_s) with cuts 0 = a_0 < ... < a_s = 1 stand for the path
whose m-th direction is the pure translation state z_{xi_m} t_{xi_m}.
Membership in the path set of shape lambda then has a purely arithmetic
characterization: every cut lies on the turn grid of lambda, and each
consecutive difference, projected off the parabolic block, is a nonzero
nonnegative root-lattice vector supported on the indices whose
multiplicity clears the cut's denominator.  ``sublemma_oracle``
re-decides the same membership by brute-force chain search in the
semi-infinite Bruhat graph, one interior cut at a time, and every
witness chain is audited step by step against the translation-part
bookkeeping.

Special elements are the translation paths whose final entry is the
identity; each indexes one connected component.  ``component_orbit_probe``
closes a special element under the root operators to a given depth and
confirms the orbit stays valid and meets no other special element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from .cartan import RootDatum, Weight, pairing_simple, support_complement
from .paths import SilsPath, sils_root_operator, validate_sils_path
from .sibg import ChainSearcher, translation_state
from .weyl import _box_vectors, aff_identity, is_adjusted, mat_act, mat_inv


@dataclass(frozen=True)
class TranslationPath:
    xis: tuple  # of adjusted lattice vectors
    cuts: tuple  # of Fraction, 0 = a_0 < ... < a_s = 1


def _assert_well_formed(datum: RootDatum, J, path: TranslationPath):
    s = len(path.xis)
    assert len(path.cuts) == s + 1
    assert path.cuts[0] == 0 and path.cuts[-1] == 1
    assert all(path.cuts[m] < path.cuts[m + 1] for m in range(s))
    for xi in path.xis:
        if not is_adjusted(datum, J, xi):
            raise ValueError("translation path entries must be adjusted")


def realize(datum: RootDatum, lam: Weight, path: TranslationPath) -> SilsPath:
    """The semi-infinite path the translation data stands for."""
    J = support_complement(datum, lam)
    _assert_well_formed(datum, J, path)
    return SilsPath(
        tuple(translation_state(datum, J, xi) for xi in path.xis),
        tuple(path.cuts),
    )


# ---------------------------------------------------------------------------
# turn grid bookkeeping


def turn_set(datum: RootDatum, lam: Weight) -> frozenset:
    """All k/m_i over indices outside the parabolic block, 0 <= k <= m_i."""
    out = set()
    for m in lam.omega:
        if m:
            out.update(Fraction(k, m) for k in range(m + 1))
    return frozenset(out)


def jc(datum: RootDatum, lam: Weight, a) -> frozenset:
    """Indices i with m_i != 0 and a m_i integral (public 1-based)."""
    return frozenset(
        i + 1 for i, m in enumerate(lam.omega) if m and (a * m).denominator == 1
    )


def jc_overline(datum: RootDatum, lam: Weight, a) -> frozenset:
    """Same test with the simple-coroot pairing in place of m_i.  Only
    the doubled node of A2l2 can differ, where the pairing is 2 m_l."""
    return frozenset(
        i + 1
        for i, m in enumerate(lam.omega)
        if m and (a * pairing_simple(datum, i + 1, lam)).denominator == 1
    )


def _proj_diff(lam: Weight, xi, zeta) -> dict:
    """[xi - zeta] restricted to the coordinates outside the parabolic
    block, as a map from public indices to coefficients."""
    return {i + 1: xi[i] - zeta[i] for i, m in enumerate(lam.omega) if m}


def _pair_characterization(datum: RootDatum, lam: Weight, a, zeta, xi) -> bool:
    """The per-cut condition between consecutive entries: projected
    difference nonzero, nonnegative, supported inside jc(lam, a)."""
    allowed = jc(datum, lam, a)
    diff = _proj_diff(lam, xi, zeta)
    if all(c == 0 for c in diff.values()):
        return False
    return all(c >= 0 and (c == 0 or i in allowed) for i, c in diff.items())


def sublemma_characterization(datum: RootDatum, lam: Weight,
                              path: TranslationPath) -> bool:
    """Arithmetic membership test for a translation path."""
    J = support_complement(datum, lam)
    _assert_well_formed(datum, J, path)
    turn = turn_set(datum, lam)
    if any(a not in turn for a in path.cuts):
        return False
    return all(
        _pair_characterization(datum, lam, path.cuts[m + 1],
                               path.xis[m + 1], path.xis[m])
        for m in range(len(path.xis) - 1)
    )


# ---------------------------------------------------------------------------
# the chain oracle


def audit_chain(datum: RootDatum, searcher: ChainSearcher, a, src, steps) -> dict:
    """Re-check a witness chain: generic edge tests plus the
    translation-part bookkeeping (Bruhat steps keep xi fixed, quantum
    steps add z^{-1} gamma, read off as (wz)^{-1} applied to the label
    direction).  Returns step-class counts for the parity audits."""
    assert steps and searcher.validate_chain(a, src, steps)
    acc = (0,) * datum.l
    quantum = class2 = 0
    cur = src
    for beta, nxt in steps:
        if beta.delta_coeff == 0:
            assert nxt.xi == cur.xi
        else:
            quantum += 1
            if beta.mult == 2:
                class2 += 1
            step = mat_act(mat_inv(cur.w), beta.gamma)
            acc = tuple(p + q for p, q in zip(acc, step))
        cur = nxt
    assert acc == tuple(p - q for p, q in zip(cur.xi, src.xi))
    return {"length": len(steps), "quantum": quantum, "class2": class2,
            "delta": acc}


def sublemma_oracle(datum: RootDatum, lam: Weight, path: TranslationPath,
                    searcher: ChainSearcher = None, audit: bool = True) -> bool:
    """The same membership decided by chain search in the semi-infinite
    Bruhat graph; the ground truth the characterization is tested
    against."""
    J = support_complement(datum, lam)
    _assert_well_formed(datum, J, path)
    labels = [translation_state(datum, J, xi) for xi in path.xis]
    if any(labels[m] == labels[m + 1] for m in range(len(labels) - 1)):
        return False
    if searcher is None:
        searcher = ChainSearcher(datum, lam)
    for m in range(1, len(labels)):
        steps = searcher.find_a_chain(path.cuts[m], labels[m], labels[m - 1])
        if steps is None:
            return False
        if audit:
            audit_chain(datum, searcher, path.cuts[m], labels[m], steps)
    return True


# ---------------------------------------------------------------------------
# boxed enumeration


def adjusted_box(datum: RootDatum, J, radius: int) -> list:
    """All J-adjusted lattice vectors of sup-norm at most radius."""
    support = list(range(datum.l))
    return sorted(
        xi for xi in _box_vectors(datum.l, support, radius)
        if is_adjusted(datum, J, xi)
    )


def default_denominator(datum: RootDatum, lam: Weight) -> int:
    """Twice the least common multiple of the nonzero multiplicities:
    the finest cut grid the scans range over."""
    ms = [m for m in lam.omega if m]
    assert ms
    return 2 * lcm(*ms)


def _cut_sequences(values) -> list:
    """Strictly increasing runs from 0 to 1 through the given interior
    grid, shortest first."""
    interior = sorted(a for a in values if 0 < a < 1)
    seqs = []
    for n in range(len(interior) + 1):
        for picked in itertools.combinations(interior, n):
            seqs.append((Fraction(0),) + picked + (Fraction(1),))
    seqs.sort(key=lambda c: (len(c), c))
    return seqs


def special_elements_in_box(datum: RootDatum, lam: Weight, radius: int) -> list:
    """Characterization-passing translation paths ending at the
    identity, with every entry inside the box and cuts on the turn
    grid."""
    J = support_complement(datum, lam)
    box = adjusted_box(datum, J, radius)
    zero = (0,) * datum.l
    out = []
    for cuts in _cut_sequences(turn_set(datum, lam)):
        tails = [(zero,)]
        for m in range(len(cuts) - 2, 0, -1):
            tails = [
                (xi,) + tail
                for tail in tails
                for xi in box
                if _pair_characterization(datum, lam, cuts[m], tail[0], xi)
            ]
        for xis in tails:
            path = TranslationPath(tuple(xis), cuts)
            assert sublemma_characterization(datum, lam, path)
            out.append(path)
    out.sort(key=lambda p: (len(p.xis), p.cuts, p.xis))
    return out


# ---------------------------------------------------------------------------
# orbit probing


def special_form_of(datum: RootDatum, lam: Weight, eta: SilsPath):
    """The translation data of a path whose directions are all pure
    translation states and whose final entry is the identity, else
    None."""
    J = support_complement(datum, lam)
    if eta.labels[-1] != aff_identity(datum):
        return None
    for x in eta.labels:
        if x != translation_state(datum, J, x.xi):
            return None
    return TranslationPath(tuple(x.xi for x in eta.labels), tuple(eta.cuts))


def component_orbit_probe(datum: RootDatum, lam: Weight,
                          special: TranslationPath, depth: int,
                          searcher: ChainSearcher = None) -> dict:
    """Breadth-first closure of the root operators around one special
    element.  Asserts every reached path is valid and that no other
    special element turns up; returns the probed orbit."""
    assert sublemma_characterization(datum, lam, special)
    if searcher is None:
        searcher = ChainSearcher(datum, lam)
    start = realize(datum, lam, special)
    assert validate_sils_path(datum, lam, start, searcher)
    seen = {start}
    frontier = [start]
    for _ in range(depth):
        grown = []
        for eta in frontier:
            for i in range(datum.l + 1):
                for op in ("e", "f"):
                    out = sils_root_operator(datum, lam, eta, i, op)
                    if out is None or out in seen:
                        continue
                    assert validate_sils_path(datum, lam, out, searcher)
                    tp = special_form_of(datum, lam, out)
                    if tp is not None:
                        assert sublemma_characterization(datum, lam, tp)
                        assert tp == special, (tp, special)
                    seen.add(out)
                    grown.append(out)
        frontier = grown
    return {"special": special, "depth": depth, "orbit_size": len(seen),
            "orbit": frozenset(seen)}


# ---------------------------------------------------------------------------
# the flagship scan


def _sampled_paths(grid, box, s_max, count) -> list:
    """A deterministic spread of whole translation paths from the scan
    box, cycling through cut choices and striding through the entry
    tuples."""
    out = []
    per = max(1, count // s_max)
    for s in range(1, s_max + 1):
        cut_seqs = [
            (Fraction(0),) + picked + (Fraction(1),)
            for picked in itertools.combinations(grid, s - 1)
        ]
        if not cut_seqs:
            continue
        total = len(box) ** s
        stride = max(1, total // per)
        picks = itertools.islice(
            itertools.product(box, repeat=s), 0, None, stride
        )
        for k, xis in enumerate(picks):
            if k >= per:
                break
            out.append(TranslationPath(tuple(xis), cut_seqs[k % len(cut_seqs)]))
    return out


def sublemma_scan(datum: RootDatum, lam: Weight, radius: int = 2,
                  s_max: int = 3, denominator: int = None, sample: int = 24,
                  searcher: ChainSearcher = None) -> dict:
    """Exhaustive equivalence check of the characterization against the
    chain oracle over a box of translation paths.

    Both membership tests factor over consecutive entries: each is the
    conjunction, one interior cut at a time, of a pairwise predicate
    (projected-difference arithmetic on one side, nonzero-length chain
    existence on the other).  The scan therefore decides every triple
    (cut value, source entry, target entry) once, which settles every
    path assembled from those triples; a deterministic sample of whole
    paths is then re-decided through the two path-level entry points as
    a guard on the factoring itself.  Every oracle-true pair also has
    an explicit witness chain fetched and audited."""
    assert any(lam.omega)
    J = support_complement(datum, lam)
    box = adjusted_box(datum, J, radius)
    states = {xi: translation_state(datum, J, xi) for xi in box}
    if denominator is None:
        denominator = default_denominator(datum, lam)
    grid = [Fraction(k, denominator) for k in range(1, denominator)]
    if searcher is None:
        searcher = ChainSearcher(datum, lam)
    mismatches = []
    witnesses = 0
    for a in grid:
        reach = searcher.batch_reach(a, [states[xi] for xi in box])
        for p, zeta in enumerate(box):
            for xi in box:
                char = _pair_characterization(datum, lam, a, zeta, xi)
                oracle = bool(reach[states[xi]] >> p & 1)
                if char != oracle:
                    mismatches.append({
                        "a": str(a), "zeta": list(zeta), "xi": list(xi),
                        "characterization": char, "oracle": oracle,
                    })
                if oracle:
                    steps = searcher.find_a_chain(a, states[zeta], states[xi])
                    audit_chain(datum, searcher, a, states[zeta], steps)
                    witnesses += 1
    for path in _sampled_paths(grid, box, s_max, sample):
        lhs = sublemma_characterization(datum, lam, path)
        rhs = sublemma_oracle(datum, lam, path, searcher)
        if lhs != rhs:
            mismatches.append({
                "path": [list(xi) for xi in path.xis],
                "cuts": [str(a) for a in path.cuts],
                "characterization": lhs, "oracle": rhs,
            })
    covered = sum(
        comb(len(grid), s - 1) * len(box) ** s for s in range(1, s_max + 1)
    )
    return {
        "family": datum.type.family,
        "rank": datum.l,
        "lambda": list(lam.omega),
        "radius": radius,
        "denominator": denominator,
        "states": len(box),
        "pairs_checked": len(grid) * len(box) ** 2,
        "paths_covered": covered,
        "witnesses_audited": witnesses,
        "sampled_paths": sample,
        "mismatches": mismatches,
    }


def doubled_node_audit(datum: RootDatum, lam: Weight, radius: int = 2,
                       searcher: ChainSearcher = None) -> dict:
    """Witness audit at the half-integral cuts of the doubled node of
    A2l2: for a = q/(2 m_l) with q odd, every witness chain must avoid
    doubled-root quantum steps and the projected difference must avoid
    the last node."""
    assert datum.a2l2
    ml = lam.omega[-1]
    assert ml
    J = support_complement(datum, lam)
    box = adjusted_box(datum, J, radius)
    states = {xi: translation_state(datum, J, xi) for xi in box}
    if searcher is None:
        searcher = ChainSearcher(datum, lam)
    checked = 0
    violations = []
    for q in range(1, 2 * ml, 2):
        a = Fraction(q, 2 * ml)
        reach = searcher.batch_reach(a, [states[xi] for xi in box])
        for p, zeta in enumerate(box):
            for xi in box:
                if not reach[states[xi]] >> p & 1:
                    continue
                steps = searcher.find_a_chain(a, states[zeta], states[xi])
                rep = audit_chain(datum, searcher, a, states[zeta], steps)
                checked += 1
                if rep["class2"] or xi[-1] != zeta[-1]:
                    violations.append({
                        "a": str(a), "zeta": list(zeta), "xi": list(xi),
                        "class2": rep["class2"],
                        "last_coefficient": xi[-1] - zeta[-1],
                    })
    return {"witnesses": checked, "violations": violations}
