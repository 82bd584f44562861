"""LS paths, semi-infinite LS paths, and their root operators.

A path is a pair of sequences (labels; cuts): labels are orbit weights
(ordinary LS paths) or Peterson representatives (semi-infinite paths),
cuts are rationals 0 = a_0 < ... < a_s = 1.  Validity of interior cuts
is an a-chain condition: in the level-zero weight poset for ordinary
paths, in the semi-infinite Bruhat graph for semi-infinite ones.

Both kinds of paths share one transformation engine for the root
operators e_i / f_i: the bending times t_0, t_1 are read off the
piecewise-linear pairing function H_i, a block of labels is reflected,
and degenerate seams are dropped.  Reflection means s_i on weights for
ordinary paths, left multiplication by the affine s_i on elements for
semi-infinite ones; everything else is identical.

``Bg0Engine`` holds the per-shape tables for the level-zero weight
poset: orbit membership, covers (distance-one steps), longest-path
distances, and a-chains with witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cartan import (
    AffineRealRoot,
    RootDatum,
    Weight,
    coroot_pairing,
    is_positive_root,
    pairing_simple,
    reflect_weight,
    simple_affine_root,
    support_complement,
    translation_pairing,
)
from .sibg import ChainSearcher
from .weyl import (
    act_on_weight,
    aff_identity,
    aff_mul,
    peterson_contains,
    simple_affine_reflection,
)


@dataclass(frozen=True)
class LsPath:
    labels: tuple  # of Weight
    cuts: tuple  # of Fraction


@dataclass(frozen=True)
class SilsPath:
    labels: tuple  # of AffineWeylElement
    cuts: tuple


def trivial_ls_path(datum: RootDatum, lam: Weight) -> LsPath:
    return LsPath((lam,), (Fraction(0), Fraction(1)))


def trivial_sils_path(datum: RootDatum) -> SilsPath:
    return SilsPath((aff_identity(datum),), (Fraction(0), Fraction(1)))


def _check_shape(labels, cuts):
    assert len(cuts) == len(labels) + 1
    assert cuts[0] == 0 and cuts[-1] == 1
    assert all(cuts[k] < cuts[k + 1] for k in range(len(labels)))
    assert all(labels[k] != labels[k + 1] for k in range(len(labels) - 1))


# ---------------------------------------------------------------------------
# the shared e/f transformation


def _breakpoints(cuts, slopes):
    H = [Fraction(0)]
    for k, s in enumerate(slopes):
        H.append(H[-1] + (cuts[k + 1] - cuts[k]) * s)
    return H


def min_pairing_value(cuts, slopes) -> int:
    H = _breakpoints(cuts, slopes)
    m = min(H)
    assert m.denominator == 1
    return int(m)


def _transform(op, labels, cuts, slopes, reflect):
    """Apply e (op='e') or f (op='f'); returns (labels, cuts) or None."""
    H = _breakpoints(cuts, slopes)
    m = min(H)
    assert m.denominator == 1
    if op == "e":
        if m == 0:
            return None
        q = next(k for k, h in enumerate(H) if h == m)
        t1 = cuts[q]
        t0 = None
        for k in range(q, 0, -1):  # segment k-1 spans [cuts[k-1], cuts[k]]
            lo, hi, sl = H[k - 1], H[k], slopes[k - 1]
            if sl == 0:
                if lo == m + 1:
                    t0 = cuts[k]
                    break
                continue
            if min(lo, hi) <= m + 1 <= max(lo, hi):
                t0 = cuts[k - 1] + (m + 1 - lo) / sl
                break
        assert t0 is not None and 0 <= t0 < t1
        p = next(j for j in range(1, len(cuts)) if cuts[j - 1] <= t0 < cuts[j])
        new_labels = list(labels[:p]) + [reflect(labels[j]) for j in range(p - 1, q)] \
            + list(labels[q:])
        new_cuts = list(cuts[:p]) + [t0] + list(cuts[p:])
        # right seam: s_i nu_q meets nu_{q+1}
        if q < len(labels) and new_labels[q] == new_labels[q + 1]:
            del new_labels[q + 1]
            del new_cuts[q + 1]
        # left seam: the nu_p segment [a_{p-1}, t0] may be empty
        if t0 == cuts[p - 1]:
            del new_labels[p - 1]
            del new_cuts[p - 1]
    else:
        if H[-1] - m == 0:
            return None
        p = max(k for k, h in enumerate(H) if h == m)
        t0 = cuts[p]
        t1 = None
        for k in range(p + 1, len(H)):
            lo, hi, sl = H[k - 1], H[k], slopes[k - 1]
            if sl == 0:
                continue
            if min(lo, hi) <= m + 1 <= max(lo, hi):
                t1 = cuts[k - 1] + (m + 1 - lo) / sl
                break
        assert t1 is not None and t0 < t1 <= 1
        q = next(j for j in range(len(cuts) - 1) if cuts[j] < t1 <= cuts[j + 1])
        new_labels = list(labels[:p]) + [reflect(labels[j]) for j in range(p, q + 1)] \
            + list(labels[q:])
        new_cuts = list(cuts[: q + 1]) + [t1] + list(cuts[q + 1:])
        # right seam: the nu_{q+1} segment [t1, a_{q+1}] may be empty
        if t1 == cuts[q + 1]:
            del new_labels[q + 1]
            del new_cuts[q + 2]
        # left seam: nu_p meets s_i nu_{p+1}
        if p >= 1 and new_labels[p - 1] == new_labels[p]:
            del new_labels[p - 1]
            del new_cuts[p]
    _check_shape(tuple(new_labels), tuple(new_cuts))
    return tuple(new_labels), tuple(new_cuts)


# -- slopes and reflections for the two kinds of labels ----------------------


def _ls_slope(datum, i):
    def slope(mu):
        v = pairing_simple(datum, i, mu)
        v = Fraction(v)
        assert v.denominator == 1
        return int(v)

    return slope


def _ls_reflect(datum, i):
    b = simple_affine_root(datum, i)
    return lambda mu: reflect_weight(datum, b, mu)


def ls_root_operator(datum: RootDatum, lam: Weight, path: LsPath, i: int, op: str):
    """e_i (op='e') or f_i (op='f') on an LS path; None is the crystal zero."""
    out = _transform(op, path.labels, path.cuts,
                     [_ls_slope(datum, i)(mu) for mu in path.labels],
                     _ls_reflect(datum, i))
    if out is None:
        return None
    return LsPath(*out)


def sils_root_operator(datum: RootDatum, lam: Weight, eta: SilsPath, i: int, op: str):
    """The lifted operator: same bending times, s_i acts by affine left
    multiplication on the elements."""
    slopes = []
    for x in eta.labels:
        v = pairing_simple(datum, i, act_on_weight(datum, x, lam))
        v = Fraction(v)
        assert v.denominator == 1
        slopes.append(int(v))
    s_i = simple_affine_reflection(datum, i)
    out = _transform(op, eta.labels, eta.cuts, slopes,
                     lambda x: aff_mul(datum, s_i, x))
    if out is None:
        return None
    return SilsPath(*out)


def ls_eps_phi(datum: RootDatum, lam: Weight, path: LsPath, i: int):
    """(epsilon_i, phi_i) read off the minimum of H_i."""
    slopes = [_ls_slope(datum, i)(mu) for mu in path.labels]
    H = _breakpoints(path.cuts, slopes)
    m = min(H)
    assert m.denominator == 1 and H[-1] - m >= 0
    return -int(m), int(H[-1] - m)


def sils_eps_phi(datum: RootDatum, lam: Weight, eta: SilsPath, i: int):
    return ls_eps_phi(datum, lam, project_to_ls(datum, lam, eta), i)


def path_weight(datum: RootDatum, path: LsPath) -> Weight:
    total = Weight((0,) * datum.l, Fraction(0))
    for k, mu in enumerate(path.labels):
        total = total + mu.scale(path.cuts[k + 1] - path.cuts[k])
    return total


def sils_weight(datum: RootDatum, lam: Weight, eta: SilsPath) -> Weight:
    return path_weight(datum, project_to_ls(datum, lam, eta))


def project_to_ls(datum: RootDatum, lam: Weight, eta: SilsPath) -> LsPath:
    """Send (x_1, ..., x_s; a) to (x_1 lambda, ..., x_s lambda; a)."""
    return LsPath(tuple(act_on_weight(datum, x, lam) for x in eta.labels), eta.cuts)


# ---------------------------------------------------------------------------
# the level-zero weight poset


class Bg0Engine:
    """Per-shape tables for the level-zero weight poset: orbit
    membership, raising steps, cover edges (distance one), longest-path
    distances, and a-chains."""

    def __init__(self, datum: RootDatum, lam: Weight):
        assert lam.level == 0 and lam.delta == 0
        self.datum = datum
        self.lam = lam
        self._orbit_cl = self._classical_orbit()
        self._g0 = self._delta_step()
        self._dist = {}
        self._covers = {}

    def _classical_orbit(self):
        d = self.datum
        seen = {self.lam.omega}
        frontier = [self.lam]
        while frontier:
            nxt = []
            for mu in frontier:
                for i in range(1, d.l + 1):
                    g = tuple(1 if j == i - 1 else 0 for j in range(d.l))
                    nu = reflect_weight(d, AffineRealRoot(g, 0), mu)
                    if nu.omega not in seen:
                        seen.add(nu.omega)
                        nxt.append(nu)
            frontier = nxt
        return frozenset(seen)

    def _delta_step(self) -> int:
        d = self.datum
        vals = []
        for j in range(d.l):
            unit = tuple(1 if r == j else 0 for r in range(d.l))
            v = Fraction(translation_pairing(d, unit, self.lam))
            assert v.denominator == 1
            vals.append(abs(int(v)))
        g = 0
        for v in vals:
            g = gcd(g, v)
        assert g > 0, "shape weight must be nonzero"
        return g

    def contains(self, mu: Weight) -> bool:
        if mu.level != 0 or mu.omega not in self._orbit_cl:
            return False
        return (Fraction(mu.delta) / self._g0).denominator == 1

    def raising_steps(self, mu: Weight, delta_min):
        """All (beta, s_beta mu) with positive pairing and the target
        delta coefficient at least delta_min."""
        d = self.datum
        out = []
        for k, g in enumerate(d.positive_roots):
            for sgn in (1, -1):
                gam = g if sgn == 1 else tuple(-c for c in g)
                shapes = [(1, d.c_root[k])]
                if d.a2l2 and d.is_short[k]:
                    shapes.append((2, None))
                for mult, c in shapes:
                    pair = coroot_pairing(d, AffineRealRoot(gam, 0, mult), mu)
                    if pair <= 0:
                        continue
                    budget = (mu.delta - delta_min) / pair
                    if budget < 0:
                        continue
                    if mult == 1:
                        start = 0 if sgn == 1 else c
                        ms = range(start, int(budget) + 1, c)
                    else:
                        ms = range(1, int(budget) + 1, 2)
                    for m in ms:
                        b = AffineRealRoot(gam, m, mult)
                        if not is_positive_root(d, b):
                            continue
                        out.append((b, reflect_weight(d, b, mu)))
        out.sort(key=lambda e: (e[0].delta_coeff, e[0].mult, e[0].gamma))
        return out

    def dist(self, mu: Weight, nu: Weight):
        """Longest raising-chain length from mu to nu; None if nu is
        not reachable."""
        if mu == nu:
            return 0
        key = (mu, nu)
        if key not in self._dist:
            self._dist[key] = None  # cycle guard; the graph is acyclic
            best = None
            if nu.delta <= mu.delta:
                for _b, w in self.raising_steps(mu, nu.delta):
                    sub = self.dist(w, nu)
                    if sub is not None and (best is None or sub + 1 > best):
                        best = sub + 1
            self._dist[key] = best
        return self._dist[key]

    def is_edge(self, mu: Weight, beta: AffineRealRoot) -> bool:
        if not is_positive_root(self.datum, beta):
            return False
        pair = coroot_pairing(self.datum, beta, mu)
        if pair <= 0:
            return False
        return self.dist(mu, reflect_weight(self.datum, beta, mu)) == 1

    def cover_steps(self, mu: Weight, delta_min):
        key = (mu, delta_min)
        if key not in self._covers:
            self._covers[key] = [
                (b, w) for b, w in self.raising_steps(mu, delta_min)
                if self.dist(mu, w) == 1
            ]
        return self._covers[key]

    def find_a_chain(self, a: Fraction, src: Weight, dst: Weight):
        """An a-chain along cover edges from src to dst, as (label,
        next weight) steps; None if there is none.  Zero length is
        allowed: src == dst gives []."""
        if src == dst:
            return []
        if dst.delta > src.delta:
            return None
        parent = {src: None}
        frontier = [src]
        while frontier and dst not in parent:
            nxt = []
            for mu in frontier:
                for b, w in self.cover_steps(mu, dst.delta):
                    if w in parent:
                        continue
                    v = coroot_pairing(self.datum, b, mu)
                    if (a * v).denominator != 1:
                        continue
                    parent[w] = (mu, b)
                    nxt.append(w)
            frontier = nxt
        if dst not in parent:
            return None
        steps = []
        cur = dst
        while parent[cur] is not None:
            mu, b = parent[cur]
            steps.append((b, cur))
            cur = mu
        steps.reverse()
        return steps


# ---------------------------------------------------------------------------
# validation


def validate_ls_path(datum: RootDatum, lam: Weight, path: LsPath,
                     engine: Bg0Engine = None) -> bool:
    """Membership test for the set of LS paths of the given shape."""
    try:
        _check_shape(path.labels, path.cuts)
    except AssertionError:
        return False
    if engine is None:
        engine = Bg0Engine(datum, lam)
    if not all(engine.contains(mu) for mu in path.labels):
        return False
    s = len(path.labels)
    for m in range(1, s):
        chain = engine.find_a_chain(path.cuts[m], path.labels[m], path.labels[m - 1])
        if chain is None or len(chain) == 0:
            return False
    return True


def validate_sils_path(datum: RootDatum, lam: Weight, eta: SilsPath,
                       searcher: ChainSearcher = None) -> bool:
    """Membership test for semi-infinite LS paths of the given shape."""
    try:
        _check_shape(eta.labels, eta.cuts)
    except AssertionError:
        return False
    J = support_complement(datum, lam)
    if not all(peterson_contains(datum, J, x) for x in eta.labels):
        return False
    if searcher is None:
        searcher = ChainSearcher(datum, lam)
    s = len(eta.labels)
    for m in range(1, s):
        if not searcher.chain_exists(eta.cuts[m], eta.labels[m], eta.labels[m - 1]):
            return False
    return True
