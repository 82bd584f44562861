"""Finite and affine Weyl groups, semi-infinite length, Peterson cosets.

Finite Weyl group elements are integer matrices acting on root
coordinates (column j is the image of alpha_j).  Affine elements are
pairs ``w t_xi`` with ``xi`` in the translation lattice: the root
lattice in twisted mode, the coroot lattice (coroot coordinates) in
untwisted mode.

The Peterson machinery: ``xi`` is J-adjusted when every positive root
supported on J pairs with it to 0 or -1; ``z_of`` returns the unique
element of W_J whose inversions inside J are exactly the roots pairing
to -1; ``peterson_contains`` tests membership in the canonical coset
representatives (W^J)_af; ``peterson_project`` sends any affine element
to the representative of its coset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import (
    AffineRealRoot,
    RootDatum,
    Weight,
    is_positive_root,
    is_valid_root,
    reflect_weight,
    translate_weight,
)

Mat = tuple  # tuple of row tuples, square, integer


def identity_mat(l: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(l)) for i in range(l))


def mat_mul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_act(a: Mat, v) -> tuple:
    return tuple(sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a)))


def mat_inv(a: Mat) -> Mat:
    """Exact inverse; asserts the result is integral."""
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for i in range(n):
        row = aug[i][n:]
        assert all(x.denominator == 1 for x in row)
        out.append(tuple(int(x) for x in row))
    return tuple(out)


class WeylGroup:
    """Per-datum caches for the finite Weyl group."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.l = datum.l
        self.id = identity_mat(datum.l)
        self.simple = tuple(self._simple_mat(i) for i in range(datum.l))
        self._len = {}
        self._word = {}
        self._inv = {}
        self._sub = {}
        self._minreps = {}
        self._zmaps = {}
        self._refl = {}
        self._corm = {}
        self._elements = None

    def _simple_mat(self, i: int) -> Mat:
        A = self.datum.cartan
        return tuple(
            tuple((1 if r == j else 0) - (A[i][j] if r == i else 0) for j in range(self.l))
            for r in range(self.l)
        )

    def elements(self):
        if self._elements is None:
            seen = {self.id}
            frontier = [self.id]
            while frontier:
                nxt = []
                for m in frontier:
                    for s in self.simple:
                        p = mat_mul(m, s)
                        if p not in seen:
                            seen.add(p)
                            nxt.append(p)
                frontier = nxt
            self._elements = sorted(seen, key=lambda m: (self.length(m), m))
        return self._elements

    def length(self, m: Mat) -> int:
        if m not in self._len:
            d = self.datum
            self._len[m] = sum(
                1 for v in d.positive_roots if mat_act(m, v) not in d.root_index
            )
        return self._len[m]

    def inversions(self, m: Mat) -> frozenset:
        """Positive-root indices sent to negative roots."""
        if m not in self._inv:
            d = self.datum
            self._inv[m] = frozenset(
                k for k, v in enumerate(d.positive_roots)
                if mat_act(m, v) not in d.root_index
            )
        return self._inv[m]

    def canonical_word(self, m: Mat) -> tuple:
        """Lexicographically smallest reduced word (1-based letters)."""
        if m not in self._word:
            word = []
            cur = m
            while cur != self.id:
                lm = self.length(cur)
                for i in range(self.l):
                    cand = mat_mul(self.simple[i], cur)
                    if self.length(cand) < lm:
                        word.append(i + 1)
                        cur = cand
                        break
                else:  # pragma: no cover
                    raise AssertionError("no descent found")
            self._word[m] = tuple(word)
        return self._word[m]

    def from_word(self, word) -> Mat:
        m = self.id
        for i in word:
            m = mat_mul(m, self.simple[i - 1])
        return m

    def reflection_mat(self, k: int) -> Mat:
        """Reflection by positive root number k."""
        if k not in self._refl:
            d = self.datum
            g = d.positive_roots[k]
            pr = d.pair_row[k]
            self._refl[k] = tuple(
                tuple((1 if i == j else 0) - pr[j] * g[i] for j in range(self.l))
                for i in range(self.l)
            )
        return self._refl[k]

    def coroot_matrix(self, m: Mat) -> Mat:
        """The same element acting on coroot coordinates."""
        if m not in self._corm:
            d = self.datum
            rows = []
            for i in range(self.l):
                row = []
                for j in range(self.l):
                    x = d.d[i] * m[i][j] / d.d[j]
                    assert x.denominator == 1
                    row.append(int(x))
                rows.append(tuple(row))
            self._corm[m] = tuple(rows)
        return self._corm[m]

    # -- parabolic pieces ---------------------------------------------------

    def subgroup(self, j0: frozenset):
        """Elements of W_J (J given by 0-based indices)."""
        if j0 not in self._sub:
            seen = {self.id}
            frontier = [self.id]
            while frontier:
                nxt = []
                for m in frontier:
                    for i in j0:
                        p = mat_mul(m, self.simple[i])
                        if p not in seen:
                            seen.add(p)
                            nxt.append(p)
                frontier = nxt
            self._sub[j0] = sorted(seen, key=lambda m: (self.length(m), m))
        return self._sub[j0]

    def is_min_rep(self, m: Mat, j0: frozenset) -> bool:
        d = self.datum
        for i in j0:
            v = tuple(1 if j == i else 0 for j in range(self.l))
            if mat_act(m, v) not in d.root_index:
                return False
        return True

    def min_reps(self, j0: frozenset):
        if (j0, "reps") not in self._minreps:
            self._minreps[(j0, "reps")] = [
                m for m in self.elements() if self.is_min_rep(m, j0)
            ]
        return self._minreps[(j0, "reps")]

    def floor(self, m: Mat, j0: frozenset) -> Mat:
        """Minimal-length representative of m W_J."""
        d = self.datum
        cur = m
        changed = True
        while changed:
            changed = False
            for i in j0:
                v = tuple(1 if j == i else 0 for j in range(self.l))
                if mat_act(cur, v) not in d.root_index:
                    cur = mat_mul(cur, self.simple[i])
                    changed = True
        return cur

    def z_map(self, j0: frozenset) -> dict:
        """inversion-set (within J) -> element of W_J."""
        if j0 not in self._zmaps:
            d = self.datum
            ks = [k for k, v in enumerate(d.positive_roots)
                  if all(v[i] == 0 for i in range(self.l) if i not in j0)]
            table = {}
            for m in self.subgroup(j0):
                inv = frozenset(k for k in ks if mat_act(m, d.positive_roots[k])
                                not in d.root_index)
                assert inv not in table
                table[inv] = m
            self._zmaps[j0] = (tuple(ks), table)
        return self._zmaps[j0]


@lru_cache(maxsize=None)
def weyl(datum: RootDatum) -> WeylGroup:
    return WeylGroup(datum)


def _j0(datum: RootDatum, J) -> frozenset:
    j0 = frozenset(int(j) - 1 for j in J)
    assert all(0 <= i < datum.l for i in j0)
    return j0


def roots_in_parabolic(datum: RootDatum, J):
    """Indices of positive roots supported on J (1-based J)."""
    j0 = _j0(datum, J)
    return [
        k for k, v in enumerate(datum.positive_roots)
        if all(v[i] == 0 for i in range(datum.l) if i not in j0)
    ]


# ---------------------------------------------------------------------------
# affine elements


@dataclass(frozen=True)
class AffineWeylElement:
    """w t_xi: finite part as a matrix plus a translation vector."""

    w: Mat
    xi: tuple

    def __str__(self):
        return "w=%s xi=%s" % (self.w, self.xi)


def aff_identity(datum: RootDatum) -> AffineWeylElement:
    return AffineWeylElement(identity_mat(datum.l), (0,) * datum.l)


def from_translation(datum: RootDatum, xi) -> AffineWeylElement:
    return AffineWeylElement(identity_mat(datum.l), tuple(xi))


def from_finite(datum: RootDatum, m: Mat) -> AffineWeylElement:
    return AffineWeylElement(m, (0,) * datum.l)


def _xi_act(datum: RootDatum, m: Mat, xi) -> tuple:
    """Finite Weyl action on a translation-lattice vector."""
    if datum.twisted:
        return mat_act(m, xi)
    return mat_act(weyl(datum).coroot_matrix(m), xi)


def aff_mul(datum: RootDatum, a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
    binv = mat_inv(b.w)
    xi = tuple(x + y for x, y in zip(_xi_act(datum, binv, a.xi), b.xi))
    return AffineWeylElement(mat_mul(a.w, b.w), xi)

def aff_inv(datum: RootDatum, a: AffineWeylElement) -> AffineWeylElement:
    return AffineWeylElement(
        mat_inv(a.w), tuple(-x for x in _xi_act(datum, a.w, a.xi))
    )


def translation_root_pairing(datum: RootDatum, xi, gamma):
    """Pairing of a translation vector against a root-coordinate vector:
    the bilinear form in twisted mode, <xi, gamma> untwisted."""
    if datum.twisted:
        v = datum.bilinear(xi, gamma)
        assert v.denominator == 1
        return int(v)
    return sum(
        xi[i] * sum(datum.cartan[i][j] * gamma[j] for j in range(datum.l))
        for i in range(datum.l)
    )


def act_on_root(datum: RootDatum, x: AffineWeylElement, b: AffineRealRoot) -> AffineRealRoot:
    m = b.delta_coeff - b.mult * translation_root_pairing(datum, x.xi, b.gamma)
    out = AffineRealRoot(mat_act(x.w, b.gamma), m, b.mult)
    assert is_valid_root(datum, out)
    return out


def act_on_weight(datum: RootDatum, x: AffineWeylElement, w: Weight) -> Weight:
    cur = translate_weight(datum, x.xi, w)
    word = weyl(datum).canonical_word(x.w)
    for i in reversed(word):
        g = tuple(1 if j == i - 1 else 0 for j in range(datum.l))
        cur = reflect_weight(datum, AffineRealRoot(g, 0), cur)
    return cur


def reflection_element(datum: RootDatum, b: AffineRealRoot) -> AffineWeylElement:
    """s_beta as an affine element."""
    assert is_valid_root(datum, b)
    wg = weyl(datum)
    k = datum.pos_index(b.gamma)
    refl = wg.reflection_mat(k)
    m = b.delta_coeff
    if datum.twisted:
        if b.mult == 2:
            vec = tuple(m * x for x in b.gamma)
        else:
            scale = 2 * m / datum._norm2[k]
            raw = tuple(scale * x for x in b.gamma)
            assert all(v.denominator == 1 for v in raw)
            vec = tuple(int(v) for v in raw)
    else:
        sgn = 1 if b.gamma in datum.root_index else -1
        vec = tuple(sgn * m * c for c in datum.coroot_coords[k])
    return AffineWeylElement(refl, tuple(vec))


def simple_affine_reflection(datum: RootDatum, i: int) -> AffineWeylElement:
    from .cartan import simple_affine_root

    return reflection_element(datum, simple_affine_root(datum, i))


def semi_infinite_length(datum: RootDatum, x: AffineWeylElement) -> int:
    """l(w) + 2 <rho^vee, xi> (twisted) or l(w) + 2 <xi, rho> (untwisted);
    either way twice the coordinate sum of xi."""
    return weyl(datum).length(x.w) + 2 * sum(x.xi)


# ---------------------------------------------------------------------------
# adjusted vectors, z elements, Peterson representatives


def adjust_pairing(datum: RootDatum, k: int, xi) -> int:
    av = datum.adjust_vec(k)
    return sum(a * b for a, b in zip(av, xi))


def is_adjusted(datum: RootDatum, J, xi) -> bool:
    for k in roots_in_parabolic(datum, J):
        if adjust_pairing(datum, k, xi) not in (-1, 0):
            return False
    return True


def z_of(datum: RootDatum, J, xi) -> Mat:
    """The parabolic element whose J-inversions are the roots pairing
    with xi to -1.  Requires xi J-adjusted."""
    if not is_adjusted(datum, J, xi):
        raise ValueError("xi is not J-adjusted")
    j0 = _j0(datum, J)
    ks, table = weyl(datum).z_map(j0)
    want = frozenset(k for k in ks if adjust_pairing(datum, k, xi) == -1)
    return table[want]


def adjust_offset(datum: RootDatum, J, xi) -> tuple:
    """phi_J(xi): the J-supported lattice vector making xi adjusted."""
    j0 = sorted(_j0(datum, J))
    if not j0:
        return (0,) * datum.l
    ks = roots_in_parabolic(datum, J)
    if not ks:
        return (0,) * datum.l
    bound = 1 + max(abs(adjust_pairing(datum, k, xi)) for k in ks)
    while bound <= 64:
        hits = []
        for phi in _box_vectors(datum.l, j0, bound):
            cand = tuple(a + b for a, b in zip(xi, phi))
            if is_adjusted(datum, J, cand):
                hits.append(phi)
        if hits:
            assert len(hits) == 1, hits
            return hits[0]
        bound *= 2
    raise AssertionError("no adjusting vector within search box")


def _box_vectors(l, support, bound):
    if not support:
        yield (0,) * l
        return
    i, rest = support[0], support[1:]
    for tail in _box_vectors(l, rest, bound):
        for c in range(-bound, bound + 1):
            yield tuple(c if j == i else tail[j] for j in range(l))


def peterson_contains(datum: RootDatum, J, x: AffineWeylElement) -> bool:
    j0 = _j0(datum, J)
    if not is_adjusted(datum, J, x.xi):
        return False
    z = z_of(datum, J, x.xi)
    return weyl(datum).is_min_rep(mat_mul(x.w, mat_inv(z)), j0)


def peterson_decompose(datum: RootDatum, J, x: AffineWeylElement):
    """x = w z_xi t_xi with w a minimal coset representative; raises if
    x is not a Peterson representative."""
    if not peterson_contains(datum, J, x):
        raise ValueError("element is not a Peterson coset representative")
    z = z_of(datum, J, x.xi)
    return mat_mul(x.w, mat_inv(z)), z, x.xi


def peterson_project(datum: RootDatum, J, x: AffineWeylElement) -> AffineWeylElement:
    """The Peterson representative of x (W_J)_af."""
    j0 = _j0(datum, J)
    phi = adjust_offset(datum, J, x.xi)
    eta = tuple(a + b for a, b in zip(x.xi, phi))
    z = z_of(datum, J, eta)
    w = weyl(datum).floor(x.w, j0)
    return AffineWeylElement(mat_mul(w, z), eta)


def peterson_direct_check(datum: RootDatum, J, x: AffineWeylElement) -> bool:
    """Defining test: x keeps every positive affine root with classical
    direction in the parabolic subsystem positive.  Exhaustive over a
    finite window in the delta coefficient; independent of the
    z-element route."""
    ks = roots_in_parabolic(datum, J)
    gammas = []
    for k in ks:
        g = datum.positive_roots[k]
        gammas.append(g)
        gammas.append(tuple(-c for c in g))
    mbound = 2 + max(
        (abs(translation_root_pairing(datum, x.xi, g)) * 2 for g in gammas),
        default=0,
    )
    for g in gammas:
        k = datum.pos_index(g)
        c = datum.c_root[k]
        for m in range(0, mbound + 1, c):
            b = AffineRealRoot(g, m, 1)
            if not is_positive_root(datum, b):
                continue
            if not is_positive_root(datum, act_on_root(datum, x, b)):
                return False
        if datum.a2l2 and datum.is_short[k]:
            for m in range(1, mbound + 1, 2):
                b = AffineRealRoot(g, m, 2)
                if not is_positive_root(datum, b):
                    continue
                if not is_positive_root(datum, act_on_root(datum, x, b)):
                    return False
    return True
