"""Exact root data for twisted affine types and their untwisted partners.

Everything is computed once per type and frozen on a :class:`RootDatum`:
the finite Cartan matrix, the affine node row/column, marks and comarks,
the finite positive roots with coroots and pairing tables, and the
normalisation of the invariant bilinear form.  All arithmetic is exact
(`int` and `fractions.Fraction`); nothing here is numerical.

Supported twisted families (Kac's notation, `l` = finite rank):

=========  ============  =========================================
name       finite part   notes
=========  ============  =========================================
``A2l2``   B_l (l >= 1)  mixed series, comark 2 at the affine node
``Dlp12``  B_l (l >= 2)  dual untwisted
``A2lm12`` C_l (l >= 3)  dual untwisted
``E62``    F_4           dual untwisted
``D43``    G_2           dual untwisted
=========  ============  =========================================

Untwisted data (families ``A``, ``B``, ``C``, ``F4``, ``G2``) are built
only as far as the reduction maps need them: their affine Weyl group
translates by the coroot lattice and their real roots are alpha + n*delta
for every integer n.

Normalisation of the bilinear form: dual untwisted types have
(short, short) = 2 and (long, long) = 2c with c in {2, 3}; ``A2l2`` has
(short, short) = 1 and (long, long) = 2, so that c_alpha = 1 for every
root; untwisted data use the standard (long, long) = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Coords = tuple  # integer coordinate vectors over the simple (co)roots

TWISTED_FAMILIES = ("A2l2", "A2lm12", "Dlp12", "E62", "D43")
UNTWISTED_FINITE = ("A", "B", "C", "F4", "G2", "F4r", "G2r")

_FIXED_RANK = {"E62": 4, "D43": 2}


@dataclass(frozen=True)
class AffineType:
    """A supported affine family together with its finite rank.

    ``finite`` names the finite part ("B", "C", "F4", "G2", "A"); for the
    twisted families it is derived, for untwisted data it is the input.
    """

    family: str
    rank: int
    finite: str

    def __str__(self):
        if self.family == "untwisted":
            return "%s%d~" % (self.finite, self.rank)
        return "%s(l=%d)" % (self.family, self.rank)


def affine_type(family: str, rank: int | None = None) -> AffineType:
    """Validate a family name plus rank and return the ``AffineType``.

    Raises ``ValueError`` when the rank violates the family constraint
    (``A2lm12`` needs l >= 3, ``Dlp12`` needs l >= 2, ``E62`` and ``D43``
    have fixed rank).
    """
    if family not in TWISTED_FAMILIES:
        raise ValueError("unknown affine family %r" % (family,))
    if family in _FIXED_RANK:
        fixed = _FIXED_RANK[family]
        if rank is None:
            rank = fixed
        if rank != fixed:
            raise ValueError("%s has fixed finite rank %d" % (family, fixed))
    if rank is None:
        raise ValueError("family %s needs an explicit rank" % family)
    if family == "A2l2" and rank < 1:
        raise ValueError("A2l2 requires l >= 1")
    if family == "Dlp12" and rank < 2:
        raise ValueError("Dlp12 requires l >= 2")
    if family == "A2lm12" and rank < 3:
        raise ValueError("A2lm12 requires l >= 3")
    finite = {"A2l2": "B", "Dlp12": "B", "A2lm12": "C", "E62": "F4", "D43": "G2"}[family]
    return AffineType(family, rank, finite)


def untwisted_type(finite: str, rank: int) -> AffineType:
    """An untwisted affine type over the given finite family."""
    if finite not in UNTWISTED_FINITE:
        raise ValueError("unknown finite family %r" % (finite,))
    if finite in ("F4", "G2", "F4r", "G2r"):
        rank = 4 if finite.startswith("F4") else 2
    if finite == "A" and rank != 1:
        raise ValueError("untwisted A is only provided at rank 1")
    if finite in ("B", "C") and rank < 2:
        raise ValueError("untwisted %s requires rank >= 2" % finite)
    return AffineType("untwisted", rank, finite)


def _finite_cartan(finite: str, l: int) -> tuple:
    """Finite Cartan matrix A[i][j] = <alpha_i^vee, alpha_j>, 0-based."""
    rows = [[0] * l for _ in range(l)]
    for i in range(l):
        rows[i][i] = 2
    if finite == "A":
        for i in range(l - 1):
            rows[i][i + 1] = rows[i + 1][i] = -1
    elif finite == "B":
        for i in range(l - 1):
            rows[i][i + 1] = rows[i + 1][i] = -1
        if l >= 2:
            rows[l - 1][l - 2] = -2  # alpha_l short
    elif finite == "C":
        for i in range(l - 1):
            rows[i][i + 1] = rows[i + 1][i] = -1
        if l >= 2:
            rows[l - 2][l - 1] = -2  # alpha_l long
    elif finite == "F4":
        rows = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    elif finite == "G2":
        rows = [[2, -3], [-1, 2]]  # alpha_1 short, alpha_2 long
    elif finite == "F4r":
        # arrows reversed; the transpose of F4, as the dual of E62 needs
        rows = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    elif finite == "G2r":
        rows = [[2, -1], [-3, 2]]  # transpose of G2, the dual of D43
    else:  # pragma: no cover
        raise ValueError(finite)
    return tuple(tuple(r) for r in rows)


def _norm_halves(atype: AffineType) -> tuple:
    """d_i = (alpha_i, alpha_i)/2 under the library normalisation."""
    l, fin = atype.rank, atype.finite
    half = Fraction(1, 2)
    if atype.family == "A2l2":
        return tuple([Fraction(1)] * (l - 1) + [half])
    if atype.family == "untwisted":
        if fin == "A":
            return (Fraction(1),) * l
        if fin == "B":
            return tuple([Fraction(1)] * (l - 1) + [half])
        if fin == "C":
            return tuple([half] * (l - 1) + [Fraction(1)])
        if fin == "F4":
            return (Fraction(1), Fraction(1), half, half)
        if fin == "F4r":
            return (half, half, Fraction(1), Fraction(1))
        if fin == "G2":
            return (Fraction(1, 3), Fraction(1))  # alpha_1 short
        return (Fraction(1), Fraction(1, 3))  # G2r, alpha_2 short
    # dual untwisted: short = 1, long = c
    if fin == "B":
        return tuple([Fraction(2)] * (l - 1) + [Fraction(1)])
    if fin == "C":
        return tuple([Fraction(1)] * (l - 1) + [Fraction(2)])
    if fin == "F4":
        return (Fraction(2), Fraction(2), Fraction(1), Fraction(1))
    return (Fraction(1), Fraction(3))  # G2


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


class RootDatum:
    """Frozen tables for one affine type.

    Finite simple roots are indexed 1..l in the public API (0 is the
    affine node); internal arrays are 0-based over alpha_1..alpha_l.
    """

    def __init__(self, atype: AffineType):
        self.type = atype
        self.l = atype.rank
        self.twisted = atype.family != "untwisted"
        self.a2l2 = atype.family == "A2l2"
        self.cartan = _finite_cartan(atype.finite, self.l)
        self.d = _norm_halves(atype)
        for i in range(self.l):
            for j in range(self.l):
                assert self.d[i] * self.cartan[i][j] == self.d[j] * self.cartan[j][i]
        # <alpha_l^vee, lambda> = 2 m_l in A2l2, otherwise = m_i throughout
        self.fac = tuple(2 if (self.a2l2 and i == self.l - 1) else 1 for i in range(self.l))
        self._build_roots()
        self._build_affine()
        self._assert_rho_rows()

    # -- finite root system -------------------------------------------------

    def _build_roots(self):
        l = self.l
        simples = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
        roots = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(l):
                    p = sum(self.cartan[i][j] * v[j] for j in range(l))
                    w = tuple(v[j] - (p if j == i else 0) for j in range(l))
                    if w not in roots and any(w):
                        roots.add(w)
                        nxt.append(w)
            frontier = nxt
        pos = sorted((v for v in roots if min(v) >= 0), key=lambda v: (sum(v), v))
        assert all(max(v) > 0 for v in pos) and 2 * len(pos) == len(roots)
        self.positive_roots = tuple(pos)
        self.n_pos = len(pos)
        self.root_index = {v: k for k, v in enumerate(pos)}
        self._norm2 = tuple(self._form(v, v) for v in pos)
        least = min(self._norm2)
        self.is_short = tuple(n == least for n in self._norm2)
        cs = []
        for n in self._norm2:
            c = max(Fraction(1), Fraction(n, 2))
            assert c.denominator == 1
            cs.append(int(c))
        self.c_root = tuple(cs)
        coroots = []
        for k, v in enumerate(pos):
            cr = tuple(Fraction(2 * self.d[i] * v[i], self._norm2[k]) for i in range(l))
            assert all(x.denominator == 1 for x in cr)
            coroots.append(tuple(int(x) for x in cr))
        self.coroot_coords = tuple(coroots)
        # pair_row[k][j] = <gamma_k^vee, alpha_j>
        self.pair_row = tuple(
            tuple(sum(cr[i] * self.cartan[i][j] for i in range(l)) for j in range(l))
            for cr in self.coroot_coords
        )
        # a_col[k][i] = <alpha_i^vee, gamma_k>
        self.a_col = tuple(
            tuple(sum(self.cartan[i][j] * v[j] for j in range(l)) for i in range(l))
            for v in pos
        )
        om = []
        for k in range(self.n_pos):
            row = [Fraction(self.a_col[k][i], self.fac[i]) for i in range(l)]
            assert all(x.denominator == 1 for x in row)
            om.append(tuple(int(x) for x in row))
        self.omega_of_root = tuple(om)  # cl(gamma) in the varpi basis
        ht = lambda v: sum(v)
        short_idx = [k for k in range(self.n_pos) if self.is_short[k]]
        self.theta_s_idx = max(short_idx, key=lambda k: ht(pos[k]))
        self.theta_idx = max(range(self.n_pos), key=lambda k: (self._norm2[k], ht(pos[k])))
        self.theta_s = pos[self.theta_s_idx]
        self.theta = pos[self.theta_idx]
        self.rho_vee = tuple(
            Fraction(sum(cr[i] for cr in self.coroot_coords), 2) for i in range(l)
        )
        self.rho_omega = tuple(
            Fraction(sum(om_[i] for om_ in self.omega_of_root), 2) for i in range(l)
        )

    def _form(self, u, v):
        return sum(
            u[i] * self.d[i] * self.cartan[i][j] * v[j]
            for i in range(self.l)
            for j in range(self.l)
        )

    def _build_affine(self):
        l = self.l
        if not self.twisted:
            cl0 = tuple(-x for x in self.theta)
            norm0 = self._norm2[self.theta_idx]
            marks_fin = self.theta
            comarks_fin = self.coroot_coords[self.theta_idx]
            a0, a0v = 1, 1
        elif self.a2l2:
            cl0 = tuple(-2 * x for x in self.theta_s)
            norm0 = 4 * self._norm2[self.theta_s_idx]
            marks_fin = tuple(2 * x for x in self.theta_s)
            comarks_fin = self.coroot_coords[self.theta_s_idx]
            a0, a0v = 1, 2
        else:
            cl0 = tuple(-x for x in self.theta_s)
            norm0 = self._norm2[self.theta_s_idx]
            marks_fin = self.theta_s
            comarks_fin = self.coroot_coords[self.theta_s_idx]
            a0, a0v = 1, 1
        self.cl_alpha0 = cl0
        self.marks = (a0,) + tuple(marks_fin)
        self.comarks = (a0v,) + tuple(comarks_fin)
        aff = [[0] * (l + 1) for _ in range(l + 1)]
        aff[0][0] = 2
        for j in range(l):
            x = Fraction(2 * self._form_vec(cl0, j), norm0)
            assert x.denominator == 1
            aff[0][j + 1] = int(x)
            y = Fraction(self._form_vec(cl0, j), self.d[j])
            assert y.denominator == 1
            aff[j + 1][0] = int(y)
        for i in range(l):
            for j in range(l):
                aff[i + 1][j + 1] = self.cartan[i][j]
        self.cartan_affine = tuple(tuple(r) for r in aff)
        marks = self.marks
        comarks = self.comarks
        assert all(sum(aff[i][j] * marks[j] for j in range(l + 1)) == 0 for i in range(l + 1))
        assert all(sum(comarks[i] * aff[i][j] for i in range(l + 1)) == 0 for j in range(l + 1))

    def _form_vec(self, u, j):
        return sum(u[i] * self.d[i] * self.cartan[i][j] for i in range(self.l))

    def _assert_rho_rows(self):
        # <rho^vee, alpha_j> = 1 and <alpha_j^vee, rho> = 1 for every j;
        # semi-infinite lengths may then use plain coordinate sums.
        for j in range(self.l):
            assert sum(self.rho_vee[i] * self.cartan[i][j] for i in range(self.l)) == 1
        for i in range(self.l):
            assert self.fac[i] * self.rho_omega[i] == 1

    # -- queries ------------------------------------------------------------

    def root_sign(self, coords) -> int:
        """+1 / -1 when coords is a positive / negative root, else 0."""
        if coords in self.root_index:
            return 1
        if tuple(-x for x in coords) in self.root_index:
            return -1
        return 0

    def pos_index(self, coords) -> int:
        """Index of a root given by coordinates of either sign."""
        if coords in self.root_index:
            return self.root_index[coords]
        return self.root_index[tuple(-x for x in coords)]

    def bilinear(self, u, v) -> Fraction:
        """Invariant form on the root lattice (coordinate vectors)."""
        return self._form(u, v)

    def adjust_vec(self, k: int) -> tuple:
        """Integer vector pairing the translation lattice against root k.

        Twisted mode: row <gamma_k^vee, alpha_j> (dot against xi in Q).
        Untwisted mode: column <alpha_i^vee, gamma_k> (dot against xi in
        the coroot lattice).
        """
        return self.pair_row[k] if self.twisted else self.a_col[k]

    def lattice_vec(self, k: int) -> tuple:
        """Translation-lattice vector attached to positive root k.

        This is the drift a quantum-type reflection contributes: gamma_k
        itself in twisted mode, gamma_k^vee in untwisted mode.
        """
        return self.positive_roots[k] if self.twisted else self.coroot_coords[k]

    def c_alpha(self, coords) -> int:
        return self.c_root[self.pos_index(coords)]

    def to_json_dict(self) -> dict:
        t = self.type
        return {
            "family": t.family,
            "rank": t.rank,
            "finite": t.finite,
            "cartan_finite": [list(r) for r in self.cartan],
            "cartan_affine": [list(r) for r in self.cartan_affine],
            "marks": list(self.marks),
            "comarks": list(self.comarks),
            "norms": [[x.numerator, x.denominator] for x in (2 * d for d in self.d)],
            "positive_roots": [list(v) for v in self.positive_roots],
            "c_alpha": list(self.c_root),
            "short": [bool(b) for b in self.is_short],
            "highest_short_root": list(self.theta_s),
        }


@lru_cache(maxsize=None)
def build_root_datum(atype: AffineType) -> RootDatum:
    return RootDatum(atype)


def datum(family: str, rank: int | None = None) -> RootDatum:
    """Shorthand: build the datum for a twisted family name."""
    return build_root_datum(affine_type(family, rank))


def untwisted_datum(finite: str, rank: int) -> RootDatum:
    return build_root_datum(untwisted_type(finite, rank))


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class Weight:
    """A level-zero-centred weight: classical part in the varpi basis
    plus a rational delta coefficient and a level.

    ``omega[i]`` is the coefficient of varpi_{i+1}; for ``A2l2`` the
    pairing <alpha_l^vee, .> reads off 2*omega[l-1].
    """

    omega: tuple
    delta: Fraction
    level: Fraction = Fraction(0)

    def __add__(self, other):
        return Weight(
            tuple(a + b for a, b in zip(self.omega, other.omega)),
            self.delta + other.delta,
            self.level + other.level,
        )

    def __sub__(self, other):
        return Weight(
            tuple(a - b for a, b in zip(self.omega, other.omega)),
            self.delta - other.delta,
            self.level - other.level,
        )

    def scale(self, r):
        return Weight(tuple(r * a for a in self.omega), r * self.delta, r * self.level)


def dominant_weight(datum: RootDatum, m) -> Weight:
    """lambda = sum m_i varpi_i for a nonnegative integer vector m."""
    m = tuple(m)
    assert len(m) == datum.l and all(x >= 0 for x in m)
    return Weight(m, Fraction(0))


def support_complement(datum: RootDatum, lam: Weight) -> frozenset:
    """J_lambda = {i : m_i = 0} (public 1-based indices)."""
    return frozenset(i + 1 for i in range(datum.l) if lam.omega[i] == 0)


def pairing_simple(datum: RootDatum, i: int, w: Weight):
    """<alpha_i^vee, w> for i in 0..l (0 = affine node)."""
    if i == 0:
        s = sum(datum.comarks[j + 1] * datum.fac[j] * w.omega[j] for j in range(datum.l))
        return Fraction(w.level - s, datum.comarks[0])
    return datum.fac[i - 1] * w.omega[i - 1]


def pairing_root_coroot(datum: RootDatum, coords, w: Weight):
    """<gamma^vee, cl(w)> for a finite root gamma of either sign."""
    k = datum.pos_index(coords)
    sgn = 1 if coords in datum.root_index else -1
    cr = datum.coroot_coords[k]
    return sgn * sum(cr[i] * datum.fac[i] * w.omega[i] for i in range(datum.l))


def translation_pairing(datum: RootDatum, xi, w: Weight):
    """The pairing governing t_xi on level-zero weights:
    the bilinear form (xi, cl w) in twisted mode, <xi, cl w> untwisted."""
    if datum.twisted:
        return sum(xi[j] * datum.d[j] * datum.fac[j] * w.omega[j] for j in range(datum.l))
    return sum(xi[i] * datum.fac[i] * w.omega[i] for i in range(datum.l))


def translate_weight(datum: RootDatum, xi, w: Weight) -> Weight:
    """t_xi w for a level-zero weight."""
    assert w.level == 0
    return Weight(w.omega, w.delta - translation_pairing(datum, xi, w), w.level)


# ---------------------------------------------------------------------------
# affine real roots


@dataclass(frozen=True)
class AffineRealRoot:
    """A real root ``mult * gamma + delta_coeff * delta`` with gamma a
    finite root (coordinate vector) and mult in {1, 2}.

    Doubled roots (mult = 2) occur only for ``A2l2``, over short gamma
    with an odd delta coefficient.
    """

    gamma: Coords
    delta_coeff: int
    mult: int = 1

    def classical(self):
        return tuple(self.mult * x for x in self.gamma)

    def __str__(self):
        g = "+".join(
            "%d*a%d" % (c, i + 1) for i, c in enumerate(self.gamma) if c
        ) or "0"
        return "%s(%s)+%d*delta" % ("2" if self.mult == 2 else "", g, self.delta_coeff)


def is_valid_root(datum: RootDatum, b: AffineRealRoot) -> bool:
    if datum.root_sign(b.gamma) == 0:
        return False
    k = datum.pos_index(b.gamma)
    if b.mult == 1:
        return b.delta_coeff % datum.c_root[k] == 0
    return (
        datum.a2l2
        and datum.is_short[k]
        and b.delta_coeff % 2 == 1
    )


def is_positive_root(datum: RootDatum, b: AffineRealRoot) -> bool:
    if b.delta_coeff != 0:
        return b.delta_coeff > 0
    return b.gamma in datum.root_index


def classify_real_root(datum: RootDatum, classical, delta_coeff: int) -> AffineRealRoot:
    """Recognise an affine vector as a valid real root, or raise."""
    classical = tuple(classical)
    if datum.root_sign(classical):
        b = AffineRealRoot(classical, delta_coeff, 1)
        if is_valid_root(datum, b):
            return b
    if all(x % 2 == 0 for x in classical):
        half = tuple(x // 2 for x in classical)
        if datum.root_sign(half):
            b = AffineRealRoot(half, delta_coeff, 2)
            if is_valid_root(datum, b):
                return b
    raise ValueError("not a real root: %s + %d delta" % (classical, delta_coeff))


def simple_affine_root(datum: RootDatum, i: int) -> AffineRealRoot:
    """alpha_i as an AffineRealRoot, i in 0..l."""
    if i > 0:
        g = tuple(1 if j == i - 1 else 0 for j in range(datum.l))
        return AffineRealRoot(g, 0, 1)
    if not datum.twisted:
        return AffineRealRoot(tuple(-x for x in datum.theta), 1, 1)
    neg = tuple(-x for x in datum.theta_s)
    if datum.a2l2:
        return AffineRealRoot(neg, 1, 2)
    return AffineRealRoot(neg, 1, 1)


def coroot_pairing(datum: RootDatum, b: AffineRealRoot, w: Weight):
    """<beta^vee, w>.  The K-component contributes level * coefficient."""
    k = datum.pos_index(b.gamma)
    sgn = 1 if b.gamma in datum.root_index else -1
    fin = sgn * sum(
        datum.coroot_coords[k][i] * datum.fac[i] * w.omega[i] for i in range(datum.l)
    )
    if b.mult == 2:
        val = Fraction(fin, 2) + Fraction(b.delta_coeff, 2) * w.level
    else:
        val = fin + b.delta_coeff * 2 / datum._norm2[k] * w.level
    if isinstance(val, Fraction) and val.denominator == 1:
        return int(val)
    return val


def reflect_weight(datum: RootDatum, b: AffineRealRoot, w: Weight) -> Weight:
    """s_beta w = w - <beta^vee, w> beta."""
    p = coroot_pairing(datum, b, w)
    k = datum.pos_index(b.gamma)
    sgn = 1 if b.gamma in datum.root_index else -1
    om = datum.omega_of_root[k]
    new_omega = tuple(
        w.omega[i] - p * sgn * b.mult * om[i] for i in range(datum.l)
    )
    return Weight(new_omega, w.delta - p * b.delta_coeff, w.level)


def root_as_weight(datum: RootDatum, b: AffineRealRoot) -> Weight:
    k = datum.pos_index(b.gamma)
    sgn = 1 if b.gamma in datum.root_index else -1
    om = datum.omega_of_root[k]
    return Weight(
        tuple(sgn * b.mult * x for x in om),
        Fraction(b.delta_coeff),
    )
