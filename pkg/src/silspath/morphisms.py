"""Reduction maps between twisted affine types and their partners.

Two structure-preserving identifications of affine Weyl groups:

* for the dual untwisted families the partner is the untwisted algebra
  over the transposed Cartan matrix, elements keep their (w, xi) data
  (w re-expressed on coroot coordinates), and a real root goes to its
  coroot;
* for the doubled-short family ("A2l2") the partner is the member of
  the D-series with the same classical subsystem (realized as the
  untwisted rank-1 datum when l = 1), elements map identically, and
  roots map by alpha + n delta -> alpha + 2n delta,
  2 alpha + (2n-1) delta -> alpha + (2n-1) delta.

Both maps preserve semi-infinite length, Peterson coset membership,
the semi-infinite graph, and the level-zero weight poset; the check_*
functions verify this exhaustively over boxes and return reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cartan
from .cartan import (
    AffineRealRoot,
    RootDatum,
    Weight,
    dominant_weight,
    is_valid_root,
    untwisted_datum,
)
from .paths import Bg0Engine
from .sibg import out_edges, positive_real_roots_window
from .weyl import (
    AffineWeylElement,
    act_on_weight,
    peterson_contains,
    peterson_project,
    semi_infinite_length,
    weyl,
)


def _signed_coroot(datum: RootDatum, coords):
    k = datum.pos_index(coords)
    sgn = 1 if coords in datum.root_index else -1
    return tuple(sgn * c for c in datum.coroot_coords[k])


@dataclass(frozen=True)
class TypeMap:
    """A reduction map with its inverse, acting on elements and roots."""

    kind: str  # "phi" or "psi"
    source_datum: RootDatum
    target_datum: RootDatum

    def weyl_map(self, x: AffineWeylElement) -> AffineWeylElement:
        if self.kind == "psi":
            return AffineWeylElement(x.w, x.xi)
        return AffineWeylElement(weyl(self.source_datum).coroot_matrix(x.w), x.xi)

    def weyl_map_back(self, x: AffineWeylElement) -> AffineWeylElement:
        if self.kind == "psi":
            return AffineWeylElement(x.w, x.xi)
        return AffineWeylElement(weyl(self.target_datum).coroot_matrix(x.w), x.xi)

    def root_map(self, b: AffineRealRoot) -> AffineRealRoot:
        src, tgt = self.source_datum, self.target_datum
        assert is_valid_root(src, b)
        if self.kind == "psi":
            if b.mult == 1:
                out = AffineRealRoot(b.gamma, 2 * b.delta_coeff, 1)
            else:
                out = AffineRealRoot(b.gamma, b.delta_coeff, 1)
        else:
            c = src.c_root[src.pos_index(b.gamma)]
            assert b.delta_coeff % c == 0
            out = AffineRealRoot(_signed_coroot(src, b.gamma), b.delta_coeff // c, 1)
        assert is_valid_root(tgt, out)
        return out

    def root_map_back(self, b: AffineRealRoot) -> AffineRealRoot:
        src, tgt = self.source_datum, self.target_datum
        assert is_valid_root(tgt, b) and b.mult == 1
        if self.kind == "psi":
            if b.delta_coeff % 2 == 0:
                out = AffineRealRoot(b.gamma, b.delta_coeff // 2, 1)
            else:
                out = AffineRealRoot(b.gamma, b.delta_coeff, 2)
        else:
            coords = _signed_coroot(tgt, b.gamma)
            c = src.c_root[src.pos_index(coords)]
            out = AffineRealRoot(coords, b.delta_coeff * c, 1)
        assert is_valid_root(src, out)
        return out

    def weight_map(self, lam: Weight) -> Weight:
        assert lam.level == 0 and lam.delta == 0
        return dominant_weight(self.target_datum, lam.omega)


def reduction_map(datum: RootDatum) -> TypeMap:
    """The reduction attached to a twisted datum."""
    if not datum.twisted:
        raise ValueError("no reduction map out of an untwisted datum")
    if datum.a2l2:
        if datum.l == 1:
            target = untwisted_datum("A", 1)
        else:
            target = cartan.datum("Dlp12", datum.l)
        return TypeMap("psi", datum, target)
    family = {"B": "C", "C": "B", "F4": "F4r", "G2": "G2r"}[datum.type.finite]
    return TypeMap("phi", datum, untwisted_datum(family, datum.l))


def _box(l, radius):
    out = [()]
    for _ in range(l):
        out = [v + (c,) for v in out for c in range(-radius, radius + 1)]
    return out


def check_lemma_coset(tm: TypeMap, J, box: int) -> dict:
    """Peterson membership and semi-infinite length transfer across the
    map for every element in the box."""
    src, tgt = tm.source_datum, tm.target_datum
    checked = 0
    violations = []
    for w in weyl(src).elements():
        for xi in _box(src.l, box):
            x = AffineWeylElement(w, xi)
            y = tm.weyl_map(x)
            checked += 1
            if tm.weyl_map_back(y) != x:
                violations.append({"x": (w, xi), "kind": "round-trip"})
            if peterson_contains(src, J, x) != peterson_contains(tgt, J, y):
                violations.append({"x": (w, xi), "kind": "membership"})
            if semi_infinite_length(src, x) != semi_infinite_length(tgt, y):
                violations.append({"x": (w, xi), "kind": "length"})
    return {"checked": checked, "violations": violations}


def check_lemma_sib(tm: TypeMap, J, box: int) -> dict:
    """Out-edge sets of the semi-infinite graphs coincide under the map,
    on every Peterson representative in the box."""
    src, tgt = tm.source_datum, tm.target_datum
    reps = set()
    for w in weyl(src).elements():
        for xi in _box(src.l, box):
            reps.add(peterson_project(src, J, AffineWeylElement(w, xi)))
    checked = 0
    violations = []
    for x in sorted(reps, key=lambda x: (x.xi, x.w)):
        checked += 1
        image = {
            (tm.root_map(b), tm.weyl_map(y)) for b, y in out_edges(src, J, x)
        }
        direct = set()
        for b, y in out_edges(tgt, J, tm.weyl_map(x)):
            direct.add((b, y))
        if image != direct:
            violations.append({
                "x": (x.w, x.xi),
                "only_source": sorted(str(b) for b, _ in image - direct),
                "only_target": sorted(str(b) for b, _ in direct - image),
            })
    return {"checked": checked, "violations": violations}


def check_lemma_poset(tm: TypeMap, lam: Weight, box: int, max_delta: int = 2) -> dict:
    """Raising-edge equivalence between the level-zero weight posets of
    shape lam and of its partner weight, over x lam for every x in the
    box and every positive label in the delta window."""
    src, tgt = tm.source_datum, tm.target_datum
    lam2 = tm.weight_map(lam)
    eng_src = Bg0Engine(src, lam)
    eng_tgt = Bg0Engine(tgt, lam2)
    labels = positive_real_roots_window(src, max_delta)
    checked = 0
    violations = []
    for w in weyl(src).elements():
        for xi in _box(src.l, box):
            x = AffineWeylElement(w, xi)
            mu = act_on_weight(src, x, lam)
            nu = act_on_weight(tgt, tm.weyl_map(x), lam2)
            for b in labels:
                checked += 1
                if eng_src.is_edge(mu, b) != eng_tgt.is_edge(nu, tm.root_map(b)):
                    violations.append({
                        "x": (w, xi), "label": str(b),
                        "source_edge": eng_src.is_edge(mu, b),
                    })
    return {"checked": checked, "violations": violations}
