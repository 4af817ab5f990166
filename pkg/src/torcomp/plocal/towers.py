"""Symbolic lim/lim^1 calculus for the towers that arise over (Z_(p), (p)).

A symbolic tower is one of a small set of shapes, each carrying an exact
justification for its lim/lim^1:

  constant(M)        M <-id- M <-id- ...          lim = M,  lim1 = 0 (ML)
  cyclic_proj        Z/p <- Z/p^2 <- ... (proj)   lim = Z_p, lim1 = 0
                     (surjective transitions; this tower *defines* Z_p)
  mult_p(M)          M <-p- M <-p- ...
  kernel_pk(M)       M[p] <- M[p^2] <- ... with multiplication-by-p
                     transitions (the Hom(Z/p^k, M) tower)
  coker_pk_proj(M)   M/pM <- M/p^2M <- ... with projections
                     (the completion tower)

mult_p(M) is resolved by:
  * p invertible on M: shift map is an isomorphism, tower constant up to iso.
  * M bounded torsion: composite transitions vanish, tower pro-zero.
  * M torsion-free: the tower SES (M,p) >-> (M,id) ->> (M/p^k, proj) is exact
    because p^k is injective on M, and its six-term lim sequence gives
    lim = ker(M -> C(M)) and lim1 = coker(M -> C(M)) for the completion map.
  * M = Prufer: the subtower of p^k-torsion is cyclic_proj (in coordinates
    Z/p^k = (1/p^k)Z/Z the transition multiplication-by-p is the projection),
    the quotient tower has isomorphism transitions; the six-term sequence
    leaves an extension of Prufer by Z_p on which p acts invertibly (the
    shift map inverts p), and the canonical SES 0 -> Z_p -> Q_p -> Z/p^oo -> 0
    is the unique class member matching it.

Values are returned through the derive.Value trichotomy, because
lim^1 of (Z_(p) <-p- Z_(p)) is the nonzero module Z_p/Z_(p) outside the class.
"""

from .atoms import FREE, Q, CYC, PRUFER, ZHAT, QP


class TowerValue:
    """lim/lim1 of a symbolic tower, each a derive.Value, plus a certificate tag."""

    def __init__(self, lim, lim1, certificate):
        self.lim = lim
        self.lim1 = lim1
        self.certificate = certificate

    def __repr__(self):
        return f"TowerValue(lim={self.lim}, lim1={self.lim1}, cert={self.certificate!r})"


def _values():
    # Imported lazily to avoid a cycle (derive imports this module).
    from . import derive
    return derive


def constant_tower(atoms):
    d = _values()
    return TowerValue(d.InClass(atoms), d.ZERO, "constant tower: Mittag-Leffler, lim = M, lim1 = 0")


def cyclic_proj_tower():
    d = _values()
    return TowerValue(
        d.InClass(((ZHAT,),)), d.ZERO,
        "Z/p <- Z/p^2 <- ... with projections: surjective (Mittag-Leffler), "
        "lim = Z_p by definition of the p-adic integers, lim1 = 0")


def mult_p_tower_atom(atom):
    """lim/lim1 of (N <-p- N) for a single atom N."""
    d = _values()
    kind = atom[0]
    if kind in (Q, QP):
        return TowerValue(
            d.InClass((atom,)), d.ZERO,
            "p acts invertibly, multiplication tower isomorphic to the constant tower")
    if kind == CYC:
        return TowerValue(
            d.ZERO, d.ZERO,
            f"p^{atom[1]} = 0 on Z/p^{atom[1]}: composite transitions vanish (pro-zero)")
    if kind in (FREE, ZHAT):
        # Torsion-free: tower SES (M,p) >-> (M,id) ->> (M/p^k, proj);
        # lim = ker(eta), lim1 = coker(eta) for eta: M -> C^I(M).
        if kind == ZHAT:
            return TowerValue(
                d.ZERO, d.ZERO,
                "torsion-free, completion map Z_p -> Z_p is an isomorphism: "
                "lim = ker(eta) = 0, lim1 = coker(eta) = 0")
        return TowerValue(
            d.ZERO,
            d.OutOfClass("Zp/Z_(p)", known_nonzero=True,
                         reason="coker of the completion map Z_(p) -> Z_p; nonzero "
                                "because the countable image cannot exhaust the "
                                "uncountable target"),
            "torsion-free: lim = ker(eta: Z_(p) -> Z_p) = 0; "
            "lim1 = coker(eta) = Z_p/Z_(p), outside the class")
    if kind == PRUFER:
        return TowerValue(
            d.InClass(((QP,),)), d.ZERO,
            "six-term sequence of the torsion filtration: 0 -> Z_p -> lim -> Z/p^oo -> 0 "
            "with lim a Q-module (shift inverts p); matched against the canonical SES "
            "0 -> Z_p -> Q_p -> Z/p^oo -> 0: lim = Q_p, lim1 = 0")
    raise AssertionError(kind)


def kernel_pk_tower_atom(atom):
    """lim/lim1 of the tower (N[p^k], mult-p transitions): Hom(Z/p^k, N)."""
    d = _values()
    kind = atom[0]
    if kind in (FREE, Q, ZHAT, QP):
        return TowerValue(d.ZERO, d.ZERO, "torsion-free atom: all terms vanish")
    if kind == CYC:
        return TowerValue(
            d.ZERO, d.ZERO,
            f"terms stabilize to Z/p^{atom[1]} with multiplication-by-p transitions; "
            "images p^m Z/p^k descend to 0 (stable), Mittag-Leffler with lim = 0")
    if kind == PRUFER:
        return TowerValue(
            d.InClass(((ZHAT,),)), d.ZERO,
            "terms Z/p^oo[p^k] = (1/p^k)Z/Z; multiplication by p is the projection "
            "Z/p^{k+1} -> Z/p^k in these coordinates: the defining Z_p tower")
    raise AssertionError(kind)


def coker_pk_proj_tower_atom(atom):
    """lim/lim1 of the completion tower (N/p^k N, projections)."""
    d = _values()
    kind = atom[0]
    if kind in (FREE, ZHAT):
        return TowerValue(
            d.InClass(((ZHAT,),)), d.ZERO,
            "terms Z/p^k with projections: the defining Z_p tower (surjective, ML)")
    if kind == CYC:
        k = atom[1]
        return TowerValue(
            d.InClass((atom,)), d.ZERO,
            f"terms stabilize to Z/p^{k} at stage {k} with identity transitions")
    if kind in (Q, PRUFER, QP):
        return TowerValue(d.ZERO, d.ZERO, "p-divisible atom: N/p^k N = 0 for every k")
    raise AssertionError(kind)


def sum_tower_values(values):
    """Direct sums of towers: lim and lim1 are (finitely) additive."""
    d = _values()
    lim = d.ZERO
    lim1 = d.ZERO
    certs = []
    for v in values:
        lim = d.combine(lim, v.lim)
        lim1 = d.combine(lim1, v.lim1)
        certs.append(v.certificate)
    return TowerValue(lim, lim1, "; ".join(certs) if certs else "zero tower")
