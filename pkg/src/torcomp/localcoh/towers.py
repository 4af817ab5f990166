"""Inverse systems (towers) and their lim/lim^1 with mandatory certificates.

Three tower species are supported:

* symbolic p-local towers (the (p)-adic calculus): dispatched to the exact
  rules in plocal.towers;
* degreewise dimension towers over the graded backend: entries are internal-
  degree tables plus transition matrices; lim/lim^1 come with either an
  eventually-constant certificate (degreewise nilpotence) or a
  Mittag-Leffler image-stabilization certificate;
* abelian f.p. towers: entries ZModule with integer transition matrices,
  handled through the image-stabilization route when it certifies.

A result without a certificate is never returned: NotComputable is raised
instead (or, for the one known lim^1 that leaves the p-local class, the
value is reported as an explicit out-of-class flag).
"""

from ..errors import NotComputable, NoStabilization
from ..plocal import towers as ptowers
from ..plocal.atoms import SymbolicPModule
from ..plocal import derive


class Tower:
    """Inverse system descriptor.

    kind:
      "constant"        value: member/table
      "mult_p"          member: SymbolicPModule          (M <-p- M)
      "mod_p_powers"    member: SymbolicPModule          (M/p^k M, projections)
      "kernel_p_powers" member: SymbolicPModule          (M[p^k], mult-p)
      "cyclic_proj"     -                                (Z/p^k, projections)
      "dim_tables"      entries: list of {d: dim}, maps: list of per-degree
                        matrices entry k+1 -> k (callables d -> Matrix)
    """

    def __init__(self, kind, p=None, member=None, entries=None, maps=None,
                 certificate=None):
        self.kind = kind
        self.p = p
        self.member = member
        self.entries = entries
        self.maps = maps
        self.certificate = certificate


def lim_lim1(tower):
    """(lim, lim1, certificate) for a Tower; values are class members, dim
    tables, or explicit out-of-class flags {"outside_class": tag}."""
    if tower.kind == "constant":
        return tower.member, _zero_like(tower), "constant tower: Mittag-Leffler"
    if tower.kind == "cyclic_proj":
        tv = ptowers.cyclic_proj_tower()
        return (_value_to_member(tv.lim, tower.p),
                _value_to_member(tv.lim1, tower.p), tv.certificate)
    if tower.kind in ("mult_p", "mod_p_powers", "kernel_p_powers"):
        fn = {"mult_p": ptowers.mult_p_tower_atom,
              "mod_p_powers": ptowers.coker_pk_proj_tower_atom,
              "kernel_p_powers": ptowers.kernel_pk_tower_atom}[tower.kind]
        tv = ptowers.sum_tower_values([fn(a) for a in tower.member.atoms])
        return (_value_to_member(tv.lim, tower.member.p),
                _value_to_member(tv.lim1, tower.member.p), tv.certificate)
    if tower.kind == "dim_tables":
        return _lim_dim_tables(tower)
    raise NotComputable(f"no certificate class applies to tower kind {tower.kind!r}")


def _zero_like(tower):
    if isinstance(tower.member, SymbolicPModule):
        return SymbolicPModule.zero(tower.member.p)
    if tower.p:
        return SymbolicPModule.zero(tower.p)
    return 0


def _value_to_member(value, p):
    if isinstance(value, derive.InClass):
        return SymbolicPModule(p, value.atoms)
    return {"outside_class": value.tag, "known_nonzero": value.known_nonzero(),
            "reason": value.reason}


def _lim_dim_tables(tower):
    """Eventually-constant dimension towers: lim = stable table, lim1 = 0.

    The caller must provide entries already known constant from index
    `stable_from` onwards (a degreewise-nilpotence or image-stabilization
    certificate); we re-verify constancy on the provided range.
    """
    entries = tower.entries
    if not entries:
        raise NotComputable("empty tower")
    stable_from = (tower.certificate or {}).get("stable_from")
    if stable_from is None:
        raise NotComputable("dimension tower without a stabilization certificate")
    ref = entries[-1]
    for e in entries[stable_from:]:
        if e != ref:
            raise NoStabilization(len(entries), "entries not constant past the "
                                                "claimed stabilization index")
    return ref, {d: 0 for d in ref}, tower.certificate
