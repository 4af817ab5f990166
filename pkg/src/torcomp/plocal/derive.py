"""Build-time derivation of the tensor/Hom/Ext1/Tor1 tables on the six atoms.

Nothing in here is a hand-entered table. Every entry is produced by one of a
small set of named rules and records its derivation chain:

  unit            Z_(p) is the tensor unit and a projective generator.
  pres(cyc)       the presentation 0 -> A --p^k--> A -> Z/p^k -> 0 turns the
                  cyclic row of every table into the kernel/cokernel of
                  multiplication by p^k, which is elementary per atom.
  milnor(Q)       Q = colim(A --p--> A), so Hom(Q,-) = lim of the
                  multiplication tower and Ext^1(Q,-) = lim^1 of it.
  milnor(Prufer)  Z/p^oo = colim(Z/p^k) along the multiplication-by-p
                  inclusions, so Hom = lim of the p^k-kernel tower and
                  Ext^1 sits in 0 -> lim^1(kernel tower) -> Ext^1 ->
                  lim(completion tower) -> 0.
  localization    Hom_A(Q, N) = N and Ext^1_A(Q, N) = 0 for N a Q-module
                  (flat ring epimorphism A -> Q).
  injective       divisible = injective over the PID Z_(p).
  flat            torsion-free = flat over the PID Z_(p), killing Tor1.
  colim(tensor)   tensor commutes with the defining colimits.
  qp-split        Q_p is a Q-vector space of continuum dimension, hence a
                  direct sum of copies of Q; Hom/Ext out of it are products
                  of the Q-row.
  complete-source maps out of Z_p are p-adically forced: against a bounded
                  target they factor through Z_p/p^k; against a separated
                  countable target only 0 extends (a nonzero image would
                  give an uncountable submodule).
  outside         the true value is not a finite sum of atoms; recorded with
                  a nonzero-ness bit when cardinality arguments force it.

The spec-visible examples (e.g. Cyclic(2) (x) Cyclic(3) = Cyclic(2)) are
re-derived in the test suite by independent brute force over presentations
and element enumeration; this module never consults those tests.
"""

from .atoms import FREE, Q, CYC, PRUFER, ZHAT, QP, KINDS
from . import towers
from ..errors import OutsideClosedClass


# ---------------------------------------------------------------------------
# Values
# ---------------------------------------------------------------------------

class Value:
    """Result of an atomic operation: a class member or a marked outsider."""

    def is_in_class(self):
        return isinstance(self, InClass)


class InClass(Value):
    __slots__ = ("atoms",)

    def __init__(self, atoms):
        self.atoms = tuple(atoms)

    def is_zero(self):
        return not self.atoms

    def known_zero(self):
        return self.is_zero()

    def known_nonzero(self):
        return bool(self.atoms)

    def __repr__(self):
        return f"InClass({self.atoms})"

    def __eq__(self, other):
        return isinstance(other, InClass) and sorted(self.atoms) == sorted(other.atoms)

    def __hash__(self):
        return hash(tuple(sorted(self.atoms)))


class OutOfClass(Value):
    __slots__ = ("tag", "_nonzero", "reason")

    def __init__(self, tag, known_nonzero=None, reason=""):
        self.tag = tag
        self._nonzero = known_nonzero
        self.reason = reason

    def is_zero(self):
        return False

    def known_zero(self):
        return False

    def known_nonzero(self):
        return self._nonzero is True

    def __repr__(self):
        return f"OutOfClass({self.tag!r}, nonzero={self._nonzero})"


ZERO = InClass(())


def combine(v1, v2):
    """Direct sum of two values."""
    if isinstance(v1, InClass) and isinstance(v2, InClass):
        return InClass(v1.atoms + v2.atoms)
    outs = [v for v in (v1, v2) if isinstance(v, OutOfClass)]
    nonzero = (any(o._nonzero for o in outs)
               or any(isinstance(v, InClass) and v.known_nonzero() for v in (v1, v2)))
    return OutOfClass(" + ".join(o.tag for o in outs),
                      known_nonzero=True if nonzero else None,
                      reason="; ".join(o.reason for o in outs if o.reason))


# ---------------------------------------------------------------------------
# Structural multiplication-by-p^k facts (per atom, with their justifications)
# ---------------------------------------------------------------------------

def ker_pk(atom, k):
    """Kernel of p^k on an atom. Elementary structure of the six atoms."""
    kind = atom[0]
    if kind in (FREE, Q, ZHAT, QP):
        return ZERO
    if kind == CYC:
        return InClass(((CYC, min(atom[1], k)),))
    if kind == PRUFER:
        return InClass(((CYC, k),))
    raise AssertionError(kind)


def coker_pk(atom, k):
    """Cokernel of p^k on an atom."""
    kind = atom[0]
    if kind in (Q, PRUFER, QP):
        return ZERO  # p-divisible
    if kind == FREE or kind == ZHAT:
        return InClass(((CYC, k),))  # Z_(p)/p^k = Z_p/p^k = Z/p^k
    if kind == CYC:
        return InClass(((CYC, min(atom[1], k)),))
    raise AssertionError(kind)


def _is_q_module(kind):
    return kind in (Q, QP)


# ---------------------------------------------------------------------------
# Colimit helpers (tensor and Tor from the Prufer colimit presentation)
# ---------------------------------------------------------------------------

def _colim_coker_mult(atom):
    """colim(N/p^j N) along multiplication-by-p: computes Prufer (x) N."""
    kind = atom[0]
    if kind in (FREE, ZHAT):
        return (InClass(((PRUFER,),)),
                "colim(Z/p^j, mult-p inclusions) is the defining colimit of Z/p^oo")
    if kind == CYC:
        return (ZERO, "transitions on the stable terms Z/p^k are multiplication by p, "
                      "whose k-fold composites vanish: colimit 0")
    return (ZERO, "p-divisible atom: all terms N/p^jN vanish")


def _colim_ker_incl(atom):
    """colim(N[p^j]) along inclusions: the p-power torsion part of N."""
    kind = atom[0]
    if kind in (FREE, Q, ZHAT, QP):
        return (ZERO, "torsion-free atom")
    if kind == CYC:
        return (InClass((atom,)), "union of the p^j-torsion exhausts Z/p^k")
    if kind == PRUFER:
        return (InClass((atom,)), "union of the p^j-torsion exhausts Z/p^oo")
    raise AssertionError(kind)


# ---------------------------------------------------------------------------
# Table assembly
# ---------------------------------------------------------------------------

class Entry:
    __slots__ = ("fn", "log")

    def __init__(self, fn, log):
        self.fn = fn
        self.log = log


def _const(value, log):
    return Entry(lambda a, b: value, log)


def _build_tensor():
    t = {}

    def put(k1, k2, entry, symmetric=True):
        if (k1, k2) not in t:
            t[(k1, k2)] = entry
        if symmetric and (k2, k1) not in t:
            t[(k2, k1)] = Entry(lambda a, b, f=entry.fn: f(b, a),
                                entry.log + " [by commutativity of the tensor product]")

    # unit law
    for k in KINDS:
        put(FREE, k, Entry(lambda a, b: InClass((b,)),
                           "unit law: Z_(p) (x) N = N"))
    # cyclic row: right exactness of the presentation of Z/p^k
    for k in KINDS:
        put(CYC, k, Entry(lambda a, b: coker_pk(b, a[1]),
                          "pres(cyc): tensoring 0 -> A -p^k-> A -> Z/p^k -> 0 with N "
                          "gives Z/p^k (x) N = N/p^k N"))
    # Q row
    put(Q, Q, _const(InClass(((Q,),)),
                     "localization is idempotent: Q (x) Q = Q"))
    put(Q, CYC, _const(ZERO, "p is invertible on Q and p^k kills Z/p^k"))
    put(Q, PRUFER, _const(ZERO, "p is invertible on Q and Z/p^oo is p-power torsion"))
    put(Q, ZHAT, _const(InClass(((QP,),)),
                        "defining identity of the Q_p atom: Q_p := Q (x) Z_p"))
    put(Q, QP, _const(InClass(((QP,),)),
                      "Q (x) Q_p = (Q (x) Q) (x) Z_p = Q (x) Z_p = Q_p "
                      "(associativity and idempotence of localization)"))
    # Prufer row via its defining colimit
    def prufer_tensor(a, b):
        v, _ = _colim_coker_mult(b)
        return v
    put(PRUFER, PRUFER, Entry(prufer_tensor,
                              "colim(tensor): Z/p^oo (x) N = colim(N/p^jN, mult-p); "
                              "terms vanish (N divisible)"))
    put(PRUFER, ZHAT, Entry(prufer_tensor,
                            "colim(tensor): Z/p^oo (x) Z_p = colim(Z_p/p^j = Z/p^j, mult-p) "
                            "= Z/p^oo"))
    put(PRUFER, QP, Entry(prufer_tensor,
                          "colim(tensor): terms Q_p/p^jQ_p = 0"))
    # completed pairs leave the class
    big = ("not a finite sum of atoms: after inverting p this contains a "
           "Q-vector space of dimension continuum x continuum")
    put(ZHAT, ZHAT, _const(OutOfClass("Z_p (x) Z_p", known_nonzero=True, reason=big),
                           "outside: " + big))
    put(ZHAT, QP, _const(OutOfClass("Z_p (x) Q_p", known_nonzero=True, reason=big),
                         "outside: " + big))
    put(QP, QP, _const(OutOfClass("Q_p (x) Q_p", known_nonzero=True, reason=big),
                       "outside: " + big))
    return t


def _hom_q_into(b):
    """Hom(Q, N) for an atom N via the Milnor limit of the multiplication tower."""
    return towers.mult_p_tower_atom(b).lim


def _ext_q_into(b):
    return towers.mult_p_tower_atom(b).lim1


def _hom_prufer_into(b):
    return towers.kernel_pk_tower_atom(b).lim


def _ext_prufer_into(b):
    tv_ker = towers.kernel_pk_tower_atom(b)
    tv_compl = towers.coker_pk_proj_tower_atom(b)
    if not (isinstance(tv_ker.lim1, InClass) and tv_ker.lim1.is_zero()):
        return OutOfClass("ext1(Prufer,-) extension", known_nonzero=None,
                          reason="lim^1 of the kernel tower did not vanish")
    return tv_compl.lim


def _build_hom():
    t = {}

    def put(k1, k2, entry):
        t.setdefault((k1, k2), entry)

    for k in KINDS:
        put(FREE, k, Entry(lambda a, b: InClass((b,)),
                           "unit law: Hom(Z_(p), N) = N"))
        put(CYC, k, Entry(lambda a, b: ker_pk(b, a[1]),
                          "pres(cyc): Hom(Z/p^k, N) = N[p^k], the p^k-kernel"))
    # Q row: localization targets first, Milnor limit otherwise
    for k in KINDS:
        if _is_q_module(k):
            put(Q, k, Entry(lambda a, b: InClass((b,)),
                            "localization: Hom_A(Q, N) = N for N a Q-module"))
        else:
            put(Q, k, Entry(lambda a, b: _hom_q_into(b),
                            "milnor(Q): Hom(Q, N) = lim(N <-p- N); "
                            + towers.mult_p_tower_atom((k, 1) if k == CYC else (k,)).certificate))
    # Prufer row
    for k in KINDS:
        put(PRUFER, k, Entry(lambda a, b: _hom_prufer_into(b),
                             "milnor(Prufer): Hom(Z/p^oo, N) = lim(N[p^k], mult-p); "
                             + towers.kernel_pk_tower_atom((k, 1) if k == CYC else (k,)).certificate))
    # Z_p row
    put(ZHAT, CYC, Entry(lambda a, b: coker_pk((ZHAT,), b[1]),
                         "complete-source: a map Z_p -> Z/p^k kills p^k Z_p, so "
                         "Hom(Z_p, Z/p^k) = Hom(Z_p/p^k, Z/p^k) = Z/p^k"))
    put(ZHAT, ZHAT, _const(InClass(((ZHAT,),)),
                           "complete-source: phi(x) = lim phi(n_j) is forced by "
                           "p-adic approximation into the complete separated target, "
                           "so Hom(Z_p, Z_p) = Z_p (scalars)"))
    put(ZHAT, FREE, _const(ZERO,
                           "complete-source: the same approximation argument shows a "
                           "nonzero map would give a.Z_p inside the countable separated "
                           "target Z_(p); impossible by cardinality"))
    for k in (Q, PRUFER, QP):
        put(ZHAT, k, _const(OutOfClass(
            f"Hom(Z_p, {k})", known_nonzero=None,
            reason="contains a product of continuum many copies of Hom(Q,-) terms; "
                   "not a finite sum of atoms"),
            "outside: Z_p/Z_(p) is a continuum-dimensional Q-vector space, so maps "
            "out of Z_p into a divisible target form a product of continuum size"))
    # Q_p row via the Q-vector-space splitting
    def qp_out(b, opfn, opname):
        v = opfn(b)
        if isinstance(v, InClass) and v.is_zero():
            return ZERO
        return OutOfClass(f"{opname}(Q_p, ...)", known_nonzero=v.known_nonzero() or None,
                          reason="product of continuum many nonzero terms")
    for k in KINDS:
        kk = (k, 1) if k == CYC else (k,)
        put(QP, k, Entry(lambda a, b: qp_out(b, _hom_q_into if not _is_q_module(b[0]) else (lambda x: InClass((x,))), "Hom"),
                         "qp-split: Q_p = (+)_continuum Q as an A-module, so "
                         "Hom(Q_p, N) = prod Hom(Q, N); zero iff Hom(Q,N) = 0"))
    return t


def _build_ext1():
    t = {}

    def put(k1, k2, entry):
        t.setdefault((k1, k2), entry)

    for k in KINDS:
        put(FREE, k, _const(ZERO, "unit law: Z_(p) is projective"))
        put(CYC, k, Entry(lambda a, b: coker_pk(b, a[1]),
                          "pres(cyc): Ext^1(Z/p^k, N) = N/p^k N from the length-1 "
                          "free resolution"))
    for k in (Q, PRUFER, QP):
        for src in KINDS:
            put(src, k, _const(ZERO,
                               "injective: divisible modules are injective over the "
                               "PID Z_(p), so Ext^1(-, divisible) = 0"))
    for k in KINDS:
        kk = (k, 1) if k == CYC else (k,)
        put(Q, k, Entry(lambda a, b: _ext_q_into(b),
                        "milnor(Q): Ext^1(Q, N) = lim^1(N <-p- N); "
                        + towers.mult_p_tower_atom(kk).certificate))
        put(PRUFER, k, Entry(lambda a, b: _ext_prufer_into(b),
                             "milnor(Prufer): 0 -> lim^1(N[p^k]) -> Ext^1(Z/p^oo, N) -> "
                             "lim(N/p^kN, proj) -> 0; the lim^1 term vanishes here, "
                             "leaving the adic completion of N"))
    # Q_p row via the splitting
    def qp_ext(a, b):
        v = _ext_q_into(b)
        if isinstance(v, InClass) and v.is_zero():
            return ZERO
        return OutOfClass("Ext^1(Q_p, ...)",
                          known_nonzero=True if v.known_nonzero() else None,
                          reason="product of continuum many nonzero Ext^1(Q,-) terms")
    for k in KINDS:
        put(QP, k, Entry(qp_ext,
                         "qp-split: Ext^1(Q_p, N) = prod_continuum Ext^1(Q, N)"))
    # Z_p sources against non-divisible targets: not forced by the rule set.
    for k in (FREE, CYC, ZHAT):
        put(ZHAT, k, _const(OutOfClass(
            f"Ext^1(Z_p, {k})", known_nonzero=None,
            reason="not derivable from the rule set; no operation in the artifact "
                   "consumes this entry"),
            "outside: no rule forces this entry and the closed class does not "
            "contain it in general; never computed silently"))
    return t


def _build_tor1():
    t = {}

    def put(k1, k2, entry, symmetric=True):
        if (k1, k2) not in t:
            t[(k1, k2)] = entry
        if symmetric and (k2, k1) not in t:
            t[(k2, k1)] = Entry(lambda a, b, f=entry.fn: f(b, a),
                                entry.log + " [Tor is symmetric]")

    for k1 in (FREE, Q, ZHAT, QP):
        for k2 in KINDS:
            put(k1, k2, _const(ZERO,
                               "flat: torsion-free modules over the PID Z_(p) are flat"))
    for k in KINDS:
        put(CYC, k, Entry(lambda a, b: ker_pk(b, a[1]),
                          "pres(cyc): Tor_1(Z/p^k, N) = N[p^k] from the length-1 "
                          "free resolution"))

    def prufer_tor(a, b):
        v, _ = _colim_ker_incl(b)
        return v
    put(PRUFER, PRUFER, Entry(prufer_tor,
                              "colim(tensor): Tor_1(Z/p^oo, N) = colim N[p^j] = "
                              "p-power torsion of N"))
    return t


TABLES = {
    "tensor": _build_tensor(),
    "hom": _build_hom(),
    "ext1": _build_ext1(),
    "tor1": _build_tor1(),
}

# Ext^q = Tor_q = 0 for q >= 2: Z_(p) has global dimension 1. Recorded here so
# higher-degree requests are answered uniformly.
HIGHER_VANISH_LOG = "global dimension of Z_(p) is 1: Ext^q = Tor_q = 0 for q >= 2"


def table_value(op, atom1, atom2):
    """Value of a binary operation on two atoms, with its derivation log."""
    entry = TABLES[op][(atom1[0], atom2[0])]
    return entry.fn(atom1, atom2), entry.log


def apply_op(op, m, n):
    """Additive extension of an atomic table to class members (a Value)."""
    total = ZERO
    for a in (m.atoms or ()):
        for b in (n.atoms or ()):
            v, _ = table_value(op, a, b)
            total = combine(total, v)
    return total


def value_to_member(value, p, context=""):
    """Convert an in-class Value to a SymbolicPModule or raise OutsideClosedClass."""
    from .atoms import SymbolicPModule
    if isinstance(value, InClass):
        return SymbolicPModule(p, value.atoms)
    raise OutsideClosedClass(
        f"{context}: value {value.tag} is not in the closed symbolic class"
        + (f" ({value.reason})" if value.reason else ""))


def derivation_log():
    """The full derivation log of every table entry, as text."""
    lines = []
    for op in ("tensor", "hom", "ext1", "tor1"):
        lines.append(f"== {op} ==")
        tab = TABLES[op]
        for (k1, k2) in sorted(tab):
            a = (k1, 2) if k1 == CYC else (k1,)
            b = (k2, 3) if k2 == CYC else (k2,)
            v = tab[(k1, k2)].fn(a, b)
            shown = {CYC: "cyc", FREE: "free", Q: "q", PRUFER: "prufer",
                     ZHAT: "zhat", QP: "qp"}
            lines.append(f"  {op}({shown[k1]}, {shown[k2]}) [at k=2,3] = {v}")
            lines.append(f"      {tab[(k1, k2)].log}")
        lines.append(f"  (higher degrees: {HIGHER_VANISH_LOG})")
    return "\n".join(lines)
