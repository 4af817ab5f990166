"""Comodules over the v1 Hopf algebroids.

A Comodule is a finite direct sum of base atoms ('free' = A, ('cyc', k) =
A/p^k over Z_(p); 'free' = F_p over F_p), each optionally carrying an
x-degree label, together with a coaction matrix

    psi(e_i) = sum_j f_ij(x) (x) e_j,   f_ij = {x-degree: coefficient}.

Counit and coassociativity are checked exactly on generators at
construction; all coactions are polynomial of bounded degree, and the bound
is the certificate that window computations are exact (Delta preserves
x-degree on the primitively generated Psi).
"""

from ..errors import InputError, InternalCheckFailed
from ..plocal.atoms import SymbolicPModule, FREE, CYC, ZHAT
from .hopf import HopfAlgebroid


def _mod_reduce(c, mod):
    return c % mod if mod else c


class Comodule:
    def __init__(self, hopf, atoms, coaction=None, xdegs=None, check=True):
        self.hopf = hopf
        self.atoms = tuple(atoms)
        for a in self.atoms:
            if a[0] not in ("free", "cyc"):
                raise InputError(f"unsupported component {a}")
            if a[0] == "cyc" and hopf.base_kind == "Fp":
                raise InputError("cyclic components need the Z_(p) base")
        self.xdegs = tuple(xdegs) if xdegs else (0,) * len(self.atoms)
        n = len(self.atoms)
        # default: trivial coaction
        co = {}
        if coaction:
            for (i, j), poly in coaction.items():
                mod = self._modulus(j)
                cleaned = {t: _mod_reduce(c, mod) for t, c in poly.items()}
                cleaned = {t: c for t, c in cleaned.items() if c}
                if cleaned:
                    co[(i, j)] = cleaned
        for i in range(n):
            mod = self._modulus(i)
            cur = co.get((i, i), {})
            if 0 not in cur:
                cur = dict(cur)
                cur[0] = 1
                co[(i, i)] = cur
        self.coaction = co
        if check:
            self._check_well_defined()
            self._check_counit()
            self._check_coassociativity()

    def _modulus(self, j):
        a = self.atoms[j]
        if self.hopf.base_kind == "Fp":
            return self.hopf.p
        return self.hopf.p ** a[1] if a[0] == "cyc" else None

    def _order_exp(self, i):
        a = self.atoms[i]
        if a[0] == "cyc":
            return a[1]
        return None

    @property
    def ngens(self):
        return len(self.atoms)

    def max_coaction_degree(self):
        return max((t for poly in self.coaction.values() for t in poly), default=0)

    # -- checks ---------------------------------------------------------------
    def _check_well_defined(self):
        p = self.hopf.p
        for (i, j), poly in self.coaction.items():
            ki = self._order_exp(i)
            if ki is None:
                continue
            # p^{k_i} e_i = 0, so p^{k_i} f_ij must vanish in component j.
            mod = self._modulus(j)
            for t, c in poly.items():
                val = c * p ** ki
                if mod:
                    if val % mod != 0:
                        raise InputError(
                            f"coaction not well defined: p^{ki} * f[{i},{j}] "
                            f"nonzero mod {mod}")
                else:
                    if val != 0:
                        raise InputError(
                            f"coaction not well defined: torsion generator {i} "
                            f"maps to a free component {j}")

    def _check_counit(self):
        for i in range(self.ngens):
            for j in range(self.ngens):
                mod = self._modulus(j)
                c0 = self.coaction.get((i, j), {}).get(0, 0)
                want = 1 if i == j else 0
                if _mod_reduce(c0 - want, mod) != 0 if mod else (c0 - want) != 0:
                    raise InputError("counit check failed")

    def _check_coassociativity(self):
        H = self.hopf
        for i in range(self.ngens):
            left = {}
            for j in range(self.ngens):
                poly = self.coaction.get((i, j), {})
                for t, c in poly.items():
                    for (a, b), q in H.delta(t).items():
                        key = (a, b, j)
                        left[key] = left.get(key, 0) + c * q
            right = {}
            for k in range(self.ngens):
                fik = self.coaction.get((i, k), {})
                for t1, c1 in fik.items():
                    for j in range(self.ngens):
                        fkj = self.coaction.get((k, j), {})
                        for t2, c2 in fkj.items():
                            key = (t1, t2, j)
                            right[key] = right.get(key, 0) + c1 * c2
            keys = set(left) | set(right)
            for key in keys:
                mod = self._modulus(key[2])
                diff = left.get(key, 0) - right.get(key, 0)
                if (_mod_reduce(diff, mod) if mod else diff) != 0:
                    raise InputError(f"coassociativity fails on generator {i} at {key}")

    # -- forgetful -------------------------------------------------------------
    def underlying_member(self):
        """epsilon_* M as a SymbolicPModule (Z_(p) base only)."""
        if self.hopf.base_kind != "Zploc":
            raise InputError("underlying_member needs the Z_(p) base")
        out = []
        for a in self.atoms:
            out.append((FREE,) if a[0] == "free" else (CYC, a[1]))
        return SymbolicPModule(self.hopf.p, out)

    def is_bounded_torsion(self):
        return all(a[0] == "cyc" for a in self.atoms)

    def mod_pk(self, k):
        """M (x) A/p^k with the induced coaction (same matrix, reduced)."""
        p = self.hopf.p
        atoms = []
        keep = []
        for idx, a in enumerate(self.atoms):
            if a[0] == "free":
                atoms.append(("cyc", k))
                keep.append(idx)
            else:
                atoms.append(("cyc", min(a[1], k)))
                keep.append(idx)
        co = {(i, j): dict(poly) for (i, j), poly in self.coaction.items()}
        return Comodule(self.hopf, atoms, co, self.xdegs)

    def restrict(self, indices):
        """Subcomodule on a subset of generators (caller guarantees closure)."""
        pos = {old: new for new, old in enumerate(indices)}
        co = {}
        for (i, j), poly in self.coaction.items():
            if i in pos and j in pos:
                co[(pos[i], pos[j])] = dict(poly)
            elif i in pos and j not in pos:
                if any(c for c in poly.values()):
                    raise InputError("subset is not coaction-closed")
        return Comodule(self.hopf, [self.atoms[i] for i in indices], co,
                        [self.xdegs[i] for i in indices])

    def __repr__(self):
        names = []
        for a, d in zip(self.atoms, self.xdegs):
            base = "A" if a[0] == "free" else f"A/p^{a[1]}"
            names.append(base if d == 0 else f"{base}<{d}>")
        return f"Comodule({' + '.join(names) or '0'})"


def cofree(hopf, module_atoms, window, xdegs=None):
    """Windowed extended comodule Psi_{<=D} (x) J with coaction Delta (x) 1.

    The degrees-{<=D} truncation is a subcomodule of Psi (x) J because Delta
    only lowers the x-degree in the second slot; so the window is exact.
    module_atoms: list of ('free',) / ('cyc', k) atoms of J.
    """
    atoms = []
    xd = []
    labels = []
    base_degs = xdegs or [0] * len(module_atoms)
    for t in range(window + 1):
        for idx, a in enumerate(module_atoms):
            atoms.append(a)
            xd.append(t + base_degs[idx])
            labels.append((t, idx))
    pos = {lab: i for i, lab in enumerate(labels)}
    co = {}
    H = hopf
    for (t, idx) in labels:
        i = pos[(t, idx)]
        for (a, b), c in H.delta(t).items():
            j = pos[(b, idx)]
            co.setdefault((i, j), {})
            co[(i, j)][a] = co[(i, j)].get(a, 0) + c
    M = Comodule(hopf, atoms, co, xd)
    M.extended_structure = {"module_atoms": tuple(module_atoms),
                            "window": window, "labels": labels}
    return M


class ExtendedComodule:
    """Symbolic Psi (x) J for an arbitrary p-local member J (no window)."""

    def __init__(self, hopf, member):
        self.hopf = hopf
        self.member = member  # SymbolicPModule

    def materialize(self, window):
        atoms = []
        for a in self.member.atoms:
            if a[0] == FREE:
                atoms.append(("free",))
            elif a[0] == CYC:
                atoms.append(("cyc", a[1]))
            else:
                raise InputError("materialization needs an f.g. member")
        return cofree(self.hopf, atoms, window)

    def __repr__(self):
        return f"ExtendedComodule(Psi (x) {self.member})"


class LCompleteComodule:
    """L-complete comodule over (Ahat, Psihat): components are L-complete
    atoms (Z_p or Z/p^k) with a polynomial completed coaction, or the
    symbolic extended object Psihat boxtimes J.

    kind "componentwise": atoms + coaction matrix (entries exact integers).
    kind "extended": base p-local member J, completed coaction Deltahat (x) 1.
    """

    def __init__(self, hopf, kind, atoms=None, coaction=None, member=None,
                 xdegs=None):
        self.hopf = hopf
        self.kind = kind
        if kind == "componentwise":
            for a in atoms:
                if a[0] not in ("zhat", "cyc"):
                    raise InputError("components must be L-complete (Z_p or Z/p^k)")
            self.atoms = tuple(atoms)
            self.xdegs = tuple(xdegs) if xdegs else (0,) * len(self.atoms)
            self.coaction = coaction or {}
        elif kind == "extended":
            self.member = member  # J, a SymbolicPModule
        else:
            raise InputError("kind must be 'componentwise' or 'extended'")

    def __repr__(self):
        if self.kind == "extended":
            return f"LCompleteComodule(Psihat boxtimes {self.member})"
        return f"LCompleteComodule({list(self.atoms)})"
