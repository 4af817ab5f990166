"""Hopf algebroid descriptors with checked structure maps.

v1 supports the discrete algebroid (A, A) and the primitively generated
polynomial algebroid (A, A[x]): Delta(x) = x (x) 1 + 1 (x) x, eps(x) = 0,
c(x) = -x, eta_L = eta_R. Psi elements are dicts {x-degree: coefficient}.
The cogroupoid identities are checked on x-powers up to a window on
construction, and Delta preserves x-degree (the lever that makes every
window computation exact).
"""

from math import comb

from ..errors import InputError, NotInvariant, InternalCheckFailed


class HopfAlgebroid:
    """(A, Psi) with A in {Z_(p), F_p} and Psi in {A, A[x] primitive}."""

    def __init__(self, base_kind, p, psi_kind="poly_primitive", check_window=8):
        if base_kind not in ("Zploc", "Fp"):
            raise InputError("base_kind must be 'Zploc' or 'Fp'")
        if psi_kind not in ("discrete", "poly_primitive"):
            raise InputError("psi_kind must be 'discrete' or 'poly_primitive'")
        self.base_kind = base_kind
        self.p = p
        self.psi_kind = psi_kind
        self.flat = True   # A and A[x] are free over A
        self.adams = True  # filtered by the finitely generated A[x]_{<=D}
        self._check_identities(check_window)

    # -- coefficient arithmetic (modulus None = Z_(p) as exact integers) ----
    def coeff_mod(self, order_exp=None):
        """Modulus for coefficients landing in a component: p^k for cyclic
        components (or the prime itself over F_p), None for free ones."""
        if self.base_kind == "Fp":
            return self.p
        return self.p ** order_exp if order_exp is not None else None

    # -- structure maps on x-powers -----------------------------------------
    def delta(self, n):
        """Delta(x^n) = sum_j C(n, j) x^j (x) x^{n-j} as {(a, b): coeff}."""
        if self.psi_kind == "discrete":
            if n != 0:
                raise InputError("discrete Psi has no x")
            return {(0, 0): 1}
        return {(j, n - j): comb(n, j) for j in range(n + 1)}

    def delta_reduced(self, n):
        """Delta(x^n) - x^n (x) 1 - 1 (x) x^n, supported in positive bidegrees."""
        full = self.delta(n)
        return {(a, b): c for (a, b), c in full.items() if a >= 1 and b >= 1}

    def counit(self, n):
        return 1 if n == 0 else 0

    def antipode(self, n):
        return (-1) ** n

    def _check_identities(self, window):
        for n in range(window + 1):
            if self.psi_kind == "discrete" and n > 0:
                break
            d = self.delta(n)
            # counit: (eps (x) 1) Delta = id
            lhs = sum(c * self.counit(a) for (a, b), c in d.items() if b == n)
            if lhs != 1:
                raise InternalCheckFailed("counit identity fails")
            # coassociativity on x^n: compare trinomial coefficients.
            left = {}
            for (a, b), c in d.items():
                for (a1, a2), c1 in self.delta(a).items():
                    key = (a1, a2, b)
                    left[key] = left.get(key, 0) + c * c1
            right = {}
            for (a, b), c in d.items():
                for (b1, b2), c1 in self.delta(b).items():
                    key = (a, b1, b2)
                    right[key] = right.get(key, 0) + c * c1
            if left != right:
                raise InternalCheckFailed("coassociativity fails on x^%d" % n)

    # -- invariant ideals -----------------------------------------------------
    def check_invariant_ideal(self, gens=None):
        """eta_L(g) in eta_R(I) Psi for each generator g of I.

        v1 ideals are (p) over Z_(p) (and (0) over F_p); with eta_L = eta_R
        this is the statement that every coefficient of eta_L(g) is divisible
        by p, which is checked, not assumed.
        """
        if self.base_kind == "Fp":
            return True  # I = (0)
        gens = gens or [self.p]
        for g in gens:
            # eta_L(g) is the constant polynomial g; membership in
            # eta_R(I) Psi means every coefficient divisible by p.
            if g % self.p != 0:
                raise NotInvariant(f"generator {g} is not in eta_R(I)Psi")
        return True

    def __repr__(self):
        base = "Z_(p)" if self.base_kind == "Zploc" else f"F_{self.p}"
        psi = base if self.psi_kind == "discrete" else f"{base}[x] (primitive)"
        return f"HopfAlgebroid({base}, {psi}, p={self.p})"
