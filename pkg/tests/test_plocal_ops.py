import itertools

import pytest

from torcomp.errors import OutsideClosedClass
from torcomp.plocal import (
    SymbolicPModule, tensor, hom, ext1, tor1,
    adic_completion, derived_completion, torsion, widehat_tensor,
    is_L_complete, fracture_square_check, grothendieck_pointcheck,
    gamma_data,
)
from torcomp.plocal.ops import gm_ses_report
from torcomp.plocal.atoms import FREE, Q, CYC, PRUFER, ZHAT, QP

P = 5


def A():
    return SymbolicPModule.free(P)


def test_adic_completion_atomwise():
    assert adic_completion(A()) == SymbolicPModule.zhat(P)
    assert adic_completion(SymbolicPModule.prufer(P)).is_zero()
    assert adic_completion(SymbolicPModule.cyclic(P, 3)) == SymbolicPModule.cyclic(P, 3)
    assert adic_completion(SymbolicPModule.rationals(P)).is_zero()
    assert adic_completion(SymbolicPModule.qp(P)).is_zero()
    assert adic_completion(SymbolicPModule.zhat(P)) == SymbolicPModule.zhat(P)


def test_derived_completion_fg_is_completion():
    for m in (SymbolicPModule.fg(P, rank=2, torsion_exponents=(1, 4)),
              SymbolicPModule.fg(P, rank=0, torsion_exponents=(2,)),
              SymbolicPModule.fg(P, rank=3)):
        l0, l1 = derived_completion(m)
        assert l0 == adic_completion(m)
        assert l1.is_zero()


def test_derived_completion_prufer_and_rationals():
    l0, l1 = derived_completion(SymbolicPModule.prufer(P))
    assert l0.is_zero()
    assert l1 == SymbolicPModule.zhat(P)
    l0, l1 = derived_completion(SymbolicPModule.rationals(P))
    assert l0.is_zero() and l1.is_zero()


def test_gm_ses_report_both_routes_agree():
    members = [A(), SymbolicPModule.prufer(P), SymbolicPModule.cyclic(P, 2),
               SymbolicPModule.rationals(P), SymbolicPModule.zhat(P),
               SymbolicPModule.qp(P),
               SymbolicPModule.fg(P, rank=1, torsion_exponents=(3,))]
    for m in members:
        rep = gm_ses_report(m)
        assert rep["agree"], rep


def test_is_L_complete_all_six_atoms():
    expected = {
        (FREE,): False,   # L0 = Z_p != Z_(p)
        (Q,): False,      # Hom(Q, Q) = Q != 0
        (CYC, 2): True,   # bounded torsion
        (PRUFER,): False,  # L1 = Z_p
        (ZHAT,): True,
        (QP,): False,     # Hom(Q, Q_p) = Q_p != 0
    }
    for atom, want in expected.items():
        m = SymbolicPModule(P, (atom,))
        ok, witness = is_L_complete(m, with_witness=True)
        assert ok is want, (atom, witness)
        assert witness["fixed_point_agrees"]


def test_torsion_extraction():
    m = SymbolicPModule(P, ((FREE,), (CYC, 2), (PRUFER,), (QP,)))
    assert torsion(m) == SymbolicPModule(P, ((CYC, 2), (PRUFER,)))


def test_gamma_data():
    h0, h1 = gamma_data(A())
    assert h0.is_zero() and h1 == SymbolicPModule.prufer(P)
    h0, h1 = gamma_data(SymbolicPModule.zhat(P))
    assert h0.is_zero() and h1 == SymbolicPModule.prufer(P)
    h0, h1 = gamma_data(SymbolicPModule.cyclic(P, 4))
    assert h0 == SymbolicPModule.cyclic(P, 4) and h1.is_zero()


def test_fracture_square_zploc():
    rep = fracture_square_check(A())
    assert rep["exact"] is True
    c = rep["corners"]
    assert c["M"] == "Z_(p)" and c["completion"] == "Z_p"
    assert c["localization"] == "Q" and c["both"] == "Q_p"


def test_fracture_square_cyclic_and_prufer():
    rep = fracture_square_check(SymbolicPModule.cyclic(P, 3))
    assert rep["exact"] is True
    assert rep["corners"]["localization"] == "0"
    rep = fracture_square_check(SymbolicPModule.prufer(P))
    assert rep["exact"] is False
    assert rep["L1_obstruction"] == "Z_p"


def test_fracture_valuation_oracle():
    """Elementwise content of the fracture pullback: a rational is a p-adic
    integer iff its reduced denominator is prime to p, i.e. Z_p cap Q = Z_(p)."""
    from fractions import Fraction
    import random
    rng = random.Random(5)
    for _ in range(300):
        num = rng.randint(-200, 200)
        den = rng.randint(1, 200)
        x = Fraction(num, den)
        if x == 0:
            continue
        vp = 0
        n, d = x.numerator, x.denominator
        while n % P == 0:
            n //= P
            vp += 1
        while d % P == 0:
            d //= P
            vp -= 1
        assert (vp >= 0) == (x.denominator % P != 0)


def test_grothendieck_pointcheck():
    rep = grothendieck_pointcheck(P)
    assert rep["pass"] is True
    assert rep["H1_local_cohomology"] == "Z/p^oo"
    assert rep["duality_left (completion of Ext^0(A,A))"] == "Z_p"


def test_outside_closed_class_raises():
    zhat = SymbolicPModule.zhat(P)
    with pytest.raises(OutsideClosedClass):
        tensor(zhat, zhat)
    with pytest.raises(OutsideClosedClass):
        hom(zhat, SymbolicPModule.rationals(P))


def test_widehat_tensor():
    zhat = SymbolicPModule.zhat(P)
    assert widehat_tensor(zhat, zhat) == zhat
    assert widehat_tensor(A(), A()) == zhat
    assert widehat_tensor(zhat, SymbolicPModule.cyclic(P, 2)) == SymbolicPModule.cyclic(P, 2)
    assert widehat_tensor(SymbolicPModule.rationals(P), zhat).is_zero()
    # consistency: M (x)^ N == C(M) (x)^ C(N) on all atom pairs
    atoms = [(FREE,), (Q,), (CYC, 2), (PRUFER,), (ZHAT,), (QP,)]
    for a, b in itertools.product(atoms, repeat=2):
        m, n = SymbolicPModule(P, (a,)), SymbolicPModule(P, (b,))
        lhs = widehat_tensor(m, n)
        rhs = widehat_tensor(adic_completion(m), adic_completion(n))
        assert lhs == rhs, (a, b, lhs, rhs)


def test_idempotence_of_L0_on_L1_free_part():
    for atom in [(FREE,), (CYC, 3), (ZHAT,)]:
        m = SymbolicPModule(P, (atom,))
        l0, l1 = derived_completion(m)
        if l1.is_zero():
            assert is_L_complete(l0)
