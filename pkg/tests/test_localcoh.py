import pytest

from torcomp.errors import UnsupportedIdeal
from torcomp.exactnum import Matrix, ZZ
from torcomp.exactnum.rings import QQ, GF
from torcomp.gradedpoly import RingDescriptor, Poly, FgGradedModule
from torcomp.gradedpoly.homalg import hilbert_function
from torcomp.complexes import ZModule
from torcomp.localcoh import (
    Tower, lim_lim1,
    torsion_graded, torsion_abelian, torsion_plocal,
    local_cohomology, cech_tables_from_koszul,
    derived_completion_tower, local_homology_hom_route,
)
from torcomp.plocal import SymbolicPModule


def test_torsion_graded_direct_sum():
    # M = A/(x^2) (+) A over k[x], I = (x): torsion = A/(x^2), index 2.
    r = RingDescriptor(QQ, ("x",))
    from torcomp.gradedpoly.modules import FreeModuleElement
    M = FgGradedModule(r, (0, 0),
                       [FreeModuleElement(r, 2, {(0, (2,)): 1})])
    T, idx, cert = torsion_graded(M, [Poly.variable(r, 0)])
    assert idx == 2
    assert cert["kind"] == "ascending-chain-equality"
    hf = hilbert_function(T, range(0, 4))
    assert [hf[d] for d in range(4)] == [1, 1, 0, 0]  # A/(x^2) dims


def test_torsion_graded_free_is_zero():
    r = RingDescriptor(QQ, ("x", "y"))
    A = FgGradedModule.ring_module(r)
    T, idx, _ = torsion_graded(A, [Poly.variable(r, 0), Poly.variable(r, 1)])
    assert T.ngens == 0 and idx == 1


def test_torsion_abelian_z12():
    M = ZModule(1, Matrix(ZZ, [[12]]))
    dec, idx, cert = torsion_abelian(M, 2)
    assert dec == (0, [4])
    assert idx == 2


def test_torsion_plocal():
    m = SymbolicPModule(5, (("free",), ("cyc", 3), ("prufer",)))
    assert torsion_plocal(m) == SymbolicPModule(5, (("cyc", 3), ("prufer",)))


def test_lim_lim1_constant_and_proj():
    m = SymbolicPModule(3, (("cyc", 2),))
    lim, lim1, cert = lim_lim1(Tower("constant", member=m))
    assert lim == m and lim1.is_zero()
    lim, lim1, cert = lim_lim1(Tower("cyclic_proj", p=3))
    assert lim == SymbolicPModule.zhat(3) and lim1.is_zero()


def test_lim_lim1_mult_p_flags_outside():
    m = SymbolicPModule.free(3)
    lim, lim1, cert = lim_lim1(Tower("mult_p", member=m))
    assert lim.is_zero()
    assert isinstance(lim1, dict) and lim1["outside_class"] == "Zp/Z_(p)"
    assert lim1["known_nonzero"] is True


def test_local_cohomology_acceptance_shape():
    """A = k[x,y], I = m, M = A: H^0 = H^1 = 0, dim H^2_{-d} = d - 1."""
    r = RingDescriptor(GF(5), ("x", "y"))
    A = FgGradedModule.ring_module(r)
    window = range(-6, 2)
    rep = local_cohomology(A, ["x", "y"], window)
    assert rep["routes"]["agree"]
    t = rep["tables"]
    assert all(v == 0 for v in t[0].values())
    assert all(v == 0 for v in t[1].values())
    for d in window:
        expected = (-d - 1) if d <= -2 else 0
        assert t[2][d] == expected, (d, t[2][d], expected)


def test_local_cohomology_bounded_torsion_module():
    # M = A/m: H^0 = k, higher vanish.
    r = RingDescriptor(GF(5), ("x", "y"))
    k = FgGradedModule.quotient_ring(r, [Poly.variable(r, 0), Poly.variable(r, 1)])
    window = range(-3, 3)
    rep = local_cohomology(k, ["x", "y"], window)
    t = rep["tables"]
    assert t[0] == {d: (1 if d == 0 else 0) for d in window}
    assert all(v == 0 for v in t[1].values())
    assert all(v == 0 for v in t[2].values())


def test_cech_tables():
    r = RingDescriptor(GF(5), ("x", "y"))
    A = FgGradedModule.ring_module(r)
    window = range(-5, 2)
    rep = local_cohomology(A, ["x", "y"], window)
    rep["module_hilbert"] = hilbert_function(A, window)
    cech = cech_tables_from_koszul(rep)
    # H^0(Cech) = A (localization corrections vanish in H^0/H^1 here), and
    # H^1(Cech) = H^2_I.
    assert cech[0] == {d: rep["module_hilbert"][d] for d in window}
    assert cech[1] == rep["tables"][2]


def test_derived_completion_tower_free_module():
    r = RingDescriptor(GF(5), ("x", "y"))
    A = FgGradedModule.ring_module(r)
    window = range(0, 5)
    rep = derived_completion_tower(A, ["x", "y"], window)
    hf = hilbert_function(A, window)
    assert rep["L_tables"][0] == hf
    assert all(v == 0 for v in rep["L_tables"][1].values())
    assert all(v == 0 for v in rep["L_tables"][2].values())
    assert rep["lim_report"]["certificate"]["kind"] == "degreewise-nilpotence"


def test_derived_completion_tower_twist():
    r = RingDescriptor(GF(5), ("x", "y"))
    A3 = FgGradedModule.ring_module(r, twist=3)  # A(-3)
    window = range(0, 7)
    rep = derived_completion_tower(A3, ["x", "y"], window)
    assert rep["L_tables"][0] == hilbert_function(A3, window)


def test_derived_completion_tower_bounded_torsion():
    r = RingDescriptor(GF(5), ("x", "y"))
    k = FgGradedModule.quotient_ring(r, [Poly.variable(r, 0), Poly.variable(r, 1)])
    window = range(0, 4)
    rep = derived_completion_tower(k, ["x", "y"], window)
    assert rep["L_tables"][0] == hilbert_function(k, window)
    assert all(v == 0 for v in rep["L_tables"][1].values())


def test_derived_completion_rejects_degree_zero_ideal():
    r = RingDescriptor(GF(5), ("x", "y"))
    A = FgGradedModule.ring_module(r)
    with pytest.raises(UnsupportedIdeal):
        derived_completion_tower(A, [Poly.constant(r, 1)], range(0, 3))


def test_local_homology_hom_route_agrees():
    r = RingDescriptor(GF(5), ("x", "y"))
    A = FgGradedModule.ring_module(r)
    window = range(0, 4)
    tables, certs = local_homology_hom_route(A, ["x", "y"], window)
    rep = derived_completion_tower(A, ["x", "y"], window)
    for s in range(3):
        for d in window:
            assert tables[(s, d)] == rep["L_tables"][s][d], (s, d)
