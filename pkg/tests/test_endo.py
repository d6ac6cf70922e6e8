import pytest

from repdim.algebra import (
    Algebra,
    AlgebraError,
    group_algebra,
    group_subalgebra_embedding,
    hecke_algebra,
    identity_embedding,
    parabolic_subalgebra,
    truncated_polynomial_algebra,
    unit_subalgebra_embedding,
)
from repdim.coxeter import full_symmetric, sylow_symmetric
from repdim.endo import (
    PipelineStageFailure,
    basic_end_algebra,
    end_algebra,
    generator_gldim,
    global_dimension,
    repdim_finite_type,
    separable_division_check,
    verify_gldim_comparison,
    verify_xi_additivity,
    witness_upper_group,
    witness_upper_hecke,
)
from repdim.fields import QQ, field_make
from repdim.linalg import Matrix
from repdim.modules import (
    Representation,
    direct_sum,
    hom_space,
    regular_module,
    serial_indecomposables,
)

F2 = field_make("prime", p=2)
F3 = field_make("prime", p=3)


def nilpotent_one_dim(alg):
    z = Matrix.zero(alg.field, 1, 1)
    return Representation(alg, 1, [z], label="k", check=True)


def auslander_generator(field, m):
    # k + k[x]/(x^2) + ... + k[x]/(x^m), one copy of each indecomposable
    a = truncated_polynomial_algebra(field, m)
    gen, _ = direct_sum(serial_indecomposables(a))
    return a, gen


def test_end_algebra_auslander_dims():
    _, gen = auslander_generator(QQ, 2)
    e = end_algebra(gen)
    assert e.dim == 5
    # End(M + M) has four blocks of End(M) size
    mm, _ = direct_sum([gen, gen])
    assert end_algebra(mm).dim == 4 * e.dim


def test_end_algebra_rejects_dependent_basis():
    a = truncated_polynomial_algebra(QQ, 2)
    reg = regular_module(a)
    homs = hom_space(reg, reg)
    with pytest.raises(AlgebraError):
        end_algebra(reg, homs=homs + [homs[0]])


def test_gldim_auslander_algebra():
    # classic: End(k + k[x]/(x^2)) has global dimension 2
    for field in (QQ, F2):
        _, gen = auslander_generator(field, 2)
        g = global_dimension(end_algebra(gen))
        assert not g.at_cap and g.value == 2


def test_gldim_semisimple_is_zero():
    a = group_algebra(full_symmetric(3), QQ)
    g = global_dimension(end_algebra(regular_module(a)))
    assert g.value == 0


def test_gldim_hereditary_triangular():
    # path algebra of A_2: basis e1, e2, a with e2*a*e1 = a
    one = QQ.one
    mult = {(i, j): [] for i in range(3) for j in range(3)}
    mult[(0, 0)] = [(0, one)]
    mult[(1, 1)] = [(1, one)]
    mult[(1, 2)] = [(2, one)]
    mult[(2, 0)] = [(2, one)]
    a2 = Algebra(QQ, ["e1", "e2", "a"], mult, [one, one, QQ.zero],
                 [0, 1, 2], [(0,), (1,), (2,)], name="kA2")
    a2.verify_associativity()
    g = global_dimension(a2)
    assert g.value == 1


def test_gldim_basis_order_irrelevant():
    a, gen = auslander_generator(F3, 3)
    homs = hom_space(gen, gen)
    g1 = global_dimension(end_algebra(gen, homs=homs))
    g2 = global_dimension(end_algebra(gen, homs=list(reversed(homs))))
    assert g1.value == g2.value == 2


def test_basic_end_matches_full_end():
    a = truncated_polynomial_algebra(F2, 2)
    mods = serial_indecomposables(a)
    gen, _ = direct_sum(mods + [mods[-1]])
    g_full = global_dimension(end_algebra(gen))
    g_basic, endo, _ = generator_gldim(gen)
    assert endo.dim < end_algebra(gen).dim
    assert g_basic.value == g_full.value == 2


def test_gldim_cap_reported():
    a = truncated_polynomial_algebra(F2, 2)
    g = global_dimension(a, cap=3)
    # k[x]/(x^2) is selfinjective but not semisimple: infinite gldim
    assert g.at_cap and g.value is None and g.lower_bound == 3


def test_repdim_finite_type_values():
    for m in (2, 3):
        assert repdim_finite_type(truncated_polynomial_algebra(QQ, m)) == 2
    assert repdim_finite_type(truncated_polynomial_algebra(F2, 1)) == 0
    assert repdim_finite_type(group_algebra(full_symmetric(3), F2)) == 2
    assert repdim_finite_type(group_algebra(full_symmetric(3), QQ)) == 0


def test_separable_division_group_index_two():
    kg = group_algebra(full_symmetric(3), F2)
    emb = group_subalgebra_embedding(kg, sylow_symmetric(3, 2))
    # |S_3 : P| = 3 is invertible in F_2, so both routes certify
    assert separable_division_check(emb, method="mu")
    assert separable_division_check(emb, method="envelope")
    assert separable_division_check(emb)


def test_separable_division_identity():
    kg = group_algebra(full_symmetric(3), F3)
    assert separable_division_check(identity_embedding(kg))


def test_separable_division_fails_modular_unit():
    # F_2 C_2 over F_2 is not separable: mu = |C_2| = 0
    c2 = group_algebra(sylow_symmetric(2, 2), F2)
    emb = unit_subalgebra_embedding(c2)
    assert not separable_division_check(emb)
    assert not separable_division_check(emb, method="envelope")
    with pytest.raises(AlgebraError):
        separable_division_check(emb, method="mu")


def test_gldim_comparison_parabolic():
    h = hecke_algebra("A", 3, QQ, QQ.from_int(-1))
    emb = parabolic_subalgebra(h, (2, 1))
    gen, _ = direct_sum(serial_indecomposables(emb.sub))
    out = verify_gldim_comparison(emb, gen)
    assert out["holds"] and out["gldim_induced"] <= out["gldim_sub"] == 2


def test_gldim_comparison_identity_is_equality():
    a = truncated_polynomial_algebra(F2, 2)
    gen, _ = direct_sum(serial_indecomposables(a))
    out = verify_gldim_comparison(identity_embedding(a), gen)
    assert out["gldim_induced"] == out["gldim_sub"] == 2


def test_xi_additivity_truncated():
    b = truncated_polynomial_algebra(F2, 2)
    gen, _ = direct_sum(serial_indecomposables(b))
    out = verify_xi_additivity(b, gen, b, gen)
    assert out["total"] == 4 and out["parts"] == [2, 2]


def test_witness_hecke_3_2():
    w = witness_upper_hecke(3, 2)
    assert all(w.checks.values())
    assert w.gldim == 2 and w.bound == 2
    assert w.instance["field"] == "QQ"
    assert w.intermediates["induced_dim"] == 9


def test_witness_group_2_2_and_3_2():
    for n, p in ((2, 2), (3, 2)):
        w = witness_upper_group(n, p)
        assert all(w.checks.values())
        assert w.gldim == 2 and w.bound == 2


def test_witness_group_3_3():
    w = witness_upper_group(3, 3)
    assert w.gldim <= 2 and all(w.checks.values())


def test_witness_cap_names_stage():
    with pytest.raises(PipelineStageFailure) as exc:
        witness_upper_group(2, 2, cap=0)
    assert exc.value.stage == "global_dimension"


def test_witness_input_validation():
    with pytest.raises(AlgebraError):
        witness_upper_group(9, 3)
    with pytest.raises(AlgebraError):
        witness_upper_hecke(3, 1)
    with pytest.raises(AlgebraError):
        witness_upper_hecke(2, 3)


def test_certified_radical_attached():
    a = truncated_polynomial_algebra(F3, 2)
    mods = serial_indecomposables(a)
    endo = basic_end_algebra(mods)
    assert hasattr(endo, "_radical")
    # 5-dim Auslander algebra, semisimple quotient k x k: radical dim 3
    assert len(endo._radical) == 3
