import pytest

from repdim.coxeter import (
    BadComposition,
    Permutation,
    UnsupportedRank,
    conjugate_intersection,
    coxeter_generators,
    double_cosets,
    enumerate_group,
    full_symmetric,
    min_coset_reps,
    min_left_coset_reps,
    sylow_symmetric,
    young_subgroup,
)


def test_generators_type_A():
    gens = coxeter_generators("A", 3)
    assert len(gens) == 2
    assert gens[0] == Permutation.transposition(3, 1, 2)
    assert gens[1] == Permutation.transposition(3, 2, 3)


def test_generators_type_B2_order():
    enum = enumerate_group("B", 2)
    assert enum.order == 8
    assert max(enum.lengths) == 4


def test_generators_type_D4_order():
    enum = enumerate_group("D", 4)
    assert enum.order == 192  # 2^3 * 4!
    for g in enum.elements:
        assert g.sign_product() == 1


def test_enumeration_type_A4():
    enum = enumerate_group("A", 4)
    assert enum.order == 24
    assert max(enum.lengths) == 6
    # longest element of S_3 has reduced word s1 s2 s1
    enum3 = enumerate_group("A", 3)
    longest = enum3.elements[-1]
    assert enum3.word(longest) == (0, 1, 0)


def test_element_order_is_length_lex():
    enum = enumerate_group("A", 3)
    keys = list(zip(enum.lengths, enum.words))
    assert keys == sorted(keys)


def test_young_subgroup():
    assert young_subgroup(4, (2, 2)).order == 4
    assert young_subgroup(3, (3,)).order == 6
    assert young_subgroup(3, (2, 1)).order == 2
    with pytest.raises(BadComposition):
        young_subgroup(3, (2, 2))


def test_min_coset_reps():
    reps = min_coset_reps(4, (2, 2))
    assert len(reps) == 6
    reps3 = min_coset_reps(3, (3,))
    assert len(reps3) == 1 and reps3[0].is_identity()
    reps21 = min_coset_reps(3, (2, 1))
    assert sorted(g.length() for g in reps21) == [0, 1, 2]


def test_min_left_coset_reps_length_additive():
    # length(d·u) = length(d) + length(u) for all u in the Young subgroup
    for comp in [(2, 2), (2, 1, 1), (3, 1)]:
        sub = young_subgroup(4, comp)
        for d in min_left_coset_reps(4, comp):
            for u in sub.elements:
                assert (d * u).length() == d.length() + u.length()


def test_sylow():
    s = sylow_symmetric(3, 2)
    assert s.order == 2
    s = sylow_symmetric(6, 3)
    assert s.order == 9
    s = sylow_symmetric(5, 5)
    assert s.order == 5
    # index coprime to p
    import math
    assert math.factorial(6) // 9 % 3 != 0
    with pytest.raises(UnsupportedRank):
        sylow_symmetric(9, 3)


def test_double_cosets():
    g = full_symmetric(3)
    h = young_subgroup(3, (2, 1))
    cosets = double_cosets(g, h, h)
    assert sorted(size for _, size in cosets) == [2, 4]
    assert sum(size for _, size in cosets) == 6
    full = double_cosets(g, g, g)
    assert len(full) == 1
    triv = young_subgroup(3, (1, 1, 1))
    singles = double_cosets(g, triv, triv)
    assert len(singles) == 6 and all(size == 1 for _, size in singles)


def test_conjugate_intersection():
    p = sylow_symmetric(3, 2)  # <(1 2)>
    sub, factors = conjugate_intersection(p, Permutation.identity(3))
    assert sub.order == p.order and factors is not None
    sub, factors = conjugate_intersection(p, Permutation.transposition(3, 1, 3))
    assert sub.order == 1 and factors == []
    p6 = sylow_symmetric(6, 3)
    x = Permutation([4, 5, 6, 1, 2, 3])  # swaps the two 3-cycle blocks
    sub, factors = conjugate_intersection(p6, x)
    assert sub.order == 9
    assert factors is not None and len(factors) == 2
    supports = [frozenset(i for i in range(1, 7) if g(i) != i) for g in factors]
    assert supports[0] & supports[1] == frozenset()
