import random

import pytest
import sympy

from repdim.algebra import (
    RelationViolation,
    algebra_map,
    center,
    charpoly,
    group_algebra,
    group_subalgebra_embedding,
    hecke_algebra,
    k_algebra,
    lift_idempotent,
    max_ell_parabolic,
    parabolic_subalgebra,
    radical,
    tensor_algebra,
    truncated_polynomial_algebra,
    unit_subalgebra_embedding,
)
from repdim.coxeter import full_symmetric, sylow_symmetric
from repdim.fields import QQ, field_make
from repdim.linalg import Matrix, Subspace

F2 = field_make("prime", p=2)
F3 = field_make("prime", p=3)
F5 = field_make("prime", p=5)
Z3 = field_make("cyclotomic", ell=3)


def _span(alg, vecs):
    s = Subspace(alg.field, alg.dim)
    for v in vecs:
        s.add(v)
    return s


def test_hecke_a2_relations_and_assoc():
    h = hecke_algebra("A", 3, QQ, QQ.from_int(2))
    assert h.dim == 6
    h.verify_associativity()
    # T_s^2 = (q-1) T_s + q with q = 2
    s = h.gens[0]
    prod = h.mul_vecs(h.basis_vec(s), h.basis_vec(s))
    want = h.zero_vec()
    want[0] = QQ.from_int(2)
    want[s] = QQ.from_int(1)
    assert prod == want


def test_hecke_at_q_one_matches_group_algebra():
    h = hecke_algebra("A", 3, QQ, QQ.one)
    g = group_algebra(full_symmetric(3), QQ)
    # identify T_w with w and compare all products
    to_g = {i: g.group_index[w] for i, w in enumerate(h.enum.elements)}
    for i in range(6):
        for j in range(6):
            lhs = sorted((to_g[k], c) for k, c in h.mult[(i, j)])
            rhs = sorted(g.mult[(to_g[i], to_g[j])])
            assert lhs == rhs


def test_hecke_b2():
    q = QQ.from_int(3)
    Q = QQ.from_int(5)
    h = hecke_algebra("B", 2, QQ, q, Q=Q)
    assert h.dim == 8
    h.verify_associativity()
    t0 = h.gens[0]
    prod = h.mul_vecs(h.basis_vec(t0), h.basis_vec(t0))
    want = h.zero_vec()
    want[0] = Q
    want[t0] = QQ.sub(Q, QQ.one)
    assert prod == want


def test_hecke_requires_nonzero_q_and_Q():
    from repdim.algebra import AlgebraError

    with pytest.raises(AlgebraError):
        hecke_algebra("A", 3, QQ, QQ.zero)
    with pytest.raises(AlgebraError):
        hecke_algebra("B", 2, QQ, QQ.one)


def test_hecke_over_cyclotomic():
    z = Z3.from_coeffs([0, 1])
    h = hecke_algebra("A", 3, Z3, z)
    assert h.dim == 6
    h.verify_associativity()
    assert len(radical(h)) > 0  # q a primitive cube root, n = 3


def test_hecke_rad_at_minus_one():
    # dim 2, (T+1)^2 = 0 when q = -1
    h = hecke_algebra("A", 2, QQ, QQ.from_int(-1))
    rad = radical(h)
    assert len(rad) == 1
    v = h.zero_vec()
    v[0] = QQ.one
    v[h.gens[0]] = QQ.one
    assert _span(h, rad).contains(v)


def test_group_algebra_semisimple_char0():
    g = group_algebra(full_symmetric(3), QQ)
    g.verify_unit()
    g.verify_associativity()
    assert radical(g) == []
    assert len(center(g)) == 3  # one central element per conjugacy class


def test_group_algebra_radical_char_p():
    s3 = full_symmetric(3)
    # F2 S3 = (dim 2 local block) + (matrix block), radical dim 1
    rad2 = radical(group_algebra(s3, F2))
    assert len(rad2) == 1
    # F3 S3: two one-dimensional simples with projective covers of dim 3
    rad3 = radical(group_algebra(s3, F3))
    assert len(rad3) == 4
    # p coprime to the group order: semisimple
    assert radical(group_algebra(s3, F5)) == []


def test_radical_is_nilpotent_ideal():
    for alg in (group_algebra(full_symmetric(3), F3), hecke_algebra("A", 2, QQ, QQ.from_int(-1))):
        rad = radical(alg)
        span = _span(alg, rad)
        for v in rad:
            m = alg.left_mult_matrix(v)
            power = Matrix.identity(alg.field, alg.dim)
            for _ in range(alg.dim):
                power = m * power
            assert all(alg.field.is_zero(c) for row in power.data for c in row)
            for b in range(alg.dim):
                assert span.contains(alg.mul_vecs(alg.basis_vec(b), v))
                assert span.contains(alg.mul_vecs(v, alg.basis_vec(b)))


def test_cyclic_p_group_algebra_radical():
    c3 = group_algebra(sylow_symmetric(3, 3), F3)
    assert len(radical(c3)) == 2
    t = truncated_polynomial_algebra(F3, 3)
    assert len(radical(t)) == 2
    assert radical(truncated_polynomial_algebra(QQ, 4)) != []
    assert len(radical(truncated_polynomial_algebra(QQ, 4))) == 3


def test_charpoly_against_sympy():
    rng = random.Random(1)
    for n in (2, 3, 4):
        data = [[rng.randrange(-4, 5) for _ in range(n)] for _ in range(n)]
        m = Matrix.from_rows(QQ, data)
        ours = charpoly(m)
        sym = sympy.Matrix(data).charpoly().all_coeffs()[::-1]
        assert ours == [QQ.from_int(int(c)) for c in sym]
    data = [[rng.randrange(5) for _ in range(4)] for _ in range(4)]
    m = Matrix(F5, 4, 4, [row[:] for row in data])
    ours = charpoly(m)
    sym = sympy.Matrix(data).charpoly().all_coeffs()[::-1]
    assert ours == [int(c) % 5 for c in sym]


def test_lift_idempotent():
    g = group_algebra(full_symmetric(3), F2)
    # symmetrizer of the 3-cycle subgroup: exactly idempotent in char 2
    e = g.zero_vec()
    for h, i in g.group_index.items():
        if h.length() % 2 == 0:
            e[i] = F2.one
    assert g.mul_vecs(e, e) == e
    r = radical(g)[0]
    perturbed = [F2.add(a, b) for a, b in zip(e, r)]
    lifted = lift_idempotent(g, perturbed)
    assert g.mul_vecs(lifted, lifted) == lifted
    span = _span(g, radical(g))
    assert span.contains([F2.sub(a, b) for a, b in zip(lifted, perturbed)])


def test_tensor_algebra():
    a = truncated_polynomial_algebra(QQ, 2)
    b = group_algebra(full_symmetric(3), QQ)
    t = tensor_algebra(a, b)
    assert t.dim == 12
    t.verify_unit()
    t.verify_associativity()
    assert len(radical(t)) == 6  # rad(a) (x) b


def test_algebra_map_checks():
    h = hecke_algebra("A", 3, QQ, QQ.one)
    g = group_algebra(full_symmetric(3), QQ)
    images = [g.basis_vec(g.group_index[h.enum.generators[i]]) for i in range(2)]
    phi = algebra_map(h, g, images)
    assert phi.apply(h.unit) == list(g.unit)
    # x -> 1 in k[x]/(x^2) violates x^2 = 0
    nil = truncated_polynomial_algebra(QQ, 2)
    with pytest.raises(RelationViolation):
        algebra_map(nil, k_algebra(QQ), [[QQ.one]])
    # trivial character is a genuine algebra map
    triv = algebra_map(g, k_algebra(QQ), [[QQ.one] for _ in g.gens])
    assert triv.apply(g.basis_vec(3)) == [QQ.one]


def test_parabolic_subalgebra():
    h = hecke_algebra("A", 4, QQ, QQ.from_int(2))
    emb = parabolic_subalgebra(h, (2, 2))
    assert emb.sub.dim == 4
    assert emb.rank == 6
    emb.sub.verify_unit()
    emb.sub.verify_associativity()
    # reconstruct every basis element from its coset decomposition
    for w in range(h.dim):
        j, gvec = emb.decomp[w]
        prod = h.mul_vecs(h.basis_vec(emb.free_basis[j]), emb.embed_vec(gvec))
        assert prod == h.basis_vec(w)
    # rewrite data reproduces x * a_j
    for x in range(h.dim):
        for jp, j in enumerate(emb.free_basis):
            want = h.mul_vecs(h.basis_vec(x), h.basis_vec(j))
            got = h.zero_vec()
            for ip, gvec in emb.rewrite[x][jp]:
                term = h.mul_vecs(h.basis_vec(emb.free_basis[ip]), emb.embed_vec(gvec))
                got = [QQ.add(u, v) for u, v in zip(got, term)]
            assert got == want


def test_max_ell_parabolic_shape():
    h = hecke_algebra("A", 4, QQ, QQ.from_int(2))
    emb = max_ell_parabolic(h, 2)
    assert emb.sub.dim == 4  # (2,2)
    emb3 = max_ell_parabolic(h, 3)
    assert emb3.sub.dim == 6  # (3,1)


def test_group_subalgebra_embedding():
    g = group_algebra(full_symmetric(3), QQ)
    emb = group_subalgebra_embedding(g, sylow_symmetric(3, 3))
    assert emb.sub.dim == 3 and emb.rank == 2
    for w in range(g.dim):
        j, gvec = emb.decomp[w]
        prod = g.mul_vecs(g.basis_vec(emb.free_basis[j]), emb.embed_vec(gvec))
        assert prod == g.basis_vec(w)


def test_unit_subalgebra_embedding():
    g = group_algebra(full_symmetric(3), QQ)
    emb = unit_subalgebra_embedding(g)
    assert emb.sub.dim == 1 and emb.rank == 6
