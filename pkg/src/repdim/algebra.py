"""Finite-dimensional algebras by labeled basis and sparse structure constants.

Constructors cover Iwahori-Hecke algebras of types A/B/D (T_w basis,
generator multiplication T_s T_w = T_{sw} or q_s T_{sw} + (q_s - 1) T_w
according to length), group algebras of permutation groups, tensor products,
truncated polynomial algebras, and parabolic/group subalgebra embeddings with
free right-module rewriting data.  Radicals are computed by the trace form of
the left regular representation in characteristic zero and by the iterated
characteristic-polynomial-coefficient method in characteristic p; both are
pure exact linear algebra.

Every algebra carries a designated generating set (basis indices) and, for
each basis element, a word in those generators whose product is exactly that
basis element.  Representations store action matrices for generators only and
derive full basis actions through the words.
"""

from .coxeter import (
    CapExceeded,
    enumerate_group,
    coxeter_generators,
    min_left_coset_reps,
    young_subgroup,
)
from .fields import FieldMismatch
from . import linalg
from .linalg import Matrix, Subspace


class AlgebraError(Exception):
    pass


class RelationViolation(AlgebraError):
    pass


class FreenessFailure(AlgebraError):
    pass


class AlgorithmFailure(AlgebraError):
    pass


class SplitError(AlgebraError):
    pass


class Algebra:
    """Associative unital algebra with a labeled basis.

    mult[(i, j)] is the sparse expansion of b_i * b_j as [(k, payload)].
    unit is a dense payload vector.  gens lists the designated generating
    basis indices; words[k] is a tuple of positions into gens multiplying
    out to b_k.
    """

    def __init__(self, field, labels, mult, unit, gens, words, name=""):
        self.field = field
        self.dim = len(labels)
        self.labels = list(labels)
        self.mult = mult
        self.unit = unit
        self.gens = list(gens)
        self.words = list(words)
        self.name = name
        self._left_mats = {}

    # -- element helpers -----------------------------------------------

    def zero_vec(self):
        return [self.field.zero] * self.dim

    def basis_vec(self, i):
        v = self.zero_vec()
        v[i] = self.field.one
        return v

    def from_coords(self, pairs):
        v = self.zero_vec()
        for i, c in pairs:
            v[i] = self.field.add(v[i], c)
        return v

    def mul_vecs(self, u, v):
        f = self.field
        out = self.zero_vec()
        for i, a in enumerate(u):
            if f.is_zero(a):
                continue
            for j, b in enumerate(v):
                if f.is_zero(b):
                    continue
                ab = f.mul(a, b)
                for k, c in self.mult[(i, j)]:
                    out[k] = f.add(out[k], f.mul(ab, c))
        return out

    def left_mult_matrix(self, vec):
        """Matrix of x -> vec * x on the basis."""
        f = self.field
        m = Matrix.zero(f, self.dim, self.dim)
        for j in range(self.dim):
            for i, a in enumerate(vec):
                if f.is_zero(a):
                    continue
                for k, c in self.mult[(i, j)]:
                    m.data[k][j] = f.add(m.data[k][j], f.mul(a, c))
        return m

    def right_mult_matrix(self, vec):
        f = self.field
        m = Matrix.zero(f, self.dim, self.dim)
        for i in range(self.dim):
            for j, a in enumerate(vec):
                if f.is_zero(a):
                    continue
                for k, c in self.mult[(i, j)]:
                    m.data[k][i] = f.add(m.data[k][i], f.mul(a, c))
        return m

    def basis_left_mult(self, i):
        if i not in self._left_mats:
            self._left_mats[i] = self.left_mult_matrix(self.basis_vec(i))
        return self._left_mats[i]

    def is_unit_basis_element(self):
        f = self.field
        hits = [i for i, c in enumerate(self.unit) if not f.is_zero(c)]
        return len(hits) == 1 and self.unit[hits[0]] == f.one and hits[0] == 0

    # -- verification ---------------------------------------------------

    def verify_unit(self):
        f = self.field
        for j in range(self.dim):
            left = self.mul_vecs(self.unit, self.basis_vec(j))
            right = self.mul_vecs(self.basis_vec(j), self.unit)
            want = self.basis_vec(j)
            if left != want or right != want:
                raise RelationViolation("unit fails on basis %d of %s" % (j, self.name))

    def verify_associativity(self, triple_budget=200_000, rng=None):
        """(ab)c = a(bc) on basis triples: exhaustive when dim^3 fits the
        budget, else all generator-involving triples plus seeded samples."""
        n = self.dim
        if n ** 3 <= triple_budget:
            triples = (
                (i, j, k) for i in range(n) for j in range(n) for k in range(n)
            )
        else:
            import random

            rng = rng or random.Random(0)
            sampled = {
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(triple_budget // max(1, 3 * n))
            }
            for g in self.gens:
                for j in range(n):
                    sampled.add((g, j, g))
            triples = sampled
        # basis triples stay inside the sparse table, so accumulate sparsely
        # instead of multiplying dense vectors
        f = self.field
        add, mul, sub, is_zero, zero = f.add, f.mul, f.sub, f.is_zero, f.zero
        for i, j, k in triples:
            lhs = {}
            for t, c in self.mult[(i, j)]:
                for u, c2 in self.mult[(t, k)]:
                    lhs[u] = add(lhs.get(u, zero), mul(c, c2))
            rhs = {}
            for t, c in self.mult[(j, k)]:
                for u, c2 in self.mult[(i, t)]:
                    rhs[u] = add(rhs.get(u, zero), mul(c, c2))
            for u in set(lhs) | set(rhs):
                if not is_zero(sub(lhs.get(u, zero), rhs.get(u, zero))):
                    raise RelationViolation(
                        "associativity fails at (%d,%d,%d) in %s" % (i, j, k, self.name)
                    )

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i):
                if self.mult[(i, j)] != self.mult[(j, i)]:
                    return False
        return True

    def __repr__(self):
        return "Algebra(%s, dim %d, %s)" % (self.name or "?", self.dim, self.field)


def _mult_from_table(field, products):
    """products[(i, j)] -> dense vector; store sparsely."""
    mult = {}
    for key, vec in products.items():
        mult[key] = [(k, c) for k, c in enumerate(vec) if not field.is_zero(c)]
    return mult


# -- constructors -------------------------------------------------------


def k_algebra(field):
    """The ground field as a one-dimensional algebra."""
    mult = {(0, 0): [(0, field.one)]}
    return Algebra(field, ["1"], mult, [field.one], [], [()], name="k")


def truncated_polynomial_algebra(field, m, name=None):
    """k[x]/(x^m), basis 1, x, ..., x^{m-1}."""
    labels = ["1"] + ["x^%d" % e if e > 1 else "x" for e in range(1, m)]
    mult = {}
    for i in range(m):
        for j in range(m):
            mult[(i, j)] = [(i + j, field.one)] if i + j < m else []
    unit = [field.one] + [field.zero] * (m - 1)
    gens = [1] if m > 1 else []
    words = [(0,) * e for e in range(m)] if m > 1 else [()]
    return Algebra(field, labels, mult, unit, gens, words, name=name or "k[x]/(x^%d)" % m)


def group_algebra(group, field, name=None):
    """Group algebra of a SubgroupData (type-A permutation group)."""
    elements = sorted(group.elements, key=lambda g: (g.length(), g.window))
    index = {g: i for i, g in enumerate(elements)}
    # BFS words in the subgroup's own generators
    gens = [g for g in group.generators if not g.is_identity()]
    words = {elements[0]: ()}
    frontier = [elements[0]]
    while frontier:
        nxt = []
        for g in frontier:
            for gi, s in enumerate(gens):
                h = g * s
                if h not in words:
                    words[h] = words[g] + (gi,)
                    nxt.append(h)
        frontier = nxt
    if len(words) != len(elements):
        raise AlgebraError("generators do not generate the given element list")
    mult = {}
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            mult[(i, j)] = [(index[g * h], field.one)]
    unit = [field.one] + [field.zero] * (len(elements) - 1)
    alg = Algebra(
        field,
        [repr(g) for g in elements],
        mult,
        unit,
        [index[s] for s in gens],
        [words[g] for g in elements],
        name=name or "k[%s]" % group.label,
    )
    alg.group_elements = elements
    alg.group_index = index
    # zero divisors seeding module splitting: 1 - g and 1 + g + ... + g^{ord-1}
    cands = []
    for s in gens:
        vec = alg.zero_vec()
        vec[0] = field.one
        vec[index[s]] = field.neg(field.one)
        cands.append(vec)
        vec = alg.zero_vec()
        g = elements[0]
        while True:
            vec[index[g]] = field.add(vec[index[g]], field.one)
            g = g * s
            if g.is_identity():
                vec[0] = field.add(vec[0], field.one)
                break
        cands.append(vec)
    alg.splitting_candidates = cands
    return alg


def hecke_algebra(ctype, n, field, q, Q=None, cap=10_000, verify=True):
    """Hecke algebra on the T_w basis for W of type A, B or D.

    q is a payload of the field (nonzero); type B takes the extra parameter
    Q for the generator T_0.  Generator multiplication follows the length
    rule; general products are built by reduced-word recursion in increasing
    length order.
    """
    f = field
    if f.is_zero(q):
        raise AlgebraError("q must be nonzero")
    if ctype == "B" and Q is None:
        raise AlgebraError("type B needs the parameter Q")
    enum = enumerate_group(ctype, n, cap=cap)
    N = enum.order
    qs_list = [Q if (ctype == "B" and gi == 0) else q for gi in range(len(enum.generators))]

    # left multiplication by each generator, as sparse columns
    gen_cols = []
    for gi, s in enumerate(enum.generators):
        qs = qs_list[gi]
        qs_minus_1 = f.sub(qs, f.one)
        cols = []
        for w_idx, w in enumerate(enum.elements):
            sw_idx = enum.index[s * w]
            if enum.lengths[sw_idx] > enum.lengths[w_idx]:
                cols.append([(sw_idx, f.one)])
            else:
                entry = [(sw_idx, qs)]
                if not f.is_zero(qs_minus_1):
                    entry.append((w_idx, qs_minus_1))
                cols.append(entry)
        gen_cols.append(cols)

    def apply_gen(gi, vec):
        out = [f.zero] * N
        cols = gen_cols[gi]
        for j, a in enumerate(vec):
            if f.is_zero(a):
                continue
            for k, c in cols[j]:
                out[k] = f.add(out[k], f.mul(a, c))
        return out

    # rows of the multiplication table, by increasing length of the left factor
    mult = {}
    unit_vec = [f.one] + [f.zero] * (N - 1)
    rows = {0: None}  # identity handled specially
    for j in range(N):
        mult[(0, j)] = [(j, f.one)]
    for u_idx in range(1, N):
        word = enum.words[u_idx]
        first = word[0]
        rest_idx = enum.index[enum.generators[first].inverse() * enum.elements[u_idx]]
        assert enum.lengths[rest_idx] == enum.lengths[u_idx] - 1
        for j in range(N):
            if rest_idx == 0:
                base = [(j, f.one)]
            else:
                base = mult[(rest_idx, j)]
            vec = [f.zero] * N
            for k, c in base:
                vec[k] = c
            out = apply_gen(first, vec)
            mult[(u_idx, j)] = [(k, c) for k, c in enumerate(out) if not f.is_zero(c)]

    labels = ["T[%s]" % "".join(str(i) for i in enum.words[k]) if k else "T[e]" for k in range(N)]
    gens_idx = [enum.index[s] for s in enum.generators]
    words = []
    for k in range(N):
        words.append(tuple(enum.words[k]))
    alg = Algebra(f, labels, mult, unit_vec, gens_idx, words, name="H_%s%d" % (ctype, n))
    alg.hecke_type = ctype
    alg.hecke_n = n
    alg.hecke_q = q
    alg.hecke_Q = Q
    alg.enum = enum
    cands = []
    for gi, idx in enumerate(gens_idx):
        qs = qs_list[gi]
        vec = alg.zero_vec()  # T_s + 1
        vec[0] = f.one
        vec[idx] = f.one
        cands.append(vec)
        vec = alg.zero_vec()  # T_s - q_s
        vec[0] = f.neg(qs)
        vec[idx] = f.one
        cands.append(vec)
    alg.splitting_candidates = cands
    if ctype == "A":
        alg.commuting_separators = _jm_elements(alg)
    if verify:
        verify_hecke_relations(alg)
        alg.verify_unit()
    return alg


def _jm_elements(alg):
    """The pairwise commuting sums L_k = sum_{i<k} q^{i-k} T_{(i k)}.

    Their right multiplications are module endomorphisms of the regular
    module whose minimal polynomials factor over the base field, so they
    separate isotypic projective summands that defeat random splitting in
    characteristic zero."""
    from .fields import power

    f = alg.field
    enum = alg.enum
    qinv = f.inv(alg.hecke_q)
    gens = enum.generators
    out = []
    for k in range(2, alg.hecke_n + 1):
        vec = alg.zero_vec()
        for i in range(1, k):
            w = gens[i - 1]  # the transposition (i, i+1)
            for j in range(i, k - 1):
                w = gens[j] * w * gens[j]  # conjugate up to (i, k)
            idx = enum.index[w]
            vec[idx] = f.add(vec[idx], power(f, qinv, k - i))
        out.append(vec)
    return out


def verify_hecke_relations(alg):
    """Check the quadratic and braid relations of the presentation."""
    f = alg.field
    enum = alg.enum
    ctype = alg.hecke_type
    q, Q = alg.hecke_q, alg.hecke_Q
    gens = [alg.basis_vec(i) for i in alg.gens]
    one = alg.from_coords([(0, f.one)])

    def mul(*vs):
        out = one
        for v in vs:
            out = alg.mul_vecs(out, v)
        return out

    def lin(*pairs):
        out = alg.zero_vec()
        for c, v in pairs:
            for i, x in enumerate(v):
                out[i] = f.add(out[i], f.mul(c, x))
        return out

    for gi, t in enumerate(gens):
        qs = Q if (ctype == "B" and gi == 0) else q
        lhs = mul(t, t)  # must equal (qs-1)T + qs
        rhs = lin((f.sub(qs, f.one), t), (qs, one))
        if lhs != rhs:
            raise RelationViolation("quadratic relation fails for generator %d" % gi)
    # braid relations by Coxeter matrix of the underlying group
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            sa, sb = enum.generators[a], enum.generators[b]
            m = _coxeter_order(sa, sb)
            lhs_seq = [gens[a] if i % 2 == 0 else gens[b] for i in range(m)]
            rhs_seq = [gens[b] if i % 2 == 0 else gens[a] for i in range(m)]
            if mul(*lhs_seq) != mul(*rhs_seq):
                raise RelationViolation("braid relation fails between %d and %d" % (a, b))


def _coxeter_order(sa, sb):
    g = sa * sb
    acc = g
    m = 1
    while not acc.is_identity():
        acc = acc * g
        m += 1
        if m > 12:
            raise AlgebraError("unexpected Coxeter order")
    return m


def tensor_algebra(a, b, name=None):
    """A tensor B over the same field; basis pairs in row-major order."""
    if a.field != b.field:
        raise FieldMismatch("tensor factors over different fields")
    if not (a.is_unit_basis_element() and b.is_unit_basis_element()):
        raise AlgebraError("tensor factors must have basis unit at index 0")
    f = a.field
    db = b.dim
    labels = []
    for la in a.labels:
        for lb in b.labels:
            labels.append("%s(x)%s" % (la, lb))
    mult = {}
    for (i1, j1), terms_a in a.mult.items():
        for (i2, j2), terms_b in b.mult.items():
            out = []
            for k1, c1 in terms_a:
                for k2, c2 in terms_b:
                    out.append((k1 * db + k2, f.mul(c1, c2)))
            mult[(i1 * db + i2, j1 * db + j2)] = out
    unit = [f.zero] * (a.dim * db)
    unit[0] = f.one
    gens = [g * db for g in a.gens] + list(b.gens)
    words = []
    for i in range(a.dim):
        wa = a.words[i]
        for j in range(db):
            wb = tuple(len(a.gens) + t for t in b.words[j])
            words.append(tuple(wa) + wb)
    alg = Algebra(f, labels, mult, unit, gens, words, name=name or "%s(x)%s" % (a.name, b.name))
    cands = []
    for v in getattr(a, "splitting_candidates", []):
        cands.append([v[i] if j == 0 else f.zero for i in range(a.dim) for j in range(db)])
    for v in getattr(b, "splitting_candidates", []):
        cands.append([v[j] if i == 0 else f.zero for i in range(a.dim) for j in range(db)])
    alg.splitting_candidates = cands
    alg.tensor_factors = (a, b)
    return alg


def opposite_algebra(alg):
    """Same basis with reversed multiplication; reduced words reverse."""
    mult = {}
    for (i, j), terms in alg.mult.items():
        mult[(j, i)] = terms
    return Algebra(
        alg.field,
        list(alg.labels),
        mult,
        list(alg.unit),
        list(alg.gens),
        [tuple(reversed(w)) for w in alg.words],
        name=alg.name + "^op",
    )


# -- algebra maps --------------------------------------------------------


class AlgebraMap:
    """Unital multiplicative map given by its matrix on the basis."""

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, vec):
        return self.matrix.apply(vec)

    def compose(self, inner):
        return AlgebraMap(inner.source, self.target, self.matrix * inner.matrix)


def algebra_map(source, target, gen_images, check=True):
    """Build the map sending the designated generators of source to the given
    target elements (dense vectors), extended along basis words.

    Unit preservation and multiplicativity on all basis pairs are verified.
    """
    f = target.field
    if source.field != f:
        raise FieldMismatch("map between algebras over different fields")
    cols = []
    for k in range(source.dim):
        vec = list(target.unit)
        for gi in source.words[k]:
            vec = target.mul_vecs(vec, gen_images[gi])
        cols.append(vec)
    matrix = Matrix(f, target.dim, source.dim, [list(row) for row in zip(*cols)])
    amap = AlgebraMap(source, target, matrix)
    if check:
        if amap.apply(source.unit) != list(target.unit):
            raise RelationViolation("map does not preserve the unit")
        for i in range(source.dim):
            fi = cols[i]
            for j in range(source.dim):
                lhs = target.mul_vecs(fi, cols[j])
                rhs = amap.apply(source.from_coords(source.mult[(i, j)]))
                if lhs != rhs:
                    raise RelationViolation(
                        "map not multiplicative at basis pair (%d, %d)" % (i, j)
                    )
    return amap


# -- subalgebra embeddings ------------------------------------------------


class SubalgebraEmbedding:
    """Γ ⊆ Λ with Λ free as a right Γ-module.

    free_basis lists Λ-basis indices a_j with a_0 = 1.  decomp[w] = (j, gvec)
    writes the Λ-basis element b_w as a_j · ι(gvec) for a Γ-coordinate
    vector gvec.  rewrite[x][j] expands b_x · a_j as Σ_i a_i · γ_ij, stored
    as sparse [(i, gvec)].
    """

    def __init__(self, ambient, sub, inclusion, free_basis, decomp, rewrite):
        self.ambient = ambient
        self.sub = sub
        self.inclusion = inclusion
        self.free_basis = free_basis
        self.decomp = decomp
        self.rewrite = rewrite

    @property
    def rank(self):
        return len(self.free_basis)

    def embed_vec(self, gvec):
        return self.inclusion.apply(gvec)

    def verify_freeness(self):
        """{a_j · γ_k} must be a basis of Λ."""
        lam, gam = self.ambient, self.sub
        rows = []
        for j in self.free_basis:
            aj = lam.basis_vec(j)
            for k in range(gam.dim):
                rows.append(lam.mul_vecs(aj, self.embed_vec(gam.basis_vec(k))))
        m = Matrix(lam.field, len(rows), lam.dim, rows)
        if len(rows) != lam.dim or linalg.rank(m) != lam.dim:
            raise FreenessFailure(
                "products a_j * γ_k do not form a basis (%d vs dim %d)" % (len(rows), lam.dim)
            )


def _sub_basis_embedding(lam, sub_indices, sub_alg, free_basis, decomp, name):
    f = lam.field
    incl_cols = [lam.basis_vec(i) for i in sub_indices]
    inclusion = AlgebraMap(
        sub_alg, lam, Matrix(f, lam.dim, sub_alg.dim, [list(r) for r in zip(*incl_cols)])
    )
    rewrite = []
    for x in range(lam.dim):
        row = []
        for j in free_basis:
            prod = lam.from_coords(lam.mult[(x, j)])
            acc = {}
            for w, c in enumerate(prod):
                if f.is_zero(c):
                    continue
                i_pos, gvec = decomp[w]
                cur = acc.setdefault(i_pos, [f.zero] * sub_alg.dim)
                for t, gc in enumerate(gvec):
                    if not f.is_zero(gc):
                        cur[t] = f.add(cur[t], f.mul(c, gc))
            row.append(sorted(acc.items()))
        rewrite.append(row)
    emb = SubalgebraEmbedding(lam, sub_alg, inclusion, free_basis, decomp, rewrite)
    emb.sub.name = emb.sub.name or name
    return emb


def subalgebra_on_basis(lam, sub_indices, gens_local, words_local, name):
    """Subalgebra spanned by a multiplication-closed subset of the basis."""
    f = lam.field
    pos = {b: t for t, b in enumerate(sub_indices)}
    mult = {}
    for ti, bi in enumerate(sub_indices):
        for tj, bj in enumerate(sub_indices):
            terms = []
            for k, c in lam.mult[(bi, bj)]:
                if k not in pos:
                    raise AlgebraError("basis subset not closed under multiplication")
                terms.append((pos[k], c))
            mult[(ti, tj)] = terms
    unit = [f.zero] * len(sub_indices)
    unit[pos[0]] = f.one
    labels = [lam.labels[b] for b in sub_indices]
    return Algebra(f, labels, mult, unit, gens_local, words_local, name=name)


def parabolic_subalgebra(hecke, composition):
    """Young parabolic Γ = span{T_w : w ∈ S_λ} of a type-A Hecke algebra,
    with the distinguished left-coset representatives as free basis."""
    enum = hecke.enum
    n = hecke.hecke_n
    f = hecke.field
    sub = young_subgroup(n, composition)
    sub_elements = [g for g in enum.elements if g in sub]  # enum order
    sub_indices = [enum.index[g] for g in sub_elements]
    pos = {enum.index[g]: t for t, g in enumerate(sub_elements)}
    # local generators: the lambda-block adjacent transpositions
    local_gens = []
    gen_of = {}
    for s in sub.generators:
        t = pos[enum.index[s]]
        gen_of[s] = len(local_gens)
        local_gens.append(t)
    words_local = []
    for g in sub_elements:
        word = []
        rest = g
        while not rest.is_identity():
            for s in sub.generators:
                cand = s * rest
                if cand.length() < rest.length():
                    word.append(gen_of[s])
                    rest = cand
                    break
            else:
                raise AlgebraError("element not generated by Young generators")
        words_local.append(tuple(word))
    gamma = subalgebra_on_basis(
        hecke,
        sub_indices,
        local_gens,
        words_local,
        "H_parab%s" % (tuple(composition),),
    )
    gamma.splitting_candidates = []
    for t in local_gens:
        vec = gamma.zero_vec()
        vec[0] = f.one
        vec[t] = f.one
        gamma.splitting_candidates.append(vec)
        vec = gamma.zero_vec()
        vec[0] = f.neg(hecke.hecke_q)
        vec[t] = f.one
        gamma.splitting_candidates.append(vec)

    reps = min_left_coset_reps(n, composition)
    free_basis = [enum.index[d] for d in reps]
    decomp = {}
    sub_set = set(sub.elements)
    for w_idx, w in enumerate(enum.elements):
        for j_pos, d in enumerate(reps):
            u = d.inverse() * w
            if u in sub_set:
                # lengths add for distinguished reps, so T_w = T_d T_u exactly
                assert d.length() + u.length() == enum.lengths[w_idx]
                gvec = [f.zero] * gamma.dim
                gvec[pos[enum.index[u]]] = f.one
                decomp[w_idx] = (j_pos, gvec)
                break
        else:
            raise FreenessFailure("basis element outside the coset decomposition")
    emb = _sub_basis_embedding(hecke, sub_indices, gamma, free_basis, decomp, gamma.name)
    emb.verify_freeness()
    return emb


def max_ell_parabolic(hecke, ell):
    """The maximal ℓ-parabolic: λ = (ℓ^m, 1^a) with n = ℓm + a."""
    if ell < 2:
        raise AlgebraError("ell must be >= 2")
    n = hecke.hecke_n
    m, a = divmod(n, ell)
    composition = (ell,) * m + (1,) * a
    return parabolic_subalgebra(hecke, composition)


def group_subalgebra_embedding(lam, subgroup):
    """kH ⊆ kG for a subgroup H, with minimal left-coset representatives as
    the free right-kH basis."""
    f = lam.field
    elements = lam.group_elements
    index = lam.group_index
    sub_sorted = sorted(subgroup.elements, key=lambda g: (g.length(), g.window))
    sub_alg = group_algebra(subgroup, f)
    sub_pos = {g: t for t, g in enumerate(sub_sorted)}
    sub_indices = [index[g] for g in sub_sorted]
    # left coset reps: greedy minimal in enumeration order
    reps = []
    seen = set()
    for g in elements:
        if g in seen:
            continue
        reps.append(g)
        for u in sub_sorted:
            seen.add(g * u)
    free_basis = [index[d] for d in reps]
    decomp = {}
    for w in elements:
        for j_pos, d in enumerate(reps):
            u = d.inverse() * w
            if u in sub_pos:
                gvec = [f.zero] * sub_alg.dim
                gvec[sub_pos[u]] = f.one
                decomp[index[w]] = (j_pos, gvec)
                break
    emb = _sub_basis_embedding(lam, sub_indices, sub_alg, free_basis, decomp, sub_alg.name)
    emb.verify_freeness()
    return emb


def unit_subalgebra_embedding(lam):
    """k ⊆ Λ: the whole basis is the free basis."""
    f = lam.field
    sub_alg = k_algebra(f)
    free_basis = list(range(lam.dim))
    decomp = {w: (w, [f.one]) for w in range(lam.dim)}
    emb = _sub_basis_embedding(lam, [0], sub_alg, free_basis, decomp, "k")
    emb.verify_freeness()
    return emb


def identity_embedding(lam):
    """Λ ⊆ Λ itself (free basis {1})."""
    f = lam.field
    decomp = {w: (0, lam.basis_vec(w)) for w in range(lam.dim)}
    emb = _sub_basis_embedding(lam, list(range(lam.dim)), lam, [0], decomp, lam.name)
    return emb


# -- radical --------------------------------------------------------------


def _trace(alg, mat):
    f = alg.field
    acc = f.zero
    for i in range(mat.rows):
        acc = f.add(acc, mat.data[i][i])
    return acc


def radical(alg):
    """Basis of the Jacobson radical, as dense coordinate vectors.

    Characteristic zero: kernel of the trace form of the left regular
    representation (Dickson).  Characteristic p: the iterated chain using
    the coefficient of X^{n - p^i} of the characteristic polynomial of the
    regular representation, which cuts out the radical over prime fields.
    """
    f = alg.field
    n = alg.dim
    traces = [_trace(alg, alg.basis_left_mult(i)) for i in range(n)]
    gram = Matrix.zero(f, n, n)
    for i in range(n):
        for j in range(n):
            acc = f.zero
            for k, c in alg.mult[(i, j)]:
                acc = f.add(acc, f.mul(c, traces[k]))
            gram.data[i][j] = acc
    if f.char == 0:
        return linalg.kernel(gram)

    # char p: iterated chain A_0 = trace-form kernel, then
    # A_{i+1} = {x in A_i : lambda_i(x y) = 0 for all y in A_i} where
    # lambda_i reads the coefficient of X^{n - p^i} off the characteristic
    # polynomial of the regular representation; this map is linear on A_i
    # over the prime field
    basis = linalg.kernel(gram)
    p = f.char
    i = 1
    while p ** i <= n and basis:
        coeff_index = n - p ** i
        mats = [alg.left_mult_matrix(v) for v in basis]
        # rows indexed by y, columns by the unknown x over the current basis
        rows = []
        for my in mats:
            rows.append([charpoly(mx * my)[coeff_index] for mx in mats])
        ker = linalg.kernel(Matrix(f, len(basis), len(basis), rows))
        basis = [
            [
                f_sum(f, (f.mul(coeffs[t], basis[t][c]) for t in range(len(basis))))
                for c in range(n)
            ]
            for coeffs in ker
        ]
        i += 1
    return basis


def f_sum(field, items):
    acc = field.zero
    for x in items:
        acc = field.add(acc, x)
    return acc


def charpoly(mat):
    """Characteristic polynomial coefficients (ascending), via Hessenberg
    reduction; works over any field."""
    f = mat.field
    n = mat.rows
    h = [row[:] for row in mat.data]
    for j in range(n - 2):
        pivot = None
        for i in range(j + 1, n):
            if not f.is_zero(h[i][j]):
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != j + 1:
            h[pivot], h[j + 1] = h[j + 1], h[pivot]
            for row in h:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
        inv = f.inv(h[j + 1][j])
        for i in range(j + 2, n):
            factor = f.mul(h[i][j], inv)
            if f.is_zero(factor):
                continue
            for c in range(n):
                h[i][c] = f.sub(h[i][c], f.mul(factor, h[j + 1][c]))
            for r in range(n):
                h[r][j + 1] = f.add(h[r][j + 1], f.mul(factor, h[r][i]))
    # charpoly of Hessenberg matrix by the standard recurrence
    polys = [[f.one]]  # p_0 = 1
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = [f.zero] + prev  # x * p_{m-1}
        d = h[m - 1][m - 1]
        for t, c in enumerate(prev):
            cur[t] = f.sub(cur[t], f.mul(d, c))
        beta = f.one
        for i in range(m - 1, 0, -1):
            beta = f.mul(beta, h[i][i - 1])
            coeff = f.mul(beta, h[i - 1][m - 1])
            if not f.is_zero(coeff):
                pi = polys[i - 1]
                for t, c in enumerate(pi):
                    cur[t] = f.sub(cur[t], f.mul(coeff, c))
        polys.append(cur)
    return polys[n]


def lift_idempotent(alg, e, max_steps=64):
    """Lift an idempotent-mod-radical to an exact idempotent by the
    iteration e -> 3e^2 - 2e^3 (reduces to e -> e^2 in characteristic 2)."""
    f = alg.field
    three = f.from_int(3)
    two = f.from_int(2)
    for _ in range(max_steps):
        e2 = alg.mul_vecs(e, e)
        if e2 == e:
            return e
        e3 = alg.mul_vecs(e2, e)
        e = [f.sub(f.mul(three, a), f.mul(two, b)) for a, b in zip(e2, e3)]
    raise AlgorithmFailure("idempotent lifting did not converge")


def center(alg):
    """Basis of the center, as dense coordinate vectors."""
    rows = []
    f = alg.field
    for g in alg.gens or range(alg.dim):
        gv = alg.basis_vec(g)
        diff = alg.left_mult_matrix(gv) - alg.right_mult_matrix(gv)
        rows.extend(diff.data)
    if not rows:
        return [alg.basis_vec(i) for i in range(alg.dim)]
    return linalg.kernel(Matrix(f, len(rows), alg.dim, rows))


def wedderburn(alg):
    """Radical, simple block dimensions, and a complete set of primitive
    orthogonal lifted idempotents (delegates to the module-decomposition
    engine on the regular module)."""
    from .modules import wedderburn_data

    return wedderburn_data(alg)
