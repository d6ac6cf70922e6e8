"""Modules over structure-constant algebras, as matrix representations.

A Representation stores one action matrix per designated algebra generator;
actions of arbitrary basis elements are derived through the stored reduced
words and cached.  On top of this sit Hom spaces (with closed-form fast
paths for projective sources and induced sources via adjointness),
induction and restriction along subalgebra embeddings, radical filtrations,
minimal projective covers, Ext groups from minimal resolutions,
decomposition into indecomposables by exact idempotent splitting, add-
membership via trace ideals, indecomposables of serial algebras, outer
tensor products and the double-coset restriction check for induced modules
over symmetric groups.
"""

import itertools
import random

from .algebra import (
    Algebra,
    AlgebraError,
    AlgorithmFailure,
    SplitError,
    group_algebra,
    group_subalgebra_embedding,
    radical as algebra_radical,
    tensor_algebra,
)
from .coxeter import (
    CapExceeded,
    conjugate_intersection,
    double_cosets,
    full_symmetric,
    sylow_symmetric,
)
from .fields import FieldMismatch
from . import linalg
from .linalg import Matrix, Subspace
from .polyfactor import (
    factor_poly,
    minimal_polynomial,
    poly_eval_matrix,
    splitting_idempotent,
)


class SerialityError(AlgebraError):
    pass


class Representation:
    """A left module given by generator action matrices."""

    def __init__(self, algebra, dim, gen_action, label="", check=False):
        self.algebra = algebra
        self.dim = dim
        self.gen_action = list(gen_action)
        self.label = label
        self.is_regular = False
        self._basis_cache = {}
        if len(self.gen_action) != len(algebra.gens):
            raise AlgebraError("one action matrix per designated generator required")
        if check:
            self.verify()

    def action_basis(self, k):
        if self.is_regular:
            return self.algebra.basis_left_mult(k)
        if k not in self._basis_cache:
            m = Matrix.identity(self.algebra.field, self.dim)
            for gi in self.algebra.words[k]:
                m = m * self.gen_action[gi]
            self._basis_cache[k] = m
        return self._basis_cache[k]

    def action_vec(self, v):
        f = self.algebra.field
        out = Matrix.zero(f, self.dim, self.dim)
        for k, c in enumerate(v):
            if f.is_zero(c):
                continue
            out = out + self.action_basis(k).scale(c)
        return out

    def verify(self):
        """Unit acts as identity; the generator actions are compatible with
        the structure constants (which pins down full multiplicativity by
        induction on word length)."""
        alg = self.algebra
        f = alg.field
        if self.action_vec(alg.unit) != Matrix.identity(f, self.dim):
            raise AlgebraError("unit does not act as identity on %s" % self.label)
        for gi, g in enumerate(alg.gens):
            for b in range(alg.dim):
                lhs = self.gen_action[gi] * self.action_basis(b)
                rhs = self.action_vec(alg.from_coords(alg.mult[(g, b)]))
                if lhs != rhs:
                    raise AlgebraError(
                        "action violates structure constants at (gen %d, basis %d)"
                        % (gi, b)
                    )

    def __repr__(self):
        return "Representation(%s, dim %d over %s)" % (
            self.label or "?",
            self.dim,
            self.algebra.name,
        )


class ModuleHom:
    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = matrix

    def verify(self):
        for a, b in zip(self.source.gen_action, self.target.gen_action):
            if self.matrix * a != b * self.matrix:
                raise AlgebraError("hom does not intertwine the actions")


def regular_module(alg, label=None):
    rep = Representation(
        alg,
        alg.dim,
        [alg.basis_left_mult(g) for g in alg.gens],
        label=label or "reg(%s)" % alg.name,
    )
    rep.is_regular = True
    rep.projective_embeds = [(0, [alg.basis_vec(k) for k in range(alg.dim)])]
    seps = getattr(alg, "commuting_separators", None)
    if seps:
        rep.split_helpers = [alg.right_mult_matrix(v) for v in seps]
    return rep


def zero_module(alg, label="0"):
    return Representation(alg, 0, [Matrix.zero(alg.field, 0, 0) for _ in alg.gens], label)


def sub_representation(m, basis_rows, label=""):
    """Invariant subspace (given by linearly independent spanning rows) as a
    module; returns (rep, injection matrix)."""
    f = m.algebra.field
    d = len(basis_rows)
    inj = Matrix(f, m.dim, d, [[basis_rows[j][i] for j in range(d)] for i in range(m.dim)])
    actions = []
    for a in m.gen_action:
        sol = linalg.solve(inj, a * inj)
        if sol is None:
            raise AlgorithmFailure("subspace is not invariant")
        actions.append(sol)
    return Representation(m.algebra, d, actions, label=label), inj


def quotient_representation(m, sub_rows, label=""):
    """Quotient by an invariant subspace; returns (rep, projection matrix)."""
    f = m.algebra.field
    span = Subspace.from_vectors(f, m.dim, sub_rows)
    pivot_set = set(span.pivots)
    comp = [c for c in range(m.dim) if c not in pivot_set]
    q = len(comp)
    proj = Matrix.zero(f, q, m.dim)
    for j in range(m.dim):
        vec = [f.zero] * m.dim
        vec[j] = f.one
        red = linalg.reduce_vector(f, span.rows, span.pivots, vec)
        for a, c in enumerate(comp):
            proj.data[a][j] = red[c]
    lift = Matrix.zero(f, m.dim, q)
    for a, c in enumerate(comp):
        lift.data[c][a] = f.one
    actions = [proj * a * lift for a in m.gen_action]
    rep = Representation(m.algebra, q, actions, label=label)
    return rep, proj


def direct_sum(reps, label=None):
    """Block-diagonal sum; returns (rep, list of injection matrices)."""
    if not reps:
        raise AlgebraError("empty direct sum needs an algebra; use zero_module")
    alg = reps[0].algebra
    f = alg.field
    total = sum(r.dim for r in reps)
    actions = [Matrix.zero(f, total, total) for _ in alg.gens]
    injections = []
    offset = 0
    embeds = []
    have_embeds = all(hasattr(r, "projective_embeds") for r in reps)
    for r in reps:
        if r.algebra is not alg and r.algebra.labels != alg.labels:
            raise AlgebraError("direct sum over mixed algebras")
        inj = Matrix.zero(f, total, r.dim)
        for i in range(r.dim):
            inj.data[offset + i][i] = f.one
        injections.append(inj)
        for gi, a in enumerate(r.gen_action):
            for i in range(r.dim):
                for j in range(r.dim):
                    actions[gi].data[offset + i][offset + j] = a.data[i][j]
        if have_embeds:
            for boff, iotas in r.projective_embeds:
                embeds.append((offset + boff, iotas))
        offset += r.dim
    rep = Representation(alg, total, actions, label=label or "(+)".join(r.label for r in reps))
    if have_embeds:
        rep.projective_embeds = embeds
    return rep, injections


# -- Hom spaces ------------------------------------------------------------


def _flat(mat):
    return [c for row in mat.data for c in row]


def hom_space(m, n):
    """Deterministic basis of the intertwiner space Hom(m, n), as matrices
    (n.dim x m.dim)."""
    if m.algebra.labels != n.algebra.labels or m.algebra.field != n.algebra.field:
        raise AlgebraError("hom between modules over different algebras")
    if m.dim == 0 or n.dim == 0:
        return []
    if m is n and m.is_regular:
        # End of the regular module: right multiplications by the basis
        alg = m.algebra
        return [alg.right_mult_matrix(alg.basis_vec(k)) for k in range(alg.dim)]
    if hasattr(m, "projective_embeds"):
        return _hom_from_projective(m, n)
    if hasattr(m, "induced_from"):
        return _hom_by_adjointness(m, n)
    return _hom_generic(m, n)


def _hom_from_projective(m, n):
    """Hom(P, N) for P a direct sum of left-ideal summands of the regular
    module: every hom on a block is p -> action_N(iota(p)) * v for some
    v in N (extension through the split surjection from the regular
    module), so no linear system needs solving."""
    f = m.algebra.field
    homs = []
    span = Subspace(f, n.dim * m.dim)
    for offset, iotas in m.projective_embeds:
        acts = [n.action_vec(iota) for iota in iotas]
        for j in range(n.dim):
            mat = Matrix.zero(f, n.dim, m.dim)
            for t, a in enumerate(acts):
                for r in range(n.dim):
                    mat.data[r][offset + t] = a.data[r][j]
            if span.add(_flat(mat)):
                homs.append(mat)
    return homs


def _hom_by_adjointness(m, n):
    """Hom_L(L (x)_G U, N) = Hom_G(U, N|_G)."""
    emb, u = m.induced_from
    resn = restrict(n, emb)
    inner = hom_space(u, resn)
    homs = []
    for fmat in inner:
        mat = Matrix.zero(m.algebra.field, n.dim, m.dim)
        for jp, bidx in enumerate(emb.free_basis):
            block = n.action_basis(bidx) * fmat
            for r in range(n.dim):
                for k in range(u.dim):
                    mat.data[r][jp * u.dim + k] = block.data[r][k]
        homs.append(mat)
    return homs


def _hom_generic(m, n):
    f = m.algebra.field
    mm, nn = m.dim, n.dim
    if not m.gen_action:
        # no generators: every matrix intertwines
        return [
            Matrix(
                f,
                nn,
                mm,
                [
                    [f.one if r * mm + c == s else f.zero for c in range(mm)]
                    for r in range(nn)
                ],
            )
            for s in range(nn * mm)
        ]
    if f.kind == "prime":
        import numpy as np

        blocks = []
        for a, b in zip(m.gen_action, n.gen_action):
            an = linalg.to_numpy(a)
            bn = linalg.to_numpy(b)
            blocks.append(
                (
                    np.kron(np.eye(nn, dtype=np.int64), an.T)
                    - np.kron(bn, np.eye(mm, dtype=np.int64))
                )
                % f.p
            )
        big = np.vstack(blocks) if blocks else np.zeros((0, nn * mm), dtype=np.int64)
        ker = linalg.kernel(linalg.from_numpy(f, big))
    else:
        rows = []
        for a, b in zip(m.gen_action, n.gen_action):
            for r in range(nn):
                for c in range(mm):
                    row = {}
                    for k in range(mm):
                        v = a.data[k][c]
                        if not f.is_zero(v):
                            row[r * mm + k] = f.add(row.get(r * mm + k, f.zero), v)
                    for k in range(nn):
                        v = b.data[r][k]
                        if not f.is_zero(v):
                            idx = k * mm + c
                            row[idx] = f.sub(row.get(idx, f.zero), v)
                    if row:
                        rows.append(row)
        ker = linalg.kernel_from_sparse_rows(f, rows, nn * mm)
    return [
        Matrix(f, nn, mm, [vec[r * mm : (r + 1) * mm] for r in range(nn)]) for vec in ker
    ]


# -- induction and restriction ----------------------------------------------


def induce(emb, m, label=None):
    """The induced module Lambda (x)_Gamma M on the basis {a_j (x) m_k}."""
    lam, gam = emb.ambient, emb.sub
    if m.algebra.labels != gam.labels:
        raise AlgebraError("module is not over the embedded subalgebra")
    f = lam.field
    r = emb.rank
    dim = r * m.dim
    actions = []
    for g in lam.gens:
        a = Matrix.zero(f, dim, dim)
        for jp in range(r):
            for ip, gvec in emb.rewrite[g][jp]:
                block = m.action_vec(gvec)
                for x in range(m.dim):
                    for y in range(m.dim):
                        c = block.data[x][y]
                        if not f.is_zero(c):
                            a.data[ip * m.dim + x][jp * m.dim + y] = f.add(
                                a.data[ip * m.dim + x][jp * m.dim + y], c
                            )
        actions.append(a)
    rep = Representation(lam, dim, actions, label=label or "ind(%s)" % m.label)
    rep.induced_from = (emb, m)
    return rep


def restrict(m, emb, label=None):
    """The same space viewed over the subalgebra of the embedding."""
    gam = emb.sub
    actions = [m.action_vec(emb.embed_vec(gam.basis_vec(t))) for t in gam.gens]
    return Representation(gam, m.dim, actions, label=label or "res(%s)" % m.label)


# -- radical filtration ------------------------------------------------------


def _alg_radical(alg):
    if not hasattr(alg, "_radical"):
        alg._radical = algebra_radical(alg)
    return alg._radical


def radical_subspace(m, start_rows=None):
    """Basis rows of rad(Lambda)·V (V = the whole module by default)."""
    f = m.algebra.field
    span = Subspace(f, m.dim)
    rad = _alg_radical(m.algebra)
    if start_rows is None:
        start_rows = [
            [f.one if i == j else f.zero for i in range(m.dim)] for j in range(m.dim)
        ]
    for r in rad:
        a = m.action_vec(r)
        for v in start_rows:
            span.add(a.apply(v))
    return [list(row) for row in span.rows]


def top_quotient(m, label=None):
    rows = radical_subspace(m)
    return quotient_representation(m, rows, label=label or "top(%s)" % m.label)


# -- decomposition ------------------------------------------------------------


class DecompositionReport:
    """Indecomposable summands with multiplicities and a change-of-basis
    witness conjugating the original action to the block-diagonal sum."""

    def __init__(self, module, classes, instances, change_of_basis):
        self.module = module
        self.classes = classes  # list of (Representation, multiplicity)
        self.instances = instances  # list of (Representation, injection)
        self.change_of_basis = change_of_basis

    def verify(self):
        m = self.module
        f = m.algebra.field
        c = self.change_of_basis
        cinv = linalg.inverse(c)
        if cinv is None:
            raise AlgorithmFailure("decomposition witness is singular")
        for gi in range(len(m.gen_action)):
            conj = cinv * m.gen_action[gi] * c
            offset = 0
            for rep, _ in self.instances:
                a = rep.gen_action[gi]
                for i in range(rep.dim):
                    for j in range(rep.dim):
                        if conj.data[offset + i][offset + j] != a.data[i][j]:
                            raise AlgorithmFailure("witness does not block-diagonalize")
                        conj.data[offset + i][offset + j] = f.zero
                offset += rep.dim
            if not conj.is_zero():
                raise AlgorithmFailure("off-diagonal residue in decomposition witness")

    def class_multiset(self):
        return sorted((rep.dim, mult) for rep, mult in self.classes)


def _restrict_end(ends, inj, idem):
    """Basis of End(V) for the summand V = im(idem) with injection inj,
    using End(eM) = e·End(M)·e, so no new Hom system is solved during
    recursion."""
    if not ends:
        return []
    f = inj.field
    d = inj.cols
    out = []
    span = Subspace(f, d * d)
    for h in ends:
        sol = linalg.solve(inj, idem * h * inj)
        if sol is None:
            raise AlgorithmFailure("projected endomorphism escapes the summand")
        if span.add(_flat(sol)):
            out.append(sol)
    return out


def _fingerprint(rep):
    """Cheap isomorphism invariants used to pre-filter before the exact
    add-membership test: dimension plus rank, trace and minimal polynomial
    of each generator action."""
    f = rep.algebra.field
    parts = []
    for a in rep.gen_action:
        acc = f.zero
        for i in range(rep.dim):
            acc = f.add(acc, a.data[i][i])
        mp = minimal_polynomial(a) if rep.dim else []
        parts.append((linalg.rank(a), f.format(acc), tuple(f.format(c) for c in mp)))
    return (rep.dim, tuple(parts))


def _is_scalar(mat):
    f = mat.field
    c = mat.data[0][0]
    return mat == Matrix.identity(f, mat.rows).scale(c)


def _split_candidates(m, ends, rng, rounds=60):
    for h in ends:
        yield h
    for i in range(min(len(ends), 6)):
        for j in range(min(len(ends), 6)):
            if i != j:
                yield ends[i] * ends[j]
    yield from _zero_divisor_candidates(m, ends, rng)
    f = m.algebra.field
    for _ in range(rounds):
        mat = Matrix.zero(f, m.dim, m.dim)
        for h in ends:
            mat = mat + h.scale(f.random(rng))
        yield mat


def _zero_divisor_candidates(m, ends, rng, vectors=4, per_vector=4):
    """Endomorphisms constrained to kill a fixed vector.

    On an isotypic summand P^r (r >= 2) random elements of End = M_r(local)
    can all have irreducible minimal polynomials over Q, but an annihilator
    element has the coprime factor t alongside its invertible part, so the
    idempotent split goes through.  On an indecomposable these elements fall
    into the radical and are skipped upstream as single-factor."""
    f = m.algebra.field
    d = m.dim
    for _ in range(vectors):
        v = [f.random(rng) for _ in range(d)]
        images = [h.apply(v) for h in ends]
        a = Matrix(f, d, len(ends), [[images[i][r] for i in range(len(ends))] for r in range(d)])
        ker = linalg.kernel(a)
        if not ker:
            continue
        for _ in range(per_vector):
            mat = Matrix.zero(f, d, d)
            for kv in ker:
                c = f.random(rng)
                for i, ci in enumerate(kv):
                    if not f.is_zero(ci) and not f.is_zero(c):
                        mat = mat + ends[i].scale(f.mul(c, ci))
            yield mat


def _end_semisimple_dim(m, ends):
    """dim End(m)/rad, through the radical of the abstract endomorphism
    algebra (structure constants via coordinates on a set of independent
    matrix positions)."""
    f = m.algebra.field
    d = len(ends)
    stack = Matrix(f, d, m.dim * m.dim, [_flat(h) for h in ends])
    _, pivots = linalg.rref(stack)
    sel = Matrix(f, d, d, [[stack.data[i][p] for p in pivots] for i in range(d)])
    selinv = linalg.inverse(sel.transpose())

    def coords(mat):
        flat = _flat(mat)
        vec = Matrix.column(f, [flat[p] for p in pivots])
        return [row[0] for row in (selinv * vec).data]

    mult = {}
    for i in range(d):
        for j in range(d):
            cs = coords(ends[i] * ends[j])
            mult[(i, j)] = [(k, c) for k, c in enumerate(cs) if not f.is_zero(c)]
    unit = coords(Matrix.identity(f, m.dim))
    endalg = Algebra(
        f,
        ["h%d" % i for i in range(d)],
        mult,
        unit,
        list(range(d)),
        [(i,) for i in range(d)],
        name="End(%s)" % m.label,
    )
    rad = algebra_radical(endalg)
    return d - len(rad)


def _image_rows(mat):
    rows, _ = linalg.row_space(mat.transpose())
    return rows


def _split_instances(m, inj, ends, rng, helpers=()):
    """Recursive exact splitting; returns [(indecomposable rep, injection
    into the original module)].

    helpers are extra module endomorphisms (not necessarily in the span of
    ends) tried before the generic candidates; they are restricted along
    each branch as long as they leave the summand invariant."""
    if m.dim == 0:
        return []
    if len(ends) <= 1:
        return [(m, inj)]
    f = m.algebra.field
    irr_degrees = set()
    for x in itertools.chain(helpers, _split_candidates(m, ends, rng)):
        if _is_scalar(x):
            continue
        mp = minimal_polynomial(x)
        facs = factor_poly(f, mp)
        if len(facs) < 2:
            irr_degrees.add(len(facs[0][0]) - 1)
            continue
        e = splitting_idempotent(f, mp, facs)
        em = poly_eval_matrix(f, e, x)
        rows1 = _image_rows(em)
        rows2 = _image_rows(Matrix.identity(f, m.dim) - em)
        if not rows1 or not rows2 or len(rows1) + len(rows2) != m.dim:
            raise AlgorithmFailure("idempotent image dimensions do not add up")
        out = []
        other = Matrix.identity(f, m.dim) - em
        for rows, idem in ((rows1, em), (rows2, other)):
            sub, subinj = sub_representation(m, rows, label=m.label + "'")
            sub_ends = _restrict_end(ends, subinj, idem)
            sub_helpers = []
            for h in helpers:
                sol = linalg.solve(subinj, h * subinj)
                if sol is not None:
                    sub_helpers.append(sol)
            out.extend(
                _split_instances(sub, inj * subinj, sub_ends, rng, sub_helpers)
            )
        return out
    s = _end_semisimple_dim(m, ends)
    # End is local when End/rad = k, or when some endomorphism generates
    # End/rad as a field k[t]/(f) with f irreducible of full degree
    if s == 1 or s in irr_degrees:
        return [(m, inj)]
    raise SplitError(
        "no splitting endomorphism found for %s (dim %d, End dim %d)"
        % (m.label, m.dim, len(ends))
    )


def _jordan_instances(m):
    """When a single generator acts with one eigenvalue, the module is
    classified by Jordan type: the chains are the indecomposable summands
    and no endomorphism algebra is ever formed.  Returns None when the
    shape does not apply."""
    alg = m.algebra
    if len(alg.gens) != 1 or m.dim <= 1:
        return None
    f = alg.field
    a = m.gen_action[0]
    mp = minimal_polynomial(a)
    facs = factor_poly(f, mp)
    if len(facs) != 1 or len(facs[0][0]) != 2:
        return None
    lam = f.neg(facs[0][0][0])
    e = facs[0][1]
    nil = a - Matrix.identity(f, m.dim).scale(lam)
    kernels = [[]]
    power = Matrix.identity(f, m.dim)
    for _ in range(e):
        power = nil * power
        kernels.append(linalg.kernel(power))
    chosen = Subspace(f, m.dim)
    chains = []
    for k in range(e, 0, -1):
        blocked = Subspace(f, m.dim)
        for row in chosen.rows:
            blocked.add(list(row))
        for v in kernels[k - 1]:
            blocked.add(v)
        for v in kernels[k]:
            if blocked.contains(v):
                continue
            chain = [list(v)]
            for _ in range(k - 1):
                chain.append(nil.apply(chain[-1]))
            for u in chain:
                if not chosen.add(u):
                    raise AlgorithmFailure("Jordan chain vectors are dependent")
            blocked.add(v)
            chains.append(chain)
    if chosen.dim != m.dim:
        raise AlgorithmFailure("Jordan chains do not span the module")
    out = []
    for chain in chains:
        rep, inj = sub_representation(m, chain, label="%s|J%d" % (m.label, len(chain)))
        out.append((rep, inj))
    return out


def decompose(m, seed=0):
    rng = random.Random(seed)
    instances = _jordan_instances(m)
    if instances is None:
        ends = hom_space(m, m)
        inj0 = Matrix.identity(m.algebra.field, m.dim)
        helpers = list(getattr(m, "split_helpers", ()))
        instances = _split_instances(m, inj0, ends, rng, helpers)
    # group into isomorphism classes
    keyed = sorted(
        ((rep, inj) for rep, inj in instances),
        key=lambda pair: _fingerprint(pair[0]),
    )
    classes = []  # (rep, [instances])
    for rep, inj in keyed:
        placed = False
        for crep, members in classes:
            if crep.dim == rep.dim and _fingerprint(crep) == _fingerprint(rep):
                if add_member(rep, crep)[0]:
                    members.append((rep, inj))
                    placed = True
                    break
        if not placed:
            classes.append((rep, [(rep, inj)]))
    classes.sort(key=lambda cm: _fingerprint(cm[0]))
    ordered_instances = []
    for _, members in classes:
        ordered_instances.extend(members)
    if instances:
        cols = []
        for rep, inj in ordered_instances:
            for j in range(rep.dim):
                cols.append([inj.data[i][j] for i in range(m.dim)])
        cob = Matrix(
            m.algebra.field,
            m.dim,
            m.dim,
            [[cols[j][i] for j in range(m.dim)] for i in range(m.dim)],
        )
    else:
        cob = Matrix.identity(m.algebra.field, 0)
    report = DecompositionReport(
        m,
        [(crep, len(members)) for crep, members in classes],
        ordered_instances,
        cob,
    )
    report.verify()
    return report


def add_member(x, m):
    """Does x belong to add(m)?  True iff id_x lies in the span of the
    composites x -> m -> x; returns (flag, witness coefficients)."""
    if x.dim == 0:
        return True, []
    to_x = hom_space(m, x)
    to_m = hom_space(x, m)
    f = x.algebra.field
    cols = []
    for fi in to_x:
        for gj in to_m:
            cols.append(_flat(fi * gj))
    if not cols:
        return False, None
    stack = Matrix(f, x.dim * x.dim, len(cols), [[col[i] for col in cols] for i in range(x.dim * x.dim)])
    target = Matrix.column(f, _flat(Matrix.identity(f, x.dim)))
    sol = linalg.solve(stack, target)
    if sol is None:
        return False, None
    witness = []
    idx = 0
    for i in range(len(to_x)):
        for j in range(len(to_m)):
            c = sol.data[idx][0]
            if not f.is_zero(c):
                witness.append((i, j, c))
            idx += 1
    return True, witness


# -- projective covers, syzygies, Ext ----------------------------------------


def pims(alg):
    """Projective indecomposables with injections into the regular module
    and their simple tops; computed once per algebra."""
    if hasattr(alg, "_pims"):
        return alg._pims
    reg = regular_module(alg)
    report = decompose(reg)
    out = []
    for crep, mult in report.classes:
        inj = next(i for r, i in report.instances if r is crep)
        crep.projective_embeds = [
            (0, [[inj.data[i][j] for i in range(alg.dim)] for j in range(crep.dim)])
        ]
        top, proj = top_quotient(crep, label="top(%s)" % crep.label)
        out.append({"rep": crep, "inj": inj, "mult": mult, "top": top, "top_proj": proj})
    alg._pims = out
    return out


def projective_cover(m):
    """Minimal projective cover: (cover, surjection, kernel-with-injection).

    The cover is assembled from the projective indecomposables matching the
    simple summands of m / rad·m; minimality is certified by the kernel
    lying inside rad(cover)."""
    alg = m.algebra
    f = alg.field
    if m.dim == 0:
        z = zero_module(alg)
        return z, ModuleHom(z, m, Matrix.zero(f, 0, 0)), z
    t, proj = top_quotient(m)
    treport = decompose(t)
    ps = pims(alg)
    blocks = []
    maps = []
    for srep, sinj in treport.instances:
        pim = None
        for p in ps:
            if p["top"].dim == srep.dim and hom_space(p["top"], srep):
                pim = p
                break
        if pim is None:
            raise SplitError("no projective cover for a simple constituent")
        sigma = hom_space(pim["top"], srep)[0]
        if not linalg.is_invertible(sigma):
            raise AlgorithmFailure("hom between simples is not invertible")
        # want h: P -> m with proj∘h = sinj∘sigma∘top_proj, h(p) = act(iota(p))·v
        prep = pim["rep"]
        iotas = prep.projective_embeds[0][1]
        rhs = sinj * sigma * pim["top_proj"]
        rows = []
        targ = []
        for tcol in range(prep.dim):
            block = proj * m.action_vec(iotas[tcol])
            rows.extend(block.data)
            targ.extend(rhs.data[r][tcol] for r in range(rhs.rows))
        sol = linalg.solve(Matrix(f, len(rows), m.dim, rows), Matrix.column(f, targ))
        if sol is None:
            raise AlgorithmFailure("projective lift has no solution")
        v = [sol.data[i][0] for i in range(m.dim)]
        hmat = Matrix.zero(f, m.dim, prep.dim)
        for tcol in range(prep.dim):
            col = m.action_vec(iotas[tcol]).apply(v)
            for r in range(m.dim):
                hmat.data[r][tcol] = col[r]
        blocks.append(prep)
        maps.append(hmat)
    cover, injections = direct_sum(blocks, label="P(%s)" % m.label)
    phi = Matrix.zero(f, m.dim, cover.dim)
    offset = 0
    for hmat in maps:
        for r in range(m.dim):
            for c in range(hmat.cols):
                phi.data[r][offset + c] = hmat.data[r][c]
        offset += hmat.cols
    if linalg.rank(phi) != m.dim:
        raise AlgorithmFailure("projective cover map is not surjective")
    ker = linalg.kernel(phi)
    radc = Subspace.from_vectors(f, cover.dim, radical_subspace(cover))
    for vec in ker:
        if not radc.contains(vec):
            raise AlgorithmFailure("cover is not minimal: kernel exceeds the radical")
    krep, kinj = (
        sub_representation(cover, ker, label="syz(%s)" % m.label)
        if ker
        else (zero_module(alg, label="syz(%s)" % m.label), Matrix.zero(f, cover.dim, 0))
    )
    krep.injection = kinj
    return cover, ModuleHom(cover, m, phi), krep


def minimal_resolution(m, steps, cap=None):
    """Covers P_0..P_{steps-1}, differentials d_j: P_j -> P_{j-1}, and the
    syzygies; stops early when a syzygy vanishes."""
    cap = cap if cap is not None else m.algebra.dim
    if steps > cap + 2:
        raise CapExceeded("resolution length %d exceeds cap %d" % (steps, cap))
    covers = []
    diffs = []
    cur = m
    prev_kinj = None
    for j in range(steps):
        cover, phi, ker = projective_cover(cur)
        covers.append(cover)
        if j == 0:
            diffs.append(phi.matrix)  # augmentation P_0 -> m
        else:
            diffs.append(prev_kinj * phi.matrix)
        cur = ker
        prev_kinj = ker.injection
        if cur.dim == 0:
            break
    return covers, diffs


def ext_group(m, n, i, cap=None):
    """dim Ext^i(m, n), from the minimal projective resolution of m."""
    if i < 0:
        raise AlgebraError("negative Ext degree")
    if i == 0:
        return len(hom_space(m, n))
    cap = cap if cap is not None else m.algebra.dim
    if i > cap:
        raise CapExceeded("Ext degree %d exceeds cap %d" % (i, cap))
    covers, diffs = minimal_resolution(m, i + 2, cap=cap)
    f = m.algebra.field
    h_i = hom_space(covers[i], n) if i < len(covers) else []
    if not h_i:
        return 0
    # kernel of postcomposition-with-d_{i+1}
    if i + 1 < len(covers):
        d_next = diffs[i + 1]
        cols = [_flat(h * d_next) for h in h_i]
        stack = Matrix(f, len(cols[0]), len(cols), [[c[r] for c in cols] for r in range(len(cols[0]))])
        kdim = len(h_i) - linalg.rank(stack)
    else:
        kdim = len(h_i)
    # image of precomposition Hom(P_{i-1}, n) -> Hom(P_i, n)
    h_prev = hom_space(covers[i - 1], n) if i - 1 < len(covers) else []
    if h_prev:
        d_i = diffs[i]
        cols = [_flat(h * d_i) for h in h_prev]
        stack = Matrix(f, len(cols[0]), len(cols), [[c[r] for c in cols] for r in range(len(cols[0]))])
        idim = linalg.rank(stack)
    else:
        idim = 0
    ext = kdim - idim
    assert ext >= 0
    return ext


# -- serial algebras -----------------------------------------------------------


def serial_indecomposables(alg):
    """All indecomposables of a serial algebra: the quotients of the
    projective indecomposables by their radical powers."""
    mods = []
    for p in pims(alg):
        prep = p["rep"]
        f = alg.field
        # radical series rad^j P for j >= 1; strictly decreasing by nilpotency
        series = []
        rows = radical_subspace(prep)
        while rows:
            series.append(rows)
            rows = radical_subspace(prep, rows)
        layers = len(series) + 1
        # every Loewy layer rad^j / rad^{j+1} must be simple (End = k)
        for j in range(layers):
            if j == 0:
                sub, inj = prep, Matrix.identity(f, prep.dim)
            else:
                sub, inj = sub_representation(prep, series[j - 1])
            lower = series[j] if j < len(series) else []
            sub_lower = []
            for vec in lower:
                sol = linalg.solve(inj, Matrix.column(f, vec))
                sub_lower.append([sol.data[t][0] for t in range(inj.cols)])
            layer, _ = quotient_representation(sub, sub_lower)
            if layer.dim == 0 or len(hom_space(layer, layer)) != 1:
                raise SerialityError("projective %s is not uniserial" % prep.label)
        for j in range(1, layers + 1):
            rows = series[j - 1] if j - 1 < len(series) else []
            quot, _ = quotient_representation(prep, rows, label="%s/rad^%d" % (prep.label, j))
            mods.append(quot)
    # dedup up to isomorphism, deterministic order
    out = []
    for mod in sorted(mods, key=_fingerprint):
        if not any(
            mod.dim == o.dim and _fingerprint(mod) == _fingerprint(o) and add_member(mod, o)[0]
            for o in out
        ):
            out.append(mod)
    return out


# -- outer tensor products -------------------------------------------------------


def _kron(field, a, b):
    out = Matrix.zero(field, a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            c = a.data[i][j]
            if field.is_zero(c):
                continue
            for x in range(b.rows):
                for y in range(b.cols):
                    v = b.data[x][y]
                    if not field.is_zero(v):
                        out.data[i * b.rows + x][j * b.cols + y] = field.mul(c, v)
    return out


def outer_tensor(mods):
    """M_1 (x) ... (x) M_m over the tensor product of their algebras."""
    if len(mods) < 2:
        raise AlgebraError("outer tensor needs at least two factors")
    cur = mods[0]
    for nxt in mods[1:]:
        if cur.algebra.field != nxt.algebra.field:
            raise FieldMismatch("outer tensor over different fields")
        f = cur.algebra.field
        talg = tensor_algebra(cur.algebra, nxt.algebra)
        ib = Matrix.identity(f, nxt.dim)
        ia = Matrix.identity(f, cur.dim)
        actions = [_kron(f, a, ib) for a in cur.gen_action] + [
            _kron(f, ia, b) for b in nxt.gen_action
        ]
        cur = Representation(
            talg,
            cur.dim * nxt.dim,
            actions,
            label="%s(x)%s" % (cur.label, nxt.label),
        )
    return cur


# -- Mackey check -------------------------------------------------------------


def mackey_check(n, p, m):
    """Restriction of the induction of m from a Sylow p-subgroup P of S_n
    back to P: computed directly and through the double-coset formula, with
    an add(m) membership check."""
    field = m.algebra.field
    pgrp = sylow_symmetric(n, p)
    g = full_symmetric(n)
    kg = group_algebra(g, field)
    emb = group_subalgebra_embedding(kg, pgrp)
    kp = emb.sub
    if m.algebra.labels != kp.labels:
        raise AlgebraError("module is not over the Sylow group algebra")
    m = Representation(kp, m.dim, m.gen_action, label=m.label)
    ind = induce(emb, m)
    res = restrict(ind, emb, label="res ind(%s)" % m.label)
    lhs = decompose(res)
    parts = []
    cosets = double_cosets(g, pgrp, pgrp)
    for x, _size in cosets:
        inter, _factors = conjugate_intersection(pgrp, x)
        kd = group_algebra(inter, field)
        xin = x.inverse()
        actions = []
        for gen_idx in kd.gens:
            d = kd.group_elements[gen_idx]
            conj = (xin * d) * x
            actions.append(m.action_basis(kp.group_index[conj]))
        conj_mod = Representation(kd, m.dim, actions, label="x(x)%s" % m.label)
        embd = group_subalgebra_embedding(kp, inter)
        parts.append(induce(embd, conj_mod))
    rhs_mod, _ = direct_sum(parts)
    rhs = decompose(rhs_mod)
    match = res.dim == rhs_mod.dim and _reports_isomorphic(lhs, rhs)
    # membership in add(m) checked summand by summand (the restriction can
    # be far larger than m, so the direct trace-ideal test does not scale)
    member = all(add_member(crep, m)[0] for crep, _ in lhs.classes)
    return {
        "lhs_dim": res.dim,
        "rhs_dim": rhs_mod.dim,
        "double_cosets": len(cosets),
        "decompositions_match": match,
        "add_member": member,
    }


def _reports_isomorphic(a, b):
    if sorted(m for _, m in a.classes) != sorted(m for _, m in b.classes):
        return False
    used = set()
    for arep, amult in a.classes:
        found = False
        for idx, (brep, bmult) in enumerate(b.classes):
            if idx in used or amult != bmult or arep.dim != brep.dim:
                continue
            if add_member(arep, brep)[0]:
                used.add(idx)
                found = True
                break
        if not found:
            return False
    return True


# -- Wedderburn data ------------------------------------------------------------


def wedderburn_data(alg):
    """Radical, split simple block dimensions, and a complete set of
    primitive orthogonal idempotents read off a decomposition of the
    regular module."""
    f = alg.field
    rad = _alg_radical(alg)
    reg = regular_module(alg)
    report = decompose(reg)
    coords = linalg.solve(report.change_of_basis, Matrix.column(f, list(alg.unit)))
    idempotents = []
    owners = []
    offset = 0
    class_of = []
    for cls_idx, (_crep, mult) in enumerate(report.classes):
        class_of.extend([cls_idx] * mult)
    for t, (rep, _inj) in enumerate(report.instances):
        e = [f.zero] * alg.dim
        for j in range(rep.dim):
            c = coords.data[offset + j][0]
            if not f.is_zero(c):
                col = report.change_of_basis
                for i in range(alg.dim):
                    e[i] = f.add(e[i], f.mul(c, col.data[i][offset + j]))
        idempotents.append(e)
        owners.append(class_of[t])
        offset += rep.dim
    # exactness checks
    total = [f.zero] * alg.dim
    for e in idempotents:
        if alg.mul_vecs(e, e) != e:
            raise AlgorithmFailure("non-idempotent block projection")
        total = [f.add(a, b) for a, b in zip(total, e)]
    if total != list(alg.unit):
        raise AlgorithmFailure("idempotents do not sum to the unit")
    for s in range(len(idempotents)):
        for t in range(len(idempotents)):
            if s != t and any(
                not f.is_zero(c) for c in alg.mul_vecs(idempotents[s], idempotents[t])
            ):
                raise AlgorithmFailure("idempotents are not orthogonal")
    block_dims = []
    for crep, mult in report.classes:
        t, _ = top_quotient(crep)
        block_dims.append(t.dim)
        if t.dim != mult:
            raise SplitError("semisimple quotient does not split over the base field")
    if sum(d * d for d in block_dims) != alg.dim - len(rad):
        raise SplitError("block dimensions do not account for the semisimple quotient")
    return {
        "radical": rad,
        "block_dims": block_dims,
        "idempotents": idempotents,
        "pim_of_idempotent": owners,
        "pims": [crep for crep, _ in report.classes],
    }
