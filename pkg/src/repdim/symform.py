"""Symmetrizing forms and relative projectivity machinery.

A symmetrizing form is a linear functional whose associated bilinear form
s(xy) is symmetric and nondegenerate.  For a certified parabolic pair
Gamma inside Lambda the module provides the Gamma-valued projection p with
s_Lambda = s_Gamma ∘ p, the dual free basis, the relative Casimir element
c = Σ a_j^∨ (x) a_j in Lambda (x)_Gamma Lambda, its central value
mu = Σ a_j^∨ a_j, trace maps on homomorphisms, and the induced restriction
maps on Ext groups together with their kernels.
"""

import random

from .algebra import AlgebraError, AlgorithmFailure
from . import linalg
from .linalg import Matrix, Subspace
from .modules import ModuleHom, hom_space, minimal_resolution, restrict


class NotSymmetricWithThisForm(AlgebraError):
    pass


class CertificationFailure(AlgebraError):
    pass


class LinearityFailure(AlgebraError):
    pass


class SymmetrizingForm:
    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = list(coords)
        self._gram = None

    def value(self, vec):
        f = self.algebra.field
        acc = f.zero
        for c, s in zip(vec, self.coords):
            acc = f.add(acc, f.mul(c, s))
        return acc

    def gram(self):
        if self._gram is None:
            alg = self.algebra
            f = alg.field
            g = Matrix.zero(f, alg.dim, alg.dim)
            for i in range(alg.dim):
                for j in range(alg.dim):
                    acc = f.zero
                    for k, c in alg.mult[(i, j)]:
                        acc = f.add(acc, f.mul(c, self.coords[k]))
                    g.data[i][j] = acc
            self._gram = g
        return self._gram

    def verify(self):
        g = self.gram()
        if g != g.transpose():
            raise NotSymmetricWithThisForm("s(xy) != s(yx) on some basis pair")
        if not linalg.is_invertible(g):
            raise NotSymmetricWithThisForm("the bilinear form s(xy) is degenerate")


def standard_form(alg):
    """The coefficient-of-identity functional: s(b_w) = [w = 1]."""
    f = alg.field
    if not alg.is_unit_basis_element():
        raise NotSymmetricWithThisForm("unit is not the basis element at index 0")
    coords = [f.one] + [f.zero] * (alg.dim - 1)
    form = SymmetrizingForm(alg, coords)
    form.verify()
    return form


def dual_basis(alg, form):
    """Elements b_j^* with s(b_i · b_j^*) = delta_ij: columns of the Gram
    inverse."""
    ginv = linalg.inverse(form.gram())
    if ginv is None:
        raise NotSymmetricWithThisForm("degenerate form has no dual basis")
    return [[ginv.data[t][j] for t in range(alg.dim)] for j in range(alg.dim)]


def _sub_basis_indices(emb):
    """Ambient basis indices realizing the subalgebra basis, when the
    inclusion is basis-aligned."""
    f = emb.ambient.field
    mat = emb.inclusion.matrix
    out = []
    for t in range(emb.sub.dim):
        hits = [i for i in range(emb.ambient.dim) if not f.is_zero(mat.data[i][t])]
        if len(hits) != 1 or mat.data[hits[0]][t] != f.one:
            raise CertificationFailure("inclusion is not aligned with the basis")
        out.append(hits[0])
    return out


class ParabolicCertificate:
    def __init__(self, emb, form, sub_form, complement_indices):
        self.embedding = emb
        self.form = form
        self.sub_form = sub_form
        self.complement_indices = complement_indices
        self.checks = {
            "sub_symmetric": True,
            "restricted_form_symmetrizing": True,
            "free_module": True,
            "complement_in_kernel": True,
        }


def parabolic_certify(emb, form):
    """The parabolic conditions: the restricted form makes the subalgebra
    symmetric, the ambient algebra is free over it, and the basis complement
    of the subalgebra lies in the kernel of s."""
    if form.algebra is not emb.ambient:
        raise CertificationFailure("form is not on the ambient algebra")
    sub_idx = _sub_basis_indices(emb)
    sub_form = SymmetrizingForm(emb.sub, [form.coords[i] for i in sub_idx])
    try:
        sub_form.verify()
    except NotSymmetricWithThisForm as exc:
        raise CertificationFailure("restricted form is not symmetrizing: %s" % exc)
    emb.verify_freeness()
    f = emb.ambient.field
    complement = [i for i in range(emb.ambient.dim) if i not in set(sub_idx)]
    for i in complement:
        if not f.is_zero(form.coords[i]):
            raise CertificationFailure("basis complement is not inside Ker s")
    return ParabolicCertificate(emb, form, sub_form, complement)


def relative_projection(emb, form, sub_form=None):
    """The bimodule projection p: Lambda -> Gamma with s = s_Gamma ∘ p, as a
    (dim Gamma x dim Lambda) matrix over the base field."""
    lam, gam = emb.ambient, emb.sub
    f = lam.field
    if sub_form is None:
        sub_idx = _sub_basis_indices(emb)
        sub_form = SymmetrizingForm(gam, [form.coords[i] for i in sub_idx])
    gram_g = sub_form.gram()
    # s_Gamma(p(x)·gamma_t) = s(x·iota(gamma_t)); solve against the Gram matrix
    rhs = Matrix.zero(f, gam.dim, lam.dim)
    for t in range(gam.dim):
        gt = emb.embed_vec(gam.basis_vec(t))
        for b in range(lam.dim):
            rhs.data[t][b] = form.value(lam.mul_vecs(lam.basis_vec(b), gt))
    sol = linalg.solve(gram_g.transpose(), rhs)
    if sol is None:
        raise AlgorithmFailure("relative projection system is inconsistent")
    return sol  # columns indexed by Lambda basis, rows by Gamma coords


class CasimirElement:
    """c = Σ_j a_j (x) a_j^∨ over the free basis {a_j} and its dual basis
    for the Gamma-valued pairing p(x·y)."""

    def __init__(self, emb, form, pairs, mu):
        self.embedding = emb
        self.form = form
        self.pairs = pairs  # list of (x vector, y vector) in Lambda coords
        self.mu = mu

    def tensor_coords(self, x, y):
        """Coordinates of x (x) y on the basis {a_j (x) b_k}."""
        emb = self.embedding
        lam = emb.ambient
        f = lam.field
        out = [f.zero] * (emb.rank * lam.dim)
        for w, c in enumerate(x):
            if f.is_zero(c):
                continue
            jp, gvec = emb.decomp[w]
            moved = lam.mul_vecs(emb.embed_vec(gvec), y)
            base = jp * lam.dim
            for k, v in enumerate(moved):
                if not f.is_zero(v):
                    out[base + k] = f.add(out[base + k], f.mul(c, v))
        return out

    def coords(self):
        f = self.embedding.ambient.field
        out = [f.zero] * (self.embedding.rank * self.embedding.ambient.dim)
        for x, y in self.pairs:
            for i, v in enumerate(self.tensor_coords(x, y)):
                out[i] = f.add(out[i], v)
        return out

    def verify_centrality(self, gens_only=False):
        """(x (x) 1)·c = c·(1 (x) x) for every basis element x (or only the
        designated generators, which generate the condition), and mu is
        central."""
        lam = self.embedding.ambient
        f = lam.field
        scope = lam.gens if gens_only else range(lam.dim)
        for b in scope:
            bx = lam.basis_vec(b)
            left = [f.zero] * (self.embedding.rank * lam.dim)
            right = [f.zero] * (self.embedding.rank * lam.dim)
            for x, y in self.pairs:
                for i, v in enumerate(self.tensor_coords(lam.mul_vecs(bx, x), y)):
                    left[i] = f.add(left[i], v)
                for i, v in enumerate(self.tensor_coords(x, lam.mul_vecs(y, bx))):
                    right[i] = f.add(right[i], v)
            if left != right:
                raise AlgorithmFailure("Casimir element is not a bimodule invariant")
        if lam.left_mult_matrix(self.mu) != lam.right_mult_matrix(self.mu):
            raise AlgorithmFailure("mu is not central")


def casimir(emb, form, verify=True):
    lam, gam = emb.ambient, emb.sub
    f = lam.field
    proj = relative_projection(emb, form)
    r = emb.rank
    # solve p(z · a_i) = delta_ij · 1_Gamma for the dual elements z = a_j^∨
    cond = Matrix.zero(f, r * gam.dim, lam.dim)
    for b in range(lam.dim):
        for i, ai in enumerate(emb.free_basis):
            prod = lam.from_coords(lam.mult[(b, ai)])
            pvec = proj.apply(prod)
            for t in range(gam.dim):
                cond.data[i * gam.dim + t][b] = pvec[t]
    targets = Matrix.zero(f, r * gam.dim, r)
    for j in range(r):
        for t in range(gam.dim):
            targets.data[j * gam.dim + t][j] = gam.unit[t]
    sol = linalg.solve(cond, targets)
    if sol is None:
        raise AlgorithmFailure("no dual basis: relative pairing degenerate")
    pairs = []
    for j in range(r):
        dual = [sol.data[b][j] for b in range(lam.dim)]
        pairs.append((lam.basis_vec(emb.free_basis[j]), dual))
    mu = [f.zero] * lam.dim
    for x, y in pairs:
        prod = lam.mul_vecs(x, y)
        mu = [f.add(a, b) for a, b in zip(mu, prod)]
    c = CasimirElement(emb, form, pairs, mu)
    if verify:
        c.verify_centrality()
    return c


def mu_invertible(c):
    return linalg.is_invertible(c.embedding.ambient.left_mult_matrix(c.mu))


def trace_map(c, fmat, m, n, verify=True):
    """tr(f)(v) = Σ_j x_j · f(y_j · v) for a hom f of the restrictions of
    the Lambda-modules m, n; the result is Lambda-linear."""
    lam = c.embedding.ambient
    f = lam.field
    out = Matrix.zero(f, n.dim, m.dim)
    for x, y in c.pairs:
        out = out + n.action_vec(x) * fmat * m.action_vec(y)
    hom = ModuleHom(m, n, out)
    if verify:
        try:
            hom.verify()
        except AlgebraError as exc:
            raise LinearityFailure(str(exc))
    return hom


def _unit_chain(emb, form):
    """The chain Lambda ⊇ Gamma ⊇ k with matching forms and Casimirs."""
    from .algebra import unit_subalgebra_embedding

    lam, gam = emb.ambient, emb.sub
    sub_idx = _sub_basis_indices(emb)
    sub_form = SymmetrizingForm(gam, [form.coords[i] for i in sub_idx])
    emb_k_lam = unit_subalgebra_embedding(lam)
    emb_k_gam = unit_subalgebra_embedding(gam)
    return emb_k_lam, emb_k_gam, sub_form


def verify_trace_identities(emb, form, modules, seed=0, samples=20):
    """Exact checks of the two defining trace identities on seeded random
    homomorphisms: (tr ∘ res)(f) = mu·f for Lambda-homs f, and transitivity
    through the ground field."""
    lam, gam = emb.ambient, emb.sub
    f = lam.field
    rng = random.Random(seed)
    c = casimir(emb, form, verify=False)
    emb_k_lam, emb_k_gam, sub_form = _unit_chain(emb, form)
    c_k_lam = casimir(emb_k_lam, form, verify=False)
    c_k_gam = casimir(emb_k_gam, sub_form, verify=False)
    mu_mats = {}
    failures = []
    checked = 0
    for m in modules:
        for n in modules:
            homs = hom_space(m, n)
            key = n.label
            if key not in mu_mats:
                mu_mats[key] = n.action_vec(c.mu)
            for _ in range(samples):
                checked += 1
                # identity 1: tr of a restricted Lambda-hom is mu times it
                if homs:
                    fmat = Matrix.zero(f, n.dim, m.dim)
                    for h in homs:
                        fmat = fmat + h.scale(f.random(rng))
                    lhs = trace_map(c, fmat, m, n, verify=False).matrix
                    if lhs != mu_mats[key] * fmat:
                        failures.append(("projection_formula", m.label, n.label))
                # identity 2: transitivity through k on a random matrix
                gmat = Matrix(
                    f,
                    n.dim,
                    m.dim,
                    [[f.random(rng) for _ in range(m.dim)] for _ in range(n.dim)],
                )
                mg, ng = restrict(m, emb), restrict(n, emb)
                inner = trace_map(c_k_gam, gmat, mg, ng, verify=False).matrix
                via_gamma = trace_map(c, inner, m, n, verify=False).matrix
                direct = trace_map(c_k_lam, gmat, m, n, verify=False).matrix
                if via_gamma != direct:
                    failures.append(("transitivity", m.label, n.label))
    return {"samples": checked, "failures": failures, "ok": not failures}


# -- Ext restriction -----------------------------------------------------------


def _hom_coords(basis, mat):
    """Coordinates of mat in the span of the hom basis (must lie inside)."""
    f = mat.field
    if not basis:
        return [] if mat.is_zero() else None
    cols = [[h.data[i][j] for h in basis] for i in range(mat.rows) for j in range(mat.cols)]
    stack = Matrix(f, mat.rows * mat.cols, len(basis), cols)
    target = Matrix.column(f, [mat.data[i][j] for i in range(mat.rows) for j in range(mat.cols)])
    sol = linalg.solve(stack, target)
    if sol is None:
        return None
    return [sol.data[t][0] for t in range(len(basis))]


def _postcompose_matrix(h_basis, d, target_basis):
    """Matrix of f -> f ∘ d from span(h_basis) to span(target_basis)."""
    f = d.field
    cols = []
    for h in h_basis:
        coords = _hom_coords(target_basis, h * d)
        if coords is None:
            raise AlgorithmFailure("composition left the hom space")
        cols.append(coords)
    rows = len(target_basis)
    return Matrix(f, rows, len(cols), [[c[r] for c in cols] for r in range(rows)])


def ext_restriction_injective(emb, m, n, i, cap=None):
    """Kernel dimension of the restriction map Ext^i over the ambient
    algebra to Ext^i over the subalgebra; returns (injective, kernel_dim)."""
    lam = emb.ambient
    f = lam.field
    if i == 0:
        return True, 0
    covers, diffs = minimal_resolution(m, i + 2, cap=cap)
    if i >= len(covers) or covers[i].dim == 0:
        return True, 0  # Ext vanishes
    resm = restrict(m, emb)
    resn = restrict(n, emb)
    q_covers, q_diffs = minimal_resolution(resm, i + 2, cap=cap)
    # chain map u_j: Q_j -> P_j|_Gamma over the subalgebra, lifting id
    res_p = [restrict(p, emb) for p in covers]
    u = []
    prev = Matrix.identity(f, m.dim)
    for j in range(min(len(q_covers), len(covers))):
        homs = hom_space(q_covers[j], res_p[j])
        want = prev * q_diffs[j]
        stack_cols = []
        for h in homs:
            comp = diffs[j] * h
            stack_cols.append([comp.data[r][s] for r in range(comp.rows) for s in range(comp.cols)])
        stack = Matrix(
            f,
            want.rows * want.cols,
            len(stack_cols),
            [[col[t] for col in stack_cols] for t in range(want.rows * want.cols)],
        )
        target = Matrix.column(f, [want.data[r][s] for r in range(want.rows) for s in range(want.cols)])
        sol = linalg.solve(stack, target)
        if sol is None:
            raise AlgorithmFailure("chain lift does not exist")
        uj = Matrix.zero(f, res_p[j].dim, q_covers[j].dim)
        for t, h in enumerate(homs):
            c = sol.data[t][0]
            if not f.is_zero(c):
                uj = uj + h.scale(c)
        u.append(uj)
        prev = uj
    # cohomology bases over the ambient algebra
    h_lam = hom_space(covers[i], n)
    if not h_lam:
        return True, 0
    if i + 1 < len(covers) and covers[i + 1].dim > 0:
        next_map = _postcompose_matrix(h_lam, diffs[i + 1], hom_space(covers[i + 1], n))
        ker_cols = linalg.kernel(next_map)
    else:
        ker_cols = [
            [f.one if t == s else f.zero for t in range(len(h_lam))] for s in range(len(h_lam))
        ]
    prev_basis = hom_space(covers[i - 1], n) if i - 1 < len(covers) else []
    if prev_basis:
        img = _postcompose_matrix(prev_basis, diffs[i], h_lam)
        im_cols = [[img.data[r][c] for r in range(img.rows)] for c in range(img.cols)]
    else:
        im_cols = []
    # restriction: f -> (f|_Gamma) ∘ u_i, in the Gamma hom space of Q_i
    if i >= len(q_covers) or q_covers[i].dim == 0:
        h_gam = []
    else:
        h_gam = hom_space(q_covers[i], resn)
    if not h_gam:
        # the target cohomology vanishes, so every class restricts to zero
        alphas = [
            [f.one if t == s else f.zero for t in range(len(ker_cols))]
            for s in range(len(ker_cols))
        ]
    else:
        r_cols = []
        for h in h_lam:
            mat = h * u[i]
            coords = _hom_coords(h_gam, mat)
            if coords is None:
                raise AlgorithmFailure("restricted hom left the subalgebra hom space")
            r_cols.append(coords)
        rmat = Matrix(
            f, len(h_gam), len(h_lam), [[c[t] for c in r_cols] for t in range(len(h_gam))]
        )
        # image of Gamma-coboundaries inside Hom_Gamma(Q_i, resn)
        prev_q = hom_space(q_covers[i - 1], resn) if i - 1 < len(q_covers) else []
        if prev_q and i < len(q_diffs):
            imgq = _postcompose_matrix(prev_q, q_diffs[i], h_gam)
            imq_cols = [[imgq.data[r][c] for r in range(imgq.rows)] for c in range(imgq.cols)]
        else:
            imq_cols = []
        # kernel of the induced map on cohomology
        kmat = Matrix(
            f, len(h_lam), len(ker_cols), [[kc[r] for kc in ker_cols] for r in range(len(h_lam))]
        )
        rk = rmat * kmat  # images of ker-classes in Gamma coords
        width = rk.cols + len(imq_cols)
        big = Matrix.zero(f, len(h_gam), width)
        for r in range(len(h_gam)):
            for c in range(rk.cols):
                big.data[r][c] = rk.data[r][c]
            for c, col in enumerate(imq_cols):
                big.data[r][rk.cols + c] = col[r]
        alphas = [vec[: rk.cols] for vec in linalg.kernel(big)]
    # classes k·alpha that die in Gamma, measured modulo the Lambda-coboundaries
    span = Subspace(f, len(h_lam))
    for col in im_cols:
        span.add(col)
    base = span.dim
    for alpha in alphas:
        vec = [f.zero] * len(h_lam)
        for t, a in enumerate(alpha):
            if f.is_zero(a):
                continue
            for r in range(len(h_lam)):
                vec[r] = f.add(vec[r], f.mul(a, ker_cols[t][r]))
        span.add(vec)
    kernel_dim = span.dim - base
    return kernel_dim == 0, kernel_dim
