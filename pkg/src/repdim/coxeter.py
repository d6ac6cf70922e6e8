"""Coxeter combinatorics for S_n, W(B_n), W(D_n).

Elements are (signed) permutations in one-line notation; groups are
enumerated eagerly by BFS over right multiplication by the generators, so
every element carries its Coxeter length (= BFS depth) and one reduced word
(the lexicographically smallest among the shortest).  The resulting element
order (length, lex word) makes all downstream algebra bases deterministic.

Type B signed permutations act on {-n..-1, 1..n} with w(-i) = -w(i); the
one-line data is w(1), ..., w(n) as signed integers.  W(D_n) is the
subgroup with an even number of sign changes.
"""


class CoxeterError(Exception):
    pass


class UnsupportedRank(CoxeterError):
    pass


class CapExceeded(CoxeterError):
    pass


class BadComposition(CoxeterError):
    pass


ENUMERATION_CAP = 10_000


class Permutation:
    """Permutation of {1..n}; window[i-1] = w(i)."""

    __slots__ = ("window",)

    def __init__(self, window):
        self.window = tuple(window)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i, j):
        w = list(range(1, n + 1))
        w[i - 1], w[j - 1] = j, i
        return cls(w)

    @classmethod
    def cycle(cls, n, points):
        w = list(range(1, n + 1))
        for a, b in zip(points, points[1:] + points[:1]):
            w[a - 1] = b
        return cls(w)

    @property
    def n(self):
        return len(self.window)

    def __call__(self, i):
        return self.window[i - 1]

    def __mul__(self, other):
        # (self * other)(i) = self(other(i))
        return Permutation(self.window[j - 1] for j in other.window)

    def inverse(self):
        out = [0] * self.n
        for i, j in enumerate(self.window):
            out[j - 1] = i + 1
        return Permutation(out)

    def is_identity(self):
        return all(self.window[i] == i + 1 for i in range(self.n))

    def length(self):
        w = self.window
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    def cycles(self):
        seen = [False] * self.n
        out = []
        for i in range(1, self.n + 1):
            if seen[i - 1]:
                continue
            cyc = [i]
            seen[i - 1] = True
            j = self(i)
            while j != i:
                cyc.append(j)
                seen[j - 1] = True
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and other.window == self.window

    def __hash__(self):
        return hash(("perm", self.window))

    def __lt__(self, other):
        return self.window < other.window

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "e"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cyc)


class SignedPermutation:
    """Signed permutation: window[i-1] = w(i) as a signed integer."""

    __slots__ = ("window",)

    def __init__(self, window):
        self.window = tuple(window)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @property
    def n(self):
        return len(self.window)

    def __call__(self, i):
        if i > 0:
            return self.window[i - 1]
        return -self.window[-i - 1]

    def __mul__(self, other):
        return SignedPermutation(self(j) for j in other.window)

    def inverse(self):
        out = [0] * self.n
        for i, j in enumerate(self.window):
            if j > 0:
                out[j - 1] = i + 1
            else:
                out[-j - 1] = -(i + 1)
        return SignedPermutation(out)

    def is_identity(self):
        return all(self.window[i] == i + 1 for i in range(self.n))

    def sign_product(self):
        neg = sum(1 for v in self.window if v < 0)
        return -1 if neg % 2 else 1

    def length_b(self):
        w = self.window
        n = self.n
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        nsp = sum(1 for i in range(n) for j in range(i + 1, n) if -w[i] > w[j])
        neg = sum(1 for v in w if v < 0)
        return inv + nsp + neg

    def length_d(self):
        w = self.window
        n = self.n
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        nsp = sum(1 for i in range(n) for j in range(i + 1, n) if -w[i] > w[j])
        return inv + nsp

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and other.window == self.window

    def __hash__(self):
        return hash(("sperm", self.window))

    def __lt__(self, other):
        return self.window < other.window

    def __repr__(self):
        return "[" + " ".join(str(v) for v in self.window) + "]"


def coxeter_generators(ctype, n):
    """Generators in presentation order.

    A: [s_1 .. s_{n-1}] (adjacent transpositions of S_n).
    B: [t_0, s_1 .. s_{n-1}] with t_0 the sign change on point 1.
    D: [u_0, s_1 .. s_{n-1}] with u_0 : 1 -> -2, 2 -> -1 (attached to s_2).
    """
    if n < 2:
        raise UnsupportedRank("rank n >= 2 required")
    if ctype == "A":
        return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]
    swaps = []
    for i in range(1, n):
        w = list(range(1, n + 1))
        w[i - 1], w[i] = i + 1, i
        swaps.append(SignedPermutation(w))
    if ctype == "B":
        t0 = SignedPermutation([-1] + list(range(2, n + 1)))
        return [t0] + swaps
    if ctype == "D":
        u0 = SignedPermutation([-2, -1] + list(range(3, n + 1)))
        return [u0] + swaps
    raise UnsupportedRank("unknown type %r" % (ctype,))


class GroupEnumeration:
    """Deterministic enumeration of a Coxeter group.

    elements[i] is the i-th element in (length, lex reduced word) order;
    words[i] is its reduced word as a tuple of generator indices; lengths[i]
    the Coxeter length; index maps element -> position.
    """

    def __init__(self, ctype, n, generators, elements, words, lengths):
        self.ctype = ctype
        self.n = n
        self.generators = generators
        self.elements = elements
        self.words = words
        self.lengths = lengths
        self.index = {g: i for i, g in enumerate(elements)}

    @property
    def order(self):
        return len(self.elements)

    def length(self, g):
        return self.lengths[self.index[g]]

    def word(self, g):
        return self.words[self.index[g]]

    def product_index(self, i, j):
        return self.index[self.elements[i] * self.elements[j]]

    def inverse_index(self, i):
        return self.index[self.elements[i].inverse()]


def enumerate_group(ctype, n, cap=ENUMERATION_CAP):
    gens = coxeter_generators(ctype, n)
    identity = gens[0] * gens[0]
    assert identity.is_identity()
    found = {identity: (0, ())}
    frontier = [(identity, ())]
    while frontier:
        frontier.sort(key=lambda t: t[1])
        nxt = []
        for g, word in frontier:
            for gi, s in enumerate(gens):
                h = g * s
                if h not in found:
                    found[h] = (len(word) + 1, word + (gi,))
                    nxt.append((h, word + (gi,)))
        frontier = nxt
        if len(found) > cap:
            raise CapExceeded("group order exceeds cap %d" % cap)
    items = sorted(found.items(), key=lambda kv: (kv[1][0], kv[1][1]))
    elements = [g for g, _ in items]
    lengths = [lw[0] for _, lw in items]
    words = [lw[1] for _, lw in items]
    enum = GroupEnumeration(ctype, n, gens, elements, words, lengths)
    _validate_lengths(enum)
    return enum


def _validate_lengths(enum):
    """BFS depth must equal the signed/unsigned inversion statistic."""
    for g, length in zip(enum.elements, enum.lengths):
        if enum.ctype == "A":
            stat = g.length()
        elif enum.ctype == "B":
            stat = g.length_b()
        else:
            stat = g.length_d()
        if stat != length:
            raise CoxeterError("length statistic mismatch at %r: %d vs %d" % (g, stat, length))


class SubgroupData:
    """A subgroup given by generators, with its full element list."""

    def __init__(self, n, generators, label, cap=ENUMERATION_CAP):
        self.n = n
        self.generators = list(generators)
        self.label = label
        self.elements = _closure(n, self.generators, cap)

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._element_set

    @property
    def _element_set(self):
        if not hasattr(self, "_eset"):
            self._eset = set(self.elements)
        return self._eset

    def __repr__(self):
        return "Subgroup(%s, order %d)" % (self.label, self.order)


def _closure(n, generators, cap):
    identity = Permutation.identity(n)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
            if len(seen) > cap:
                raise CapExceeded("subgroup order exceeds cap %d" % cap)
        frontier = nxt
    return sorted(seen)


def young_subgroup(n, composition):
    """Young subgroup S_lambda for a composition of n: adjacent
    transpositions inside each consecutive block."""
    if sum(composition) != n or any(part < 1 for part in composition):
        raise BadComposition("parts of %r must be positive and sum to %d" % (composition, n))
    gens = []
    start = 1
    for part in composition:
        for i in range(start, start + part - 1):
            gens.append(Permutation.transposition(n, i, i + 1))
        start += part
    label = "S_" + "x".join(str(p) for p in composition)
    return SubgroupData(n, gens, label)


def min_coset_reps(n, composition):
    """Minimal-length representatives of the right cosets S_lambda · d,
    sorted by (length, window)."""
    sub = young_subgroup(n, composition)
    full = enumerate_group("A", n)
    reps = {}
    for g in full.elements:  # already sorted by length
        key = frozenset((u * g).window for u in sub.elements)
        if key not in reps:
            reps[key] = g
    out = sorted(reps.values(), key=lambda g: (g.length(), g.window))
    return out


def min_left_coset_reps(n, composition):
    """Minimal-length representatives d of the left cosets d · S_lambda;
    these satisfy length(d·u) = length(d) + length(u) for u in S_lambda."""
    return [g.inverse() for g in min_coset_reps(n, composition)]


def sylow_symmetric(n, p):
    """Sylow p-subgroup of S_n for n < p^2: product of floor(n/p) disjoint
    p-cycles."""
    if n >= p * p:
        raise UnsupportedRank("n >= p^2: Sylow subgroup is not elementary of this shape")
    m = n // p
    gens = [Permutation.cycle(n, list(range(k * p + 1, k * p + p + 1))) for k in range(m)]
    if not gens:
        gens = [Permutation.identity(n)]
    return SubgroupData(n, gens, "Syl_%d(S_%d)" % (p, n))


def full_symmetric(n):
    return SubgroupData(n, coxeter_generators("A", n), "S_%d" % n)


def double_cosets(G, H, K):
    """Partition of G into H-K double cosets.

    Returns a list of (representative, size), representative being the
    (length, window)-minimal element of the coset, sorted likewise.
    """
    remaining = set(G.elements)
    out = []
    while remaining:
        g = min(remaining, key=lambda w: (w.length(), w.window))
        coset = {h * g * k for h in H.elements for k in K.elements}
        remaining -= coset
        out.append((g, len(coset)))
    out.sort(key=lambda t: (t[0].length(), t[0].window))
    return out


def conjugate_intersection(P, x):
    """The subgroup P ∩ xPx⁻¹ together with an attempted factorization into
    cyclic subgroups of pairwise disjoint support.

    Returns (subgroup, factors) where factors is a list of generators with
    disjoint supports generating the subgroup, or None when no such
    factorization was found (reported, never assumed).
    """
    xinv = x.inverse()
    conj = {x * g * xinv for g in P.elements}
    inter = sorted(set(P.elements) & conj)
    sub = SubgroupData(P.n, inter, "%s ∩ conj" % P.label)

    def support(g):
        return frozenset(i for i in range(1, g.n + 1) if g(i) != i)

    candidates = [g for g in inter if len(g.cycles()) == 1]
    factors = []
    used = set()
    generated = {Permutation.identity(P.n)}
    for g in sorted(candidates, key=lambda w: (-len(support(w)), w.window)):
        sup = support(g)
        if sup & used:
            continue
        if g in generated:
            continue
        factors.append(g)
        used |= sup
        generated = set(_closure(P.n, factors, ENUMERATION_CAP))
        if len(generated) == sub.order:
            break
    if len(generated) != sub.order:
        return sub, None
    return sub, factors
