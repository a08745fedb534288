"""Cobar DG algebras, the cyclic bicomplex of a coalgebra and one-forms.

R = T(s^-1 Cbar) is stored as :class:`FreeElement` objects over the cobar
generator set of the coalgebra (or over the larger set including s^-1 e, see
:class:`CobarAlgebra`).  Letters carry the desuspended degree, so all
signs below are plain Koszul signs in those degrees.

Other carriers are dicts with the following keys:

* chains of the cyclic bicomplex (elements of Cbar^{(x)n}): words, exactly
  like elements of R; the letter s^-1 c stands for c.
* one-forms in Omega^1_R = R (x) V (x) R: triples (left, letter, right).
* classes in Omega^1_{R,nat} = R (x) V: pairs (word, letter).
* elements of R (x) R: pairs (word, word).

Grading is homological: the cobar differential, b and b' lower the degree by
one, everything preserves the weight.
"""
from fractions import Fraction

from .errors import CutoffExceeded
from .linalg import Reducer, SparseMatrix, SubspaceBasis, rank
from .tensor import FreeElement, add_into, add_term, render_combination, sgn


# --- generic term containers -------------------------------------------------

class _Terms:
    kind = "element"

    def __init__(self, gens, terms=None):
        self.gens = gens
        self.terms = {}
        for k, v in (terms or {}).items():
            add_term(self.terms, k, Fraction(v))

    def _same(self, other):
        if type(other) is not type(self):
            raise TypeError(f"expected {type(self).__name__}")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.gens, add_into(dict(self.terms), other.terms))

    def __sub__(self, other):
        self._same(other)
        return type(self)(self.gens, add_into(dict(self.terms), other.terms, -1))

    def __neg__(self):
        return type(self)(self.gens, {k: -v for k, v in self.terms.items()})

    def __rmul__(self, c):
        c = Fraction(c)
        return type(self)(self.gens, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if type(other) is type(self):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return render_combination(self.terms, self._render_key, self._order)

    __repr__ = __str__

    def _order(self, key):
        return repr(key)


class OneForm(_Terms):
    """Element of R (x) V (x) R."""

    def _render_key(self, key):
        a, v, b = key
        return f"{self.gens.render(a)} (x) {self.gens.generators[v].id} (x) {self.gens.render(b)}"


class OneFormClass(_Terms):
    """Element of R (x) V, the commutator quotient of the one-forms."""

    def _render_key(self, key):
        w, v = key
        return f"{self.gens.render(w)} (x) {self.gens.generators[v].id}"

    def _order(self, key):
        w, v = key
        return (self.gens.sort_key(w + (v,)), v)


class TensorPair(_Terms):
    """Element of R (x) R."""

    def _render_key(self, key):
        return f"{self.gens.render(key[0])} (x) {self.gens.render(key[1])}"


class HochschildChain(_Terms):
    """Element of Cbar^{(x)n}, written with coalgebra basis ids."""

    def _render_key(self, key):
        c = self.gens.coalgebra
        return "(" + ",".join(c.basis[self.gens.to_basis[i]].id for i in key) + ")"

    def _order(self, key):
        return self.gens.sort_key(key)


def word_degree(gens, word):
    d = gens.degrees
    return sum(d[i] for i in word)


# --- the cobar algebra -------------------------------------------------------

class CobarAlgebra:
    """T(s^-1 Cbar) with the differential induced by all Delta_n.

    On a generator, d(s^-1 c) = sum over the reduced parts of Delta_n(c) of
    (s^-1)^{(x)n}(c_1 (x) ... (x) c_n), the desuspensions passing the c_i with
    the Koszul sign (-1)^{sum_i (n - i)|c_i|}.  It is extended as a derivation
    of degree -1.

    ``max_degree`` / ``max_weight`` bound the blocks that homology
    computations may touch; ``None`` means unbounded.  With ``full=True`` the
    counit element e also gets a letter s^-1 e of degree -1 (the cobar algebra
    of k (+) C); the double bracket lives there, homology uses the reduced one.
    """

    def __init__(self, coalgebra, max_degree=None, max_weight=None, full=False):
        self.coalgebra = coalgebra
        self.full = full
        self.gens = coalgebra.cobar_generators(full)
        self.max_degree = max_degree
        self.max_weight = max_weight
        self.letter_d = {}
        deg = coalgebra.degrees
        for k, b in enumerate(self.gens.to_basis):
            out = {}
            for n, table in coalgebra.coproducts.items():
                for t, v in table.get(b, {}).items():
                    if any(x not in self.gens.from_basis for x in t):
                        continue
                    e = sum((n - 1 - j) * deg[x] for j, x in enumerate(t))
                    add_term(out, tuple(self.gens.from_basis[x] for x in t), sgn(e) * v)
            self.letter_d[k] = out
        self._blocks = {}

    # elements
    def element(self, terms):
        return FreeElement(self.gens, terms)

    def letter(self, ident):
        """Cobar generator index of a coalgebra basis id (or of 's^-1 id')."""
        if isinstance(ident, int):
            return ident
        if ident.startswith("s^-1 "):
            return self.gens.lookup(ident)
        return self.gens.from_basis[self.coalgebra.lookup(ident)]

    def d_terms(self, terms):
        out = {}
        deg = self.gens.degrees
        for w, cf in terms.items():
            pre = 0
            for p, x in enumerate(w):
                s = cf * sgn(pre)
                for t, v in self.letter_d[x].items():
                    add_term(out, w[:p] + t + w[p + 1:], s * v)
                pre += deg[x]
        return out

    def d(self, r):
        return FreeElement(self.gens, self.d_terms(r.terms))

    # blocks
    def check_cutoff(self, degree, weight):
        if self.max_weight is not None and weight > self.max_weight:
            raise CutoffExceeded(f"weight {weight} beyond cutoff {self.max_weight}")
        if self.max_degree is not None and degree > self.max_degree:
            raise CutoffExceeded(f"degree {degree} beyond cutoff {self.max_degree}")

    def words(self, degree, weight, reduced=False):
        """Monomial basis of the (degree, weight) block of R (or of Rbar)."""
        key = (degree, weight)
        if key not in self._blocks:
            self._blocks[key] = self.gens.words(weight, degree)
        ws = self._blocks[key]
        return [w for w in ws if w] if reduced else ws

    def oneform_keys(self, degree, weight):
        """Basis pairs (word, letter) of the (degree, weight) block of R (x) V."""
        out = []
        g = self.gens
        for v in range(len(g)):
            wv, dv = g.weights[v], g.degrees[v]
            if wv > weight:
                continue
            for w in self.words(degree - dv, weight - wv):
                out.append((w, v))
        return out


def cobar_algebra(coalgebra, **cutoffs):
    return CobarAlgebra(coalgebra, **cutoffs)


def _cobar_of(gens):
    cache = getattr(gens, "_cobar", None)
    if cache is None:
        cache = CobarAlgebra(gens.coalgebra, full=gens.full)
        gens._cobar = cache
    return cache


def cobar_d(r):
    """Cobar differential of an element of T(s^-1 Cbar)."""
    return _cobar_of(r.gens).d(r)


# --- cyclic bicomplex operators ----------------------------------------------

def rotate(gens, word, i):
    """Move the first i letters to the back; returns (sign, word)."""
    n = len(word)
    if n == 0:
        return 1, word
    i %= n
    a = word_degree(gens, word[:i])
    b = word_degree(gens, word[i:])
    return sgn(a * b), word[i:] + word[:i]


def op_T(gens, terms):
    out = {}
    for w, c in terms.items():
        s, rw = rotate(gens, w, 1)
        add_term(out, rw, s * c)
    return out


def op_N(gens, terms):
    out = {}
    for w, c in terms.items():
        for i in range(len(w)):
            s, rw = rotate(gens, w, i)
            add_term(out, rw, s * c)
    return out


def op_bprime(gens, terms):
    return _cobar_of(gens).d_terms(terms)


def op_b(gens, terms):
    """b' plus the terms where the coproduct of the first letter wraps around."""
    R = _cobar_of(gens)
    out = R.d_terms(terms)
    for w, c in terms.items():
        if not w:
            continue
        for t, v in R.letter_d[w[0]].items():
            long = t + w[1:]
            for j in range(1, len(t)):
                s, rw = rotate(gens, long, j)
                add_term(out, rw, s * c * v)
    return out


_OPS = {"b": op_b, "bprime": op_bprime, "T": op_T, "N": op_N}


def hochschild_ops(op, chain):
    """Apply b, bprime, T or N to a chain (HochschildChain or FreeElement)."""
    try:
        f = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}; expected one of {sorted(_OPS)}") from None
    return HochschildChain(chain.gens, f(chain.gens, chain.terms))


def chain_from_coalgebra(gens, terms):
    """Chain from a dict keyed by tuples of coalgebra basis ids or indices."""
    c = gens.coalgebra
    out = {}
    for t, v in terms.items():
        add_term(out, tuple(gens.from_basis[c.lookup(x)] for x in t), Fraction(v))
    return HochschildChain(gens, out)


# --- one-forms ---------------------------------------------------------------

def partial(r):
    """Universal derivation R -> R (x) V (x) R."""
    out = {}
    for w, c in r.terms.items():
        for i in range(len(w)):
            add_term(out, (w[:i], w[i], w[i + 1:]), c)
    return OneForm(r.gens, out)


def map_I(omega):
    """The embedding R (x) V (x) R -> R (x) R."""
    out = {}
    for (a, v, b), c in omega.terms.items():
        add_term(out, (a + (v,), b), c)
        add_term(out, (a, (v,) + b), -c)
    return TensorPair(omega.gens, out)


def natural(omega):
    """Projection a (x) v (x) b -> (-1)^{|b|(|a|+|v|)} ba (x) v."""
    g = omega.gens
    out = {}
    for (a, v, b), c in omega.terms.items():
        e = word_degree(g, b) * (word_degree(g, a) + g.degrees[v])
        add_term(out, (b + a, v), sgn(e) * c)
    return OneFormClass(g, out)


def dbar(r):
    g = r.gens
    out = {}
    for w, c in r.terms.items():
        m = len(w)
        for i in range(m):
            e = word_degree(g, w[:i + 1]) * word_degree(g, w[i + 1:])
            add_term(out, (w[i + 1:] + w[:i], w[i]), sgn(e) * c)
    return OneFormClass(g, out)


def beta(omega):
    g = omega.gens
    out = {}
    for (w, v), c in omega.terms.items():
        add_term(out, w + (v,), c)
        add_term(out, (v,) + w, -sgn(g.degrees[v] * word_degree(g, w)) * c)
    return FreeElement(g, out)


def mu_sigma(pair):
    """R (x) R -> R, r (x) q -> (-1)^{|r||q|} q r."""
    g = pair.gens
    out = {}
    for (a, b), c in pair.terms.items():
        add_term(out, b + a, sgn(word_degree(g, a) * word_degree(g, b)) * c)
    return FreeElement(g, out)


def tensor_d(pair):
    """d (x) 1 + 1 (x) d on R (x) R."""
    g = pair.gens
    R = _cobar_of(g)
    out = {}
    for (a, b), c in pair.terms.items():
        for x, v in R.d_terms({a: c}).items():
            add_term(out, (x, b), v)
        s = sgn(word_degree(g, a))
        for y, v in R.d_terms({b: c}).items():
            add_term(out, (a, y), s * v)
    return TensorPair(g, out)


def oneform_d(omega):
    """Differential on R (x) V (x) R making the embedding into R (x) R a chain map."""
    g = omega.gens
    R = _cobar_of(g)
    out = {}
    for (a, v, b), c in omega.terms.items():
        for x, y in R.d_terms({a: c}).items():
            add_term(out, (x, v, b), y)
        s = sgn(word_degree(g, a))
        for t, y in R.letter_d[v].items():
            for i in range(len(t)):
                add_term(out, (a + t[:i], t[i], t[i + 1:] + b), s * c * y)
        s = sgn(word_degree(g, a) + g.degrees[v])
        for x, y in R.d_terms({b: c}).items():
            add_term(out, (a, v, x), s * y)
    return OneForm(g, out)


def lift(omega_class):
    """w (x) v -> w (x) v (x) 1, a section of the projection to R (x) V."""
    return OneForm(omega_class.gens, {(w, v, ()): c for (w, v), c in omega_class.terms.items()})


def oneform_class_d(omega_class):
    return natural(oneform_d(lift(omega_class)))


def to_chain(omega_class):
    """R (x) V -> Cbar^{(x)n+1}, w (x) v -> (-1)^{|v||w|} (v, w)."""
    g = omega_class.gens
    out = {}
    for (w, v), c in omega_class.terms.items():
        add_term(out, (v,) + w, sgn(g.degrees[v] * word_degree(g, w)) * c)
    return HochschildChain(g, out)


def from_chain(chain):
    g = chain.gens
    out = {}
    for w, c in chain.terms.items():
        if not w:
            continue
        v, rest = w[0], w[1:]
        add_term(out, (rest, v), sgn(g.degrees[v] * word_degree(g, rest)) * c)
    return OneFormClass(g, out)


def connes_B_cobar(u):
    """Signed cyclic sum B(u) = sum_i (-1)^{eps_i} (u_{i+1},...,u_n,u_1,...,u_i)."""
    g = u.gens
    out = {}
    for w, c in u.terms.items():
        n = len(w)
        for i in range(1, n + 1):
            s, rw = rotate(g, w, i)
            add_term(out, rw, s * c)
    return HochschildChain(g, out)


def normalized_form(chain):
    """Rewrite (c_1, ..., c_n) as (c_n ; c_1 ... c_{n-1}) in C (x) Omega(C)."""
    g = chain.gens
    out = {}
    for w, c in chain.terms.items():
        if w:
            add_term(out, (g.to_basis[w[-1]], w[:-1]), c)
    return out


# --- blocks, quotients and homology -----------------------------------------

def _commutator_vectors(R, degree, weight):
    """Span of w - (rotation sign) rot(w) inside the block of Rbar."""
    words = R.words(degree, weight, reduced=True)
    pos = {w: i for i, w in enumerate(words)}
    vecs = []
    for w in words:
        for i in range(1, len(w)):
            s, rw = rotate(R.gens, w, i)
            v = {}
            add_term(v, pos[w], Fraction(1))
            add_term(v, pos[rw], Fraction(-s))
            if v:
                vecs.append(v)
    return words, pos, vecs


class _NaturalBlock:
    def __init__(self, R, degree, weight, reduced):
        words, pos, vecs = _commutator_vectors(R, degree, weight)
        if not reduced and weight == 0 and degree == 0:
            words, pos = [()], {(): 0}
        # reverse positions so the pivots land on late words and early words survive
        n = len(words)
        self.words = words
        self.pos = pos
        self.reducer = Reducer([{n - 1 - k: c for k, c in v.items()} for v in vecs])
        pivots = {n - 1 - p for p in self.reducer.pivots}
        self.basis = [i for i in range(n) if i not in pivots]
        self.coord = {b: k for k, b in enumerate(self.basis)}
        self.n = n

    def coordinates(self, terms):
        v = {self.n - 1 - self.pos[w]: c for w, c in terms.items()}
        nf = self.reducer.reduce(v)
        return {self.coord[self.n - 1 - k]: c for k, c in nf.items()}


def _natural_block(R, degree, weight, reduced=True):
    key = ("nat", degree, weight, reduced)
    if key not in R._blocks:
        R._blocks[key] = _NaturalBlock(R, degree, weight, reduced)
    return R._blocks[key]


def natural_quotient_basis(R, degree, weight):
    """Monomials of the block of Rbar whose classes form a basis of Rbar_nat.

    Returned as a SubspaceBasis of the monomial block (unit vectors, indexed by
    position in ``R.words(degree, weight, reduced=True)``).
    """
    R.check_cutoff(degree, weight)
    blk = _natural_block(R, degree, weight)
    return SubspaceBasis(blk.n, [{i: Fraction(1)} for i in blk.basis], check=False)


def _matrix(columns, nrows):
    return SparseMatrix.from_columns(nrows, columns)


def _complex_space(R, kind, degree, weight):
    """(basis keys, coordinate function) for one block of a named complex."""
    if kind in ("cobar_natural", "cyclic"):
        reduced = kind == "cyclic"
        blk = _natural_block(R, degree, weight, reduced)
        keys = [blk.words[i] for i in blk.basis]
        return keys, blk.coordinates
    if kind == "oneform_natural":
        keys = R.oneform_keys(degree, weight)
        pos = {k: i for i, k in enumerate(keys)}
        return keys, lambda terms: {pos[k]: c for k, c in terms.items()}
    if kind == "cobar":
        keys = R.words(degree, weight)
        pos = {k: i for i, k in enumerate(keys)}
        return keys, lambda terms: {pos[k]: c for k, c in terms.items()}
    raise ValueError(f"unknown complex {kind!r}")


def _differential_matrix(R, kind, degree, weight):
    """Matrix of the differential from the degree block to degree - 1."""
    g = R.gens
    if kind == "hochschild":
        # cone of beta: degree k is R_k (+) (R (x) V)_{k-1}; D(r, w) = (dr + beta w, -dw)
        src_r = R.words(degree, weight)
        src_w = R.oneform_keys(degree - 1, weight)
        tgt_r = R.words(degree - 1, weight)
        tgt_w = R.oneform_keys(degree - 2, weight)
        pr = {k: i for i, k in enumerate(tgt_r)}
        pw = {k: len(tgt_r) + i for i, k in enumerate(tgt_w)}
        cols = []
        for w in src_r:
            cols.append({pr[k]: c for k, c in R.d_terms({w: 1}).items()})
        for key in src_w:
            col = {}
            cls = OneFormClass(g, {key: 1})
            for k, c in beta(cls).terms.items():
                add_term(col, pr[k], c)
            for k, c in oneform_class_d(cls).terms.items():
                add_term(col, pw[k], -c)
            cols.append(col)
        return _matrix(cols, len(tgt_r) + len(tgt_w)), len(src_r) + len(src_w)
    src, _ = _complex_space(R, kind, degree, weight)
    tgt, coords = _complex_space(R, kind, degree - 1, weight)
    cols = []
    for key in src:
        if kind == "oneform_natural":
            image = oneform_class_d(OneFormClass(g, {key: 1})).terms
        else:
            image = R.d_terms({key: 1})
        cols.append(coords(image) if image else {})
    return _matrix(cols, len(tgt)), len(src)


COMPLEXES = ("cobar", "cobar_natural", "oneform_natural", "hochschild", "cyclic")


def block_dim(R, kind, degree, weight):
    return _differential_matrix(R, kind, degree, weight)[1]


def homology_dim(R, kind, degree, weight):
    """dim H_degree of the weight block of the named complex.

    Complexes: ``cobar`` (R), ``cobar_natural`` (R_nat), ``cyclic``
    (Rbar_nat, reported in its own degree), ``oneform_natural`` (R (x) V) and
    ``hochschild`` (the cone of beta: R (x) V -> R).
    """
    if kind not in COMPLEXES:
        raise ValueError(f"unknown complex {kind!r}; expected one of {COMPLEXES}")
    R.check_cutoff(degree + 1, weight)
    d_out, n = _differential_matrix(R, kind, degree, weight)
    d_in, _ = _differential_matrix(R, kind, degree + 1, weight)
    return n - rank(d_out) - rank(d_in)


def homology_table(R, kind, max_degree, max_weight):
    blocks = []
    for w in range(max_weight + 1):
        for k in range(max_degree + 1):
            blocks.append({"degree": k, "weight": w, "dim": homology_dim(R, kind, k, w)})
    return {"complex": kind, "blocks": blocks}


def check_periodic_exactness(R, degree, weight):
    """Exactness of 0 -> Rbar_nat -> R (x) V -> Rbar -> Rbar_nat -> 0 on one block.

    The maps are dbar, -beta and the quotient map.  Returns a dict of ranks
    and dimensions together with the verdict.
    """
    R.check_cutoff(degree, weight)
    g = R.gens
    blk = _natural_block(R, degree, weight)
    nat_words = [blk.words[i] for i in blk.basis]
    rbar = R.words(degree, weight, reduced=True)
    rpos = {w: i for i, w in enumerate(rbar)}
    forms = R.oneform_keys(degree, weight)
    fpos = {k: i for i, k in enumerate(forms)}

    dbar_cols = [{fpos[k]: c for k, c in dbar(FreeElement(g, {w: 1})).terms.items()}
                 for w in nat_words]
    beta_cols = [{rpos[k]: -c for k, c in beta(OneFormClass(g, {f: 1})).terms.items()}
                 for f in forms]
    m_dbar = _matrix(dbar_cols, len(forms))
    m_beta = _matrix(beta_cols, len(rbar))
    r_dbar = rank(m_dbar)
    r_beta = rank(m_beta)
    commutators = blk.reducer.rank
    # composites vanish: beta . dbar = 0 and the image of beta lies in the commutators
    comp_ok = all(not beta(OneFormClass(g, {k: v for k, v in
                  {forms[i]: c for i, c in col.items()}.items()})) for col in dbar_cols)
    img_ok = all(not blk.coordinates({rbar[i]: c for i, c in col.items()}) for col in beta_cols)
    out = {
        "degree": degree,
        "weight": weight,
        "dim_nat": len(nat_words),
        "dim_oneforms": len(forms),
        "dim_rbar": len(rbar),
        "rank_dbar": r_dbar,
        "rank_beta": r_beta,
        "dim_commutators": commutators,
        "injective": r_dbar == len(nat_words),
        "exact_at_oneforms": comp_ok and len(forms) - r_beta == r_dbar,
        "exact_at_rbar": img_ok and r_beta == commutators,
        "surjective": len(rbar) - commutators == len(nat_words),
    }
    out["exact"] = all(out[k] for k in ("injective", "exact_at_oneforms", "exact_at_rbar", "surjective"))
    return out


# --- randomized identity suite -------------------------------------------------

def random_homogeneous(R, rng, max_len=4, min_len=1):
    """A random word plus random reorderings of its letters (same degree and weight)."""
    n = len(R.gens)
    w = tuple(rng.randrange(n) for _ in range(rng.randint(min_len, max_len)))
    terms = {w: rng.randint(1, 5)}
    for _ in range(2):
        p = list(w)
        rng.shuffle(p)
        add_term(terms, tuple(p), Fraction(rng.randint(-3, 3)))
    return FreeElement(R.gens, terms)


def _quillen_cases(R, rng, max_len):
    g = R.gens
    r = random_homogeneous(R, rng, max_len)
    ch = HochschildChain(g, r.terms)
    T = hochschild_ops("T", ch)
    N = hochschild_ops("N", ch)
    w = OneFormClass(g, {(tuple(rng.randrange(len(g)) for _ in range(rng.randint(0, max_len - 1))),
                          rng.randrange(len(g))): rng.randint(1, 5)})
    iw = to_chain(w)
    return {
        "beta.dbar": (beta(dbar(r)), 0),
        "dbar.beta": (dbar(beta(w)), 0),
        "b^2": (hochschild_ops("b", hochschild_ops("b", ch)), 0),
        "bprime^2": (hochschild_ops("bprime", hochschild_ops("bprime", ch)), 0),
        "N(1-T)": (hochschild_ops("N", ch - T), 0),
        "(1-T)N": (N - hochschild_ops("T", N), 0),
        # transport through to_chain: dbar becomes N, beta becomes -(1-T)
        "dbar~N": (to_chain(dbar(r)), N),
        "beta~(1-T)": (iw - hochschild_ops("T", iw), -HochschildChain(g, beta(w).terms)),
    }


QUILLEN_IDENTITIES = ("beta.dbar", "dbar.beta", "b^2", "bprime^2", "N(1-T)", "(1-T)N",
                      "dbar~N", "beta~(1-T)")


def check_quillen_identities(coalgebra, trials=200, seed=0, max_len=4):
    """One Report per identity, each over ``trials`` random homogeneous inputs."""
    import random
    from .ainf import Report
    R = CobarAlgebra(coalgebra)
    rng = random.Random(f"{seed}:quillen")
    reports = {name: Report(name) for name in QUILLEN_IDENTITIES}
    for _ in range(trials):
        for name, (lhs, rhs) in _quillen_cases(R, rng, max_len).items():
            rep = reports[name]
            rep.checked += 1
            if (rhs == 0 and lhs) or (rhs != 0 and lhs != rhs):
                rep.fail(lhs=str(lhs), rhs=str(rhs))
    return list(reports.values())
