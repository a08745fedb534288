"""Hochschild cochains of the dual algebra and Tradler's duality map.

A cochain is a combination of decomposables (c_1, ..., c_n ; a) meaning the
map A^{(x)n} -> A that sends (a_{c_1}, ..., a_{c_n}) to a and kills every
other tuple of basis elements.  All signs are taken in the suspended
convention: an input or output basis element k has degree |c_k| - 1, the
same as the cobar letter s^-1 c_k, and a decomposable has degree

    ||(c_1..c_n ; a_k)|| = sum(|c_i| - 1) + |c_k| - 1.

With that grading the composition

    f o g = sum_i (-1)^{||g|| (||x_1|| + ... + ||x_{i-1}||)} f(x_1, .., g(x_i, ..), ..)

is pre-Lie, the bracket {f, g} = f o g - (-1)^{||f|| ||g||} g o f is a graded
Lie bracket, and the structure cochain M built from the A-infinity products
satisfies M o M = 0.  The Hochschild differential is delta(f) = {M, f} and the
cup product is f u g = -(-1)^{||f||} M_2(f, g); then delta is a derivation,
delta(f u g) = delta f u g - (-1)^{||f||} f u delta g.

Hochschild chains of C are words of cobar letters with the coefficient in the
first slot (the convention of ``cobar.op_b``).  Tradler's map is

    Phi(c_0, c_1, ..., c_n) = (-1)^{(|s^-1 c_0| + d)(|s^-1 c_1| + ... + |s^-1 c_n|)} (c_1, ..., c_n ; phi(c_0)),

phi(c) = <c, -> = sum_k <c, c_k> a_k.  With these choices
Phi(b w) = -(-1)^{|w|} delta(Phi w) and Phi(B{u, v}) = {Phi B(v), Phi B(u)}.
"""
from dataclasses import dataclass
from fractions import Fraction

from .ainf import dualize
from .cobar import HochschildChain, connes_B_cobar, op_b
from .double_poisson import random_word, structure_for
from .errors import BadParameters, NoPairing
from .tensor import FreeElement, add_term, render_combination, sgn


class Cochain:
    """Element of C^{(x)n} (x) A, keyed by (tuple of basis indices, output index)."""

    def __init__(self, coalgebra, terms=None):
        self.coalgebra = coalgebra
        self.terms = {}
        for (inputs, out), v in (terms or {}).items():
            add_term(self.terms, (tuple(inputs), out), Fraction(v))

    def _new(self, terms):
        return Cochain(self.coalgebra, terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            add_term(out, k, v)
        return self._new(out)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        return self._new({k: c * v for k, v in self.terms.items() if c})

    def __eq__(self, other):
        if isinstance(other, Cochain):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        ids = [b.id for b in self.coalgebra.basis]
        return render_combination(
            self.terms, lambda k: "(" + ", ".join(ids[i] for i in k[0]) + " ; " + ids[k[1]] + ")", repr)

    __repr__ = __str__

    def degree(self, key):
        D = self.coalgebra.degrees
        inputs, out = key
        return sum(D[i] - 1 for i in inputs) + D[out] - 1

    def arities(self):
        return sorted({len(k[0]) for k in self.terms})


def _sdeg(C, inputs):
    return sum(C.degrees[i] - 1 for i in inputs)


# --- structure cochain and the pre-Lie composition ----------------------------

_STRUCTURE = {}


def structure_cochain(C):
    """M = sum_k mu_k, with the signs of the cobar differential."""
    hit = _STRUCTURE.get(id(C))
    if hit is not None and hit.coalgebra is C:
        return hit
    R = structure_for(C).R
    g = R.gens
    out = {}
    for x, terms in R.letter_d.items():
        for w, c in terms.items():
            add_term(out, (tuple(g.to_basis[y] for y in w), g.to_basis[x]), c)
    _STRUCTURE[id(C)] = Cochain(C, out)
    return _STRUCTURE[id(C)]


def _compose_into(out, C, ft, gt, scale_of=None):
    for (u, a), c1 in ft.items():
        fdeg = sum(C.degrees[i] - 1 for i in u) + C.degrees[a] - 1
        for (v, b), c2 in gt.items():
            gdeg = sum(C.degrees[i] - 1 for i in v) + C.degrees[b] - 1
            pre = 1 if scale_of is None else scale_of(fdeg, gdeg)
            acc = 0
            for i, x in enumerate(u):
                if x == b:
                    add_term(out, (u[:i] + v + u[i + 1:], a), pre * sgn(gdeg * acc) * c1 * c2)
                acc += C.degrees[x] - 1


def compose(f, g):
    """f o g by the pairing formula: slot i of f is evaluated on the output of g."""
    out = {}
    _compose_into(out, f.coalgebra, f.terms, g.terms)
    return Cochain(f.coalgebra, out)


def gerstenhaber_bracket(f, g):
    """{f, g} = f o g - (-1)^{||f|| ||g||} g o f, on homogeneous parts."""
    out = {}
    _compose_into(out, f.coalgebra, f.terms, g.terms)
    _compose_into(out, f.coalgebra, g.terms, f.terms, lambda gd, fd: -sgn(fd * gd))
    return Cochain(f.coalgebra, out)


# --- the insertion route ------------------------------------------------------

def evaluate(f, inputs):
    """f(a_{i_1}, ..., a_{i_n}) as a vector {output index: coeff}."""
    out = {}
    for (u, a), c in f.terms.items():
        if u == tuple(inputs):
            add_term(out, a, c)
    return out


def _splices(f, g):
    keys = set()
    for (u, _), _c in f.terms.items():
        for (v, _), _c2 in g.terms.items():
            for i in range(len(u)):
                keys.add(u[:i] + v + u[i + 1:])
    return keys


def compose_by_insertion(f, g):
    """f o g evaluated as a function on every input tuple where it can be nonzero."""
    C = f.coalgebra
    out = {}
    g_arities = sorted({len(v) for (v, _) in g.terms})
    for x in _splices(f, g):
        for m in g_arities:
            for i in range(len(x) - m + 1):
                inner = evaluate(g, x[i:i + m])
                for b, cb in inner.items():
                    # homogeneous parity of the part of g that produced b
                    gd = _sdeg(C, x[i:i + m]) + C.degrees[b] - 1
                    s = sgn(gd * _sdeg(C, x[:i]))
                    for a, ca in evaluate(f, x[:i] + (b,) + x[i + m:]).items():
                        add_term(out, (x, a), s * cb * ca)
    return Cochain(C, out)


def gerstenhaber_bracket_by_insertion(f, g):
    out = compose_by_insertion(f, g)
    for kf, cf in f.terms.items():
        for kg, cg in g.terms.items():
            s = -sgn(f.degree(kf) * g.degree(kg))
            out = out + (s * cf * cg) * compose_by_insertion(Cochain(f.coalgebra, {kg: 1}),
                                                            Cochain(f.coalgebra, {kf: 1}))
    return out


# --- differential, cup, cap ---------------------------------------------------

def cochain_delta(f):
    """delta(f) = {M, f}."""
    return gerstenhaber_bracket(structure_cochain(f.coalgebra), f)


def unit_cochain(C):
    if C.coaugmentation is None:
        raise BadParameters("coalgebra has no coaugmentation, so the dual algebra has no unit")
    return Cochain(C, {((), C.lookup(k)): v for k, v in C.as_vector(C.coaugmentation).items()})


def _mu2_table(C):
    M = structure_cochain(C)
    table = {}
    for (u, a), c in M.terms.items():
        if len(u) == 2:
            table.setdefault(u, {})[a] = c
    return table


def cup(f, g):
    """f u g = -(-1)^{||f||} M_2(f, g): concatenate inputs, multiply outputs with M_2."""
    C = f.coalgebra
    table = _mu2_table(C)
    out = {}
    for (u, a), c1 in f.terms.items():
        fdeg = f.degree((u, a))
        for (v, b), c2 in g.terms.items():
            s = -sgn(fdeg + g.degree((v, b)) * _sdeg(C, u))
            for k, c3 in table.get((a, b), {}).items():
                add_term(out, (u + v, k), s * c1 * c2 * c3)
    return Cochain(C, out)


class AlgebraChain:
    """Hochschild chain (a_0, a_1, ..., a_m) of the dual algebra, keyed by index tuples."""

    def __init__(self, coalgebra, terms=None):
        self.coalgebra = coalgebra
        self.terms = {}
        for k, v in (terms or {}).items():
            add_term(self.terms, tuple(k), Fraction(v))

    def __eq__(self, other):
        return isinstance(other, AlgebraChain) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        ids = [b.id for b in self.coalgebra.basis]
        return render_combination(self.terms, lambda k: "(" + ", ".join(ids[i] for i in k) + ")", repr)

    __repr__ = __str__


def cap(alpha, f):
    """alpha n f = (-1)^{|a_0||f|} (a_0 f(a_1, .., a_n), a_{n+1}, .., a_m), zero when m < n.

    Plain (unsuspended) degrees and the plain product mu_2 of the dual algebra.
    """
    C = f.coalgebra
    D = C.degrees
    table = dualize(C).products.get(2, {})
    out = {}
    for chain, c1 in alpha.terms.items():
        a0, rest = chain[0], chain[1:]
        for (u, a), c2 in f.terms.items():
            n = len(u)
            if n > len(rest) or rest[:n] != u:
                continue
            s = sgn(D[a0] * (D[a] - sum(D[i] for i in u)))
            for k, c3 in table.get((a0, a), {}).items():
                add_term(out, (k,) + rest[n:], s * c1 * c2 * c3)
    return AlgebraChain(C, out)


# --- Tradler's map --------------------------------------------------------------

def tradler_phi(chain):
    """Phi(c_0, c_1..c_n) = (-1)^{(|s^-1 c_0| + d)|c_1..c_n|} (c_1..c_n ; phi(c_0))."""
    g = chain.gens
    C = g.coalgebra
    if not C.has_pairing:
        raise NoPairing(f"{C.name or 'coalgebra'} has no pairing")
    d = C.pairing_degree
    out = {}
    for w, c in chain.terms.items():
        if not w:
            continue
        x, rest = w[0], w[1:]
        inputs = tuple(g.to_basis[y] for y in rest)
        s = sgn((g.degrees[x] + d) * sum(g.degrees[y] for y in rest))
        src = g.to_basis[x]
        for k in range(C.dim):
            p = C.pair(src, k)
            if p:
                add_term(out, (inputs, k), s * p * c)
    return Cochain(C, out)


def phi_B(u):
    """Phi(B(u)) for u in the cobar algebra."""
    return tradler_phi(connes_B_cobar(u))


@dataclass
class TransportCheck:
    lhs: Cochain
    rhs: Cochain

    @property
    def ok(self):
        return self.lhs == self.rhs


def bracket_transport_sides(C, u, v):
    """(Phi B{u, v}, {Phi B(v), Phi B(u)}) for elements of the cobar algebra of C."""
    P = structure_for(C)
    lhs = phi_B(P.loday_bracket(u, v))
    rhs = gerstenhaber_bracket(phi_B(v), phi_B(u))
    return TransportCheck(lhs, rhs)


def verify_theorem_1_4(C, u, v):
    """Compare both sides; ``u``, ``v`` are FreeElements or tuples of letter indices."""
    P = structure_for(C)
    if isinstance(u, tuple):
        u = FreeElement(P.gens, {u: 1})
    if isinstance(v, tuple):
        v = FreeElement(P.gens, {v: 1})
    chk = bracket_transport_sides(C, u, v)
    return {"identity": "Phi B{u,v} = {Phi B(v), Phi B(u)}_G", "u": str(u), "v": str(v),
            "lhs": str(chk.lhs), "rhs": str(chk.rhs), "equal": chk.ok}


def formal_summands(n, m):
    """Formal summand lists of both sides for generic words of lengths n and m.

    Letters are labelled ('u', i) and ('v', j); a summand is (pairing label,
    input labels, output label).  Returns (lhs, rhs) as lists.
    """
    u = [("u", i) for i in range(n)]
    v = [("v", j) for j in range(m)]
    lhs = []
    for i in range(n):
        for j in range(m):
            word = v[:j] + u[i + 1:] + u[:i] + v[j + 1:]
            label = frozenset((u[i], v[j]))
            for k in range(1, len(word) + 1):
                rot = word[k:] + word[:k]
                lhs.append((label, tuple(rot[1:]), rot[0]))
    rhs = []

    def rotations(word):
        return [(word[k], tuple(word[k + 1:] + word[:k])) for k in range(len(word))]

    for out_f, in_f in rotations(u):
        for out_g, in_g in rotations(v):
            for k in range(len(in_f)):
                rhs.append((frozenset((in_f[k], out_g)), in_f[:k] + in_g + in_f[k + 1:], out_f))
            for k in range(len(in_g)):
                rhs.append((frozenset((in_g[k], out_f)), in_g[:k] + in_f + in_g[k + 1:], out_g))
    return lhs, rhs


def summand_count(n, m):
    """(lhs count, rhs count, same multiset) for generic distinct-letter words."""
    from collections import Counter
    lhs, rhs = formal_summands(n, m)
    return len(lhs), len(rhs), Counter(lhs) == Counter(rhs)


# --- verification suites --------------------------------------------------------

def check_bracket_transport(C, rng, trials=100, max_len=3):
    from .ainf import Report
    P = structure_for(C)
    rep = Report("bracket-transport")
    for _ in range(trials):
        u = random_word(P.gens, rng, max_len, 1)
        v = random_word(P.gens, rng, max_len, 1)
        chk = bracket_transport_sides(C, FreeElement(P.gens, {u: 1}), FreeElement(P.gens, {v: 1}))
        rep.checked += 1
        if not chk.ok:
            rep.fail(inputs=[P.gens.render(u), P.gens.render(v)], lhs=str(chk.lhs), rhs=str(chk.rhs))
    return rep


def check_phi_chain_map(C, rng, trials=100, max_len=4):
    """Phi(b w) = -(-1)^{|w|} delta(Phi w) on random chains."""
    from .ainf import Report
    P = structure_for(C)
    rep = Report("phi-chain-map")
    for _ in range(trials):
        w = random_word(P.gens, rng, max_len, 1)
        chain = HochschildChain(P.gens, {w: 1})
        lhs = tradler_phi(HochschildChain(P.gens, op_b(P.gens, chain.terms)))
        rhs = -sgn(P.deg(w)) * cochain_delta(tradler_phi(chain))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(inputs=[P.gens.render(w)], lhs=str(lhs), rhs=str(rhs))
    return rep


def random_cochain(C, rng, max_arity=3):
    n = rng.randint(0, max_arity)
    return Cochain(C, {(tuple(rng.randrange(C.dim) for _ in range(n)), rng.randrange(C.dim)): 1})


def check_delta_squared(C, rng, trials=100, max_arity=3):
    from .ainf import Report
    rep = Report("delta-squared")
    for _ in range(trials):
        f = random_cochain(C, rng, max_arity)
        rep.checked += 1
        dd = cochain_delta(cochain_delta(f))
        if dd:
            rep.fail(inputs=[str(f)], lhs=str(dd), rhs="0")
    return rep


def check_bracket_routes(C, rng, trials=100, max_arity=3):
    """Pairing formula against evaluation-by-insertion, plus graded antisymmetry."""
    from .ainf import Report
    rep = Report("gerstenhaber-routes")
    for _ in range(trials):
        f, g = random_cochain(C, rng, max_arity), random_cochain(C, rng, max_arity)
        x, y = gerstenhaber_bracket(f, g), gerstenhaber_bracket_by_insertion(f, g)
        rep.checked += 2
        if x != y:
            rep.fail(identity="routes", inputs=[str(f), str(g)], lhs=str(x), rhs=str(y))
        kf, kg = next(iter(f.terms)), next(iter(g.terms))
        z = -sgn(f.degree(kf) * g.degree(kg)) * gerstenhaber_bracket(g, f)
        if x != z:
            rep.fail(identity="antisymmetry", inputs=[str(f), str(g)], lhs=str(x), rhs=str(z))
    return rep


SUITES = {
    "bracket-transport": check_bracket_transport,
    "phi-chain-map": check_phi_chain_map,
    "delta-squared": check_delta_squared,
    "gerstenhaber-routes": check_bracket_routes,
}


# --- cocycles and coboundaries ---------------------------------------------------

def cochain_keys(C, arity):
    from itertools import product
    return [(u, a) for u in product(range(C.dim), repeat=arity) for a in range(C.dim)]


def _key_weight(C, key):
    u, a = key
    return C.weights[a] - sum(C.weights[i] for i in u)


def cocycle_basis(C, arity, degree=None, weight=None):
    """Basis of cocycles among cochains of one arity (optionally one suspended degree and weight)."""
    from .linalg import SparseMatrix, rank_kernel_image
    keys = [k for k in cochain_keys(C, arity)
            if (degree is None or Cochain(C).degree(k) == degree)
            and (weight is None or _key_weight(C, k) == weight)]
    images = [cochain_delta(Cochain(C, {k: 1})).terms for k in keys]
    rows = sorted({r for im in images for r in im})
    pos = {r: i for i, r in enumerate(rows)}
    m = SparseMatrix(len(rows), len(keys), {(pos[r], j): v for j, im in enumerate(images) for r, v in im.items()})
    _, ker, _ = rank_kernel_image(m)
    return [Cochain(C, {keys[i]: v for i, v in vec.items()}) for vec in ker.vectors]


def is_coboundary(x, arity_below):
    """True when the cochain x is delta of a cochain of arity ``arity_below``."""
    from .linalg import solve_in_span
    C = x.coalgebra
    if not x:
        return True
    columns = [cochain_delta(Cochain(C, {k: 1})).terms for k in cochain_keys(C, arity_below)]
    return solve_in_span([c for c in columns if c], x.terms) is not None


def leibniz_defect(f, g, h):
    """{f, g u h} - {f, g} u h - (-1)^{||f||(||g||+1)} g u {f, h}."""
    kf, kg = next(iter(f.terms)), next(iter(g.terms))
    s = sgn(f.degree(kf) * (g.degree(kg) + 1))
    return (gerstenhaber_bracket(f, cup(g, h)) - cup(gerstenhaber_bracket(f, g), h)
            - s * cup(g, gerstenhaber_bracket(f, h)))


def homogeneous_cocycles(C, arity, degrees=range(-6, 7), weights=range(-6, 7)):
    out = []
    for deg in degrees:
        for wt in weights:
            out.extend(cocycle_basis(C, arity, deg, wt))
    return out


def check_leibniz_cohomology(C, rng, trials=30, max_arity=2):
    """Bracket over cup on random homogeneous cocycles: the defect must be a coboundary."""
    from .ainf import Report
    rep = Report("gerstenhaber-leibniz")
    pool = []
    for n in range(1, max_arity + 1):
        pool.extend(homogeneous_cocycles(C, n))
    small = [z for z in pool if z.arities() == [1]] or pool
    for _ in range(trials):
        f, g, h = rng.choice(pool), rng.choice(pool), rng.choice(small)
        D = leibniz_defect(f, g, h)
        rep.checked += 1
        if D and not is_coboundary(D, max(len(k[0]) for k in D.terms) - 1):
            rep.fail(inputs=[str(f), str(g), str(h)], lhs=str(D), rhs="coboundary")
    return rep


SUITES["gerstenhaber-leibniz"] = check_leibniz_cohomology


# --- the contraction formula in the polynomial model ----------------------------

@dataclass
class HomologyClass:
    """A class in HC or HH of Sym(V), represented by a polynomial form.

    Under HKR, HH_n is the space of n-forms and HC_n contains n-forms modulo
    exact ones; ``normal_form`` picks the representative used for comparison.
    """

    kind: str
    representative: object

    def __post_init__(self):
        if self.kind not in ("HC", "HH"):
            raise BadParameters(f"kind must be HC or HH, not {self.kind!r}")

    def normal_form(self):
        from .hkr import class_modulo_exact
        if self.kind == "HC":
            return class_modulo_exact(self.representative)
        return self.representative

    def __eq__(self, other):
        return (isinstance(other, HomologyClass) and self.kind == other.kind
                and self.normal_form() == other.normal_form())


def _psi_inverse_against(omega, a):
    """Solve iota_xi omega = a for a constant multiple omega of the volume form."""
    from .hkr import psi_inverse, volume_form
    vol = volume_form(omega.m)
    if len(omega.terms) != 1 or next(iter(omega.terms)) != next(iter(vol.terms)):
        raise BadParameters("fundamental class must be a nonzero constant multiple of the volume form")
    scale = next(iter(omega.terms.values()))
    return psi_inverse(a).scale(1 / scale)


def corollary_1_5_bracket(alpha, beta, omega=None):
    """{alpha, beta} = (-1)^(m - |alpha| - 1) iota_{Psi^-1(B alpha)} B beta.

    Here B is the de Rham differential and Psi is contraction into the
    fundamental class ``omega``.  The result is an HC class when beta is, and
    an HH class when beta is an HH class acted on by alpha.
    """
    from .errors import FundamentalClassMissing
    from .hkr import contract, de_rham_d
    if omega is None:
        raise FundamentalClassMissing("the contraction formula needs a fundamental class")
    if alpha.kind != "HC":
        raise BadParameters("the first argument must be a cyclic class")
    a, b = alpha.representative, beta.representative
    m = omega.m
    out = None
    for p, ap in a.homogeneous_parts().items():
        xi = _psi_inverse_against(omega, de_rham_d(ap))
        term = sgn(m - p - 1) * contract(xi, de_rham_d(b))
        out = term if out is None else out + term
    if out is None:
        out = type(a).zero(m)
    return HomologyClass(beta.kind, out)
