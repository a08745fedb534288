"""The double bracket on the cobar algebra of a cyclic coalgebra.

The bracket lives on R = T(s^-1 C), one letter for every basis element of C
(the unit included), so that it commutes with the cobar differential.  On two
letters it is the constant

    <<s^-1 v, s^-1 w>> = (-1)^{d|v|} <v, w> 1 (x) 1,

with d the pairing degree; it is extended to words by the right derivation
rule in the second slot and graded antisymmetry, which gives one closed
double sum over pairs of letters (``double_bracket``).  ``n = 2 - d`` is the
degree of the bracket.

Outer bimodule actions on R (x) R carry no sign: b (u (x) v) c = bu (x) vc.
The swap is Koszul: (u (x) v)° = (-1)^{|u||v|} v (x) u.
"""
from fractions import Fraction

from .cobar import (CobarAlgebra, OneForm, OneFormClass, TensorPair, lift, map_I,
                    natural, partial, word_degree)
from .errors import GeneratorSetMismatch, NoPairing
from .tensor import FreeElement, add_term, render_combination, sgn


class TripleValue:
    """Element of R (x) R (x) R, optionally tagged with the slot holding a module factor."""

    def __init__(self, gens, terms=None):
        self.gens = gens
        self.terms = {}
        for k, v in (terms or {}).items():
            add_term(self.terms, k, Fraction(v))

    def __eq__(self, other):
        if isinstance(other, TripleValue):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            add_term(out, k, v)
        return TripleValue(self.gens, out)

    def __neg__(self):
        return TripleValue(self.gens, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        r = self.gens.render
        return render_combination(self.terms, lambda k: " (x) ".join(r(w) for w in k), repr)

    __repr__ = __str__


class MixedDoubleValue:
    """Pair of parts: ``left`` in R (x) Omega^1 and ``right`` in Omega^1 (x) R.

    Both are stored as TripleValues inside R (x) R (x) R.
    """

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def total(self):
        return self.left + self.right

    def __eq__(self, other):
        return isinstance(other, MixedDoubleValue) and self.left == other.left and self.right == other.right

    def __bool__(self):
        return bool(self.left) or bool(self.right)

    def __str__(self):
        return f"[R (x) Omega1] {self.left}  (+)  [Omega1 (x) R] {self.right}"


# --- structure ----------------------------------------------------------------

class DoublePoissonCobar:
    """The double bracket on the full cobar algebra of a cyclic coalgebra."""

    def __init__(self, coalgebra, cobar=None):
        if not coalgebra.has_pairing:
            raise NoPairing(f"{coalgebra.name or 'coalgebra'} has no cyclic pairing")
        self.coalgebra = coalgebra
        self.R = cobar if cobar is not None else CobarAlgebra(coalgebra, full=True)
        if not self.R.full:
            raise GeneratorSetMismatch("the double bracket needs the cobar algebra on all of C")
        self.gens = self.R.gens
        self.n = coalgebra.shift
        d = coalgebra.pairing_degree
        g = self.gens
        self.constant = {}
        for x in range(len(g)):
            v = g.to_basis[x]
            for y in range(len(g)):
                p = coalgebra.pair(v, g.to_basis[y])
                if p:
                    self.constant[(x, y)] = sgn(d * coalgebra.degrees[v]) * p

    # -- helpers -------------------------------------------------------------
    def deg(self, word):
        return word_degree(self.gens, word)

    def element(self, terms):
        return FreeElement(self.gens, terms)

    def word(self, *ids):
        """Single word from coalgebra basis ids (or letter indices)."""
        return FreeElement(self.gens, {tuple(self.R.letter(i) for i in ids): 1})

    def _check(self, *elems):
        for e in elems:
            if e.gens is not self.gens:
                raise GeneratorSetMismatch("element does not live in this cobar algebra")

    # -- the bracket ---------------------------------------------------------
    def bracket_terms(self, rt, qt):
        """Closed double sum; keys are pairs of words."""
        out = {}
        D = self.gens.degrees
        n = self.n
        for r, c1 in rt.items():
            a = [D[x] for x in r]
            rn = sum(a) + n
            prefix = [0]
            for t in a:
                prefix.append(prefix[-1] + t)
            total = prefix[-1]
            for q, c2 in qt.items():
                bpre = 0
                for j, y in enumerate(q):
                    for i, x in enumerate(r):
                        k = self.constant.get((y, x))
                        if not k:
                            continue
                        left = prefix[i]
                        right = total - prefix[i + 1]
                        e = 1 + rn * a[i] + left * a[i] + left * right + bpre * rn
                        add_term(out, (q[:j] + r[i + 1:], r[:i] + q[j + 1:]), sgn(e) * k * c1 * c2)
                    bpre += D[y]
        return out

    def double_bracket(self, r, q):
        self._check(r, q)
        return TensorPair(self.gens, self.bracket_terms(r.terms, q.terms))

    def bracket_recursive_terms(self, rt, qt):
        """Independent route: right derivation from letters, then antisymmetry."""
        D = self.gens.degrees
        n = self.n

        def letter_left(x, q):
            out = {}
            pre = 0
            for j, y in enumerate(q):
                k = self.constant.get((x, y))
                if k:
                    add_term(out, (q[:j], q[j + 1:]), k * sgn(pre * (D[x] + n)))
                pre += D[y]
            return out

        def word_letter(r, y):
            out = {}
            rn = self.deg(r) + n
            for (u, v), c in letter_left(y, r).items():
                e = rn * (D[y] + n) + self.deg(u) * self.deg(v)
                add_term(out, (v, u), -c * sgn(e))
            return out

        out = {}
        for r, c1 in rt.items():
            rn = self.deg(r) + n
            for q, c2 in qt.items():
                pre = 0
                for j, y in enumerate(q):
                    for (u, v), c in word_letter(r, y).items():
                        add_term(out, (q[:j] + u, v + q[j + 1:]), c1 * c2 * c * sgn(pre * rn))
                    pre += D[y]
        return out

    def double_bracket_recursive(self, r, q):
        self._check(r, q)
        return TensorPair(self.gens, self.bracket_recursive_terms(r.terms, q.terms))

    def bracket_with_printed_sign_terms(self, rt, qt):
        """The double sum with prefactor (-1)^{|v_i| + eps} <v_i, w_j>.

        eps = (|r|+d)(|w_1|+...+|w_{j-1}|) + (|v_1|+...+|v_{i-1}|+|w_j|+d)(|v_{i+1}|+...+|v_k|)
        in letter degrees.  Kept for comparison with ``bracket_terms``: the two
        agree when d is odd and differ by (-1)^{|v_i|} when d is even.
        """
        C = self.coalgebra
        g = self.gens
        D = g.degrees
        d = C.pairing_degree
        out = {}
        for r, c1 in rt.items():
            dr = self.deg(r)
            for q, c2 in qt.items():
                for i, x in enumerate(r):
                    for j, y in enumerate(q):
                        p = C.pair(g.to_basis[x], g.to_basis[y])
                        if not p:
                            continue
                        eps = ((dr + d) * self.deg(q[:j])
                               + (self.deg(r[:i]) + D[y] + d) * self.deg(r[i + 1:]))
                        e = C.degrees[g.to_basis[x]] + eps
                        add_term(out, (q[:j] + r[i + 1:], r[:i] + q[j + 1:]), sgn(e) * p * c1 * c2)
        return out

    # -- derived operations ----------------------------------------------------
    def loday_bracket(self, r, q):
        """{r, q} = mu(<<r, q>>)."""
        self._check(r, q)
        out = {}
        for (u, v), c in self.bracket_terms(r.terms, q.terms).items():
            add_term(out, u + v, c)
        return FreeElement(self.gens, out)

    def swap(self, pair):
        out = {}
        for (u, v), c in pair.terms.items():
            add_term(out, (v, u), sgn(self.deg(u) * self.deg(v)) * c)
        return TensorPair(self.gens, out)

    def double_bracket_tensor(self, r, pair):
        """<<r, p (x) q>> = <<r,p>> (x) q + (-1)^{|p|(|r|+n)} p (x) <<r,q>>.

        Returns (first, second): first in R (x) (R (x) R), second in (R (x) R) (x) R,
        both as TripleValues.
        """
        first, second = {}, {}
        for rw, rc in r.terms.items():
            rn = self.deg(rw) + self.n
            for (p, q), c in pair.terms.items():
                for (u, v), k in self.bracket_terms({rw: rc}, {p: 1}).items():
                    add_term(first, (u, v, q), c * k)
                s = sgn(self.deg(p) * rn)
                for (u, v), k in self.bracket_terms({rw: rc}, {q: 1}).items():
                    add_term(second, (p, u, v), s * c * k)
        return TripleValue(self.gens, first), TripleValue(self.gens, second)

    def double_bracket_oneform(self, a, omega):
        """<<a, omega>> for omega in R (x) V (x) R, split into its two module parts.

        The six pieces of <<a, I(omega)>> are regrouped so that the left part
        lies in R (x) Omega^1 and the right part in Omega^1 (x) R.
        """
        left, right = {}, {}
        n = self.n
        for aw, ac in a.terms.items():
            an = self.deg(aw) + n
            for (b, x, c), coef in omega.terms.items():
                s_b = sgn(self.deg(b) * an)
                s_bx = sgn((self.deg(b) + self.gens.degrees[x]) * an)
                ab = self.bracket_terms({aw: ac}, {b: coef})
                ax = self.bracket_terms({aw: ac}, {(x,): coef})
                acc = self.bracket_terms({aw: ac}, {c: coef})
                for (u, v), k in ab.items():
                    add_term(left, (u, v + (x,), c), k)          # first piece
                    add_term(left, (u, v, (x,) + c), -k)         # fourth piece
                for (u, v), k in ax.items():
                    add_term(right, (b + u, v, c), s_b * k)      # second piece
                    add_term(left, (b, u, v + c), -s_b * k)      # fifth piece
                    # move b (x) uv (x) c from the right part to the left part
                    add_term(right, (b, u + v, c), -s_b * k)
                    add_term(left, (b, u + v, c), s_b * k)
                for (u, v), k in acc.items():
                    add_term(right, (b + (x,), u, v), s_bx * k)  # third piece
                    add_term(right, (b, (x,) + u, v), -s_bx * k)  # sixth piece
        return MixedDoubleValue(TripleValue(self.gens, left), TripleValue(self.gens, right))

    def oneform_bracket(self, a, omega):
        """{a, omega} in Omega^1 via the bimodule action on the two parts."""
        mixed = self.double_bracket_oneform(a, omega)
        pair = {}
        for (u, v, w), c in mixed.left.terms.items():
            add_term(pair, (u + v, w), c)
        for (u, v, w), c in mixed.right.terms.items():
            add_term(pair, (u, v + w), c)
        return map_I_inverse(TensorPair(self.gens, pair))

    def oneform_natural_bracket(self, r, w):
        """{r, q (x) x} on R (x) V by the four-term formula.

        {r, w} = nat[ {r,q} (x) x (x) 1 + (-1)^{|q|(|r|+n)} q . partial({r, x}) ].
        """
        out = OneForm(self.gens)
        for rw, rc in r.terms.items():
            rn = self.deg(rw) + self.n
            rr = FreeElement(self.gens, {rw: rc})
            for (q, x), c in w.terms.items():
                rq = self.loday_bracket(rr, FreeElement(self.gens, {q: c}))
                out = out + OneForm(self.gens, {(u, x, ()): k for u, k in rq.terms.items()})
                rx = self.loday_bracket(rr, FreeElement(self.gens, {(x,): c}))
                s = sgn(self.deg(q) * rn)
                out = out + OneForm(self.gens, {(q + u, y, v): s * k
                                                for (u, y, v), k in partial(rx).terms.items()})
        return natural(out)

    def oneform_natural_bracket_via_bimodule(self, r, w):
        return natural(self.oneform_bracket(r, lift(w)))


def map_I_inverse(pair):
    """Inverse of I on the kernel of multiplication: u (x) w -> -u . partial(w)."""
    out = {}
    for (u, w), c in pair.terms.items():
        for i in range(len(w)):
            add_term(out, (u + w[:i], w[i], w[i + 1:]), -c)
    return OneForm(pair.gens, out)


def in_omega_left(triple):
    """True when the last two factors lie in Omega^1 (kernel of their product)."""
    out = {}
    for (u, v, w), c in triple.terms.items():
        add_term(out, (u, v + w), c)
    return not out


def in_omega_right(triple):
    out = {}
    for (u, v, w), c in triple.terms.items():
        add_term(out, (u + v, w), c)
    return not out


_CACHE = {}


def structure_for(coalgebra):
    key = id(coalgebra)
    if key not in _CACHE or _CACHE[key].coalgebra is not coalgebra:
        _CACHE[key] = DoublePoissonCobar(coalgebra)
    return _CACHE[key]


def _structure(elem):
    c = elem.gens.coalgebra
    st = structure_for(c)
    if elem.gens is not st.gens:
        raise GeneratorSetMismatch("use elements of the full cobar algebra (structure_for(C).gens)")
    return st


def double_bracket(r, q):
    return _structure(r).double_bracket(r, q)


def loday_bracket(r, q):
    return _structure(r).loday_bracket(r, q)


def double_bracket_tensor(r, pair):
    return _structure(r).double_bracket_tensor(r, pair)


def double_bracket_oneform(r, omega):
    return _structure(r).double_bracket_oneform(r, omega)


def oneform_natural_bracket(r, w):
    return _structure(r).oneform_natural_bracket(r, w)


# --- verification suites ------------------------------------------------------

def random_word(gens, rng, max_len, min_len=0):
    return tuple(rng.randrange(len(gens)) for _ in range(rng.randint(min_len, max_len)))



def _act_right(pair_terms, q):
    """<<r,p>> . q on R (x) R."""
    return {(u, v + q): c for (u, v), c in pair_terms.items()}


def _act_left(p, pair_terms):
    return {(p + u, v): c for (u, v), c in pair_terms.items()}


def _combine(*parts):
    out = {}
    for scale, terms in parts:
        for k, v in terms.items():
            add_term(out, k, scale * v)
    return out


def _render_pair(P, terms):
    return str(TensorPair(P.gens, terms))


def check_antisymmetry(P, rng, trials=200, max_len=4):
    """<<q, r>> = -(-1)^{(|r|+n)(|q|+n)} <<r, q>>°."""
    from .ainf import Report
    rep = Report("double-antisymmetry")
    n = P.n
    for _ in range(trials):
        r, q = random_word(P.gens, rng, max_len, 1), random_word(P.gens, rng, max_len, 1)
        lhs = P.bracket_terms({q: 1}, {r: 1})
        rhs = {}
        e = (P.deg(r) + n) * (P.deg(q) + n)
        for (u, v), c in P.bracket_terms({r: 1}, {q: 1}).items():
            add_term(rhs, (v, u), -c * sgn(e + P.deg(u) * P.deg(v)))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(inputs=[P.gens.render(r), P.gens.render(q)],
                     lhs=_render_pair(P, lhs), rhs=_render_pair(P, rhs))
    return rep


def check_derivation(P, rng, trials=200, max_len=4):
    """<<a, bc>> = <<a, b>> c + (-1)^{|b|(|a|+n)} b <<a, c>>."""
    from .ainf import Report
    rep = Report("double-derivation")
    n = P.n
    for _ in range(trials):
        a = random_word(P.gens, rng, max_len, 1)
        b = random_word(P.gens, rng, max_len)
        c = random_word(P.gens, rng, max_len)
        lhs = P.bracket_terms({a: 1}, {b + c: 1})
        rhs = _combine((1, _act_right(P.bracket_terms({a: 1}, {b: 1}), c)),
                       (sgn(P.deg(b) * (P.deg(a) + n)), _act_left(b, P.bracket_terms({a: 1}, {c: 1}))))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(inputs=[P.gens.render(w) for w in (a, b, c)],
                     lhs=_render_pair(P, lhs), rhs=_render_pair(P, rhs))
    return rep


def nested_left(P, a, b, c):
    """<<a, <<b, c>>>>_L: the outer bracket acts on the first factor."""
    out = {}
    for (u, v), k in P.bracket_terms({b: 1}, {c: 1}).items():
        for (x, y), k2 in P.bracket_terms({a: 1}, {u: 1}).items():
            add_term(out, (x, y, v), k * k2)
    return out


def cycle_right(P, terms, steps):
    """Koszul-signed cyclic shift of R^(x)3: one step sends b1(x)b2(x)b3 to b3(x)b1(x)b2."""
    out = {}
    for key, c in terms.items():
        s = 1
        for _ in range(steps):
            s *= sgn(P.deg(key[2]) * (P.deg(key[0]) + P.deg(key[1])))
            key = (key[2], key[0], key[1])
        add_term(out, key, s * c)
    return out


def double_jacobiator(P, a, b, c):
    n = P.n
    da, db, dc = P.deg(a), P.deg(b), P.deg(c)
    return _combine((1, nested_left(P, a, b, c)),
                    (sgn((da + n) * (db + dc)), cycle_right(P, nested_left(P, b, c, a), 1)),
                    (sgn((dc + n) * (da + db)), cycle_right(P, nested_left(P, c, a, b), 2)))


def check_double_jacobi(P, rng, trials=200, max_len=4):
    from .ainf import Report
    rep = Report("double-jacobi")
    for _ in range(trials):
        a, b, c = (random_word(P.gens, rng, max_len, 1) for _ in range(3))
        rep.checked += 1
        val = double_jacobiator(P, a, b, c)
        if val:
            rep.fail(inputs=[P.gens.render(w) for w in (a, b, c)],
                     lhs=str(TripleValue(P.gens, val)), rhs="0")
    return rep


def check_d_compatibility(P, rng, trials=200, max_len=4):
    """d<<r, q>> = <<dr, q>> + (-1)^{|r|+n} <<r, dq>>, with d (x) 1 + 1 (x) d on R (x) R."""
    from .ainf import Report
    rep = Report("double-d-compatibility")
    R = P.R
    for _ in range(trials):
        r, q = random_word(P.gens, rng, max_len, 1), random_word(P.gens, rng, max_len, 1)
        lhs = {}
        for (u, v), c in P.bracket_terms({r: 1}, {q: 1}).items():
            for x, y in R.d_terms({u: c}).items():
                add_term(lhs, (x, v), y)
            s = sgn(P.deg(u))
            for x, y in R.d_terms({v: c}).items():
                add_term(lhs, (u, x), s * y)
        rhs = _combine((1, P.bracket_terms(R.d_terms({r: 1}), {q: 1})),
                       (sgn(P.deg(r) + P.n), P.bracket_terms({r: 1}, R.d_terms({q: 1}))))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(inputs=[P.gens.render(r), P.gens.render(q)],
                     lhs=_render_pair(P, lhs), rhs=_render_pair(P, rhs))
    return rep


def _word_elem(P, w):
    return FreeElement(P.gens, {w: 1})


def check_leibniz(P, rng, trials=200, max_len=4):
    """{a, {b, c}} = {{a, b}, c} + (-1)^{(|a|+n)(|b|+n)} {b, {a, c}}."""
    from .ainf import Report
    rep = Report("leibniz-loday")
    L = P.loday_bracket
    n = P.n
    for _ in range(trials):
        a, b, c = (random_word(P.gens, rng, max_len, 1) for _ in range(3))
        A, B, Cc = (_word_elem(P, w) for w in (a, b, c))
        lhs = L(A, L(B, Cc))
        rhs = L(L(A, B), Cc) + sgn((P.deg(a) + n) * (P.deg(b) + n)) * L(B, L(A, Cc))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(inputs=[P.gens.render(w) for w in (a, b, c)], lhs=str(lhs), rhs=str(rhs))
    return rep


def graded_commutator(P, a, b):
    return FreeElement(P.gens, {a + b: 1}) - sgn(P.deg(a) * P.deg(b)) * FreeElement(P.gens, {b + a: 1})


def check_descends(P, rng, trials=200, max_len=4):
    """{[a, b], m} = 0 for the Loday bracket and for the action on one-form classes."""
    from .ainf import Report
    rep = Report("bracket-descends")
    for _ in range(trials):
        a, b = random_word(P.gens, rng, max_len, 1), random_word(P.gens, rng, max_len, 1)
        m = random_word(P.gens, rng, max_len, 1)
        comm = graded_commutator(P, a, b)
        w = OneFormClass(P.gens, {(random_word(P.gens, rng, max_len - 1), rng.randrange(len(P.gens))): 1})
        v1 = P.loday_bracket(comm, _word_elem(P, m))
        v2 = P.oneform_natural_bracket(comm, w)
        rep.checked += 1
        if v1 or v2:
            rep.fail(inputs=[P.gens.render(a), P.gens.render(b), P.gens.render(m), str(w)],
                     lhs=f"{v1} ; {v2}", rhs="0")
    return rep


def _random_class(P, rng, max_len):
    return OneFormClass(P.gens, {(random_word(P.gens, rng, max_len - 1), rng.randrange(len(P.gens))): 1})


def check_lie_module(P, rng, trials=200, max_len=4):
    """{{a, b}, w} = {a, {b, w}} - (-1)^{(|a|+n)(|b|+n)} {b, {a, w}} on one-form classes."""
    from .ainf import Report
    rep = Report("lie-module")
    nb = P.oneform_natural_bracket
    n = P.n
    for _ in range(trials):
        a, b = random_word(P.gens, rng, max_len, 1), random_word(P.gens, rng, max_len, 1)
        A, B = _word_elem(P, a), _word_elem(P, b)
        w = _random_class(P, rng, max_len)
        lhs = nb(P.loday_bracket(A, B), w)
        rhs = nb(A, nb(B, w)) - sgn((P.deg(a) + n) * (P.deg(b) + n)) * nb(B, nb(A, w))
        rep.checked += 1
        if lhs != rhs:
            rep.fail(inputs=[P.gens.render(a), P.gens.render(b), str(w)], lhs=str(lhs), rhs=str(rhs))
    return rep


def check_lie_morphism(P, rng, trials=200, max_len=4):
    """dbar{r, q} = {r, dbar q} and beta{r, w} = {r, beta w}."""
    from .ainf import Report
    from .cobar import beta, dbar
    rep = Report("lie-morphism")
    nb = P.oneform_natural_bracket
    for _ in range(trials):
        r, q = random_word(P.gens, rng, max_len, 1), random_word(P.gens, rng, max_len, 1)
        Rr, Q = _word_elem(P, r), _word_elem(P, q)
        w = _random_class(P, rng, max_len)
        rep.checked += 2
        lhs, rhs = dbar(P.loday_bracket(Rr, Q)), nb(Rr, dbar(Q))
        if lhs != rhs:
            rep.fail(identity="dbar", inputs=[P.gens.render(r), P.gens.render(q)], lhs=str(lhs), rhs=str(rhs))
        lhs, rhs = beta(nb(Rr, w)), P.loday_bracket(Rr, beta(w))
        if lhs != rhs:
            rep.fail(identity="beta", inputs=[P.gens.render(r), str(w)], lhs=str(lhs), rhs=str(rhs))
    return rep


def check_oneform_routes(P, rng, trials=200, max_len=4):
    """Membership of the two parts, agreement with the tensor route, and four-term vs bimodule route."""
    from .ainf import Report
    rep = Report("oneform-routes")
    for _ in range(trials):
        a = random_word(P.gens, rng, max_len, 1)
        A = _word_elem(P, a)
        om = OneForm(P.gens, {(random_word(P.gens, rng, 2), rng.randrange(len(P.gens)),
                               random_word(P.gens, rng, 2)): 1})
        mixed = P.double_bracket_oneform(A, om)
        first, second = P.double_bracket_tensor(A, map_I(om))
        w = _random_class(P, rng, max_len)
        rep.checked += 3
        if not (in_omega_left(mixed.left) and in_omega_right(mixed.right)):
            rep.fail(identity="membership", inputs=[P.gens.render(a), str(om)], lhs=str(mixed), rhs="")
        if mixed.total() != first + second:
            rep.fail(identity="tensor-route", inputs=[P.gens.render(a), str(om)],
                     lhs=str(mixed.total()), rhs=str(first + second))
        x, y = P.oneform_natural_bracket(A, w), P.oneform_natural_bracket_via_bimodule(A, w)
        if x != y:
            rep.fail(identity="four-term", inputs=[P.gens.render(a), str(w)], lhs=str(x), rhs=str(y))
    return rep


def check_against_recursive(P, rng, trials=200, max_len=4):
    """Closed double sum against the recursive derivation route."""
    from .ainf import Report
    rep = Report("closed-vs-recursive")
    for _ in range(trials):
        r, q = random_word(P.gens, rng, max_len), random_word(P.gens, rng, max_len)
        x, y = P.bracket_terms({r: 1}, {q: 1}), P.bracket_recursive_terms({r: 1}, {q: 1})
        rep.checked += 1
        if x != y:
            rep.fail(inputs=[P.gens.render(r), P.gens.render(q)], lhs=_render_pair(P, x), rhs=_render_pair(P, y))
    return rep


def compare_printed_sign(P, rng, trials=200, max_len=4):
    """Count of random pairs where the printed-sign sum equals the closed form."""
    agree = 0
    for _ in range(trials):
        r, q = random_word(P.gens, rng, max_len), random_word(P.gens, rng, max_len)
        agree += P.bracket_terms({r: 1}, {q: 1}) == P.bracket_with_printed_sign_terms({r: 1}, {q: 1})
    return agree


AXIOM_CHECKS = {
    "antisymmetry": check_antisymmetry,
    "derivation": check_derivation,
    "jacobi": check_double_jacobi,
}

ALL_CHECKS = dict(AXIOM_CHECKS, **{
    "d-compatibility": check_d_compatibility,
    "leibniz": check_leibniz,
    "descends": check_descends,
    "lie-module": check_lie_module,
    "lie-morphism": check_lie_morphism,
    "oneform-routes": check_oneform_routes,
    "closed-vs-recursive": check_against_recursive,
})


def run_checks(coalgebra, names, trials=200, seed=0, max_len=4):
    """Run the named checks with one seeded generator each; returns a list of Reports."""
    import random
    P = structure_for(coalgebra)
    out = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        out.append(ALL_CHECKS[name](P, rng, trials=trials, max_len=max_len))
    return out
