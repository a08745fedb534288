"""Differential forms and polyvector fields with polynomial coefficients.

Both live on k^m with coordinates x_1..x_m (printed x, y, z when m <= 3).  A
term is keyed by ``(exponents, indices)``: the monomial exponent tuple and the
strictly increasing tuple of dx (or d/dx) indices.

Contraction: a basis vector d/dx_i removes the leftmost dx_i slot of a form
with sign (-1)^(slots before it), and iota of a wedge of basis vectors
applies the rightmost vector first, so iota_{a^b} = iota_a . iota_b.

``psi`` contracts into the volume form w = dx_1^...^dx_m, ``bv_delta`` is
psi^-1 . d . psi, and ``hkr_bracket`` is the contraction formula
{a, b} = (-1)^((m-|a|-1)(m-|b|)) iota_eta da with eta = psi^-1(db).
"""
from collections import defaultdict
from fractions import Fraction

from .errors import DimensionMismatch
from .linalg import Reducer, solve_in_span
from .tensor import render_coeff, sgn


def variable_names(m):
    if m <= 3:
        return ["x", "y", "z"][:m]
    return [f"x{i + 1}" for i in range(m)]


def _merge(a, b):
    """Sign and sorted union of two increasing index tuples, or (0, None)."""
    if set(a) & set(b):
        return 0, None
    # count inversions between the two blocks
    inv = sum(1 for i in a for j in b if i > j)
    return sgn(inv), tuple(sorted(a + b))


def _add(terms, key, c):
    if not c:
        return
    v = terms.get(key, 0) + c
    if v:
        terms[key] = v
    else:
        terms.pop(key, None)


class _Graded:
    """Shared arithmetic for forms and polyvectors."""

    kind = ""

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {}
        for (exps, idx), c in (terms or {}).items():
            exps, idx = tuple(exps), tuple(idx)
            if len(exps) != m or any(e < 0 for e in exps):
                raise DimensionMismatch(f"bad exponent tuple {exps} for m={m}")
            if list(idx) != sorted(set(idx)) or any(not 0 <= i < m for i in idx):
                raise DimensionMismatch(f"index set {idx} is not increasing in 0..{m - 1}")
            _add(self.terms, (exps, idx), Fraction(c))

    @classmethod
    def zero(cls, m):
        return cls(m)

    @classmethod
    def monomial(cls, m, exps, indices=(), coeff=1):
        """coeff * x^exps times the wedge of ``indices`` in the given order."""
        indices = tuple(indices)
        order = sorted(range(len(indices)), key=lambda k: indices[k])
        if len(set(indices)) != len(indices):
            return cls(m)
        inv = sum(1 for a in range(len(order)) for b in range(a + 1, len(order)) if order[a] > order[b])
        return cls(m, {(tuple(exps), tuple(sorted(indices))): sgn(inv) * Fraction(coeff)})

    def _same(self, other):
        if not isinstance(other, type(self)):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.m != self.m:
            raise DimensionMismatch(f"var_count {self.m} vs {other.m}")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add(out, k, c)
        return type(self)(self.m, out)

    def __neg__(self):
        return type(self)(self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return type(self)(self.m, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(Fraction(c))

    def __eq__(self, other):
        return isinstance(other, type(self)) and self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self):
        return {len(idx) for (_, idx) in self.terms}

    @property
    def degree(self):
        """The common degree of all terms (0 for the zero element)."""
        ds = self.degrees()
        if len(ds) > 1:
            raise DimensionMismatch(f"inhomogeneous element with degrees {sorted(ds)}")
        return ds.pop() if ds else 0

    def homogeneous_parts(self):
        parts = defaultdict(dict)
        for (e, idx), c in self.terms.items():
            parts[len(idx)][(e, idx)] = c
        return {k: type(self)(self.m, v) for k, v in sorted(parts.items())}

    def wedge(self, other):
        self._same(other)
        out = {}
        for (e1, i1), c1 in self.terms.items():
            for (e2, i2), c2 in other.terms.items():
                s, idx = _merge(i1, i2)
                if s:
                    _add(out, (tuple(a + b for a, b in zip(e1, e2)), idx), s * c1 * c2)
        return type(self)(self.m, out)

    def __xor__(self, other):
        return self.wedge(other)

    # --- text -----------------------------------------------------------------
    def _slot(self, i):
        raise NotImplementedError

    def _joiner(self):
        raise NotImplementedError

    def _render_term(self, exps, idx, c):
        names = variable_names(self.m)
        mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
        diff = self._joiner().join(self._slot(i) for i in idx)
        if mono and c not in (1, -1):
            head = f"{render_coeff(c)}*{mono}"
        elif mono:
            head = ("-" if c == -1 else "") + mono
        elif c in (1, -1) and diff:
            head = "-" if c == -1 else ""
        else:
            head = render_coeff(c)
        if not diff:
            return head
        return f"{head} {diff}" if head not in ("", "-") else head + diff

    def sort_key(self, key):
        exps, idx = key
        return (len(idx), idx, -sum(exps), tuple(-e for e in exps))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [self._render_term(e, i, self.terms[(e, i)])
                 for (e, i) in sorted(self.terms, key=self.sort_key)]
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"{type(self).__name__}(m={self.m}, {self})"


class PolyForm(_Graded):
    """Polynomial differential form: sum of c * x^e dx_I."""

    kind = "form"

    def _slot(self, i):
        return "d" + variable_names(self.m)[i]

    def _joiner(self):
        return "^"


class PolyVector(_Graded):
    """Polynomial polyvector field: sum of c * x^e d/dx_I."""

    kind = "polyvector"

    def _slot(self, i):
        return "d/d" + variable_names(self.m)[i]

    def _joiner(self):
        return " ^ "


def volume_form(m):
    return PolyForm(m, {((0,) * m, tuple(range(m))): 1})


def de_rham_d(a):
    out = {}
    for (e, idx), c in a.terms.items():
        for j, ej in enumerate(e):
            if not ej or j in idx:
                continue
            s, new = _merge((j,), idx)
            exps = e[:j] + (ej - 1,) + e[j + 1:]
            _add(out, (exps, new), s * ej * c)
    return PolyForm(a.m, out)


def _contract_basis(i, idx):
    """iota_{d/dx_i} on dx_idx: (sign, remaining indices) or (0, None)."""
    if i not in idx:
        return 0, None
    pos = idx.index(i)
    return sgn(pos), idx[:pos] + idx[pos + 1:]


def contract(xi, a):
    if not isinstance(xi, PolyVector) or not isinstance(a, PolyForm):
        raise TypeError("contract expects (PolyVector, PolyForm)")
    if xi.m != a.m:
        raise DimensionMismatch(f"var_count {xi.m} vs {a.m}")
    out = {}
    for (e1, vidx), c1 in xi.terms.items():
        for (e2, fidx), c2 in a.terms.items():
            s, rest = 1, fidx
            for i in reversed(vidx):
                t, rest = _contract_basis(i, rest)
                s *= t
                if not s:
                    break
            if s:
                _add(out, (tuple(p + q for p, q in zip(e1, e2)), rest), s * c1 * c2)
    return PolyForm(a.m, out)


def psi(xi):
    return contract(xi, volume_form(xi.m))


def psi_inverse(a):
    """The unique polyvector with psi(xi) = a."""
    m = a.m
    full = tuple(range(m))
    out = {}
    for (e, idx), c in a.terms.items():
        comp = tuple(i for i in full if i not in idx)
        # psi(d/dx_comp) = s * dx_idx, so the preimage of dx_idx is s * d/dx_comp
        (_, got), s = next(iter(psi(PolyVector(m, {((0,) * m, comp): 1})).terms.items()))
        assert got == idx
        _add(out, (e, comp), c / s)
    return PolyVector(m, out)


def bv_delta(xi):
    return psi_inverse(de_rham_d(psi(xi)))


def schouten_bracket(a, b):
    """{a, b}_G as the deviation of bv_delta from being a derivation."""
    out = PolyVector.zero(a.m)
    for p, ap in a.homogeneous_parts().items():
        dev = bv_delta(ap.wedge(b)) - bv_delta(ap).wedge(b) - sgn(p) * ap.wedge(bv_delta(b))
        out = out + sgn(p) * dev
    return out


def vector_field_bracket(xi, eta):
    """Classical commutator [xi, eta] of two vector fields, as an independent oracle."""
    def apply(field, f):
        # field acting on a polynomial (degree-0 form) as a derivation
        out = {}
        for (e1, (i,)), c1 in field.terms.items():
            for (e2, _), c2 in f.terms.items():
                if e2[i]:
                    exps = tuple(p + q for p, q in zip(e1, e2))
                    exps = exps[:i] + (exps[i] - 1,) + exps[i + 1:]
                    _add(out, (exps, ()), c1 * c2 * e2[i])
        return PolyForm(f.m, out)

    m = xi.m
    out = {}
    for j in range(m):
        def comp(field):
            return PolyForm(m, {(e, ()): c for (e, idx), c in field.terms.items() if idx == (j,)})
        val = apply(xi, comp(eta)) - apply(eta, comp(xi))
        for (e, _), c in val.terms.items():
            _add(out, (e, (j,)), c)
    return PolyVector(m, out)


def _bracket_homogeneous(a, b):
    m = a.m
    eta = psi_inverse(de_rham_d(b))
    return sgn((m - a.degree - 1) * (m - b.degree)) * contract(eta, de_rham_d(a))


def hkr_bracket(a, b):
    if a.m != b.m:
        raise DimensionMismatch(f"var_count {a.m} vs {b.m}")
    out = PolyForm.zero(a.m)
    for ap in a.homogeneous_parts().values():
        for bp in b.homogeneous_parts().values():
            out = out + _bracket_homogeneous(ap, bp)
    return out


def lie_degree(a):
    """Degree in the Lie grading: form degree minus m, so the bracket has degree 0 mod 2."""
    return a.degree - a.m


def plain_jacobiator(a, b, c):
    """{{a,b},c} - {a,{b,c}} + {b,{a,c}} with no Koszul sign."""
    br = hkr_bracket
    return br(br(a, b), c) - br(a, br(b, c)) + br(b, br(a, c))


def jacobiator(a, b, c):
    """{{a,b},c} - {a,{b,c}} + (-1)^(|a||b|) {b,{a,c}} in the Lie grading.

    For the triples where the sign is +1 (all three 1-forms on k^3, say) this
    is the unsigned combination; for mixed degrees only the signed version is
    always exact.
    """
    if a.m != b.m or b.m != c.m:
        raise DimensionMismatch("forms on different spaces")
    br = hkr_bracket
    s = sgn(lie_degree(a) * lie_degree(b))
    return br(br(a, b), c) - br(a, br(b, c)) + s * br(b, br(a, c))


# --- exactness on finite blocks ------------------------------------------------

def _multidegree(exps, idx):
    return tuple(e + (1 if i in idx else 0) for i, e in enumerate(exps))


def _block_sources(m, md, degree):
    """Basis keys of degree-``degree`` forms whose d lands in multidegree ``md``.

    d preserves exponent-plus-dx multidegree, so this block is finite.
    """
    from itertools import combinations
    keys = []
    for idx in combinations(range(m), degree):
        exps = tuple(md[i] - (1 if i in idx else 0) for i in range(m))
        if all(e >= 0 for e in exps):
            keys.append((exps, idx))
    return keys


def _blocks(y):
    groups = defaultdict(dict)
    for (e, idx), c in y.terms.items():
        groups[_multidegree(e, idx)][(e, idx)] = c
    return groups


def exact_primitive(y):
    """Some x with d x = y, or None when y is not exact.

    Works one multidegree block at a time; each block is a finite linear
    system solved exactly.
    """
    m = y.m
    prim = PolyForm.zero(m)
    for p, yp in y.homogeneous_parts().items():
        if p == 0:
            return None
        for md, part in _blocks(yp).items():
            sources = _block_sources(m, md, p - 1)
            images = [de_rham_d(PolyForm(m, {k: 1})).terms for k in sources]
            coeffs = solve_in_span(images, part)
            if coeffs is None:
                return None
            prim = prim + PolyForm(m, {sources[k]: v for k, v in coeffs.items()})
    return prim


def is_exact(y):
    return exact_primitive(y) is not None


def class_modulo_exact(y):
    """Normal form of y in Omega^n / d Omega^(n-1), blockwise; zero iff y is exact."""
    m = y.m
    out = {}
    for p, yp in y.homogeneous_parts().items():
        for md, part in _blocks(yp).items():
            sources = _block_sources(m, md, p - 1) if p else []
            red = Reducer([de_rham_d(PolyForm(m, {k: 1})).terms for k in sources])
            for k, c in red.reduce(part).items():
                _add(out, k, c)
    return PolyForm(m, out)


# --- random inputs ---------------------------------------------------------------

def random_form(m, rng, degree=None, max_poly=2, max_terms=3, coeff_range=3):
    from itertools import combinations
    if degree is None:
        degree = rng.randint(0, m)
    idx_choices = list(combinations(range(m), degree))
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * m
        for _ in range(rng.randint(0, max_poly)):
            exps[rng.randrange(m)] += 1
        c = rng.randint(-coeff_range, coeff_range)
        _add(terms, (tuple(exps), rng.choice(idx_choices)), Fraction(c))
    return PolyForm(m, terms)


def random_polyvector(m, rng, degree=None, **kw):
    f = random_form(m, rng, degree, **kw)
    return PolyVector(m, f.terms)


# --- the worked counterexample on k^3 ---------------------------------------------

def worked_example():
    """The forms alpha = x^2yz dx, beta = xyz dy, gamma = xz dz on k^3."""
    alpha = PolyForm(3, {((2, 1, 1), (0,)): 1})
    beta = PolyForm(3, {((1, 1, 1), (1,)): 1})
    gamma = PolyForm(3, {((1, 0, 1), (2,)): 1})
    return alpha, beta, gamma


def jacobiator_report():
    """Every quantity of the worked counterexample, computed from scratch."""
    a, b, c = worked_example()
    br = hkr_bracket
    ab_c = br(br(a, b), c)
    a_bc = br(a, br(b, c))
    b_ac = br(b, br(a, c))
    jac = ab_c - a_bc + b_ac
    potential = PolyForm(3, {((3, 1, 2), ()): 1})
    return {
        "psi_inv_d_alpha": psi_inverse(de_rham_d(a)),
        "psi_inv_d_beta": psi_inverse(de_rham_d(b)),
        "psi_inv_d_gamma": psi_inverse(de_rham_d(c)),
        "{{a,b},c}": ab_c,
        "{a,{b,c}}": a_bc,
        "{b,{a,c}}": b_ac,
        "jacobiator": jac,
        "d(x^3*y*z^2)": de_rham_d(potential),
        "primitive": exact_primitive(jac),
    }


# --- randomized property suites ---------------------------------------------------

def _report(name):
    from .ainf import Report
    return Report(name)


def check_properties(trials=200, seed=0, ms=(1, 2, 3)):
    """d^2, Delta^2, psi inverse, the contraction law, Schouten vs commutator, and
    the bracket identity d{a,b} = (-1)^(m-|a|-1) d iota_xi db = psi{xi, eta}_G."""
    import random
    rng = random.Random(f"{seed}:hkr-properties")
    names = ["d^2", "delta^2", "psi-inverse", "contraction-law", "schouten-vs-commutator",
             "schouten-leibniz", "bracket-lemma", "bracket-vs-schouten"]
    reps = {n: _report(n) for n in names}

    def record(name, ok, *inputs):
        reps[name].checked += 1
        if not ok:
            reps[name].fail(inputs=[str(x) for x in inputs])

    for _ in range(trials):
        m = rng.choice(ms)
        f, g = random_form(m, rng), random_form(m, rng)
        a, b, c = (random_polyvector(m, rng) for _ in range(3))
        record("d^2", not de_rham_d(de_rham_d(f)), f)
        record("delta^2", not bv_delta(bv_delta(a)), a)
        record("psi-inverse", psi(psi_inverse(f)) == f and psi_inverse(psi(a)) == a, f, a)
        record("contraction-law", contract(a.wedge(b), f) == contract(a, contract(b, f)), a, b, f)
        u, v = random_polyvector(m, rng, 1), random_polyvector(m, rng, 1)
        # on vector fields the BV formula gives minus the commutator
        record("schouten-vs-commutator", schouten_bracket(u, v) == -vector_field_bracket(u, v), u, v)
        p, q = a.degree, b.degree
        lhs = schouten_bracket(a, b.wedge(c))
        rhs = schouten_bracket(a, b).wedge(c) + sgn((p - 1) * q) * b.wedge(schouten_bracket(a, c))
        record("schouten-leibniz", lhs == rhs, a, b, c)
        xi, eta = psi_inverse(de_rham_d(f)), psi_inverse(de_rham_d(g))
        dbr = de_rham_d(hkr_bracket(f, g))
        record("bracket-lemma",
               dbr == sgn(m - f.degree - 1) * de_rham_d(contract(xi, de_rham_d(g))), f, g)
        record("bracket-vs-schouten", dbr == psi(schouten_bracket(xi, eta)), f, g)
    return list(reps.values())


def check_jacobiator_exactness(trials=100, seed=0, ms=(2, 3)):
    """The jacobiator of random form triples has a primitive and vanishes modulo exact forms."""
    import random
    rng = random.Random(f"{seed}:jacobiator-exact")
    primitive, quotient = _report("jacobiator-primitive"), _report("jacobiator-class")
    for _ in range(trials):
        m = rng.choice(ms)
        a, b, c = (random_form(m, rng) for _ in range(3))
        j = jacobiator(a, b, c)
        x = exact_primitive(j)
        primitive.checked += 1
        if x is None or de_rham_d(x) != j:
            primitive.fail(inputs=[str(a), str(b), str(c)], lhs=str(j), rhs="exact")
        quotient.checked += 1
        cls = class_modulo_exact(j)
        if cls:
            quotient.fail(inputs=[str(a), str(b), str(c)], lhs=str(cls), rhs="0")
    return [primitive, quotient]
