"""Graded algebras given by generators and homogeneous relations.

Used to build the finite-dimensional dual algebras of the examples: each
graded piece is a quotient of the word space by the two-sided ideal, and a
chosen list of basis vectors gives coordinates for every word.
"""
from fractions import Fraction
from itertools import product

from .errors import BadParameters, DimensionMismatch
from .linalg import Reducer, solve_in_span


def all_words(nvars, length):
    return list(product(range(nvars), repeat=length))


class GradedQuotientAlgebra:
    """T(V)/(relations), truncated at ``max_degree``.

    relations: homogeneous vectors ``{word: coeff}`` (words are int tuples).
    basis: optional ``{degree: [vector, ...]}``; degrees not listed get a
    monomial basis picked greedily in word order.
    """

    def __init__(self, nvars, relations, max_degree, basis=None):
        self.nvars = nvars
        self.max_degree = max_degree
        self.relations = [dict(r) for r in relations if r]
        self.reducers = {}
        self.basis = {}
        self._coords = {}
        basis = basis or {}
        for k in range(max_degree + 1):
            ideal = self._ideal(k)
            red = Reducer(ideal)
            self.reducers[k] = red
            dim = nvars ** k - red.rank
            if k in basis:
                vecs = [dict(v) for v in basis[k]]
                nfs = [red.reduce(v) for v in vecs]
                if len(vecs) != dim or Reducer(nfs).rank != dim:
                    raise BadParameters(
                        f"supplied degree-{k} basis does not span the quotient "
                        f"(quotient dim {dim}, {len(vecs)} vectors, rank {Reducer(nfs).rank})")
            else:
                vecs, nfs = [], []
                span = Reducer([])
                for w in all_words(nvars, k):
                    nf = red.reduce({w: Fraction(1)})
                    if nf and not span.contains(nf):
                        vecs.append({w: Fraction(1)})
                        nfs.append(nf)
                        span = Reducer(nfs)
            self.basis[k] = vecs
            self._coords[k] = nfs

    def _ideal(self, k):
        rows = []
        for r in self.relations:
            rl = len(next(iter(r)))
            if rl > k:
                continue
            for left_len in range(k - rl + 1):
                for u in all_words(self.nvars, left_len):
                    for w in all_words(self.nvars, k - rl - left_len):
                        rows.append({u + key + w: c for key, c in r.items()})
        return rows

    def dim(self, k):
        return len(self.basis.get(k, []))

    def dims(self):
        return [self.dim(k) for k in range(self.max_degree + 1)]

    def coordinates(self, vec):
        """Coordinates of a homogeneous word vector in the chosen basis."""
        if not vec:
            return {}
        k = len(next(iter(vec)))
        if k > self.max_degree:
            raise DimensionMismatch(f"degree {k} beyond truncation {self.max_degree}")
        nf = self.reducers[k].reduce(vec)
        if not nf:
            return {}
        sol = solve_in_span(self._coords[k], nf)
        if sol is None:
            raise DimensionMismatch("vector not expressible in the chosen basis")
        return {i: c for i, c in sol.items() if c}

    def product_coords(self, deg_a, i, deg_b, j):
        """Coordinates of basis[deg_a][i] * basis[deg_b][j]."""
        if deg_a + deg_b > self.max_degree:
            return {}
        prod = {}
        for w1, c1 in self.basis[deg_a][i].items():
            for w2, c2 in self.basis[deg_b][j].items():
                prod[w1 + w2] = prod.get(w1 + w2, 0) + c1 * c2
        prod = {w: c for w, c in prod.items() if c}
        return self.coordinates(prod)

    def vector_product(self, *vecs):
        out = {(): Fraction(1)}
        for v in vecs:
            nxt = {}
            for w1, c1 in out.items():
                for w2, c2 in v.items():
                    nxt[w1 + w2] = nxt.get(w1 + w2, 0) + c1 * c2
            out = {w: c for w, c in nxt.items() if c}
        return out
