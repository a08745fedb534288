"""Graded generators, tensor words and their rational linear combinations.

A word is a tuple of generator indices into a :class:`GeneratorSet`.  Linear
combinations of words (or of tuples of words, for tensor powers) are plain
dicts mapping keys to nonzero Fractions; :class:`FreeElement` wraps the word
case with the arithmetic of the free graded algebra.

Sign convention: moving a homogeneous x past y costs (-1)^(|x||y|), where the
degrees are the generator degrees (the desuspension is already included).
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import LengthMismatch, GeneratorSetMismatch, UnknownGenerator


@dataclass(frozen=True)
class Generator:
    id: str
    degree: int
    weight: int = 1


def koszul_sign(perm, degrees):
    """Sign of rearranging graded letters into the order ``perm``.

    ``perm[i]`` is the old position of the letter that ends up in slot i.  The
    permutation is sorted by adjacent transpositions, each swap contributing
    (-1)^(|a||b|).
    """
    perm = list(perm)
    if len(perm) != len(degrees):
        raise LengthMismatch(f"permutation of length {len(perm)} vs {len(degrees)} degrees")
    if sorted(perm) != list(range(len(perm))):
        raise LengthMismatch("not a permutation")
    sign = 1
    # bubble sort back to the identity, tracking the letters being swapped
    arr = perm[:]
    n = len(arr)
    for i in range(n):
        for j in range(n - 1 - i):
            if arr[j] > arr[j + 1]:
                if degrees[arr[j]] % 2 and degrees[arr[j + 1]] % 2:
                    sign = -sign
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
    return sign


def sgn(exponent):
    return -1 if exponent % 2 else 1


# --- dict-level linear algebra helpers --------------------------------------

def add_term(target, key, coeff):
    if not coeff:
        return
    v = target.get(key, 0) + coeff
    if v:
        target[key] = v
    else:
        del target[key]


def add_into(target, other, scale=1):
    if not scale:
        return target
    for k, v in other.items():
        add_term(target, k, scale * v)
    return target


def lin_sum(*parts):
    out = {}
    for p in parts:
        add_into(out, p)
    return out


def scaled(elem, c):
    if not c:
        return {}
    return {k: v * c for k, v in elem.items()}


class GeneratorSet:
    """An ordered collection of generators; order fixes the canonical word order."""

    def __init__(self, generators):
        self.generators = list(generators)
        self.index = {}
        for i, g in enumerate(self.generators):
            if g.id in self.index:
                raise ValueError(f"duplicate generator id {g.id!r}")
            self.index[g.id] = i
        self.degrees = tuple(g.degree for g in self.generators)
        self.weights = tuple(g.weight for g in self.generators)
        self._word_cache = {}
        self._block_cache = {}
        pos = [g.degree / g.weight for g in self.generators if g.weight > 0]
        self._max_ratio = max(pos) if pos else 0
        self.has_weightless = any(g.weight == 0 for g in self.generators)
        for g in self.generators:
            if g.weight < 0 or (g.weight == 0 and g.degree >= 0):
                raise ValueError("weight-0 generators must have negative degree")

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, GeneratorSet) and self.generators == other.generators

    def __hash__(self):
        return hash(tuple(self.generators))

    def lookup(self, gid):
        try:
            return self.index[gid]
        except KeyError:
            raise UnknownGenerator(f"unknown generator {gid!r}") from None

    def degree(self, word):
        d = self.degrees
        return sum(d[i] for i in word)

    def weight(self, word):
        w = self.weights
        return sum(w[i] for i in word)

    def sort_key(self, word):
        return (self.weight(word), len(word), word)

    def words_of_weight(self, weight):
        """All words of exactly the given total weight, canonically ordered."""
        if self.has_weightless:
            raise ValueError("infinitely many words per weight; give a degree as well")
        if weight in self._word_cache:
            return self._word_cache[weight]
        out = []
        if weight == 0:
            out = [()]
        else:
            for i, w in enumerate(self.weights):
                if w <= weight:
                    for tail in self.words_of_weight(weight - w):
                        out.append((i,) + tail)
        out.sort(key=self.sort_key)
        self._word_cache[weight] = out
        return out

    def words(self, weight, degree=None, min_length=0):
        if degree is None:
            ws = self.words_of_weight(weight)
        else:
            ws = self.words_of_bidegree(weight, degree)
        return [w for w in ws if len(w) >= min_length and (degree is None or self.degree(w) == degree)]

    def words_of_bidegree(self, weight, degree):
        """Words of the given weight and degree.

        Finite even with weight-0 letters: those have negative degree, while the
        degree reachable with the remaining weight is bounded above.
        """
        key = (weight, degree)
        if key in self._block_cache:
            return self._block_cache[key]
        out = []
        if weight < 0 or degree > self._max_ratio * weight:
            out = []
        else:
            if weight == 0 and degree == 0:
                out.append(())
            for i, g in enumerate(self.generators):
                if g.weight <= weight:
                    for tail in self.words_of_bidegree(weight - g.weight, degree - g.degree):
                        out.append((i,) + tail)
            out.sort(key=self.sort_key)
        self._block_cache[key] = out
        return out

    def render(self, word):
        if not word:
            return "1"
        return "[" + "|".join(self.generators[i].id for i in word) + "]"


def is_homogeneous(gens, elem):
    return len({(gens.degree(w), gens.weight(w)) for w in elem}) <= 1


def render_coeff(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_combination(terms, render_key, order_key=None):
    if not terms:
        return "0"
    keys = sorted(terms, key=order_key) if order_key else list(terms)
    parts = []
    for k in keys:
        c = terms[k]
        body = render_key(k)
        if c == 1:
            s = body
        elif c == -1:
            s = "-" + body
        else:
            s = f"{render_coeff(c)}*{body}"
        parts.append(s)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def concat_all(words_lists):
    """Concatenate one word from each list in every possible way."""
    for combo in product(*words_lists):
        yield sum(combo, ())


class FreeElement:
    """A rational linear combination of words in a free graded algebra."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens, terms=None):
        self.gens = gens
        self.terms = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            add_term(self.terms, w, Fraction(c))

    @classmethod
    def unit(cls, gens, coeff=1):
        return cls(gens, {(): coeff})

    @classmethod
    def word(cls, gens, word, coeff=1):
        word = tuple(gens.lookup(g) if isinstance(g, str) else g for g in word)
        return cls(gens, {word: coeff})

    def _check(self, other):
        if not isinstance(other, FreeElement):
            raise TypeError("expected a FreeElement")
        if other.gens is not self.gens and other.gens != self.gens:
            raise GeneratorSetMismatch("elements live over different generator sets")

    def __add__(self, other):
        self._check(other)
        return FreeElement(self.gens, lin_sum(self.terms, other.terms))

    def __sub__(self, other):
        self._check(other)
        return FreeElement(self.gens, add_into(dict(self.terms), other.terms, -1))

    def __neg__(self):
        return FreeElement(self.gens, scaled(self.terms, -1))

    def __rmul__(self, c):
        return FreeElement(self.gens, scaled(self.terms, Fraction(c)))

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            return multiply(self, other)
        return FreeElement(self.gens, scaled(self.terms, Fraction(other)))

    def __eq__(self, other):
        if isinstance(other, FreeElement):
            return self.gens == other.gens and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def canonical(self):
        """Terms sorted graded-lexicographically (weight, length, letters)."""
        return sorted(self.terms.items(), key=lambda kv: self.gens.sort_key(kv[0]))

    def normalize(self):
        return FreeElement(self.gens, dict(self.canonical()))

    def degree(self):
        degs = {self.gens.degree(w) for w in self.terms}
        if len(degs) != 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def __str__(self):
        return render_combination(self.terms, self.gens.render, self.gens.sort_key)

    __repr__ = __str__


def multiply_terms(a, b):
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            add_term(out, w1 + w2, c1 * c2)
    return out


def multiply(a, b):
    """Concatenation product of two free elements."""
    a._check(b)
    return FreeElement(a.gens, multiply_terms(a.terms, b.terms))
