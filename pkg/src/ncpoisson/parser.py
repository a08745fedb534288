"""Text grammar for cobar elements, cochains, forms and polyvector fields.

Every canonical rendering (``str`` of the value) parses back to the same value.

    word        2*[s^-1 m(v1)|s^-1 m(v2)] - 1/3*[s^-1 m(v1)] + 1
    cochain     (m(v1), m(v2) ; m(v1,v2)) - 2*( ; e)
    form        x^2*y*z dx - 3/2 dy^dz
    polyvector  x d/dx ^ d/dy + y*z
"""
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, UnknownGenerator
from .hkr import PolyForm, PolyVector, variable_names

KINDS = ("word", "cochain", "form", "polyvector")

_INT = re.compile(r"\d+")
_VAR = re.compile(r"x\d+|[xyz]")
_FORM_DIFF = re.compile(r"d(x\d+|[xyz])(?![\w/])")
_VEC_DIFF = re.compile(r"d/d(x\d+|[xyz])")


@dataclass
class Expression:
    source: str
    kind: str
    value: object

    def __str__(self):
        return str(self.value)


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch):
        if not self.eat(ch):
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)

    def match(self, pattern):
        self.skip()
        m = pattern.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m

    def at_end(self):
        return self.peek() == ""

    def coefficient(self):
        """An unsigned rational p or p/q, or None if no digits follow."""
        m = self.match(_INT)
        if not m:
            return None
        num = int(m.group())
        if self.peek() == "/" and not self.text.startswith("/d", self.pos):
            start = self.pos
            self.pos += 1
            d = self.match(_INT)
            if not d:
                raise ParseError("expected a denominator", start + 1)
            if int(d.group()) == 0:
                raise ParseError("zero denominator", d.start())
            return Fraction(num, int(d.group()))
        return Fraction(num)

    def until(self, stops):
        """Raw text up to the first stop character outside parentheses."""
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0 and ch in stops:
                    break
                depth -= 1
            elif depth == 0 and ch in stops:
                break
            self.pos += 1
        return self.text[start:self.pos], start


def _sum_of_terms(sc, term):
    """expr := [-] term ((+|-) term)* ; returns the list of (sign, term value)."""
    out = []
    sign = -1 if sc.eat("-") else 1
    while True:
        out.append((sign, term(sc)))
        if sc.eat("+"):
            sign = 1
        elif sc.eat("-"):
            sign = -1
        elif sc.at_end():
            return out
        else:
            raise ParseError(f"unexpected {sc.peek()!r}", sc.pos)


# --- cobar words ----------------------------------------------------------------

def _resolve_letter(gens, raw, pos):
    text = " ".join(raw.split())
    if not text:
        raise ParseError("empty letter", pos)
    text = re.sub(r"^s\^-1\s*", "s^-1 ", text)
    for cand in (text, "s^-1 " + text):
        if cand in gens.index:
            return gens.index[cand]
    raise UnknownGenerator(f"unknown letter {raw.strip()!r} at position {pos}")


def _word_term(gens):
    def term(sc):
        coeff = sc.coefficient()
        if coeff is not None and not sc.eat("*"):
            return coeff, ()
        if coeff is None:
            coeff = Fraction(1)
        elif sc.match(re.compile(r"1(?![\d/])")):
            return coeff, ()
        if not sc.eat("["):
            raise ParseError("expected a word '[...]' or '1'", sc.pos)
        if sc.eat("]"):
            raise ParseError("empty brackets; write the unit as 1", sc.pos - 1)
        # check the whole word's shape before resolving any letter
        raws = []
        while True:
            raw, start = sc.until("|]")
            if not raw.strip():
                raise ParseError("empty letter", start)
            raws.append((raw, start))
            if sc.pos >= len(sc.text):
                raise ParseError("unterminated word", sc.pos)
            ch = sc.text[sc.pos]
            sc.pos += 1
            if ch == "]":
                break
        return coeff, tuple(_resolve_letter(gens, raw, start) for raw, start in raws)
    return term


def parse_word(text, gens):
    from .tensor import FreeElement
    sc = _Scanner(text)
    if sc.at_end():
        raise ParseError("empty expression", 0)
    terms = {}
    for sign, (c, w) in _sum_of_terms(sc, _word_term(gens)):
        terms[w] = terms.get(w, 0) + sign * c
    return FreeElement(gens, terms)


# --- cochains -------------------------------------------------------------------

def _basis_index(C, raw, pos):
    text = " ".join(raw.split())
    if not text:
        raise ParseError("empty basis element", pos)
    for i, b in enumerate(C.basis):
        if b.id == text:
            return i
    raise UnknownGenerator(f"unknown basis element {text!r} at position {pos}")


def _cochain_term(C):
    def term(sc):
        coeff = sc.coefficient()
        if coeff is not None:
            sc.expect("*")
        else:
            coeff = Fraction(1)
        sc.expect("(")
        inputs = []
        raw, start = sc.until(";")
        if raw.strip():
            for piece, off in _split_top(raw):
                inputs.append(_basis_index(C, piece, start + off))
        sc.expect(";")
        raw, start = sc.until(")")
        out = _basis_index(C, raw, start)
        sc.expect(")")
        return coeff, (tuple(inputs), out)
    return term


def _split_top(raw):
    """Split on commas outside parentheses, keeping offsets."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(raw):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((raw[start:i], start))
            start = i + 1
    parts.append((raw[start:], start))
    return parts


def parse_cochain(text, C):
    from .gerstenhaber import Cochain
    sc = _Scanner(text)
    if sc.at_end():
        raise ParseError("empty expression", 0)
    if sc.peek() == "0":
        sc.pos += 1
        if sc.at_end():
            return Cochain(C)
        raise ParseError("unexpected text after 0", sc.pos)
    terms = {}
    for sign, (c, k) in _sum_of_terms(sc, _cochain_term(C)):
        terms[k] = terms.get(k, 0) + sign * c
    return Cochain(C, terms)


# --- forms and polyvectors ------------------------------------------------------------

def _var_index(names, m, name, pos):
    if name not in names:
        raise UnknownGenerator(f"variable {name!r} at position {pos} is not one of {names}")
    return names.index(name)


def _poly_term(m, diff_pattern):
    names = variable_names(m)

    def term(sc):
        start = sc.pos
        coeff = sc.coefficient()
        exps = [0] * m
        have_mono = False
        if coeff is not None and sc.eat("*"):
            if not _VAR.match(sc.text, sc.pos) or _FORM_DIFF.match(sc.text, sc.pos):
                raise ParseError("expected a variable after '*'", sc.pos)
        if coeff is None:
            coeff = Fraction(1)
        while True:
            sc.skip()
            if diff_pattern.match(sc.text, sc.pos) or _VEC_DIFF.match(sc.text, sc.pos):
                break
            m_var = sc.match(_VAR)
            if not m_var:
                break
            i = _var_index(names, m, m_var.group(), m_var.start())
            power = 1
            if sc.eat("^"):
                p = sc.match(_INT)
                if not p:
                    raise ParseError("expected an exponent", sc.pos)
                power = int(p.group())
            exps[i] += power
            have_mono = True
            if not sc.eat("*"):
                break
            if not _VAR.match(sc.text, sc.pos):
                raise ParseError("expected a variable after '*'", sc.pos)
        indices = []
        d = sc.match(diff_pattern)
        while d:
            indices.append(_var_index(names, m, d.group(1), d.start()))
            if not sc.eat("^"):
                break
            d = sc.match(diff_pattern)
            if not d:
                raise ParseError("expected a differential after '^'", sc.pos)
        if sc.pos == start or not (have_mono or indices or sc.text[start:sc.pos].strip()):
            raise ParseError("expected a term", sc.pos)
        return coeff, tuple(exps), indices
    return term


def _parse_poly(text, m, cls, diff_pattern):
    sc = _Scanner(text)
    if sc.at_end():
        raise ParseError("empty expression", 0)
    out = cls.zero(m)
    for sign, (c, exps, idx) in _sum_of_terms(sc, _poly_term(m, diff_pattern)):
        out = out + cls.monomial(m, exps, idx, sign * c)
    return out


def parse_form(text, m=3):
    return _parse_poly(text, m, PolyForm, _FORM_DIFF)


def parse_polyvector(text, m=3):
    return _parse_poly(text, m, PolyVector, _VEC_DIFF)


def parse_expression(text, kind, context=None):
    """Parse ``text`` as one of KINDS.

    ``context`` is the generator set of the cobar algebra for words, the
    coalgebra for cochains, and the number of variables for forms and
    polyvectors (default 3).
    """
    if kind == "word":
        value = parse_word(text, context)
    elif kind == "cochain":
        value = parse_cochain(text, context)
    elif kind == "form":
        value = parse_form(text, 3 if context is None else context)
    elif kind == "polyvector":
        value = parse_polyvector(text, 3 if context is None else context)
    else:
        raise ParseError(f"unknown expression kind {kind!r}; expected one of {KINDS}")
    return Expression(text, kind, value)
