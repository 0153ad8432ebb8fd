"""The free associative algebra K<x1, ..., xn>.

Words are tuples of 1-based generator indices; ``()`` is the unit monomial.
A :class:`Polynomial` is an immutable map from words to nonzero scalars.
Iteration and printing use degree-lexicographic order with x1 < x2 < ...,
so the highest homogeneous part is a suffix of the term list.
"""

from __future__ import annotations

import enum
import math
from collections import defaultdict
from typing import Iterable, Mapping, Tuple

from .errors import ArityMismatch, FieldMismatch, NotHomogeneous, ZeroPolynomial
from .scalars import QQ, Field

Word = Tuple[int, ...]

# degree of the zero polynomial; compares below every natural number
DEG_ZERO = -math.inf


def deglex_key(w: Word):
    return (len(w), w)


def mdeg(w: Word, nvars: int) -> tuple:
    counts = [0] * nvars
    for i in w:
        counts[i - 1] += 1
    return tuple(counts)


def words_of_length(length: int, nvars: int = 2):
    """All words of the given length, in lexicographic order."""
    if length == 0:
        yield ()
        return
    for w in words_of_length(length - 1, nvars):
        for i in range(1, nvars + 1):
            yield w + (i,)


class Polynomial:
    __slots__ = ("terms", "nvars", "field", "_hash")

    def __init__(self, terms: Mapping[Word, object] | Iterable = (), nvars: int = 2, field: Field = QQ):
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            w = tuple(w)
            for i in w:
                if not 1 <= i <= nvars:
                    raise ArityMismatch(f"generator x{i} outside 1..{nvars}")
            c = field(c)
            if w in clean:
                c = clean[w] + c
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        self.terms = clean
        self.nvars = nvars
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int, field: Field) -> Polynomial:
        # terms must already be clean: coerced, no zero values
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p.field = field
        p._hash = None
        return p

    @classmethod
    def gen(cls, i: int, nvars: int = 2, field: Field = QQ) -> Polynomial:
        return cls({(i,): 1}, nvars, field)

    @classmethod
    def const(cls, c, nvars: int = 2, field: Field = QQ) -> Polynomial:
        return cls({(): c}, nvars, field)

    @classmethod
    def zero(cls, nvars: int = 2, field: Field = QQ) -> Polynomial:
        return cls._raw({}, nvars, field)

    @classmethod
    def one(cls, nvars: int = 2, field: Field = QQ) -> Polynomial:
        return cls.const(1, nvars, field)

    @classmethod
    def word(cls, w: Word, coeff=1, nvars: int = 2, field: Field = QQ) -> Polynomial:
        return cls({tuple(w): coeff}, nvars, field)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Polynomial):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} generators")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        try:
            return Polynomial.const(other, self.nvars, self.field)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            if s is None:
                out[w] = c
            else:
                s = s + c
                if s:
                    out[w] = s
                else:
                    del out[w]
        return Polynomial._raw(out, self.nvars, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({w: -c for w, c in self.terms.items()}, self.nvars, self.field)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = self.field(c)
        if not c:
            return Polynomial.zero(self.nvars, self.field)
        return Polynomial._raw({w: c * a for w, a in self.terms.items()}, self.nvars, self.field)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except (TypeError, ValueError):
                return NotImplemented
        self._check(other)
        out = defaultdict(lambda: self.field.zero)
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                out[u + v] += a * b
        return Polynomial._raw({w: c for w, c in out.items() if c}, self.nvars, self.field)

    def __rmul__(self, other):
        # scalar * polynomial; polynomial * polynomial never lands here
        try:
            return self.scale(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one(self.nvars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms
        try:
            other = Polynomial.const(other, self.nvars, self.field)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.field, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg(self):
        """Maximal word length, or DEG_ZERO for the zero polynomial."""
        if not self.terms:
            return DEG_ZERO
        return max(len(w) for w in self.terms)

    def coeff(self, w: Word):
        return self.terms.get(tuple(w), self.field.zero)

    def words(self) -> list:
        return sorted(self.terms, key=deglex_key)

    def items(self):
        for w in self.words():
            yield w, self.terms[w]

    def homogeneous_part(self, d: int) -> Polynomial:
        return Polynomial._raw({w: c for w, c in self.terms.items() if len(w) == d}, self.nvars, self.field)

    def highest_part(self) -> Polynomial:
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no highest part")
        return self.homogeneous_part(self.deg)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self.terms}) <= 1

    def constant_term(self):
        return self.coeff(())

    def mdeg_components(self) -> dict:
        parts: dict = defaultdict(dict)
        for w, c in self.terms.items():
            parts[mdeg(w, self.nvars)][w] = c
        return {m: Polynomial._raw(t, self.nvars, self.field) for m, t in parts.items()}

    def letters(self) -> set:
        return {i for w in self.terms for i in w}

    def substitute(self, images) -> Polynomial:
        """Replace each generator x_i by ``images[i-1]``."""
        images = list(images)
        if len(images) != self.nvars:
            raise ArityMismatch(f"{len(images)} images for {self.nvars} generators")
        target = images[0]
        for g in images:
            if g.field != self.field:
                raise FieldMismatch(f"{g.field} vs {self.field}")
        cache: dict = {(): Polynomial.one(target.nvars, self.field)}

        def value(w):
            got = cache.get(w)
            if got is None:
                got = value(w[:-1]) * images[w[-1] - 1]
                cache[w] = got
            return got

        out = Polynomial.zero(target.nvars, self.field)
        for w in sorted(self.terms, key=len):
            out = out + value(w).scale(self.terms[w])
        return out

    # -- text ---------------------------------------------------------------

    def __str__(self):
        from .textio import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def gens(nvars: int = 2, field: Field = QQ) -> tuple:
    return tuple(Polynomial.gen(i, nvars, field) for i in range(1, nvars + 1))


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def mdeg_components(f: Polynomial) -> dict:
    return f.mdeg_components()


def highest_part(f: Polynomial) -> Polynomial:
    return f.highest_part()


class Grading(enum.Enum):
    WORD_LENGTH = "WordLength"
    X2_DEGREE = "X2Degree"


class Parity(enum.Enum):
    EVEN = "Even"
    ODD = "Odd"
    MIXED = "Mixed"


def grade_parity(f: Polynomial, grading: Grading = Grading.WORD_LENGTH) -> Parity:
    """Which summand of B0 + B1 (word length) or C0 + C1 (x2-degree) holds f."""
    if f.is_zero():
        raise ZeroPolynomial("parity of the zero polynomial")
    if grading is Grading.X2_DEGREE:
        if f.nvars != 2:
            raise ArityMismatch("the x2-degree grading needs two generators")
        degrees = {w.count(2) % 2 for w in f.terms}
    else:
        degrees = {len(w) % 2 for w in f.terms}
    if degrees == {0}:
        return Parity.EVEN
    if degrees == {1}:
        return Parity.ODD
    return Parity.MIXED


def match_linear_power(h: Polynomial):
    """Write a homogeneous h as alpha * (a*x1 + b*x2)^r, or return None.

    The linear form is normalised so that a == 1, or (a, b) == (0, 1).
    Because words do not commute, the coefficient of x1^(r-1) x2 in the
    power is exactly alpha*b, so the candidate is read off two coefficients
    and then verified word by word: with both a, b nonzero, every one of
    the 2^r words must be present with coefficient alpha a^i b^j.
    """
    if h.nvars != 2:
        raise ArityMismatch("match_linear_power works in two generators")
    if h.is_zero():
        raise ZeroPolynomial("cannot match the zero polynomial")
    if not h.is_homogeneous():
        raise NotHomogeneous("input must be homogeneous")
    r = h.deg
    if r < 1:
        raise NotHomogeneous("input must have degree >= 1")
    field = h.field
    alpha = h.coeff((1,) * r)
    if alpha:
        a = field.one
        b = h.coeff((1,) * (r - 1) + (2,)) / alpha
    else:
        alpha = h.coeff((2,) * r)
        if not alpha:
            return None
        a, b = field.zero, field.one
    expected_terms = 2**r if (a and b) else 1
    if len(h.terms) != expected_terms:
        return None
    for w, c in h.terms.items():
        n2 = w.count(2)
        if c != alpha * a ** (r - n2) * b**n2:
            return None
    return alpha, a, b, r
