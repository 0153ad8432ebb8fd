"""Text forms for scalars, polynomials, braidings and endomorphisms.

Polynomial grammar (whitespace is insignificant)::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := scalar? ('*'? factor)*
    scalar := digits ('/' digits)?
    factor := 'x' index ('^' nat)?

Juxtaposed factors multiply in written order, so ``x1^2 x2`` is the word
x1 x1 x2.  Braidings are written ``(q11,q12,q21,q22)`` for two generators
or ``[[q11,...],[q21,...],...]`` row-major for any n.  Endomorphisms are
written ``(f1 ; f2)``.  Every printer here produces text its parser
accepts back unchanged.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArityMismatch, ParseError
from .freealg import Polynomial
from .scalars import QQ, Field, Mod


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def digits(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected digits")
        return int(self.text[start:self.pos])

    def fail(self, message):
        raise ParseError(message, self.text, min(self.pos, len(self.text)))

    def at_end(self) -> bool:
        return self.peek() == ""


def _scalar(sc: _Scanner, field: Field):
    start = sc.pos
    num = sc.digits()
    den = 1
    if sc.peek() == "/":
        sc.pos += 1
        den = sc.digits()
        if den == 0:
            sc.pos = start
            sc.fail("zero denominator")
    return field(Fraction(num, den))


def _signed_scalar(sc: _Scanner, field: Field):
    sign = 1
    if sc.peek() in ("+", "-"):
        sign = -1 if sc.peek() == "-" else 1
        sc.pos += 1
    return field(sign) * _scalar(sc, field)


def _factor(sc: _Scanner, nvars: int) -> tuple:
    sc.take("x")
    start = sc.pos
    index = sc.digits()
    if not 1 <= index <= nvars:
        sc.pos = start
        sc.skip()
        sc.fail(f"generator index must lie in 1..{nvars}")
    power = 1
    if sc.peek() == "^":
        sc.pos += 1
        power = sc.digits()
    return (index,) * power


def _term(sc: _Scanner, field: Field, nvars: int):
    coeff = field.one
    word: tuple = ()
    seen = False
    if sc.peek().isdigit():
        coeff = _scalar(sc, field)
        seen = True
    while True:
        ch = sc.peek()
        if ch == "*":
            sc.pos += 1
            if sc.peek() != "x":
                sc.fail("expected a factor after '*'")
            word += _factor(sc, nvars)
        elif ch == "x":
            word += _factor(sc, nvars)
        else:
            break
        seen = True
    if not seen:
        sc.fail("expected a term")
    return word, coeff


def _poly(sc: _Scanner, field: Field, nvars: int) -> Polynomial:
    terms = []
    sign = field.one
    if sc.peek() in ("+", "-"):
        sign = -field.one if sc.peek() == "-" else field.one
        sc.pos += 1
    w, c = _term(sc, field, nvars)
    terms.append((w, sign * c))
    while sc.peek() in ("+", "-"):
        sign = -field.one if sc.peek() == "-" else field.one
        sc.pos += 1
        w, c = _term(sc, field, nvars)
        terms.append((w, sign * c))
    return Polynomial(terms, nvars, field)


def parse_scalar(text: str, field: Field = QQ):
    sc = _Scanner(text)
    value = _signed_scalar(sc, field)
    if not sc.at_end():
        sc.fail("trailing input")
    return value


def parse_poly(text: str, field: Field = QQ, nvars: int = 2) -> Polynomial:
    sc = _Scanner(text)
    f = _poly(sc, field, nvars)
    if not sc.at_end():
        sc.fail("unexpected character")
    return f


def _strip_prefix(text: str, name: str) -> str:
    body = text.strip()
    if body.startswith(name):
        rest = body[len(name):].lstrip()
        if rest.startswith("="):
            return rest[1:]
    return text


def parse_endomorphism(text: str, field: Field = QQ, nvars: int = 2) -> tuple:
    """Parse ``(f1 ; f2 ; ...)`` into a tuple of polynomials."""
    sc = _Scanner(_strip_prefix(text, "phi"))
    sc.take("(")
    images = [_poly(sc, field, nvars)]
    while sc.peek() == ";":
        sc.pos += 1
        images.append(_poly(sc, field, nvars))
    sc.take(")")
    if not sc.at_end():
        sc.fail("trailing input")
    if len(images) != nvars:
        raise ArityMismatch(f"expected {nvars} images, got {len(images)}")
    return tuple(images)


def parse_braiding_matrix(text: str, field: Field = QQ) -> list:
    """Parse the braiding parameters as an n x n list of scalars."""
    sc = _Scanner(_strip_prefix(text, "tau"))
    if sc.peek() == "(":
        sc.pos += 1
        flat = [_signed_scalar(sc, field)]
        while sc.peek() == ",":
            sc.pos += 1
            flat.append(_signed_scalar(sc, field))
        sc.take(")")
        if not sc.at_end():
            sc.fail("trailing input")
        if len(flat) != 4:
            raise ParseError(f"vector form needs 4 entries, got {len(flat)}", sc.text, 0)
        return [flat[:2], flat[2:]]
    rows = _nested_rows(sc, field)
    if not sc.at_end():
        sc.fail("trailing input")
    return rows


def _nested_rows(sc: _Scanner, field: Field) -> list:
    sc.take("[")
    rows = []
    while True:
        sc.take("[")
        row = [_signed_scalar(sc, field)]
        while sc.peek() == ",":
            sc.pos += 1
            row.append(_signed_scalar(sc, field))
        sc.take("]")
        rows.append(row)
        if sc.peek() != ",":
            break
        sc.pos += 1
    sc.take("]")
    if any(len(r) != len(rows) for r in rows):
        raise ParseError("matrix must be square", sc.text, 0)
    return rows


def parse_matrix(text: str, field: Field = QQ) -> list:
    sc = _Scanner(text)
    rows = _nested_rows(sc, field)
    if not sc.at_end():
        sc.fail("trailing input")
    return rows


# -- printing ----------------------------------------------------------------


def format_scalar(c) -> str:
    return str(c)


def format_word(w: tuple) -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        parts.append(f"x{w[i]}" if run == 1 else f"x{w[i]}^{run}")
        i = j
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for w, c in f.items():
        negative = not isinstance(c, Mod) and c < 0
        mag = -c if negative else c
        if not w:
            body = str(mag)
        elif mag == 1:
            body = format_word(w)
        else:
            body = f"{mag}*{format_word(w)}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def format_endomorphism(images) -> str:
    return "(" + " ; ".join(format_poly(f) for f in images) + ")"


def format_braiding(q) -> str:
    """Vector form for two generators, nested-list form otherwise."""
    if len(q) == 2:
        return "(" + ",".join(str(c) for row in q for c in row) + ")"
    return "[" + ",".join("[" + ",".join(str(c) for c in row) + "]" for row in q) + "]"
