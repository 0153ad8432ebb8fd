"""Braidings of V = span(x1..xn) and their extension to the tensor algebra.

Operator words are tuples of slot indices: ``(i, j, ...)`` stands for the
superposition tau_i tau_j ... acting on V^{(x)m}.  Factors act from left to
right, i.e. ``tau_i`` is applied first; in ordinary right-to-left
composition the same word is ``... o tau_j o tau_i``.

Extending a braiding from V to T(V) sends a split word pair u (x)' v to the
operator word nu_r^{1,m} applied to the concatenation uv (r = d(u),
m = d(u) + d(v)), followed by re-splitting the result after d(v) letters.
For a diagonal braiding this collapses to a single scalar, the bicharacter
prod q_ij^(s_i t_j) of the two multidegrees.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product

from .errors import (
    ArityMismatch,
    BadIndices,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotInvolutive,
)
from .freealg import Polynomial, Word, mdeg
from .scalars import QQ, Field, Sign, is_sign


# -- braidings ---------------------------------------------------------------


@dataclass(frozen=True)
class DiagonalBraiding:
    """x_i (x) x_s -> q[i][s] x_s (x) x_i, all q[i][s] nonzero."""

    q: tuple
    field: Field = QQ

    def __post_init__(self):
        rows = tuple(tuple(self.field(c) for c in row) for row in self.q)
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise DimensionMismatch("q must be a nonempty square array")
        if any(not c for r in rows for c in r):
            raise ValueError("diagonal braiding parameters must be nonzero")
        object.__setattr__(self, "q", rows)

    @classmethod
    def from_vector(cls, vec, field: Field = QQ) -> DiagonalBraiding:
        """Two-generator shorthand (q11, q12, q21, q22)."""
        vec = tuple(vec)
        if len(vec) != 4:
            raise ArityMismatch("the vector form has four entries")
        return cls(((vec[0], vec[1]), (vec[2], vec[3])), field)

    @property
    def n(self) -> int:
        return len(self.q)

    def __call__(self, i: int, j: int):
        return self.q[i - 1][j - 1]

    def as_vector(self) -> tuple:
        if self.n != 2:
            raise ArityMismatch("vector form exists only for two generators")
        return (self.q[0][0], self.q[0][1], self.q[1][0], self.q[1][1])

    def action(self, a: int, b: int):
        return (((b, a), self.q[a - 1][b - 1]),)

    def __str__(self):
        from .textio import format_braiding

        return format_braiding(self.q)


class MatrixBraiding:
    """A general linear map on V (x) V given by an n^2 x n^2 matrix.

    Basis vector x_a (x) x_b has index (a-1)*n + (b-1); column ``col`` of
    the matrix is the image of basis vector ``col``.
    """

    def __init__(self, matrix, field: Field = QQ):
        rows = [[field(c) for c in row] for row in matrix]
        side = len(rows)
        if any(len(r) != side for r in rows):
            raise DimensionMismatch("matrix must be square")
        n = round(side**0.5)
        if n < 1 or n * n != side:
            raise DimensionMismatch(f"side {side} is not a perfect square")
        self.n = n
        self.field = field
        self.matrix = rows
        self._columns = {}
        for a, b in product(range(1, n + 1), repeat=2):
            col = (a - 1) * n + (b - 1)
            image = []
            for row in range(side):
                c = rows[row][col]
                if c:
                    image.append(((row // n + 1, row % n + 1), c))
            self._columns[(a, b)] = tuple(image)

    def action(self, a: int, b: int):
        return self._columns[(a, b)]


def flip_matrix(n: int, field: Field = QQ) -> list:
    side = n * n
    m = [[0] * side for _ in range(side)]
    for a, b in product(range(n), repeat=2):
        m[b * n + a][a * n + b] = 1
    return [[field(c) for c in row] for row in m]


# -- operator words ----------------------------------------------------------


def apply_tau_i(w: Word, i: int, q: DiagonalBraiding):
    """tau_i on a single word: returns (scalar, swapped word)."""
    w = tuple(w)
    if not 1 <= i < len(w):
        raise IndexOutOfRange(f"tau_{i} needs 1 <= i < {len(w)}")
    a, b = w[i - 1], w[i]
    return q(a, b), w[: i - 1] + (b, a) + w[i + 1 :]


def apply_operator(vec: dict, factors, braiding) -> dict:
    """Apply an operator word left to right to a vector {word: coeff}."""
    current = dict(vec)
    for i in factors:
        nxt = defaultdict(lambda: braiding.field.zero)
        for w, coeff in current.items():
            if not 1 <= i < len(w):
                raise IndexOutOfRange(f"tau_{i} on a word of length {len(w)}")
            for (c, d), s in braiding.action(w[i - 1], w[i]):
                nxt[w[: i - 1] + (c, d) + w[i + 1 :]] += coeff * s
        current = {w: c for w, c in nxt.items() if c}
    return current


def _apply_diagonal_fast(w: Word, factors, q: DiagonalBraiding):
    # single-word specialisation of apply_operator: diagonal maps send words
    # to multiples of words, so swap in place and multiply the scalars
    letters = list(w)
    counts: dict = defaultdict(int)
    for i in factors:
        a, b = letters[i - 1], letters[i]
        counts[(a, b)] += 1
        letters[i - 1], letters[i] = b, a
    scalar = q.field.one
    for (a, b), e in counts.items():
        scalar = scalar * q(a, b) ** e
    return scalar, tuple(letters)


def bracket(a: int, b: int) -> tuple:
    """[a;b]: tau_{b-1}...tau_a when a < b, tau_b...tau_{a-1} when a > b."""
    if a == b:
        return ()
    if a < b:
        return tuple(range(b - 1, a - 1, -1))
    return tuple(range(b, a))


def nu_operator(r: int, k: int, m: int, factorization: str = "forward") -> tuple:
    """The operator word nu_r^{k,m} on V^{(x)m}.

    ``forward`` is [k;r+1][k+1;r+2]...[k+m-r-1;m]; ``reverse`` is the
    equivalent product [m;r][m-1;r-1]...[m-r+k;k].
    """
    if not 1 <= k <= r < m:
        raise BadIndices(f"need 1 <= k <= r < m, got k={k}, r={r}, m={m}")
    word: tuple = ()
    if factorization == "forward":
        for j in range(m - r):
            word += bracket(k + j, r + 1 + j)
    elif factorization == "reverse":
        for j in range(r - k + 1):
            word += bracket(m - j, r - j)
    else:
        raise ValueError(f"unknown factorization {factorization!r}")
    return word


def operator_matrix(factors, braiding, m: int) -> dict:
    """The operator word as a map {basis word: image vector} on V^{(x)m}."""
    return {
        w: apply_operator({w: braiding.field.one}, factors, braiding)
        for w in product(range(1, braiding.n + 1), repeat=m)
    }


def yang_baxter_check(braiding) -> bool:
    """Braid relation tau_1 tau_2 tau_1 == tau_2 tau_1 tau_2 on all of V^{(x)3}."""
    one = braiding.field.one
    for w in product(range(1, braiding.n + 1), repeat=3):
        if apply_operator({w: one}, (1, 2, 1), braiding) != apply_operator({w: one}, (2, 1, 2), braiding):
            return False
    return True


def yang_baxter_check_matrix(matrix, field: Field = QQ) -> bool:
    return yang_baxter_check(MatrixBraiding(matrix, field))


def is_involutive(q: DiagonalBraiding) -> bool:
    return all(q(i, j) * q(j, i) == 1 for i in range(1, q.n + 1) for j in range(1, q.n + 1))


# -- tensor elements ---------------------------------------------------------


class TensorElement:
    """Finite combination of split word pairs u (x)' v."""

    __slots__ = ("terms", "field")

    def __init__(self, terms=(), field: Field = QQ):
        clean: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (u, v), c in items:
            key = (tuple(u), tuple(v))
            c = field(c) + clean.get(key, field.zero)
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        self.terms = clean
        self.field = field

    @classmethod
    def pair(cls, u: Word, v: Word, coeff=1, field: Field = QQ) -> TensorElement:
        return cls({(tuple(u), tuple(v)): coeff}, field)

    @classmethod
    def tensor(cls, f: Polynomial, g: Polynomial) -> TensorElement:
        if f.field != g.field:
            raise FieldMismatch(f"{f.field} vs {g.field}")
        out = {}
        for u, a in f.terms.items():
            for v, b in g.terms.items():
                out[(u, v)] = a * b
        return cls._raw(out, f.field)

    @classmethod
    def _raw(cls, terms: dict, field: Field) -> TensorElement:
        t = cls.__new__(cls)
        t.terms = terms
        t.field = field
        return t

    def __add__(self, other: TensorElement) -> TensorElement:
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, self.field.zero) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TensorElement._raw(out, self.field)

    def __neg__(self):
        return TensorElement._raw({k: -c for k, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> TensorElement:
        c = self.field(c)
        if not c:
            return TensorElement._raw({}, self.field)
        return TensorElement._raw({k: c * a for k, a in self.terms.items()}, self.field)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __str__(self):
        from .textio import format_word

        if not self.terms:
            return "0"
        parts = []
        for (u, v), c in sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0])):
            parts.append(f"{c}*({format_word(u)} (x) {format_word(v)})")
        return " + ".join(parts)

    __repr__ = __str__


# -- extension to T(V) -------------------------------------------------------


def bicharacter(q: DiagonalBraiding, a, b):
    """prod_{i,j} q_ij^(a_i b_j) for multidegrees a, b."""
    out = q.field.one
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out = out * q.q[i][j] ** (ai * bj)
    return out


def _extend_operator(u: Word, v: Word, braiding) -> TensorElement:
    r, t = len(u), len(v)
    field = braiding.field
    if t == 0 or r == 0:
        return TensorElement._raw({(v, u): field.one}, field)
    factors = nu_operator(r, 1, r + t)
    if isinstance(braiding, DiagonalBraiding):
        c, w = _apply_diagonal_fast(u + v, factors, braiding)
        return TensorElement._raw({(w[:t], w[t:]): c}, field)
    image = apply_operator({u + v: field.one}, factors, braiding)
    return TensorElement._raw({(w[:t], w[t:]): c for w, c in image.items()}, field)


def _extend_closed(u: Word, v: Word, q) -> TensorElement:
    if not isinstance(q, DiagonalBraiding):
        raise TypeError("the closed form exists only for diagonal braidings")
    c = bicharacter(q, mdeg(u, q.n), mdeg(v, q.n))
    return TensorElement._raw({(v, u): c}, q.field)


def extend_braiding(u: Word, v: Word, braiding, method: str = "closed") -> TensorElement:
    """Image of u (x)' v under the extended braiding.

    ``method="operator"`` evaluates the braid-monoid operator word and
    re-splits; ``method="closed"`` uses the multidegree product formula.
    """
    u, v = tuple(u), tuple(v)
    if method == "operator":
        return _extend_operator(u, v, braiding)
    if method == "closed":
        return _extend_closed(u, v, braiding)
    raise ValueError(f"unknown method {method!r}")


def extend_braiding_poly(F: TensorElement, braiding, method: str = "closed") -> TensorElement:
    out: dict = {}
    zero = braiding.field.zero
    for (u, v), c in F.terms.items():
        for k, s in extend_braiding(u, v, braiding, method).terms.items():
            out[k] = out.get(k, zero) + c * s
    return TensorElement._raw({k: c for k, c in out.items() if c}, braiding.field)


# -- two-generator classification --------------------------------------------


def dual_braiding(q: DiagonalBraiding) -> DiagonalBraiding:
    """Swap the generators: (q11,q12,q21,q22) -> (q22,q21,q12,q11)."""
    q11, q12, q21, q22 = q.as_vector()
    return DiagonalBraiding.from_vector((q22, q21, q12, q11), q.field)


def braided_isomorphic(t: DiagonalBraiding, s: DiagonalBraiding) -> bool:
    if t.n != 2 or s.n != 2:
        raise ArityMismatch("isomorphism test is for two generators")
    if t.field != s.field:
        raise FieldMismatch(f"{t.field} vs {s.field}")
    return s == t or s == dual_braiding(t)


CANONICAL_SIGN_VECTORS = (
    (1, 1, 1, 1),
    (-1, -1, -1, -1),
    (1, 1, 1, -1),
    (-1, 1, 1, -1),
    (1, -1, -1, 1),
    (1, -1, -1, -1),
)


def _order_key(q: DiagonalBraiding):
    key = []
    for c in q.as_vector():
        s = is_sign(c)
        rank = 0 if s is Sign.PLUS else 1 if s is Sign.MINUS else 2
        key.append((rank, q.field.sort_key(c)))
    return tuple(key)


def canonical_form(t: DiagonalBraiding) -> DiagonalBraiding:
    """Deterministic representative of the isomorphism class {t, t*}."""
    if t.n != 2:
        raise ArityMismatch("canonical form is for two generators")
    if not is_involutive(t):
        raise NotInvolutive(f"{t} is not involutive")
    d = dual_braiding(t)
    if is_sign(t(1, 2)) is not Sign.NEITHER:
        for cand in (t, d):
            if tuple(cand.as_vector()) in CANONICAL_SIGN_VECTORS:
                return cand
        raise AssertionError("involutive sign vector outside the canonical list")  # pragma: no cover
    return min((t, d), key=_order_key)
