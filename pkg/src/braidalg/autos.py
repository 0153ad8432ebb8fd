"""Endomorphisms and automorphisms of K<x1, x2>.

An endomorphism is the tuple of images (f1, f2).  Composition follows the
left-to-right action convention: ``compose(phi, psi)`` first applies phi
and then psi, so its images are phi's images with psi's images substituted
for the generators.

Tame decomposition repeatedly applies elementary transformations
(f1, f2) -> (f1, f2 - c f1^k) (or the mirror image) that lower the total
degree, until an affine map remains; the affine map is then reduced to the
identity by elementary transformations as well.  If phi is an automorphism
this always succeeds, since every automorphism of K<x1, x2> of degree >= 3
is elementarily reducible; failure therefore certifies a non-automorphism.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import reduce

from .errors import ArityMismatch, FieldMismatch, ZeroImage
from .freealg import Parity, Polynomial, grade_parity, match_linear_power
from .scalars import QQ, Field, inv


@dataclass(frozen=True)
class Endomorphism:
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if not images:
            raise ArityMismatch("an endomorphism needs at least one image")
        f0 = images[0]
        for f in images:
            if f.nvars != len(images):
                raise ArityMismatch(f"{len(images)} images over {f.nvars} generators")
            if f.field != f0.field:
                raise FieldMismatch(f"{f.field} vs {f0.field}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, nvars: int = 2, field: Field = QQ) -> Endomorphism:
        return cls(tuple(Polynomial.gen(i, nvars, field) for i in range(1, nvars + 1)))

    @classmethod
    def parse(cls, text: str, field: Field = QQ) -> Endomorphism:
        from .textio import parse_endomorphism

        return cls(parse_endomorphism(text, field))

    @property
    def field(self) -> Field:
        return self.images[0].field

    @property
    def nvars(self) -> int:
        return len(self.images)

    @property
    def deg(self):
        return sum(f.deg for f in self.images)

    def __call__(self, f: Polynomial) -> Polynomial:
        """Image of f: substitute x_i -> f_i."""
        return f.substitute(self.images)

    def __getitem__(self, i):
        return self.images[i]

    def __str__(self):
        from .textio import format_endomorphism

        return format_endomorphism(self.images)


def compose(phi: Endomorphism, psi: Endomorphism) -> Endomorphism:
    """phi then psi: x_i -> psi(phi(x_i))."""
    if phi.field != psi.field:
        raise FieldMismatch(f"{phi.field} vs {psi.field}")
    return Endomorphism(tuple(f.substitute(psi.images) for f in phi.images))


def compose_all(maps, nvars: int = 2, field: Field = QQ) -> Endomorphism:
    maps = list(maps)
    if not maps:
        return Endomorphism.identity(nvars, field)
    # fold from the right: for a tame decomposition the partial products
    # are then the intermediate maps of the reduction, never larger than phi
    return reduce(lambda acc, m: compose(m, acc), reversed(maps))


def linear_matrix(phi: Endomorphism) -> list:
    """Row i holds the coefficients of x1, x2 in f_i."""
    return [[f.coeff((j,)) for j in range(1, phi.nvars + 1)] for f in phi.images]


def linear_part_invertible(phi: Endomorphism) -> bool:
    (a1, b1), (a2, b2) = linear_matrix(phi)
    return bool(a1 * b2 - a2 * b1)


@dataclass(frozen=True)
class ElementaryAuto:
    """x_target -> scale * x_target + addend(x_other), other generator fixed."""

    target: int
    scale: object
    addend: Polynomial

    def __post_init__(self):
        if self.target not in (1, 2):
            raise ValueError("target must be 1 or 2")
        if not self.scale:
            raise ValueError("scale must be nonzero")
        if self.target in self.addend.letters():
            raise ValueError(f"addend must not involve x{self.target}")

    @property
    def field(self) -> Field:
        return self.addend.field

    def is_identity(self) -> bool:
        return self.scale == 1 and self.addend.is_zero()

    def as_endomorphism(self) -> Endomorphism:
        x = [Polynomial.gen(i, 2, self.field) for i in (1, 2)]
        x[self.target - 1] = x[self.target - 1].scale(self.scale) + self.addend
        return Endomorphism(tuple(x))

    def inverse(self) -> ElementaryAuto:
        s = inv(self.scale)
        return ElementaryAuto(self.target, s, self.addend.scale(-s))

    def to_record(self) -> dict:
        return {"target": self.target, "scale": str(self.scale), "addend": str(self.addend)}


@dataclass
class TameDecomposition:
    """phi == compose(factors[0], factors[1], ..., residual)."""

    factors: list = dc_field(default_factory=list)
    residual_affine: Endomorphism | None = None

    def recompose(self, field: Field = QQ) -> Endomorphism:
        maps = [e.as_endomorphism() for e in self.factors]
        if self.residual_affine is not None:
            maps.append(self.residual_affine)
        if maps:
            field = maps[0].field
        return compose_all(maps, 2, field)

    def to_record(self) -> dict:
        return {
            "factors": [e.to_record() for e in self.factors],
            "residual_affine": None if self.residual_affine is None else str(self.residual_affine),
        }


def _transform(phi: Endomorphism, target: int, addend: Polynomial):
    """Apply f_t -> f_t + addend(f_other); return (inverse elementary, new phi).

    The new tuple equals compose(eps, phi) with eps = x_t -> x_t + addend,
    so phi == compose(eps^-1, new phi).
    """
    eps = ElementaryAuto(target, phi.field.one, addend)
    new = compose(eps.as_endomorphism(), phi)
    return eps.inverse(), new


def elementary_reduce(phi: Endomorphism):
    """One degree-lowering elementary step, or None.

    Returns ``(eps, psi)`` with ``phi == compose(eps.as_endomorphism(), psi)``
    and ``psi.deg < phi.deg``.  The highest parts must have the form
    alpha w^r, beta w^s for one normalised linear form w with r | s or
    s | r; otherwise phi is not an automorphism and None is returned.
    When deg f1 == deg f2 the second image is reduced first.
    """
    f1, f2 = phi.images
    if f1.is_zero() or f2.is_zero():
        return None
    r, s = f1.deg, f2.deg
    if r < 1 or s < 1:
        return None
    m1 = match_linear_power(f1.highest_part())
    m2 = match_linear_power(f2.highest_part())
    if m1 is None or m2 is None:
        return None
    alpha, a, b, _ = m1
    beta, a2, b2, _ = m2
    if (a, b) != (a2, b2):
        return None
    x = [Polynomial.gen(i, 2, phi.field) for i in (1, 2)]
    candidates = []
    if s >= r and s % r == 0:
        k = s // r
        candidates.append((2, x[0] ** k * (-beta / alpha**k)))
    if r >= s and r % s == 0:
        k = r // s
        candidates.append((1, x[1] ** k * (-alpha / beta**k)))
    for target, addend in candidates:
        eps, psi = _transform(phi, target, addend)
        if psi.deg < phi.deg:
            return eps, psi
    return None


def _affine_factors(phi: Endomorphism):
    """Elementary factors of an invertible affine map, or None."""
    f1, f2 = phi.images
    if f1.deg > 1 or f2.deg > 1 or not linear_part_invertible(phi):
        return None
    x = [Polynomial.gen(i, 2, phi.field) for i in (1, 2)]
    factors = []

    def step(target, addend):
        nonlocal phi
        eps_inv, phi = _transform(phi, target, addend)
        factors.append(eps_inv)

    if not phi.images[0].coeff((1,)):
        step(1, x[1])
    a1, a2 = phi.images[0].coeff((1,)), phi.images[1].coeff((1,))
    if a2:
        step(2, x[0] * (-a2 / a1))
    b1, b2 = phi.images[0].coeff((2,)), phi.images[1].coeff((2,))
    if b1:
        step(1, x[1] * (-b1 / b2))
    g1, g2 = phi.images
    for target, g in ((1, g1), (2, g2)):
        eps = ElementaryAuto(target, g.coeff((target,)), Polynomial.const(g.constant_term(), 2, phi.field))
        if not eps.is_identity():
            factors.append(eps)
    return factors


def tame_decompose(phi: Endomorphism):
    """Write phi as a product of elementary automorphisms, or return None."""
    if phi.nvars != 2:
        raise ArityMismatch("tame decomposition is implemented for two generators")
    if any(f.is_zero() for f in phi.images):
        raise ZeroImage("an image is zero")
    factors = []
    while phi.deg >= 3:
        step = elementary_reduce(phi)
        if step is None:
            return None
        eps, phi = step
        factors.append(eps)
    tail = _affine_factors(phi)
    if tail is None:
        return None
    return TameDecomposition(factors + tail, None)


def is_automorphism(phi: Endomorphism) -> bool:
    if any(f.is_zero() for f in phi.images):
        return False
    return tame_decompose(phi) is not None


# -- the subgroups G1..G5 ------------------------------------------------------


class Group(enum.Enum):
    G1 = "G1"  # all automorphisms
    G2 = "G2"  # odd automorphisms
    G3 = "G3"  # diagonal or anti-diagonal monomial scalings
    G4 = "G4"  # (a x1 + g(x2^2), b x2)
    G5 = "G5"  # toric (a x1, b x2)


def _is_scaled_gen(f: Polynomial, i: int) -> bool:
    return len(f.terms) == 1 and (i,) in f.terms


def group_membership(phi: Endomorphism, group: Group) -> bool:
    group = Group(group)
    f1, f2 = phi.images
    if group is Group.G1:
        return is_automorphism(phi)
    if group is Group.G2:
        if f1.is_zero() or f2.is_zero():
            return False
        odd = all(grade_parity(f) is Parity.ODD for f in phi.images)
        return odd and is_automorphism(phi)
    if group is Group.G3:
        return (_is_scaled_gen(f1, 1) and _is_scaled_gen(f2, 2)) or (_is_scaled_gen(f1, 2) and _is_scaled_gen(f2, 1))
    if group is Group.G4:
        if not _is_scaled_gen(f2, 2) or not f1.coeff((1,)):
            return False
        return all(w == (1,) or (set(w) <= {2} and len(w) % 2 == 0) for w in f1.terms)
    return _is_scaled_gen(f1, 1) and _is_scaled_gen(f2, 2)


# -- random members ------------------------------------------------------------

COEFF_POOL = (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))


def random_elementary(rng: random.Random, degree_bound: int, field: Field = QQ, odd: bool = False, target=None):
    target = target or rng.choice((1, 2))
    other = 3 - target
    degrees = [d for d in range(0, degree_bound + 1) if not odd or d % 2 == 1]
    top = rng.choice(degrees)
    terms = {}
    for d in degrees:
        if d == top or (d < top and rng.random() < 0.4):
            terms[(other,) * d] = field(rng.choice(COEFF_POOL))
    return ElementaryAuto(target, field(rng.choice(COEFF_POOL)), Polynomial(terms, 2, field))


def random_member(
    group: Group,
    degree_bound: int,
    seed: int,
    field: Field = QQ,
    max_factors: int = 6,
    max_degree: int = 24,
    max_terms: int = 400,
) -> Endomorphism:
    """Deterministic pseudo-random element of one of the groups G1..G5.

    G1 and G2 members are products of up to ``max_factors`` random
    elementaries whose addends have degree <= ``degree_bound`` (odd-length
    addends only for G2).  Factors that would push the total degree past
    ``max_degree`` or the image size past ``max_terms`` are redrawn with a
    smaller addend degree, which keeps exact expansion affordable.
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    group = Group(group)
    rng = random.Random(seed)
    c = lambda: field(rng.choice(COEFF_POOL))  # noqa: E731
    x1, x2 = Polynomial.gen(1, 2, field), Polynomial.gen(2, 2, field)
    if group is Group.G5:
        return Endomorphism((x1.scale(c()), x2.scale(c())))
    if group is Group.G3:
        if rng.random() < 0.5:
            return Endomorphism((x1.scale(c()), x2.scale(c())))
        return Endomorphism((x2.scale(c()), x1.scale(c())))
    if group is Group.G4:
        g = Polynomial.zero(2, field)
        for k in range(0, degree_bound // 2 + 1):
            if rng.random() < 0.6:
                g = g + (x2 ** (2 * k)).scale(c())
        return Endomorphism((x1.scale(c()) + g, x2.scale(c())))

    odd = group is Group.G2
    phi = Endomorphism.identity(2, field)
    for _ in range(rng.randint(1, max_factors)):
        bound = degree_bound
        while True:
            eps = random_elementary(rng, bound, field, odd=odd)
            # cheap upper bound first: substitution multiplies degrees by at most deg(addend)
            if phi.deg * max(1, eps.addend.deg) <= max_degree:
                cand = compose(phi, eps.as_endomorphism())
                size = sum(len(f.terms) for f in cand.images)
                if cand.deg <= max_degree and size <= max_terms:
                    phi = cand
                    break
            if bound == 1:
                break
            bound -= 1
    return phi


def swap(field: Field = QQ) -> Endomorphism:
    return Endomorphism((Polynomial.gen(2, 2, field), Polynomial.gen(1, 2, field)))


def conjugate_by_swap(phi: Endomorphism) -> Endomorphism:
    s = swap(phi.field)
    return compose(compose(s, phi), s)
