"""Automorphisms of two-generated free braided algebras A_tau.

An automorphism phi of K<x1, x2> is an automorphism of A_tau exactly when
it commutes with the extended braiding: tau (phi x phi) == (phi x phi) tau.
Two independent procedures decide this:

* ``bicharacter``: on x_i (x) x_j the condition reads
  q_ij f_j (x) f_i == sum_{a,b} c(a, b) (f_j)_b (x) (f_i)_a, where (f)_a is
  the multidegree-a component, so it holds iff c(a, b) == q_ij for every
  pair of components.  Multiplicativity of c carries it to all words.
* ``oracle``: evaluate both sides on every split word pair of total length
  <= depth, with the braiding extended through braid-monoid operator words.

Classification of Aut A_tau for involutive tau follows five cases keyed on
the parameters; the witness suite samples each classified group and checks
known non-members against both procedures.
"""

from __future__ import annotations

import enum
from .autos import (
    Endomorphism,
    Group,
    conjugate_by_swap,
    random_member,
    swap,
    tame_decompose,
)
from .braiding import (
    DiagonalBraiding,
    bicharacter,
    canonical_form,
    dual_braiding,
    extend_braiding,
    is_involutive,
)
from .errors import ArityMismatch, CharTwoField, NotAnAutomorphism, NotInvolutive
from .freealg import Polynomial, words_of_length
from .scalars import Sign, is_sign


def bicharacter_eval(q: DiagonalBraiding, a, b):
    return bicharacter(q, a, b)


def _check_bicharacter(phi: Endomorphism, q: DiagonalBraiding) -> bool:
    comps = [list(f.mdeg_components()) for f in phi.images]
    for i in range(2):
        for j in range(2):
            target = q.q[i][j]
            for a in comps[i]:
                for b in comps[j]:
                    if bicharacter(q, a, b) != target:
                        return False
    return True


_EXT_CACHE: dict = {}


def _op_cache(q: DiagonalBraiding) -> dict:
    cache = _EXT_CACHE.get(q)
    if cache is None:
        if len(_EXT_CACHE) > 64:
            _EXT_CACHE.clear()
        cache = _EXT_CACHE[q] = {}
    return cache


def _op_single(cache: dict, q: DiagonalBraiding, u: tuple, v: tuple):
    """Operator-method extension of u (x)' v as (scalar, (v', u'))."""
    got = cache.get((u, v))
    if got is None:
        (got,) = ((c, key) for key, c in extend_braiding(u, v, q, "operator").terms.items())
        cache[(u, v)] = got
    return got


def _check_oracle(phi: Endomorphism, q: DiagonalBraiding, depth: int) -> bool:
    # A diagonal braiding extended by operator words sends each split word
    # pair to a multiple of one split word pair, (w1, w2) -> c (w2', w1'),
    # and distinct inputs land on distinct outputs.  Both sides of the
    # commutation condition on u (x)' v are therefore compared term by term.
    field = q.field
    cache = _op_cache(q)
    images: dict = {(): Polynomial.one(2, field)}

    def image(w):
        got = images.get(w)
        if got is None:
            got = image(w[:-1]) * phi.images[w[-1] - 1]
            images[w] = got
        return got

    for total in range(depth + 1):
        for r in range(total + 1):
            for u in words_of_length(r):
                fu = image(u).terms
                for v in words_of_length(total - r):
                    fv = image(v).terms
                    c, (v0, u0) = _op_single(cache, q, u, v)
                    if (v0, u0) != (v, u):
                        raise AssertionError("diagonal extension moved letters unexpectedly")
                    # left side: c * phi(v) (x) phi(u); right side: sum a*b*ext(w1, w2)
                    for w1 in fu:
                        for w2 in fv:
                            c2, swapped = _op_single(cache, q, w1, w2)
                            if swapped != (w2, w1) or c2 != c:
                                return False
    return True


def default_depth(phi: Endomorphism) -> int:
    return int(phi.deg) + 2


def is_braided_automorphism(
    phi: Endomorphism,
    q: DiagonalBraiding,
    method: str = "bicharacter",
    depth: int | None = None,
    check_automorphism: bool = True,
) -> bool:
    """Does phi commute with the extended braiding of ``q``?

    ``phi`` must be an automorphism of K<x1, x2>; NotAnAutomorphism is
    raised otherwise.  ``method`` is ``"bicharacter"`` or ``"oracle"``; the
    oracle checks all split word pairs of total length <= ``depth``
    (default deg f1 + deg f2 + 2).
    """
    if q.n != 2 or phi.nvars != 2:
        raise ArityMismatch("braided automorphisms are implemented for two generators")
    if check_automorphism:
        if any(f.is_zero() for f in phi.images) or tame_decompose(phi) is None:
            raise NotAnAutomorphism(f"{phi} is not an automorphism of K<x1,x2>")
    if method == "bicharacter":
        return _check_bicharacter(phi, q)
    if method == "oracle":
        return _check_oracle(phi, q, default_depth(phi) if depth is None else depth)
    raise ValueError(f"unknown method {method!r}")


# -- classification --------------------------------------------------------------


class AutGroupKind(enum.Enum):
    FULL_AUT = "FullAut"
    ODD_AUT = "OddAut"
    TORIC_SEMIDIRECT_Z2 = "ToricSemidirectZ2"
    TRIANGULAR_EVEN_SQUARES = "TriangularEvenSquares"
    TORIC = "Toric"


DESCRIPTIONS = {
    AutGroupKind.FULL_AUT: "Aut K<x1,x2>",
    AutGroupKind.ODD_AUT: "G_odd (odd automorphisms)",
    AutGroupKind.TORIC_SEMIDIRECT_Z2: "(K* x K*) semidirect Z2",
    AutGroupKind.TRIANGULAR_EVEN_SQUARES: "{(a*x1 + g(x2^2) ; b*x2)}",
    AutGroupKind.TORIC: "K* x K*",
}

GROUP_OF_KIND = {
    AutGroupKind.FULL_AUT: Group.G1,
    AutGroupKind.ODD_AUT: Group.G2,
    AutGroupKind.TORIC_SEMIDIRECT_Z2: Group.G3,
    AutGroupKind.TRIANGULAR_EVEN_SQUARES: Group.G4,
    AutGroupKind.TORIC: Group.G5,
}


def classify_aut_group(q: DiagonalBraiding) -> AutGroupKind:
    if q.n != 2:
        raise ArityMismatch("classification is for two generators")
    if q.field.characteristic == 2:
        raise CharTwoField("characteristic 2 is excluded")  # pragma: no cover
    if not is_involutive(q):
        raise NotInvolutive(f"{q} is not involutive")
    q11, q12, q21, q22 = q.as_vector()
    if all(c == 1 for c in (q11, q12, q21, q22)):
        return AutGroupKind.FULL_AUT
    if all(c == -1 for c in (q11, q12, q21, q22)):
        return AutGroupKind.ODD_AUT
    if q11 == q22 and q12 == q21 and q11 * q12 == -1:
        return AutGroupKind.TORIC_SEMIDIRECT_Z2
    if q12 == 1 and q11 * q22 == -1:
        return AutGroupKind.TRIANGULAR_EVEN_SQUARES
    if is_sign(q12) is Sign.NEITHER or (q12 == -1 and q11 * q22 == -1):
        return AutGroupKind.TORIC
    raise AssertionError(f"unclassified involutive braiding {q}")  # pragma: no cover


def _vector_strings(q: DiagonalBraiding) -> list:
    return [str(c) for c in q.as_vector()]


def classification_record(q: DiagonalBraiding) -> dict:
    kind = classify_aut_group(q)
    record = {
        "schema": 1,
        "tau": _vector_strings(q),
        "involutive": True,
        "canonical": _vector_strings(canonical_form(q)),
        "dual": _vector_strings(dual_braiding(q)),
        "group": kind.value,
        "isomorphic_description": DESCRIPTIONS[kind],
    }
    if kind is AutGroupKind.TORIC_SEMIDIRECT_Z2:
        record["z2_generator"] = str(swap(q.field))
    return record


# -- witness suite ------------------------------------------------------------------

_NON_MEMBERS = {
    AutGroupKind.FULL_AUT: (),
    AutGroupKind.ODD_AUT: ("(x1 ; x2 + x1^2)", "(x1 + 1 ; x2)", "(x1 + x2^2 ; x2)"),
    AutGroupKind.TORIC_SEMIDIRECT_Z2: ("(x1 + x2 ; x2)", "(x1 ; x2 + x1^3)", "(x1 + 1 ; x2)"),
    AutGroupKind.TRIANGULAR_EVEN_SQUARES: ("(x2 ; x1)", "(x1 + x2^3 ; x2)", "(x1 ; x2 + 1)", "(x1 + x2 ; x2)"),
    AutGroupKind.TORIC: ("(x2 ; x1)", "(x1 + x2 ; x2)", "(x1 + 1 ; x2)", "(x1 + x2^2 ; x2)", "(x1 ; x2 + x1^3)"),
}


_DESIGNATED_MEMBERS = {
    AutGroupKind.FULL_AUT: ("(x1 + x2^2 ; x2)", "(x2 ; x1)", "(x1 + x2^3 ; x2)"),
    AutGroupKind.ODD_AUT: ("(x1 ; x2 + x1^3)", "(x2 ; x1)", "(x1 + x2^3 ; x2)"),
    AutGroupKind.TORIC_SEMIDIRECT_Z2: ("(x2 ; x1)", "(2*x1 ; 3*x2)", "(-x2 ; 1/2*x1)"),
    AutGroupKind.TRIANGULAR_EVEN_SQUARES: ("(x1 + x2^2 ; x2)", "(2*x1 + x2^4 + 3 ; x2)", "(x1 + 1 ; -x2)"),
    AutGroupKind.TORIC: ("(2*x1 ; 3*x2)", "(-x1 ; 1/2*x2)"),
}


def _parsed(texts, q: DiagonalBraiding) -> list:
    maps = [Endomorphism.parse(t, q.field) for t in texts]
    if canonical_form(q) != q:
        maps = [conjugate_by_swap(m) for m in maps]
    return maps


def designated_members(q: DiagonalBraiding) -> list:
    """Hand-picked automorphisms known to lie in Aut A_q."""
    return _parsed(_DESIGNATED_MEMBERS[classify_aut_group(q)], q)


def non_members(q: DiagonalBraiding) -> list:
    """Automorphisms of K<x1,x2> known to lie outside Aut A_q."""
    return _parsed(_NON_MEMBERS[classify_aut_group(q)], q)


def members(
    q: DiagonalBraiding,
    count: int,
    seed: int,
    degree_bound: int = 3,
    max_factors: int = 3,
    max_degree: int = 4,
    max_terms: int = 6,
) -> list:
    """Random elements of the group Aut A_q is classified as.

    The size caps keep the truncated oracle affordable: its cost grows like
    (number of image terms) ** depth.
    """
    kind = classify_aut_group(q)
    group = GROUP_OF_KIND[kind]
    flip = canonical_form(q) != q
    out = []
    for k in range(count):
        phi = random_member(
            group, degree_bound, seed * 100003 + k, q.field,
            max_factors=max_factors, max_degree=max_degree, max_terms=max_terms,
        )
        out.append(conjugate_by_swap(phi) if flip else phi)
    return out


def witness_suite(q: DiagonalBraiding, seed: int, count: int = 50, depth: int | None = None, **member_opts) -> dict:
    """Check sampled members pass and designated non-members fail, under both methods."""
    kind = classify_aut_group(q)
    report = {
        "schema": 1,
        "tau": _vector_strings(q),
        "group": kind.value,
        "seed": seed,
        "members": count,
        "members_passed": 0,
        "non_members": [],
        "methods_agree": True,
        "failures": [],
    }
    sample = designated_members(q) + members(q, count, seed, **member_opts)
    report["members"] = len(sample)
    for phi in sample:
        b = is_braided_automorphism(phi, q, "bicharacter")
        o = is_braided_automorphism(phi, q, "oracle", depth, check_automorphism=False)
        if b != o:
            report["methods_agree"] = False
        if b and o:
            report["members_passed"] += 1
        else:
            report["failures"].append(str(phi))
    for phi in non_members(q):
        b = is_braided_automorphism(phi, q, "bicharacter")
        o = is_braided_automorphism(phi, q, "oracle", depth, check_automorphism=False)
        if b != o:
            report["methods_agree"] = False
        report["non_members"].append({"phi": str(phi), "bicharacter": b, "oracle": o, "rejected": not b and not o})
    report["passed"] = (
        report["methods_agree"]
        and report["members_passed"] == report["members"]
        and all(nm["rejected"] for nm in report["non_members"])
    )
    return report
