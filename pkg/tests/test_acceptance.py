"""Acceptance criteria 1-9, each at its stated scale and time limit.

Every test appends one line to RESULTS; conftest prints them in the
terminal summary.  ``python tests/test_acceptance.py`` runs them directly.
"""

import random
import time
from fractions import Fraction
from itertools import product

import pytest

from braidalg.autos import Endomorphism, Group, compose, random_member, tame_decompose
from braidalg.braided_autos import AutGroupKind, classify_aut_group, witness_suite
from braidalg.braiding import (
    CANONICAL_SIGN_VECTORS,
    DiagonalBraiding,
    MatrixBraiding,
    TensorElement,
    braided_isomorphic,
    canonical_form,
    extend_braiding,
    extend_braiding_poly,
    yang_baxter_check,
)
from braidalg.scalars import QQ

from braidings import NON_BRAIDINGS, SIGN_VECTORS, r_matrix, random_diagonal
from conftest import F5
from golden_cases import GOLDEN, invoke, load_cases, render
from test_braiding import braided_axioms_hold, split_pairs

RESULTS = []
Q = DiagonalBraiding.from_vector


def record(number, title, ok, detail, elapsed=None):
    timing = "" if elapsed is None else f" [{elapsed:.2f}s]"
    RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {number}. {title}: {detail}{timing}")
    assert ok, RESULTS[-1]


def test_1_yang_baxter():
    start = time.perf_counter()
    rng = random.Random(1)
    good = [random_diagonal(rng, n, field) for field in (QQ, F5) for n in (2, 3) for _ in range(25)]
    true_count = sum(yang_baxter_check(q) for q in good)
    false_count = sum(not yang_baxter_check(MatrixBraiding(m, QQ)) for m in NON_BRAIDINGS)
    elapsed = time.perf_counter() - start
    ok = true_count == 100 and false_count == len(NON_BRAIDINGS) >= 5 and elapsed < 1
    record(1, "Yang-Baxter", ok, f"{true_count}/100 braidings accepted, {false_count}/{len(NON_BRAIDINGS)} non-braidings rejected", elapsed)


def test_2_operator_equals_closed_form():
    start = time.perf_counter()
    rng = random.Random(2)
    pairs = list(split_pairs(6))
    mismatches = 0
    for _ in range(20):
        q = random_diagonal(rng)
        mismatches += sum(
            extend_braiding(u, v, q, "operator") != extend_braiding(u, v, q, "closed") for u, v in pairs
        )
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 5
    record(2, "operator vs closed-form extension", ok, f"{len(pairs)} pairs x 20 braidings, {mismatches} mismatches", elapsed)


def test_3_involutivity_lift():
    pairs = list(split_pairs(6))
    failures = 0
    for vec in SIGN_VECTORS:
        q = Q(vec)
        for u, v in pairs:
            twice = extend_braiding_poly(extend_braiding(u, v, q, "operator"), q, "operator")
            failures += twice != TensorElement.pair(u, v)
    record(3, "involutivity lift", failures == 0, f"8 sign vectors x {len(pairs)} pairs, {failures} failures")


def test_4_braided_algebra_axioms():
    rng = random.Random(4)
    failures = 0
    R = r_matrix()
    for _ in range(500):
        total = rng.randint(0, 6)
        cuts = sorted(rng.randint(0, total) for _ in range(2))
        w = tuple(rng.randint(1, 2) for _ in range(total))
        u, v, x = w[: cuts[0]], w[cuts[0]: cuts[1]], w[cuts[1]:]
        failures += not braided_axioms_hold(random_diagonal(rng), u, v, x)
        failures += not braided_axioms_hold(R, u, v, x)
    record(4, "braided-algebra axioms", failures == 0, f"500 triples (diagonal and non-diagonal braiding), {failures} failures")


def test_5_isomorphism_and_canonical_forms():
    wrong = 0
    for t, s in product(SIGN_VECTORS, repeat=2):
        expected = s in (t, (t[3], t[2], t[1], t[0]))
        wrong += braided_isomorphic(Q(t), Q(s)) is not expected
    images = {vec: canonical_form(Q(vec)).as_vector() for vec in SIGN_VECTORS}
    moved = {v: c for v, c in images.items() if c != v}
    ok = (
        wrong == 0
        and set(images.values()) == set(CANONICAL_SIGN_VECTORS)
        and moved == {(-1, 1, 1, 1): (1, 1, 1, -1), (-1, -1, -1, 1): (1, -1, -1, -1)}
    )
    record(5, "isomorphism classes", ok, f"64 ordered pairs, {wrong} wrong; 8 vectors -> 6 canonical, coincidences {sorted(moved)}")


NON_AUTOMORPHISMS = [
    "(x1 + x1*x2*x1 ; x2)",
    "(x1*x2 - x2*x1 ; x2)",
    "(x1 + x2 ; 2*x1 + 2*x2 + 1)",
    "(x1^2 ; x2)",
    "(x1 + x2^2 ; x2 + x2^2)",
]


def constructed_non_automorphisms(count=20):
    # a * n * b is an automorphism only if n is, so sandwiches stay outside
    out = []
    for k in range(count):
        n = Endomorphism.parse(NON_AUTOMORPHISMS[k % len(NON_AUTOMORPHISMS)])
        if k >= len(NON_AUTOMORPHISMS):
            a = random_member(Group.G1, 2, 1000 + k, max_factors=2, max_degree=4)
            b = random_member(Group.G1, 2, 2000 + k, max_factors=2, max_degree=4)
            n = compose(compose(a, n), b)
        out.append(n)
    return out


def test_6_tame_decomposition_round_trip():
    start = time.perf_counter()
    round_trips = 0
    for seed in range(200):
        phi = random_member(Group.G1, 3, seed, max_factors=6)
        dec = tame_decompose(phi)
        round_trips += dec is not None and dec.recompose() == phi
    elapsed = time.perf_counter() - start
    rejected = sum(tame_decompose(n) is None for n in constructed_non_automorphisms())
    ok = round_trips == 200 and rejected == 20 and elapsed < 30
    record(6, "tame decomposition", ok, f"{round_trips}/200 round trips, {rejected}/20 non-automorphisms rejected", elapsed)


WITNESS_BRAIDINGS = list(CANONICAL_SIGN_VECTORS) + [(1, 5, Fraction(1, 5), 1), (1, -2, Fraction(-1, 2), -1)]


def test_7_witness_suite():
    start = time.perf_counter()
    reports = [witness_suite(Q(vec), seed=7, count=50) for vec in WITNESS_BRAIDINGS]
    elapsed = time.perf_counter() - start
    passed = sum(r["passed"] for r in reports)
    agree = all(r["methods_agree"] for r in reports)
    members = sum(r["members"] for r in reports)
    ok = passed == len(reports) and agree and elapsed < 60
    record(7, "automorphism witness suite", ok, f"{passed}/{len(reports)} braidings, {members} members, methods agree: {agree}", elapsed)


PARTITION = {
    (1, 1, 1, 1): AutGroupKind.FULL_AUT,
    (-1, -1, -1, -1): AutGroupKind.ODD_AUT,
    (-1, 1, 1, -1): AutGroupKind.TORIC_SEMIDIRECT_Z2,
    (1, -1, -1, 1): AutGroupKind.TORIC_SEMIDIRECT_Z2,
    (1, 1, 1, -1): AutGroupKind.TRIANGULAR_EVEN_SQUARES,
    (-1, 1, 1, 1): AutGroupKind.TRIANGULAR_EVEN_SQUARES,
    (1, -1, -1, -1): AutGroupKind.TORIC,
    (-1, -1, -1, 1): AutGroupKind.TORIC,
}


def test_8_classification_partition():
    right = sum(classify_aut_group(Q(v)) is kind for v, kind in PARTITION.items())
    record(8, "classification partition", right == 8, f"{right}/8 sign vectors")


def test_9_cli_golden():
    cases = load_cases()
    matched = 0
    for case in cases:
        code, out, err = invoke(case["argv"])
        matched += code == case["exit"] and render(out, err) == (GOLDEN / f"{case['name']}.out").read_text()
    record(9, "CLI golden files", matched == len(cases) >= 12, f"{matched}/{len(cases)} byte-identical")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
