"""Shared braiding fixtures: random diagonal braidings and explicit matrices."""

import random
from fractions import Fraction
from itertools import product

from braidalg.braiding import DiagonalBraiding, MatrixBraiding
from braidalg.scalars import QQ

SIGN_VECTORS = tuple(
    (a, b, b, d) for a, b, d in product((1, -1), repeat=3)
)  # the 8 involutive vectors with q12 = q21 = +-1


def matrix_from_columns(columns, n=2):
    """columns[(a, b)] = {(c, d): coeff} is the image of x_a (x) x_b."""
    size = n * n
    m = [[0] * size for _ in range(size)]
    for (a, b), image in columns.items():
        for (c, d), coeff in image.items():
            m[(c - 1) * n + (d - 1)][(a - 1) * n + (b - 1)] = coeff
    return m


def r_matrix(q=Fraction(3)):
    """A non-diagonal solution of the braid relation."""
    cols = {
        (1, 1): {(1, 1): q},
        (1, 2): {(2, 1): 1},
        (2, 1): {(1, 2): 1, (2, 1): q - 1 / q},
        (2, 2): {(2, 2): q},
    }
    return MatrixBraiding(matrix_from_columns(cols), QQ)


def _m(cols):
    return matrix_from_columns({k: {tuple(map(int, t)): c for t, c in v.items()} for k, v in cols.items()})


NON_BRAIDINGS = [
    # x1x1 <-> x1x2, rest fixed
    _m({(1, 1): {"12": 1}, (1, 2): {"11": 1}, (2, 1): {"21": 1}, (2, 2): {"22": 1}}),
    _m({(1, 1): {"11": 1}, (1, 2): {"21": 1, "12": 1}, (2, 1): {"12": 1}, (2, 2): {"22": 1}}),
    _m({(1, 1): {"11": 1}, (1, 2): {"12": 1}, (2, 1): {"21": 1}, (2, 2): {"11": 1, "22": 1}}),
    _m({(1, 1): {"22": 1}, (1, 2): {"21": 1}, (2, 1): {"12": 1}, (2, 2): {"11": 1}}),
    _m({(1, 1): {"11": 2}, (1, 2): {"21": 1}, (2, 1): {"12": 1}, (2, 2): {"22": 1, "11": 1}}),
    _m({(1, 1): {"11": 1}, (1, 2): {"22": 1}, (2, 1): {"12": 1}, (2, 2): {"21": 1}}),
]

_POOL = [Fraction(k, d) for k in range(-6, 7) if k for d in (1, 2, 3, 5)]


def random_diagonal(rng: random.Random, n=2, field=QQ, involutive=False):
    if field.p is None:
        draw = lambda: rng.choice(_POOL)  # noqa: E731
    else:
        draw = lambda: rng.randrange(1, field.p)  # noqa: E731
    q = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if involutive and j < i:
                q[i][j] = field(1) / q[j][i]
            elif involutive and i == j:
                q[i][j] = rng.choice((1, -1))
            else:
                q[i][j] = draw()
    return DiagonalBraiding(tuple(map(tuple, q)), field)
