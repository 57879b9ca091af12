"""Seeded exact samplers.

Everything here is driven by ``random.Random`` instances, so a fixed seed
reproduces the same rational data bit for bit.  Unit vectors come from the
rational parametrization of the sphere (inverse stereographic projection),
rotations from products of Givens rotations at rational circle points; both
tricks keep all invariants exact without any normalization step that could
fail.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import List

from .linalg import Matrix, identity_q, vdot
from .scalars import CirclePoint

INT_LO, INT_HI = -9, 9


def integer_vector(rng: Random, n: int, nonzero: bool = True) -> tuple:
    while True:
        v = tuple(rng.randint(INT_LO, INT_HI) for _ in range(n))
        if not nonzero or any(v):
            return v


def rational_fraction(rng: Random) -> Fraction:
    return Fraction(rng.randint(INT_LO, INT_HI), rng.randint(1, 9))


def unit_vector(rng: Random, n: int) -> tuple:
    """Exact rational unit vector in R^n via stereographic projection."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return (rng.choice((-1, 1)),)
    z = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n - 1)]
    nz = sum(x * x for x in z)
    den = nz + 1
    v = [2 * x / den for x in z] + [(nz - 1) / den]
    # random signed permutation for coordinate coverage
    rng.shuffle(v)
    v = [x if rng.random() < 0.5 else -x for x in v]
    assert vdot(v, v) == 1
    return tuple(v)


def circle_point(rng: Random) -> CirclePoint:
    """Exact rational point on the unit circle."""
    roll = rng.random()
    if roll < 0.1:
        return rng.choice((CirclePoint(1, 0), CirclePoint(-1, 0),
                           CirclePoint(0, 1), CirclePoint(0, -1)))
    t = rational_fraction(rng)
    den = 1 + t * t
    p = CirclePoint((1 - t * t) / den, 2 * t / den)
    return -p if roll < 0.55 else p


def circle_point_with_half(rng: Random) -> CirclePoint:
    """A circle point that carries an exact half-angle witness."""
    return circle_point(rng).square()


def givens(k: int, i: int, j: int, p: CirclePoint) -> Matrix:
    """Rotation by the point p in the (i, j) coordinate plane of R^k."""
    rows = [[Fraction(1) if a == b else Fraction(0) for b in range(k)] for a in range(k)]
    rows[i][i] = p.c
    rows[j][j] = p.c
    rows[i][j] = -p.d
    rows[j][i] = p.d
    return Matrix(rows)


def rotation(rng: Random, k: int, twists: int = 0) -> Matrix:
    """Exact element of SO(k): a product of seeded Givens rotations."""
    if k < 2:
        return identity_q(k)
    twists = twists or 2 * k
    out = identity_q(k)
    for _ in range(twists):
        i = rng.randrange(k)
        j = rng.randrange(k)
        if i == j:
            continue
        out = givens(k, i, j, circle_point(rng)) @ out
    return out


def deterministic_circle_points(count: int) -> List[CirclePoint]:
    """Fixed list of distinct rational circle points (no randomness)."""
    pts = []
    t = 0
    while len(pts) < count:
        t += 1
        f = Fraction(t, count + 1)
        den = 1 + f * f
        pts.append(CirclePoint((1 - f * f) / den, 2 * f / den))
    return pts


def perpendicular_integer_vector(rng: Random, v: tuple) -> tuple:
    """Nonzero rational vector exactly orthogonal to the nonzero vector v."""
    nv = vdot(v, v)
    while True:
        u = integer_vector(rng, len(v))
        w = tuple(nv * x - vdot(u, v) * y for x, y in zip(u, v))
        if any(w):
            return w
