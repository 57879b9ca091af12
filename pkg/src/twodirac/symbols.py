"""Symbol sequence of the length-3 complex and its exactness certificates.

For a covector X = (X1, X2), write M_i for the Clifford action of X_i.  The
three symbols are

    s1 = [M1; M2]                          (spinors -> pairs, order 1)
    s2 = [[-M2 M1, M1 M1], [-M2 M2, M1 M2]]  (pairs -> pairs, order 2)
    s3 = [-M2, M1]                          (pairs -> spinors, order 1)

``s2 s1 = 0`` and ``s3 s2 = 0`` hold identically because squares of vectors
are scalars; this is asserted on construction of every SymbolTriple.
Ellipticity amounts to ranks (s, s, s) for every nonzero covector, checked
here in exact arithmetic (fraction-free elimination) with an optional
floating-point mirror.  The alternating sum of the fiber dimensions
(s, 2s, 2s, s) telescopes to zero; that is the symbol-level index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import List, Optional, Tuple

from .clifford import GammaRep, build_gamma_rep, clifford_mat
from .linalg import Matrix, block, hstack, is_zero_vec, rank_bareiss, vstack
from .sampling import integer_vector, perpendicular_integer_vector

FLOAT_RANK_RTOL = 1e-9
MODES = ("exact", "float")


@dataclass(frozen=True)
class Covector:
    """A cotangent vector, viewed as a pair of vectors in R^n."""

    x1: tuple
    x2: tuple

    def __post_init__(self):
        if len(self.x1) != len(self.x2):
            raise ValueError("covector components have different lengths")

    @property
    def n(self) -> int:
        return len(self.x1)

    def is_zero(self) -> bool:
        return is_zero_vec(self.x1) and is_zero_vec(self.x2)

    def scaled(self, t) -> "Covector":
        return Covector(tuple(t * a for a in self.x1), tuple(t * a for a in self.x2))


def sigma1(rep: GammaRep, x: Covector) -> Matrix:
    """First symbol: psi -> (X1.psi, X2.psi), stacked as a 2s x s matrix."""
    if x.n != rep.n:
        raise ValueError(f"covector dimension {x.n} != n = {rep.n}")
    return vstack(clifford_mat(rep, x.x1), clifford_mat(rep, x.x2))


def sigma2(rep: GammaRep, x: Covector) -> Matrix:
    """Second symbol: (p1, p2) -> (-X2.X1.p1 + X1.X1.p2, -X2.X2.p1 + X1.X2.p2)."""
    if x.n != rep.n:
        raise ValueError(f"covector dimension {x.n} != n = {rep.n}")
    m1 = clifford_mat(rep, x.x1)
    m2 = clifford_mat(rep, x.x2)
    return block([[-(m2 @ m1), m1 @ m1],
                  [-(m2 @ m2), m1 @ m2]])


def sigma3(rep: GammaRep, x: Covector) -> Matrix:
    """Third symbol: (q1, q2) -> -X2.q1 + X1.q2, an s x 2s block row."""
    if x.n != rep.n:
        raise ValueError(f"covector dimension {x.n} != n = {rep.n}")
    return hstack(-clifford_mat(rep, x.x2), clifford_mat(rep, x.x1))


@dataclass(frozen=True)
class SymbolTriple:
    """The three symbol matrices of one covector; a complex by construction."""

    s1: Matrix
    s2: Matrix
    s3: Matrix

    def __post_init__(self):
        if not (self.s2 @ self.s1).is_zero():
            raise AssertionError("s2 @ s1 != 0: complex property violated")
        if not (self.s3 @ self.s2).is_zero():
            raise AssertionError("s3 @ s2 != 0: complex property violated")


def symbol_triple(rep: GammaRep, x: Covector) -> SymbolTriple:
    return SymbolTriple(sigma1(rep, x), sigma2(rep, x), sigma3(rep, x))


def _rank_float(m: Matrix) -> int:
    import numpy as np
    a = np.array([[complex(e) for e in row] for row in m.rows], dtype=complex)
    sv = np.linalg.svd(a, compute_uv=False)
    top = sv.max(initial=0.0)
    if top == 0.0:
        return 0
    return int((sv > FLOAT_RANK_RTOL * top).sum())


@dataclass(frozen=True)
class ExactnessReport:
    rank1: int
    rank2: int
    rank3: int
    exact_at_0: bool
    exact_at_1: bool
    exact_at_2: bool
    exact_at_3: bool

    @property
    def all_exact(self) -> bool:
        return (self.exact_at_0 and self.exact_at_1
                and self.exact_at_2 and self.exact_at_3)


def exactness_report(rep: GammaRep, x: Covector, mode: str = "exact") -> ExactnessReport:
    """Rank the three symbols of a nonzero covector and flag exactness.

    Exact mode is the authority; float mode ranks by singular values with a
    relative threshold and exists to cross-check the exact path.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if x.is_zero():
        raise ValueError("exactness is only defined for nonzero covectors")
    triple = symbol_triple(rep, x)
    rank_of = rank_bareiss if mode == "exact" else _rank_float
    r1 = rank_of(triple.s1)
    r2 = rank_of(triple.s2)
    r3 = rank_of(triple.s3)
    s = rep.s
    return ExactnessReport(rank1=r1, rank2=r2, rank3=r3,
                           exact_at_0=r1 == s,
                           exact_at_1=r1 + r2 == 2 * s,
                           exact_at_2=r2 + r3 == 2 * s,
                           exact_at_3=r3 == s)


@dataclass(frozen=True)
class ScanFailure:
    covector: Covector
    report: ExactnessReport


@dataclass(frozen=True)
class ScanReport:
    n: int
    samples: int
    seed: int
    mode: str
    checked: int
    passed: bool
    failures: Tuple[ScanFailure, ...] = field(default_factory=tuple)


def degenerate_family(n: int, rng: Optional[Random] = None) -> List[Covector]:
    """Covectors random sampling almost never hits: one component zero,
    collinear pairs, and orthogonal pairs, over basis and seeded vectors."""
    zero = (0,) * n
    vecs = [tuple(1 if i == a else 0 for i in range(n)) for a in range(n)]
    if rng is not None:
        vecs += [integer_vector(rng, n) for _ in range(3)]
    out: List[Covector] = []
    for v in vecs:
        out.append(Covector(v, zero))
        out.append(Covector(zero, v))
        out.append(Covector(v, v))
        out.append(Covector(v, tuple(-a for a in v)))
    for a in range(n):
        for b in range(n):
            if a != b:
                out.append(Covector(vecs[a], vecs[b]))
    if rng is not None:
        for v in vecs[n:]:
            out.append(Covector(v, perpendicular_integer_vector(rng, v)))
    return out


def random_covector(n: int, rng: Random) -> Covector:
    while True:
        x = Covector(integer_vector(rng, n, nonzero=False),
                     integer_vector(rng, n, nonzero=False))
        if not x.is_zero():
            return x


def ellipticity_scan(n: int, samples: int, seed: int, mode: str = "exact") -> ScanReport:
    """Run exactness reports over seeded covectors plus the degenerate family.

    Covectors are generated up front from the seed, so the outcome is a pure
    function of (n, samples, seed, mode) no matter how the loop is scheduled.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    rep = build_gamma_rep(n)
    rng = Random(seed)
    covectors = degenerate_family(n, rng)
    covectors += [random_covector(n, rng) for _ in range(samples)]
    failures = []
    for x in covectors:
        rpt = exactness_report(rep, x, mode)
        if not rpt.all_exact:
            failures.append(ScanFailure(x, rpt))
    return ScanReport(n=n, samples=samples, seed=seed, mode=mode,
                      checked=len(covectors), passed=not failures,
                      failures=tuple(failures))


# -- fiber dimensions, weights, index -----------------------------------------

def spinor_dim(n: int) -> int:
    return 2 ** (n // 2)


@dataclass(frozen=True)
class WeightTable:
    """Highest weights, fiber dimensions, and operator orders of the complex."""

    n: int
    lam: Tuple[Tuple[Fraction, Fraction], ...]
    fiber_dims: Tuple[int, int, int, int]
    orders: Tuple[int, int, int]

    def __post_init__(self):
        d = self.fiber_dims
        if d[0] - d[1] + d[2] - d[3] != 0:
            raise AssertionError("fiber dimensions fail to telescope")


def weight_table(n: int) -> WeightTable:
    """The four module weights (halved bracket pairs) and orders (1, 2, 1)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    half = Fraction(1, 2)
    lam = ((half * (n - 1), half * (n - 1)),
           (half * (n + 1), half * (n - 1)),
           (half * (n + 3), half * (n + 1)),
           (half * (n + 3), half * (n + 3)))
    s = spinor_dim(n)
    return WeightTable(n=n, lam=lam, fiber_dims=(s, 2 * s, 2 * s, s),
                       orders=(1, 2, 1))


def symbol_index(n: int) -> int:
    """Alternating sum of the fiber dimensions: s - 2s + 2s - s = 0."""
    d = weight_table(n).fiber_dims
    return d[0] - d[1] + d[2] - d[3]


@dataclass(frozen=True)
class IndexCertificate:
    n: int
    fiber_dims: Tuple[int, int, int, int]
    index: int
    end_modules_match: bool     # dim V0 == dim V3
    middle_modules_match: bool  # dim V1 == dim V2


def index_certificate(n: int) -> IndexCertificate:
    """Index plus the duality pairings that force it to vanish."""
    d = weight_table(n).fiber_dims
    return IndexCertificate(n=n, fiber_dims=d, index=symbol_index(n),
                            end_modules_match=d[0] == d[3],
                            middle_modules_match=d[1] == d[2])
