"""Seeded random instances for tests and verification sweeps.

Every sampler takes an explicit random.Random so runs are reproducible:
the same seed always yields the same instances.  Coefficients are sparse
rationals with numerators and denominators bounded by 10.  Invertible
matrices come from rejection sampling with exact singularity detection,
falling back to a unitriangular-times-diagonal product that is invertible
by construction, so samplers never return a singular matrix.
"""

import random
from fractions import Fraction

from .algebra import unit_witness
from .errors import MissingUnit, Singular
from .gdet import all_ns_multipliers
from .gmatrix import GradedMatrix, identity, invert_matrix, matmul
from .grading import parity


def make_rng(seed=0):
    return random.Random(seed)


def rand_fraction(rng, nonzero=False):
    while True:
        num = rng.randint(-10, 10)
        if num == 0 and nonzero:
            continue
        den = rng.randint(2, 10) if rng.random() < 0.25 else 1
        return Fraction(num, den)


def rand_component(rng, algebra, degree, density=0.75, nonzero=False):
    """A random element of the homogeneous component A^degree; the zero
    element when the component is empty (regardless of nonzero)."""
    idxs = algebra.component_indices(degree)
    if not idxs:
        return algebra.zero()
    for _ in range(20):
        coeffs = {}
        for k in idxs:
            if rng.random() < density:
                c = rand_fraction(rng)
                if c:
                    coeffs[k] = c
        if coeffs or not nonzero:
            return algebra.element(coeffs)
    return algebra.basis_element(idxs[0])


def rand_element(rng, algebra, density=0.4):
    """A random, generally inhomogeneous element."""
    coeffs = {}
    for k in range(algebra.dim):
        if rng.random() < density:
            c = rand_fraction(rng)
            if c:
                coeffs[k] = c
    return algebra.element(coeffs)


def sorted_degrees(algebra):
    return sorted(algebra.realized_degrees(), key=lambda d: d.residues)


def parity_split(algebra):
    """Realized degrees of A split into (even, odd), each sorted."""
    evens, odds = [], []
    for d in sorted_degrees(algebra):
        (odds if parity(algebra.lam, d) else evens).append(d)
    return evens, odds


def rand_degrees(rng, algebra, n):
    """A degree vector drawn from the realized degrees of A."""
    pool = sorted_degrees(algebra)
    return tuple(rng.choice(pool) for _ in range(n))


def rand_parity_constant_degrees(rng, algebra, n):
    """A degree vector whose entries share one parity, so that degree-even
    matrices over it have entries of even degree."""
    evens, odds = parity_split(algebra)
    pool = odds if (odds and rng.random() < 0.35) else evens
    return tuple(rng.choice(pool) for _ in range(n))


def rand_parity_sorted_degrees(rng, algebra, r0, r1):
    """r0 even degrees followed by r1 odd degrees, all realized in A."""
    evens, odds = parity_split(algebra)
    if r1 and not odds:
        raise MissingUnit(f"{algebra.name} has no realized odd degrees")
    return (tuple(rng.choice(evens) for _ in range(r0))
            + tuple(rng.choice(odds) for _ in range(r1)))


def rand_matrix(rng, algebra, nu, degree=None, mu=None, density=0.75):
    """A random homogeneous matrix of the given degree (default 0) with row
    degrees mu (default nu) and column degrees nu."""
    mu = nu if mu is None else mu
    x = algebra.group.zero() if degree is None else degree
    grid = [[rand_component(rng, algebra, x - mi + nj, density)
             for nj in nu] for mi in mu]
    return GradedMatrix(algebra, mu, nu, grid)


def _unitriangular(rng, algebra, nu, upper, density=0.5):
    n = len(nu)
    grid = [[algebra.one() if i == j else algebra.zero() for j in range(n)]
            for i in range(n)]
    for i in range(n):
        rng_cols = range(i + 1, n) if upper else range(i)
        for j in rng_cols:
            grid[i][j] = rand_component(rng, algebra, nu[j] - nu[i], density)
    return GradedMatrix(algebra, nu, nu, grid)


def rand_invertible(rng, algebra, nu, degree=None, attempts=5, density=0.75):
    """A random invertible homogeneous matrix of the given degree (default
    0).  Rejection sampling first; if every attempt is singular, build
    (I+U) D (I+L) with strictly triangular U, L and an invertible diagonal,
    which needs a unit of the requested degree in A."""
    x = algebra.group.zero() if degree is None else degree
    for _ in range(attempts):
        cand = rand_matrix(rng, algebra, nu, x, density=density)
        try:
            invert_matrix(cand)
            return cand
        except Singular:
            continue
    w = unit_witness(algebra, x)
    if w is None:
        raise MissingUnit(
            f"cannot build an invertible degree-{x.residues} matrix: "
            f"{algebra.name} has no invertible element of that degree")
    n = len(nu)
    diag = [[(w[0] * rand_fraction(rng, nonzero=True)) if i == j
             else algebra.zero() for j in range(n)] for i in range(n)]
    d = GradedMatrix(algebra, nu, nu, diag)
    u = _unitriangular(rng, algebra, nu, upper=True)
    lo = _unitriangular(rng, algebra, nu, upper=False)
    return matmul(matmul(u, d), lo)


def rand_invertible_parity_blocks(rng, algebra, nu, r1, degree=None,
                                  attempts=4):
    """A random invertible homogeneous even-degree matrix over parity-sorted
    nu whose odd-odd block is invertible too (the shape the Berezinian
    needs).  Fallback: block-unitriangular times block-diagonal."""
    x = algebra.group.zero() if degree is None else degree
    n = len(nu)
    r0 = n - r1
    for _ in range(attempts):
        cand = rand_matrix(rng, algebra, nu, x)
        try:
            invert_matrix(cand)
        except Singular:
            continue
        block = [[cand.entry(i, j) for j in range(r0, n)]
                 for i in range(r0, n)]
        try:
            invert_matrix(GradedMatrix(algebra, nu[r0:], nu[r0:], block))
            return cand
        except Singular:
            continue
    d0 = rand_invertible(rng, algebra, nu[:r0], x)
    d1 = rand_invertible(rng, algebra, nu[r0:], x)
    zero = algebra.zero()
    grid = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(r0):
        for j in range(r0):
            grid[i][j] = d0.entry(i, j)
    for i in range(r1):
        for j in range(r1):
            grid[r0 + i][r0 + j] = d1.entry(i, j)
    d = GradedMatrix(algebra, nu, nu, grid)
    ug = [list(row) for row in identity(algebra, nu).entries]
    lg = [list(row) for row in identity(algebra, nu).entries]
    for i in range(r0):
        for j in range(r0, n):
            ug[i][j] = rand_component(rng, algebra, nu[j] - nu[i])
            lg[j][i] = rand_component(rng, algebra, nu[i] - nu[j])
    u = GradedMatrix(algebra, nu, nu, ug)
    lo = GradedMatrix(algebra, nu, nu, lg)
    return matmul(matmul(u, d), lo)


def rand_permutation(rng, n):
    pi = list(range(n))
    rng.shuffle(pi)
    return tuple(pi)


def rand_sigma(rng, lam):
    return rng.choice(all_ns_multipliers(lam))
