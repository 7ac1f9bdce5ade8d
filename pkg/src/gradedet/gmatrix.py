"""Graded matrices over a graded algebra.

A matrix carries a row degree vector mu, a column degree vector nu and
entries in the algebra; it is homogeneous of degree x when entry (i,j)
is homogeneous of degree x - mu_i + nu_j.  This module provides the
homogeneity bookkeeping, products, the left module action, the J_sigma
transform into the twisted algebra, the graded trace, exact inversion,
permutation matrices built from homogeneous units, and base change.
"""

from collections import Counter

from .algebra import (AlgebraElement, INHOMOGENEOUS, invert_element,
                      left_regular_matrix, solve_linear, transport, twist,
                      unit_witness)
from .errors import (DegreeMismatch, InhomogeneousScalar, InvalidParams,
                     MissingUnit, MixedAlgebras, NotSquare, Singular)
from .grading import parity
from .scalars import ONE, ZERO, cyclo


def gamma_rank(degrees):
    """Multiset of degrees as a Counter."""
    return Counter(degrees)


def superrank(lam, degrees):
    """(r_even, r_odd) through the parity of lam."""
    r1 = sum(parity(lam, d) for d in degrees)
    return len(degrees) - r1, r1


def _coerce_degrees(group, degrees):
    return tuple(d if hasattr(d, "residues") else group.element(d)
                 for d in degrees)


class GradedMatrix:
    __slots__ = ("algebra", "row_degrees", "col_degrees", "entries")

    def __init__(self, algebra, row_degrees, col_degrees, entries):
        self.algebra = algebra
        self.row_degrees = _coerce_degrees(algebra.group, row_degrees)
        self.col_degrees = _coerce_degrees(algebra.group, col_degrees)
        m, n = len(self.row_degrees), len(self.col_degrees)
        rows = []
        if len(entries) != m:
            raise InvalidParams(f"expected {m} rows, got {len(entries)}")
        for row in entries:
            if len(row) != n:
                raise InvalidParams(f"expected {n} columns, got {len(row)}")
            out = []
            for e in row:
                if isinstance(e, AlgebraElement):
                    if e.algebra is not algebra and e.algebra != algebra:
                        raise MixedAlgebras(
                            f"entry from {e.algebra!r} in a matrix over "
                            f"{algebra!r}")
                    out.append(e)
                else:
                    out.append(algebra.from_scalar(e))
            rows.append(tuple(out))
        self.entries = tuple(rows)

    @property
    def nrows(self):
        return len(self.row_degrees)

    @property
    def ncols(self):
        return len(self.col_degrees)

    def entry(self, i, j):
        return self.entries[i][j]

    def is_endo(self):
        return self.row_degrees == self.col_degrees

    def degree_of(self):
        """The homogeneous degree, INHOMOGENEOUS, or the group zero for the
        zero matrix (homogeneous of every degree)."""
        degs = set()
        for i, mu in enumerate(self.row_degrees):
            for j, nu in enumerate(self.col_degrees):
                for k in self.entries[i][j].coeffs:
                    degs.add(self.algebra.degrees[k] + mu - nu)
        if not degs:
            return self.algebra.group.zero()
        if len(degs) == 1:
            return next(iter(degs))
        return INHOMOGENEOUS

    def is_homogeneous_of(self, x):
        for i, mu in enumerate(self.row_degrees):
            want_shift = x - mu
            for j, nu in enumerate(self.col_degrees):
                want = want_shift + nu
                for k in self.entries[i][j].coeffs:
                    if self.algebra.degrees[k] != want:
                        return False
        return True

    def homogeneous_components(self):
        comps = {}
        zero = self.algebra.zero()
        for i, mu in enumerate(self.row_degrees):
            for j, nu in enumerate(self.col_degrees):
                for d, part in self.entries[i][j].homogeneous_components().items():
                    x = d + mu - nu
                    grid = comps.get(x)
                    if grid is None:
                        grid = [[zero for _ in range(self.ncols)]
                                for _ in range(self.nrows)]
                        comps[x] = grid
                    grid[i][j] = part
        return {x: GradedMatrix(self.algebra, self.row_degrees,
                                self.col_degrees, grid)
                for x, grid in comps.items()}

    def map_entries(self, fn):
        return GradedMatrix(self.algebra, self.row_degrees, self.col_degrees,
                            [[fn(e) for e in row] for row in self.entries])

    def __add__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check_compatible(other)
        return GradedMatrix(self.algebra, self.row_degrees, self.col_degrees,
                            [[a + b for a, b in zip(r1, r2)]
                             for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self.map_entries(lambda e: -e)

    def __mul__(self, s):
        if isinstance(s, (GradedMatrix, AlgebraElement)):
            return NotImplemented
        return self.map_entries(lambda e: e * s)

    __rmul__ = __mul__

    def _check_compatible(self, other):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise MixedAlgebras(
                f"matrices over {self.algebra!r} and {other.algebra!r}")
        if (self.row_degrees != other.row_degrees
                or self.col_degrees != other.col_degrees):
            raise DegreeMismatch(
                "matrix addition needs identical degree vectors")

    def __matmul__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return matmul(self, other)

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.algebra == other.algebra
                and self.row_degrees == other.row_degrees
                and self.col_degrees == other.col_degrees
                and self.entries == other.entries)

    __hash__ = None

    def __repr__(self):
        rows = "; ".join(", ".join(repr(e) for e in row)
                         for row in self.entries)
        return f"[{rows}]"


def identity(algebra, degrees):
    degrees = _coerce_degrees(algebra.group, degrees)
    n = len(degrees)
    one, zero = algebra.one(), algebra.zero()
    return GradedMatrix(algebra, degrees, degrees,
                        [[one if i == j else zero for j in range(n)]
                         for i in range(n)])


def zero_matrix(algebra, row_degrees, col_degrees):
    zero = algebra.zero()
    return GradedMatrix(algebra, row_degrees, col_degrees,
                        [[zero for _ in col_degrees] for _ in row_degrees])


def diagonal(algebra, degrees, elems):
    degrees = _coerce_degrees(algebra.group, degrees)
    n = len(degrees)
    if len(elems) != n:
        raise InvalidParams("diagonal needs one entry per degree")
    zero = algebra.zero()
    return GradedMatrix(algebra, degrees, degrees,
                        [[elems[i] if i == j else zero for j in range(n)]
                         for i in range(n)])


def matmul(x, y):
    if y.algebra is not x.algebra and y.algebra != x.algebra:
        raise MixedAlgebras(f"matrices over {x.algebra!r} and {y.algebra!r}")
    if x.col_degrees != y.row_degrees:
        raise DegreeMismatch(
            f"inner degree vectors differ: {list(x.col_degrees)} vs "
            f"{list(y.row_degrees)}")
    out = []
    for i in range(x.nrows):
        row = []
        for j in range(y.ncols):
            acc = x.algebra.zero()
            for k in range(x.ncols):
                acc = acc + x.entries[i][k] * y.entries[k][j]
            row.append(acc)
        out.append(row)
    result = GradedMatrix(x.algebra, x.row_degrees, y.col_degrees, out)
    dx, dy = x.degree_of(), y.degree_of()
    if dx is not INHOMOGENEOUS and dy is not INHOMOGENEOUS:
        assert result.is_homogeneous_of(dx + dy)
    return result


def scalar_action(a, x):
    """Left module action: (a.X)^i_j = lambda(deg a, mu_i) a X^i_j, the
    factor moving a past the row basis vector of degree mu_i."""
    da = a.degree_of()
    if da is INHOMOGENEOUS:
        raise InhomogeneousScalar(
            "the module action needs a homogeneous scalar")
    lam = x.algebra.lam
    out = []
    for i, mu in enumerate(x.row_degrees):
        factor = lam.value(da, mu)
        out.append([(a * e) * factor for e in x.entries[i]])
    return GradedMatrix(x.algebra, x.row_degrees, x.col_degrees, out)


def j_sigma(x, sigma):
    """The twist transform: on a homogeneous component of degree d,
    (J_sigma X)^i_j = sigma(d, nu_j) sigma(nu_i, d - nu_i + nu_j)^(-1)
    X^i_j, valued over twist(A, sigma); inhomogeneous input transforms
    componentwise and sums."""
    if x.nrows != x.ncols or not x.is_endo():
        raise NotSquare("J_sigma needs a square matrix with equal row and "
                        "column degree vectors")
    twisted = twist(x.algebra, sigma)
    nu = x.col_degrees
    n_ord = sigma.root_order
    grid = [[twisted.zero() for _ in range(x.ncols)] for _ in range(x.nrows)]
    for d, comp in x.homogeneous_components().items():
        for i, nui in enumerate(nu):
            for j, nuj in enumerate(nu):
                e = comp.entries[i][j]
                if e.is_zero():
                    continue
                exp = (sigma.exponent(d, nuj)
                       - sigma.exponent(nui, d - nui + nuj)) % n_ord
                grid[i][j] = grid[i][j] + transport(e, twisted) * cyclo(exp, n_ord)
    return GradedMatrix(twisted, nu, nu, grid)


def graded_trace(x):
    """Sum over homogeneous components of degree d of
    sum_i lambda(nu_i, d + nu_i) X^i_i."""
    if x.nrows != x.ncols or not x.is_endo():
        raise NotSquare("the graded trace needs a square matrix with equal "
                        "row and column degree vectors")
    lam = x.algebra.lam
    acc = x.algebra.zero()
    for i, nui in enumerate(x.col_degrees):
        for d, part in x.entries[i][i].homogeneous_components().items():
            acc = acc + part * lam.value(nui, d + nui)
    return acc


def invert_matrix(x):
    """Two-sided inverse by exact linear solving: the equations X Y = I
    over the algebra become a scalar block system through the left-regular
    representation of each entry.  A right inverse is two-sided here, and
    the inverse of a homogeneous matrix of degree d is homogeneous of
    degree -d."""
    if x.nrows != x.ncols:
        raise NotSquare("only square matrices can be inverted")
    alg = x.algebra
    n = x.nrows
    dim = alg.dim
    blocks = [[left_regular_matrix(x.entries[i][k]) for k in range(n)]
              for i in range(n)]
    size = n * dim
    m = [[ZERO] * size for _ in range(size)]
    for i in range(n):
        for k in range(n):
            block = blocks[i][k]
            for r in range(dim):
                row = m[i * dim + r]
                brow = block[r]
                for c in range(dim):
                    if brow[c]:
                        row[k * dim + c] = brow[c]
    rhs = [[ZERO] * n for _ in range(size)]
    for j in range(n):
        rhs[j * dim + alg.unit_index][j] = ONE
    sol = solve_linear(m, rhs)
    if sol is None:
        raise Singular(f"matrix is not invertible over {alg.name}")
    grid = []
    for k in range(n):
        row = []
        for j in range(n):
            coeffs = {r: sol[k * dim + r][j] for r in range(dim)
                      if sol[k * dim + r][j]}
            row.append(AlgebraElement(alg, coeffs))
        grid.append(row)
    return GradedMatrix(alg, x.col_degrees, x.row_degrees, grid)


def _check_permutation(pi, n):
    pi = tuple(int(v) for v in pi)
    if sorted(pi) != list(range(n)):
        raise InvalidParams(f"{pi} is not a permutation of 0..{n - 1}")
    return pi


def permutation_matrix(algebra, pi, nu, units=None):
    """P(pi)^i_j = delta^i_(pi(j)) t_(nu_i)^(-1) t_(nu_j), homogeneous of
    degree 0; pi -> P(pi) is a group morphism because the units cancel in
    products.  Units default to the witnesses found by unit_degrees; a
    units map {degree: invertible homogeneous element} overrides."""
    nu = _coerce_degrees(algebra.group, nu)
    n = len(nu)
    pi = _check_permutation(pi, n)
    ts = {}
    tinvs = {}
    for d in set(nu):
        if units is not None and d in units:
            t = units[d]
            if t.degree_of() != d:
                raise InvalidParams(
                    f"supplied unit for degree {d!r} has degree "
                    f"{t.degree_of()!r}")
            ts[d] = t
            tinvs[d] = invert_element(t)
            continue
        pair = unit_witness(algebra, d)
        if pair is None:
            raise MissingUnit(
                f"no invertible homogeneous element of degree {d!r} in "
                f"{algebra.name}; supply units from a crossed-product "
                "tensor factor")
        ts[d], tinvs[d] = pair
    zero = algebra.zero()
    grid = [[zero for _ in range(n)] for _ in range(n)]
    for j in range(n):
        i = pi[j]
        grid[i][j] = tinvs[nu[i]] * ts[nu[j]]
    return GradedMatrix(algebra, nu, nu, grid)


def change_basis(x, p):
    """P^(-1) X P, with the transported degree vector taken from P's
    columns."""
    if x.nrows != x.ncols or not x.is_endo():
        raise NotSquare("base change needs a square matrix with equal row "
                        "and column degree vectors")
    if p.row_degrees != x.col_degrees:
        raise DegreeMismatch(
            f"base-change rows {list(p.row_degrees)} do not match the "
            f"matrix degree vector {list(x.col_degrees)}")
    if p.degree_of() is INHOMOGENEOUS or p.degree_of():
        raise DegreeMismatch("base-change matrices must be homogeneous of "
                             "degree 0")
    return invert_matrix(p) @ x @ p


def shift_degrees(x, shift):
    """Regrade by a constant: both degree vectors move by the same group
    element, entries unchanged (the homogeneous degree is unchanged)."""
    return GradedMatrix(x.algebra,
                        [d + shift for d in x.row_degrees],
                        [d + shift for d in x.col_degrees],
                        [list(row) for row in x.entries])
