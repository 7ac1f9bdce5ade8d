"""Parity block decomposition, UDL factorization, and the graded
Berezinian.

For a parity-sorted degree vector (even degrees first), a homogeneous
even-degree invertible matrix X factors as U D L with unitriangular U, L
and block-diagonal D = diag(Schur complement, X11).  The graded Berezinian
is sigma(x,x)^(-r1(r0-r1)) Gdet_sigma(X00 - X01 X11^(-1) X10)
Gdet_sigma(X11)^(-1); ber_super is the independent classical-Berezinian
path over the twisted (supercommutative) algebra, which matches gber
exactly once the sigma bookkeeping between the twisted product and the
base product is carried out.
"""

from dataclasses import dataclass

from .algebra import INHOMOGENEOUS, invert_element, transport
from .errors import (InvalidParams, NotInvertible, NotParitySorted,
                     NotSquare, OddDegree, Singular, SingularOddBlock)
from .gdet import canonical_sigma, det_of_commuting, gdet_sigma
from .gmatrix import (GradedMatrix, identity, invert_matrix, j_sigma,
                      zero_matrix)
from .grading import is_ns_multiplier, parity, trivial_multiplier
from .scalars import cyclo


@dataclass(frozen=True)
class ParityBlocks:
    x00: GradedMatrix
    x01: GradedMatrix
    x10: GradedMatrix
    x11: GradedMatrix
    even_degrees: tuple
    odd_degrees: tuple

    @property
    def superrank(self):
        return len(self.even_degrees), len(self.odd_degrees)


def parity_blocks(x):
    """Split a square matrix with a parity-sorted degree vector (all even
    degrees before all odd ones) into its four parity blocks."""
    if x.nrows != x.ncols or not x.is_endo():
        raise NotSquare("parity blocks need a square matrix with equal row "
                        "and column degree vectors")
    lam = x.algebra.lam
    parities = [parity(lam, d) for d in x.col_degrees]
    r0 = parities.count(0)
    if any(parities[:r0]) or not all(parities[r0:]):
        raise NotParitySorted(
            f"degree vector parities {parities} are not sorted "
            "even-then-odd; permute the basis first (see "
            "permutation_matrix/change_basis)")
    nu0 = x.col_degrees[:r0]
    nu1 = x.col_degrees[r0:]

    def block(rows, cols, rdeg, cdeg):
        return GradedMatrix(x.algebra, rdeg, cdeg,
                            [[x.entries[i][j] for j in cols] for i in rows])

    n = x.nrows
    even_idx, odd_idx = range(r0), range(r0, n)
    return ParityBlocks(
        x00=block(even_idx, even_idx, nu0, nu0),
        x01=block(even_idx, odd_idx, nu0, nu1),
        x10=block(odd_idx, even_idx, nu1, nu0),
        x11=block(odd_idx, odd_idx, nu1, nu1),
        even_degrees=nu0,
        odd_degrees=nu1,
    )


def _even_degree(x, what):
    d = x.degree_of()
    if d is INHOMOGENEOUS:
        raise OddDegree(f"{what} needs a homogeneous matrix, got an "
                        "inhomogeneous one")
    if parity(x.algebra.lam, d):
        raise OddDegree(f"{what} needs an even homogeneous degree, got "
                        f"{d!r}")
    return d


def _assemble(algebra, nu0, nu1, b00, b01, b10, b11):
    nu = tuple(nu0) + tuple(nu1)
    r0 = len(nu0)
    grid = []
    for i in range(len(nu)):
        row = []
        for j in range(len(nu)):
            if i < r0:
                src = b00 if j < r0 else b01
                row.append(src.entries[i][j if j < r0 else j - r0])
            else:
                src = b10 if j < r0 else b11
                row.append(src.entries[i - r0][j if j < r0 else j - r0])
        grid.append(row)
    return GradedMatrix(algebra, nu, nu, grid)


def udl(x):
    """X = U D L with U = [[I, X01 X11^(-1)], [0, I]],
    D = diag(X00 - X01 X11^(-1) X10, X11), L = [[I, 0], [X11^(-1) X10, I]].
    U and L are homogeneous of degree 0, D of the degree of X."""
    d = _even_degree(x, "udl")
    blocks = parity_blocks(x)
    alg = x.algebra
    nu0, nu1 = blocks.even_degrees, blocks.odd_degrees
    try:
        x11inv = invert_matrix(blocks.x11)
    except Singular as exc:
        raise SingularOddBlock(
            "the odd-odd block is not invertible") from exc
    u01 = blocks.x01 @ x11inv
    l10 = x11inv @ blocks.x10
    schur = blocks.x00 - u01 @ blocks.x10
    i0, i1 = identity(alg, nu0), identity(alg, nu1)
    z01, z10 = zero_matrix(alg, nu0, nu1), zero_matrix(alg, nu1, nu0)
    u = _assemble(alg, nu0, nu1, i0, u01, z10, i1)
    dmat = _assemble(alg, nu0, nu1, schur, z01, z10, blocks.x11)
    lmat = _assemble(alg, nu0, nu1, i0, z01, l10, i1)
    zero = alg.group.zero()
    assert u.is_homogeneous_of(zero) and lmat.is_homogeneous_of(zero)
    assert dmat.is_homogeneous_of(d)
    return u, dmat, lmat


def gber(x, sigma):
    """sigma(x,x)^(-r1(r0-r1)) Gdet_sigma(Schur) Gdet_sigma(X11)^(-1) on a
    homogeneous even-degree invertible matrix with parity-sorted degrees."""
    d = _even_degree(x, "gber")
    blocks = parity_blocks(x)
    r0, r1 = blocks.superrank
    try:
        x11inv = invert_matrix(blocks.x11)
    except Singular as exc:
        raise SingularOddBlock(
            "the odd-odd block is not invertible") from exc
    schur = blocks.x00 - blocks.x01 @ x11inv @ blocks.x10
    det0 = gdet_sigma(schur, sigma)
    det1 = gdet_sigma(blocks.x11, sigma)
    try:
        inv1 = invert_element(det1)
    except NotInvertible as exc:
        raise Singular(
            "Gdet_sigma of the odd-odd block is not invertible") from exc
    try:
        invert_element(det0)
    except NotInvertible as exc:
        raise Singular(
            "Gdet_sigma of the Schur complement is not invertible; the "
            "matrix is not invertible") from exc
    n_ord = sigma.root_order
    exp = (-r1 * (r0 - r1) * sigma.exponent(d, d)) % n_ord
    return (det0 * inv1) * cyclo(exp, n_ord)


def gber0(x):
    """gber with the fixed internal multiplier; the value is independent of
    that choice on degree-0 matrices."""
    return gber(x, canonical_sigma(x.algebra))


def _super_components(y):
    if not is_ns_multiplier(y.algebra.lam, trivial_multiplier(y.algebra.group)):
        raise InvalidParams(
            f"{y.algebra.name} is not supercommutative; ber_super applies "
            "to matrices over a twisted algebra")
    _even_degree(y, "ber_super")
    blocks = parity_blocks(y)
    y11inv = invert_matrix(blocks.x11)
    schur = blocks.x00 - blocks.x01 @ y11inv @ blocks.x10
    comp0 = det_of_commuting(schur.entries, y.algebra)
    comp1 = det_of_commuting(blocks.x11.entries, y.algebra)
    return comp0, comp1


def ber_super_components(y):
    """(det(Schur), det(Y11)) of the classical Berezinian over a
    supercommutative algebra, before combining."""
    return _super_components(y)


def ber_super(y):
    """det(Y00 - Y01 Y11^(-1) Y10) det(Y11)^(-1), everything in Y's own
    (supercommutative) algebra."""
    comp0, comp1 = _super_components(y)
    try:
        inv1 = invert_element(comp1)
    except NotInvertible as exc:
        raise Singular("det of the odd-odd block is not invertible") from exc
    return comp0 * inv1


def gber_via_ber_super(x, sigma):
    """The oracle path: the classical Berezinian of J_sigma(X) over the
    twisted algebra, read back in the base algebra.  Exactly equals
    gber(x, sigma); the sigma(x,x) prefactor of the direct formula is what
    the twisted products and inverses contribute."""
    return transport(ber_super(j_sigma(x, sigma)), x.algebra)
