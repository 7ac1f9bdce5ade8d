"""Parity blocks, UDL factorization, and the graded Berezinian."""

from fractions import Fraction

import pytest

from gradedet.algebra import invert_element, preset
from gradedet.berezinian import (ber_super, ber_super_components, gber,
                                 gber0, gber_via_ber_super, parity_blocks,
                                 udl)
from gradedet.errors import (InvalidParams, NotParitySorted, OddDegree,
                             SingularOddBlock)
from gradedet.gdet import all_ns_multipliers, gdet0
from gradedet.gmatrix import GradedMatrix, identity, matmul
from gradedet.sampling import (make_rng, rand_invertible,
                               rand_invertible_parity_blocks,
                               rand_parity_sorted_degrees)
from gradedet.scalars import rational

DN = preset("dual_numbers", 2)
ZERO = DN.group.zero()
E1, E2 = DN.basis_element("eps1"), DN.basis_element("eps2")
ODD1, ODD2 = E1.degree_of(), E2.degree_of()

# a 1|1 invertible even matrix over the dual numbers
NU = (ZERO, ODD1)
M = GradedMatrix(DN, NU, NU,
                 [[DN.one() * 2, E1], [E1 * 3, DN.one()]])


def test_parity_blocks():
    b = parity_blocks(M)
    assert b.superrank == (1, 1)
    assert b.even_degrees == (ZERO,)
    assert b.odd_degrees == (ODD1,)
    assert b.x00.entry(0, 0) == DN.one() * 2
    assert b.x01.entry(0, 0) == E1
    assert b.x10.entry(0, 0) == E1 * 3
    assert b.x11.entry(0, 0) == DN.one()


def test_parity_blocks_rejects_unsorted():
    nu = (ODD1, ZERO)
    m = GradedMatrix(DN, nu, nu, [[DN.one(), E1 * 2], [E1, DN.one()]])
    with pytest.raises(NotParitySorted):
        parity_blocks(m)


def test_udl():
    u, d, lo = udl(M)
    assert matmul(u, matmul(d, lo)) == M
    assert u.degree_of() == ZERO and lo.degree_of() == ZERO
    assert u.entry(1, 0).is_zero() and lo.entry(0, 1).is_zero()
    assert gber0(u) == DN.one()
    assert gber0(lo) == DN.one()
    # D carries the whole Berezinian
    assert gber0(d) == gber0(M)


def test_gber_worked_value():
    # Schur = 2 - eps1 * 1 * 3 eps1 = 2 (odd squares vanish), X11 = 1
    assert gber0(M) == DN.one() * 2
    got = gber0(GradedMatrix(DN, NU, NU,
                             [[DN.one(), E1], [-E1, DN.one() * 2]]))
    # Schur = 1 + eps1 eps1 / 2 = 1, X11 = 2
    assert got == DN.one() * rational(1, 2)


def test_gber_needs_even_homogeneous():
    m = GradedMatrix(DN, NU, NU, [[DN.one() + E1 * E2, E1],
                                  [E1, DN.one()]])
    with pytest.raises(OddDegree):
        gber0(m)
    odd = GradedMatrix(DN, NU, NU,
                       [[E2 * 2, E1 * E2], [E1 * E2 * 5, E2]])
    assert odd.degree_of() == ODD2
    with pytest.raises(OddDegree):
        gber0(odd)


def test_gber_singular_odd_block():
    m = GradedMatrix(DN, NU, NU, [[DN.one(), E1], [E1, DN.zero()]])
    with pytest.raises(SingularOddBlock):
        gber0(m)
    with pytest.raises(SingularOddBlock):
        udl(m)


def test_gber_morphism():
    rng = make_rng("gber-morphism")
    for _ in range(8):
        nu = rand_parity_sorted_degrees(rng, DN, 2, 1)
        x = rand_invertible_parity_blocks(rng, DN, nu, 1)
        y = rand_invertible_parity_blocks(rng, DN, nu, 1)
        assert gber0(matmul(x, y)) == gber0(x) * gber0(y)


def test_gber_matches_super_oracle():
    rng = make_rng("gber-oracle")
    for _ in range(4):
        nu = rand_parity_sorted_degrees(rng, DN, 1, 2)
        x = rand_invertible_parity_blocks(rng, DN, nu, 2)
        for sigma in all_ns_multipliers(DN.lam)[:4]:
            assert gber(x, sigma) == gber_via_ber_super(x, sigma)
            assert gber(x, sigma) == gber0(x)


def test_ber_super_requires_supercommutative():
    with pytest.raises(InvalidParams):
        ber_super(M)


def test_grassmann_one_one():
    gr = preset("grassmann", 2)
    nu = (gr.group.zero(), gr.group.element((1,)))
    a, b, c, d = Fraction(3), Fraction(5), Fraction(7), Fraction(2)
    x = GradedMatrix(gr, nu, nu,
                     [[gr.from_scalar(a), gr.basis_element("xi1") * b],
                      [gr.basis_element("xi2") * c, gr.from_scalar(d)]])
    want = gr.element({"1": a / d, "xi12": -b * c / (d * d)})
    assert gber0(x) == want


def test_ber_super_classic_diagonal():
    # over the twisted (already supercommutative) Grassmann algebra the
    # classical two-block formula applies directly
    gr = preset("grassmann", 2)
    from gradedet.algebra import twist
    from gradedet.gdet import canonical_sigma
    tw = twist(gr, canonical_sigma(gr))
    nu = (tw.group.zero(), tw.group.element((1,)))
    y = GradedMatrix(tw, nu, nu,
                     [[tw.one() * 6, tw.zero()], [tw.zero(), tw.one() * 3]])
    assert ber_super(y) == tw.one() * 2
    assert ber_super_components(y) == (tw.one() * 6, tw.one() * 3)


def test_block_values_and_even_reduction():
    rng = make_rng("gber-blocks")
    nu = rand_parity_sorted_degrees(rng, DN, 2, 1)
    x00 = rand_invertible(rng, DN, nu[:2])
    x11 = rand_invertible(rng, DN, nu[2:])
    grid = [[DN.zero()] * 3 for _ in range(3)]
    for i in range(2):
        for j in range(2):
            grid[i][j] = x00.entry(i, j)
    grid[2][2] = x11.entry(0, 0)
    bd = GradedMatrix(DN, nu, nu, grid)
    assert gber0(bd) == gdet0(x00) * invert_element(gdet0(x11))
    # no odd part at all: the Berezinian is the determinant
    quat = preset("quaternions")
    q_nu = [quat.group.zero(), quat.basis_element("j").degree_of()]
    q = rand_invertible(rng, quat, q_nu)
    assert gber0(q) == gdet0(q)
    assert gber0(identity(DN, nu)) == DN.one()
