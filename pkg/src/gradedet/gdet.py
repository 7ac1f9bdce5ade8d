"""Graded determinants.

gdet0 is the determinant of degree-0 graded matrices, computed as a
classical determinant of the J_sigma transform over the twisted algebra
with a fixed internal multiplier; its value is multiplier-independent.
gdet0_leibniz is the independent explicit formula: a signed sum over
permutations of entry products taken in an admissible order (cycles
consecutive), entirely inside the base algebra.  gdet_sigma extends
det o J_sigma to homogeneous and inhomogeneous matrices whose component
degrees and entry degrees are all even, where the twisted entries commute.
gdet0_via_crossed is a third route through conjugation by invertible
homogeneous units, adjoined from a crossed-product tensor factor when the
algebra lacks them.

Entry products of odd degree do not commute after twisting, so determinants
over them would depend on expansion order; such inputs raise OddEntries
instead of returning an arbitrary value.
"""

import itertools

from .algebra import (INHOMOGENEOUS, crossed_unit, even_crossed_product,
                      graded_tensor, tensor_embed_left, tensor_embed_right,
                      tensor_project_left, transport, unit_witness)
from .errors import (InvalidOrdering, NoSolutionAtThisRootOrder,
                     NotCrossedProduct, NotDegreeZero, NotSquare, OddEntries,
                     UnsupportedGroup)
from .gmatrix import j_sigma, shift_degrees
from .grading import enumerate_ns_multipliers, parity, solve_ns_multiplier


# ---------------------------------------------------------------------------
# orderings

def permutation_sign(pi):
    sign = 1
    seen = [False] * len(pi)
    for s in range(len(pi)):
        if seen[s]:
            continue
        length = 0
        t = s
        while not seen[t]:
            seen[t] = True
            t = pi[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def permutation_cycles(pi):
    """Disjoint cycles, each started at its least element, sorted by least
    element."""
    seen = [False] * len(pi)
    cycles = []
    for s in range(len(pi)):
        if seen[s]:
            continue
        cycle = [s]
        seen[s] = True
        t = pi[s]
        while t != s:
            cycle.append(t)
            seen[t] = True
            t = pi[t]
        cycles.append(cycle)
    return cycles


def canonical_ordering(pi):
    """The ordering that lists each cycle from its least element, cycles
    sorted by least element."""
    return tuple(itertools.chain.from_iterable(permutation_cycles(pi)))


def is_valid_ordering(pi, seq):
    """True iff seq lists all indices once, each cycle of pi consecutively
    in pi-order (started anywhere), cycles in any order."""
    n = len(pi)
    seq = tuple(seq)
    if sorted(seq) != list(range(n)):
        return False
    start = seq[0]
    for t in range(1, n):
        nxt = pi[seq[t - 1]]
        if nxt == start:
            start = seq[t]
        elif nxt != seq[t]:
            return False
    return pi[seq[-1]] == start


def random_ordering(pi, rng):
    """A uniformly random valid ordering: shuffle the cycle order and
    rotate each cycle to a random start."""
    cycles = permutation_cycles(pi)
    rng.shuffle(cycles)
    out = []
    for cycle in cycles:
        k = rng.randrange(len(cycle))
        out.extend(cycle[k:] + cycle[:k])
    return tuple(out)


# ---------------------------------------------------------------------------
# shared checks

def _require_endo(x, what):
    if x.nrows != x.ncols or not x.is_endo():
        raise NotSquare(f"{what} needs a square matrix with equal row and "
                        "column degree vectors")


def _require_even(x, what):
    """Every homogeneous component degree and every entry component must
    have even parity; zero entries pass vacuously."""
    lam = x.algebra.lam
    degrees = x.algebra.degrees
    for i, row in enumerate(x.entries):
        for j, e in enumerate(row):
            for k in e.coeffs:
                if parity(lam, degrees[k]):
                    raise OddEntries(
                        f"{what}: entry ({i},{j}) has an odd-degree "
                        f"component {x.algebra.labels[k]}; expansion order "
                        "would matter")
    for d in x.homogeneous_components():
        if parity(lam, d):
            raise OddEntries(
                f"{what}: homogeneous component of odd degree {d!r}")


# ---------------------------------------------------------------------------
# commuting determinant

def det_of_commuting(entries, algebra):
    """Classical determinant by subset dynamic programming (2^n states);
    the caller guarantees that all entries pairwise commute, so the
    multiplication order inside each term is immaterial."""
    n = len(entries)
    if n == 0:
        return algebra.one()
    dp = {0: algebra.one()}
    for r in range(n):
        ndp = {}
        row = entries[r]
        for mask, val in dp.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                e = row[j]
                if e.is_zero():
                    continue
                pos = (mask & (bit - 1)).bit_count()
                term = val * e
                if (r + pos) % 2:
                    term = -term
                nm = mask | bit
                if nm in ndp:
                    ndp[nm] = ndp[nm] + term
                else:
                    ndp[nm] = term
        if not ndp:
            return algebra.zero()
        dp = ndp
    return dp.get((1 << n) - 1, algebra.zero())


# ---------------------------------------------------------------------------
# the sigma family and the fixed internal multiplier

def ns_multiplier(lam):
    """One multiplier whose twist is the super sign rule, retrying at a
    doubled root order if the solver reports the current order cannot host
    a solution."""
    try:
        return solve_ns_multiplier(lam)
    except NoSolutionAtThisRootOrder:
        return solve_ns_multiplier(lam.at_order(2 * lam.root_order))


def all_ns_multipliers(lam):
    """The full solution set when enumerable (2-torsion groups), else the
    single solved multiplier."""
    try:
        return enumerate_ns_multipliers(lam)
    except UnsupportedGroup:
        return [ns_multiplier(lam)]


def canonical_sigma(algebra):
    """The fixed internal multiplier: the first enumerated solution (or the
    solver's output when enumeration is unsupported).  No result of gdet0
    depends on this choice; the test suite sweeps the alternatives."""
    if algebra._canonical_sigma is None:
        algebra._canonical_sigma = all_ns_multipliers(algebra.lam)[0]
    return algebra._canonical_sigma


# ---------------------------------------------------------------------------
# determinants

def gdet_sigma(x, sigma):
    """det(J_sigma(X)) over the twisted algebra, read back in the base
    algebra (the twist shares the underlying space)."""
    _require_endo(x, "gdet_sigma")
    _require_even(x, "gdet_sigma")
    y = j_sigma(x, sigma)
    d = det_of_commuting(y.entries, y.algebra)
    return transport(d, x.algebra)


def gdet0(x):
    """The graded determinant of a degree-0 matrix, computed through a
    fixed internal multiplier; the value is independent of that choice."""
    _require_endo(x, "gdet0")
    if x.degree_of() is INHOMOGENEOUS or x.degree_of():
        raise NotDegreeZero(
            f"gdet0 needs a homogeneous matrix of degree 0, got degree "
            f"{x.degree_of()!r}")
    _require_even(x, "gdet0")
    return gdet_sigma(x, canonical_sigma(x.algebra))


def gdet0_leibniz(x, orderings=None):
    """The explicit signed sum: for each permutation pi, the entries
    X^s_pi(s) are multiplied in the base algebra following an ordering that
    keeps each cycle of pi consecutive.  All valid orderings give the same
    value; supplying invalid ones raises InvalidOrdering."""
    _require_endo(x, "gdet0_leibniz")
    if x.degree_of() is INHOMOGENEOUS or x.degree_of():
        raise NotDegreeZero(
            f"gdet0_leibniz needs a homogeneous matrix of degree 0, got "
            f"degree {x.degree_of()!r}")
    _require_even(x, "gdet0_leibniz")
    n = x.nrows
    supplied = {}
    if orderings:
        for key, seq in orderings.items():
            key = tuple(int(v) for v in key)
            if sorted(key) != list(range(n)):
                raise InvalidOrdering(
                    f"{key} is not a permutation of 0..{n - 1}")
            if not is_valid_ordering(key, seq):
                raise InvalidOrdering(
                    f"ordering {tuple(seq)} does not list the cycles of "
                    f"{key} consecutively")
            supplied[key] = tuple(seq)
    acc = x.algebra.zero()
    for pi in itertools.permutations(range(n)):
        seq = supplied.get(pi) or canonical_ordering(pi)
        term = x.algebra.one()
        for s in seq:
            term = term * x.entries[s][pi[s]]
            if term.is_zero():
                break
        if permutation_sign(pi) < 0:
            term = -term
        acc = acc + term
    return acc


def _conjugated_det(x, witnesses):
    """det of (w_i X^i_j w_j^{-1}): all conjugated entries have degree 0,
    hence are central, and the classical determinant applies."""
    ws = [witnesses[d][0] for d in x.col_degrees]
    winvs = [witnesses[d][1] for d in x.col_degrees]
    grid = [[(ws[i] * e) * winvs[j] for j, e in enumerate(row)]
            for i, row in enumerate(x.entries)]
    return det_of_commuting(grid, x.algebra)


def gdet0_via_crossed(x):
    """gdet0 through conjugation into degree 0 by homogeneous units
    t_(nu_i): det(P X P^{-1}) with P = diag(t_(nu_1), ..., t_(nu_n)).

    Units are taken from the algebra itself when every needed degree has
    one; a constant regrading (which changes no entry) is tried to move the
    degree vector onto unit degrees; otherwise the units are adjoined by
    tensoring with a crossed product over the even subgroup and the result
    is read off the t_0 component, which every determinant term lands in.
    Raises NotCrossedProduct when no route exists.
    """
    _require_endo(x, "gdet0_via_crossed")
    if x.degree_of() is INHOMOGENEOUS or x.degree_of():
        raise NotDegreeZero(
            f"gdet0_via_crossed needs degree 0, got {x.degree_of()!r}")
    _require_even(x, "gdet0_via_crossed")
    alg = x.algebra
    nu = x.col_degrees
    zero = alg.group.zero()
    shifts = [zero]
    shifts.extend(-d for d in dict.fromkeys(nu) if d)
    for shift in shifts:
        shifted = [d + shift for d in nu]
        pairs = {d: unit_witness(alg, d) for d in set(shifted)}
        if all(p is not None for p in pairs.values()):
            return _conjugated_det(shift_degrees(x, shift), pairs)
    try:
        cp = even_crossed_product(alg.lam)
    except UnsupportedGroup as exc:
        raise NotCrossedProduct(str(exc)) from exc
    parities = {d: parity(alg.lam, d) for d in set(nu)}
    shift = zero
    if any(parities.values()):
        if len(set(parities.values())) > 1:
            raise NotCrossedProduct(
                "degree vector mixes parities; odd degrees admit no "
                "invertible homogeneous elements to conjugate with")
        shift = -nu[0]
    shifted = [d + shift for d in nu]
    big = graded_tensor(alg, cp)
    ts = {}
    tinvs = {}
    for d in set(shifted):
        try:
            t, tinv = crossed_unit(cp, d)
        except NotCrossedProduct as exc:
            raise NotCrossedProduct(
                f"no crossed-product unit of degree {d!r}") from exc
        ts[d] = tensor_embed_right(big, t)
        tinvs[d] = tensor_embed_right(big, tinv)
    grid = []
    for i, row in enumerate(x.entries):
        ti = ts[shifted[i]]
        out = []
        for j, e in enumerate(row):
            out.append((ti * tensor_embed_left(big, e)) * tinvs[shifted[j]])
        grid.append(out)
    det = det_of_commuting(grid, big)
    return tensor_project_left(big, det)
