"""Finite-dimensional graded algebras given by homogeneous structure
constants.

An algebra is a basis with degrees, a distinguished unit basis vector, and a
sparse table e_i e_j = sum_k c_ij^k e_k over exact scalars.  Construction
validates degree additivity, associativity, the unit law and
lambda-commutativity exhaustively (the basis is finite), naming the
offending triple on failure.  Presets cover the standard examples; the
multiplier twist and the graded tensor product build new algebras from old
ones.  Element inversion goes through the left-regular representation and
exact Gaussian elimination, so singularity is detected by exact rank.
"""

import itertools
from fractions import Fraction
from functools import lru_cache

from . import scalars
from .errors import (DegreeViolation, IncompatibleGroups, InvalidParams,
                     MixedAlgebras, NoUnit, NotAssociative, NotCrossedProduct,
                     NotInvertible, NotLambdaCommutative, UnsupportedGroup)
from .grading import (Bicharacter, GradingGroup, Multiplier, lambda_twist,
                      parity, trivial_multiplier)
from .scalars import ONE, ZERO, as_scalar


class _Inhomogeneous:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Inhomogeneous"


INHOMOGENEOUS = _Inhomogeneous()


# ---------------------------------------------------------------------------
# exact linear algebra over the scalar field

def solve_linear(matrix, rhs):
    """Solve M X = R over the scalar field by Gauss-Jordan elimination.
    R is given as rows; returns the solution rows, or None if M is
    singular."""
    n = len(matrix)
    w = len(rhs[0]) if rhs else 0
    aug = [list(matrix[i]) + list(rhs[i]) for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = scalars.inv(aug[col][col])
        row = aug[col]
        for j in range(col, n + w):
            if row[j]:
                row[j] = row[j] * inv_p
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                other = aug[r]
                for j in range(col, n + w):
                    if row[j]:
                        other[j] = other[j] - f * row[j]
    return [row[n:] for row in aug]


def det_gauss(matrix):
    """Determinant of a square scalar matrix by exact elimination."""
    n = len(matrix)
    m = [list(r) for r in matrix]
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pivot = m[col][col]
        det = det * pivot
        inv_p = scalars.inv(pivot)
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv_p
                for j in range(col, n):
                    if m[col][j]:
                        m[r][j] = m[r][j] - f * m[col][j]
    return det


# ---------------------------------------------------------------------------
# elements

class AlgebraElement:
    """A sparse linear combination of basis vectors; zero coefficients are
    never stored."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = {k: c for k, c in coeffs.items() if c}

    def _check_same(self, other):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise MixedAlgebras(
                f"elements of {self.algebra!r} and {other.algebra!r}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_same(other)
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc[k] + c if k in acc else c
        return AlgebraElement(self.algebra, acc)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.algebra,
                              {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_same(other)
            table = self.algebra.table
            acc = {}
            for i, ci in self.coeffs.items():
                row = table[i]
                for j, cj in other.coeffs.items():
                    cij = ci * cj
                    for k, c in row[j]:
                        prod = cij * c
                        acc[k] = acc[k] + prod if k in acc else prod
            return AlgebraElement(self.algebra, acc)
        return self.scalar_mul(other)

    def __rmul__(self, other):
        # scalars commute with everything, so left scalar action is the same
        return self.scalar_mul(other)

    def __truediv__(self, other):
        if isinstance(other, AlgebraElement):
            return NotImplemented
        return self.scalar_mul(scalars.inv(as_scalar(other)))

    def scalar_mul(self, s):
        s = as_scalar(s)
        return AlgebraElement(self.algebra,
                              {k: s * c for k, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            return False
        return self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def degree_of(self):
        """The unique degree of a homogeneous element, INHOMOGENEOUS for a
        mix, and degree 0 for the zero element (which is homogeneous of
        every degree)."""
        degs = {self.algebra.degrees[k] for k in self.coeffs}
        if not degs:
            return self.algebra.group.zero()
        if len(degs) == 1:
            return next(iter(degs))
        return INHOMOGENEOUS

    def homogeneous_components(self):
        out = {}
        for k, c in self.coeffs.items():
            d = self.algebra.degrees[k]
            out.setdefault(d, {})[k] = c
        return {d: AlgebraElement(self.algebra, m) for d, m in out.items()}

    def coeff_labels(self):
        labels = self.algebra.labels
        return {labels[k]: c for k, c in self.coeffs.items()}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        labels = self.algebra.labels
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            text = scalars.format_scalar(c)
            if labels[k] == "1":
                parts.append(text)
            elif text == "1":
                parts.append(labels[k])
            elif text == "-1":
                parts.append(f"-{labels[k]}")
            else:
                parts.append(f"({text})*{labels[k]}")
        return " + ".join(parts)


def degree_of(a):
    return a.degree_of()


def homogeneous_components(a):
    return a.homogeneous_components()


# ---------------------------------------------------------------------------
# algebras

class GradedAlgebra:
    """Immutable after construction; carries memo caches for twists, unit
    witnesses and tensor products."""

    def __init__(self, group, lam, labels, degrees, unit_index, table, name):
        self.group = group
        self.lam = lam
        self.labels = tuple(labels)
        self.degrees = tuple(degrees)
        self.unit_index = unit_index
        self.table = table
        self.name = name
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        self._components = {}
        for i, d in enumerate(self.degrees):
            self._components.setdefault(d, []).append(i)
        self._components = {d: tuple(v) for d, v in self._components.items()}
        self._twist_cache = {}
        self._tensor_cache = {}
        self._unit_witnesses = None
        self._canonical_sigma = None
        self._cp_index = None  # residues -> basis index, for crossed products

    @property
    def dim(self):
        return len(self.labels)

    def realized_degrees(self):
        return set(self._components)

    def component_indices(self, degree):
        return self._components.get(degree, ())

    def index_of(self, label):
        if label not in self._label_index:
            raise InvalidParams(f"unknown basis label {label!r} in {self.name}")
        return self._label_index[label]

    def basis_element(self, key):
        idx = key if isinstance(key, int) else self.index_of(key)
        return AlgebraElement(self, {idx: ONE})

    def element(self, mapping):
        coeffs = {}
        for key, val in mapping.items():
            idx = key if isinstance(key, int) else self.index_of(key)
            s = as_scalar(val)
            coeffs[idx] = coeffs[idx] + s if idx in coeffs else s
        return AlgebraElement(self, coeffs)

    def zero(self):
        return AlgebraElement(self, {})

    def one(self):
        return AlgebraElement(self, {self.unit_index: ONE})

    def from_scalar(self, s):
        return AlgebraElement(self, {self.unit_index: as_scalar(s)})

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return (self.group == other.group
                and self.lam == other.lam
                and self.labels == other.labels
                and self.degrees == other.degrees
                and self.unit_index == other.unit_index
                and self.table == other.table)

    __hash__ = None

    def __repr__(self):
        return f"GradedAlgebra({self.name}, dim={self.dim})"


def _normalize_structure(structure, dim):
    """Accepts {(i,j): {k: c}} / {(i,j): [(k, c), ...]} or a dense nested
    list c[i][j][k]; returns the sparse tuple-of-tuples table."""
    table = [[() for _ in range(dim)] for _ in range(dim)]
    if isinstance(structure, dict):
        for (i, j), cell in structure.items():
            items = cell.items() if isinstance(cell, dict) else cell
            row = [(int(k), as_scalar(c)) for k, c in items if as_scalar(c)]
            table[i][j] = tuple(row)
    else:
        for i, plane in enumerate(structure):
            for j, cell in enumerate(plane):
                row = [(k, as_scalar(c)) for k, c in enumerate(cell)
                       if as_scalar(c)]
                table[i][j] = tuple(row)
    return tuple(tuple(r) for r in table)


def _row_mul(table, left, right):
    """Product of two sparse coefficient dicts through the table."""
    acc = {}
    for i, ci in left.items():
        row = table[i]
        for j, cj in right.items():
            cij = ci * cj
            for k, c in row[j]:
                prod = cij * c
                acc[k] = acc[k] + prod if k in acc else prod
    return {k: c for k, c in acc.items() if c}


def _validate_algebra(group, lam, labels, degrees, table, name):
    dim = len(labels)
    # degree additivity
    for i in range(dim):
        for j in range(dim):
            want = degrees[i] + degrees[j]
            for k, c in table[i][j]:
                if degrees[k] != want:
                    raise DegreeViolation(
                        f"{name}: product {labels[i]}*{labels[j]} hits "
                        f"{labels[k]} of degree {degrees[k]!r}, expected "
                        f"{want!r}")
    # unit: a basis vector acting as identity on both sides
    unit_index = None
    for u in range(dim):
        ok = True
        for j in range(dim):
            if dict(table[u][j]) != {j: ONE} or dict(table[j][u]) != {j: ONE}:
                ok = False
                break
        if ok:
            unit_index = u
            break
    if unit_index is None:
        raise NoUnit(f"{name}: no basis vector acts as a two-sided unit")
    if degrees[unit_index] != group.zero():
        raise NoUnit(
            f"{name}: unit {labels[unit_index]} has nonzero degree "
            f"{degrees[unit_index]!r}")
    # associativity
    for i in range(dim):
        for j in range(dim):
            left_ij = dict(table[i][j])
            for k in range(dim):
                lhs = _row_mul(table, left_ij, {k: ONE})
                rhs = _row_mul(table, {i: ONE}, dict(table[j][k]))
                if lhs != rhs:
                    raise NotAssociative(
                        f"{name}: ({labels[i]}*{labels[j]})*{labels[k]} != "
                        f"{labels[i]}*({labels[j]}*{labels[k]})")
    # lambda-commutativity
    for i in range(dim):
        for j in range(dim):
            factor = lam.value(degrees[i], degrees[j])
            flipped = {k: factor * c for k, c in table[j][i]}
            if dict(table[i][j]) != {k: c for k, c in flipped.items() if c}:
                raise NotLambdaCommutative(
                    f"{name}: {labels[i]}*{labels[j]} != "
                    f"lambda({degrees[i]!r},{degrees[j]!r}) "
                    f"{labels[j]}*{labels[i]}")
    return unit_index


def make_algebra(degrees, structure, lam, labels=None, validate=True,
                 name="algebra", unit_index=None):
    group = lam.group
    degrees = tuple(d if hasattr(d, "residues") else group.element(d)
                    for d in degrees)
    dim = len(degrees)
    if labels is None:
        labels = tuple(f"b{i}" for i in range(dim))
    labels = tuple(labels)
    if len(labels) != dim or len(set(labels)) != dim:
        raise InvalidParams(f"{name}: labels must be {dim} distinct strings")
    table = _normalize_structure(structure, dim)
    if validate:
        unit_index = _validate_algebra(group, lam, labels, degrees, table, name)
    elif unit_index is None:
        raise InvalidParams(f"{name}: unit_index is required when validation "
                            "is skipped")
    return GradedAlgebra(group, lam, labels, degrees, unit_index, table, name)


# ---------------------------------------------------------------------------
# presets

def _subset_label(prefix, subset):
    return "1" if not subset else prefix + "".join(str(i + 1) for i in subset)


def _quaternions():
    group = GradingGroup([2, 2])
    lam = Bicharacter(group, 2, [[0, 1], [1, 0]])
    labels = ("1", "i", "j", "k")
    degrees = [(0, 0), (1, 0), (0, 1), (1, 1)]
    one, i, j, k = 0, 1, 2, 3
    m1 = scalars.rational(-1)
    structure = {
        (one, one): {one: 1}, (one, i): {i: 1}, (one, j): {j: 1}, (one, k): {k: 1},
        (i, one): {i: 1}, (j, one): {j: 1}, (k, one): {k: 1},
        (i, i): {one: m1}, (j, j): {one: m1}, (k, k): {one: m1},
        (i, j): {k: 1}, (j, i): {k: m1},
        (j, k): {i: 1}, (k, j): {i: m1},
        (k, i): {j: 1}, (i, k): {j: m1},
    }
    return make_algebra(degrees, structure, lam, labels, name="quaternions")


def _clifford(p, q):
    """Clifford algebra Cl(p,q): n = p+q anticommuting generators, the first
    p squaring to +1 and the rest to -1.  Generator e_i has degree the i-th
    standard vector with a trailing 1; the basis is the ascending monomials
    e_I with signs accumulated by adjacent transpositions (a convention
    choice; other normal forms differ by an algebra isomorphism)."""
    n = p + q
    group = GradingGroup([2] * (n + 1))
    lam = Bicharacter(group, 2, [[int(a == b) for b in range(n + 1)]
                                 for a in range(n + 1)])
    subsets = []
    for size in range(n + 1):
        subsets.extend(itertools.combinations(range(n), size))
    index = {s: i for i, s in enumerate(subsets)}
    labels = [_subset_label("e", s) for s in subsets]
    degrees = []
    for s in subsets:
        res = [int(t in s) for t in range(n)] + [len(s) % 2]
        degrees.append(group.element(res))
    structure = {}
    for si, a in enumerate(subsets):
        for sj, b in enumerate(subsets):
            sign = 1
            for x in a:
                for y in b:
                    if x > y:
                        sign = -sign
            for t in set(a) & set(b):
                if t >= p:
                    sign = -sign
            target = tuple(sorted(set(a) ^ set(b)))
            structure[(si, sj)] = {index[target]: scalars.rational(sign)}
    return make_algebra(degrees, structure, lam, labels,
                        name=f"clifford({p},{q})")


def _dual_numbers(n):
    """n odd square-zero generators over (Z_2)^n; distinct generators
    commute (their degrees pair trivially), so this is the truncated
    polynomial algebra on eps_1..eps_n."""
    group = GradingGroup([2] * n)
    lam = Bicharacter(group, 2, [[int(a == b) for b in range(n)]
                                 for a in range(n)])
    subsets = []
    for size in range(n + 1):
        subsets.extend(itertools.combinations(range(n), size))
    index = {s: i for i, s in enumerate(subsets)}
    labels = [_subset_label("eps", s) for s in subsets]
    degrees = [group.element([int(t in s) for t in range(n)]) for s in subsets]
    structure = {}
    for si, a in enumerate(subsets):
        for sj, b in enumerate(subsets):
            if set(a) & set(b):
                structure[(si, sj)] = {}
            else:
                target = tuple(sorted(a + b))
                structure[(si, sj)] = {index[target]: 1}
    return make_algebra(degrees, structure, lam, labels,
                        name=f"dual_numbers({n})")


def _grassmann(n):
    """n anticommuting square-zero odd generators over Z_2."""
    group = GradingGroup([2])
    lam = Bicharacter(group, 2, [[1]])
    subsets = []
    for size in range(n + 1):
        subsets.extend(itertools.combinations(range(n), size))
    index = {s: i for i, s in enumerate(subsets)}
    labels = [_subset_label("xi", s) for s in subsets]
    degrees = [group.element([len(s) % 2]) for s in subsets]
    structure = {}
    for si, a in enumerate(subsets):
        for sj, b in enumerate(subsets):
            if set(a) & set(b):
                structure[(si, sj)] = {}
                continue
            sign = 1
            for x in a:
                for y in b:
                    if x > y:
                        sign = -sign
            target = tuple(sorted(a + b))
            structure[(si, sj)] = {index[target]: scalars.rational(sign)}
    return make_algebra(degrees, structure, lam, labels,
                        name=f"grassmann({n})")


def _residue_label(gamma):
    return "t" + "_".join(str(r) for r in gamma.residues)


def _crossed(group, sigma, name, validate=True):
    lam = lambda_twist(trivial_multiplier(group), sigma)
    elems = list(group.elements())
    index = {g.residues: i for i, g in enumerate(elems)}
    labels = [_residue_label(g) for g in elems]
    structure = {}
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            structure[(i, j)] = {index[(a + b).residues]: sigma.value(a, b)}
    alg = make_algebra(elems, structure, lam, labels, validate=validate,
                       name=name, unit_index=index[group.zero().residues])
    alg._cp_index = index
    alg._cp_sigma = sigma
    return alg


def _group_algebra(group):
    return _crossed(group, trivial_multiplier(group),
                    name=f"group_algebra{list(group.moduli)}")


def _crossed_product(group, sigma):
    if sigma.group != group:
        raise InvalidParams(
            f"multiplier lives on {sigma.group!r}, not {group!r}")
    return _crossed(group, sigma,
                    name=f"crossed_product{list(group.moduli)}")


def _clock_shift(n):
    """The graded division algebra on Z_n x Z_n generated by a clock and a
    shift with YX = zeta_n XY: basis u_(a,b) = X^a Y^b, u_g u_h =
    zeta_n^(b c) u_(g+h) for g=(a,b), h=(c,d)."""
    group = GradingGroup([n, n])
    sigma = Multiplier(group, n, [[0, 0], [1, 0]])
    return _crossed(group, sigma, name=f"clock_shift({n})")


def preset(name, *params):
    """Build a named algebra preset.

    quaternions | clifford(p,q) | dual_numbers(n) | grassmann(n) |
    group_algebra(m1,...,mk) | crossed_product(group, sigma) |
    clock_shift(n)
    """
    return _preset_cached(name, _freeze_params(params))


def _freeze_params(params):
    out = []
    for p in params:
        if isinstance(p, GradingGroup):
            out.append(("group", p.moduli))
        elif isinstance(p, Bicharacter):
            out.append(("map", p.group.moduli, p.root_order, p.exponents))
        else:
            out.append(p)
    return tuple(out)


def _thaw_param(p):
    if isinstance(p, tuple) and p and p[0] == "group":
        return GradingGroup(p[1])
    if isinstance(p, tuple) and p and p[0] == "map":
        return Multiplier(GradingGroup(p[1]), p[2], p[3])
    return p


@lru_cache(maxsize=None)
def _preset_cached(name, frozen):
    params = tuple(_thaw_param(p) for p in frozen)
    try:
        if name == "quaternions":
            if params:
                raise InvalidParams("quaternions takes no parameters")
            return _quaternions()
        if name == "clifford":
            p, q = (int(v) for v in params)
            if p < 0 or q < 0:
                raise InvalidParams("clifford needs p, q >= 0")
            return _clifford(p, q)
        if name == "dual_numbers":
            (n,) = (int(v) for v in params)
            if n < 1:
                raise InvalidParams("dual_numbers needs n >= 1")
            return _dual_numbers(n)
        if name == "grassmann":
            (n,) = (int(v) for v in params)
            if n < 1:
                raise InvalidParams("grassmann needs n >= 1")
            return _grassmann(n)
        if name == "group_algebra":
            if len(params) == 1 and isinstance(params[0], GradingGroup):
                return _group_algebra(params[0])
            return _group_algebra(GradingGroup([int(v) for v in params]))
        if name == "crossed_product":
            group, sigma = params
            return _crossed_product(group, sigma)
        if name == "clock_shift":
            (n,) = (int(v) for v in params)
            if n < 1:
                raise InvalidParams("clock_shift needs n >= 1")
            return _clock_shift(n)
    except (TypeError, ValueError) as exc:
        raise InvalidParams(f"bad parameters {params!r} for preset {name}: "
                            f"{exc}") from exc
    raise InvalidParams(f"unknown preset {name!r}")


# ---------------------------------------------------------------------------
# twist and tensor

def twist(algebra, sigma, validate=False):
    """The same underlying space with product a*b = sigma(deg a, deg b) ab;
    the result is lambda^sigma-commutative.  Twisting by a biadditive map
    preserves associativity, degrees and the unit, so validation is off by
    default (tests re-validate small instances)."""
    if sigma.group != algebra.group:
        raise IncompatibleGroups(
            f"multiplier on {sigma.group!r} cannot twist an algebra over "
            f"{algebra.group!r}")
    key = (sigma.root_order, sigma.exponents)
    cached = algebra._twist_cache.get(key)
    if cached is not None:
        return cached
    degrees = algebra.degrees
    new_table = tuple(
        tuple(
            tuple((k, sigma.value(degrees[i], degrees[j]) * c)
                  for k, c in cell)
            for j, cell in enumerate(row))
        for i, row in enumerate(algebra.table))
    lam2 = lambda_twist(algebra.lam, sigma)
    # validation must see the twisted table, so it runs after the swap below
    out = make_algebra(degrees, {}, lam2, algebra.labels, validate=False,
                       name=f"twist({algebra.name})",
                       unit_index=algebra.unit_index)
    out.table = new_table
    if validate:
        _validate_algebra(out.group, lam2, out.labels, degrees, new_table,
                          out.name)
    algebra._twist_cache[key] = out
    return out


def graded_tensor(a, b, validate=False):
    """Graded tensor product over the shared (group, lambda):
    (a1 (x) b1)(a2 (x) b2) = lambda(deg b1, deg a2) (a1 a2) (x) (b1 b2).
    This rule preserves associativity and lambda-commutativity, so
    validation is off by default at large dimensions; tests re-validate
    small instances."""
    if a.group != b.group or a.lam != b.lam:
        raise IncompatibleGroups(
            f"tensor factors must share group and commutation factor: "
            f"{a.name} vs {b.name}")
    cached = a._tensor_cache.get(id(b))
    if cached is not None and cached[0] is b:
        return cached[1]
    dim_b = b.dim
    labels = []
    degrees = []
    for la, da in zip(a.labels, a.degrees):
        for lb, db in zip(b.labels, b.degrees):
            labels.append(f"{la}|{lb}")
            degrees.append(da + db)
    structure = {}
    for i1, da1 in enumerate(a.degrees):
        for j1, db1 in enumerate(b.degrees):
            left = i1 * dim_b + j1
            for i2, da2 in enumerate(a.degrees):
                factor = a.lam.value(db1, da2)
                cell_a = a.table[i1][i2]
                if not cell_a:
                    continue
                for j2 in range(dim_b):
                    cell_b = b.table[j1][j2]
                    if not cell_b:
                        continue
                    right = i2 * dim_b + j2
                    acc = {}
                    for k, ca in cell_a:
                        for l, cb in cell_b:
                            flat = k * dim_b + l
                            prod = factor * ca * cb
                            acc[flat] = acc.get(flat, ZERO) + prod
                    structure[(left, right)] = acc
    unit = a.unit_index * dim_b + b.unit_index
    out = make_algebra(degrees, structure, a.lam, labels, validate=validate,
                       name=f"{a.name}(x){b.name}", unit_index=unit)
    out._tensor_factors = (a, b)
    a._tensor_cache[id(b)] = (b, out)
    return out


def tensor_factors(t):
    factors = getattr(t, "_tensor_factors", None)
    if factors is None:
        raise InvalidParams(f"{t.name} is not a graded tensor product")
    return factors


def tensor_embed_left(t, a):
    """a |-> a (x) 1."""
    left, right = tensor_factors(t)
    if a.algebra is not left and a.algebra != left:
        raise MixedAlgebras(f"{a.algebra.name} is not the left factor of "
                            f"{t.name}")
    dim_b = right.dim
    return AlgebraElement(
        t, {i * dim_b + right.unit_index: c for i, c in a.coeffs.items()})


def tensor_embed_right(t, b):
    """b |-> 1 (x) b."""
    left, right = tensor_factors(t)
    if b.algebra is not right and b.algebra != right:
        raise MixedAlgebras(f"{b.algebra.name} is not the right factor of "
                            f"{t.name}")
    dim_b = right.dim
    return AlgebraElement(
        t, {left.unit_index * dim_b + j: c for j, c in b.coeffs.items()})


def tensor_project_left(t, elem):
    """Inverse of tensor_embed_left on its image: reads off the a (x) 1
    components and checks nothing else is present."""
    left, right = tensor_factors(t)
    dim_b = right.dim
    out = {}
    for flat, c in elem.coeffs.items():
        i, j = divmod(flat, dim_b)
        if j != right.unit_index:
            raise InvalidParams(
                f"element has a component outside A (x) 1: "
                f"{t.labels[flat]}")
        out[i] = c
    return AlgebraElement(left, out)


# ---------------------------------------------------------------------------
# inversion, units, admissibility

def left_regular_matrix(a):
    """The matrix of x |-> a*x on the basis, as scalar rows."""
    alg = a.algebra
    d = alg.dim
    m = [[ZERO] * d for _ in range(d)]
    for i, ci in a.coeffs.items():
        row = alg.table[i]
        for j in range(d):
            for k, c in row[j]:
                m[k][j] = m[k][j] + ci * c
    return m


def invert_element(a):
    """Two-sided inverse via the left-regular representation; a right
    inverse from exact solving is automatically two-sided in a
    finite-dimensional unital algebra."""
    alg = a.algebra
    d = alg.dim
    m = left_regular_matrix(a)
    rhs = [[ONE] if k == alg.unit_index else [ZERO] for k in range(d)]
    sol = solve_linear(m, rhs)
    if sol is None:
        raise NotInvertible(f"{a!r} is not invertible in {alg.name}")
    return AlgebraElement(alg, {k: row[0] for k, row in enumerate(sol)})


def _try_invert(a):
    try:
        return invert_element(a)
    except NotInvertible:
        return None


def _find_component_unit(alg, idxs):
    """An invertible element of the span of the given basis vectors, or
    None.

    Complete for components of dimension <= 2: dimension 1 is a direct
    inversion test, and for dimension 2 the determinant of the left-regular
    matrix of b1 + t b2 is a polynomial of degree <= dim in t, so scanning
    dim+1 points plus b2 alone decides exactly.  For dimension >= 3 the
    search is a bounded heuristic (basis vectors, pair sums, the full sum);
    a miss can only under-report and the subgroup closure below repairs
    products of found units.
    """
    d = alg.dim
    candidates = [alg.basis_element(i) for i in idxs]
    if len(idxs) == 2:
        b1, b2 = (alg.basis_element(i) for i in idxs)
        candidates.extend(b1 + b2 * Fraction(t) for t in range(1, d + 2))
    elif len(idxs) > 2:
        base = [alg.basis_element(i) for i in idxs]
        candidates.extend(x + y for x, y in itertools.combinations(base, 2))
        total = alg.zero()
        for x in base:
            total = total + x
        candidates.append(total)
    for cand in candidates:
        inv = _try_invert(cand)
        if inv is not None:
            return cand, inv
    return None


def unit_degrees(alg):
    """All degrees whose homogeneous component contains an invertible
    element.  The result is a subgroup of the grading group, disjoint from
    odd degrees (odd homogeneous elements square to zero)."""
    if alg._unit_witnesses is None:
        witnesses = {}
        for deg, idxs in alg._components.items():
            found = _find_component_unit(alg, idxs)
            if found is not None:
                witnesses[deg] = found
        # close under negation and addition: units multiply to units
        changed = True
        while changed:
            changed = False
            for g in list(witnesses):
                w, winv = witnesses[g]
                if -g not in witnesses:
                    witnesses[-g] = (winv, w)
                    changed = True
            for g1 in list(witnesses):
                for g2 in list(witnesses):
                    g = g1 + g2
                    if g not in witnesses:
                        w1, i1 = witnesses[g1]
                        w2, i2 = witnesses[g2]
                        witnesses[g] = (w1 * w2, i2 * i1)
                        changed = True
        alg._unit_witnesses = witnesses
    return set(alg._unit_witnesses)


def unit_witness(alg, degree):
    """An invertible homogeneous element of the given degree and its
    inverse, as found by unit_degrees."""
    unit_degrees(alg)
    pair = alg._unit_witnesses.get(degree)
    if pair is None:
        return None
    return pair


def degree_admissible(alg, mu, nu):
    """A permutation pi and units a_i in A^(nu_i - mu_pi(i)) realizing a
    change of basis between the two degree vectors, if one exists.  The
    lexicographically least pi is returned."""
    mu = tuple(mu)
    nu = tuple(nu)
    if len(mu) != len(nu):
        raise InvalidParams("degree vectors must have equal lengths")
    unit_degrees(alg)
    witnesses = alg._unit_witnesses
    n = len(mu)
    for pi in itertools.permutations(range(n)):
        needed = [nu[i] - mu[pi[i]] for i in range(n)]
        if all(d in witnesses for d in needed):
            return pi, tuple(witnesses[d][0] for d in needed)
    return None


# ---------------------------------------------------------------------------
# crossed-product machinery for algebras missing homogeneous units

@lru_cache(maxsize=None)
def even_crossed_product(lam):
    """A crossed product over the even subgroup of lam's parity splitting:
    one invertible homogeneous basis vector t_h per even degree h, with
    t_g t_h = sigma(g, h) t_(g+h) for a biadditive splitting sigma of lam
    restricted to the even subgroup.

    Supported when the parity vector vanishes (then the even subgroup is
    the whole group and sigma takes the upper triangle of lam's exponents)
    or when the group is 2-torsion (a basis of the parity kernel is built
    over F_2).  Other mixed cases raise UnsupportedGroup.
    """
    group = lam.group
    n = lam.root_order
    parities = {x.residues: parity(lam, x) for x in group.elements()}
    f = [parities[group.generator(i).residues] for i in range(group.rank)]
    if not any(f):
        k = group.rank
        sigma_exp = [[lam.exponents[i][j] if i < j else 0 for j in range(k)]
                     for i in range(k)]
        sigma = Multiplier(group, n, sigma_exp)
        alg = _crossed(group, sigma,
                       name=f"even_crossed_product{list(group.moduli)}")
        return alg
    if any(m > 2 for m in group.moduli):
        raise UnsupportedGroup(
            "even crossed products with odd parities are only built over "
            f"2-torsion groups, got moduli {group.moduli}")
    # basis of the kernel of x -> sum f_i x_i mod 2
    odd_pos = [i for i in range(group.rank) if f[i]]
    even_pos = [i for i in range(group.rank)
                if not f[i] and group.moduli[i] == 2]
    basis = [group.generator(i) for i in even_pos]
    pivot = odd_pos[0]
    basis.extend(group.generator(pivot) + group.generator(i)
                 for i in odd_pos[1:])

    members = {}
    for bits in itertools.product((0, 1), repeat=len(basis)):
        g = group.zero()
        for bit, h in zip(bits, basis):
            if bit:
                g = g + h
        members.setdefault(g.residues, bits)
    elems = [group.element(r) for r in sorted(members)]
    index = {g.residues: i for i, g in enumerate(elems)}

    def sigma_exp(g, h):
        u, v = members[g.residues], members[h.residues]
        total = 0
        for a in range(len(basis)):
            if not u[a]:
                continue
            for b in range(a + 1, len(basis)):
                if v[b]:
                    total += lam.exponent(basis[a], basis[b])
        return total % n

    labels = [_residue_label(g) for g in elems]
    structure = {}
    for i, g in enumerate(elems):
        for j, h in enumerate(elems):
            structure[(i, j)] = {
                index[(g + h).residues]: scalars.cyclo(sigma_exp(g, h), n)}
    alg = make_algebra(elems, structure, lam, labels,
                       name=f"even_crossed_product{list(group.moduli)}")
    alg._cp_index = index
    return alg


def crossed_unit(alg, degree):
    """The basis unit t_degree of a crossed product, with its inverse."""
    index = getattr(alg, "_cp_index", None)
    if index is None or degree.residues not in index:
        raise NotCrossedProduct(
            f"{alg.name} has no crossed-product unit of degree {degree!r}")
    t = alg.basis_element(index[degree.residues])
    tinv_idx = index[(-degree).residues]
    # t * t_(-d) = sigma(d, -d) t_0: divide out the scalar
    prod = t * alg.basis_element(tinv_idx)
    scale = prod.coeffs[alg.unit_index]
    return t, alg.basis_element(tinv_idx) / scale


def transport(a, target):
    """Move an element to another algebra on the same labelled basis (for
    example between an algebra and its twist); coefficients are reused
    verbatim."""
    if a.algebra.labels != target.labels:
        raise MixedAlgebras(
            f"cannot transport between {a.algebra.name} and {target.name}")
    return AlgebraElement(target, dict(a.coeffs))
