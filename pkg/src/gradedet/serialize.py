"""JSON documents for groups, multipliers, algebras, matrices and elements.

Every document carries "format": 1.  Scalars are strings ("p/q" for
rationals, polynomials in z otherwise) interpreted against the document's
"root_order", so z always means the primitive root of unity of that order.
Digests are the first 12 hex characters of the SHA-256 of the canonical
JSON encoding; they let reports and CLI output cross-reference inputs.
"""

import hashlib
import json
from math import lcm

from .algebra import make_algebra, preset
from .errors import InvalidCommutationFactor, InvalidParams, ParseError
from .gmatrix import GradedMatrix
from .grading import (Bicharacter, GradingGroup, Multiplier,
                      is_commutation_factor, trivial_multiplier)
from .scalars import coerce_to, format_scalar, parse_scalar

FORMAT = 1


def canonical_json(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def digest(doc):
    return hashlib.sha256(canonical_json(doc).encode()).hexdigest()[:12]


def _field(doc, key, where, kinds=None):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    val = doc[key]
    if kinds is not None and not isinstance(val, kinds):
        raise ParseError(f"{where}: field {key!r} has the wrong type")
    return val


def _check_format(doc, where):
    if _field(doc, "format", where, int) != FORMAT:
        raise ParseError(f"{where}: unsupported format {doc['format']!r}")


# ---------------------------------------------------------------------------
# groups and multipliers

def format_group(group):
    return {"moduli": list(group.moduli)}


def parse_group(doc, where="group"):
    moduli = _field(doc, "moduli", where, list)
    try:
        return GradingGroup(moduli)
    except (TypeError, ValueError, InvalidParams) as exc:
        raise ParseError(f"{where}: bad moduli {moduli!r}: {exc}") from exc


def format_multiplier(m):
    return {"format": FORMAT, "moduli": list(m.group.moduli),
            "root_order": m.root_order,
            "exponents": [list(row) for row in m.exponents]}


def parse_multiplier(doc, where="sigma"):
    _check_format(doc, where)
    group = parse_group(doc, where)
    order = _field(doc, "root_order", where, int)
    exps = _field(doc, "exponents", where, list)
    try:
        return Multiplier(group, order, exps)
    except (TypeError, ValueError, InvalidParams) as exc:
        raise ParseError(f"{where}: bad exponent matrix: {exc}") from exc


# ---------------------------------------------------------------------------
# elements

def _scalar_orders(elems):
    orders = 1
    for e in elems:
        for c in e.coeffs.values():
            orders = lcm(orders, c.order)
    return orders


def format_element(e, root_order):
    items = []
    for k in sorted(e.coeffs):
        c = coerce_to(e.coeffs[k], root_order)
        items.append({"b": e.algebra.labels[k], "c": format_scalar(c)})
    return items


def parse_element(items, algebra, root_order, where="element"):
    if not isinstance(items, list):
        raise ParseError(f"{where}: an element must be a list of terms")
    coeffs = {}
    for term in items:
        label = _field(term, "b", where, str)
        text = _field(term, "c", where, str)
        if label not in algebra._label_index:
            raise ParseError(f"{where}: unknown basis label {label!r} for "
                             f"{algebra.name}")
        k = algebra._label_index[label]
        c = parse_scalar(text, root_order)
        coeffs[k] = coeffs[k] + c if k in coeffs else c
    return algebra.element(coeffs)


def result_doc(e, inputs):
    """CLI output document for an element result."""
    order = _scalar_orders([e])
    deg = e.degree_of()
    degree = "inhomogeneous" if deg is None or not hasattr(deg, "residues") \
        else list(deg.residues)
    return {"format": FORMAT, "root_order": order,
            "result": format_element(e, order), "degree": degree,
            "inputs": inputs}


# ---------------------------------------------------------------------------
# algebras

def format_algebra(a):
    order = 1
    for row in a.table:
        for cell in row:
            for _, c in cell:
                order = lcm(order, c.order)
    table = {}
    for i, row in enumerate(a.table):
        for j, cell in enumerate(row):
            if cell:
                table[f"{i},{j}"] = [
                    {"k": k, "c": format_scalar(coerce_to(c, order))}
                    for k, c in cell]
    return {"format": FORMAT, "name": a.name,
            "group": format_group(a.group),
            "lambda": {"root_order": a.lam.root_order,
                       "exponents": [list(r) for r in a.lam.exponents]},
            "root_order": order,
            "basis": [{"label": lab, "degree": list(d.residues)}
                      for lab, d in zip(a.labels, a.degrees)],
            "table": table}


def parse_algebra(doc, where="algebra"):
    _check_format(doc, where)
    group = parse_group(_field(doc, "group", where, dict), where)
    lamdoc = _field(doc, "lambda", where, dict)
    try:
        lam = Bicharacter(group, _field(lamdoc, "root_order", where, int),
                          _field(lamdoc, "exponents", where, list))
    except (TypeError, ValueError, InvalidParams) as exc:
        raise ParseError(f"{where}: bad commutation factor: {exc}") from exc
    if not is_commutation_factor(lam):
        raise InvalidCommutationFactor(
            f"{where}: the declared map is not skew-symmetric")
    order = doc.get("root_order", 1)
    basis = _field(doc, "basis", where, list)
    labels, degrees = [], []
    for item in basis:
        labels.append(_field(item, "label", where, str))
        degrees.append(_field(item, "degree", where, list))
    dim = len(labels)
    structure = {}
    for key, cell in _field(doc, "table", where, dict).items():
        try:
            i, j = (int(v) for v in key.split(","))
        except ValueError as exc:
            raise ParseError(f"{where}: bad table key {key!r}") from exc
        if not (0 <= i < dim and 0 <= j < dim):
            raise ParseError(f"{where}: table key {key!r} out of range")
        row = []
        for term in cell:
            k = _field(term, "k", where, int)
            if not 0 <= k < dim:
                raise ParseError(f"{where}: table index {k} out of range")
            row.append((k, parse_scalar(_field(term, "c", where, str),
                                        order)))
        structure[(i, j)] = row
    try:
        grp_degrees = [group.element(d) for d in degrees]
    except (TypeError, ValueError, InvalidParams) as exc:
        raise ParseError(f"{where}: bad basis degree: {exc}") from exc
    return make_algebra(grp_degrees, structure, lam, labels, validate=True,
                        name=doc.get("name", "algebra"))


def parse_preset(text, sigma=None):
    """Algebra from a "preset:NAME[:a,b,...]" string; crossed_product uses
    the supplied multiplier (trivial when absent)."""
    parts = text.split(":")
    if len(parts) < 2 or parts[0] != "preset" or len(parts) > 3 \
            or not parts[1]:
        raise ParseError(f"bad preset string {text!r}")
    name = parts[1]
    args = []
    if len(parts) == 3 and parts[2]:
        try:
            args = [int(v) for v in parts[2].split(",")]
        except ValueError as exc:
            raise ParseError(
                f"bad preset arguments in {text!r}: {exc}") from exc
    if name == "crossed_product":
        group = GradingGroup(args)
        if sigma is None:
            sigma = trivial_multiplier(group)
        return preset(name, group, sigma)
    return preset(name, *args)


def digest_algebra(a):
    return digest(format_algebra(a))


# ---------------------------------------------------------------------------
# matrices

def format_matrix(x):
    order = _scalar_orders([e for row in x.entries for e in row])
    return {"format": FORMAT, "root_order": order,
            "row_degrees": [list(d.residues) for d in x.row_degrees],
            "col_degrees": [list(d.residues) for d in x.col_degrees],
            "entries": [[format_element(e, order) for e in row]
                        for row in x.entries]}


def parse_matrix(doc, algebra, where="matrix"):
    _check_format(doc, where)
    order = doc.get("root_order", 1)
    rows = _field(doc, "row_degrees", where, list)
    cols = _field(doc, "col_degrees", where, list)
    entries = _field(doc, "entries", where, list)
    try:
        mu = [algebra.group.element(d) for d in rows]
        nu = [algebra.group.element(d) for d in cols]
    except (TypeError, ValueError, InvalidParams) as exc:
        raise ParseError(f"{where}: bad degree vector: {exc}") from exc
    if len(entries) != len(mu):
        raise ParseError(f"{where}: expected {len(mu)} rows of entries")
    grid = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != len(nu):
            raise ParseError(f"{where}: row {i} must list {len(nu)} entries")
        grid.append([parse_element(item, algebra, order,
                                   f"{where} entry ({i},{j})")
                     for j, item in enumerate(row)])
    return GradedMatrix(algebra, mu, nu, grid)


def digest_matrix(x):
    return digest(format_matrix(x))


def digest_multiplier(m):
    return digest(format_multiplier(m))


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, "
                         f"column {exc.colno}") from exc
