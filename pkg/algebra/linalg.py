"""
Exact linear algebra over Q and Q(i).

Thin layer over sympy's DomainMatrix: the public Matrix/rref/solve API plus
the sparse helpers used by the algebra code, where a vector is a dict from
coordinate index to a domain element with zero entries omitted.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from sympy import Poly, Symbol
from sympy.polys.matrices import DomainMatrix

from .errors import DimMismatch
from .scalars import Field, Scalar

logger = logging.getLogger(__name__)

t = Symbol("t")


def _convert(value, domain):
    if isinstance(value, Scalar):
        return value.value
    return domain.convert(value)


class Matrix:
    """Rectangular exact matrix over one of the two fields."""

    def __init__(self, rep, field):
        self.rep = rep.to_sparse()
        self.field = field

    @classmethod
    def from_rows(cls, rows, field=Field.REAL):
        domain = field.domain
        rows = [list(row) for row in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise DimMismatch("rows of unequal length")
        dod = {}
        for i, row in enumerate(rows):
            entries = {j: _convert(v, domain) for j, v in enumerate(row)}
            entries = {j: v for j, v in entries.items() if v}
            if entries:
                dod[i] = entries
        return cls(DomainMatrix.from_dod(dod, (len(rows), ncols), domain), field)

    @classmethod
    def identity(cls, n, field=Field.REAL):
        domain = field.domain
        return cls(DomainMatrix.from_dod({i: {i: domain.one} for i in range(n)}, (n, n), domain), field)

    @property
    def shape(self):
        return self.rep.shape

    @property
    def rows(self):
        return self.rep.shape[0]

    @property
    def cols(self):
        return self.rep.shape[1]

    def __getitem__(self, key):
        i, j = key
        value = self.rep.to_dod().get(i, {}).get(j, self.field.domain.zero)
        return Scalar(self.field, value)

    def to_rows(self):
        dod = self.rep.to_dod()
        zero = self.field.domain.zero
        return [[Scalar(self.field, dod.get(i, {}).get(j, zero)) for j in range(self.cols)] for i in range(self.rows)]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(self.rep.matmul(other.rep), self.field)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field is other.field and self.rep.to_dod() == other.rep.to_dod() and self.shape == other.shape

    def __repr__(self):
        return f"Matrix({[[str(v) for v in row] for row in self.to_rows()]})"


def _rref(rep):
    if rep.shape[0] == 0 or rep.shape[1] == 0:
        return rep, ()
    reduced, pivots = rep.rref()
    return reduced.to_sparse(), tuple(pivots)


def rref(M):
    """
    Reduced row echelon form.

    Returns:
        (R, rank, pivot_cols) tuple
    """
    reduced, pivots = _rref(M.rep)
    return Matrix(reduced, M.field), len(pivots), pivots


@dataclass(frozen=True)
class Solution:
    vector: tuple


@dataclass(frozen=True)
class NoSolution:
    pass


@dataclass(frozen=True)
class SolutionSpace:
    particular: tuple
    nullspace: tuple


def solve(M, b):
    """
    Solve M x = b exactly.

    Returns:
        Solution for a unique solution, SolutionSpace(particular, nullspace basis)
        for an underdetermined consistent system, NoSolution otherwise
    """
    b = list(b)
    if len(b) != M.rows:
        raise DimMismatch(f"right-hand side has {len(b)} entries, matrix has {M.rows} rows")
    domain = M.field.domain
    zero = domain.zero
    augmented = M.rep.to_dod()
    for i, value in enumerate(b):
        value = _convert(value, domain)
        if value:
            augmented.setdefault(i, {})[M.cols] = value
    reduced, pivots = _rref(DomainMatrix.from_dod(augmented, (M.rows, M.cols + 1), domain))
    if M.cols in pivots:
        return NoSolution()
    rows = reduced.to_dod()
    particular = [zero] * M.cols
    for row, col in enumerate(pivots):
        particular[col] = rows.get(row, {}).get(M.cols, zero)
    particular = tuple(Scalar(M.field, v) for v in particular)
    basis = nullspace_vectors(M.rep)
    if not basis:
        return Solution(particular)
    nullspace = tuple(tuple(Scalar(M.field, v.get(j, zero)) for j in range(M.cols)) for v in basis)
    return SolutionSpace(particular, nullspace)


def matrix_from_vectors(vectors, ncols, domain):
    """Matrix whose rows are the given sparse vectors."""
    dod = {i: dict(v) for i, v in enumerate(vectors) if v}
    return DomainMatrix.from_dod(dod, (len(vectors), ncols), domain)


def nullspace_vectors(rep) -> List[Dict[int, object]]:
    """Basis of {x : rep x = 0} as sparse vectors."""
    nrows, ncols = rep.shape
    if ncols == 0:
        return []
    if nrows == 0 or not rep.to_dod():
        one = rep.domain.one
        return [{j: one} for j in range(ncols)]
    basis = rep.nullspace().to_sparse().to_dod()
    return [basis[i] for i in sorted(basis)]


def independent_indices(vectors: Sequence[dict], ncols, domain) -> List[int]:
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    if not vectors or not ncols:
        return []
    dod = {}
    for j, v in enumerate(vectors):
        for i, value in v.items():
            dod.setdefault(i, {})[j] = value
    if not dod:
        return []
    _, pivots = _rref(DomainMatrix.from_dod(dod, (ncols, len(vectors)), domain))
    return list(pivots)


def rank_of(vectors, ncols, domain):
    return len(independent_indices(vectors, ncols, domain))


def scale_vector(v, c):
    if not c:
        return {}
    return {k: c * value for k, value in v.items()}


def add_vectors(u, v, c=None):
    """u + c*v as a new sparse vector (c defaults to one)."""
    out = dict(u)
    for k, value in v.items():
        term = value if c is None else c * value
        total = out.get(k)
        total = term if total is None else total + term
        if total:
            out[k] = total
        else:
            out.pop(k, None)
    return out


class SubspaceBasis:
    """
    An ordered basis of a subspace of K^n given by independent sparse vectors.

    Coordinates are read off the pivot columns of the basis: if P are the
    pivot columns and Q the inverse of the basis restricted to P, the
    coordinates of v are v[P] Q.
    """

    def __init__(self, vectors, ncols, domain):
        self.vectors = [dict(v) for v in vectors]
        self.ncols = ncols
        self.domain = domain
        m = len(self.vectors)
        if not m:
            self._pivots, self._inverse = (), {}
            return
        _, pivots = _rref(matrix_from_vectors(self.vectors, ncols, domain))
        if len(pivots) != m:
            raise DimMismatch("basis vectors are linearly dependent")
        block = {}
        for i, v in enumerate(self.vectors):
            row = {j: v[p] for j, p in enumerate(pivots) if p in v}
            if row:
                block[i] = row
        self._pivots = pivots
        self._inverse = DomainMatrix.from_dod(block, (m, m), domain).inv().to_sparse().to_dod()

    @classmethod
    def from_spanning(cls, vectors, ncols, domain):
        keep = independent_indices(vectors, ncols, domain)
        return cls([vectors[i] for i in keep], ncols, domain), keep

    @property
    def dim(self):
        return len(self.vectors)

    def coordinates(self, v) -> Dict[int, object]:
        coords = {}
        for j, p in enumerate(self._pivots):
            value = v.get(p)
            if not value:
                continue
            for k, q in self._inverse.get(j, {}).items():
                total = coords.get(k)
                term = value * q
                coords[k] = term if total is None else total + term
        return {k: c for k, c in coords.items() if c}

    def combine(self, coords) -> Dict[int, object]:
        out = {}
        for k, c in coords.items():
            out = add_vectors(out, self.vectors[k], c)
        return out

    def contains(self, v):
        return self.combine(self.coordinates(v)) == {k: c for k, c in v.items() if c}


class EchelonReducer:
    """Reduction of vectors modulo a subspace, using its reduced row echelon basis."""

    def __init__(self, vectors, ncols, domain):
        self.ncols = ncols
        reduced, pivots = _rref(matrix_from_vectors(list(vectors), ncols, domain)) if vectors else (None, ())
        rows = reduced.to_dod() if reduced is not None else {}
        self.pivots = pivots
        self._rows = [rows.get(i, {}) for i in range(len(pivots))]

    def reduce(self, v):
        out = dict(v)
        for p, row in zip(self.pivots, self._rows):
            c = out.get(p)
            if c:
                out = add_vectors(out, row, -c)
        return out


def _krylov_relation(vectors, ncols, domain):
    # vectors[:-1] are independent; a relation exists iff the last one lies in their span
    dod = {}
    for j, v in enumerate(vectors):
        for i, value in v.items():
            dod.setdefault(i, {})[j] = value
    rep = DomainMatrix.from_dod(dod, (ncols, len(vectors)), domain)
    kernel = nullspace_vectors(rep)
    if not kernel:
        return None
    relation = kernel[0]
    lead = relation.get(len(vectors) - 1)
    return {k: value / lead for k, value in relation.items()}


def minimal_polynomial(A, x, unit=None):
    """
    Monic minimal polynomial of x in the unital subalgebra it generates.

    Args:
        A: Ambient SuperAlgebra
        x: Element of A
        unit: Idempotent acting as the identity (defaults to the unit of A);
              x must satisfy unit*x = x*unit = x

    Returns:
        sympy Poly in t over QQ or QQ_I
    """
    domain = A.field.domain
    unit = A.unit if unit is None else unit
    powers = [unit.coeffs]
    current = unit
    while True:
        current = A.mul(current, x)
        relation = _krylov_relation(powers + [current.coeffs], A.dim, domain)
        if relation is not None:
            degree = len(powers)
            coeffs = [relation.get(k, domain.zero) for k in range(degree, -1, -1)]
            return Poly.from_list(coeffs, t, domain=domain)
        powers.append(current.coeffs)
        if len(powers) > A.dim + 1:
            raise RuntimeError("Krylov sequence exceeded the algebra dimension")


def polynomial_coefficients(poly, domain):
    """Coefficients as domain elements, highest degree first."""
    return [domain.from_sympy(c) for c in poly.all_coeffs()]


def evaluate_polynomial(A, poly, x, unit=None):
    """Evaluate poly at x by Horner's rule, with t^0 mapped to unit."""
    unit = A.unit if unit is None else unit
    result = A.zero()
    for c in polynomial_coefficients(poly, A.field.domain):
        result = A.mul(result, x) + unit.scaled(c)
    return result


def factor_polynomial(poly) -> Tuple[object, List[Tuple[Poly, int]]]:
    """Complete factorization over the polynomial's own domain (Q or Q(i))."""
    return poly.factor_list()
