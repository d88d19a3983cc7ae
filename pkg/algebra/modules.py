"""
Finite-dimensional graded left modules and the functors pi and sigma.

A module stores one exact action matrix per basis element of its algebra;
column m of action[k] holds the coordinates of b_k * v_m.
"""

import logging
import random
from dataclasses import dataclass
from enum import Enum

from sympy.polys.matrices import DomainMatrix

from .errors import AlgebraMismatch
from .linalg import SubspaceBasis, nullspace_vectors
from .superalgebra import SuperAlgebra, _graded_independent, hat, require_even_idempotent

logger = logging.getLogger(__name__)


class Functor(Enum):
    """The two grading-shift functors: pi (parity change) and sigma (suspension)."""

    SIGMA = "sigma"
    PI = "pi"

    @property
    def symbol(self):
        return "σ" if self is Functor.SIGMA else "π"


def _matrix(dod, rows, cols, domain):
    return DomainMatrix.from_dod({r: dict(v) for r, v in dod.items() if v}, (rows, cols), domain)


def _identity(n, domain):
    return _matrix({i: {i: domain.one} for i in range(n)}, n, n, domain)


def _dod(matrix):
    return matrix.to_sparse().to_dod()


@dataclass(frozen=True, eq=False)
class GradedModule:
    """A graded left module given by its basis parities and action matrices."""

    algebra: SuperAlgebra
    parity: tuple
    action: tuple
    label: str = "M"

    @property
    def dim(self):
        return len(self.parity)

    @property
    def field(self):
        return self.algebra.field

    def parity_dims(self):
        odd = sum(self.parity)
        return self.dim - odd, odd

    def act(self, x):
        """Action matrix of an arbitrary element of the algebra."""
        if x.algebra is not self.algebra:
            raise AlgebraMismatch(f"{x} does not act on a module over {self.algebra.label}")
        domain = self.field.domain
        total = _matrix({}, self.dim, self.dim, domain)
        for k, c in x.coeffs.items():
            total = total + _scaled(self.action[k], c)
        return total.to_sparse()

    def __eq__(self, other):
        if not isinstance(other, GradedModule):
            return NotImplemented
        return (
            other.algebra is self.algebra
            and other.parity == self.parity
            and all(_dod(a) == _dod(b) for a, b in zip(self.action, other.action))
        )

    __hash__ = None


def _scaled(matrix, c):
    dod = {r: {k: v * c for k, v in row.items()} for r, row in _dod(matrix).items()}
    return _matrix(dod, matrix.shape[0], matrix.shape[1], matrix.domain)


def check_module(M):
    """Module axioms: unit acts as identity, action is multiplicative and graded."""
    A = M.algebra
    domain = A.field.domain
    if _dod(M.act(A.unit)) != _dod(_identity(M.dim, domain)):
        return False
    for k in range(A.dim):
        for r, row in _dod(M.action[k]).items():
            if any(M.parity[r] != (M.parity[c] + A.parity[k]) & 1 for c in row):
                return False
    for i in range(A.dim):
        for j in range(A.dim):
            product = M.action[i].matmul(M.action[j]).to_sparse()
            expected = _matrix({}, M.dim, M.dim, domain)
            for k, c in A.basis_product(i, j).items():
                expected = expected + _scaled(M.action[k], c)
            if _dod(product) != _dod(expected):
                return False
    return True


def module_from_idempotent(A, f, label=None):
    """
    The projective module Af for an even idempotent f.

    Args:
        A: SuperAlgebra
        f: Even idempotent of A (the unit gives the regular module)

    Returns:
        GradedModule on a graded basis of {b f}
    """
    require_even_idempotent(A, f)
    domain = A.field.domain
    basis = _graded_independent(A, [A.mul(A.basis(k), f) for k in range(A.dim)])
    space = SubspaceBasis([v.coeffs for v in basis], A.dim, domain)
    action = []
    for k in range(A.dim):
        b = A.basis(k)
        dod = {}
        for m, v in enumerate(basis):
            for r, c in space.coordinates(A.mul(b, v).coeffs).items():
                dod.setdefault(r, {})[m] = c
        action.append(_matrix(dod, len(basis), len(basis), domain))
    return GradedModule(A, tuple(v.parity() for v in basis), tuple(action), label or f"{A.label}·f")


def regular_module(A):
    return module_from_idempotent(A, A.unit, label=A.label)


def parity_change(M):
    """pi(M): flipped parities; odd algebra elements act with an extra sign."""
    A = M.algebra
    action = tuple(-a if A.parity[k] else a for k, a in enumerate(M.action))
    return GradedModule(A, tuple(1 - p for p in M.parity), action, f"π({M.label})")


def suspension(M):
    """sigma(M): flipped parities, unchanged action."""
    return GradedModule(M.algebra, tuple(1 - p for p in M.parity), M.action, f"σ({M.label})")


def apply_functor(M, functor):
    return parity_change(M) if functor is Functor.PI else suspension(M)


def hat_module(M, hat_algebra=None):
    """
    The module over hat(A) with b acting on v_m by (-1)^{|b||m|} b v_m.
    """
    A = M.algebra
    target = hat_algebra or hat(A)
    action = []
    for k, matrix in enumerate(M.action):
        if not A.parity[k]:
            action.append(matrix)
            continue
        dod = {r: {c: -v if M.parity[c] else v for c, v in row.items()} for r, row in _dod(matrix).items()}
        action.append(_matrix(dod, M.dim, M.dim, A.field.domain))
    return GradedModule(target, M.parity, tuple(action), f"hat({M.label})")


def direct_sum(M, N):
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("direct sum of modules over different algebras")
    shift = M.dim
    size = M.dim + N.dim
    action = []
    for a, b in zip(M.action, N.action):
        dod = {r: dict(row) for r, row in _dod(a).items()}
        for r, row in _dod(b).items():
            dod[r + shift] = {c + shift: v for c, v in row.items()}
        action.append(_matrix(dod, size, size, M.field.domain))
    return GradedModule(M.algebra, M.parity + N.parity, tuple(action), f"{M.label} ⊕ {N.label}")


def _acting_elements(A):
    generators = A.generators
    if all(g.is_homogeneous() and not g.is_zero() for g in generators):
        return generators
    return [A.basis(k) for k in range(A.dim)]


def hom_basis(M, N, i):
    """
    Basis of Hom(M, N)_i: maps F with F(M_j) in N_{i+j} and F(a m) = (-1)^{i|a|} a F(m).

    Returns:
        List of DomainMatrix of shape (dim N, dim M)
    """
    if M.algebra is not N.algebra:
        raise AlgebraMismatch(f"Hom between modules over {M.algebra.label} and {N.algebra.label}")
    A = M.algebra
    domain = A.field.domain
    unknowns = [(r, c) for r in range(N.dim) for c in range(M.dim) if N.parity[r] == (M.parity[c] + i) & 1]
    position = {rc: u for u, rc in enumerate(unknowns)}
    equations = []
    for g in _acting_elements(A):
        sign = -1 if i and g.parity() else 1
        P = _dod(M.act(g))
        Q = _dod(N.act(g))
        columns_of_p = {}
        for k, row in P.items():
            for c, v in row.items():
                columns_of_p.setdefault(c, {})[k] = v
        for r in range(N.dim):
            for c in range(M.dim):
                eq = {}
                for k, v in columns_of_p.get(c, {}).items():
                    u = position.get((r, k))
                    if u is not None:
                        eq[u] = eq.get(u, domain.zero) + v
                for k, v in Q.get(r, {}).items():
                    u = position.get((k, c))
                    if u is not None:
                        eq[u] = eq.get(u, domain.zero) - v if sign > 0 else eq.get(u, domain.zero) + v
                eq = {u: v for u, v in eq.items() if v}
                if eq:
                    equations.append(eq)
    system = DomainMatrix.from_dod(dict(enumerate(equations)), (len(equations), len(unknowns)), domain)
    if not unknowns:
        return []
    basis = []
    for solution in nullspace_vectors(system):
        dod = {}
        for u, v in solution.items():
            r, c = unknowns[u]
            dod.setdefault(r, {})[c] = v
        basis.append(_matrix(dod, N.dim, M.dim, domain))
    return basis


def twisted_hom(M, N, functor):
    """(Hom_Gr(M, N), Hom_Gr(S(M), N)) as lists of matrices."""
    return hom_basis(M, N, 0), hom_basis(apply_functor(M, functor), N, 0)


def twisted_end(M, functor):
    """
    The S-twisted endomorphism superalgebra Hom_Gr(M, M) + Hom_Gr(S(M), M).

    Even part: graded endomorphisms; odd part: graded maps out of S(M), read as
    parity-shifting maps on M. The product is composition.
    """
    even, odd = twisted_hom(M, M, functor)
    maps = even + odd
    n = M.dim
    domain = M.field.domain

    def flatten(matrix):
        return {r * n + c: v for r, row in _dod(matrix).items() for c, v in row.items()}

    space = SubspaceBasis([flatten(F) for F in maps], n * n, domain)
    table = [[space.coordinates(flatten(F.matmul(G))) for G in maps] for F in maps]
    unit = space.coordinates(flatten(_identity(n, domain)))
    label = f"End^{functor.symbol}({M.label})"
    return SuperAlgebra(label, M.field, table=table, parity=[0] * len(even) + [1] * len(odd), unit=unit)


def modules_isomorphic(M, N, seed=1, trials=20):
    """Search an invertible even graded homomorphism M -> N."""
    if M.algebra is not N.algebra or M.parity_dims() != N.parity_dims():
        return False
    basis = hom_basis(M, N, 0)
    if not basis:
        return False
    for F in basis:
        if F.rank() == M.dim:
            return True
    rng = random.Random(seed)
    domain = M.field.domain
    for _ in range(trials):
        combo = _matrix({}, N.dim, M.dim, domain)
        for F in basis:
            combo = combo + _scaled(F, domain.convert(rng.randint(-3, 3)))
        if combo.rank() == M.dim:
            return True
    logger.debug("no invertible map found between %s and %s", M.label, N.label)
    return False
