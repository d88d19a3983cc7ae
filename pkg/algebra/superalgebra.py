"""
Elements and finite-dimensional superalgebras.

A SuperAlgebra carries a parity per basis index and one of two product
tiers: Monomial algebras store a BladeLaw and multiply basis elements to a
signed basis element; General algebras store structure constants
table[i][j] = {k: c}. Algebras are immutable and compared by identity;
structure_constants() gives a value comparison when needed.
"""

import logging
from functools import lru_cache

from .blades import BladeLaw, Signature, blade_name
from .errors import AlgebraMismatch, DimMismatch, FieldMismatch, NotIdempotent
from .linalg import SubspaceBasis, EchelonReducer, add_vectors, independent_indices, rank_of, scale_vector
from .scalars import Field, Scalar, format_scalar

logger = logging.getLogger(__name__)


class Element:
    """Sparse exact element: basis index -> nonzero domain element."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs=None):
        self.algebra = algebra
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @property
    def field(self):
        return self.algebra.field

    def _same(self, other):
        if other.algebra is not self.algebra:
            raise AlgebraMismatch(f"elements of {self.algebra.label} and {other.algebra.label} do not mix")

    def _coerce(self, c):
        if isinstance(c, Scalar):
            if c.field is not self.field:
                raise FieldMismatch(f"{c.field.value} scalar on a {self.field.value} element")
            return c.value
        return self.field.domain.convert(c)

    def scaled(self, c):
        return Element(self.algebra, scale_vector(self.coeffs, self._coerce(c)))

    def __add__(self, other):
        self._same(other)
        return Element(self.algebra, add_vectors(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._same(other)
        return Element(self.algebra, add_vectors(self.coeffs, other.coeffs, -self.field.domain.one))

    def __neg__(self):
        return Element(self.algebra, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.mul(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __eq__(self, other):
        if isinstance(other, Element):
            return other.algebra is self.algebra and other.coeffs == self.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    __hash__ = None

    def is_zero(self):
        return not self.coeffs

    def parities(self):
        parity = self.algebra.parity
        return {parity[k] for k in self.coeffs}

    def parity(self):
        """Parity of a nonzero homogeneous element, None otherwise."""
        found = self.parities()
        return found.pop() if len(found) == 1 else None

    def is_homogeneous(self):
        return len(self.parities()) <= 1

    def part(self, parity):
        table = self.algebra.parity
        return Element(self.algebra, {k: v for k, v in self.coeffs.items() if table[k] == parity})

    def coefficient(self, index):
        return Scalar(self.field, self.coeffs.get(index, self.field.domain.zero))

    def transfer(self, algebra):
        """Same coordinates read in another algebra on the same basis (e.g. its hat)."""
        if algebra.dim != self.algebra.dim:
            raise DimMismatch(f"cannot move an element of dim {self.algebra.dim} into dim {algebra.dim}")
        return Element(algebra, self.coeffs)

    def __str__(self):
        return self.algebra.format_element(self)

    def __repr__(self):
        return f"Element({self.algebra.label}: {self})"


class SuperAlgebra:
    """
    A finite-dimensional associative unital superalgebra.

    Exactly one of `law` (Monomial tier) or `table` (General tier) is given.
    `embedding` optionally records (ambient algebra, basis elements) when the
    algebra was carved out of another one.
    """

    def __init__(self, label, field, *, law=None, table=None, parity=None, unit=None,
                 generators=None, basis_names=None, embedding=None, factors=None):
        if (law is None) == (table is None):
            raise ValueError("exactly one of law or table is required")
        self.label = label
        self.field = field
        self.law = law
        self.table = table
        if law is not None:
            self.dim = 1 << law.n
            self.parity = tuple(m.bit_count() & 1 for m in range(self.dim))
            unit = {0: field.domain.one}
            if generators is None:
                generators = [{1 << i: field.domain.one} for i in range(law.n)]
            if basis_names is None:
                basis_names = [blade_name(m) for m in range(self.dim)]
        else:
            self.dim = len(table)
            self.parity = tuple(parity)
            if generators is None:
                generators = [{i: field.domain.one} for i in range(self.dim)]
            if basis_names is None:
                basis_names = [f"b{i + 1}" for i in range(self.dim)]
        self._unit = dict(unit)
        self._generators = [dict(g) for g in generators]
        self.basis_names = list(basis_names)
        self.embedding = embedding
        self.factors = factors

    @property
    def is_monomial(self):
        return self.law is not None

    @property
    def unit(self):
        return Element(self, self._unit)

    @property
    def generators(self):
        return [Element(self, g) for g in self._generators]

    def zero(self):
        return Element(self)

    def basis(self, index):
        return Element(self, {index: self.field.domain.one})

    def element(self, coeffs):
        domain = self.field.domain
        return Element(self, {k: domain.convert(v) for k, v in coeffs.items()})

    def scalar(self, c):
        return self.unit.scaled(c)

    def basis_indices(self, parity=None):
        return [i for i in range(self.dim) if parity is None or self.parity[i] == parity]

    def parity_dims(self):
        odd = sum(self.parity)
        return self.dim - odd, odd

    def basis_product(self, i, j):
        """Product of basis elements i and j as a sparse coefficient dict."""
        if self.law is not None:
            sign = self.law.sign(i, j)
            if not sign:
                return {}
            one = self.field.domain.one
            return {i ^ j: one if sign > 0 else -one}
        return self.table[i][j]

    def mul(self, x, y):
        if x.algebra is not self or y.algebra is not self:
            raise AlgebraMismatch(f"product requested in {self.label} for foreign elements")
        out = {}
        if self.law is not None:
            sign = self.law.sign
            for i, a in x.coeffs.items():
                for j, b in y.coeffs.items():
                    s = sign(i, j)
                    if not s:
                        continue
                    term = a * b if s > 0 else -(a * b)
                    k = i ^ j
                    total = out.get(k)
                    out[k] = term if total is None else total + term
        else:
            for i, a in x.coeffs.items():
                row = self.table[i]
                for j, b in y.coeffs.items():
                    ab = a * b
                    for k, c in row[j].items():
                        total = out.get(k)
                        term = ab * c
                        out[k] = term if total is None else total + term
        return Element(self, out)

    def _order(self):
        if self.law is not None:
            return sorted(range(self.dim), key=lambda m: (m.bit_count(), [i for i in range(self.law.n) if m >> i & 1]))
        return range(self.dim)

    def format_element(self, x):
        terms = []
        for k in self._order():
            value = x.coeffs.get(k)
            if not value:
                continue
            coeff = format_scalar(value, self.field)
            name = self.basis_names[k]
            if name == "1":
                term = coeff
            elif coeff == "1":
                term = name
            elif coeff == "-1":
                term = f"-{name}"
            else:
                if self.field is Field.COMPLEX and value.x and value.y:
                    coeff = f"({coeff})"
                term = f"{coeff}*{name}"
            terms.append(term)
        if not terms:
            return "0"
        text = terms[0]
        for term in terms[1:]:
            text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return text

    def structure_constants(self):
        return tuple(
            tuple(tuple(sorted(self.basis_product(i, j).items())) for j in range(self.dim)) for i in range(self.dim)
        )

    def to_dict(self):
        return {"label": self.label, "dim": self.dim, "parity": list(self.parity), "field": self.field.value}

    def __repr__(self):
        return f"SuperAlgebra({self.label}, dim={self.dim})"


@lru_cache(maxsize=64)
def from_signature(sig):
    """Monomial superalgebra presented by odd generators with the given squares."""
    return SuperAlgebra(sig.label(), sig.field, law=BladeLaw.from_signature(sig))


def clifford_real(p, q=0, r=0):
    """R_{p,q,r}: p generators squaring to +1, q to -1, r to 0, all anticommuting."""
    return from_signature(Signature.real(p, q, r))


def clifford_complex(p, q=0):
    """C_{p,q}: p generators squaring to +1 and q to 0, over the Gaussian rationals."""
    return from_signature(Signature.complex(p, q))


def relabel(A, label):
    """Shallow copy of A under a new label."""
    if A.law is not None:
        return SuperAlgebra(label, A.field, law=A.law, generators=A._generators, basis_names=A.basis_names,
                            factors=A.factors)
    return SuperAlgebra(label, A.field, table=A.table, parity=A.parity, unit=A._unit, generators=A._generators,
                        basis_names=A.basis_names, embedding=A.embedding, factors=A.factors)


def mul(A, x, y):
    return A.mul(x, y)


def power(A, x, k):
    result = A.unit
    for _ in range(k):
        result = A.mul(result, x)
    return result


def skew_tensor(A, B):
    """
    Skew tensor product: (a1 x b1)(a2 x b2) = (-1)^{|b1||a2|} a1a2 x b1b2.

    The basis pair (i, j) has index i + j*dim(A). Two Monomial factors give a
    Monomial result whose generators are those of A followed by those of B.
    """
    if A.field is not B.field:
        raise FieldMismatch(f"cannot tensor {A.label} over {A.field.value} with {B.label} over {B.field.value}")
    label = f"{A.label} ⊗ {B.label}"
    if A.law is not None and B.law is not None and _default_generators(A) and _default_generators(B):
        return SuperAlgebra(label, A.field, law=A.law.concat(B.law), factors=(A, B))
    da, db = A.dim, B.dim
    parity = [(A.parity[i] + B.parity[j]) & 1 for j in range(db) for i in range(da)]
    table = [[None] * (da * db) for _ in range(da * db)]
    for j1 in range(db):
        for i1 in range(da):
            row = table[i1 + j1 * da]
            for j2 in range(db):
                right = B.basis_product(j1, j2)
                if not right:
                    for i2 in range(da):
                        row[i2 + j2 * da] = {}
                    continue
                for i2 in range(da):
                    left = A.basis_product(i1, i2)
                    flip = B.parity[j1] & A.parity[i2]
                    entry = {}
                    for k, a in left.items():
                        for l, b in right.items():
                            c = a * b
                            entry[k + l * da] = -c if flip else c
                    row[i2 + j2 * da] = entry
    unit = tensor_coeffs(A.unit.coeffs, B.unit.coeffs, da)
    generators = [tensor_coeffs(g, B.unit.coeffs, da) for g in A._generators]
    generators += [tensor_coeffs(A.unit.coeffs, h, da) for h in B._generators]
    names = [_tensor_name(A.basis_names[i], B.basis_names[j]) for j in range(db) for i in range(da)]
    return SuperAlgebra(label, A.field, table=table, parity=parity, unit=unit, generators=generators,
                        basis_names=names, factors=(A, B))


def _default_generators(A):
    one = A.field.domain.one
    return A._generators == [{1 << i: one} for i in range(A.law.n)]


def _tensor_name(left, right):
    if right == "1":
        return left
    if left == "1":
        return right
    return f"{left}⊗{right}"


def tensor_coeffs(a, b, dim_a):
    return {i + j * dim_a: x * y for i, x in a.items() for j, y in b.items()}


def tensor_element(T, a, b):
    """The pure tensor a x b inside T = skew_tensor(A, B)."""
    A, _ = T.factors
    return Element(T, tensor_coeffs(a.coeffs, b.coeffs, A.dim))


def supertwist_check(A, B, signed=True):
    """
    True iff a x b -> (-1)^{|a||b|} b x a is an even multiplicative bijection
    from A (x) B to B (x) A, checked on all basis pairs. signed=False drops
    the sign, which fails as soon as both factors have odd elements.
    """
    if A.field is not B.field:
        raise FieldMismatch(f"cannot twist {A.label} and {B.label} over different fields")
    AB, BA = skew_tensor(A, B), skew_tensor(B, A)
    da, db = A.dim, B.dim
    one = A.field.domain.one
    images = [None] * AB.dim
    for j in range(db):
        for i in range(da):
            sign = -one if signed and A.parity[i] & B.parity[j] else one
            images[i + j * da] = Element(BA, {j + i * db: sign})

    def twist(x):
        out = BA.zero()
        for k, c in x.coeffs.items():
            out = out + images[k].scaled(c)
        return out

    if any(AB.parity[k] != images[k].parity() for k in range(AB.dim)):
        return False
    if rank_of([img.coeffs for img in images], BA.dim, A.field.domain) != AB.dim:
        return False
    for u in range(AB.dim):
        for v in range(AB.dim):
            if twist(Element(AB, AB.basis_product(u, v))) != BA.mul(images[u], images[v]):
                logger.debug("supertwist fails on basis pair (%d, %d)", u, v)
                return False
    return True


def hat(A):
    """Same graded space with the product resigned by (-1)^{|a||b|}."""
    label = f"hat({A.label})"
    if A.law is not None:
        return SuperAlgebra(label, A.field, law=A.law.hatted(), generators=A._generators,
                            basis_names=A.basis_names)
    table = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            entry = A.table[i][j]
            if A.parity[i] & A.parity[j]:
                entry = {k: -c for k, c in entry.items()}
            row.append(entry)
        table.append(row)
    return SuperAlgebra(label, A.field, table=table, parity=A.parity, unit=A._unit, generators=A._generators,
                        basis_names=A.basis_names)


def grade_involution(A, x):
    """alpha(x) = x_0 - x_1."""
    if x.algebra is not A:
        raise AlgebraMismatch(f"element does not belong to {A.label}")
    return Element(A, {k: -v if A.parity[k] else v for k, v in x.coeffs.items()})


def is_idempotent(A, f):
    return A.mul(f, f) == f


def require_even_idempotent(A, f, name="f"):
    if f.algebra is not A:
        raise AlgebraMismatch(f"{name} does not belong to {A.label}")
    if f.is_zero():
        raise NotIdempotent(f"{name} is zero")
    if f.parity() != 0:
        raise NotIdempotent(f"{name} = {f} is not even and homogeneous")
    if not is_idempotent(A, f):
        raise NotIdempotent(f"{name} = {f} is not idempotent")


def _graded_independent(A, candidates):
    domain = A.field.domain
    basis = []
    for parity in (0, 1):
        group = [c for c in candidates if not c.is_zero() and c.parity() == parity]
        keep = independent_indices([c.coeffs for c in group], A.dim, domain)
        basis.extend(group[k] for k in keep)
    return basis


def span_algebra(A, candidates, unit, label, generators=None, names=None):
    """
    General superalgebra on the span of homogeneous candidates, which must be
    closed under the product of A and contain `unit` as its identity.
    """
    basis = _graded_independent(A, candidates)
    space = SubspaceBasis([b.coeffs for b in basis], A.dim, A.field.domain)
    table = [[space.coordinates(A.mul(x, y).coeffs) for y in basis] for x in basis]
    parity = [b.parity() for b in basis]
    gens = None if generators is None else [space.coordinates(g.coeffs) for g in generators]
    if names is None:
        names = [f"[{b}]" if len(b.coeffs) > 1 else str(b) for b in basis]
    return SuperAlgebra(label, A.field, table=table, parity=parity, unit=space.coordinates(unit.coeffs),
                        generators=gens, basis_names=names, embedding=(A, basis))


def embed(B, x):
    """Image in the ambient algebra of an element of a corner, subalgebra or quotient."""
    ambient, basis = B.embedding
    out = ambient.zero()
    for k, c in x.coeffs.items():
        out = out + basis[k].scaled(c)
    return out


def corner(A, f, label=None):
    """The corner superalgebra fAf with unit f, on a graded basis of the f b f."""
    require_even_idempotent(A, f)
    candidates = [A.mul(A.mul(f, A.basis(k)), f) for k in range(A.dim)]
    return span_algebra(A, candidates, f, label or f"corner({A.label})")


def hom_space_basis(A, f, g):
    """Graded bases (even, odd) of the subspace fAg."""
    require_even_idempotent(A, f, "f")
    require_even_idempotent(A, g, "g")
    candidates = [A.mul(A.mul(f, A.basis(k)), g) for k in range(A.dim)]
    basis = _graded_independent(A, candidates)
    return [b for b in basis if b.parity() == 0], [b for b in basis if b.parity() == 1]


def hom_space_dims(A, f, g):
    even, odd = hom_space_basis(A, f, g)
    return len(even), len(odd)


def subalgebra(A, elements, label, generators=None, names=None):
    """The unital subalgebra generated by homogeneous elements."""
    domain = A.field.domain
    gens = [e for e in elements if not e.is_zero()]
    spanning = [A.unit] + gens
    while True:
        basis = _graded_independent(A, spanning)
        grown = basis + [A.mul(b, g) for b in basis for g in gens]
        if rank_of([x.coeffs for x in grown], A.dim, domain) == len(basis):
            break
        spanning = grown
    return span_algebra(A, basis, A.unit, label, generators=generators, names=names)


def quotient(A, ideal, label=None):
    """
    A/J for a graded two-sided ideal J given by spanning elements.

    The quotient basis is the set of standard basis vectors of A outside the
    pivot columns of J's echelon form; products are reduced modulo J.
    """
    vectors = []
    for x in ideal:
        for parity in (0, 1):
            part = x.part(parity)
            if not part.is_zero():
                vectors.append(part.coeffs)
    if not vectors:
        return A
    reducer = EchelonReducer(vectors, A.dim, A.field.domain)
    kept = [k for k in range(A.dim) if k not in set(reducer.pivots)]
    position = {k: a for a, k in enumerate(kept)}

    def project(coeffs):
        return {position[k]: c for k, c in reducer.reduce(coeffs).items()}

    table = [[project(A.basis_product(i, j)) for j in kept] for i in kept]
    generators = [project(g) for g in A._generators]
    generators = [g for g in generators if g]
    return SuperAlgebra(label or f"{A.label}/J", A.field, table=table, parity=[A.parity[k] for k in kept],
                        unit=project(A._unit), generators=generators,
                        basis_names=[A.basis_names[k] for k in kept],
                        embedding=(A, [A.basis(k) for k in kept]))


def induced_basis_map(A, B, images):
    """
    Extend a generator assignment multiplicatively to the basis of A.

    Returns:
        List of images of A's basis elements, or None when the generators of A
        do not span A through their words
    """
    generators = A.generators
    domain = A.field.domain
    words_a, words_b = [A.unit], [B.unit]
    frontier = [0]
    while frontier and len(words_a) < A.dim:
        cand_a, cand_b = [], []
        for w in frontier:
            for g, img in zip(generators, images):
                cand_a.append(A.mul(words_a[w], g))
                cand_b.append(B.mul(words_b[w], img))
        start = len(words_a)
        keep = independent_indices([w.coeffs for w in words_a] + [c.coeffs for c in cand_a], A.dim, domain)
        for k in keep:
            if k >= start:
                words_a.append(cand_a[k - start])
                words_b.append(cand_b[k - start])
        frontier = list(range(start, len(words_a)))
    if len(words_a) < A.dim:
        return None
    space = SubspaceBasis([w.coeffs for w in words_a], A.dim, domain)
    one = domain.one
    basis_images = []
    for i in range(A.dim):
        out = B.zero()
        for k, c in space.coordinates({i: one}).items():
            out = out + words_b[k].scaled(c)
        basis_images.append(out)
    return basis_images


def is_isomorphic_via(A, B, images):
    """
    True iff the generator assignment extends to an isomorphism of superalgebras.

    Args:
        A: Source algebra
        B: Target algebra
        images: One element of B per generator of A, in A.generators order

    Returns:
        True when the induced basis map is even, bijective, multiplicative and
        agrees with the assignment on every generator
    """
    if A.dim != B.dim:
        raise DimMismatch(f"{A.label} has dim {A.dim}, {B.label} has dim {B.dim}")
    if A.field is not B.field:
        raise FieldMismatch(f"{A.label} and {B.label} live over different fields")
    images = list(images)
    generators = A.generators
    if len(images) != len(generators):
        raise DimMismatch(f"{A.label} has {len(generators)} generators, {len(images)} images given")
    for g, img in zip(generators, images):
        if img.algebra is not B:
            raise AlgebraMismatch(f"generator image {img} is not an element of {B.label}")
        if not img.is_zero() and (not img.is_homogeneous() or img.parity() != g.parity()):
            return False
    basis_images = induced_basis_map(A, B, images)
    if basis_images is None:
        logger.debug("generators of %s do not span it", A.label)
        return False
    if rank_of([x.coeffs for x in basis_images], B.dim, B.field.domain) != B.dim:
        return False
    if any(basis_images[i].parity() != A.parity[i] for i in range(A.dim)):
        return False

    def apply(x):
        out = B.zero()
        for k, c in x.coeffs.items():
            out = out + basis_images[k].scaled(c)
        return out

    if any(apply(g) != img for g, img in zip(generators, images)):
        return False
    for i in range(A.dim):
        for j in range(A.dim):
            if apply(Element(A, A.basis_product(i, j))) != B.mul(basis_images[i], basis_images[j]):
                logger.debug("assignment not multiplicative on (%s, %s)", A.basis_names[i], A.basis_names[j])
                return False
    return True


def quaternion_units(D3):
    """(i, j, k, theta) = (e2e3, e1e3, e1e2, e1e2e3) inside D_+^3 or D_-^3."""
    return D3.basis(0b110), D3.basis(0b101), D3.basis(0b011), D3.basis(0b111)


@lru_cache(maxsize=1)
def quaternions():
    """The quaternions as the even subalgebra <1, i, j, k> of D_+^3, generated by i and j."""
    D3 = clifford_real(3, 0, 0)
    i, j, k, _ = quaternion_units(D3)
    return subalgebra(D3, [i, j, k], "H", generators=[i, j], names=["1", "i", "j", "k"])


def trivial_algebra(field=Field.REAL):
    """The ground field as a purely even superalgebra of dimension 1."""
    return relabel(from_signature(Signature((), field)), field.symbol)


def as_scalar(x):
    """The domain element c with x = c*1, or None when x is not a scalar multiple of the unit."""
    A = x.algebra
    unit = A._unit
    anchor = next(iter(unit))
    ratio = x.coeffs.get(anchor, A.field.domain.zero) / unit[anchor]
    if x != A.unit.scaled(ratio):
        return None
    return ratio
