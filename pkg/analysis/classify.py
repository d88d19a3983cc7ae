"""
Graded Morita classes of Clifford superalgebras.

Closed-form class arithmetic for R_{p,q,r} and C_{p,q}, concrete
representatives, identification of computed basic algebras and the
brute-force oracle that runs the whole reduction without any arithmetic
shortcut.
"""

import logging
from dataclasses import dataclass
from enum import IntEnum
from itertools import product

from algebra.errors import InvalidSignature, TooLarge, UnrecognizedBasic
from algebra.modules import Functor
from algebra.scalars import Field, rational_sqrt
from algebra.superalgebra import (
    as_scalar,
    clifford_complex,
    clifford_real,
    is_isomorphic_via,
    quaternions,
    quotient,
    relabel,
    skew_tensor,
    trivial_algebra,
)
from utils.settings import DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TRIALS, MAX_ORACLE_DIM

from .morita import as_functor, basic_reduction, jacobson_radical

logger = logging.getLogger(__name__)

# backtracking steps allowed per candidate representative
SEARCH_LIMIT = 20000


class RealCore(IntEnum):
    """Core of a real class, indexed so that the skew tensor product adds indices mod 8."""

    TRIV = 0
    DPLUS1 = 1
    DPLUS2 = 2
    DPLUS3 = 3
    QUAT = 4
    DMINUS3 = 5
    DMINUS2 = 6
    DMINUS1 = 7

    @property
    def text(self):
        return _REAL_NAMES[self]

    def hatted(self):
        """Image under the hat functor: D+^k and D-^k swap, R and H stay."""
        return RealCore(-self % 8)

    def compose(self, other):
        return RealCore((self + other) % 8)


_REAL_NAMES = {
    RealCore.TRIV: "R",
    RealCore.DPLUS1: "D+",
    RealCore.DPLUS2: "D+^2",
    RealCore.DPLUS3: "D+^3",
    RealCore.QUAT: "H",
    RealCore.DMINUS3: "D-^3",
    RealCore.DMINUS2: "D-^2",
    RealCore.DMINUS1: "D-",
}


class ComplexCore(IntEnum):
    TRIV = 0
    DODD = 1

    @property
    def text(self):
        return "C" if self is ComplexCore.TRIV else "D"

    def hatted(self):
        return self

    def compose(self, other):
        return ComplexCore((self + other) % 2)


def _class_name(core, rank):
    return core.text if rank == 0 else f"{core.text} ⊗ Λ({rank})"


@dataclass(frozen=True)
class RealClass:
    core: RealCore
    grassmann_rank: int = 0

    field = Field.REAL

    @property
    def name(self):
        return _class_name(self.core, self.grassmann_rank)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class ComplexClass:
    core: ComplexCore
    grassmann_rank: int = 0

    field = Field.COMPLEX

    @property
    def name(self):
        return _class_name(self.core, self.grassmann_rank)

    def __str__(self):
        return self.name


# Class printed in the published table at each residue of p - q (mod 8); it
# differs from the computed class at residues 5 and 7.
PRINTED_TABLE_CLASSES = (
    RealCore.TRIV,
    RealCore.DPLUS1,
    RealCore.DPLUS2,
    RealCore.DPLUS3,
    RealCore.QUAT,
    RealCore.DMINUS1,
    RealCore.DMINUS2,
    RealCore.DMINUS3,
)

# Literal reading of the theorem's piecewise conditions (p - q = 4 - i, 4 + i).
THEOREM_DISPLAY_CLASSES = (
    RealCore.TRIV,
    RealCore.DPLUS3,
    RealCore.DPLUS2,
    RealCore.DPLUS1,
    RealCore.QUAT,
    RealCore.DMINUS1,
    RealCore.DMINUS2,
    RealCore.DMINUS3,
)


def printed_table_class(residue):
    return PRINTED_TABLE_CLASSES[residue % 8]


def theorem_display_class(residue):
    return THEOREM_DISPLAY_CLASSES[residue % 8]


def _check_counts(*counts):
    if any(c < 0 for c in counts):
        raise InvalidSignature(f"negative signature {counts}")


def real_basic_class(p, q, r=0, functor=Functor.SIGMA):
    """
    Class of R_{p,q,r} from (p - q) mod 8.

    Under pi the class is that of hat(R_{p,q,r}) = R_{q,p,r}.
    """
    _check_counts(p, q, r)
    core = RealCore((p - q) % 8)
    if as_functor(functor) is Functor.PI:
        core = core.hatted()
    return RealClass(core, r)


def complex_basic_class(p, q=0, functor=Functor.SIGMA):
    """Class of C_{p,q}: C or D by the parity of p; the same for both functors."""
    _check_counts(p, q)
    as_functor(functor)
    return ComplexClass(ComplexCore(p % 2), q)


def core_algebra(core):
    """The rank-0 representative of a core."""
    if isinstance(core, ComplexCore):
        return trivial_algebra(Field.COMPLEX) if core is ComplexCore.TRIV else clifford_complex(1, 0)
    if core is RealCore.TRIV:
        return trivial_algebra(Field.REAL)
    if core is RealCore.QUAT:
        return quaternions()
    if core <= RealCore.DPLUS3:
        return clifford_real(int(core), 0, 0)
    return clifford_real(0, 8 - int(core), 0)


def realize(cls):
    """
    Concrete representative: the core algebra skew-tensored with a Grassmann
    algebra of the class's rank.
    """
    core = core_algebra(cls.core)
    rank = cls.grassmann_rank
    if rank == 0:
        return core
    if isinstance(cls, ComplexClass):
        grassmann = clifford_complex(0, rank)
    else:
        grassmann = clifford_real(0, 0, rank)
    return relabel(skew_tensor(core, grassmann), cls.name)


_CANDIDATES = {
    Field.REAL: {
        (1, 0): (RealCore.TRIV,),
        (1, 1): (RealCore.DPLUS1, RealCore.DMINUS1),
        (2, 2): (RealCore.DPLUS2, RealCore.DMINUS2),
        (4, 4): (RealCore.DPLUS3, RealCore.DMINUS3),
        (4, 0): (RealCore.QUAT,),
    },
    Field.COMPLEX: {
        (1, 0): (ComplexCore.TRIV,),
        (1, 1): (ComplexCore.DODD,),
    },
}


def _image_pool(Q, parity, target):
    """
    Elements of Q of the given parity whose square is target*1, built from
    {-1, 0, 1} combinations of the basis (first nonzero coefficient +1) and
    rescaled by an exact square root.
    """
    indices = Q.basis_indices(parity)
    pool = []
    for coeffs in product((0, 1, -1), repeat=len(indices)):
        nonzero = [c for c in coeffs if c]
        if not nonzero or nonzero[0] != 1:
            continue
        x = Q.element({k: c for k, c in zip(indices, coeffs) if c})
        square = as_scalar(Q.mul(x, x))
        if not square:
            continue
        root = rational_sqrt(target / square, Q.field)
        if root is None:
            continue
        pool.append(x.scaled(root))
    pool.sort(key=lambda x: len(x.coeffs))
    return pool


def _relation(A, a, b):
    """+1 if a and b commute, -1 if they anticommute, None otherwise."""
    ab, ba = A.mul(a, b), A.mul(b, a)
    if ab == ba:
        return 1
    if ab == -ba:
        return -1
    return None


def find_isomorphism(R, Q):
    """
    Search generator images realizing R = Q.

    Images of R's generators are drawn from signed small combinations of Q's
    basis with the same parity and square, pruned by the pairwise
    commutation pattern, and confirmed by is_isomorphic_via.

    Returns:
        List of images, or None
    """
    if R.dim != Q.dim or R.field is not Q.field or R.parity_dims() != Q.parity_dims():
        return None
    generators = R.generators
    if not generators:
        return [] if is_isomorphic_via(R, Q, []) else None
    squares = [as_scalar(R.mul(g, g)) for g in generators]
    if any(s is None or not s for s in squares):
        return None
    relations = {
        (a, b): _relation(R, generators[a], generators[b]) for b in range(len(generators)) for a in range(b)
    }
    pools = [_image_pool(Q, g.parity(), s) for g, s in zip(generators, squares)]
    steps = 0

    def extend(chosen):
        nonlocal steps
        if len(chosen) == len(generators):
            return list(chosen) if is_isomorphic_via(R, Q, chosen) else None
        b = len(chosen)
        for candidate in pools[b]:
            steps += 1
            if steps > SEARCH_LIMIT:
                return None
            if all(_relation(Q, chosen[a], candidate) == relations[(a, b)] for a in range(b)):
                found = extend(chosen + [candidate])
                if found is not None:
                    return found
        return None

    found = extend([])
    if found is None:
        logger.debug("no isomorphism %s -> %s after %d steps", R.label, Q.label, steps)
    return found


def identify(B):
    """
    Name a basic superalgebra.

    The semisimple quotient B/J(B) is matched against the core
    representatives with the same graded dimensions by an explicit
    isomorphism search; the Grassmann rank is log2(dim B / dim B/J).

    Raises:
        UnrecognizedBasic: no representative matches
    """
    radical = jacobson_radical(B)
    semisimple = quotient(B, radical) if radical else B
    ratio, remainder = divmod(B.dim, semisimple.dim)
    if remainder or ratio & (ratio - 1):
        raise UnrecognizedBasic(f"{B.label}: dimension ratio {B.dim}/{semisimple.dim} is not a power of 2")
    rank = ratio.bit_length() - 1
    dims = semisimple.parity_dims()
    for core in _CANDIDATES[B.field].get(dims, ()):
        if find_isomorphism(core_algebra(core), semisimple) is not None:
            cls = ComplexClass(core, rank) if B.field is Field.COMPLEX else RealClass(core, rank)
            logger.debug("%s identified as %s", B.label, cls)
            return cls
    logger.warning("%s with semisimple dims %s is unrecognized", B.label, dims)
    raise UnrecognizedBasic(f"{B.label}: semisimple quotient of graded dims {dims} matches no representative")


@dataclass(eq=False)
class OracleResult:
    """Class found by the brute-force path together with the reduction behind it."""

    basic_class: object
    reduction: object

    @property
    def confirmed(self):
        return self.reduction.confirmed

    def to_dict(self):
        return {
            "class": self.basic_class.name,
            "confirmed": self.confirmed,
            "basic_dim": self.reduction.algebra.dim,
        }


def _oracle(A, functor, seed, budget, samples):
    if A.dim > MAX_ORACLE_DIM:
        raise TooLarge(f"oracle limited to dimension {MAX_ORACLE_DIM}, {A.label} has {A.dim}")
    reduction = basic_reduction(A, functor=functor, seed=seed, budget=budget, samples=samples)
    return OracleResult(identify(reduction.algebra), reduction)


def oracle_classify(p, q, r=0, functor=Functor.SIGMA, seed=DEFAULT_SEED, budget=DEFAULT_TRIALS,
                    samples=DEFAULT_SAMPLES):
    """Reduce R_{p,q,r} and identify the result; no class arithmetic is used."""
    _check_counts(p, q, r)
    if 1 << (p + q + r) > MAX_ORACLE_DIM:
        raise TooLarge(f"oracle limited to dimension {MAX_ORACLE_DIM}")
    return _oracle(clifford_real(p, q, r), functor, seed, budget, samples)


def oracle_classify_complex(p, q=0, functor=Functor.SIGMA, seed=DEFAULT_SEED, budget=DEFAULT_TRIALS,
                            samples=DEFAULT_SAMPLES):
    _check_counts(p, q)
    if 1 << (p + q) > MAX_ORACLE_DIM:
        raise TooLarge(f"oracle limited to dimension {MAX_ORACLE_DIM}")
    return _oracle(clifford_complex(p, q), functor, seed, budget, samples)


def signature_class(sig, functor=Functor.SIGMA):
    """Closed-form class of the algebra presented by a signature."""
    if sig.field is Field.COMPLEX:
        return complex_basic_class(sig.p, sig.r, functor)
    return real_basic_class(sig.p, sig.q, sig.r, functor)


