"""
Idempotent toolkit for graded Morita reduction.

Equivalence of even idempotents with explicit witnesses, splitting of the
unit into primitive orthogonal idempotents, the graded Jacobson radical,
gr-divisional / gr-local certification and reduction of an algebra to a
graded basic representative.

Every randomized search is driven by a seeded random.Random and never raises
on failure: it answers Undetermined, or flags its result as unconfirmed.
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from algebra.linalg import (
    Matrix,
    NoSolution,
    Solution,
    SubspaceBasis,
    evaluate_polynomial,
    factor_polynomial,
    minimal_polynomial,
    nullspace_vectors,
    polynomial_coefficients,
    solve,
)
from algebra.modules import Functor
from algebra.scalars import rational_sqrt, small_scalar
from algebra.superalgebra import (
    as_scalar,
    Element,
    corner,
    hat,
    hom_space_basis,
    is_idempotent,
    quotient,
    require_even_idempotent,
)
from utils.settings import DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TRIALS

logger = logging.getLogger(__name__)

EXACT = "exact"
SAMPLED = "sampled"
UNCONFIRMED = "unconfirmed"


def as_functor(functor):
    """Accept a Functor or its name ("sigma" / "pi")."""
    return functor if isinstance(functor, Functor) else Functor(str(functor).lower())


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True, eq=False)
class Equivalent:
    """Witnesses x in fAg, y in gAf with x*y = f and y*x = g, checked on construction."""

    x: Element
    y: Element
    f: Element
    g: Element

    def __post_init__(self):
        A = self.f.algebra
        if self.x.is_zero() or not self.x.is_homogeneous():
            raise ValueError(f"witness x = {self.x} is not a nonzero homogeneous element")
        if A.mul(A.mul(self.f, self.x), self.g) != self.x or A.mul(A.mul(self.g, self.y), self.f) != self.y:
            raise ValueError("witnesses do not lie in fAg and gAf")
        if A.mul(self.x, self.y) != self.f or A.mul(self.y, self.x) != self.g:
            raise ValueError("witnesses do not satisfy x*y = f and y*x = g")

    @property
    def parity(self):
        return self.x.parity()

    def to_dict(self):
        return {"verdict": "equivalent", "parity": self.parity, "x": str(self.x), "y": str(self.y)}


@dataclass(frozen=True)
class NotEquivalent:
    certificate: str

    def to_dict(self):
        return {"verdict": "not-equivalent", "certificate": self.certificate}


@dataclass(frozen=True)
class Undetermined:
    trials: int

    def to_dict(self):
        return {"verdict": "undetermined", "trials": self.trials}


def _combination(A, elements, rng, bound=2):
    out = A.zero()
    for x in elements:
        c = small_scalar(rng, A.field, bound)
        if c:
            out = out + x.scaled(c)
    return out


def _try_witness(A, f, g, x, ys):
    """Solve x*y = f for y in span(ys); accept when also y*x = g."""
    domain = A.field.domain
    products = [A.mul(x, y) for y in ys]
    support = sorted(set(f.coeffs).union(*(p.coeffs for p in products)))
    rows = [[p.coeffs.get(k, domain.zero) for p in products] for k in support]
    result = solve(Matrix.from_rows(rows, A.field), [f.coeffs.get(k, domain.zero) for k in support])
    if isinstance(result, NoSolution):
        return None
    coeffs = result.vector if isinstance(result, Solution) else result.particular
    y = A.zero()
    for c, basis_element in zip(coeffs, ys):
        y = y + basis_element.scaled(c)
    if A.mul(y, x) != g:
        return None
    return Equivalent(x, y, f, g)


def _search_equivalence(A, f, g, seed, trials):
    if f == g:
        return Equivalent(f, f, f, g)
    ff = _dims(hom_space_basis(A, f, f))
    gg = _dims(hom_space_basis(A, g, g))
    if ff != gg:
        return NotEquivalent(f"graded dims of fAf {ff} and gAg {gg} differ")
    fg = hom_space_basis(A, f, g)
    gf = hom_space_basis(A, g, f)
    for name, space in (("fAg", fg), ("gAf", gf)):
        dims = _dims(space)
        if dims == (0, 0):
            return NotEquivalent(f"{name} = 0")
        if dims not in (ff, ff[::-1]):
            return NotEquivalent(f"graded dims of {name} {dims} match neither {ff} nor its shift")
    pools = [(xs, ys) for xs, ys in zip(fg, gf) if xs and ys]
    if not pools:
        return NotEquivalent("no parity has both fAg and gAf nonzero")

    spent = 0
    for xs, ys in pools:
        for x in xs:
            if spent >= trials:
                return Undetermined(spent)
            spent += 1
            verdict = _try_witness(A, f, g, x, ys)
            if verdict is not None:
                logger.debug("witness found on basis element %s after %d trials", x, spent)
                return verdict

    rng = random.Random(seed)
    while spent < trials:
        xs, ys = pools[spent % len(pools)]
        spent += 1
        x = _combination(A, xs, rng)
        if x.is_zero():
            continue
        verdict = _try_witness(A, f, g, x, ys)
        if verdict is not None:
            logger.debug("witness found after %d trials", spent)
            return verdict
    logger.warning("equivalence of %s and %s undetermined after %d trials", f, g, spent)
    return Undetermined(spent)


def _dims(space):
    even, odd = space
    return len(even), len(odd)


def s_equivalent(A, f, g, functor=Functor.SIGMA, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """
    Decide whether two even idempotents are S-equivalent.

    For sigma the witnesses x in fAg, y in gAf of either parity multiply in A.
    For pi they are searched in hat(A), where Mod^pi A is Mod^sigma hat(A);
    the returned witnesses are then elements of hat(A).

    Args:
        A: SuperAlgebra
        f: Even idempotent
        g: Even idempotent
        functor: Functor.SIGMA or Functor.PI (names accepted)
        seed: Seed of the random search
        trials: Number of candidate x tried before answering Undetermined

    Returns:
        Equivalent, NotEquivalent (with an invariant certificate) or Undetermined
    """
    functor = as_functor(functor)
    require_even_idempotent(A, f, "f")
    require_even_idempotent(A, g, "g")
    if functor is Functor.PI:
        search = hat(A)
        return _search_equivalence(search, f.transfer(search), g.transfer(search), seed, trials)
    return _search_equivalence(A, f, g, seed, trials)


# ---------------------------------------------------------------------------
# radical and local structure


def jacobson_radical(A) -> List[Element]:
    """
    Graded basis of the Jacobson radical by Dickson's criterion.

    J(A) = {x : trace(L_{x b}) = 0 for every basis element b}. Odd elements
    have traceless left multiplication, so the trace form is block diagonal
    in the grading and each block is solved separately.
    """
    if A.is_monomial:
        # b_i b_j has a unit component only for i = j
        return [A.basis(m) for m in range(A.dim) if A.law.sign(m, m) == 0]

    domain = A.field.domain
    traces = []
    for k in range(A.dim):
        total = domain.zero
        for m in range(A.dim):
            total += A.table[k][m].get(m, domain.zero)
        traces.append(total)

    radical = []
    for parity in (0, 1):
        indices = A.basis_indices(parity)
        if not indices:
            continue
        dod = {}
        for row, j in enumerate(indices):
            entries = {}
            for col, i in enumerate(indices):
                value = domain.zero
                for k, c in A.table[i][j].items():
                    value += c * traces[k]
                if value:
                    entries[col] = value
            if entries:
                dod[row] = entries
        system = DomainMatrix.from_dod(dod, (len(indices), len(indices)), domain)
        for vector in nullspace_vectors(system):
            radical.append(Element(A, {indices[col]: v for col, v in vector.items()}))
    return radical


def is_two_sided_ideal(A, elements):
    """A*J*A inside span(J), tested on basis products."""
    if not elements:
        return True
    space, _ = SubspaceBasis.from_spanning([x.coeffs for x in elements], A.dim, A.field.domain)
    for x in elements:
        for k in range(A.dim):
            b = A.basis(k)
            if not space.contains(A.mul(b, x).coeffs) or not space.contains(A.mul(x, b).coeffs):
                return False
    return True


def _random_homogeneous(A, rng):
    parities = [p for p in (0, 1) if A.basis_indices(p)]
    parity = rng.choice(parities)
    return _combination(A, [A.basis(k) for k in A.basis_indices(parity)], rng)


def _constant_term(A, poly):
    return polynomial_coefficients(poly, A.field.domain)[-1]


def gr_divisional_check(A, seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES, budget=DEFAULT_TRIALS):
    """
    Probabilistic certificate that every nonzero homogeneous element is invertible.

    A nonzero radical or a split of the unit is a definitive negative; the
    sampled invertibility test can only accept.
    """
    if jacobson_radical(A):
        logger.debug("%s has a nonzero radical", A.label)
        return False
    decomposition = primitive_decomposition(A, seed=seed, budget=budget, group=False)
    if len(decomposition.idempotents) > 1:
        logger.debug("%s splits into %d idempotents", A.label, len(decomposition.idempotents))
        return False
    rng = random.Random(seed)
    for _ in range(samples):
        x = _random_homogeneous(A, rng)
        if x.is_zero():
            continue
        if not _constant_term(A, minimal_polynomial(A, x)):
            logger.debug("zero divisor %s in %s", x, A.label)
            return False
    return True


def gr_local_check(A, seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES, budget=DEFAULT_TRIALS):
    """Sampled homogeneous elements are invertible or nilpotent, and A/J is gr-divisional."""
    rng = random.Random(seed)
    for _ in range(samples):
        x = _random_homogeneous(A, rng)
        if x.is_zero():
            continue
        coeffs = polynomial_coefficients(minimal_polynomial(A, x), A.field.domain)
        nilpotent = not any(coeffs[1:])
        if not nilpotent and not coeffs[-1]:
            logger.debug("%s is neither invertible nor nilpotent in %s", x, A.label)
            return False
    radical = jacobson_radical(A)
    semisimple = quotient(A, radical) if radical else A
    return gr_divisional_check(semisimple, seed=seed, samples=samples, budget=budget)


def find_odd_involution(A, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS) -> Optional[Element]:
    """
    Search an odd u with u*u = +1 or -1.

    Such a u gives M = S(M) for every graded module M. The search runs over
    odd basis elements, their signed pairwise sums and random combinations.
    """
    odd = [A.basis(k) for k in A.basis_indices(1)]
    if not odd:
        return None
    domain = A.field.domain

    def candidates():
        yield from odd
        for a, b in combinations(odd, 2):
            yield a + b
            yield a - b
        rng = random.Random(seed)
        while True:
            yield _combination(A, odd, rng)

    for spent, u in enumerate(candidates()):
        if spent >= trials:
            break
        if u.is_zero():
            continue
        ratio = as_scalar(A.mul(u, u))
        if not ratio:
            continue
        for target in (ratio, -ratio):
            root = rational_sqrt(target, A.field)
            if root:
                return u.scaled(domain.one / root)
    return None


# ---------------------------------------------------------------------------
# primitive decomposition


@dataclass(eq=False)
class IdempotentDecomposition:
    """
    Complete set of orthogonal even idempotents with their equivalence classes.

    classes partitions the indices of idempotents; the first member of each
    class is its representative and class_witnesses maps (representative,
    member) to the Equivalent verdict joining them. primitivity holds one
    flag per idempotent: exact, sampled or unconfirmed.
    """

    algebra: object
    idempotents: Tuple[Element, ...]
    classes: Tuple[Tuple[int, ...], ...]
    class_witnesses: Dict[Tuple[int, int], Equivalent]
    primitivity: Tuple[str, ...]
    functor: Functor = Functor.SIGMA
    undetermined: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def representatives(self):
        return [self.idempotents[members[0]] for members in self.classes]

    @property
    def confirmed(self):
        return UNCONFIRMED not in self.primitivity and not self.undetermined

    def check(self):
        """Orthogonality, evenness and completeness, exactly."""
        A = self.algebra
        total = A.zero()
        for i, e in enumerate(self.idempotents):
            if e.is_zero() or e.parity() != 0 or not is_idempotent(A, e):
                return False
            for j, other in enumerate(self.idempotents):
                if i != j and not A.mul(e, other).is_zero():
                    return False
            total = total + e
        return total == A.unit

    def to_dict(self):
        return {
            "idempotents": [str(e) for e in self.idempotents],
            "classes": [list(members) for members in self.classes],
            "primitivity": list(self.primitivity),
            "functor": self.functor.value,
            "witnesses": [
                {"pair": list(pair), **verdict.to_dict()} for pair, verdict in sorted(self.class_witnesses.items())
            ],
        }


def _split_candidates(A, e, even, odd, rng):
    yield from even
    for x in odd:
        yield A.mul(x, x)
    for a, b in combinations(even, 2):
        yield a + b
        yield a - b
    while True:
        u = _combination(A, even, rng)
        if odd and rng.random() < 0.5:
            x = _combination(A, odd, rng)
            u = u + A.mul(x, x)
        yield u


def _split_with(A, e, u):
    """Idempotents e1 + e2 = e from the primary decomposition of u's minimal polynomial."""
    if u.is_zero():
        return None
    poly = minimal_polynomial(A, u, unit=e)
    if poly.degree() <= 1:
        return None
    _, factors = factor_polynomial(poly)
    if len(factors) < 2:
        return None
    base, multiplicity = factors[0]
    primary = base ** multiplicity
    rest = poly.quo(primary)
    _, t_rest, h = primary.gcdex(rest)
    if h.degree() != 0:
        return None
    e1 = evaluate_polynomial(A, (t_rest * rest).rem(poly), u, unit=e)
    e2 = e - e1
    if e1.is_zero() or e2.is_zero() or e1.parity() != 0 or not is_idempotent(A, e1):
        return None
    return [e1, e2]


def _split_idempotent(A, e, rng, budget):
    even, odd = hom_space_basis(A, e, e)
    if len(even) == 1:
        return None, EXACT
    if budget <= 0:
        return None, UNCONFIRMED
    for spent, u in enumerate(_split_candidates(A, e, even, odd, rng)):
        if spent >= budget:
            break
        pieces = _split_with(A, e, u)
        if pieces is not None:
            logger.debug("split %s using %s after %d trials", e, u, spent + 1)
            return pieces, None
    return None, SAMPLED


def primitive_decomposition(A, seed=DEFAULT_SEED, budget=DEFAULT_TRIALS, functor=Functor.SIGMA, group=True):
    """
    Split the unit into primitive orthogonal even idempotents.

    Each pending idempotent e is tested for a split: candidate even elements u
    of eAe (basis elements, squares of odd ones, pairwise sums, then random
    combinations) are tried until the minimal polynomial of u relative to e
    has two coprime primary factors, whose Bezout combination evaluated at u
    gives e = e1 + e2. Leaves are then grouped by S-equivalence.

    Args:
        A: SuperAlgebra
        seed: Seed for the random candidates
        budget: Candidates per idempotent, also the trial count of each equivalence test
        functor: Functor used to group the leaves
        group: When False, every leaf is its own class

    Returns:
        IdempotentDecomposition
    """
    functor = as_functor(functor)
    rng = random.Random(seed)
    pending = [A.unit]
    leaves, flags = [], []
    while pending:
        e = pending.pop()
        pieces, flag = _split_idempotent(A, e, rng, budget)
        if pieces is None:
            leaves.append(e)
            flags.append(flag)
            if flag != EXACT:
                level = logging.WARNING if flag == UNCONFIRMED else logging.DEBUG
                logger.log(level, "primitivity of %s is %s", e, flag)
        else:
            pending.extend(reversed(pieces))

    classes, witnesses, undetermined = [], {}, []
    if group and len(leaves) > 1:
        search = hat(A) if functor is Functor.PI else A
        for i, leaf in enumerate(leaves):
            placed = False
            for members in classes:
                rep = members[0]
                verdict = _search_equivalence(
                    search, leaves[rep].transfer(search), leaf.transfer(search), seed, budget
                )
                if isinstance(verdict, Equivalent):
                    members.append(i)
                    witnesses[(rep, i)] = verdict
                    placed = True
                    break
                if isinstance(verdict, Undetermined):
                    undetermined.append((rep, i))
            if not placed:
                classes.append([i])
    else:
        classes = [[i] for i in range(len(leaves))]

    logger.debug("%s: %d idempotents in %d classes", A.label, len(leaves), len(classes))
    return IdempotentDecomposition(
        algebra=A,
        idempotents=tuple(leaves),
        classes=tuple(tuple(members) for members in classes),
        class_witnesses=witnesses,
        primitivity=tuple(flags),
        functor=functor,
        undetermined=tuple(undetermined),
    )


# ---------------------------------------------------------------------------
# basic reduction


@dataclass(eq=False)
class BasicReduction:
    """
    A graded basic representative of an algebra.

    For sigma the algebra is the corner eAe, for pi it is hat(eAe); e sums one
    idempotent per equivalence class. confirmed is False when primitivity or
    an equivalence stayed undecided, or the basic certificate failed.
    """

    algebra: object
    idempotent: Element
    decomposition: IdempotentDecomposition
    confirmed: bool

    def to_dict(self):
        return {
            "basic": self.algebra.to_dict(),
            "idempotent": str(self.idempotent),
            "confirmed": self.confirmed,
            "decomposition": self.decomposition.to_dict(),
        }


def check_basic(B, seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES, budget=DEFAULT_TRIALS):
    """
    B/J(B) is a direct sum of gr-divisional superalgebras: its primitive
    idempotents are pairwise inequivalent with gr-divisional corners.
    """
    radical = jacobson_radical(B)
    semisimple = quotient(B, radical) if radical else B
    decomposition = primitive_decomposition(semisimple, seed=seed, budget=budget)
    if len(decomposition.classes) != len(decomposition.idempotents):
        return False
    if len(decomposition.idempotents) == 1:
        return gr_divisional_check(semisimple, seed=seed, samples=samples, budget=budget)
    return all(
        gr_divisional_check(corner(semisimple, e), seed=seed, samples=samples, budget=budget)
        for e in decomposition.idempotents
    )


def basic_reduction(A, functor=Functor.SIGMA, seed=DEFAULT_SEED, budget=DEFAULT_TRIALS, samples=DEFAULT_SAMPLES):
    """
    Reduce A to an S-graded basic superalgebra.

    Returns:
        BasicReduction; a gr-divisional A is its own representative
    """
    functor = as_functor(functor)
    decomposition = primitive_decomposition(A, seed=seed, budget=budget, functor=functor)
    representatives = decomposition.representatives()
    e = A.zero()
    for r in representatives:
        e = e + r
    if len(decomposition.idempotents) == 1:
        B = A
    else:
        B = corner(A, e, label=f"corner({A.label})")
    if functor is Functor.PI:
        B = hat(B)
    confirmed = decomposition.confirmed and check_basic(B, seed=seed, samples=samples, budget=budget)
    if not confirmed:
        logger.warning("basic reduction of %s is unconfirmed", A.label)
    return BasicReduction(B, e, decomposition, confirmed)
