"""
Named machine checks of the structural lemmas, with explicit witnesses.

Each check returns a VerifyReport: pass when every exact re-verification
succeeded, fail on the first contradiction collected, undetermined when a
randomized step could not finish within its budget. run_checks runs a list
of checks in sorted order and returns the reports plus batch statistics.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List

from sympy.polys.domains import QQ, QQ_I

from algebra.errors import SuperMoritaError, UnknownCheck
from algebra.modules import (
    Functor,
    check_module,
    direct_sum,
    hat_module,
    hom_basis,
    module_from_idempotent,
    modules_isomorphic,
    parity_change,
    regular_module,
    suspension,
    twisted_end,
    twisted_hom,
)
from algebra.superalgebra import (
    clifford_complex,
    clifford_real,
    corner,
    grade_involution,
    hat,
    hom_space_dims,
    is_idempotent,
    is_isomorphic_via,
    quaternion_units,
    quaternions,
    skew_tensor,
    tensor_element,
)
from utils.settings import DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TRIALS
from utils.tools import Stopwatch, count_and_sort, timing_summary

from .classify import (
    ComplexClass,
    ComplexCore,
    RealClass,
    RealCore,
    complex_basic_class,
    identify,
    oracle_classify,
    oracle_classify_complex,
    real_basic_class,
    realize,
)
from .grothendieck import count_irreducible_classes, has_odd_unit, table_rows, v_complex, v_real
from .morita import (
    Equivalent,
    Undetermined,
    basic_reduction,
    gr_divisional_check,
    gr_local_check,
    primitive_decomposition,
    s_equivalent,
)

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
UNDETERMINED = "undetermined"


@dataclass
class VerifyReport:
    name: str
    status: str
    witnesses: Dict[str, str] = field(default_factory=dict)
    details: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self):
        return {
            "name": self.name,
            "status": self.status,
            "witnesses": dict(self.witnesses),
            "details": list(self.details),
            "seconds": self.seconds,
        }


class Findings:
    """Collects the outcome of every assertion made by one check."""

    def __init__(self, name):
        self.name = name
        self.failures = []
        self.open = []
        self.details = []
        self.witnesses = {}

    def expect(self, condition, message):
        if condition:
            self.details.append(f"ok: {message}")
        else:
            self.failures.append(message)
            self.details.append(f"FAILED: {message}")
            logger.debug("%s: failed %s", self.name, message)
        return condition

    def undecided(self, message):
        self.open.append(message)
        self.details.append(f"undetermined: {message}")

    def note(self, message):
        self.details.append(f"note: {message}")

    def witness(self, key, value):
        self.witnesses[key] = str(value)

    def report(self):
        status = FAIL if self.failures else UNDETERMINED if self.open else PASS
        return VerifyReport(self.name, status, self.witnesses, self.details)


def _half(x):
    return x.scaled(QQ(1, 2))


def _check_orthogonal_pair(found, A, f, g, names):
    a, b = names
    found.expect(f.parity() == 0 and g.parity() == 0, f"{a} and {b} are even")
    found.expect(is_idempotent(A, f) and is_idempotent(A, g), f"{a} and {b} are idempotent")
    found.expect(A.mul(f, g).is_zero() and A.mul(g, f).is_zero(), f"{a} and {b} are orthogonal")
    found.expect(f + g == A.unit, f"{a} + {b} = 1")


def _reduction_class(found, A, functor, seed, trials, expected, label):
    reduction = basic_reduction(A, functor=functor, seed=seed, budget=trials, samples=DEFAULT_SAMPLES)
    if not reduction.confirmed:
        found.undecided(f"basic reduction of {label} is unconfirmed")
    cls = identify(reduction.algebra)
    found.expect(cls == expected, f"{label} reduces under {functor.symbol} to {expected} (got {cls})")
    return reduction


def check_dc(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """D+ (x) D- is graded Morita equivalent to R through f+ = (1 + e+ (x) e-)/2."""
    found = Findings("dc")
    Dp, Dm = clifford_real(1, 0, 0), clifford_real(0, 1, 0)
    A = skew_tensor(Dp, Dm)
    a = tensor_element(A, Dp.basis(1), Dm.unit)
    b = tensor_element(A, Dp.unit, Dm.basis(1))
    c = A.mul(a, b)
    found.expect(A.mul(b, a) == -c, "(1 (x) e-)(e+ (x) 1) = -(e+ (x) e-)")
    found.expect(A.mul(c, c) == A.unit, "(e+ (x) e-)^2 = 1")
    f_plus, f_minus = _half(A.unit + c), _half(A.unit - c)
    _check_orthogonal_pair(found, A, f_plus, f_minus, ("f+", "f-"))
    found.witness("f+", f_plus)
    found.witness("f-", f_minus)

    x, y = _half(a - b), _half(a + b)
    try:
        Equivalent(x, y, f_plus, f_minus)
        found.expect(True, "x = (e+ (x) 1 - 1 (x) e-)/2, y = (e+ (x) 1 + 1 (x) e-)/2 give x*y = f+, y*x = f-")
    except ValueError as e:
        found.expect(False, f"stated witnesses: {e}")
    found.witness("x", x)
    found.witness("y", y)
    dims = hom_space_dims(A, f_plus, f_minus)
    found.expect(dims == (0, 1), f"f+ A f- has graded dims (0, 1) (got {dims})")

    verdict = s_equivalent(A, f_plus, f_minus, seed=seed, trials=trials)
    found.expect(isinstance(verdict, Equivalent), f"f+ and f- are sigma-equivalent ({verdict.to_dict()['verdict']})")
    B = corner(A, f_plus)
    found.expect(B.dim == 1, f"corner f+ A f+ has dim 1 (got {B.dim})")
    found.expect(identify(B) == RealClass(RealCore.TRIV), "f+ A f+ is identified as R")
    found.expect(not gr_divisional_check(A, seed=seed, budget=trials), "D+ (x) D- is not gr-divisional")
    found.expect(not gr_local_check(A, seed=seed, budget=trials), "D+ (x) D- is not gr-local")
    for functor in Functor:
        _reduction_class(found, A, functor, seed, trials, RealClass(RealCore.TRIV), "D+ (x) D-")
    return found.report()


def check_complex_dd(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """D (x) D over the Gaussian rationals splits by eps+- = (1 +- i e1e2)/2 and reduces to C."""
    found = Findings("complex-dd")
    D = clifford_complex(1, 0)
    A = skew_tensor(D, D)
    a = tensor_element(A, D.basis(1), D.unit)
    b = tensor_element(A, D.unit, D.basis(1))
    ib = A.mul(a, b).scaled(QQ_I(0, 1))
    found.expect(A.mul(ib, ib) == A.unit, "(i eps (x) eps)^2 = 1")
    e_plus, e_minus = _half(A.unit + ib), _half(A.unit - ib)
    _check_orthogonal_pair(found, A, e_plus, e_minus, ("eps+", "eps-"))
    found.witness("eps+", e_plus)
    found.witness("eps-", e_minus)
    dims = hom_space_dims(A, e_plus, e_minus)
    found.expect(dims == (0, 1), f"eps+ A eps- has graded dims (0, 1) (got {dims})")

    verdict = s_equivalent(A, e_plus, e_minus, seed=seed, trials=trials)
    if isinstance(verdict, Equivalent):
        found.expect(True, "eps+ and eps- are sigma-equivalent")
        found.witness("x", verdict.x)
        found.witness("y", verdict.y)
    elif isinstance(verdict, Undetermined):
        found.undecided(f"no witness for eps+ ~ eps- after {trials} trials")
    else:
        found.expect(False, f"eps+ and eps- are sigma-equivalent ({verdict.certificate})")
    B = corner(A, e_plus)
    found.expect(B.dim == 1, f"corner eps+ A eps+ has dim 1 (got {B.dim})")
    found.expect(identify(B) == ComplexClass(ComplexCore.TRIV), "eps+ A eps+ is identified as C")
    _reduction_class(found, A, Functor.SIGMA, seed, trials, ComplexClass(ComplexCore.TRIV), "D (x) D")
    return found.report()


def check_dd(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """D+-^k (k = 1, 2, 3) are gr-divisional; quaternion units and theta inside D+-^3."""
    found = Findings("dd")
    for n in (1, 2, 3):
        for p, q, name in ((n, 0, f"D+^{n}"), (0, n, f"D-^{n}")):
            A = clifford_real(p, q, 0)
            found.expect(gr_divisional_check(A, seed=seed, samples=DEFAULT_SAMPLES, budget=trials),
                         f"{name} is gr-divisional")

    for sign, p, q in (("+", 3, 0), ("-", 0, 3)):
        D3 = clifford_real(p, q, 0)
        one = D3.unit
        i, j, k, theta = quaternion_units(D3)
        found.expect(all(D3.mul(u, u) == -one for u in (i, j, k)), f"i{sign}^2 = j{sign}^2 = k{sign}^2 = -1")
        expected_k = k if sign == "+" else -k
        found.expect(D3.mul(i, j) == expected_k, f"i{sign} j{sign} = {'' if sign == '+' else '-'}k{sign}")
        found.expect(D3.mul(i, j) == -D3.mul(j, i), f"i{sign} and j{sign} anticommute")
        theta_square = -one if sign == "+" else one
        found.expect(D3.mul(theta, theta) == theta_square, f"theta{sign}^2 = {'-1' if sign == '+' else '1'}")
        commutes = all(D3.mul(theta, u) == D3.mul(u, theta) for u in (i, j, k))
        found.expect(commutes, f"theta{sign} commutes with i{sign}, j{sign}, k{sign}")
        found.witness(f"theta{sign}", theta)
    found.note("theta commutes with the quaternion units; the printed statement claims anticommutation")

    H = quaternions()
    hi, hj = H.generators
    found.expect(H.mul(hi, hi) == -H.unit and H.mul(hj, hj) == -H.unit, "H: i^2 = j^2 = -1")
    found.expect(H.mul(hi, hj) == -H.mul(hj, hi), "H: ij = -ji")
    found.expect(H.parity_dims() == (4, 0), "H is purely even")

    for p, q, name in ((2, 0, "D+^2"), (0, 2, "D-^2")):
        A = clifford_real(p, q, 0)
        E = A.basis(0b11)
        found.expect(A.mul(E, E) == -A.unit, f"E = e1e2 squares to -1 in {name}")
        for x, z in ((1, 1), (2, 3), (-1, 5)):
            u = A.unit.scaled(x) + E.scaled(z)
            v = A.unit.scaled(x) - E.scaled(z)
            found.expect(A.mul(u, v) == A.unit.scaled(x * x + z * z),
                         f"({x} + {z}E)({x} - {z}E) = {x * x + z * z} in {name}")
    return found.report()


def check_dddd(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """D-+ (x) H = D+-^3 on the stated generator images; D+-^4 reduce to H."""
    found = Findings("dddd")
    H = quaternions()
    for sign, other, p, q in (("-", "+", 0, 1), ("+", "-", 1, 0)):
        source = skew_tensor(clifford_real(p, q, 0), H)
        D3 = clifford_real(3, 0, 0) if other == "+" else clifford_real(0, 3, 0)
        i, j, _, theta = quaternion_units(D3)
        ok = is_isomorphic_via(source, D3, [theta, i, j])
        found.expect(ok, f"D{sign} (x) H = D{other}^3 via e{sign} -> theta{other}, i -> i{other}, j -> j{other}")
    for p, q, name in ((4, 0, "D+^4"), (0, 4, "D-^4")):
        A = clifford_real(p, q, 0)
        reduction = _reduction_class(found, A, Functor.SIGMA, seed, trials, RealClass(RealCore.QUAT), name)
        B = reduction.algebra
        found.expect(B.dim == 4 and B.parity_dims() == (4, 0), f"basic algebra of {name} is dim 4, purely even")
        found.witness(f"{name} idempotent", reduction.idempotent)
        _reduction_class(found, A, Functor.PI, seed, trials, RealClass(RealCore.QUAT), name)
    return found.report()


def check_hh(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """H (x) H is the 4x4 real matrix algebra: 4 equivalent primitive idempotents with corners R."""
    found = Findings("hh")
    H = quaternions()
    A = skew_tensor(H, H)
    decomposition = primitive_decomposition(A, seed=seed, budget=trials)
    found.expect(decomposition.check(), "idempotents are even, orthogonal and sum to 1")
    count = len(decomposition.idempotents)
    found.expect(count == 4, f"4 primitive idempotents (got {count})")
    found.expect(len(decomposition.classes) == 1, "all idempotents are sigma-equivalent")
    if decomposition.undetermined:
        found.undecided(f"{len(decomposition.undetermined)} equivalence tests undetermined")
    for n, e in enumerate(decomposition.idempotents):
        found.witness(f"e{n + 1}", e)
        found.expect(corner(A, e).dim == 1, f"e{n + 1} A e{n + 1} has dim 1")
    return found.report()


def check_d8(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """D+^8 (dim 256) reduces to a dim-1 even corner, class R."""
    found = Findings("d8")
    A = clifford_real(8, 0, 0)
    expected = real_basic_class(8, 0, 0)
    reduction = _reduction_class(found, A, Functor.SIGMA, seed, trials, RealClass(RealCore.TRIV), "D+^8")
    B = reduction.algebra
    found.expect(B.dim == 1 and B.parity_dims() == (1, 0), f"basic algebra has dim 1, even (got {B.parity_dims()})")
    found.expect(expected == RealClass(RealCore.TRIV), "class arithmetic gives R at p - q = 8")
    found.witness("idempotent", reduction.idempotent)
    return found.report()


def _module_samples():
    Dp, Dm = clifford_real(1, 0, 0), clifford_real(0, 1, 0)
    A = skew_tensor(Dp, Dm)
    c = A.mul(tensor_element(A, Dp.basis(1), Dm.unit), tensor_element(A, Dp.unit, Dm.basis(1)))
    f_plus = _half(A.unit + c)
    samples = [
        (regular_module(A), module_from_idempotent(A, f_plus)),
        (regular_module(clifford_real(1, 0, 1)), regular_module(clifford_real(1, 0, 1))),
        (regular_module(clifford_real(2, 1, 0)), regular_module(clifford_real(2, 1, 0))),
        (regular_module(quaternions()), regular_module(quaternions())),
        (regular_module(clifford_complex(1, 1)), regular_module(clifford_complex(1, 1))),
    ]
    return samples


def _small_algebras():
    """Every Clifford algebra of dim <= 8 over both fields, and H."""
    algebras = [clifford_real(p, q, n - p - q) for n in range(4) for p in range(n + 1) for q in range(n - p + 1)]
    algebras += [clifford_complex(p, n - p) for n in range(4) for p in range(n + 1)]
    return algebras + [quaternions()]


def _random_modules(seed, count=20):
    """Seeded direct sums of shifted regular modules."""
    rng = random.Random(seed)
    algebras = (clifford_real(1, 0, 0), clifford_real(0, 1, 0), clifford_real(1, 1, 0), clifford_real(2, 0, 1),
                quaternions(), clifford_complex(1, 1), clifford_complex(2, 0))
    modules = []
    for _ in range(count):
        A = rng.choice(algebras)
        M = regular_module(A)
        for _ in range(rng.randint(0, 2)):
            N = regular_module(A)
            for _ in range(rng.randint(0, 3)):
                N = rng.choice((parity_change, suspension))(N)
            M = direct_sum(M, N)
        modules.append(M)
    return modules


def _dims(maps):
    return tuple(len(m) for m in maps)


def _hom_dims_match(found, M, N):
    A = M.algebra
    Ah = hat(A)
    Mh, Nh = hat_module(M, Ah), hat_module(N, Ah)
    pi_dims = _dims(twisted_hom(M, N, Functor.PI))
    sigma_dims = _dims(twisted_hom(Mh, Nh, Functor.SIGMA))
    found.expect(pi_dims == sigma_dims,
                 f"Hom^pi({M.label}, {N.label}) over {A.label} = Hom^sigma over hat: {pi_dims} vs {sigma_dims}")
    return Mh


def check_modules(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """pi and sigma are involutions; Mod^pi A matches Mod^sigma hat(A) on Hom dimensions."""
    found = Findings("modules")
    for M, N in _module_samples():
        label = M.algebra.label
        found.expect(parity_change(parity_change(M)) == M, f"pi^2 = id on {M.label}")
        found.expect(suspension(suspension(M)) == M, f"sigma^2 = id on {M.label}")
        found.expect(all(check_module(X) for X in (M, parity_change(M), suspension(M))),
                     f"module axioms hold for {M.label}, pi and sigma of it")
        Mh = _hom_dims_match(found, M, N)
        found.expect(check_module(Mh), f"hat module of {M.label} is a module over hat({label})")
        sums = _dims((hom_basis(direct_sum(M, N), N, 0), hom_basis(M, N, 0), hom_basis(N, N, 0)))
        found.expect(sums[0] == sums[1] + sums[2], f"Hom(M + N, N) is additive on {label}")
    for k, M in enumerate(_random_modules(seed)):
        pi, sigma = parity_change(M), suspension(M)
        found.expect(parity_change(pi) == M and suspension(sigma) == M,
                     f"random module {k} ({M.label}): pi^2 = sigma^2 = id")
        found.expect(check_module(pi) and check_module(sigma), f"random module {k}: pi and sigma of it are modules")
    for A in _small_algebras():
        M = regular_module(A)
        _hom_dims_match(found, M, suspension(M))
    for A in (clifford_real(1, 0, 0), clifford_real(1, 1, 0), quaternions(), clifford_real(0, 1, 1)):
        M = regular_module(A)
        for functor in Functor:
            E = twisted_end(M, functor)
            found.expect(E.dim == A.dim and E.parity_dims() == A.parity_dims(),
                         f"End^{functor.symbol}({A.label}) has the graded dims of {A.label}")
    found.expect(modules_isomorphic(regular_module(clifford_real(1, 0, 0)),
                                    suspension(regular_module(clifford_real(1, 0, 0))), seed=seed),
                 "D+ = sigma(D+) as graded modules (odd unit)")
    found.expect(not modules_isomorphic(regular_module(quaternions()), suspension(regular_module(quaternions())),
                                        seed=seed),
                 "H and sigma(H) are not isomorphic")
    return found.report()


def _tensor_factors():
    """Real Clifford factors on one or two generators, and H."""
    factors = [clifford_real(p, q, n - p - q) for n in range(1, 3) for p in range(n + 1) for q in range(n - p + 1)]
    return factors + [quaternions()]


def check_tensor_law(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """Basic reduction is compatible with the skew tensor product on every pair of dim <= 8."""
    found = Findings("tensor-law")
    reduced = {}

    def reduce(A):
        if A.label not in reduced:
            reduced[A.label] = basic_reduction(A, seed=seed, budget=trials, samples=DEFAULT_SAMPLES)
        return reduced[A.label]

    factors = _tensor_factors()
    for A in factors:
        for A2 in factors:
            if A.dim * A2.dim > 8:
                continue
            name = f"{A.label} (x) {A2.label}"
            whole = basic_reduction(skew_tensor(A, A2), seed=seed, budget=trials, samples=DEFAULT_SAMPLES)
            first, second = reduce(A), reduce(A2)
            B, B2 = first.algebra, second.algebra
            parts = basic_reduction(skew_tensor(B, B2), seed=seed, budget=trials, samples=DEFAULT_SAMPLES)
            if not (whole.confirmed and parts.confirmed and first.confirmed and second.confirmed):
                found.undecided(f"reduction of {name} unconfirmed")
            left, right = identify(whole.algebra), identify(parts.algebra)
            found.expect(left == right, f"{name}: basic(A (x) A') = basic(B (x) B') = {left}")
            composed = identify(B).core.compose(identify(B2).core)
            found.expect(left.core == composed, f"{name}: core indices add mod 8")
    return found.report()


def _hat_swap_images(p, q, r):
    """Images of the generators of R(q,p,r) in hat(R(p,q,r))."""
    target = hat(clifford_real(p, q, r))
    gens = target.generators
    return target, gens[p:p + q] + gens[:p] + gens[p + q:]


def _complex_hat_images(p, q):
    """Images of the generators of C(p,q) in hat(C(p,q)): e -> i*e on the non-null ones."""
    target = hat(clifford_complex(p, q))
    gens = target.generators
    return target, [g.scaled(QQ_I(0, 1)) for g in gens[:p]] + gens[p:]


def check_hat(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """hat is an involution, hat(R(p,q,r)) = R(q,p,r), hat(C(p,q)) = C(p,q), alpha^2 = id."""
    found = Findings("hat")
    for n in range(5):
        for p in range(n + 1):
            for q in range(n - p + 1):
                r = n - p - q
                A = clifford_real(p, q, r)
                found.expect(hat(hat(A)).structure_constants() == A.structure_constants(),
                             f"hat(hat({A.label})) = {A.label}")
                target, images = _hat_swap_images(p, q, r)
                found.expect(is_isomorphic_via(clifford_real(q, p, r), target, images),
                             f"hat({A.label}) = R({q},{p},{r})")
                x = A.zero()
                for k in range(A.dim):
                    x = x + A.basis(k).scaled(k + 1)
                found.expect(grade_involution(A, grade_involution(A, x)) == x, f"alpha^2 = id on {A.label}")
    for p, q in ((1, 0), (2, 0), (1, 1), (2, 1)):
        A = clifford_complex(p, q)
        target, images = _complex_hat_images(p, q)
        found.expect(is_isomorphic_via(A, target, images), f"hat({A.label}) = {A.label} via e -> i*e")
    H = quaternions()
    found.expect(hat(H).structure_constants() == H.structure_constants(), "hat(H) = H (purely even)")
    return found.report()


class _SigmaOracle:
    """Memoised sigma oracle; pi at A is read off sigma at hat(A)."""

    def __init__(self, found, seed, trials):
        self.found = found
        self.seed = seed
        self.trials = trials
        self.results = {}

    def real(self, p, q, r):
        key = ("real", p, q, r)
        if key not in self.results:
            self.results[key] = oracle_classify(p, q, r, seed=self.seed, budget=self.trials)
        return self.results[key]

    def complex(self, p, q):
        key = ("complex", p, q)
        if key not in self.results:
            self.results[key] = oracle_classify_complex(p, q, seed=self.seed, budget=self.trials)
        return self.results[key]

    def compare(self, label, functor, result, expected):
        if not result.confirmed:
            self.found.undecided(f"{label} {functor.symbol}: reduction unconfirmed")
        self.found.expect(result.basic_class == expected,
                          f"{label} {functor.symbol}: oracle {result.basic_class} = formula {expected}")


def check_oracle(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """
    Brute-force reduction agrees with class arithmetic on every algebra of dim <= 64.

    A pi reduction of A is a sigma reduction of hat(A); hat(R(p,q,r)) is
    matched to R(q,p,r) and hat(C(p,q)) to C(p,q) by an exact generator
    isomorphism, so each sigma reduction serves both functors.
    """
    found = Findings("oracle")
    oracle = _SigmaOracle(found, seed, trials)
    for n in range(7):
        for p in range(n + 1):
            for q in range(n - p + 1):
                r = n - p - q
                label = f"R({p},{q},{r})"
                oracle.compare(label, Functor.SIGMA, oracle.real(p, q, r), real_basic_class(p, q, r))
                target, images = _hat_swap_images(p, q, r)
                found.expect(is_isomorphic_via(clifford_real(q, p, r), target, images),
                             f"hat({label}) = R({q},{p},{r})")
                oracle.compare(label, Functor.PI, oracle.real(q, p, r), real_basic_class(p, q, r, Functor.PI))
    for n in range(5):
        for p in range(n + 1):
            q = n - p
            label = f"C({p},{q})"
            result = oracle.complex(p, q)
            oracle.compare(label, Functor.SIGMA, result, complex_basic_class(p, q))
            target, images = _complex_hat_images(p, q)
            found.expect(is_isomorphic_via(clifford_complex(p, q), target, images), f"hat({label}) = {label}")
            oracle.compare(label, Functor.PI, result, complex_basic_class(p, q, Functor.PI))
    return found.report()


_LARGE_SIGNATURES = ((0, 8, 0), (4, 4, 0), (6, 1, 1), (3, 4, 1))


def check_oracle_256(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """Spot set of dim-256 signatures under sigma, with one pi reduction run directly."""
    found = Findings("oracle-256")
    for p, q, r in _LARGE_SIGNATURES:
        result = oracle_classify(p, q, r, seed=seed, budget=trials)
        if not result.confirmed:
            found.undecided(f"R({p},{q},{r}): reduction unconfirmed")
        expected = real_basic_class(p, q, r)
        found.expect(result.basic_class == expected,
                     f"R({p},{q},{r}): oracle {result.basic_class} = formula {expected}")
        found.witness(f"R({p},{q},{r})", result.reduction.idempotent)
    result = oracle_classify(1, 7, 0, functor=Functor.PI, seed=seed, budget=trials)
    expected = real_basic_class(1, 7, 0, Functor.PI)
    if not result.confirmed:
        found.undecided("R(1,7,0) π: reduction unconfirmed")
    found.expect(result.basic_class == expected, f"R(1,7,0) π: oracle {result.basic_class} = formula {expected}")
    return found.report()


def check_v_oracle(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """Module-level count of irreducible graded modules against v."""
    found = Findings("v-oracle")
    for n in range(6):
        for p in range(n + 1):
            q = n - p
            cls = real_basic_class(p, q, 0)
            count = count_irreducible_classes(cls, seed=seed)
            found.expect(count == v_real(p, q), f"R({p},{q}): {count} irreducibles, v = {v_real(p, q)}")
            even = realize(cls).parity_dims()[1] == 0
            found.expect(even == (count == 2), f"R({p},{q}): v = 2 exactly when {cls} is purely even")
            found.expect(has_odd_unit(cls, seed=seed) == (count == 1), f"R({p},{q}): odd unit exactly when v = 1")
    for p in range(6):
        cls = complex_basic_class(p, 0)
        count = count_irreducible_classes(cls, seed=seed)
        found.expect(count == v_complex(p), f"C({p},0): {count} irreducibles, v = {v_complex(p)}")
    return found.report()


def check_tables(seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """Invariants of the emitted tables."""
    found = Findings("tables")
    real_k = table_rows("real-k")
    found.expect([row["v"] for row in real_k] == [2, 1, 1, 1, 2, 1, 1, 1], "real v row is 2 1 1 1 2 1 1 1")
    found.expect(all(row["k_rank"] == row["v"] for row in real_k), "rank K = v on every real column")
    basic = table_rows("real-basic")
    names = [row["basic_class"] for row in basic]
    found.expect(names == ["R", "D+", "D+^2", "D+^3", "H", "D-^3", "D-^2", "D-"], f"real classes {names}")
    flagged = [row["residue"] for row in basic if row["paper_discrepancy_flag"]]
    found.expect(flagged == [5, 7], f"printed table differs from the computed classes at {flagged}")
    complex_basic = table_rows("complex-basic")
    found.expect([row["basic_class"] for row in complex_basic] == ["C", "D"], "complex classes C, D")
    found.expect(not any(row["paper_discrepancy_flag"] for row in complex_basic), "complex classes match the table")
    complex_k = table_rows("complex-k")
    found.expect([row["k_rank"] for row in complex_k] == [2, 1], "complex K ranks are 2, 1")
    found.expect(all(row["paper_discrepancy_flag"] for row in complex_k),
                 "the prose count of complex irreducibles is opposite to the table")
    periodic = all(v_real(p, q) == v_real((p - q) % 4, 0) for p in range(9) for q in range(9))
    found.expect(periodic, "v depends only on p - q mod 4 for 0 <= p, q <= 8")
    return found.report()


CHECKS = {
    "complex-dd": check_complex_dd,
    "d8": check_d8,
    "dc": check_dc,
    "dd": check_dd,
    "dddd": check_dddd,
    "hat": check_hat,
    "hh": check_hh,
    "modules": check_modules,
    "oracle": check_oracle,
    "oracle-256": check_oracle_256,
    "tables": check_tables,
    "tensor-law": check_tensor_law,
    "v-oracle": check_v_oracle,
}


def resolve_checks(names):
    """Expand "all" and validate names; the result is sorted and free of duplicates."""
    selected = set()
    for name in names:
        if name == "all":
            selected.update(CHECKS)
        elif name in CHECKS:
            selected.add(name)
        else:
            raise UnknownCheck(f"unknown check '{name}' (expected all or one of {', '.join(sorted(CHECKS))})")
    return sorted(selected)


def run_check(name, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    if name not in CHECKS:
        raise UnknownCheck(f"unknown check '{name}'")
    with Stopwatch() as watch:
        try:
            report = CHECKS[name](seed=seed, trials=trials)
        except SuperMoritaError as e:
            logger.warning("check %s raised %s", name, e)
            report = VerifyReport(name, FAIL, details=[f"error: {e}"])
    report.seconds = watch.seconds
    logger.info("check %s: %s in %.2f s", name, report.status, report.seconds)
    return report


def run_checks(names, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """
    Run named checks in sorted order.

    Args:
        names: Check names, "all" for every check
        seed: Seed of every randomized step
        trials: Trial budget per corner and per equivalence test

    Returns:
        (reports, stats) where stats holds total_time, avg_time_per_check,
        total_checks, passed, failed, undetermined and a timing summary
    """
    selected = resolve_checks(names)
    reports = [run_check(name, seed=seed, trials=trials) for name in selected]
    total_time = sum(r.seconds for r in reports)
    counts = count_and_sort([r.status for r in reports])
    stats = {
        "total_time": total_time,
        "avg_time_per_check": total_time / len(reports) if reports else 0,
        "total_checks": len(reports),
        "passed": counts.get(PASS, 0),
        "failed": counts.get(FAIL, 0),
        "undetermined": counts.get(UNDETERMINED, 0),
        "timing": timing_summary([r.seconds for r in reports]),
    }
    return reports, stats
