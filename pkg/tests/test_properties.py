import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.blades import Blade, BladeLaw, Signature, blade_mul
from algebra.modules import parity_change, regular_module, suspension
from algebra.scalars import Field, Scalar, small_scalar
from algebra.superalgebra import (
    clifford_complex,
    clifford_real,
    from_signature,
    grade_involution,
    hat,
    is_isomorphic_via,
    quaternions,
    skew_tensor,
    supertwist_check,
)
from utils.expr import evaluate

PROPERTY = settings(max_examples=40, deadline=None, derandomize=True)

rationals = st.tuples(st.integers(-12, 12), st.integers(1, 6))


@st.composite
def scalars(draw, field=Field.REAL):
    if field is Field.REAL:
        return Scalar.of(field, draw(rationals))
    return Scalar.of(field, draw(rationals), draw(rationals))


@st.composite
def signatures(draw, max_n=3):
    field = draw(st.sampled_from(list(Field)))
    if field is Field.COMPLEX:
        p = draw(st.integers(0, max_n))
        return Signature.complex(p, draw(st.integers(0, max_n - p)))
    p = draw(st.integers(0, max_n))
    q = draw(st.integers(0, max_n - p))
    return Signature.real(p, q, draw(st.integers(0, max_n - p - q)))


@st.composite
def elements(draw, sig):
    A = from_signature(sig)
    indices = draw(st.lists(st.integers(0, A.dim - 1), max_size=A.dim, unique=True))
    x = A.zero()
    for k in indices:
        x = x + A.basis(k).scaled(draw(scalars(sig.field)))
    return x


@st.composite
def element_triples(draw):
    sig = draw(signatures())
    return sig, draw(elements(sig)), draw(elements(sig)), draw(elements(sig))


@PROPERTY
@given(st.sampled_from(list(Field)).flatmap(lambda f: st.tuples(scalars(f), scalars(f), scalars(f))))
def test_scalar_field_axioms(triple):
    a, b, c = triple
    zero, one = Scalar.zero(a.field), Scalar.one(a.field)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == zero
    assert a + zero == a and a * one == a
    if not a.is_zero():
        assert a / a == one
        assert (b / a) * a == b


@PROPERTY
@given(element_triples())
def test_product_is_associative_and_distributive(triple):
    sig, x, y, z = triple
    A = x.algebra
    assert A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z))
    assert A.mul(x, y + z) == A.mul(x, y) + A.mul(x, z)
    assert A.mul(A.unit, x) == x == A.mul(x, A.unit)


@PROPERTY
@given(signatures(max_n=4), st.data())
def test_parity_is_additive_on_basis_products(sig, data):
    A = from_signature(sig)
    i = data.draw(st.integers(0, A.dim - 1))
    j = data.draw(st.integers(0, A.dim - 1))
    product = A.mul(A.basis(i), A.basis(j))
    if not product.is_zero():
        assert product.parity() == (A.parity[i] + A.parity[j]) % 2


@PROPERTY
@given(element_triples())
def test_grade_involution_is_an_automorphism(triple):
    sig, x, y, _ = triple
    A = x.algebra
    alpha = lambda u: grade_involution(A, u)  # noqa: E731
    assert alpha(A.mul(x, y)) == A.mul(alpha(x), alpha(y))
    assert alpha(alpha(x)) == x


@PROPERTY
@given(element_triples())
def test_printed_elements_evaluate_back(triple):
    sig, x, y, _ = triple
    assert evaluate(str(x), sig) == x
    assert evaluate(f"({x})*({y}) - ({y})", sig) == x.algebra.mul(x, y) - y


@PROPERTY
@given(signatures())
def test_parity_change_and_suspension_are_involutions(sig):
    M = regular_module(from_signature(sig))
    assert parity_change(parity_change(M)) == M
    assert suspension(suspension(M)) == M
    assert parity_change(M).parity_dims() == suspension(M).parity_dims()


@PROPERTY
@given(signatures())
def test_hat_is_an_involution(sig):
    A = from_signature(sig)
    assert hat(hat(A)).structure_constants() == A.structure_constants()


def real_signatures(max_n):
    return [(p, q, n - p - q) for n in range(max_n + 1) for p in range(n + 1) for q in range(n - p + 1)]


def assert_law_associative(law):
    dim = 1 << law.n
    sign = [[law.sign(a, b) for b in range(dim)] for a in range(dim)]
    for a in range(dim):
        row_a = sign[a]
        for b in range(dim):
            left = row_a[b]
            row_ab, row_b = sign[a ^ b], sign[b]
            for c in range(dim):
                assert left * row_ab[c] == row_b[c] * row_a[b ^ c], (a, b, c)


@pytest.mark.parametrize("p, q, r", real_signatures(6))
def test_sign_law_is_associative_on_all_basis_triples(p, q, r):
    assert_law_associative(BladeLaw.from_signature(Signature.real(p, q, r)))


@pytest.mark.parametrize("p, q, r", real_signatures(4))
def test_hatted_sign_law_is_associative(p, q, r):
    law = BladeLaw.from_signature(Signature.real(p, q, r)).hatted()
    assert_law_associative(law)
    assert_law_associative(law.concat(BladeLaw.from_signature(Signature.real(1, 1, 0))))


def assert_basis_associative(A):
    basis = [A.basis(k) for k in range(A.dim)]
    pairs = [[A.mul(x, y) for y in basis] for x in basis]
    for i, x in enumerate(basis):
        for j in range(A.dim):
            for k, z in enumerate(basis):
                assert A.mul(pairs[i][j], z) == A.mul(x, pairs[j][k]), (i, j, k)


@pytest.mark.parametrize(
    "build",
    [
        lambda: quaternions(),
        lambda: skew_tensor(quaternions(), clifford_real(1, 1, 0)),
        lambda: skew_tensor(quaternions(), quaternions()),
        lambda: hat(skew_tensor(clifford_real(0, 1, 1), quaternions())),
    ],
    ids=["H", "H⊗R(1,1,0)", "H⊗H", "hat(R(0,1,1)⊗H)"],
)
def test_table_algebras_are_associative_on_basis_triples(build):
    assert_basis_associative(build())


@pytest.mark.slow
def test_table_algebra_of_dim_64_is_associative():
    assert_basis_associative(skew_tensor(quaternions(), clifford_real(2, 1, 1)))


def sparse_element(A, rng, terms=4):
    x = A.zero()
    for _ in range(terms):
        x = x + A.basis(rng.randrange(A.dim)).scaled(small_scalar(rng, A.field, bound=3))
    return x


@pytest.mark.parametrize(
    "build, seed",
    [
        (lambda: clifford_real(4, 2, 2), 11),
        (lambda: hat(clifford_real(3, 3, 2)), 12),
        (lambda: clifford_complex(5, 3), 13),
    ],
    ids=["R(4,2,2)", "hat(R(3,3,2))", "C(5,3)"],
)
def test_random_triples_in_dim_256(build, seed):
    A = build()
    assert A.dim == 256
    rng = random.Random(seed)
    for _ in range(1000):
        x, y, z = (sparse_element(A, rng) for _ in range(3))
        assert A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z))


def rewrite_word(word, squares):
    """Sort a generator word by adjacent swaps, contracting equal neighbours."""
    word = list(word)
    coeff = 1
    changed = True
    while changed and coeff:
        changed = False
        for k in range(len(word) - 1):
            a, b = word[k], word[k + 1]
            if a == b:
                coeff *= squares[a]
                del word[k:k + 2]
                changed = True
                break
            if a > b:
                word[k], word[k + 1] = b, a
                coeff = -coeff
                changed = True
                break
    return coeff, sum(1 << i for i in word)


def word_of(mask):
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


SMALL_SIGNATURES = [Signature.real(p, q, r) for p, q, r in real_signatures(5)]
SMALL_SIGNATURES += [Signature.complex(p, n - p) for n in range(6) for p in range(n + 1)]


@pytest.mark.parametrize("sig", SMALL_SIGNATURES, ids=lambda sig: sig.label())
def test_blade_mul_matches_word_rewriting(sig):
    for m1 in range(sig.dim):
        for m2 in range(sig.dim):
            coeff, blade = blade_mul(Blade(m1), Blade(m2), sig)
            expected, mask = rewrite_word(word_of(m1) + word_of(m2), sig.squares)
            assert coeff == Scalar.of(sig.field, expected), (m1, m2)
            if expected:
                assert blade == Blade(mask)


TWIST_FACTORS = [clifford_real(p, q, r) for p, q, r in real_signatures(3)] + [quaternions()]
TWIST_FACTORS += [clifford_complex(p, n - p) for n in range(3) for p in range(n + 1)]
TWIST_PAIRS = [
    pytest.param(A, B, id=f"{A.label}, {B.label}")
    for A, B in itertools.product(TWIST_FACTORS, repeat=2)
    if A.field is B.field and A.dim * B.dim <= 16
]


@pytest.mark.parametrize("A, B", TWIST_PAIRS)
def test_supertwist_on_all_small_pairs(A, B):
    assert supertwist_check(A, B)
    both_odd = A.parity_dims()[1] and B.parity_dims()[1]
    assert supertwist_check(A, B, signed=False) == (not both_odd)


FLATTEN_FACTORS = [
    clifford_real(1, 0, 0),
    clifford_real(0, 0, 1),
    clifford_real(1, 1, 0),
    hat(clifford_real(1, 1, 0)),
    quaternions(),
]


@pytest.mark.parametrize("A, B, C", list(itertools.product(FLATTEN_FACTORS, repeat=3)))
def test_skew_tensor_is_associative_after_flattening(A, B, C):
    left = skew_tensor(skew_tensor(A, B), C)
    right = skew_tensor(A, skew_tensor(B, C))
    assert left.parity == right.parity
    assert left.structure_constants() == right.structure_constants()


@pytest.mark.parametrize("a, b", list(itertools.product(real_signatures(2), repeat=2)))
def test_tensor_of_clifford_algebras_adds_signatures(a, b):
    (p, q, r), (p2, q2, r2) = a, b
    source = clifford_real(p + p2, q + q2, r + r2)
    target = skew_tensor(clifford_real(p, q, r), clifford_real(p2, q2, r2))
    gens = target.generators
    n = p + q + r
    left, right = gens[:n], gens[n:]
    images = (
        left[:p] + right[:p2]
        + left[p:p + q] + right[p2:p2 + q2]
        + left[p + q:] + right[p2 + q2:]
    )
    assert is_isomorphic_via(source, target, images)
