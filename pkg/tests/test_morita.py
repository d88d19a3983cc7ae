import pytest
from sympy.polys.domains import QQ_I

from algebra.errors import NotIdempotent
from algebra.modules import Functor
from algebra.superalgebra import clifford_complex, clifford_real, quaternions, skew_tensor, subalgebra, tensor_element
from analysis.morita import (
    EXACT,
    Equivalent,
    NotEquivalent,
    Undetermined,
    as_functor,
    basic_reduction,
    check_basic,
    find_odd_involution,
    gr_divisional_check,
    gr_local_check,
    is_two_sided_ideal,
    jacobson_radical,
    primitive_decomposition,
    s_equivalent,
)

from .conftest import half


def test_as_functor():
    assert as_functor("PI") is Functor.PI
    assert as_functor(Functor.SIGMA) is Functor.SIGMA
    with pytest.raises(ValueError):
        as_functor("tau")


def test_stated_witnesses_verify(dc):
    verdict = Equivalent(dc["x"], dc["y"], dc["f_plus"], dc["f_minus"])
    assert verdict.parity == 1
    assert verdict.to_dict()["verdict"] == "equivalent"


def test_wrong_witnesses_are_rejected(dc):
    with pytest.raises(ValueError):
        Equivalent(dc["y"], dc["x"], dc["f_plus"], dc["f_minus"])


@pytest.mark.parametrize("functor", list(Functor))
def test_dc_idempotents_are_equivalent(dc, functor):
    A = dc["algebra"]
    verdict = s_equivalent(A, dc["f_plus"], dc["f_minus"], functor=functor, seed=1, trials=50)
    assert isinstance(verdict, Equivalent)
    assert verdict.parity == 1


def test_equivalence_is_reflexive(dc):
    verdict = s_equivalent(dc["algebra"], dc["f_plus"], dc["f_plus"])
    assert isinstance(verdict, Equivalent)


def test_odd_or_non_idempotent_arguments_are_rejected(dc):
    A = dc["algebra"]
    with pytest.raises(NotIdempotent):
        s_equivalent(A, A.unit, dc["a"])
    with pytest.raises(NotIdempotent):
        s_equivalent(A, dc["f_plus"] + dc["a"], dc["f_minus"])


def test_idempotents_of_a_product_are_not_equivalent(dc):
    # the even part of D+ (x) D- is R x R
    A = dc["algebra"]
    B = subalgebra(A, [A.mul(dc["a"], dc["b"])], "even")
    c = B.basis(1)
    assert B.mul(c, c) == B.unit
    f, g = half(B.unit + c), half(B.unit - c)
    verdict = s_equivalent(B, f, g, seed=1, trials=20)
    assert isinstance(verdict, NotEquivalent)
    assert verdict.to_dict() == {"verdict": "not-equivalent", "certificate": "fAg = 0"}


def test_undetermined_with_zero_budget(dc):
    verdict = s_equivalent(dc["algebra"], dc["f_plus"], dc["f_minus"], trials=0)
    assert isinstance(verdict, Undetermined)
    assert verdict.to_dict() == {"verdict": "undetermined", "trials": 0}


def test_jacobson_radical():
    assert jacobson_radical(clifford_real(2, 1, 0)) == []
    A = clifford_real(1, 0, 1)
    radical = jacobson_radical(A)
    assert sorted(next(iter(x.coeffs)) for x in radical) == [0b10, 0b11]
    assert is_two_sided_ideal(A, radical)
    assert not is_two_sided_ideal(A, [A.generators[0]])


def test_jacobson_radical_of_general_algebra():
    A = skew_tensor(quaternions(), clifford_real(0, 0, 1))
    radical = jacobson_radical(A)
    assert len(radical) == 4
    assert is_two_sided_ideal(A, radical)


@pytest.mark.parametrize("p, q", [(0, 0), (1, 0), (0, 1), (2, 0), (0, 2), (3, 0), (0, 3)])
def test_clifford_divisions_are_gr_divisional(p, q):
    assert gr_divisional_check(clifford_real(p, q, 0), seed=1, samples=30, budget=30)


def test_gr_divisional_negatives(dc):
    assert not gr_divisional_check(clifford_real(1, 0, 1), samples=10)
    assert not gr_divisional_check(dc["algebra"], samples=10, budget=30)
    assert not gr_local_check(dc["algebra"], samples=10, budget=30)


def test_gr_local():
    assert gr_local_check(clifford_real(1, 0, 1), samples=20, budget=20)
    assert gr_local_check(clifford_real(0, 0, 2), samples=20, budget=20)


def test_find_odd_involution():
    u = find_odd_involution(clifford_real(1, 0, 0))
    assert u is not None
    A = u.algebra
    assert A.mul(u, u) == A.unit
    assert find_odd_involution(quaternions()) is None
    assert find_odd_involution(clifford_real(0, 0, 1)) is None


def test_primitive_decomposition_of_dc(dc):
    A = dc["algebra"]
    decomposition = primitive_decomposition(A, seed=1, budget=50)
    assert decomposition.check()
    assert len(decomposition.idempotents) == 2
    assert len(decomposition.classes) == 1
    assert decomposition.primitivity == (EXACT, EXACT)
    assert decomposition.confirmed
    assert len(decomposition.representatives()) == 1


def test_primitive_decomposition_of_division_algebra():
    decomposition = primitive_decomposition(clifford_real(0, 1, 0), seed=1, budget=20)
    assert len(decomposition.idempotents) == 1
    assert decomposition.primitivity == (EXACT,)


def test_complex_dd_splits():
    D = clifford_complex(1, 0)
    A = skew_tensor(D, D)
    a = tensor_element(A, D.basis(1), D.unit)
    b = tensor_element(A, D.unit, D.basis(1))
    w = A.mul(a, b).scaled(QQ_I(0, 1))
    e_plus = half(A.unit + w)
    e_minus = half(A.unit - w)
    assert isinstance(s_equivalent(A, e_plus, e_minus, seed=1, trials=50), Equivalent)


@pytest.mark.parametrize("functor", list(Functor))
def test_basic_reduction_of_dc(dc, functor):
    reduction = basic_reduction(dc["algebra"], functor=functor, seed=1, budget=50, samples=20)
    assert reduction.algebra.dim == 1
    assert reduction.confirmed
    assert reduction.to_dict()["basic"]["dim"] == 1


def test_basic_reduction_keeps_gr_divisional_algebras():
    A = clifford_real(0, 2, 0)
    reduction = basic_reduction(A, seed=1, budget=30, samples=20)
    assert reduction.algebra is A
    assert check_basic(A, seed=1, samples=20, budget=30)
