import pytest

from algebra.errors import AlgebraMismatch
from algebra.modules import (
    Functor,
    apply_functor,
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
from algebra.superalgebra import clifford_complex, clifford_real, hat, quaternions


@pytest.fixture(params=[(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, 1), (2, 1, 0)])
def regular(request):
    return regular_module(clifford_real(*request.param))


def test_regular_module_axioms(regular):
    assert check_module(regular)
    assert regular.dim == regular.algebra.dim
    assert regular.parity_dims() == regular.algebra.parity_dims()


@pytest.mark.parametrize("functor", list(Functor))
def test_functors_are_involutions(regular, functor):
    once = apply_functor(regular, functor)
    assert check_module(once)
    assert once.parity_dims() == regular.parity_dims()[::-1]
    assert apply_functor(once, functor) == regular


def test_pi_and_sigma_differ_on_odd_action():
    M = regular_module(clifford_real(1, 0, 0))
    assert parity_change(M) != suspension(M)
    H = regular_module(quaternions())
    assert parity_change(H) == suspension(H)


def test_projective_module_from_idempotent(dc):
    A = dc["algebra"]
    P = module_from_idempotent(A, dc["f_plus"])
    assert check_module(P)
    assert P.dim == 2
    assert P.parity_dims() == (1, 1)


def test_hom_dimensions():
    A = clifford_real(1, 0, 0)
    M = regular_module(A)
    assert len(hom_basis(M, M, 0)) == 1
    assert len(hom_basis(M, M, 1)) == 1
    assert len(hom_basis(M, suspension(M), 0)) == 1


def test_hom_requires_same_algebra():
    M = regular_module(clifford_real(1, 0, 0))
    N = regular_module(clifford_real(0, 1, 0))
    with pytest.raises(AlgebraMismatch):
        hom_basis(M, N, 0)
    with pytest.raises(AlgebraMismatch):
        direct_sum(M, N)


def test_direct_sum_is_additive(quat):
    M = regular_module(quat)
    S = direct_sum(M, M)
    assert check_module(S)
    assert S.dim == 8
    assert len(hom_basis(S, M, 0)) == 2 * len(hom_basis(M, M, 0))


def test_hat_module_matches_pi_and_sigma():
    for A in (clifford_real(1, 0, 0), clifford_real(1, 1, 0), clifford_complex(1, 1)):
        Ah = hat(A)
        M = regular_module(A)
        Mh = hat_module(M, Ah)
        assert Mh.algebra is Ah
        assert check_module(Mh)
        pi_dims = [len(maps) for maps in twisted_hom(M, M, Functor.PI)]
        sigma_dims = [len(maps) for maps in twisted_hom(Mh, Mh, Functor.SIGMA)]
        assert pi_dims == sigma_dims


@pytest.mark.parametrize("functor", list(Functor))
def test_twisted_end_of_regular_module(functor):
    for A in (clifford_real(1, 0, 0), clifford_real(0, 1, 0), quaternions(), clifford_real(1, 1, 0)):
        E = twisted_end(regular_module(A), functor)
        assert E.dim == A.dim
        assert E.parity_dims() == A.parity_dims()


def test_modules_isomorphic():
    D = regular_module(clifford_real(1, 0, 0))
    assert modules_isomorphic(D, suspension(D))
    H = regular_module(quaternions())
    assert modules_isomorphic(H, H)
    assert not modules_isomorphic(H, suspension(H))
