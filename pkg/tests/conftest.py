import random

import pytest
from sympy.polys.domains import QQ

from algebra.superalgebra import clifford_real, quaternions, skew_tensor, tensor_element


def half(x):
    return x.scaled(QQ(1, 2))


@pytest.fixture
def rng():
    return random.Random(1)


@pytest.fixture
def dplus():
    return clifford_real(1, 0, 0)


@pytest.fixture
def dminus():
    return clifford_real(0, 1, 0)


@pytest.fixture
def quat():
    return quaternions()


@pytest.fixture
def dc(dplus, dminus):
    """D+ (x) D- with the idempotents f+- = (1 +- e+ (x) e-)/2 and the witnesses x, y."""
    A = skew_tensor(dplus, dminus)
    a = tensor_element(A, dplus.basis(1), dminus.unit)
    b = tensor_element(A, dplus.unit, dminus.basis(1))
    c = A.mul(a, b)
    return {
        "algebra": A,
        "a": a,
        "b": b,
        "f_plus": half(A.unit + c),
        "f_minus": half(A.unit - c),
        "x": half(a - b),
        "y": half(a + b),
    }


@pytest.fixture
def dd_plus():
    """D+^2 with E = e1e2."""
    A = clifford_real(2, 0, 0)
    return A, A.basis(0b11)
