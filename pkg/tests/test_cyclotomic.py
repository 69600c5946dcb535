import random
from fractions import Fraction

import numpy as np
import pytest

from braidgeo.cyclotomic import (
    Cyclo,
    CyclotomicError,
    hermitian_signature_nullity,
    rational,
    root_of_unity,
    zeta,
)


def test_roots_of_unity_satisfy_their_order():
    for order in (2, 3, 4):
        z = zeta(order)
        power = rational(order, 1)
        for _ in range(order):
            power = power * z
        assert power == rational(order, 1)
        assert abs(abs(z.to_complex()) - 1) < 1e-12


def test_conjugate_is_inverse_on_the_unit_circle():
    for order in (2, 3, 4):
        z = zeta(order)
        assert z * z.conjugate() == rational(order, 1)


def test_field_arithmetic():
    z = zeta(3)
    # minimal polynomial: z^2 + z + 1 = 0
    assert z * z + z + 1 == rational(3, 0)
    half = rational(3, Fraction(1, 2))
    assert (z / z) == rational(3, 1)
    assert half + half == rational(3, 1)
    i = zeta(4)
    assert i * i == rational(4, -1)


def test_rational_detection_and_sign():
    z = zeta(4)
    assert not z.is_rational()
    assert (z * z).is_rational()
    assert (z * z).rational_value() == -1
    assert (z * z).sign() == -1
    assert rational(4, 0).is_zero()


def test_unsupported_order_rejected():
    with pytest.raises(CyclotomicError):
        zeta(5)


def test_signature_of_small_diagonal_forms():
    one = rational(2, 1)
    zero = rational(2, 0)
    assert hermitian_signature_nullity([[one]]) == (1, 0)
    assert hermitian_signature_nullity([[-one]]) == (-1, 0)
    assert hermitian_signature_nullity([[zero]]) == (0, 1)
    assert hermitian_signature_nullity(
        [[one, zero], [zero, -one]]
    ) == (0, 0)


def test_signature_of_hyperbolic_pair():
    # [[0, 1], [1, 0]] has eigenvalues +1 and -1
    zero, one = rational(3, 0), rational(3, 1)
    assert hermitian_signature_nullity([[zero, one], [one, zero]]) == (0, 0)


def test_signature_of_imaginary_skew_pair():
    # [[0, i], [-i, 0]] is Hermitian with eigenvalues +1 and -1
    i, zero = zeta(4), rational(4, 0)
    assert hermitian_signature_nullity([[zero, i], [-i, zero]]) == (0, 0)


def _random_hermitian(rng, order, size):
    a = [
        [
            Cyclo(order, rng.randint(-3, 3), 0 if order == 2 else rng.randint(-3, 3))
            for _ in range(size)
        ]
        for _ in range(size)
    ]
    return [
        [a[r][c] + a[c][r].conjugate() for c in range(size)] for r in range(size)
    ]


def test_exact_signature_matches_float_eigenvalues():
    rng = random.Random(5)
    for order in (2, 3, 4):
        for _ in range(40):
            size = rng.randint(1, 5)
            m = _random_hermitian(rng, order, size)
            eig = np.linalg.eigvalsh(
                np.array([[x.to_complex() for x in row] for row in m])
            )
            if np.min(np.abs(eig)) <= 1e-9:
                continue  # oracle only decides well-separated spectra
            sig = int((eig > 0).sum() - (eig < 0).sum())
            assert hermitian_signature_nullity(m) == (sig, 0)
