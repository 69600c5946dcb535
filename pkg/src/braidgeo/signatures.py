"""Levine-Tristram signatures and nullities at low-order roots of unity.

For a Seifert matrix ``A`` of a link ``L`` and ``omega`` on the unit
circle, the invariants are the signature and nullity of the Hermitian form
``(1 - omega) A + (1 - conj(omega)) A^T`` (the nullity is corrected by the
number of surface components).  At roots of unity of order 2, 3 and 4 the
form lives over a quadratic cyclotomic field, so both invariants are
computed exactly; a floating-point evaluation is provided for plots and
cross-checks only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclotomic import (
    Cyclo,
    CyclotomicError,
    hermitian_signature_nullity,
    rational,
    root_of_unity,
)
from .seifert import SeifertData


@dataclass(frozen=True)
class LTValue:
    """signature sigma_L(omega) and nullity eta_L(omega)"""

    sigma: int
    eta: int


def lt_form(data: SeifertData, omega: Cyclo) -> list[list[Cyclo]]:
    """The Hermitian matrix ``(1 - omega) A + (1 - conj(omega)) A^T``."""
    if not (omega * omega.conjugate() - 1).is_zero():
        raise CyclotomicError(f"{omega} is not on the unit circle")
    a = omega.order
    u = rational(a, 1) - omega
    v = u.conjugate()
    mat = data.matrix
    g = len(mat)
    return [
        [u * mat[i][j] + v * mat[j][i] for j in range(g)] for i in range(g)
    ]


def lt_value(data: SeifertData, omega: Cyclo) -> LTValue:
    """Exact Levine-Tristram invariants of the closure at ``omega != 1``."""
    if (omega - 1).is_zero():
        raise CyclotomicError("Levine-Tristram invariants are not defined at 1")
    sig, nul = hermitian_signature_nullity(lt_form(data, omega))
    return LTValue(sig, nul + data.b0 - 1)


def lt_sums(data: SeifertData, order: int) -> tuple[int, int]:
    """``(sum of sigma, sum of eta)`` over the nontrivial powers
    ``zeta_order^k`` for ``k = 1 .. order-1``."""
    total_sigma = total_eta = 0
    for k in range(1, order):
        val = lt_value(data, root_of_unity(order, k))
        total_sigma += val.sigma
        total_eta += val.eta
    return total_sigma, total_eta


def branched_cover_invariants(data: SeifertData, order: int) -> tuple[int, int]:
    """First Betti number of the ``order``-fold cyclic branched cover of the
    closure, and the signature of the corresponding cover of the 4-ball
    branched over a bounding surface: ``(b1, signature) = (sum eta,
    sum sigma)``."""
    total_sigma, total_eta = lt_sums(data, order)
    return total_eta, total_sigma


def satellite_signature(
    pattern_sigma_at_omega: int,
    companion_sigma_at_omega_pow_q: int,
) -> int:
    """Signature of a satellite with the given pattern and companion: the
    pattern term at ``omega`` plus the companion term at ``omega^q`` (the
    companion term is 0 when ``omega^q = 1``)."""
    return pattern_sigma_at_omega + companion_sigma_at_omega_pow_q


def lt_value_float(
    data: SeifertData, omega: complex, tol: float = 1e-9
) -> LTValue:
    """Floating-point evaluation (any ``omega`` on the circle).  Intended
    for plotting and as an independent cross-check of the exact path."""
    if abs(omega - 1) < tol:
        raise ValueError("Levine-Tristram invariants are not defined at 1")
    a = np.array(data.matrix, dtype=complex)
    h = (1 - omega) * a + (1 - np.conj(omega)) * a.T
    eig = np.linalg.eigvalsh(h)
    sig = int((eig > tol).sum() - (eig < -tol).sum())
    nul = int((np.abs(eig) <= tol).sum())
    return LTValue(sig, nul + data.b0 - 1)
