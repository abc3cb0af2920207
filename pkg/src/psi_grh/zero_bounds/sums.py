"""Explicit bounds for the three sums over nontrivial zeros that feed the
explicit formula: the zero count up to height T, the tail of 1/|rho|^2
beyond T, and the first moment of 1/|rho| up to T.  All assume GRH.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from psi_grh.errors import DomainError
from psi_grh.field_params import FieldParams

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class TrudgianConstants:
    """Zero-counting constants for T0 = 5, eta = 1/2, p = -1/2.

    D1..D3 are the published values truncated to three decimals; the true
    values lie in [D, D + truncation).
    """

    D1: float = 0.459
    D2: float = 1.996
    D3: float = 2.754
    truncation: float = 0.001
    T0: float = 5.0
    eta: float = 0.5
    p_param: float = -0.5

    @property
    def r_param(self) -> float:
        return (1 + self.eta - self.p_param) / (0.5 + self.eta)

    @staticmethod
    def _c(D1, D2, D3):
        return (math.pi * D1, math.pi * (D2 + D1 * math.log(TWO_PI)), math.pi * D3)

    @property
    def c(self) -> tuple[float, float, float]:
        return self._c(self.D1, self.D2, self.D3)

    @property
    def c_upper(self) -> tuple[float, float, float]:
        t = self.truncation
        return self._c(self.D1 + t, self.D2 + t, self.D3 + t)

    @property
    def c1(self) -> float:
        return self.c[0]

    @property
    def c2(self) -> float:
        return self.c[1]

    @property
    def c3(self) -> float:
        return self.c[2]


TRUDGIAN = TrudgianConstants()
# roundings used by the zero-count bound
C_CAPS = (1.45, 8.93, 8.66)


def W(T: float, params: FieldParams) -> float:
    return params.log_disc + params.n_K * math.log(T / TWO_PI)


def _check_T(T: float, floor: float = 5.0):
    if not T >= floor:
        raise DomainError(f"T must be >= {floor}, got {T}")


def zero_count_upper(T: float, params: FieldParams) -> float:
    """Upper bound for N_K(T), the number of zeros with |gamma| <= T."""
    _check_T(T)
    c1, c2, c3 = C_CAPS
    return (T / math.pi) * (1 + c1 / T) * W(T, params) - (T / math.pi) * (1 - c2 / T) * params.n_K + c3 / math.pi


def zero_count_window(T: float, params: FieldParams, c: tuple[float, float, float] | None = None):
    """(A(T), R(T)): main term and remainder bound of the zero-counting estimate."""
    _check_T(T, 1.0)
    c1, c2, c3 = TRUDGIAN.c if c is None else c
    A = (T / math.pi) * (params.log_disc + params.n_K * math.log(T / (TWO_PI * math.e)))
    R = (c1 * W(T, params) + c2 * params.n_K + c3) / math.pi
    return A, R


def tail_inverse_square_bound(T: float, params: FieldParams) -> float:
    """Bound for sum over |gamma| >= T of 1/|rho|^2."""
    _check_T(T)
    n = params.n_K
    rhs = (1 + 2.89 / T) * W(T, params) / T + (1 + 18.61 / T) * n / T + 17.31 / T**2
    return rhs / math.pi


def first_moment_bound(T: float, params: FieldParams) -> float:
    """Bound for sum over |gamma| <= T of 1/|rho|."""
    _check_T(T)
    lt = math.log(T / TWO_PI)
    rhs = (lt + 4.01) * params.log_disc + (0.5 * lt * lt - 1.41) * params.n_K + 25.57
    return rhs / math.pi


def low_lying_sum_bound(params: FieldParams) -> float:
    """Bound for sum over |gamma| <= 5 of 1/|rho| (may be negative for
    parameters that no actual field has)."""
    return 1.02 * params.log_disc - 1.63 * params.n_K + 7.04
