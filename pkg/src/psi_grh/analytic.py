"""Scalar special functions and the two elementary inequalities used by the
explicit formula (the Littlewood-type majorant and the R' bound).

Natural logarithms throughout.  Functions that take a ``dps`` argument switch
to mpmath arithmetic at that many decimal digits; without it they run in
double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
from scipy import integrate

from psi_grh.errors import DomainError

EULER_GAMMA = 0.57721566490153286061

# B_2, B_4, ..., B_16
_BERNOULLI_EVEN = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
]

EM_ORDER = 8


@dataclass(frozen=True)
class ValueWithError:
    value: object  # float or mpmath.mpf
    abs_error: object

    @property
    def lower(self):
        return self.value - self.abs_error

    @property
    def upper(self):
        return self.value + self.abs_error

    def contains(self, x) -> bool:
        return abs(x - self.value) <= self.abs_error

    def __float__(self):
        return float(self.value)


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


# ------------------------------------------------------------------ digamma


def digamma(x, dps: int | None = None):
    """Gamma'/Gamma(x) for real x > 0.

    Shifts x upward with psi(x) = psi(x+1) - 1/x, then sums the asymptotic
    series in 1/x**2.  Double precision by default (about 15 digits); with
    ``dps`` the result is an mpf accurate to that many digits.
    """
    if dps is None:
        x = float(x)
        if not x > 0:
            raise DomainError(f"digamma needs x > 0, got {x}")
        acc = 0.0
        while x < 8.0:
            acc -= 1.0 / x
            x += 1.0
        inv2 = 1.0 / (x * x)
        series = 0.0
        p = inv2
        for k, b in enumerate(_BERNOULLI_EVEN[:7], 1):
            series += float(b) / (2 * k) * p
            p *= inv2
        return acc + math.log(x) - 0.5 / x - series

    with mp.workdps(dps + 10):
        x = _to_mpf(x)
        if not x > 0:
            raise DomainError(f"digamma needs x > 0, got {x}")
        target = mp.mpf(10) ** (-(dps + 5))
        shift_to = max(8, dps)
        acc = mp.mpf(0)
        while x < shift_to:
            acc -= 1 / x
            x += 1
        inv2 = 1 / (x * x)
        series = mp.mpf(0)
        p = inv2
        k = 1
        while True:
            term = mp.bernoulli(2 * k) / (2 * k) * p
            series += term
            if abs(term) < target:
                break
            p *= inv2
            k += 1
        return +(acc + mp.log(x) - 1 / (2 * x) - series)


# ------------------------------------------------------------ von Mangoldt


def von_mangoldt(n: int) -> float:
    if n < 1:
        raise DomainError("von_mangoldt needs n >= 1")
    if n == 1:
        return 0.0
    p = _smallest_prime_factor(n)
    while n % p == 0:
        n //= p
    return math.log(p) if n == 1 else 0.0


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


# ----------------------------------------------- zeta'/zeta, Euler-Maclaurin


def _rising(s, k):
    r = mp.mpf(1)
    for i in range(k):
        r *= s + i
    return r


def _em_tail_bounds(s, N, m=EM_ORDER):
    """Bounds on |zeta - Z| and |zeta' - Z'| for the m-term expansion at N."""
    B = abs(_to_mpf(_BERNOULLI_EVEN[m - 1])) / mp.factorial(2 * m)
    a = s + 2 * m - 1
    poch = _rising(s, 2 * m)
    base = mp.power(N, 1 - s - 2 * m)
    harm = sum(1 / (s + i) for i in range(2 * m))
    logN = mp.log(N)
    e0 = B * poch * base / a
    e1 = B * poch * base * (harm / a + logN / a + 1 / (a * a))
    return e0, e1


def zeta_and_derivative(s, N: int, m: int = EM_ORDER):
    """Euler-Maclaurin values (Z, Z') of zeta(s), zeta'(s), real s > 1, cut at N."""
    Z = mp.mpf(0)
    Zp = mp.mpf(0)
    for n in range(1, N):
        t = mp.power(n, -s)
        Z += t
        Zp -= t * mp.log(n)
    logN = mp.log(N)
    N1s = mp.power(N, 1 - s)
    Ns = mp.power(N, -s)
    Z += N1s / (s - 1) + Ns / 2
    Zp += -N1s * logN / (s - 1) - N1s / (s - 1) ** 2 - Ns * logN / 2
    for k in range(1, m + 1):
        b = _to_mpf(_BERNOULLI_EVEN[k - 1]) / mp.factorial(2 * k)
        poch = _rising(s, 2 * k - 1)
        dpoch = poch * sum(1 / (s + i) for i in range(2 * k - 1))
        Npow = mp.power(N, -s - 2 * k + 1)
        Z += b * poch * Npow
        Zp += b * Npow * (dpoch - poch * logN)
    return Z, Zp


def zeta_log_deriv(s, tol: float = 1e-9) -> ValueWithError:
    """zeta'/zeta(s) for real s >= 1.5 with a certified absolute error <= tol.

    Euler-Maclaurin with 8 correction terms; the cut point N is the smallest
    power-of-1.25 step that drives the explicit remainder bounds below tol.
    Working precision scales with tol, so tiny tolerances are honoured.
    Returned fields are mpmath numbers.
    """
    if not (_to_mpf(s) >= mp.mpf(1.5)):
        raise DomainError(f"zeta_log_deriv needs s >= 1.5, got {s}")
    digits = max(20, int(-math.log10(tol)) + 12)
    with mp.workdps(digits):
        s = _to_mpf(s)
        tol_m = mp.mpf(tol)
        N = 8
        while True:
            e0, e1 = _em_tail_bounds(s, N)
            if e0 < tol_m / 100 and e1 < tol_m / 100:
                break
            N = int(N * 1.25) + 1
        Z, Zp = zeta_and_derivative(s, N)
        rounding = mp.mpf(10) ** (3 - digits) * N * (1 + mp.log(N))
        e0 += rounding
        e1 += rounding
        value = Zp / Z
        err = (e1 + abs(value) * e0) / (Z - e0)
        if err > tol_m:
            raise ArithmeticError("error budget exceeded; increase working precision")
        return ValueWithError(+value, +err)


# --------------------------------------------------------- elementary lemmas


def littlewood_majorant(x: float, nu: complex) -> float:
    """Upper bound for |(1+x)**nu - 1 - nu*x| valid for x >= -1, 1 <= Re nu <= 2."""
    nu = complex(nu)
    if x < -1 or not (1 <= nu.real <= 2):
        raise DomainError(f"need x >= -1 and 1 <= Re(nu) <= 2, got x={x}, nu={nu}")
    factor = 0.5 + (1.0 / nu.real - 0.5) * max(0.0, -x)
    return factor * abs(nu * (nu - 1)) * x * x


def lemma22_R_prime(x: float, r1: int, r2: int) -> float:
    """Closed form of R'_{r1,r2}(x) for x >= 3."""
    if x < 3:
        raise DomainError(f"lemma22_R_prime needs x >= 3, got {x}")
    if r1 < 0 or r2 < 0 or r1 + 2 * r2 < 1:
        raise DomainError(f"invalid signature ({r1}, {r2})")
    return (-(r1 + r2 - 1) * math.log(x)
            - 0.5 * r1 * math.log1p(-1.0 / (x * x))
            - r2 * math.log1p(-1.0 / x))


def gamma_remainder_upper(x: float, n_K: int) -> float:
    return 1.22 / x if n_K <= 2 else 0.0


def log_integral(a: float, b: float) -> float:
    """Integral of 1/log(u) over [a, b] by adaptive quadrature."""
    if a < 2:
        raise DomainError(f"log_integral needs a >= 2, got {a}")
    if b < a:
        raise DomainError(f"log_integral needs b >= a, got [{a}, {b}]")
    if a == b:
        return 0.0
    # u = e^t makes the integrand e^t/t, which quad handles well over wide ranges
    val, _ = integrate.quad(lambda t: math.exp(t) / t, math.log(a), math.log(b),
                            epsabs=0.0, epsrel=1e-11, limit=200)
    return val
