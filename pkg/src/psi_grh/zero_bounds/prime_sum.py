"""Sign pattern of the Dirichlet polynomial S(n) = sum_j a_j n^(-s_j) and the
constants a certificate contributes to the low-lying zero bound.

With m = sqrt(n) and J coefficients (J odd), scale * m^J * n * S(n) equals
P + m Q for integers P = sum_{j odd} A_j n^((J-j)/2) and
Q = sum_{j even} A_j n^((J-1-j)/2), where A_j = a_j * scale.  The sign of
P + m Q is decided exactly by comparing P^2 with n Q^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from psi_grh.analytic import digamma, zeta_log_deriv
from psi_grh.errors import SignPatternViolation
from psi_grh.exact_psi.sieve import prime_powers_up_to
from psi_grh.field_params import signatures
from psi_grh.parallel import pmap, worker_count
from psi_grh.zero_bounds.certificate import SCALE, MajorantCertificate

SLACK_DPS = 60
ZETA_TOL = 1e-45
CLOSURE_COEFFS = (1.02, -1.63, 7.04)  # disc, degree, constant
CLOSURE_MAX_DEGREE = 50


def _split(coefficients):
    odd = [int(c) for c in coefficients[0::2]]  # j = 1, 3, ...
    even = [int(c) for c in coefficients[1::2]]  # j = 2, 4, ...
    return odd, even


def _horner(cs, n):
    r = 0
    for c in cs:
        r = r * n + c
    return r


def _PQ(odd, even, n):
    return _horner(odd, n), _horner(even, n)


def _sign_PQ(P, Q, n) -> int:
    if P >= 0 and Q >= 0:
        return 1 if (P or Q) else 0
    if P <= 0 and Q <= 0:
        return -1
    if P * P == n * Q * Q:
        return 0
    return (1 if P > 0 else -1) if P * P > n * Q * Q else (1 if Q > 0 else -1)


def S_sign(coefficients, n: int) -> int:
    """Exact sign of S(n) for the standard points s_j = 1 + j/2."""
    if len(coefficients) % 2 == 0:
        raise ValueError("sign routine needs an odd number of coefficients")
    odd, even = _split(coefficients)
    P, Q = _PQ(odd, even, n)
    return _sign_PQ(P, Q, n)


def S_value(coefficients, n: int):
    """S(n) as an mpf at the current mpmath precision."""
    odd, even = _split(coefficients)
    P, Q = _PQ(odd, even, n)
    J = len(coefficients)
    return (mp.mpf(P) / mp.sqrt(n) + Q) / (mp.mpf(SCALE) * mp.mpf(n) ** ((J + 1) // 2))


def _scan(job):
    coefficients, lo, hi, n_pos = job
    odd, even = _split(coefficients)
    for n in range(lo, hi + 1):
        P, Q = _PQ(odd, even, n)
        s = _sign_PQ(P, Q, n)
        if (n <= n_pos and s <= 0) or (n > n_pos and s >= 0):
            return n
    return None


def check_sign_pattern(cert: MajorantCertificate) -> None:
    """Raise SignPatternViolation unless S(n) > 0 for n <= n_pos, S(n) < 0 for
    n_pos < n <= n_check, and every odd/even pair beyond n_check is negative."""
    coeffs = cert.coefficients
    chunks = max(1, worker_count()) * 4
    step = -(-(cert.n_check - 1) // chunks)
    jobs = [(coeffs, lo, min(lo + step - 1, cert.n_check), cert.n_pos)
            for lo in range(2, cert.n_check + 1, step)]
    for bad in pmap(_scan, jobs):
        if bad is not None:
            side = "positive" if bad <= cert.n_pos else "negative"
            raise SignPatternViolation(f"S({bad}) is not {side}", n=bad)
    pair = failing_pair(cert)
    if pair is not None:
        raise SignPatternViolation(
            f"pair {pair} is not negative for n > {cert.n_check}", pair=pair)


def failing_pair(cert: MajorantCertificate) -> int | None:
    """First k whose pair a_{2k+1} n^(-s_{2k+1}) + a_{2k+2} n^(-s_{2k+2}) can be
    nonnegative for some n > n_check, or None.

    Needs A_{2k+1} < 0 and, when A_{2k+2} > 0, n_check * A_{2k+1}^2 >= A_{2k+2}^2
    (the pair equals n^(-s_{2k+1}) (a_{2k+1} + a_{2k+2}/sqrt n)).  The last,
    unpaired odd coefficient must be negative.
    """
    c = cert.coefficients
    for k in range(0, (len(c) + 1) // 2):
        odd = c[2 * k]
        even = c[2 * k + 1] if 2 * k + 1 < len(c) else 0
        if odd >= 0:
            return k
        if even > 0 and cert.n_check * odd * odd < even * even:
            return k
    return None


# ------------------------------------------------------------- constants


@dataclass(frozen=True)
class CertificateConstants:
    sum_a: float
    sum_gamma_half: float
    sum_gamma_shift: float
    sum_pole: float
    prime_sum_slack: float
    slack_error: float

    def closure(self, max_degree: int = CLOSURE_MAX_DEGREE) -> "ClosureReport":
        return closure_report(self, max_degree)


def _frac_mpf(x: Fraction):
    return mp.mpf(x.numerator) / x.denominator


def zeta_part(cert: MajorantCertificate):
    """(sum_j a_j zeta'/zeta(s_j), certified absolute error)."""
    with mp.workdps(SLACK_DPS):
        total = mp.mpf(0)
        err = mp.mpf(0)
        for a, s in zip(cert.a, cert.points):
            z = zeta_log_deriv(s, tol=ZETA_TOL)
            am = _frac_mpf(a)
            total += am * z.value
            err += abs(am) * z.abs_error
        return +total, +err


def prime_part(cert: MajorantCertificate):
    """sum over n <= n_pos of Lambda(n) S(n), at SLACK_DPS digits."""
    with mp.workdps(SLACK_DPS):
        total = mp.mpf(0)
        logs = {}
        for p, k, q in prime_powers_up_to(cert.n_pos):
            lp = logs.get(p)
            if lp is None:
                lp = logs[p] = mp.log(p)
            total += lp * S_value(cert.coefficients, q)
        return +total


def prime_sum_slack(cert: MajorantCertificate):
    """(value, error) of sum_j a_j zeta'/zeta(s_j) + sum_{n <= n_pos} Lambda(n) S(n),
    which equals -sum_{n > n_pos} Lambda(n) S(n) and is therefore positive."""
    with mp.workdps(SLACK_DPS):
        z, err = zeta_part(cert)
        pr = prime_part(cert)
        scale = sum(abs(_frac_mpf(a)) for a in cert.a)
        rounding = scale * mp.mpf(10) ** (10 - SLACK_DPS) * cert.n_pos
        return +(z + pr), +(err + rounding)


def certificate_constants(cert: MajorantCertificate, check_signs: bool = True) -> CertificateConstants:
    if check_signs:
        check_sign_pattern(cert)
    dps = SLACK_DPS
    with mp.workdps(dps):
        a = [_frac_mpf(x) for x in cert.a]
        s = [_frac_mpf(x) for x in cert.points]
        gh = sum(aj * digamma(sj / 2, dps=dps) for aj, sj in zip(a, s))
        gs = sum(aj * digamma((sj + 1) / 2, dps=dps) for aj, sj in zip(a, s))
        pole = sum(Fraction(a_j) * (2 / s_j + 2 / (s_j - 1)) for a_j, s_j in zip(cert.a, cert.points))
        slack, err = prime_sum_slack(cert)
        return CertificateConstants(
            sum_a=float(sum(cert.a)),
            sum_gamma_half=float(gh),
            sum_gamma_shift=float(gs),
            sum_pole=float(pole),
            prime_sum_slack=float(slack + err),
            slack_error=float(err),
        )


def verify_prime_sum(cert: MajorantCertificate) -> CertificateConstants:
    """Check the sign pattern and compute the certificate's constants."""
    return certificate_constants(cert, check_signs=True)


# --------------------------------------------------------------- closure


@dataclass(frozen=True)
class ClosureReport:
    passed: bool
    disc_ok: bool
    const_ok: bool
    worst_degree_coeff: float  # max over signatures of C_n / n
    worst_signature: tuple[int, int]


def closure_report(c: CertificateConstants, max_degree: int = CLOSURE_MAX_DEGREE) -> ClosureReport:
    """Compare the certificate's linear form in (log d_K, n_K, 1) with
    1.02 log d_K - 1.63 n_K + 7.04.

    The degree coefficient for signature (r1, r2) is
    2*slack*n - sum_a*n*log(pi) + (r1 + r2)*sum_gamma_half + r2*sum_gamma_shift.
    """
    cd, cn, cc = CLOSURE_COEFFS
    worst, where = -math.inf, (0, 0)
    for n in range(1, max_degree + 1):
        for r1, r2 in signatures(n):
            C = (2 * c.prime_sum_slack * n - c.sum_a * n * math.log(math.pi)
                 + (r1 + r2) * c.sum_gamma_half + r2 * c.sum_gamma_shift)
            if C / n > worst:
                worst, where = C / n, (r1, r2)
    disc_ok = c.sum_a <= cd
    const_ok = c.sum_pole <= cc
    return ClosureReport(disc_ok and const_ok and worst <= cn, disc_ok, const_ok, worst, where)
