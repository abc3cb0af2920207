"""Exact prime-ideal counting functions psi_K, theta_K, pi_K and the integral
psi1_K(x) = int_0^x psi_K(t) dt, all built from splitting shapes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import mpmath as mp
import numpy as np

from psi_grh.bound_engine import bound_by_kind
from psi_grh.errors import CutoffTooLarge, DomainError
from psi_grh.exact_psi.sieve import CUTOFF_GUARD, prime_powers_up_to
from psi_grh.exact_psi.splitting import splitting_shape
from psi_grh.field_params import FieldDefinition, FieldParams


def _prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p**k, or None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
        p += 1
    return n, 1


def _smallest_prime_factor(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def _lambda_weight(field: FieldDefinition, p: int, k: int) -> int:
    """Sum of residue degrees f over primes above p with f | k."""
    return sum(f for _, f in splitting_shape(field, p).factors if k % f == 0)


def lambda_tilde(field: FieldDefinition, n: int) -> float:
    pk = _prime_power(n)
    if pk is None:
        return 0.0
    p, k = pk
    return _lambda_weight(field, p, k) * math.log(p)


def _cutoff(x) -> int:
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    n = math.floor(x)
    if n > CUTOFF_GUARD:
        raise CutoffTooLarge(f"x = {x} exceeds the enumeration guard {CUTOFF_GUARD}")
    return n


def psi_K(field: FieldDefinition, x) -> float:
    n = _cutoff(x)
    return math.fsum(_lambda_weight(field, p, k) * math.log(p) for p, k, _ in prime_powers_up_to(n))


def _prime_ideal_terms(field: FieldDefinition, x):
    """Yield (f, p) for every prime ideal of norm p**f <= x."""
    n = _cutoff(x)
    for p, k, _ in prime_powers_up_to(n):
        if k == 1:
            for _, f in splitting_shape(field, p).factors:
                if p**f <= n:
                    yield f, p


def theta_K(field: FieldDefinition, x) -> float:
    return math.fsum(f * math.log(p) for f, p in _prime_ideal_terms(field, x))


def pi_K(field: FieldDefinition, x) -> int:
    return sum(1 for _ in _prime_ideal_terms(field, x))


# ------------------------------------------------ exact log combinations


@dataclass
class LogCombination:
    """const + sum_p coeffs[p] * log p with rational coefficients."""

    const: Fraction = Fraction(0)
    coeffs: dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        # keys are rewritten over primes so that sign() can rely on independence
        out: dict[int, Fraction] = {}
        for n, c in self.coeffs.items():
            if n < 1:
                raise DomainError(f"log of {n} is not a positive logarithm")
            c = Fraction(c)
            while n > 1:
                pk = _prime_power(n)
                p = pk[0] if pk else _smallest_prime_factor(n)
                while n % p == 0:
                    n //= p
                    out[p] = out.get(p, Fraction(0)) + c
        self.const = Fraction(self.const)
        self.coeffs = {p: c for p, c in out.items() if c}

    def __add__(self, other: "LogCombination") -> "LogCombination":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, Fraction(0)) + c
        return LogCombination(self.const + other.const, {p: c for p, c in out.items() if c})

    def scaled(self, k) -> "LogCombination":
        k = Fraction(k)
        return LogCombination(self.const * k, {p: c * k for p, c in self.coeffs.items() if c * k})

    def __sub__(self, other: "LogCombination") -> "LogCombination":
        return self + other.scaled(-1)

    def to_float(self) -> float:
        return float(self.const) + math.fsum(float(c) * math.log(p) for p, c in self.coeffs.items())

    def sign(self) -> int:
        """Exact sign.  Logs of distinct primes are linearly independent over Q
        and no nonzero such combination is rational, so the value is zero only
        when every coefficient is; otherwise precision is raised until the
        interval around the value excludes 0."""
        terms = [c for c in self.coeffs.values() if c]
        if not terms and not self.const:
            return 0
        signs = {(c > 0) - (c < 0) for c in terms + ([self.const] if self.const else [])}
        if len(signs) == 1:
            return signs.pop()
        dps = 30
        while True:
            with mp.workdps(dps):
                v = mp.mpf(self.const.numerator) / self.const.denominator
                mag = abs(v)
                for p, c in self.coeffs.items():
                    t = mp.mpf(c.numerator) / c.denominator * mp.log(p)
                    v += t
                    mag += abs(t)
                err = mag * mp.mpf(10) ** (5 - dps) * (len(self.coeffs) + 1)
                if abs(v) > err:
                    return 1 if v > 0 else -1
            dps *= 2


def psi_exact(field: FieldDefinition, x) -> LogCombination:
    out: dict[int, Fraction] = {}
    for p, k, _ in prime_powers_up_to(_cutoff(x)):
        w = _lambda_weight(field, p, k)
        if w:
            out[p] = out.get(p, Fraction(0)) + w
    return LogCombination(Fraction(0), out)


def psi1_exact(field: FieldDefinition, x) -> LogCombination:
    """psi1_K(x) = sum_{n <= x} Lambda~(n) (x - n) as an exact log combination."""
    x = Fraction(x)
    out: dict[int, Fraction] = {}
    for p, k, q in prime_powers_up_to(_cutoff(x)):
        w = _lambda_weight(field, p, k)
        if w and q < x:
            out[p] = out.get(p, Fraction(0)) + w * (x - q)
    return LogCombination(Fraction(0), out)


def psi1_K(field: FieldDefinition, x) -> float:
    return psi1_exact(field, x).to_float()


Psi1 = Callable[[FieldDefinition, Fraction], LogCombination]


def goldston_sandwich_check(field: FieldDefinition, x, h, psi1: Psi1 = psi1_exact) -> bool:
    """psi(x) <= (psi1(x+h) - psi1(x))/h for h > 0, and >= for h < 0.

    Multiplying through by h turns both cases into
    psi1(x+h) - psi1(x) - h psi(x) >= 0, decided exactly.
    """
    x, h = Fraction(x), Fraction(h)
    if x < 2:
        raise DomainError(f"goldston_sandwich_check needs x >= 2, got {x}")
    if h == 0 or h <= -x:
        raise DomainError(f"need h > 0 or -x < h < 0, got h={h}")
    d = psi1(field, x + h) - psi1(field, x) - psi_exact(field, x).scaled(h)
    return d.sign() >= 0


# ---------------------------------------------------------- range tables


@dataclass(frozen=True)
class PsiTables:
    """psi, theta, pi at every integer 0..x_max."""

    x_max: int
    psi: np.ndarray
    theta: np.ndarray
    pi: np.ndarray


def increments(field: FieldDefinition, x_max: int):
    """Per-integer jumps (Lambda~(n), theta jump, pi jump) for 0 <= n <= x_max."""
    n = _cutoff(x_max)
    lam = np.zeros(n + 1)
    th = np.zeros(n + 1)
    cnt = np.zeros(n + 1, dtype=np.int64)
    for p, k, q in prime_powers_up_to(n):
        lp = math.log(p)
        lam[q] = _lambda_weight(field, p, k) * lp
        if k == 1:
            for _, f in splitting_shape(field, p).factors:
                if p**f <= n:
                    th[p**f] += f * lp
                    cnt[p**f] += 1
    return lam, th, cnt


def psi_tables(field: FieldDefinition, x_max: int) -> PsiTables:
    lam, th, cnt = increments(field, x_max)
    return PsiTables(len(lam) - 1, np.cumsum(lam), np.cumsum(th), np.cumsum(cnt))


@dataclass(frozen=True)
class RangeRow:
    x: int
    psi: float
    theta: float
    pi: int
    bound: float
    margin: float  # bound - |psi - x|


@dataclass(frozen=True)
class RangeReport:
    passed: bool
    required_margin: float
    min_margin: float
    argmin: int
    rows: tuple[RangeRow, ...]


def verify_bound_on_range(field: FieldDefinition, bound_kind: str, x_from: int, x_to: int,
                          margin: float = 1.0, params: FieldParams | None = None,
                          T: float | None = None) -> RangeReport:
    """Check bound(x) - |psi_K(x) - x| >= margin at every integer x in [x_from, x_to].

    With margin >= 1 this also covers all real x in the range, since psi_K is
    constant on [m, m+1) and every bound is increasing in x.
    """
    if int(x_from) != x_from or int(x_to) != x_to:
        raise DomainError("range endpoints must be integers")
    x_from, x_to = int(x_from), int(x_to)
    if x_to < x_from:
        raise DomainError(f"empty range [{x_from}, {x_to}]")
    params = params or field.params()
    tabs = psi_tables(field, x_to)
    rows = []
    for x in range(x_from, x_to + 1):
        b = bound_by_kind(bound_kind, x, params, T).value
        ps = float(tabs.psi[x])
        rows.append(RangeRow(x, ps, float(tabs.theta[x]), int(tabs.pi[x]), b, b - abs(ps - x)))
    worst = min(rows, key=lambda r: (r.margin, r.x))
    return RangeReport(worst.margin >= margin, margin, worst.margin, worst.x, tuple(rows))
