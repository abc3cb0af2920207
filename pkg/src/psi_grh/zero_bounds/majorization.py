"""Exact certification that a certificate's majorant dominates its target.

With w = 4 gamma^2 and k_j = 2 s_j - 1 = u_j / v_j, each term becomes
4 u_j v_j / (u_j^2 + v_j^2 w), so F = N(w) / (L * D(w)) with integer
polynomials N, D and a positive integer L.  Then

* F >= 0 for every gamma        <=>  N >= 0 on [0, oo)
* F >= 2 / sqrt(1 + w), w <= 100 <=>  N >= 0 and N^2 (1 + w) - 4 L^2 D^2 >= 0

and both are decided by Sturm sequences in exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from psi_grh import intpoly as ip
from psi_grh.errors import DomainError
from psi_grh.parallel import pmap
from psi_grh.zero_bounds.certificate import GAMMA_CUT, MajorantCertificate

TARGETS = ("lemma", "zero")


@dataclass(frozen=True)
class MajorizationReport:
    passed: bool
    target: str
    witness_w: Fraction | None = None  # w = 4 gamma^2 where the inequality fails
    failed_check: str | None = None

    @property
    def witness_gamma(self) -> float | None:
        if self.witness_w is None:
            return None
        return math.sqrt(float(self.witness_w)) / 2


def majorant_polynomials(points, coefficients):
    """(N, D, L) as described in the module docstring."""
    points = [Fraction(s) for s in points]
    coefficients = [Fraction(a) for a in coefficients]
    if len(points) != len(coefficients):
        raise DomainError("points and coefficients differ in length")
    if any(s <= Fraction(1, 2) for s in points):
        raise DomainError("majorant points must exceed 1/2")
    L = lcm(*(a.denominator for a in coefficients)) if coefficients else 1
    ks = [2 * s - 1 for s in points]
    factors = [ip.poly([k.numerator**2, k.denominator**2]) for k in ks]
    D = ip.poly([1])
    for f in factors:
        D = ip.mul(D, f)
    N = ip.poly([0])
    for j, (a, k) in enumerate(zip(coefficients, ks)):
        if a == 0:
            continue
        term = ip.poly([1])
        for i, f in enumerate(factors):
            if i != j:
                term = ip.mul(term, f)
        c = (a * L).numerator * 4 * k.numerator * k.denominator
        N = ip.add(N, ip.scale(term, c))
    return N, D, L


def _check(job):
    name, p, lo, hi = job
    ok, witness = ip.nonnegative_on(p, lo, hi)
    return name, ok, witness


def verify_majorant(points, coefficients, target: str = "lemma") -> MajorizationReport:
    """Certify F >= g on [-5, 5] ('lemma') or F >= 0 on the real line ('zero')."""
    if target not in TARGETS:
        raise DomainError(f"target must be one of {TARGETS}")
    N, D, L = majorant_polynomials(points, coefficients)
    w_max = Fraction(4 * GAMMA_CUT**2)
    jobs = [("nonnegativity", N, 0, None)]
    if target == "lemma":
        P = ip.sub(ip.mul(ip.mul(N, N), ip.poly([1, 1])), ip.scale(ip.mul(D, D), 4 * L * L))
        jobs.append(("domination", P, 0, w_max))
    for name, ok, witness in pmap(_check, jobs):
        if not ok:
            return MajorizationReport(False, target, witness, name)
    return MajorizationReport(True, target)


def verify_majorization(cert: MajorantCertificate, target: str = "lemma") -> MajorizationReport:
    return verify_majorant(cert.points, cert.a, target)


def majorant_value(points, coefficients, gamma):
    """F(gamma) in exact rational arithmetic."""
    g2 = 4 * Fraction(gamma) ** 2
    total = Fraction(0)
    for s, a in zip(points, coefficients):
        k = 2 * Fraction(s) - 1
        total += Fraction(a) * 4 * k / (k * k + g2)
    return total
