"""Exact polynomials over Z (and Q, after clearing denominators).

Polynomials are coefficient lists, lowest degree first, with no trailing
zeros except for the zero polynomial ``[0]``.  Coefficients are ``gmpy2.mpz``
internally; plain ``int`` inputs are accepted everywhere.

The Sturm machinery here is what turns the majorant inequality into a proof:
root counts come from sign variations of a primitive pseudo-remainder
sequence, and sign checks are done by exact homogeneous evaluation at
rational points.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Sequence

import gmpy2
from gmpy2 import mpz

Poly = list  # list[mpz], lowest degree first


def poly(coeffs: Sequence[int]) -> Poly:
    p = [mpz(c) for c in coeffs] or [mpz(0)]
    return trim(p)


def trim(p: Poly) -> Poly:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return -1 if (len(p) == 1 and p[0] == 0) else len(p) - 1


def is_zero(p: Poly) -> bool:
    return len(p) == 1 and p[0] == 0


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] += c
    return trim(r)


def sub(a: Poly, b: Poly) -> Poly:
    return add(a, [-c for c in b])


def scale(a: Poly, k) -> Poly:
    return trim([c * k for c in a])


def mul(a: Poly, b: Poly) -> Poly:
    if is_zero(a) or is_zero(b):
        return [mpz(0)]
    r = [mpz(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return trim(r)


def derivative(p: Poly) -> Poly:
    if len(p) == 1:
        return [mpz(0)]
    return trim([i * p[i] for i in range(1, len(p))])


def content(p: Poly) -> mpz:
    g = reduce(gmpy2.gcd, p, mpz(0))
    return g if g else mpz(1)


def primitive(p: Poly) -> Poly:
    """Divide out the content; the sign of the polynomial is preserved."""
    c = content(p)
    return [x // c for x in p]


def from_fractions(coeffs: Sequence[Fraction]) -> Poly:
    """Positive integer multiple of a rational polynomial (sign preserved)."""
    den = reduce(gmpy2.lcm, (mpz(Fraction(c).denominator) for c in coeffs), mpz(1))
    return trim([mpz(Fraction(c).numerator) * (den // Fraction(c).denominator) for c in coeffs])


def sign(x) -> int:
    return (x > 0) - (x < 0)


def eval_sign(p: Poly, x) -> int:
    """Sign of p(x) for rational x, computed exactly."""
    x = Fraction(x)
    return sign(eval_scaled(p, x.numerator, x.denominator))


def eval_scaled(p: Poly, a, b) -> mpz:
    """b**deg(p) * p(a/b) for b > 0, by homogeneous Horner."""
    a, b = mpz(a), mpz(b)
    n = len(p) - 1
    r = p[n]
    bp = mpz(1)
    for i in range(n - 1, -1, -1):
        bp *= b
        r = r * a + p[i] * bp
    return r


def evaluate(p: Poly, x) -> Fraction:
    x = Fraction(x)
    n = len(p) - 1
    return Fraction(int(eval_scaled(p, x.numerator, x.denominator)), x.denominator**n)


def pseudo_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly, mpz]:
    """Return (q, r, m) with m*a = q*b + r, m = |lc(b)|**k > 0."""
    if is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    m = abs(lb)
    s = sign(lb)
    q = [mpz(0)] * max(1, len(a) - db)
    mult = mpz(1)
    while not is_zero(r) and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1] * s
        r = [c * m for c in r]
        q = [c * m for c in q]
        mult *= m
        q[shift] += lr
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r.pop()
        r = trim(r) if r else [mpz(0)]
    return trim(q), r, mult


def exact_quotient(a: Poly, b: Poly) -> Poly:
    """a / b over Q, scaled to a primitive integer polynomial of the same sign."""
    q, r, _ = pseudo_divmod(a, b)
    if not is_zero(r):
        raise ArithmeticError("division is not exact")
    return primitive(q)


def gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd over Q[x], leading coefficient positive."""
    a, b = primitive(a), primitive(b)
    while not is_zero(b):
        _, r, _ = pseudo_divmod(a, b)
        a, b = b, (primitive(r) if not is_zero(r) else r)
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def squarefree_part(p: Poly) -> Poly:
    g = gcd(p, derivative(p))
    return exact_quotient(p, g) if degree(g) > 0 else primitive(p)


# ---------------------------------------------------------------- Sturm


def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm chain p, p', -rem, ... using positive pseudo-division multipliers.

    Every element is primitive; scaling by positive constants leaves all sign
    variation counts unchanged, which is all the chain is used for.
    """
    seq = [primitive(p), primitive(derivative(p))]
    while degree(seq[-1]) > 0:
        _, r, _ = pseudo_divmod(seq[-2], seq[-1])
        if is_zero(r):
            break
        seq.append(primitive([-c for c in r]))
    return seq


def _variations(signs) -> int:
    s = [x for x in signs if x]
    return sum(1 for u, v in zip(s, s[1:]) if u != v)


def variations_at(seq: list[Poly], x) -> int:
    if x == float("inf"):
        return _variations(sign(p[-1]) for p in seq)
    if x == float("-inf"):
        return _variations(sign(p[-1]) * (-1) ** degree(p) for p in seq)
    x = Fraction(x)
    return _variations(sign(eval_scaled(p, x.numerator, x.denominator)) for p in seq)


def count_roots(seq: list[Poly], a, b) -> int:
    """Number of distinct real roots in (a, b] of the chain's first polynomial."""
    return variations_at(seq, a) - variations_at(seq, b)


def real_root_count(p: Poly) -> int:
    seq = sturm_sequence(p)
    return count_roots(seq, float("-inf"), float("inf"))


def cauchy_bound(p: Poly) -> Fraction:
    """Every real root lies in (-B, B)."""
    lc = abs(p[-1])
    return 1 + Fraction(int(max(abs(c) for c in p[:-1]) if len(p) > 1 else 0), int(lc))


def isolate_roots(p: Poly, lo, hi, seq: list[Poly] | None = None) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], each holding exactly one distinct root in (lo, hi]."""
    seq = seq if seq is not None else sturm_sequence(squarefree_part(p))
    lo, hi = Fraction(lo), Fraction(hi)
    out = []
    stack = [(lo, hi, count_roots(seq, lo, hi))]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        km = count_roots(seq, a, m)
        stack.append((m, b, k - km))
        stack.append((a, m, km))
    out.sort()
    return out


def one_sided_sign(p: Poly, x, side: int) -> int:
    """Sign of p just right (side=+1) or just left (side=-1) of x."""
    q = p
    order = 0
    while not is_zero(q):
        s = eval_sign(q, x)
        if s:
            return s * (side**order)
        q = derivative(q)
        order += 1
    return 0


def nonnegative_on(p: Poly, lo, hi=None) -> tuple[bool, Fraction | None]:
    """Decide p >= 0 on [lo, hi] (hi=None means [lo, oo)) exactly.

    Returns (True, None) or (False, witness) with p(witness) < 0.  Multiple
    roots (tangencies) are handled by isolating the roots of the squarefree
    part and testing the sign of p on every gap between consecutive roots.
    """
    lo = Fraction(lo)
    if is_zero(p):
        return True, None
    if eval_sign(p, lo) < 0:
        return False, lo
    if hi is None:
        hi = max(lo + 1, cauchy_bound(p))
        if p[-1] < 0:
            return False, _negative_point_right(p, hi)
    else:
        hi = Fraction(hi)
        if eval_sign(p, hi) < 0:
            return False, hi
    seq = sturm_sequence(squarefree_part(p))
    intervals = isolate_roots(p, lo, hi, seq)
    if not intervals:
        s = eval_sign(p, (lo + hi) / 2)
        return (True, None) if s >= 0 else (False, (lo + hi) / 2)
    for a, b in intervals:
        # sign on the gap left of this root is the sign at a (or just right of a)
        for x, side in ((a, +1), (b, -1)):
            s = eval_sign(p, x)
            if s == 0:
                s = one_sided_sign(p, x, side)
            if s < 0:
                return False, _witness_near(p, seq, a, b, x, side)
    return True, None


def _negative_point_right(p: Poly, start: Fraction) -> Fraction:
    x = start
    while eval_sign(p, x) >= 0:
        x *= 2
    return x


def _witness_near(p, seq, a, b, x, side) -> Fraction:
    if eval_sign(p, x) < 0:
        return x
    if side > 0:
        # a is a root of p and p < 0 just right of it, up to the root in (a, b]
        y = b
        while count_roots(seq, a, y) > 0:
            y = (a + y) / 2
        return y
    # b is the interval's own root and p < 0 on (a, b)
    return (a + b) / 2


# ------------------------------------------------------------ resultants


def _bareiss_det(m: list[list[mpz]]) -> mpz:
    n = len(m)
    m = [row[:] for row in m]
    sgn = 1
    prev = mpz(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sgn = -sgn
                    break
            else:
                return mpz(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sgn * m[n - 1][n - 1]


def resultant(a: Poly, b: Poly) -> mpz:
    da, db = degree(a), degree(b)
    if da <= 0 or db <= 0:
        if da == 0:
            return a[0] ** db
        if db == 0:
            return b[0] ** da
        return mpz(0)
    size = da + db
    rows = []
    ra, rb = a[::-1], b[::-1]
    for i in range(db):
        rows.append([mpz(0)] * i + ra + [mpz(0)] * (size - da - 1 - i))
    for i in range(da):
        rows.append([mpz(0)] * i + rb + [mpz(0)] * (size - db - 1 - i))
    return _bareiss_det(rows)


def discriminant(p: Poly) -> int:
    n = degree(p)
    if n < 1:
        raise ValueError("discriminant of a constant")
    if n == 1:
        return 1
    r = resultant(p, derivative(p))
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return int(s * r // p[-1])
