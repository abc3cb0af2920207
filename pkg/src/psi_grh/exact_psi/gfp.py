"""Polynomials over the prime field F_p, just enough for factorization shapes.

Polynomials are lists of ints in [0, p), lowest degree first; the zero
polynomial is ``[]``.  Only degree patterns are ever extracted: squarefree
decomposition followed by distinct-degree factorization.  Equal-degree
splitting is never needed.
"""

from __future__ import annotations

from collections import Counter


def normalize(a, p: int) -> list[int]:
    r = [c % p for c in a]
    while r and r[-1] == 0:
        r.pop()
    return r


def deg(a: list[int]) -> int:
    return len(a) - 1


def add(a, b, p):
    n = max(len(a), len(b))
    return normalize([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p)


def sub(a, b, p):
    n = max(len(a), len(b))
    return normalize([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p)


def mul(a, b, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return normalize(r, p)


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] = (a[i + shift] - c * y) % p
        while a and a[-1] == 0:
            a.pop()
    return normalize(q, p), a


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd(a, b, p):
    a, b = normalize(a, p), normalize(b, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def derivative(a, p):
    return normalize([i * a[i] for i in range(1, len(a))], p)


def powmod(base, e: int, mod, p):
    result = [1]
    base = rem(base, mod, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), mod, p)
        base = rem(mul(base, base, p), mod, p)
        e >>= 1
    return result


def squarefree_decomposition(f, p) -> dict[int, list[int]]:
    """{multiplicity: product of the irreducible factors with that multiplicity}.

    Handles characteristic p (derivative can vanish on p-th powers).
    """
    f = monic(normalize(f, p), p)
    out: dict[int, list[int]] = {}
    if deg(f) <= 0:
        return out
    i = 1
    c = gcd(f, derivative(f, p), p)
    w = divmod_(f, c, p)[0]
    while deg(w) > 0:
        y = gcd(w, c, p)
        fac = divmod_(w, y, p)[0]
        if deg(fac) > 0:
            out[i] = fac
        w = y
        c = divmod_(c, y, p)[0]
        i += 1
    if deg(c) > 0:
        root = [c[k] for k in range(0, len(c), p)]  # c(x) = root(x)**p over F_p
        for k, g in squarefree_decomposition(root, p).items():
            m = k * p
            out[m] = mul(out[m], g, p) if m in out else g
    return out


def distinct_degree_counts(f, p) -> Counter:
    """For squarefree monic f: Counter {degree: number of irreducible factors}."""
    f = monic(normalize(f, p), p)
    counts: Counter = Counter()
    x = [0, 1]
    h = x
    d = 0
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if deg(g) > 0:
            counts[d] += deg(g) // d
            f = divmod_(f, g, p)[0]
            h = rem(h, f, p)
    if deg(f) > 0:
        counts[deg(f)] += 1
    return counts


def poly_shape_mod_p(coeffs, p: int) -> tuple[tuple[int, int], ...]:
    """Sorted multiset of (multiplicity, degree) of the irreducible factors mod p."""
    f = normalize(coeffs, p)
    assert len(f) == len(coeffs), "monic polynomial cannot drop degree mod p"
    shape = []
    for mult, part in squarefree_decomposition(f, p).items():
        for d, k in distinct_degree_counts(part, p).items():
            shape += [(mult, d)] * k
    return tuple(sorted(shape))


def divides_index(coeffs, p: int) -> bool:
    """Dedekind's criterion: does p divide [O_K : Z[theta]]?

    With fbar = prod t_i^e_i mod p, g = prod t_i (the radical), h = fbar / g and
    F = (f - g*h) / p, the prime p divides the index iff gcd(Fbar, g, h) != 1.
    Lifts are taken with coefficients in [0, p).
    """
    fbar = normalize(coeffs, p)
    dec = squarefree_decomposition(fbar, p)
    if all(m == 1 for m in dec):
        return False
    g = [1]
    for part in dec.values():
        g = mul(g, part, p)
    h = divmod_(fbar, g, p)[0]
    gh = [0] * (len(g) + len(h) - 1)
    for i, x in enumerate(g):
        for j, y in enumerate(h):
            gh[i + j] += x * y
    diff = [(coeffs[i] if i < len(coeffs) else 0) - (gh[i] if i < len(gh) else 0)
            for i in range(max(len(coeffs), len(gh)))]
    assert all(c % p == 0 for c in diff)
    F = normalize([c // p for c in diff], p)
    return deg(gcd(gcd(F, g, p), h, p)) > 0
