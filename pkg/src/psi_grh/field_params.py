"""Field invariants, discriminant floors and the exceptional-field tables.

Everything the bound formulas need from a number field is its degree, its
signature and log|disc|.  ``FieldParams`` carries exactly that.  A concrete
field used for exact prime counting is a ``FieldDefinition``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from psi_grh import intpoly
from psi_grh.errors import DomainError, FieldFormatError, NotFundamental

GRH_FLOOR_BASE = 11.916
GRH_FLOOR_OFFSET = 5.8507

# smallest |disc_K| over all fields of the given degree
MINIMAL_DISC = {2: 3, 3: 23, 4: 117, 5: 1609, 6: 9747, 7: 184607}

# c used for T = c*sqrt(x)/log(x) when building each table column
CEILING_T_FACTOR = {2: 4.8, 3: 5.1, 4: 6.0}
# (n_K, r2) -> discriminant ceiling above which the corollary follows at x = 100
COR1_DISC_CEILING = {
    (2, 0): 172921407,
    (2, 1): 103995324,
    (3, 0): 1350275,
    (3, 1): 369421,
    (4, 0): 10311,
    (4, 1): 2584,
    (4, 2): 648,
}
# (n_K, r2) -> number of fields with |disc| at most the ceiling
COR1_EXCEPTION_COUNT = {
    (2, 0): 52561764,
    (2, 1): 31610787,
    (3, 0): 74747,
    (3, 1): 65708,
    (4, 0): 54,
    (4, 1): 73,
    (4, 2): 22,
}
# n_K -> (c, minimal |disc|, smallest x past which the exceptional field is covered)
EXCEPTIONAL_XBAR = {2: (4.8, 3, 1566020), 3: (5.0, 23, 980), 4: (5.0, 117, 184)}

# smallest x at which the x >= 100 corollary already holds, by degree
COR1_X_FLOOR = {5: 72, 6: 43, 7: 29}
COR1_X_FLOOR_DEG8 = 24
COR1_X_FLOOR_DEFAULT = 100


@dataclass(frozen=True)
class FieldParams:
    n_K: int
    r1: int
    r2: int
    log_disc: float

    def __post_init__(self):
        if self.n_K < 1 or self.r1 < 0 or self.r2 < 0:
            raise DomainError(f"invalid signature ({self.n_K}, {self.r1}, {self.r2})")
        if self.r1 + 2 * self.r2 != self.n_K:
            raise DomainError(f"r1 + 2*r2 = {self.r1 + 2 * self.r2} != n_K = {self.n_K}")
        if not math.isfinite(self.log_disc) or self.log_disc < 0:
            raise DomainError(f"log_disc must be finite and >= 0, got {self.log_disc}")
        if self.n_K == 1 and self.log_disc != 0:
            raise DomainError("the rational field has discriminant 1")
        if self.n_K > 1 and self.log_disc == 0:
            raise DomainError("only the rational field has log_disc = 0")

    @property
    def d_K(self) -> int:
        return self.r1 + self.r2 - 1

    @classmethod
    def rationals(cls) -> "FieldParams":
        return cls(1, 1, 0, 0.0)

    @classmethod
    def from_disc(cls, n_K: int, r2: int, disc: int) -> "FieldParams":
        return cls(n_K, n_K - 2 * r2, r2, math.log(abs(disc)))


def signatures(n_K: int) -> list[tuple[int, int]]:
    """All (r1, r2) with r1 + 2*r2 = n_K."""
    return [(n_K - 2 * r2, r2) for r2 in range(n_K // 2 + 1)]


# ------------------------------------------------------------ discriminants


def is_squarefree(m: int) -> bool:
    m = abs(m)
    if m == 0:
        return False
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        if m % d == 0:
            m //= d
        d += 1 if d == 2 else 2
    return True


def is_fundamental_discriminant(D: int) -> bool:
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def params_from_quadratic(D: int) -> FieldParams:
    if not is_fundamental_discriminant(D):
        raise NotFundamental(D)
    r1, r2 = (2, 0) if D > 0 else (0, 1)
    return FieldParams(2, r1, r2, math.log(abs(D)))


def grh_disc_floor(n_K: int) -> float:
    """Lower bound for log|disc_K| under GRH.  Negative for tiny degrees;
    callers clamp at 0."""
    if n_K < 1:
        raise DomainError("degree must be positive")
    return n_K * math.log(GRH_FLOOR_BASE) - GRH_FLOOR_OFFSET


def admissible_log_disc_floor(n_K: int) -> float:
    """Best known lower bound for log|disc_K| at this degree (GRH floor or
    tabulated minimum, whichever is larger)."""
    if n_K == 1:
        return 0.0
    floor = max(0.0, grh_disc_floor(n_K))
    if n_K in MINIMAL_DISC:
        floor = max(floor, math.log(MINIMAL_DISC[n_K]))
    return floor


def minimal_disc(n_K: int) -> int | None:
    return MINIMAL_DISC.get(n_K)


def cor1_disc_ceiling(n_K: int, r2: int) -> int | None:
    return COR1_DISC_CEILING.get((n_K, r2))


def cor1_exception_count(n_K: int, r2: int) -> int | None:
    return COR1_EXCEPTION_COUNT.get((n_K, r2))


def exceptional_xbar(n_K: int) -> tuple[float, int, int] | None:
    return EXCEPTIONAL_XBAR.get(n_K)


def cor1_x_floor(n_K: int) -> int:
    if n_K >= 8:
        return COR1_X_FLOOR_DEG8
    return COR1_X_FLOOR.get(n_K, COR1_X_FLOOR_DEFAULT)


def tables_canonical_text() -> str:
    """Stable serialization of all embedded tables (used for checksums)."""
    lines = [f"grh_floor {GRH_FLOOR_BASE!r} {GRH_FLOOR_OFFSET!r}"]
    lines += [f"mindisc {n} {d}" for n, d in sorted(MINIMAL_DISC.items())]
    lines += [f"ceiling_T_factor {n} {c!r}" for n, c in sorted(CEILING_T_FACTOR.items())]
    lines += [f"disc_ceiling {n} {r2} {v}" for (n, r2), v in sorted(COR1_DISC_CEILING.items())]
    lines += [f"exception_count {n} {r2} {v}" for (n, r2), v in sorted(COR1_EXCEPTION_COUNT.items())]
    lines += [f"exceptional_xbar {n} {c!r} {d} {x}" for n, (c, d, x) in sorted(EXCEPTIONAL_XBAR.items())]
    lines += [f"floor {n} {x}" for n, x in sorted(COR1_X_FLOOR.items())]
    lines += [f"floor8 {COR1_X_FLOOR_DEG8}", f"floor_default {COR1_X_FLOOR_DEFAULT}"]
    return "\n".join(lines) + "\n"


# -------------------------------------------------------- field definitions

Shape = tuple[tuple[int, int], ...]  # sorted ((e, f), ...)


@dataclass(frozen=True)
class FieldDefinition:
    """A concrete number field.

    ``kind`` is ``"quadratic"`` (given by its fundamental discriminant ``D``)
    or ``"polynomial"`` (monic integer ``coeffs``, lowest degree first).
    ``index_primes`` maps primes dividing the polynomial index to their
    user-supplied splitting shapes.
    """

    kind: str
    D: int | None = None
    coeffs: tuple[int, ...] = ()
    disc: int | None = None
    index_primes: tuple[tuple[int, Shape], ...] = field(default=())

    def __post_init__(self):
        if self.kind == "quadratic":
            if self.D is None or not is_fundamental_discriminant(self.D):
                raise NotFundamental(self.D)
        elif self.kind == "polynomial":
            c = self.coeffs
            if len(c) < 2:
                raise DomainError("defining polynomial must have degree >= 1")
            if c[-1] != 1:
                raise DomainError("defining polynomial must be monic")
            if math.gcd(*c) != 1:
                raise DomainError("defining polynomial must have content 1")
            n = len(c) - 1
            for p, shape in self.index_primes:
                if sum(e * f for e, f in shape) != n:
                    raise DomainError(f"index-prime {p}: sum e*f != {n}")
        else:
            raise DomainError(f"unknown field kind {self.kind!r}")

    @classmethod
    def quadratic(cls, D: int) -> "FieldDefinition":
        return cls("quadratic", D=D)

    @classmethod
    def from_polynomial(cls, coeffs: Iterable[int], disc: int | None = None,
                        index_primes: dict[int, Iterable[tuple[int, int]]] | None = None) -> "FieldDefinition":
        ip = tuple(sorted((p, tuple(sorted(s))) for p, s in (index_primes or {}).items()))
        return cls("polynomial", coeffs=tuple(int(c) for c in coeffs), disc=disc, index_primes=ip)

    @property
    def degree(self) -> int:
        return 2 if self.kind == "quadratic" else len(self.coeffs) - 1

    def index_override(self, p: int) -> Shape | None:
        for q, shape in self.index_primes:
            if q == p:
                return shape
        return None

    def poly_discriminant(self) -> int:
        if self.kind == "quadratic":
            return self.D
        return intpoly.discriminant(intpoly.poly(self.coeffs))

    def field_discriminant(self) -> int:
        """|disc_K| (sign dropped).  For polynomial fields without an explicit
        ``disc`` the polynomial discriminant is used only after checking that
        no prime divides the index; otherwise an error asks for ``disc``."""
        if self.kind == "quadratic":
            return abs(self.D)
        if self.disc is not None:
            return abs(self.disc)
        from psi_grh.exact_psi.gfp import divides_index

        dpoly = self.poly_discriminant()
        for p in _square_prime_divisors(dpoly):
            if divides_index(self.coeffs, p):
                raise FieldFormatError(
                    f"prime {p} divides the polynomial index; give the field discriminant with a 'disc' line"
                )
        return abs(dpoly)

    def params(self) -> FieldParams:
        if self.kind == "quadratic":
            return params_from_quadratic(self.D)
        n = self.degree
        r1 = intpoly.real_root_count(intpoly.poly(self.coeffs)) if n > 1 else 1
        d = self.field_discriminant()
        return FieldParams(n, r1, (n - r1) // 2, math.log(d))


def _square_prime_divisors(m: int, trial_limit: int = 10**6) -> list[int]:
    """Primes p with p**2 | m."""
    m = abs(m)
    out = []
    p = 2
    while p * p <= m and p <= trial_limit:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            if k >= 2:
                out.append(p)
        p += 1 if p == 2 else 2
    if m > 1 and p * p <= m:
        # every prime factor of m now exceeds trial_limit
        r = math.isqrt(m)
        if r * r == m and m < trial_limit**4:
            out.append(r)
        elif m >= trial_limit**3:
            raise FieldFormatError("cannot factor the polynomial discriminant; give 'disc' explicitly")
    return out


# ---------------------------------------------------------------- file I/O


def parse_field_text(text: str) -> FieldDefinition:
    """Parse the line-oriented field format (``quad``/``poly``/``disc``/``index-prime``)."""
    kind = None
    D = None
    coeffs: list[int] = []
    disc = None
    index: dict[int, list[tuple[int, int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            if head == "quad":
                kind, D = "quadratic", int(rest[0])
            elif head == "poly":
                kind, coeffs = "polynomial", [int(t) for t in rest]
            elif head == "disc":
                disc = int(rest[0])
            elif head == "index-prime":
                p = int(rest[0])
                index[p] = [tuple(int(v) for v in ef.split(":")) for ef in "".join(rest[1:]).split(",")]
            else:
                raise FieldFormatError(f"line {lineno}: unknown directive {head!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, FieldFormatError):
                raise
            raise FieldFormatError(f"line {lineno}: cannot parse {raw!r}") from exc
    if kind is None:
        raise FieldFormatError("field file needs a 'quad' or 'poly' line")
    if kind == "quadratic":
        return FieldDefinition.quadratic(D)
    return FieldDefinition.from_polynomial(coeffs, disc=disc, index_primes=index)


def load_field(path: str | Path) -> FieldDefinition:
    return parse_field_text(Path(path).read_text())


def format_field(fd: FieldDefinition) -> str:
    if fd.kind == "quadratic":
        return f"quad {fd.D}\n"
    lines = ["poly " + " ".join(str(c) for c in fd.coeffs)]
    if fd.disc is not None:
        lines.append(f"disc {fd.disc}")
    for p, shape in fd.index_primes:
        lines.append(f"index-prime {p} " + ",".join(f"{e}:{f}" for e, f in shape))
    return "\n".join(lines) + "\n"
