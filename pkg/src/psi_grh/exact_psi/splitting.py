"""How a rational prime decomposes in a field, as a multiset of (e, f)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from psi_grh.errors import IndexDivisorUnknown
from psi_grh.exact_psi.gfp import divides_index, poly_shape_mod_p
from psi_grh.field_params import FieldDefinition


@dataclass(frozen=True)
class SplittingShape:
    p: int
    factors: tuple[tuple[int, int], ...]  # sorted (e, f) pairs

    @property
    def degree(self) -> int:
        return sum(e * f for e, f in self.factors)

    @property
    def ramified(self) -> bool:
        return any(e > 1 for e, _ in self.factors)

    @property
    def residue_degrees(self) -> tuple[int, ...]:
        return tuple(f for _, f in self.factors)


def kronecker_symbol(D: int, n: int) -> int:
    """(D | n) for n >= 1."""
    if n < 1:
        raise ValueError("kronecker_symbol needs n >= 1")
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    # Jacobi symbol (D | n) for odd n
    a = D % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def quadratic_splitting(D: int, p: int) -> SplittingShape:
    k = kronecker_symbol(D, p)
    if k == 1:
        return SplittingShape(p, ((1, 1), (1, 1)))
    if k == -1:
        return SplittingShape(p, ((1, 2),))
    return SplittingShape(p, ((2, 1),))


@lru_cache(maxsize=64)
def _poly_disc(field: FieldDefinition) -> int:
    return field.poly_discriminant()


@lru_cache(maxsize=1 << 16)
def splitting_shape(field: FieldDefinition, p: int) -> SplittingShape:
    """Dedekind's factorization theorem, with user data at index divisors."""
    if field.kind == "quadratic":
        return quadratic_splitting(field.D, p)
    override = field.index_override(p)
    if override is not None:
        return SplittingShape(p, tuple(sorted(override)))
    if _poly_disc(field) % p == 0 and divides_index(list(field.coeffs), p):
        raise IndexDivisorUnknown(p)
    return SplittingShape(p, poly_shape_mod_p(list(field.coeffs), p))
