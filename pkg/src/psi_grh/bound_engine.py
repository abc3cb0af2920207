"""Explicit GRH bounds for |psi_K(x) - x|.

Every bound here is affine in (log|disc_K|, n_K) once x (and T) are fixed, so
reports carry the three coefficients alongside the value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from psi_grh.errors import DomainError
from psi_grh.field_params import FieldParams, cor1_x_floor

PI = math.pi
GOLDEN = (math.sqrt(5) - 1) / 2
LOG_T_TOL = 1e-6
SCHOENFELD_X_MIN = 73.2
COR2_LARGE_X_MIN = 2000.0

KINDS = ("theorem1", "cor1", "cor2_general", "cor2_large", "cor3", "schoenfeld_Q")


@dataclass(frozen=True)
class BoundReport:
    x: float
    bound_kind: str
    value: float
    T_used: float | None = None
    components: tuple[float, float, float] | None = None  # (log_disc, n_K, constant)

    def reassemble(self, params: FieldParams) -> float:
        a, b, c = self.components
        return a * _L(params) + b * params.n_K + c


def _L(params: FieldParams) -> float:
    return max(0.0, params.log_disc)


def _report(x, kind, params, comps, T=None) -> BoundReport:
    a, b, c = comps
    return BoundReport(x, kind, a * _L(params) + b * params.n_K + c, T, (a, b, c))


def _need(cond: bool, msg: str):
    if not cond:
        raise DomainError(msg)


# ------------------------------------------------------------ main bound


def epsilon_K(x: float, T: float, params: FieldParams) -> float:
    return max(0.0, params.d_K * math.log(x) - 1.44 * params.n_K * math.sqrt(x) / T)


def theorem1_coefficients(x: float, T: float, params: FieldParams) -> tuple[float, float, float]:
    _need(x >= 3 and T >= 5, f"theorem1 needs x >= 3 and T >= 5, got x={x}, T={T}")
    s = math.sqrt(x) / PI
    lt = math.log(T / (2 * PI))
    tail = 5.84 / T + 5.52 / T**2
    F = s * (lt + 6.01 + tail) + 1.02
    G = s * (0.5 * lt * lt + (2 + tail) * lt - 1.41 + 29.04 / T + 31.46 / T**2) - 2.10
    H = (x / T + s * (25.57 + 25.97 / T + 28.57 / T**2) + epsilon_K(x, T, params)
         + 8.35 + (1.22 / x if params.n_K <= 2 else 0.0))
    return F, G, H


def theorem1_bound(x: float, T: float, params: FieldParams) -> BoundReport:
    return _report(x, "theorem1", params, theorem1_coefficients(x, T, params), T)


def r_K_bound(params: FieldParams) -> float:
    return 1.02 * _L(params) - 2.10 * params.n_K + 8.35


# ------------------------------------------------------- comparison bounds


def oesterle_bound(x: float, params: FieldParams) -> float:
    """The older explicit bound: sqrt(x)[(log x/pi + 2) log d + (log^2 x/(2 pi) + 2) n]."""
    _need(x >= 1, "oesterle_bound needs x >= 1")
    lx = math.log(x)
    return math.sqrt(x) * ((lx / PI + 2) * _L(params) + (lx * lx / (2 * PI) + 2) * params.n_K)


def schoenfeld_bound(x: float) -> BoundReport:
    """(1/8 pi) sqrt(x) log^2 x, valid for the rationals when x >= 73.2."""
    _need(x >= SCHOENFELD_X_MIN, f"schoenfeld bound needs x >= {SCHOENFELD_X_MIN}")
    v = math.sqrt(x) * math.log(x) ** 2 / (8 * PI)
    return BoundReport(x, "schoenfeld_Q", v, None, (0.0, 0.0, v))


# ----------------------------------------------------------- corollaries


def corollary1_bound(x: float, params: FieldParams) -> BoundReport:
    _need(params.n_K >= 2, "corollary1 needs a field of degree >= 2")
    floor = cor1_x_floor(params.n_K)
    _need(x >= floor, f"corollary1 needs x >= {floor} for degree {params.n_K}, got x={x}")
    s, lx = math.sqrt(x), math.log(x)
    return _report(x, "cor1", params, (s * (lx / (2 * PI) + 2), s * (lx * lx / (8 * PI) + 2), 0.0))


def corollary2_bound(x: float, params: FieldParams, variant: str = "general") -> BoundReport:
    s, lx = math.sqrt(x), math.log(x) if x > 0 else 0.0
    if variant == "general":
        _need(x >= 3, f"corollary2 (general) needs x >= 3, got x={x}")
        u = math.log(18.8 * x / (lx * lx))
        comps = (s * (u / (2 * PI) + 2.3), s * (u * u / (8 * PI) + 1.3), s * (0.3 * lx + 14.6))
        return _report(x, "cor2_general", params, comps)
    if variant == "large":
        _need(x >= COR2_LARGE_X_MIN, f"corollary2 (large) needs x >= {COR2_LARGE_X_MIN:g}, got x={x}")
        u = math.log(x / (lx * lx))
        comps = (s * (u / (2 * PI) + 1.8), s * (u * u / (8 * PI) + 1.1), s * (1.2 * lx + 10.2))
        return _report(x, "cor2_large", params, comps)
    raise DomainError(f"unknown corollary2 variant {variant!r}")


def corollary3_report(x: float, x_bar: float, params: FieldParams) -> BoundReport:
    """Bound for |pi_K(x) - pi_K(x_bar) - int_{x_bar}^x du/log u|."""
    _need(x >= x_bar >= 3, f"corollary3 needs x >= x_bar >= 3, got x={x}, x_bar={x_bar}")
    s, lx = math.sqrt(x), math.log(x)
    llx = math.log(lx)
    comps = (
        s * (1 / (2 * PI) - llx / (PI * lx) + 5.8 / lx),
        s * (1 / (8 * PI) - llx / (2 * PI * lx) + 3 / lx) * lx,
        s * (0.3 + 13.3 / lx),
    )
    return _report(x, "cor3", params, comps)


def corollary3_pi_bound(x: float, x_bar: float, params: FieldParams) -> float:
    return corollary3_report(x, x_bar, params).value


# ----------------------------------------------------------- optimization


def T_presets(x: float, T_min: float = 5.0) -> list[float]:
    r = math.sqrt(x) / math.log(x)
    cands = [8.0, x / 6, 4.8 * r, 8 * r, (10 / math.e) * r, (2 * PI / math.e**2) * r]
    return sorted({T for T in cands if T >= T_min})


def optimize_T(x: float, params: FieldParams, T_min: float = 5.0) -> tuple[float, BoundReport]:
    """Minimize theorem1_bound over T in [T_min, 10 x].

    A log-spaced scan plus the standard presets picks a bracket, then golden
    section on log T refines it to width 1e-6.  Ties go to the smaller T.
    """
    _need(x >= 3, f"optimize_T needs x >= 3, got x={x}")
    T_min = max(T_min, 5.0)
    T_max = max(10 * x, T_min)
    lo, hi = math.log(T_min), math.log(T_max)

    def to_T(logT):
        return min(max(math.exp(logT), T_min), T_max)

    def val(logT):
        return theorem1_bound(x, to_T(logT), params).value

    grid = [lo + (hi - lo) * i / 128 for i in range(129)]
    grid += [math.log(T) for T in T_presets(x, T_min) if T <= T_max]
    grid = sorted(set(grid))
    vals = [val(g) for g in grid]
    best_i = min(range(len(grid)), key=lambda i: (vals[i], grid[i]))
    best_logT, best_val = grid[best_i], vals[best_i]

    a = grid[max(best_i - 1, 0)]
    b = grid[min(best_i + 1, len(grid) - 1)]
    c, d = b - GOLDEN * (b - a), a + GOLDEN * (b - a)
    fc, fd = val(c), val(d)
    while b - a > LOG_T_TOL:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = val(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = val(d)
    for logT, v in ((c, fc), (d, fd)):
        if v < best_val or (v == best_val and logT < best_logT):
            best_logT, best_val = logT, v
    T_star = to_T(best_logT)
    return T_star, theorem1_bound(x, T_star, params)


def best_bound(x: float, params: FieldParams) -> BoundReport:
    """Smallest of all applicable bounds at x."""
    _need(x >= 3, f"best_bound needs x >= 3, got x={x}")
    cands = [optimize_T(x, params)[1], corollary2_bound(x, params, "general")]
    if x >= COR2_LARGE_X_MIN:
        cands.append(corollary2_bound(x, params, "large"))
    if params.n_K >= 2 and x >= cor1_x_floor(params.n_K):
        cands.append(corollary1_bound(x, params))
    if params.n_K == 1 and x >= SCHOENFELD_X_MIN:
        cands.append(schoenfeld_bound(x))
    return min(cands, key=lambda r: r.value)


def bound_by_kind(kind: str, x: float, params: FieldParams, T: float | None = None) -> BoundReport:
    """Dispatch used by the CLI and range verification."""
    if kind == "theorem1":
        return theorem1_bound(x, T, params) if T is not None else optimize_T(x, params)[1]
    if kind == "cor1":
        return corollary1_bound(x, params)
    if kind == "cor2_general":
        return corollary2_bound(x, params, "general")
    if kind == "cor2_large":
        return corollary2_bound(x, params, "large")
    if kind == "schoenfeld_Q":
        _need(params.n_K == 1, "schoenfeld_Q applies to the rationals only")
        return schoenfeld_bound(x)
    if kind == "best":
        return best_bound(x, params)
    raise DomainError(f"unknown bound kind {kind!r}")
