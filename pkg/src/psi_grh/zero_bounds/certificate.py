"""The majorant certificate for the low-lying zero sum.

A certificate is a list of coefficients a_j attached to points s_j = 1 + j/2
such that F(gamma) = sum_j a_j f(s_j, gamma) dominates
g(gamma) = 2 (1 + 4 gamma^2)^(-1/2) on [-5, 5] (and 0 outside), with
f(s, gamma) = 4 (2s - 1) / ((2s - 1)^2 + 4 gamma^2).

The coefficients come from a square linear system (interpolation of g and g'
at chosen nodes plus a decay condition), solved at high precision and
rounded up to multiples of 1e-7.  Rounding up is safe: every f(s, .) is
positive, so increasing a coefficient can only increase F.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import mpmath as mp

from psi_grh.errors import DomainError, FieldFormatError, SingularSystem

SCALE = 10**7
GAMMA_CUT = 5
N_POS = 60975
N_CHECK = 128000

DEFAULT_NODES = tuple(
    Fraction(v)
    for v in ("0.6", "1", "1.9", "2.9", "3.9", "10", "13", "14", "15", "16", "17",
              "18", "19", "20", "30", "40", "50", "100", "1000", "10000", "100000", "1000000")
)

# a_j * 10^7, j = 1..47
REFERENCE_COEFFS = (
    -324328089,
    115693093357,
    -10579381239203,
    495540769876127,
    -14528281352885983,
    296347058332550155,
    -4498154499661073603,
    53248447239339829090,
    -508947342104081739447,
    4033084416071505510477,
    -27051470635668143949707,
    156121546937577920978167,
    -785529078417852387859619,
    3482495472267374521416188,
    -13720533216155265613103988,
    48375037637788872322025183,
    -153492067547835461489301521,
    440289327629182231371781424,
    -1145934878685670756527108765,
    2713965041058219158192688004,
    -5861973594145453618923885659,
    11566694720865120123031709900,
    -20874589384842483010331503670,
    34482298986730410055952580804,
    -52154912212245427675107284117,
    72227309752304735434420743120,
    -91546659026910381192366828396,
    106117853961289012764032450733,
    -112369546004525999862866475251,
    108533470948598920563558219043,
    -95431698456287244651252772381,
    76206788473674179730998288621,
    -55105812322315804526845019881,
    35955970546002972861665837368,
    -21079935102298710141936369413,
    11047616237574616067334355219,
    -5143709248575449263188160534,
    2111566552644017238627810350,
    -757162365842762640320305866,
    234379624034767935847527151,
    -61692234538384117080736694,
    13534020670767148307863583,
    -2407266538638620726296042,
    333452115133845423979326,
    -33740880236473501034280,
    2218003445878553284287,
    -71076474624305025203,
)


def certificate_points(count: int) -> tuple[Fraction, ...]:
    return tuple(1 + Fraction(j, 2) for j in range(1, count + 1))


@dataclass(frozen=True)
class MajorantCertificate:
    nodes: tuple[Fraction, ...]
    coefficients: tuple[int, ...]  # a_j * SCALE
    n_pos: int = N_POS
    n_check: int = N_CHECK

    @property
    def q(self) -> int:
        return len(self.nodes)

    @property
    def points(self) -> tuple[Fraction, ...]:
        return certificate_points(len(self.coefficients))

    @property
    def a(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, SCALE) for c in self.coefficients)

    def decay_residual(self) -> Fraction:
        """sum_j a_j (2 s_j - 1); zero before rounding."""
        return sum(a * (2 * s - 1) for a, s in zip(self.a, self.points))

    def decay_slack(self) -> Fraction:
        """Largest decay residual rounding up to 1e-7 can produce."""
        return sum((2 * s - 1) for s in self.points) / SCALE

    def validation_errors(self) -> list[str]:
        errs = []
        if len(self.coefficients) != 2 * self.q + 3:
            errs.append(f"expected {2 * self.q + 3} coefficients, got {len(self.coefficients)}")
        for j, c in enumerate(self.coefficients, 1):
            want_negative = j % 2 == 1
            if (c < 0) != want_negative or c == 0:
                errs.append(f"coefficient {j} breaks the alternating sign pattern")
                break
        if abs(self.decay_residual()) > self.decay_slack():
            errs.append("decay condition violated beyond rounding slack")
        return errs

    def with_coefficients(self, coefficients) -> "MajorantCertificate":
        return MajorantCertificate(self.nodes, tuple(int(c) for c in coefficients), self.n_pos, self.n_check)


def reference_certificate() -> MajorantCertificate:
    return MajorantCertificate(DEFAULT_NODES, REFERENCE_COEFFS)


# ------------------------------------------------------------ linear system


def _f(k, g):
    return 4 * k / (k * k + 4 * g * g)


def _df(k, g):
    return -32 * k * g / (k * k + 4 * g * g) ** 2


def _target(g):
    if g > GAMMA_CUT:
        return mp.mpf(0)
    return 2 / mp.sqrt(1 + 4 * g * g)


def _dtarget(g):
    if g > GAMMA_CUT:
        return mp.mpf(0)
    return -8 * g / (1 + 4 * g * g) ** mp.mpf(1.5)


def _mpf(x: Fraction):
    return mp.mpf(x.numerator) / x.denominator


def build_certificate_system(nodes, dps: int = 200):
    """Matrix and right-hand side of the 2q+3 interpolation conditions.

    Row order: value at 0, values at the nodes, value at 5, derivatives at
    the nodes, decay.  Must be called (or used) inside the same precision.
    """
    nodes = tuple(Fraction(x) for x in nodes)
    if len(set(nodes)) != len(nodes):
        raise DomainError("certificate nodes must be distinct")
    if any(x <= 0 for x in nodes):
        raise DomainError("certificate nodes must be positive")
    if GAMMA_CUT in nodes:
        raise DomainError("5 is already an interpolation point and cannot be a node")
    size = 2 * len(nodes) + 3
    with mp.workdps(dps):
        ks = [_mpf(2 * s - 1) for s in certificate_points(size)]
        gnodes = [_mpf(x) for x in nodes]
        rows, rhs = [], []
        for g in [mp.mpf(0)] + gnodes + [mp.mpf(GAMMA_CUT)]:
            rows.append([_f(k, g) for k in ks])
            rhs.append(_target(g))
        for g in gnodes:
            rows.append([_df(k, g) for k in ks])
            rhs.append(_dtarget(g))
        rows.append(list(ks))
        rhs.append(mp.mpf(0))
        return mp.matrix(rows), mp.matrix(rhs)


def solve_certificate_system(nodes, dps: int = 200, residual_tol: float = 1e-50):
    """High-precision solution (list of mpf) of the certificate system.

    Precision is doubled (up to 3 times) whenever the residual check fails.
    """
    for attempt in range(4):
        work = dps * 2**attempt
        with mp.workdps(work):
            A, b = build_certificate_system(nodes, work)
            try:
                x = mp.lu_solve(A, b)
            except ZeroDivisionError as exc:
                raise SingularSystem(str(exc)) from exc
            res = mp.norm(A * x - b, mp.inf)
            if res < residual_tol:
                return [+x[i] for i in range(x.rows)]
    raise SingularSystem(f"residual {mp.nstr(res, 5)} above {residual_tol} at {work} digits")


def round_up(values, scale: int = SCALE) -> tuple[int, ...]:
    return tuple(int(mp.ceil(v * scale)) for v in values)


def solve_certificate(nodes=DEFAULT_NODES, dps: int = 200) -> MajorantCertificate:
    """Solve the system and round each coefficient toward +infinity to 1e-7."""
    with mp.workdps(dps):
        sol = solve_certificate_system(nodes, dps)
        coeffs = round_up(sol)
    return MajorantCertificate(tuple(Fraction(x) for x in nodes), coeffs)


def reference_mismatches(cert: MajorantCertificate) -> list[tuple[int, int, int]]:
    """(j, got, expected) for every coefficient differing from the published table."""
    out = [(j, c, t) for j, (c, t) in enumerate(zip(cert.coefficients, REFERENCE_COEFFS), 1) if c != t]
    if len(cert.coefficients) != len(REFERENCE_COEFFS):
        out.append((0, len(cert.coefficients), len(REFERENCE_COEFFS)))
    return out


# ---------------------------------------------------------------- file I/O


def _format_node(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    den = x.denominator
    k = 0
    while den % 10 and (10**k) % den:
        k += 1
        if k > 60:
            return f"{x.numerator}/{x.denominator}"
    k = 0
    while (x * 10**k).denominator != 1:
        k += 1
        if k > 60:
            return f"{x.numerator}/{x.denominator}"
    digits = str(abs(x.numerator) * 10**k // x.denominator).rjust(k + 1, "0")
    sign = "-" if x < 0 else ""
    return f"{sign}{digits[:-k]}.{digits[-k:]}"


def format_certificate(cert: MajorantCertificate) -> str:
    lines = [f"lemma3-cert q={cert.q}"]
    lines += [f"node {_format_node(x)}" for x in cert.nodes]
    lines += [f"coef {j} {c}" for j, c in enumerate(cert.coefficients, 1)]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> MajorantCertificate:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("lemma3-cert"):
        raise FieldFormatError("certificate must start with 'lemma3-cert q=<q>'")
    try:
        q = int(lines[0].split("q=", 1)[1])
    except (IndexError, ValueError) as exc:
        raise FieldFormatError(f"bad header {lines[0]!r}") from exc
    nodes, coefs = [], {}
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "node" and len(parts) == 2:
            nodes.append(Fraction(parts[1]))
        elif parts[0] == "coef" and len(parts) == 3:
            coefs[int(parts[1])] = int(parts[2])
        else:
            raise FieldFormatError(f"unrecognised certificate line {ln!r}")
    if len(nodes) != q:
        raise FieldFormatError(f"header says q={q} but {len(nodes)} nodes given")
    if sorted(coefs) != list(range(1, len(coefs) + 1)):
        raise FieldFormatError("coefficient indices must be 1..J without gaps")
    return MajorantCertificate(tuple(nodes), tuple(coefs[j] for j in sorted(coefs)))


def write_certificate(cert: MajorantCertificate, path: str | Path) -> None:
    Path(path).write_text(format_certificate(cert))


def read_certificate(path: str | Path) -> MajorantCertificate:
    return parse_certificate(Path(path).read_text())
