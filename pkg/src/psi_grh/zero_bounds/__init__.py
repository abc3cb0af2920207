"""Bounds for sums over zeros and the majorant certificate behind them."""

from psi_grh.zero_bounds.certificate import (
    DEFAULT_NODES,
    REFERENCE_COEFFS,
    MajorantCertificate,
    build_certificate_system,
    format_certificate,
    reference_certificate,
    parse_certificate,
    read_certificate,
    solve_certificate,
    reference_mismatches,
    write_certificate,
)
from psi_grh.zero_bounds.majorization import MajorizationReport, verify_majorant, verify_majorization
from psi_grh.zero_bounds.prime_sum import (
    CertificateConstants,
    check_sign_pattern,
    closure_report,
    verify_prime_sum,
)
from psi_grh.zero_bounds.sums import (
    TRUDGIAN,
    TrudgianConstants,
    first_moment_bound,
    low_lying_sum_bound,
    tail_inverse_square_bound,
    zero_count_upper,
    zero_count_window,
)
