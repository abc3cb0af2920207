import pytest

from psi_grh.field_params import FieldDefinition
from psi_grh.zero_bounds.certificate import reference_certificate

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, title: str, passed: bool, detail: str = "") -> None:
    line = f"[criterion {number:>2}] {'PASS' if passed else 'FAIL'}  {title}"
    if detail:
        line += f"  ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def table_cert():
    return reference_certificate()


@pytest.fixture(scope="session")
def test_fields():
    """Small fields with maximal polynomial orders, plus two quadratic ones."""
    return {
        "Q": FieldDefinition.from_polynomial([0, 1]),
        "Qi": FieldDefinition.quadratic(-4),
        "Qsqrt5": FieldDefinition.quadratic(5),
        "Qsqrt-23": FieldDefinition.quadratic(-23),
        "cubic23": FieldDefinition.from_polynomial([-1, -1, 0, 1]),
        "pure_cubic2": FieldDefinition.from_polynomial([-2, 0, 0, 1]),
        "cyclotomic8": FieldDefinition.from_polynomial([1, 0, 0, 0, 1]),
    }
