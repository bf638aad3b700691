import pytest

from fnfdecomp import validate_hankel_spec, validate_toeplitz_spec
from fnfdecomp.core import DenseMatrix

FIG1_ROW = [0, 0, 3, 0, 8, 0, 9]
FIG1_MATRIX = [
    [0, 0, 3, 0, 8, 0, 9],
    [0, 0, 0, 3, 0, 8, 0],
    [3, 0, 0, 0, 3, 0, 8],
    [0, 3, 0, 0, 0, 3, 0],
    [8, 0, 3, 0, 0, 0, 3],
    [0, 8, 0, 3, 0, 0, 0],
    [9, 0, 8, 0, 3, 0, 0],
]
# the displayed matrix: first row then the rest of the last column
FIG2_ANTIDIAG = [0, 0, 3, 5, 0, 0, 0, 0, 0, 0, 0, 2, 2, 4, 0]
FIG2_MATRIX = [
    [0, 0, 3, 5, 0, 0, 0, 0],
    [0, 3, 5, 0, 0, 0, 0, 0],
    [3, 5, 0, 0, 0, 0, 0, 0],
    [5, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 2, 2],
    [0, 0, 0, 0, 0, 2, 2, 4],
    [0, 0, 0, 0, 2, 2, 4, 0],
]


@pytest.fixture
def fig1():
    return validate_toeplitz_spec(FIG1_ROW)


@pytest.fixture
def fig2():
    return validate_hankel_spec(FIG2_ANTIDIAG)


@pytest.fixture
def fig1_dense():
    return DenseMatrix.from_rows(FIG1_MATRIX)


@pytest.fixture
def fig2_dense():
    return DenseMatrix.from_rows(FIG2_MATRIX)


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for name, value in report.user_properties:
        if name == "criterion":
            _criteria[value] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{_criteria[label]}  {label}")
