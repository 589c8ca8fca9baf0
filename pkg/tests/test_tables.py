import pytest

from fracnabla.config import SolverSettings
from fracnabla.formats import render_markdown
from fracnabla.pipelines import ConvergenceRow, convergence_table
from fracnabla.types import DomainError

TABLE1 = [0.0079082, 0.0040833, 0.0021392, 0.0011478, 0.0006054, 0.0003150, 0.0001622]
TABLE2 = {
    0.1: [0.0347581, 0.0269360, 0.0206910, 0.0158085, 0.0120388, 0.0091502, 0.0069465],
    0.01: [0.0224598, 0.0163528, 0.0118018, 0.0084716, 0.0060613, 0.0043283, 0.0030872],
}


@pytest.fixture(scope="module")
def table1() -> list[ConvergenceRow]:
    return convergence_table("example1", mu=1.5, alpha=0.3, beta=0.1, h_exponents=range(6, 13))


@pytest.fixture(scope="module")
def table2() -> list[ConvergenceRow]:
    return convergence_table("example2", alpha=0.5, beta=[0.1, 0.01], h_exponents=range(7, 14))


def test_table1_values(table1: list[ConvergenceRow]) -> None:
    assert [row.exponent for row in table1] == list(range(6, 13))
    for row, expected in zip(table1, TABLE1):
        assert row.error == pytest.approx(expected, abs=2e-5)


def test_table1_rate(table1: list[ConvergenceRow]) -> None:
    errors = [row.error for row in table1]
    ratios = [b / a for a, b in zip(errors, errors[1:])]
    assert all(ratio <= 0.62 for ratio in ratios)


def test_table2_values(table2: list[ConvergenceRow]) -> None:
    assert len(table2) == 14
    for beta, expected in TABLE2.items():
        errors = [row.error for row in table2 if row.beta == beta]
        assert len(errors) == 7
        for value, reference in zip(errors, expected):
            assert value == pytest.approx(reference, abs=1e-6)
        assert all(b < a for a, b in zip(errors, errors[1:]))


def test_table2_smaller_beta_gives_smaller_error(table2: list[ConvergenceRow]) -> None:
    coarse = {row.exponent: row.error for row in table2 if row.beta == 0.1}
    fine = {row.exponent: row.error for row in table2 if row.beta == 0.01}
    assert all(fine[m] < coarse[m] for m in coarse)


def test_default_scheme_is_implicit() -> None:
    assert SolverSettings().scheme == "implicit"


def test_explicit_scheme_converges() -> None:
    rows = convergence_table(
        "example2", alpha=0.5, beta=0.1, h_exponents=[6, 7, 8], scheme="explicit"
    )
    errors = [row.error for row in rows]
    assert all(error > 0 for error in errors)
    assert all(b < a for a, b in zip(errors, errors[1:]))
    implicit = convergence_table("example2", alpha=0.5, beta=0.1, h_exponents=[7])
    assert errors[1] != implicit[0].error


@pytest.mark.parametrize("kind", ["example1", "example2"])
def test_identical_comparison_is_zero(kind: str) -> None:
    rows = convergence_table(
        kind, alpha=0.5, beta=[0.1, 0.3], h_exponents=[4, 5], mu=1.5, compare_identical=True
    )
    assert len(rows) == 4
    assert all(row.error == 0.0 for row in rows)


def test_table_is_deterministic() -> None:
    first = convergence_table("example2", alpha=0.5, beta=0.1, h_exponents=[5, 6])
    second = convergence_table("example2", alpha=0.5, beta=0.1, h_exponents=[5, 6])
    assert first == second


def test_table_argument_errors() -> None:
    with pytest.raises(DomainError):
        convergence_table("example1", alpha=0.3, beta=[], h_exponents=[6])
    with pytest.raises(DomainError):
        convergence_table("example1", alpha=0.3, beta=0.1, h_exponents=[])
    with pytest.raises(DomainError):
        convergence_table("example3", alpha=0.3, beta=0.1, h_exponents=[6])
    with pytest.raises(DomainError):
        convergence_table("example2", alpha=0.5, beta=0.1, h_exponents=[4], scheme="adams")


def test_render_markdown() -> None:
    rows = [
        ConvergenceRow(h=2.0**-7, error=0.03475812, beta=0.1, exponent=7),
        ConvergenceRow(h=2.0**-8, error=0.0269360, beta=0.1, exponent=8),
        ConvergenceRow(h=2.0**-7, error=0.0224598, beta=0.01, exponent=7),
        ConvergenceRow(h=2.0**-8, error=0.0163528, beta=0.01, exponent=8),
    ]
    lines = render_markdown(rows).splitlines()
    assert lines[0] == "| h | Errors for beta=0.1 | Errors for beta=0.01 |"
    assert lines[2] == "| 2^-7 | 0.0347581 | 0.0224598 |"
    assert len(lines) == 4
    single = render_markdown(rows[:2]).splitlines()
    assert single[0] == "| h | Error |"


def test_csv_row() -> None:
    assert ConvergenceRow(h=2.0**-6, error=0.5, beta=0.1, exponent=6).csv_row() == ("2^-6", 0.1, 0.5)
