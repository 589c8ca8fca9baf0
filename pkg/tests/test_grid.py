from pathlib import Path

import numpy as np
import pytest

from fracnabla.formats import read_gridfn_csv, write_gridfn_csv
from fracnabla.grid import (
    GridFn,
    UniformGrid,
    holder_error,
    holder_seminorm,
    modulus,
    sample,
)
from fracnabla.types import CsvParseError, DimensionError, DomainError, EvaluationError


@pytest.fixture()
def rough() -> GridFn:
    grid = UniformGrid.from_exponent(6)
    t = grid.nodes
    return GridFn(grid, t**0.3 * np.cos(9 * t) + 0.2 * t**2)


def test_grid_nodes() -> None:
    grid = UniformGrid(0.25)
    assert grid.n == 4
    assert grid.nodes.tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]
    uneven = UniformGrid(0.3)
    assert uneven.n == 3
    assert uneven.n * uneven.h <= 1.0 < (uneven.n + 1) * uneven.h
    assert UniformGrid.from_exponent(10).n == 1024
    assert UniformGrid.from_exponent(3).refine(4) == UniformGrid.from_exponent(5)


@pytest.mark.parametrize("h", [0.0, 1.0, -0.1, float("inf")])
def test_grid_rejects_bad_step(h: float) -> None:
    with pytest.raises(DomainError):
        UniformGrid(h)


def test_sample_examples() -> None:
    assert sample(lambda t: np.zeros_like(t), UniformGrid(0.25)).values.tolist() == [0.0] * 5
    assert sample(lambda t: t, UniformGrid(0.25)).values.tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert sample(lambda t: t**2, UniformGrid(0.5)).values.tolist() == [0.0, 0.25, 1.0]
    # scalar results broadcast over the nodes
    assert sample(lambda t: 3.0, UniformGrid(0.5)).values.tolist() == [3.0, 3.0, 3.0]


def test_sample_reports_bad_node() -> None:
    with pytest.raises(EvaluationError) as excinfo:
        sample(lambda t: 1.0 / (t - 0.5), UniformGrid(0.25))
    assert excinfo.value.index == 2
    assert excinfo.value.t == 0.5


def test_gridfn_shape_checked() -> None:
    with pytest.raises(DimensionError):
        GridFn(UniformGrid(0.25), np.zeros(4))


def test_holder_seminorm_examples() -> None:
    assert holder_seminorm(sample(lambda t: t, UniformGrid(0.5)), 0.5) == pytest.approx(1.0)
    for beta in (0.1, 0.5, 0.9):
        g = sample(lambda t: t**beta, UniformGrid(2.0**-7))
        assert holder_seminorm(g, beta) == pytest.approx(1.0, rel=1e-12)
    assert holder_seminorm(sample(lambda t: 2.0 + 0 * t, UniformGrid(0.1)), 0.3) == 0.0


def test_holder_seminorm_properties(rough: GridFn) -> None:
    other = GridFn(rough.grid, np.sin(5 * rough.nodes))
    beta = 0.2
    assert holder_seminorm(rough + other, beta) <= (
        holder_seminorm(rough, beta) + holder_seminorm(other, beta)
    ) * (1 + 1e-12)
    assert holder_seminorm(-3.5 * rough, beta) == pytest.approx(3.5 * holder_seminorm(rough, beta))
    # sup-norm domination needs v_0 = 0
    assert rough.is_holder_element()
    assert np.max(np.abs(rough.values)) <= holder_seminorm(rough, beta)


def test_modulus(rough: GridFn) -> None:
    beta = 0.1
    assert modulus(rough, beta, 1.0) == holder_seminorm(rough, beta)
    assert modulus(rough, beta, 5.0) == holder_seminorm(rough, beta)
    deltas = [rough.h, 2 * rough.h, 0.1, 0.5, 1.0]
    values = [modulus(rough, beta, d) for d in deltas]
    assert values == sorted(values)
    constant = GridFn(rough.grid, np.ones(rough.grid.n + 1))
    assert modulus(constant, beta, 0.2) == 0.0
    with pytest.raises(DomainError):
        modulus(rough, beta, 0.0)


def test_modulus_of_identity_is_small() -> None:
    grid = UniformGrid.from_exponent(8)
    h = grid.h
    assert modulus(sample(lambda t: t, grid), 0.1, h) <= h**0.9 * (1 + 1e-12)


def test_holder_error(rough: GridFn) -> None:
    assert holder_error(rough, rough, 0.1) == 0.0
    with pytest.raises(DimensionError):
        holder_error(rough, sample(lambda t: t, UniformGrid(0.25)), 0.1)


def test_gridfn_csv(tmp_path: Path, rough: GridFn) -> None:
    path = tmp_path / "rough.csv"
    write_gridfn_csv(rough, path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "t,value"
    assert len(lines) == rough.grid.n + 2
    loaded = read_gridfn_csv(path)
    assert loaded.grid == rough.grid
    np.testing.assert_array_equal(loaded.values, rough.values)


@pytest.mark.parametrize(
    "text, line",
    [
        ("x,y\n0,0\n", 1),
        ("t,value\n0,0\n0.5,abc\n1,1\n", 3),
        ("t,value\n0,0\n0.5,1,2\n1,1\n", 3),
        ("t,value\n0,0\n0.25,1\n0.6,1\n0.75,0\n1,0\n", 4),
    ],
)
def test_gridfn_csv_errors(tmp_path: Path, text: str, line: int) -> None:
    path = tmp_path / "bad.csv"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(CsvParseError) as excinfo:
        read_gridfn_csv(path)
    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"line {line}:")
