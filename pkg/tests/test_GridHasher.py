import numpy as np
import pytest
from hypothesis import given, strategies as st

from hashing.GridHashConfig import GridHashConfig
from hashing.GridHasher import GridHasher
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError


class TestGridHasher:
    def test_floor(self):
        hasher = GridHasher(config=GridHashConfig(grid_sizes=(0.5, 0.5)))
        assert hasher.hash([0.5, 1.5]).tolist() == [1, 3]

    def test_negative_values(self):
        hasher = GridHasher(config=GridHashConfig(grid_sizes=(1.0, )))
        assert hasher.hash([-0.1]).tolist() == [-1]
        assert hasher.hash([0.0]).tolist() == [0]

    def test_empty_grid(self):
        with pytest.raises(ExplorationError) as error:
            GridHashConfig(grid_sizes=())
        assert error.value.kind == ErrorKind.INVALID_DIMENSION

    def test_non_positive_grid_size(self):
        for grid_sizes in [(0.0, ), (1.0, -1.0), (float("inf"), )]:
            with pytest.raises(ExplorationError) as error:
                GridHashConfig(grid_sizes=grid_sizes)
            assert error.value.kind == ErrorKind.NON_POSITIVE_GRID_SIZE

    def test_dimension_mismatch(self):
        hasher = GridHasher(config=GridHashConfig(grid_sizes=(1.0, 1.0)))
        with pytest.raises(ExplorationError) as error:
            hasher.hash([1.0, 2.0, 3.0])
        assert error.value.kind == ErrorKind.DIMENSION_MISMATCH

    @given(st.lists(st.integers(min_value=-1000, max_value=1000), min_size=2, max_size=2),
           st.sampled_from([0.25, 0.5, 1.0, 2.0, 5.0, 10.0]))
    def test_cell_corners_are_idempotent(self, cell, grid_size):
        hasher = GridHasher(config=GridHashConfig(grid_sizes=(grid_size, grid_size)))
        corner = np.array(cell, dtype=np.float64) * grid_size
        assert hasher.hash(corner).tolist() == cell

    @given(st.lists(st.floats(min_value=-50, max_value=50), min_size=2, max_size=2))
    def test_points_of_a_cell_share_its_code(self, point):
        hasher = GridHasher(config=GridHashConfig(grid_sizes=(0.5, 2.0)))
        code = hasher.hash(point)
        assert np.all(code * np.array([0.5, 2.0]) <= np.array(point))
        assert np.all(np.array(point) < (code + 1) * np.array([0.5, 2.0]))
