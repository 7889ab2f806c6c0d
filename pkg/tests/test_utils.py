import math

import numpy as np
import pytest

from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.TimeMeasurer import TimeMeasurer
from utils.constants import PRIMES_6K, PRIMES_6M
from utils.utils import is_not_empty, as_real_vector, is_prime, largest_primes_below, mix64, derive_seed, new_generator, \
    parse_bool, parse_int_list, parse_float_list, format_value, median_with_inf


class TestUtils:
    def test_is_not_empty(self):
        assert is_not_empty(0)
        assert is_not_empty("a")
        assert not is_not_empty("")
        assert not is_not_empty([])
        assert not is_not_empty(np.array([]))
        assert not is_not_empty(None)

    def test_as_real_vector(self):
        assert as_real_vector(x=[1, 2], expected_length=2, what="vector").dtype == np.float64
        with pytest.raises(ExplorationError) as error:
            as_real_vector(x=[1, 2, 3], expected_length=2, what="vector")
        assert error.value.kind == ErrorKind.DIMENSION_MISMATCH
        with pytest.raises(ExplorationError) as error:
            as_real_vector(x=[1, np.nan], expected_length=2, what="vector")
        assert error.value.kind == ErrorKind.NON_FINITE_INPUT

    def test_is_prime(self):
        assert [number for number in range(20) if is_prime(number)] == [2, 3, 5, 7, 11, 13, 17, 19]
        assert all(is_prime(prime) for prime in PRIMES_6M)

    def test_largest_primes_below(self):
        assert largest_primes_below(bound=1000, count=6) == PRIMES_6K
        assert largest_primes_below(bound=10, count=2) == (5, 7)

    def test_mix64(self):
        assert mix64(0) == 0xE220A8397B1DCDAF
        assert 0 <= mix64(2 ** 64 - 1) < 2 ** 64

    def test_derive_seed(self):
        assert derive_seed(7, 1) == derive_seed(7, 1)
        assert derive_seed(7, 1) != derive_seed(7, 2)
        assert derive_seed(7, 1) != derive_seed(8, 1)
        assert len({derive_seed(0, index) for index in range(1000)}) == 1000

    def test_new_generator(self):
        assert new_generator(3).random() == new_generator(3).random()
        assert isinstance(new_generator(3).bit_generator, np.random.PCG64)

    def test_parse_bool(self):
        assert parse_bool(" True ")
        assert parse_bool("yes")
        assert not parse_bool("0")
        with pytest.raises(ValueError):
            parse_bool("maybe")

    def test_parse_lists(self):
        assert parse_int_list("4, 16,64") == [4, 16, 64]
        assert parse_int_list("") == []
        assert parse_float_list("0.5,2") == [0.5, 2.0]
        with pytest.raises(ValueError):
            parse_int_list("4,a")

    def test_format_value(self):
        assert format_value(True) == "true"
        assert format_value(False) == "false"
        assert format_value(0.1) == "0.1"
        assert format_value(math.inf) == "inf"
        assert format_value([1, 2]) == "1,2"
        assert format_value("chain") == "chain"
        assert parse_float_list(format_value([0.1, 1e-7])) == [0.1, 1e-7]

    def test_median_with_inf(self):
        assert median_with_inf([1.0, 3.0, math.inf]) == 3.0
        assert median_with_inf([1.0, math.inf, math.inf]) == math.inf
        assert median_with_inf([]) == math.inf


class TestTimeMeasurer:
    def test_measure(self):
        time_measurer = TimeMeasurer()
        time_measurer.start()
        assert time_measurer.stop() >= 0.0
        assert time_measurer.get_measure() >= 0.0

    def test_context_manager(self):
        with TimeMeasurer() as time_measurer:
            sum(range(1000))
        assert time_measurer.get_measure() >= 0.0
