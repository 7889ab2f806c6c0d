import math
from typing import Iterable

import mmh3
import numpy as np

from hashing.CountKey import CountKey
from counting.VisitCounter import VisitCounter
from utils.CounterBackend import CounterBackend
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.PrimeSet import PrimeSet
from utils.constants import MAX_COUNT, PRIMES_6M, PRIMES_6K, PRIMES_90M_BOUND, NB_PRIMES_PER_SET
from utils.utils import is_prime, largest_primes_below


class CountMinSketch(VisitCounter):
    """
    Count-Min sketch with counting-Bloom-filter semantics: l rows, row j is an array of p^j unsigned counts
    indexed by phi^j(s) = phi(s) mod p^j. The count of a key is the minimum over its l cells, hence never lower
    than its true count.

    The key bytes are first folded to a 64-bit integer with MurmurHash3 (x64, 128-bit variant, first 64 bits,
    seed 0), then reduced modulo every prime.
    """

    def __init__(self, primes: Iterable[int]):
        self.primes = tuple(int(prime) for prime in primes)
        CountMinSketch.check_primes(primes=self.primes)
        self.arrays = [np.zeros(prime, dtype=np.uint64) for prime in self.primes]
        self.nb_new_keys = 0  # increments that returned 1, i.e., keys seen for the first time

    @staticmethod
    def check_primes(primes: tuple[int, ...]) -> None:
        if len(primes) == 0:
            raise ExplorationError(ErrorKind.INVALID_PRIMES, "A Count-Min sketch needs at least one prime.")
        if len(set(primes)) != len(primes):
            raise ExplorationError(ErrorKind.INVALID_PRIMES, "The primes of a Count-Min sketch must be distinct, got %s." % (primes, ))
        for prime in primes:
            if not is_prime(prime):
                raise ExplorationError(ErrorKind.INVALID_PRIMES, "%s is not a prime number." % prime)

    @staticmethod
    def primes_of(prime_set: PrimeSet) -> tuple[int, ...]:
        if prime_set == PrimeSet.SIX_M:
            return PRIMES_6M
        elif prime_set == PrimeSet.NINETY_M:
            return largest_primes_below(bound=PRIMES_90M_BOUND, count=NB_PRIMES_PER_SET)
        else:
            return PRIMES_6K

    @staticmethod
    def fold_key(key_bytes: bytes) -> int:
        return mmh3.hash64(key_bytes, seed=0, signed=False)[0]

    def row_indices(self, folded: int) -> list[int]:
        return [folded % prime for prime in self.primes]

    def row_indices_of_many(self, folded: np.ndarray) -> np.ndarray:
        """
        Vectorized residues of many folded keys.
        :param folded: A numpy array of uint64 folded keys, of any shape.
        :return: A numpy array of shape (l, *folded.shape) with the residues modulo each prime.
        """
        folded = np.asarray(folded, dtype=np.uint64)
        return np.stack([folded % np.uint64(prime) for prime in self.primes])

    def increment(self, key: CountKey) -> int:
        indices = self.row_indices(folded=CountMinSketch.fold_key(key_bytes=key.key_bytes))
        for row, index in zip(self.arrays, indices):
            if int(row[index]) >= MAX_COUNT:
                raise ExplorationError(ErrorKind.COUNT_OVERFLOW, "A sketch cell would exceed 2^64 - 1.")
        for row, index in zip(self.arrays, indices):
            row[index] += np.uint64(1)
        count = min(int(row[index]) for row, index in zip(self.arrays, indices))
        if count == 1:
            self.nb_new_keys += 1
        return count

    def query(self, key: CountKey) -> int:
        indices = self.row_indices(folded=CountMinSketch.fold_key(key_bytes=key.key_bytes))
        return min(int(row[index]) for row, index in zip(self.arrays, indices))

    def get_nb_rows(self) -> int:
        return len(self.primes)

    def get_nb_distinct_keys(self) -> int:
        return self.nb_new_keys

    def get_nb_bytes(self) -> int:
        return sum(int(row.nbytes) for row in self.arrays)

    def get_backend(self) -> CounterBackend:
        return CounterBackend.COUNT_MIN

    @staticmethod
    def overcount_probability(nb_inserted: int, primes: Iterable[int]) -> float:
        """
        Probability that a never-inserted key reports a positive count after nb_inserted uniformly hashed
        insertions: the product over rows of (1 - e^{-N/p^j}), which is (1 - e^{-N/p})^l when all p^j are close to p.
        """
        probability = 1.0
        for prime in primes:
            probability *= 1.0 - math.exp(-nb_inserted / prime)
        return probability
