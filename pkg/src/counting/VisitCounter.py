from hashing.CountKey import CountKey
from utils.CounterBackend import CounterBackend


class VisitCounter:
    """
    Storage of visit counts n(.) indexed by CountKey. Absent keys count 0.
    A counter is owned by one experiment and mutated from a single thread.
    """

    def increment(self, key: CountKey) -> int:
        raise NotImplementedError("The method increment() has to be overridden in every child class.")

    def query(self, key: CountKey) -> int:
        raise NotImplementedError("The method query() has to be overridden in every child class.")

    def get_nb_distinct_keys(self) -> int:
        raise NotImplementedError("The method get_nb_distinct_keys() has to be overridden in every child class.")

    def get_nb_bytes(self) -> int:
        raise NotImplementedError("The method get_nb_bytes() has to be overridden in every child class.")

    def get_backend(self) -> CounterBackend:
        raise NotImplementedError("The method get_backend() has to be overridden in every child class.")
