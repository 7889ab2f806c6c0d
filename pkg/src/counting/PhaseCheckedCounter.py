from enum import Enum

from hashing.CountKey import CountKey
from counting.VisitCounter import VisitCounter
from utils.CounterBackend import CounterBackend
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError


class CounterPhase(Enum):
    IDLE = "idle"
    COUNTING = "counting"
    QUERYING = "querying"


class PhaseCheckedCounter(VisitCounter):
    """
    Wrap a counter and check that, within an iteration, every increment precedes every bonus query:
    increments are only allowed in the COUNTING phase, queries only in the QUERYING phase.
    """

    def __init__(self, counter: VisitCounter):
        self.counter = counter
        self.phase = CounterPhase.IDLE

    def start_counting(self) -> None:
        self.phase = CounterPhase.COUNTING

    def start_querying(self) -> None:
        if self.phase != CounterPhase.COUNTING:
            raise ExplorationError(ErrorKind.PHASE_VIOLATION, "Bonus queries must follow the counting phase.")
        self.phase = CounterPhase.QUERYING

    def finish(self) -> None:
        self.phase = CounterPhase.IDLE

    def increment(self, key: CountKey) -> int:
        if self.phase != CounterPhase.COUNTING:
            raise ExplorationError(ErrorKind.PHASE_VIOLATION, "Increment outside of the counting phase (phase is %s)." % self.phase.value)
        return self.counter.increment(key=key)

    def query(self, key: CountKey) -> int:
        if self.phase != CounterPhase.QUERYING:
            raise ExplorationError(ErrorKind.PHASE_VIOLATION, "Query outside of the querying phase (phase is %s)." % self.phase.value)
        return self.counter.query(key=key)

    def get_nb_distinct_keys(self) -> int:
        return self.counter.get_nb_distinct_keys()

    def get_nb_bytes(self) -> int:
        return self.counter.get_nb_bytes()

    def get_backend(self) -> CounterBackend:
        return self.counter.get_backend()
