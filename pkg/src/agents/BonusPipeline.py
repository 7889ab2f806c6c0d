from agents.Trajectory import Trajectory
from counting.BonusConfig import BonusConfig
from counting.PhaseCheckedCounter import PhaseCheckedCounter
from counting.VisitCounter import VisitCounter
from hashing.StateHasher import StateHasher
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.setup_logger import log


class BonusPipeline:
    """
    Turn a batch of trajectories into bonus-augmented trajectories: hash every visited state, count all of them,
    then give each step the bonus beta / sqrt(n) of its key with the updated counts.
    Without a hasher (the baseline agent), bonuses stay at 0 and nothing is counted.
    """

    def __init__(self, hasher: StateHasher | None, counter: VisitCounter | None, bonus_config: BonusConfig):
        self.hasher = hasher
        self.counter = PhaseCheckedCounter(counter=counter) if counter is not None else None
        self.bonus_config = bonus_config

    def is_enabled(self) -> bool:
        return self.hasher is not None and self.counter is not None

    def apply_bonus(self, trajectories: list[Trajectory]) -> list[Trajectory]:
        if not self.is_enabled():
            return trajectories
        true_returns = [trajectory.get_return_true() for trajectory in trajectories]

        # counting only looks at the state in which each action was taken
        keys = []
        for trajectory in trajectories:
            keys.append([self.bonus_config.make_key(code=self.hasher.code(observation), action=action)
                         for observation, action in zip(trajectory.get_visited_observations(), trajectory.actions)])

        # every increment of the batch precedes every query
        self.counter.start_counting()
        for trajectory_keys in keys:
            for key in trajectory_keys:
                self.counter.increment(key=key)
        self.counter.start_querying()
        for trajectory, trajectory_keys in zip(trajectories, keys):
            trajectory.bonuses = [self.bonus_config.bonus(count=self.counter.query(key=key)) for key in trajectory_keys]
        self.counter.finish()

        for trajectory, true_return in zip(trajectories, true_returns):
            if trajectory.get_return_true() != true_return:
                raise ExplorationError(ErrorKind.BONUS_LEAKAGE, "An exploration bonus leaked into the true return of an episode.")
        log.debug("%s keys counted, %s distinct keys so far", sum(len(trajectory_keys) for trajectory_keys in keys),
                  self.counter.get_nb_distinct_keys())
        return trajectories

    def get_nb_distinct_keys(self) -> int:
        return self.counter.get_nb_distinct_keys() if self.counter is not None else 0

    def get_nb_bytes(self) -> int:
        return self.counter.get_nb_bytes() if self.counter is not None else 0

    def get_counter(self) -> VisitCounter | None:
        return self.counter.counter if self.counter is not None else None
