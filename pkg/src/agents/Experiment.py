import math

import numpy as np

from agents.Agent import Agent
from agents.BonusPipeline import BonusPipeline
from agents.QLearningAgent import QLearningAgent
from agents.ReinforceAgent import ReinforceAgent
from agents.Rollout import Rollout
from agents.SoftmaxPolicy import SoftmaxPolicy
from agents.Trajectory import Trajectory
from autoencoder.AutoencoderModel import AutoencoderModel
from autoencoder.LearnedHasher import LearnedHasher
from autoencoder.ReplayPool import ReplayPool
from config.ExperimentConfig import ExperimentConfig
from counting.BonusConfig import BonusConfig
from counting.CountMinSketch import CountMinSketch
from counting.ExactCounter import ExactCounter
from counting.VisitCounter import VisitCounter
from envs.EnvironmentFactory import EnvironmentFactory
from harness.MetricsRow import MetricsRow
from hashing.BassConfig import BassConfig
from hashing.BassHasher import BassHasher
from hashing.CountKey import CountKey
from hashing.GridHashConfig import GridHashConfig
from hashing.GridHasher import GridHasher
from hashing.SimHasher import SimHasher
from hashing.StateHasher import StateHasher
from utils.AgentKind import AgentKind
from utils.CounterBackend import CounterBackend
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.HasherKind import HasherKind
from utils.QStateKey import QStateKey
from utils.TimeMeasurer import TimeMeasurer
from utils.setup_logger import log
from utils.utils import derive_seed, new_generator

# independent random streams of a run, derived from its seed
AGENT_STREAM = 0
HASH_STREAM = 1
AE_INIT_STREAM = 2
AE_TRAINING_STREAM = 3


class Experiment:
    """
    One seed of an experiment: for each iteration, collect a batch with the current policy, retrain the
    autoencoder every ae_update_every iterations (learned hashing only), hash and count the visited states,
    compute the bonuses and update the agent.
    """

    def __init__(self, config: ExperimentConfig, seed: int):
        self.config = config
        self.seed = seed
        self.env = EnvironmentFactory.create(config=config, seed=seed)
        self.spec = self.env.get_spec()
        self.agent_rng = new_generator(derive_seed(seed, AGENT_STREAM))

        self.model = None
        self.optimizer = None
        self.replay_pool = None
        self.ae_rng = None
        self.last_ae_loss = None
        self.hasher = self.build_hasher()
        self.counter = self.build_counter()
        self.pipeline = BonusPipeline(hasher=self.hasher, counter=self.counter,
                                      bonus_config=BonusConfig(beta=config.get_beta(), count_mode=config.get_count_mode()))
        self.agent = self.build_agent()
        self.rollout = Rollout(env=self.env, agent=self.agent)
        self.first_goal_iteration = None
        self.final_mean_return = 0.0
        self.rows = []

    def build_hasher(self) -> StateHasher | None:
        hasher_kind = self.config.get_hasher()
        hash_seed = derive_seed(self.seed, HASH_STREAM)
        observation_dim = self.spec.get_observation_dim()
        if hasher_kind == HasherKind.SIMHASH:
            return SimHasher(k=self.config.get_hash_k(), input_dim=observation_dim, seed=hash_seed)
        elif hasher_kind == HasherKind.BASS:
            bass_config = BassConfig(cell_size=self.config.get_bass_cell_size(), nb_bins=self.config.get_bass_bins())
            simhasher = None
            if self.config.get_bass_simhash():
                nb_cells = observation_dim // (bass_config.cell_size * bass_config.cell_size)
                simhasher = SimHasher(k=self.config.get_hash_k(), input_dim=nb_cells, seed=hash_seed)
            return BassHasher(config=bass_config, simhasher=simhasher)
        elif hasher_kind == HasherKind.GRID:
            grid_sizes = self.config.get_grid_sizes()
            if len(grid_sizes) == 1:
                grid_sizes = grid_sizes * observation_dim
            return GridHasher(config=GridHashConfig(grid_sizes=tuple(grid_sizes)))
        elif hasher_kind == HasherKind.LEARNED:
            self.model = AutoencoderModel(input_dim=observation_dim, hidden_sizes=self.config.get_ae_hidden(),
                                          code_dim=self.config.get_ae_code_dim(), noise_amplitude=self.config.get_ae_noise(),
                                          binarization_weight=self.config.get_ae_lambda(), seed=derive_seed(self.seed, AE_INIT_STREAM))
            self.optimizer = self.model.new_optimizer()
            self.replay_pool = ReplayPool(capacity=self.config.get_replay_capacity())
            self.ae_rng = new_generator(derive_seed(self.seed, AE_TRAINING_STREAM))
            downsampler = SimHasher(k=self.config.get_hash_k(), input_dim=self.config.get_ae_code_dim(), seed=hash_seed)
            return LearnedHasher(model=self.model.snapshot(), downsampler=downsampler, input_scale=self.spec.observation_scale)
        else:
            return None

    def build_counter(self) -> VisitCounter | None:
        if self.hasher is None:
            return None
        if self.config.get_counter() == CounterBackend.COUNT_MIN:
            return CountMinSketch(primes=self.config.get_cms_primes())
        return ExactCounter()

    def build_agent(self) -> Agent:
        if self.config.get_agent() == AgentKind.REINFORCE:
            policy = SoftmaxPolicy(feature_dim=self.spec.get_observation_dim(), nb_actions=self.spec.nb_actions,
                                   observation_scale=self.spec.observation_scale)
            return ReinforceAgent(policy=policy, gamma=self.config.get_gamma(), learning_rate=self.config.get_learning_rate())
        initial_value = 0.0
        if self.pipeline.is_enabled():
            # optimistic start: unvisited pairs are worth the most any bonus stream is worth
            initial_value = self.pipeline.bonus_config.return_bound(gamma=self.config.get_gamma(), horizon=self.spec.horizon)
        return QLearningAgent(nb_actions=self.spec.nb_actions, state_key=self.state_key_function(), alpha=self.config.get_alpha(),
                              gamma=self.config.get_gamma(), epsilon=self.config.get_epsilon(), initial_value=initial_value)

    def state_key_function(self):
        if self.config.get_q_state_key() == QStateKey.HASH:
            hasher = self.hasher
            return lambda observation: CountKey.encode(code=hasher.code(observation)).key_bytes
        return lambda observation: np.ascontiguousarray(observation).tobytes()

    def retrain_autoencoder(self) -> float:
        """
        Run ae_steps Adam updates on batches sampled from the replay pool, then hash with a snapshot of the
        updated model.
        :return: A float being the mean training loss of these updates.
        """
        losses = []
        for _ in range(self.config.get_ae_steps()):
            batch = self.replay_pool.sample(nb_samples=self.config.get_ae_batch_size(), rng=self.ae_rng)
            losses.append(self.model.train_step(batch=batch, optimizer=self.optimizer,
                                                learning_rate=self.config.get_ae_learning_rate(), rng=self.ae_rng))
        self.hasher.update_model(model=self.model.snapshot())
        return float(np.mean(losses))

    def run_iteration(self, iteration: int) -> MetricsRow:
        time_measurer = TimeMeasurer()
        time_measurer.start()
        trajectories = self.rollout.collect_batch(batch_size=self.config.get_batch_size(), rng=self.agent_rng)

        if self.model is not None:
            for trajectory in trajectories:
                self.replay_pool.add_many(observations=[observation / self.spec.observation_scale
                                                        for observation in trajectory.get_visited_observations()])
            if iteration % self.config.get_ae_update_every() == 0:
                self.last_ae_loss = self.retrain_autoencoder()
                log.debug("seed %s, iteration %s: autoencoder retrained, loss %s", self.seed, iteration, self.last_ae_loss)

        self.pipeline.apply_bonus(trajectories=trajectories)
        self.agent.update(trajectories=trajectories)

        mean_true_return = float(np.mean([trajectory.get_return_true() for trajectory in trajectories]))
        if self.first_goal_iteration is None and any(trajectory.reached_goal() for trajectory in trajectories):
            self.first_goal_iteration = iteration
            log.info("seed %s reached the goal for the first time at iteration %s", self.seed, iteration)
        return MetricsRow(iteration=iteration, seed=self.seed, mean_true_return=mean_true_return,
                          mean_bonus=Experiment.mean_bonus(trajectories=trajectories),
                          distinct_keys=self.pipeline.get_nb_distinct_keys(), counter_bytes=self.pipeline.get_nb_bytes(),
                          ae_loss=self.last_ae_loss, wall_ms=time_measurer.stop())

    @staticmethod
    def mean_bonus(trajectories: list[Trajectory]) -> float:
        bonuses = [bonus for trajectory in trajectories for bonus in trajectory.bonuses]
        return float(np.mean(bonuses)) if len(bonuses) > 0 else 0.0

    def run(self) -> list[MetricsRow]:
        """
        Run the iterations of this seed that are not done yet (all of them, unless the experiment was restored).
        :return: A list of MetricsRow, one per iteration, in order.
        """
        log.info("seed %s: %s iterations on %s with hasher %s", self.seed, self.config.get_iterations(),
                 self.config.get_env().value, self.config.get_hasher().value)
        for iteration in range(len(self.rows), self.config.get_iterations()):
            self.rows.append(self.run_iteration(iteration=iteration))
        self.final_mean_return = self.rows[-1].mean_true_return
        return list(self.rows)

    def get_iterations_to_first_goal(self) -> float:
        # number of iterations needed to reach the goal once, +inf if it never was
        if self.first_goal_iteration is None:
            return math.inf
        return float(self.first_goal_iteration + 1)

    # CHECKPOINTS

    def get_state(self) -> dict:
        """
        What a resumed run needs besides the counter and the autoencoder weights, which have their own binary formats.
        Environments are deterministic given the episode seed, so the number of episodes stands for their state.
        """
        return {
            "seed": self.seed,
            "rows": list(self.rows),
            "first_goal_iteration": self.first_goal_iteration,
            "nb_episodes": self.rollout.nb_episodes,
            "agent_rng": self.agent_rng.bit_generator.state,
            "agent": self.agent.get_state(),
            "ae_rng": self.ae_rng.bit_generator.state if self.ae_rng is not None else None,
            "optimizer": self.optimizer,
            "replay_pool": self.replay_pool,
            "last_ae_loss": self.last_ae_loss,
        }

    def restore(self, state: dict, counter: VisitCounter | None, model: AutoencoderModel | None) -> None:
        """
        Continue from a checkpoint: run() then only executes the iterations that come after the checkpointed ones.
        :param state: A dict given by get_state().
        :param counter: The counter of the checkpoint, None for the baseline agent.
        :param model: The autoencoder of the checkpoint, None unless hashing is learned.
        """
        if state["seed"] != self.seed:
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "The checkpoint belongs to seed %s, not %s." % (state["seed"], self.seed))
        if len(state["rows"]) > self.config.get_iterations():
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "The checkpoint has %s iterations, more than the %s of the config."
                                   % (len(state["rows"]), self.config.get_iterations()))
        if (counter is None) != (self.counter is None) or (counter is not None and counter.get_backend() != self.counter.get_backend()):
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "The checkpointed counter does not match the counter of the config.")
        if isinstance(counter, CountMinSketch) and counter.primes != self.counter.primes:
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "The checkpointed sketch has primes %s instead of %s." % (counter.primes, self.counter.primes))
        if (model is None) != (self.model is None) or (model is not None and model.layer_sizes != self.model.layer_sizes):
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "The checkpointed autoencoder does not match the autoencoder of the config.")

        if counter is not None:
            self.counter = counter
            self.pipeline = BonusPipeline(hasher=self.hasher, counter=counter, bonus_config=self.pipeline.bonus_config)
        if model is not None:
            self.model = model
            self.hasher.update_model(model=model.snapshot())
            self.optimizer = state["optimizer"]
            self.replay_pool = state["replay_pool"]
            self.ae_rng.bit_generator.state = state["ae_rng"]
            self.last_ae_loss = state["last_ae_loss"]
        self.agent.set_state(state=state["agent"])
        self.agent_rng.bit_generator.state = state["agent_rng"]
        self.rollout.nb_episodes = state["nb_episodes"]
        self.first_goal_iteration = state["first_goal_iteration"]
        self.rows = list(state["rows"])
        log.info("seed %s resumed after %s iterations", self.seed, len(self.rows))
