from config.ExperimentConfig import ExperimentConfig
from envs.ChainMDP import ChainMDP
from envs.Environment import Environment
from envs.SparseGridworld import SparseGridworld
from envs.SparsePointMass import SparsePointMass
from utils.EnvKind import EnvKind


class EnvironmentFactory:
    @staticmethod
    def create(config: ExperimentConfig, seed: int) -> Environment:
        env_kind = config.get_env()
        if env_kind == EnvKind.CHAIN:
            return ChainMDP(nb_states=config.get_chain_states(), seed=seed)
        elif env_kind == EnvKind.GRIDWORLD:
            return SparseGridworld(width=config.get_grid_width(), height=config.get_grid_height(),
                                   observation_kind=config.get_grid_observation(), seed=seed)
        else:
            return SparsePointMass(goal_radius=config.get_goal_radius(), seed=seed)
