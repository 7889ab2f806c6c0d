import math

import numpy as np

from envs.EnvSpec import EnvSpec
from envs.Environment import Environment
from utils.EnvKind import EnvKind
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.constants import POINT_MASS_START, POINT_MASS_GOAL, POINT_MASS_THRUST, POINT_MASS_MAX_SPEED, POINT_MASS_HORIZON

THRUST_RIGHT = 0
THRUST_LEFT = 1
THRUST_UP = 2
THRUST_DOWN = 3
THRUSTS = {THRUST_RIGHT: (POINT_MASS_THRUST, 0.0), THRUST_LEFT: (-POINT_MASS_THRUST, 0.0),
           THRUST_UP: (0.0, POINT_MASS_THRUST), THRUST_DOWN: (0.0, -POINT_MASS_THRUST)}


class SparsePointMass(Environment):
    """
    A point mass in the box [-1, 1]^2 steered by four discrete thrusts of 0.05 along one axis.
    The velocity is clamped to [-0.2, 0.2] per axis; hitting a side of the box stops the motion along that axis.
    The episode ends with reward 1 when the mass comes within goal_radius of (0.9, 0.9).
    Observations are (x, y, vx, vy).
    """

    def __init__(self, goal_radius: float, seed: int | None = None):
        if not 0 < goal_radius < 0.5:
            raise ExplorationError(ErrorKind.INVALID_RADIUS, "goal_radius: must lie in (0, 0.5), got %s." % goal_radius)
        super().__init__(spec=EnvSpec(observation_shape=(4, ), nb_actions=4, horizon=POINT_MASS_HORIZON), seed=seed)
        self.goal_radius = goal_radius
        self.state = np.zeros(4)

    def reset_state(self) -> None:
        self.state = np.array([POINT_MASS_START[0], POINT_MASS_START[1], 0.0, 0.0])

    def transition(self, action: int) -> tuple[float, bool]:
        thrust = np.array(THRUSTS[action])
        velocity = np.clip(self.state[2:] + thrust, -POINT_MASS_MAX_SPEED, POINT_MASS_MAX_SPEED)
        position = self.state[:2] + velocity
        at_wall = (position < -1.0) | (position > 1.0)
        position = np.clip(position, -1.0, 1.0)
        velocity[at_wall] = 0.0
        self.state = np.concatenate([position, velocity])
        distance = math.hypot(position[0] - POINT_MASS_GOAL[0], position[1] - POINT_MASS_GOAL[1])
        if distance <= self.goal_radius:
            return 1.0, True
        return 0.0, False

    def observe(self) -> np.ndarray:
        return self.state.copy()

    def get_kind(self) -> EnvKind:
        return EnvKind.POINT_MASS
