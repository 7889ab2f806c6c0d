from collections import deque

import numpy as np

from envs.EnvSpec import EnvSpec
from envs.Environment import Environment
from utils.EnvKind import EnvKind
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.ObservationKind import ObservationKind
from utils.constants import AGENT_INTENSITY, WALL_INTENSITY, MAX_INTENSITY

UP = 0
DOWN = 1
LEFT = 2
RIGHT = 3
MOVES = {UP: (0, 1), DOWN: (0, -1), LEFT: (-1, 0), RIGHT: (1, 0)}


class SparseGridworld(Environment):
    """
    A grid of rooms: the agent starts at cell (0, 0) and gets reward 1, which ends the episode, when it enters
    the goal cell (width - 1, height - 1). By default the grid is split in two rooms by a wall column
    x = width // 2 with a single door at y = height // 2. Moving into a wall or out of the grid leaves the
    agent in place. The horizon is 3 (width + height).

    Observations are either the (x, y) pair or a height x width x 1 occupancy image (agent 255, walls 128, else 0).
    """

    def __init__(self, width: int, height: int, walls: set[tuple[int, int]] | None = None,
                 observation_kind: ObservationKind = ObservationKind.IMAGE, seed: int | None = None):
        if width < 3 or height < 3:
            raise ExplorationError(ErrorKind.INVALID_SIZE, "grid_width, grid_height: the grid must be at least 3x3, got %sx%s." % (width, height))
        if observation_kind == ObservationKind.IMAGE:
            spec = EnvSpec(observation_shape=(height, width, 1), nb_actions=4, horizon=3 * (width + height), observation_scale=MAX_INTENSITY)
        else:
            spec = EnvSpec(observation_shape=(2, ), nb_actions=4, horizon=3 * (width + height), observation_scale=max(width, height) - 1)
        super().__init__(spec=spec, seed=seed)
        self.width = width
        self.height = height
        self.observation_kind = observation_kind
        self.walls = SparseGridworld.two_rooms(width=width, height=height) if walls is None else set(walls)
        self.start = (0, 0)
        self.goal = (width - 1, height - 1)
        if not self.is_reachable(source=self.start, target=self.goal):
            raise ExplorationError(ErrorKind.UNREACHABLE_GOAL, "The goal %s cannot be reached from %s." % (self.goal, self.start))
        self.position = self.start

        self.wall_image = np.zeros((height, width, 1), dtype=np.uint8)
        for x, y in self.walls:
            self.wall_image[y, x, 0] = WALL_INTENSITY

    @staticmethod
    def two_rooms(width: int, height: int) -> set[tuple[int, int]]:
        wall_x = width // 2
        door_y = height // 2
        return {(wall_x, y) for y in range(height) if y != door_y}

    def is_free(self, cell: tuple[int, int]) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height and cell not in self.walls

    def is_reachable(self, source: tuple[int, int], target: tuple[int, int]) -> bool:
        # breadth-first search over the free cells
        if not self.is_free(source) or not self.is_free(target):
            return False
        visited = {source}
        frontier = deque([source])
        while frontier:
            x, y = frontier.popleft()
            if (x, y) == target:
                return True
            for dx, dy in MOVES.values():
                neighbour = (x + dx, y + dy)
                if neighbour not in visited and self.is_free(neighbour):
                    visited.add(neighbour)
                    frontier.append(neighbour)
        return False

    def reset_state(self) -> None:
        self.position = self.start

    def transition(self, action: int) -> tuple[float, bool]:
        dx, dy = MOVES[action]
        candidate = (self.position[0] + dx, self.position[1] + dy)
        if self.is_free(candidate):
            self.position = candidate
        if self.position == self.goal:
            return 1.0, True
        return 0.0, False

    def observe(self) -> np.ndarray:
        if self.observation_kind == ObservationKind.VECTOR:
            return np.array(self.position, dtype=np.float64)
        image = self.wall_image.copy()
        image[self.position[1], self.position[0], 0] = AGENT_INTENSITY
        return image

    @staticmethod
    def decode_image(image: np.ndarray) -> tuple[int, int]:
        # the agent cell is the only one at full intensity
        y, x = np.unravel_index(int(np.argmax(image[:, :, 0])), image.shape[:2])
        return int(x), int(y)

    def get_kind(self) -> EnvKind:
        return EnvKind.GRIDWORLD
