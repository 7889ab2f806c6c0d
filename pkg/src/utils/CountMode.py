from enum import Enum


class CountMode(Enum):
    STATE = "state"
    STATE_ACTION = "state_action"
