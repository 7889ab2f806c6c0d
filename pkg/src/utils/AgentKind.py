from enum import Enum


class AgentKind(Enum):
    Q_LEARNING = "q_learning"
    REINFORCE = "reinforce"
